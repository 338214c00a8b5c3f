//! On-disk cache of classification reports, one JSON file per
//! (type, orientation, tool version).

use std::fs;
use std::path::PathBuf;

use anyhow::{Context, Result};
use ctl_core::classify::{ClassificationReport, TOOL_VERSION};
use ctl_core::SCHEMA_VERSION;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Serialize, Deserialize)]
struct Header {
    schema_version: u32,
    tool_version: String,
    dynkin: String,
    orientation: String,
    orientation_sha256: String,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    header: Header,
    report: ClassificationReport,
}

pub struct Cache {
    dir: PathBuf,
}

fn digest(s: &str) -> String {
    Sha256::digest(s.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl Cache {
    /// `CTL_CACHE_DIR`, else `$XDG_CACHE_HOME/ctl`, else `~/.cache/ctl`.
    pub fn from_env() -> Self {
        let dir = std::env::var_os("CTL_CACHE_DIR")
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("XDG_CACHE_HOME").map(|d| PathBuf::from(d).join("ctl")))
            .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("ctl")))
            .unwrap_or_else(|| std::env::temp_dir().join("ctl-cache"));
        Cache { dir }
    }

    #[cfg(test)]
    pub fn at(dir: &std::path::Path) -> Self {
        Cache { dir: dir.to_path_buf() }
    }

    fn header(dynkin: &str, orientation: &str) -> Header {
        Header {
            schema_version: SCHEMA_VERSION,
            tool_version: TOOL_VERSION.to_string(),
            dynkin: dynkin.to_string(),
            orientation: orientation.to_string(),
            orientation_sha256: digest(orientation),
        }
    }

    pub fn path(&self, dynkin: &str, orientation: &str) -> PathBuf {
        let h = digest(orientation);
        self.dir
            .join(format!("classify-{dynkin}-{}-v{TOOL_VERSION}.json", &h[..16]))
    }

    /// A cached report whose header matches, if any. Unreadable or stale
    /// files are treated as misses.
    pub fn load(&self, dynkin: &str, orientation: &str) -> Option<ClassificationReport> {
        let text = fs::read_to_string(self.path(dynkin, orientation)).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        let want = Self::header(dynkin, orientation);
        let h = &entry.header;
        let fresh = h.schema_version == want.schema_version
            && h.tool_version == want.tool_version
            && h.dynkin == want.dynkin
            && h.orientation == want.orientation
            && h.orientation_sha256 == want.orientation_sha256;
        fresh.then_some(entry.report)
    }

    pub fn store(&self, report: &ClassificationReport) -> Result<()> {
        fs::create_dir_all(&self.dir)
            .with_context(|| format!("creating cache directory {}", self.dir.display()))?;
        let entry = Entry {
            header: Self::header(&report.dynkin, &report.orientation),
            report: report.clone(),
        };
        let path = self.path(&report.dynkin, &report.orientation);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_string_pretty(&entry)?)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}
