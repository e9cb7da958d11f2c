//! Append-only JSONL cache of homomorphism counts keyed by the canonical
//! certificates of both graphs.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use homlab::ExactCount;
use serde::{Deserialize, Serialize};

/// Bumped whenever counting semantics change; records with another engine
/// tag are ignored.
pub const ENGINE: &str = "homlab-1";

const FILE_NAME: &str = "hom-cache.jsonl";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub g_certificate: String,
    pub h_certificate: String,
    pub count: String,
    pub engine: String,
}

pub struct Cache {
    path: PathBuf,
    entries: HashMap<(String, String), ExactCount>,
}

impl Cache {
    /// Loads (or creates) the cache in `dir`. Malformed lines, such as a
    /// torn final write, are skipped; duplicate keys keep the first value.
    pub fn open(dir: &Path) -> io::Result<Cache> {
        fs::create_dir_all(dir)?;
        let path = dir.join(FILE_NAME);
        let mut entries = HashMap::new();
        if path.exists() {
            let torn = fs::read(&path)?.last().is_some_and(|&b| b != b'\n');
            if torn {
                OpenOptions::new()
                    .append(true)
                    .open(&path)?
                    .write_all(b"\n")?;
            }
            for line in BufReader::new(File::open(&path)?).lines() {
                let line = line?;
                let Ok(rec) = serde_json::from_str::<CacheRecord>(&line) else {
                    continue;
                };
                if rec.engine != ENGINE {
                    continue;
                }
                let Ok(count) = rec.count.parse::<ExactCount>() else {
                    continue;
                };
                entries
                    .entry((rec.g_certificate, rec.h_certificate))
                    .or_insert(count);
            }
        }
        Ok(Cache { path, entries })
    }

    pub fn get(&self, g_cert: &str, h_cert: &str) -> Option<&ExactCount> {
        self.entries.get(&(g_cert.to_string(), h_cert.to_string()))
    }

    #[cfg(test)]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Appends new records, one `write_all` per line.
    pub fn append(&mut self, new: Vec<(String, String, ExactCount)>) -> io::Result<()> {
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        for (g, h, count) in new {
            if self.entries.contains_key(&(g.clone(), h.clone())) {
                continue;
            }
            let rec = CacheRecord {
                g_certificate: g.clone(),
                h_certificate: h.clone(),
                count: count.to_string(),
                engine: ENGINE.to_string(),
            };
            let mut line = serde_json::to_string(&rec).map_err(io::Error::other)?;
            line.push('\n');
            file.write_all(line.as_bytes())?;
            self.entries.insert((g, h), count);
        }
        file.flush()
    }
}
