//! Content-addressed JSON cache for per-double invariants.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use tqd_core::cohomology::Cochain3;

pub const CODE_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), "-", env!("CARGO_PKG_VERSION"), "-cache1");

#[derive(Serialize)]
struct KeyMaterial<'a> {
    table: Vec<Vec<usize>>,
    modulus: u32,
    exponents: &'a [u32],
    kind: &'a str,
    version: &'a str,
}

#[derive(Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub label: String,
    pub kind: String,
    pub version: String,
    pub value: serde_json::Value,
    pub hash: String,
}

fn sha(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Key over the group table, cocycle exponents, computation kind and code version.
pub fn key(w: &Cochain3, kind: &str) -> String {
    let g = w.group();
    let material = KeyMaterial {
        table: g.elements().map(|a| g.elements().map(|b| g.mul(a, b)).collect()).collect(),
        modulus: w.modulus(),
        exponents: w.exponents(),
        kind,
        version: CODE_VERSION,
    };
    sha(serde_json::to_string(&material).expect("key material serializes").as_bytes())
}

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<&Path>) -> Result<Self> {
        if let Some(d) = dir {
            fs::create_dir_all(d).with_context(|| format!("creating cache directory {}", d.display()))?;
        }
        Ok(Cache { dir: dir.map(Path::to_path_buf) })
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    /// A cached value, provided the version and content hash check out.
    pub fn get<T: for<'de> Deserialize<'de>>(&self, key: &str) -> Option<T> {
        let text = fs::read_to_string(self.path(key)?).ok()?;
        let e: CacheEntry = serde_json::from_str(&text).ok()?;
        if e.key != key || e.version != CODE_VERSION || e.hash != sha(e.value.to_string().as_bytes()) {
            return None;
        }
        serde_json::from_value(e.value).ok()
    }

    pub fn put<T: Serialize>(&self, key: &str, label: &str, kind: &str, value: &T) -> Result<()> {
        let Some(path) = self.path(key) else { return Ok(()) };
        let value = serde_json::to_value(value)?;
        let e = CacheEntry {
            key: key.to_string(),
            label: label.to_string(),
            kind: kind.to_string(),
            version: CODE_VERSION.to_string(),
            hash: sha(value.to_string().as_bytes()),
            value,
        };
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_string_pretty(&e)?)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tqd_core::cohomology::h3_group;
    use tqd_core::groups::quaternion;

    #[test]
    fn tampered_entries_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(Some(dir.path())).unwrap();
        let w = h3_group(&quaternion()).unwrap().element(&[1]);
        let k = key(&w, "fingerprint");
        cache.put(&k, "Q8:g", "fingerprint", &vec![1, 2, 3]).unwrap();
        assert_eq!(cache.get::<Vec<i32>>(&k), Some(vec![1, 2, 3]));
        let p = dir.path().join(format!("{k}.json"));
        let mut e: CacheEntry = serde_json::from_str(&fs::read_to_string(&p).unwrap()).unwrap();
        e.value = serde_json::json!([1, 2, 4]);
        fs::write(&p, serde_json::to_string(&e).unwrap()).unwrap();
        assert_eq!(cache.get::<Vec<i32>>(&k), None);
    }

    #[test]
    fn keys_separate_kinds_and_classes() {
        let h = h3_group(&quaternion()).unwrap();
        assert_ne!(key(&h.element(&[1]), "a"), key(&h.element(&[1]), "b"));
        assert_ne!(key(&h.element(&[1]), "a"), key(&h.element(&[3]), "a"));
    }
}
