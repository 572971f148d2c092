//! On-disk store of decompositions keyed by `(ν, μ, d)`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use plethysm_core::{Partition, SchurVector};

use crate::error::{Error, Result};
use crate::format::{schur_from_json, schur_to_json};

/// Environment variable naming the default cache directory.
pub const CACHE_ENV: &str = "PLETHYSM_CACHE_DIR";

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

fn key_part(p: &Partition) -> String {
    if p.is_empty() {
        "0".into()
    } else {
        p.parts().iter().map(ToString::to_string).collect::<Vec<_>>().join(".")
    }
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// e.g. `decompose_nu-3_mu-2.1_d-9.json`.
    pub fn file_name(nu: &Partition, mu: &Partition, d: usize) -> String {
        format!("decompose_nu-{}_mu-{}_d-{d}.json", key_part(nu), key_part(mu))
    }

    pub fn path(&self, nu: &Partition, mu: &Partition, d: usize) -> PathBuf {
        self.dir.join(Self::file_name(nu, mu, d))
    }

    fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
        move |source| Error::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    /// Raw bytes of a stored entry, if any.
    pub fn load_raw(&self, nu: &Partition, mu: &Partition, d: usize) -> Result<Option<String>> {
        let path = self.path(nu, mu, d);
        match fs::read_to_string(&path) {
            Ok(s) => Ok(Some(s)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(Self::io_err(&path)(e)),
        }
    }

    pub fn load(&self, nu: &Partition, mu: &Partition, d: usize) -> Result<Option<SchurVector>> {
        self.load_raw(nu, mu, d)?.map(|s| schur_from_json(s.trim_end())).transpose()
    }

    /// Writes through a temporary file and renames, so readers never see a
    /// partial entry.
    pub fn store(&self, nu: &Partition, mu: &Partition, d: usize, v: &SchurVector) -> Result<()> {
        fs::create_dir_all(&self.dir).map_err(Self::io_err(&self.dir))?;
        let path = self.path(nu, mu, d);
        let tmp = self.dir.join(format!(".{}.{}.tmp", Self::file_name(nu, mu, d), std::process::id()));
        let mut f = fs::File::create(&tmp).map_err(Self::io_err(&tmp))?;
        writeln!(f, "{}", schur_to_json(v)).map_err(Self::io_err(&tmp))?;
        f.sync_all().map_err(Self::io_err(&tmp))?;
        fs::rename(&tmp, &path).map_err(Self::io_err(&path))?;
        Ok(())
    }

    /// Returns the stored decomposition or computes and stores it.
    pub fn get_or_compute(
        &self,
        nu: &Partition,
        mu: &Partition,
        d: usize,
        compute: impl FnOnce() -> Result<SchurVector>,
    ) -> Result<SchurVector> {
        if let Some(v) = self.load(nu, mu, d)? {
            return Ok(v);
        }
        let v = compute()?;
        self.store(nu, mu, d, &v)?;
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_names() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(Cache::file_name(&p("3"), &p("2,1"), 9), "decompose_nu-3_mu-2.1_d-9.json");
        assert_eq!(Cache::file_name(&p("1^2"), &Partition::empty(), 0), "decompose_nu-1.1_mu-0_d-0.json");
    }
}
