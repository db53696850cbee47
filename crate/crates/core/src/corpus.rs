//! The bundled corpus of complexes, maps and groups. Files are compiled in;
//! setting `TWISTKIT_CORPUS` (or passing a directory) reads them from disk instead.

use std::path::PathBuf;

use crate::error::{Error, Result};

macro_rules! entries {
    ($($kind:literal / $name:literal),* $(,)?) => {
        &[$(($kind, $name, include_str!(concat!("../corpus/", $kind, "/", $name, ".json")))),*]
    };
}

static EMBEDDED: &[(&str, &str, &str)] = entries![
    "complexes" / "point",
    "complexes" / "interval",
    "complexes" / "circle3",
    "complexes" / "triangle",
    "complexes" / "circle3_pair",
    "complexes" / "wedge",
    "complexes" / "torus",
    "complexes" / "klein",
    "complexes" / "rp2_min",
    "complexes" / "octahedron",
    "complexes" / "rp2_oct",
    "complexes" / "rp3",
    "maps" / "antipodal",
    "maps" / "covering",
    "groups" / "Z2",
    "groups" / "Z3",
    "groups" / "Z4",
    "groups" / "Z2xZ2",
    "groups" / "S3",
    "groups" / "D4",
    "groups" / "Q8",
];

/// Kind of corpus entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Complex,
    Map,
    Group,
}

impl Kind {
    fn dir(self) -> &'static str {
        match self {
            Kind::Complex => "complexes",
            Kind::Map => "maps",
            Kind::Group => "groups",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    dir: Option<PathBuf>,
}

impl Corpus {
    pub fn embedded() -> Corpus {
        Corpus { dir: None }
    }

    pub fn from_dir(dir: impl Into<PathBuf>) -> Corpus {
        Corpus { dir: Some(dir.into()) }
    }

    /// The directory named by `TWISTKIT_CORPUS`, else the embedded copy.
    pub fn from_env() -> Corpus {
        match std::env::var_os("TWISTKIT_CORPUS") {
            Some(d) if !d.is_empty() => Corpus::from_dir(d),
            _ => Corpus::embedded(),
        }
    }

    pub fn text(&self, kind: Kind, name: &str) -> Result<String> {
        match &self.dir {
            None => EMBEDDED
                .iter()
                .find(|(k, n, _)| *k == kind.dir() && *n == name)
                .map(|(_, _, t)| t.to_string())
                .ok_or_else(|| Error::UnknownCorpusEntry(name.to_string())),
            Some(dir) => {
                let path = dir.join(kind.dir()).join(format!("{name}.json"));
                std::fs::read_to_string(&path).map_err(|_| Error::UnknownCorpusEntry(name.to_string()))
            }
        }
    }

    /// Entry names of one kind, sorted.
    pub fn names(&self, kind: Kind) -> Result<Vec<String>> {
        let mut out: Vec<String> = match &self.dir {
            None => EMBEDDED.iter().filter(|(k, _, _)| *k == kind.dir()).map(|(_, n, _)| n.to_string()).collect(),
            Some(dir) => {
                let mut v = Vec::new();
                let read = std::fs::read_dir(dir.join(kind.dir()));
                for entry in read.into_iter().flatten().flatten() {
                    let p = entry.path();
                    if p.extension().is_some_and(|e| e == "json") {
                        if let Some(stem) = p.file_stem() {
                            v.push(stem.to_string_lossy().into_owned());
                        }
                    }
                }
                v
            }
        };
        out.sort();
        Ok(out)
    }
}
