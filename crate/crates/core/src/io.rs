//! JSON file formats and a loader that resolves references either to files
//! or to corpus entries.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coefficients::{CoefficientSystem, TwistClass};
use crate::complex::{cylinder, polarize, product, ComplexData, Cylinder, DeltaComplex, EdgePath, SimplexImage, SimplicialMap, Step, Subcomplex};
use crate::corpus::{Corpus, Kind};
use crate::error::{Error, Result};
use crate::segal::{FiniteGroup, GroupData, OrientationChar};
use crate::sign::Sign;
use crate::twisted::fundamental_twist;

/// A complex given by corpus name or file path, built as a cylinder or
/// product, or written inline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexRef {
    Name(String),
    Cylinder { cylinder: Box<ComplexRef> },
    Product { product: (Box<ComplexRef>, Box<ComplexRef>) },
    Inline(ComplexData),
}

/// `{"complex": ref, "edge_signs": [±1, …]}`; `complex` may be omitted when
/// the complex is given separately.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SystemData {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex: Option<ComplexRef>,
    pub edge_signs: Vec<Sign>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MorphismData {
    pub vertex_signs: Vec<Sign>,
}

/// `{"polarization_bases": [...], "nonforest_bits": {"edge": 1}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TwistData {
    pub polarization_bases: Vec<usize>,
    pub nonforest_bits: BTreeMap<String, u8>,
}

impl TwistData {
    pub fn from_class(omega: &TwistClass) -> TwistData {
        TwistData {
            polarization_bases: omega.polarization().bases().to_vec(),
            nonforest_bits: omega.support().into_iter().map(|e| (e.to_string(), 1)).collect(),
        }
    }
}

/// A simplicial map by vertex assignment, by full image tables, or by the
/// images of generating simplices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapData {
    pub source: ComplexRef,
    pub target: ComplexRef,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_map: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub images: Option<Vec<Vec<SimplexImage>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<GeneratorImage>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorImage {
    pub dim: usize,
    pub id: usize,
    pub image: SimplexImage,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharData {
    pub signs: Vec<Sign>,
}

/// The subcomplex generated by `[[dim, id], …]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubcomplexData {
    pub simplices: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AnchorData {
    pub start: usize,
    pub steps: Vec<Step>,
}

/// A loaded map, with the cylinder when its source was declared as one.
#[derive(Clone, Debug)]
pub struct LoadedMap {
    pub map: SimplicialMap,
    pub cylinder: Option<Arc<Cylinder>>,
}

fn looks_like_path(s: &str) -> bool {
    s.contains('/') || s.contains('\\') || s.ends_with(".json")
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn parse<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

#[derive(Clone, Debug, Default)]
pub struct Loader {
    corpus: Corpus,
}

impl Loader {
    pub fn new(corpus: Corpus) -> Loader {
        Loader { corpus }
    }

    pub fn corpus(&self) -> &Corpus {
        &self.corpus
    }

    fn path(&self, s: &str, base: Option<&Path>) -> PathBuf {
        let p = PathBuf::from(s);
        match base {
            Some(b) if p.is_relative() && !p.exists() => b.join(p),
            _ => p,
        }
    }

    pub fn complex(&self, r: &ComplexRef, base: Option<&Path>) -> Result<Arc<DeltaComplex>> {
        Ok(match r {
            ComplexRef::Name(s) if looks_like_path(s) => {
                let path = self.path(s, base);
                Arc::new(DeltaComplex::from_data(&read_json(&path)?)?)
            }
            ComplexRef::Name(s) => {
                let text = self.corpus.text(Kind::Complex, s)?;
                Arc::new(DeltaComplex::from_data(&parse(&text, s)?)?)
            }
            ComplexRef::Cylinder { cylinder: inner } => cylinder(&self.complex(inner, base)?)?.complex().clone(),
            ComplexRef::Product { product: (a, b) } => product(&self.complex(a, base)?, &self.complex(b, base)?).complex().clone(),
            ComplexRef::Inline(data) => Arc::new(DeltaComplex::from_data(data)?),
        })
    }

    pub fn complex_named(&self, s: &str) -> Result<Arc<DeltaComplex>> {
        self.complex(&ComplexRef::Name(s.to_string()), None)
    }

    pub fn map(&self, s: &str) -> Result<LoadedMap> {
        let (data, base): (MapData, Option<PathBuf>) = if looks_like_path(s) {
            let path = PathBuf::from(s);
            (read_json(&path)?, path.parent().map(Path::to_path_buf))
        } else {
            (parse(&self.corpus.text(Kind::Map, s)?, s)?, None)
        };
        self.map_from_data(&data, base.as_deref())
    }

    pub fn map_from_data(&self, data: &MapData, base: Option<&Path>) -> Result<LoadedMap> {
        let (source, cyl) = match &data.source {
            ComplexRef::Cylinder { cylinder: inner } => {
                let c = Arc::new(cylinder(&self.complex(inner, base)?)?);
                (c.complex().clone(), Some(c))
            }
            other => (self.complex(other, base)?, None),
        };
        let target = self.complex(&data.target, base)?;
        let map = match (&data.vertex_map, &data.images, &data.generators) {
            (Some(v), None, None) => SimplicialMap::from_vertex_map(source, target, v)?,
            (None, Some(images), None) => SimplicialMap::new(source, target, images.clone())?,
            (None, None, Some(gens)) => {
                let given: Vec<((usize, usize), SimplexImage)> = gens.iter().map(|g| ((g.dim, g.id), g.image.clone())).collect();
                SimplicialMap::generated(source, target, &given)?
            }
            _ => return Err(Error::InvalidInput("a map needs exactly one of vertex_map, images, generators".into())),
        };
        Ok(LoadedMap { map, cylinder: cyl })
    }

    pub fn group(&self, s: &str) -> Result<Arc<FiniteGroup>> {
        let data: GroupData = if looks_like_path(s) { read_json(Path::new(s))? } else { parse(&self.corpus.text(Kind::Group, s)?, s)? };
        Ok(Arc::new(FiniteGroup::from_data(&data)?))
    }

    /// `trivial`, `w1` (the fundamental twist of the top dimension), or a system file.
    pub fn system(&self, x: &Arc<DeltaComplex>, s: &str) -> Result<CoefficientSystem> {
        match s {
            "trivial" => Ok(CoefficientSystem::trivial(x.clone())),
            "w1" => Ok(fundamental_twist(x, x.dim())?
                .ok_or_else(|| Error::NoFundamentalClass(format!("no twist has H_{} ≅ Z", x.dim())))?
                .system),
            path => {
                let path = Path::new(path);
                let data: SystemData = read_json(path)?;
                if let Some(r) = &data.complex {
                    let declared = self.complex(r, path.parent())?;
                    if *declared != **x {
                        return Err(Error::InvalidInput("system file names a different complex".into()));
                    }
                }
                CoefficientSystem::new(x.clone(), data.edge_signs)
            }
        }
    }

    pub fn morphism_signs(&self, path: &str) -> Result<Vec<Sign>> {
        Ok(read_json::<MorphismData>(Path::new(path))?.vertex_signs)
    }

    pub fn twist(&self, x: &Arc<DeltaComplex>, path: &str) -> Result<TwistClass> {
        let data: TwistData = read_json(Path::new(path))?;
        twist_from_data(x, &data)
    }

    /// `trivial`, `sign` (the only nontrivial character), an index into the
    /// enumeration of all characters, or a character file.
    pub fn character(&self, g: &FiniteGroup, s: &str) -> Result<OrientationChar> {
        let all = || OrientationChar::all(g);
        match s {
            "trivial" => Ok(OrientationChar::trivial(g)),
            "sign" => {
                let chars = all();
                match chars.len() {
                    2 => Ok(chars[1].clone()),
                    n => Err(Error::InvalidInput(format!("`sign` is ambiguous: the group has {} nontrivial characters", n - 1))),
                }
            }
            _ if s.parse::<usize>().is_ok() => {
                let i: usize = s.parse().expect("checked");
                all().get(i).cloned().ok_or_else(|| Error::InvalidInput(format!("character index {i} out of range")))
            }
            path => OrientationChar::new(g, read_json::<CharData>(Path::new(path))?.signs),
        }
    }

    pub fn subcomplex(&self, x: &Arc<DeltaComplex>, path: &str) -> Result<Subcomplex> {
        let data: SubcomplexData = read_json(Path::new(path))?;
        Subcomplex::generated_by(x.clone(), &data.simplices)
    }

    pub fn anchors(&self, x: &DeltaComplex, path: &str) -> Result<Vec<EdgePath>> {
        let data: Vec<AnchorData> = read_json(Path::new(path))?;
        data.into_iter().map(|a| EdgePath::new(x, a.start, a.steps)).collect()
    }
}

pub fn twist_from_data(x: &Arc<DeltaComplex>, data: &TwistData) -> Result<TwistClass> {
    let p = polarize(x, Some(&data.polarization_bases))?;
    let mut bits = vec![false; x.edge_count()];
    for (k, &v) in &data.nonforest_bits {
        let e: usize = k.parse().map_err(|_| Error::Parse(format!("edge id `{k}`")))?;
        if e >= bits.len() || v > 1 {
            return Err(Error::InvalidInput(format!("bad twist entry {k}: {v}")));
        }
        bits[e] = v == 1;
    }
    TwistClass::new(x.clone(), p, bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_complexes_load_and_round_trip() {
        let loader = Loader::default();
        for name in loader.corpus().names(Kind::Complex).unwrap() {
            let x = loader.complex_named(&name).unwrap();
            let text = serde_json::to_string(&x.to_data()).unwrap();
            let back = DeltaComplex::from_data(&serde_json::from_str(&text).unwrap()).unwrap();
            assert_eq!(*x, back, "{name}");
        }
    }

    #[test]
    fn corpus_shapes() {
        let loader = Loader::default();
        let counts = |n: &str| loader.complex_named(n).unwrap().counts().to_vec();
        assert_eq!(counts("torus"), vec![1, 3, 2]);
        assert_eq!(counts("klein"), vec![1, 3, 2]);
        assert_eq!(counts("octahedron"), vec![6, 12, 8]);
        assert_eq!(counts("rp2_oct"), vec![3, 6, 4]);
        assert_eq!(counts("rp3"), vec![4, 12, 16, 8]);
        assert_eq!(loader.complex_named("rp3").unwrap().euler_characteristic(), 0);
    }

    #[test]
    fn corpus_maps_and_groups() {
        let loader = Loader::default();
        let a = loader.map("antipodal").unwrap().map;
        assert!(a.then(&a).unwrap().is_identity());
        let p = loader.map("covering").unwrap().map;
        assert_eq!(p.vertex_map(), vec![0, 0, 1, 1, 2, 2]);
        for name in loader.corpus().names(Kind::Group).unwrap() {
            let g = loader.group(&name).unwrap();
            let data = g.to_data();
            assert_eq!(FiniteGroup::from_data(&data).unwrap(), *g);
        }
        let s3 = loader.group("S3").unwrap();
        assert!(loader.character(&s3, "sign").is_ok());
        assert!(loader.character(&loader.group("D4").unwrap(), "sign").is_err());
        assert_eq!(OrientationChar::all(&loader.group("Q8").unwrap()).len(), 4);
    }

    #[test]
    fn cylinder_map_source() {
        let loader = Loader::default();
        let data: MapData = serde_json::from_str(
            r#"{"source": {"cylinder": "point"}, "target": "rp2_min",
                "generators": [{"dim": 1, "id": 0, "image": {"dim": 1, "simplex": 2, "positions": [0, 1]}}]}"#,
        )
        .unwrap();
        let m = loader.map_from_data(&data, None);
        // the vertical edge of point × I is not edge 0 unless the ordering puts it first
        let m = m.unwrap();
        assert!(m.cylinder.is_some());
        assert_eq!(m.map.vertex_map(), vec![1, 1]);
    }

    #[test]
    fn twist_file_round_trip() {
        let loader = Loader::default();
        let x = loader.complex_named("klein").unwrap();
        let p = polarize(&x, None).unwrap();
        for w in crate::coefficients::twist_classes(&x, &p) {
            assert_eq!(twist_from_data(&x, &TwistData::from_class(&w)).unwrap(), w);
        }
    }
}
