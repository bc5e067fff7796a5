//! JSON file formats: complexes, product specifications, and metadata.
//!
//! Writers emit a canonical form — vertices and maximal faces sorted — so a
//! read→write→read round trip is byte-stable. Readers accept any ordering
//! and re-canonicalise; malformed input is reported with its JSON pointer.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classify::SpaceMeta;
use crate::polyjoin::{ComplexPair, PolyJoinSpec};
use crate::simplicial::{Face, SimplicialComplex, VertexId};
use crate::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub vertices: Vec<String>,
    pub maximal_faces: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    pub big: ComplexFile,
    pub small: ComplexFile,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub base: ComplexFile,
    pub pairs: Vec<PairFile>,
}

/// Either of the two accepted input files, distinguished by shape.
pub enum InputFile {
    Complex(SimplicialComplex),
    Spec(PolyJoinSpec),
}

fn from_json<'de, T: Deserialize<'de>>(text: &'de str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| Error::Schema {
        pointer: format!("/{}", e.path().to_string().replace('.', "/")),
        message: e.inner().to_string(),
    })
}

impl ComplexFile {
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let vertices = self
            .vertices
            .iter()
            .map(|s| VertexId::new(s.clone()))
            .collect::<Result<Vec<_>>>()?;
        let generators = self
            .maximal_faces
            .iter()
            .map(|f| {
                Ok(Face::new(
                    f.iter()
                        .map(|s| VertexId::new(s.clone()))
                        .collect::<Result<_>>()?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::build(vertices, generators)
    }

    pub fn from_complex(k: &SimplicialComplex) -> ComplexFile {
        ComplexFile {
            vertices: k.vertices().iter().map(|v| v.as_str().to_owned()).collect(),
            maximal_faces: k
                .maximal_faces()
                .iter()
                .map(|f| f.vertices().iter().map(|v| v.as_str().to_owned()).collect())
                .collect(),
        }
    }
}

impl SpecFile {
    pub fn to_spec(&self) -> Result<PolyJoinSpec> {
        let base = self.base.to_complex()?;
        let pairs = self
            .pairs
            .iter()
            .map(|p| ComplexPair::new(p.big.to_complex()?, p.small.to_complex()?))
            .collect::<Result<Vec<_>>>()?;
        PolyJoinSpec::new(base, pairs)
    }

    pub fn from_spec(spec: &PolyJoinSpec) -> SpecFile {
        SpecFile {
            base: ComplexFile::from_complex(spec.base()),
            pairs: spec
                .pairs()
                .iter()
                .map(|p| PairFile {
                    big: ComplexFile::from_complex(p.big()),
                    small: ComplexFile::from_complex(p.small()),
                })
                .collect(),
        }
    }
}

pub fn read_complex(text: &str) -> Result<SimplicialComplex> {
    from_json::<ComplexFile>(text)?.to_complex()
}

pub fn write_complex(k: &SimplicialComplex) -> String {
    let mut out = serde_json::to_string_pretty(&ComplexFile::from_complex(k))
        .expect("complex serialization cannot fail");
    out.push('\n');
    out
}

pub fn read_spec(text: &str) -> Result<PolyJoinSpec> {
    from_json::<SpecFile>(text)?.to_spec()
}

pub fn write_spec(spec: &PolyJoinSpec) -> String {
    let mut out = serde_json::to_string_pretty(&SpecFile::from_spec(spec))
        .expect("spec serialization cannot fail");
    out.push('\n');
    out
}

/// Reads either file shape: a `base` key means a product specification.
pub fn read_input(text: &str) -> Result<InputFile> {
    let probe: serde_json::Value = serde_json::from_str(text)?;
    if probe.get("base").is_some() {
        Ok(InputFile::Spec(read_spec(text)?))
    } else {
        Ok(InputFile::Complex(read_complex(text)?))
    }
}

/// Metadata file: one space description per atom, keyed by name. Each
/// entry's `name` field is filled in from its key when absent.
pub fn read_metas(text: &str) -> Result<BTreeMap<String, SpaceMeta>> {
    let mut metas: BTreeMap<String, SpaceMeta> = from_json(text)?;
    for (key, meta) in metas.iter_mut() {
        if meta.name.is_empty() {
            meta.name = key.clone();
        }
    }
    Ok(metas)
}

/// One metadata entry per vertex label, falling back to a `default` entry.
pub fn metas_for_vertices(
    metas: &BTreeMap<String, SpaceMeta>,
    vertices: &[VertexId],
    role_prefix: &str,
) -> Result<Vec<SpaceMeta>> {
    vertices
        .iter()
        .map(|v| {
            let keyed = format!("{role_prefix}{}", v.as_str());
            metas
                .get(&keyed)
                .or_else(|| metas.get(&format!("{role_prefix}default")))
                .cloned()
                .ok_or_else(|| Error::MissingHypothesis(format!(
                    "no metadata entry `{keyed}` and no `{role_prefix}default` fallback"
                )))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_round_trip_is_byte_stable() {
        let text = r#"{"maximal_faces":[["2","1"],["3"]],"vertices":["3","1","2","10"]}"#;
        let k = read_complex(text).unwrap();
        let written = write_complex(&k);
        let again = read_complex(&written).unwrap();
        assert_eq!(k, again);
        assert_eq!(written, write_complex(&again));
        // Numeric-aware vertex order puts "10" after "3".
        assert_eq!(
            k.vertices().iter().map(|v| v.as_str()).collect::<Vec<_>>(),
            vec!["1", "2", "3", "10"]
        );
    }

    #[test]
    fn spec_round_trip() {
        let base = SimplicialComplex::simplex_boundary(&["1", "2"]).unwrap();
        let big = SimplicialComplex::simplex(&["a", "b"]).unwrap();
        let small = SimplicialComplex::empty(&["a", "b"]).unwrap();
        let pairs = vec![
            ComplexPair::new(big.clone(), small.clone()).unwrap(),
            ComplexPair::new(big, small).unwrap(),
        ];
        let spec = PolyJoinSpec::new(base, pairs).unwrap();
        let text = write_spec(&spec);
        let again = read_spec(&text).unwrap();
        assert_eq!(write_spec(&again), text);
        assert_eq!(again.build().unwrap(), spec.build().unwrap());
    }

    #[test]
    fn schema_errors_carry_pointers() {
        let bad = r#"{"vertices": ["1"], "maximal_faces": [[1]]}"#;
        match read_complex(bad) {
            Err(Error::Schema { pointer, .. }) => {
                assert!(pointer.contains("maximal_faces"), "{pointer}")
            }
            other => panic!("expected schema error, got {other:?}"),
        }
        assert!(matches!(
            read_complex(r#"{"vertices": [], "extra": 1}"#),
            Err(Error::Schema { .. })
        ));
    }

    #[test]
    fn input_shape_detection() {
        let complex = r#"{"vertices":["1"],"maximal_faces":[["1"]]}"#;
        assert!(matches!(
            read_input(complex).unwrap(),
            InputFile::Complex(_)
        ));
        let spec = r#"{"base":{"vertices":["1"],"maximal_faces":[["1"]]},
                       "pairs":[{"big":{"vertices":["a"],"maximal_faces":[["a"]]},
                                 "small":{"vertices":["a"],"maximal_faces":[["a"]]}}]}"#;
        assert!(matches!(read_input(spec).unwrap(), InputFile::Spec(_)));
    }

    #[test]
    fn metas_fill_names_and_resolve_defaults() {
        let text = r#"{
            "default": {"finite_cw": true, "rationally_nontrivial": true,
                        "rationally_sphere": false, "torsion_free_homology": true,
                        "susp_in_w": true, "rationally_elliptic": true,
                        "loop_rationally_sphere": false}
        }"#;
        let metas = read_metas(text).unwrap();
        assert_eq!(metas["default"].name, "default");
        let verts = vec![VertexId::new("1").unwrap(), VertexId::new("2").unwrap()];
        let resolved = metas_for_vertices(&metas, &verts, "").unwrap();
        assert_eq!(resolved.len(), 2);
        assert!(metas_for_vertices(&metas, &verts, "ambient:").is_err());
    }
}
