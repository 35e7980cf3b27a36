//! File formats shared by the library and the CLI: algebras, posets,
//! representations, morphisms, submodule generators and reports. All JSON,
//! with ordered maps so that identical inputs serialize byte-identically.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::determined::DeterminationReport;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};
use crate::poset::FinitePoset;
use crate::quiver::{BoundQuiverAlgebra, Quiver};
use crate::rep::{RepMorphism, Representation};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrowFile {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub p: u64,
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowFile>,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
}

impl AlgebraFile {
    pub fn build(&self) -> Result<Arc<BoundQuiverAlgebra>> {
        let field = PrimeField::new(self.p)?;
        let quiver = Quiver::new(
            self.vertices.clone(),
            self.arrows
                .iter()
                .map(|a| (a.name.clone(), a.from.clone(), a.to.clone()))
                .collect(),
        )?;
        BoundQuiverAlgebra::new(field, quiver, self.relations.clone())
    }
}

/// `{"dims":{"1":1,"2":1},"maps":{"a":[[1]]}}`; matrices are row-major
/// residues mod p, rows indexed by the target vertex space. Missing
/// vertices have dimension zero and missing arrow maps are zero.
#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct RepresentationFile {
    #[serde(default)]
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Vec<u64>>>,
}

fn matrix_from_rows(field: PrimeField, rows: usize, cols: usize, data: &[Vec<u64>]) -> Result<Matrix> {
    if data.is_empty() {
        return Ok(Matrix::zeros(field, rows, cols));
    }
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!(
            "matrix literal must be {rows}x{cols}"
        )));
    }
    Ok(Matrix::from_rows(field, data))
}

fn matrix_to_rows(m: &Matrix) -> Vec<Vec<u64>> {
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| m.at(r, c)).collect()).collect()
}

impl RepresentationFile {
    pub fn build(&self, alg: &Arc<BoundQuiverAlgebra>) -> Result<Representation> {
        let q = alg.quiver();
        let mut dims = vec![0usize; q.vertex_count()];
        for (label, &d) in &self.dims {
            let v = q
                .vertex_index(label)
                .ok_or_else(|| Error::InvalidRepresentation(format!("unknown vertex {label:?}")))?;
            dims[v] = d;
        }
        let mut maps = Vec::with_capacity(q.arrow_count());
        for a in 0..q.arrow_count() {
            let rows = dims[q.arrow_target(a)];
            let cols = dims[q.arrow_source(a)];
            let m = match self.maps.get(q.arrow_name(a)) {
                Some(data) => matrix_from_rows(alg.field(), rows, cols, data)?,
                None => Matrix::zeros(alg.field(), rows, cols),
            };
            maps.push(m);
        }
        for name in self.maps.keys() {
            if q.arrow_index(name).is_none() {
                return Err(Error::InvalidRepresentation(format!("unknown arrow {name:?}")));
            }
        }
        Representation::new(Arc::clone(alg), dims, maps)
    }

    pub fn from_representation(rep: &Representation) -> RepresentationFile {
        let q = rep.algebra().quiver();
        let mut dims = BTreeMap::new();
        for v in 0..q.vertex_count() {
            if rep.dims()[v] > 0 {
                dims.insert(q.vertex_label(v).to_string(), rep.dims()[v]);
            }
        }
        let mut maps = BTreeMap::new();
        for a in 0..q.arrow_count() {
            let m = rep.map(a);
            if !m.is_zero() {
                maps.insert(q.arrow_name(a).to_string(), matrix_to_rows(m));
            }
        }
        RepresentationFile { dims, maps }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MorphismFile {
    pub source: RepresentationFile,
    pub target: RepresentationFile,
    #[serde(rename = "vertexMaps", default)]
    pub vertex_maps: BTreeMap<String, Vec<Vec<u64>>>,
}

impl MorphismFile {
    pub fn build(&self, alg: &Arc<BoundQuiverAlgebra>) -> Result<RepMorphism> {
        let source = self.source.build(alg)?;
        let target = self.target.build(alg)?;
        let q = alg.quiver();
        let mut maps = Vec::with_capacity(q.vertex_count());
        for v in 0..q.vertex_count() {
            let rows = target.dims()[v];
            let cols = source.dims()[v];
            let m = match self.vertex_maps.get(q.vertex_label(v)) {
                Some(data) => matrix_from_rows(alg.field(), rows, cols, data)?,
                None => Matrix::zeros(alg.field(), rows, cols),
            };
            maps.push(m);
        }
        RepMorphism::new(source, target, maps)
    }

    pub fn from_morphism(f: &RepMorphism) -> MorphismFile {
        let q = f.source().algebra().quiver();
        let mut vertex_maps = BTreeMap::new();
        for v in 0..q.vertex_count() {
            let m = f.map_at(v);
            if !m.is_zero() {
                vertex_maps.insert(q.vertex_label(v).to_string(), matrix_to_rows(m));
            }
        }
        MorphismFile {
            source: RepresentationFile::from_representation(f.source()),
            target: RepresentationFile::from_representation(f.target()),
            vertex_maps,
        }
    }
}

/// Generators of an End(C)-submodule of Hom(C,Y): a list of vertex-map
/// dictionaries; sources and targets come from the surrounding command.
#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct GeneratorsFile {
    #[serde(default)]
    pub generators: Vec<BTreeMap<String, Vec<Vec<u64>>>>,
}

impl GeneratorsFile {
    pub fn build(
        &self,
        alg: &Arc<BoundQuiverAlgebra>,
        c: &Representation,
        y: &Representation,
    ) -> Result<Vec<RepMorphism>> {
        let q = alg.quiver();
        let mut out = Vec::with_capacity(self.generators.len());
        for gen in &self.generators {
            let mut maps = Vec::with_capacity(q.vertex_count());
            for v in 0..q.vertex_count() {
                let rows = y.dims()[v];
                let cols = c.dims()[v];
                let m = match gen.get(q.vertex_label(v)) {
                    Some(data) => matrix_from_rows(alg.field(), rows, cols, data)?,
                    None => Matrix::zeros(alg.field(), rows, cols),
                };
                maps.push(m);
            }
            out.push(RepMorphism::new(c.clone(), y.clone(), maps)?);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetFile {
    pub elements: Vec<String>,
    #[serde(default)]
    pub le: Vec<(String, String)>,
}

impl PosetFile {
    pub fn build(&self) -> Result<FinitePoset> {
        FinitePoset::new(self.elements.clone(), &self.le)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportFile {
    pub verdict: bool,
    pub witness: Option<MorphismFile>,
    #[serde(rename = "minimalSummands")]
    pub minimal_summands: Vec<RepresentationFile>,
    #[serde(rename = "auslanderClaimAgrees")]
    pub auslander_claim_agrees: Option<bool>,
}

impl ReportFile {
    pub fn from_report(r: &DeterminationReport) -> ReportFile {
        ReportFile {
            verdict: r.verdict,
            witness: r.witness.as_ref().map(MorphismFile::from_morphism),
            minimal_summands: r
                .minimal_summands
                .iter()
                .map(RepresentationFile::from_representation)
                .collect(),
            auslander_claim_agrees: r.auslander_claim_agrees,
        }
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &std::path::Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidRepresentation(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::InvalidRepresentation(format!("cannot parse {}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &std::path::Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Internal(format!("serialization failed: {e}")))?;
    std::fs::write(path, text + "\n")
        .map_err(|e| Error::Internal(format!("cannot write {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2_file() -> AlgebraFile {
        serde_json::from_str(
            r#"{"p":5,"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}]}"#,
        )
        .unwrap()
    }

    #[test]
    fn algebra_roundtrip() {
        let alg = a2_file().build().unwrap();
        assert_eq!(alg.dim(), 3);
        assert_eq!(alg.field().p(), 5);
    }

    #[test]
    fn representation_roundtrip() {
        let alg = a2_file().build().unwrap();
        let rf: RepresentationFile =
            serde_json::from_str(r#"{"dims":{"1":1,"2":1},"maps":{"a":[[1]]}}"#).unwrap();
        let rep = rf.build(&alg).unwrap();
        assert_eq!(rep.dims(), &[1, 1]);
        let back = RepresentationFile::from_representation(&rep);
        let again = back.build(&alg).unwrap();
        assert_eq!(rep, again);
    }

    #[test]
    fn morphism_shape_check() {
        let alg = a2_file().build().unwrap();
        let bad: MorphismFile = serde_json::from_str(
            r#"{"source":{"dims":{"1":1}},"target":{"dims":{"2":1}},"vertexMaps":{"1":[[1]]}}"#,
        )
        .unwrap();
        assert!(bad.build(&alg).is_err());
    }

    #[test]
    fn poset_file() {
        let pf: PosetFile =
            serde_json::from_str(r#"{"elements":["0","1","2"],"le":[["0","1"],["1","2"]]}"#)
                .unwrap();
        let p = pf.build().unwrap();
        assert!(p.le(0, 2)); // transitive closure applied
    }

    #[test]
    fn nonprime_modulus_rejected() {
        let f: AlgebraFile =
            serde_json::from_str(r#"{"p":6,"vertices":["1"],"arrows":[]}"#).unwrap();
        assert!(matches!(f.build(), Err(Error::NotPrime(6))));
    }
}
