//! JSON interchange format for Hopf algebras.
//!
//! ```text
//! {
//!   "name": "sweedler",
//!   "field": {"kind": "rational"},            // or {"kind": "cyclotomic", "order": N}
//!   "dim": 4,
//!   "basis": ["1", "g", "x", "gx"],
//!   "mul": [[i, j, k, "c"], ...],             // e_i e_j has coefficient c on e_k
//!   "comul": [[i, j, k, "c"], ...],           // Δ(e_i) has coefficient c on e_j ⊗ e_k
//!   "counit": ["c", ...],
//!   "unit": ["c", ...],
//!   "antipode": [[i, j, "c"], ...]            // optional; S(e_i) has coefficient c on e_j
//! }
//! ```
//!
//! Sparse entries omit zeros. When `antipode` is absent it is solved for.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hopf::{Bialgebra, HopfAlgebra, HopfError};
use crate::linalg::{Matrix, Tensor3};
use crate::scalar::{Field, FieldSpec, Scalar};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("syntax error at line {line}, column {column}: {msg}")]
    Syntax { line: usize, column: usize, msg: String },
    #[error("semantic error: {0}")]
    Semantic(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldDecl {
    Rational,
    Cyclotomic { order: u32 },
}

impl From<FieldSpec> for FieldDecl {
    fn from(s: FieldSpec) -> Self {
        match s {
            FieldSpec::Rational => FieldDecl::Rational,
            FieldSpec::Cyclotomic(order) => FieldDecl::Cyclotomic { order },
        }
    }
}

/// The on-disk document, before any semantic checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub field: FieldDecl,
    pub dim: usize,
    pub basis: Vec<String>,
    pub mul: Vec<(usize, usize, usize, String)>,
    pub comul: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<String>,
    pub unit: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<(usize, usize, String)>>,
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile, FileError> {
        serde_json::from_str(text).map_err(|e| FileError::Syntax {
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        })
    }

    pub fn from_algebra(h: &HopfAlgebra) -> AlgebraFile {
        let n = h.dim();
        let mul = h
            .mul_tensor()
            .nonzeros()
            .map(|(i, j, k, c)| (i, j, k, c.to_string()))
            .collect();
        let comul = (0..n)
            .flat_map(|i| h.coproduct_terms(i).iter().map(move |(j, k, c)| (i, *j, *k, c.to_string())))
            .collect();
        let s = h.antipode();
        let antipode = (0..n)
            .flat_map(|i| {
                (0..n).filter_map(move |j| {
                    let c = s.get(j, i);
                    (!c.is_zero()).then(|| (i, j, c.to_string()))
                })
            })
            .collect();
        AlgebraFile {
            name: h.name().to_string(),
            field: h.field().spec().into(),
            dim: n,
            basis: h.basis().to_vec(),
            mul,
            comul,
            counit: h.counit().iter().map(|c| c.to_string()).collect(),
            unit: h.unit().iter().map(|c| c.to_string()).collect(),
            antipode: Some(antipode),
        }
    }

    /// Semantic checks and construction. Validation of the axioms is left
    /// to the caller so that broken algebras can still be reported on.
    pub fn into_algebra(self) -> Result<HopfAlgebra, FileError> {
        let sem = |m: String| FileError::Semantic(m);
        let spec = match self.field {
            FieldDecl::Rational => FieldSpec::Rational,
            FieldDecl::Cyclotomic { order } if order >= 1 => FieldSpec::Cyclotomic(order),
            FieldDecl::Cyclotomic { order } => return Err(sem(format!("invalid cyclotomic order {order}"))),
        };
        let f = Field::new(spec);
        let n = self.dim;
        if n == 0 {
            return Err(sem("dim must be positive".into()));
        }
        if self.basis.len() != n {
            return Err(sem(format!("basis has {} names, dim is {n}", self.basis.len())));
        }
        let parse = |what: &str, s: &str| -> Result<Scalar, FileError> {
            f.parse(s).map_err(|e| sem(format!("{what}: {e}")))
        };
        let check_idx = |what: &str, idx: &[usize]| -> Result<(), FileError> {
            match idx.iter().find(|&&i| i >= n) {
                Some(i) => Err(sem(format!("{what}: basis index {i} out of range (dim {n})"))),
                None => Ok(()),
            }
        };
        let mut seen = std::collections::HashSet::new();
        let mut mul = Tensor3::zeros(&f, n);
        for (i, j, k, c) in &self.mul {
            check_idx("mul", &[*i, *j, *k])?;
            if !seen.insert(("mul", *i, *j, *k)) {
                return Err(sem(format!("mul: duplicate entry ({i},{j},{k})")));
            }
            mul.set(*i, *j, *k, parse("mul", c)?);
        }
        let mut comul = Matrix::zeros(&f, n, n * n);
        for (i, j, k, c) in &self.comul {
            check_idx("comul", &[*i, *j, *k])?;
            if !seen.insert(("comul", *i, *j, *k)) {
                return Err(sem(format!("comul: duplicate entry ({i},{j},{k})")));
            }
            comul.set(*i, j * n + k, parse("comul", c)?);
        }
        if self.counit.len() != n || self.unit.len() != n {
            return Err(sem("unit and counit need one entry per basis element".into()));
        }
        let counit = self.counit.iter().map(|c| parse("counit", c)).collect::<Result<Vec<_>, _>>()?;
        let unit = self.unit.iter().map(|c| parse("unit", c)).collect::<Result<Vec<_>, _>>()?;
        let b = Bialgebra::new(self.name, &f, self.basis, mul, unit, comul, counit)?;
        match self.antipode {
            Some(entries) => {
                let mut s = Matrix::zeros(&f, n, n);
                for (i, j, c) in &entries {
                    check_idx("antipode", &[*i, *j])?;
                    if !seen.insert(("antipode", *i, *j, 0)) {
                        return Err(sem(format!("antipode: duplicate entry ({i},{j})")));
                    }
                    s.set(*j, *i, parse("antipode", c)?);
                }
                Ok(HopfAlgebra::new(b, s)?)
            }
            None => Ok(HopfAlgebra::with_computed_antipode(b)?),
        }
    }

    /// Deterministic rendering: one sparse entry per line.
    pub fn to_json(&self) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("string serialization");
        let list = |items: Vec<String>| -> String {
            if items.is_empty() {
                "[]".into()
            } else {
                format!("[\n    {}\n  ]", items.join(",\n    "))
            }
        };
        let field = serde_json::to_string(&self.field).expect("field serialization");
        let mut out = String::from("{\n");
        out.push_str(&format!("  \"name\": {},\n", q(&self.name)));
        out.push_str(&format!("  \"field\": {field},\n"));
        out.push_str(&format!("  \"dim\": {},\n", self.dim));
        let basis: Vec<String> = self.basis.iter().map(|b| q(b)).collect();
        out.push_str(&format!("  \"basis\": [{}],\n", basis.join(", ")));
        let triples = |v: &[(usize, usize, usize, String)]| {
            list(v.iter().map(|(i, j, k, c)| format!("[{i}, {j}, {k}, {}]", q(c))).collect())
        };
        out.push_str(&format!("  \"mul\": {},\n", triples(&self.mul)));
        out.push_str(&format!("  \"comul\": {},\n", triples(&self.comul)));
        let flat = |v: &[String]| v.iter().map(|c| q(c)).collect::<Vec<_>>().join(", ");
        out.push_str(&format!("  \"counit\": [{}],\n", flat(&self.counit)));
        out.push_str(&format!("  \"unit\": [{}]", flat(&self.unit)));
        if let Some(s) = &self.antipode {
            out.push_str(",\n");
            let items = s.iter().map(|(i, j, c)| format!("[{i}, {j}, {}]", q(c))).collect();
            out.push_str(&format!("  \"antipode\": {}", list(items)));
        }
        out.push_str("\n}\n");
        out
    }
}

pub fn parse_algebra(text: &str) -> Result<HopfAlgebra, FileError> {
    AlgebraFile::parse(text)?.into_algebra()
}

pub fn read_algebra(path: impl AsRef<Path>) -> Result<HopfAlgebra, FileError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_algebra(&text)
}

pub fn write_algebra(h: &HopfAlgebra, path: impl AsRef<Path>) -> Result<(), FileError> {
    let path = path.as_ref();
    fs::write(path, AlgebraFile::from_algebra(h).to_json()).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_sweedler, build_taft};

    fn same_structure(a: &HopfAlgebra, b: &HopfAlgebra) -> bool {
        a.name() == b.name()
            && a.basis() == b.basis()
            && a.mul_tensor() == b.mul_tensor()
            && a.comul_matrix() == b.comul_matrix()
            && a.unit() == b.unit()
            && a.counit() == b.counit()
            && a.antipode() == b.antipode()
    }

    #[test]
    fn round_trip_through_text() {
        for h in [build_sweedler(), build_taft(3).unwrap()] {
            let text = AlgebraFile::from_algebra(&h).to_json();
            let back = parse_algebra(&text).unwrap();
            assert!(same_structure(&h, &back), "{}", h.name());
            assert_eq!(AlgebraFile::from_algebra(&back).to_json(), text);
        }
    }

    #[test]
    fn round_trip_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("h4.json");
        let h = build_sweedler();
        write_algebra(&h, &path).unwrap();
        assert!(same_structure(&h, &read_algebra(&path).unwrap()));
    }

    #[test]
    fn dangling_index_is_semantic() {
        let mut doc = AlgebraFile::from_algebra(&build_sweedler());
        doc.mul.push((0, 9, 0, "1".into()));
        let err = parse_algebra(&doc.to_json()).unwrap_err();
        assert!(matches!(err, FileError::Semantic(m) if m.contains("out of range")));
    }

    #[test]
    fn bad_json_is_syntax_with_position() {
        let err = parse_algebra("{\n  \"name\": \"x\",\n  oops\n}").unwrap_err();
        match err {
            FileError::Syntax { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_scalar_is_semantic() {
        let mut doc = AlgebraFile::from_algebra(&build_sweedler());
        doc.unit[0] = "z".into();
        assert!(matches!(parse_algebra(&doc.to_json()), Err(FileError::Semantic(_))));
    }

    #[test]
    fn missing_antipode_is_synthesized() {
        let h = build_taft(3).unwrap();
        let mut doc = AlgebraFile::from_algebra(&h);
        doc.antipode = None;
        let text = doc.to_json();
        assert!(!text.contains("antipode"));
        let back = parse_algebra(&text).unwrap();
        assert_eq!(back.antipode(), h.antipode());
    }
}
