//! On-disk algebra definitions.
//!
//! A document is a TOML file naming the generators and parameters and
//! listing the nonzero canonical components of both structure tensors,
//! with coefficients as polynomial strings:
//!
//! ```toml
//! name = "e2"
//! dimension = 3
//! generators = ["J12", "P1", "P2"]
//! parameters = ["z"]
//! dual_names = ["j12", "p1", "p2"]   # optional
//!
//! c = [[1, 2, 3, "1"], [1, 3, 2, "-1"]]
//! f = [[1, 3, 1, "z"], [2, 3, 2, "z"]]
//! rmatrix = [[1, 2, "z"]]            # optional
//! ```
//!
//! `c` rows are `[i, j, k, coeff]` meaning `[X_i, X_j]` contains
//! `coeff * X_k`; `f` rows give the cocommutator components the same way;
//! `rmatrix` rows are `[i, j, coeff]` entries of an r-matrix candidate.
//! Each antisymmetric component may be listed once, under either index
//! order.

use crate::bialgebra::{LieBialgebra, RMatrix};
use crate::scalar::{self, Scalar, ScalarParseError};
use crate::tensor::{CocommutatorTensor, CommutatorTensor, TensorError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("document syntax error: {0}")]
    Syntax(#[from] toml::de::Error),
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("expected {expected} generator names, found {found}")]
    GeneratorCount { expected: usize, found: usize },
    #[error("expected {expected} dual names, found {found}")]
    DualNameCount { expected: usize, found: usize },
    #[error("duplicate parameter `{0}`")]
    DuplicateParameter(String),
    #[error("in `{field}` entry ({i}, {j}, {k}): {source}")]
    BadIndex {
        field: &'static str,
        i: usize,
        j: usize,
        k: usize,
        source: TensorError,
    },
    #[error("duplicate `{field}` entry for component ({i}, {j}, {k}): the antisymmetric pair may be listed only once")]
    DuplicateComponent {
        field: &'static str,
        i: usize,
        j: usize,
        k: usize,
    },
    #[error("in `{field}` coefficient `{text}`: {source}")]
    BadCoefficient {
        field: &'static str,
        text: String,
        source: ScalarParseError,
    },
    #[error("`rmatrix` index ({i}, {j}) out of range 1..={dim}")]
    RMatrixIndex { i: usize, j: usize, dim: usize },
    #[error("duplicate `rmatrix` entry for ({i}, {j})")]
    DuplicateRMatrixEntry { i: usize, j: usize },
}

/// Serialized form of a Lie bialgebra, plus an optional r-matrix
/// candidate used by coboundary commands.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AlgebraDocument {
    pub name: String,
    pub dimension: usize,
    pub generators: Vec<String>,
    #[serde(default)]
    pub parameters: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_names: Option<Vec<String>>,
    #[serde(default)]
    pub c: Vec<(usize, usize, usize, String)>,
    #[serde(default)]
    pub f: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rmatrix: Option<Vec<(usize, usize, String)>>,
}

fn build_skew<T>(
    field: &'static str,
    dim: usize,
    params: &[String],
    entries: &[(usize, usize, usize, String)],
    new: impl Fn(usize) -> T,
    set: impl Fn(&mut T, usize, usize, usize, Scalar) -> Result<(), TensorError>,
) -> Result<T, DocumentError> {
    let mut out = new(dim);
    // Two rows naming the same canonical slot conflict even if their
    // values agree, so claims are tracked independently of storage
    // (a zero coefficient still claims its slot).
    let mut seen = std::collections::BTreeSet::new();
    for (i, j, k, text) in entries {
        let (i, j, k) = (*i, *j, *k);
        let value =
            scalar::parse(text, params).map_err(|source| DocumentError::BadCoefficient {
                field,
                text: text.clone(),
                source,
            })?;
        set(&mut out, i, j, k, value).map_err(|source| DocumentError::BadIndex {
            field,
            i,
            j,
            k,
            source,
        })?;
        if !seen.insert((i.min(j), i.max(j), k)) {
            return Err(DocumentError::DuplicateComponent { field, i, j, k });
        }
    }
    Ok(out)
}

impl AlgebraDocument {
    /// Materialize the structure tensors and wrap them as a bialgebra.
    /// Axioms are not checked here; run `validate` on the result (or use
    /// [`load_validated`]).
    pub fn to_bialgebra(&self) -> Result<LieBialgebra, DocumentError> {
        if self.dimension == 0 {
            return Err(DocumentError::ZeroDimension);
        }
        if self.generators.len() != self.dimension {
            return Err(DocumentError::GeneratorCount {
                expected: self.dimension,
                found: self.generators.len(),
            });
        }
        if let Some(duals) = &self.dual_names {
            if duals.len() != self.dimension {
                return Err(DocumentError::DualNameCount {
                    expected: self.dimension,
                    found: duals.len(),
                });
            }
        }
        for (pos, p) in self.parameters.iter().enumerate() {
            if self.parameters[..pos].contains(p) {
                return Err(DocumentError::DuplicateParameter(p.clone()));
            }
        }
        let c = build_skew(
            "c",
            self.dimension,
            &self.parameters,
            &self.c,
            CommutatorTensor::new,
            |t, a, b, k, v| t.set(a, b, k, v),
        )?;
        let f = build_skew(
            "f",
            self.dimension,
            &self.parameters,
            &self.f,
            CocommutatorTensor::new,
            |t, a, b, k, v| t.set(a, b, k, v),
        )?;
        let mut b = LieBialgebra::new(
            self.name.clone(),
            self.generators.clone(),
            self.parameters.clone(),
            c,
            f,
        );
        if let Some(duals) = &self.dual_names {
            b.dual_names = duals.clone();
        }
        Ok(b)
    }

    /// The r-matrix candidate, if the document carries one.
    pub fn rmatrix(&self) -> Result<Option<RMatrix>, DocumentError> {
        let Some(entries) = &self.rmatrix else {
            return Ok(None);
        };
        let mut out = RMatrix::new(self.dimension);
        let mut seen = std::collections::BTreeSet::new();
        for (i, j, text) in entries {
            let (i, j) = (*i, *j);
            if i == 0 || i > self.dimension || j == 0 || j > self.dimension {
                return Err(DocumentError::RMatrixIndex {
                    i,
                    j,
                    dim: self.dimension,
                });
            }
            if !seen.insert((i, j)) {
                return Err(DocumentError::DuplicateRMatrixEntry { i, j });
            }
            let value =
                scalar::parse(text, &self.parameters).map_err(|source| {
                    DocumentError::BadCoefficient {
                        field: "rmatrix",
                        text: text.clone(),
                        source,
                    }
                })?;
            out.set(i, j, value);
        }
        Ok(Some(out))
    }

    /// Export a bialgebra (optionally with an r-matrix) back to document
    /// form; `load_document(doc.to_toml())` round-trips.
    pub fn from_bialgebra(b: &LieBialgebra, rmatrix: Option<&RMatrix>) -> Self {
        let tuples = |it: Vec<(usize, usize, usize, Scalar)>| {
            it.into_iter()
                .map(|(i, j, k, v)| (i, j, k, v.to_string()))
                .collect()
        };
        AlgebraDocument {
            name: b.name.clone(),
            dimension: b.dim(),
            generators: b.names.clone(),
            parameters: b.params.clone(),
            dual_names: Some(b.dual_names.clone()),
            c: tuples(
                b.c.iter()
                    .map(|(i, j, k, v)| (i, j, k, v.clone()))
                    .collect(),
            ),
            f: tuples(
                b.f.iter()
                    .map(|(i, j, k, v)| (i, j, k, v.clone()))
                    .collect(),
            ),
            rmatrix: rmatrix.map(|r| {
                r.iter()
                    .map(|(i, j, v)| (i, j, v.to_string()))
                    .collect()
            }),
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("document serializes")
    }
}

/// Parse and structurally check a document. Coefficients are parsed
/// against the declared parameters; bialgebra axioms are not checked.
pub fn load_document(text: &str) -> Result<AlgebraDocument, DocumentError> {
    let doc: AlgebraDocument = toml::from_str(text)?;
    // Surface structural problems eagerly so callers holding a document
    // know the tensors will materialize.
    doc.to_bialgebra()?;
    doc.rmatrix()?;
    Ok(doc)
}

/// Load and insist the content is a genuine Lie bialgebra; the error
/// carries the offending axiom defects.
pub fn load_validated(text: &str) -> Result<(AlgebraDocument, LieBialgebra), LoadError> {
    let doc = load_document(text)?;
    let b = doc.to_bialgebra().expect("checked by load_document");
    let failures: Vec<_> = b.validate().into_iter().filter(|r| !r.is_empty()).collect();
    if failures.is_empty() {
        Ok((doc, b))
    } else {
        Err(LoadError::Invalid { failures })
    }
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error("document defines tensors that fail the bialgebra axioms")]
    Invalid {
        failures: Vec<crate::bialgebra::DefectReport>,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    const E2: &str = r#"
name = "e2"
dimension = 3
generators = ["J12", "P1", "P2"]
parameters = ["z"]

c = [[1, 2, 3, "1"], [1, 3, 2, "-1"]]
f = [[1, 3, 1, "z"], [2, 3, 2, "z"]]
rmatrix = [[1, 2, "z"], [2, 1, "-z"]]
"#;

    #[test]
    fn e2_document_loads_and_validates() {
        let (doc, b) = load_validated(E2).unwrap();
        assert_eq!(b.dim(), 3);
        assert_eq!(b.c.get(1, 2, 3), Scalar::one());
        assert_eq!(b.f.get(1, 3, 1), Scalar::param("z"));
        assert_eq!(b.dual_names, vec!["j12", "p1", "p2"]);
        let rho = doc.rmatrix().unwrap().unwrap();
        assert_eq!(rho.get(1, 2), Scalar::param("z"));
        assert_eq!(rho.get(2, 1), -Scalar::param("z"));
    }

    #[test]
    fn empty_tensor_lists_give_abelian_bialgebra() {
        let text = r#"
name = "flat"
dimension = 2
generators = ["A", "B"]
"#;
        let (_, b) = load_validated(text).unwrap();
        assert!(b.c.is_zero());
        assert!(b.f.is_zero());
        assert!(b.is_valid());
    }

    #[test]
    fn duplicate_canonical_component_is_rejected() {
        // (2,1,3) names the same antisymmetric slot as (1,2,3).
        let text = r#"
name = "dup"
dimension = 3
generators = ["A", "B", "C"]
c = [[1, 2, 3, "1"], [2, 1, 3, "1"]]
"#;
        match load_document(text) {
            Err(DocumentError::DuplicateComponent { field: "c", .. }) => {}
            other => panic!("expected duplicate component error, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        let text = r#"
name = "oor"
dimension = 2
generators = ["A", "B"]
c = [[1, 3, 2, "1"]]
"#;
        assert!(matches!(
            load_document(text),
            Err(DocumentError::BadIndex { field: "c", .. })
        ));
    }

    #[test]
    fn unknown_parameter_is_rejected() {
        let text = r#"
name = "bad"
dimension = 2
generators = ["A", "B"]
f = [[1, 2, 1, "w"]]
"#;
        assert!(matches!(
            load_document(text),
            Err(DocumentError::BadCoefficient { field: "f", .. })
        ));
    }

    #[test]
    fn syntax_error_reports_location() {
        let err = load_document("name = ").unwrap_err();
        assert!(matches!(err, DocumentError::Syntax(_)));
        assert!(err.to_string().contains("syntax error"));
    }

    #[test]
    fn invalid_axioms_are_reported_with_defects() {
        // so(3)-style bracket with a cocommutator that breaks the cocycle
        // condition.
        let text = r#"
name = "broken"
dimension = 3
generators = ["A", "B", "C"]
parameters = ["z"]
c = [[1, 2, 3, "1"], [2, 3, 1, "1"], [3, 1, 2, "1"]]
f = [[1, 2, 3, "z"]]
"#;
        match load_validated(text) {
            Err(LoadError::Invalid { failures }) => assert!(!failures.is_empty()),
            other => panic!("expected axiom failure, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn export_round_trips() {
        let (doc, b) = load_validated(E2).unwrap();
        let rho = doc.rmatrix().unwrap();
        let exported = AlgebraDocument::from_bialgebra(&b, rho.as_ref());
        let reloaded = load_document(&exported.to_toml()).unwrap();
        assert_eq!(reloaded.to_bialgebra().unwrap(), b);
        assert_eq!(reloaded.rmatrix().unwrap(), rho);
    }

    #[test]
    fn generator_count_mismatch_is_rejected() {
        let text = r#"
name = "short"
dimension = 3
generators = ["A", "B"]
"#;
        assert!(matches!(
            load_document(text),
            Err(DocumentError::GeneratorCount {
                expected: 3,
                found: 2
            })
        ));
    }
}
