//! JSON file formats for algebras and operators.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use postlie::linalg::{format_rational, zero};
use postlie::{parse_rational, LieAlgebra, Matrix, RBOperator, Rational};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

/// `[e_i, e_j] = Σ c e_k`, stored for `i < j` only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub k: usize,
    pub c: String,
}

/// Operator matrix, row-major, acting by `(Rv)_r = Σ_c M[r][c] v_c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorFile {
    pub dim: usize,
    pub weight: String,
    pub matrix: Vec<Vec<String>>,
}

fn rational(s: &str, what: impl Fn() -> String) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|_| CliError::Format(format!("{}: bad rational {s:?}", what())))
}

impl AlgebraFile {
    /// Canonical form: nonzero brackets sorted by `(i, j)`, terms sorted by `k`, reduced rationals.
    pub fn from_algebra(alg: &LieAlgebra) -> Self {
        let d = alg.dim();
        let mut brackets = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let terms: Vec<Term> = alg
                    .basis_bracket(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| **c != zero())
                    .map(|(k, c)| Term {
                        k,
                        c: format_rational(c),
                    })
                    .collect();
                if !terms.is_empty() {
                    brackets.push(BracketEntry { i, j, terms });
                }
            }
        }
        AlgebraFile {
            dim: d,
            basis: alg.labels().to_vec(),
            brackets,
        }
    }

    /// Structural validation, then the Jacobi identity.
    pub fn to_algebra(&self) -> Result<LieAlgebra, CliError> {
        let d = self.dim;
        if self.basis.len() != d {
            return Err(CliError::Format(format!(
                "basis has {} labels but dim is {d}",
                self.basis.len()
            )));
        }
        if self.basis.iter().collect::<BTreeSet<_>>().len() != d {
            return Err(CliError::Format("basis labels are not distinct".into()));
        }
        let mut seen = BTreeSet::new();
        let mut builder = LieAlgebra::builder_with_labels(self.basis.clone());
        for b in &self.brackets {
            if !(b.i < b.j && b.j < d) {
                return Err(CliError::Format(format!(
                    "bracket ({}, {}) must satisfy i < j < dim",
                    b.i, b.j
                )));
            }
            if !seen.insert((b.i, b.j)) {
                return Err(CliError::Format(format!("bracket ({}, {}) listed twice", b.i, b.j)));
            }
            let mut ks = BTreeSet::new();
            let mut terms = Vec::with_capacity(b.terms.len());
            for t in &b.terms {
                if t.k >= d {
                    return Err(CliError::Format(format!(
                        "bracket ({}, {}): term index {} out of range",
                        b.i, b.j, t.k
                    )));
                }
                if !ks.insert(t.k) {
                    return Err(CliError::Format(format!(
                        "bracket ({}, {}): term index {} listed twice",
                        b.i, b.j, t.k
                    )));
                }
                terms.push((t.k, rational(&t.c, || format!("bracket ({}, {})", b.i, b.j))?));
            }
            builder = builder.bracket(b.i, b.j, &terms);
        }
        builder.build().map_err(|e| match e {
            postlie::Error::Jacobi { i, j, k } => CliError::Jacobi {
                labels: [i, j, k].map(|x| self.basis[x].clone()),
            },
            other => CliError::Format(other.to_string()),
        })
    }
}

impl OperatorFile {
    pub fn from_operator(r: &RBOperator) -> Self {
        OperatorFile {
            dim: r.dim(),
            weight: format_rational(r.weight()),
            matrix: r
                .matrix()
                .to_rows()
                .iter()
                .map(|row| row.iter().map(format_rational).collect())
                .collect(),
        }
    }

    /// Returns the matrix and weight after checking shapes.
    pub fn parse(&self) -> Result<(Matrix, Rational), CliError> {
        let d = self.dim;
        if self.matrix.len() != d || self.matrix.iter().any(|r| r.len() != d) {
            return Err(CliError::Format(format!("matrix must be {d} x {d}")));
        }
        let weight = rational(&self.weight, || "weight".to_string())?;
        let mut rows = Vec::with_capacity(d);
        for (r, row) in self.matrix.iter().enumerate() {
            let parsed: Result<Vec<Rational>, CliError> = row
                .iter()
                .enumerate()
                .map(|(c, s)| rational(s, || format!("matrix entry ({r}, {c})")))
                .collect();
            rows.push(parsed?);
        }
        Ok((Matrix::from_rows(rows), weight))
    }

    /// Operator on `alg`, without checking the RB identity.
    pub fn to_operator(&self, alg: &LieAlgebra) -> Result<RBOperator, CliError> {
        if self.dim != alg.dim() {
            return Err(CliError::Format(format!(
                "operator has dim {} but the algebra has dim {}",
                self.dim,
                alg.dim()
            )));
        }
        let (m, w) = self.parse()?;
        RBOperator::new_unchecked(alg.clone(), m, w).map_err(|e| CliError::Format(e.to_string()))
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::Format(format!("{}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("file types serialize");
    text.push('\n');
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_algebra(path: &Path) -> Result<LieAlgebra, CliError> {
    read_json::<AlgebraFile>(path)?.to_algebra()
}

pub fn load_operator(alg: &LieAlgebra, path: &Path) -> Result<RBOperator, CliError> {
    read_json::<OperatorFile>(path)?.to_operator(alg)
}
