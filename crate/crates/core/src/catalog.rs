//! Builtin algebras, subalgebras, operators and the witnesses for the eight types
//! of Lie algebras `g` admitting a post-Lie structure with `n = sl2 ⊕ sl2`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::classify::{is_lie_isomorphism, Class3Tag};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{int, rat, scaled, unit_vector, vadd, zero_vector, Matrix, Rational, Subspace, Vector};
use crate::post_lie::{derived_bracket, derived_dim_inequality, kernel_ideal_checks, triple_decomposition};
use crate::rota_baxter::{
    diagonal_sum, double_construction, split_operator, triangular_split, DoubleVariant, RBOperator,
    TriangularSplitSpec,
};

pub const X1: usize = 0;
pub const Y1: usize = 1;
pub const H1: usize = 2;
pub const X2: usize = 3;
pub const Y2: usize = 4;
pub const H2: usize = 5;

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn x_labels() -> Vec<String> {
    (1..=6).map(|i| format!("x{i}")).collect()
}

/// `sl2` with `[e1,e2] = e3, [e1,e3] = -2e1, [e2,e3] = 2e2` (`e1 = X, e2 = Y, e3 = H`).
pub fn make_sl2() -> LieAlgebra {
    LieAlgebra::builder_with_labels(labels(&["X", "Y", "H"]))
        .bracket(0, 1, &[(2, int(1))])
        .bracket(0, 2, &[(0, int(-2))])
        .bracket(1, 2, &[(1, int(2))])
        .build()
        .expect("sl2 satisfies Jacobi")
}

/// `sl2 ⊕ sl2` in the basis `(X1, Y1, H1, X2, Y2, H2)`.
pub fn make_sl2sl2() -> LieAlgebra {
    make_sl2()
        .direct_sum(&make_sl2())
        .with_labels(labels(&["X1", "Y1", "H1", "X2", "Y2", "H2"]))
}

/// `r2` with `[e1,e2] = e2`.
pub fn make_r2() -> LieAlgebra {
    LieAlgebra::builder(2)
        .bracket(0, 1, &[(1, int(1))])
        .build()
        .expect("r2 satisfies Jacobi")
}

fn r3_lambda_unchecked(lambda: &Rational) -> LieAlgebra {
    LieAlgebra::builder(3)
        .bracket(0, 1, &[(1, int(1))])
        .bracket(0, 2, &[(2, lambda.clone())])
        .build()
        .expect("r3,lambda satisfies Jacobi")
}

/// Representatives of the six classes of 3-dimensional Lie algebras.
pub fn make_dim3(tag: Class3Tag, lambda: Option<&Rational>) -> Result<LieAlgebra> {
    match (tag, lambda) {
        (Class3Tag::R3Lambda, Some(l)) if !l.is_zero() => return Ok(r3_lambda_unchecked(l)),
        (Class3Tag::R3Lambda, _) => {
            return Err(Error::InvalidParameter("r3_lambda needs a nonzero lambda".into()))
        }
        (_, Some(_)) => {
            return Err(Error::InvalidParameter(format!("{tag} takes no parameter")));
        }
        _ => {}
    }
    let b = LieAlgebra::builder(3);
    let b = match tag {
        Class3Tag::Abelian => b,
        Class3Tag::N3 => b.bracket(0, 1, &[(2, int(1))]),
        Class3Tag::R2PlusC => b.bracket(0, 1, &[(1, int(1))]),
        Class3Tag::R3 => b
            .bracket(0, 1, &[(1, int(1))])
            .bracket(0, 2, &[(1, int(1)), (2, int(1))]),
        Class3Tag::Sl2 => return Ok(make_sl2().with_labels(labels(&["e1", "e2", "e3"]))),
        Class3Tag::R3Lambda => unreachable!(),
    };
    b.build()
}

/// Coordinates in `sl2 ⊕ sl2` of `Σ c X_k`.
pub fn sl2sl2_vector(terms: &[(usize, Rational)]) -> Vector {
    let mut v = zero_vector(6);
    for (k, c) in terms {
        v[*k] += c;
    }
    v
}

fn v6(terms: &[(usize, Rational)]) -> Vector {
    sl2sl2_vector(terms)
}

/// `Σ c v`.
fn lin(terms: &[(Rational, &Vector)]) -> Vector {
    let d = terms.first().map_or(0, |(_, v)| v.len());
    terms
        .iter()
        .fold(zero_vector(d), |acc, (c, v)| vadd(&acc, &scaled(c, v)))
}

// ---------------------------------------------------------------------------
// Subalgebras of sl2 ⊕ sl2

/// Representatives of the subalgebras of `sl2 ⊕ sl2` up to inner automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubalgebraRow {
    X1,
    H1,
    X1PlusX2,
    X1PlusH2,
    /// `⟨H1 + a H2⟩`, `a ≠ 0`
    H1PlusAH2,
    X1X2,
    X1H2,
    H1H2,
    /// `⟨X1 + X2, H1 + H2⟩`
    DiagonalBorel,
    /// `⟨X1, H1 + X2⟩`
    X1H1PlusX2,
    /// `⟨X1, H1 + a H2⟩`
    X1H1PlusAH2,
    /// `⟨X1, X2, H1 + a H2⟩`, `a ≠ 0`
    X1X2H1PlusAH2,
    X1H1H2,
    X1H1X2,
    X1H1X2H2,
    FirstFactor,
    Diagonal,
    FirstFactorH2,
    FirstFactorX2,
    FirstFactorX2H2,
}

/// Isomorphism type recorded for a [`SubalgebraRow`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowType {
    Abelian(usize),
    R2,
    R3Lambda(Rational),
    R2PlusC,
    R2PlusR2,
    Sl2,
    Sl2PlusC,
    Sl2PlusR2,
}

impl RowType {
    /// A model algebra of this type.
    pub fn model(&self) -> LieAlgebra {
        match self {
            RowType::Abelian(n) => LieAlgebra::abelian(*n),
            RowType::R2 => make_r2(),
            RowType::R3Lambda(l) => r3_lambda_unchecked(l),
            RowType::R2PlusC => make_r2().direct_sum(&LieAlgebra::abelian(1)),
            RowType::R2PlusR2 => make_r2().direct_sum(&make_r2()),
            RowType::Sl2 => make_sl2(),
            RowType::Sl2PlusC => make_sl2().direct_sum(&LieAlgebra::abelian(1)),
            RowType::Sl2PlusR2 => make_sl2().direct_sum(&make_r2()),
        }
    }
}

impl SubalgebraRow {
    pub const ALL: [SubalgebraRow; 20] = [
        SubalgebraRow::X1,
        SubalgebraRow::H1,
        SubalgebraRow::X1PlusX2,
        SubalgebraRow::X1PlusH2,
        SubalgebraRow::H1PlusAH2,
        SubalgebraRow::X1X2,
        SubalgebraRow::X1H2,
        SubalgebraRow::H1H2,
        SubalgebraRow::DiagonalBorel,
        SubalgebraRow::X1H1PlusX2,
        SubalgebraRow::X1H1PlusAH2,
        SubalgebraRow::X1X2H1PlusAH2,
        SubalgebraRow::X1H1H2,
        SubalgebraRow::X1H1X2,
        SubalgebraRow::X1H1X2H2,
        SubalgebraRow::FirstFactor,
        SubalgebraRow::Diagonal,
        SubalgebraRow::FirstFactorH2,
        SubalgebraRow::FirstFactorX2,
        SubalgebraRow::FirstFactorX2H2,
    ];

    pub fn is_parametric(self) -> bool {
        matches!(
            self,
            SubalgebraRow::H1PlusAH2 | SubalgebraRow::X1H1PlusAH2 | SubalgebraRow::X1X2H1PlusAH2
        )
    }

    /// Whether `a = 0` is allowed for a parametric row.
    fn allows_zero(self) -> bool {
        self == SubalgebraRow::X1H1PlusAH2
    }

    pub fn name(self) -> &'static str {
        match self {
            SubalgebraRow::X1 => "<X1>",
            SubalgebraRow::H1 => "<H1>",
            SubalgebraRow::X1PlusX2 => "<X1+X2>",
            SubalgebraRow::X1PlusH2 => "<X1+H2>",
            SubalgebraRow::H1PlusAH2 => "<H1+aH2>",
            SubalgebraRow::X1X2 => "<X1,X2>",
            SubalgebraRow::X1H2 => "<X1,H2>",
            SubalgebraRow::H1H2 => "<H1,H2>",
            SubalgebraRow::DiagonalBorel => "<X1+X2,H1+H2>",
            SubalgebraRow::X1H1PlusX2 => "<X1,H1+X2>",
            SubalgebraRow::X1H1PlusAH2 => "<X1,H1+aH2>",
            SubalgebraRow::X1X2H1PlusAH2 => "<X1,X2,H1+aH2>",
            SubalgebraRow::X1H1H2 => "<X1,H1,H2>",
            SubalgebraRow::X1H1X2 => "<X1,H1,X2>",
            SubalgebraRow::X1H1X2H2 => "<X1,H1,X2,H2>",
            SubalgebraRow::FirstFactor => "<X1,Y1,H1>",
            SubalgebraRow::Diagonal => "<X1+X2,Y1+Y2,H1+H2>",
            SubalgebraRow::FirstFactorH2 => "<X1,Y1,H1,H2>",
            SubalgebraRow::FirstFactorX2 => "<X1,Y1,H1,X2>",
            SubalgebraRow::FirstFactorX2H2 => "<X1,Y1,H1,X2,H2>",
        }
    }

    pub fn generators(self, a: &Rational) -> Vec<Vector> {
        let e = |k| unit_vector(6, k);
        let one = Rational::one;
        let sum = |p: usize, q: usize, c: Rational| v6(&[(p, one()), (q, c)]);
        match self {
            SubalgebraRow::X1 => vec![e(X1)],
            SubalgebraRow::H1 => vec![e(H1)],
            SubalgebraRow::X1PlusX2 => vec![sum(X1, X2, one())],
            SubalgebraRow::X1PlusH2 => vec![sum(X1, H2, one())],
            SubalgebraRow::H1PlusAH2 => vec![sum(H1, H2, a.clone())],
            SubalgebraRow::X1X2 => vec![e(X1), e(X2)],
            SubalgebraRow::X1H2 => vec![e(X1), e(H2)],
            SubalgebraRow::H1H2 => vec![e(H1), e(H2)],
            SubalgebraRow::DiagonalBorel => vec![sum(X1, X2, one()), sum(H1, H2, one())],
            SubalgebraRow::X1H1PlusX2 => vec![e(X1), sum(H1, X2, one())],
            SubalgebraRow::X1H1PlusAH2 => vec![e(X1), sum(H1, H2, a.clone())],
            SubalgebraRow::X1X2H1PlusAH2 => vec![e(X1), e(X2), sum(H1, H2, a.clone())],
            SubalgebraRow::X1H1H2 => vec![e(X1), e(H1), e(H2)],
            SubalgebraRow::X1H1X2 => vec![e(X1), e(H1), e(X2)],
            SubalgebraRow::X1H1X2H2 => vec![e(X1), e(H1), e(X2), e(H2)],
            SubalgebraRow::FirstFactor => vec![e(X1), e(Y1), e(H1)],
            SubalgebraRow::Diagonal => vec![sum(X1, X2, one()), sum(Y1, Y2, one()), sum(H1, H2, one())],
            SubalgebraRow::FirstFactorH2 => vec![e(X1), e(Y1), e(H1), e(H2)],
            SubalgebraRow::FirstFactorX2 => vec![e(X1), e(Y1), e(H1), e(X2)],
            SubalgebraRow::FirstFactorX2H2 => vec![e(X1), e(Y1), e(H1), e(X2), e(H2)],
        }
    }

    /// The isomorphism type listed for the row.
    pub fn row_type(self, a: &Rational) -> RowType {
        match self {
            SubalgebraRow::X1
            | SubalgebraRow::H1
            | SubalgebraRow::X1PlusX2
            | SubalgebraRow::X1PlusH2
            | SubalgebraRow::H1PlusAH2 => RowType::Abelian(1),
            SubalgebraRow::X1X2 | SubalgebraRow::X1H2 | SubalgebraRow::H1H2 => RowType::Abelian(2),
            SubalgebraRow::DiagonalBorel | SubalgebraRow::X1H1PlusX2 | SubalgebraRow::X1H1PlusAH2 => RowType::R2,
            SubalgebraRow::X1X2H1PlusAH2 => RowType::R3Lambda(a.clone()),
            SubalgebraRow::X1H1H2 | SubalgebraRow::X1H1X2 => RowType::R2PlusC,
            SubalgebraRow::X1H1X2H2 => RowType::R2PlusR2,
            SubalgebraRow::FirstFactor | SubalgebraRow::Diagonal => RowType::Sl2,
            SubalgebraRow::FirstFactorH2 | SubalgebraRow::FirstFactorX2 => RowType::Sl2PlusC,
            SubalgebraRow::FirstFactorX2H2 => RowType::Sl2PlusR2,
        }
    }
}

impl fmt::Display for SubalgebraRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Canonical subspace of a row; `a` is required exactly for parametric rows.
pub fn make_subalgebra(row: SubalgebraRow, a: Option<&Rational>) -> Result<Subspace> {
    let a = match (row.is_parametric(), a) {
        (true, Some(a)) => {
            if a.is_zero() && !row.allows_zero() {
                return Err(Error::InvalidParameter(format!("{row} needs a != 0")));
            }
            a.clone()
        }
        (true, None) => return Err(Error::InvalidParameter(format!("{row} needs a parameter a"))),
        (false, Some(_)) => return Err(Error::InvalidParameter(format!("{row} takes no parameter"))),
        (false, None) => Rational::zero(),
    };
    Subspace::span(6, &row.generators(&a))
}

/// Sample values for parametric rows.
pub fn row_samples(row: SubalgebraRow) -> Vec<Option<Rational>> {
    if !row.is_parametric() {
        return vec![None];
    }
    let mut out = vec![Some(int(1)), Some(int(2)), Some(int(-1))];
    if row.allows_zero() {
        out.insert(0, Some(int(0)));
    }
    out
}

/// The involutive automorphism `X1 ↔ Y1, H1 ↦ -H1, X2 ↦ -Y2, Y2 ↦ -X2, H2 ↦ -H2`.
pub fn omega() -> Matrix {
    let m1 = int(-1);
    let cols = vec![
        unit_vector(6, Y1),
        unit_vector(6, X1),
        v6(&[(H1, m1.clone())]),
        v6(&[(Y2, m1.clone())]),
        v6(&[(X2, m1.clone())]),
        v6(&[(H2, m1)]),
    ];
    Matrix::from_columns(6, &cols)
}

/// Sampled representatives together with their images under [`omega`].
pub fn split_candidates() -> Vec<Subspace> {
    let w = omega();
    let mut reps = Vec::new();
    for row in SubalgebraRow::ALL {
        for a in row_samples(row) {
            reps.push(make_subalgebra(row, a.as_ref()).expect("valid sample"));
        }
    }
    reps.push(Subspace::zero(6));
    reps.push(Subspace::full(6));
    let images: Vec<Subspace> = reps.iter().map(|s| s.map(&w).expect("same ambient")).collect();
    let mut out: Vec<Subspace> = Vec::new();
    for s in reps.into_iter().chain(images) {
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// The eight types

/// One of the eight families of Lie algebras with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivedType {
    Sl2Sl2,
    Sl2R3 { lambda: Rational },
    R3R3 { lambda: Rational, mu: Rational },
    R2Cubed,
    Five { alpha: Rational, beta: Rational },
    Six { lambda: Rational, alpha: Rational },
    Seven { lambda: Rational, alpha1: Rational, alpha2: Rational },
    EightA { alpha1: Rational, alpha2: Rational, alpha4: Rational, alpha7: Rational },
    EightB { alpha1: Rational, alpha2: Rational, alpha3: Rational },
}

impl DerivedType {
    pub fn number(&self) -> u8 {
        match self {
            DerivedType::Sl2Sl2 => 1,
            DerivedType::Sl2R3 { .. } => 2,
            DerivedType::R3R3 { .. } => 3,
            DerivedType::R2Cubed => 4,
            DerivedType::Five { .. } => 5,
            DerivedType::Six { .. } => 6,
            DerivedType::Seven { .. } => 7,
            DerivedType::EightA { .. } | DerivedType::EightB { .. } => 8,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            DerivedType::Sl2Sl2 => "1",
            DerivedType::Sl2R3 { .. } => "2",
            DerivedType::R3R3 { .. } => "3",
            DerivedType::R2Cubed => "4",
            DerivedType::Five { .. } => "5",
            DerivedType::Six { .. } => "6",
            DerivedType::Seven { .. } => "7",
            DerivedType::EightA { .. } => "8a",
            DerivedType::EightB { .. } => "8b",
        }
    }

    pub fn params(&self) -> Vec<(&'static str, Rational)> {
        match self {
            DerivedType::Sl2Sl2 | DerivedType::R2Cubed => vec![],
            DerivedType::Sl2R3 { lambda } => vec![("lambda", lambda.clone())],
            DerivedType::R3R3 { lambda, mu } => vec![("lambda", lambda.clone()), ("mu", mu.clone())],
            DerivedType::Five { alpha, beta } => vec![("alpha", alpha.clone()), ("beta", beta.clone())],
            DerivedType::Six { lambda, alpha } => vec![("lambda", lambda.clone()), ("alpha", alpha.clone())],
            DerivedType::Seven {
                lambda,
                alpha1,
                alpha2,
            } => vec![
                ("lambda", lambda.clone()),
                ("alpha1", alpha1.clone()),
                ("alpha2", alpha2.clone()),
            ],
            DerivedType::EightA {
                alpha1,
                alpha2,
                alpha4,
                alpha7,
            } => vec![
                ("alpha1", alpha1.clone()),
                ("alpha2", alpha2.clone()),
                ("alpha4", alpha4.clone()),
                ("alpha7", alpha7.clone()),
            ],
            DerivedType::EightB { alpha1, alpha2, alpha3 } => vec![
                ("alpha1", alpha1.clone()),
                ("alpha2", alpha2.clone()),
                ("alpha3", alpha3.clone()),
            ],
        }
    }

    /// Parameter names accepted by [`DerivedType::from_label`] for a label.
    pub fn param_names(label: &str) -> Option<&'static [&'static str]> {
        Some(match label {
            "1" | "4" => &[],
            "2" => &["lambda"],
            "3" => &["lambda", "mu"],
            "5" => &["alpha", "beta"],
            "6" => &["lambda", "alpha"],
            "7" => &["lambda", "alpha1", "alpha2"],
            "8a" => &["alpha1", "alpha2", "alpha4", "alpha7"],
            "8b" => &["alpha1", "alpha2", "alpha3"],
            _ => return None,
        })
    }

    /// Builds a type from its label; missing parameters are taken from `defaults`.
    pub fn from_label(
        label: &str,
        params: &BTreeMap<String, Rational>,
        defaults: Option<&DerivedType>,
    ) -> Result<DerivedType> {
        let names = Self::param_names(label)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown type {label}")))?;
        if let Some(k) = params.keys().find(|k| !names.contains(&k.as_str())) {
            return Err(Error::InvalidParameter(format!("type {label} has no parameter {k}")));
        }
        let fallback: BTreeMap<&str, Rational> = defaults.map(|d| d.params().into_iter().collect()).unwrap_or_default();
        let get = |name: &str| -> Result<Rational> {
            params
                .get(name)
                .or_else(|| fallback.get(name))
                .cloned()
                .ok_or_else(|| Error::InvalidParameter(format!("type {label} needs parameter {name}")))
        };
        Ok(match label {
            "1" => DerivedType::Sl2Sl2,
            "2" => DerivedType::Sl2R3 { lambda: get("lambda")? },
            "3" => DerivedType::R3R3 {
                lambda: get("lambda")?,
                mu: get("mu")?,
            },
            "4" => DerivedType::R2Cubed,
            "5" => DerivedType::Five {
                alpha: get("alpha")?,
                beta: get("beta")?,
            },
            "6" => DerivedType::Six {
                lambda: get("lambda")?,
                alpha: get("alpha")?,
            },
            "7" => DerivedType::Seven {
                lambda: get("lambda")?,
                alpha1: get("alpha1")?,
                alpha2: get("alpha2")?,
            },
            "8a" => DerivedType::EightA {
                alpha1: get("alpha1")?,
                alpha2: get("alpha2")?,
                alpha4: get("alpha4")?,
                alpha7: get("alpha7")?,
            },
            _ => DerivedType::EightB {
                alpha1: get("alpha1")?,
                alpha2: get("alpha2")?,
                alpha3: get("alpha3")?,
            },
        })
    }

    /// `(α1, …, α7)` for the two eight-type families.
    pub fn eight_coefficients(&self) -> Option<[Rational; 7]> {
        match self {
            DerivedType::EightA {
                alpha1,
                alpha2,
                alpha4,
                alpha7,
            } => Some([
                alpha1.clone(),
                alpha2.clone(),
                Rational::one(),
                alpha4.clone(),
                alpha1 * alpha7,
                alpha2 * alpha4,
                alpha7.clone(),
            ]),
            DerivedType::EightB { alpha1, alpha2, alpha3 } => {
                let one = Rational::one();
                Some([
                    alpha1.clone(),
                    alpha2.clone(),
                    alpha3.clone(),
                    alpha1 - &one,
                    -alpha1.clone(),
                    alpha2 * (alpha1 - &one),
                    alpha1 * alpha3 - alpha1 * alpha1 * alpha2 - alpha3,
                ])
            }
            _ => None,
        }
    }

    /// First violated constraint of the family.
    fn check(&self) -> Result<()> {
        let one = Rational::one();
        let m1 = -Rational::one();
        let fail = |constraint| Err(Error::Constraint {
            ty: self.number(),
            constraint,
        });
        match self {
            DerivedType::Sl2R3 { lambda } if *lambda == m1 => fail("lambda != -1"),
            DerivedType::R3R3 { lambda, mu } if *lambda == m1 && *mu == m1 => fail("(lambda, mu) != (-1, -1)"),
            DerivedType::Five { alpha, .. } if alpha.is_zero() => fail("alpha != 0"),
            DerivedType::Five { alpha, .. } if *alpha == m1 => fail("alpha != -1"),
            DerivedType::Five { beta, .. } if beta.is_zero() => fail("beta != 0"),
            DerivedType::Five { beta, .. } if *beta == m1 => fail("beta != -1"),
            DerivedType::Six { lambda, .. } if lambda.is_zero() => fail("lambda != 0"),
            DerivedType::Six { alpha, .. } if alpha.is_zero() => fail("alpha != 0"),
            DerivedType::Six { alpha, .. } if *alpha == m1 => fail("alpha != -1"),
            DerivedType::Seven { lambda, .. } if lambda.is_zero() => fail("lambda != 0"),
            DerivedType::Seven { alpha1, .. } if alpha1.is_zero() => fail("alpha1 != 0"),
            DerivedType::Seven { alpha2, .. } if alpha2.is_zero() => fail("alpha2 != 0"),
            DerivedType::Seven {
                lambda,
                alpha1,
                alpha2,
            } if *lambda == m1 && *alpha2 == -alpha1 - &one => {
                fail("(lambda, alpha1, alpha2) != (-1, alpha1, -alpha1 - 1)")
            }
            DerivedType::EightA { alpha1, alpha2, .. } if alpha1 * alpha2 == one => fail("alpha1 * alpha2 != 1"),
            DerivedType::EightA { alpha4, .. } if alpha4.is_zero() || *alpha4 == m1 => fail("alpha4 != 0, -1"),
            DerivedType::EightA { alpha7, .. } if alpha7.is_zero() || *alpha7 == m1 => fail("alpha7 != 0, -1"),
            DerivedType::EightB { alpha1, alpha2, alpha3 } if (alpha3 - alpha1 * alpha2).is_zero() => {
                fail("alpha3 - alpha1 * alpha2 != 0")
            }
            DerivedType::EightB { alpha1, .. } if alpha1.is_zero() || alpha1.is_one() => fail("alpha1 != 0, 1"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for DerivedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "type ({})", self.label())?;
        let params = self.params();
        if !params.is_empty() {
            let parts: Vec<String> = params
                .iter()
                .map(|(k, v)| format!("{k} = {}", crate::linalg::format_rational(v)))
                .collect();
            write!(f, " with {}", parts.join(", "))?;
        }
        Ok(())
    }
}

/// Structure constants of a type on `x1, …, x6`, after checking its constraints.
pub fn make_type(t: &DerivedType) -> Result<LieAlgebra> {
    t.check()?;
    let one = Rational::one;
    let alg = match t {
        DerivedType::Sl2Sl2 => make_sl2sl2(),
        DerivedType::Sl2R3 { lambda } => make_sl2().direct_sum(&r3_lambda_unchecked(lambda)),
        DerivedType::R3R3 { lambda, mu } => r3_lambda_unchecked(lambda).direct_sum(&r3_lambda_unchecked(mu)),
        DerivedType::R2Cubed => make_r2().direct_sum(&make_r2()).direct_sum(&make_r2()),
        DerivedType::Five { alpha, beta } => LieAlgebra::builder(6)
            .bracket(0, 1, &[(0, one())])
            .bracket(2, 5, &[(2, one())])
            .bracket(3, 5, &[(3, alpha.clone())])
            .bracket(4, 5, &[(4, beta.clone())])
            .build()?,
        DerivedType::Six { lambda, alpha } => LieAlgebra::builder(6)
            .bracket(1, 3, &[(1, one())])
            .bracket(2, 3, &[(2, lambda.clone())])
            .bracket(2, 5, &[(2, one())])
            .bracket(4, 5, &[(4, alpha.clone())])
            .build()?,
        DerivedType::Seven {
            lambda,
            alpha1,
            alpha2,
        } => LieAlgebra::builder(6)
            .bracket(0, 2, &[(0, one())])
            .bracket(1, 2, &[(1, lambda.clone())])
            .bracket(1, 5, &[(1, alpha1.clone())])
            .bracket(3, 5, &[(3, one())])
            .bracket(4, 5, &[(4, alpha2.clone())])
            .build()?,
        DerivedType::EightA { .. } | DerivedType::EightB { .. } => {
            let a = t.eight_coefficients().expect("eight type");
            LieAlgebra::builder(6)
                .bracket(0, 4, &[(0, one())])
                .bracket(1, 4, &[(1, a[1].clone())])
                .bracket(2, 4, &[(2, a[3].clone())])
                .bracket(3, 4, &[(3, a[5].clone())])
                .bracket(0, 5, &[(0, a[0].clone())])
                .bracket(1, 5, &[(1, a[2].clone())])
                .bracket(2, 5, &[(2, a[4].clone())])
                .bracket(3, 5, &[(3, a[6].clone())])
                .build()?
        }
    };
    Ok(alg.with_labels(x_labels()))
}

// ---------------------------------------------------------------------------
// Operators

/// `R X = 0, R H = ρH, R Y = -Y` on `sl2`, with the basis `(H/(2(ρ+1)), X, Y)`
/// in which its bracket is `r_{3,λ}`, `λ = -ρ/(ρ+1)`.
pub fn sl2_triangular(rho: &Rational) -> Result<(RBOperator, Matrix)> {
    let one = Rational::one();
    if *rho == -one.clone() {
        return Err(Error::InvalidParameter("rho != -1".into()));
    }
    let e = |k| unit_vector(3, k);
    let spec = TriangularSplitSpec::from_frame(3, &[e(0)], &[e(2)], &[scaled(rho, &e(2))], &[e(1)])?;
    let r = triangular_split(&make_sl2(), &spec, &one)?;
    let h = scaled(&(int(2) * (rho + &one)).recip(), &e(2));
    Ok((r, Matrix::from_columns(3, &[h, e(0), e(1)])))
}

/// `ρ` with `-ρ/(ρ+1) = λ`.
pub fn rho_for_lambda(lambda: &Rational) -> Result<Rational> {
    let one = Rational::one();
    if *lambda == -one.clone() {
        return Err(Error::InvalidParameter("lambda != -1".into()));
    }
    Ok(-lambda / (lambda + one))
}

/// The operator `e1 ↦ e1 + αe3, e2 ↦ -e2 + βe3, e3 ↦ γe3` on `r2 ⊕ C`, at weight 1, unchecked.
pub fn r2c_phi(alpha: &Rational, beta: &Rational, gamma: &Rational) -> RBOperator {
    let z = Rational::zero();
    let m = Matrix::from_rows(vec![
        vec![Rational::one(), z.clone(), z.clone()],
        vec![z.clone(), -Rational::one(), z],
        vec![alpha.clone(), beta.clone(), gamma.clone()],
    ]);
    RBOperator::new_unchecked(make_r2().direct_sum(&LieAlgebra::abelian(1)), m, Rational::one())
        .expect("3x3 matrix")
}

/// Algebras carrying catalog operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Sl2,
    Sl2Sl2,
    R2PlusC,
}

impl AlgebraKind {
    pub fn algebra(self) -> LieAlgebra {
        match self {
            AlgebraKind::Sl2 => make_sl2(),
            AlgebraKind::Sl2Sl2 => make_sl2sl2(),
            AlgebraKind::R2PlusC => make_r2().direct_sum(&LieAlgebra::abelian(1)),
        }
    }
}

/// `X ↔ Y, H ↦ -H` on `sl2`.
pub fn chevalley() -> Matrix {
    Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]])
}

/// Three automorphisms of the algebra.
pub fn automorphisms(kind: AlgebraKind) -> Vec<Matrix> {
    match kind {
        AlgebraKind::Sl2 => vec![
            chevalley(),
            // X ↦ 2X, Y ↦ Y/2
            Matrix::diagonal(&[int(2), rat(1, 2), int(1)]),
            // exp(ad X): Y ↦ Y + H - X, H ↦ H - 2X
            Matrix::from_i64(&[&[1, -1, -2], &[0, 1, 0], &[0, 1, 1]]),
        ],
        AlgebraKind::Sl2Sl2 => {
            let id = Matrix::identity(3);
            let mut swap = Matrix::zeros(6, 6);
            for k in 0..3 {
                swap[(k, k + 3)] = int(1);
                swap[(k + 3, k)] = int(1);
            }
            let exp_x = Matrix::from_i64(&[&[1, -1, -2], &[0, 1, 0], &[0, 1, 1]]);
            vec![
                swap,
                Matrix::block_diagonal(&chevalley(), &id),
                Matrix::block_diagonal(&exp_x, &id),
            ]
        }
        AlgebraKind::R2PlusC => vec![
            Matrix::diagonal(&[int(1), int(2), int(1)]),
            Matrix::diagonal(&[int(1), int(1), int(3)]),
            Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1]]),
        ],
    }
}

// ---------------------------------------------------------------------------
// Witnesses

/// An operator on `sl2 ⊕ sl2` whose derived bracket realizes a given type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub name: &'static str,
    pub operator: RBOperator,
    pub target_type: DerivedType,
    pub target: LieAlgebra,
    /// Isomorphism from the derived bracket onto `target`.
    pub iso: Option<Matrix>,
    pub params: Vec<(&'static str, Rational)>,
}

fn witness(
    name: &'static str,
    operator: RBOperator,
    target_type: DerivedType,
    iso: Matrix,
    params: Vec<(&'static str, Rational)>,
) -> Result<Witness> {
    let target = make_type(&target_type)?;
    Ok(Witness {
        name,
        operator,
        target_type,
        target,
        iso: Some(iso),
        params,
    })
}

/// Isomorphism sending the columns of `basis` to the standard basis.
fn iso_from_basis(basis: &[Vector]) -> Result<Matrix> {
    Matrix::from_columns(basis.len(), basis).inverse()
}

fn type1_witnesses() -> Result<Vec<Witness>> {
    let n = make_sl2sl2();
    let one = Rational::one();
    let id3 = Matrix::identity(3);
    let m_id3 = Matrix::scalar(3, &-one.clone());
    let mut out = vec![
        witness(
            "type1-zero",
            RBOperator::zero(n.clone(), one.clone()),
            DerivedType::Sl2Sl2,
            Matrix::identity(6),
            vec![],
        )?,
        witness(
            "type1-negative-identity",
            RBOperator::negative_identity(n.clone(), one.clone()),
            DerivedType::Sl2Sl2,
            Matrix::scalar(6, &-one.clone()),
            vec![],
        )?,
    ];
    for (name, psi) in [
        ("type1-double-nilpotent", id3.clone()),
        ("type1-double-nilpotent-chevalley", chevalley()),
    ] {
        let r = double_construction(&make_sl2(), &psi, DoubleVariant::Nilpotent)?;
        let iso = r.shifted(&one);
        out.push(witness(name, r, DerivedType::Sl2Sl2, iso, vec![])?);
    }
    let neg = double_construction(&make_sl2(), &id3, DoubleVariant::Negative)?;
    // (a1, a2) ↦ (-a1, a2 - ψ a1)
    let mut iso = Matrix::block_diagonal(&m_id3, &id3);
    for k in 0..3 {
        iso[(k + 3, k)] = -one.clone();
    }
    out.push(witness("type1-double-negative", neg, DerivedType::Sl2Sl2, iso, vec![])?);
    let factor = diagonal_sum(
        &RBOperator::negative_identity(make_sl2(), one.clone()),
        &RBOperator::zero(make_sl2(), one.clone()),
    )?
    .on_algebra(n)?;
    out.push(witness(
        "type1-factor-split",
        factor,
        DerivedType::Sl2Sl2,
        Matrix::block_diagonal(&m_id3, &id3),
        vec![],
    )?);
    Ok(out)
}

fn type23_witnesses() -> Result<Vec<Witness>> {
    let n = make_sl2sl2();
    let one = Rational::one();
    let mut out = Vec::new();

    let lambda = int(2);
    let rho = rho_for_lambda(&lambda)?;
    let (t, b) = sl2_triangular(&rho)?;
    let r = diagonal_sum(&RBOperator::zero(make_sl2(), one.clone()), &t)?.on_algebra(n.clone())?;
    let iso = Matrix::block_diagonal(&Matrix::identity(3), &b.inverse()?);
    out.push(witness(
        "type2-diagonal-sum",
        r,
        DerivedType::Sl2R3 { lambda: lambda.clone() },
        iso,
        vec![("rho", rho)],
    )?);

    let mu = int(2);
    let half = rat(1, 2);
    let a1 = Subspace::span(6, &[unit_vector(6, X1), unit_vector(6, X2), v6(&[(H1, int(1)), (H2, int(-1))])])?;
    let a2 = Subspace::span(6, &[unit_vector(6, Y1), unit_vector(6, Y2), v6(&[(H1, int(1)), (H2, mu.clone())])])?;
    let r = split_operator(&n, &a1, &a2, &one)?;
    let basis = [
        v6(&[(H1, half.clone()), (H2, -half.clone())]),
        unit_vector(6, X1),
        unit_vector(6, X2),
        v6(&[(H1, half.clone()), (H2, &half * &mu)]),
        unit_vector(6, Y1),
        unit_vector(6, Y2),
    ];
    out.push(witness(
        "type3-split",
        r,
        DerivedType::R3R3 {
            lambda: int(-1),
            mu: mu.clone(),
        },
        iso_from_basis(&basis)?,
        vec![("mu", mu)],
    )?);

    for (name, lambda, mu) in [
        ("type3-diagonal-sum", int(2), int(3)),
        ("type3-borel-sum", int(0), int(0)),
    ] {
        let (rho1, rho2) = (rho_for_lambda(&lambda)?, rho_for_lambda(&mu)?);
        let (t1, b1) = sl2_triangular(&rho1)?;
        let (t2, b2) = sl2_triangular(&rho2)?;
        let r = diagonal_sum(&t1, &t2)?.on_algebra(n.clone())?;
        let iso = Matrix::block_diagonal(&b1.inverse()?, &b2.inverse()?);
        out.push(witness(
            name,
            r,
            DerivedType::R3R3 { lambda, mu },
            iso,
            vec![("rho1", rho1), ("rho2", rho2)],
        )?);
    }
    Ok(out)
}

fn type4_witness() -> Result<Witness> {
    let n = make_sl2sl2();
    let half = rat(1, 2);
    let y2h1 = v6(&[(Y2, int(1)), (H1, int(1))]);
    let a1 = make_subalgebra(SubalgebraRow::X1H1X2H2, None)?;
    let a2 = Subspace::span(6, &[unit_vector(6, Y1), y2h1.clone()])?;
    let r = split_operator(&n, &a1, &a2, &Rational::one())?;
    let basis = [
        v6(&[(H1, half.clone())]),
        unit_vector(6, X1),
        v6(&[(H2, half.clone())]),
        unit_vector(6, X2),
        scaled(&half, &y2h1),
        unit_vector(6, Y1),
    ];
    witness("type4-split", r, DerivedType::R2Cubed, iso_from_basis(&basis)?, vec![])
}

/// Triangular-split operator with `R = 0` on `a_minus`, `-id` on `a_plus` and the given action on a frame of `A0`.
fn triangular(a_minus: &[Vector], frame: &[Vector], images: &[Vector], a_plus: &[Vector]) -> Result<RBOperator> {
    let spec = TriangularSplitSpec::from_frame(6, a_minus, frame, images, a_plus)?;
    triangular_split(&make_sl2sl2(), &spec, &Rational::one())
}

fn type5_witness() -> Result<Witness> {
    let (nu2, nu4, alpha, rho) = (int(1), int(0), int(1), int(2));
    let one = Rational::one();
    let e = |k| unit_vector(6, k);
    let a_plus = [
        v6(&[(Y1, one.clone()), (H1, nu2.clone()), (X1, -(&nu2 * &nu2))]),
        v6(&[(Y2, one.clone()), (H2, nu4.clone()), (X2, -(&nu4 * &nu4))]),
    ];
    let x6 = v6(&[
        (H2, one.clone()),
        (H1, alpha.clone()),
        (X1, int(-2) * &alpha * &nu2),
        (X2, int(-2) * &nu4),
    ]);
    let r = triangular(&[e(X1), e(H1), e(X2)], std::slice::from_ref(&x6), &[scaled(&rho, &x6)], &a_plus)?;
    let c = -(&rho + &one) / &rho;
    let x2 = v6(&[(H1, rat(-1, 2)), (X1, nu2.clone())]);
    let x6b = scaled(&(int(2) * &rho).recip(), &x6);
    let x6c = scaled(&c.recip(), &lin(&[(one.clone(), &x6b), (&alpha * (&rho + &one) / &rho, &x2)]));
    let basis = [e(X1), x2, e(X2), a_plus[0].clone(), a_plus[1].clone(), x6c];
    witness(
        "type5-triangular",
        r,
        DerivedType::Five {
            alpha: &alpha / &c,
            beta: c.recip(),
        },
        iso_from_basis(&basis)?,
        vec![("nu2", nu2), ("nu4", nu4), ("alpha", alpha), ("rho", rho)],
    )
}

fn type6_witness() -> Result<Witness> {
    let (lambda, nu1, nu2, nu4, rho) = (int(2), int(1), int(1), int(1), int(2));
    let one = Rational::one();
    let e = |k| unit_vector(6, k);
    let a_minus = [e(X1), e(X2), v6(&[(H1, one.clone()), (H2, lambda.clone())])];
    let a_plus = [
        v6(&[(Y1, one.clone()), (X1, nu1.clone()), (H1, nu2.clone())]),
        v6(&[(Y2, one.clone()), (X2, -(&nu4 * &nu4)), (H2, nu4.clone())]),
    ];
    let x6 = v6(&[(H2, one.clone()), (X2, int(-2) * &nu4)]);
    let r = triangular(&a_minus, std::slice::from_ref(&x6), &[scaled(&rho, &x6)], &a_plus)?;
    let x3 = e(X2);
    let x4 = v6(&[(H1, rat(-1, 2)), (H2, -&lambda / int(2))]);
    let x4 = lin(&[(one.clone(), &x4), (&lambda * &nu4 * &rho / (&rho + &one), &x3)]);
    let basis = [
        a_plus[0].clone(),
        e(X1),
        x3,
        x4,
        a_plus[1].clone(),
        v6(&[(H2, -(int(2) * (&rho + &one)).recip())]),
    ];
    witness(
        "type6-triangular",
        r,
        DerivedType::Six {
            lambda: lambda.clone(),
            alpha: -&rho / (&rho + &one),
        },
        iso_from_basis(&basis)?,
        vec![("lambda", lambda), ("nu1", nu1), ("nu2", nu2), ("nu4", nu4), ("rho", rho)],
    )
}

fn type7_triangular_witness() -> Result<Witness> {
    let (lambda, nu2, nu4, rho, alpha) = (int(2), int(1), int(0), int(2), int(1));
    let one = Rational::one();
    let e = |k| unit_vector(6, k);
    let a_minus = [e(X1), e(X2), v6(&[(H1, one.clone()), (H2, lambda.clone())])];
    let a_plus = [
        v6(&[(Y2, one.clone()), (X2, -(&nu4 * &nu4)), (H2, nu4.clone())]),
        v6(&[(Y1, one.clone()), (X1, -(&nu2 * &nu2)), (H1, nu2.clone())]),
    ];
    let x6 = v6(&[
        (H2, one.clone()),
        (X2, int(-2) * &nu4),
        (H1, alpha.clone()),
        (X1, int(-2) * &alpha * &nu2),
    ]);
    let r = triangular(&a_minus, std::slice::from_ref(&x6), &[scaled(&rho, &x6)], &a_plus)?;
    let xs1 = e(X1);
    let xs2 = e(X2);
    let xs3 = v6(&[(H1, rat(-1, 2)), (H2, -&lambda / int(2))]);
    let xs6 = scaled(&-(int(2) * (&rho + &one)).recip(), &x6);
    let delta = -&rho / (&rho + &one);
    let xs6 = scaled(
        &delta.recip(),
        &lin(&[
            (one.clone(), &xs6),
            (-(&alpha * &nu2), &xs1),
            (-nu4.clone(), &xs2),
            (-alpha.clone(), &xs3),
        ]),
    );
    let alpha_p = (&rho + &one) * (&alpha * &lambda - &one) / &rho;
    let basis = [
        xs2,
        xs1,
        scaled(&lambda.recip(), &xs3),
        a_plus[0].clone(),
        a_plus[1].clone(),
        lin(&[(one.clone(), &xs6), (-(&alpha_p / &lambda), &xs3)]),
    ];
    witness(
        "type7-triangular",
        r,
        DerivedType::Seven {
            lambda: lambda.recip(),
            alpha1: -(&alpha_p / &lambda),
            alpha2: alpha.clone(),
        },
        iso_from_basis(&basis)?,
        vec![("lambda", lambda), ("nu2", nu2), ("nu4", nu4), ("rho", rho), ("alpha", alpha)],
    )
}

/// Eigen-data on `A0 = ⟨x5, x6⟩` for the two-block construction.
enum TwoBlock {
    Diagonal { xi1: Rational, xi2: Rational, rho1: Rational, rho2: Rational },
    Jordan { xi: Rational, kappa: Rational, rho: Rational },
}

/// `A- = ⟨X1, X2⟩`, `A+ = ⟨x3, x4⟩`, `A0 = ⟨x5, x6⟩`; returns the operator and the basis
/// `(X1, X2, x3, x4, s5 x5, s6 x6)`.
fn two_block(nu1: &Rational, nu2: &Rational, data: &TwoBlock) -> Result<(RBOperator, [Vector; 6])> {
    let one = Rational::one();
    let e = |k| unit_vector(6, k);
    let quarter = rat(1, 4);
    let half = rat(1, 2);
    let x3 = v6(&[(Y1, one.clone()), (H1, -(nu1 * &half)), (X1, -(nu1 * nu1 * &quarter))]);
    let x4 = v6(&[(Y2, one.clone()), (H2, -(nu2 * &half)), (X2, -(nu2 * nu2 * &quarter))]);
    let h1 = v6(&[(H1, one.clone()), (X1, nu1.clone())]);
    let h2 = v6(&[(H2, one.clone()), (X2, nu2.clone())]);
    let scale = |rho: &Rational| -(int(2) * (&one + rho)).recip();
    let (x5, x6, images, s5, s6) = match data {
        TwoBlock::Diagonal { xi1, xi2, rho1, rho2 } => {
            let x5 = lin(&[(one.clone(), &h1), (xi1.clone(), &h2)]);
            let x6 = lin(&[(one.clone(), &h2), (xi2.clone(), &h1)]);
            let images = vec![scaled(rho1, &x5), scaled(rho2, &x6)];
            (x5, x6, images, scale(rho1), scale(rho2))
        }
        TwoBlock::Jordan { xi, kappa, rho } => {
            let x5 = lin(&[(one.clone(), &h1), (xi.clone(), &h2)]);
            let x6 = scaled(kappa, &h2);
            let images = vec![scaled(rho, &x5), lin(&[(one.clone(), &x5), (rho.clone(), &x6)])];
            (x5, x6, images, scale(rho), scale(rho))
        }
    };
    let r = triangular(&[e(X1), e(X2)], &[x5.clone(), x6.clone()], &images, &[x3.clone(), x4.clone()])?;
    Ok((r, [e(X1), e(X2), x3, x4, scaled(&s5, &x5), scaled(&s6, &x6)]))
}

fn rho_for_gamma(gamma: &Rational) -> Rational {
    -gamma / (gamma + Rational::one())
}

fn two_block_witnesses() -> Result<Vec<Witness>> {
    let one = Rational::one();
    let mut out = Vec::new();

    let (nu1, nu2, xi1, xi2, gamma, delta) = (int(2), int(-2), int(3), int(2), int(2), int(3));
    let data = TwoBlock::Diagonal {
        xi1: xi1.clone(),
        xi2: xi2.clone(),
        rho1: rho_for_gamma(&gamma),
        rho2: rho_for_gamma(&delta),
    };
    let (r, b) = two_block(&nu1, &nu2, &data)?;
    out.push(witness(
        "type8a-triangular",
        r,
        DerivedType::EightA {
            alpha1: xi2.clone(),
            alpha2: xi1.clone(),
            alpha4: gamma.clone(),
            alpha7: delta.clone(),
        },
        iso_from_basis(&b)?,
        vec![("nu1", nu1), ("nu2", nu2), ("xi1", xi1), ("xi2", xi2), ("gamma", gamma), ("delta", delta)],
    )?);

    let (nu1, nu2, gamma, xi, kappa) = (int(2), int(-2), int(1), int(1), int(2));
    let data = TwoBlock::Jordan {
        xi: xi.clone(),
        kappa: kappa.clone(),
        rho: rho_for_gamma(&gamma),
    };
    let (r, b) = two_block(&nu1, &nu2, &data)?;
    out.push(witness(
        "type8b-jordan",
        r,
        DerivedType::EightB {
            alpha1: &gamma + &one,
            alpha2: xi.clone(),
            alpha3: &kappa + &xi + &gamma * &xi,
        },
        iso_from_basis(&b)?,
        vec![("nu1", nu1), ("nu2", nu2), ("gamma", gamma), ("xi", xi), ("kappa", kappa)],
    )?);

    let (nu1, gamma, delta, xi1) = (int(2), int(1), int(2), int(-1));
    let data = TwoBlock::Diagonal {
        xi1: xi1.clone(),
        xi2: Rational::zero(),
        rho1: rho_for_gamma(&gamma),
        rho2: rho_for_gamma(&delta),
    };
    let (r, b) = two_block(&nu1, &Rational::zero(), &data)?;
    let basis = [
        b[1].clone(),
        b[3].clone(),
        b[5].clone(),
        b[0].clone(),
        b[2].clone(),
        lin(&[(one.clone(), &b[4]), (-xi1.clone(), &b[5])]),
    ];
    out.push(witness(
        "type7-two-block",
        r,
        DerivedType::Seven {
            lambda: delta.clone(),
            alpha1: &xi1 * (&gamma - &delta),
            alpha2: gamma.clone(),
        },
        iso_from_basis(&basis)?,
        vec![("nu1", nu1), ("xi1", xi1), ("gamma", gamma), ("delta", delta)],
    )?);
    Ok(out)
}

/// Witnesses for all eight types, in type order.
pub fn witnesses() -> Vec<Witness> {
    let build = || -> Result<Vec<Witness>> {
        let mut out = type1_witnesses()?;
        out.extend(type23_witnesses()?);
        out.push(type4_witness()?);
        out.push(type5_witness()?);
        out.push(type6_witness()?);
        let mut rest = vec![type7_triangular_witness()?];
        rest.extend(two_block_witnesses()?);
        rest.sort_by_key(|w| w.target_type.label());
        out.extend(rest);
        Ok(out)
    };
    build().expect("catalog witnesses are valid")
}

/// The steps of [`verify_witness`], in order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessStep {
    RotaBaxter,
    DerivedBracket,
    KernelIdeals,
    DerivedDimensions,
    TripleDecomposition,
    Fingerprint,
    Isomorphism,
}

impl WitnessStep {
    pub const ALL: [WitnessStep; 7] = [
        WitnessStep::RotaBaxter,
        WitnessStep::DerivedBracket,
        WitnessStep::KernelIdeals,
        WitnessStep::DerivedDimensions,
        WitnessStep::TripleDecomposition,
        WitnessStep::Fingerprint,
        WitnessStep::Isomorphism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WitnessStep::RotaBaxter => "rota-baxter identity",
            WitnessStep::DerivedBracket => "derived bracket",
            WitnessStep::KernelIdeals => "kernel ideals",
            WitnessStep::DerivedDimensions => "derived dimensions",
            WitnessStep::TripleDecomposition => "triple decomposition",
            WitnessStep::Fingerprint => "fingerprint",
            WitnessStep::Isomorphism => "isomorphism",
        }
    }
}

/// Outcome of each step; `None` marks a skipped isomorphism check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub name: String,
    pub steps: Vec<(WitnessStep, Option<bool>)>,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(|(_, ok)| *ok != Some(false))
    }

    pub fn first_failure(&self) -> Option<WitnessStep> {
        self.steps.iter().find(|(_, ok)| *ok == Some(false)).map(|(s, _)| *s)
    }
}

pub fn verify_witness(w: &Witness) -> WitnessReport {
    let r = &w.operator;
    let mut steps = vec![(WitnessStep::RotaBaxter, Some(r.is_rb()))];
    let g = derived_bracket(r).ok();
    steps.push((WitnessStep::DerivedBracket, Some(g.is_some())));
    let ok = |x: Result<bool>| Some(x.unwrap_or(false));
    steps.push((WitnessStep::KernelIdeals, ok(kernel_ideal_checks(r, 2))));
    steps.push((WitnessStep::DerivedDimensions, ok(derived_dim_inequality(r, 6))));
    let triple = triple_decomposition(r).and_then(|t| t.check(r.algebra())).map(|rep| rep.all());
    steps.push((WitnessStep::TripleDecomposition, ok(triple)));
    steps.push((
        WitnessStep::Fingerprint,
        Some(g.as_ref().is_some_and(|g| g.fingerprint() == w.target.fingerprint())),
    ));
    let iso = w.iso.as_ref().map(|phi| {
        g.as_ref()
            .is_some_and(|g| is_lie_isomorphism(phi, g, &w.target).unwrap_or(false))
    });
    steps.push((WitnessStep::Isomorphism, iso));
    WitnessReport {
        name: w.name.to_string(),
        steps,
    }
}

/// A named operator of the catalog together with the algebra it lives on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogOperator {
    pub name: String,
    pub kind: AlgebraKind,
    pub operator: RBOperator,
}

/// Every builtin weight-1 operator: the witnesses plus operators on `sl2` and `r2 ⊕ C`.
pub fn catalog_operators() -> Vec<CatalogOperator> {
    let mut out: Vec<CatalogOperator> = witnesses()
        .into_iter()
        .map(|w| CatalogOperator {
            name: w.name.to_string(),
            kind: AlgebraKind::Sl2Sl2,
            operator: w.operator,
        })
        .collect();
    let one = Rational::one();
    out.push(CatalogOperator {
        name: "r2c-phi".into(),
        kind: AlgebraKind::R2PlusC,
        operator: r2c_phi(&one, &Rational::zero(), &one),
    });
    for (name, rho) in [("sl2-borel-split", int(0)), ("sl2-triangular", rat(-2, 3))] {
        out.push(CatalogOperator {
            name: name.into(),
            kind: AlgebraKind::Sl2,
            operator: sl2_triangular(&rho).expect("rho != -1").0,
        });
    }
    out
}

// ---------------------------------------------------------------------------
// Registry

/// A builtin object addressable by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogEntry {
    Algebra(LieAlgebra),
    Operator(RBOperator),
}

/// Default witness parameters for each type label.
fn default_type(label: &str) -> Option<DerivedType> {
    witnesses()
        .into_iter()
        .find(|w| w.target_type.label() == label)
        .map(|w| w.target_type)
}

/// Names of all builtin entries with a short description.
pub fn entry_names() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = vec![
        ("sl2".into(), "algebra sl2".into()),
        ("sl2+sl2".into(), "algebra sl2 + sl2 in the basis X1 Y1 H1 X2 Y2 H2".into()),
    ];
    for tag in Class3Tag::ALL {
        let param = if tag == Class3Tag::R3Lambda { " (lambda)" } else { "" };
        out.push((format!("dim3-{tag}"), format!("3-dimensional algebra {tag}{param}")));
    }
    for label in ["1", "2", "3", "4", "5", "6", "7", "8a", "8b"] {
        let names = DerivedType::param_names(label).expect("known label");
        let params = if names.is_empty() {
            String::new()
        } else {
            format!(" ({})", names.join(", "))
        };
        out.push((format!("type{label}"), format!("algebra of type ({label}){params}")));
    }
    for op in catalog_operators() {
        let desc = match op.name.as_str() {
            "r2c-phi" => "operator on r2 + C (alpha, beta, gamma)".to_string(),
            "sl2-triangular" => "operator on sl2 (rho)".to_string(),
            _ => format!("operator on {}", kind_name(op.kind)),
        };
        out.push((op.name, desc));
    }
    out
}

fn kind_name(kind: AlgebraKind) -> &'static str {
    match kind {
        AlgebraKind::Sl2 => "sl2",
        AlgebraKind::Sl2Sl2 => "sl2 + sl2",
        AlgebraKind::R2PlusC => "r2 + C",
    }
}

fn take_params(
    name: &str,
    params: &BTreeMap<String, Rational>,
    allowed: &[&str],
) -> Result<()> {
    match params.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::InvalidParameter(format!("{name} has no parameter {k}"))),
        None => Ok(()),
    }
}

/// Looks up a builtin algebra or operator.
pub fn lookup(name: &str, params: &BTreeMap<String, Rational>) -> Result<CatalogEntry> {
    let unknown = || Error::InvalidParameter(format!("unknown catalog entry {name}"));
    if let Some(label) = name.strip_prefix("type") {
        if DerivedType::param_names(label).is_some() {
            let defaults = default_type(label);
            let t = DerivedType::from_label(label, params, defaults.as_ref())?;
            return Ok(CatalogEntry::Algebra(make_type(&t)?));
        }
    }
    if let Some(tag) = name.strip_prefix("dim3-") {
        let tag = Class3Tag::from_name(tag).ok_or_else(unknown)?;
        take_params(name, params, &["lambda"])?;
        return Ok(CatalogEntry::Algebra(make_dim3(tag, params.get("lambda"))?));
    }
    match name {
        "sl2" => {
            take_params(name, params, &[])?;
            return Ok(CatalogEntry::Algebra(make_sl2()));
        }
        "sl2+sl2" => {
            take_params(name, params, &[])?;
            return Ok(CatalogEntry::Algebra(make_sl2sl2()));
        }
        "r2c-phi" => {
            take_params(name, params, &["alpha", "beta", "gamma"])?;
            let one = Rational::one();
            let get = |k: &str, d: &Rational| params.get(k).cloned().unwrap_or_else(|| d.clone());
            let op = r2c_phi(&get("alpha", &one), &get("beta", &Rational::zero()), &get("gamma", &one));
            return Ok(CatalogEntry::Operator(op));
        }
        "sl2-triangular" => {
            take_params(name, params, &["rho"])?;
            let rho = params.get("rho").cloned().unwrap_or_else(|| rat(-2, 3));
            return Ok(CatalogEntry::Operator(sl2_triangular(&rho)?.0));
        }
        _ => {}
    }
    let op = catalog_operators()
        .into_iter()
        .find(|o| o.name == name)
        .ok_or_else(unknown)?;
    take_params(name, params, &[])?;
    Ok(CatalogEntry::Operator(op.operator))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify3;

    #[test]
    fn sl2sl2_brackets() {
        let n = make_sl2sl2();
        assert_eq!(n.basis_bracket(X1, Y1), unit_vector(6, H1).as_slice());
        assert!(crate::linalg::is_zero_vector(n.basis_bracket(X1, X2)));
        assert_eq!(n.basis_bracket(H1, X1), v6(&[(X1, int(2))]).as_slice());
    }

    #[test]
    fn dim3_parameters() {
        assert!(make_dim3(Class3Tag::R3Lambda, None).is_err());
        assert!(make_dim3(Class3Tag::R3Lambda, Some(&int(0))).is_err());
        assert!(make_dim3(Class3Tag::Sl2, Some(&int(1))).is_err());
        let r3 = make_dim3(Class3Tag::R3, None).unwrap();
        assert_eq!(r3.basis_bracket(0, 2), &[int(0), int(1), int(1)]);
        let c = classify3(&make_dim3(Class3Tag::R3Lambda, Some(&int(2))).unwrap()).unwrap();
        assert_eq!(c.j_invariant, Some(rat(9, 2)));
    }

    #[test]
    fn rows_are_subalgebras() {
        let n = make_sl2sl2();
        for row in SubalgebraRow::ALL {
            for a in row_samples(row) {
                let s = make_subalgebra(row, a.as_ref()).unwrap();
                assert_eq!(s.dim(), row.generators(&int(1)).len(), "{row}");
                assert!(n.is_subalgebra(&s).unwrap(), "{row}");
            }
        }
        assert!(make_subalgebra(SubalgebraRow::H1PlusAH2, Some(&int(0))).is_err());
        assert!(make_subalgebra(SubalgebraRow::H1PlusAH2, None).is_err());
        assert!(make_subalgebra(SubalgebraRow::X1, Some(&int(1))).is_err());
    }

    #[test]
    fn omega_is_automorphism() {
        assert!(crate::rota_baxter::is_automorphism(&make_sl2sl2(), &omega()));
        assert_eq!(&omega() * &omega(), Matrix::identity(6));
    }

    #[test]
    fn automorphisms_verify() {
        for kind in [AlgebraKind::Sl2, AlgebraKind::Sl2Sl2, AlgebraKind::R2PlusC] {
            for m in automorphisms(kind) {
                assert!(crate::rota_baxter::is_automorphism(&kind.algebra(), &m), "{kind:?}");
            }
        }
    }

    #[test]
    fn type_constraints() {
        let err = make_type(&DerivedType::Sl2R3 { lambda: int(-1) }).unwrap_err();
        assert_eq!(
            err,
            Error::Constraint {
                ty: 2,
                constraint: "lambda != -1"
            }
        );
        assert!(make_type(&DerivedType::R3R3 {
            lambda: int(-1),
            mu: int(2)
        })
        .is_ok());
    }

    #[test]
    fn type4_is_three_r2() {
        let f = make_type(&DerivedType::R2Cubed).unwrap().fingerprint();
        assert_eq!(f.derived_dims, vec![6, 3, 0]);
        assert_eq!(f.center_dim, 0);
        assert!(!f.unimodular);
    }

    #[test]
    fn witnesses_cover_all_types() {
        let ws = witnesses();
        assert_eq!(ws.len(), 17);
        for k in 1..=8 {
            assert!(ws.iter().any(|w| w.target_type.number() == k));
        }
    }

    #[test]
    fn every_witness_verifies() {
        for w in witnesses() {
            let rep = verify_witness(&w);
            assert!(rep.passed(), "{} failed at {:?}", w.name, rep.first_failure());
        }
    }

    #[test]
    fn registry_lookups() {
        let none = BTreeMap::new();
        for (name, _) in entry_names() {
            assert!(lookup(&name, &none).is_ok() || name == "dim3-r3_lambda", "{name}");
        }
        let mut p = BTreeMap::new();
        p.insert("lambda".to_string(), int(2));
        assert!(lookup("dim3-r3_lambda", &p).is_ok());
        assert!(lookup("nonsense", &none).is_err());
        p.insert("mu".to_string(), int(-1));
        p.insert("lambda".to_string(), int(-1));
        assert!(matches!(lookup("type3", &p), Err(Error::Constraint { ty: 3, .. })));
    }
}
