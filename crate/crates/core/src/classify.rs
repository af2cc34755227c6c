//! Isomorphism certificates and the classification of 3-dimensional Lie algebras.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{homomorphism_failure, LieAlgebra};
use crate::linalg::{discriminant_2x2, format_rational, unit_vector, Matrix, Rational, Subspace, Vector};

/// `φ` is invertible and `φ[x,y]_g = [φx, φy]_h` on all basis pairs.
pub fn is_lie_isomorphism(phi: &Matrix, g: &LieAlgebra, h: &LieAlgebra) -> Result<bool> {
    if !phi.is_square() {
        return Err(Error::NotSquare {
            rows: phi.rows(),
            cols: phi.cols(),
        });
    }
    if g.dim() != h.dim() || phi.rows() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: phi.rows(),
        });
    }
    Ok(phi.is_invertible() && homomorphism_failure(phi, g, h)?.is_none())
}

pub fn fingerprint_equal(g: &LieAlgebra, h: &LieAlgebra) -> bool {
    g.fingerprint() == h.fingerprint()
}

/// Isomorphism classes of complex 3-dimensional Lie algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class3Tag {
    Abelian,
    N3,
    R2PlusC,
    R3,
    R3Lambda,
    Sl2,
}

impl Class3Tag {
    pub const ALL: [Class3Tag; 6] = [
        Class3Tag::Abelian,
        Class3Tag::N3,
        Class3Tag::R2PlusC,
        Class3Tag::R3,
        Class3Tag::R3Lambda,
        Class3Tag::Sl2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Class3Tag::Abelian => "abelian",
            Class3Tag::N3 => "n3",
            Class3Tag::R2PlusC => "r2_plus_C",
            Class3Tag::R3 => "r3",
            Class3Tag::R3Lambda => "r3_lambda",
            Class3Tag::Sl2 => "sl2",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name() == s)
    }
}

impl fmt::Display for Class3Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of [`classify3`]; `j` is set only for `r3_lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Class3 {
    pub tag: Class3Tag,
    pub j_invariant: Option<Rational>,
}

impl fmt::Display for Class3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.j_invariant {
            Some(j) => write!(f, "{}, j = {}", self.tag, format_rational(j)),
            None => write!(f, "{}", self.tag),
        }
    }
}

/// `(1+λ)²/λ`, the same for `λ` and `1/λ`.
pub fn j_invariant(lambda: &Rational) -> Result<Rational> {
    if lambda.is_zero() {
        return Err(Error::InvalidParameter("lambda must be nonzero".into()));
    }
    let s = lambda + Rational::from_integer(1.into());
    Ok(&s * &s / lambda)
}

/// Matrix of `ad(x)` restricted to an invariant 2-dimensional subspace, in its canonical basis.
pub fn restricted_ad(l: &LieAlgebra, x: &[Rational], s: &Subspace) -> Result<Matrix> {
    let cols: Vec<Vector> = s
        .basis()
        .iter()
        .map(|b| {
            s.coordinates(&l.bracket(x, b))?
                .ok_or_else(|| Error::NotSubalgebra("subspace is not ad-invariant".into()))
        })
        .collect::<Result<_>>()?;
    Ok(Matrix::from_columns(s.dim(), &cols))
}

/// The 2×2 invariant deciding between `r3` and `r3_lambda`.
pub fn classify_action(a: &Matrix) -> Result<Class3> {
    let det = a.det()?;
    if det.is_zero() {
        return Err(Error::InvalidParameter("ad action on the derived algebra is singular".into()));
    }
    if discriminant_2x2(a).is_zero() && !a.is_scalar() {
        return Ok(Class3 {
            tag: Class3Tag::R3,
            j_invariant: None,
        });
    }
    let t = a.trace();
    Ok(Class3 {
        tag: Class3Tag::R3Lambda,
        j_invariant: Some(&t * &t / det),
    })
}

pub fn classify3(l: &LieAlgebra) -> Result<Class3> {
    if l.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: l.dim(),
        });
    }
    if let Some((i, j, k)) = l.jacobi_failure() {
        return Err(Error::Jacobi { i, j, k });
    }
    let full = Subspace::full(3);
    let derived = l.bracket_span(&full, &full)?;
    let simple = |tag| Class3 {
        tag,
        j_invariant: None,
    };
    Ok(match derived.dim() {
        0 => simple(Class3Tag::Abelian),
        1 if l.is_nilpotent() => simple(Class3Tag::N3),
        1 => simple(Class3Tag::R2PlusC),
        2 => {
            let x = (0..3)
                .map(|i| unit_vector(3, i))
                .find(|v| !derived.contains(v).expect("same ambient"))
                .expect("proper subspace");
            return classify_action(&restricted_ad(l, &x, &derived)?);
        }
        _ => simple(Class3Tag::Sl2),
    })
}
