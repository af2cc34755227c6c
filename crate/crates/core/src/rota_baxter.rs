//! Rota–Baxter operators on Lie algebras and their standard constructions.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::{homomorphism_failure, LieAlgebra};
use crate::linalg::{axpy, format_rational, is_zero_vector, unit_vector, zero_vector, Matrix, Rational, Subspace, Vector};

/// A linear map `R` on a Lie algebra `n` together with its weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RBOperator {
    algebra: LieAlgebra,
    matrix: Matrix,
    weight: Rational,
}

fn check_shape(n: &LieAlgebra, m: &Matrix) -> Result<()> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() != n.dim() {
        return Err(Error::DimensionMismatch {
            expected: n.dim(),
            found: m.rows(),
        });
    }
    Ok(())
}

/// First basis pair `i < j` where `{Rx,Ry} = R({Rx,y} + {x,Ry} + λ{x,y})` fails.
pub fn rb_identity_failure(
    n: &LieAlgebra,
    r: &Matrix,
    weight: &Rational,
) -> Result<Option<(usize, usize)>> {
    check_shape(n, r)?;
    let d = n.dim();
    let images: Vec<Vector> = (0..d).map(|i| r.column(i)).collect();
    for i in 0..d {
        for j in i + 1..d {
            let lhs = n.bracket(&images[i], &images[j]);
            let mut inner = n.bracket(&images[i], &unit_vector(d, j));
            axpy(&mut inner, &Rational::one(), &n.bracket(&unit_vector(d, i), &images[j]));
            axpy(&mut inner, weight, n.basis_bracket(i, j));
            if lhs != r.apply(&inner) {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

pub fn is_rb_operator(n: &LieAlgebra, r: &Matrix, weight: &Rational) -> Result<bool> {
    Ok(rb_identity_failure(n, r, weight)?.is_none())
}

/// Number of basis pairs the identity is checked on.
pub fn basis_pair_count(dim: usize) -> usize {
    dim * dim.saturating_sub(1) / 2
}

/// First basis pair where `ψ` fails to preserve the bracket, or an error if `ψ` is singular.
fn check_automorphism(n: &LieAlgebra, psi: &Matrix) -> Result<()> {
    check_shape(n, psi)?;
    if !psi.is_invertible() {
        return Err(Error::Singular);
    }
    match homomorphism_failure(psi, n, n)? {
        Some((i, j)) => Err(Error::NotAutomorphism { i, j }),
        None => Ok(()),
    }
}

pub fn is_automorphism(n: &LieAlgebra, psi: &Matrix) -> bool {
    check_automorphism(n, psi).is_ok()
}

impl RBOperator {
    /// Builds the operator after checking the identity on every basis pair.
    pub fn new(algebra: LieAlgebra, matrix: Matrix, weight: Rational) -> Result<Self> {
        if let Some((i, j)) = rb_identity_failure(&algebra, &matrix, &weight)? {
            return Err(Error::NotRotaBaxter { i, j });
        }
        Ok(Self {
            algebra,
            matrix,
            weight,
        })
    }

    /// Builds the operator checking only the shape.
    pub fn new_unchecked(algebra: LieAlgebra, matrix: Matrix, weight: Rational) -> Result<Self> {
        check_shape(&algebra, &matrix)?;
        Ok(Self {
            algebra,
            matrix,
            weight,
        })
    }

    pub fn zero(algebra: LieAlgebra, weight: Rational) -> Self {
        let d = algebra.dim();
        Self {
            algebra,
            matrix: Matrix::zeros(d, d),
            weight,
        }
    }

    /// The trivial nonzero operator `-λ id`.
    pub fn negative_identity(algebra: LieAlgebra, weight: Rational) -> Self {
        let d = algebra.dim();
        Self {
            algebra,
            matrix: Matrix::scalar(d, &-&weight),
            weight,
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn weight(&self) -> &Rational {
        &self.weight
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn identity_failure(&self) -> Option<(usize, usize)> {
        rb_identity_failure(&self.algebra, &self.matrix, &self.weight).expect("shape checked")
    }

    pub fn is_rb(&self) -> bool {
        self.identity_failure().is_none()
    }

    pub fn verify(&self) -> Result<()> {
        match self.identity_failure() {
            Some((i, j)) => Err(Error::NotRotaBaxter { i, j }),
            None => Ok(()),
        }
    }

    /// `R + c id`.
    pub fn shifted(&self, c: &Rational) -> Matrix {
        self.matrix.add_scalar(c)
    }

    /// `-R - λ id`, again an operator of weight `λ`.
    pub fn phi_involution(&self) -> Self {
        Self {
            algebra: self.algebra.clone(),
            matrix: (-&self.matrix).add_scalar(&-&self.weight),
            weight: self.weight.clone(),
        }
    }

    /// `λ⁻¹ R` at weight 1.
    pub fn rescale_to_weight_one(&self) -> Result<Self> {
        if self.weight.is_zero() {
            return Err(Error::ZeroWeight);
        }
        Ok(Self {
            algebra: self.algebra.clone(),
            matrix: self.matrix.scale(&self.weight.recip()),
            weight: Rational::one(),
        })
    }

    /// `ψ⁻¹ R ψ` for an automorphism `ψ` of the algebra.
    pub fn conjugate(&self, psi: &Matrix) -> Result<Self> {
        check_automorphism(&self.algebra, psi)?;
        let inv = psi.inverse()?;
        Ok(Self {
            algebra: self.algebra.clone(),
            matrix: &(&inv * &self.matrix) * psi,
            weight: self.weight.clone(),
        })
    }

    /// Whether `R(R + λ id) = 0`.
    pub fn is_split(&self) -> Result<bool> {
        if self.weight.is_zero() {
            return Err(Error::ZeroWeight);
        }
        Ok((&self.matrix * &self.shifted(&self.weight)).is_zero())
    }

    /// `(ker R, ker (R + λ id))` for a split operator.
    pub fn split_decomposition(&self) -> Result<Option<(Subspace, Subspace)>> {
        if !self.is_split()? {
            return Ok(None);
        }
        Ok(Some((self.matrix.kernel(), self.shifted(&self.weight).kernel())))
    }

    /// Operator matrix raised to `k`, shifted first by `c`.
    pub fn shifted_power(&self, c: &Rational, k: u32) -> Matrix {
        self.shifted(c).pow(k)
    }

    /// Same matrix and weight on another algebra structure of equal dimension.
    pub fn on_algebra(&self, algebra: LieAlgebra) -> Result<Self> {
        Self::new_unchecked(algebra, self.matrix.clone(), self.weight.clone())
    }
}

/// Operator whose value on each column of `basis` is the corresponding column of `images`.
pub fn operator_from_basis_images(basis: &[Vector], images: &[Vector]) -> Result<Matrix> {
    let d = basis.len();
    if images.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: images.len(),
        });
    }
    let b = Matrix::from_columns(d, basis);
    let inv = b.inverse()?;
    Ok(&Matrix::from_columns(d, images) * &inv)
}

fn require_subalgebra(n: &LieAlgebra, s: &Subspace, name: &str) -> Result<()> {
    if !n.is_subalgebra(s)? {
        return Err(Error::NotSubalgebra(name.to_string()));
    }
    Ok(())
}

/// `R(a1 + a2) = -λ a2` for a direct decomposition into subalgebras `A1 ∔ A2`.
pub fn split_operator(n: &LieAlgebra, a1: &Subspace, a2: &Subspace, weight: &Rational) -> Result<RBOperator> {
    require_subalgebra(n, a1, "A1")?;
    require_subalgebra(n, a2, "A2")?;
    if !Subspace::is_direct_sum(&[a1.clone(), a2.clone()])? || a1.dim() + a2.dim() != n.dim() {
        return Err(Error::NotDirectSum);
    }
    let d = n.dim();
    let basis: Vec<Vector> = a1.basis().iter().chain(a2.basis()).cloned().collect();
    let images: Vec<Vector> = a1
        .basis()
        .iter()
        .map(|_| zero_vector(d))
        .chain(a2.basis().iter().map(|v| v.iter().map(|x| -(x * weight)).collect()))
        .collect();
    let m = operator_from_basis_images(&basis, &images)?;
    RBOperator::new(n.clone(), m, weight.clone())
}

/// Block-diagonal operator on the direct sum of the two algebras.
pub fn diagonal_sum(r1: &RBOperator, r2: &RBOperator) -> Result<RBOperator> {
    if r1.weight != r2.weight {
        return Err(Error::WeightMismatch(format_rational(&r1.weight), format_rational(&r2.weight)));
    }
    RBOperator::new(
        r1.algebra.direct_sum(&r2.algebra),
        Matrix::block_diagonal(&r1.matrix, &r2.matrix),
        r1.weight.clone(),
    )
}

/// The two weight-1 operator families on `s ⊕ s` built from an automorphism `ψ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DoubleVariant {
    /// `(a1, a2) ↦ (0, ψ a1)`
    Nilpotent,
    /// `(a1, a2) ↦ (-a1, -ψ a1)`
    Negative,
}

pub fn double_construction(s: &LieAlgebra, psi: &Matrix, variant: DoubleVariant) -> Result<RBOperator> {
    check_automorphism(s, psi)?;
    let d = s.dim();
    let mut m = Matrix::zeros(2 * d, 2 * d);
    for r in 0..d {
        for c in 0..d {
            let v = &psi[(r, c)];
            m[(d + r, c)] = match variant {
                DoubleVariant::Nilpotent => v.clone(),
                DoubleVariant::Negative => -v,
            };
        }
        if variant == DoubleVariant::Negative {
            m[(r, r)] = -Rational::one();
        }
    }
    RBOperator::new(s.direct_sum(s), m, Rational::one())
}

/// Three complementary subalgebras and an operator on the middle one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularSplitSpec {
    pub a_minus: Subspace,
    pub a_zero: Subspace,
    pub a_plus: Subspace,
    /// Acts on coordinates with respect to the canonical basis of `a_zero`.
    pub r_zero: Matrix,
}

impl TriangularSplitSpec {
    /// Builds the spec from eigen-data: `images[k]` is the value of the operator on `a_zero_frame[k]`.
    pub fn from_frame(
        ambient: usize,
        a_minus: &[Vector],
        a_zero_frame: &[Vector],
        a_zero_images: &[Vector],
        a_plus: &[Vector],
    ) -> Result<Self> {
        let a_zero = Subspace::span(ambient, a_zero_frame)?;
        if a_zero.dim() != a_zero_frame.len() || a_zero_images.len() != a_zero_frame.len() {
            return Err(Error::InvalidParameter("A0 frame is not a basis".into()));
        }
        let to_coords = |v: &Vector| -> Result<Vector> {
            a_zero
                .coordinates(v)?
                .ok_or_else(|| Error::InvalidParameter("A0 image leaves A0".into()))
        };
        let frame: Vec<Vector> = a_zero_frame.iter().map(to_coords).collect::<Result<_>>()?;
        let images: Vec<Vector> = a_zero_images.iter().map(to_coords).collect::<Result<_>>()?;
        let r_zero = operator_from_basis_images(&frame, &images)?;
        Ok(Self {
            a_minus: Subspace::span(ambient, a_minus)?,
            a_zero,
            a_plus: Subspace::span(ambient, a_plus)?,
            r_zero,
        })
    }
}

/// `0` on `A-`, `R0` on `A0`, `-λ id` on `A+`.
pub fn triangular_split(n: &LieAlgebra, spec: &TriangularSplitSpec, weight: &Rational) -> Result<RBOperator> {
    let TriangularSplitSpec {
        a_minus,
        a_zero,
        a_plus,
        r_zero,
    } = spec;
    require_subalgebra(n, a_minus, "A-")?;
    require_subalgebra(n, a_zero, "A0")?;
    require_subalgebra(n, a_plus, "A+")?;
    let parts = [a_minus.clone(), a_zero.clone(), a_plus.clone()];
    if !Subspace::is_direct_sum(&parts)? || parts.iter().map(Subspace::dim).sum::<usize>() != n.dim() {
        return Err(Error::NotDirectSum);
    }
    if r_zero.rows() != a_zero.dim() || r_zero.cols() != a_zero.dim() {
        return Err(Error::DimensionMismatch {
            expected: a_zero.dim(),
            found: r_zero.rows(),
        });
    }
    let inner = n.restrict(a_zero)?;
    if let Some((i, j)) = rb_identity_failure(&inner, r_zero, weight)? {
        return Err(Error::ModuleCondition(format!(
            "operator on A0 fails the identity on pair ({i}, {j})"
        )));
    }
    let lift = |coords: &Vector| -> Vector {
        let mut v = zero_vector(n.dim());
        for (c, b) in coords.iter().zip(a_zero.basis()) {
            axpy(&mut v, c, b);
        }
        v
    };
    let zero_images: Vec<Vector> = (0..a_zero.dim()).map(|k| lift(&r_zero.column(k))).collect();
    let shifted_images: Vec<Vector> = (0..a_zero.dim())
        .map(|k| lift(&r_zero.add_scalar(weight).column(k)))
        .collect();
    let acting = |images: &[Vector], target: &Subspace| -> Result<bool> {
        let span = Subspace::span(n.dim(), images)?;
        target.contains_subspace(&n.bracket_span(&span, target)?)
    };
    if !acting(&shifted_images, a_minus)? {
        return Err(Error::ModuleCondition("A- is not stable under (R0 + λ id)(A0)".into()));
    }
    if !acting(&zero_images, a_plus)? {
        return Err(Error::ModuleCondition("A+ is not stable under R0(A0)".into()));
    }
    let d = n.dim();
    let basis: Vec<Vector> = a_minus
        .basis()
        .iter()
        .chain(a_zero.basis())
        .chain(a_plus.basis())
        .cloned()
        .collect();
    let images: Vec<Vector> = a_minus
        .basis()
        .iter()
        .map(|_| zero_vector(d))
        .chain(zero_images)
        .chain(a_plus.basis().iter().map(|v| v.iter().map(|x| -(x * weight)).collect()))
        .collect();
    let m = operator_from_basis_images(&basis, &images)?;
    RBOperator::new(n.clone(), m, weight.clone())
}

/// Weight-1 split operators for every ordered pair of candidates forming a direct decomposition.
pub fn enumerate_split_operators(n: &LieAlgebra, candidates: &[Subspace]) -> Result<Vec<RBOperator>> {
    for (k, c) in candidates.iter().enumerate() {
        require_subalgebra(n, c, &format!("candidate {k}"))?;
    }
    let one = Rational::one();
    let mut out = Vec::new();
    for a1 in candidates {
        for a2 in candidates {
            if a1.dim() + a2.dim() != n.dim() || !a1.intersect(a2)?.is_zero() {
                continue;
            }
            out.push(split_operator(n, a1, a2, &one)?);
        }
    }
    Ok(out)
}

/// Eigenvalue of `v` under `m`, if `v` is an eigenvector.
pub fn eigenvalue_of(m: &Matrix, v: &[Rational]) -> Option<Rational> {
    if is_zero_vector(v) {
        return None;
    }
    let w = m.apply(v);
    let k = v.iter().position(|x| !x.is_zero())?;
    let c = &w[k] / &v[k];
    (w.iter().zip(v).all(|(a, b)| *a == &c * b)).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};

    fn sl2() -> LieAlgebra {
        LieAlgebra::builder(3)
            .bracket(0, 1, &[(2, int(1))])
            .bracket(0, 2, &[(0, int(-2))])
            .bracket(1, 2, &[(1, int(2))])
            .build()
            .unwrap()
    }

    fn span(d: usize, idx: &[usize]) -> Subspace {
        Subspace::span(d, &idx.iter().map(|&i| unit_vector(d, i)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn trivial_operators() {
        for w in [int(1), int(3), rat(-1, 2)] {
            assert!(RBOperator::zero(sl2(), w.clone()).is_rb());
            let neg = RBOperator::negative_identity(sl2(), w.clone());
            assert!(neg.is_rb());
            assert!(neg.is_split().unwrap());
            assert_eq!(RBOperator::zero(sl2(), w.clone()).phi_involution(), neg);
        }
        let plus = Matrix::identity(3);
        assert!(!is_rb_operator(&sl2(), &plus, &int(1)).unwrap());
    }

    #[test]
    fn rescale() {
        let neg = RBOperator::negative_identity(sl2(), int(3));
        let one = neg.rescale_to_weight_one().unwrap();
        assert_eq!(one.matrix(), &Matrix::scalar(3, &int(-1)));
        assert_eq!(RBOperator::zero(sl2(), int(0)).rescale_to_weight_one(), Err(Error::ZeroWeight));
    }

    #[test]
    fn split_on_abelian_plane() {
        let n = LieAlgebra::abelian(2);
        let r = split_operator(&n, &span(2, &[0]), &span(2, &[1]), &int(1)).unwrap();
        assert_eq!(r.matrix().kernel(), span(2, &[0]));
        assert!(r.is_split().unwrap());
        let (a1, a2) = r.split_decomposition().unwrap().unwrap();
        assert_eq!((a1, a2), (span(2, &[0]), span(2, &[1])));
    }

    #[test]
    fn split_rejects_bad_input() {
        let n = sl2();
        assert_eq!(
            split_operator(&n, &span(3, &[0, 1]), &span(3, &[2]), &int(1)),
            Err(Error::NotSubalgebra("A1".into()))
        );
        assert_eq!(
            split_operator(&n, &span(3, &[0, 2]), &span(3, &[0]), &int(1)),
            Err(Error::NotDirectSum)
        );
    }

    #[test]
    fn borel_split_on_sl2() {
        let n = sl2();
        let r = split_operator(&n, &span(3, &[0, 2]), &span(3, &[1]), &int(2)).unwrap();
        assert!(r.is_split().unwrap());
        assert!(r.phi_involution().is_rb());
        assert_eq!(r.phi_involution().phi_involution(), r);
    }

    #[test]
    fn conjugation_checks_automorphism() {
        let n = sl2();
        let r = split_operator(&n, &span(3, &[0, 2]), &span(3, &[1]), &int(1)).unwrap();
        let chevalley = Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]);
        let c = r.conjugate(&chevalley).unwrap();
        assert!(c.is_rb());
        assert_eq!(r.conjugate(&Matrix::identity(3)).unwrap(), r);
        assert_eq!(
            r.conjugate(&Matrix::diagonal(&[int(1), int(1), int(2)])),
            Err(Error::NotAutomorphism { i: 0, j: 1 })
        );
        assert_eq!(r.conjugate(&Matrix::zeros(3, 3)), Err(Error::Singular));
    }

    #[test]
    fn double_constructions() {
        let n = sl2();
        let id = Matrix::identity(3);
        let nil = double_construction(&n, &id, DoubleVariant::Nilpotent).unwrap();
        assert!(nil.matrix().pow(2).is_zero());
        assert!(double_construction(&n, &id, DoubleVariant::Negative).unwrap().is_rb());
        let c = LieAlgebra::abelian(1);
        for v in [DoubleVariant::Nilpotent, DoubleVariant::Negative] {
            assert!(double_construction(&c, &Matrix::identity(1), v).unwrap().is_rb());
        }
        assert!(double_construction(&n, &Matrix::scalar(3, &int(2)), DoubleVariant::Nilpotent).is_err());
    }

    #[test]
    fn diagonal_sum_weights() {
        let a = RBOperator::zero(sl2(), int(1));
        let b = RBOperator::negative_identity(sl2(), int(1));
        let s = diagonal_sum(&a, &b).unwrap();
        assert_eq!(s.matrix().kernel(), span(6, &[0, 1, 2]));
        assert!(s.is_split().unwrap());
        assert!(matches!(
            diagonal_sum(&a, &RBOperator::zero(sl2(), int(2))),
            Err(Error::WeightMismatch(..))
        ));
    }

    #[test]
    fn triangular_split_reduces_to_split() {
        let n = sl2();
        let spec = TriangularSplitSpec {
            a_minus: span(3, &[0, 2]),
            a_zero: Subspace::zero(3),
            a_plus: span(3, &[1]),
            r_zero: Matrix::zeros(0, 0),
        };
        let t = triangular_split(&n, &spec, &int(1)).unwrap();
        let s = split_operator(&n, &span(3, &[0, 2]), &span(3, &[1]), &int(1)).unwrap();
        assert_eq!(t, s);
    }

    #[test]
    fn triangular_split_on_sl2() {
        // X ↦ 0, H ↦ ρH, Y ↦ -Y
        let n = sl2();
        let rho = rat(-2, 3);
        let spec = TriangularSplitSpec::from_frame(
            3,
            &[unit_vector(3, 0)],
            &[unit_vector(3, 2)],
            &[vec![int(0), int(0), rho.clone()]],
            &[unit_vector(3, 1)],
        )
        .unwrap();
        let t = triangular_split(&n, &spec, &int(1)).unwrap();
        assert_eq!(eigenvalue_of(t.matrix(), &unit_vector(3, 2)), Some(rho));
        assert!(!t.is_split().unwrap());
    }

    #[test]
    fn triangular_split_module_condition() {
        // {Y, X} = -H leaves A- = <X>
        let n = sl2();
        let spec = TriangularSplitSpec {
            a_minus: span(3, &[0]),
            a_zero: span(3, &[1]),
            a_plus: span(3, &[2]),
            r_zero: Matrix::zeros(1, 1),
        };
        assert!(triangular_split(&n, &spec, &int(1)).is_err());
    }

    #[test]
    fn enumeration_counts_ordered_pairs() {
        let n = sl2();
        let ops = enumerate_split_operators(&n, &[Subspace::full(3), Subspace::zero(3)]).unwrap();
        assert_eq!(ops.len(), 2);
        assert!(ops[0].matrix().is_zero());
        assert_eq!(ops[1].matrix(), &Matrix::scalar(3, &int(-1)));
    }

    #[test]
    fn eigenvalue_helper() {
        let m = Matrix::diagonal(&[int(1), int(2)]);
        assert_eq!(eigenvalue_of(&m, &[int(0), int(3)]), Some(int(2)));
        assert_eq!(eigenvalue_of(&m, &[int(1), int(1)]), None);
    }
}
