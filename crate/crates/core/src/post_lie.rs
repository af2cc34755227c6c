//! Post-Lie structures, the derived bracket of a weight-1 operator and its iterates.

use num_traits::One;

use crate::error::{Error, Result};
use crate::lie::{homomorphism_failure, padded_dims, LieAlgebra};
use crate::linalg::{axpy, format_rational, unit_vector, zero_vector, Matrix, Rational, Subspace, Vector};
use crate::rota_baxter::RBOperator;

/// Bilinear product `x·y` on a pair `(g, n)` of brackets on one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PAProduct {
    g: LieAlgebra,
    n: LieAlgebra,
    // table[i * dim + j] = e_i · e_j
    table: Vec<Vector>,
}

/// First axiom violation found by [`PAProduct::check_axioms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PAFailure {
    /// `x·y - y·x = [x,y] - {x,y}`
    Commutator { i: usize, j: usize },
    /// `[x,y]·z = x·(y·z) - y·(x·z)`
    Action { i: usize, j: usize, k: usize },
    /// `x·{y,z} = {x·y,z} + {y,x·z}`
    Derivation { i: usize, j: usize, k: usize },
}

impl PAProduct {
    pub fn from_fn(g: LieAlgebra, n: LieAlgebra, mut f: impl FnMut(usize, usize) -> Vector) -> Result<Self> {
        if g.dim() != n.dim() {
            return Err(Error::DimensionMismatch {
                expected: n.dim(),
                found: g.dim(),
            });
        }
        let d = n.dim();
        let mut table = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let v = f(i, j);
                if v.len() != d {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        found: v.len(),
                    });
                }
                table.push(v);
            }
        }
        Ok(Self { g, n, table })
    }

    pub fn zero(g: LieAlgebra, n: LieAlgebra) -> Result<Self> {
        let d = n.dim();
        Self::from_fn(g, n, |_, _| zero_vector(d))
    }

    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn n(&self) -> &LieAlgebra {
        &self.n
    }

    pub fn dim(&self) -> usize {
        self.n.dim()
    }

    /// `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i * self.dim() + j]
    }

    /// Replaces the coefficient of `e_k` in `e_i · e_j`.
    pub fn set_coefficient(&mut self, i: usize, j: usize, k: usize, c: Rational) {
        let d = self.dim();
        self.table[i * d + j][k] = c;
    }

    pub fn product(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let d = self.dim();
        let mut out = zero_vector(d);
        for (i, a) in x.iter().enumerate() {
            for (j, b) in y.iter().enumerate() {
                axpy(&mut out, &(a * b), &self.table[i * d + j]);
            }
        }
        out
    }

    /// Matrix of `L(x) = x · -`.
    pub fn left_multiplication(&self, x: &[Rational]) -> Matrix {
        let d = self.dim();
        let cols: Vec<Vector> = (0..d).map(|j| self.product(x, &unit_vector(d, j))).collect();
        Matrix::from_columns(d, &cols)
    }

    fn derivation_failure(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        let e = |i| unit_vector(d, i);
        for i in 0..d {
            for j in 0..d {
                for k in j + 1..d {
                    let lhs = self.product(&e(i), self.n.basis_bracket(j, k));
                    let mut rhs = self.n.bracket(self.basis_product(i, j), &e(k));
                    axpy(&mut rhs, &Rational::one(), &self.n.bracket(&e(j), self.basis_product(i, k)));
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First violated axiom on basis pairs and triples.
    pub fn check_axioms(&self) -> Option<PAFailure> {
        let d = self.dim();
        let e = |i| unit_vector(d, i);
        for i in 0..d {
            for j in i + 1..d {
                let mut lhs = self.basis_product(i, j).to_vec();
                axpy(&mut lhs, &-Rational::one(), self.basis_product(j, i));
                let mut rhs = self.g.basis_bracket(i, j).to_vec();
                axpy(&mut rhs, &-Rational::one(), self.n.basis_bracket(i, j));
                if lhs != rhs {
                    return Some(PAFailure::Commutator { i, j });
                }
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                for k in 0..d {
                    let lhs = self.product(self.g.basis_bracket(i, j), &e(k));
                    let mut rhs = self.product(&e(i), self.basis_product(j, k));
                    axpy(&mut rhs, &-Rational::one(), &self.product(&e(j), self.basis_product(i, k)));
                    if lhs != rhs {
                        return Some(PAFailure::Action { i, j, k });
                    }
                }
            }
        }
        self.derivation_failure()
            .map(|(i, j, k)| PAFailure::Derivation { i, j, k })
    }

    pub fn satisfies_axioms(&self) -> bool {
        self.check_axioms().is_none()
    }

    /// Every `L(e_i)` is a derivation of `n`.
    pub fn left_multiplications_are_derivations(&self) -> bool {
        self.derivation_failure().is_none()
    }
}

fn require_weight_one(r: &RBOperator) -> Result<()> {
    if !r.weight().is_one() {
        return Err(Error::WeightNotOne(format_rational(r.weight())));
    }
    Ok(())
}

/// `[x,y]' = [Rx,y] - [Ry,x] + [x,y]` on any bracket, without validation.
pub fn bracket_step(algebra: &LieAlgebra, r: &Matrix) -> LieAlgebra {
    let d = algebra.dim();
    let images: Vec<Vector> = (0..d).map(|i| r.column(i)).collect();
    LieAlgebra::from_fn_unchecked(algebra.labels().to_vec(), |i, j| {
        let mut v = algebra.bracket(&images[i], &unit_vector(d, j));
        axpy(&mut v, &-Rational::one(), &algebra.bracket(&images[j], &unit_vector(d, i)));
        axpy(&mut v, &Rational::one(), algebra.basis_bracket(i, j));
        v
    })
}

/// Checks that `R` and `R + id` are homomorphisms `upper → lower`.
fn check_homomorphisms(r: &Matrix, upper: &LieAlgebra, lower: &LieAlgebra) -> Result<()> {
    let shifted = r.add_scalar(&Rational::one());
    for (name, m) in [("R", r), ("R + id", &shifted)] {
        if let Some((i, j)) = homomorphism_failure(m, upper, lower)? {
            return Err(Error::Homomorphism(format!("{name} on basis pair ({i}, {j})")));
        }
    }
    Ok(())
}

fn checked_step(algebra: &LieAlgebra, r: &Matrix) -> Result<LieAlgebra> {
    let next = bracket_step(algebra, r);
    if let Some((i, j, k)) = next.jacobi_failure() {
        return Err(Error::Jacobi { i, j, k });
    }
    check_homomorphisms(r, &next, algebra)?;
    Ok(next)
}

/// The bracket `g` of a weight-1 operator, with Jacobi and the homomorphism property verified.
pub fn derived_bracket(r: &RBOperator) -> Result<LieAlgebra> {
    require_weight_one(r)?;
    checked_step(r.algebra(), r.matrix())
}

/// `x·y = {Rx, y}` on the pair `(g, n)`.
pub fn inner_pa_from_rb(r: &RBOperator) -> Result<PAProduct> {
    let g = derived_bracket(r)?;
    let n = r.algebra();
    let d = n.dim();
    let images: Vec<Vector> = (0..d).map(|i| r.matrix().column(i)).collect();
    PAProduct::from_fn(g, n.clone(), |i, j| n.bracket(&images[i], &unit_vector(d, j)))
}

/// `g_0 = n, g_1, …` obtained by iterating the derived bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTower {
    pub operator: RBOperator,
    pub levels: Vec<LieAlgebra>,
}

pub fn bracket_tower(r: &RBOperator, depth: usize) -> Result<BracketTower> {
    require_weight_one(r)?;
    let mut levels = vec![r.algebra().clone()];
    for _ in 0..depth {
        let next = checked_step(levels.last().expect("nonempty"), r.matrix())?;
        levels.push(next);
    }
    Ok(BracketTower {
        operator: r.clone(),
        levels,
    })
}

impl BracketTower {
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    /// First `(i, j)` with `ker R^i` or `ker (R+id)^i` not an ideal of `g_j`, `1 ≤ i ≤ j`.
    pub fn kernel_ideal_failure(&self) -> Option<(usize, usize)> {
        let r = self.operator.matrix();
        let one = Rational::one();
        for j in 1..=self.depth() {
            for i in 1..=j {
                let k = i as u32;
                let kernels = [r.pow(k).kernel(), r.add_scalar(&one).pow(k).kernel()];
                for ker in &kernels {
                    if !self.levels[j].is_ideal(ker).expect("same ambient") {
                        return Some((i, j));
                    }
                }
            }
        }
        None
    }
}

/// Kernels of `R^i` and `(R+id)^i` are ideals of every `g_j`, `1 ≤ i ≤ j ≤ depth`.
pub fn kernel_ideal_checks(r: &RBOperator, depth: usize) -> Result<bool> {
    Ok(bracket_tower(r, depth)?.kernel_ideal_failure().is_none())
}

/// `dim g^(i) ≤ dim n^(i)` for `i = 1..=depth`.
pub fn derived_dim_inequality(r: &RBOperator, depth: usize) -> Result<bool> {
    let g = derived_bracket(r)?;
    let gd = padded_dims(&g.fingerprint().derived_dims, depth);
    let nd = padded_dims(&r.algebra().fingerprint().derived_dims, depth);
    Ok(gd.iter().zip(&nd).all(|(a, b)| a <= b))
}

/// `n1 = ker R^d`, `n2 = ker (R+id)^d`, `n3 = im R^d ∩ im (R+id)^d` with `d = dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TripleDecomposition {
    pub n1: Subspace,
    pub n2: Subspace,
    pub n3: Subspace,
}

/// Which of the structural properties of a [`TripleDecomposition`] hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TripleReport {
    pub direct_sum: bool,
    pub n1_stable: bool,
    pub n2_stable: bool,
    pub n3_solvable: bool,
}

impl TripleReport {
    pub fn all(&self) -> bool {
        self.direct_sum && self.n1_stable && self.n2_stable && self.n3_solvable
    }
}

pub fn triple_decomposition(r: &RBOperator) -> Result<TripleDecomposition> {
    require_weight_one(r)?;
    let d = r.dim();
    let p = r.matrix().pow(d as u32);
    let q = r.matrix().add_scalar(&Rational::one()).pow(d as u32);
    Ok(TripleDecomposition {
        n1: p.kernel(),
        n2: q.kernel(),
        n3: p.image().intersect(&q.image())?,
    })
}

impl TripleDecomposition {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.n1.dim(), self.n2.dim(), self.n3.dim())
    }

    /// Checks the decomposition against the bracket of `n`.
    pub fn check(&self, n: &LieAlgebra) -> Result<TripleReport> {
        let parts = [self.n1.clone(), self.n2.clone(), self.n3.clone()];
        let direct_sum =
            Subspace::is_direct_sum(&parts)? && parts.iter().map(Subspace::dim).sum::<usize>() == n.dim();
        let n1_stable = self.n1.contains_subspace(&n.bracket_span(&self.n1, &self.n3)?)?;
        let n2_stable = self.n2.contains_subspace(&n.bracket_span(&self.n2, &self.n3)?)?;
        let n3_solvable = n.is_subalgebra(&self.n3)? && n.restrict(&self.n3)?.is_solvable();
        Ok(TripleReport {
            direct_sum,
            n1_stable,
            n2_stable,
            n3_solvable,
        })
    }
}

/// Kernel dimensions and the consistency conditions relating them to `g` and `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DichotomyReport {
    pub ker_r: usize,
    pub ker_r_plus_id: usize,
    pub same_fingerprint: bool,
    pub n_solvable: bool,
}

impl DichotomyReport {
    /// Different fingerprints force both kernels nontrivial; nonsolvable `n` forces one.
    pub fn consistent(&self) -> bool {
        let both = self.ker_r > 0 && self.ker_r_plus_id > 0;
        let one = self.ker_r > 0 || self.ker_r_plus_id > 0;
        (self.same_fingerprint || both) && (self.n_solvable || one)
    }
}

pub fn kernel_dichotomy_check(r: &RBOperator) -> Result<DichotomyReport> {
    let g = derived_bracket(r)?;
    let n = r.algebra();
    Ok(DichotomyReport {
        ker_r: r.matrix().kernel().dim(),
        ker_r_plus_id: r.matrix().add_scalar(&Rational::one()).kernel().dim(),
        same_fingerprint: g.fingerprint() == n.fingerprint(),
        n_solvable: n.is_solvable(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use crate::rota_baxter::{double_construction, split_operator, DoubleVariant};

    fn sl2() -> LieAlgebra {
        LieAlgebra::builder(3)
            .bracket(0, 1, &[(2, int(1))])
            .bracket(0, 2, &[(0, int(-2))])
            .bracket(1, 2, &[(1, int(2))])
            .build()
            .unwrap()
    }

    fn borel_split() -> RBOperator {
        let d = 3;
        let a1 = Subspace::span(d, &[unit_vector(d, 0), unit_vector(d, 2)]).unwrap();
        let a2 = Subspace::span(d, &[unit_vector(d, 1)]).unwrap();
        split_operator(&sl2(), &a1, &a2, &int(1)).unwrap()
    }

    #[test]
    fn zero_operator_gives_same_bracket() {
        let r = RBOperator::zero(sl2(), int(1));
        assert_eq!(derived_bracket(&r).unwrap(), sl2());
        let p = inner_pa_from_rb(&r).unwrap();
        assert!(p.satisfies_axioms());
        assert_eq!(p, PAProduct::zero(sl2(), sl2()).unwrap());
        let t = bracket_tower(&r, 3).unwrap();
        assert!(t.levels.iter().all(|l| l == &sl2()));
    }

    #[test]
    fn zero_product_requires_equal_brackets() {
        assert!(PAProduct::zero(sl2(), sl2()).unwrap().satisfies_axioms());
        let p = PAProduct::zero(sl2().opposite(), sl2()).unwrap();
        assert_eq!(p.check_axioms(), Some(PAFailure::Commutator { i: 0, j: 1 }));
        assert!(p.left_multiplications_are_derivations());
    }

    #[test]
    fn negative_identity_alternates() {
        let r = RBOperator::negative_identity(sl2(), int(1));
        let t = bracket_tower(&r, 4).unwrap();
        for (k, l) in t.levels.iter().enumerate() {
            let expected = if k % 2 == 0 { sl2() } else { sl2().opposite() };
            assert_eq!(l, &expected);
        }
        let rep = kernel_dichotomy_check(&r).unwrap();
        assert_eq!((rep.ker_r, rep.ker_r_plus_id), (0, 3));
        assert!(rep.same_fingerprint && rep.consistent());
    }

    #[test]
    fn weight_must_be_one() {
        let r = RBOperator::zero(sl2(), int(2));
        assert_eq!(derived_bracket(&r), Err(Error::WeightNotOne("2".into())));
        assert!(bracket_tower(&r, 1).is_err());
        assert!(triple_decomposition(&r).is_err());
    }

    #[test]
    fn split_operator_structures() {
        let r = borel_split();
        let p = inner_pa_from_rb(&r).unwrap();
        assert!(p.satisfies_axioms());
        assert!(p.left_multiplications_are_derivations());
        let mut bad = p.clone();
        let c = bad.basis_product(2, 0)[0].clone() + int(1);
        bad.set_coefficient(2, 0, 0, c);
        assert!(!bad.left_multiplications_are_derivations());
        assert!(!bad.satisfies_axioms());

        let t = triple_decomposition(&r).unwrap();
        assert_eq!(t.dims(), (2, 1, 0));
        assert!(t.check(r.algebra()).unwrap().all());
        assert!(kernel_ideal_checks(&r, 3).unwrap());
        assert!(derived_dim_inequality(&r, 6).unwrap());
        assert!(kernel_dichotomy_check(&r).unwrap().consistent());
    }

    #[test]
    fn nilpotent_double_is_semisimple() {
        let r = double_construction(&sl2(), &Matrix::identity(3), DoubleVariant::Nilpotent).unwrap();
        let g = derived_bracket(&r).unwrap();
        assert_eq!(g.fingerprint().killing_rank, 6);
        let rep = kernel_dichotomy_check(&r).unwrap();
        assert_eq!((rep.ker_r, rep.ker_r_plus_id), (3, 0));
        assert!(rep.consistent());
        assert!(r.on_algebra(g).unwrap().is_rb());
    }
}
