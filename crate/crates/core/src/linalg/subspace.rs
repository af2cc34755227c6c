use super::{is_zero_vector, Matrix, Rational, Vector};
use crate::error::{Error, Result};

/// Subspace of `K^n` stored by its reduced row-echelon basis.
///
/// The representation is canonical, so `==` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_rref(Matrix::identity(ambient))
    }

    /// Span of the given vectors.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: v.len(),
            });
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        Ok(Self::from_rref(Matrix::from_rows(vectors.to_vec())))
    }

    fn from_rref(mut m: Matrix) -> Self {
        let ambient = m.cols();
        let pivots = m.rref_pivots();
        let basis = (0..pivots.len()).map(|r| m.row(r).to_vec()).collect();
        Self {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `ambient x dim` matrix whose columns are the canonical basis.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient, &self.basis)
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if n == self.ambient {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: n,
            })
        }
    }

    /// Coordinates of `x` in the canonical basis, or `None` if `x` is not in the subspace.
    pub fn coordinates(&self, x: &[Rational]) -> Result<Option<Vector>> {
        self.check_ambient(x.len())?;
        // pivot entries of an RREF basis read off the coordinates directly
        let coords: Vector = self.pivots.iter().map(|&p| x[p].clone()).collect();
        let mut residual = x.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            super::matrix::axpy(&mut residual, &-c, b);
        }
        Ok(is_zero_vector(&residual).then_some(coords))
    }

    pub fn contains(&self, x: &[Rational]) -> Result<bool> {
        Ok(self.coordinates(x)?.is_some())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        for b in &other.basis {
            if !self.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Self> {
        self.check_ambient(other.ambient)?;
        let all: Vec<Vector> = self.basis.iter().chain(&other.basis).cloned().collect();
        Self::span(self.ambient, &all)
    }

    /// Annihilator under the standard pairing of `K^n` with itself.
    pub fn annihilator(&self) -> Self {
        if self.basis.is_empty() {
            return Self::full(self.ambient);
        }
        Matrix::from_rows(self.basis.clone()).kernel()
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Self> {
        self.check_ambient(other.ambient)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// True iff the sum of `parts` is direct, i.e. the dimensions add up.
    pub fn is_direct_sum(parts: &[Subspace]) -> Result<bool> {
        let Some(first) = parts.first() else {
            return Ok(true);
        };
        let mut total = Self::zero(first.ambient);
        let mut dims = 0;
        for p in parts {
            total = total.sum(p)?;
            dims += p.dim();
        }
        Ok(total.dim() == dims)
    }

    /// Image of the subspace under a linear map.
    pub fn map(&self, m: &Matrix) -> Result<Self> {
        self.check_ambient(m.cols())?;
        let imgs: Vec<Vector> = self.basis.iter().map(|b| m.apply(b)).collect();
        Self::span(m.rows(), &imgs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, unit_vector};

    fn e(n: usize, i: usize) -> Vector {
        unit_vector(n, i)
    }

    #[test]
    fn lattice_basics() {
        let full = Subspace::full(3);
        let u = Subspace::span(3, &[vec![int(1), int(2), int(0)]]).unwrap();
        assert_eq!(full.intersect(&u).unwrap(), u);
        assert_eq!(full.sum(&u).unwrap(), full);

        let a = Subspace::span(3, &[e(3, 0)]).unwrap();
        let b = Subspace::span(3, &[e(3, 1)]).unwrap();
        assert!(a.intersect(&b).unwrap().is_zero());
        assert!(Subspace::is_direct_sum(&[a.clone(), b.clone()]).unwrap());
        assert!(!Subspace::is_direct_sum(&[a.clone(), a.sum(&b).unwrap()]).unwrap());
    }

    #[test]
    fn canonical_representation() {
        let a = Subspace::span(3, &[vec![int(1), int(1), int(0)], vec![int(1), int(-1), int(0)]]).unwrap();
        let b = Subspace::span(3, &[e(3, 0), e(3, 1)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coordinates(&[int(3), int(4), int(0)]).unwrap(), Some(vec![int(3), int(4)]));
        assert_eq!(a.coordinates(&[int(3), int(4), int(1)]).unwrap(), None);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
        assert!(a.contains(&[int(1)]).is_err());
        assert!(Subspace::span(2, &[vec![int(1)]]).is_err());
    }
}
