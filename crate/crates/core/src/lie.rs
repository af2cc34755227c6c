//! Finite-dimensional Lie algebras given by structure constants.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vector, unit_vector, zero_vector, Matrix, Rational, Subspace, Vector};

/// Lie algebra on `K^dim` with the bracket of basis vectors stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    // table[i * dim + j] = [e_i, e_j]
    table: Vec<Vector>,
}

/// Accumulates structure constants `[e_i, e_j] = sum c e_k`.
#[derive(Clone, Debug)]
pub struct Builder {
    labels: Vec<String>,
    table: Vec<Vector>,
    error: Option<Error>,
}

impl Builder {
    /// Adds `terms` to `[e_i, e_j]` (and the negative to `[e_j, e_i]`).
    pub fn bracket(mut self, i: usize, j: usize, terms: &[(usize, Rational)]) -> Self {
        let d = self.labels.len();
        if self.error.is_some() {
            return self;
        }
        if i >= d || j >= d || i == j {
            self.error = Some(Error::InvalidBracket {
                i,
                j,
                reason: "indices must be distinct and below the dimension".into(),
            });
            return self;
        }
        for (k, c) in terms {
            if *k >= d {
                self.error = Some(Error::InvalidBracket {
                    i,
                    j,
                    reason: format!("term index {k} out of range"),
                });
                return self;
            }
            self.table[i * d + j][*k] += c;
            self.table[j * d + i][*k] -= c;
        }
        self
    }

    /// Validates the Jacobi identity and returns the algebra.
    pub fn build(self) -> Result<LieAlgebra> {
        if let Some(e) = self.error {
            return Err(e);
        }
        let alg = LieAlgebra {
            labels: self.labels,
            table: self.table,
        };
        match alg.jacobi_failure() {
            Some((i, j, k)) => Err(Error::Jacobi { i, j, k }),
            None => Ok(alg),
        }
    }
}

/// Isomorphism invariants of a Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dim: usize,
    /// `dim g^(i)` for `g^(1) = g`, listed until the series stabilizes.
    pub derived_dims: Vec<usize>,
    /// Lower central series dimensions until stabilization.
    pub lcs_dims: Vec<usize>,
    pub center_dim: usize,
    pub killing_rank: usize,
    pub unimodular: bool,
    pub solvable: bool,
    pub nilpotent: bool,
}

fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

impl LieAlgebra {
    pub fn builder(dim: usize) -> Builder {
        Self::builder_with_labels(default_labels(dim))
    }

    pub fn builder_with_labels(labels: Vec<String>) -> Builder {
        let d = labels.len();
        Builder {
            labels,
            table: vec![zero_vector(d); d * d],
            error: None,
        }
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            labels: default_labels(dim),
            table: vec![zero_vector(dim); dim * dim],
        }
    }

    /// Builds the algebra whose bracket on `e_i, e_j` (`i < j`) is `f(i, j)`.
    ///
    /// The Jacobi identity is not checked here.
    pub fn from_fn_unchecked(labels: Vec<String>, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let d = labels.len();
        let mut table = vec![zero_vector(d); d * d];
        for i in 0..d {
            for j in i + 1..d {
                let v = f(i, j);
                assert_eq!(v.len(), d, "bracket vector length");
                table[j * d + i] = v.iter().map(|x| -x).collect();
                table[i * d + j] = v;
            }
        }
        Self { labels, table }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim(), "label count");
        self.labels = labels;
        self
    }

    /// `[e_i, e_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i * self.dim() + j]
    }

    /// Bilinear bracket. Panics if the vectors have the wrong length.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let d = self.dim();
        assert!(x.len() == d && y.len() == d, "vector length does not match dimension {d}");
        let mut out = zero_vector(d);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                axpy(&mut out, &(a * b), &self.table[i * d + j]);
            }
        }
        out
    }

    pub fn checked_bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    found: v.len(),
                });
            }
        }
        Ok(self.bracket(x, y))
    }

    /// First basis triple `i < j < k` violating the Jacobi identity.
    pub fn jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let mut s = self.bracket(self.basis_bracket(i, j), &unit_vector(d, k));
                    let t = self.bracket(self.basis_bracket(j, k), &unit_vector(d, i));
                    let u = self.bracket(self.basis_bracket(k, i), &unit_vector(d, j));
                    for ((a, b), c) in s.iter_mut().zip(t).zip(u) {
                        *a += b + c;
                    }
                    if !is_zero_vector(&s) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn check_jacobi(&self) -> bool {
        self.jacobi_failure().is_none()
    }

    /// `self ⊕ other` with block structure constants.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (a, b) = (self.dim(), other.dim());
        let d = a + b;
        let mut labels: Vec<String> = self.labels.iter().chain(&other.labels).cloned().collect();
        let mut seen = std::collections::HashSet::new();
        if !labels.iter().all(|l| seen.insert(l)) {
            labels = default_labels(d);
        }
        Self::from_fn_unchecked(labels, |i, j| {
            let mut v = zero_vector(d);
            if j < a {
                v[..a].clone_from_slice(self.basis_bracket(i, j));
            } else if i >= a {
                v[a..].clone_from_slice(other.basis_bracket(i - a, j - a));
            }
            v
        })
    }

    /// Same space with the bracket negated.
    pub fn opposite(&self) -> LieAlgebra {
        Self::from_fn_unchecked(self.labels.clone(), |i, j| {
            self.basis_bracket(i, j).iter().map(|x| -x).collect()
        })
    }

    /// Structure constants in the basis given by the columns of `p`.
    ///
    /// `p^{-1}` is then an isomorphism from `self` onto the result.
    pub fn transport(&self, p: &Matrix) -> Result<LieAlgebra> {
        if p.rows() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: p.rows(),
            });
        }
        let inv = p.inverse()?;
        let cols: Vec<Vector> = (0..p.cols()).map(|c| p.column(c)).collect();
        Ok(Self::from_fn_unchecked(self.labels.clone(), |i, j| {
            inv.apply(&self.bracket(&cols[i], &cols[j]))
        }))
    }

    /// Structure constants of a subalgebra in its canonical basis.
    pub fn restrict(&self, s: &Subspace) -> Result<LieAlgebra> {
        if !self.is_subalgebra(s)? {
            return Err(Error::NotSubalgebra("restriction target".into()));
        }
        let basis = s.basis();
        Ok(Self::from_fn_unchecked(default_labels(s.dim()), |i, j| {
            s.coordinates(&self.bracket(&basis[i], &basis[j]))
                .expect("ambient checked")
                .expect("closed under the bracket")
        }))
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            });
        }
        Ok(())
    }

    /// `[U, V]`.
    pub fn bracket_span(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check_subspace(u)?;
        self.check_subspace(v)?;
        let mut out = Vec::new();
        for a in u.basis() {
            for b in v.basis() {
                let c = self.bracket(a, b);
                if !is_zero_vector(&c) {
                    out.push(c);
                }
            }
        }
        Subspace::span(self.dim(), &out)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        s.contains_subspace(&self.bracket_span(s, s)?)
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        s.contains_subspace(&self.bracket_span(&Subspace::full(self.dim()), s)?)
    }

    fn series(&self, next: impl Fn(&Subspace) -> Subspace) -> Vec<Subspace> {
        let mut chain = vec![Subspace::full(self.dim())];
        // a chain in a finite-dimensional algebra stabilizes within dim + 1 steps
        for _ in 0..=self.dim() {
            let last = chain.last().expect("nonempty");
            let n = next(last);
            if &n == last {
                break;
            }
            chain.push(n);
        }
        chain
    }

    /// `g^(1) = g, g^(i+1) = [g^(i), g^(i)]`, until it stabilizes.
    pub fn derived_series(&self) -> Vec<Subspace> {
        self.series(|s| self.bracket_span(s, s).expect("same ambient"))
    }

    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim());
        self.series(|s| self.bracket_span(&full, s).expect("same ambient"))
    }

    pub fn center(&self) -> Subspace {
        let d = self.dim();
        // rows: coefficient of e_k in [e_i, x] for every i, k
        let mut rows = Vec::with_capacity(d * d);
        for i in 0..d {
            for k in 0..d {
                rows.push((0..d).map(|j| self.basis_bracket(i, j)[k].clone()).collect());
            }
        }
        if rows.is_empty() {
            return Subspace::zero(0);
        }
        Matrix::from_rows(rows).kernel()
    }

    /// Matrix of `ad x = [x, -]`.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let d = self.dim();
        let cols: Vec<Vector> = (0..d).map(|j| self.bracket(x, &unit_vector(d, j))).collect();
        Matrix::from_columns(d, &cols)
    }

    pub fn killing_form(&self) -> Matrix {
        let d = self.dim();
        let ads: Vec<Matrix> = (0..d).map(|i| self.ad(&unit_vector(d, i))).collect();
        let mut k = Matrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let t = (&ads[i] * &ads[j]).trace();
                k[(j, i)] = t.clone();
                k[(i, j)] = t;
            }
        }
        k
    }

    /// Cartan's criterion: nondegenerate Killing form (characteristic zero).
    pub fn is_semisimple(&self) -> bool {
        self.killing_form().rank() == self.dim()
    }

    pub fn is_unimodular(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| self.ad(&unit_vector(d, i)).trace().is_zero())
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| is_zero_vector(v))
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let derived: Vec<usize> = self.derived_series().iter().map(Subspace::dim).collect();
        let lcs: Vec<usize> = self.lower_central_series().iter().map(Subspace::dim).collect();
        Fingerprint {
            dim: self.dim(),
            solvable: derived.last() == Some(&0),
            nilpotent: lcs.last() == Some(&0),
            derived_dims: derived,
            lcs_dims: lcs,
            center_dim: self.center().dim(),
            killing_rank: self.killing_form().rank(),
            unimodular: self.is_unimodular(),
        }
    }
}

/// First basis pair `i < j` with `f[e_i, e_j]_from != [f e_i, f e_j]_to`.
pub fn homomorphism_failure(
    f: &Matrix,
    from: &LieAlgebra,
    to: &LieAlgebra,
) -> Result<Option<(usize, usize)>> {
    if f.cols() != from.dim() || f.rows() != to.dim() {
        return Err(Error::DimensionMismatch {
            expected: from.dim(),
            found: f.cols(),
        });
    }
    let d = from.dim();
    let images: Vec<Vector> = (0..d).map(|i| f.column(i)).collect();
    for i in 0..d {
        for j in i + 1..d {
            if f.apply(from.basis_bracket(i, j)) != to.bracket(&images[i], &images[j]) {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

pub fn is_homomorphism(f: &Matrix, from: &LieAlgebra, to: &LieAlgebra) -> Result<bool> {
    Ok(homomorphism_failure(f, from, to)?.is_none())
}

/// Pads a stabilized dimension sequence to `len` entries by repeating its last value.
pub fn padded_dims(dims: &[usize], len: usize) -> Vec<usize> {
    let last = dims.last().copied().unwrap_or(0);
    (0..len).map(|i| dims.get(i).copied().unwrap_or(last)).collect()
}
