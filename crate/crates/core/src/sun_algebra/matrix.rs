use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense square complex matrix, row-major.
///
/// Arithmetic operators panic on a dimension mismatch, like `nalgebra`;
/// the checked entry points ([`commutator`], [`OperatorMatrix::try_mul`])
/// return [`Error::DimMismatch`] instead.
#[derive(Clone, PartialEq)]
pub struct OperatorMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl OperatorMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        Self { dim, entries: vec![Complex64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, Complex64::new(1.0, 0.0))
    }

    pub fn scalar(dim: usize, value: Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = value;
        }
        m
    }

    pub fn diagonal(values: &[Complex64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = *v;
        }
        m
    }

    /// Build from row-major entries. Fails if the length is not a square or
    /// any entry is non-finite.
    pub fn from_row_major(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::InvalidParameter(format!(
                "expected {} entries for dim {dim}, got {}",
                dim * dim,
                entries.len()
            )));
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidParameter("non-finite matrix entry".into()));
        }
        Ok(Self { dim, entries })
    }

    /// Build from row slices.
    pub fn from_rows(rows: &[&[Complex64]]) -> Result<Self> {
        let dim = rows.len();
        let entries: Vec<Complex64> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Self::from_row_major(dim, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self { dim: self.dim, entries: self.entries.iter().map(|z| f(*z)).collect() }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    /// Hermitian part (X + X†)/2.
    pub fn hermitian_part(&self) -> Self {
        (self + &self.adjoint()).scale_real(0.5)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        (self - &self.adjoint()).frobenius_norm() <= tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }

    /// ‖UU† − 1‖_F.
    pub fn unitarity_defect(&self) -> f64 {
        (&(self * &self.adjoint()) - &Self::identity(self.dim)).frobenius_norm()
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        check_dims(self.dim, other.dim)?;
        Ok(self * other)
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim, "vector length must match matrix dimension");
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// ⟨u|X|v⟩ with u conjugated.
    pub fn sandwich(&self, u: &[Complex64], v: &[Complex64]) -> Complex64 {
        let xv = self.apply(v);
        u.iter().zip(&xv).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn to_nalgebra(&self) -> nalgebra::DMatrix<Complex64> {
        nalgebra::DMatrix::from_fn(self.dim, self.dim, |i, j| self[(i, j)])
    }

    pub fn from_nalgebra(m: &nalgebra::DMatrix<Complex64>) -> Self {
        assert_eq!(m.nrows(), m.ncols(), "matrix must be square");
        let n = m.nrows();
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = m[(i, j)];
            }
        }
        out
    }

    /// Apply `f` to the spectrum of a Hermitian matrix: V f(Λ) V†.
    pub fn hermitian_function(&self, f: impl Fn(f64) -> Complex64) -> Self {
        let eig = nalgebra::SymmetricEigen::new(self.hermitian_part().to_nalgebra());
        let v = &eig.eigenvectors;
        let fd = nalgebra::DMatrix::from_diagonal(&eig.eigenvalues.map(&f));
        Self::from_nalgebra(&(v * fd * v.adjoint()))
    }

    /// exp(i·s·X) for Hermitian X, via spectral decomposition.
    pub fn exp_i_hermitian(&self, s: f64) -> Self {
        self.hermitian_function(|lambda| Complex64::new(0.0, s * lambda).exp())
    }
}

pub(crate) fn check_dims(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimMismatch { left: a, right: b })
    }
}

/// XY − YX.
pub fn commutator(x: &OperatorMatrix, y: &OperatorMatrix) -> Result<OperatorMatrix> {
    check_dims(x.dim, y.dim)?;
    Ok(&(x * y) - &(y * x))
}

/// XY + YX.
pub fn anticommutator(x: &OperatorMatrix, y: &OperatorMatrix) -> Result<OperatorMatrix> {
    check_dims(x.dim, y.dim)?;
    Ok(&(x * y) + &(y * x))
}

impl Index<(usize, usize)> for OperatorMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for OperatorMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i * self.dim + j]
    }
}

impl fmt::Debug for OperatorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "OperatorMatrix({}x{})", self.dim, self.dim)?;
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| {
                    let z = self[(i, j)];
                    format!("{:+.6}{:+.6}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn zip_with(a: &OperatorMatrix, b: &OperatorMatrix, f: impl Fn(Complex64, Complex64) -> Complex64) -> OperatorMatrix {
    assert_eq!(a.dim, b.dim, "operator dimension mismatch");
    OperatorMatrix {
        dim: a.dim,
        entries: a.entries.iter().zip(&b.entries).map(|(x, y)| f(*x, *y)).collect(),
    }
}

impl Add for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn add(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn sub(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Add for OperatorMatrix {
    type Output = OperatorMatrix;
    fn add(self, rhs: OperatorMatrix) -> OperatorMatrix {
        &self + &rhs
    }
}

impl Sub for OperatorMatrix {
    type Output = OperatorMatrix;
    fn sub(self, rhs: OperatorMatrix) -> OperatorMatrix {
        &self - &rhs
    }
}

impl AddAssign<&OperatorMatrix> for OperatorMatrix {
    fn add_assign(&mut self, rhs: &OperatorMatrix) {
        assert_eq!(self.dim, rhs.dim, "operator dimension mismatch");
        for (x, y) in self.entries.iter_mut().zip(&rhs.entries) {
            *x += y;
        }
    }
}

impl SubAssign<&OperatorMatrix> for OperatorMatrix {
    fn sub_assign(&mut self, rhs: &OperatorMatrix) {
        assert_eq!(self.dim, rhs.dim, "operator dimension mismatch");
        for (x, y) in self.entries.iter_mut().zip(&rhs.entries) {
            *x -= y;
        }
    }
}

impl Neg for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn neg(self) -> OperatorMatrix {
        self.map(|z| -z)
    }
}

impl Neg for OperatorMatrix {
    type Output = OperatorMatrix;
    fn neg(self) -> OperatorMatrix {
        -&self
    }
}

impl Mul for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn mul(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.dim, rhs.dim, "operator dimension mismatch");
        let n = self.dim;
        let mut out = OperatorMatrix::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.entries[i * n + l];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * rhs.entries[l * n + j];
                }
            }
        }
        out
    }
}

impl Mul for OperatorMatrix {
    type Output = OperatorMatrix;
    fn mul(self, rhs: OperatorMatrix) -> OperatorMatrix {
        &self * &rhs
    }
}

impl Mul<Complex64> for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn mul(self, s: Complex64) -> OperatorMatrix {
        self.scale(s)
    }
}

impl Mul<f64> for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn mul(self, s: f64) -> OperatorMatrix {
        self.scale_real(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rejects_wrong_entry_count() {
        assert!(OperatorMatrix::from_row_major(2, vec![c(1.0, 0.0); 3]).is_err());
        assert!(OperatorMatrix::from_row_major(1, vec![c(f64::NAN, 0.0)]).is_err());
    }

    #[test]
    fn commutator_dim_mismatch() {
        let a = OperatorMatrix::identity(2);
        let b = OperatorMatrix::identity(3);
        assert_eq!(commutator(&a, &b), Err(Error::DimMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn exp_of_pauli_z() {
        let z = OperatorMatrix::diagonal(&[c(1.0, 0.0), c(-1.0, 0.0)]);
        let u = z.exp_i_hermitian(0.3);
        assert!((u[(0, 0)] - c(0.3f64.cos(), 0.3f64.sin())).norm() < 1e-14);
        assert!((u[(1, 1)] - c(0.3f64.cos(), -0.3f64.sin())).norm() < 1e-14);
        assert!(u.is_unitary(1e-13));
    }

    #[test]
    fn sandwich_matches_manual() {
        let m = OperatorMatrix::from_rows(&[&[c(1.0, 0.0), c(0.0, 2.0)], &[c(0.0, -2.0), c(3.0, 0.0)]]).unwrap();
        let u = [c(1.0, 1.0), c(0.5, 0.0)];
        let v = [c(0.0, 1.0), c(2.0, -1.0)];
        let mv = [c(0.0, 1.0) + c(0.0, 2.0) * c(2.0, -1.0), c(0.0, -2.0) * c(0.0, 1.0) + c(3.0, 0.0) * c(2.0, -1.0)];
        let want = u[0].conj() * mv[0] + u[1].conj() * mv[1];
        assert!((m.sandwich(&u, &v) - want).norm() < 1e-14);
    }
}
