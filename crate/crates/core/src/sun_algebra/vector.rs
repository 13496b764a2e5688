use std::ops::{Add, Neg, Sub};

use num_complex::Complex64;

use super::matrix::{check_dims, OperatorMatrix};
use crate::error::Result;
use crate::Vec3;

/// Three spatial components, each an operator on the same space.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorVector3 {
    comps: [OperatorMatrix; 3],
}

impl OperatorVector3 {
    pub fn new(x: OperatorMatrix, y: OperatorMatrix, z: OperatorMatrix) -> Result<Self> {
        check_dims(x.dim(), y.dim())?;
        check_dims(x.dim(), z.dim())?;
        Ok(Self { comps: [x, y, z] })
    }

    pub fn zeros(dim: usize) -> Self {
        let z = OperatorMatrix::zeros(dim);
        Self { comps: [z.clone(), z.clone(), z] }
    }

    /// v ⊗ M: each component is v_i·M.
    pub fn from_real(v: &Vec3, m: &OperatorMatrix) -> Self {
        Self { comps: [m.scale_real(v.x), m.scale_real(v.y), m.scale_real(v.z)] }
    }

    /// v·𝟙.
    pub fn from_real_identity(v: &Vec3, dim: usize) -> Self {
        Self::from_real(v, &OperatorMatrix::identity(dim))
    }

    /// Σ_l v_l ⊗ M_l.
    pub fn linear_combination(terms: &[(Vec3, &OperatorMatrix)], dim: usize) -> Self {
        let mut out = Self::zeros(dim);
        for (v, m) in terms {
            out = &out + &Self::from_real(v, m);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.comps[0].dim()
    }

    pub fn x(&self) -> &OperatorMatrix {
        &self.comps[0]
    }

    pub fn y(&self) -> &OperatorMatrix {
        &self.comps[1]
    }

    pub fn z(&self) -> &OperatorMatrix {
        &self.comps[2]
    }

    pub fn component(&self, i: usize) -> &OperatorMatrix {
        &self.comps[i]
    }

    pub fn components(&self) -> &[OperatorMatrix; 3] {
        &self.comps
    }

    pub fn map(&self, f: impl Fn(&OperatorMatrix) -> OperatorMatrix) -> Self {
        Self { comps: [f(&self.comps[0]), f(&self.comps[1]), f(&self.comps[2])] }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.map(|m| m.scale(s))
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.map(|m| m.scale_real(s))
    }

    /// Largest component Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.comps.iter().map(OperatorMatrix::frobenius_norm).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.comps.iter().all(OperatorMatrix::is_finite)
    }

    /// Ordered operator cross product, panicking on dimension mismatch.
    pub fn cross_op(&self, other: &Self) -> Self {
        let (u, v) = (&self.comps, &other.comps);
        let comp = |j: usize, k: usize| &(&u[j] * &v[k]) - &(&u[k] * &v[j]);
        Self { comps: [comp(1, 2), comp(2, 0), comp(0, 1)] }
    }

    /// Ordered operator dot product, panicking on dimension mismatch.
    pub fn dot_op(&self, other: &Self) -> OperatorMatrix {
        let mut acc = &self.comps[0] * &other.comps[0];
        acc += &(&self.comps[1] * &other.comps[1]);
        acc += &(&self.comps[2] * &other.comps[2]);
        acc
    }

    /// k × U for a real vector k.
    pub fn real_cross(k: &Vec3, u: &Self) -> Self {
        let c = &u.comps;
        let comp = |a: f64, ma: &OperatorMatrix, b: f64, mb: &OperatorMatrix| &ma.scale_real(a) - &mb.scale_real(b);
        Self {
            comps: [
                comp(k.y, &c[2], k.z, &c[1]),
                comp(k.z, &c[0], k.x, &c[2]),
                comp(k.x, &c[1], k.y, &c[0]),
            ],
        }
    }

    /// U × k for a real vector k.
    pub fn cross_real(&self, k: &Vec3) -> Self {
        -&Self::real_cross(k, self)
    }

    /// k·U for a real vector k.
    pub fn real_dot(k: &Vec3, u: &Self) -> OperatorMatrix {
        let mut acc = u.comps[0].scale_real(k.x);
        acc += &u.comps[1].scale_real(k.y);
        acc += &u.comps[2].scale_real(k.z);
        acc
    }

    /// [X, U] componentwise.
    pub fn commutator_left(x: &OperatorMatrix, u: &Self) -> Self {
        u.map(|m| &(x * m) - &(m * x))
    }

    /// X·U componentwise (operator on the left).
    pub fn left_mul(x: &OperatorMatrix, u: &Self) -> Self {
        u.map(|m| x * m)
    }

    /// U·X componentwise (operator on the right).
    pub fn right_mul(&self, x: &OperatorMatrix) -> Self {
        self.map(|m| m * x)
    }

    /// Componentwise U X U†.
    pub fn conjugate_by(&self, u: &OperatorMatrix) -> Self {
        let ud = u.adjoint();
        self.map(|m| &(u * m) * &ud)
    }

    /// Hermitian part of each component.
    pub fn hermitian_part(&self) -> Self {
        self.map(OperatorMatrix::hermitian_part)
    }
}

/// (U×V)_i = Σ ε_ijk U_j V_k with products in written order.
pub fn cross(u: &OperatorVector3, v: &OperatorVector3) -> Result<OperatorVector3> {
    check_dims(u.dim(), v.dim())?;
    Ok(u.cross_op(v))
}

/// Σ_i U_i V_i with products in written order.
pub fn dot(u: &OperatorVector3, v: &OperatorVector3) -> Result<OperatorMatrix> {
    check_dims(u.dim(), v.dim())?;
    Ok(u.dot_op(v))
}

impl Add for &OperatorVector3 {
    type Output = OperatorVector3;
    fn add(self, rhs: &OperatorVector3) -> OperatorVector3 {
        OperatorVector3 {
            comps: [&self.comps[0] + &rhs.comps[0], &self.comps[1] + &rhs.comps[1], &self.comps[2] + &rhs.comps[2]],
        }
    }
}

impl Sub for &OperatorVector3 {
    type Output = OperatorVector3;
    fn sub(self, rhs: &OperatorVector3) -> OperatorVector3 {
        OperatorVector3 {
            comps: [&self.comps[0] - &rhs.comps[0], &self.comps[1] - &rhs.comps[1], &self.comps[2] - &rhs.comps[2]],
        }
    }
}

impl Add for OperatorVector3 {
    type Output = OperatorVector3;
    fn add(self, rhs: OperatorVector3) -> OperatorVector3 {
        &self + &rhs
    }
}

impl Sub for OperatorVector3 {
    type Output = OperatorVector3;
    fn sub(self, rhs: OperatorVector3) -> OperatorVector3 {
        &self - &rhs
    }
}

impl Neg for &OperatorVector3 {
    type Output = OperatorVector3;
    fn neg(self) -> OperatorVector3 {
        self.map(|m| -m)
    }
}

impl Neg for OperatorVector3 {
    type Output = OperatorVector3;
    fn neg(self) -> OperatorVector3 {
        -&self
    }
}
