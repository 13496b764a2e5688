use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::matrix::{anticommutator, commutator, OperatorMatrix};
use crate::error::{Error, Result};

/// Named generator families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    Identity,
    Su2SpinHalf,
    Su2SpinOne,
    Su3Gellmann,
    Custom,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 5] = [
        GeneratorKind::Identity,
        GeneratorKind::Su2SpinHalf,
        GeneratorKind::Su2SpinOne,
        GeneratorKind::Su3Gellmann,
        GeneratorKind::Custom,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GeneratorKind::Identity => "identity",
            GeneratorKind::Su2SpinHalf => "su2_spin_half",
            GeneratorKind::Su2SpinOne => "su2_spin_one",
            GeneratorKind::Su3Gellmann => "su3_gellmann",
            GeneratorKind::Custom => "custom",
        }
    }

    pub fn is_spin(self) -> bool {
        matches!(self, GeneratorKind::Su2SpinHalf | GeneratorKind::Su2SpinOne)
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GeneratorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GeneratorKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::UnsupportedGenerator(s.to_string()))
    }
}

/// An ordered list of Hermitian generators on a common space.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSet {
    kind: GeneratorKind,
    dim: usize,
    generators: Vec<OperatorMatrix>,
    hbar: f64,
}

const HERMITIAN_TOL: f64 = 1e-12;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn dense(dim: usize, entries: &[(usize, usize, Complex64)]) -> OperatorMatrix {
    let mut m = OperatorMatrix::zeros(dim);
    for &(i, j, z) in entries {
        m[(i, j)] = z;
    }
    m
}

/// The eight Gell-Mann matrices, unscaled.
fn gell_mann() -> Vec<OperatorMatrix> {
    let r8 = 1.0 / 3f64.sqrt();
    vec![
        dense(3, &[(0, 1, c(1.0, 0.0)), (1, 0, c(1.0, 0.0))]),
        dense(3, &[(0, 1, c(0.0, -1.0)), (1, 0, c(0.0, 1.0))]),
        dense(3, &[(0, 0, c(1.0, 0.0)), (1, 1, c(-1.0, 0.0))]),
        dense(3, &[(0, 2, c(1.0, 0.0)), (2, 0, c(1.0, 0.0))]),
        dense(3, &[(0, 2, c(0.0, -1.0)), (2, 0, c(0.0, 1.0))]),
        dense(3, &[(1, 2, c(1.0, 0.0)), (2, 1, c(1.0, 0.0))]),
        dense(3, &[(1, 2, c(0.0, -1.0)), (2, 1, c(0.0, 1.0))]),
        dense(3, &[(0, 0, c(r8, 0.0)), (1, 1, c(r8, 0.0)), (2, 2, c(-2.0 * r8, 0.0))]),
    ]
}

/// Build a named generator set. Spin operators carry the factor ħ;
/// Gell-Mann matrices are returned unscaled.
pub fn make_generators(kind: GeneratorKind, hbar: f64) -> Result<GeneratorSet> {
    if !(hbar > 0.0 && hbar.is_finite()) {
        return Err(Error::InvalidParameter(format!("hbar must be positive, got {hbar}")));
    }
    let (dim, generators) = match kind {
        GeneratorKind::Identity => (1, vec![OperatorMatrix::identity(1)]),
        GeneratorKind::Su2SpinHalf => {
            let h = hbar / 2.0;
            (
                2,
                vec![
                    dense(2, &[(0, 1, c(h, 0.0)), (1, 0, c(h, 0.0))]),
                    dense(2, &[(0, 1, c(0.0, -h)), (1, 0, c(0.0, h))]),
                    dense(2, &[(0, 0, c(h, 0.0)), (1, 1, c(-h, 0.0))]),
                ],
            )
        }
        GeneratorKind::Su2SpinOne => {
            let h = hbar / 2f64.sqrt();
            (
                3,
                vec![
                    dense(3, &[(0, 1, c(h, 0.0)), (1, 0, c(h, 0.0)), (1, 2, c(h, 0.0)), (2, 1, c(h, 0.0))]),
                    dense(3, &[(0, 1, c(0.0, -h)), (1, 0, c(0.0, h)), (1, 2, c(0.0, -h)), (2, 1, c(0.0, h))]),
                    dense(3, &[(0, 0, c(hbar, 0.0)), (2, 2, c(-hbar, 0.0))]),
                ],
            )
        }
        GeneratorKind::Su3Gellmann => (3, gell_mann()),
        GeneratorKind::Custom => {
            return Err(Error::UnsupportedGenerator(
                "custom sets are built with GeneratorSet::custom".into(),
            ))
        }
    };
    Ok(GeneratorSet { kind, dim, generators, hbar })
}

impl GeneratorSet {
    /// A user-supplied Hermitian set on a common space.
    pub fn custom(generators: Vec<OperatorMatrix>, hbar: f64) -> Result<Self> {
        if !(hbar > 0.0 && hbar.is_finite()) {
            return Err(Error::InvalidParameter(format!("hbar must be positive, got {hbar}")));
        }
        let first = generators
            .first()
            .ok_or_else(|| Error::InvalidParameter("custom generator list is empty".into()))?;
        let dim = first.dim();
        for (i, g) in generators.iter().enumerate() {
            super::matrix::check_dims(dim, g.dim())?;
            if !g.is_hermitian(HERMITIAN_TOL) {
                return Err(Error::InvalidParameter(format!("generator {i} is not Hermitian")));
            }
        }
        Ok(Self { kind: GeneratorKind::Custom, dim, generators, hbar })
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn generators(&self) -> &[OperatorMatrix] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn identity(&self) -> OperatorMatrix {
        OperatorMatrix::identity(self.dim)
    }

    /// Unit carried by the second-harmonic amplitude: τ×τ = i·unit·η.
    /// Spin sets use ħ; Gell-Mann, identity and custom sets use 1.
    pub fn bracket_unit(&self) -> f64 {
        if self.kind.is_spin() {
            self.hbar
        } else {
            1.0
        }
    }

    /// Pairs (l, m), 1-based and l < m, whose generators do not commute.
    pub fn noncommuting_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.generators.len();
        let mut out = Vec::new();
        for l in 0..n {
            for m in l + 1..n {
                let cm = &(&self.generators[l] * &self.generators[m]) - &(&self.generators[m] * &self.generators[l]);
                if cm.frobenius_norm() > HERMITIAN_TOL {
                    out.push((l + 1, m + 1));
                }
            }
        }
        out
    }

    /// Largest ‖[S_i,S_j] − iħ ε_ijk S_k‖ over i, j (SU(2) sets only).
    pub fn su2_algebra_defect(&self) -> Option<f64> {
        if !self.kind.is_spin() {
            return None;
        }
        let s = &self.generators;
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                let lhs = &(&s[i] * &s[j]) - &(&s[j] * &s[i]);
                let mut rhs = OperatorMatrix::zeros(self.dim);
                for (k, sk) in s.iter().enumerate() {
                    let e = levi_civita(i, j, k);
                    if e != 0.0 {
                        rhs += &sk.scale(c(0.0, self.hbar * e));
                    }
                }
                worst = worst.max((&lhs - &rhs).frobenius_norm());
            }
        }
        Some(worst)
    }
}

/// ε_ijk for 0-based indices.
pub fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// Trace-formula structure constants of a traceless basis.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants {
    n: usize,
    f: Vec<f64>,
    d: Vec<f64>,
}

impl StructureConstants {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// f^{abc}, 1-based indices as in the physics literature.
    pub fn f(&self, a: usize, b: usize, c: usize) -> f64 {
        self.f[self.idx(a, b, c)]
    }

    /// d^{abc}, 1-based.
    pub fn d(&self, a: usize, b: usize, c: usize) -> f64 {
        self.d[self.idx(a, b, c)]
    }

    fn idx(&self, a: usize, b: usize, c: usize) -> usize {
        assert!((1..=self.n).contains(&a) && (1..=self.n).contains(&b) && (1..=self.n).contains(&c));
        ((a - 1) * self.n + (b - 1)) * self.n + (c - 1)
    }

    /// All (a, b, c, f) with |f| above `tol` and a < b < c.
    pub fn nonzero_f(&self, tol: f64) -> Vec<(usize, usize, usize, f64)> {
        let mut out = Vec::new();
        for a in 1..=self.n {
            for b in a + 1..=self.n {
                for c in b + 1..=self.n {
                    let v = self.f(a, b, c);
                    if v.abs() > tol {
                        out.push((a, b, c, v));
                    }
                }
            }
        }
        out
    }
}

/// f^{abc} = −(i/4) tr(G_a[G_b,G_c]), d^{abc} = (1/4) tr(G_a{G_b,G_c}).
///
/// Imaginary parts are checked against 1e-12 and then discarded.
pub fn structure_constants(basis: &GeneratorSet) -> Result<StructureConstants> {
    let gens = basis.generators();
    for (i, g) in gens.iter().enumerate() {
        let tr = g.trace().norm();
        if tr > HERMITIAN_TOL {
            return Err(Error::NonTracelessBasis { index: i + 1, trace: tr });
        }
    }
    let n = gens.len();
    let mut f = vec![0.0; n * n * n];
    let mut d = vec![0.0; n * n * n];
    for b in 0..n {
        for cc in 0..n {
            let com = commutator(&gens[b], &gens[cc])?;
            let anti = anticommutator(&gens[b], &gens[cc])?;
            for a in 0..n {
                let fv = (&gens[a] * &com).trace() * c(0.0, -0.25);
                let dv = (&gens[a] * &anti).trace() * 0.25;
                if fv.im.abs() > HERMITIAN_TOL || dv.im.abs() > HERMITIAN_TOL {
                    return Err(Error::InvalidParameter(format!(
                        "complex structure constant at ({}, {}, {})",
                        a + 1,
                        b + 1,
                        cc + 1
                    )));
                }
                f[(a * n + b) * n + cc] = fv.re;
                d[(a * n + b) * n + cc] = dv.re;
            }
        }
    }
    Ok(StructureConstants { n, f, d })
}
