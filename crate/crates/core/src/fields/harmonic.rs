use std::collections::BTreeMap;
use std::fmt::Debug;
use std::sync::Arc;

use num_complex::Complex64;

use super::context::WaveContext;
use crate::sun_algebra::{OperatorMatrix, OperatorVector3};
use crate::Vec3;

/// Relative size below which merged terms are dropped.
pub const MERGE_THRESHOLD: f64 = 1e-14;

/// Amplitude types a harmonic field can carry.
pub trait Amplitude: Clone + Debug + PartialEq + Send + Sync {
    fn norm(&self) -> f64;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, s: Complex64) -> Self;
    fn conjugate_by(&self, u: &OperatorMatrix) -> Self;
}

impl Amplitude for OperatorMatrix {
    fn norm(&self) -> f64 {
        self.frobenius_norm()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, s: Complex64) -> Self {
        self.scale(s)
    }
    fn conjugate_by(&self, u: &OperatorMatrix) -> Self {
        &(u * self) * &u.adjoint()
    }
}

impl Amplitude for OperatorVector3 {
    fn norm(&self) -> f64 {
        OperatorVector3::norm(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, s: Complex64) -> Self {
        self.scale(s)
    }
    fn conjugate_by(&self, u: &OperatorMatrix) -> Self {
        OperatorVector3::conjugate_by(self, u)
    }
}

/// Σ_m amp_m e^{i m (k·r − ω t)} with at most one term per order `m`.
///
/// Order 0 is allowed and denotes a constant term.
#[derive(Clone, Debug)]
pub struct HarmonicField<T: Amplitude> {
    ctx: Arc<WaveContext>,
    terms: BTreeMap<i32, T>,
}

pub type HarmonicScalarField = HarmonicField<OperatorMatrix>;
pub type HarmonicVectorField = HarmonicField<OperatorVector3>;

fn i_times(x: f64) -> Complex64 {
    Complex64::new(0.0, x)
}

impl<T: Amplitude> HarmonicField<T> {
    pub fn empty(ctx: Arc<WaveContext>) -> Self {
        Self { ctx, terms: BTreeMap::new() }
    }

    pub fn single(ctx: Arc<WaveContext>, order: i32, amp: T) -> Self {
        Self::from_terms(ctx, [(order, amp)])
    }

    /// Terms of equal order are summed; negligible terms are dropped.
    pub fn from_terms(ctx: Arc<WaveContext>, terms: impl IntoIterator<Item = (i32, T)>) -> Self {
        let mut map: BTreeMap<i32, T> = BTreeMap::new();
        for (m, a) in terms {
            match map.get_mut(&m) {
                Some(existing) => *existing = existing.plus(&a),
                None => {
                    map.insert(m, a);
                }
            }
        }
        let mut out = Self { ctx, terms: map };
        out.prune();
        out
    }

    fn prune(&mut self) {
        let max = self.norm();
        self.terms.retain(|_, a| {
            let n = a.norm();
            n > MERGE_THRESHOLD * max && n > 0.0
        });
    }

    pub fn ctx(&self) -> &Arc<WaveContext> {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &T)> {
        self.terms.iter().map(|(m, a)| (*m, a))
    }

    pub fn term(&self, order: i32) -> Option<&T> {
        self.terms.get(&order)
    }

    pub fn orders(&self) -> Vec<i32> {
        self.terms.keys().copied().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// max over orders of the amplitude norm.
    pub fn norm(&self) -> f64 {
        self.terms.values().map(Amplitude::norm).fold(0.0, f64::max)
    }

    /// Per-order amplitude norms.
    pub fn order_norms(&self) -> Vec<(i32, f64)> {
        self.terms.iter().map(|(m, a)| (*m, a.norm())).collect()
    }

    /// Keep only the listed orders.
    pub fn restrict(&self, orders: &[i32]) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| orders.contains(m)).map(|(m, a)| (*m, a.clone()));
        Self::from_terms(self.ctx.clone(), terms)
    }

    pub fn map_terms<U: Amplitude>(&self, f: impl Fn(i32, &T) -> U) -> HarmonicField<U> {
        HarmonicField::from_terms(self.ctx.clone(), self.terms.iter().map(|(m, a)| (*m, f(*m, a))))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.map_terms(|_, a| a.times(s))
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_ctx(&other.ctx);
        let terms = self.terms.iter().chain(other.terms.iter()).map(|(m, a)| (*m, a.clone()));
        Self::from_terms(self.ctx.clone(), terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale_real(-1.0))
    }

    /// ∂_t: −i m ω per term.
    pub fn dt(&self) -> Self {
        let w = self.ctx.omega();
        self.map_terms(|m, a| a.times(i_times(-(m as f64) * w)))
    }

    /// (1/c)∂_t.
    pub fn dt_over_c(&self) -> Self {
        self.dt().scale_real(1.0 / self.ctx.c())
    }

    /// ∇²: −m²|k|² per term.
    pub fn laplacian(&self) -> Self {
        let k2 = self.ctx.k().norm_squared();
        self.map_terms(|m, a| a.times(Complex64::new(-((m * m) as f64) * k2, 0.0)))
    }

    /// Phase e^{i m (k·r − ω t)} for order m.
    pub fn phase(&self, order: i32, r: &Vec3, t: f64) -> Complex64 {
        let theta = self.ctx.k().dot(r) - self.ctx.omega() * t;
        Complex64::new(0.0, order as f64 * theta).exp()
    }

    /// Amplitudes conjugated by a constant operator: U a U†.
    pub fn conjugate_by(&self, u: &OperatorMatrix) -> Self {
        self.map_terms(|_, a| a.conjugate_by(u))
    }

    /// Pairwise product: order m₁ × order m₂ lands on m₁ + m₂.
    pub fn product<U: Amplitude, V: Amplitude>(&self, other: &HarmonicField<U>, f: impl Fn(&T, &U) -> V) -> HarmonicField<V> {
        self.assert_same_ctx(&other.ctx);
        let mut terms = Vec::new();
        for (m1, a) in &self.terms {
            for (m2, b) in &other.terms {
                terms.push((m1 + m2, f(a, b)));
            }
        }
        HarmonicField::from_terms(self.ctx.clone(), terms)
    }

    pub fn with_ctx(&self, ctx: Arc<WaveContext>) -> Self {
        Self { ctx, terms: self.terms.clone() }
    }

    fn assert_same_ctx(&self, other: &Arc<WaveContext>) {
        assert!(
            Arc::ptr_eq(&self.ctx, other) || *self.ctx == **other,
            "harmonic fields belong to different wave contexts"
        );
    }

    /// Termwise distance ‖self − other‖.
    pub fn distance(&self, other: &Self) -> f64 {
        self.sub(other).norm()
    }
}

impl<T: Amplitude> PartialEq for HarmonicField<T> {
    fn eq(&self, other: &Self) -> bool {
        *self.ctx == *other.ctx && self.terms == other.terms
    }
}

impl HarmonicScalarField {
    pub fn eval_at(&self, r: &Vec3, t: f64) -> OperatorMatrix {
        let mut out = OperatorMatrix::zeros(self.ctx.dim());
        for (m, a) in &self.terms {
            out += &a.scale(self.phase(*m, r, t));
        }
        out
    }

    /// ∇: i m k amp per term.
    pub fn grad(&self) -> HarmonicVectorField {
        let k = *self.ctx.k();
        self.map_terms(|m, a| OperatorVector3::from_real(&(k * m as f64), a).scale(i_times(1.0)))
    }

    /// [X, Y] with X = self.
    pub fn commutator(&self, other: &Self) -> Self {
        self.product(other, |x, y| &(x * y) - &(y * x))
    }

    /// [X, U] with X = self applied to every component of U.
    pub fn commutator_vec(&self, other: &HarmonicVectorField) -> HarmonicVectorField {
        self.product(other, OperatorVector3::commutator_left)
    }

    /// Ordered product X·Y.
    pub fn mul(&self, other: &Self) -> Self {
        self.product(other, |x, y| x * y)
    }

    /// v ⊗ X.
    pub fn times_vector(&self, v: &Vec3) -> HarmonicVectorField {
        self.map_terms(|_, a| OperatorVector3::from_real(v, a))
    }
}

impl HarmonicVectorField {
    pub fn eval_at(&self, r: &Vec3, t: f64) -> OperatorVector3 {
        let mut out = OperatorVector3::zeros(self.ctx.dim());
        for (m, a) in &self.terms {
            out = &out + &a.scale(self.phase(*m, r, t));
        }
        out
    }

    /// ∇×: i m k × amp per term.
    pub fn curl(&self) -> Self {
        let k = *self.ctx.k();
        self.map_terms(|m, a| OperatorVector3::real_cross(&(k * m as f64), a).scale(i_times(1.0)))
    }

    /// ∇·: i m k·amp per term.
    pub fn div(&self) -> HarmonicScalarField {
        let k = *self.ctx.k();
        self.map_terms(|m, a| OperatorVector3::real_dot(&(k * m as f64), a).scale(i_times(1.0)))
    }

    pub fn cross(&self, other: &Self) -> Self {
        self.product(other, OperatorVector3::cross_op)
    }

    pub fn dot(&self, other: &Self) -> HarmonicScalarField {
        self.product(other, OperatorVector3::dot_op)
    }

    /// v × F for a real vector v.
    pub fn real_cross(v: &Vec3, f: &Self) -> Self {
        f.map_terms(|_, a| OperatorVector3::real_cross(v, a))
    }

    /// F × v for a real vector v.
    pub fn cross_real(&self, v: &Vec3) -> Self {
        self.map_terms(|_, a| a.cross_real(v))
    }

    /// v·F for a real vector v.
    pub fn real_dot(&self, v: &Vec3) -> HarmonicScalarField {
        self.map_terms(|_, a| OperatorVector3::real_dot(v, a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sun_algebra::{make_generators, GeneratorKind};

    fn ctx() -> Arc<WaveContext> {
        let gens = make_generators(GeneratorKind::Su2SpinHalf, 1.0).unwrap();
        Arc::new(WaveContext::unit(Vec3::new(0.0, 0.0, 1.0), gens).unwrap())
    }

    #[test]
    fn merge_sums_equal_orders_and_drops_zeros() {
        let c = ctx();
        let s = c.generators().generators()[0].clone();
        let f = HarmonicScalarField::from_terms(c.clone(), [(1, s.clone()), (1, s.clone()), (2, -&s), (2, s.clone())]);
        assert_eq!(f.orders(), vec![1]);
        assert_eq!(f.term(1).unwrap(), &s.scale_real(2.0));
        assert!(f.sub(&f).is_empty());
    }

    #[test]
    fn product_adds_orders() {
        let c = ctx();
        let s = c.generators().generators();
        let a = HarmonicScalarField::from_terms(c.clone(), [(1, s[0].clone()), (2, s[1].clone())]);
        let b = HarmonicScalarField::single(c.clone(), 1, s[1].clone());
        let p = a.mul(&b);
        assert_eq!(p.orders(), vec![2, 3]);
        assert_eq!(p.term(2).unwrap(), &(&s[0] * &s[1]));
    }

    #[test]
    fn restrict_keeps_listed_orders() {
        let c = ctx();
        let s = c.generators().generators()[2].clone();
        let f = HarmonicScalarField::from_terms(c, [(1, s.clone()), (2, s.clone()), (3, s)]);
        assert_eq!(f.restrict(&[1, 3]).orders(), vec![1, 3]);
    }
}
