//! Every equation set and condition list as exact residual fields, reduced to
//! norms in a [`ResidualReport`].
//!
//! Norm of a residual field: max over harmonic orders, max over vector
//! components, Frobenius matrix norm. Pass rule: raw / max(1, ‖τ‖) ≤ tol,
//! where ‖τ‖ is the largest amplitude norm of the potentials.

use num_complex::Complex64;
use serde::Serialize;

use crate::fields::{build_potentials, fields_from_potentials, HarmonicScalarField, HarmonicVectorField, SolutionFamily};

pub const DEFAULT_TOL: f64 = 1e-12;

/// A residual of either rank.
#[derive(Clone, Debug)]
pub enum ResidualField {
    Scalar(HarmonicScalarField),
    Vector(HarmonicVectorField),
}

impl ResidualField {
    pub fn norm(&self) -> f64 {
        match self {
            ResidualField::Scalar(f) => f.norm(),
            ResidualField::Vector(f) => f.norm(),
        }
    }

    pub fn order_norms(&self) -> Vec<(i32, f64)> {
        match self {
            ResidualField::Scalar(f) => f.order_norms(),
            ResidualField::Vector(f) => f.order_norms(),
        }
    }

    pub fn restrict(&self, orders: &[i32]) -> Self {
        match self {
            ResidualField::Scalar(f) => ResidualField::Scalar(f.restrict(orders)),
            ResidualField::Vector(f) => ResidualField::Vector(f.restrict(orders)),
        }
    }

    pub fn as_scalar(&self) -> Option<&HarmonicScalarField> {
        match self {
            ResidualField::Scalar(f) => Some(f),
            ResidualField::Vector(_) => None,
        }
    }

    pub fn as_vector(&self) -> Option<&HarmonicVectorField> {
        match self {
            ResidualField::Vector(f) => Some(f),
            ResidualField::Scalar(_) => None,
        }
    }
}

impl From<HarmonicScalarField> for ResidualField {
    fn from(f: HarmonicScalarField) -> Self {
        ResidualField::Scalar(f)
    }
}

impl From<HarmonicVectorField> for ResidualField {
    fn from(f: HarmonicVectorField) -> Self {
        ResidualField::Vector(f)
    }
}

/// A named residual with the formula it evaluates.
#[derive(Clone, Debug)]
pub struct NamedResidual {
    pub name: &'static str,
    pub formula: &'static str,
    pub field: ResidualField,
}

fn named(name: &'static str, formula: &'static str, field: impl Into<ResidualField>) -> NamedResidual {
    NamedResidual { name, formula, field: field.into() }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResidualItem {
    pub name: String,
    pub formula: String,
    /// Unnormalized norm.
    pub raw_norm: f64,
    /// raw_norm / scale.
    pub residual_norm: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Harmonic order carrying the largest term, if any.
    pub worst_order: Option<i32>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResidualReport {
    pub label: String,
    pub scale: f64,
    pub per_item: Vec<ResidualItem>,
    pub overall_pass: bool,
}

impl ResidualReport {
    pub fn new(label: impl Into<String>, scale: f64) -> Self {
        Self { label: label.into(), scale: scale.max(1.0), per_item: Vec::new(), overall_pass: true }
    }

    pub fn push(&mut self, name: &str, formula: &str, raw_norm: f64, tolerance: f64, worst_order: Option<i32>) {
        let residual_norm = raw_norm / self.scale;
        let pass = residual_norm <= tolerance && residual_norm.is_finite();
        self.overall_pass &= pass;
        self.per_item.push(ResidualItem {
            name: name.to_string(),
            formula: formula.to_string(),
            raw_norm,
            residual_norm,
            tolerance,
            pass,
            worst_order,
        });
    }

    /// Item whose value is already relative.
    pub fn push_unscaled(&mut self, name: &str, formula: &str, value: f64, tolerance: f64) {
        let pass = value <= tolerance && value.is_finite();
        self.overall_pass &= pass;
        self.per_item.push(ResidualItem {
            name: name.to_string(),
            formula: formula.to_string(),
            raw_norm: value,
            residual_norm: value,
            tolerance,
            pass,
            worst_order: None,
        });
    }

    pub fn from_residuals(label: impl Into<String>, scale: f64, items: &[NamedResidual], tol: f64) -> Self {
        let mut rep = Self::new(label, scale);
        for it in items {
            let orders = it.field.order_norms();
            let worst = orders.iter().max_by(|a, b| a.1.total_cmp(&b.1)).map(|(m, _)| *m);
            rep.push(it.name, it.formula, it.field.norm(), tol, worst);
        }
        rep
    }

    pub fn item(&self, name: &str) -> Option<&ResidualItem> {
        self.per_item.iter().find(|i| i.name == name)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.per_item.iter().filter(|i| !i.pass).map(|i| i.name.as_str()).collect()
    }

    pub fn max_residual(&self) -> f64 {
        self.per_item.iter().map(|i| i.residual_norm).fold(0.0, f64::max)
    }

    /// Concatenate reports sharing one label.
    pub fn merge(label: impl Into<String>, reports: impl IntoIterator<Item = ResidualReport>) -> Self {
        let mut out = Self::new(label, 1.0);
        for r in reports {
            out.overall_pass &= r.overall_pass;
            out.scale = out.scale.max(r.scale);
            out.per_item.extend(r.per_item.into_iter().map(|mut i| {
                i.name = format!("{}.{}", r.label, i.name);
                i
            }));
        }
        out
    }
}

fn ic(x: f64) -> Complex64 {
    Complex64::new(0.0, x)
}

/// max(1, ‖A‖, ‖φ‖).
pub fn potential_scale(a: &HarmonicVectorField, phi: &HarmonicScalarField) -> f64 {
    a.norm().max(phi.norm()).max(1.0)
}

/// Potentials of a family and the bracket products 𝓜 = 𝓐×𝓐, 𝓝 = [φ, 𝓐].
struct Blocks {
    a: HarmonicVectorField,
    phi: HarmonicScalarField,
    m: HarmonicVectorField,
    n: HarmonicVectorField,
    k: f64,
    g: f64,
}

impl Blocks {
    fn new(a: &HarmonicVectorField, phi: &HarmonicScalarField) -> Self {
        let ctx = a.ctx();
        let k = ctx.omega() / ctx.c();
        Self { a: a.clone(), phi: phi.clone(), m: a.cross(a), n: phi.commutator_vec(a), k, g: ctx.g() }
    }
}

/// Field equations with every self-interaction term, 𝓑/𝓔 from the potentials.
pub fn full_ym_fields(a: &HarmonicVectorField, phi: &HarmonicScalarField) -> Vec<NamedResidual> {
    let ig = ic(a.ctx().g());
    let (b, e) = fields_from_potentials(a, phi);
    let div_e = e.div().add(&a.dot(&e).sub(&e.dot(a)).scale(ig));
    let curl_e = b
        .dt_over_c()
        .scale_real(-1.0)
        .sub(&e.curl())
        .add(&phi.commutator_vec(&b).sub(&a.cross(&e)).sub(&e.cross(a)).scale(ig));
    let div_b = b.div().add(&a.dot(&b).sub(&b.dot(a)).scale(ig));
    let curl_b = e
        .dt_over_c()
        .scale_real(-1.0)
        .add(&b.curl())
        .add(&phi.commutator_vec(&e).add(&a.cross(&b)).add(&b.cross(a)).scale(ig));
    vec![
        named("div_e", "∇·E + ig(A·E − E·A)", div_e),
        named("curl_e", "−(1/c)∂_tB − ∇×E + ig([φ,B] − A×E − E×A)", curl_e),
        named("div_b", "∇·B + ig(A·B − B·A)", div_b),
        named("curl_b", "−(1/c)∂_tE + ∇×B + ig([φ,E] + A×B + B×A)", curl_b),
    ]
}

pub fn full_ym_residuals(a: &HarmonicVectorField, phi: &HarmonicScalarField, tol: f64) -> ResidualReport {
    ResidualReport::from_residuals("full_ym", potential_scale(a, phi), &full_ym_fields(a, phi), tol)
}

/// Six spatial conditions of the weak-coupling regime.
pub fn wca_fields(a: &HarmonicVectorField, phi: &HarmonicScalarField) -> Vec<NamedResidual> {
    let Blocks { a, phi, m, n, k, .. } = Blocks::new(a, phi);
    let curl_a = a.curl();
    vec![
        named("wca1", "ik∇·A − ∇²φ", a.div().scale(ic(k)).sub(&phi.laplacian())),
        named("wca2", "[φ, ∇·A]", phi.commutator(&a.div())),
        named("wca3", "2kM + i∇×N", m.scale_real(2.0 * k).add(&n.curl().scale(ic(1.0)))),
        named("wca4", "∇·M", m.div()),
        named(
            "wca5",
            "∇(∇·A) − ∇²A − k²A − ik∇φ",
            a.div().grad().sub(&a.laplacian()).sub(&a.scale_real(k * k)).sub(&phi.grad().scale(ic(k))),
        ),
        named(
            "wca6",
            "ikN − A×(∇×A) − (∇×A)×A + ∇×M + [φ,∇φ]",
            n.scale(ic(k))
                .sub(&a.cross(&curl_a))
                .sub(&curl_a.cross(&a))
                .add(&m.curl())
                .add(&phi.commutator_vec(&phi.grad())),
        ),
    ]
}

pub fn wca_conditions_for(a: &HarmonicVectorField, phi: &HarmonicScalarField, tol: f64) -> ResidualReport {
    ResidualReport::from_residuals("wca", potential_scale(a, phi), &wca_fields(a, phi), tol)
}

pub fn wca_conditions(fam: &SolutionFamily, tol: f64) -> ResidualReport {
    let (a, phi) = build_potentials(fam);
    wca_conditions_for(&a, &phi, tol)
}

/// Eight exact conditions. Items 3 and 8 omit their g² factor.
pub fn exact_fields(a: &HarmonicVectorField, phi: &HarmonicScalarField) -> Vec<NamedResidual> {
    let Blocks { a, phi, m, n, k, g } = Blocks::new(a, phi);
    let i1 = ic(1.0);
    let curl_a = a.curl();
    vec![
        named("exact1", "ik∇·A − ∇²φ", a.div().scale(ic(k)).sub(&phi.laplacian())),
        named("exact2", "g[φ, ∇·A]", phi.commutator(&a.div()).scale_real(g)),
        named("exact3", "A·N − N·A", a.dot(&n).sub(&n.dot(&a))),
        named("exact4", "g(2kM + i∇×N)", m.scale_real(2.0 * k).add(&n.curl().scale(i1)).scale_real(g)),
        named("exact5", "g∇·M", m.div().scale_real(g)),
        named(
            "exact6",
            "∇(∇·A) − ∇²A − k²A − ik∇φ",
            a.div().grad().sub(&a.laplacian()).sub(&a.scale_real(k * k)).sub(&phi.grad().scale(ic(k))),
        ),
        named(
            "exact7",
            "g{kN + iA×(∇×A) + i(∇×A)×A − i∇×M − i[φ,∇φ]}",
            n.scale_real(k)
                .add(&a.cross(&curl_a).add(&curl_a.cross(&a)).sub(&m.curl()).sub(&phi.commutator_vec(&phi.grad())).scale(i1))
                .scale_real(g),
        ),
        named("exact8", "[φ,N] + A×M + M×A", phi.commutator_vec(&n).add(&a.cross(&m)).add(&m.cross(&a))),
    ]
}

pub fn exact_conditions_for(a: &HarmonicVectorField, phi: &HarmonicScalarField, tol: f64) -> ResidualReport {
    ResidualReport::from_residuals("exact", potential_scale(a, phi), &exact_fields(a, phi), tol)
}

pub fn exact_conditions(fam: &SolutionFamily, tol: f64) -> ResidualReport {
    let (a, phi) = build_potentials(fam);
    exact_conditions_for(&a, &phi, tol)
}

/// Six spatial conditions of the zero-coupling regime.
pub fn zca_fields(a: &HarmonicVectorField, phi: &HarmonicScalarField) -> Vec<NamedResidual> {
    let Blocks { a, phi, m, n, k, .. } = Blocks::new(a, phi);
    vec![
        named("s1", "∇·M", m.div()),
        named("s2", "∇×N − 2ikM", n.curl().sub(&m.scale(ic(2.0 * k)))),
        named("s3", "ik∇·A − ∇²φ", a.div().scale(ic(k)).sub(&phi.laplacian())),
        named("s4", "∇·N", n.div()),
        named(
            "s5",
            "−∇(∇·A) + ∇²A + k²A + ik∇φ",
            a.laplacian().sub(&a.div().grad()).add(&a.scale_real(k * k)).add(&phi.grad().scale(ic(k))),
        ),
        named("s6", "2ikN + ∇×M", n.scale(ic(2.0 * k)).add(&m.curl())),
    ]
}

pub fn zca_conditions_for(a: &HarmonicVectorField, phi: &HarmonicScalarField, tol: f64) -> ResidualReport {
    ResidualReport::from_residuals("zca", potential_scale(a, phi), &zca_fields(a, phi), tol)
}

pub fn zca_conditions(fam: &SolutionFamily, tol: f64) -> ResidualReport {
    let (a, phi) = build_potentials(fam);
    zca_conditions_for(&a, &phi, tol)
}

/// Maxwell-type field equations (self-interaction dropped) on the fields
/// built from the potentials.
pub fn maxwell_type_fields(a: &HarmonicVectorField, phi: &HarmonicScalarField) -> Vec<NamedResidual> {
    let (b, e) = fields_from_potentials(a, phi);
    field_equation_fields(&b, &e)
}

/// Source-free Maxwell-form equations on a given field pair.
pub fn field_equation_fields(b: &HarmonicVectorField, e: &HarmonicVectorField) -> Vec<NamedResidual> {
    vec![
        named("gauss_e", "∇·E", e.div()),
        named("faraday", "∇×E + (1/c)∂_tB", e.curl().add(&b.dt_over_c())),
        named("gauss_b", "∇·B", b.div()),
        named("ampere", "∇×B − (1/c)∂_tE", b.curl().sub(&e.dt_over_c())),
    ]
}

pub fn maxwell_type_residuals(a: &HarmonicVectorField, phi: &HarmonicScalarField, tol: f64) -> ResidualReport {
    ResidualReport::from_residuals("maxwell_type", potential_scale(a, phi), &maxwell_type_fields(a, phi), tol)
}

/// Four conditions on the time-dependent potentials.
pub fn potential_condition_fields(a: &HarmonicVectorField, phi: &HarmonicScalarField) -> Vec<NamedResidual> {
    let ig = ic(a.ctx().g());
    let c = a.ctx().c();
    let m = a.cross(a);
    let n = phi.commutator_vec(a);
    let lhs4 = a.laplacian().sub(&a.div().grad()).add(&m.curl().scale(ig));
    let rhs4 = a
        .dt()
        .dt()
        .scale_real(1.0 / (c * c))
        .add(&phi.grad().dt_over_c())
        .add(&n.dt_over_c().scale(ig));
    vec![
        named("p1", "∇·(A×A)", m.div()),
        named("p2", "∇×[φ,A] + (1/c)∂_t(A×A)", n.curl().add(&m.dt_over_c())),
        named("p3", "(1/c)∂_t(∇·A) + ∇²φ + ig∇·[φ,A]", a.div().dt_over_c().add(&phi.laplacian()).add(&n.div().scale(ig))),
        named(
            "p4",
            "−∇(∇·A) + ∇²A + ig∇×(A×A) − (1/c²)∂²_tA − (1/c)∂_t∇φ − (ig/c)∂_t[φ,A]",
            lhs4.sub(&rhs4),
        ),
    ]
}

pub fn potential_conditions(a: &HarmonicVectorField, phi: &HarmonicScalarField, tol: f64) -> ResidualReport {
    ResidualReport::from_residuals("potential", potential_scale(a, phi), &potential_condition_fields(a, phi), tol)
}

/// The four self-interaction blocks W₁…W₄.
pub fn w_term_fields(a: &HarmonicVectorField, phi: &HarmonicScalarField) -> Vec<NamedResidual> {
    let ig = ic(a.ctx().g());
    let a_dot = a.dt_over_c();
    let grad_phi = phi.grad();
    let curl_a = a.curl();
    let w1 = a.dot(&a_dot).sub(&a_dot.dot(a)).add(&a.dot(&grad_phi)).sub(&grad_phi.dot(a)).scale(-ig);
    let w2 = a
        .cross(&a_dot)
        .add(&a_dot.cross(a))
        .add(&phi.commutator_vec(&curl_a))
        .add(&grad_phi.cross(a))
        .add(&a.cross(&grad_phi))
        .scale(ig);
    let w3 = a.cross(a).div().scale(-ig);
    let w4 = phi
        .commutator_vec(&a_dot)
        .add(&phi.commutator_vec(&grad_phi))
        .sub(&a.cross(&curl_a))
        .sub(&curl_a.cross(a))
        .scale(-ig);
    vec![
        named("w1", "−ig{A·Ȧ − Ȧ·A + A·∇φ − ∇φ·A}, Ȧ = (1/c)∂_tA", w1),
        named("w2", "ig{A×Ȧ + Ȧ×A + [φ,∇×A] + ∇φ×A + A×∇φ}", w2),
        named("w3", "−ig∇·(A×A)", w3),
        named("w4", "−ig{[φ,Ȧ] + [φ,∇φ] − A×(∇×A) − (∇×A)×A}", w4),
    ]
}

pub fn w_terms(a: &HarmonicVectorField, phi: &HarmonicScalarField, tol: f64) -> ResidualReport {
    ResidualReport::from_residuals("w_terms", potential_scale(a, phi), &w_term_fields(a, phi), tol)
}

/// Transversality and orthogonality identities of a field pair.
pub fn property_fields(b: &HarmonicVectorField, e: &HarmonicVectorField) -> Vec<NamedResidual> {
    let kh = b.ctx().k_hat();
    let e_cross_b = e.cross(b);
    let along = e_cross_b.real_dot(&kh).times_vector(&kh);
    vec![
        named("k_dot_b", "k̂·B", b.real_dot(&kh)),
        named("k_dot_e", "k̂·E", e.real_dot(&kh)),
        named("b_dot_e", "B·E", b.dot(e)),
        named("b_minus_k_cross_e", "B − k̂×E", b.sub(&HarmonicVectorField::real_cross(&kh, e))),
        named("e_minus_b_cross_k", "E − B×k̂", e.sub(&b.cross_real(&kh))),
        named("b_cross_b", "B×B", b.cross(b)),
        named("e_cross_e", "E×E", e.cross(e)),
        named("e_cross_b_perp", "E×B − k̂(k̂·(E×B))", e_cross_b.sub(&along)),
    ]
}

pub fn property_battery(b: &HarmonicVectorField, e: &HarmonicVectorField, tol: f64) -> ResidualReport {
    let scale = b.norm().max(e.norm()).max(1.0);
    ResidualReport::from_residuals("properties", scale, &property_fields(b, e), tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_pass_is_and_of_items() {
        let mut r = ResidualReport::new("t", 2.0);
        r.push("a", "", 1e-13, 1e-12, None);
        assert!(r.overall_pass);
        r.push("b", "", 1.0, 1e-12, Some(3));
        assert!(!r.overall_pass);
        assert_eq!(r.failing(), vec!["b"]);
        assert_eq!(r.item("b").unwrap().residual_norm, 0.5);
    }

    #[test]
    fn scale_floor_is_one() {
        assert_eq!(ResidualReport::new("t", 0.0).scale, 1.0);
    }

    #[test]
    fn nan_never_passes() {
        let mut r = ResidualReport::new("t", 1.0);
        r.push("a", "", f64::NAN, 1e-12, None);
        assert!(!r.overall_pass);
    }
}
