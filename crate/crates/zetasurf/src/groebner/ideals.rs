//! Ideal constructors for the surface family: the branch-curve singular
//! locus in each chart, the pencil-of-sections singularity scheme, and the
//! tangency minor ideal. These feed the emptiness / dimension / elimination
//! queries that certify smoothness and the singular-member count.

use super::buchberger::buchberger;
use super::mpoly::{MPoly, MonomialOrder};
use super::queries::saturate;
use crate::coeff::CoeffField;
use crate::error::Result;
use crate::series::section_expansions;
use crate::surface::SurfaceParams;

/// Variable layout: 0 = x, 1 = y, 2 = z (fiber coordinate), 3 = lambda
/// (pencil parameter, when present). The near-identity charts use 0 = t,
/// 1 = u instead.
pub const GENERIC_ARITY: usize = 3;
pub const PENCIL_ARITY: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularChart {
    /// Coordinates (x, y, z) with z = Z0/Z1; misses the fibers over the
    /// 2-torsion kernel and the locus Z1 = 0.
    Generic,
    /// Z0 and Z1 interchanged; by the involution symmetry this chart is
    /// redundant and serves as a cross-check.
    Z1Zero,
    /// The fiber over the group identity, patch Z1 = 1, coordinates (t, u).
    NearO,
    /// The same fiber, complementary patch Z0' = 1; covers the single point
    /// the NearO patch misses.
    NearOSwapped,
}

fn constant<F: CoeffField>(field: &F, v: i64, arity: usize) -> MPoly<F> {
    MPoly::constant(field.clone(), field.from_int(v), arity, MonomialOrder::GrevLex)
}

/// y^2 - c(x).
pub fn curve_relation<F: CoeffField>(
    field: &F,
    params: &SurfaceParams,
    arity: usize,
) -> MPoly<F> {
    let ord = MonomialOrder::GrevLex;
    let x = MPoly::var(field.clone(), 0, arity, ord);
    let y = MPoly::var(field.clone(), 1, arity, ord);
    let c = x
        .pow(3)
        .add(&x.pow(2).mul(&constant(field, params.cubic[2], arity)))
        .add(&x.mul(&constant(field, params.cubic[1], arity)))
        .add(&constant(field, params.cubic[0], arity));
    y.pow(2).sub(&c)
}

/// c'(x) = 3x^2 + 2 c2 x + c1.
fn cubic_derivative<F: CoeffField>(
    field: &F,
    params: &SurfaceParams,
    arity: usize,
) -> MPoly<F> {
    let ord = MonomialOrder::GrevLex;
    let x = MPoly::var(field.clone(), 0, arity, ord);
    x.pow(2)
        .scale(&field.from_int(3))
        .add(&x.scale(&field.from_int(2 * params.cubic[2])))
        .add(&constant(field, params.cubic[1], arity))
}

/// The seven fiber sections multiplied by (x - alpha)^2 to clear
/// denominators, in the chart z = Z0/Z1 (or the swapped chart when
/// `reversed`). Slot j of the underlying sextic is z^j.
pub fn section_polys<F: CoeffField>(
    field: &F,
    params: &SurfaceParams,
    arity: usize,
    reversed: bool,
) -> [MPoly<F>; 7] {
    let ord = MonomialOrder::GrevLex;
    let x = MPoly::var(field.clone(), 0, arity, ord);
    let y = MPoly::var(field.clone(), 1, arity, ord);
    let zp = |j: u32| -> MPoly<F> {
        let e = if reversed { 6 - j } else { j };
        MPoly::var(field.clone(), 2, arity, ord).pow(e)
    };
    let d = x.sub(&constant(field, params.alpha, arity)); // x - alpha
    let a_val = constant(field, params.a_const(), arity);
    let d2 = d.pow(2);
    let d3 = d.pow(3);
    let d4 = d.pow(4);

    [
        // (x-a)^3 z^6 + A (x-a)
        d3.mul(&zp(6)).add(&a_val.mul(&d)),
        // (x-a)^4 z^6 + A^2
        d4.mul(&zp(6)).add(&a_val.pow(2)),
        // (x-a)^3 z^5 + A (x-a) z
        d3.mul(&zp(5)).add(&a_val.mul(&d).mul(&zp(1))),
        // y (x-a)^2 z^5 - A y z
        y.mul(&d2).mul(&zp(5)).sub(&a_val.mul(&y).mul(&zp(1))),
        // (x-a)^2 (z^4 + z^2)
        d2.mul(&zp(4).add(&zp(2))),
        // (x-a)^3 z^4 + A (x-a) z^2
        d3.mul(&zp(4)).add(&a_val.mul(&d).mul(&zp(2))),
        // (x-a)^2 z^3
        d2.mul(&zp(3)),
    ]
}

/// sum coeffs[i] * section_i, denominators cleared.
pub fn section_combination<F: CoeffField>(
    field: &F,
    params: &SurfaceParams,
    coeffs: &[i64; 7],
    arity: usize,
    reversed: bool,
) -> MPoly<F> {
    let sections = section_polys(field, params, arity, reversed);
    let mut acc = MPoly::zero(field.clone(), arity, MonomialOrder::GrevLex);
    for (s, &c) in sections.iter().zip(coeffs) {
        if c != 0 {
            acc = acc.add(&s.scale(&field.from_int(c)));
        }
    }
    acc
}

/// The everywhere-regular derivation along the base curve:
/// D = 2y d/dx + c'(x) d/dy. On the curve it equals 2y times the total
/// x-derivative, so its vanishing locus matches away from y = 0, and at
/// y = 0 it reduces to c'(x) d/dy which is the correct condition there.
pub fn curve_derivation<F: CoeffField>(f: &MPoly<F>, params: &SurfaceParams) -> MPoly<F> {
    let field = &f.field.clone();
    let arity = f.arity;
    let y = MPoly::var(field.clone(), 1, arity, MonomialOrder::GrevLex);
    let two_y = y.scale(&field.from_int(2));
    let cd = cubic_derivative(field, params, arity);
    two_y.mul(&f.derivative(0)).add(&cd.mul(&f.derivative(1)))
}

/// Generators whose vanishing locus is the singular locus of the branch
/// curve in the requested chart. Emptiness in every chart certifies
/// smoothness.
pub fn singular_locus_ideal<F: CoeffField>(
    field: &F,
    params: &SurfaceParams,
    chart: SingularChart,
) -> Result<Vec<MPoly<F>>> {
    params.validate()?;
    match chart {
        SingularChart::Generic => affine_chart_ideal(field, params, false),
        SingularChart::Z1Zero => affine_chart_ideal(field, params, true),
        SingularChart::NearO => Ok(identity_fiber_ideal(field, params, false)),
        SingularChart::NearOSwapped => Ok(identity_fiber_ideal(field, params, true)),
    }
}

fn affine_chart_ideal<F: CoeffField>(
    field: &F,
    params: &SurfaceParams,
    reversed: bool,
) -> Result<Vec<MPoly<F>>> {
    let arity = GENERIC_ARITY;
    let curve = curve_relation(field, params, arity);
    let section = section_combination(field, params, &params.a, arity, reversed);
    let d_fiber = section.derivative(2);
    let d_base = curve_derivation(&section, params);
    let gens = vec![curve, section, d_fiber, d_base];
    // clearing denominators introduced the spurious component x = alpha
    let x = MPoly::var(field.clone(), 0, arity, MonomialOrder::GrevLex);
    let shift = x.sub(&constant(field, params.alpha, arity));
    saturate(&gens, &shift)
}

/// Singularity conditions on the fiber over the identity: the equation
/// there is F0(u) + t F1(u) + O(t^2), so a singular point at t = 0 needs
/// F0 = dF0/du = F1 = 0. The two patches cover the whole fiber.
fn identity_fiber_ideal<F: CoeffField>(
    field: &F,
    params: &SurfaceParams,
    swapped: bool,
) -> Vec<MPoly<F>> {
    let ord = MonomialOrder::GrevLex;
    let chis = section_expansions(field.clone(), &params.cubic, params.alpha, 4);
    let u = MPoly::var(field.clone(), 1, 2, ord);
    let mut f0 = MPoly::zero(field.clone(), 2, ord);
    let mut f1 = MPoly::zero(field.clone(), 2, ord);
    for (i, chi) in chis.iter().enumerate() {
        if params.a[i] == 0 {
            continue;
        }
        let scale = field.from_int(params.a[i]);
        for (j, slot) in chi.iter().enumerate() {
            let e = if swapped { 6 - j } else { j } as u32;
            let c0 = slot.coeff(0);
            if !field.is_zero(&c0) {
                f0 = f0.add(&u.pow(e).scale(&field.mul(&c0, &scale)));
            }
            let c1 = slot.coeff(1);
            if !field.is_zero(&c1) {
                f1 = f1.add(&u.pow(e).scale(&field.mul(&c1, &scale)));
            }
        }
    }
    let t = MPoly::var(field.clone(), 0, 2, ord);
    vec![t, f0.clone(), f0.derivative(1), f1]
}

/// The scheme of points (x, y, z, lambda) where the pencil member
/// second + lambda * first is singular, with the spurious x = alpha
/// component saturated away. Returns generators of the saturation.
pub fn pencil_singularity_ideal<F: CoeffField>(
    field: &F,
    params: &SurfaceParams,
    first: &[i64; 7],
    second: &[i64; 7],
) -> Result<Vec<MPoly<F>>> {
    params.validate()?;
    let arity = PENCIL_ARITY;
    let ord = MonomialOrder::GrevLex;
    let lambda = MPoly::var(field.clone(), 3, arity, ord);
    let s1 = section_combination(field, params, first, arity, false);
    let s2 = section_combination(field, params, second, arity, false);
    let member = s2.add(&lambda.mul(&s1));
    let curve = curve_relation(field, params, arity);
    let d_fiber = member.derivative(2);
    let d_base = curve_derivation(&member, params);
    let gens = vec![curve, member, d_fiber, d_base];
    let x = MPoly::var(field.clone(), 0, arity, ord);
    let shift = x.sub(&constant(field, params.alpha, arity));
    saturate(&gens, &shift)
}

/// The 3x3 minors of the 3x4 matrix whose columns are the sections
/// (psi_0, psi_1, first, second) and whose rows are values, base
/// derivatives, and fiber derivatives. Full rank at every singular point
/// certifies that each singular member is pinned by one of its points.
pub fn tangency_minor_ideal<F: CoeffField>(
    field: &F,
    params: &SurfaceParams,
    first: &[i64; 7],
    second: &[i64; 7],
) -> Result<Vec<MPoly<F>>> {
    params.validate()?;
    let arity = PENCIL_ARITY;
    let sections = section_polys(field, params, arity, false);
    let mut basis0 = [0i64; 7];
    basis0[0] = 1;
    let mut basis1 = [0i64; 7];
    basis1[1] = 1;
    let combine = |coeffs: &[i64; 7]| -> MPoly<F> {
        let mut acc = MPoly::zero(field.clone(), arity, MonomialOrder::GrevLex);
        for (s, &c) in sections.iter().zip(coeffs) {
            if c != 0 {
                acc = acc.add(&s.scale(&field.from_int(c)));
            }
        }
        acc
    };
    let cols = [combine(&basis0), combine(&basis1), combine(first), combine(second)];
    let rows: Vec<Vec<MPoly<F>>> = vec![
        cols.to_vec(),
        cols.iter().map(|c| curve_derivation(c, params)).collect(),
        cols.iter().map(|c| c.derivative(2)).collect(),
    ];
    let det3 = |c0: usize, c1: usize, c2: usize| -> MPoly<F> {
        let m = |r: usize, c: usize| &rows[r][c];
        let term = |a: usize, b: usize, c: usize| m(0, a).mul(&m(1, b).mul(m(2, c)));
        term(c0, c1, c2)
            .sub(&term(c0, c2, c1))
            .add(&term(c1, c2, c0))
            .sub(&term(c1, c0, c2))
            .add(&term(c2, c0, c1))
            .sub(&term(c2, c1, c0))
    };
    Ok(vec![det3(0, 1, 2), det3(0, 1, 3), det3(0, 2, 3), det3(1, 2, 3)])
}

/// Convenience: reduced basis of the union of two generator sets.
pub fn combined_basis<F: CoeffField>(
    a: &[MPoly<F>],
    b: &[MPoly<F>],
) -> Result<super::buchberger::GroebnerBasis<F>> {
    let mut gens = a.to_vec();
    gens.extend_from_slice(b);
    buchberger(&gens, MonomialOrder::GrevLex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{ModP, QQ};
    use crate::groebner::queries::is_empty_variety;

    fn x1_params() -> SurfaceParams {
        SurfaceParams { cubic: [-1, 1, -1], alpha: 1, a: [1, 0, 0, 1, 0, -1, 1] }
    }

    /// The reference pencil: first member is the branch section itself.
    pub const PENCIL_FIRST: [i64; 7] = [1, 0, 0, 1, 0, -1, 1];
    pub const PENCIL_SECOND: [i64; 7] = [1, 1, 1, 0, 0, 0, 0];

    #[test]
    fn sections_match_pointwise_evaluation() {
        // the cleared polynomials agree with (x-alpha)^2 * psi_i evaluated
        // through the field implementation
        use crate::field::FieldCtx;
        use crate::surface::SurfaceFq;
        let ctx = FieldCtx::new(7, 1, None).unwrap();
        let surf = SurfaceFq::reduce(&x1_params(), &ctx).unwrap();
        let f7 = ModP::new(7);
        let polys = section_polys(&f7, &x1_params(), 3, false);
        for q in surf.generic_base_points().unwrap() {
            let (qx, qy) = match q {
                crate::elliptic::CurvePoint::Affine(a, b) => (a, b),
                _ => continue,
            };
            let dx = ctx.sub(qx, surf.alpha);
            let clear = ctx.mul(dx, dx);
            for z in ctx.elements() {
                for (i, poly) in polys.iter().enumerate() {
                    let direct = surf.eval_section(i, q, z, crate::field::Fq::ONE).unwrap();
                    let want = ctx.mul(clear, direct);
                    // evaluate the polynomial at (x, y, z)
                    let mut value = 0u64;
                    for (m, c) in &poly.terms {
                        let mut term = *c;
                        let vals = [qx, qy, z];
                        for (vi, &e) in m.exps.iter().enumerate() {
                            for _ in 0..e {
                                term = term * (vals[vi].0 as u64) % 7;
                            }
                        }
                        value = (value + term) % 7;
                    }
                    assert_eq!(value, want.0 as u64, "section {i} at {q:?}, z={z:?}");
                }
            }
        }
    }

    #[test]
    fn designated_surface_is_smooth_over_f3_all_charts() {
        let f3 = ModP::new(3);
        for chart in [
            SingularChart::Generic,
            SingularChart::Z1Zero,
            SingularChart::NearO,
            SingularChart::NearOSwapped,
        ] {
            let gens = singular_locus_ideal(&f3, &x1_params(), chart).unwrap();
            assert!(
                is_empty_variety(&gens).unwrap(),
                "chart {chart:?} not empty over F_3"
            );
        }
    }

    #[test]
    fn designated_surface_is_smooth_over_the_rationals() {
        for chart in [
            SingularChart::Generic,
            SingularChart::Z1Zero,
            SingularChart::NearO,
            SingularChart::NearOSwapped,
        ] {
            let gens = singular_locus_ideal(&QQ, &x1_params(), chart).unwrap();
            assert!(
                is_empty_variety(&gens).unwrap(),
                "chart {chart:?} not empty over Q"
            );
        }
    }

    #[test]
    fn degenerate_parameters_have_singular_branch() {
        // a = (0, ..., 0, 1): the section is the doubled fiber pair
        // Z0^3 Z1^3, singular everywhere along it
        let mut params = x1_params();
        params.a = [0, 0, 0, 0, 0, 0, 1];
        let f3 = ModP::new(3);
        let gens = singular_locus_ideal(&f3, &params, SingularChart::Generic).unwrap();
        assert!(!is_empty_variety(&gens).unwrap());
    }
}
