//! The explicit double-cover surface model over a 2-isogeny of elliptic
//! curves: the seven fiber sections, generic and special fiber sextics in the
//! weighted plane P(1,1,3), the free involution with its lift to surface
//! points, and the tangency matrix at opposite base points.

use crate::coeff::QQ;
use crate::elliptic::{Curve, CurvePoint};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, Fq};
use crate::series::{section_expansions, FormSeries};
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Defining data of one surface in the family: the base curve y^2 = c(x),
/// the 2-torsion x-coordinate alpha (with c(alpha) = 0), and the parameter
/// vector a selecting the branch section sum(a_i psi_i).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceParams {
    /// Non-leading coefficients of the monic cubic, constant first.
    pub cubic: [i64; 3],
    pub alpha: i64,
    pub a: [i64; 7],
}

impl SurfaceParams {
    pub fn validate(&self) -> Result<()> {
        let [c0, c1, c2] = self.cubic;
        let al = self.alpha;
        if al * al * al + c2 * al * al + c1 * al + c0 != 0 {
            return Err(Error::BadParams(format!(
                "alpha = {al} is not a root of the cubic {:?}",
                self.cubic
            )));
        }
        if self.a_const() == 0 {
            return Err(Error::BadParams(
                "c'(alpha) = 0: the 2-torsion point is singular".into(),
            ));
        }
        if self.a.iter().all(|&v| v == 0) {
            return Err(Error::BadParams("parameter vector a must be nonzero".into()));
        }
        Ok(())
    }

    /// The constant A = c'(alpha).
    pub fn a_const(&self) -> i64 {
        let [_, c1, c2] = self.cubic;
        3 * self.alpha * self.alpha + 2 * c2 * self.alpha + c1
    }

    pub fn digest(&self) -> String {
        use sha2::{Digest, Sha256};
        let json = serde_json::to_string(self).expect("params serialize");
        hex::encode(Sha256::digest(json.as_bytes()))
    }
}

/// Values of the four coordinate functions at a base point Q away from the
/// 2-torsion kernel: dx0 = x(Q) - alpha, y0 = y(Q), dx1 = x(Q+C) - alpha,
/// y1 = y(Q+C).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverFrame {
    pub dx0: Fq,
    pub y0: Fq,
    pub dx1: Fq,
    pub y1: Fq,
}

/// A binary sextic sum f_j Z0^j Z1^(6-j); the right-hand side of a fiber
/// equation y^2 = f(Z0, Z1) in P(1,1,3).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BinarySextic {
    /// f[j] multiplies Z0^j Z1^(6-j).
    pub f: [Fq; 7],
}

impl BinarySextic {
    pub fn is_zero(&self) -> bool {
        self.f.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, ctx: &FieldCtx, z0: Fq, z1: Fq) -> Fq {
        // Horner in z0 with a z1 twist: sum f_j z0^j z1^(6-j)
        let mut acc = Fq::ZERO;
        for j in (0..7).rev() {
            acc = ctx.add(ctx.mul(acc, z0), ctx.mul(self.f[j], ctx.pow(z1, 6 - j as u64)));
        }
        acc
    }

    /// The sextic with Z0 and Z1 interchanged.
    pub fn reversed(&self) -> BinarySextic {
        let mut f = self.f;
        f.reverse();
        BinarySextic { f }
    }
}

/// A point of the surface in weighted coordinates (Q; Z0 : Z1 : y), stored
/// as the canonical representative with the first nonzero of (Z0, Z1)
/// scaled to 1 (which pins y as well, since the weights are (1,1,3)).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedPoint {
    pub base: CurvePoint,
    pub z0: Fq,
    pub z1: Fq,
    pub y: Fq,
}

impl WeightedPoint {
    pub fn canonical(ctx: &FieldCtx, base: CurvePoint, z0: Fq, z1: Fq, y: Fq) -> WeightedPoint {
        assert!(!(z0.is_zero() && z1.is_zero()), "(0 : 0) is not a projective point");
        if !z0.is_zero() {
            let l = ctx.inv(z0);
            let l3 = ctx.mul(ctx.mul(l, l), l);
            WeightedPoint { base, z0: Fq::ONE, z1: ctx.mul(z1, l), y: ctx.mul(y, l3) }
        } else {
            let l = ctx.inv(z1);
            let l3 = ctx.mul(ctx.mul(l, l), l);
            WeightedPoint { base, z0: Fq::ZERO, z1: Fq::ONE, y: ctx.mul(y, l3) }
        }
    }
}

/// A surface with its parameters reduced to a fixed finite field.
pub struct SurfaceFq<'a> {
    pub ctx: &'a FieldCtx,
    pub curve: Curve,
    pub alpha: Fq,
    /// A = c'(alpha) in the field.
    pub a_const: Fq,
    pub a: [Fq; 7],
    /// The 2-torsion point C = (alpha, 0).
    pub c_point: CurvePoint,
}

impl<'a> SurfaceFq<'a> {
    pub fn reduce(params: &SurfaceParams, ctx: &'a FieldCtx) -> Result<SurfaceFq<'a>> {
        params.validate()?;
        let curve = Curve::from_ints(ctx, params.cubic)?;
        let alpha = ctx.from_int(params.alpha);
        let a_const = curve.eval_cubic_derivative(ctx, alpha);
        if a_const.is_zero() {
            return Err(Error::BadParams(format!(
                "c'(alpha) vanishes modulo {}",
                ctx.p()
            )));
        }
        let mut a = [Fq::ZERO; 7];
        for (slot, &v) in a.iter_mut().zip(params.a.iter()) {
            *slot = ctx.from_int(v);
        }
        if a.iter().all(|c| c.is_zero()) {
            return Err(Error::BadParams(format!(
                "parameter vector vanishes modulo {}",
                ctx.p()
            )));
        }
        Ok(SurfaceFq { ctx, curve, alpha, a_const, a, c_point: CurvePoint::Affine(alpha, Fq::ZERO) })
    }

    pub fn is_special_base(&self, q: CurvePoint) -> bool {
        q == CurvePoint::Infinity || q == self.c_point
    }

    /// Base points of the generic fibers over the context field.
    pub fn generic_base_points(&self) -> Result<Vec<CurvePoint>> {
        Ok(self
            .curve
            .enumerate_points(self.ctx)?
            .into_iter()
            .filter(|&q| !self.is_special_base(q))
            .collect())
    }

    pub fn cover_frame(&self, q: CurvePoint) -> Result<CoverFrame> {
        let ctx = self.ctx;
        let (x, y) = match q {
            CurvePoint::Infinity => return Err(Error::SpecialFiber),
            CurvePoint::Affine(x, y) => (x, y),
        };
        if q == self.c_point {
            return Err(Error::SpecialFiber);
        }
        let dx0 = ctx.sub(x, self.alpha);
        let inv = ctx.inv(dx0);
        let dx1 = ctx.mul(self.a_const, inv);
        let y1 = ctx.neg(ctx.mul(ctx.mul(self.a_const, y), ctx.mul(inv, inv)));
        Ok(CoverFrame { dx0, y0: y, dx1, y1 })
    }

    /// Pointwise value of the i-th basis section at (Q; Z0 : Z1).
    pub fn eval_section(&self, i: usize, q: CurvePoint, z0: Fq, z1: Fq) -> Result<Fq> {
        let ctx = self.ctx;
        let fr = self.cover_frame(q)?;
        let pw = |b: Fq, e: u64| ctx.pow(b, e);
        let val = match i {
            0 => ctx.add(ctx.mul(fr.dx0, pw(z0, 6)), ctx.mul(fr.dx1, pw(z1, 6))),
            1 => ctx.add(
                ctx.mul(ctx.mul(fr.dx0, fr.dx0), pw(z0, 6)),
                ctx.mul(ctx.mul(fr.dx1, fr.dx1), pw(z1, 6)),
            ),
            2 => ctx.add(
                ctx.mul(fr.dx0, ctx.mul(pw(z0, 5), z1)),
                ctx.mul(fr.dx1, ctx.mul(z0, pw(z1, 5))),
            ),
            3 => ctx.add(
                ctx.mul(fr.y0, ctx.mul(pw(z0, 5), z1)),
                ctx.mul(fr.y1, ctx.mul(z0, pw(z1, 5))),
            ),
            4 => ctx.add(
                ctx.mul(pw(z0, 4), pw(z1, 2)),
                ctx.mul(pw(z0, 2), pw(z1, 4)),
            ),
            5 => ctx.add(
                ctx.mul(fr.dx0, ctx.mul(pw(z0, 4), pw(z1, 2))),
                ctx.mul(fr.dx1, ctx.mul(pw(z0, 2), pw(z1, 4))),
            ),
            6 => ctx.mul(pw(z0, 3), pw(z1, 3)),
            _ => panic!("section index out of range"),
        };
        Ok(val)
    }

    /// The fiber sextic over a generic base point, collected in the
    /// Z0^j Z1^(6-j) basis.
    pub fn generic_fiber_poly(&self, q: CurvePoint) -> Result<BinarySextic> {
        let ctx = self.ctx;
        let fr = self.cover_frame(q)?;
        let [a0, a1, a2, a3, a4, a5, a6] = self.a;
        let mut f = [Fq::ZERO; 7];
        // psi_0, psi_1 contribute to Z0^6 and Z1^6
        f[6] = ctx.add(
            ctx.mul(a0, fr.dx0),
            ctx.mul(a1, ctx.mul(fr.dx0, fr.dx0)),
        );
        f[0] = ctx.add(
            ctx.mul(a0, fr.dx1),
            ctx.mul(a1, ctx.mul(fr.dx1, fr.dx1)),
        );
        // psi_2, psi_3 contribute to Z0^5 Z1 and Z0 Z1^5
        f[5] = ctx.add(ctx.mul(a2, fr.dx0), ctx.mul(a3, fr.y0));
        f[1] = ctx.add(ctx.mul(a2, fr.dx1), ctx.mul(a3, fr.y1));
        // psi_4, psi_5 contribute to Z0^4 Z1^2 and Z0^2 Z1^4
        f[4] = ctx.add(a4, ctx.mul(a5, fr.dx0));
        f[2] = ctx.add(a4, ctx.mul(a5, fr.dx1));
        // psi_6
        f[3] = a6;
        Ok(BinarySextic { f })
    }

    /// The sextic of the fibers over the identity and over C (the two are
    /// isomorphic over the base field), in coordinates (Z0', Z1).
    pub fn special_fiber_poly(&self) -> BinarySextic {
        let ctx = self.ctx;
        let [a0, _a1, _a2, a3, _a4, _a5, _a6] = self.a;
        let mut f = [Fq::ZERO; 7];
        f[6] = self.a[1];
        f[5] = a3;
        f[4] = self.a[5];
        f[2] = self.a[4];
        f[1] = ctx.neg(ctx.mul(a3, self.a_const));
        f[0] = ctx.mul(a0, self.a_const);
        BinarySextic { f }
    }

    /// Lift of the base translation to surface points:
    /// (Q; Z0 : Z1 : y) -> (Q + C; Z1 : Z0 : y), then canonicalized.
    pub fn involution(&self, pt: WeightedPoint) -> Result<WeightedPoint> {
        if self.is_special_base(pt.base) {
            return Err(Error::SpecialFiber);
        }
        let moved = self.curve.add_unchecked(self.ctx, pt.base, self.c_point);
        Ok(WeightedPoint::canonical(self.ctx, moved, pt.z1, pt.z0, pt.y))
    }

    /// Coordinate-wise Frobenius followed by re-canonicalization.
    pub fn frobenius_point(&self, pt: WeightedPoint) -> WeightedPoint {
        let ctx = self.ctx;
        let base = match pt.base {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => {
                CurvePoint::Affine(ctx.frobenius(x, 1), ctx.frobenius(y, 1))
            }
        };
        WeightedPoint::canonical(
            ctx,
            base,
            ctx.frobenius(pt.z0, 1),
            ctx.frobenius(pt.z1, 1),
            ctx.frobenius(pt.y, 1),
        )
    }

    /// Checks the defining relation y^2 = F_Q(Z0, Z1) of a point.
    pub fn point_on_surface(&self, pt: WeightedPoint) -> Result<bool> {
        let f = self.generic_fiber_poly(pt.base)?;
        Ok(self.ctx.mul(pt.y, pt.y) == f.eval(self.ctx, pt.z0, pt.z1))
    }

    /// The 4x7 matrix of section values and x-derivatives at the two points
    /// (Q; -1 : 1) and (-Q; -1 : 1). Rows: values at Q, values at -Q,
    /// derivatives at Q, derivatives at -Q.
    pub fn tangency_matrix(&self, q: CurvePoint) -> Result<[[Fq; 7]; 4]> {
        let ctx = self.ctx;
        match q {
            CurvePoint::Affine(_, y) if !y.is_zero() => {}
            _ => return Err(Error::TwoTorsionBase),
        }
        let neg_q = self.curve.negate(ctx, q);
        let mut rows = [[Fq::ZERO; 7]; 4];
        for (slot, &base) in [q, neg_q].iter().enumerate() {
            let fr = self.cover_frame(base)?;
            let (x, y) = match base {
                CurvePoint::Affine(x, y) => (x, y),
                CurvePoint::Infinity => unreachable!(),
            };
            let g_sum = ctx.add(fr.dx0, fr.dx1);
            let g2_sum = ctx.add(ctx.mul(fr.dx0, fr.dx0), ctx.mul(fr.dx1, fr.dx1));
            let h_sum = ctx.add(fr.y0, fr.y1);
            rows[slot] = [
                g_sum,
                g2_sum,
                ctx.neg(g_sum),
                ctx.neg(h_sum),
                ctx.from_int(2),
                g_sum,
                ctx.neg(Fq::ONE),
            ];
            // x-derivatives along the curve, with dy/dx = c'(x) / (2y)
            let inv = ctx.inv(fr.dx0);
            let inv2 = ctx.mul(inv, inv);
            let inv3 = ctx.mul(inv2, inv);
            let g0d = Fq::ONE;
            let g1d = ctx.neg(ctx.mul(self.a_const, inv2));
            let yd = ctx.div(
                self.curve.eval_cubic_derivative(ctx, x),
                ctx.mul(ctx.from_int(2), y),
            );
            // d/dx of -A y / (x - alpha)^2 = -A (y' (x-alpha) - 2y) / (x-alpha)^3
            let h1d = ctx.neg(ctx.mul(
                self.a_const,
                ctx.mul(
                    ctx.sub(ctx.mul(yd, fr.dx0), ctx.mul(ctx.from_int(2), y)),
                    inv3,
                ),
            ));
            let gd_sum = ctx.add(g0d, g1d);
            let g2d_sum = ctx.mul(
                ctx.from_int(2),
                ctx.add(ctx.mul(fr.dx0, g0d), ctx.mul(fr.dx1, g1d)),
            );
            let hd_sum = ctx.add(yd, h1d);
            rows[slot + 2] = [
                gd_sum,
                g2d_sum,
                ctx.neg(gd_sum),
                ctx.neg(hd_sum),
                Fq::ZERO,
                gd_sum,
                Fq::ZERO,
            ];
        }
        Ok(rows)
    }

    /// Nullity of the tangency matrix over the context field.
    pub fn tangency_kernel_dim(&self, q: CurvePoint) -> Result<usize> {
        let m = self.tangency_matrix(q)?;
        Ok(7 - matrix_rank(self.ctx, &m))
    }

    /// True when every 4x4 minor of the tangency matrix vanishes.
    pub fn tangency_minors_vanish(&self, q: CurvePoint) -> Result<bool> {
        let m = self.tangency_matrix(q)?;
        let ctx = self.ctx;
        for c0 in 0..7 {
            for c1 in c0 + 1..7 {
                for c2 in c1 + 1..7 {
                    for c3 in c2 + 1..7 {
                        let cols = [c0, c1, c2, c3];
                        if !det4(ctx, &m, cols).is_zero() {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }
}

fn det4(ctx: &FieldCtx, m: &[[Fq; 7]; 4], cols: [usize; 4]) -> Fq {
    // Laplace expansion along the first row over the 4 selected columns.
    fn det3(ctx: &FieldCtx, a: [[Fq; 3]; 3]) -> Fq {
        let mut acc = Fq::ZERO;
        acc = ctx.add(
            acc,
            ctx.mul(a[0][0], ctx.sub(ctx.mul(a[1][1], a[2][2]), ctx.mul(a[1][2], a[2][1]))),
        );
        acc = ctx.sub(
            acc,
            ctx.mul(a[0][1], ctx.sub(ctx.mul(a[1][0], a[2][2]), ctx.mul(a[1][2], a[2][0]))),
        );
        ctx.add(
            acc,
            ctx.mul(a[0][2], ctx.sub(ctx.mul(a[1][0], a[2][1]), ctx.mul(a[1][1], a[2][0]))),
        )
    }
    let mut acc = Fq::ZERO;
    for k in 0..4 {
        let mut sub = [[Fq::ZERO; 3]; 3];
        for (ri, r) in (1..4).enumerate() {
            let mut ci = 0;
            for (idx, &c) in cols.iter().enumerate() {
                if idx == k {
                    continue;
                }
                sub[ri][ci] = m[r][c];
                ci += 1;
            }
        }
        let term = ctx.mul(m[0][cols[k]], det3(ctx, sub));
        if k % 2 == 0 {
            acc = ctx.add(acc, term);
        } else {
            acc = ctx.sub(acc, term);
        }
    }
    acc
}

pub fn matrix_rank(ctx: &FieldCtx, m: &[[Fq; 7]; 4]) -> usize {
    let mut a: Vec<Vec<Fq>> = m.iter().map(|r| r.to_vec()).collect();
    let (rows, cols) = (4, 7);
    let mut rank = 0;
    let mut col = 0;
    while rank < rows && col < cols {
        if let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) {
            a.swap(rank, pivot);
            let inv = ctx.inv(a[rank][col]);
            for c in col..cols {
                a[rank][c] = ctx.mul(a[rank][c], inv);
            }
            for r in 0..rows {
                if r != rank && !a[r][col].is_zero() {
                    let factor = a[r][col];
                    for c in col..cols {
                        let sub = ctx.mul(factor, a[rank][c]);
                        a[r][c] = ctx.sub(a[r][c], sub);
                    }
                }
            }
            rank += 1;
        }
        col += 1;
    }
    rank
}

// ---------------------------------------------------------------------------
// Special-fiber expansion report
// ---------------------------------------------------------------------------

/// One compared coefficient row of the special-fiber expansion check.
#[derive(Clone, Debug, Serialize)]
pub struct ChiRow {
    pub section: usize,
    pub order: usize,
    pub expected: Vec<String>,
    pub computed: Vec<String>,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChiReport {
    pub rows: Vec<ChiRow>,
    /// Section 6 equals t * Z0'^3 Z1^3 with no higher terms at all.
    pub section6_exact: bool,
}

/// Verifies that the symbolic expansion of t^-2 psi_i(t Z0', Z1) reproduces
/// the expected constant and t-linear parts, for the curve in `params`.
/// Exact rational arithmetic throughout.
pub fn chi_expansion_check(params: &SurfaceParams) -> Result<ChiReport> {
    params.validate()?;
    let prec = 6i64;
    let chis: [FormSeries<QQ>; 7] = section_expansions(QQ, &params.cubic, params.alpha, prec);
    let a_val = BigRational::from_integer(params.a_const().into());
    let zero = BigRational::zero();
    let one = BigRational::from_integer(1.into());

    // expected[(i, order)][slot]
    let mut expected = vec![vec![zero.clone(); 7]; 14];
    expected[0][0] = a_val.clone(); // chi_0 = A Z1^6 + O(t^2)
    expected[2][6] = one.clone(); // chi_1 = Z0'^6 + O(t^2)
    expected[5][5] = one.clone(); // chi_2 = t Z0'Z1 (Z0'^4 + A Z1^4) + O(t^3)
    expected[5][1] = a_val.clone();
    expected[6][5] = one.clone(); // chi_3 = Z0'Z1 (Z0'^4 - A Z1^4) + O(t^2)
    expected[6][1] = -a_val.clone();
    expected[8][2] = one.clone(); // chi_4 = Z0'^2 Z1^4 + O(t^2)
    expected[10][4] = one.clone(); // chi_5 = Z0'^4 Z1^2 + O(t^2)
    expected[13][3] = one.clone(); // chi_6 = t Z0'^3 Z1^3 exactly

    let mut rows = Vec::new();
    for i in 0..7 {
        for order in 0..=1usize {
            let exp_row = &expected[2 * i + order];
            let comp: Vec<BigRational> =
                (0..7).map(|j| chis[i][j].coeff(order as i64)).collect();
            let ok = comp == *exp_row;
            rows.push(ChiRow {
                section: i,
                order,
                expected: exp_row.iter().map(|c| c.to_string()).collect(),
                computed: comp.iter().map(|c| c.to_string()).collect(),
                ok,
            });
            if !ok {
                let slot = (0..7).find(|&j| comp[j] != exp_row[j]).unwrap();
                return Err(Error::ExpansionMismatch { section: i, order, z0_pow: slot });
            }
        }
    }

    // chi_6 has the single term t Z0'^3 Z1^3, with nothing beyond.
    let mut section6_exact = true;
    for (j, s) in chis[6].iter().enumerate() {
        for k in 0..s.prec() {
            let c = s.coeff(k);
            let want_one = j == 3 && k == 1;
            if (want_one && c != one) || (!want_one && !c.is_zero()) {
                section6_exact = false;
            }
        }
    }
    if !section6_exact {
        return Err(Error::ExpansionMismatch { section: 6, order: 2, z0_pow: 3 });
    }

    Ok(ChiReport { rows, section6_exact })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The bundled surface: y^2 = (x-1)(x^2+1), alpha = 1,
    /// a = (1 : 0 : 0 : 1 : 0 : -1 : 1).
    pub fn x1_params() -> SurfaceParams {
        SurfaceParams { cubic: [-1, 1, -1], alpha: 1, a: [1, 0, 0, 1, 0, -1, 1] }
    }

    fn f9() -> FieldCtx {
        FieldCtx::new(3, 2, None).unwrap()
    }

    #[test]
    fn designated_surface_validates_with_a_equal_2() {
        let p = x1_params();
        p.validate().unwrap();
        assert_eq!(p.a_const(), 2);
    }

    #[test]
    fn frame_identities_hold_exhaustively_over_f9() {
        let ctx = f9();
        let surf = SurfaceFq::reduce(&x1_params(), &ctx).unwrap();
        for q in surf.generic_base_points().unwrap() {
            let fr = surf.cover_frame(q).unwrap();
            // g0 g1 = A
            assert_eq!(ctx.mul(fr.dx0, fr.dx1), surf.a_const);
            // h0^2 = c(x)
            if let CurvePoint::Affine(x, _) = q {
                assert_eq!(ctx.mul(fr.y0, fr.y0), surf.curve.eval_cubic(&ctx, x));
                // h0 h1 = -A c(x) / (x - alpha)^2
                let inv2 = {
                    let i = ctx.inv(fr.dx0);
                    ctx.mul(i, i)
                };
                let rhs = ctx.neg(ctx.mul(
                    surf.a_const,
                    ctx.mul(surf.curve.eval_cubic(&ctx, x), inv2),
                ));
                assert_eq!(ctx.mul(fr.y0, fr.y1), rhs);
            }
            // translating by C swaps the frame
            let moved = surf.curve.add(&ctx, q, surf.c_point).unwrap();
            let fr2 = surf.cover_frame(moved).unwrap();
            assert_eq!((fr2.dx0, fr2.y0, fr2.dx1, fr2.y1), (fr.dx1, fr.y1, fr.dx0, fr.y0));
        }
    }

    #[test]
    fn special_base_points_are_rejected() {
        let ctx = f9();
        let surf = SurfaceFq::reduce(&x1_params(), &ctx).unwrap();
        assert!(matches!(
            surf.cover_frame(CurvePoint::Infinity),
            Err(Error::SpecialFiber)
        ));
        assert!(matches!(surf.cover_frame(surf.c_point), Err(Error::SpecialFiber)));
    }

    #[test]
    fn section_values_match_spot_formulas() {
        let ctx = f9();
        let surf = SurfaceFq::reduce(&x1_params(), &ctx).unwrap();
        for q in surf.generic_base_points().unwrap() {
            let fr = surf.cover_frame(q).unwrap();
            // psi_6 at (1 : 1) is 1; psi_0 at (1 : 0) is g0
            assert_eq!(surf.eval_section(6, q, Fq::ONE, Fq::ONE).unwrap(), Fq::ONE);
            assert_eq!(surf.eval_section(0, q, Fq::ONE, Fq::ZERO).unwrap(), fr.dx0);
        }
    }

    #[test]
    fn sections_are_invariant_under_the_involution_exhaustively() {
        let ctx = f9();
        let surf = SurfaceFq::reduce(&x1_params(), &ctx).unwrap();
        for q in surf.generic_base_points().unwrap() {
            let moved = surf.curve.add(&ctx, q, surf.c_point).unwrap();
            for i in 0..7 {
                for z0 in ctx.elements() {
                    for z1 in ctx.elements() {
                        if z0.is_zero() && z1.is_zero() {
                            continue;
                        }
                        assert_eq!(
                            surf.eval_section(i, moved, z1, z0).unwrap(),
                            surf.eval_section(i, q, z0, z1).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn fiber_poly_agrees_with_pointwise_section_sums() {
        let ctx = f9();
        let surf = SurfaceFq::reduce(&x1_params(), &ctx).unwrap();
        for q in surf.generic_base_points().unwrap() {
            let poly = surf.generic_fiber_poly(q).unwrap();
            for z0 in ctx.elements() {
                for z1 in ctx.elements() {
                    if z0.is_zero() && z1.is_zero() {
                        continue;
                    }
                    let mut direct = Fq::ZERO;
                    for i in 0..7 {
                        direct = ctx.add(
                            direct,
                            ctx.mul(surf.a[i], surf.eval_section(i, q, z0, z1).unwrap()),
                        );
                    }
                    assert_eq!(direct, poly.eval(&ctx, z0, z1));
                }
            }
        }
    }

    #[test]
    fn fiber_poly_reverses_under_translation() {
        let ctx = f9();
        let surf = SurfaceFq::reduce(&x1_params(), &ctx).unwrap();
        for q in surf.generic_base_points().unwrap() {
            let moved = surf.curve.add(&ctx, q, surf.c_point).unwrap();
            assert_eq!(
                surf.generic_fiber_poly(moved).unwrap(),
                surf.generic_fiber_poly(q).unwrap().reversed()
            );
        }
    }

    #[test]
    fn single_term_parameter_vectors() {
        let ctx = f9();
        let mut params = x1_params();
        params.a = [0, 0, 0, 0, 0, 0, 1];
        let surf = SurfaceFq::reduce(&params, &ctx).unwrap();
        for q in surf.generic_base_points().unwrap() {
            let poly = surf.generic_fiber_poly(q).unwrap();
            let mut expect = [Fq::ZERO; 7];
            expect[3] = Fq::ONE;
            assert_eq!(poly.f, expect);
        }
        params.a = [0, 1, 0, 0, 0, 0, 0];
        let surf = SurfaceFq::reduce(&params, &ctx).unwrap();
        let sp = surf.special_fiber_poly();
        let mut expect = [Fq::ZERO; 7];
        expect[6] = Fq::ONE;
        assert_eq!(sp.f, expect);
    }

    #[test]
    fn special_fiber_of_designated_surface() {
        // f = Z0'^5 Z1 - Z0'^4 Z1^2 - 2 Z0' Z1^5 + 2 Z1^6
        let f3 = FieldCtx::new(3, 1, None).unwrap();
        let surf = SurfaceFq::reduce(&x1_params(), &f3).unwrap();
        let sp = surf.special_fiber_poly();
        let want = [
            f3.from_int(2),
            f3.from_int(-2),
            Fq::ZERO,
            Fq::ZERO,
            f3.from_int(-1),
            f3.from_int(1),
            Fq::ZERO,
        ];
        assert_eq!(sp.f, want);
        // the Z0'Z1^5 coefficient is always -A times the Z0'^5 Z1 coefficient
        let f9 = f9();
        let surf9 = SurfaceFq::reduce(&x1_params(), &f9).unwrap();
        let sp9 = surf9.special_fiber_poly();
        assert_eq!(sp9.f[1], f9.neg(f9.mul(surf9.a_const, sp9.f[5])));
    }

    #[test]
    fn involution_is_fixed_point_free_and_squares_to_identity() {
        let ctx = f9();
        let surf = SurfaceFq::reduce(&x1_params(), &ctx).unwrap();
        let mut total = 0usize;
        for q in surf.generic_base_points().unwrap() {
            let poly = surf.generic_fiber_poly(q).unwrap();
            let mut reps: Vec<(Fq, Fq)> =
                ctx.elements().map(|w| (Fq::ONE, w)).collect();
            reps.push((Fq::ZERO, Fq::ONE));
            for (z0, z1) in reps {
                let v = poly.eval(&ctx, z0, z1);
                let ys: Vec<Fq> = match ctx.sqrt(v) {
                    _ if v.is_zero() => vec![Fq::ZERO],
                    Some(r) => vec![r, ctx.neg(r)],
                    None => vec![],
                };
                for y in ys {
                    let pt = WeightedPoint::canonical(&ctx, q, z0, z1, y);
                    let img = surf.involution(pt).unwrap();
                    total += 1;
                    assert_ne!(img, pt, "involution must be fixed point free");
                    assert_eq!(surf.involution(img).unwrap(), pt);
                    // image satisfies its own fiber equation
                    assert!(surf.point_on_surface(img).unwrap());
                }
            }
        }
        assert!(total > 0);
    }

    #[test]
    fn weighted_scaling_leaves_character_data_invariant() {
        let ctx = f9();
        let surf = SurfaceFq::reduce(&x1_params(), &ctx).unwrap();
        let q = surf.generic_base_points().unwrap()[0];
        let poly = surf.generic_fiber_poly(q).unwrap();
        for l in ctx.elements().filter(|l| !l.is_zero()) {
            for z0 in ctx.elements() {
                for z1 in ctx.elements() {
                    if z0.is_zero() && z1.is_zero() {
                        continue;
                    }
                    let v = poly.eval(&ctx, z0, z1);
                    let vl = poly.eval(&ctx, ctx.mul(l, z0), ctx.mul(l, z1));
                    assert_eq!(vl, ctx.mul(ctx.pow(l, 6), v));
                    assert_eq!(ctx.quadratic_character(vl), ctx.quadratic_character(v));
                }
            }
        }
    }

    #[test]
    fn chi_expansion_check_passes_for_designated_and_second_curve() {
        let report = chi_expansion_check(&x1_params()).unwrap();
        assert!(report.section6_exact);
        assert_eq!(report.rows.len(), 14);
        assert!(report.rows.iter().all(|r| r.ok));
        // y^2 = x^3 - x with alpha = 0, A = -1
        let other = SurfaceParams { cubic: [0, -1, 0], alpha: 0, a: [1, 1, 0, 0, 0, 0, 1] };
        chi_expansion_check(&other).unwrap();
    }

    #[test]
    fn tangency_matrix_over_f101() {
        let ctx = FieldCtx::new(101, 1, None).unwrap();
        let surf = SurfaceFq::reduce(&x1_params(), &ctx).unwrap();
        let samples: Vec<CurvePoint> = surf
            .generic_base_points()
            .unwrap()
            .into_iter()
            .filter(|q| matches!(q, CurvePoint::Affine(_, y) if !y.is_zero()))
            .take(5)
            .collect();
        assert!(!samples.is_empty());
        for q in samples {
            let m = surf.tangency_matrix(q).unwrap();
            // rows agree except in the psi_3 column, with opposite signs
            for col in 0..7 {
                if col == 3 {
                    assert_eq!(m[0][col], ctx.neg(m[1][col]));
                    assert_eq!(m[2][col], ctx.neg(m[3][col]));
                } else {
                    assert_eq!(m[0][col], m[1][col]);
                    assert_eq!(m[2][col], m[3][col]);
                }
            }
            assert!(surf.tangency_kernel_dim(q).unwrap() >= 4);
            assert!(surf.tangency_minors_vanish(q).unwrap());
        }
    }

    #[test]
    fn tangency_rejects_two_torsion() {
        let ctx = FieldCtx::new(101, 1, None).unwrap();
        let surf = SurfaceFq::reduce(&x1_params(), &ctx).unwrap();
        assert!(matches!(
            surf.tangency_kernel_dim(surf.c_point),
            Err(Error::TwoTorsionBase)
        ));
        assert!(matches!(
            surf.tangency_kernel_dim(CurvePoint::Infinity),
            Err(Error::TwoTorsionBase)
        ));
    }
}
