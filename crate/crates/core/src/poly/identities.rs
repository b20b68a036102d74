//! Exact identity checks between the topological polynomials.
//!
//! Substitutions involving square roots are handled in the doubled-exponent
//! representation, where `a -> y^(1/2)` is an integer shift of doubled
//! exponents; substitutions like `z -> 1/(y-1)` are handled by clearing
//! denominators. Everything stays in exact integer arithmetic.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::dm::DeltaMatroid;
use crate::elements::Subset;

use super::laurent::{rat_pow, sqrt_exact, LaurentPoly, Mono, Var};
use super::topo::{br_two_var, krushkal, krushkal_rank_route, PolyError, SigmaCache};

/// Per-subset exponents of the four polynomials. All are plain integers;
/// only sigma-based quantities are half-integers and stay doubled.
struct Exps {
    /// `(x-1)` exponent shared by T, L, R, K.
    x: i32,
    /// `(y-1)` exponent of T (equals the plain-`y` exponent of R).
    y_t: i32,
    /// `(y-1)` exponent of L.
    y_lv: i32,
    /// `z` exponent of L.
    z_lv: i32,
    /// `z` exponent of R (width of the restriction).
    z_br: i32,
    /// plain-`y` exponent of K.
    y_k: i32,
    /// `a` and `b` exponents of K.
    a_k: i32,
    b_k: i32,
}

struct Ctx {
    cache: SigmaCache,
    dual_cache: SigmaCache,
    full: Subset,
    /// Width of the delta-matroid (also of its dual).
    width: i32,
}

impl Ctx {
    fn new(d: &DeltaMatroid) -> Result<Ctx, PolyError> {
        let cache = SigmaCache::new(d)?;
        let dual_cache = SigmaCache::new(&d.dual())?;
        let full = d.ground().full();
        let fi = full as usize;
        let width = cache.r_max[fi] - cache.r_min[fi];
        Ok(Ctx {
            cache,
            dual_cache,
            full,
            width,
        })
    }

    fn exps(&self, a: Subset) -> Exps {
        let (i, fi) = (a as usize, self.full as usize);
        let ac = (self.full & !a) as usize;
        let asize = a.count_ones() as i32;
        Exps {
            x: self.cache.r_min[fi] - self.cache.r_min[i],
            y_t: asize - self.cache.r_min[i],
            y_lv: asize - self.cache.r_max[i],
            z_lv: (self.cache.r_max[fi] - self.cache.r_min[fi])
                - (self.cache.r_max[i] - self.cache.r_min[i]),
            z_br: self.cache.width[i],
            y_k: self.dual_cache.r_min[fi] - self.dual_cache.r_min[ac],
            a_k: self.cache.width[i],
            b_k: self.dual_cache.width[ac],
        }
    }

    fn subsets(&self) -> impl Iterator<Item = Subset> {
        0..=self.full
    }

    /// Sums `(x-1)^xe * (y-1)^ye * mono` over subsets.
    fn expand(&self, term: impl Fn(Subset) -> (i32, i32, Mono)) -> LaurentPoly {
        let xm1 = LaurentPoly::binomial(Var::X, -1);
        let ym1 = LaurentPoly::binomial(Var::Y, -1);
        let mut out = LaurentPoly::zero();
        for a in self.subsets() {
            let (xe, ye, m) = term(a);
            let xe = usize::try_from(xe).expect("non-negative exponent");
            let ye = usize::try_from(ye).expect("non-negative exponent");
            out = &out + &(&xm1.pow(xe) * &ym1.pow(ye)).mul_mono(&m);
        }
        out
    }
}

/// `T(D; x, y+1) = y^(w/2) K(D; x, y, y^(1/2), y^(-1/2))`.
pub fn tutte_from_krushkal_holds(d: &DeltaMatroid) -> Result<bool, PolyError> {
    let ctx = Ctx::new(d)?;
    let lhs = ctx.expand(|a| {
        let e = ctx.exps(a);
        (e.x, 0, Mono::one().with(Var::Y, 2 * e.y_t))
    });
    let rhs = ctx.expand(|a| {
        let e = ctx.exps(a);
        let yd = 2 * e.y_k + ctx.width + e.a_k - e.b_k;
        (e.x, 0, Mono::one().with(Var::Y, yd))
    });
    Ok(lhs == rhs)
}

/// `L(D; x, y, z) = z^(w/2) K(D; x, y-1, z^(-1/2), z^(1/2))`.
pub fn lv_from_krushkal_holds(d: &DeltaMatroid) -> Result<bool, PolyError> {
    let ctx = Ctx::new(d)?;
    let lhs = ctx.expand(|a| {
        let e = ctx.exps(a);
        (e.x, e.y_lv, Mono::one().with(Var::Z, 2 * e.z_lv))
    });
    let rhs = ctx.expand(|a| {
        let e = ctx.exps(a);
        let zd = ctx.width - e.a_k + e.b_k;
        (e.x, e.y_k, Mono::one().with(Var::Z, zd))
    });
    Ok(lhs == rhs)
}

/// `R(D; x, y, z, 1) = y^(w/2) K(D; x, y, z y^(1/2), y^(-1/2))`.
pub fn br_from_krushkal_holds(d: &DeltaMatroid) -> Result<bool, PolyError> {
    let ctx = Ctx::new(d)?;
    let lhs = ctx.expand(|a| {
        let e = ctx.exps(a);
        (
            e.x,
            0,
            Mono::one().with(Var::Y, 2 * e.y_t).with(Var::Z, 2 * e.z_br),
        )
    });
    let rhs = ctx.expand(|a| {
        let e = ctx.exps(a);
        let yd = 2 * e.y_k + ctx.width + e.a_k - e.b_k;
        (
            e.x,
            0,
            Mono::one().with(Var::Y, yd).with(Var::Z, 2 * e.a_k),
        )
    });
    Ok(lhs == rhs)
}

/// `K(D; x, y-1, a, b) = K(D*; y, x-1, b, a)`.
pub fn krushkal_duality_holds(d: &DeltaMatroid) -> Result<bool, PolyError> {
    let ctx = Ctx::new(d)?;
    let lhs = ctx.expand(|a| {
        let e = ctx.exps(a);
        (
            e.x,
            e.y_k,
            Mono::one().with(Var::A, 2 * e.a_k).with(Var::B, 2 * e.b_k),
        )
    });
    let dual = d.dual();
    let dctx = Ctx::new(&dual)?;
    // K(D*; y, x-1, b, a): the x slot takes y, the y slot takes x-1, and the
    // a/b exponents swap variables.
    let xm1 = LaurentPoly::binomial(Var::X, -1);
    let mut rhs = LaurentPoly::zero();
    for b in dctx.subsets() {
        let e = dctx.exps(b);
        let m = Mono::one()
            .with(Var::Y, 2 * e.x)
            .with(Var::B, 2 * e.a_k)
            .with(Var::A, 2 * e.b_k);
        rhs = &rhs + &xm1.pow(usize::try_from(e.y_k).unwrap()).mul_mono(&m);
    }
    Ok(lhs == rhs)
}

/// `x^(w(D)/2) R(D; x+1, y, 1/sqrt(xy), 1) = y^(w(D*)/2) R(D*; y+1, x, 1/sqrt(xy), 1)`.
pub fn br_duality_holds(d: &DeltaMatroid) -> Result<bool, PolyError> {
    let ctx = Ctx::new(d)?;
    let mut lhs = LaurentPoly::zero();
    for a in ctx.subsets() {
        let e = ctx.exps(a);
        lhs.add_term(
            Mono::one()
                .with(Var::X, 2 * e.x - e.z_br + ctx.width)
                .with(Var::Y, 2 * e.y_t - e.z_br),
            BigInt::one(),
        );
    }
    let dual = d.dual();
    let dctx = Ctx::new(&dual)?;
    let mut rhs = LaurentPoly::zero();
    for b in dctx.subsets() {
        let e = dctx.exps(b);
        rhs.add_term(
            Mono::one()
                .with(Var::Y, 2 * e.x - e.z_br + dctx.width)
                .with(Var::X, 2 * e.y_t - e.z_br),
            BigInt::one(),
        );
    }
    Ok(lhs == rhs)
}

/// `L(D; x, y, z) = z^(w(D)) L(D*; y, x, z^(-1))`.
pub fn lv_duality_holds(d: &DeltaMatroid) -> Result<bool, PolyError> {
    let ctx = Ctx::new(d)?;
    let lhs = ctx.expand(|a| {
        let e = ctx.exps(a);
        (e.x, e.y_lv, Mono::one().with(Var::Z, 2 * e.z_lv))
    });
    let dual = d.dual();
    let dctx = Ctx::new(&dual)?;
    let xm1 = LaurentPoly::binomial(Var::X, -1);
    let ym1 = LaurentPoly::binomial(Var::Y, -1);
    let mut rhs = LaurentPoly::zero();
    for b in dctx.subsets() {
        let e = dctx.exps(b);
        let m = Mono::one().with(Var::Z, 2 * (ctx.width - e.z_lv));
        let term = &ym1.pow(usize::try_from(e.x).unwrap())
            * &xm1.pow(usize::try_from(e.y_lv).unwrap());
        rhs = &rhs + &term.mul_mono(&m);
    }
    Ok(lhs == rhs)
}

/// `(y-1)^w L(D; x, y, 1/(y-1)) = T(D; x, y)`. The substituted exponent
/// `y_lv + w - z_lv` equals `|A| - r_min(A)`, so no denominators survive.
pub fn lv_specialization_holds(d: &DeltaMatroid) -> Result<bool, PolyError> {
    let ctx = Ctx::new(d)?;
    let lhs = ctx.expand(|a| {
        let e = ctx.exps(a);
        (e.x, e.y_lv + ctx.width - e.z_lv, Mono::one())
    });
    let rhs = ctx.expand(|a| {
        let e = ctx.exps(a);
        (e.x, e.y_t, Mono::one())
    });
    Ok(lhs == rhs)
}

/// `R~(D; x+1, y+1) = x^(w/2) R(D; x+1, y, 1/sqrt(xy), 1)`, linking the
/// shifted two-variable form to the four-variable polynomial.
pub fn br2_normalization_holds(d: &DeltaMatroid) -> Result<bool, PolyError> {
    let ctx = Ctx::new(d)?;
    let lhs = br_two_var(d)?;
    let mut rhs = LaurentPoly::zero();
    for a in ctx.subsets() {
        let e = ctx.exps(a);
        rhs.add_term(
            Mono::one()
                .with(Var::X, 2 * e.x - e.z_br + ctx.width)
                .with(Var::Y, 2 * e.y_t - e.z_br),
            BigInt::one(),
        );
    }
    Ok(lhs == rhs)
}

/// `R~(D*; x, y) = R~(D; y, x)`.
pub fn br2_dual_swap_holds(d: &DeltaMatroid) -> Result<bool, PolyError> {
    let lhs = br_two_var(&d.dual())?;
    let rhs = br_two_var(d)?.swap_vars(Var::X, Var::Y);
    Ok(lhs == rhs)
}

fn br2_eval_at(d: &DeltaMatroid, x: i64, y: i64) -> Result<BigRational, PolyError> {
    let p = br_two_var(d)?;
    let mut vals: [Option<BigRational>; 6] = Default::default();
    vals[Var::X as usize] = Some(BigRational::from(BigInt::from(x)));
    vals[Var::Y as usize] = Some(BigRational::from(BigInt::from(y)));
    Ok(p
        .evaluate(&vals)
        .expect("non-negative exponents at square points"))
}

/// The counting evaluations of the two-variable polynomial:
/// `R~(1,1)` is the number of bases when `D` is a matroid and 0 otherwise,
/// `R~(2,1)` counts independent sets of the lower matroid, `R~(1,2)` counts
/// spanning sets of the upper matroid, and `R~(2,2) = 2^|E|`.
///
/// The independent/spanning pair follows the proof (and the matroid
/// specialization `T(2,1)` = number of independent sets); the theorem
/// statement in the source swaps the two evaluation points.
pub fn br2_counting_evaluations_hold(d: &DeltaMatroid) -> Result<bool, PolyError> {
    let cache = SigmaCache::new(d)?;
    let full = d.ground().full();
    let fi = full as usize;
    let rational = |n: usize| BigRational::from(BigInt::from(n));

    let bases = if d.is_matroid() { d.feasible().len() } else { 0 };
    if br2_eval_at(d, 0, 0)? != rational(bases) {
        return Ok(false);
    }
    let independent = (0..=full)
        .filter(|&a| cache.r_min[a as usize] == a.count_ones() as i32)
        .count();
    if br2_eval_at(d, 1, 0)? != rational(independent) {
        return Ok(false);
    }
    let spanning = (0..=full)
        .filter(|&a| cache.r_max[a as usize] == cache.r_max[fi])
        .count();
    if br2_eval_at(d, 0, 1)? != rational(spanning) {
        return Ok(false);
    }
    Ok(br2_eval_at(d, 1, 1)? == rational(1usize << d.size()))
}

/// The generating-function identity
/// `v^sigma(D) u^(-w/2) R~(D; u/v+1, uv+1) = sum over A of v^|A| u^(|E|-rho(A))`,
/// checked exactly at one rational point `(u, v)`. When `D` is odd, `u` and
/// `v` must be perfect squares.
pub fn br2_generating_identity_at(d: &DeltaMatroid, u: i64, v: i64) -> Result<bool, PolyError> {
    let cache = SigmaCache::new(d)?;
    let full = d.ground().full();
    let fi = full as usize;
    let n = d.size() as i32;
    let u = BigRational::from(BigInt::from(u));
    let v = BigRational::from(BigInt::from(v));

    let p = br_two_var(d)?;
    let mut vals: [Option<BigRational>; 6] = Default::default();
    vals[Var::X as usize] = Some(&u / &v);
    vals[Var::Y as usize] = Some(&u * &v);
    let r_tilde = p.evaluate(&vals).expect("square grid for odd inputs");

    let sigma2 = cache.sigma2[fi];
    let v_sigma = pow_half(&v, sigma2);
    let width2 = cache.r_max[fi] - cache.r_min[fi];
    let u_mw2 = pow_half(&u, -width2);
    let lhs = v_sigma * u_mw2 * r_tilde;

    let mut rhs = BigRational::zero();
    for a in 0..=full {
        let e = n - cache.rho[a as usize];
        rhs += rat_pow(&v, a.count_ones() as i32) * rat_pow(&u, e);
    }
    Ok(lhs == rhs)
}

/// `base^(doubled/2)` for positive rationals, via an exact square root when
/// the doubled exponent is odd.
fn pow_half(base: &BigRational, doubled: i32) -> BigRational {
    if doubled % 2 == 0 {
        rat_pow(base, doubled / 2)
    } else {
        let s = sqrt_exact(base).expect("square grid point for half powers");
        rat_pow(&s, doubled)
    }
}

/// The two Krushkal computation routes (restriction widths vs rank
/// functions) agree.
pub fn krushkal_routes_agree(d: &DeltaMatroid) -> Result<bool, PolyError> {
    Ok(krushkal(d)? == krushkal_rank_route(d)?)
}

/// For matroids the whole tower collapses: `L` has no `z`, and the shifted
/// two-variable polynomial is the shifted Tutte polynomial.
pub fn matroid_collapse_holds(d: &DeltaMatroid) -> Result<bool, PolyError> {
    debug_assert!(d.is_matroid());
    let ctx = Ctx::new(d)?;
    let lv = super::topo::las_vergnas(d)?;
    let t = super::topo::tutte(d)?;
    if lv != t {
        return Ok(false);
    }
    // T(x+1, y+1) summed directly with plain powers.
    let mut shifted_t = LaurentPoly::zero();
    for a in ctx.subsets() {
        let e = ctx.exps(a);
        shifted_t.add_term(
            Mono::one().with(Var::X, 2 * e.x).with(Var::Y, 2 * e.y_t),
            BigInt::one(),
        );
    }
    Ok(br_two_var(d)? == shifted_t)
}
