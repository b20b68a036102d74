//! Sparse multivariate Laurent polynomials with half-integer exponents.
//!
//! Exponents are stored doubled, so `y^(1/2)` is the doubled exponent 1 and
//! `y^2` is 4. Coefficients are arbitrary-precision integers. Variables are
//! drawn from the fixed alphabet `x, y, z, w, a, b`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use thiserror::Error;

pub const VAR_COUNT: usize = 6;
pub const VAR_NAMES: [&str; VAR_COUNT] = ["x", "y", "z", "w", "a", "b"];

/// Variable of a [`LaurentPoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X = 0,
    Y = 1,
    Z = 2,
    W = 3,
    A = 4,
    B = 5,
}

impl Var {
    pub const ALL: [Var; VAR_COUNT] = [Var::X, Var::Y, Var::Z, Var::W, Var::A, Var::B];

    pub fn name(self) -> &'static str {
        VAR_NAMES[self as usize]
    }

    pub fn parse(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }
}

/// Monomial as a vector of doubled exponents, ordered lexicographically in
/// variable order. This is the canonical term order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono(pub [i32; VAR_COUNT]);

impl Mono {
    pub fn one() -> Mono {
        Mono::default()
    }

    /// Doubled exponent of `v`.
    pub fn exp2(&self, v: Var) -> i32 {
        self.0[v as usize]
    }

    pub fn with(mut self, v: Var, doubled: i32) -> Mono {
        self.0[v as usize] += doubled;
        self
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = [0; VAR_COUNT];
        for i in 0..VAR_COUNT {
            out[i] = self.0[i] + other.0[i];
        }
        Mono(out)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("half power of `{0}` needs a perfect-square value")]
    HalfPowerNotSquare(&'static str),
    #[error("zero raised to a negative power of `{0}`")]
    ZeroToNegativePower(&'static str),
    #[error("no value assigned to `{0}`")]
    UnboundVariable(&'static str),
}

/// Sparse exact Laurent polynomial. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Mono, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        p.add_term(Mono::one(), BigInt::from(c));
        p
    }

    /// The variable `v` to the first power.
    pub fn var(v: Var) -> LaurentPoly {
        LaurentPoly::var_pow2(v, 2)
    }

    /// `v` raised to `doubled / 2`.
    pub fn var_pow2(v: Var, doubled: i32) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        p.add_term(Mono::one().with(v, doubled), BigInt::one());
        p
    }

    /// `v + shift`, the binomial base for shifted expansions.
    pub fn binomial(v: Var, shift: i64) -> LaurentPoly {
        let mut p = LaurentPoly::var(v);
        p.add_term(Mono::one(), BigInt::from(shift));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Adds `c` at monomial `m` with the exponent of `w` clamped to the
    /// idempotent ring `w^2 = w`.
    pub fn add_term_mod_w(&mut self, m: Mono, c: BigInt) {
        let mut m = m;
        if m.0[Var::W as usize] > 2 {
            m.0[Var::W as usize] = 2;
        }
        self.add_term(m, c);
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, k) in &self.terms {
            out.add_term(*m, k * c);
        }
        out
    }

    pub fn mul_mono(&self, m: &Mono) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (t, c) in &self.terms {
            out.add_term(t.mul(m), c.clone());
        }
        out
    }

    pub fn pow(&self, k: usize) -> LaurentPoly {
        let mut out = LaurentPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Substitutes `w = 1`: drops the `w` exponent from every term.
    pub fn with_w_one(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut m = *m;
            m.0[Var::W as usize] = 0;
            out.add_term(m, c.clone());
        }
        out
    }

    /// Swaps the exponents of two variables.
    pub fn swap_vars(&self, u: Var, v: Var) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut m = *m;
            m.0.swap(u as usize, v as usize);
            out.add_term(m, c.clone());
        }
        out
    }

    /// Exact evaluation. Values must be assigned to every variable that
    /// occurs. A variable occurring with an odd doubled exponent must be
    /// assigned a square of a rational.
    pub fn evaluate(&self, values: &[Option<BigRational>; VAR_COUNT]) -> Result<BigRational, EvalError> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut factor = BigRational::from(c.clone());
            for (i, &d) in m.0.iter().enumerate() {
                if d == 0 {
                    continue;
                }
                let name = VAR_NAMES[i];
                let v = values[i].as_ref().ok_or(EvalError::UnboundVariable(name))?;
                let base = if d % 2 == 0 {
                    v.clone()
                } else {
                    sqrt_exact(v).ok_or(EvalError::HalfPowerNotSquare(name))?
                };
                let e = if d % 2 == 0 { d / 2 } else { d };
                if base.is_zero() {
                    if e < 0 {
                        return Err(EvalError::ZeroToNegativePower(name));
                    }
                    factor = BigRational::zero();
                    continue;
                }
                factor *= rat_pow(&base, e);
            }
            total += factor;
        }
        Ok(total)
    }

    /// Canonical string form: terms ordered by total degree and then by
    /// variable priority (`x` before `y` before `z, w, a, b`), joined with
    /// signs, e.g. `1 + 2*y + y^2*z^2` or `y^(1/2)`.
    pub fn to_canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut ordered: Vec<(&Mono, &BigInt)> = self.terms.iter().collect();
        ordered.sort_by_key(|(m, _)| {
            let degree: i64 = m.0.iter().map(|&d| d as i64).sum();
            let flipped = m.0.map(|d| -d);
            (degree, flipped)
        });
        let mut out = String::new();
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let vars: Vec<String> = (0..VAR_COUNT)
                .filter(|&j| m.0[j] != 0)
                .map(|j| format_power(VAR_NAMES[j], m.0[j]))
                .collect();
            if vars.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }
}

fn format_power(name: &str, doubled: i32) -> String {
    if doubled == 2 {
        name.to_string()
    } else if doubled % 2 == 0 {
        let e = doubled / 2;
        if e > 0 {
            format!("{name}^{e}")
        } else {
            format!("{name}^({e})")
        }
    } else {
        format!("{name}^({doubled}/2)")
    }
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn sqrt_exact(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = isqrt_exact(r.numer())?;
    let den = isqrt_exact(r.denom())?;
    Some(BigRational::new(num, den))
}

fn isqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// `r^k` for possibly negative `k`; `r` must be non-zero when `k < 0`.
pub fn rat_pow(r: &BigRational, k: i32) -> BigRational {
    if k == 0 {
        return BigRational::one();
    }
    let mag = {
        let mut out = BigRational::one();
        for _ in 0..k.unsigned_abs() {
            out *= r;
        }
        out
    };
    if k < 0 {
        mag.recip()
    } else {
        mag
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(LaurentPoly::zero().to_canonical_string(), "0");
        assert_eq!(LaurentPoly::var(Var::X).to_canonical_string(), "x");
        let mut p = LaurentPoly::one();
        p.add_term(Mono::one().with(Var::Y, 2), BigInt::from(2));
        p.add_term(Mono::one().with(Var::Y, 4).with(Var::Z, 4), BigInt::one());
        assert_eq!(p.to_canonical_string(), "1 + 2*y + y^2*z^2");
        assert_eq!(
            LaurentPoly::var_pow2(Var::Y, 1).to_canonical_string(),
            "y^(1/2)"
        );
        assert_eq!(
            LaurentPoly::var_pow2(Var::Y, -2).to_canonical_string(),
            "y^(-1)"
        );
        assert_eq!(
            LaurentPoly::var_pow2(Var::Y, -1).to_canonical_string(),
            "y^(-1/2)"
        );
        let q = &LaurentPoly::binomial(Var::X, -1) * &LaurentPoly::binomial(Var::X, -1);
        assert_eq!(q.to_canonical_string(), "1 - 2*x + x^2");
    }

    #[test]
    fn arithmetic_cancels() {
        let x = LaurentPoly::var(Var::X);
        let d = &x - &x;
        assert!(d.is_zero());
        let b = LaurentPoly::binomial(Var::X, 1); // x + 1
        let sq = b.pow(2);
        assert_eq!(sq.to_canonical_string(), "1 + 2*x + x^2");
    }

    #[test]
    fn w_quotient_clamps() {
        let mut p = LaurentPoly::zero();
        p.add_term_mod_w(Mono::one().with(Var::W, 4), BigInt::one());
        p.add_term_mod_w(Mono::one().with(Var::W, 2), BigInt::one());
        assert_eq!(p.to_canonical_string(), "2*w");
    }

    #[test]
    fn evaluate_plain_and_half_powers() {
        let mut vals: [Option<BigRational>; VAR_COUNT] = Default::default();
        vals[Var::X as usize] = Some(rat(5));
        assert_eq!(LaurentPoly::var(Var::X).evaluate(&vals).unwrap(), rat(5));
        let mut vals: [Option<BigRational>; VAR_COUNT] = Default::default();
        vals[Var::Y as usize] = Some(rat(4));
        assert_eq!(
            LaurentPoly::var_pow2(Var::Y, 1).evaluate(&vals).unwrap(),
            rat(2)
        );
        let mut p = LaurentPoly::one();
        let yzw = Mono::one().with(Var::Y, 2).with(Var::Z, 2).with(Var::W, 2);
        p.add_term(yzw, BigInt::one());
        let mut vals: [Option<BigRational>; VAR_COUNT] = Default::default();
        vals[Var::Y as usize] = Some(rat(1));
        vals[Var::Z as usize] = Some(rat(1));
        vals[Var::W as usize] = Some(rat(1));
        assert_eq!(p.evaluate(&vals).unwrap(), rat(2));
    }

    #[test]
    fn evaluate_errors() {
        let mut vals: [Option<BigRational>; VAR_COUNT] = Default::default();
        vals[Var::Y as usize] = Some(rat(3));
        assert_eq!(
            LaurentPoly::var_pow2(Var::Y, 1).evaluate(&vals),
            Err(EvalError::HalfPowerNotSquare("y"))
        );
        vals[Var::Y as usize] = Some(rat(0));
        assert_eq!(
            LaurentPoly::var_pow2(Var::Y, -2).evaluate(&vals),
            Err(EvalError::ZeroToNegativePower("y"))
        );
        // 0^(1/2) is fine.
        assert_eq!(
            LaurentPoly::var_pow2(Var::Y, 1).evaluate(&vals).unwrap(),
            rat(0)
        );
        let empty: [Option<BigRational>; VAR_COUNT] = Default::default();
        assert_eq!(
            LaurentPoly::var(Var::X).evaluate(&empty),
            Err(EvalError::UnboundVariable("x"))
        );
    }

    #[test]
    fn half_power_evaluation_is_signed_root() {
        // y^(3/2) at 9 = 27.
        let mut vals: [Option<BigRational>; VAR_COUNT] = Default::default();
        vals[Var::Y as usize] = Some(rat(9));
        assert_eq!(
            LaurentPoly::var_pow2(Var::Y, 3).evaluate(&vals).unwrap(),
            rat(27)
        );
        // y^(-1/2) at 4/9 = 3/2.
        vals[Var::Y as usize] = Some(BigRational::new(BigInt::from(4), BigInt::from(9)));
        assert_eq!(
            LaurentPoly::var_pow2(Var::Y, -1).evaluate(&vals).unwrap(),
            BigRational::new(BigInt::from(3), BigInt::from(2))
        );
    }
}
