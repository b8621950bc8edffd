//! Exact quadratic irrationals of the form `(a + b*sqrt(d))/c`.
//!
//! Comparison and floor use integer arithmetic only: `sqrt(d)` is isolated
//! between consecutive integer squares, never approximated by floats.
//! Values with `b = 0` or `d <= 1` are rational and are normalized to the
//! canonical rational shape `(a + 0*sqrt(0))/c`, so `is_rational` is a
//! structural check.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// The value `(a + b*sqrt(d))/c` in canonical form:
/// `c > 0`, `gcd(a, b, c) = 1`, `d` square-free, and `b = 0, d = 0` whenever
/// the value is rational.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: BigInt,
    b: BigInt,
    d: BigInt,
    c: BigInt,
}

/// Splits `n >= 0` into `(square_free, scale)` with `n = square_free * scale^2`.
fn extract_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut scale = BigInt::one();
    let mut f = BigInt::from(2);
    while &f * &f <= rest {
        let sq = &f * &f;
        while (&rest % &sq).is_zero() {
            rest /= &sq;
            scale *= &f;
        }
        f += 1;
    }
    (rest, scale)
}

fn gcd3(a: &BigInt, b: &BigInt, c: &BigInt) -> BigInt {
    a.gcd(b).gcd(c)
}

/// Floor of `sqrt(n)` for `n >= 0`.
fn isqrt(n: &BigInt) -> BigInt {
    n.sqrt()
}

/// Exact sign of `u + v*sqrt(d)` where `d` is square-free and, when `v != 0`,
/// `d >= 2` (so `sqrt(d)` is irrational and the sum is never zero unless
/// `u = v = 0`).
fn pair_sign(u: &BigInt, v: &BigInt, d: &BigInt) -> Ordering {
    if v.is_zero() {
        return u.cmp(&BigInt::zero());
    }
    if u.is_zero() {
        return v.cmp(&BigInt::zero());
    }
    match (u.is_positive(), v.is_positive()) {
        (true, true) => Ordering::Greater,
        (false, false) => Ordering::Less,
        (true, false) | (false, true) => {
            // |u| vs |v|*sqrt(d): compare squares; equality would force
            // sqrt(d) rational, impossible for square-free d >= 2.
            let lhs = u * u;
            let rhs = v * v * d;
            debug_assert_ne!(lhs, rhs, "sqrt({d}) cannot be rational");
            if u.is_positive() {
                lhs.cmp(&rhs)
            } else {
                rhs.cmp(&lhs)
            }
        }
    }
}

/// Exact sign of `u + v*sqrt(d1) + w*sqrt(d2)` for distinct square-free
/// `d1, d2 >= 2` and `v, w != 0`.
fn triple_sign(u: &BigInt, v: &BigInt, d1: &BigInt, w: &BigInt, d2: &BigInt) -> Ordering {
    debug_assert!(d1 != d2 && !v.is_zero() && !w.is_zero());
    // Sign of s = v*sqrt(d1) + w*sqrt(d2); zero would make sqrt(d1*d2) rational.
    let s_sign = match (v.is_positive(), w.is_positive()) {
        (true, true) => Ordering::Greater,
        (false, false) => Ordering::Less,
        _ => {
            let lhs = v * v * d1;
            let rhs = w * w * d2;
            debug_assert_ne!(lhs, rhs);
            if v.is_positive() {
                lhs.cmp(&rhs)
            } else {
                rhs.cmp(&lhs)
            }
        }
    };
    let u_sign = u.cmp(&BigInt::zero());
    if u_sign == Ordering::Equal {
        return s_sign;
    }
    if u_sign == s_sign {
        return u_sign;
    }
    // Opposite signs. u^2 - s^2 = p - q*sqrt(d1*d2) with the integers below;
    // d1*d2 is never a perfect square for distinct square-free radicands, so
    // the difference has a definite sign and |u| vs |s| decides the result.
    let p = u * u - v * v * d1 - w * w * d2;
    let q = BigInt::from(2) * v * w;
    let dd = d1 * d2;
    let diff_sign = pair_sign(&p, &(-q), &dd);
    debug_assert_ne!(diff_sign, Ordering::Equal);
    if diff_sign == Ordering::Greater {
        u_sign
    } else {
        s_sign
    }
}

impl QuadraticSurd {
    /// Builds `(a + b*sqrt(d))/c` and reduces it to canonical form.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        d: impl Into<BigInt>,
        c: impl Into<BigInt>,
    ) -> Result<Self> {
        let (a, b, d, c) = (a.into(), b.into(), d.into(), c.into());
        if c.is_zero() {
            return Err(Error::Domain("zero denominator in surd".into()));
        }
        if d.is_negative() {
            return Err(Error::Domain("negative radicand".into()));
        }
        let (mut a, mut b, mut c) = (a, b, c);
        let (free, scale) = extract_square(&d);
        b *= scale;
        let mut d = free;
        if d.is_zero() {
            b = BigInt::zero();
        } else if d.is_one() {
            a += &b;
            b = BigInt::zero();
            d = BigInt::zero();
        }
        if b.is_zero() {
            d = BigInt::zero();
        }
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = gcd3(&a, &b, &c);
        if !g.is_zero() && !g.is_one() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        if a.is_zero() && b.is_zero() {
            c = BigInt::one();
        }
        Ok(QuadraticSurd { a, b, d, c })
    }

    /// `sqrt(d)` for `d >= 0`.
    pub fn sqrt_of(d: impl Into<BigInt>) -> Result<Self> {
        QuadraticSurd::new(0, 1, d, 1)
    }

    pub fn from_rational(r: &Rational) -> Self {
        QuadraticSurd {
            a: r.numer().clone(),
            b: BigInt::zero(),
            d: BigInt::zero(),
            c: r.denom().clone(),
        }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        QuadraticSurd {
            a: n.into(),
            b: BigInt::zero(),
            d: BigInt::zero(),
            c: BigInt::one(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The exact rational value, when there is one.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(Rational::new(self.a.clone(), self.c.clone()).expect("c > 0"))
        } else {
            None
        }
    }

    /// Radicand of the canonical form (0 for rational values).
    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    /// True when both operands live in one field `Q(sqrt(d))`.
    fn same_field(&self, other: &Self) -> bool {
        self.is_rational() || other.is_rational() || self.d == other.d
    }

    fn field_radicand(&self, other: &Self) -> BigInt {
        if self.is_rational() {
            other.d.clone()
        } else {
            self.d.clone()
        }
    }

    /// Exact sum; the operands must be rational or share one radicand.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if !self.same_field(other) {
            return Err(Error::Domain(format!(
                "cannot add surds over sqrt({}) and sqrt({})",
                self.d, other.d
            )));
        }
        let d = self.field_radicand(other);
        QuadraticSurd::new(
            &self.a * &other.c + &other.a * &self.c,
            &self.b * &other.c + &other.b * &self.c,
            d,
            &self.c * &other.c,
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QuadraticSurd {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
            c: self.c.clone(),
        }
    }

    /// Exact product; the operands must be rational or share one radicand.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if !self.same_field(other) {
            return Err(Error::Domain(format!(
                "cannot multiply surds over sqrt({}) and sqrt({})",
                self.d, other.d
            )));
        }
        let d = self.field_radicand(other);
        QuadraticSurd::new(
            &self.a * &other.a + &self.b * &other.b * &d,
            &self.a * &other.b + &self.b * &other.a,
            d,
            &self.c * &other.c,
        )
    }

    /// Exact reciprocal: `c*(a - b*sqrt(d)) / (a^2 - b^2 d)`.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        let norm = &self.a * &self.a - &self.b * &self.b * &self.d;
        debug_assert!(!norm.is_zero(), "nonzero surd has nonzero norm");
        QuadraticSurd::new(&self.c * &self.a, -(&self.c * &self.b), self.d.clone(), norm)
    }

    pub fn sub_integer(&self, n: &BigInt) -> Self {
        QuadraticSurd::new(&self.a - n * &self.c, self.b.clone(), self.d.clone(), self.c.clone())
            .expect("c > 0")
    }

    /// Exact floor, using only integer square roots.
    ///
    /// For irrational values the numerator `a + b*sqrt(d)` is bracketed by
    /// `a + floor(sqrt(b^2 d))` (for `b > 0`) or `a - floor(sqrt(b^2 d)) - 1`
    /// (for `b < 0`); flooring the quotient by `c > 0` is then exact because
    /// `sqrt(b^2 d)` is irrational.
    pub fn floor_int(&self) -> BigInt {
        if self.is_rational() {
            return Rational::new(self.a.clone(), self.c.clone())
                .expect("c > 0")
                .floor_int();
        }
        let t = &self.b * &self.b * &self.d;
        let s = isqrt(&t);
        let num = if self.b.is_positive() {
            &self.a + s
        } else {
            &self.a - s - BigInt::one()
        };
        num.div_floor(&self.c)
    }

    /// Exact total-order comparison, valid across different radicands.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        // Sign of self - other over the positive denominator c1*c2:
        //   u + v*sqrt(d1) + w*sqrt(d2)
        let u = &self.a * &other.c - &other.a * &self.c;
        let v = &self.b * &other.c;
        let w = -(&other.b * &self.c);
        match (v.is_zero(), w.is_zero()) {
            (true, true) => u.cmp(&BigInt::zero()),
            (false, true) => pair_sign(&u, &v, &self.d),
            (true, false) => pair_sign(&u, &w, &other.d),
            (false, false) => {
                if self.d == other.d {
                    pair_sign(&u, &(&v + &w), &self.d)
                } else {
                    triple_sign(&u, &v, &self.d, &w, &other.d)
                }
            }
        }
    }

    /// First `k` partial quotients of the continued fraction, by exact
    /// floor-and-reciprocate. Stops early if the value is rational and the
    /// expansion terminates.
    pub fn cf_prefix(&self, k: usize) -> Result<Vec<BigInt>> {
        if k == 0 {
            return Err(Error::Domain("need at least one term".into()));
        }
        if self.cmp_exact(&QuadraticSurd::from_integer(0)) == Ordering::Less {
            return Err(Error::Domain("negative value".into()));
        }
        let mut x = self.clone();
        let mut out = Vec::with_capacity(k);
        for _ in 0..k {
            let a = x.floor_int();
            out.push(a.clone());
            let rem = x.sub_integer(&a);
            if rem.is_zero() {
                break;
            }
            x = rem.recip()?;
        }
        Ok(out)
    }
}

impl PartialOrd for QuadraticSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}

impl Ord for QuadraticSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        if self.b.is_negative() {
            write!(f, "({}-{}*sqrt({}))/{}", self.a, -&self.b, self.d, self.c)
        } else {
            write!(f, "({}+{}*sqrt({}))/{}", self.a, self.b, self.d, self.c)
        }
    }
}

impl fmt::Debug for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for QuadraticSurd {
    type Err = Error;

    /// Accepts `(a+b*sqrt(d))/c` with optional parts, e.g. `sqrt(2)`,
    /// `2*sqrt(3)`, `(1+sqrt(5))/2`, `(1-1*sqrt(2))/3`, or any rational.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|ch| !ch.is_whitespace()).collect();
        let bad = || Error::Parse(format!("expected a surd like `(1+sqrt(5))/2`, got `{s}`"));

        // Split an optional trailing /c that is outside all parentheses.
        let (body, c) = match split_top_level_slash(&s) {
            Some((body, den)) => {
                let c: BigInt = den.parse().map_err(|_| bad())?;
                (body.to_string(), c)
            }
            None => (s.clone(), BigInt::one()),
        };
        let body = body
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .map(str::to_string)
            .unwrap_or(body);

        // body is now  a | a+T | a-T | T  where T = [b*]sqrt(d) with optional sign.
        if !body.contains("sqrt") {
            let a: BigInt = body.parse().map_err(|_| bad())?;
            return QuadraticSurd::new(a, 0, 0, c);
        }
        let idx = body.find("sqrt").ok_or_else(bad)?;
        let (head, tail) = body.split_at(idx);
        let d_str = tail
            .strip_prefix("sqrt(")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(bad)?;
        let d: BigInt = d_str.parse().map_err(|_| bad())?;

        // head is  "" | "-" | "b*" | "-b*" | "a+" | "a-" | "a+b*" | "a-b*"
        let (a_str, b_str) = match head.rfind(['+', '-']) {
            Some(0) | None => ("0", head),
            Some(pos) => (&head[..pos], &head[pos..]),
        };
        let a: BigInt = if a_str.is_empty() { BigInt::zero() } else { a_str.parse().map_err(|_| bad())? };
        let b_core = b_str.strip_suffix('*').unwrap_or(b_str);
        let b: BigInt = match b_core {
            "" | "+" => BigInt::one(),
            "-" => -BigInt::one(),
            t => t.parse().map_err(|_| bad())?,
        };
        QuadraticSurd::new(a, b, d, c)
    }
}

/// Finds a top-level `/` (not inside parentheses); returns (before, after).
fn split_top_level_slash(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '/' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}
