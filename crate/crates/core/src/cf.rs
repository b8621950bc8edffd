//! Continued fractions with an optional periodic tail.
//!
//! Finite expansions are canonical: the last partial quotient is at least 2
//! unless the whole expansion is a single integer, which removes the
//! trailing-1 ambiguity and makes equality structural. A periodic tail is
//! present exactly when the represented value is a quadratic irrational.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::surd::QuadraticSurd;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ContinuedFraction {
    head: Vec<BigInt>,
    tail: Option<Vec<BigInt>>,
}

impl ContinuedFraction {
    /// Builds `[head; (tail)*]`, normalizing a finite trailing 1 into the
    /// previous quotient and reducing the tail to its primitive period.
    pub fn new(head: Vec<BigInt>, tail: Option<Vec<BigInt>>) -> Result<Self> {
        let mut head = head;
        if head.is_empty() {
            return Err(Error::Domain("empty continued fraction".into()));
        }
        if head[0].is_negative() {
            return Err(Error::Domain("first partial quotient must be >= 0".into()));
        }
        if head[1..].iter().any(|a| a < &BigInt::one()) {
            return Err(Error::Domain("partial quotients after the first must be >= 1".into()));
        }
        let tail = match tail {
            None => {
                // canonical finite form: [..., a, 1] == [..., a+1]
                if head.len() >= 2 && head.last().unwrap().is_one() {
                    head.pop();
                    let last = head.last_mut().unwrap();
                    *last += 1;
                }
                None
            }
            Some(t) => {
                if t.is_empty() {
                    return Err(Error::Domain("periodic tail must be nonempty".into()));
                }
                if t.iter().any(|a| a < &BigInt::one()) {
                    return Err(Error::Domain("tail quotients must be >= 1".into()));
                }
                Some(primitive_block(t))
            }
        };
        Ok(ContinuedFraction { head, tail })
    }

    pub fn finite(head: Vec<BigInt>) -> Result<Self> {
        ContinuedFraction::new(head, None)
    }

    /// Expansion of a nonnegative rational by subtract-and-reciprocate.
    pub fn expand(x: &Rational) -> Result<Self> {
        if x.is_negative() {
            return Err(Error::Domain(format!("negative slope {x} has no expansion here")));
        }
        let mut quotients = Vec::new();
        let mut rem = x.clone();
        loop {
            let a = rem.floor_int();
            quotients.push(a.clone());
            rem = &rem - &Rational::from_integer(a);
            if rem.is_zero() {
                break;
            }
            rem = rem.recip().expect("nonzero remainder");
        }
        // the floor algorithm never emits a trailing 1 except for [1] itself
        ContinuedFraction::new(quotients, None)
    }

    /// Full expansion of a nonnegative quadratic surd. Rational values give a
    /// finite expansion; irrational ones always reach a repeating state, which
    /// becomes the periodic tail.
    pub fn expand_quadratic(x: &QuadraticSurd) -> Result<Self> {
        if let Some(r) = x.to_rational() {
            return ContinuedFraction::expand(&r);
        }
        if x.cmp_exact(&QuadraticSurd::from_integer(0)) == std::cmp::Ordering::Less {
            return Err(Error::Domain(format!("negative value {x} has no expansion here")));
        }
        let mut quotients: Vec<BigInt> = Vec::new();
        let mut seen: HashMap<QuadraticSurd, usize> = HashMap::new();
        let mut state = x.clone();
        loop {
            if let Some(&start) = seen.get(&state) {
                let mut head = quotients[..start].to_vec();
                let mut tail = quotients[start..].to_vec();
                if head.is_empty() {
                    // purely periodic: unroll one quotient, [ (a, ...)* ] = [a; (..., a)*]
                    head.push(tail[0].clone());
                    tail.rotate_left(1);
                }
                return ContinuedFraction::new(head, Some(tail));
            }
            seen.insert(state.clone(), quotients.len());
            let a = state.floor_int();
            quotients.push(a.clone());
            state = state.sub_integer(&a).recip().expect("irrational remainder is nonzero");
            assert!(quotients.len() < 1_000_000, "quadratic expansion must cycle");
        }
    }

    /// Exact rational value of a finite expansion.
    pub fn to_rational(&self) -> Result<Rational> {
        if self.tail.is_some() {
            return Err(Error::IrrationalValue);
        }
        let mut value = Rational::from_integer(self.head.last().unwrap().clone());
        for a in self.head.iter().rev().skip(1) {
            value = &Rational::from_integer(a.clone()) + &value.recip().expect("quotients >= 1");
        }
        Ok(value)
    }

    pub fn head(&self) -> &[BigInt] {
        &self.head
    }

    pub fn tail(&self) -> Option<&[BigInt]> {
        self.tail.as_deref()
    }

    pub fn is_periodic(&self) -> bool {
        self.tail.is_some()
    }
}

/// Shortest block whose repetition reproduces `block`.
fn primitive_block(block: Vec<BigInt>) -> Vec<BigInt> {
    let n = block.len();
    for p in 1..n {
        if n % p == 0 && block.chunks(p).all(|ch| ch == &block[..p]) {
            return block[..p].to_vec();
        }
    }
    block
}

impl fmt::Display for ContinuedFraction {
    /// `[a0; a1, a2]`, with a periodic tail written `([b1, b2])*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.head[0])?;
        let rest: Vec<String> = self.head[1..].iter().map(|a| a.to_string()).collect();
        match (&rest[..], &self.tail) {
            ([], None) => {}
            (items, None) => write!(f, "; {}", items.join(", "))?,
            ([], Some(t)) => write!(f, "; ({})*", join(t))?,
            (items, Some(t)) => write!(f, "; {}, ({})*", items.join(", "), join(t))?,
        }
        write!(f, "]")
    }
}

fn join(xs: &[BigInt]) -> String {
    xs.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ")
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("expected a continued fraction like `[1; 1, 3]`, got `{s}`"));
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?
            .trim();
        let (first, rest) = match inner.split_once(';') {
            Some((a, r)) => (a.trim(), r.trim()),
            None => (inner, ""),
        };
        let mut head = vec![first.parse::<BigInt>().map_err(|_| bad())?];
        let mut tail = None;
        let mut rest = rest;
        if let Some(idx) = rest.find('(') {
            let tail_part = rest[idx..].trim();
            let block = tail_part
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(")*"))
                .ok_or_else(bad)?;
            let mut entries = Vec::new();
            for item in block.split(',') {
                entries.push(item.trim().parse::<BigInt>().map_err(|_| bad())?);
            }
            tail = Some(entries);
            rest = rest[..idx].trim_end().trim_end_matches(',');
        }
        for item in rest.split(',') {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            head.push(item.parse::<BigInt>().map_err(|_| bad())?);
        }
        ContinuedFraction::new(head, tail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    fn cf(head: &[i64]) -> ContinuedFraction {
        ContinuedFraction::finite(head.iter().map(|&a| BigInt::from(a)).collect()).unwrap()
    }

    #[test]
    fn expand_examples() {
        // 7/4 = 1 + 1/(1 + 1/3)
        assert_eq!(ContinuedFraction::expand(&rat(7, 4)).unwrap(), cf(&[1, 1, 3]));
        assert_eq!(ContinuedFraction::expand(&Rational::zero()).unwrap(), cf(&[0]));
        // hand run: 5/3 -> 1 + 2/3; 3/2 -> 1 + 1/2; 2. check 1 + 1/(1 + 1/2) = 5/3
        assert_eq!(ContinuedFraction::expand(&rat(5, 3)).unwrap(), cf(&[1, 1, 2]));
        assert_eq!(cf(&[1, 1, 2]).to_rational().unwrap(), rat(5, 3));
        assert!(ContinuedFraction::expand(&rat(-1, 2)).is_err());
    }

    #[test]
    fn value_examples() {
        assert_eq!(cf(&[1, 1, 3]).to_rational().unwrap(), rat(7, 4));
        assert_eq!(cf(&[0]).to_rational().unwrap(), Rational::zero());
        assert_eq!(cf(&[2]).to_rational().unwrap(), Rational::from_integer(2));
    }

    #[test]
    fn canonical_form_swallows_trailing_one() {
        assert_eq!(cf(&[1, 1]), cf(&[2]));
        assert_eq!(cf(&[0, 2, 1]), cf(&[0, 3]));
        assert_eq!(cf(&[1]).to_string(), "[1]");
        assert!(ContinuedFraction::finite(vec![]).is_err());
        assert!(ContinuedFraction::finite(vec![BigInt::from(1), BigInt::from(0)]).is_err());
        assert!(ContinuedFraction::finite(vec![BigInt::from(-1)]).is_err());
    }

    #[test]
    fn round_trip_all_small_reduced_fractions() {
        use num_integer::Integer;
        for q in 1i64..=500 {
            for p in 0i64..=500 {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let x = rat(p, q);
                let e = ContinuedFraction::expand(&x).unwrap();
                assert_eq!(e.to_rational().unwrap(), x, "round trip failed for {p}/{q}");
                // canonical: no finite expansion ends in 1, except [1]
                if e.head().len() > 1 {
                    assert!(e.head().last().unwrap() >= &BigInt::from(2), "{p}/{q} -> {e}");
                }
            }
        }
    }

    #[test]
    fn quadratic_expansion_detects_period() {
        let sqrt2 = QuadraticSurd::sqrt_of(2).unwrap();
        let e = ContinuedFraction::expand_quadratic(&sqrt2).unwrap();
        assert_eq!(e.to_string(), "[1; (2)*]");
        assert_eq!(e.to_rational(), Err(Error::IrrationalValue));

        let phi = QuadraticSurd::new(1, 1, 5, 2).unwrap();
        let e = ContinuedFraction::expand_quadratic(&phi).unwrap();
        assert_eq!(e.to_string(), "[1; (1)*]");

        let sqrt3 = QuadraticSurd::sqrt_of(3).unwrap();
        let e = ContinuedFraction::expand_quadratic(&sqrt3).unwrap();
        assert_eq!(e.to_string(), "[1; (1, 2)*]");

        // rational surds take the finite path
        let r = QuadraticSurd::new(7, 0, 0, 4).unwrap();
        assert_eq!(ContinuedFraction::expand_quadratic(&r).unwrap(), cf(&[1, 1, 3]));
    }

    #[test]
    fn tail_reduced_to_primitive_period()  {
        let a = ContinuedFraction::new(
            vec![BigInt::from(1)],
            Some(vec![BigInt::from(2), BigInt::from(2)]),
        )
        .unwrap();
        assert_eq!(a.tail().unwrap(), &[BigInt::from(2)]);
    }

    #[test]
    fn parse_and_display() {
        for s in ["[1; 1, 3]", "[0]", "[2]", "[1; (2)*]", "[2; 1, (1, 4)*]"] {
            let e: ContinuedFraction = s.parse().unwrap();
            assert_eq!(e.to_string(), s, "round trip of `{s}`");
        }
        assert!("1; 2".parse::<ContinuedFraction>().is_err());
        assert!("[]".parse::<ContinuedFraction>().is_err());
        assert!("[1; 0]".parse::<ContinuedFraction>().is_err());
    }
}
