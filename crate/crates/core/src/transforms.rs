//! Shear and flip rewriting of cutting sequences, and the calculus of
//! nonnegative determinant-1 matrices behind it.
//!
//! The two basic shears act on codings as run lengtheners: `L = [[1,0],[1,1]]`
//! inserts one `A` after every `B` and `R = [[1,1],[0,1]]` one `B` after every
//! `A`. Any nonnegative matrix of determinant 1 factors into basic shears by
//! Euclidean peeling, which is how arbitrary shears are applied to words.
//! Vectors are columns `(dx, dy)` with `dx` counting vertical crossings (`B`)
//! and `dy` horizontal ones (`A`); the slope is `dy/dx`.
//!
//! The letter swap has determinant -1 and is deliberately not a
//! `ShearMatrix`; it is the separate [`flip`] operation.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::words::{validity, FiniteWord, Letter, PeriodicWord, Verdict};

/// A 2x2 matrix `[[a, b], [c, d]]` with nonnegative integer entries and
/// determinant 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ShearMatrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

/// One of the two basic shears.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Generator {
    /// `R = [[1, 1], [0, 1]]`, lengthens every `B`-run.
    R,
    /// `L = [[1, 0], [1, 1]]`, lengthens every `A`-run.
    L,
}

impl Generator {
    pub fn matrix(self) -> ShearMatrix {
        match self {
            Generator::R => ShearMatrix::new(1, 1, 0, 1).expect("det 1"),
            Generator::L => ShearMatrix::new(1, 0, 1, 1).expect("det 1"),
        }
    }
}

/// A product of basic shears, leftmost factor first. Applied to words or
/// vectors rightmost-first, following the matrix convention.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GeneratorWord(pub Vec<Generator>);

/// Crossing counts per period: `dx` vertical crossings (`B`), `dy` horizontal
/// crossings (`A`). The slope is `dy/dx`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SlopeVector {
    pub dx: BigInt,
    pub dy: BigInt,
}

impl ShearMatrix {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        if a.is_negative() || b.is_negative() || c.is_negative() || d.is_negative() {
            return Err(Error::Domain("shear matrix entries must be nonnegative".into()));
        }
        if &a * &d - &b * &c != BigInt::one() {
            return Err(Error::Domain("shear matrix must have determinant 1".into()));
        }
        Ok(ShearMatrix { a, b, c, d })
    }

    pub fn identity() -> Self {
        ShearMatrix::new(1, 0, 0, 1).expect("det 1")
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn mul(&self, rhs: &ShearMatrix) -> ShearMatrix {
        ShearMatrix {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    /// Column action on crossing counts: `(dx, dy) -> (a dx + b dy, c dx + d dy)`.
    pub fn apply_vector(&self, v: &SlopeVector) -> SlopeVector {
        SlopeVector {
            dx: &self.a * &v.dx + &self.b * &v.dy,
            dy: &self.c * &v.dx + &self.d * &v.dy,
        }
    }

    /// Euclidean decomposition into basic shears: repeatedly strip the one
    /// factor whose inverse keeps all entries nonnegative. The emitted
    /// product, leftmost first, reproduces this matrix exactly.
    pub fn decompose(&self) -> GeneratorWord {
        let mut m = self.clone();
        let mut word = Vec::new();
        while !m.is_identity() {
            // R^-1 m subtracts the bottom row from the top, L^-1 m the top from
            // the bottom. For a non-identity matrix exactly one stays
            // nonnegative: both would force equal rows (determinant 0), and
            // neither forces determinant <= 0.
            let after_r = (&m.a - &m.c, &m.b - &m.d);
            if !after_r.0.is_negative() && !after_r.1.is_negative() {
                word.push(Generator::R);
                m = ShearMatrix { a: after_r.0, b: after_r.1, c: m.c, d: m.d };
            } else {
                let after_l = (&m.c - &m.a, &m.d - &m.b);
                assert!(
                    !after_l.0.is_negative() && !after_l.1.is_negative(),
                    "peeling stuck on {m}"
                );
                word.push(Generator::L);
                m = ShearMatrix { a: m.a, b: m.b, c: after_l.0, d: after_l.1 };
            }
        }
        GeneratorWord(word)
    }
}

impl GeneratorWord {
    /// Multiplies the factors back together, leftmost first.
    pub fn product(&self) -> ShearMatrix {
        self.0
            .iter()
            .fold(ShearMatrix::identity(), |acc, g| acc.mul(&g.matrix()))
    }
}

impl SlopeVector {
    pub fn new(dx: impl Into<BigInt>, dy: impl Into<BigInt>) -> Self {
        SlopeVector { dx: dx.into(), dy: dy.into() }
    }

    /// Crossing counts of one period: `dy` = number of `A`s, `dx` = number of `B`s.
    pub fn of_word(w: &PeriodicWord) -> Self {
        SlopeVector {
            dx: BigInt::from(w.count(Letter::B)),
            dy: BigInt::from(w.count(Letter::A)),
        }
    }

    /// `dy/dx`; a vertical direction (`dx = 0`) has no finite slope.
    pub fn slope(&self) -> Result<Rational> {
        if self.dx.is_zero() {
            return Err(Error::Domain("vertical direction has no finite slope".into()));
        }
        Rational::new(self.dy.clone(), self.dx.clone())
    }

    /// The letter swap `[[0,1],[1,0]]` on counts; inverts the slope.
    pub fn flipped(&self) -> SlopeVector {
        SlopeVector { dx: self.dy.clone(), dy: self.dx.clone() }
    }
}

/// Letterwise swap of `A` and `B`. An involution; inverts the slope of a
/// valid coding.
pub fn flip(w: &PeriodicWord) -> PeriodicWord {
    w.flipped()
}

/// Letterwise swap on a finite word.
pub fn flip_finite(w: &FiniteWord) -> FiniteWord {
    w.flipped()
}

fn require_valid(w: &PeriodicWord, op: &str) -> Result<()> {
    match w.validate_cutting_sequence() {
        Verdict::Valid { .. } => Ok(()),
        Verdict::Rejected(r) => Err(Error::Precondition(format!(
            "{op} needs a valid cutting sequence, but {w} was rejected ({r})"
        ))),
    }
}

/// Removes one `A` from every maximal `A`-run: the inverse shear of
/// [`lengthen_a`]. Requires a valid coding of slope at least 1, i.e. every
/// `B` isolated.
pub fn shear_shorten(w: &PeriodicWord) -> Result<PeriodicWord> {
    use crate::words::WordAnalysis;
    let bb: FiniteWord = "BB".parse().expect("literal");
    if w.has_factor(&bb) {
        return Err(Error::Precondition("slope < 1; flip first".into()));
    }
    require_valid(w, "shear_shorten")?;
    Ok(validity::shorten_a_runs(w))
}

/// Inserts one `A` after every `B`, growing each `A`-run (length 0 included)
/// by one. Counts map `(#A, #B) -> (#A + #B, #B)`; the slope gains 1.
pub fn lengthen_a(w: &PeriodicWord) -> Result<PeriodicWord> {
    require_valid(w, "lengthen_a")?;
    let mut out = Vec::with_capacity(2 * w.period_len());
    for &l in w.period() {
        out.push(l);
        if l == Letter::B {
            out.push(Letter::A);
        }
    }
    PeriodicWord::new(out)
}

/// Inserts one `B` after every `A`; the mirror image of [`lengthen_a`].
/// Counts map `(#A, #B) -> (#A, #A + #B)`; the slope moves to `s/(1+s)`.
pub fn lengthen_b(w: &PeriodicWord) -> Result<PeriodicWord> {
    require_valid(w, "lengthen_b")?;
    let mut out = Vec::with_capacity(2 * w.period_len());
    for &l in w.period() {
        out.push(l);
        if l == Letter::A {
            out.push(Letter::B);
        }
    }
    PeriodicWord::new(out)
}

/// Applies an arbitrary nonnegative determinant-1 shear to a valid coding by
/// decomposing it into basic shears and applying them rightmost-first. The
/// crossing counts transform by the column action of the matrix.
pub fn apply_matrix(m: &ShearMatrix, w: &PeriodicWord) -> Result<PeriodicWord> {
    require_valid(w, "apply_matrix")?;
    let factors = m.decompose();
    let mut word = w.clone();
    for g in factors.0.iter().rev() {
        word = match g {
            Generator::R => lengthen_b(&word)?,
            Generator::L => lengthen_a(&word)?,
        };
    }
    Ok(word)
}

impl fmt::Display for ShearMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for ShearMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ShearMatrix {
    type Err = Error;

    /// Accepts `[[a,b],[c,d]]`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("expected a matrix like `[[3,1],[2,1]]`, got `{s}`"));
        let inner = compact
            .strip_prefix("[[")
            .and_then(|t| t.strip_suffix("]]"))
            .ok_or_else(bad)?;
        let (top, bottom) = inner.split_once("],[").ok_or_else(bad)?;
        let parse_row = |row: &str| -> Result<(BigInt, BigInt)> {
            let (x, y) = row.split_once(',').ok_or_else(bad)?;
            Ok((x.parse().map_err(|_| bad())?, y.parse().map_err(|_| bad())?))
        };
        let (a, b) = parse_row(top)?;
        let (c, d) = parse_row(bottom)?;
        ShearMatrix::new(a, b, c, d)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::R => write!(f, "R"),
            Generator::L => write!(f, "L"),
        }
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.0 {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for GeneratorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut word = Vec::with_capacity(s.len());
        for ch in s.trim().chars() {
            match ch {
                'R' | 'r' => word.push(Generator::R),
                'L' | 'l' => word.push(Generator::L),
                _ => return Err(Error::Parse(format!("invalid generator `{ch}`; expected R or L"))),
            }
        }
        Ok(GeneratorWord(word))
    }
}
