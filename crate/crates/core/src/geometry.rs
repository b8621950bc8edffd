//! Exact geometric ground truth: grid-crossing enumeration for straight
//! lines, billiard reflection in the unit square, and unfolding.
//!
//! Every comparison of crossing positions goes through exact rational or
//! quadratic-surd ordering, so lattice hits are detected precisely and the
//! letter streams are reproducible. The algebraic modules are tested against
//! this one.
//!
//! Conventions: a line starts at `x = 0` at its intercept and letters are
//! enumerated for `x > 0` in increasing order; `A` records a horizontal
//! grid-line crossing, `B` a vertical one. Printed prefixes therefore depend
//! on the starting point, but all lines of one slope share the same factor
//! language, so any published window of the same slope occurs somewhere in
//! the stream.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::surd::QuadraticSurd;
use crate::words::{FiniteWord, Letter, PeriodicWord, Verdict, WordStream};

/// An exact coordinate value, rational or quadratic irrational.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Number {
    Rational(Rational),
    Surd(QuadraticSurd),
}

impl Number {
    pub fn is_integer(&self) -> bool {
        match self {
            Number::Rational(r) => r.is_integer(),
            Number::Surd(s) => s.to_rational().map(|r| r.is_integer()).unwrap_or(false),
        }
    }

    /// Floor of the value scaled by `10^digits`; the exact basis for decimal
    /// formatting.
    pub fn scaled_floor(&self, digits: u32) -> BigInt {
        let scale = BigInt::from(10u32).pow(digits);
        match self {
            Number::Rational(r) => (&Rational::from_integer(scale) * r).floor_int(),
            Number::Surd(s) => s
                .mul(&QuadraticSurd::from_integer(scale))
                .expect("integer scaling stays in the field")
                .floor_int(),
        }
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Number::Rational(r) => write!(f, "{r}"),
            Number::Surd(s) => write!(f, "{s}"),
        }
    }
}

/// Which family of grid lines a crossing belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CrossingKind {
    /// A horizontal grid line `y = index`; letter `A`.
    Horizontal,
    /// A vertical grid line `x = index`; letter `B`.
    Vertical,
}

/// One grid crossing of a trajectory, ordered by the trajectory parameter.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossingEvent {
    pub kind: CrossingKind,
    /// Integer coordinate of the crossed grid line.
    pub index: BigInt,
    pub x: Number,
    pub y: Number,
}

impl CrossingEvent {
    pub fn letter(&self) -> Letter {
        match self.kind {
            CrossingKind::Horizontal => Letter::A,
            CrossingKind::Vertical => Letter::B,
        }
    }
}

impl fmt::Display for CrossingEvent {
    /// Log line form: `index kind x y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            CrossingKind::Horizontal => "A",
            CrossingKind::Vertical => "B",
        };
        write!(f, "{} {} {} {}", self.index, kind, self.x, self.y)
    }
}

/// First `n` grid crossings of the line `y = slope * (x - x0) + y0` for
/// `x > x0`, in trajectory order. Lattice hits are exact errors.
pub fn line_crossings(
    slope: &Rational,
    start: (&Rational, &Rational),
    n: usize,
) -> Result<Vec<CrossingEvent>> {
    if slope.is_negative() {
        return Err(Error::Domain(format!("negative slope {slope} is out of scope")));
    }
    let (x0, y0) = start;
    let mut events = Vec::with_capacity(n);
    let mut k: BigInt = x0.floor_int() + 1; // next vertical line strictly right of x0
    let mut m: BigInt = y0.floor_int() + 1; // next horizontal line strictly above y0
    while events.len() < n {
        let xv = Rational::from_integer(k.clone());
        let xh = if slope.is_zero() {
            None
        } else {
            // y reaches m at x = x0 + (m - y0)/slope
            Some(x0 + &(&(&Rational::from_integer(m.clone()) - y0) / slope))
        };
        let take_vertical = match &xh {
            None => true,
            Some(xh) => match xv.cmp(xh) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => {
                    return Err(Error::VertexHit {
                        x: xv,
                        y: Rational::from_integer(m.clone()),
                    });
                }
            },
        };
        if take_vertical {
            let y = y0 + &(slope * &(&xv - x0));
            if y.is_integer() {
                return Err(Error::VertexHit { x: xv, y });
            }
            events.push(CrossingEvent {
                kind: CrossingKind::Vertical,
                index: k.clone(),
                x: Number::Rational(xv),
                y: Number::Rational(y),
            });
            k += 1;
        } else {
            let xh = xh.expect("horizontal candidate");
            if xh.is_integer() {
                return Err(Error::VertexHit {
                    x: xh,
                    y: Rational::from_integer(m.clone()),
                });
            }
            events.push(CrossingEvent {
                kind: CrossingKind::Horizontal,
                index: m.clone(),
                x: Number::Rational(xh),
                y: Number::Rational(Rational::from_integer(m.clone())),
            });
            m += 1;
        }
    }
    Ok(events)
}

/// Crossing events of a torus trajectory started at `(0, intercept)`.
pub fn torus_crossings(
    slope: &Rational,
    intercept: &Rational,
    n: usize,
) -> Result<Vec<CrossingEvent>> {
    line_crossings(slope, (&Rational::zero(), intercept), n)
}

/// First `n` letters of the cutting sequence of `y = slope * x + intercept`.
/// For slope `p/q` in lowest terms every window of length `p + q` is a
/// rotation of the canonical periodic word of that slope.
pub fn torus_cutting_sequence(
    slope: &Rational,
    intercept: &Rational,
    n: usize,
) -> Result<FiniteWord> {
    let events = torus_crossings(slope, intercept, n)?;
    Ok(FiniteWord::new(
        events.iter().map(CrossingEvent::letter).collect::<Vec<_>>(),
    ))
}

/// Iterator state for the crossing letters of an irrational-slope line.
struct SturmianIter {
    slope: QuadraticSurd,
    inv_slope: QuadraticSurd,
    intercept: QuadraticSurd,
    next_vertical: BigInt,
    next_horizontal: BigInt,
}

impl SturmianIter {
    fn next_event(&mut self) -> CrossingEvent {
        let xv = QuadraticSurd::from_integer(self.next_vertical.clone());
        // y reaches m at x = (m - intercept) / slope
        let m = QuadraticSurd::from_integer(self.next_horizontal.clone());
        let xh = m
            .sub(&self.intercept)
            .and_then(|diff| diff.mul(&self.inv_slope))
            .expect("all values share one field");
        match xv.cmp_exact(&xh) {
            std::cmp::Ordering::Equal => {
                unreachable!("an irrational slope cannot pass through a lattice point")
            }
            std::cmp::Ordering::Less => {
                let y = self
                    .slope
                    .mul(&xv)
                    .and_then(|sx| sx.add(&self.intercept))
                    .expect("same field");
                let event = CrossingEvent {
                    kind: CrossingKind::Vertical,
                    index: self.next_vertical.clone(),
                    x: Number::Surd(xv),
                    y: Number::Surd(y),
                };
                self.next_vertical += 1;
                event
            }
            std::cmp::Ordering::Greater => {
                let event = CrossingEvent {
                    kind: CrossingKind::Horizontal,
                    index: self.next_horizontal.clone(),
                    x: Number::Surd(xh),
                    y: Number::Surd(m),
                };
                self.next_horizontal += 1;
                event
            }
        }
    }
}

impl Iterator for SturmianIter {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        Some(self.next_event().letter())
    }
}

fn sturmian_iter(slope: &QuadraticSurd, intercept: &Rational) -> Result<SturmianIter> {
    if slope.is_rational() {
        return Err(Error::Domain(format!(
            "slope {slope} is rational; use the periodic coding instead"
        )));
    }
    if slope.cmp_exact(&QuadraticSurd::from_integer(0)) != std::cmp::Ordering::Greater {
        return Err(Error::Domain(format!("slope must be positive, got {slope}")));
    }
    Ok(SturmianIter {
        slope: slope.clone(),
        inv_slope: slope.recip()?,
        intercept: QuadraticSurd::from_rational(intercept),
        next_vertical: BigInt::from(1),
        next_horizontal: intercept.floor_int() + 1,
    })
}

/// Crossing events of an irrational-slope line from `(0, intercept)`.
pub fn sturmian_crossings(
    slope: &QuadraticSurd,
    intercept: &Rational,
    n: usize,
) -> Result<Vec<CrossingEvent>> {
    let mut iter = sturmian_iter(slope, intercept)?;
    Ok((0..n).map(|_| iter.next_event()).collect())
}

/// Endless, deterministic letter stream of an irrational-slope trajectory.
pub fn sturmian_stream(slope: &QuadraticSurd, intercept: &Rational) -> Result<WordStream> {
    Ok(WordStream::new(sturmian_iter(slope, intercept)?))
}

/// First `n` letters of the Sturmian coding of `y = slope * x + intercept`.
pub fn sturmian_prefix(
    slope: &QuadraticSurd,
    intercept: &Rational,
    n: usize,
) -> Result<FiniteWord> {
    Ok(sturmian_stream(slope, intercept)?.pull(n))
}

/// A point of the closed unit square (or of the plane, once unfolded).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Edge of the unit square. Top and bottom unfold onto horizontal grid lines
/// (letter `A`), left and right onto vertical ones (letter `B`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Edge {
    Top,
    Bottom,
    Left,
    Right,
}

impl Edge {
    pub fn letter(self) -> Letter {
        match self {
            Edge::Top | Edge::Bottom => Letter::A,
            Edge::Left | Edge::Right => Letter::B,
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Edge::Top => "top",
            Edge::Bottom => "bottom",
            Edge::Left => "left",
            Edge::Right => "right",
        };
        write!(f, "{name}")
    }
}

/// Launch direction: up-right along a nonnegative slope, or straight up.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Aim {
    Slope(Rational),
    Vertical,
}

impl Aim {
    fn velocity(&self) -> Result<(Rational, Rational)> {
        match self {
            Aim::Vertical => Ok((Rational::zero(), Rational::one())),
            Aim::Slope(s) => {
                if s.is_negative() {
                    return Err(Error::Domain(format!("negative slope {s} is out of scope")));
                }
                Ok((
                    Rational::from_integer(s.denom().clone()),
                    Rational::from_integer(s.numer().clone()),
                ))
            }
        }
    }
}

/// One reflection: where the ball hit, which edge, and the trajectory
/// parameter of the hit (unfolded position = start + param * velocity).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bounce {
    pub point: Point,
    pub edge: Edge,
    pub param: Rational,
}

/// A simulated billiard trajectory.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilliardPath {
    pub start: Point,
    pub aim: Aim,
    pub bounces: Vec<Bounce>,
    /// Bounce count of one full period, when a repeated (position, direction)
    /// state was found within the bounce budget.
    pub period: Option<usize>,
    velocity: (Rational, Rational),
}

impl BilliardPath {
    /// Edge letters of the recorded bounces.
    pub fn edge_word(&self) -> FiniteWord {
        FiniteWord::new(
            self.bounces.iter().map(|b| b.edge.letter()).collect::<Vec<_>>(),
        )
    }

    pub fn initial_velocity(&self) -> (&Rational, &Rational) {
        (&self.velocity.0, &self.velocity.1)
    }
}

/// Simulates exact reflections in the unit square until `max_bounces` or
/// until the (position, direction) state repeats, whichever comes first.
/// Corner hits are reported exactly.
pub fn billiard_path(aim: &Aim, start: &Point, max_bounces: usize) -> Result<BilliardPath> {
    let one = Rational::one();
    let zero = Rational::zero();
    if start.x < zero || start.x > one || start.y < zero || start.y > one {
        return Err(Error::Domain(format!("start {start} is outside the table")));
    }
    let on_x = start.x == zero || start.x == one;
    let on_y = start.y == zero || start.y == one;
    if on_x && on_y {
        return Err(Error::Domain(format!("start {start} is a corner")));
    }
    let (mut vx, mut vy) = aim.velocity()?;
    if (start.x == one && vx > zero) || (start.y == one && vy > zero) {
        return Err(Error::Domain(format!("start {start} aims out of the table")));
    }

    let mut pos = start.clone();
    let mut total = Rational::zero();
    let mut bounces: Vec<Bounce> = Vec::new();
    let mut seen: HashMap<(Point, (Rational, Rational)), usize> = HashMap::new();
    let mut period = None;

    for _ in 0..max_bounces {
        // time to the next wall in each axis
        let tx = if vx > zero {
            Some(&(&one - &pos.x) / &vx)
        } else if vx < zero {
            Some(&(&zero - &pos.x) / &vx)
        } else {
            None
        };
        let ty = if vy > zero {
            Some(&(&one - &pos.y) / &vy)
        } else if vy < zero {
            Some(&(&zero - &pos.y) / &vy)
        } else {
            None
        };
        let t = match (&tx, &ty) {
            (Some(a), Some(b)) => {
                if a < b {
                    a.clone()
                } else {
                    b.clone()
                }
            }
            (Some(a), None) => a.clone(),
            (None, Some(b)) => b.clone(),
            (None, None) => unreachable!("velocity is never zero"),
        };
        pos = Point::new(&pos.x + &(&vx * &t), &pos.y + &(&vy * &t));
        total = &total + &t;
        let hit_x = pos.x == zero || pos.x == one;
        let hit_y = pos.y == zero || pos.y == one;
        if hit_x && hit_y {
            return Err(Error::VertexHit { x: pos.x, y: pos.y });
        }
        let edge = if hit_x {
            vx = -vx;
            if pos.x == one {
                Edge::Right
            } else {
                Edge::Left
            }
        } else {
            vy = -vy;
            if pos.y == one {
                Edge::Top
            } else {
                Edge::Bottom
            }
        };
        bounces.push(Bounce { point: pos.clone(), edge, param: total.clone() });
        let state = (pos.clone(), (vx.clone(), vy.clone()));
        if let Some(&first) = seen.get(&state) {
            period = Some(bounces.len() - 1 - first);
            break;
        }
        seen.insert(state, bounces.len() - 1);
    }

    let velocity = aim.velocity()?;
    Ok(BilliardPath { start: start.clone(), aim: aim.clone(), bounces, period, velocity })
}

/// The straight line a billiard path unfolds onto, with its lattice
/// crossings. Crossing `i` is bounce `i` pushed into the plane, so the
/// crossing letters repeat the edge letters of the folded path.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnfoldedLine {
    pub start: Point,
    pub velocity: (Rational, Rational),
    /// Trajectory parameter of the last recorded crossing.
    pub t_end: Rational,
    pub crossings: Vec<CrossingEvent>,
}

/// Unfolds a simulated path into its straight line. Requires at least one
/// bounce.
pub fn unfold(path: &BilliardPath) -> Result<UnfoldedLine> {
    if path.bounces.is_empty() {
        return Err(Error::Precondition("unfolding needs at least one bounce".into()));
    }
    let (vx, vy) = path.initial_velocity();
    let mut crossings = Vec::with_capacity(path.bounces.len());
    for bounce in &path.bounces {
        let x = &path.start.x + &(vx * &bounce.param);
        let y = &path.start.y + &(vy * &bounce.param);
        let (kind, index) = match bounce.edge.letter() {
            Letter::A => {
                debug_assert!(y.is_integer(), "unfolded top/bottom hit lies on y in Z");
                (CrossingKind::Horizontal, y.floor_int())
            }
            Letter::B => {
                debug_assert!(x.is_integer(), "unfolded left/right hit lies on x in Z");
                (CrossingKind::Vertical, x.floor_int())
            }
        };
        crossings.push(CrossingEvent {
            kind,
            index,
            x: Number::Rational(x),
            y: Number::Rational(y),
        });
    }
    Ok(UnfoldedLine {
        start: path.start.clone(),
        velocity: (vx.clone(), vy.clone()),
        t_end: path.bounces.last().expect("nonempty").param.clone(),
        crossings,
    })
}

/// One billiard period of edge letters for a valid torus coding: the torus
/// word traversed twice. One billiard period unfolds onto two torus periods
/// of the same straight line, so the edge letters repeat the crossing word;
/// the doubling is confirmed against simulation in the tests.
pub fn torus_to_billiard(w: &PeriodicWord) -> Result<FiniteWord> {
    match w.validate_cutting_sequence() {
        Verdict::Valid { .. } => {
            let period = w.period_word();
            Ok(period.concat(&period))
        }
        Verdict::Rejected(r) => Err(Error::Rejected(r)),
    }
}

/// Billiard bounce period of a rational slope `p/q` in lowest terms:
/// `2 (p + q)`.
pub fn billiard_period(slope: &Rational) -> Result<BigInt> {
    if slope.is_negative() {
        return Err(Error::Domain(format!("negative slope {slope} is out of scope")));
    }
    Ok(BigInt::from(2) * (slope.numer() + slope.denom()))
}
