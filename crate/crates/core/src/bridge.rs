//! The two-way translation between rational slopes and periodic cutting
//! sequences.
//!
//! Reduction: shear while `A`s dominate, flip when `B`s dominate, down to the
//! all-`B` word. Replaying the recorded trace backward from slope 0 (shear
//! adds 1, flip inverts) recovers the slope, and the run lengths of shear
//! blocks in the trace are exactly the partial quotients of its continued
//! fraction. Construction runs the same trace in reverse on words, starting
//! from `(B)*`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cf::ContinuedFraction;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::transforms::{flip, lengthen_a};
use crate::words::{validity, Letter, PeriodicWord, RewriteStep, Verdict};

/// The reduction trace of a valid cutting sequence: the rewrite steps applied
/// on the way down to the terminal constant word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RewriteTrace {
    steps: Vec<RewriteStep>,
    terminal: PeriodicWord,
}

impl RewriteTrace {
    pub fn steps(&self) -> &[RewriteStep] {
        &self.steps
    }

    pub fn terminal(&self) -> &PeriodicWord {
        &self.terminal
    }

    /// Replays the trace backward from slope 0: shear becomes `+1`, flip
    /// inverts. Reproduces the slope the trace was recorded from.
    pub fn replay_slope(&self) -> Result<Rational> {
        let mut slope = Rational::zero();
        for step in self.steps.iter().rev() {
            slope = match step {
                RewriteStep::Shear => &slope + &Rational::one(),
                RewriteStep::Flip => slope.recip()?,
            };
        }
        Ok(slope)
    }

    /// Lengths of the maximal shear blocks, separated by flips. These are the
    /// partial quotients of the slope's continued fraction; the first block
    /// may be empty when the slope starts below 1.
    pub fn shear_block_lengths(&self) -> Vec<BigInt> {
        let mut blocks = vec![BigInt::zero()];
        for step in &self.steps {
            match step {
                RewriteStep::Shear => {
                    let last = blocks.last_mut().expect("nonempty");
                    *last += 1;
                }
                RewriteStep::Flip => blocks.push(BigInt::zero()),
            }
        }
        blocks
    }
}

/// Reduces a valid cutting sequence to the all-`B` word and reads the slope
/// off the trace. The result always equals the direct crossing-count ratio
/// `#A / #B`, which is asserted internally.
pub fn sequence_to_slope(w: &PeriodicWord) -> Result<(Rational, RewriteTrace)> {
    if w.count(Letter::B) == 0 {
        return Err(Error::Domain(
            "the all-A word codes a vertical trajectory; its slope is not finite".into(),
        ));
    }
    let verdict = w.validate_cutting_sequence();
    let steps = match verdict {
        Verdict::Valid { steps } => steps,
        Verdict::Rejected(r) => return Err(Error::Rejected(r)),
    };
    // Re-run the reduction to capture the terminal word; the checker already
    // proved it terminates without rejection.
    let mut word = w.clone();
    for step in &steps {
        word = match step {
            RewriteStep::Shear => validity::shorten_a_runs(&word),
            RewriteStep::Flip => flip(&word),
        };
    }
    let trace = RewriteTrace { steps, terminal: word };
    let slope = trace.replay_slope()?;
    let by_counts = Rational::new(w.count(Letter::A), w.count(Letter::B)).expect("B > 0");
    assert_eq!(slope, by_counts, "trace replay must agree with crossing counts");
    Ok((slope, trace))
}

/// Builds the cutting sequence of a nonnegative rational slope, starting from
/// `(B)*` and replaying the slope's reduction path in reverse. The output is
/// rotation-canonical and `sequence_to_slope` inverts it exactly.
pub fn slope_to_sequence(slope: &Rational) -> Result<PeriodicWord> {
    if slope.is_negative() {
        return Err(Error::Domain(format!("negative slope {slope} is out of scope")));
    }
    // Reduction path on slopes: shear while s >= 1, flip while 0 < s < 1.
    let mut path = Vec::new();
    let mut s = slope.clone();
    let one = Rational::one();
    while !s.is_zero() {
        if s >= one {
            path.push(RewriteStep::Shear);
            s = &s - &one;
        } else {
            path.push(RewriteStep::Flip);
            s = s.recip().expect("nonzero");
        }
    }
    let mut word: PeriodicWord = "(B)*".parse().expect("literal");
    for step in path.iter().rev() {
        word = match step {
            RewriteStep::Shear => lengthen_a(&word)?,
            RewriteStep::Flip => flip(&word),
        };
    }
    Ok(word)
}

/// Continued fraction of a word's slope, read directly from the rewrite
/// trace: the shear block lengths are the partial quotients.
pub fn cf_of_sequence(w: &PeriodicWord) -> Result<ContinuedFraction> {
    let (slope, trace) = sequence_to_slope(w)?;
    let quotients = trace.shear_block_lengths();
    let cf = ContinuedFraction::finite(quotients)?;
    debug_assert_eq!(cf, ContinuedFraction::expand(&slope)?);
    Ok(cf)
}
