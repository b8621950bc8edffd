//! Cutting-sequence validity by iterated shear and flip rewriting.
//!
//! A periodic word is a cutting sequence exactly when repeatedly shortening
//! its `A`-runs (when `A`s dominate) and swapping letters (when `B`s
//! dominate) drives it down to a constant word. Two checks reject along the
//! way:
//!
//! 1. both `AA` and `BB` occur, which no straight line can produce;
//! 2. some letter is isolated between runs whose lengths differ by two or
//!    more (a lone `B` inside `...AAABAAA...` next to a much shorter gap
//!    elsewhere). A genuine coding spaces the minority letter so evenly that
//!    cyclic run lengths never spread past one.

use std::fmt;

use super::{FiniteWord, Letter, PeriodicWord, WordAnalysis};

/// One rewriting move of the reduction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RewriteStep {
    /// Remove one `A` from every maximal `A`-run (slope decreases by 1).
    Shear,
    /// Swap `A` and `B` everywhere (slope inverts).
    Flip,
}

impl fmt::Display for RewriteStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewriteStep::Shear => write!(f, "S"),
            RewriteStep::Flip => write!(f, "F"),
        }
    }
}

/// Why a word was rejected, tagged with the rule number of the check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RejectReason {
    /// Rule 1: both `AA` and `BB` occur.
    BothDoubles,
    /// Rule 2: the runs of `letter` around its isolated complement spread
    /// further apart than any line allows.
    GapImbalance { letter: Letter, short: usize, long: usize },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rejection {
    pub reason: RejectReason,
    /// Rule number that fired (1 or 2).
    pub rule: u8,
    /// How many rewrite steps had been applied when the check fired.
    pub after_steps: usize,
    /// The word state that tripped the check.
    pub word: PeriodicWord,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.reason {
            RejectReason::BothDoubles => write!(
                f,
                "rule 1 after {} steps: {} contains both AA and BB",
                self.after_steps, self.word
            ),
            RejectReason::GapImbalance { letter, short, long } => write!(
                f,
                "rule 2 after {} steps: {} has {letter:?}-runs of lengths {short} and {long}",
                self.after_steps, self.word
            ),
        }
    }
}

/// Outcome of the validity iteration.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// The word reduced to a constant; the trace lists the applied steps.
    Valid { steps: Vec<RewriteStep> },
    Rejected(Rejection),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid { .. })
    }
}

impl PeriodicWord {
    /// Runs the shear/flip reduction and reports whether this word codes a
    /// straight trajectory.
    pub fn validate_cutting_sequence(&self) -> Verdict {
        let mut word = self.clone();
        let mut steps: Vec<RewriteStep> = Vec::new();
        // Every shear strictly removes letters and flips never repeat, so the
        // reduction ends well within twice the starting period.
        let bound = 2 * self.period_len() + 4;
        loop {
            if word.is_constant() {
                return Verdict::Valid { steps };
            }
            if let Some(rejection) = check_rules(&word, steps.len()) {
                return Verdict::Rejected(rejection);
            }
            if word.count(Letter::A) >= word.count(Letter::B) {
                word = shorten_a_runs(&word);
                steps.push(RewriteStep::Shear);
            } else {
                word = word.flipped();
                steps.push(RewriteStep::Flip);
            }
            assert!(steps.len() <= bound, "reduction failed to terminate");
        }
    }
}

fn check_rules(word: &PeriodicWord, after_steps: usize) -> Option<Rejection> {
    if word.has_both_doubles() {
        return Some(Rejection {
            reason: RejectReason::BothDoubles,
            rule: 1,
            after_steps,
            word: word.clone(),
        });
    }
    for letter in [Letter::A, Letter::B] {
        let doubled = FiniteWord::new(vec![letter.flipped(), letter.flipped()]);
        if word.has_factor(&doubled) {
            continue; // runs of `letter` are not the isolated side
        }
        let runs = word.cyclic_runs(letter);
        if let (Some(&short), Some(&long)) = (runs.iter().min(), runs.iter().max()) {
            if long >= short + 2 {
                return Some(Rejection {
                    reason: RejectReason::GapImbalance { letter, short, long },
                    rule: 2,
                    after_steps,
                    word: word.clone(),
                });
            }
        }
    }
    None
}

/// Deletes one `A` from every maximal cyclic `A`-run. Callers guarantee that
/// `BB` does not occur; a word without any `B` is returned unchanged, the
/// vertical trajectory being fixed by the shear.
pub(crate) fn shorten_a_runs(word: &PeriodicWord) -> PeriodicWord {
    let period = word.period();
    if period.iter().all(|&l| l == Letter::A) {
        return word.clone();
    }
    // Rotate to start right after a B so runs never straddle the boundary.
    let n = period.len();
    let start = period.iter().position(|&l| l == Letter::B).expect("has a B") + 1;
    let mut out = Vec::with_capacity(n);
    let mut run = 0usize;
    for i in 0..n {
        match period[(start + i) % n] {
            Letter::A => run += 1,
            Letter::B => {
                // drop one A from the finished run
                out.extend(std::iter::repeat(Letter::A).take(run.saturating_sub(1)));
                out.push(Letter::B);
                run = 0;
            }
        }
    }
    out.extend(std::iter::repeat(Letter::A).take(run.saturating_sub(1)));
    PeriodicWord::new(out).expect("at least one B remains")
}
