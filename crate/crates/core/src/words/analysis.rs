//! Factor enumeration, complexity, balance and letter-isolation classes.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::{factor_set, FiniteWord, Letter, PeriodicWord};

/// Balance verdict. An unbalanced word carries a witness pair of equal-length
/// factors whose counts of `B` (= 1) differ by at least two.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Balance {
    Balanced,
    Unbalanced { u: FiniteWord, v: FiniteWord },
}

impl Balance {
    pub fn is_balanced(&self) -> bool {
        matches!(self, Balance::Balanced)
    }
}

/// Letter-isolation class: `Type0` when `11` never occurs (1 is isolated),
/// `Type1` when `00` never occurs, `Neither` when both doubles appear.
/// Pure alternation, where both doubles are absent, reports `Type0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TypeClass {
    Type0,
    Type1,
    Neither,
}

/// Window buffer for factor scans: `starts` windows of any length up to the
/// buffer length, beginning at offsets `0..starts`.
pub struct FactorWindow {
    buffer: Vec<Letter>,
    starts: usize,
}

/// Word-combinatorics operations shared by finite and periodic words.
/// Periodic words use cyclic (bi-infinite) factor semantics.
pub trait WordAnalysis {
    /// Windows to scan for factors of length `n`. Errors when no factor of
    /// that length exists (`n = 0`, or `n` beyond a finite word).
    fn factor_window(&self, n: usize) -> Result<FactorWindow>;

    /// The set of distinct length-`n` factors.
    fn factors(&self, n: usize) -> Result<BTreeSet<FiniteWord>> {
        let w = self.factor_window(n)?;
        Ok(factor_set(&w.buffer, n, w.starts))
    }

    /// Number of distinct length-`n` factors, the complexity `p(n)`.
    fn complexity(&self, n: usize) -> Result<usize> {
        Ok(self.factors(n)?.len())
    }

    /// Whether `needle` occurs as a factor.
    fn has_factor(&self, needle: &FiniteWord) -> bool {
        let n = needle.len();
        match self.factor_window(n) {
            Err(_) => false,
            Ok(w) => (0..w.starts).any(|i| w.buffer[i..i + n] == *needle.letters()),
        }
    }

    /// True when both `AA` and `BB` occur.
    fn has_both_doubles(&self) -> bool {
        let aa: FiniteWord = "AA".parse().expect("literal");
        let bb: FiniteWord = "BB".parse().expect("literal");
        self.has_factor(&aa) && self.has_factor(&bb)
    }

    /// Checks every pair of equal-length factors for lengths `1..=n_max`
    /// (clamped to the lengths that exist). Returns the first violation,
    /// scanning lengths in increasing order.
    fn balance(&self, n_max: usize) -> Balance {
        for n in 1..=n_max {
            let Ok(set) = self.factors(n) else { break };
            let heavy = set.iter().max_by_key(|w| w.count(Letter::B));
            let light = set.iter().min_by_key(|w| w.count(Letter::B));
            if let (Some(u), Some(v)) = (heavy, light) {
                if u.count(Letter::B) >= v.count(Letter::B) + 2 {
                    return Balance::Unbalanced { u: u.clone(), v: v.clone() };
                }
            }
        }
        Balance::Balanced
    }

    /// A shortest word `W` such that `0W0` and `1W1` both occur, present
    /// exactly when `balance(n_max)` reports unbalanced. Scans candidate
    /// lengths upward, so the empty word wins whenever `00` and `11` coexist.
    fn unbalance_witness(&self, n_max: usize) -> Option<FiniteWord> {
        if self.balance(n_max).is_balanced() {
            return None;
        }
        for len in 0..=n_max.saturating_sub(2) {
            let candidates: Vec<FiniteWord> = if len == 0 {
                vec![FiniteWord::empty()]
            } else {
                match self.factors(len) {
                    Ok(set) => set.into_iter().collect(),
                    Err(_) => break,
                }
            };
            for w in candidates {
                let a = wrap(&w, Letter::A);
                let b = wrap(&w, Letter::B);
                if self.has_factor(&a) && self.has_factor(&b) {
                    return Some(w);
                }
            }
        }
        None
    }

    /// Letter-isolation class from the length-2 factors.
    fn classify_type(&self) -> TypeClass {
        let bb: FiniteWord = "BB".parse().expect("literal");
        let aa: FiniteWord = "AA".parse().expect("literal");
        match (self.has_factor(&bb), self.has_factor(&aa)) {
            (false, _) => TypeClass::Type0,
            (true, false) => TypeClass::Type1,
            (true, true) => TypeClass::Neither,
        }
    }

    /// True when precisely one of `00`, `11` is missing from the factors.
    fn exactly_one_double_absent(&self) -> bool {
        let bb: FiniteWord = "BB".parse().expect("literal");
        let aa: FiniteWord = "AA".parse().expect("literal");
        self.has_factor(&aa) != self.has_factor(&bb)
    }
}

fn wrap(w: &FiniteWord, outer: Letter) -> FiniteWord {
    let mut letters = Vec::with_capacity(w.len() + 2);
    letters.push(outer);
    letters.extend_from_slice(w.letters());
    letters.push(outer);
    FiniteWord::new(letters)
}

impl WordAnalysis for FiniteWord {
    fn factor_window(&self, n: usize) -> Result<FactorWindow> {
        if n == 0 {
            return Err(Error::Domain("factor length must be at least 1".into()));
        }
        if n > self.len() {
            return Err(Error::Domain(format!(
                "factor length {n} exceeds word length {}",
                self.len()
            )));
        }
        Ok(FactorWindow { buffer: self.letters().to_vec(), starts: self.len() - n + 1 })
    }
}

impl WordAnalysis for PeriodicWord {
    fn factor_window(&self, n: usize) -> Result<FactorWindow> {
        if n == 0 {
            return Err(Error::Domain("factor length must be at least 1".into()));
        }
        let m = self.period_len();
        let buffer: Vec<Letter> = self.period().iter().copied().cycle().take(m + n - 1).collect();
        Ok(FactorWindow { buffer, starts: m })
    }
}

impl PeriodicWord {
    /// Smallest `n` at which the complexity has flattened onto its final
    /// value, i.e. the first `n` with `p(n) <= n`. For a primitive period of
    /// length `m` this is `m`: complexity climbs as `p(n) = n + 1` for valid
    /// cutting sequences and tops out at the `m` distinct rotations.
    pub fn complexity_plateau(&self) -> usize {
        for n in 1.. {
            let p = self.complexity(n).expect("n >= 1 on periodic word");
            if p <= n {
                return n;
            }
        }
        unreachable!("complexity of a periodic word is bounded by its period")
    }
}

impl FiniteWord {
    /// Finite-scale recurrence proxy: every length-`n` factor of the prefix
    /// must occur both in the first half and in the second half. Requires
    /// the prefix to hold at least `4n` letters.
    pub fn recurrence_check(&self, n: usize) -> Result<bool> {
        if n == 0 {
            return Err(Error::Domain("factor length must be at least 1".into()));
        }
        if self.len() < 4 * n {
            return Err(Error::Domain(format!(
                "prefix of length {} is too short for recurrence at n = {n}; need {}",
                self.len(),
                4 * n
            )));
        }
        let half = self.len() / 2;
        let first = FiniteWord::new(&self.letters()[..half]);
        let second = FiniteWord::new(&self.letters()[half..]);
        for factor in self.factors(n)? {
            if !first.has_factor(&factor) || !second.has_factor(&factor) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
