//! Two-letter symbolic sequences and the word-combinatorics toolkit.
//!
//! The alphabet is `{A, B}` with the fixed numeric aliases `A = 0` and
//! `B = 1`: an `A` records a horizontal grid-line crossing, a `B` a vertical
//! one. Periodic words are stored canonically (primitive period, smallest
//! rotation), so equality is rotation-invariant; a trajectory's coding does
//! not depend on where recording starts.

mod analysis;
pub(crate) mod validity;

pub use analysis::{Balance, FactorWindow, TypeClass, WordAnalysis};
pub use validity::{RejectReason, Rejection, RewriteStep, Verdict};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One symbol of the two-letter alphabet. `A = 0`, `B = 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn flipped(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }

    pub fn as_bit(self) -> u8 {
        match self {
            Letter::A => 0,
            Letter::B => 1,
        }
    }

    pub fn from_char(ch: char) -> Result<Letter> {
        match ch {
            'A' | 'a' | '0' => Ok(Letter::A),
            'B' | 'b' | '1' => Ok(Letter::B),
            _ => Err(Error::Parse(format!("invalid letter `{ch}`; expected A, B, 0 or 1"))),
        }
    }
}

/// Output alphabet for formatting words.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Alphabet {
    #[default]
    Ab,
    Binary,
}

impl Alphabet {
    pub fn render(self, letter: Letter) -> char {
        match (self, letter) {
            (Alphabet::Ab, Letter::A) => 'A',
            (Alphabet::Ab, Letter::B) => 'B',
            (Alphabet::Binary, Letter::A) => '0',
            (Alphabet::Binary, Letter::B) => '1',
        }
    }

    /// The alphabet a text form was written in: `Binary` when every letter
    /// is a digit, `Ab` otherwise.
    pub fn detect(text: &str) -> Alphabet {
        let letters: Vec<char> = text.chars().filter(|c| "ABab01".contains(*c)).collect();
        if !letters.is_empty() && letters.iter().all(|c| "01".contains(*c)) {
            Alphabet::Binary
        } else {
            Alphabet::Ab
        }
    }
}

/// A finite word over `{A, B}`; may be empty.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteWord(Vec<Letter>);

impl FiniteWord {
    pub fn new(letters: impl Into<Vec<Letter>>) -> Self {
        FiniteWord(letters.into())
    }

    pub fn empty() -> Self {
        FiniteWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn flipped(&self) -> FiniteWord {
        FiniteWord(self.0.iter().map(|l| l.flipped()).collect())
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    pub fn concat(&self, other: &FiniteWord) -> FiniteWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        FiniteWord(letters)
    }

    pub fn format(&self, alphabet: Alphabet) -> String {
        self.0.iter().map(|&l| alphabet.render(l)).collect()
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format(Alphabet::Ab))
    }
}

impl fmt::Debug for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for FiniteWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.trim().chars() {
            letters.push(Letter::from_char(ch)?);
        }
        Ok(FiniteWord(letters))
    }
}

/// The bi-infinite repetition of a nonempty block, stored canonically:
/// the block is primitive and rotated to its lexicographically least form.
/// Two periodic words are equal exactly when they repeat the same trajectory
/// coding, regardless of starting point.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PeriodicWord(Vec<Letter>);

impl PeriodicWord {
    pub fn new(block: impl Into<Vec<Letter>>) -> Result<Self> {
        let block = block.into();
        if block.is_empty() {
            return Err(Error::Domain("periodic word needs a nonempty period".into()));
        }
        let primitive = primitive_period(&block);
        Ok(PeriodicWord(least_rotation(primitive)))
    }

    pub fn from_finite(word: &FiniteWord) -> Result<Self> {
        PeriodicWord::new(word.letters().to_vec())
    }

    /// The canonical primitive period.
    pub fn period(&self) -> &[Letter] {
        &self.0
    }

    pub fn period_len(&self) -> usize {
        self.0.len()
    }

    pub fn period_word(&self) -> FiniteWord {
        FiniteWord(self.0.clone())
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() == 1
    }

    pub fn flipped(&self) -> PeriodicWord {
        PeriodicWord::new(self.0.iter().map(|l| l.flipped()).collect::<Vec<_>>())
            .expect("nonempty stays nonempty")
    }

    /// First `n` letters of the repetition.
    pub fn prefix(&self, n: usize) -> FiniteWord {
        FiniteWord(self.0.iter().copied().cycle().take(n).collect())
    }

    /// Letters in an endless stream.
    pub fn stream(&self) -> WordStream {
        let block = self.0.clone();
        WordStream::new(block.into_iter().cycle())
    }

    pub fn format(&self, alphabet: Alphabet) -> String {
        format!("({})*", self.period_word().format(alphabet))
    }

    /// Maximal run lengths of `letter`, read cyclically. A run wrapping the
    /// period boundary counts once. The constant word of `letter` reports a
    /// single run covering the period.
    pub fn cyclic_runs(&self, letter: Letter) -> Vec<usize> {
        let n = self.0.len();
        if self.0.iter().all(|&l| l == letter) {
            return vec![n];
        }
        // start scanning right after some position not carrying `letter`
        let start = self.0.iter().position(|&l| l != letter).expect("mixed word") + 1;
        let mut runs = Vec::new();
        let mut current = 0usize;
        for i in 0..n {
            let l = self.0[(start + i) % n];
            if l == letter {
                current += 1;
            } else {
                if current > 0 {
                    runs.push(current);
                }
                current = 0;
            }
        }
        if current > 0 {
            runs.push(current);
        }
        runs
    }
}

impl fmt::Display for PeriodicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format(Alphabet::Ab))
    }
}

impl fmt::Debug for PeriodicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for PeriodicWord {
    type Err = Error;

    /// Accepts `(BABAA)*` or a bare block `BABAA` (in either alphabet).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let block = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(")*"))
            .unwrap_or(s);
        let word: FiniteWord = block.parse()?;
        PeriodicWord::from_finite(&word)
    }
}

/// A pull-based, deterministic stream of letters.
pub struct WordStream {
    iter: Box<dyn Iterator<Item = Letter>>,
}

impl WordStream {
    pub fn new(iter: impl Iterator<Item = Letter> + 'static) -> Self {
        WordStream { iter: Box::new(iter) }
    }

    /// Pulls the next `n` letters. Panics if the underlying source runs dry,
    /// which streams of this crate never do.
    pub fn pull(&mut self, n: usize) -> FiniteWord {
        let letters: Vec<Letter> = self.iter.by_ref().take(n).collect();
        assert_eq!(letters.len(), n, "word stream ended early");
        FiniteWord(letters)
    }
}

impl Iterator for WordStream {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        self.iter.next()
    }
}

fn primitive_period(block: &[Letter]) -> Vec<Letter> {
    let n = block.len();
    for p in 1..n {
        if n % p == 0 && block.chunks(p).all(|ch| ch == &block[..p]) {
            return block[..p].to_vec();
        }
    }
    block.to_vec()
}

/// Lexicographically least rotation (A < B), by direct comparison against a
/// doubled copy.
fn least_rotation(block: Vec<Letter>) -> Vec<Letter> {
    let n = block.len();
    let doubled: Vec<Letter> = block.iter().chain(block.iter()).copied().collect();
    let mut best = 0usize;
    for start in 1..n {
        if doubled[start..start + n] < doubled[best..best + n] {
            best = start;
        }
    }
    doubled[best..best + n].to_vec()
}

/// Distinct length-`n` factors of a letter sequence. For cyclic semantics the
/// caller passes windows over an extended buffer.
pub(crate) fn factor_set(letters: &[Letter], n: usize, starts: usize) -> BTreeSet<FiniteWord> {
    let mut set = BTreeSet::new();
    for i in 0..starts {
        set.insert(FiniteWord(letters[i..i + n].to_vec()));
    }
    set
}
