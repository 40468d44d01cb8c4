//! Words in the free monoid on a finite ordered alphabet.
//!
//! Letters are alphabet indices; index order is the generator order. Two
//! orders are provided: [`compare_lex`] on words of one fixed length, and the
//! length-then-lex order used by [`Word`]'s `Ord` impl, which is a well-order.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<usize>,
    alphabet_size: usize,
}

impl Word {
    pub fn new(letters: Vec<usize>, alphabet_size: usize) -> Result<Self> {
        if let Some(&letter) = letters.iter().find(|&&l| l >= alphabet_size) {
            return Err(Error::LetterOutOfRange { letter, alphabet_size });
        }
        Ok(Word { letters, alphabet_size })
    }

    /// The unit word.
    pub fn empty(alphabet_size: usize) -> Self {
        Word { letters: Vec::new(), alphabet_size }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters `start..end` (0-based, half open).
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word { letters: self.letters[start..end].to_vec(), alphabet_size: self.alphabet_size }
    }

    pub fn concat(&self, other: &Word) -> Word {
        debug_assert_eq!(self.alphabet_size, other.alphabet_size);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters, alphabet_size: self.alphabet_size }
    }

    pub fn push(&self, letter: usize) -> Word {
        debug_assert!(letter < self.alphabet_size);
        let mut letters = self.letters.clone();
        letters.push(letter);
        Word { letters, alphabet_size: self.alphabet_size }
    }

    pub fn power(&self, e: usize) -> Word {
        Word { letters: self.letters.repeat(e), alphabet_size: self.alphabet_size }
    }

    /// Replace the letters starting at `at` by `piece`, keeping the length.
    pub fn splice(&self, at: usize, piece: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters[at..at + piece.len()].copy_from_slice(&piece.letters);
        Word { letters, alphabet_size: self.alphabet_size }
    }

    /// `true` if `sub` occurs as a factor (consecutive subword).
    pub fn contains_factor(&self, sub: &Word) -> bool {
        sub.is_empty() || self.letters.windows(sub.len()).any(|w| w == sub.letters.as_slice())
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Length-then-lex; alphabet size breaks ties so the order stays total.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_lenlex(self, other).then(self.alphabet_size.cmp(&other.alphabet_size))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// Lexicographic order on words of one fixed length.
pub fn compare_lex(w1: &Word, w2: &Word) -> Result<Ordering> {
    if w1.len() != w2.len() {
        return Err(Error::LengthMismatch(w1.len(), w2.len()));
    }
    Ok(w1.letters.cmp(&w2.letters))
}

/// Shorter words first; equal lengths compare lexicographically.
pub fn compare_lenlex(w1: &Word, w2: &Word) -> Ordering {
    w1.len().cmp(&w2.len()).then_with(|| w1.letters.cmp(&w2.letters))
}

/// All words of a given length in increasing lex order.
#[derive(Clone, Debug)]
pub struct WordEnumerator {
    alphabet_size: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for WordEnumerator {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // odometer increment, rightmost letter fastest
        let mut i = succ.len();
        self.next = loop {
            if i == 0 {
                break None;
            }
            i -= 1;
            if succ[i] + 1 < self.alphabet_size {
                succ[i] += 1;
                break Some(succ);
            }
            succ[i] = 0;
        };
        Some(Word { letters: current, alphabet_size: self.alphabet_size })
    }
}

/// Number of words of a given length, if it fits in a `u64`.
pub fn word_count(alphabet_size: usize, length: usize) -> Option<u64> {
    (alphabet_size as u64).checked_pow(u32::try_from(length).ok()?)
}

/// Enumerate Σ(length) in lex order. Fails if there are more than `cap` words.
pub fn enumerate_words(alphabet_size: usize, length: usize, cap: u64) -> Result<WordEnumerator> {
    if alphabet_size == 0 {
        return Err(Error::Input("alphabet must be nonempty".into()));
    }
    match word_count(alphabet_size, length) {
        Some(c) if c <= cap => Ok(WordEnumerator { alphabet_size, next: Some(vec![0; length]) }),
        _ => Err(Error::BudgetExceeded(format!(
            "{alphabet_size}^{length} words exceeds the enumeration cap {cap}"
        ))),
    }
}

/// The `|w| − sublength + 1` factors of length `sublength`, with 0-based
/// start positions.
pub fn consecutive_subwords(w: &Word, sublength: usize) -> Result<Vec<(usize, Word)>> {
    if sublength > w.len() {
        return Err(Error::SublengthTooLarge { sublength, length: w.len() });
    }
    Ok((0..=w.len() - sublength).map(|j| (j, w.slice(j, j + sublength))).collect())
}

/// `w = prefix · baseᵉ · suffix`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerDecomposition {
    pub prefix: Word,
    pub base: Word,
    pub exponent: usize,
    pub suffix: Word,
}

impl PowerDecomposition {
    pub fn reassemble(&self) -> Word {
        self.prefix.concat(&self.base.power(self.exponent)).concat(&self.suffix)
    }
}

/// Split off an n-th power from two coinciding factors.
///
/// `p < q` are 1-based start positions of two factors of length
/// `sublength` that are identical as letter sequences. Their overlap forces
/// period `q − p` on `a_p … a_{q+sublength−1}`, so with `u = a_p … a_{q−1}`
/// the word is `a_1 … a_{p−1} · uⁿ · a_{nq−(n−1)p} … a_m`. Requires
/// `n·(q−p) ≤ sublength`.
pub fn power_decompose(w: &Word, p: usize, q: usize, n: usize, sublength: usize) -> Result<PowerDecomposition> {
    if p == 0 || p >= q || n == 0 || q - 1 + sublength > w.len() {
        return Err(Error::NotPeriodic { p, q });
    }
    let period = q - p;
    let vp = w.slice(p - 1, p - 1 + sublength);
    let vq = w.slice(q - 1, q - 1 + sublength);
    if vp != vq || n * period > sublength {
        return Err(Error::NotPeriodic { p, q });
    }
    let suffix_start = (p - 1) + n * period; // 0-based index of a_{nq-(n-1)p}
    let out = PowerDecomposition {
        prefix: w.slice(0, p - 1),
        base: w.slice(p - 1, q - 1),
        exponent: n,
        suffix: w.slice(suffix_start, w.len()),
    };
    debug_assert_eq!(&out.reassemble(), w);
    Ok(out)
}
