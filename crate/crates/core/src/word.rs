//! Words over the positive integers and the classical statistics on them:
//! the inversion number, the major index, and relative k-inversions under
//! the cyclic letter order that starts just above k.

use std::fmt;
use std::str::FromStr;

use crate::Error;

/// A finite sequence of positive letters. Positions are 1-based in all
/// documented semantics; the letter 0 never occurs inside a word (it is
/// reserved as the virtual basement entry below a filling).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    /// Panics if any letter is 0.
    pub fn new(letters: Vec<u32>) -> Self {
        assert!(
            letters.iter().all(|&x| x >= 1),
            "word letters must be positive"
        );
        Word { letters }
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest letter, or 0 for the empty word.
    pub fn max_letter(&self) -> u32 {
        self.letters.iter().copied().max().unwrap_or(0)
    }

    /// Multiplicities of the letters 1..=max_letter as an exponent vector.
    /// Panics if a letter exceeds `max_letter`.
    pub fn content(&self, max_letter: u32) -> Vec<u32> {
        let mut counts = vec![0u32; max_letter as usize];
        for &x in &self.letters {
            counts[(x - 1) as usize] += 1;
        }
        counts
    }

    /// True when the letters are exactly 1..=n in some order.
    pub fn is_permutation(&self) -> bool {
        let n = self.letters.len();
        let mut seen = vec![false; n];
        for &x in &self.letters {
            let x = x as usize;
            if x > n || seen[x - 1] {
                return false;
            }
            seen[x - 1] = true;
        }
        true
    }

    /// Number of pairs i < j with w_i > w_j.
    pub fn inv(&self) -> u64 {
        self.inv_k(0)
    }

    /// Sum of the 1-based positions d with w_d > w_{d+1}.
    pub fn maj(&self) -> u64 {
        self.letters
            .windows(2)
            .enumerate()
            .filter(|(_, pair)| pair[0] > pair[1])
            .map(|(d, _)| (d + 1) as u64)
            .sum()
    }

    /// Number of pairs i < j with w_j ≺_k w_i. A 0-inversion is an
    /// ordinary inversion.
    pub fn inv_k(&self, k: u32) -> u64 {
        let mut count = 0;
        for i in 0..self.letters.len() {
            for j in i + 1..self.letters.len() {
                if k_less(k, self.letters[j], self.letters[i]) {
                    count += 1;
                }
            }
        }
        count
    }
}

/// The strict order ≺_k on letters: k+1 ≺_k k+2 ≺_k ⋯ ≺_k 1 ≺_k ⋯ ≺_k k.
/// Letters above k come first, in natural order, followed by the letters up
/// to and including k. Equal letters are never related. `a` and `b` must be
/// positive; `k` may be 0, where ≺_0 is the natural order.
pub fn k_less(k: u32, a: u32, b: u32) -> bool {
    debug_assert!(a >= 1 && b >= 1);
    (a <= k, a) < (b <= k, b)
}

/// All words of exactly `len` letters over 1..=alphabet, in lexicographic
/// order. `alphabet` must be at least 1.
pub fn words_of_length(len: usize, alphabet: u32) -> Words {
    assert!(alphabet >= 1, "alphabet must be at least 1");
    Words {
        current: vec![1; len],
        alphabet,
        done: false,
    }
}

/// Iterator over the words of a fixed length and alphabet.
pub struct Words {
    current: Vec<u32>,
    alphabet: u32,
    done: bool,
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let word = Word {
            letters: self.current.clone(),
        };
        let mut i = self.current.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] < self.alphabet {
                self.current[i] += 1;
                break;
            }
            self.current[i] = 1;
        }
        Some(word)
    }
}

impl fmt::Display for Word {
    /// Letters as decimal integers separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts the space-separated decimal form ("2 5 1 3 2") and, for a
    /// single token of two or more digits all in 1..=9, the compact form
    /// ("25132"). A token containing a 0 digit is never compact, so "102"
    /// is the single letter 102 while "12" is the two-letter word 1 2.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        if !s.contains(char::is_whitespace)
            && s.len() >= 2
            && s.chars().all(|c| ('1'..='9').contains(&c))
        {
            let letters = s.chars().map(|c| c.to_digit(10).unwrap()).collect();
            return Ok(Word { letters });
        }
        let mut letters = Vec::new();
        for token in s.split_whitespace() {
            let x: u32 = token
                .parse()
                .map_err(|_| Error::InvalidWord(format!("bad letter {token:?}")))?;
            if x == 0 {
                return Err(Error::InvalidWord(
                    "the letter 0 is reserved for the basement".to_string(),
                ));
            }
            letters.push(x);
        }
        Ok(Word { letters })
    }
}
