//! Basement lift maps, their range compositions, and the elevator map.
//!
//! The i-th basement lift B_i reverses the positions occupied by the letter
//! i while the remaining letters keep their relative order; it is an
//! involution. The range composition B_{i→j} chains single lifts upward
//! (B_{i+1} first, then B_{i+2}, ..., then B_j) or, for j < i, undoes the
//! chain by applying the involutions in descending order. The elevator map
//! ψ_a drives range lifts over successively shorter suffixes of a word,
//! with the lift targets read from a basement word a.

use crate::{Error, Word};

/// Reverses the positions of `letter` in `w`: the output carries `letter`
/// at position j exactly when the input carries it at position n+1-j, and
/// the subsequence of all other letters is unchanged. An involution.
pub fn basement_lift(letter: u32, w: &Word) -> Word {
    assert!(letter >= 1, "lift index must be a positive letter");
    let n = w.len();
    let mut out = vec![0u32; n];
    for (j, &x) in w.letters().iter().enumerate() {
        if x == letter {
            out[n - 1 - j] = letter;
        }
    }
    let mut rest = w.letters().iter().filter(|&&x| x != letter);
    for slot in out.iter_mut() {
        if *slot == 0 {
            *slot = *rest.next().unwrap();
        }
    }
    Word::new(out)
}

/// The composition B_{from→to}. For to > from this applies B_{from+1},
/// then B_{from+2}, ..., then B_{to}; for to < from it applies the inverse
/// chain B_{from}, B_{from-1}, ..., B_{to+1} (each B_i being its own
/// inverse); for to = from it is the identity.
pub fn lift_range(from: u32, to: u32, w: &Word) -> Word {
    let mut cur = w.clone();
    if to > from {
        for i in from + 1..=to {
            cur = basement_lift(i, &cur);
        }
    } else {
        for i in (to + 1..=from).rev() {
            cur = basement_lift(i, &cur);
        }
    }
    cur
}

/// The word sequence w^(0), ..., w^(n) produced by one elevator run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftTrace {
    steps: Vec<Word>,
}

impl LiftTrace {
    /// All stages, starting with the input word; there are n+1 of them for
    /// an input of length n. Stage i agrees with stage i-1 on the first
    /// i-1 positions.
    pub fn steps(&self) -> &[Word] {
        &self.steps
    }

    /// The elevator image w^(n).
    pub fn final_word(&self) -> &Word {
        self.steps.last().expect("a trace has at least one stage")
    }
}

/// The elevator map ψ_a applied to `w`, recorded stage by stage.
///
/// Stage 1 lifts the whole word by B_{0→a_1}; stage i keeps the first i-1
/// letters and applies B_{a_{i-1}→a_i} to the rest. Only the first n
/// letters of the basement are read. Fails when the basement is shorter
/// than the word.
pub fn elevator_trace(basement: &Word, w: &Word) -> Result<LiftTrace, Error> {
    if basement.len() < w.len() {
        return Err(Error::BasementTooShort {
            basement: basement.len(),
            word: w.len(),
        });
    }
    let n = w.len();
    let mut steps = Vec::with_capacity(n + 1);
    steps.push(w.clone());
    let mut prev = 0u32; // a_0 = 0
    for i in 1..=n {
        let target = basement.letters()[i - 1];
        let cur = steps.last().unwrap().letters();
        let (head, tail) = cur.split_at(i - 1);
        let lifted = lift_range(prev, target, &Word::new(tail.to_vec()));
        let mut next = head.to_vec();
        next.extend_from_slice(lifted.letters());
        steps.push(Word::new(next));
        prev = target;
    }
    Ok(LiftTrace { steps })
}

/// The elevator map ψ_a: a content-preserving bijection on words of each
/// fixed length. Fails when the basement is shorter than the word.
pub fn elevator(basement: &Word, w: &Word) -> Result<Word, Error> {
    Ok(elevator_trace(basement, w)?.final_word().clone())
}

/// The unique w with elevator(basement, w) = v, obtained by unwinding the
/// stages in reverse: stage i is undone by applying B_{a_i→a_{i-1}} to the
/// suffix starting at position i, with a_0 = 0.
pub fn elevator_inverse(basement: &Word, v: &Word) -> Result<Word, Error> {
    if basement.len() < v.len() {
        return Err(Error::BasementTooShort {
            basement: basement.len(),
            word: v.len(),
        });
    }
    let n = v.len();
    let mut cur = v.clone();
    for i in (1..=n).rev() {
        let target = basement.letters()[i - 1];
        let prev = if i >= 2 { basement.letters()[i - 2] } else { 0 };
        let (head, tail) = cur.letters().split_at(i - 1);
        let lowered = lift_range(target, prev, &Word::new(tail.to_vec()));
        let mut next = head.to_vec();
        next.extend_from_slice(lowered.letters());
        cur = Word::new(next);
    }
    Ok(cur)
}
