//! Orbit structure of the full lift composition B_{0→n} acting on the
//! symmetric group. The map preserves inv, so inv is constant along every
//! orbit; beyond that the reports here are purely descriptive.

use std::collections::BTreeMap;

use crate::lift::lift_range;
use crate::{Error, Word};

/// Default bound on n for whole-group orbit decompositions; 8! = 40320
/// permutations keep the computation well under a second.
pub const DEFAULT_ORBIT_CAP: usize = 8;

/// Cycle summary of B_{0→n} on the n! permutation words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub n: usize,
    pub num_orbits: usize,
    /// Orbits of length 1.
    pub fixed_points: usize,
    /// Cycle length -> number of cycles of that length.
    pub cycle_lengths: BTreeMap<usize, usize>,
}

impl OrbitReport {
    /// Total number of permutations covered, which must be n!.
    pub fn total(&self) -> u64 {
        self.cycle_lengths
            .iter()
            .map(|(&len, &count)| len as u64 * count as u64)
            .sum()
    }
}

/// Decomposes the action w ↦ B_{0→n}(w) on all permutations of 1..=n into
/// cycles. Fails when n is 0 or exceeds `cap`; the memory footprint is one
/// byte per permutation.
pub fn basement_action_orbits(n: usize, cap: usize) -> Result<OrbitReport, Error> {
    if n < 1 || n > cap {
        return Err(Error::OrbitCapExceeded { n, cap });
    }
    let total = factorial(n);
    let mut visited = vec![false; total];
    let mut cycle_lengths: BTreeMap<usize, usize> = BTreeMap::new();
    let mut num_orbits = 0;
    for start in 0..total {
        if visited[start] {
            continue;
        }
        num_orbits += 1;
        let mut length = 0;
        let mut current = start;
        while !visited[current] {
            visited[current] = true;
            length += 1;
            let word = unrank_permutation(current, n);
            current = permutation_rank(lift_range(0, n as u32, &word).letters());
        }
        *cycle_lengths.entry(length).or_insert(0) += 1;
    }
    let fixed_points = cycle_lengths.get(&1).copied().unwrap_or(0);
    Ok(OrbitReport {
        n,
        num_orbits,
        fixed_points,
        cycle_lengths,
    })
}

/// The orbit of a permutation word under repeated B_{0→n}, starting at `w`
/// and ending just before `w` recurs.
pub fn orbit_of(w: &Word) -> Result<Vec<Word>, Error> {
    if !w.is_permutation() {
        return Err(Error::NotAPermutation(w.to_string()));
    }
    let n = w.len() as u32;
    let mut orbit = vec![w.clone()];
    let mut current = lift_range(0, n, w);
    while &current != w {
        let next = lift_range(0, n, &current);
        orbit.push(current);
        current = next;
    }
    Ok(orbit)
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Lehmer rank of a permutation of 1..=n in lexicographic order.
fn permutation_rank(letters: &[u32]) -> usize {
    let n = letters.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = letters[i + 1..].iter().filter(|&&x| x < letters[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

/// Inverse of [`permutation_rank`].
fn unrank_permutation(mut rank: usize, n: usize) -> Word {
    let mut digits = vec![0usize; n];
    for i in (0..n).rev() {
        let base = n - i;
        digits[i] = rank % base;
        rank /= base;
    }
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    let letters = digits
        .into_iter()
        .map(|d| pool.remove(d))
        .collect::<Vec<u32>>();
    Word::new(letters)
}
