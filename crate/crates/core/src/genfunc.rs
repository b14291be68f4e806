//! Exact sparse generating functions in q, t, and a bounded content
//! alphabet, built by folding filling enumerations.
//!
//! The polynomial for a shape μ and alphabet bound m sums one monomial
//! q^inv(F) t^maj(F) x^content(F) per filling F of μ with entries in
//! 1..=m. The full symmetric function lives in infinitely many variables;
//! restricting to x_1..x_m is sound for the symmetry checks here because
//! the identity restricts variable-wise. Coefficients are exact counts
//! held in u64 with checked addition — a count could only overflow after
//! enumerating 2^64 fillings, which is far beyond what can be folded.

use std::collections::BTreeMap;
use std::thread;

use crate::bijection::{symmetry_inverse, symmetry_map};
use crate::filling::{enumerate_fillings, Filling, Fillings};
use crate::Partition;

/// One monomial position: exponents of q and t plus the content exponent
/// vector of x_1..x_m. The derived order (q, then t, then content,
/// lexicographically) is the canonical serialization order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    pub q_exp: u64,
    pub t_exp: u64,
    pub content: Vec<u32>,
}

impl Term {
    fn of_filling(f: &Filling, max_letter: u32) -> Term {
        Term {
            q_exp: f.inv(),
            t_exp: f.maj(),
            content: f.content(max_letter),
        }
    }
}

/// A multivariate polynomial with nonnegative integer coefficients, stored
/// sparsely in canonical term order. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    max_letter: u32,
    terms: BTreeMap<Term, u64>,
}

/// Variable substitutions applied to a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Specialization {
    /// q := 1 — sum coefficients over the q exponent.
    QOne,
    /// t := 1 — sum coefficients over the t exponent.
    TOne,
    /// q := 0 — keep only terms with q exponent 0.
    QZero,
    /// t := 0 — keep only terms with t exponent 0.
    TZero,
    /// No substitution.
    None,
}

impl SparsePolynomial {
    pub fn zero(max_letter: u32) -> Self {
        SparsePolynomial {
            max_letter,
            terms: BTreeMap::new(),
        }
    }

    pub fn max_letter(&self) -> u32 {
        self.max_letter
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order (ascending q, then t, then content).
    pub fn terms(&self) -> impl Iterator<Item = (&Term, u64)> {
        self.terms.iter().map(|(term, &coeff)| (term, coeff))
    }

    pub fn coefficient(&self, q_exp: u64, t_exp: u64, content: &[u32]) -> u64 {
        self.terms
            .get(&Term {
                q_exp,
                t_exp,
                content: content.to_vec(),
            })
            .copied()
            .unwrap_or(0)
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> u64 {
        self.terms
            .values()
            .try_fold(0u64, |acc, &c| acc.checked_add(c))
            .expect("coefficient mass overflow")
    }

    pub fn add_term(&mut self, term: Term, coeff: u64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(term).or_insert(0);
        *slot = slot.checked_add(coeff).expect("coefficient overflow");
    }

    /// Adds every term of `other` into `self`. Coefficient addition
    /// commutes, so merging partial folds in any order gives the same
    /// polynomial.
    pub fn merge(&mut self, other: SparsePolynomial) {
        assert_eq!(self.max_letter, other.max_letter);
        for (term, coeff) in other.terms {
            self.add_term(term, coeff);
        }
    }

    pub fn specialize(&self, s: Specialization) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero(self.max_letter);
        for (term, &coeff) in &self.terms {
            let new = match s {
                Specialization::QOne => Some(Term {
                    q_exp: 0,
                    ..term.clone()
                }),
                Specialization::TOne => Some(Term {
                    t_exp: 0,
                    ..term.clone()
                }),
                Specialization::QZero => (term.q_exp == 0).then(|| term.clone()),
                Specialization::TZero => (term.t_exp == 0).then(|| term.clone()),
                Specialization::None => Some(term.clone()),
            };
            if let Some(new) = new {
                out.add_term(new, coeff);
            }
        }
        out
    }

    /// Transposes the q and t exponents of every term.
    pub fn swap_qt(&self) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero(self.max_letter);
        for (term, &coeff) in &self.terms {
            out.add_term(
                Term {
                    q_exp: term.t_exp,
                    t_exp: term.q_exp,
                    content: term.content.clone(),
                },
                coeff,
            );
        }
        out
    }

    /// The polynomial document in its canonical JSON form:
    /// `{"shape":[...],"max_letter":m,"terms":[{"q":..,"t":..,"x":[..],"coeff":..},...]}`
    /// with terms in canonical order.
    pub fn to_json(&self, shape: &Partition) -> String {
        use std::fmt::Write;
        let mut s = String::from("{\"shape\":[");
        for (i, p) in shape.parts().iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            write!(s, "{p}").unwrap();
        }
        write!(s, "],\"max_letter\":{},\"terms\":[", self.max_letter).unwrap();
        for (i, (term, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            write!(s, "{{\"q\":{},\"t\":{},\"x\":[", term.q_exp, term.t_exp).unwrap();
            for (j, e) in term.content.iter().enumerate() {
                if j > 0 {
                    s.push(',');
                }
                write!(s, "{e}").unwrap();
            }
            write!(s, "],\"coeff\":{coeff}}}").unwrap();
        }
        s.push_str("]}");
        s
    }
}

/// Folds every filling of `shape` with entries in 1..=max_letter into the
/// generating function. The total coefficient mass is max_letter^|shape|.
pub fn macdonald_poly(shape: &Partition, max_letter: u32) -> SparsePolynomial {
    let mut poly = SparsePolynomial::zero(max_letter);
    for f in enumerate_fillings(shape, max_letter) {
        poly.add_term(Term::of_filling(&f, max_letter), 1);
    }
    poly
}

/// As [`macdonald_poly`], folding disjoint reading-word prefix chunks on
/// `threads` worker threads. The fold is a commutative sum, so the result
/// is identical to the sequential one.
pub fn macdonald_poly_parallel(
    shape: &Partition,
    max_letter: u32,
    threads: usize,
) -> SparsePolynomial {
    assert!(threads >= 1, "at least one thread");
    let prefixes = prefix_chunks(shape, max_letter, threads);
    if threads == 1 || prefixes.len() <= 1 {
        return macdonald_poly(shape, max_letter);
    }
    let partials: Vec<SparsePolynomial> = thread::scope(|scope| {
        let prefixes = &prefixes;
        let workers: Vec<_> = (0..threads)
            .map(|t| {
                scope.spawn(move || {
                    let mut acc = SparsePolynomial::zero(max_letter);
                    for prefix in prefixes.iter().skip(t).step_by(threads) {
                        for f in Fillings::with_prefix(shape, max_letter, prefix) {
                            acc.add_term(Term::of_filling(&f, max_letter), 1);
                        }
                    }
                    acc
                })
            })
            .collect();
        workers
            .into_iter()
            .map(|h| h.join().expect("fold worker panicked"))
            .collect()
    });
    let mut poly = SparsePolynomial::zero(max_letter);
    for partial in partials {
        poly.merge(partial);
    }
    poly
}

/// All reading-word prefixes of the smallest depth whose chunk count
/// reaches `threads`, in lexicographic order.
fn prefix_chunks(shape: &Partition, max_letter: u32, threads: usize) -> Vec<Vec<u32>> {
    let cells = shape.size() as usize;
    let mut depth = 0;
    let mut chunks: usize = 1;
    while depth < cells && chunks < threads {
        depth += 1;
        chunks = chunks.saturating_mul(max_letter as usize);
    }
    let mut prefixes: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(prefixes.len() * max_letter as usize);
        for prefix in &prefixes {
            for x in 1..=max_letter {
                let mut longer = prefix.clone();
                longer.push(x);
                next.push(longer);
            }
        }
        prefixes = next;
    }
    prefixes
}

/// The first term at which two polynomials disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermMismatch {
    pub q_exp: u64,
    pub t_exp: u64,
    pub content: Vec<u32>,
    pub lhs_coeff: u64,
    pub rhs_coeff: u64,
}

/// Outcome of the generating-function symmetry check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolySymmetryCheck {
    Equal,
    Mismatch(TermMismatch),
}

/// Compares the q := 1 specialization of the polynomial of `shape` with
/// the polynomial of the conjugate shape after transposing the q and t
/// exponents and specializing q := 1. Returns the first mismatching term
/// in canonical order, if any.
pub fn verify_q1_symmetry(shape: &Partition, max_letter: u32) -> PolySymmetryCheck {
    verify_q1_symmetry_parallel(shape, max_letter, 1)
}

/// As [`verify_q1_symmetry`] with both polynomials folded on `threads`
/// worker threads.
pub fn verify_q1_symmetry_parallel(
    shape: &Partition,
    max_letter: u32,
    threads: usize,
) -> PolySymmetryCheck {
    let lhs = macdonald_poly_parallel(shape, max_letter, threads).specialize(Specialization::QOne);
    let rhs = macdonald_poly_parallel(&shape.conjugate(), max_letter, threads)
        .swap_qt()
        .specialize(Specialization::QOne);
    first_mismatch(&lhs, &rhs)
}

fn first_mismatch(lhs: &SparsePolynomial, rhs: &SparsePolynomial) -> PolySymmetryCheck {
    let mut union: BTreeMap<&Term, (u64, u64)> = BTreeMap::new();
    for (term, coeff) in lhs.terms() {
        union.entry(term).or_insert((0, 0)).0 = coeff;
    }
    for (term, coeff) in rhs.terms() {
        union.entry(term).or_insert((0, 0)).1 = coeff;
    }
    for (term, (l, r)) in union {
        if l != r {
            return PolySymmetryCheck::Mismatch(TermMismatch {
                q_exp: term.q_exp,
                t_exp: term.t_exp,
                content: term.content.clone(),
                lhs_coeff: l,
                rhs_coeff: r,
            });
        }
    }
    PolySymmetryCheck::Equal
}

/// Outcome of the bijective symmetry check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BijectiveSymmetryCheck {
    Ok { fillings_checked: u64 },
    Mismatch { input: Filling, reason: String },
}

/// Checks the symmetry bijection directly, without generating functions:
/// every filling of `shape` with entries in 1..=max_letter must map to a
/// filling of the conjugate shape with the same content, its maj must land
/// on the image's inv, and the inverse map must return it exactly. The
/// verified inverse makes the map injective on the enumerated set.
pub fn verify_bijective_q1_symmetry(shape: &Partition, max_letter: u32) -> BijectiveSymmetryCheck {
    let mut checked = 0;
    for f in enumerate_fillings(shape, max_letter) {
        if let Some(reason) = bijective_failure(&f, shape, max_letter) {
            return BijectiveSymmetryCheck::Mismatch { input: f, reason };
        }
        checked += 1;
    }
    BijectiveSymmetryCheck::Ok {
        fillings_checked: checked,
    }
}

/// As [`verify_bijective_q1_symmetry`] over prefix chunks on `threads`
/// worker threads; the reported witness is the first in enumeration order.
pub fn verify_bijective_q1_symmetry_parallel(
    shape: &Partition,
    max_letter: u32,
    threads: usize,
) -> BijectiveSymmetryCheck {
    let prefixes = prefix_chunks(shape, max_letter, threads);
    if threads == 1 || prefixes.len() <= 1 {
        return verify_bijective_q1_symmetry(shape, max_letter);
    }
    type ChunkResult = (u64, Option<(usize, Filling, String)>);
    let results: Vec<ChunkResult> = thread::scope(|scope| {
        let prefixes = &prefixes;
        let workers: Vec<_> = (0..threads)
            .map(|t| {
                scope.spawn(move || {
                    let mut checked = 0;
                    let mut first: Option<(usize, Filling, String)> = None;
                    for (index, prefix) in
                        prefixes.iter().enumerate().skip(t).step_by(threads)
                    {
                        for f in Fillings::with_prefix(shape, max_letter, prefix) {
                            checked += 1;
                            if first.is_none() {
                                if let Some(reason) = bijective_failure(&f, shape, max_letter) {
                                    first = Some((index, f, reason));
                                }
                            }
                        }
                    }
                    (checked, first)
                })
            })
            .collect();
        workers
            .into_iter()
            .map(|h| h.join().expect("verify worker panicked"))
            .collect()
    });
    let mut checked = 0;
    let mut first: Option<(usize, Filling, String)> = None;
    for (count, candidate) in results {
        checked += count;
        if let Some((index, f, reason)) = candidate {
            if first.as_ref().is_none_or(|(best, _, _)| index < *best) {
                first = Some((index, f, reason));
            }
        }
    }
    match first {
        Some((_, input, reason)) => BijectiveSymmetryCheck::Mismatch { input, reason },
        None => BijectiveSymmetryCheck::Ok {
            fillings_checked: checked,
        },
    }
}

fn bijective_failure(f: &Filling, shape: &Partition, max_letter: u32) -> Option<String> {
    let witness = symmetry_map(f);
    let conjugate = shape.conjugate();
    if witness.output.shape() != &conjugate {
        return Some(format!(
            "image shape {} is not the conjugate {}",
            witness.output.shape(),
            conjugate
        ));
    }
    if witness.output.content(max_letter) != f.content(max_letter) {
        return Some("image content differs".to_string());
    }
    if witness.inv_out != witness.maj_in {
        return Some(format!(
            "maj {} did not transfer to inv {}",
            witness.maj_in, witness.inv_out
        ));
    }
    if &symmetry_inverse(&witness.output) != f {
        return Some("inverse does not return the input".to_string());
    }
    None
}
