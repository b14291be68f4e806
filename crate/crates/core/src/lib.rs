//! Exact combinatorics of words, basement lifts, and Macdonald fillings.
//!
//! The library is organized around one chain of constructions:
//!
//! * [`word`] — words over the positive integers with the inversion
//!   number, the major index, and relative k-inversions under the cyclic
//!   order ≺_k;
//! * [`lift`] — the basement lift involutions B_i, their range
//!   compositions B_{i→j}, and the elevator map ψ_a driven by a basement
//!   word;
//! * [`filling`] — fillings of Young-diagram shapes with the column-wise
//!   maj and the triple-counting inv, the elevator on fillings, and a
//!   streaming enumerator;
//! * [`bijection`] — the Foata bijection and the composite map that
//!   carries fillings of a shape to fillings of the conjugate shape while
//!   exchanging maj for inv;
//! * [`genfunc`] — sparse exact generating functions over a bounded
//!   alphabet, their specializations, and the q = 1 symmetry checks;
//! * [`orbit`] — descriptive cycle data for the full lift composition
//!   acting on permutations.
//!
//! Everything is a pure function of its inputs; all counts are exact.

pub mod bijection;
mod error;
pub mod filling;
pub mod genfunc;
pub mod lift;
pub mod orbit;
pub mod partition;
pub mod word;

pub use bijection::{foata, foata_inverse, maj_preserving_map, symmetry_inverse, symmetry_map,
    SymmetryWitness};
pub use error::Error;
pub use filling::{enumerate_fillings, is_inversion_triple, Filling, Fillings, TripleSite};
pub use genfunc::{macdonald_poly, macdonald_poly_parallel, verify_bijective_q1_symmetry,
    verify_bijective_q1_symmetry_parallel, verify_q1_symmetry, verify_q1_symmetry_parallel,
    BijectiveSymmetryCheck, PolySymmetryCheck, SparsePolynomial, Specialization, Term,
    TermMismatch};
pub use lift::{basement_lift, elevator, elevator_inverse, elevator_trace, lift_range, LiftTrace};
pub use orbit::{basement_action_orbits, orbit_of, OrbitReport, DEFAULT_ORBIT_CAP};
pub use partition::Partition;
pub use word::{k_less, words_of_length, Word, Words};
