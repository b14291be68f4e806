//! Word and filling bijections that exchange maj and inv.
//!
//! `foata` is the classical insertion bijection sending maj to inv on every
//! rearrangement class. `symmetry_map` composes it with the elevator on
//! fillings: the columns of a filling of shape μ are transformed into rows
//! of a filling of the conjugate shape μ′, and the elevator turns the row
//! inversions into inversion triples, so maj of the input becomes inv of
//! the output.

use crate::filling::Filling;
use crate::lift::lift_range;
use crate::word::Word;

/// The Foata insertion bijection. Appending a letter x to the running
/// image v: if the last letter of v is at most x, cut v after every letter
/// that is at most x, otherwise cut after every letter greater than x;
/// move the last letter of each block to its front; concatenate and append
/// x. Satisfies inv(foata(w)) = maj(w) and fixes the letter multiset.
pub fn foata(w: &Word) -> Word {
    let mut v: Vec<u32> = Vec::with_capacity(w.len());
    for &x in w.letters() {
        if v.is_empty() {
            v.push(x);
            continue;
        }
        let cut_low = *v.last().unwrap() <= x;
        let mut rotated = Vec::with_capacity(v.len() + 1);
        let mut block_start = 0;
        for (p, &y) in v.iter().enumerate() {
            if (y <= x) == cut_low {
                // the block ends here; its last letter moves to the front
                rotated.push(v[p]);
                rotated.extend_from_slice(&v[block_start..p]);
                block_start = p + 1;
            }
        }
        debug_assert_eq!(block_start, v.len(), "every block ends with a cut");
        rotated.push(x);
        v = rotated;
    }
    Word::new(v)
}

/// The unique w with foata(w) = v. Works from the right: strip the last
/// letter x, split what remains into blocks starting at each letter on the
/// same side of x as the first letter, and move each block's first letter
/// back to its end.
pub fn foata_inverse(v: &Word) -> Word {
    let mut cur: Vec<u32> = v.letters().to_vec();
    let mut recovered = Vec::with_capacity(cur.len());
    while let Some(x) = cur.pop() {
        if !cur.is_empty() {
            let starts_low = cur[0] <= x;
            let mut unrotated = Vec::with_capacity(cur.len());
            let mut block_start = 0;
            for p in 1..=cur.len() {
                if p == cur.len() || (cur[p] <= x) == starts_low {
                    unrotated.extend_from_slice(&cur[block_start + 1..p]);
                    unrotated.push(cur[block_start]);
                    block_start = p;
                }
            }
            cur = unrotated;
        }
        recovered.push(x);
    }
    recovered.reverse();
    Word::new(recovered)
}

/// The record of one symmetry-map application: the input filling of shape
/// μ, the intermediate filling of shape μ′ whose rows are the Foata images
/// of the input's columns, and the elevated output, together with the
/// exchanged statistics maj(input) = inv(output).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryWitness {
    pub input: Filling,
    pub intermediate: Filling,
    pub output: Filling,
    pub maj_in: u64,
    pub inv_out: u64,
}

/// Maps a filling of shape μ to a filling of the conjugate shape μ′ with
/// inv(output) = maj(input): apply `foata` to every column word (read top
/// to bottom), lay the results down as rows bottom-to-top, and elevate.
/// Content is preserved; the map is a bijection for each fixed shape.
pub fn symmetry_map(f: &Filling) -> SymmetryWitness {
    let rows: Vec<Word> = f.column_words().iter().map(foata).collect();
    let intermediate =
        Filling::from_rows(rows).expect("column heights of a partition weakly decrease");
    let output = intermediate.elevate();
    SymmetryWitness {
        maj_in: f.maj(),
        inv_out: output.inv(),
        input: f.clone(),
        intermediate,
        output,
    }
}

/// The unique filling f of shape conjugate to g's with
/// symmetry_map(f).output = g: un-elevate, invert Foata on each row, and
/// stand the results back up as columns.
pub fn symmetry_inverse(g: &Filling) -> Filling {
    let intermediate = g.elevate_inverse();
    let columns: Vec<Word> = intermediate.rows().iter().map(foata_inverse).collect();
    let shape = g.shape().conjugate();
    let mut rows = Vec::with_capacity(shape.len());
    for i in 1..=shape.len() {
        let len = shape.parts()[i - 1] as usize;
        let letters = (0..len)
            .map(|j| {
                let column = columns[j].letters();
                column[column.len() - i]
            })
            .collect();
        rows.push(Word::new(letters));
    }
    Filling::from_rows(rows).expect("conjugate parts weakly decrease")
}

/// The full-lift map conjugated through Foata, a maj-preserving bijection
/// on every rearrangement class: carry w to the inv side with `foata`,
/// apply the inv-preserving lift B_{0→max letter}, and come back with
/// `foata_inverse`. The empty word maps to itself.
pub fn maj_preserving_map(w: &Word) -> Word {
    foata_inverse(&lift_range(0, w.max_letter(), &foata(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words_of_length;
    use std::collections::{HashMap, HashSet};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn filling(s: &str) -> Filling {
        s.parse().unwrap()
    }

    #[test]
    fn foata_small_examples() {
        assert_eq!(foata(&Word::empty()), Word::empty());
        assert_eq!(foata(&w("7")), w("7"));
        assert_eq!(foata(&w("231")), w("231"));
        assert_eq!(foata(&w("331")), w("331"));
        // a non-fixed point: maj(132)=2 lands on inv(312)=2
        assert_eq!(foata(&w("132")), w("312"));
    }

    #[test]
    fn foata_sends_maj_to_inv() {
        for n in 0..=8 {
            for word in words_of_length(n, 3) {
                assert_eq!(foata(&word).inv(), word.maj(), "w={word}");
            }
        }
        for_all_permutations(6, |p| assert_eq!(foata(p).inv(), p.maj(), "p={p}"));
    }

    #[test]
    fn foata_inverse_roundtrips() {
        for n in 0..=8 {
            for word in words_of_length(n, 3) {
                assert_eq!(foata_inverse(&foata(&word)), word);
            }
        }
        assert_eq!(foata_inverse(&w("5")), w("5"));
        assert_eq!(foata_inverse(&w("231")), w("231"));
    }

    #[test]
    fn foata_permutes_every_rearrangement_class() {
        let mut classes: HashMap<Vec<u32>, (HashSet<Word>, HashSet<Word>)> = HashMap::new();
        for n in 0..=6 {
            for word in words_of_length(n, 3) {
                let mut key = word.letters().to_vec();
                key.sort_unstable();
                let entry = classes.entry(key).or_default();
                entry.0.insert(word.clone());
                entry.1.insert(foata(&word));
            }
        }
        for (key, (class, images)) in classes {
            assert_eq!(class, images, "class {key:?}");
        }
    }

    #[test]
    fn symmetry_on_a_single_cell() {
        let f = filling("4");
        let witness = symmetry_map(&f);
        assert_eq!(witness.output, f);
        assert_eq!(witness.maj_in, 0);
        assert_eq!(witness.inv_out, 0);
        assert_eq!(symmetry_inverse(&witness.output), f);
    }

    #[test]
    fn symmetry_on_a_single_column() {
        // shape (1,1) with 2 on top: the column word 2 1 has maj 1
        let f = filling("2\n1");
        let witness = symmetry_map(&f);
        assert_eq!(witness.maj_in, 1);
        assert_eq!(witness.intermediate, filling("2,1"));
        assert_eq!(witness.output, filling("2,1"));
        assert_eq!(witness.inv_out, 1);
        assert_eq!(symmetry_inverse(&witness.output), f);
    }

    #[test]
    fn symmetry_exchanges_the_statistics_on_a_square() {
        let mu = "2,2".parse::<crate::Partition>().unwrap();
        let mut count = 0;
        for f in crate::enumerate_fillings(&mu, 2) {
            let witness = symmetry_map(&f);
            assert_eq!(witness.inv_out, witness.maj_in, "f={f:?}");
            assert_eq!(witness.output.shape(), &mu.conjugate());
            assert_eq!(witness.output.content(2), f.content(2));
            assert_eq!(symmetry_inverse(&witness.output), f);
            count += 1;
        }
        assert_eq!(count, 16);
    }

    #[test]
    fn maj_preserving_map_keeps_maj() {
        for n in 0..=7 {
            for word in words_of_length(n, 3) {
                let image = maj_preserving_map(&word);
                assert_eq!(image.maj(), word.maj(), "w={word}");
                let mut a = word.letters().to_vec();
                let mut b = image.letters().to_vec();
                a.sort_unstable();
                b.sort_unstable();
                assert_eq!(a, b, "content changed for w={word}");
            }
        }
        assert_eq!(maj_preserving_map(&Word::empty()), Word::empty());
    }

    #[test]
    fn maj_preserving_map_pinned_value() {
        let image = maj_preserving_map(&w("42153"));
        assert_eq!(image, w("32154"));
        assert_eq!(image.maj(), w("42153").maj());
        assert_eq!(image.maj(), 7);
    }

    fn for_all_permutations(max_n: usize, mut f: impl FnMut(&Word)) {
        for n in 0..=max_n {
            let mut letters: Vec<u32> = (1..=n as u32).collect();
            loop {
                f(&Word::new(letters.clone()));
                if !next_permutation(&mut letters) {
                    break;
                }
            }
        }
    }

    fn next_permutation(a: &mut [u32]) -> bool {
        if a.len() < 2 {
            return false;
        }
        let mut i = a.len() - 1;
        while i > 0 && a[i - 1] >= a[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = a.len() - 1;
        while a[j] <= a[i - 1] {
            j -= 1;
        }
        a.swap(i - 1, j);
        a[i..].reverse();
        true
    }
}
