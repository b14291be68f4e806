//! Young-diagram fillings and the Macdonald statistics on them.
//!
//! Rows are indexed bottom-to-top (row 1 is the bottom row), matching the
//! row order in which the elevator acts; the text format lists rows top
//! first, matching how diagrams are drawn. maj is summed over column words
//! read top to bottom; inv counts inversion triples row by row, with the
//! bottom row read against a virtual basement of 0 entries so that its
//! triples are ordinary inversion pairs.

use std::fmt;
use std::str::FromStr;

use crate::lift::{elevator, elevator_inverse};
use crate::word::k_less;
use crate::{Error, Partition, Word};

/// An assignment of positive integers to the cells of a partition shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    shape: Partition,
    rows: Vec<Word>, // bottom-to-top; row i has shape.parts()[i-1] cells
}

/// One potential inversion-triple site: the cells x at (row, left_col),
/// y at (row, right_col), and z directly below x. All indices 1-based;
/// in row 1 the z cell is the virtual basement letter 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleSite {
    pub row: usize,
    pub left_col: usize,
    pub right_col: usize,
}

impl Filling {
    /// Builds a filling from its rows listed bottom-to-top. The row lengths
    /// must be weakly decreasing upward so that they form a partition.
    pub fn from_rows(rows: Vec<Word>) -> Result<Self, Error> {
        let lens: Vec<usize> = rows.iter().map(Word::len).collect();
        if lens.iter().any(|&l| l == 0) {
            return Err(Error::InvalidFilling("empty row".to_string()));
        }
        if lens.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidFilling(format!(
                "row lengths {lens:?} (bottom to top) do not form a partition"
            )));
        }
        let shape = Partition::new(lens.into_iter().map(|l| l as u32).collect());
        Ok(Filling { shape, rows })
    }

    pub fn empty() -> Self {
        Filling {
            shape: Partition::empty(),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Rows bottom-to-top.
    pub fn rows(&self) -> &[Word] {
        &self.rows
    }

    pub fn num_cells(&self) -> u64 {
        self.shape.size()
    }

    pub fn max_letter(&self) -> u32 {
        self.rows.iter().map(Word::max_letter).max().unwrap_or(0)
    }

    /// Letter multiplicities as an exponent vector over 1..=max_letter.
    pub fn content(&self, max_letter: u32) -> Vec<u32> {
        let mut counts = vec![0u32; max_letter as usize];
        for row in &self.rows {
            for &x in row.letters() {
                counts[(x - 1) as usize] += 1;
            }
        }
        counts
    }

    /// Rows concatenated bottom-to-top; enumeration order is the
    /// lexicographic order of this word.
    pub fn reading_word(&self) -> Word {
        let letters = self
            .rows
            .iter()
            .flat_map(|r| r.letters().iter().copied())
            .collect();
        Word::new(letters)
    }

    /// The entries of column j (1-based) read from the top row downward.
    pub fn column_word(&self, j: usize) -> Result<Word, Error> {
        let width = self.shape.width() as usize;
        if j == 0 || j > width {
            return Err(Error::ColumnOutOfRange { column: j, width });
        }
        // rows weakly shorten upward, so the column is rows 1..=height
        let height = self
            .rows
            .iter()
            .take_while(|row| row.len() >= j)
            .count();
        let letters = (0..height)
            .rev()
            .map(|i| self.rows[i].letters()[j - 1])
            .collect();
        Ok(Word::new(letters))
    }

    /// All column words, left to right.
    pub fn column_words(&self) -> Vec<Word> {
        (1..=self.shape.width() as usize)
            .map(|j| self.column_word(j).unwrap())
            .collect()
    }

    /// Sum of maj over all column words.
    pub fn maj(&self) -> u64 {
        self.column_words().iter().map(Word::maj).sum()
    }

    /// Number of inversion triples over all rows, the bottom row counted
    /// against the virtual 0 basement (inversion pairs).
    pub fn inv(&self) -> u64 {
        let mut count = 0;
        for r in 1..=self.rows.len() {
            let row = self.rows[r - 1].letters();
            for left in 0..row.len() {
                let z = if r == 1 {
                    0
                } else {
                    self.rows[r - 2].letters()[left]
                };
                for right in left + 1..row.len() {
                    if is_inversion_triple(row[left], row[right], z) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    /// The inversion-triple sites in row r (1-based from the bottom),
    /// ordered by (left_col, right_col). Row 1 uses z = 0.
    pub fn triples_in_row(&self, r: usize) -> Result<Vec<TripleSite>, Error> {
        if r == 0 || r > self.rows.len() {
            return Err(Error::RowOutOfRange {
                row: r,
                rows: self.rows.len(),
            });
        }
        let row = self.rows[r - 1].letters();
        let mut sites = Vec::new();
        for left in 0..row.len() {
            let z = if r == 1 {
                0
            } else {
                self.rows[r - 2].letters()[left]
            };
            for right in left + 1..row.len() {
                if is_inversion_triple(row[left], row[right], z) {
                    sites.push(TripleSite {
                        row: r,
                        left_col: left + 1,
                        right_col: right + 1,
                    });
                }
            }
        }
        Ok(sites)
    }

    /// The elevator map on fillings: the bottom row is untouched and each
    /// higher row is elevated over the already-elevated row below it.
    /// Preserves the shape and the multiset of entries.
    pub fn elevate(&self) -> Filling {
        let mut rows: Vec<Word> = Vec::with_capacity(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            if i == 0 {
                rows.push(row.clone());
            } else {
                let below = &rows[i - 1];
                rows.push(elevator(below, row).expect("rows weakly shorten upward"));
            }
        }
        Filling {
            shape: self.shape.clone(),
            rows,
        }
    }

    /// Inverts `elevate`: the rows of the image are exactly the basements
    /// used on the way up, so each row is lowered over the image's own row
    /// below it.
    pub fn elevate_inverse(&self) -> Filling {
        let mut rows: Vec<Word> = Vec::with_capacity(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            if i == 0 {
                rows.push(row.clone());
            } else {
                let below = &self.rows[i - 1];
                rows.push(elevator_inverse(below, row).expect("rows weakly shorten upward"));
            }
        }
        Filling {
            shape: self.shape.clone(),
            rows,
        }
    }
}

/// Whether the cells x, y (same row, x left of y) and z (below x) form an
/// inversion triple: x ≠ y, y ≠ z, and some cyclic shift of (x, y, z) is
/// nonincreasing — equivalently, y ≺_z x. `z` may be 0 (the basement), in
/// which case the condition is the ordinary inversion x > y.
pub fn is_inversion_triple(x: u32, y: u32, z: u32) -> bool {
    debug_assert!(x >= 1 && y >= 1);
    k_less(z, y, x)
}

/// Lazily yields every filling of `shape` with entries in 1..=max_letter,
/// in lexicographic order of the bottom-to-top reading word. There are
/// max_letter^|shape| of them.
pub fn enumerate_fillings(shape: &Partition, max_letter: u32) -> Fillings {
    Fillings::with_prefix(shape, max_letter, &[])
}

/// Streaming filling enumerator; see [`enumerate_fillings`].
pub struct Fillings {
    shape: Partition,
    max_letter: u32,
    cells: Vec<u32>, // current reading word
    fixed: usize,    // leading cells that never advance
    done: bool,
}

impl Fillings {
    /// Enumerates only the fillings whose reading word starts with
    /// `prefix`. Used to split the search space into disjoint chunks that
    /// can be folded independently.
    pub fn with_prefix(shape: &Partition, max_letter: u32, prefix: &[u32]) -> Fillings {
        assert!(max_letter >= 1, "max_letter must be at least 1");
        let cell_count = shape.size() as usize;
        assert!(prefix.len() <= cell_count, "prefix longer than the shape");
        assert!(
            prefix.iter().all(|&x| x >= 1 && x <= max_letter),
            "prefix letters must lie in the alphabet"
        );
        let mut cells = vec![1u32; cell_count];
        cells[..prefix.len()].copy_from_slice(prefix);
        Fillings {
            shape: shape.clone(),
            max_letter,
            cells,
            fixed: prefix.len(),
            done: false,
        }
    }

    fn build(&self) -> Filling {
        let mut rows = Vec::with_capacity(self.shape.len());
        let mut offset = 0;
        for &part in self.shape.parts() {
            let part = part as usize;
            rows.push(Word::new(self.cells[offset..offset + part].to_vec()));
            offset += part;
        }
        Filling {
            shape: self.shape.clone(),
            rows,
        }
    }
}

impl Iterator for Fillings {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        if self.done {
            return None;
        }
        let filling = self.build();
        let mut i = self.cells.len();
        loop {
            if i == self.fixed {
                self.done = true;
                break;
            }
            i -= 1;
            if self.cells[i] < self.max_letter {
                self.cells[i] += 1;
                break;
            }
            self.cells[i] = 1;
        }
        Some(filling)
    }
}

impl fmt::Display for Filling {
    /// One line per row, top row first, entries comma-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().rev().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, x) in row.letters().iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Filling {
    type Err = Error;

    /// One line per row, top row first, entries comma-separated. The shape
    /// is inferred and must be a partition when the rows are read bottom
    /// to top.
    fn from_str(s: &str) -> Result<Self, Error> {
        let lines: Vec<&str> = s
            .lines()
            .map(str::trim)
            .skip_while(|l| l.is_empty())
            .collect();
        let lines = {
            let mut lines = lines;
            while lines.last().is_some_and(|l| l.is_empty()) {
                lines.pop();
            }
            lines
        };
        let mut rows = Vec::with_capacity(lines.len());
        for line in lines.iter().rev() {
            if line.is_empty() {
                return Err(Error::InvalidFilling("empty row line".to_string()));
            }
            let mut letters = Vec::new();
            for token in line.split(',') {
                let x: u32 = token
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidFilling(format!("bad entry {token:?}")))?;
                if x == 0 {
                    return Err(Error::InvalidFilling("entries must be positive".to_string()));
                }
                letters.push(x);
            }
            rows.push(Word::new(letters));
        }
        Filling::from_rows(rows)
    }
}
