//! Integer partitions as Young-diagram shapes.

use std::fmt;
use std::str::FromStr;

use crate::Error;

/// Weakly decreasing positive parts; the empty partition is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Panics unless the parts are weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|p| p[0] >= p[1]),
            "partition parts must be weakly decreasing"
        );
        assert!(
            parts.last().is_none_or(|&p| p >= 1),
            "partition parts must be positive"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells of the Young diagram.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Width of the diagram, i.e. the first part (0 when empty).
    pub fn width(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram: part j of the conjugate counts the
    /// parts of `self` that are at least j. Involutive.
    pub fn conjugate(&self) -> Partition {
        let width = self.width();
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// All partitions of `n`, in decreasing lexicographic order of parts.
    pub fn all_of_weight(n: u32) -> Vec<Partition> {
        fn go(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in (1..=remaining.min(max_part)).rev() {
                prefix.push(part);
                go(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts, e.g. "3,3,1"; the empty partition prints as "".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in s.split(',') {
            let p: u32 = token
                .trim()
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("bad part {token:?}")))?;
            if p == 0 {
                return Err(Error::InvalidPartition("parts must be positive".to_string()));
            }
            if parts.last().is_some_and(|&prev| prev < p) {
                return Err(Error::InvalidPartition(format!(
                    "parts must be weakly decreasing, got {s:?}"
                )));
            }
            parts.push(p);
        }
        Ok(Partition { parts })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("3,3,1").conjugate(), p("3,2,2"));
        assert_eq!(p("5").conjugate(), p("1,1,1,1,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("3,3,3,1").conjugate(), p("4,3,3"));
    }

    #[test]
    fn conjugate_is_an_involution() {
        for n in 0..=12 {
            for mu in Partition::all_of_weight(n) {
                assert_eq!(mu.conjugate().conjugate(), mu);
                assert_eq!(mu.conjugate().size(), mu.size());
            }
        }
    }

    #[test]
    fn all_of_weight_counts() {
        let counts: Vec<usize> = (0..=8)
            .map(|n| Partition::all_of_weight(n).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn parsing() {
        assert_eq!(p("3,3,1").parts(), &[3, 3, 1]);
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p(" 4 , 2 ").parts(), &[4, 2]);
        assert!("1,3".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("3,".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn display_roundtrip() {
        for s in ["3,3,1", "1", ""] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    #[test]
    fn size_and_width() {
        assert_eq!(p("3,3,1").size(), 7);
        assert_eq!(p("3,3,1").width(), 3);
        assert_eq!(Partition::empty().size(), 0);
        assert_eq!(Partition::empty().width(), 0);
    }
}
