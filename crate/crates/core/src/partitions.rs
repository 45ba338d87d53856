//! Partitions with a fixed declared length: conjugation, weight, box
//! enumeration and lexicographic comparison.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers, zero-padded to its
/// declared length.
///
/// Two partitions with the same nonzero parts but different declared lengths
/// are different values; use [`Partition::same_shape`] to compare Young
/// diagrams.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        Ok(Partition { parts })
    }

    /// The zero partition of declared length `len`.
    pub fn zero(len: usize) -> Self {
        Partition {
            parts: vec![0; len],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Declared length (number of slots, zeros included).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of nonzero parts.
    pub fn rows(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `|α|`, the sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the declared length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Nonzero parts only.
    pub fn trimmed(&self) -> Partition {
        Partition {
            parts: self.parts[..self.rows()].to_vec(),
        }
    }

    /// Re-declares the length, padding with zeros or dropping trailing zeros.
    pub fn padded(&self, len: usize) -> Result<Partition> {
        if self.rows() > len {
            return Err(Error::LengthMismatch {
                left: self.rows(),
                right: len,
            });
        }
        let mut parts = self.parts[..self.rows()].to_vec();
        parts.resize(len, 0);
        Ok(Partition { parts })
    }

    /// Same Young diagram, ignoring declared length.
    pub fn same_shape(&self, other: &Partition) -> bool {
        self.parts[..self.rows()] == other.parts[..other.rows()]
    }

    /// At most `rows` nonzero parts, each at most `cols`.
    pub fn fits_box(&self, rows: usize, cols: usize) -> bool {
        self.rows() <= rows && self.first() <= cols
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.rows()).all(|i| self.part(i) >= other.part(i))
    }

    /// The transpose `α*`, `α*_j = |{i : α_i ≥ j}|`, with declared length `α_1`.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Compares two partitions of equal declared length lexicographically.
    pub fn lex_compare(&self, other: &Partition) -> Result<Ordering> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self.parts.cmp(&other.parts))
    }
}

/// All partitions with at most `k` parts, each at most `b`, padded to length
/// `k`, in strictly decreasing lexicographic order. There are `C(k + b, k)`.
pub fn enumerate_box(k: usize, b: usize) -> Vec<Partition> {
    fn fill(prefix: &mut Vec<usize>, k: usize, cap: usize, out: &mut Vec<Partition>) {
        if prefix.len() == k {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (0..=cap).rev() {
            prefix.push(p);
            fill(prefix, k, p, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(&mut Vec::with_capacity(k), k, b, &mut out);
    out
}

/// All partitions of `total` (no declared padding), in decreasing lex order.
pub fn partitions_of(total: usize) -> Vec<Partition> {
    fn fill(prefix: &mut Vec<usize>, remaining: usize, cap: usize, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=cap.min(remaining)).rev() {
            prefix.push(p);
            fill(prefix, remaining - p, p, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(&mut Vec::new(), total, total, &mut out);
    out
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<i64>) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::NegativePart(parts));
        }
        Partition::new(parts.into_iter().map(|p| p as usize).collect())
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Comma-separated parts, e.g. `2,1,0`. The empty string and `()` give the
/// empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = parse_int_list(s)?;
        Partition::try_from(entries)
    }
}

pub(crate) fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let body = s
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|tok| {
            tok.trim().parse::<i64>().map_err(|e| Error::Parse {
                input: s.to_string(),
                reason: e.to_string(),
            })
        })
        .collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}
