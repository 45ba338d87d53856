//! Dominant integral weights of `GL(k)`, i.e. Schur functor indices that may
//! have negative entries.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{parse_int_list, Partition};

/// A weakly decreasing integer vector; its length is the rank `k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct GlWeight {
    entries: Vec<i64>,
}

impl GlWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(entries));
        }
        Ok(GlWeight { entries })
    }

    /// The trivial weight of the given rank.
    pub fn zero(rank: usize) -> Self {
        GlWeight {
            entries: vec![0; rank],
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn max_entry(&self) -> Option<i64> {
        self.entries.first().copied()
    }

    pub fn min_entry(&self) -> Option<i64> {
        self.entries.last().copied()
    }

    /// Weight of the dual representation: `(−w_k, …, −w_1)`.
    pub fn dual(&self) -> GlWeight {
        GlWeight {
            entries: self.entries.iter().rev().map(|&e| -e).collect(),
        }
    }

    /// Twist by the `c`-th power of the determinant.
    pub fn det_shift(&self, c: i64) -> GlWeight {
        GlWeight {
            entries: self.entries.iter().map(|&e| e + c).collect(),
        }
    }

    /// The weight as a partition of the same length, if all entries are `≥ 0`.
    pub fn to_partition(&self) -> Option<Partition> {
        if self.min_entry().is_some_and(|m| m < 0) {
            return None;
        }
        Partition::new(self.entries.iter().map(|&e| e as usize).collect()).ok()
    }

    /// Dimension of the irreducible `GL(rank)` representation with this
    /// highest weight, by the Weyl formula
    /// `∏_{i<j} (w_i − w_j + j − i) / (j − i)`.
    pub fn dim(&self) -> BigUint {
        let k = self.rank();
        let mut numerator = BigUint::one();
        let mut denominator = BigUint::one();
        for i in 0..k {
            for j in i + 1..k {
                // dominance makes every factor positive
                let gap = self.entries[i] - self.entries[j] + (j - i) as i64;
                numerator *= gap as u64;
                denominator *= (j - i) as u64;
            }
        }
        let (quotient, remainder) = numerator.div_rem(&denominator);
        debug_assert!(remainder.is_zero(), "Weyl product must divide exactly");
        quotient
    }
}

impl From<&Partition> for GlWeight {
    fn from(p: &Partition) -> Self {
        GlWeight {
            entries: p.parts().iter().map(|&x| x as i64).collect(),
        }
    }
}

impl TryFrom<Vec<i64>> for GlWeight {
    type Error = Error;

    fn try_from(entries: Vec<i64>) -> Result<Self> {
        GlWeight::new(entries)
    }
}

impl From<GlWeight> for Vec<i64> {
    fn from(w: GlWeight) -> Self {
        w.entries
    }
}

/// Comma-separated entries, negatives allowed, e.g. `0,0,-1`.
impl FromStr for GlWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GlWeight::new(parse_int_list(s)?)
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GlWeight{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial;
    use proptest::prelude::*;

    fn w(entries: &[i64]) -> GlWeight {
        GlWeight::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn dual_and_shift_examples() {
        assert_eq!(w(&[1, 0]).dual(), w(&[0, -1]));
        assert_eq!(w(&[0, 0]).dual(), w(&[0, 0]));
        assert_eq!(w(&[2, 1]).dual(), w(&[-1, -2]));
        assert_eq!(w(&[1, -1]).det_shift(1), w(&[2, 0]));
        assert_eq!(w(&[0, 0]).det_shift(-2), w(&[-2, -2]));
        assert_eq!(w(&[3, 1]).det_shift(0), w(&[3, 1]));
    }

    #[test]
    fn dim_examples() {
        assert_eq!(w(&[1, 0]).dim(), BigUint::from(2u32));
        assert_eq!(w(&[2, 0, 0]).dim(), BigUint::from(6u32));
        assert_eq!(w(&[0, 0, 0, -1]).dim(), BigUint::from(4u32));
        assert_eq!(w(&[]).dim(), BigUint::from(1u32));
    }

    #[test]
    fn dim_matches_tableau_count() {
        for rank in 1..=4 {
            for shape in crate::partitions::enumerate_box(rank, 3) {
                let expected = grsod_oracles::ssyt_count(shape.parts(), rank);
                assert_eq!(
                    GlWeight::from(&shape).dim(),
                    BigUint::from(expected),
                    "{shape}"
                );
            }
        }
    }

    #[test]
    fn exterior_powers() {
        for rank in 1..=7usize {
            for ones in 0..=rank {
                let entries: Vec<i64> = (0..rank).map(|i| i64::from(i < ones)).collect();
                assert_eq!(w(&entries).dim(), binomial(rank as u64, ones as u64));
            }
        }
    }

    #[test]
    fn large_weights_stay_exact() {
        // Sym^200 of a 10-dimensional space: C(209, 9)
        let mut entries = vec![0i64; 10];
        entries[0] = 200;
        assert_eq!(w(&entries).dim(), binomial(209, 9));
    }

    #[test]
    fn rejects_increasing() {
        assert!(GlWeight::new(vec![0, 1]).is_err());
        assert_eq!("0,0,-1".parse::<GlWeight>().unwrap(), w(&[0, 0, -1]));
    }

    fn arb_weight() -> impl Strategy<Value = GlWeight> {
        prop::collection::vec(-6i64..6, 0..6).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            GlWeight::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn dim_invariant_under_dual_and_shift(x in arb_weight(), c in -10i64..10) {
            prop_assert_eq!(x.dual().dim(), x.dim());
            prop_assert_eq!(x.det_shift(c).dim(), x.dim());
            prop_assert_eq!(x.dual().dual(), x);
        }
    }
}
