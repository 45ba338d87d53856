//! Block tuples for twisted partial flag varieties `Fl(k_1, …, k_m; A)`.
//!
//! Level `i` carries a partition with `k_i` rows and parts bounded by
//! `k_{i+1} − k_i` (`k_{m+1} = n`). The flag variety is an iterated relative
//! grassmannian, so semiorthogonality is checked level by level against
//! `Gr(k_i, k_{i+1})`.

use std::num::NonZeroU64;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::binomial;
use crate::decomposition::{verify_semiorthogonality, SemiorthReport, Verdict};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_box, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagBlock {
    pub alphas: Vec<Partition>,
    pub position: usize,
    /// `Σ |α(i)|`, reduced by the period if one is given.
    pub twist: u64,
}

fn check_flag(ks: &[usize], n: usize) -> Result<()> {
    let increasing = ks.windows(2).all(|w| w[0] < w[1]);
    let bounded = ks.first().is_some_and(|&k| k >= 1) && ks.last().is_some_and(|&k| k < n);
    if !(increasing && bounded) {
        return Err(Error::InvalidFlag { ks: ks.to_vec(), n });
    }
    Ok(())
}

/// `(k_i, k_{i+1})` for each level, with `k_{m+1} = n`.
fn levels(ks: &[usize], n: usize) -> Vec<(usize, usize)> {
    ks.iter()
        .enumerate()
        .map(|(i, &k)| (k, ks.get(i + 1).copied().unwrap_or(n)))
        .collect()
}

/// All block tuples, ordered by decreasing lex order on the concatenation
/// `(α(1), …, α(m))`.
pub fn flag_blocks(ks: &[usize], n: usize, period: Option<NonZeroU64>) -> Result<Vec<FlagBlock>> {
    check_flag(ks, n)?;
    let per_level: Vec<Vec<Partition>> = levels(ks, n)
        .into_iter()
        .map(|(k, next)| enumerate_box(k, next - k))
        .collect();

    // Each level list is already decreasing, and all entries of a level share
    // one length, so the odometer below emits concatenations in decreasing lex order.
    let mut tuples: Vec<Vec<Partition>> = vec![Vec::new()];
    for level in &per_level {
        tuples = tuples
            .into_iter()
            .flat_map(|prefix| {
                level.iter().map(move |alpha| {
                    let mut next = prefix.clone();
                    next.push(alpha.clone());
                    next
                })
            })
            .collect();
    }

    Ok(tuples
        .into_iter()
        .enumerate()
        .map(|(position, alphas)| {
            let total: u64 = alphas.iter().map(|a| a.weight() as u64).sum();
            let twist = match period {
                Some(p) => total % p.get(),
                None => total,
            };
            FlagBlock {
                alphas,
                position,
                twist,
            }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagRankAudit {
    pub count: usize,
    #[serde(serialize_with = "crate::serde_big::serialize")]
    pub expected: BigUint,
    pub equal: bool,
}

/// Compares the block count with `∏ C(k_{i+1}, k_i)`.
pub fn flag_rank_audit(ks: &[usize], n: usize) -> Result<FlagRankAudit> {
    let count = flag_blocks(ks, n, None)?.len();
    let expected = levels(ks, n)
        .into_iter()
        .fold(BigUint::one(), |acc, (k, next)| {
            acc * binomial(next as u64, k as u64)
        });
    let equal = BigUint::from(count) == expected;
    Ok(FlagRankAudit {
        count,
        expected,
        equal,
    })
}

/// The level-`level` factor (1-based): the relative `Gr(k_i, k_{i+1})` report.
pub fn relative_semiorth_check(ks: &[usize], n: usize, level: usize) -> Result<SemiorthReport> {
    check_flag(ks, n)?;
    let lv = levels(ks, n);
    if level == 0 || level > lv.len() {
        return Err(Error::LevelOutOfRange {
            level,
            levels: lv.len(),
        });
    }
    let (k, ambient) = lv[level - 1];
    verify_semiorthogonality(k, ambient)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagReport {
    pub ks: Vec<usize>,
    pub n: usize,
    pub blocks: Vec<FlagBlock>,
    pub levels: Vec<SemiorthReport>,
    /// Conjunction of the level verdicts.
    pub verdict: Verdict,
}

/// Blocks plus every level's relative check.
pub fn flag_verify(ks: &[usize], n: usize, period: Option<NonZeroU64>) -> Result<FlagReport> {
    let blocks = flag_blocks(ks, n, period)?;
    let levels = (1..=ks.len())
        .map(|level| relative_semiorth_check(ks, n, level))
        .collect::<Result<Vec<_>>>()?;
    let verdict = if levels.iter().all(|r| r.verdict.passed()) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(FlagReport {
        ks: ks.to_vec(),
        n,
        blocks,
        levels,
        verdict,
    })
}
