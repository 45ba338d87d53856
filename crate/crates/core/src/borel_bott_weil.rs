//! Borel–Bott–Weil for irreducible homogeneous bundles on `Gr(k, n)` and the
//! pushforward of Hom-bundles between Schur functors of the tautological
//! subbundle.
//!
//! Conventions: `0 → R → E → T → 0` with `rank R = k`. A bundle
//! `S^δ T ⊗ S^γ R` is encoded as the length-`n` vector `(δ | γ)`, quotient
//! slot first, and `ρ = (n − 1, …, 1, 0)`. With this ordering `S^{(1)} R` on
//! `ℙ^{n−1}` is `O(−1)`.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gl_weights::GlWeight;
use crate::littlewood_richardson::hom_decompose;
use crate::partitions::Partition;
use crate::{binomial, check_grassmannian};

/// The irreducible homogeneous bundle `S^δ T ⊗ S^γ R` on `Gr(k, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousBundleWeight {
    delta: GlWeight,
    gamma: GlWeight,
    n: usize,
}

impl HomogeneousBundleWeight {
    pub fn new(delta: GlWeight, gamma: GlWeight, n: usize) -> Result<Self> {
        if delta.rank() + gamma.rank() != n {
            return Err(Error::SlotRankMismatch {
                delta: delta.rank(),
                gamma: gamma.rank(),
                n,
            });
        }
        Ok(HomogeneousBundleWeight { delta, gamma, n })
    }

    /// `S^γ R` alone, with the trivial quotient slot.
    pub fn subbundle(gamma: GlWeight, n: usize) -> Result<Self> {
        let quotient_rank = n.checked_sub(gamma.rank()).ok_or(Error::SlotRankMismatch {
            delta: 0,
            gamma: gamma.rank(),
            n,
        })?;
        Self::new(GlWeight::zero(quotient_rank), gamma, n)
    }

    pub fn delta(&self) -> &GlWeight {
        &self.delta
    }

    pub fn gamma(&self) -> &GlWeight {
        &self.gamma
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the subbundle slot.
    pub fn k(&self) -> usize {
        self.gamma.rank()
    }
}

/// Cohomology of an irreducible homogeneous bundle: at most one degree is
/// nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohomologyResult {
    Acyclic,
    Nonzero {
        degree: usize,
        /// Highest weight of the `GL(n)`-module `H^degree`, as a Schur functor
        /// of the ambient space.
        output: GlWeight,
        dimension: BigUint,
    },
}

impl CohomologyResult {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, CohomologyResult::Acyclic)
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            CohomologyResult::Acyclic => None,
            CohomologyResult::Nonzero { degree, .. } => Some(*degree),
        }
    }

    pub fn dimension(&self) -> Option<&BigUint> {
        match self {
            CohomologyResult::Acyclic => None,
            CohomologyResult::Nonzero { dimension, .. } => Some(dimension),
        }
    }
}

/// Runs the Bott algorithm: add `ρ`, detect repeats, sort, count inversions.
pub fn bbw(weight: &HomogeneousBundleWeight) -> CohomologyResult {
    let n = weight.n;
    let shifted: Vec<i64> = weight
        .delta
        .entries()
        .iter()
        .chain(weight.gamma.entries())
        .enumerate()
        .map(|(i, &e)| e + (n - 1 - i) as i64)
        .collect();

    let mut inversions = 0;
    for i in 0..n {
        for j in i + 1..n {
            match shifted[i].cmp(&shifted[j]) {
                std::cmp::Ordering::Equal => return CohomologyResult::Acyclic,
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }

    let mut sorted = shifted;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let output = GlWeight::new(
        sorted
            .iter()
            .enumerate()
            .map(|(i, &e)| e - (n - 1 - i) as i64)
            .collect(),
    )
    .expect("strictly decreasing minus rho is dominant");
    let dimension = output.dim();
    CohomologyResult::Nonzero {
        degree: inversions,
        output,
        dimension,
    }
}

/// One irreducible summand `S^β R` of a Hom-bundle and its pushforward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushforwardSummand {
    pub beta: GlWeight,
    pub mult: u64,
    pub result: CohomologyResult,
}

/// `Rq_* Hom(S^α R, S^α' R)`, summand by summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushforwardReport {
    pub alpha: Partition,
    pub alpha_prime: Partition,
    pub summands: Vec<PushforwardSummand>,
    pub is_acyclic: bool,
}

impl PushforwardReport {
    /// Summands with nonzero cohomology.
    pub fn nonzero(&self) -> impl Iterator<Item = &PushforwardSummand> {
        self.summands.iter().filter(|s| !s.result.is_acyclic())
    }

    /// True when the only cohomology is a single copy of the trivial
    /// representation in degree 0.
    pub fn is_exceptional(&self) -> bool {
        let mut nonzero = self.nonzero();
        match (nonzero.next(), nonzero.next()) {
            (Some(s), None) => {
                s.mult == 1
                    && s.result.degree() == Some(0)
                    && s.result.dimension() == Some(&BigUint::from(1u32))
            }
            _ => false,
        }
    }
}

/// Pushes `Hom(S^α R, S^α' R)` forward along `Gr(k, n) → pt`. Both partitions
/// must lie in the `k × (n − k)` box.
pub fn pushforward_hom(
    alpha: &Partition,
    alpha_prime: &Partition,
    k: usize,
    n: usize,
) -> Result<PushforwardReport> {
    check_grassmannian(k, n)?;
    for p in [alpha, alpha_prime] {
        if !p.fits_box(k, n - k) {
            return Err(Error::BoxViolation {
                partition: p.to_string(),
                rows: k,
                cols: n - k,
            });
        }
    }
    let summands: Vec<PushforwardSummand> = hom_decompose(alpha, alpha_prime, k)?
        .iter()
        .map(|(beta, mult)| {
            let bundle =
                HomogeneousBundleWeight::subbundle(beta.clone(), n).expect("ranks checked above");
            PushforwardSummand {
                beta: beta.clone(),
                mult,
                result: bbw(&bundle),
            }
        })
        .collect();
    let is_acyclic = summands.iter().all(|s| s.result.is_acyclic());
    Ok(PushforwardReport {
        alpha: alpha.padded(k)?,
        alpha_prime: alpha_prime.padded(k)?,
        summands,
        is_acyclic,
    })
}

/// Cohomology table `[h^0, …, h^m]` of `O(d)` on `ℙ^m`, from the classical
/// closed forms.
pub fn line_bundle_oracle(d: i64, m: usize) -> Vec<BigUint> {
    let mut table = vec![BigUint::from(0u32); m + 1];
    let m_i = m as i64;
    if d >= 0 {
        table[0] = binomial((d + m_i) as u64, m as u64);
    }
    if d < -m_i {
        table[m] = binomial((-d - 1) as u64, m as u64);
    }
    table
}

#[derive(Serialize)]
struct SummandJson<'a> {
    beta: &'a GlWeight,
    mult: u64,
    degree: Option<usize>,
    #[serde(serialize_with = "crate::serde_big::option::serialize")]
    dim: Option<BigUint>,
}

impl Serialize for PushforwardSummand {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SummandJson {
            beta: &self.beta,
            mult: self.mult,
            degree: self.result.degree(),
            dim: self.result.dimension().cloned(),
        }
        .serialize(serializer)
    }
}

impl Serialize for PushforwardReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct ReportJson<'a> {
            alpha: &'a Partition,
            alpha_prime: &'a Partition,
            acyclic: bool,
            summands: &'a [PushforwardSummand],
        }
        ReportJson {
            alpha: &self.alpha,
            alpha_prime: &self.alpha_prime,
            acyclic: self.is_acyclic,
            summands: &self.summands,
        }
        .serialize(serializer)
    }
}

impl Serialize for CohomologyResult {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json<'a> {
            acyclic: bool,
            degree: Option<usize>,
            output: Option<&'a GlWeight>,
            #[serde(serialize_with = "crate::serde_big::option::serialize")]
            dim: Option<BigUint>,
        }
        let output = match self {
            CohomologyResult::Acyclic => None,
            CohomologyResult::Nonzero { output, .. } => Some(output),
        };
        Json {
            acyclic: self.is_acyclic(),
            degree: self.degree(),
            output,
            dim: self.dimension().cloned(),
        }
        .serialize(serializer)
    }
}
