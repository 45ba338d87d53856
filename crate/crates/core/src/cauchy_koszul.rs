//! Graded terms of the Koszul resolution of the diagonal of `Gr(k, n)`, the
//! Cauchy decomposition `Λ^m(V ⊗ W) = ⊕_{|α|=m} S^α V ⊗ S^{α*} W`, and twist
//! indices of the descended sheaves `F_α`, `G_{α*}`.

use std::num::NonZeroU64;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::Result;
use crate::gl_weights::GlWeight;
use crate::partitions::{enumerate_box, Partition};
use crate::{binomial, check_grassmannian};

/// One summand `F_α ⊠ G_{α*}` of a Koszul term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulPair {
    pub alpha: Partition,
    /// `α*`, padded to length `n − k`.
    #[serde(rename = "conj")]
    pub conjugate: Partition,
}

/// `Λ^m(F_(1) ⊠ G_(1))`, listed by its Cauchy summands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulTerm {
    #[serde(rename = "m")]
    pub degree: usize,
    /// The sheaves `F_α` are modules over `A^{⊗ twist}`; always equal to `degree`.
    pub twist: usize,
    pub pairs: Vec<KoszulPair>,
}

/// Koszul terms for `m = 0 … k(n − k)`; term `m` holds every box partition
/// of weight `m` together with its conjugate.
pub fn koszul_terms(k: usize, n: usize) -> Result<Vec<KoszulTerm>> {
    check_grassmannian(k, n)?;
    let length = k * (n - k);
    let mut terms: Vec<KoszulTerm> = (0..=length)
        .map(|m| KoszulTerm {
            degree: m,
            twist: m,
            pairs: Vec::new(),
        })
        .collect();
    for alpha in enumerate_box(k, n - k) {
        let conjugate = alpha.conjugate().padded(n - k)?;
        terms[alpha.weight()]
            .pairs
            .push(KoszulPair { alpha, conjugate });
    }
    Ok(terms)
}

/// Both sides of the dimension identity for `Λ^m(V ⊗ W)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CauchyCheck {
    #[serde(serialize_with = "crate::serde_big::serialize")]
    pub lhs: BigUint,
    #[serde(serialize_with = "crate::serde_big::serialize")]
    pub rhs: BigUint,
    pub equal: bool,
}

/// Compares `C(dim V · dim W, m)` with
/// `Σ_{|α| = m} dim S^α(V) · dim S^{α*}(W)`, where `α` runs over partitions
/// with at most `dim V` rows and `dim W` columns.
pub fn cauchy_dimension_check(dim_v: usize, dim_w: usize, m: usize) -> CauchyCheck {
    let lhs = binomial((dim_v * dim_w) as u64, m as u64);
    let rhs: BigUint = enumerate_box(dim_v, dim_w)
        .into_iter()
        .filter(|alpha| alpha.weight() == m)
        .map(|alpha| {
            let conjugate = alpha
                .conjugate()
                .padded(dim_w)
                .expect("fits the conjugate box");
            GlWeight::from(&alpha).dim() * GlWeight::from(&conjugate).dim()
        })
        .sum();
    let equal = lhs == rhs;
    CauchyCheck { lhs, rhs, equal }
}

/// `|α|`, reduced modulo the period of the Brauer class when one is given.
pub fn twist_class(alpha: &Partition, period: Option<NonZeroU64>) -> u64 {
    let weight = alpha.weight() as u64;
    match period {
        Some(p) => weight % p.get(),
        None => weight,
    }
}
