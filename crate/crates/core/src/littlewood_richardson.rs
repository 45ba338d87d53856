//! Littlewood–Richardson coefficients and tensor / Hom decompositions of
//! `GL(k)` Schur functors.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gl_weights::GlWeight;
use crate::partitions::Partition;

/// Irreducible summands of a `GL(k)` representation with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiset {
    rank: usize,
    entries: BTreeMap<GlWeight, u64>,
}

impl WeightMultiset {
    pub fn new(rank: usize) -> Self {
        WeightMultiset {
            rank,
            entries: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Adds `mult` copies of `weight`; zero multiplicities are ignored.
    pub fn insert(&mut self, weight: GlWeight, mult: u64) -> Result<()> {
        if weight.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: weight.rank(),
                right: self.rank,
            });
        }
        if mult > 0 {
            *self.entries.entry(weight).or_insert(0) += mult;
        }
        Ok(())
    }

    /// Multiplicity of `weight`, zero if absent.
    pub fn mult(&self, weight: &GlWeight) -> u64 {
        self.entries.get(weight).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Summands in decreasing lex order of weight.
    pub fn iter(&self) -> impl Iterator<Item = (&GlWeight, u64)> {
        self.entries.iter().rev().map(|(w, &m)| (w, m))
    }

    /// `Σ mult · dim(weight)`.
    pub fn total_dimension(&self) -> BigUint {
        self.entries.iter().map(|(w, &m)| w.dim() * m).sum()
    }
}

impl Serialize for WeightMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            weight: &'a GlWeight,
            mult: u64,
        }
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (weight, mult) in self.iter() {
            seq.serialize_element(&Entry { weight, mult })?;
        }
        seq.end()
    }
}

/// Number of Littlewood–Richardson tableaux of skew shape `c / a` and content
/// `b`: semistandard fillings whose reverse reading word is a lattice word.
/// Declared lengths are ignored; only Young diagrams matter.
pub fn lr_coefficient(a: &Partition, b: &Partition, c: &Partition) -> u64 {
    if a.weight() + b.weight() != c.weight() || !c.contains(a) || !c.contains(b) {
        return 0;
    }
    let rows = c.rows();
    let outer: Vec<usize> = (0..rows).map(|r| c.part(r)).collect();
    let inner: Vec<usize> = (0..rows).map(|r| a.part(r)).collect();
    let content: Vec<usize> = b.trimmed().parts().to_vec();

    // reading order: rows top to bottom, each right to left
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (inner[r]..outer[r]).rev().map(move |col| (r, col)))
        .collect();

    let mut search = LrSearch {
        inner: &inner,
        outer: &outer,
        content: &content,
        cells: &cells,
        grid: outer.iter().map(|&len| vec![0; len]).collect(),
        used: vec![0; content.len() + 1],
    };
    search.count(0)
}

struct LrSearch<'a> {
    inner: &'a [usize],
    outer: &'a [usize],
    content: &'a [usize],
    cells: &'a [(usize, usize)],
    grid: Vec<Vec<usize>>,
    // used[v] = copies of letter v placed so far (1-based letters)
    used: Vec<usize>,
}

impl LrSearch<'_> {
    fn count(&mut self, idx: usize) -> u64 {
        if idx == self.cells.len() {
            return 1;
        }
        let (r, col) = self.cells[idx];
        // rows weakly increase left to right; the right neighbour is already filled
        let upper = if col + 1 < self.outer[r] {
            self.grid[r][col + 1]
        } else {
            self.content.len()
        };
        // columns strictly increase downward; cells of the inner shape impose nothing
        let lower = if r > 0 && col >= self.inner[r - 1] {
            self.grid[r - 1][col] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lower..=upper {
            if self.used[v] == self.content[v - 1] {
                continue;
            }
            if v > 1 && self.used[v - 1] <= self.used[v] {
                continue;
            }
            self.used[v] += 1;
            self.grid[r][col] = v;
            total += self.count(idx + 1);
            self.used[v] -= 1;
        }
        self.grid[r][col] = 0;
        total
    }
}

/// Full Littlewood–Richardson expansion `s_a · s_b = Σ c^λ_{a,b} s_λ`, keyed by
/// trimmed partitions, with no row bound.
pub fn lr_product(a: &Partition, b: &Partition) -> BTreeMap<Partition, u64> {
    let a = a.trimmed();
    let b = b.trimmed();
    let total = a.weight() + b.weight();
    let max_rows = a.rows() + b.rows();
    let widest = a.first() + b.first();

    let mut out = BTreeMap::new();
    let mut prefix = Vec::with_capacity(max_rows);
    candidates(&a, &b, total, max_rows, widest, &mut prefix, &mut |c| {
        let coeff = lr_coefficient(&a, &b, c);
        if coeff > 0 {
            out.insert(c.clone(), coeff);
        }
    });
    out
}

// Partitions λ ⊇ a, b with |λ| = total, at most max_rows rows, λ_i ≤ a_i + b_1.
fn candidates(
    a: &Partition,
    b: &Partition,
    remaining: usize,
    max_rows: usize,
    widest: usize,
    prefix: &mut Vec<usize>,
    emit: &mut dyn FnMut(&Partition),
) {
    let r = prefix.len();
    if remaining == 0 {
        if (r..max_rows).all(|i| a.part(i) == 0 && b.part(i) == 0) {
            emit(&Partition::new(prefix.clone()).expect("built decreasing"));
        }
        return;
    }
    if r == max_rows {
        return;
    }
    let cap = prefix
        .last()
        .copied()
        .unwrap_or(widest)
        .min(a.part(r) + b.first());
    let floor = a.part(r).max(b.part(r)).max(1);
    for part in (floor..=cap.min(remaining)).rev() {
        prefix.push(part);
        candidates(a, b, remaining - part, max_rows, widest, prefix, emit);
        prefix.pop();
    }
}

/// Decomposes `S^u ⊗ S^v` into irreducible `GL(k)` summands.
///
/// Both weights are shifted by determinant powers into partitions, expanded by
/// the LR rule, truncated to at most `k` rows and shifted back.
pub fn tensor_decompose(u: &GlWeight, v: &GlWeight) -> Result<WeightMultiset> {
    if u.rank() != v.rank() {
        return Err(Error::RankMismatch {
            left: u.rank(),
            right: v.rank(),
        });
    }
    let k = u.rank();
    let mut out = WeightMultiset::new(k);
    if k == 0 {
        out.insert(GlWeight::zero(0), 1)?;
        return Ok(out);
    }
    let shift_u = -u.min_entry().unwrap_or(0);
    let shift_v = -v.min_entry().unwrap_or(0);
    let pu = u
        .det_shift(shift_u)
        .to_partition()
        .expect("shifted to nonnegative");
    let pv = v
        .det_shift(shift_v)
        .to_partition()
        .expect("shifted to nonnegative");

    for (lambda, mult) in lr_product(&pu, &pv) {
        if lambda.rows() > k {
            continue;
        }
        let padded = lambda.padded(k)?;
        out.insert(
            GlWeight::from(&padded).det_shift(-(shift_u + shift_v)),
            mult,
        )?;
    }
    Ok(out)
}

/// Decomposes `Hom(S^α R, S^α' R) = S^{α∨} R ⊗ S^{α'} R` for `R` of rank `k`.
pub fn hom_decompose(
    alpha: &Partition,
    alpha_prime: &Partition,
    k: usize,
) -> Result<WeightMultiset> {
    let source = GlWeight::from(&padded_to(alpha, k)?);
    let target = GlWeight::from(&padded_to(alpha_prime, k)?);
    tensor_decompose(&source.dual(), &target)
}

fn padded_to(p: &Partition, k: usize) -> Result<Partition> {
    p.padded(k).map_err(|_| Error::LengthMismatch {
        left: p.len(),
        right: k,
    })
}
