//! Cross-checks against independent oracles: Jacobi–Trudi/Pieri for LR,
//! tableau counts for the Weyl formula, Serre duality for Bott's algorithm.

use grsod::partitions::partitions_of;
use grsod::{bbw, lr_coefficient, GlWeight, HomogeneousBundleWeight, Partition};
use grsod_oracles::schur_product;
use num_bigint::BigUint;

#[test]
fn lr_matches_jacobi_trudi_pieri_oracle() {
    let small: Vec<Partition> = (0..=6).flat_map(partitions_of).collect();
    assert_eq!(small.len(), 30);
    let mut compared = 0usize;
    for a in &small {
        for b in &small {
            let oracle = schur_product(a.parts(), b.parts());
            assert!(
                oracle.values().all(|&c| c > 0),
                "negative coefficient for {a} {b}"
            );
            for c in partitions_of(a.weight() + b.weight()) {
                let expected = oracle.get(c.parts()).copied().unwrap_or(0) as u64;
                assert_eq!(lr_coefficient(a, b, &c), expected, "c^{c}_{{{a},{b}}}");
                compared += 1;
            }
        }
    }
    assert!(compared > 10_000);
}

#[test]
fn oracle_partition_lists_agree() {
    for n in 0..=8 {
        let ours: Vec<Vec<usize>> = partitions_of(n)
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(ours, grsod_oracles::partitions_of(n));
    }
}

#[test]
fn weyl_dimension_matches_tableau_count() {
    for rank in 1..=5 {
        for shape in grsod::enumerate_box(rank, 4) {
            let expected = grsod_oracles::ssyt_count(shape.parts(), rank);
            assert_eq!(
                GlWeight::from(&shape).dim(),
                BigUint::from(expected),
                "{shape}"
            );
        }
    }
}

fn weights_in_range(rank: usize, bound: usize) -> Vec<GlWeight> {
    grsod::enumerate_box(rank, 2 * bound)
        .iter()
        .map(|p| GlWeight::from(p).det_shift(-(bound as i64)))
        .collect()
}

#[test]
fn serre_duality_on_box_weights() {
    for n in 2..=6usize {
        for k in 1..n {
            let top = k * (n - k);
            let deltas = weights_in_range(n - k, k);
            let gammas = weights_in_range(k, n - k);
            for delta in &deltas {
                for gamma in &gammas {
                    let forward =
                        bbw(
                            &HomogeneousBundleWeight::new(delta.clone(), gamma.clone(), n).unwrap(),
                        );
                    let dual = HomogeneousBundleWeight::new(
                        delta.dual(),
                        gamma.dual().det_shift(n as i64),
                        n,
                    )
                    .unwrap();
                    let backward = bbw(&dual);
                    match (forward.degree(), backward.degree()) {
                        (None, None) => {}
                        (Some(d1), Some(d2)) => {
                            assert_eq!(d1 + d2, top, "Gr({k},{n}) {delta}|{gamma}");
                            assert_eq!(forward.dimension(), backward.dimension());
                        }
                        _ => panic!("Gr({k},{n}) {delta}|{gamma}: {forward:?} vs {backward:?}"),
                    }
                }
            }
        }
    }
}

#[test]
fn dual_of_tautological_subbundle_on_gr24() {
    // H^0(Gr(2,4), R*) = E*, four-dimensional
    let bundle =
        HomogeneousBundleWeight::subbundle(GlWeight::new(vec![0, -1]).unwrap(), 4).unwrap();
    assert_eq!(bbw(&bundle).dimension(), Some(&BigUint::from(4u32)));
    assert_eq!(bbw(&bundle).degree(), Some(0));
}
