use punctual_core::corpus;
use punctual_core::deform::{ext1_space, tangent_space};
use punctual_core::invariants::{hilbert_function, regularity};
use punctual_core::strata::{predicted_hilbert_function, truncate_ideal, verify_truncation};

#[test]
fn piecewise_hilbert_function_for_every_m() {
    for (name, y) in corpus::all() {
        let reg = regularity(&y).unwrap();
        for m in 1..=reg + 4 {
            let g = truncate_ideal(&y, m, true).unwrap();
            for d in 0..=reg + m + 4 {
                let want = predicted_hilbert_function(|e| hilbert_function(&y, e), m, d);
                assert_eq!(hilbert_function(&g, d), want, "{name} m={m} d={d}");
            }
        }
    }
}

#[test]
fn valid_truncations_pass_every_check() {
    for (name, y) in corpus::all() {
        let reg = regularity(&y).unwrap();
        for m in [reg + 2, reg + 3] {
            let r = verify_truncation(&y, m, reg + m + 4, false).unwrap();
            assert!(r.passed(), "{name} m={m}: {r:?}");
            let t1 = r.strand_multiplicities.first().copied().unwrap_or(0);
            assert_eq!(t1 as u64, hilbert_function(&y, m), "{name} m={m}");
        }
    }
}

#[test]
fn truncation_dimensions_match_direct_computation() {
    let y = corpus::twisted_cubic();
    let r = verify_truncation(&y, 5, 11, false).unwrap();
    let g = truncate_ideal(&y, 5, false).unwrap();
    assert_eq!(r.comparison.tangent_dim_gamma, tangent_space(&g).unwrap().dimension);
    assert_eq!(r.comparison.ext1_dim_gamma, ext1_space(&g).unwrap().dimension);
}
