use num_bigint::BigInt;

use incidence::cohomology::{
    coh_char, coh_char2_nonrecursive, coh_small_weights, euler_characteristic, genfunc_residual, CohQuery,
    CohomologyEngine,
};
use incidence::oracle::sheaf_coh_char;
use incidence::SymLaurent;

#[test]
fn recursion_matches_linear_algebra() {
    for n in 2..=3 {
        for p in [2u64, 3, 5] {
            let mut eng = CohomologyEngine::<BigInt>::new();
            for d in 0..=6 {
                for e in (d - 1).max(-1)..=7 {
                    let (h0, h1) = sheaf_coh_char(n, p as u32, d, 1, e).unwrap();
                    let got0 = eng.coh_char(CohQuery::new(n, p, 0, d, e).unwrap()).unwrap();
                    let got1 = eng.coh_char(CohQuery::new(n, p, 1, d, e).unwrap()).unwrap();
                    assert_eq!(got0, h0, "h0 n={n} p={p} d={d} e={e}");
                    assert_eq!(got1, h1, "h1 n={n} p={p} d={d} e={e}");
                }
            }
        }
    }
}

#[test]
fn swap_regime_matches_linear_algebra() {
    for p in [2u64, 3] {
        for d in 2..=6 {
            for e in -1..=(d - 2) {
                let (h0, h1) = sheaf_coh_char(3, p as u32, d, 1, e).unwrap();
                assert_eq!(coh_char(3, p, 0, d, e).unwrap(), h0, "p={p} d={d} e={e}");
                assert_eq!(coh_char(3, p, 1, d, e).unwrap(), h1, "p={p} d={d} e={e}");
            }
        }
    }
}

#[test]
fn euler_characteristic_and_positivity() {
    for n in 2..=5 {
        for p in [0u64, 2, 3, 5] {
            let mut eng = CohomologyEngine::<BigInt>::new();
            for d in 0..=9 {
                for e in -1..=9 {
                    let h0 = eng.coh_char(CohQuery::new(n, p, 0, d, e).unwrap()).unwrap();
                    let h1 = eng.coh_char(CohQuery::new(n, p, 1, d, e).unwrap()).unwrap();
                    assert!(h0.is_nonnegative() && h1.is_nonnegative());
                    assert_eq!(h0.dimension() - h1.dimension(), euler_characteristic(n, d, e), "n={n} p={p} d={d} e={e}");
                }
            }
        }
    }
}

#[test]
fn closed_forms_agree_with_recursion() {
    for n in 2..=4 {
        for p in [2u64, 3] {
            let pi = p as i64;
            for d in pi..pi * pi {
                for e in d - 1..=d + 4 {
                    let closed: SymLaurent = coh_small_weights(n, p, d, e).unwrap();
                    assert_eq!(closed, coh_char(n, p, 1, d, e).unwrap(), "n={n} p={p} d={d} e={e}");
                }
            }
        }
        for d in 0..=7 {
            for e in (d - 1).max(-1)..=8 {
                let closed: SymLaurent = coh_char2_nonrecursive(n, d, e).unwrap();
                assert_eq!(closed, coh_char(n, 2, 1, d, e).unwrap(), "n={n} d={d} e={e}");
            }
        }
    }
}

#[test]
fn functional_equation() {
    for n in 2..=3 {
        let residual = genfunc_residual(n, 5, 7).unwrap();
        assert!(residual.is_empty(), "n={n}: {:?}", residual.keys().collect::<Vec<_>>());
    }
}
