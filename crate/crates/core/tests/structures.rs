use incidence::cohomology::coh_char;
use incidence::hanmonsky::{check_prime_shift_constraint, hm_product, hm_product_direct};
use incidence::lefschetz::{theta_q, wlp_char2, wlp_oracle, Theta};
use incidence::oracle::{kernel_bichar, sheaf_coh_char};
use incidence::pparts::{quot_char, split_fdr};

#[test]
fn folded_products_match_the_full_algebra() {
    for p in [2u64, 3, 5] {
        for a in 1..=6 {
            for b in a..=6 {
                for c in b..=6 {
                    let lengths = [a, b, c];
                    assert_eq!(
                        hm_product(p, &lengths).unwrap(),
                        hm_product_direct(p, &lengths).unwrap(),
                        "p={p} {lengths:?}"
                    );
                }
            }
        }
    }
    assert_eq!(hm_product(2, &[8, 7, 8]).unwrap(), hm_product_direct(2, &[8, 7, 8]).unwrap());
    assert_eq!(hm_product(3, &[2, 3, 2, 2]).unwrap(), hm_product_direct(3, &[2, 3, 2, 2]).unwrap());
}

#[test]
fn pair_products_have_one_summand_per_shift() {
    for p in [2u64, 3, 5, 7] {
        for a in 1..=10i64 {
            for b in a..=10 {
                let prod = hm_product(p, &[a, b]).unwrap();
                let shifts: Vec<i64> = prod.iter().flat_map(|s| std::iter::repeat_n(s.j, s.mult)).collect();
                assert_eq!(shifts, (0..a).collect::<Vec<_>>(), "p={p} a={a} b={b}");
                assert!(check_prime_shift_constraint(p, &[a, b], &prod).unwrap());
                if (a * b) % p as i64 == 0 {
                    assert!(prod.iter().all(|s| s.c % p as i64 == 0), "p={p} a={a} b={b}");
                }
            }
        }
    }
}

#[test]
fn sheaf_sequence_is_additive_on_cohomology() {
    for n in 2..=3 {
        for p in [2u64, 3, 5] {
            for r in 2..=p as i64 {
                for d in r..=6 {
                    for e in d - 1..=d + 2 {
                        let (f0, f1) = sheaf_coh_char(n, p as u32, d, r, e).unwrap();
                        let (g0, g1) = sheaf_coh_char(n, p as u32, d - 1, r - 1, e + 1).unwrap();
                        assert_eq!(f0, &coh_char(n, p, 0, d, e).unwrap() + &g0, "h0 n={n} p={p} r={r} d={d} e={e}");
                        assert_eq!(f1, &coh_char(n, p, 1, d, e).unwrap() + &g1, "h1 n={n} p={p} r={r} d={d} e={e}");
                    }
                }
            }
        }
    }
}

#[test]
fn split_type_reproduces_section_characters() {
    for p in [2u64, 3] {
        for r in 1..=5 {
            for d in 0..=12 {
                let split = split_fdr(p, d, r).unwrap();
                for e in 0..=d + r + 2 {
                    let sections = kernel_bichar(p as u32, d, r, e).unwrap();
                    assert_eq!(split.h0_character(e), sections, "p={p} d={d} r={r} e={e}");
                }
            }
        }
    }
}

#[test]
fn quotient_characters_are_nonnegative() {
    for p in [2u64, 3, 5] {
        for r in 1..=10 {
            for d in 0..=30 {
                let q = quot_char(p, d, r).unwrap();
                assert!(q.is_nonnegative() && q.is_symmetric(), "p={p} d={d} r={r}");
            }
        }
    }
}

#[test]
fn theta_window_is_monotone() {
    for a1 in 0..=12 {
        for a2 in 0..=a1 {
            for a3 in 0..=a2 {
                let a = [a1, a2, a3];
                let max = a1.max(1);
                let mut q = 2;
                let mut held_above_max = false;
                while q <= 64 {
                    let sum = a.iter().fold(Theta::Value(0), |acc, &x| acc + theta_q(x, q).unwrap());
                    let holds = sum <= Theta::Value(2 * q - 2);
                    if held_above_max {
                        assert!(holds, "ā={a:?} q={q}");
                    }
                    if q > max && holds {
                        held_above_max = true;
                    }
                    q *= 2;
                }
            }
        }
    }
}

#[test]
fn two_variable_algebras_have_wlp() {
    for p in [2u64, 3, 5, 7] {
        for a in 0..=9 {
            for b in 0..=9 {
                assert!(wlp_oracle(p, &[a, b]).unwrap().wlp);
            }
        }
    }
    for a in 0..=20 {
        for b in 0..=20 {
            assert!(wlp_char2(&[a, b]).unwrap().wlp, "ā=({a},{b})");
        }
    }
}
