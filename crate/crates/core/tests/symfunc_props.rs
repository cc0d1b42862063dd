use num_bigint::BigInt;
use proptest::prelude::*;

use incidence::symfunc::{complete_h, is_dominant, nim_poly, nim_sum, schur2, truncated_h, SymPoly};
use incidence::SymLaurent;

fn poly(n: usize) -> impl Strategy<Value = SymLaurent> {
    prop::collection::vec((prop::collection::vec(-2i64..=3, n), -3i64..=3), 0..4).prop_map(move |terms| {
        SymPoly::canonicalize(n, terms.into_iter().map(|(v, c)| (v, BigInt::from(c)))).unwrap()
    })
}

fn triple() -> impl Strategy<Value = (SymLaurent, SymLaurent, SymLaurent)> {
    (1usize..=3).prop_flat_map(|n| (poly(n), poly(n), poly(n)))
}

/// All exponent vectors of length `n` with entries in `0..=max` and sum `total`.
fn vectors(n: usize, total: i64, max: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for x in 0..=max.min(total) {
        for mut rest in vectors(n - 1, total - x, max) {
            rest.push(x);
            out.push(rest);
        }
    }
    out
}

/// Sum of the given monomials, assumed closed under permutation.
fn from_monomials(n: usize, monomials: Vec<Vec<i64>>) -> SymLaurent {
    let mut out = SymLaurent::zero(n);
    for v in monomials.into_iter().filter(|v| is_dominant(v)) {
        out = &out + &SymPoly::monomial_symmetric(n, v, BigInt::from(1));
    }
    out
}

proptest! {
    #[test]
    fn ring_axioms((f, g, h) in triple()) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f - &f), &SymLaurent::zero(f.n()));
        prop_assert_eq!((&f * &g).dimension(), f.dimension() * g.dimension());
    }

    #[test]
    fn frobenius_and_dual_are_ring_maps((f, g, _h) in triple(), q in 1i64..=4) {
        let fq = |x: &SymLaurent| x.frobenius(q).unwrap();
        prop_assert_eq!(fq(&(&f * &g)), &fq(&f) * &fq(&g));
        prop_assert_eq!(fq(&(&f + &g)), &fq(&f) + &fq(&g));
        prop_assert_eq!((&f * &g).dualize(), &f.dualize() * &g.dualize());
        prop_assert_eq!(f.dualize().dualize(), f.clone());
        prop_assert_eq!(f.shift(2).shift(-2), f.clone());
        prop_assert_eq!(f.shift(1), &f * &SymPoly::monomial_symmetric(f.n(), vec![1; f.n()], BigInt::from(1)));
    }

    #[test]
    fn truncated_h_counts_monomials(n in 1usize..=4, d in 0i64..=8, q in 2i64..=4) {
        prop_assert_eq!(truncated_h::<BigInt>(n, d, q), from_monomials(n, vectors(n, d, q - 1)));
        prop_assert_eq!(complete_h::<BigInt>(n, d), from_monomials(n, vectors(n, d, d)));
    }

    #[test]
    fn nim_poly_matches_enumeration(n in 1usize..=4, m in 0i64..=4) {
        let zero_xor: Vec<Vec<i64>> = vectors(n, 2 * m, 2 * m)
            .into_iter()
            .filter(|v| nim_sum(&v.iter().map(|&x| x as u64).collect::<Vec<_>>()) == 0)
            .collect();
        prop_assert_eq!(nim_poly::<BigInt>(n, m).unwrap(), from_monomials(n, zero_xor));
    }

    #[test]
    fn schur_is_jacobi_trudi(a in 0i64..=5, b in 0i64..=5) {
        // s_{(a,b)} in two variables is (z1 z2)^b h_{a−b} when a ≥ b
        prop_assume!(a >= b);
        let want = complete_h::<BigInt>(2, a - b).shift(b);
        prop_assert_eq!(schur2::<BigInt>(2, a, b), want);
    }
}

#[test]
fn coefficient_rings_agree() {
    let small = &complete_h::<i64>(4, 3) * &truncated_h::<i64>(4, 5, 3);
    let big = &complete_h::<BigInt>(4, 3) * &truncated_h::<BigInt>(4, 5, 3);
    assert_eq!(small.map_coefficients(|c| BigInt::from(*c)), big);
}
