//! Weak Lefschetz tests for `M_ā = k[T_1..T_n]/(T_i^{1+a_i})`.
//!
//! Public entry points that take ideal exponents convert them to `ā`
//! (exponent minus one) at the boundary; everything below works with `ā`.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, require_prime};
use crate::cohomology::coh_char;
use crate::error::{Error, Result};
use crate::oracle::artinian_mult_ranks;

/// An integer or the absorbing bottom element `−∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Theta {
    Bottom,
    Value(i64),
}

impl Add for Theta {
    type Output = Theta;

    fn add(self, rhs: Theta) -> Theta {
        match (self, rhs) {
            (Theta::Value(a), Theta::Value(b)) => Theta::Value(a + b),
            _ => Theta::Bottom,
        }
    }
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theta::Bottom => write!(f, "-inf"),
            Theta::Value(v) => write!(f, "{v}"),
        }
    }
}

fn require_power_of_two(q: i64) -> Result<()> {
    if q < 2 || q & (q - 1) != 0 {
        return Err(Error::Precondition(format!("q = {q} is not a power of 2 at least 2")));
    }
    Ok(())
}

/// With `x = 2qm + r`, `0 ≤ r < 2q`: `r` if `r ≤ q−1`, `2q−2−r` if
/// `r ≤ 2q−2`, bottom if `r = 2q−1`.
pub fn theta_q(x: i64, q: i64) -> Result<Theta> {
    require_power_of_two(q)?;
    if x < 0 {
        return Err(Error::Precondition(format!("x = {x} < 0")));
    }
    let r = x % (2 * q);
    Ok(if r <= q - 1 {
        Theta::Value(r)
    } else if r <= 2 * q - 2 {
        Theta::Value(2 * q - 2 - r)
    } else {
        Theta::Bottom
    })
}

/// Which test found a failure of WLP.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    /// Characteristic 2: the power of two whose `θ_q` sum is too large.
    Q(i64),
    /// `z^ā` appears in the middle `h^1`.
    Monomial(Vec<i64>),
    /// Degree where `×T` drops rank.
    Degree(usize),
}

/// Outcome of a WLP test; a witness is present exactly when WLP fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WlpReport {
    pub wlp: bool,
    pub witness: Option<Witness>,
}

impl WlpReport {
    fn holds() -> Self {
        WlpReport { wlp: true, witness: None }
    }

    fn fails(w: Witness) -> Self {
        WlpReport { wlp: false, witness: Some(w) }
    }
}

fn validate_abar(a: &[i64]) -> Result<()> {
    if a.is_empty() {
        return Err(Error::Precondition("no variables".into()));
    }
    if let Some(bad) = a.iter().find(|&&x| x < 0) {
        return Err(Error::Precondition(format!("exponent offset {bad} < 0")));
    }
    Ok(())
}

/// `Σ θ_q(a_i) ≤ 2q−2` for every power of two `q` with `⊕a_i < 2q ≤ 4·max a_i`.
pub fn wlp_char2(a: &[i64]) -> Result<WlpReport> {
    validate_abar(a)?;
    let nim = a.iter().fold(0, |acc, x| acc ^ x);
    let max = *a.iter().max().expect("nonempty");
    let mut q = 2;
    while q <= 2 * max {
        if 2 * q > nim {
            let mut sum = Theta::Value(0);
            for &x in a {
                sum = sum + theta_q(x, q)?;
            }
            if sum > Theta::Value(2 * q - 2) {
                return Ok(WlpReport::fails(Witness::Q(q)));
            }
            if q > max {
                // every θ_q(a_i) = a_i from here on, so larger q pass as well
                break;
            }
        }
        q *= 2;
    }
    Ok(WlpReport::holds())
}

/// WLP fails iff `z^ā` appears in `h^1(D^d R(e))` for `(d, e) = (⌈s/2⌉, ⌊s/2⌋)`.
pub fn wlp_cohomological(p: u64, a: &[i64]) -> Result<WlpReport> {
    require_prime(p)?;
    validate_abar(a)?;
    if a.len() == 1 {
        return Ok(WlpReport::holds());
    }
    let s: i64 = a.iter().sum();
    let h1 = coh_char(a.len(), p, 1, (s + 1) / 2, s / 2)?;
    Ok(if h1.coeff_of(a)? == 0.into() {
        WlpReport::holds()
    } else {
        WlpReport::fails(Witness::Monomial(a.to_vec()))
    })
}

/// Maximal rank of `×T : (M_ā)_e → (M_ā)_{e+1}` in every degree, by linear algebra.
pub fn wlp_oracle(p: u64, a: &[i64]) -> Result<WlpReport> {
    validate_abar(a)?;
    let ranks = artinian_mult_ranks(p, a)?;
    Ok(match ranks.deficient_degrees().first() {
        None => WlpReport::holds(),
        Some(&e) => WlpReport::fails(Witness::Degree(e)),
    })
}

/// Whether every `M_ā` in `n ≥ 3` variables with socle degree `s` has WLP
/// in characteristic `p`.
pub fn socle_guarantees_wlp(n: usize, p: u64, s: i64) -> Result<bool> {
    require_prime(p)?;
    if n < 3 || s < 0 {
        return Err(Error::Precondition(format!("need n ≥ 3 and s ≥ 0, got n={n}, s={s}")));
    }
    let p = p as i64;
    if s <= 2 * p - 2 {
        return Ok(true);
    }
    if n == 4 && p == 2 && s == 6 {
        return Ok(true);
    }
    if n == 3 {
        let mut q = p;
        while 4 * q - 4 <= s {
            for t in 1..p {
                if (2 * t + 2) * q - 4 <= s && s <= (2 * t + 2) * q - 2 {
                    return Ok(true);
                }
            }
            q *= p;
        }
    }
    Ok(false)
}

/// Test selection for [`wlp`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WlpMethod {
    /// `θ_q` criterion for `p = 2`, cohomology otherwise.
    Auto,
    Char2,
    Cohomology,
    Oracle,
}

/// `ā` from ideal exponents `e_i = a_i + 1`.
pub fn exponents_to_abar(exponents: &[i64]) -> Result<Vec<i64>> {
    if exponents.is_empty() {
        return Err(Error::Precondition("no exponents".into()));
    }
    if let Some(bad) = exponents.iter().find(|&&x| x < 1) {
        return Err(Error::Precondition(format!("exponent {bad} < 1")));
    }
    Ok(exponents.iter().map(|x| x - 1).collect())
}

/// WLP for `k[T_1..T_n]/(T_i^{e_i})` in characteristic `p`, given the exponents `e_i`.
pub fn wlp(p: u64, exponents: &[i64], method: WlpMethod) -> Result<WlpReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let a = exponents_to_abar(exponents)?;
    match method {
        WlpMethod::Auto if p == 2 => wlp_char2(&a),
        WlpMethod::Auto | WlpMethod::Cohomology => wlp_cohomological(p, &a),
        WlpMethod::Char2 if p == 2 => wlp_char2(&a),
        WlpMethod::Char2 => Err(Error::Precondition(format!("char2 criterion needs p = 2, got {p}"))),
        WlpMethod::Oracle => wlp_oracle(p, &a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_values() {
        assert_eq!(theta_q(10, 8).unwrap(), Theta::Value(4));
        for q in [2, 4, 8, 16] {
            assert_eq!(theta_q(q - 1, q).unwrap(), Theta::Value(q - 1));
            assert_eq!(theta_q(2 * q - 1, q).unwrap(), Theta::Bottom);
            assert_eq!(theta_q(6 * q - 1, q).unwrap(), Theta::Bottom);
        }
        assert!(Theta::Bottom + Theta::Value(100) < Theta::Value(-1000));
        assert!(theta_q(3, 6).is_err());
    }

    #[test]
    fn char2_examples() {
        assert!(wlp_char2(&[10, 3, 3, 2, 1, 1]).unwrap().wlp);
        assert_eq!(wlp_char2(&[9, 3, 2, 2, 2, 1]).unwrap(), WlpReport::fails(Witness::Q(8)));
        assert_eq!(wlp_char2(&[1, 1, 1, 1, 1]).unwrap(), WlpReport::fails(Witness::Q(2)));
    }

    #[test]
    fn cohomological_examples() {
        assert!(!wlp_cohomological(3, &[1, 1, 1, 1, 1]).unwrap().wlp);
        assert!(wlp_cohomological(5, &[1, 1, 1, 1, 1]).unwrap().wlp);
        for p in [2u64, 3, 5, 7] {
            assert_eq!(wlp_cohomological(p, &[2, 2, 1]).unwrap().wlp, p != 3, "p={p}");
        }
        assert!(wlp_cohomological(7, &[4]).unwrap().wlp);
    }

    #[test]
    fn oracle_examples() {
        assert!(wlp_oracle(7, &[1, 1]).unwrap().wlp);
        assert!(!wlp_oracle(2, &[1, 1, 1, 1, 1]).unwrap().wlp);
        assert!(wlp_oracle(2, &[10, 3, 3, 2, 1, 1]).unwrap().wlp);
    }

    #[test]
    fn socle_examples() {
        assert!(socle_guarantees_wlp(3, 2, 4).unwrap());
        assert!(socle_guarantees_wlp(4, 2, 6).unwrap());
        assert!((0..=4).all(|s| socle_guarantees_wlp(5, 3, s).unwrap()));
        assert!(!socle_guarantees_wlp(5, 3, 5).unwrap());
        assert!(socle_guarantees_wlp(2, 3, 5).is_err());
    }

    #[test]
    fn exponent_boundary() {
        assert_eq!(exponents_to_abar(&[3, 3, 2]).unwrap(), vec![2, 2, 1]);
        assert!(exponents_to_abar(&[3, 0]).is_err());
        assert!(!wlp(3, &[3, 3, 2], WlpMethod::Auto).unwrap().wlp);
        assert!(wlp(5, &[3, 3, 2], WlpMethod::Oracle).unwrap().wlp);
        assert!(wlp(3, &[3, 3, 2], WlpMethod::Char2).is_err());
        assert_eq!(wlp(4, &[2, 2], WlpMethod::Auto), Err(Error::NotPrime(4)));
    }
}
