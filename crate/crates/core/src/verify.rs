//! Sweeps comparing each closed-form engine with its linear-algebra oracle.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::{CohQuery, CohomologyEngine};
use crate::error::{Error, Result};
use crate::hanmonsky::{hm_product, summand_test_via_ideals};
use crate::lefschetz::{wlp_char2, wlp_cohomological, wlp_oracle};
use crate::oracle::{sheaf_coh_char, split_type_oracle};
use crate::pparts::split_fdr;

/// Which engine to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepKind {
    Coh,
    Pparts,
    Hm,
    Wlp,
}

/// Sweep size: `quick` for smoke runs, `full` for the acceptance ranges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    Quick,
    Full,
}

impl FromStr for SweepKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coh" => Ok(SweepKind::Coh),
            "pparts" => Ok(SweepKind::Pparts),
            "hm" => Ok(SweepKind::Hm),
            "wlp" => Ok(SweepKind::Wlp),
            _ => Err(Error::Precondition(format!("unknown sweep {s:?}"))),
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Preset::Quick),
            "full" => Ok(Preset::Full),
            _ => Err(Error::Precondition(format!("unknown preset {s:?}"))),
        }
    }
}

/// First disagreement found, with the command that reproduces it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub reproduce: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub sweep: SweepKind,
    pub preset: Preset,
    pub cases: usize,
    pub mismatch: Option<Mismatch>,
}

#[derive(Clone, Debug)]
enum Case {
    Coh { n: usize, p: u64, d: i64, e: i64 },
    Split { p: u64, d: i64, r: i64 },
    Pair { p: u64, a: i64, b: i64 },
    Wlp { p: u64, abar: Vec<i64> },
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::Coh { n, p, d, e } => write!(f, "incidence coh --n {n} --p {p} --i 1 --d {d} --e {e}"),
            Case::Split { p, d, r } => write!(f, "incidence pparts split --p {p} --d {d} --r {r}"),
            Case::Pair { p, a, b } => write!(f, "incidence hm product --p {p} --lengths {a},{b}"),
            Case::Wlp { p, abar } => {
                let exps: Vec<i64> = abar.iter().map(|x| x + 1).collect();
                write!(f, "incidence wlp --p {p} --exponents {} --method oracle", join(&exps))
            }
        }
    }
}

fn positive_compositions(s: i64, n: usize) -> Vec<Vec<i64>> {
    if n == 0 {
        return if s == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for x in 1..=(s - n as i64 + 1) {
        for mut rest in positive_compositions(s - x, n - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn cases(kind: SweepKind, preset: Preset) -> Vec<Case> {
    let full = preset == Preset::Full;
    let mut out = Vec::new();
    match kind {
        SweepKind::Coh => {
            let (ns, ps, dmax, emax) = if full { (2..=4, vec![2, 3, 5], 8, 10) } else { (2..=3, vec![2, 3], 5, 6) };
            for n in ns {
                for &p in &ps {
                    for d in 0..=dmax {
                        for e in (d - 1).max(-1)..=emax {
                            out.push(Case::Coh { n, p, d, e });
                        }
                    }
                }
            }
        }
        SweepKind::Pparts => {
            let (rmax, dmax) = if full { (9, 30) } else { (5, 12) };
            for p in [2, 3] {
                for r in 1..=rmax {
                    for d in 0..=dmax {
                        out.push(Case::Split { p, d, r });
                    }
                }
            }
        }
        SweepKind::Hm => {
            let (ps, max) = if full { (vec![2, 3, 5], 12) } else { (vec![2, 3], 6) };
            for p in ps {
                for a in 1..=max {
                    for b in a..=max {
                        out.push(Case::Pair { p, a, b });
                    }
                }
            }
        }
        SweepKind::Wlp => {
            let (ps, nmax, smax) = if full { (vec![2, 3, 5], 5, 12) } else { (vec![2, 3], 4, 8) };
            for p in ps {
                for n in 1..=nmax {
                    for s in 0..=smax {
                        for abar in positive_compositions(s, n) {
                            out.push(Case::Wlp { p, abar });
                        }
                    }
                }
            }
        }
    }
    out
}

/// `None` when the engines agree, otherwise a description of the disagreement.
fn check(case: &Case) -> Result<Option<String>> {
    Ok(match case {
        Case::Coh { n, p, d, e } => {
            let (h0, h1) = sheaf_coh_char(*n, *p as u32, *d, 1, *e)?;
            let mut eng = CohomologyEngine::<BigInt>::new();
            let r0 = eng.coh_char(CohQuery::new(*n, *p, 0, *d, *e)?)?;
            let r1 = eng.coh_char(CohQuery::new(*n, *p, 1, *d, *e)?)?;
            if r0 != h0 {
                Some(format!("h^0: recursion {r0}, oracle {h0}"))
            } else if r1 != h1 {
                Some(format!("h^1: recursion {r1}, oracle {h1}"))
            } else {
                None
            }
        }
        Case::Split { p, d, r } => {
            let formula = split_fdr(*p, *d, *r)?;
            formula.check_invariants(*d, *r)?;
            let oracle = split_type_oracle(*p, *d, *r)?;
            (formula != oracle).then(|| {
                let show = |s: &crate::pparts::SplitType| serde_json::to_string(s).expect("serializable");
                format!("recursion {}, oracle {}", show(&formula), show(&oracle))
            })
        }
        Case::Pair { p, a, b } => {
            let prod = hm_product(*p, &[*a, *b])?;
            let mut bad = None;
            'outer: for r in 1..=a + b {
                for j in 0..*a {
                    if summand_test_via_ideals(*p, *a, *b, r, j)? != prod.contains(r, j) {
                        bad = Some(format!("δ_{r}(−{j}): ideal test disagrees with the Jordan type"));
                        break 'outer;
                    }
                }
            }
            bad
        }
        Case::Wlp { p, abar } => {
            let oracle = wlp_oracle(*p, abar)?.wlp;
            let cohom = wlp_cohomological(*p, abar)?.wlp;
            let char2 = if *p == 2 { Some(wlp_char2(abar)?.wlp) } else { None };
            if oracle != cohom || char2.is_some_and(|c| c != oracle) {
                Some(format!("oracle {oracle}, cohomology {cohom}, char2 {char2:?}"))
            } else {
                None
            }
        }
    })
}

/// Runs a sweep on the current rayon pool. The reported mismatch is the
/// first in enumeration order, so output does not depend on scheduling.
pub fn run_sweep(kind: SweepKind, preset: Preset) -> SweepReport {
    let all = cases(kind, preset);
    let mismatch = all.par_iter().find_map_first(|case| {
        let detail = match check(case) {
            Ok(found) => found,
            Err(err) => Some(format!("error: {err}")),
        };
        detail.map(|detail| Mismatch { reproduce: case.to_string(), detail })
    });
    SweepReport { sweep: kind, preset, cases: all.len(), mismatch }
}
