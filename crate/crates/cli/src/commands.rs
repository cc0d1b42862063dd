use std::fmt::Write;

use clap::{Args, Subcommand, ValueEnum};
use serde_json::{json, Value};

use incidence::cohomology::{coh_char2_nonrecursive, coh_small_weights, CohQuery, CohomologyEngine};
use incidence::hanmonsky::{check_prime_shift_constraint, hm_product, odd_summand_char2, HmClass};
use incidence::lefschetz::{wlp as wlp_test, Witness, WlpMethod};
use incidence::pparts::{bc_char, quot_char, split_fdr};
use incidence::symfunc::coefficient_to_json;
use incidence::verify::{run_sweep, Preset, SweepKind};
use incidence::{Error, SymLaurent};

use crate::{CliError, OutputArgs, Report};

type Outcome = Result<Report, CliError>;

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("payload types serialize")
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CohMethod {
    Recursive,
    Char2,
    SmallWeights,
}

#[derive(Args, Debug)]
pub struct CohArgs {
    /// Number of variables (the space is P^{n−1}).
    #[arg(long)]
    n: usize,
    /// Characteristic: 0 or a prime.
    #[arg(long)]
    p: u64,
    /// Cohomological degree, 0 or 1.
    #[arg(long)]
    i: u8,
    #[arg(long, allow_negative_numbers = true)]
    d: i64,
    #[arg(long, allow_negative_numbers = true)]
    e: i64,
    #[arg(long, value_enum, default_value_t = CohMethod::Recursive)]
    method: CohMethod,
    #[command(flatten)]
    pub out: OutputArgs,
}

pub fn coh(args: &CohArgs) -> Outcome {
    let q = CohQuery::new(args.n, args.p, args.i, args.d, args.e)?;
    let closed_form_needs_h1 = |name: &str| {
        if args.i == 1 {
            Ok(())
        } else {
            Err(Error::Precondition(format!("the {name} formula computes h^1 only")))
        }
    };
    let (character, method): (SymLaurent, &str) = match args.method {
        CohMethod::Recursive => (CohomologyEngine::new().coh_char(q)?, "recursive"),
        CohMethod::Char2 => {
            closed_form_needs_h1("char2")?;
            if args.p != 2 {
                return Err(Error::Precondition(format!("char2 formula needs p = 2, got {}", args.p)).into());
            }
            (coh_char2_nonrecursive(args.n, args.d, args.e)?, "char2")
        }
        CohMethod::SmallWeights => {
            closed_form_needs_h1("small-weights")?;
            (coh_small_weights(args.n, args.p, args.d, args.e)?, "small-weights")
        }
    };
    let dimension = character.dimension();
    let mut result = to_value(&character);
    result["dimension"] = Value::Number(coefficient_to_json(&dimension));
    let table = format!(
        "h^{}(D^{} R({})) on P^{} in characteristic {} ({method})\ncharacter: {character}\ndimension: {dimension}\n",
        args.i,
        args.d,
        args.e,
        args.n - 1,
        args.p
    );
    Ok(Report {
        command: "coh",
        parameters: json!({"n": args.n, "p": args.p, "i": args.i, "d": args.d, "e": args.e, "method": method}),
        result,
        table,
        breach: false,
    })
}

#[derive(Args, Debug)]
pub struct PpartsArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, allow_negative_numbers = true)]
    d: i64,
    #[arg(long, allow_negative_numbers = true)]
    r: i64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Subcommand, Debug)]
pub enum PpartsCommand {
    /// Equivariant splitting type of F^d_r.
    Split(PpartsArgs),
    /// Characters of S/I(d,r), S/J(d,r) and J(d−1,r−1)/J(d,r).
    Ideals(PpartsArgs),
}

impl PpartsCommand {
    pub fn run(self) -> (Outcome, OutputArgs) {
        match self {
            PpartsCommand::Split(args) => (split(&args), args.out),
            PpartsCommand::Ideals(args) => (ideals(&args), args.out),
        }
    }
}

fn split(args: &PpartsArgs) -> Outcome {
    let s = split_fdr(args.p, args.d, args.r)?;
    s.check_invariants(args.d, args.r)?;
    let mut table = format!("F^{}_{} over F_{}: rank {}\n", args.d, args.r, args.p, s.count());
    writeln!(table, "{:>5} {:>5} {:>5} {:>5}", "u", "v", "i", "mult").unwrap();
    for x in s.iter() {
        writeln!(table, "{:>5} {:>5} {:>5} {:>5}", x.u, x.v, x.i, x.mult).unwrap();
    }
    Ok(Report {
        command: "pparts split",
        parameters: json!({"p": args.p, "d": args.d, "r": args.r}),
        result: to_value(&s),
        table,
        breach: false,
    })
}

fn ideals(args: &PpartsArgs) -> Outcome {
    let (b, c) = bc_char(args.p, args.d, args.r)?;
    let quotient = if args.r >= 1 { Some(quot_char(args.p, args.d, args.r)?) } else { None };
    let mut table = format!("d = {}, r = {} over F_{}\n", args.d, args.r, args.p);
    writeln!(table, "[S/I(d,r)]: {b}").unwrap();
    writeln!(table, "[S/J(d,r)]: {c}").unwrap();
    if let Some(q) = &quotient {
        writeln!(table, "[J(d-1,r-1)/J(d,r)]: {q}").unwrap();
    }
    Ok(Report {
        command: "pparts ideals",
        parameters: json!({"p": args.p, "d": args.d, "r": args.r}),
        result: json!({"b": to_value(&b), "c": to_value(&c), "quotient": quotient.as_ref().map(to_value)}),
        table,
        breach: false,
    })
}

#[derive(Args, Debug)]
pub struct HmProductArgs {
    #[arg(long)]
    p: u64,
    /// Comma-separated lengths ℓ_i of the factors δ_{ℓ_i}.
    #[arg(long, value_delimiter = ',', required = true)]
    lengths: Vec<i64>,
    /// Also test the prime-shift constraint (and the odd-summand law when p = 2).
    #[arg(long)]
    check_constraints: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Subcommand, Debug)]
pub enum HmCommand {
    /// Decompose δ_{ℓ_1} ⋯ δ_{ℓ_n}.
    Product(HmProductArgs),
}

impl HmCommand {
    pub fn run(self) -> (Outcome, OutputArgs) {
        match self {
            HmCommand::Product(args) => (product(&args), args.out),
        }
    }
}

fn summand_label(c: i64, j: i64) -> String {
    if j == 0 {
        format!("δ_{c}")
    } else {
        format!("δ_{c}(-{j})")
    }
}

fn product(args: &HmProductArgs) -> Outcome {
    let class: HmClass = hm_product(args.p, &args.lengths)?;
    let mut result = to_value(&class);
    let factors: Vec<String> = args.lengths.iter().map(|&l| format!("δ_{l}")).collect();
    let mut table = format!("{} over F_{}\n", factors.join(" · "), args.p);
    for s in class.iter() {
        let mult = if s.mult == 1 { String::new() } else { format!("{} × ", s.mult) };
        writeln!(table, "  {mult}{}", summand_label(s.c, s.j)).unwrap();
    }
    writeln!(table, "dim {}", class.dim()).unwrap();
    let mut breach = false;
    if args.check_constraints {
        let prime_shift = check_prime_shift_constraint(args.p, &args.lengths, &class)?;
        let mut constraints = json!({"prime_shift": prime_shift});
        writeln!(table, "prime-shift constraint: {}", if prime_shift { "holds" } else { "VIOLATED" }).unwrap();
        breach |= !prime_shift;
        if args.p == 2 && args.lengths.iter().all(|l| l % 2 == 1) {
            let (c, j) = odd_summand_char2(&args.lengths)?;
            let odd: Vec<_> = class.iter().filter(|s| s.c % 2 == 1).collect();
            let holds = odd.len() == 1 && odd[0].mult == 1 && (odd[0].c, odd[0].j) == (c, j);
            constraints["odd_summand"] = json!({"c": c, "j": j, "holds": holds});
            let verdict = if holds { "matches" } else { "MISMATCH" };
            writeln!(table, "odd summand {}: {verdict}", summand_label(c, j)).unwrap();
            breach |= !holds;
        }
        result["constraints"] = constraints;
    }
    Ok(Report {
        command: "hm product",
        parameters: json!({"p": args.p, "lengths": args.lengths, "check_constraints": args.check_constraints}),
        result,
        table,
        breach,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WlpMethodArg {
    Auto,
    Char2,
    Cohomology,
    Oracle,
}

#[derive(Args, Debug)]
pub struct WlpArgs {
    #[arg(long)]
    p: u64,
    /// Comma-separated ideal exponents e_i of k[T_1..T_n]/(T_i^{e_i}).
    #[arg(long, value_delimiter = ',', required = true)]
    exponents: Vec<i64>,
    #[arg(long, value_enum, default_value_t = WlpMethodArg::Auto)]
    method: WlpMethodArg,
    #[command(flatten)]
    pub out: OutputArgs,
}

pub fn wlp(args: &WlpArgs) -> Outcome {
    let (method, name) = match args.method {
        WlpMethodArg::Auto if args.p == 2 => (WlpMethod::Auto, "char2"),
        WlpMethodArg::Auto => (WlpMethod::Auto, "cohomology"),
        WlpMethodArg::Char2 => (WlpMethod::Char2, "char2"),
        WlpMethodArg::Cohomology => (WlpMethod::Cohomology, "cohomology"),
        WlpMethodArg::Oracle => (WlpMethod::Oracle, "oracle"),
    };
    let report = wlp_test(args.p, &args.exponents, method)?;
    let algebra = format!("k[T_1..T_{}]/(T_i^e), e = ({})", args.exponents.len(), join(&args.exponents));
    let verdict = match &report.witness {
        None => "holds".to_string(),
        Some(Witness::Q(q)) => format!("fails (θ_q sum too large at q = {q})"),
        Some(Witness::Monomial(a)) => format!("fails (z^({}) appears in the middle h^1)", join(a)),
        Some(Witness::Degree(e)) => format!("fails (×T drops rank out of degree {e})"),
    };
    Ok(Report {
        command: "wlp",
        parameters: json!({"p": args.p, "exponents": args.exponents, "method": name}),
        result: to_value(&report),
        table: format!("{algebra} in characteristic {} ({name}): WLP {verdict}\n", args.p),
        breach: false,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepArg {
    Coh,
    Pparts,
    Hm,
    Wlp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PresetArg {
    Quick,
    Full,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    target: SweepArg,
    #[arg(long, value_enum, default_value_t = PresetArg::Quick)]
    sweep: PresetArg,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    pub out: OutputArgs,
}

pub fn verify(args: &VerifyArgs) -> Outcome {
    let kind = match args.target {
        SweepArg::Coh => SweepKind::Coh,
        SweepArg::Pparts => SweepKind::Pparts,
        SweepArg::Hm => SweepKind::Hm,
        SweepArg::Wlp => SweepKind::Wlp,
    };
    let preset = match args.sweep {
        PresetArg::Quick => Preset::Quick,
        PresetArg::Full => Preset::Full,
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = args.jobs {
        pool = pool.num_threads(jobs);
    }
    let pool = pool.build().map_err(|err| Error::Precondition(format!("worker pool: {err}")))?;
    let report = pool.install(|| run_sweep(kind, preset));
    let result = to_value(&report);
    let name = |v: &Value| v.as_str().unwrap_or_default().to_string();
    let mut table = format!("verify {} ({}): {} cases\n", name(&result["sweep"]), name(&result["preset"]), report.cases);
    match &report.mismatch {
        None => table.push_str("all cases agree\n"),
        Some(m) => write!(table, "MISMATCH: {}\nreproduce: {}\n", m.detail, m.reproduce).unwrap(),
    }
    Ok(Report {
        command: "verify",
        parameters: json!({"target": result["sweep"], "sweep": result["preset"], "jobs": args.jobs}),
        breach: report.mismatch.is_some(),
        result,
        table,
    })
}
