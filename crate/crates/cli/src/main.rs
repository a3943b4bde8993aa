//! `tlsn`: expansions and verification suites for Temperley-Lieb algebras at
//! loop value 2.
//!
//! Exit status is 0 on success, 1 when a check fails (or a coefficient is not
//! `p`-integral) and 2 on a usage error. Data goes to stdout, progress to
//! stderr.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use tl_seminormal::combin::{collapse_map, p_class, p_classes, StdTableau};
use tl_seminormal::klr::{
    diamond_formula_check, diamond_tl_check, final_theorem_check, klr_relations_check, p_jones_wenzl_recursive_element,
};
use tl_seminormal::verify::{criterion, CRITERIA};
use tl_seminormal::wenzl::{jones_wenzl, p_jones_wenzl_direct, seminormal_idempotent, JwCache};
use tl_seminormal::{Error, Report, Ring, TLElement};

#[derive(Parser)]
#[command(name = "tlsn", version, about = "Exact Temperley-Lieb computations at loop value 2")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Disk cache for Jones-Wenzl projectors; TL_CACHE takes precedence.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Refuse sizes above this.
    #[arg(long, global = true, default_value_t = 12)]
    max_n: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingArg {
    #[value(name = "Q")]
    Q,
    #[value(name = "Zp")]
    Zp,
    #[value(name = "Fp")]
    Fp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Recursive,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// The Jones-Wenzl projector JW_n.
    Jw {
        #[arg(long)]
        n: usize,
    },
    /// The p-Jones-Wenzl projector.
    Pjw {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "Q")]
        ring: RingArg,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
    },
    /// The seminormal idempotent of a tableau given by its column sequence.
    Idempotent {
        #[arg(long)]
        tableau: String,
        #[arg(long, value_enum, default_value = "Q")]
        ring: RingArg,
        #[arg(long)]
        p: Option<u64>,
    },
    /// The p-classes of two-column tableaux with their residue sequences.
    Classes {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
    },
    /// The collapse map on the class of the one-column tableau.
    Collapse {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
    },
    /// Closed forms and TL relations of the diamond operators.
    DiamondCheck {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        p: u64,
    },
    /// The KLR relations on the seminormal basis.
    KlrCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
    },
    /// Every acceptance suite, capped at --max-n.
    VerifyAll,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::IntegralityViolation { .. } | Error::NotIntegral { .. } | Error::Io(_) | Error::DivisionByZero => {
                Failure::Check(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<bool, Failure>;

struct Env {
    json: bool,
    max_n: usize,
    cache: JwCache,
}

impl Env {
    fn check_n(&self, n: usize) -> std::result::Result<(), Failure> {
        if n > self.max_n {
            return Err(Failure::Usage(format!("n = {n} exceeds --max-n {}", self.max_n)));
        }
        Ok(())
    }

    fn print_element(&self, x: &TLElement) {
        if self.json {
            println!("{}", x.to_json_string());
        } else {
            println!("{x}");
        }
    }

    fn print_reports(&self, reports: &[Report]) -> bool {
        if self.json {
            println!("{}", serde_json::to_string_pretty(reports).expect("reports serialize"));
        } else {
            for r in reports {
                let status = if r.pass { "PASS" } else { "FAIL" };
                match &r.counterexample {
                    Some(c) => println!("{status} {} n={} p={} {c}", r.check, r.n, r.p),
                    None => println!("{status} {} n={} p={}", r.check, r.n, r.p),
                }
            }
        }
        reports.iter().all(|r| r.pass)
    }
}

fn ring_of(r: RingArg, p: Option<u64>) -> std::result::Result<Ring, Failure> {
    let name = match r {
        RingArg::Q => "Q",
        RingArg::Zp => "Zp",
        RingArg::Fp => "Fp",
    };
    Ok(Ring::parse(name, p)?)
}

fn pjw(env: &Env, n: usize, p: u64, ring: Ring, method: Method) -> Outcome {
    env.check_n(n)?;
    if method == Method::Both {
        eprintln!("comparing direct and recursive constructions at n = {n}, p = {p}");
        let reports = final_theorem_check(n, p, 9, &env.cache)?;
        if env.json {
            return Ok(env.print_reports(&reports));
        }
        let ok = reports.iter().all(|r| r.pass);
        if ok {
            println!("direct == recursive");
        } else {
            env.print_reports(&reports);
        }
        return Ok(ok);
    }
    let x = match method {
        Method::Direct => p_jones_wenzl_direct(n, p, &env.cache)?,
        _ => p_jones_wenzl_recursive_element(n, p, &env.cache)?,
    };
    env.print_element(&x.to_ring(ring)?);
    Ok(true)
}

fn classes(env: &Env, n: usize, p: u64) -> Outcome {
    env.check_n(n)?;
    let cls = p_classes(n, p)?;
    if env.json {
        let v: Vec<_> = cls.iter().map(|(r, ts)| json!({ "residues": r.residues, "tableaux": ts })).collect();
        println!("{}", serde_json::to_string_pretty(&v).expect("classes serialize"));
    } else {
        for (r, ts) in cls {
            let res: Vec<String> = r.residues.iter().map(ToString::to_string).collect();
            let tabs: Vec<String> = ts.iter().map(ToString::to_string).collect();
            println!("({}): {}", res.join(","), tabs.join(" "));
        }
    }
    Ok(true)
}

fn collapse(env: &Env, n: usize, p: u64) -> Outcome {
    env.check_n(n)?;
    if n < p as usize {
        return Err(Failure::Usage(format!("collapse needs n >= p, got n = {n}, p = {p}")));
    }
    let mut rows = Vec::new();
    for t in p_class(&StdTableau::one_column(n), p)? {
        let (s, tag) = collapse_map(&t, p)?;
        rows.push((t, s, tag));
    }
    if env.json {
        let v: Vec<_> = rows.iter().map(|(t, s, tag)| json!({ "tableau": t, "image": s, "tag": tag })).collect();
        println!("{}", serde_json::to_string_pretty(&v).expect("rows serialize"));
    } else {
        for (t, s, tag) in rows {
            match tag {
                Some(k) => println!("{t} -> ({s}, {k})"),
                None => println!("{t} -> {s}"),
            }
        }
    }
    Ok(true)
}

fn verify_all(env: &Env) -> Outcome {
    let mut all = Vec::new();
    let mut ok = true;
    for (k, name) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        eprintln!("criterion {} ({name}) ...", k + 1);
        let reports = criterion(k + 1, env.max_n, &env.cache)?;
        let pass = reports.iter().all(|r| r.pass);
        eprintln!("criterion {} ({name}): {} [{:.1?}]", k + 1, if pass { "PASS" } else { "FAIL" }, start.elapsed());
        if !env.json {
            let status = if pass { "PASS" } else { "FAIL" };
            println!("criterion {} ({name}): {status} [{} checks]", k + 1, reports.len());
            for r in reports.iter().filter(|r| !r.pass) {
                println!("  {}", serde_json::to_string(r).expect("report serializes"));
            }
        }
        ok &= pass;
        all.extend(reports);
    }
    if env.json {
        env.print_reports(&all);
    }
    Ok(ok)
}

fn run(cli: Cli) -> Outcome {
    let cache_path = std::env::var_os("TL_CACHE").map(PathBuf::from).or(cli.cache);
    let cache = match &cache_path {
        Some(path) => JwCache::open(path)?,
        None => JwCache::new(),
    };
    let env = Env { json: cli.json, max_n: cli.max_n, cache };
    let ok = match cli.cmd {
        Cmd::Jw { n } => {
            env.check_n(n)?;
            env.print_element(&jones_wenzl(n, &env.cache));
            true
        }
        Cmd::Pjw { n, p, ring, method } => pjw(&env, n, p, ring_of(ring, Some(p))?, method)?,
        Cmd::Idempotent { tableau, ring, p } => {
            let t = StdTableau::parse(&tableau)?;
            env.check_n(t.n())?;
            let ring = ring_of(ring, p)?;
            env.print_element(&seminormal_idempotent(&t, &env.cache).to_ring(ring)?);
            true
        }
        Cmd::Classes { n, p } => classes(&env, n, p)?,
        Cmd::Collapse { n, p } => collapse(&env, n, p)?,
        Cmd::DiamondCheck { n, p } => {
            env.check_n(n)?;
            eprintln!("diamond checks at n = {n}, p = {p}");
            let mut reports = diamond_formula_check(n, p)?;
            reports.push(diamond_tl_check(n, p)?);
            env.print_reports(&reports)
        }
        Cmd::KlrCheck { n, p } => {
            env.check_n(n)?;
            eprintln!("KLR relations at n = {n}, p = {p}");
            env.print_reports(&klr_relations_check(n, p)?)
        }
        Cmd::VerifyAll => verify_all(&env)?,
    };
    if cache_path.is_some() {
        env.cache.save()?;
    }
    Ok(ok)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `tlsn --help` for usage");
            ExitCode::from(2)
        }
    }
}
