//! `loopchain`: batch front end over the library.

use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use loopchain::algebra::{smith_homology, ChainComplex, Homology, Key, Ring, Truncation};
use loopchain::cobar::{h0_group_ring, Cobar, ExtendedCobar};
use loopchain::cubical::{self, cubical_chains, CubicalSet, StandardCube};
use loopchain::einfty::{chains, steenrod_odd, steenrod_sq, Cellular, Cub, OperationResult, Simp};
use loopchain::loopspace::{certify_phi, cubical_cobar_complex, CubicalCobar};
use loopchain::prop::PsiTable;
use loopchain::simplicial::{self, models, normalized_chains, Simplicial, SimplicialSet};
use loopchain::verify;

const OK: u8 = 0;
const INVARIANT_FAILURE: u8 = 2;
const INCONCLUSIVE: u8 = 3;
const INPUT_ERROR: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "loopchain", version, about = "Exact chain-level computations for loop spaces")]
struct Cli {
    #[command(flatten)]
    job: Job,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Job {
    /// Coefficients: z, q or fp:<p>.
    #[arg(long, global = true, default_value = "z", value_parser = parse_ring)]
    ring: Ring,
    /// Highest degree reported.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(0..=64))]
    max_degree: Option<u64>,
    /// Bound on word length (cobar) or group letters (extended cobar).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=64))]
    word_cutoff: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Cross-verify through φ where applicable.
    #[arg(long, global = true)]
    check: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Homology of a simplicial or cubical set.
    Homology { input: String },
    /// Homology of the cobar construction on chains of a reduced simplicial set.
    Cobar { input: String },
    /// H₀ of the extended cobar construction.
    CobarExt { input: String },
    /// Homology of the cubical cobar construction.
    Loop { input: String },
    /// Steenrod operation on cohomology, as its dual on homology.
    Steenrod {
        input: String,
        /// Sq^s for p = 2, P^s for odd p.
        #[arg(long, allow_negative_numbers = true)]
        s: i64,
        /// Cohomological degree the operation starts from.
        #[arg(long)]
        degree: usize,
        /// Apply the Bockstein (odd primes only).
        #[arg(long)]
        bockstein: bool,
        /// Index of the source class in the homology basis; all classes if absent.
        #[arg(long)]
        class: Option<usize>,
    },
    /// Run an invariant suite, or `all`.
    Verify { suite: String },
}

fn parse_ring(s: &str) -> Result<Ring, String> {
    s.parse::<Ring>().map_err(|e| e.to_string())
}

/// Result of one job: a JSON document, its text rendering and an exit code.
struct Outcome {
    json: Value,
    text: String,
    code: u8,
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

enum Space {
    Simplicial(SimplicialSet),
    Cubical(CubicalSet),
    Cube(StandardCube),
}

fn load(input: &str) -> Result<Space, InputError> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        let v: Value = serde_json::from_str(&text)
            .map_err(|e| InputError(format!("{input}: line {}, column {}: {e}", e.line(), e.column())))?;
        let cubical = v.get("kind").and_then(Value::as_str) == Some("cubical")
            || v.get("faces").and_then(Value::as_object).is_some_and(|f| {
                f.values().any(|list| list.get(0).and_then(|p| p.get(0)).is_some_and(Value::is_array))
            });
        return if cubical {
            Ok(Space::Cubical(cubical::json::from_json(&v).map_err(|e| InputError(format!("{input}: {e}")))?))
        } else {
            Ok(Space::Simplicial(simplicial::json::from_json(&v).map_err(|e| InputError(format!("{input}: {e}")))?))
        };
    }
    if let Some(n) = input.strip_prefix("cube:") {
        let n: usize = n.parse().map_err(|_| InputError(format!("bad cube dimension in '{input}'")))?;
        if n > 8 {
            return Err(InputError(format!("cube:{n} is too large")));
        }
        return Ok(Space::Cube(StandardCube::new(n)));
    }
    Ok(Space::Simplicial(models::model(input).map_err(|e| InputError(format!("{e} (and no such file)")))?))
}

fn simplicial_input(input: &str) -> Result<SimplicialSet, InputError> {
    match load(input)? {
        Space::Simplicial(x) => Ok(x),
        _ => Err(InputError("this command needs a simplicial set".into())),
    }
}

fn truncation_json(t: &Truncation) -> Value {
    json!({
        "max_degree": t.max_degree,
        "word_cutoff": t.word_cutoff,
        "complete_above": t.complete_above,
        "exact": t.exact,
    })
}

fn homology_json(h: &Homology) -> Value {
    json!({ "rank": h.rank, "torsion": h.torsion })
}

/// H_0..=H_max of a complex built through degree max+1.
fn table<K: Key>(c: &ChainComplex<K>, max: usize, ring: Ring) -> Result<Vec<Homology>, InputError> {
    (0..=max).map(|n| smith_homology(c, n as i64, ring).map_err(InputError::from)).collect()
}

fn render_table(title: &str, rows: &[Homology], ring: Ring, t: &Truncation) -> String {
    let mut s = format!("{title} over {ring}");
    if let Some(l) = t.word_cutoff {
        let _ = write!(s, ", word cutoff {l}");
    }
    if !t.exact {
        s.push_str(" (truncated quotient, inconclusive)");
    }
    s.push('\n');
    for (n, h) in rows.iter().enumerate() {
        let _ = writeln!(s, "  H_{n} = {}", group_text(h, ring));
    }
    s
}

fn group_text(h: &Homology, ring: Ring) -> String {
    let base = match ring {
        Ring::Integers => return h.to_string(),
        Ring::Rationals => "Q".to_string(),
        Ring::PrimeField { p } => format!("F_{p}"),
    };
    match h.rank {
        0 => "0".into(),
        1 => base,
        r => format!("{base}^{r}"),
    }
}

fn cmd_homology(job: &Job, input: &str) -> Result<Outcome, InputError> {
    fn run<K: Key>(c: &ChainComplex<K>, max: usize, ring: Ring, input: &str) -> Result<Outcome, InputError> {
        let rows = table(c, max, ring)?;
        let t = c.truncation().clone();
        let t = Truncation { max_degree: max as i64, ..t };
        Ok(Outcome {
            json: json!({
                "command": "homology",
                "input": input,
                "ring": ring.to_string(),
                "truncation": truncation_json(&t),
                "homology": rows.iter().map(homology_json).collect::<Vec<_>>(),
            }),
            text: render_table(&format!("homology of {input}"), &rows, ring, &t),
            code: OK,
        })
    }
    let space = load(input)?;
    let top = match &space {
        Space::Simplicial(x) => x.top_dim(),
        Space::Cubical(y) => cubical::Cubical::top_dim(y),
        Space::Cube(y) => Some(y.n),
    }
    .unwrap_or(0);
    let max = job.max_degree.map_or(top, |m| m as usize);
    match &space {
        Space::Simplicial(x) => run(&normalized_chains(x, max + 1), max, job.ring, input),
        Space::Cubical(y) => run(&cubical_chains(y, max + 1), max, job.ring, input),
        Space::Cube(y) => run(&cubical_chains(y, max + 1), max, job.ring, input),
    }
}

struct Tables {
    rows: Vec<Homology>,
    truncation: Truncation,
}

fn cobar_cutoff(job: &Job, needs: bool) -> Result<Option<usize>, InputError> {
    match (needs, job.word_cutoff) {
        (true, None) => Err(InputError("the space has 1-cells, so --word-cutoff is required".into())),
        (true, Some(l)) => Ok(Some(l as usize)),
        (false, _) => Ok(None),
    }
}

fn cobar_tables(job: &Job, x: &SimplicialSet, max: usize) -> Result<Tables, InputError> {
    let cobar = Cobar::new(x.clone())?;
    let cut = cobar_cutoff(job, cobar.needs_cutoff())?;
    let c = cobar.complex(max + 1, cut)?;
    let truncation = Truncation { max_degree: max as i64, ..c.truncation().clone() };
    Ok(Tables { rows: table(&c, max, job.ring)?, truncation })
}

fn loop_tables(job: &Job, x: &SimplicialSet, max: usize) -> Result<Tables, InputError> {
    let probe = Cobar::new(x.clone())?;
    let cut = cobar_cutoff(job, probe.needs_cutoff())?;
    let cc = CubicalCobar::new(x.clone(), cut);
    let c = cubical_cobar_complex(&cc, max + 1);
    let truncation = Truncation { max_degree: max as i64, ..c.truncation().clone() };
    Ok(Tables { rows: table(&c, max, job.ring)?, truncation })
}

/// The φ certificate and the table comparison behind `--check`.
fn cross_check(job: &Job, x: &SimplicialSet, max: usize, here: &Tables, other: &Tables) -> Result<(Value, bool), InputError> {
    let cut = cobar_cutoff(job, Cobar::new(x.clone())?.needs_cutoff())?;
    let cert = certify_phi(x, max, cut)?;
    let agree = here.rows == other.rows;
    let ok = cert.passed() && agree;
    Ok((
        json!({
            "phi_certified": cert.passed(),
            "phi_failures": cert.failures,
            "tables_agree": agree,
            "other_side": other.rows.iter().map(homology_json).collect::<Vec<_>>(),
        }),
        ok,
    ))
}

fn cmd_cobar_like(job: &Job, input: &str, cubical_side: bool) -> Result<Outcome, InputError> {
    let x = simplicial_input(input)?;
    let max = job.max_degree.map_or(5, |m| m as usize);
    let (name, here) = if cubical_side {
        ("loop", loop_tables(job, &x, max)?)
    } else {
        ("cobar", cobar_tables(job, &x, max)?)
    };
    let mut code = if here.truncation.exact { OK } else { INCONCLUSIVE };
    let mut doc = json!({
        "command": name,
        "input": input,
        "ring": job.ring.to_string(),
        "truncation": truncation_json(&here.truncation),
        "homology": here.rows.iter().map(homology_json).collect::<Vec<_>>(),
    });
    let title = if cubical_side { "cubical cobar homology of " } else { "cobar homology of " };
    let mut text = render_table(&format!("{title}{input}"), &here.rows, job.ring, &here.truncation);
    if job.check {
        let other = if cubical_side { cobar_tables(job, &x, max)? } else { loop_tables(job, &x, max)? };
        let (report, ok) = cross_check(job, &x, max, &here, &other)?;
        let _ = writeln!(
            text,
            "check via φ: {} (certificate {}, tables {})",
            if ok { "pass" } else { "FAIL" },
            if report["phi_certified"] == json!(true) { "ok" } else { "failed" },
            if report["tables_agree"] == json!(true) { "agree" } else { "differ" }
        );
        doc["check"] = report;
        if !ok {
            code = INVARIANT_FAILURE;
        }
    }
    Ok(Outcome { json: doc, text, code })
}

fn cmd_cobar_ext(job: &Job, input: &str) -> Result<Outcome, InputError> {
    if matches!(job.ring, Ring::PrimeField { .. }) {
        return Err(InputError("cobar-ext computes ranks over z or q only".into()));
    }
    let x = simplicial_input(input)?;
    let cutoff = job.word_cutoff.map_or(3, |l| l as usize);
    let ext = ExtendedCobar::new(x)?;
    let cert = h0_group_ring(&ext, cutoff);
    let code = if cert.conclusive { OK } else { INCONCLUSIVE };
    let presentation = json!({
        "generators": cert.presentation.generators.len(),
        "relators": cert.presentation.relators.len(),
    });
    let json = json!({
        "command": "cobar-ext",
        "input": input,
        "ring": job.ring.to_string(),
        "truncation": { "max_degree": 0, "word_cutoff": cutoff, "exact": cert.conclusive },
        "h0": {
            "rank": cert.rank,
            "ball": cert.ball,
            "relation_rank": cert.relation_rank,
            "group": cert.group.to_string(),
            "expected": cert.expected.map(|e| e.to_string()),
            "conclusive": cert.conclusive,
        },
        "presentation": presentation,
    });
    let mut text = format!("extended cobar H_0 of {input} over {}, cutoff {cutoff}\n", job.ring);
    let _ = writeln!(text, "  fundamental group: {}", cert.group);
    let _ = writeln!(text, "  rank H_0 = {} ({} words, {} independent relations)", cert.rank, cert.ball, cert.relation_rank);
    let _ = writeln!(text, "  {}", if cert.conclusive { "conclusive" } else { "inconclusive at this cutoff" });
    Ok(Outcome { json, text, code })
}

fn cmd_steenrod(
    job: &Job,
    input: &str,
    s: i64,
    degree: usize,
    bockstein: bool,
    class: Option<usize>,
) -> Result<Outcome, InputError> {
    let p = match job.ring {
        Ring::PrimeField { p } => p,
        // the default ring is z; Steenrod operations default to F₂
        Ring::Integers => 2,
        Ring::Rationals => return Err(InputError("Steenrod operations need --ring fp:<p>".into())),
    };
    if p == 2 && bockstein {
        return Err(InputError("--bockstein is for odd primes; use Sq^1 at p = 2".into()));
    }
    let eps = i64::from(bockstein);
    // the homological degree of the classes the dual operation starts from
    let shift = if p == 2 { s } else { 2 * s * (p as i64 - 1) + eps };
    let source = degree as i64 + shift;
    if source < 0 {
        return Err(InputError(format!("no classes in degree {source}")));
    }
    let source = source as usize;
    // index of the lift ψ(e_i) the formula evaluates
    let lift = if p == 2 { degree as i64 - s } else { (degree as i64 - 2 * s) * (p as i64 - 1) - eps };
    let lift = lift.max(0) as usize;
    fn run<X: Cellular + Clone + Send + Sync + 'static>(
        x: &X,
        (p, eps, s): (u64, i64, i64),
        source: usize,
        lift: usize,
        class: Option<usize>,
    ) -> Result<(Vec<(usize, OperationResult)>, usize), InputError> {
        let complex = chains(x, source + 1);
        let basis = loopchain::algebra::fp_homology_basis(&complex, source as i64, p)?;
        let picks: Vec<usize> = match class {
            Some(c) if c < basis.rank() => vec![c],
            Some(c) => return Err(InputError(format!("class {c} out of range: H_{source} has rank {}", basis.rank()))),
            None => (0..basis.rank()).collect(),
        };
        let mut out = Vec::new();
        for c in picks {
            let mu = &basis.reps[c];
            let table = PsiTable::new(p as usize, x.kind(), source, lift);
            let r = if p == 2 {
                steenrod_sq(x, &complex, &table, -s, mu)?
            } else {
                steenrod_odd(x, &complex, &table, eps, -s, mu)?
            };
            out.push((c, r));
        }
        Ok((out, basis.rank()))
    }
    let (results, rank) = match load(input)? {
        Space::Simplicial(x) => run(&Simp(x), (p, eps, s), source, lift, class)?,
        Space::Cubical(y) => run(&Cub(y), (p, eps, s), source, lift, class)?,
        Space::Cube(y) => run(&Cub(y), (p, eps, s), source, lift, class)?,
    };
    let nonzero = results.iter().any(|(_, r)| r.coordinates.iter().any(|&c| c != 0));
    let name = match (p, bockstein) {
        (2, _) => format!("Sq^{s}"),
        (_, false) => format!("P^{s}"),
        (_, true) => format!("βP^{s}"),
    };
    let target = degree as i64 + if p == 2 { s } else { 2 * s * (p as i64 - 1) + eps };
    let json = json!({
        "command": "steenrod",
        "input": input,
        "ring": format!("fp:{p}"),
        "truncation": { "max_degree": source + 1, "word_cutoff": null, "exact": true },
        "operation": name,
        "from_degree": degree,
        "to_degree": target,
        "homology_degree": source,
        "homology_rank": rank,
        "classes": results.iter().map(|(c, r)| json!({
            "class": c,
            "lift_index": r.lift_index,
            "coordinates": r.coordinates,
        })).collect::<Vec<_>>(),
        "nonzero": nonzero,
    });
    let mut text = format!("{name}: H^{degree} → H^{target} of {input} over F_{p}\n");
    for (c, r) in &results {
        let _ = writeln!(text, "  dual of class {c} in H_{source}: coordinates {:?} in H_{degree}", r.coordinates);
    }
    let _ = writeln!(text, "  {}", if nonzero { "nonzero" } else { "zero" });
    Ok(Outcome { json, text, code: OK })
}

fn cmd_verify(suite: &str) -> Result<Outcome, InputError> {
    let names: Vec<&str> = if suite == "all" { verify::SUITES.to_vec() } else { vec![suite] };
    let mut reports = Vec::new();
    for n in names {
        let r = verify::run_suite(n)
            .ok_or_else(|| InputError(format!("unknown suite '{n}'; known: all, {}", verify::SUITES.join(", "))))?;
        reports.push(r);
    }
    let passed = reports.iter().all(verify::SuiteReport::passed);
    let mut text = String::new();
    for r in &reports {
        let _ = writeln!(text, "{}: {} ({} checks)", r.suite, if r.passed() { "pass" } else { "FAIL" }, r.checks);
        for note in &r.notes {
            let _ = writeln!(text, "  {note}");
        }
        for f in &r.failures {
            let _ = writeln!(text, "  counterexample: {f}");
        }
        if r.unlisted > 0 {
            let _ = writeln!(text, "  … and {} more", r.unlisted);
        }
    }
    let json = json!({
        "command": "verify",
        "suite": suite,
        "passed": passed,
        "reports": reports,
    });
    Ok(Outcome { json, text, code: if passed { OK } else { INVARIANT_FAILURE } })
}

fn run(cli: &Cli) -> Result<Outcome, InputError> {
    let job = &cli.job;
    match &cli.command {
        Command::Homology { input } => cmd_homology(job, input),
        Command::Cobar { input } => cmd_cobar_like(job, input, false),
        Command::Loop { input } => cmd_cobar_like(job, input, true),
        Command::CobarExt { input } => cmd_cobar_ext(job, input),
        Command::Steenrod { input, s, degree, bockstein, class } => {
            cmd_steenrod(job, input, *s, *degree, *bockstein, *class)
        }
        Command::Verify { suite } => cmd_verify(suite),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { INPUT_ERROR } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            match cli.job.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
                Format::Text => print!("{}", out.text),
            }
            ExitCode::from(out.code)
        }
        Err(InputError(msg)) => {
            match cli.job.format {
                Format::Json => println!("{}", json!({ "error": msg, "exit_code": INPUT_ERROR })),
                Format::Text => eprintln!("error: {msg}"),
            }
            ExitCode::from(INPUT_ERROR)
        }
    }
}
