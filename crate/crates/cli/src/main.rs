use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use nucleon::algebra::{AlgebraFile, Elem};
use nucleon::nucleus::{self, is_term_nucleus, term_map, NucleusMap};
use nucleon::term::{check_identity, eval, parse_term_or_name, Carrier, Env, Term, DEFAULT_WINDOW};
use nucleon::variety::{classify, compute_flags, verify_classification, VarietyDescriptor};
use nucleon::{ChainDescriptor, FiniteResiduatedLattice};

mod render;

#[derive(Parser)]
#[command(name = "nucleon", version, about = "Residuated lattices, BL-chains and their nuclei")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    table: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the residuated lattice axioms of an algebra file.
    Validate {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Report BL / MV / Heyting / chain flags.
    ClassifyAlgebra {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// List every nucleus of a finite algebra.
    EnumNuclei {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Evaluate a term under an assignment.
    Eval {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        term: String,
        #[command(flatten)]
        bind: Bindings,
    },
    /// Search for a counterexample to `left = right`.
    CheckIdentity {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: u64,
    },
    /// Decide whether a unary term defines a nucleus.
    CheckNucleus {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        term: String,
        #[command(flatten)]
        bind: Bindings,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: u64,
    },
    /// Build the nuclear image of a nucleus.
    Image {
        #[arg(long)]
        algebra: PathBuf,
        #[command(flatten)]
        map: MapArgs,
        /// Also write the image algebra to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the relative Glivenko property and the quotient isomorphism.
    Glivenko {
        #[arg(long)]
        algebra: PathBuf,
        #[command(flatten)]
        map: MapArgs,
    },
    /// Flags and nucleus-term catalog of a variety of BL-algebras.
    ClassifyVariety {
        #[command(flatten)]
        variety: VarietyArgs,
    },
    /// Classify, then check every catalog claim on the generators.
    VerifyVariety {
        #[command(flatten)]
        variety: VarietyArgs,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: u64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Target {
    /// Algebra JSON file.
    #[arg(long)]
    algebra: Option<PathBuf>,
    /// BL-chain descriptor, e.g. "S1 + S2 + Sw".
    #[arg(long)]
    chain: Option<String>,
}

#[derive(Args)]
struct Bindings {
    /// Variable binding NAME=ELEMENT; repeatable.
    #[arg(long = "set", value_name = "NAME=ELEMENT")]
    set: Vec<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct MapArgs {
    /// Unary term or catalog name such as s(2).
    #[arg(long)]
    term: Option<String>,
    /// Explicit value vector, comma separated.
    #[arg(long, value_delimiter = ',')]
    values: Option<Vec<Elem>>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct VarietyArgs {
    /// Generator chain descriptor; repeatable.
    #[arg(long = "gen")]
    gens: Vec<String>,
    /// JSON file with a `generators` list.
    #[arg(long)]
    variety: Option<PathBuf>,
}

/// Result of a command: payload plus exit code.
struct Outcome {
    body: Value,
    negative: bool,
}

impl Outcome {
    fn ok(body: impl Serialize) -> Result<Self, String> {
        Self::new(body, false)
    }

    fn new(body: impl Serialize, negative: bool) -> Result<Self, String> {
        let body = serde_json::to_value(body).map_err(|e| e.to_string())?;
        Ok(Outcome { body, negative })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(out) => {
            let text = if cli.table {
                render::table(&out.body)
            } else {
                serde_json::to_string_pretty(&out.body).expect("json values print")
            };
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{text}");
            ExitCode::from(if out.negative { 1 } else { 0 })
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<Outcome, String> {
    match cmd {
        Cmd::Validate { algebra } => {
            let a = read_algebra(&algebra)?;
            let report = a.validate_axioms();
            let valid = report.is_valid();
            Outcome::new(json!({ "valid": valid, "failures": report.failures }), !valid)
        }
        Cmd::ClassifyAlgebra { algebra } => Outcome::ok(load_valid(&algebra)?.classify()),
        Cmd::EnumNuclei { algebra } => {
            let a = load_valid(&algebra)?;
            let all = nucleus::enumerate_nuclei(&a).map_err(|e| e.to_string())?;
            Outcome::ok(all.iter().map(|g| nucleus::report(&a, g)).collect::<Vec<_>>())
        }
        Cmd::Eval { target, term, bind } => {
            let t = parse_term(&term)?;
            with_target(&target, |c| c.eval(&t, &bind))
        }
        Cmd::CheckIdentity { target, left, right, window } => {
            let (l, r) = (parse_term(&left)?, parse_term(&right)?);
            with_target(&target, |c| c.identity(&l, &r, window))
        }
        Cmd::CheckNucleus { target, term, bind, window } => {
            let t = parse_term(&term)?;
            with_target(&target, |c| c.nucleus(&t, &bind, window))
        }
        Cmd::Image { algebra, map, out } => {
            let a = load_valid(&algebra)?;
            let g = match build_map(&a, &map)? {
                Ok(g) => g,
                Err(v) => return Outcome::new(json!({ "nucleus": false, "violation": v }), true),
            };
            let img = nucleus::nuclear_image(&a, &g);
            let file = AlgebraFile::from(&img.algebra);
            if let Some(path) = out {
                fs::write(&path, img.algebra.to_json())
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            Outcome::ok(json!({
                "values": g.values(),
                "inclusion": img.inclusion,
                "gamma_bot": img.gamma_bot,
                "dense": nucleus::dense_filter(&a, &g).members,
                "algebra": file,
            }))
        }
        Cmd::Glivenko { algebra, map } => {
            let a = load_valid(&algebra)?;
            let g = match build_map(&a, &map)? {
                Ok(g) => g,
                Err(v) => return Outcome::new(json!({ "nucleus": false, "violation": v }), true),
            };
            let report = nucleus::glivenko_check(&a, &g);
            let negative = !report.holds;
            Outcome::new(report, negative)
        }
        Cmd::ClassifyVariety { variety } => {
            let v = load_variety(&variety)?;
            let flags = compute_flags(&v);
            let catalog = classify(&v);
            let generators: Vec<String> = v.generators().iter().map(|d| d.to_string()).collect();
            Outcome::ok(json!({ "variety": generators, "flags": flags, "catalog": catalog }))
        }
        Cmd::VerifyVariety { variety, window } => {
            let v = load_variety(&variety)?;
            let report = verify_classification(&v, window).map_err(|e| e.to_string())?;
            let negative = report.failures().next().is_some();
            Outcome::new(report, negative)
        }
    }
}

fn parse_term(src: &str) -> Result<Term, String> {
    parse_term_or_name(src).map_err(|e| format!("term `{src}`: {e}"))
}

fn read_algebra(path: &Path) -> Result<FiniteResiduatedLattice, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    FiniteResiduatedLattice::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Loads an algebra and refuses one that breaks an axiom.
fn load_valid(path: &Path) -> Result<FiniteResiduatedLattice, String> {
    let a = read_algebra(path)?;
    let report = a.validate_axioms();
    if !report.is_valid() {
        return Err(format!("{} is not a residuated lattice: {report}", path.display()));
    }
    Ok(a)
}

fn load_variety(args: &VarietyArgs) -> Result<VarietyDescriptor, String> {
    match &args.variety {
        Some(path) => {
            let text =
                fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            VarietyDescriptor::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => VarietyDescriptor::parse_generators(&args.gens).map_err(|e| e.to_string()),
    }
}

/// Carriers the element-level commands accept, with their element syntax.
trait ElementSyntax: Carrier {
    fn parse_elem(&self, s: &str) -> Result<Self::Elem, String>;
}

impl ElementSyntax for FiniteResiduatedLattice {
    fn parse_elem(&self, s: &str) -> Result<Elem, String> {
        let i = match s {
            "bot" => self.bot(),
            "top" => self.top(),
            _ => s.parse().map_err(|_| format!("`{s}` is not an element index"))?,
        };
        if i >= self.size() {
            return Err(format!("element {i} out of range 0..{}", self.size()));
        }
        Ok(i)
    }
}

impl ElementSyntax for ChainDescriptor {
    fn parse_elem(&self, s: &str) -> Result<Self::Elem, String> {
        self.parse_element(s).map_err(|e| e.to_string())
    }
}

fn with_target(
    target: &Target,
    f: impl Fn(&dyn ElementCommands) -> Result<Outcome, String>,
) -> Result<Outcome, String> {
    match (&target.algebra, &target.chain) {
        (Some(path), _) => f(&load_valid(path)?),
        (None, Some(desc)) => {
            let d: ChainDescriptor = desc.parse().map_err(|e| format!("chain `{desc}`: {e}"))?;
            f(&d)
        }
        (None, None) => Err("one of --algebra or --chain is required".into()),
    }
}

/// Object-safe view of the three element-level commands.
trait ElementCommands {
    fn eval(&self, t: &Term, bind: &Bindings) -> Result<Outcome, String>;
    fn identity(&self, l: &Term, r: &Term, window: u64) -> Result<Outcome, String>;
    fn nucleus(&self, t: &Term, bind: &Bindings, window: u64) -> Result<Outcome, String>;
}

impl<C: ElementSyntax> ElementCommands for C {
    fn eval(&self, t: &Term, bind: &Bindings) -> Result<Outcome, String> {
        let env = bindings(self, bind)?;
        let v = eval(t, self, &env).map_err(|e| e.to_string())?;
        Outcome::ok(json!({ "term": t.to_string(), "env": env, "value": v }))
    }

    fn identity(&self, l: &Term, r: &Term, window: u64) -> Result<Outcome, String> {
        let out = check_identity(self, l, r, window).map_err(|e| e.to_string())?;
        let negative = !out.holds();
        let mut body = serde_json::to_value(out).map_err(|e| e.to_string())?;
        body["left_term"] = json!(l.to_string());
        body["right_term"] = json!(r.to_string());
        if !self.is_finite() {
            body["window"] = json!(window);
        }
        Outcome::new(body, negative)
    }

    fn nucleus(&self, t: &Term, bind: &Bindings, window: u64) -> Result<Outcome, String> {
        let env = bindings(self, bind)?;
        let out = is_term_nucleus(self, t, window, &env).map_err(|e| e.to_string())?;
        let negative = !out.is_nucleus();
        let mut body = serde_json::to_value(out).map_err(|e| e.to_string())?;
        body["term"] = json!(t.to_string());
        if !self.is_finite() {
            body["window"] = json!(window);
        }
        Outcome::new(body, negative)
    }
}

fn bindings<C: ElementSyntax>(c: &C, bind: &Bindings) -> Result<Env<C::Elem>, String> {
    let mut env = Env::new();
    for item in &bind.set {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| format!("binding `{item}` is not NAME=ELEMENT"))?;
        env.insert(name.trim().to_string(), c.parse_elem(value.trim())?);
    }
    Ok(env)
}

/// A nucleus from `--term` or `--values`; the inner error is a violated law.
fn build_map(
    a: &FiniteResiduatedLattice,
    map: &MapArgs,
) -> Result<Result<NucleusMap, nucleus::Violation>, String> {
    let values = match (&map.term, &map.values) {
        (Some(src), _) => {
            let t = parse_term(src)?;
            term_map(a, &t, &Env::new()).map_err(|e| e.to_string())?
        }
        (None, Some(v)) => v.clone(),
        (None, None) => return Err("one of --term or --values is required".into()),
    };
    Ok(NucleusMap::verify(a, values))
}
