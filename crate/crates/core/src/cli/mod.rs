//! The `koszul` command line front end.
//!
//! Every command prints one canonical JSON document on standard output.
//! Exit codes: 0 pass, 1 mathematical failure, 2 input or schema error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::barcobar::{adjoint_left, adjoint_right, bar, check_factorization, cobar, from_left, from_right};
use crate::doc::{from_json, to_canonical_json, CoproperadDoc, LaxDoc, PropMorphismDoc, ProperadDoc, TwistingDoc};
use crate::fixtures::catalog;
use crate::graphcalc::TruncationPolicy;
use crate::structures::{check_curved_coproperad, check_lax, check_twisting, convolution, CheckReport, TwistingMorphism};
use crate::Error;

pub mod selftest;

#[derive(Parser, Debug)]
#[command(name = "koszul", version, about = "Exact curved Koszul duality for (co)properads")]
pub struct Cli {
    #[command(flatten)]
    pub window: Window,
    #[command(subcommand)]
    pub command: Command,
}

/// Truncation window overrides; unset fields keep the document's values.
#[derive(Args, Debug, Clone, Copy, Default)]
pub struct Window {
    /// Largest total weight of a checked graph.
    #[arg(long, global = true)]
    pub max_weight: Option<usize>,
    /// Largest number of inputs of a checked graph.
    #[arg(long = "max-in", global = true)]
    pub max_in: Option<usize>,
    /// Largest number of outputs of a checked graph.
    #[arg(long = "max-out", global = true)]
    pub max_out: Option<usize>,
    /// Seed for the random fixtures.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

impl Window {
    pub fn apply(&self, mut p: TruncationPolicy) -> TruncationPolicy {
        if let Some(w) = self.max_weight {
            p.max_weight = w;
        }
        if let Some(i) = self.max_in {
            p.max_inputs = i;
        }
        if let Some(o) = self.max_out {
            p.max_outputs = o;
        }
        p
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the curved coproperad axioms of a coproperad document.
    CheckCurved {
        file: PathBuf,
        /// Use the pre-correction sign in the coassociativity axiom. Intentionally wrong.
        #[arg(long)]
        old_sign: bool,
    },
    /// Check the lax morphism axioms of a lax morphism document.
    CheckLax { file: PathBuf },
    /// Check the curved Maurer-Cartan equation of a twisting morphism document.
    CheckTw { file: PathBuf },
    /// Bar construction of a properad document.
    Bar { file: PathBuf },
    /// Cobar construction of a coproperad document.
    Cobar { file: PathBuf },
    /// The dg morphism out of the cobar construction classifying a twisting morphism.
    AdjointLeft { file: PathBuf },
    /// The lax morphism into the bar construction classifying a twisting morphism.
    AdjointRight { file: PathBuf },
    /// The twisting morphism of a dg morphism out of a cobar construction.
    FromLeft {
        morphism: PathBuf,
        /// The coproperad whose cobar construction is the morphism's source.
        coproperad: PathBuf,
    },
    /// The twisting morphism of a lax morphism into a bar construction.
    FromRight {
        lax: PathBuf,
        /// The properad whose bar construction is the lax morphism's target.
        properad: PathBuf,
    },
    /// Check both factorizations of a twisting morphism.
    Factorize { file: PathBuf },
    /// List or dump the built-in fixtures.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
    /// Run the built-in battery of positive and negative checks.
    Selftest,
}

#[derive(Subcommand, Debug)]
pub enum FixturesAction {
    List,
    Dump { name: String },
}

/// Result of one command: exit code and the JSON printed on standard output.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub output: Value,
}

impl Outcome {
    fn report(r: &CheckReport) -> Self {
        Outcome { code: if r.passed() { 0 } else { 1 }, output: value(r) }
    }

    fn object(v: Value) -> Self {
        Outcome { code: 0, output: v }
    }

    fn error(e: &Error) -> Self {
        let output = match e {
            Error::Schema { path, message } => json!({"error": "schema", "path": path, "message": message}),
            Error::Argument(m) => json!({"error": "argument", "message": m}),
            Error::Structure(m) => json!({"error": "structure", "message": m}),
            Error::Mode(m) => json!({"error": "mode", "message": m}),
        };
        Outcome { code: 2, output }
    }
}

fn value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("documents serialize")
}

fn load<T: DeserializeOwned>(path: &Path) -> Result<T, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Argument(format!("cannot read {}: {e}", path.display())))?;
    from_json(&text)
}

fn load_coproperad(path: &Path, w: &Window) -> Result<Arc<crate::structures::CurvedCoproperad>, Error> {
    let mut d: CoproperadDoc = load(path)?;
    d.policy = w.apply(d.policy);
    Ok(Arc::new(d.build()?))
}

fn load_twisting(path: &Path, w: &Window) -> Result<TwistingMorphism, Error> {
    let mut d: TwistingDoc = load(path)?;
    d.coproperad.policy = w.apply(d.coproperad.policy);
    d.build()
}

/// Fails with exit 1 unless `alpha` satisfies the Maurer-Cartan equation.
fn require_twisting(alpha: &TwistingMorphism) -> Result<Option<Outcome>, Error> {
    let r = check_twisting(&convolution(alpha.c.clone(), alpha.p.clone()), &alpha.alpha)?;
    Ok(if r.passed() { None } else { Some(Outcome::report(&r)) })
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(o) => o,
        Err(e) => Outcome::error(&e),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Error> {
    let w = &cli.window;
    Ok(match &cli.command {
        Command::CheckCurved { file, old_sign } => {
            let c = load_coproperad(file, w)?;
            Outcome::report(&check_curved_coproperad(&c, *old_sign))
        }
        Command::CheckLax { file } => {
            let mut d: LaxDoc = load(file)?;
            d.source.policy = w.apply(d.source.policy);
            d.target.policy = w.apply(d.target.policy);
            Outcome::report(&check_lax(&d.build()?))
        }
        Command::CheckTw { file } => {
            let t = load_twisting(file, w)?;
            Outcome::report(&check_twisting(&convolution(t.c.clone(), t.p.clone()), &t.alpha)?)
        }
        Command::Bar { file } => {
            let d: ProperadDoc = load(file)?;
            let policy = w.apply(d.policy);
            let p = Arc::new(d.build()?);
            Outcome::object(value(&CoproperadDoc::from(&bar(&p, policy))))
        }
        Command::Cobar { file } => {
            let c = load_coproperad(file, w)?;
            Outcome::object(value(&ProperadDoc::from(&cobar(&c, c.policy))))
        }
        Command::AdjointLeft { file } => {
            let t = load_twisting(file, w)?;
            if let Some(o) = require_twisting(&t)? {
                return Ok(o);
            }
            let oc = Arc::new(cobar(&t.c, t.c.policy));
            Outcome::object(value(&PropMorphismDoc::from(&adjoint_left(&t, &oc)?)))
        }
        Command::AdjointRight { file } => {
            let t = load_twisting(file, w)?;
            if let Some(o) = require_twisting(&t)? {
                return Ok(o);
            }
            let bp = Arc::new(bar(&t.p, t.c.policy));
            Outcome::object(value(&LaxDoc::from(&adjoint_right(&t, &bp)?)))
        }
        Command::FromLeft { morphism, coproperad } => {
            let f = load::<PropMorphismDoc>(morphism)?.build()?;
            let c = load_coproperad(coproperad, w)?;
            Outcome::object(value(&TwistingDoc::from(&from_left(&f, &c)?)))
        }
        Command::FromRight { lax, properad } => {
            let l = load::<LaxDoc>(lax)?.build()?;
            let p = Arc::new(load::<ProperadDoc>(properad)?.build()?);
            Outcome::object(value(&TwistingDoc::from(&from_right(&l, &p)?)))
        }
        Command::Factorize { file } => {
            let t = load_twisting(file, w)?;
            let op = Arc::new(cobar(&t.c, t.c.policy));
            let bp = Arc::new(bar(&t.p, t.c.policy));
            Outcome::report(&check_factorization(&t, &op, &bp)?)
        }
        Command::Fixtures { action: FixturesAction::List } => {
            let list: Vec<Value> = catalog::CATALOG.iter().map(|(n, d)| json!({"name": n, "description": d})).collect();
            Outcome::object(Value::Array(list))
        }
        Command::Fixtures { action: FixturesAction::Dump { name } } => {
            Outcome::object(catalog::dump(name, w.seed, |p| w.apply(p))?)
        }
        Command::Selftest => selftest::run(),
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            Outcome { code, output: json!({"error": "usage", "message": e.to_string()}) }
        }
    }
}

pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let out = execute(&cli);
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{}", to_canonical_json(&out.output));
    out.code
}
