//! Command-line front end. Every command reads one JSON document and writes
//! JSON (or CSV / SVG where it makes sense) to stdout; failures go to stderr
//! as a JSON object and set the exit code.

pub mod float;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::arith::Num;
use crate::character::cohomology::cohomology_basis;
use crate::character::repjson::{num_to_json, parse_rep, rep_to_json, symbols_from, ParsedRep, ValueJson};
use crate::character::volume::{self_volume, vol_sign, volume_form};
use crate::character::{AffineRep, PeriodVector};
use crate::dynamics::chueshev::{adapted_basis, genus_two_pair, in_stabilizer};
use crate::dynamics::walk::parse_moves;
use crate::dynamics::{chueshev_matrix, parabolic_pair, predicted_closure, random_walk, walk_chains, ChueshevMatrix, WalkConfig};
use crate::error::{Error, Result};
use crate::group::catalog::twist_catalog;
use crate::orbit::classify;
use crate::surface::polygon::PolygonSurface;
use crate::surface::{cone_data, haupt_check, holonomy, normal_form, parse_surface, realize, surface_svg, surface_to_json};

#[derive(Parser, Debug)]
#[command(name = "affchar", version, about = "Affine surface-group representations: orbit closures, twist dynamics, geometrization")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Accept floating-point input, rounding each value to a rational within this distance.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Orbit-closure descriptor of the linear part.
    Classify { input: PathBuf },
    /// Seeded random walk with invariant ledgers.
    Walk(WalkArgs),
    /// Twist matrices on the twisted cohomology.
    Chueshev {
        input: PathBuf,
        /// Comma-separated move labels, `catalog` or `torelli`.
        #[arg(long)]
        moves: Option<String>,
    },
    /// Volume-form signature, and the volume of the cocycle when one is given.
    Vol { input: PathBuf },
    /// Admissibility of a period vector.
    Haupt { input: PathBuf },
    /// Twist sequence moving a finite linear part to (ζ, 1, …, 1).
    NormalForm { input: PathBuf },
    /// Build a polygon surface with the given holonomy.
    Realize {
        input: PathBuf,
        /// Write surface.json here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write an SVG drawing here.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Validate a surface.json and report its cone points.
    SurfaceCheck { input: PathBuf },
    /// Holonomy representation of a surface.json.
    Holonomy { input: PathBuf },
}

#[derive(Args, Debug)]
pub struct WalkArgs {
    pub input: PathBuf,
    /// Seed for the move sequence; required so runs are reproducible.
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub steps: u64,
    /// `catalog`, `torelli`, or comma-separated labels such as `Ta1,Td1^-1`.
    #[arg(long, default_value = "catalog")]
    pub moves: String,
    /// Independent chains with seeds seed, seed+1, …
    #[arg(long, default_value_t = 1)]
    pub chains: u64,
    /// Emit one record per step.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug)]
pub enum Output {
    Json(Value),
    /// JSON lines.
    Lines(Vec<Value>),
    Text(String),
}

/// Output plus an optional failure that still lets the output be shown.
#[derive(Debug)]
pub struct Outcome {
    pub output: Output,
    pub failure: Option<Error>,
}

impl From<Output> for Outcome {
    fn from(output: Output) -> Self {
        Outcome { output, failure: None }
    }
}

fn stamp(v: &mut Value) {
    if let Some(o) = v.as_object_mut() {
        o.insert("heuristic".into(), Value::Bool(true));
    }
}

impl Output {
    fn mark_heuristic(&mut self, format: Format) {
        match self {
            Output::Json(v) => stamp(v),
            Output::Lines(vs) => vs.iter_mut().for_each(stamp),
            Output::Text(t) => {
                let note = match format {
                    Format::Svg => "<!-- heuristic: input rounded to rationals -->\n",
                    _ => "# heuristic: input rounded to rationals\n",
                };
                t.insert_str(0, note);
            }
        }
    }

    pub fn render(&self) -> String {
        match self {
            Output::Json(v) => serde_json::to_string_pretty(v).expect("serializable") + "\n",
            Output::Lines(vs) => vs.iter().map(|v| v.to_string() + "\n").collect(),
            Output::Text(t) => t.clone(),
        }
    }
}

pub fn error_json(e: &Error) -> Value {
    json!({ "error": true, "reason": e.kind(), "message": e.to_string(), "exit_code": e.exit_code() })
}

fn read_input(path: &Path) -> Result<String> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map_err(|e| Error::Invalid(format!("stdin: {}", e)))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {}: {}", path.display(), e)))?;
    }
    Ok(text)
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::Invalid(format!("cannot write {}: {}", path.display(), e)))
}

fn require_format(cmd: &str, format: Format, allowed: &[Format]) -> Result<()> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Error::Invalid(format!("{} does not produce {:?} output", cmd, format).to_lowercase()))
    }
}

struct Input {
    text: String,
    heuristic: bool,
}

impl Input {
    fn load(path: &Path, tol: Option<f64>) -> Result<Self> {
        let (text, heuristic) = float::prepare(&read_input(path)?, tol)?;
        Ok(Input { text, heuristic })
    }

    fn rep(&self) -> Result<ParsedRep> {
        parse_rep(&self.text)
    }

    fn affine_rep(&self) -> Result<AffineRep> {
        self.rep()?.rep.ok_or_else(|| Error::Invalid("input has no cocycle".into()))
    }

    fn surface(&self) -> Result<PolygonSurface> {
        parse_surface(&self.text)
    }
}

/// Run a parsed command.
pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let input_path = match &cfg.command {
        Command::Classify { input }
        | Command::Chueshev { input, .. }
        | Command::Vol { input }
        | Command::Haupt { input }
        | Command::NormalForm { input }
        | Command::Realize { input, .. }
        | Command::SurfaceCheck { input }
        | Command::Holonomy { input } => input,
        Command::Walk(w) => &w.input,
    };
    let input = Input::load(input_path, cfg.tol)?;
    let mut outcome = match &cfg.command {
        Command::Classify { .. } => {
            require_format("classify", cfg.format, &[Format::Json])?;
            cmd_classify(&input)?.into()
        }
        Command::Walk(w) => cmd_walk(&input, w, cfg.format)?.into(),
        Command::Chueshev { moves, .. } => {
            require_format("chueshev", cfg.format, &[Format::Json])?;
            cmd_chueshev(&input, moves.as_deref())?.into()
        }
        Command::Vol { .. } => {
            require_format("vol", cfg.format, &[Format::Json])?;
            cmd_vol(&input)?.into()
        }
        Command::Haupt { .. } => {
            require_format("haupt", cfg.format, &[Format::Json])?;
            cmd_haupt(&input)?.into()
        }
        Command::NormalForm { .. } => {
            require_format("normal-form", cfg.format, &[Format::Json])?;
            cmd_normal_form(&input)?.into()
        }
        Command::Realize { out, svg, .. } => {
            require_format("realize", cfg.format, &[Format::Json, Format::Svg])?;
            cmd_realize(&input, out.as_deref(), svg.as_deref(), cfg.format)?.into()
        }
        Command::SurfaceCheck { .. } => {
            require_format("surface-check", cfg.format, &[Format::Json, Format::Svg])?;
            cmd_surface_check(&input, cfg.format)?
        }
        Command::Holonomy { .. } => {
            require_format("holonomy", cfg.format, &[Format::Json])?;
            cmd_holonomy(&input)?.into()
        }
    };
    if input.heuristic {
        outcome.output.mark_heuristic(cfg.format);
    }
    Ok(outcome)
}

/// Entry point for the binary; returns the process exit code.
pub fn main() -> i32 {
    let cfg = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            // usage errors are validation errors, not "unsupported"
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let failure = match run(&cfg) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(outcome.output.render().as_bytes());
            outcome.failure
        }
        Err(e) => Some(e),
    };
    match failure {
        None => 0,
        Some(e) => {
            eprintln!("{}", error_json(&e));
            e.exit_code()
        }
    }
}

fn cmd_classify(input: &Input) -> Result<Output> {
    let parsed = input.rep()?;
    let c = classify(&parsed.character)?;
    Ok(Output::Json(c.to_json(parsed.character.symbols())))
}

fn cmd_walk(input: &Input, args: &WalkArgs, format: Format) -> Result<Output> {
    require_format("walk", format, &[Format::Json, Format::Csv])?;
    if args.chains == 0 {
        return Err(Error::Invalid("--chains must be at least 1".into()));
    }
    if format == Format::Csv && args.chains > 1 {
        return Err(Error::Invalid("csv output takes a single chain".into()));
    }
    let parsed = input.rep()?;
    let alpha = &parsed.character;
    let lambda = parsed.rep.as_ref().map(|r| r.cocycle());
    let cfg = WalkConfig { steps: args.steps, seed: args.seed, moves: parse_moves(alpha.genus(), &args.moves)?, trace: args.trace };
    let reports = if args.chains == 1 { vec![random_walk(alpha, lambda, &cfg)?] } else { walk_chains(alpha, lambda, &cfg, args.chains)? };
    if format == Format::Csv {
        return Ok(Output::Text(reports[0].to_csv()?));
    }
    let mut lines = Vec::new();
    for mut r in reports {
        if let Some(trace) = r.trace.take() {
            lines.extend(trace.into_iter().map(|s| {
                let mut v = serde_json::to_value(s).expect("serializable");
                v["seed"] = json!(r.seed);
                v
            }));
        }
        let mut v = serde_json::to_value(&r).expect("serializable");
        v["record"] = json!("summary");
        lines.push(v);
    }
    Ok(Output::Lines(lines))
}

fn cmd_chueshev(input: &Input, moves: Option<&str>) -> Result<Output> {
    let parsed = input.rep()?;
    let alpha = &parsed.character;
    let syms = alpha.symbols();
    if alpha.is_trivial() {
        return Err(Error::TrivialCharacter);
    }
    let g = alpha.genus();
    let basis = || adapted_basis(alpha).or_else(|_| Ok::<_, Error>(cohomology_basis(alpha)));
    let matrices: Vec<ChueshevMatrix> = match moves {
        Some(names) => {
            let b = basis()?;
            parse_moves(g, names)?.iter().map(|m| chueshev_matrix(alpha, m, &b)).collect::<Result<_>>()?
        }
        None if g == 2 && genus_two_pair(alpha).is_ok() => {
            let (d, nu) = genus_two_pair(alpha)?;
            vec![d, nu]
        }
        None => {
            let b = basis()?;
            let mut v = Vec::new();
            for m in twist_catalog(g) {
                if in_stabilizer(alpha, &m)? {
                    v.push(chueshev_matrix(alpha, &m, &b)?);
                }
            }
            v
        }
    };
    let mut out = json!({
        "genus": g,
        "dimension": matrices.first().map_or(2 * g - 1, ChueshevMatrix::dim),
        "matrices": matrices.iter().map(|m| m.to_json(syms)).collect::<Vec<_>>(),
    });
    if let Ok(p) = predicted_closure(alpha) {
        out["predicted"] = p.to_json();
    }
    if let Ok(pp) = parabolic_pair(alpha) {
        out["parabolic_pair"] = json!([pp.twist_delta.to_json(syms), pp.twist_a.to_json(syms)]);
    }
    Ok(Output::Json(out))
}

fn cmd_vol(input: &Input) -> Result<Output> {
    let parsed = input.rep()?;
    let alpha = &parsed.character;
    let syms = alpha.symbols();
    let form = volume_form(alpha)?;
    let sig = form.signature(syms)?;
    let gram: Vec<Vec<Value>> = form.matrix.iter().map(|r| r.iter().map(|x| num_to_json(x, syms)).collect()).collect();
    let mut out = json!({ "dimension": form.basis.len(), "signature": sig, "gram": gram });
    if let Some(rep) = parsed.rep.as_ref().filter(|r| !r.is_abelian()) {
        let v = self_volume(rep);
        out["volume"] = num_to_json(&v, syms);
        out["volume_text"] = json!(v.display(syms));
        out["sign"] = serde_json::to_value(vol_sign(rep)?).expect("serializable");
    }
    Ok(Output::Json(out))
}

#[derive(Deserialize)]
struct PeriodsJson {
    periods: Vec<ValueJson>,
    #[serde(default)]
    symbols: Vec<String>,
    #[serde(default)]
    symbol_values: Option<Vec<f64>>,
}

fn cmd_haupt(input: &Input) -> Result<Output> {
    let pj: PeriodsJson = serde_json::from_str(&input.text).map_err(|e| Error::Invalid(format!("periods.json: {}", e)))?;
    let syms = symbols_from(&pj.symbols, pj.symbol_values.as_deref())?;
    let p = PeriodVector(pj.periods.iter().map(|v| v.parse_with(&syms)).collect::<Result<_>>()?);
    let h = haupt_check(&p, &syms)?;
    let num = |x: &Num| num_to_json(x, &syms);
    Ok(Output::Json(json!({
        "accepted": h.accepted(),
        "volume": num(&h.volume),
        "volume_text": h.volume.display(&syms),
        "lattice": h.lattice.as_ref().map(|l| json!({
            "basis": l.basis.iter().map(num).collect::<Vec<_>>(),
            "covolume": num(&l.covolume),
            "covolume_text": l.covolume.display(&syms),
        })),
        "rejection": h.rejection.as_ref().map(|r| serde_json::to_value(r).expect("serializable")["reason"].clone()),
    })))
}

fn cmd_normal_form(input: &Input) -> Result<Output> {
    let rep = input.affine_rep()?;
    let nf = normal_form(&rep)?;
    Ok(Output::Json(json!({
        "order": nf.order,
        "moves": nf.moves,
        "before": nf.before,
        "after": nf.after,
        "matrix": nf.matrix(),
        "representation": rep_to_json(&nf.rep)?,
    })))
}

/// Linear and translation parts, with logarithms when the character has them.
fn rep_summary(rep: &AffineRep) -> Value {
    let syms = rep.character().symbols();
    let mut v = json!({
        "linear": rep.character().values().iter().map(|x| num_to_json(x, syms)).collect::<Vec<_>>(),
        "translation": rep.cocycle().values().iter().map(|x| num_to_json(x, syms)).collect::<Vec<_>>(),
        "text": rep.character().display(),
    });
    if let Ok(r) = rep_to_json(rep) {
        v["rep"] = r;
    }
    v
}

fn is_translation_surface(s: &PolygonSurface) -> bool {
    s.pairings.iter().all(|p| p.map.is_translation())
}

fn cmd_realize(input: &Input, out: Option<&Path>, svg: Option<&Path>, format: Format) -> Result<Output> {
    let rep = input.affine_rep()?;
    let r = realize(&rep)?;
    let s = &r.surface;
    let diag = s.validate()?;
    let cones = cone_data(s)?;
    let surface = surface_to_json(s)?;
    let drawing = surface_svg(s);
    if let Some(p) = out {
        write_file(p, &(serde_json::to_string_pretty(&surface).expect("serializable") + "\n"))?;
    }
    if let Some(p) = svg {
        write_file(p, &drawing)?;
    }
    if format == Format::Svg {
        return Ok(Output::Text(drawing));
    }
    let syms = &s.symbols;
    Ok(Output::Json(json!({
        "branch": r.branch,
        "moves": r.moves,
        "genus": diag.genus,
        "euler_characteristic": diag.euler_characteristic,
        "translation": is_translation_surface(s),
        "exp": s.exp,
        "handle_loop_trivial": r.handle_loop_trivial,
        "conjugacy": { "a": num_to_json(&r.conjugacy.a, syms), "b": num_to_json(&r.conjugacy.b, syms) },
        "marking_certificate": r.holonomy.certificate,
        "holonomy": rep_summary(&r.holonomy.rep),
        "cone_points": cones.singular(),
        "surface": surface,
    })))
}

fn cmd_surface_check(input: &Input, format: Format) -> Result<Outcome> {
    let s = input.surface()?;
    let diag = s.diagnose();
    let failure = s.validate().err();
    if format == Format::Svg {
        return Ok(Outcome { output: Output::Text(surface_svg(&s)), failure });
    }
    let mut out = json!({ "valid": failure.is_none(), "diagnostics": diag });
    if failure.is_none() {
        let syms = &s.symbols;
        let area = s.area();
        out["area"] = num_to_json(&area, syms);
        out["area_text"] = json!(area.display(syms));
        out["translation"] = json!(is_translation_surface(&s));
        out["exp"] = json!(s.exp);
        out["cone_points"] = serde_json::to_value(cone_data(&s)?.points).expect("serializable");
    }
    Ok(Outcome { output: Output::Json(out), failure })
}

fn cmd_holonomy(input: &Input) -> Result<Output> {
    let s = input.surface()?;
    let h = holonomy(&s)?;
    let mut out = rep_summary(&h.rep);
    out["source"] = serde_json::to_value(h.source).expect("serializable");
    out["marking_certificate"] = serde_json::to_value(&h.certificate).expect("serializable");
    out["words"] = json!(h.words);
    if is_translation_surface(&s) {
        out["periods"] = json!(h.periods().0.iter().map(|x| num_to_json(x, &s.symbols)).collect::<Vec<_>>());
    }
    Ok(Output::Json(out))
}
