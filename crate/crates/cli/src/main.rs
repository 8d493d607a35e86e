mod config;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use alcove_charge::alcove::{alcove_of_point, face_of_point, is_regular, AlcoveFrame};
use alcove_charge::braid::{equal_up_to_braid_moves, positive_lift, project_to_affine_weyl, WordEquality};
use alcove_charge::coinvariants::{is_harmonic, weyl_sums_by_degree, CoinvariantBasis};
use alcove_charge::covering::{
    phase, phase_track, stability_sanity, stability_sanity_with, trace_csv, transport, CoveringPoint,
    TransportPath,
};
use alcove_charge::kmodel::{charge_scan, KClass};
use alcove_charge::poly::monomial_key;
use alcove_charge::root_system::RootSystem;
use alcove_charge::rvsc::{check_rvsc, RvscInstance};
use alcove_charge::scalar::Scalar;
use alcove_charge::{Error, Q};
use clap::{Args, Parser, Subcommand};
use num_traits::Zero;
use serde_json::{json, Value};

use config::Config;

#[derive(Parser, Debug)]
#[command(name = "alcove-charge", version, about = "Exact alcove, braid and central charge computations")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Config file; `alcove-charge.json` in the working directory is used when present.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker threads for audits and scans.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Root system data.
    #[command(subcommand)]
    Rs(RsCmd),
    /// Alcove location and walls.
    #[command(subcommand)]
    Alcove(AlcoveCmd),
    /// Positive lifts and braid words.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Coinvariant algebra.
    #[command(subcommand)]
    Coinv(CoinvCmd),
    /// Charge polynomials and central charges.
    #[command(subcommand)]
    Charge(ChargeCmd),
    /// Audit of the wall-crossing data.
    #[command(subcommand)]
    Rvsc(RvscCmd),
    /// Covering points, transport and phases.
    #[command(subcommand)]
    Cover(CoverCmd),
}

#[derive(Args, Debug, Clone)]
struct RsArg {
    /// Root system such as `A2` or `G2`.
    #[arg(long = "rs")]
    rs: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct ModelArg {
    #[command(flatten)]
    rs: RsArg,
    /// `kleinian` or `zero-section:MU;MU;...`.
    #[arg(long)]
    model: Option<String>,
}

#[derive(Subcommand, Debug)]
enum RsCmd {
    Describe(RsArg),
}

#[derive(Subcommand, Debug)]
enum AlcoveCmd {
    /// Alcove (or face) containing a point.
    Locate {
        #[command(flatten)]
        rs: RsArg,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Walls of an alcove given by its floor vector.
    Walls {
        #[command(flatten)]
        rs: RsArg,
        #[arg(long, allow_hyphen_values = true)]
        alcove: String,
    },
}

#[derive(Subcommand, Debug)]
enum BraidCmd {
    /// Positive lift between two alcoves.
    Lift {
        #[command(flatten)]
        rs: RsArg,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
    /// Equality of two words up to braid moves.
    Equal {
        #[command(flatten)]
        rs: RsArg,
        #[arg(long)]
        w1: String,
        #[arg(long)]
        w2: String,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Image of a word in the affine Weyl group.
    Project {
        #[command(flatten)]
        rs: RsArg,
        #[arg(long)]
        word: String,
    },
}

#[derive(Subcommand, Debug)]
enum CoinvCmd {
    Basis(RsArg),
    /// Class of `exp(lambda)`.
    Exp {
        #[command(flatten)]
        rs: RsArg,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Whether the charge polynomial of a class is harmonic.
    Harmonic {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Weyl sums of the positive-degree components of a charge polynomial.
    Weylsum {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
}

#[derive(Subcommand, Debug)]
enum ChargeCmd {
    /// Charge polynomial of a class.
    DPoly {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Central charge at `(lambda, mu)`.
    Eval {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Skip the regularity check on `(lambda, mu)`.
        #[arg(long)]
        lenient: bool,
    },
    /// Charges over a grid of `lambda` with `mu` fixed.
    Scan {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long = "class", required = true, allow_hyphen_values = true)]
        classes: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        lo: String,
        #[arg(long, default_value = "2", allow_hyphen_values = true)]
        hi: String,
        #[arg(long)]
        steps: Option<u32>,
        /// Write the JSON result here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum RvscCmd {
    /// Positivity, wall dichotomy and shift rule for all alcoves in a radius.
    Check {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, default_value_t = 2)]
        radius: i64,
        #[arg(long)]
        resolution: Option<u32>,
        /// Negate simple class `INDEX` of alcove `FLOORS` (`FLOORS:INDEX`).
        #[arg(long, allow_hyphen_values = true)]
        negate: Option<String>,
        /// Leave per-pair and per-wall details out of the output.
        #[arg(long)]
        summary: bool,
    },
}

#[derive(Args, Debug, Clone)]
struct PointArgs {
    /// Braid word as JSON, e.g. `[[0,1],[1,-1]]`.
    #[arg(long, default_value = "[]")]
    word: String,
    /// Base point `lambda` (must lie in the fundamental domain with `mu`).
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
}

#[derive(Args, Debug, Clone)]
struct PathArgs {
    /// Waypoint `LAMBDA:MU` after the start; repeat for more.
    #[arg(long = "via", allow_hyphen_values = true)]
    via: Vec<String>,
    /// JSON file with `{"waypoints": [{"lambda": [...], "mu": [...]}, ...]}`.
    #[arg(long)]
    path: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum CoverCmd {
    /// Transport a covering point along a path.
    Transport {
        #[command(flatten)]
        model: ModelArg,
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        path: PathArgs,
        /// Write a CSV trace of charges and lifted phases of the home simples.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        steps: Option<u32>,
    },
    /// Phase of a class, lifted along a path when one is given.
    Phase {
        #[command(flatten)]
        model: ModelArg,
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        path: PathArgs,
        #[arg(long = "class", required = true, allow_hyphen_values = true)]
        classes: Vec<String>,
        #[arg(long)]
        steps: Option<u32>,
    },
    /// Upper half plane / negative axis check for the relevant simples.
    Sanity {
        #[command(flatten)]
        model: ModelArg,
        #[command(flatten)]
        point: PointArgs,
        #[arg(long = "class", allow_hyphen_values = true)]
        classes: Vec<String>,
    },
}

/// Error with its exit status. Failed checks are reported through `Report`.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DegenerateSegment | Error::ZeroPolynomial => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<Report, Failure>;

/// Command output: JSON body, text rendering, and whether a check failed.
struct Report {
    body: Value,
    text: String,
    failed: Option<String>,
}

impl Report {
    fn ok(body: Value, text: impl Into<String>) -> Self {
        Report {
            body,
            text: text.into(),
            failed: None,
        }
    }

    fn check(body: Value, text: impl Into<String>, pass: bool, what: &str) -> Self {
        Report {
            body,
            text: text.into(),
            failed: (!pass).then(|| format!("check failed: {what}")),
        }
    }
}

/// `a + bi` from exact strings.
fn complex(re: &str, im: &str) -> String {
    match im.strip_prefix('-') {
        Some(abs) => format!("{re} - {abs}i"),
        None => format!("{re} + {im}i"),
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Result<Value, Failure> {
    serde_json::to_value(v).map_err(|e| Failure::Internal(e.to_string()))
}

fn with_schema(mut v: Value) -> Value {
    if let Value::Object(map) = &mut v {
        let mut out = serde_json::Map::new();
        out.insert("schema".into(), json!(1));
        out.extend(std::mem::take(map));
        Value::Object(out)
    } else {
        json!({ "schema": 1, "result": v })
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = Config::load(cli.config.as_deref()).and_then(|cfg| {
        if let Some(j) = cli.jobs.or(cfg.jobs) {
            rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build_global()
                .map_err(|e| Failure::Internal(e.to_string()))?;
        }
        run(&cli.command, &cfg)
    });
    match result {
        Ok(report) => {
            if cli.json {
                let body = with_schema(report.body);
                println!("{}", serde_json::to_string_pretty(&body).expect("json values serialize"));
            } else {
                print!("{}", report.text);
                if !report.text.ends_with('\n') {
                    println!();
                }
            }
            match report.failed {
                Some(msg) => {
                    eprintln!("{msg}");
                    ExitCode::from(1)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cmd: &Command, cfg: &Config) -> Outcome {
    match cmd {
        Command::Rs(RsCmd::Describe(a)) => {
            let rs = cfg.root_system(a.rs.as_deref())?;
            let s = rs.summary();
            let text = format!(
                "{}: rank {}, {} positive roots, |W| = {}, Coxeter number {}, degrees {:?}\n",
                s.name,
                s.rank,
                s.positive_roots.len(),
                s.weyl_order,
                s.coxeter_number,
                s.degrees
            );
            Ok(Report::ok(to_value(&s)?, text))
        }
        Command::Alcove(c) => alcove_cmd(c, cfg),
        Command::Braid(c) => braid_cmd(c, cfg),
        Command::Coinv(c) => coinv_cmd(c, cfg),
        Command::Charge(c) => charge_cmd(c, cfg),
        Command::Rvsc(c) => rvsc_cmd(c, cfg),
        Command::Cover(c) => cover_cmd(c, cfg),
    }
}

fn alcove_cmd(cmd: &AlcoveCmd, cfg: &Config) -> Outcome {
    match cmd {
        AlcoveCmd::Locate { rs, point } => {
            let rs = cfg.root_system(rs.rs.as_deref())?;
            let p = input::weight(point, &rs)?;
            if is_regular(&rs, &p) {
                let a = alcove_of_point(&rs, &p)?;
                let text = format!("alcove {a}\n");
                Ok(Report::ok(json!({ "point": p, "regular": true, "alcove": a }), text))
            } else {
                let f = face_of_point(&rs, &p);
                let text = format!("point on {} wall(s); face {:?}\n", f.equalities.len(), f.floors);
                Ok(Report::ok(json!({ "point": p, "regular": false, "face": f }), text))
            }
        }
        AlcoveCmd::Walls { rs, alcove } => {
            let rs = cfg.root_system(rs.rs.as_deref())?;
            let a = input::alcove(alcove)?;
            let frame = AlcoveFrame::locate(&rs, &a)?;
            let walls = frame.walls(&rs);
            let mut text = format!("alcove {a}\n");
            for w in &walls {
                text.push_str(&format!(
                    "  type {}  {}  neighbour {}{}\n",
                    w.wall_type,
                    w.hyperplane,
                    w.neighbor,
                    if w.neighbor_above { " (above)" } else { "" }
                ));
            }
            Ok(Report::ok(json!({ "alcove": a, "walls": walls }), text))
        }
    }
}

fn braid_cmd(cmd: &BraidCmd, cfg: &Config) -> Outcome {
    match cmd {
        BraidCmd::Lift { rs, from, to } => {
            let rs = cfg.root_system(rs.rs.as_deref())?;
            let (a, b) = (input::alcove(from)?, input::alcove(to)?);
            let w = positive_lift(&rs, &a, &b)?;
            let text = serde_json::to_string(&w).map_err(|e| Failure::Internal(e.to_string()))?;
            Ok(Report::ok(json!({ "from": a, "to": b, "word": w }), text))
        }
        BraidCmd::Equal { rs, w1, w2, bound } => {
            let rs = cfg.root_system(rs.rs.as_deref())?;
            let (a, b) = (input::word(w1, &rs)?, input::word(w2, &rs)?);
            let bound = bound.unwrap_or(cfg.bound);
            let verdict = equal_up_to_braid_moves(&rs, &a, &b, bound);
            let name = match verdict {
                WordEquality::Equal => "equal",
                WordEquality::Distinct => "distinct",
                WordEquality::Unknown => "unknown",
            };
            Ok(Report::check(
                json!({ "verdict": name, "bound": bound }),
                format!("{name}\n"),
                verdict == WordEquality::Equal,
                "words are not shown equal",
            ))
        }
        BraidCmd::Project { rs, word } => {
            let rs = cfg.root_system(rs.rs.as_deref())?;
            let w = input::word(word, &rs)?;
            let u = project_to_affine_weyl(&rs, &w);
            let image = AlcoveFrame::from_element(&rs, u.clone()).alcove;
            let text = format!(
                "linear {:?}, translation {:?}, A0 maps to {image}\n",
                u.linear().matrix().rows(),
                u.translation()
            );
            Ok(Report::ok(json!({ "element": u, "image_of_fundamental": image }), text))
        }
    }
}

fn coinv_cmd(cmd: &CoinvCmd, cfg: &Config) -> Outcome {
    match cmd {
        CoinvCmd::Basis(a) => {
            let rs = cfg.root_system(a.rs.as_deref())?;
            let b = CoinvariantBasis::new(&rs)?;
            let monomials: Vec<String> = b.basis().iter().map(|e| monomial_key(e)).collect();
            let generators: Vec<String> = b.generators().iter().map(|g| g.to_string()).collect();
            let text = format!(
                "dimension {}, top degree {}, Hilbert series {:?}\n",
                b.dimension(),
                b.top_degree(),
                b.hilbert_series()
            );
            Ok(Report::ok(
                json!({
                    "dimension": b.dimension(),
                    "top_degree": b.top_degree(),
                    "hilbert_series": b.hilbert_series(),
                    "basis": monomials,
                    "generators": generators,
                }),
                text,
            ))
        }
        CoinvCmd::Exp { rs, point } => {
            let rs = cfg.root_system(rs.rs.as_deref())?;
            let p = input::weight(point, &rs)?;
            let b = CoinvariantBasis::new(&rs)?;
            let coeffs = b.to_json(&b.exp_class(&p));
            let text: String = coeffs.iter().map(|(k, v)| format!("{k}: {v}\n")).collect();
            Ok(Report::ok(json!({ "point": p, "coefficients": coeffs }), text))
        }
        CoinvCmd::Harmonic { model, class } => {
            let m = cfg.model(&model.rs, model.model.as_deref())?;
            let c = input::class(class, &m)?;
            let b = CoinvariantBasis::new(m.root_system())?;
            let d = m.d_polynomial::<Q>(&c)?;
            let h = is_harmonic(b.generators(), &d);
            Ok(Report::check(
                json!({ "class": c, "polynomial": d.to_string(), "harmonic": h }),
                format!("{d}: {}\n", if h { "harmonic" } else { "not harmonic" }),
                h,
                "polynomial is not harmonic",
            ))
        }
        CoinvCmd::Weylsum { model, class, point } => {
            let m = cfg.model(&model.rs, model.model.as_deref())?;
            let c = input::class(class, &m)?;
            let p = input::weight(point, m.root_system())?;
            let d = m.d_polynomial::<Q>(&c)?;
            let sums = weyl_sums_by_degree(m.root_system(), &d, &p)?;
            let pass = sums.iter().all(|(_, s)| s.is_zero());
            let rows: Vec<Value> = sums
                .iter()
                .map(|(k, s)| json!({ "degree": k, "sum": s.to_exact_string() }))
                .collect();
            let text: String = sums.iter().map(|(k, s)| format!("degree {k}: {s}\n")).collect();
            Ok(Report::check(
                json!({ "class": c, "point": p, "sums": rows, "vanish": pass }),
                text,
                pass,
                "Weyl sum does not vanish",
            ))
        }
    }
}

fn charge_cmd(cmd: &ChargeCmd, cfg: &Config) -> Outcome {
    match cmd {
        ChargeCmd::DPoly { model, class } => {
            let m = cfg.model(&model.rs, model.model.as_deref())?;
            let c = input::class(class, &m)?;
            let d = m.d_polynomial::<Q>(&c)?;
            Ok(Report::ok(
                json!({ "model": m.name(), "class": c, "polynomial": d, "text": d.to_string() }),
                format!("{d}\n"),
            ))
        }
        ChargeCmd::Eval {
            model,
            class,
            lambda,
            mu,
            lenient,
        } => {
            let m = cfg.model(&model.rs, model.model.as_deref())?;
            let c = input::class(class, &m)?;
            let l = input::weight(lambda, m.root_system())?;
            let u = input::weight(mu, m.root_system())?;
            let z = m.central_charge(&l, &u, &c, !lenient)?;
            let (re, im) = (z.re.to_exact_string(), z.im.to_exact_string());
            Ok(Report::ok(
                json!({ "class": c, "lambda": l, "mu": u, "re": re, "im": im }),
                format!("Z = {}\n", complex(&re, &im)),
            ))
        }
        ChargeCmd::Scan {
            model,
            classes,
            mu,
            lo,
            hi,
            steps,
            out,
        } => {
            let m = cfg.model(&model.rs, model.model.as_deref())?;
            let cls = classes.iter().map(|c| input::class(c, &m)).collect::<Result<Vec<_>, _>>()?;
            let u = input::weight(mu, m.root_system())?;
            let (lo, hi) = (input::rational(lo)?, input::rational(hi)?);
            let rows = charge_scan(&m, &cls, &u, &lo, &hi, steps.unwrap_or(cfg.resolution))?;
            let body = json!({ "model": m.name(), "classes": cls, "mu": u, "rows": rows });
            let text = if let Some(path) = out.as_ref().or(cfg.out.as_ref()) {
                let data = serde_json::to_string_pretty(&with_schema(body.clone()))
                    .map_err(|e| Failure::Internal(e.to_string()))?;
                std::fs::write(path, data).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                format!("{} rows written to {}\n", rows.len(), path.display())
            } else {
                rows.iter()
                    .map(|r| {
                        let z: Vec<String> = r.charges.iter().map(|(a, b)| complex(a, b)).collect();
                        format!("{}  {}\n", r.lambda, z.join("  "))
                    })
                    .collect()
            };
            Ok(Report::ok(body, text))
        }
    }
}

fn rvsc_cmd(cmd: &RvscCmd, cfg: &Config) -> Outcome {
    let RvscCmd::Check {
        model,
        radius,
        resolution,
        negate,
        summary,
    } = cmd;
    let m = cfg.model(&model.rs, model.model.as_deref())?;
    if *radius < 1 {
        return Err(Failure::Usage("radius must be at least 1".into()));
    }
    let mut inst = RvscInstance::transported(&m, *radius)?;
    if let Some(arg) = negate {
        let (floors, idx) = arg
            .rsplit_once(':')
            .ok_or_else(|| Failure::Usage(format!("--negate expects FLOORS:INDEX, got {arg:?}")))?;
        let a = input::alcove(floors)?;
        let idx: usize = idx.trim().parse().map_err(|_| Failure::Usage(format!("bad index {idx:?}")))?;
        if !inst.simples.get(&a).is_some_and(|s| idx < s.len()) {
            return Err(Failure::Usage(format!("no simple class {idx} at alcove {a} in this radius")));
        }
        inst = inst.with_negated(&a, idx);
    }
    let mut rep = check_rvsc(&inst, *radius, resolution.unwrap_or(cfg.resolution))?;
    let text = format!(
        "{} radius {}: {} alcoves, max order {}, sampling fallbacks {}, positivity failures {}, dichotomy violations {}, wall failures {}: {}\n",
        rep.model,
        rep.radius,
        rep.alcoves,
        rep.max_order,
        rep.sampling_fallbacks,
        rep.positivity_failures,
        rep.dichotomy_violations,
        rep.wall_failures,
        if rep.pass { "PASS" } else { "FAIL" }
    );
    let pass = rep.pass;
    if *summary {
        rep.pairs.clear();
        rep.wall_reports.clear();
    }
    Ok(Report::check(to_value(&rep)?, text, pass, "rvsc audit"))
}

fn covering_point(rs: &RootSystem, p: &PointArgs) -> Result<CoveringPoint, Failure> {
    let word = input::word(&p.word, rs)?;
    let l = input::weight(&p.lambda, rs)?;
    let m = input::weight(&p.mu, rs)?;
    Ok(CoveringPoint::new(rs, word, l, m)?)
}

fn path_of(rs: &RootSystem, start: &CoveringPoint, p: &PathArgs) -> Result<Option<TransportPath>, Failure> {
    match (&p.path, p.via.is_empty()) {
        (Some(_), false) => Err(Failure::Usage("use either --path or --via".into())),
        (Some(file), true) => {
            let text = std::fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            let path: TransportPath =
                serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            Ok(Some(path))
        }
        (None, false) => {
            let mut points = vec![start.project(rs)];
            for v in &p.via {
                points.push(input::waypoint(v, rs)?);
            }
            Ok(Some(TransportPath::new(points)))
        }
        (None, true) => Ok(None),
    }
}

fn events_text(events: &[alcove_charge::covering::TransportEvent]) -> String {
    events
        .iter()
        .map(|e| format!("  segment {} t={} crosses {} letter {}\n", e.segment, e.t, e.hyperplane, e.letter))
        .collect()
}

fn cover_cmd(cmd: &CoverCmd, cfg: &Config) -> Outcome {
    match cmd {
        CoverCmd::Transport {
            model,
            point,
            path,
            trace,
            steps,
        } => {
            let rs = cfg.root_system(model.rs.rs.as_deref())?;
            let pt = covering_point(&rs, point)?;
            let path = path_of(&rs, &pt, path)?.ok_or_else(|| Failure::Usage("a path is required".into()))?;
            let trace_path = trace.as_ref().or(cfg.trace.as_ref());
            let result = if let Some(file) = trace_path {
                let m = cfg.model(&model.rs, model.model.as_deref())?;
                let classes = m.simple_classes_of(&pt.home(&rs))?;
                let track = phase_track(&m, &pt, &path, &classes, steps.unwrap_or(cfg.steps))?;
                let csv = trace_csv(&track.rows, rs.rank(), classes.len());
                std::fs::write(file, csv).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
                track.transport
            } else {
                transport(&rs, &pt, &path)?
            };
            let text = format!(
                "word {}\nbase lambda {} mu {}\n{}",
                result.point.word,
                result.point.lambda,
                result.point.mu,
                events_text(&result.events)
            );
            Ok(Report::ok(to_value(&result)?, text))
        }
        CoverCmd::Phase {
            model,
            point,
            path,
            classes,
            steps,
        } => {
            let m = cfg.model(&model.rs, model.model.as_deref())?;
            let rs = m.root_system();
            let pt = covering_point(rs, point)?;
            let cls = classes.iter().map(|c| input::class(c, &m)).collect::<Result<Vec<_>, _>>()?;
            match path_of(rs, &pt, path)? {
                None => {
                    let phases = cls.iter().map(|c| phase(&m, &pt, c)).collect::<Result<Vec<_>, _>>()?;
                    let text: String = cls.iter().zip(&phases).map(|(c, p)| format!("{c}: {p}\n")).collect();
                    let rows: Vec<Value> = cls
                        .iter()
                        .zip(&phases)
                        .map(|(c, p)| json!({ "class": c, "phase": format!("{p}") }))
                        .collect();
                    Ok(Report::ok(json!({ "phases": rows }), text))
                }
                Some(path) => {
                    let track = phase_track(&m, &pt, &path, &cls, steps.unwrap_or(cfg.steps))?;
                    let text: String = track
                        .records
                        .iter()
                        .map(|r| {
                            format!(
                                "{}: {} -> {} (window {} -> {})\n",
                                r.class, r.start_phase, r.end_phase, r.start_window, r.end_window
                            )
                        })
                        .collect();
                    let records: Vec<Value> = track
                        .records
                        .iter()
                        .map(|r| {
                            json!({
                                "class": r.class,
                                "start_phase": format!("{}", r.start_phase),
                                "end_phase": format!("{}", r.end_phase),
                                "start_window": r.start_window,
                                "end_window": r.end_window,
                            })
                        })
                        .collect();
                    Ok(Report::ok(
                        json!({ "transport": track.transport, "records": records }),
                        text,
                    ))
                }
            }
        }
        CoverCmd::Sanity { model, point, classes } => {
            let m = cfg.model(&model.rs, model.model.as_deref())?;
            let pt = covering_point(m.root_system(), point)?;
            let rep = if classes.is_empty() {
                stability_sanity(&m, &pt)?
            } else {
                let cls: Vec<KClass> = classes.iter().map(|c| input::class(c, &m)).collect::<Result<_, _>>()?;
                stability_sanity_with(&m, &pt, &cls)?
            };
            let text: String = rep
                .entries
                .iter()
                .map(|e| {
                    format!(
                        "{}: Z = {}{} {}\n",
                        e.class,
                        complex(&e.re, &e.im),
                        if e.vanishes_on_wall { " (vanishes on wall)" } else { "" },
                        if e.ok { "ok" } else { "FAIL" }
                    )
                })
                .collect();
            Ok(Report::check(to_value(&rep)?, text, rep.pass, "stability sanity"))
        }
    }
}
