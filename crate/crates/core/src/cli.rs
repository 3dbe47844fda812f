//! Command-line front end. `run` parses arguments, writes results to
//! `out` and diagnostics to `err`, and returns the process exit code.

use std::ffi::OsString;
use std::io::Write;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cfrac::Rational;
use crate::check::{self, CheckReport, Suite};
use crate::error::{Error, Result};
use crate::exactalg::format::{laurent_to_json, poly_to_json, series_to_json};
use crate::exactalg::IntPoly;
use crate::frieze::{
    classical_frieze, q_frieze, quiddity_from_triangulation, Quiddity, Triangulation,
};
use crate::knot::{jones, TwoBridgeKnot};
use crate::qcore::{q_binomial, q_factorial, q_int};
use crate::qrat::{
    farey_neighbors, q_rational_matrix, stern_brocot_enumerate, x_polynomial, CfForm, QRational,
};
use crate::qreal::{
    closed_form_series, quadratic_closed_form, radius_of_convergence, stabilize, CFStream,
    QuadraticIrrational,
};
use crate::qseq::{q_sequence, triangle, SeqKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "qdeform",
    version,
    about = "Exact q-deformed integers, rationals, reals and friezes"
)]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The q-integer [n]_q, or [n]_q! with --factorial.
    Qint {
        #[arg(allow_hyphen_values = true)]
        n: i64,
        #[arg(long)]
        factorial: bool,
    },
    /// The Gaussian binomial [n choose m]_q.
    Qbinom {
        n: usize,
        #[arg(allow_hyphen_values = true)]
        m: i64,
    },
    /// q-rationals, the weighted Stern–Brocot tree and X-polynomials.
    Qrat(QratArgs),
    /// Classical and q-deformed frieze patterns.
    Frieze(FriezeArgs),
    /// Taylor series of q-reals and closed forms of quadratic irrationals.
    Qreal(QrealArgs),
    /// q-Fibonacci and q-Pell polynomials.
    Qseq(QseqArgs),
    /// Jones polynomial of the two-bridge knot r/s.
    Jones {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
    },
    /// Exhaustive property sweeps.
    Check(CheckArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormArg {
    Regular,
    Hj,
    Matrix,
}

#[derive(Args, Debug)]
struct QratArgs {
    /// The rational r/s.
    #[arg(allow_hyphen_values = true, required_unless_present_any = ["stern_brocot", "xpoly", "check_unimodal"])]
    fraction: Option<String>,
    #[arg(long, value_enum, default_value = "hj")]
    form: FormArg,
    /// Enumerate the weighted Stern–Brocot tree.
    #[arg(long, conflicts_with_all = ["fraction", "xpoly", "check_unimodal"], requires = "depth")]
    stern_brocot: bool,
    #[arg(long)]
    depth: Option<usize>,
    /// X-polynomial of a pair a > b.
    #[arg(long, num_args = 2, value_names = ["A", "B"], conflicts_with_all = ["fraction", "check_unimodal"])]
    xpoly: Option<Vec<String>>,
    /// Unimodality sweep over s <= H, r <= 2H.
    #[arg(long, conflicts_with = "fraction", requires = "max_height")]
    check_unimodal: bool,
    #[arg(long)]
    max_height: Option<u64>,
}

#[derive(Args, Debug)]
struct FriezeArgs {
    /// Comma-separated quiddity cycle.
    #[arg(
        long,
        required_unless_present = "triangulation",
        conflicts_with = "triangulation"
    )]
    quiddity: Option<String>,
    /// Triangulated polygon as `n:i-j,k-l,...`.
    #[arg(long)]
    triangulation: Option<String>,
    /// Build the q-frieze.
    #[arg(long)]
    q: bool,
    /// Print only the staggered layout.
    #[arg(long, conflicts_with = "json")]
    ascii: bool,
}

#[derive(Args, Debug)]
struct QrealArgs {
    /// Continued-fraction stream, e.g. `per=[1]` or `pre=[1];per=[2]`.
    #[arg(
        long,
        required_unless_present = "quadratic",
        conflicts_with = "quadratic"
    )]
    cf: Option<String>,
    /// Quadratic irrational, e.g. `(1+sqrt5)/2`.
    #[arg(long)]
    quadratic: Option<String>,
    /// Number of Taylor coefficients.
    #[arg(long)]
    order: Option<usize>,
}

#[derive(Args, Debug)]
struct QseqArgs {
    #[arg(long)]
    kind: String,
    #[arg(long)]
    upto: usize,
    /// Coefficient rows in the classical table layout.
    #[arg(long)]
    triangle: bool,
    /// Read triangle rows in the opposite direction.
    #[arg(long, requires = "triangle")]
    mirrored: bool,
}

#[derive(Args, Debug)]
#[command(group = ArgGroup::new("suite").required(true).multiple(false))]
struct CheckArgs {
    #[arg(long, group = "suite")]
    total_positivity: bool,
    #[arg(long, group = "suite")]
    unimodality: bool,
    #[arg(long, group = "suite")]
    frieze_bijection: bool,
    #[arg(long, group = "suite")]
    definition_coincidence: bool,
    /// Sweep bound: height, denominator bound or largest polygon.
    #[arg(long)]
    max_height: Option<u64>,
}

/// What a command produced: text lines, a JSON document, and whether a
/// check found violations that should fail the run.
struct Output {
    text: String,
    json: Value,
    failed: bool,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            failed: false,
        }
    }
}

fn rational(s: &str) -> Result<Rational> {
    s.trim().parse()
}

fn poly_output(p: &IntPoly, extra: Value) -> Output {
    let mut j = extra;
    j["value"] = poly_to_json(p);
    j["text"] = json!(p.to_string());
    Output::new(p.to_string(), j)
}

fn qrat_value_json(v: &QRational) -> Value {
    json!({
        "x": v.x().to_string(),
        "num": poly_to_json(v.num()),
        "den": poly_to_json(v.den()),
        "text": v.to_string(),
    })
}

fn report_output(r: CheckReport) -> Output {
    let failed = !r.passed() && r.suite != Suite::Unimodality;
    let mut text = r.to_string();
    if r.suite == Suite::Unimodality {
        text.push_str(if r.passed() {
            "\nno counterexamples: conjecture supported within bound"
        } else {
            "\ncounterexamples found: reported, not treated as failure"
        });
    }
    Output {
        text,
        json: r.to_json(),
        failed,
    }
}

fn exec(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Qint { n, factorial } => {
            if factorial {
                if n < 0 {
                    return Err(Error::OutOfRange(format!(
                        "factorial needs n >= 0, got {n}"
                    )));
                }
                return Ok(poly_output(
                    &q_factorial(n as usize),
                    json!({ "n": n, "factorial": true }),
                ));
            }
            let v = q_int(n).value;
            Ok(Output::new(
                v.to_string(),
                json!({ "n": n, "value": laurent_to_json(&v), "text": v.to_string() }),
            ))
        }
        Command::Qbinom { n, m } => Ok(poly_output(&q_binomial(n, m), json!({ "n": n, "m": m }))),
        Command::Qrat(a) => qrat(a),
        Command::Frieze(a) => frieze(a),
        Command::Qreal(a) => qreal(a),
        Command::Qseq(a) => qseq(a),
        Command::Jones { fraction } => {
            let k = TwoBridgeKnot::new(rational(&fraction)?)?;
            Ok(poly_output(
                &jones(&k)?,
                json!({ "fraction": k.fraction().to_string() }),
            ))
        }
        Command::Check(a) => {
            let (suite, default) = if a.total_positivity {
                (Suite::TotalPositivity, 30)
            } else if a.unimodality {
                (Suite::Unimodality, 100)
            } else if a.frieze_bijection {
                (Suite::FriezeBijection, 9)
            } else {
                (Suite::DefinitionCoincidence, 50)
            };
            Ok(report_output(check::run_suite(
                suite,
                a.max_height.unwrap_or(default),
            )?))
        }
    }
}

fn qrat(a: QratArgs) -> Result<Output> {
    if a.stern_brocot {
        let nodes = stern_brocot_enumerate(a.depth.unwrap_or(0))?;
        let text = nodes
            .iter()
            .map(|n| {
                let w = n.edge_weight.map_or("-".to_string(), |k| format!("q^{k}"));
                let path = if n.path.is_empty() { "." } else { &n.path };
                format!(
                    "{} {} {} weight={} {}",
                    n.depth,
                    path,
                    n.label.x(),
                    w,
                    n.label
                )
            })
            .collect::<Vec<_>>()
            .join("\n");
        let json = Value::Array(
            nodes
                .iter()
                .map(|n| {
                    let mut j = qrat_value_json(&n.label);
                    j["path"] = json!(n.path);
                    j["depth"] = json!(n.depth);
                    j["edge_weight"] = json!(n.edge_weight);
                    j
                })
                .collect(),
        );
        return Ok(Output::new(text, json));
    }
    if let Some(pair) = a.xpoly {
        let (x, y) = (rational(&pair[0])?, rational(&pair[1])?);
        let (qa, qb) = (QRational::new(&x)?, QRational::new(&y)?);
        let p = x_polynomial(&qa, &qb)?;
        let neighbours = farey_neighbors(&x, &y);
        let extra = json!({
            "a": x.to_string(),
            "b": y.to_string(),
            "monomial": p.as_monomial().is_some(),
            "farey_neighbors": neighbours,
        });
        return Ok(poly_output(&p, extra));
    }
    if a.check_unimodal {
        return Ok(report_output(check::unimodality(
            a.max_height.unwrap_or(100),
        )?));
    }
    let x = rational(a.fraction.as_deref().unwrap_or_default())?;
    let form = match a.form {
        FormArg::Regular => CfForm::Regular,
        FormArg::Hj => CfForm::HJ,
        FormArg::Matrix => CfForm::Matrix,
    };
    let v = QRational::with_form(&x, form)?;
    let mut json = qrat_value_json(&v);
    let mut text = v.to_string();
    if let (FormArg::Matrix, true) = (a.form, x.is_positive()) {
        let (m, _) = q_rational_matrix(&crate::cfrac::cf_regular(&x)?)?;
        json["matrix"] = json!([
            [laurent_to_json(&m.a), laurent_to_json(&m.b)],
            [laurent_to_json(&m.c), laurent_to_json(&m.d)]
        ]);
        text.push_str(&format!("\nmatrix = {m}"));
    }
    Ok(Output::new(text, json))
}

fn frieze(a: FriezeArgs) -> Result<Output> {
    let (quiddity, triangulation) = match (&a.quiddity, &a.triangulation) {
        (Some(q), _) => (q.parse::<Quiddity>()?, None),
        (None, Some(t)) => {
            let t: Triangulation = t.parse()?;
            (quiddity_from_triangulation(&t)?, Some(t))
        }
        (None, None) => unreachable!("clap enforces a frieze source"),
    };
    let classical = classical_frieze(&quiddity)?;
    classical.verify_periodicity()?;
    let n = quiddity.len();
    let (ascii, mut json) = if a.q {
        let f = q_frieze(&quiddity)?;
        (f.to_ascii(), f.to_json())
    } else {
        (classical.to_ascii(), classical.to_json())
    };
    json["period"] = json!(n);
    json["periodic"] = json!(true);
    if let Some(t) = &triangulation {
        json["triangulation"] = json!(t.to_string());
    }
    let text = if a.ascii {
        ascii.trim_end().to_string()
    } else {
        format!(
            "quiddity {quiddity}\n{}\n{n}-periodic: verified",
            ascii.trim_end()
        )
    };
    Ok(Output::new(text, json))
}

/// Ten significant digits.
fn sig10(x: f64) -> String {
    format!(
        "{:.*}",
        (9 - x.abs().log10().floor() as i64).max(0) as usize,
        x
    )
}

fn qreal(a: QrealArgs) -> Result<Output> {
    if let Some(cf) = a.cf {
        let stream: CFStream = cf.parse()?;
        let v = stabilize(&stream, a.order.unwrap_or(20))?;
        let mut json = v.to_json();
        json["cf"] = json!(stream.to_string());
        return Ok(Output::new(v.to_string(), json));
    }
    let x: QuadraticIrrational = a.quadratic.as_deref().unwrap_or_default().parse()?;
    let f = quadratic_closed_form(&x)?;
    let (lo, hi) = radius_of_convergence(&f)?;
    let mut lines = vec![
        format!("A = {}", f.a),
        format!("B = {}", f.b),
        format!("C = {}", f.c),
        format!("equation: {}", f.equation_string()),
        format!("R- = {}", sig10(lo)),
        format!("R+ = {}", sig10(hi)),
    ];
    let mut json = f.to_json();
    json["x"] = json!(x.to_string());
    json["radius_min"] = json!(sig10(lo));
    json["radius_max"] = json!(sig10(hi));
    if let Some(order) = a.order {
        let s = closed_form_series(&f, order as i64)?;
        lines.push(format!("series = {s}"));
        json["series"] = series_to_json(&s);
    }
    Ok(Output::new(lines.join("\n"), json))
}

fn qseq(a: QseqArgs) -> Result<Output> {
    let kind: SeqKind = a.kind.parse()?;
    let letter = match kind {
        SeqKind::Fibonacci => "F",
        SeqKind::Pell => "P",
    };
    if a.triangle {
        let rows = triangle(kind, a.upto, a.mirrored);
        let text = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n");
        let json = json!({
            "kind": kind.to_string(),
            "mirrored": a.mirrored,
            "rows": rows.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
        });
        return Ok(Output::new(text, json));
    }
    let seq = q_sequence(kind, a.upto);
    let text = seq
        .iter()
        .enumerate()
        .map(|(n, p)| format!("{letter}_{n} = {p}"))
        .collect::<Vec<_>>()
        .join("\n");
    let json = json!({ "kind": kind.to_string(), "polys": seq.iter().map(poly_to_json).collect::<Vec<_>>() });
    Ok(Output::new(text, json))
}

/// Exit code for a library error: malformed input is a usage error,
/// everything else a violated precondition.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{rendered}");
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let as_json = cli.json;
    match exec(cli.command) {
        Ok(o) => {
            let body = if as_json { o.json.to_string() } else { o.text };
            let _ = writeln!(out, "{body}");
            if o.failed {
                EXIT_DOMAIN
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
