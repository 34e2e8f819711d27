//! JSON command-line front end.
//!
//! Every command reads JSON payloads from file arguments (or `-` for
//! stdin) and writes one line of compact JSON to stdout. Exit status is 0
//! on success, 1 when the input cannot be parsed and 2 when a well-formed
//! input is rejected by the mathematics; both failures print
//! `{"error": "<name>", "detail": "..."}`.
//!
//! Scalars use the text format of [`crate::gaussq`] (`"3/4-2*i"`; bare
//! integers are also accepted). Matrices are `{"n": 2, "entries": [[..],
//! [..]]}`, torus elements `{"diag": [..]}` (either form is accepted where
//! the other is expected, when it makes sense), permutations are 1-based
//! one-line lists such as `[2, 1]`.

use std::fs;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;
use crate::gaussq::GaussianRational;
use crate::nhat::{connect, nhat_generators, sl2_generators, wmap_eval, WMap};
use crate::paction::{check_axioms, counterexample_generators, AxiomReport, GeneratorSet, Point};
use crate::perm::Permutation;
use crate::sample::{Sampler, DEFAULT_SEED};
use crate::sl2class::{
    adherence, canonical_label, classify_coset, closed_form_generators, ss_pair_classify,
    t_double_coset_rep, tori_pair_label, CellPoint2, SemisimpleOrbit,
};
use crate::slmat::{
    bruhat_decompose, gauss_decompose, n_cell_factor, CellPoint, SLMatrix, TorusElement,
};

type Q = GaussianRational;

#[derive(Parser, Debug)]
#[command(
    name = "torus-cosets",
    version,
    about = "Exact double-coset computations in SL_n over the Gaussian rationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Gauss factorization g = v t u on the big cell.
    Gauss {
        #[arg(default_value = "-")]
        matrix: String,
    },
    /// Bruhat factorization g = u1 w t u2.
    Bruhat {
        #[arg(default_value = "-")]
        matrix: String,
    },
    /// Factorization g = n1 p with n1 monomial and p in U^-U.
    Nfactor {
        #[arg(default_value = "-")]
        matrix: String,
    },
    /// Label of the N-double coset of an SL_2 matrix.
    Coset {
        #[arg(default_value = "-")]
        matrix: String,
    },
    /// Canonical orbit label of an SL_2 slice point.
    Label {
        #[arg(default_value = "-")]
        point: String,
    },
    /// Representative of the T-double coset of an SL_2 matrix.
    Tcoset {
        #[arg(default_value = "-")]
        matrix: String,
    },
    /// Orbit label of the pair of tori (g T g^-1, h T h^-1).
    ToriPair { g: String, h: String },
    /// Orbit of a pair of semisimple elements (X, Y) in the classes of t, tp.
    SsPair {
        x: String,
        y: String,
        t: String,
        tp: String,
    },
    /// Fiber value and closure data of a semisimple-pair orbit.
    Adherence {
        orbit: String,
        t: String,
        tp: String,
    },
    /// Evaluate w_{w1,w2} at a slice point; prints null where undefined.
    WmapEval {
        /// 1-based one-line permutation, e.g. "2,1".
        #[arg(long)]
        w1: String,
        #[arg(long)]
        w2: String,
        #[arg(default_value = "-")]
        point: String,
    },
    /// Normal form connecting u1 to the point of n1 u1 n2.
    Connect { u1: String, n1: String, n2: String },
    /// Check the partial-action axioms for a preset generator set.
    AxiomsCheck {
        #[arg(long, value_enum)]
        preset: Preset,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Number of sample points (default depends on the preset).
        #[arg(long)]
        points: Option<usize>,
        /// Maximal word length (default depends on the preset).
        #[arg(long)]
        depth: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Preset {
    /// wl, wr, wd and a torus conjugation on SL_2, matrix evaluation.
    Sl2Nhat,
    /// The same generators through their closed forms.
    Sl2Closed,
    /// The plane involution (x1, (x1 - 1)/x2), starting at (1, 1).
    Sl2Counterexample,
    /// Simple-reflection maps and a torus conjugation on SL_3.
    Nhat3,
}

enum Failure {
    Parse(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(s) => Failure::Parse(s),
            e => Failure::Domain(e),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

#[derive(Serialize)]
struct ErrorBody<'a> {
    error: &'a str,
    detail: String,
}

/// Runs the command line `args` (program name first) and returns the exit
/// status and the text for stdout.
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string()),
                _ => error_output(1, "ParseError", e.to_string().trim().to_owned()),
            };
        }
    };
    let mut io = Inputs { stdin, used: false };
    match execute(cli.command, &mut io) {
        Ok(v) => (0, format!("{v}\n")),
        Err(Failure::Parse(detail)) => error_output(1, "ParseError", detail),
        Err(Failure::Domain(e)) => error_output(2, e.name(), e.to_string()),
    }
}

fn error_output(code: i32, name: &str, detail: String) -> (i32, String) {
    let body = serde_json::to_string(&ErrorBody {
        error: name,
        detail,
    })
    .expect("serializable");
    (code, format!("{body}\n"))
}

struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Inputs<'_> {
    fn json(&mut self, source: &str) -> CliResult<Value> {
        let text = if source == "-" {
            if self.used {
                return Err(Failure::Parse(
                    "stdin can be used for one argument only".into(),
                ));
            }
            self.used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Parse(format!("reading stdin: {e}")))?;
            s
        } else {
            fs::read_to_string(source)
                .map_err(|e| Failure::Parse(format!("reading {source}: {e}")))?
        };
        serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{source}: {e}")))
    }

    fn matrix(&mut self, source: &str) -> CliResult<SLMatrix> {
        let v = self.json(source)?;
        matrix_from_value(v)
    }

    fn torus(&mut self, source: &str) -> CliResult<TorusElement> {
        let v = self.json(source)?;
        if v.get("diag").is_some() {
            let w: TorusWire = from_value(v)?;
            return Ok(TorusElement::new(w.diag)?);
        }
        let m = matrix_from_value(v)?;
        Ok(TorusElement::from_matrix(&m)?)
    }

    /// A slice point: `{"n", "lower", "upper"}` or `{"alpha", "beta"}`.
    fn point(&mut self, source: &str) -> CliResult<CellPoint> {
        let v = self.json(source)?;
        if v.get("alpha").is_some() {
            let p: CellPoint2 = from_value(v)?;
            return Ok(p.to_cell_point());
        }
        let w: PointWire = from_value(v)?;
        Ok(CellPoint::new(w.n, w.lower, w.upper)?)
    }
}

#[derive(Deserialize)]
struct MatrixIn {
    n: usize,
    entries: Vec<Vec<Q>>,
}

#[derive(Deserialize)]
struct TorusWire {
    diag: Vec<Q>,
}

#[derive(Deserialize)]
struct PointWire {
    n: usize,
    lower: Vec<Q>,
    upper: Vec<Q>,
}

fn from_value<T: for<'de> Deserialize<'de>>(v: Value) -> CliResult<T> {
    serde_json::from_value(v).map_err(|e| Failure::Parse(e.to_string()))
}

fn matrix_from_value(v: Value) -> CliResult<SLMatrix> {
    if v.get("diag").is_some() {
        let w: TorusWire = from_value(v)?;
        return Ok(TorusElement::new(w.diag)?.to_matrix());
    }
    let m: MatrixIn = from_value(v)?;
    if m.entries.len() != m.n || m.entries.iter().any(|r| r.len() != m.n) {
        return Err(Failure::Parse(format!(
            "entries do not form a {0}x{0} matrix",
            m.n
        )));
    }
    Ok(SLMatrix::from_rows(m.entries)?)
}

fn parse_perm(s: &str) -> CliResult<Permutation> {
    let images = s
        .trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Failure::Parse(format!("bad permutation entry {t:?}")))
        })
        .collect::<CliResult<Vec<usize>>>()?;
    Ok(Permutation::from_one_line(&images)?)
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("output types serialize")
}

#[derive(Serialize)]
struct AxiomsOutput {
    preset: Preset,
    seed: u64,
    depth: usize,
    #[serde(flatten)]
    report: AxiomReport,
}

fn preset_data(
    preset: Preset,
    seed: u64,
    points: Option<usize>,
) -> (GeneratorSet, Vec<Point>, usize) {
    let mut sampler = Sampler::new(seed);
    let mut sample = |n: usize, count: usize| -> Vec<Point> {
        (0..count).map(|_| sampler.cell_point(n).coords()).collect()
    };
    match preset {
        Preset::Sl2Nhat => (sl2_generators(), sample(2, points.unwrap_or(50)), 4),
        Preset::Sl2Closed => (closed_form_generators(), sample(2, points.unwrap_or(50)), 4),
        Preset::Sl2Counterexample => {
            let mut pts = vec![vec![Q::from_int(1), Q::from_int(1)]];
            pts.extend(sample(2, points.unwrap_or(1).saturating_sub(1)));
            (counterexample_generators(), pts, 4)
        }
        Preset::Nhat3 => (nhat_generators(3), sample(3, points.unwrap_or(10)), 2),
    }
}

fn execute(command: Command, io: &mut Inputs) -> CliResult<String> {
    Ok(match command {
        Command::Gauss { matrix } => to_json(&gauss_decompose(&io.matrix(&matrix)?)?),
        Command::Bruhat { matrix } => to_json(&bruhat_decompose(&io.matrix(&matrix)?)),
        Command::Nfactor { matrix } => to_json(&n_cell_factor(&io.matrix(&matrix)?)),
        Command::Coset { matrix } => to_json(&classify_coset(&io.matrix(&matrix)?)?),
        Command::Label { point } => {
            let p = CellPoint2::from_cell_point(&io.point(&point)?)?;
            to_json(&canonical_label(&p))
        }
        Command::Tcoset { matrix } => to_json(&t_double_coset_rep(&io.matrix(&matrix)?)?),
        Command::ToriPair { g, h } => {
            let (g, h) = (io.matrix(&g)?, io.matrix(&h)?);
            to_json(&tori_pair_label(&g, &h)?)
        }
        Command::SsPair { x, y, t, tp } => {
            let (x, y) = (io.matrix(&x)?, io.matrix(&y)?);
            let (t, tp) = (io.torus(&t)?, io.torus(&tp)?);
            to_json(&ss_pair_classify(&x, &y, &t, &tp)?)
        }
        Command::Adherence { orbit, t, tp } => {
            let o: SemisimpleOrbit = from_value(io.json(&orbit)?)?;
            let (t, tp) = (io.torus(&t)?, io.torus(&tp)?);
            to_json(&adherence(&o, &t, &tp)?)
        }
        Command::WmapEval { w1, w2, point } => {
            let map = WMap::from_perms(&parse_perm(&w1)?, &parse_perm(&w2)?)?;
            let p = io.point(&point)?;
            if p.n != map.n() {
                return Err(Error::DimensionMismatch {
                    expected: map.n(),
                    got: p.n,
                }
                .into());
            }
            to_json(&wmap_eval(&map, &p))
        }
        Command::Connect { u1, n1, n2 } => {
            let u1 = io.point(&u1)?;
            let (n1, n2) = (io.matrix(&n1)?, io.matrix(&n2)?);
            to_json(&connect(&u1, &n1, &n2)?)
        }
        Command::AxiomsCheck {
            preset,
            seed,
            points,
            depth,
        } => {
            let (set, pts, default_depth) = preset_data(preset, seed, points);
            let depth = depth.unwrap_or(default_depth);
            to_json(&AxiomsOutput {
                preset,
                seed,
                depth,
                report: check_axioms(&set, &pts, depth),
            })
        }
    })
}
