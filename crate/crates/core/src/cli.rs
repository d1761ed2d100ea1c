//! The `fle-comb` command line.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error, 3 inconclusive.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::affweyl::DEFAULT_BALL_CAP;
use crate::blockmatch::{self, DualSide, Verdict};
use crate::duality;
use crate::error::{Error, Result};
use crate::goodness;
use crate::intweyl;
use crate::levels::{self, Level};
use crate::rootdata::{CartanType, RootDatum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

pub const DEFAULT_BOUND: usize = 8;

#[derive(Debug, Parser)]
#[command(
    name = "fle-comb",
    version,
    about = "Exact combinatorics of affine Weyl groups at a level"
)]
pub struct Cli {
    /// Print JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// File of `key = value` lines setting default `bound` and `cap`.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct TypeLevel {
    /// Cartan type such as `A2`, `G2`, `E8`.
    #[arg(long = "type", value_name = "TYPE")]
    pub ty: String,
    /// Level literal: `-h+p/q`, `-h-p/q` or `irr`.
    #[arg(long, allow_hyphen_values = true)]
    pub level: String,
}

#[derive(Debug, Args, Default)]
pub struct Bounds {
    /// Length bound of the ball in the affine Weyl group.
    #[arg(long)]
    pub bound: Option<usize>,
    /// Maximum number of group elements enumerated.
    #[arg(long)]
    pub cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan matrix, roots and constants of a simple type.
    Rootdata { letter: String, rank: usize },
    /// The dual level on the Langlands dual type.
    DualLevel {
        #[command(flatten)]
        tl: TypeLevel,
    },
    /// Goodness from the bad-prime table and the alcove oracle.
    Good {
        #[command(flatten)]
        tl: TypeLevel,
        /// Search width of the alcove oracle.
        #[arg(long)]
        width: Option<i64>,
    },
    /// Simple reflections of the integral Weyl group.
    Intweyl {
        #[command(flatten)]
        tl: TypeLevel,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Double-coset blocks in a ball.
    Blocks {
        #[command(flatten)]
        tl: TypeLevel,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Stabilizer matching across level duality.
    Match {
        #[command(flatten)]
        tl: TypeLevel,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// The Coxeter isomorphism between dual integral Weyl groups.
    VerifyDuality {
        #[command(flatten)]
        tl: TypeLevel,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// The three descriptions of parahoric highest weights.
    Parahoric {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        /// Comma-separated finite simple indices (0-based).
        #[arg(long, value_delimiter = ',')]
        subset: Vec<usize>,
        #[command(flatten)]
        bounds: Bounds,
    },
}

/// Defaults read from a config file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub bound: usize,
    pub cap: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            bound: DEFAULT_BOUND,
            cap: DEFAULT_BALL_CAP,
        }
    }
}

impl Config {
    /// `key = value` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut c = Config::default();
        for (k, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!("config line {}: expected key = value", k + 1))
            })?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("config line {}: bad number", k + 1)))?;
            match key.trim() {
                "bound" => c.bound = value,
                "cap" => c.cap = value,
                other => {
                    return Err(Error::Parse(format!(
                        "config line {}: unknown key `{other}`",
                        k + 1
                    )))
                }
            }
        }
        Ok(c)
    }

    fn resolve(&self, b: &Bounds) -> (usize, usize) {
        (b.bound.unwrap_or(self.bound), b.cap.unwrap_or(self.cap))
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: String) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg,
        }
    }
}

/// A finished report: JSON, a table, and the exit code.
struct Report {
    json: Value,
    table: String,
    code: i32,
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::BallCap { .. } => EXIT_INCONCLUSIVE,
        _ => EXIT_USAGE,
    }
}

fn parse_type(s: &str) -> Result<RootDatum> {
    Ok(RootDatum::build(s.parse::<CartanType>()?))
}

fn parse_type_level(tl: &TypeLevel) -> Result<(RootDatum, Level)> {
    Ok((parse_type(&tl.ty)?, tl.level.parse()?))
}

fn check_code(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn command_rootdata(letter: &str, rank: usize) -> Result<Report> {
    let mut chars = letter.chars();
    let (Some(ch), None) = (chars.next(), chars.next()) else {
        return Err(Error::Parse(format!(
            "expected a single type letter, got `{letter}`"
        )));
    };
    let d = RootDatum::build_root_datum(ch, rank)?;
    let f = d.require_simple()?;
    let mut t = String::new();
    let _ = writeln!(t, "type {}  rank {}", d.label(), d.rank());
    let _ = writeln!(t, "cartan matrix");
    for row in d.cartan() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
        let _ = writeln!(t, "  {}", cells.join(""));
    }
    let _ = writeln!(t, "positive roots        {}", d.positive_roots().len());
    let _ = writeln!(t, "coxeter number h      {}", f.coxeter_number);
    let _ = writeln!(t, "dual coxeter number   {}", f.dual_coxeter_number);
    let _ = writeln!(t, "lacing number r       {}", f.lacing_number);
    let _ = writeln!(t, "theta_s check         {:?}", f.theta_s_check);
    let _ = writeln!(t, "theta_l check         {:?}", f.theta_l_check);
    let _ = writeln!(t, "fundamental group     {}", d.fundamental_group_order());
    Ok(Report {
        json: d.to_json(),
        table: t,
        code: EXIT_OK,
    })
}

fn command_dual_level(tl: &TypeLevel) -> Result<Report> {
    let (d, l) = parse_type_level(tl)?;
    let dd = d.langlands_dual();
    let dual = levels::dual_level(&l, &d)?;
    let back = levels::dual_level(&dual, &dd)?;
    let involution = back == l;
    Ok(Report {
        json: json!({
            "type": d.label(),
            "level": l.to_json(),
            "dual_type": dd.label(),
            "dual_level": dual.to_json(),
            "involution": involution,
        }),
        table: format!(
            "{} at {l}  ->  {} at {dual}\ninvolution: {}\n",
            d.label(),
            dd.label(),
            yes_no(involution)
        ),
        code: check_code(involution),
    })
}

fn command_good(tl: &TypeLevel, width: Option<i64>) -> Result<Report> {
    let (d, l) = parse_type_level(tl)?;
    let table = goodness::is_good_table(&l, &d)?;
    let oracle = goodness::is_good_alcove_oracle(&l, &d, width)?;
    let agree = match oracle.verdict {
        goodness::Verdict::Good => Some(table),
        goodness::Verdict::Bad => Some(!table),
        goodness::Verdict::Inconclusive => None,
    };
    let code = match agree {
        Some(true) => EXIT_OK,
        Some(false) => EXIT_MISMATCH,
        None => EXIT_INCONCLUSIVE,
    };
    let mut t = format!(
        "{} at {l}\ntable:  {}\noracle: {} ({}, width {})\n",
        d.label(),
        if table { "good" } else { "bad" },
        oracle.verdict.as_str(),
        oracle.method,
        oracle.width
    );
    let (mut witnesses, mut obstructions, mut open) = (0, 0, 0);
    for f in &oracle.faces {
        let note = match &f.status {
            goodness::FaceStatus::Witness { .. } => {
                witnesses += 1;
                continue;
            }
            goodness::FaceStatus::Obstruction { divisor } => {
                obstructions += 1;
                format!("obstruction d={divisor}")
            }
            goodness::FaceStatus::Inconclusive => {
                open += 1;
                "inconclusive".to_string()
            }
        };
        if obstructions + open <= 12 {
            let _ = writeln!(
                t,
                "  face {:>4}  stabilizer {:?}  {note}",
                f.face, f.stabilizer
            );
        }
    }
    if !oracle.faces.is_empty() {
        let _ = writeln!(
            t,
            "{} faces: {witnesses} witnessed, {obstructions} obstructed, {open} inconclusive",
            oracle.faces.len()
        );
    }
    Ok(Report {
        json: json!({
            "type": d.label(),
            "level": l.to_json(),
            "good": table,
            "oracle": oracle.to_json(),
            "agree": agree,
        }),
        table: t,
        code,
    })
}

fn command_intweyl(tl: &TypeLevel, bound: usize, cap: usize) -> Result<Report> {
    let (d, l) = parse_type_level(tl)?;
    let mut g = intweyl::integral_weyl_group(&d, &l)?;
    g.ambient = g.ambient.with_cap(cap);
    let (by_words, by_lattice, agree) = intweyl::generation_check(&g, bound, cap)?;
    let mut t = format!("{} at {l}: {} simple reflections\n", d.label(), g.rank());
    for (a, s) in g.simple_coroots.iter().zip(&g.simple_reflections) {
        let _ = writeln!(t, "  {a:<16} {}", s.to_text(&d));
    }
    let _ = writeln!(
        t,
        "translation lattice multipliers {:?}",
        g.translation_lattice.multipliers
    );
    let _ = writeln!(
        t,
        "ball {bound}: generated {by_words}, lattice description {by_lattice}, agree: {}",
        yes_no(agree)
    );
    Ok(Report {
        json: json!({
            "group": g.to_json(),
            "generation": {
                "bound": bound,
                "by_words": by_words,
                "by_lattice": by_lattice,
                "agree": agree,
            },
        }),
        table: t,
        code: check_code(agree),
    })
}

fn command_blocks(tl: &TypeLevel, bound: usize, cap: usize) -> Result<Report> {
    let (d, l) = parse_type_level(tl)?;
    let blocks = blockmatch::BlockContext::new(&d, &l)?
        .with_cap(cap)
        .blocks(bound)?;
    let consistent = blocks.iter().all(|b| b.is_consistent());
    let mut t = format!(
        "{} at {l}, ball {bound}: {} blocks\n",
        d.label(),
        blocks.len()
    );
    let _ = writeln!(
        t,
        "  {:<16} {:>6} {:>7}  {:<12} y",
        "weight", "length", "window", "stabilizer"
    );
    for b in &blocks {
        let _ = writeln!(
            t,
            "  {:<16} {:>6} {:>7}  {:<12} {}{}",
            format!("{:?}", b.weight),
            b.length,
            b.window.len(),
            format!("{:?}", b.stabilizer),
            b.minimal.to_text(&d),
            if b.is_consistent() { "" } else { "  (FAILED)" }
        );
    }
    Ok(Report {
        json: json!({
            "type": d.label(),
            "level": l.to_json(),
            "bound": bound,
            "blocks": blocks.iter().map(|b| b.to_json(&d)).collect::<Vec<_>>(),
            "summary": {"blocks": blocks.len(), "consistent": consistent},
        }),
        table: t,
        code: check_code(consistent),
    })
}

fn command_match(tl: &TypeLevel, bound: usize, cap: usize) -> Result<Report> {
    let (d, l) = parse_type_level(tl)?;
    let report = DualSide::new(&d, &l)?.with_cap(cap).report(bound)?;
    let mut t = format!(
        "{} at {l}  vs  {} at {}, ball {bound}\n",
        d.label(),
        d.langlands_dual().label(),
        report.dual_level
    );
    let _ = writeln!(
        t,
        "  {:<16} {:<12} {:<12} verdict",
        "weight", "whittaker", "kac-moody"
    );
    for b in &report.blocks {
        let _ = writeln!(
            t,
            "  {:<16} {:<12} {:<12} {}",
            format!("{:?}", b.block.weight),
            format!("{:?}", b.whittaker),
            format!("{:?}", b.kac_moody),
            b.verdict.as_str()
        );
    }
    let _ = writeln!(
        t,
        "{} blocks, {} match: {}",
        report.blocks.len(),
        report.count(Verdict::Match),
        report.verdict().as_str()
    );
    Ok(Report {
        json: report.to_json(&d),
        table: t,
        code: check_code(report.verdict() == Verdict::Match),
    })
}

fn command_verify_duality(tl: &TypeLevel, bound: usize, cap: usize) -> Result<Report> {
    let (d, l) = parse_type_level(tl)?;
    let r = duality::verify_coxeter_iso_capped(&l, &d, bound, cap)?;
    let verdict = if r.success() { "MATCH" } else { "MISMATCH" };
    let mut json = r.to_json();
    json["verdict"] = json!(verdict);
    let mut t = format!("{} at {l}  vs  dual at {}\n", d.label(), r.dual_level);
    let _ = writeln!(t, "generators correspond   {}", yes_no(r.generators_match));
    let _ = writeln!(
        t,
        "coxeter matrices equal  {}",
        yes_no(r.coxeter_matrix == r.dual_coxeter_matrix)
    );
    for row in &r.coxeter_matrix {
        let cells: Vec<String> = row
            .iter()
            .map(|m| {
                if *m == 0 {
                    "  ∞".to_string()
                } else {
                    format!("{m:>3}")
                }
            })
            .collect();
        let _ = writeln!(t, "  {}", cells.join(""));
    }
    let _ = writeln!(t, "lattice bijection       {}", yes_no(r.lattice_bijection));
    let _ = writeln!(
        t,
        "lengths preserved       {} ({} elements)",
        yes_no(r.lengths_preserved),
        r.lengths_checked
    );
    let _ = writeln!(t, "{verdict}");
    Ok(Report {
        json,
        table: t,
        code: check_code(r.success()),
    })
}

fn command_parahoric(ty: &str, subset: &[usize], bound: usize, cap: usize) -> Result<Report> {
    let d = parse_type(ty)?;
    let r = blockmatch::parahoric_subset_check_capped(&d, subset, bound, cap)?;
    let t = format!(
        "{} subset {subset:?}, ball {bound} ({} elements, {} undecided)\n  whittaker  {}\n  kac-moody  {}\n  maximal    {}\nequal: {}\n",
        d.label(),
        r.core,
        r.undecided,
        r.whittaker.len(),
        r.kac_moody.len(),
        r.maximal.len(),
        yes_no(r.equal())
    );
    Ok(Report {
        json: r.to_json(&d),
        table: t,
        code: check_code(r.equal()),
    })
}

fn dispatch(cli: &Cli, config: &Config) -> Result<Report> {
    match &cli.command {
        Command::Rootdata { letter, rank } => command_rootdata(letter, *rank),
        Command::DualLevel { tl } => command_dual_level(tl),
        Command::Good { tl, width } => command_good(tl, *width),
        Command::Intweyl { tl, bounds } => {
            let (b, c) = config.resolve(bounds);
            command_intweyl(tl, b, c)
        }
        Command::Blocks { tl, bounds } => {
            let (b, c) = config.resolve(bounds);
            command_blocks(tl, b, c)
        }
        Command::Match { tl, bounds } => {
            let (b, c) = config.resolve(bounds);
            command_match(tl, b, c)
        }
        Command::VerifyDuality { tl, bounds } => {
            let (b, c) = config.resolve(bounds);
            command_verify_duality(tl, b, c)
        }
        Command::Parahoric { ty, subset, bounds } => {
            let (b, c) = config.resolve(bounds);
            command_parahoric(ty, subset, b, c)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let config = match &cli.config {
        None => Config::default(),
        Some(path) => match std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
            .and_then(|s| Config::parse(&s))
        {
            Ok(c) => c,
            Err(e) => return Outcome::usage(format!("error: {e}\n")),
        },
    };
    match dispatch(&cli, &config) {
        Ok(r) => Outcome {
            code: r.code,
            stdout: if cli.json {
                let mut s = serde_json::to_string_pretty(&r.json).expect("reports serialize");
                s.push('\n');
                s
            } else {
                r.table
            },
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code_for(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
