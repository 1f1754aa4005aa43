//! The `w0` command line: single queries, batch grids and table verification.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{fmt_q, parse_q, q, qf, Vector, Q};
use crate::orthoset::{check_type, restricted_types};
use crate::realforms::{instances, lookup, FormKind, RealForm};
use crate::reducer::{reducer, w0_action_any, Verdict, W0Action};
use crate::rootsys::{Family, RootSystem};
use crate::so1n::invariant_tableau;
use crate::subalg::golden::{golden_check_in, GoldenTable};
use crate::subalg::{build_s, SummandKind};

/// Largest number of lattice points a batch grid may enumerate.
pub const MAX_GRID_POINTS: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Records,
}

#[derive(Parser, Debug)]
#[command(
    name = "w0",
    version,
    about = "Sign of the longest restricted Weyl element on L-invariant vectors"
)]
pub struct Args {
    /// Real form, e.g. "so(1,5)", "sl(3,R)", "EIV" or "complex:A2".
    #[arg(long)]
    pub algebra: Option<String>,
    /// Highest weight as "fund:1,0,1" (Dynkin labels) or "eps:4,2,0"; bare
    /// coordinates are read as Dynkin labels.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: Option<String>,
    /// Print the invariant tableau of every so(1,n) constituent.
    #[arg(long)]
    pub witness: bool,
    #[arg(long, value_enum, default_value = "human")]
    pub format: Format,
    /// Evaluate a grid of weights, e.g. "fund:0..2", "eps:0..3;nonzero".
    #[arg(long)]
    pub batch: Option<String>,
    /// Check every catalogued form against the built-in tables of 𝔰.
    #[arg(long)]
    pub verify_golden: bool,
    /// With --verify-golden: only the exceptional rows.
    #[arg(long, requires = "verify_golden")]
    pub exceptional: bool,
    /// With --verify-golden: read the table from this file instead.
    #[arg(long, requires = "verify_golden")]
    pub golden_file: Option<PathBuf>,
    /// With --verify-golden: largest complex rank instantiated.
    #[arg(long, default_value_t = 8, requires = "verify_golden")]
    pub max_rank: usize,
    /// Worker threads for --batch and --verify-golden.
    #[arg(long)]
    pub jobs: Option<usize>,
}

/// Exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        Error::UnknownAlgebra { .. } | Error::ParameterRange { .. } | Error::InvalidSystem { .. } => 3,
        Error::InvalidWeight(_) | Error::NotARoot { .. } => 4,
        Error::Unsupported(_) | Error::Internal(_) => 5,
    }
}

/// A weight as typed by the user.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightInput {
    Eps(Vec<Q>),
    Fund(Vec<i64>),
}

impl WeightInput {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, body) = match s.split_once(':') {
            Some((k, b)) => (k.trim(), b),
            None => ("fund", s),
        };
        let items: Vec<&str> = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',').collect()
        };
        match kind {
            "eps" => Ok(WeightInput::Eps(items.iter().map(|x| parse_q(x)).collect::<Result<_>>()?)),
            "fund" => Ok(WeightInput::Fund(
                items
                    .iter()
                    .map(|x| {
                        x.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::Parse(format!("fundamental coordinates are integers, got {x:?}")))
                    })
                    .collect::<Result<_>>()?,
            )),
            k => Err(Error::Parse(format!("weight encoding must be eps or fund, got {k:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Query {
    pub algebra: String,
    pub weight: WeightInput,
    pub witness: bool,
}

/// The weight lattice of a form: one root system, or two for a complex form.
pub struct Coordinates {
    systems: Vec<RootSystem>,
}

impl Coordinates {
    pub fn of(form: &RealForm) -> Result<Self> {
        let systems = match &form.kind {
            FormKind::Absolute(d) => vec![d.complex_system.clone()],
            FormKind::Complex(t) => vec![RootSystem::of_type(*t)?, RootSystem::of_type(*t)?],
        };
        Ok(Coordinates { systems })
    }

    pub fn rank(&self) -> usize {
        self.systems.iter().map(RootSystem::rank).sum()
    }

    pub fn ambient_dim(&self) -> usize {
        self.systems.iter().map(|s| s.ambient_dim).sum()
    }

    /// ε-coordinates and Dynkin labels of a dominant integral weight.
    pub fn resolve(&self, w: &WeightInput) -> Result<(Vector, Vec<i64>)> {
        match w {
            WeightInput::Fund(labels) => {
                if labels.len() != self.rank() {
                    return Err(Error::InvalidWeight(format!(
                        "expected {} fundamental coordinates, got {}",
                        self.rank(),
                        labels.len()
                    )));
                }
                if labels.iter().any(|&x| x < 0) {
                    return Err(Error::InvalidWeight(format!("{labels:?} is not dominant")));
                }
                let mut eps = Vector(Vec::new());
                let mut rest = &labels[..];
                for s in &self.systems {
                    let (head, tail) = rest.split_at(s.rank());
                    eps = eps.concat(&s.from_int_labels(head));
                    rest = tail;
                }
                Ok((eps, labels.clone()))
            }
            WeightInput::Eps(coords) => {
                if coords.len() != self.ambient_dim() {
                    return Err(Error::InvalidWeight(format!(
                        "expected {} ε-coordinates, got {}",
                        self.ambient_dim(),
                        coords.len()
                    )));
                }
                let mut labels = Vec::new();
                let mut rest = &coords[..];
                for s in &self.systems {
                    let (head, tail) = rest.split_at(s.ambient_dim);
                    labels.extend(s.check_dominant_weight(&Vector(head.to_vec()))?);
                    rest = tail;
                }
                self.resolve(&WeightInput::Fund(labels))
            }
        }
    }
}

/// The tableau certifying the invariant in one so(1,n) factor.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FactorWitness {
    pub summand: String,
    pub weight: Vec<String>,
    pub sign: i32,
    /// Rows of the invariant tableau (n ≥ 4 only).
    pub tableau: Option<[String; 2]>,
}

/// One 𝔰-constituent carrying an invariant line.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub weight: Vec<String>,
    pub multiplicity: u64,
    pub sign: i32,
    pub factors: Vec<FactorWitness>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub algebra: String,
    pub s_summary: Option<String>,
    pub weight_eps: Vector,
    pub weight_fund: Vec<i64>,
    pub action: W0Action,
    pub witnesses: Vec<Witness>,
}

/// Line-delimited machine output, one JSON object per weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub algebra: String,
    /// Exact rationals written as "p" or "p/q".
    pub weight_eps: Vec<String>,
    pub weight_fund: Vec<i64>,
    pub dim: u64,
    pub plus: u64,
    pub minus: u64,
    pub verdict: Verdict,
}

impl Report {
    pub fn record(&self) -> Record {
        Record {
            algebra: self.algebra.clone(),
            weight_eps: strings(&self.weight_eps),
            weight_fund: self.weight_fund.clone(),
            dim: self.action.dim(),
            plus: self.action.plus,
            minus: self.action.minus,
            verdict: self.action.verdict(),
        }
    }

    pub fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "algebra  {}", self.algebra);
        let _ = writeln!(s, "weight   eps {}  fund ({})", self.weight_eps, join(&self.weight_fund));
        if let Some(sum) = &self.s_summary {
            let _ = writeln!(s, "s        {sum}");
        }
        let a = &self.action;
        let _ = writeln!(s, "dim V^l  {}", a.dim());
        let _ = writeln!(s, "w0       +1: {}, -1: {}  ({})", a.plus, a.minus, a.verdict());
        for w in &self.witnesses {
            let sign = if w.sign > 0 { "+1" } else { "-1" };
            let _ = writeln!(s, "constituent ({}) x{}  sign {sign}", w.weight.join(","), w.multiplicity);
            for f in &w.factors {
                let _ = writeln!(s, "  {} at ({})", f.summand, f.weight.join(","));
                if let Some([r1, r2]) = &f.tableau {
                    let _ = writeln!(s, "    {r1}\n    {r2}");
                }
            }
        }
        s
    }
}

fn strings(v: &Vector) -> Vec<String> {
    v.0.iter().map(fmt_q).collect()
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn witnesses(form: &RealForm, lambda: &Vector) -> Result<Vec<Witness>> {
    let FormKind::Absolute(_) = &form.kind else { return Ok(Vec::new()) };
    let r = reducer(&form.name)?;
    let mut out = Vec::new();
    for c in r.branch_pruned(lambda)? {
        let (1, Some(sign)) = r.constituent_invariants(&c) else { continue };
        let mut factors = Vec::new();
        for (s, hw) in r.decomposition.summands.iter().zip(&c.highest_weights) {
            let (SummandKind::So1n(n), Some(hw)) = (&s.kind, hw) else { continue };
            let as_int = |x: &Q| x.is_integer().then(|| x.to_integer());
            let l1 = as_int(&hw[0]);
            let l2 = if hw.dim() > 1 { as_int(&hw[1]) } else { Some(0) };
            let tableau = match (*n >= 4, l1, l2) {
                (true, Some(a), Some(b)) => {
                    let t = invariant_tableau(a, b)?;
                    t.check(a, b)?;
                    let [r1, r2] = t.rows();
                    Some([r1.join(" "), r2.join(" ")])
                }
                _ => None,
            };
            let factor_sign = if l1.is_some_and(|a| a % 2 != 0) { -1 } else { 1 };
            factors.push(FactorWitness {
                summand: s.kind.to_string(),
                weight: strings(hw),
                sign: factor_sign,
                tableau,
            });
        }
        out.push(Witness {
            weight: strings(&c.weight),
            multiplicity: c.multiplicity,
            sign,
            factors,
        });
    }
    Ok(out)
}

fn evaluate(form: &RealForm, eps: Vector, fund: Vec<i64>, witness: bool) -> Result<Report> {
    let action = w0_action_any(form, &eps)?;
    let s_summary = match &form.kind {
        FormKind::Absolute(_) if !form.is_compact() => Some(build_s(form)?.summary()),
        _ => None,
    };
    let witnesses = if witness { witnesses(form, &eps)? } else { Vec::new() };
    Ok(Report {
        algebra: form.name.clone(),
        s_summary,
        weight_eps: eps,
        weight_fund: fund,
        action,
        witnesses,
    })
}

pub fn run_query(query: &Query) -> Result<Report> {
    let form = lookup(&query.algebra)?;
    let (eps, fund) = Coordinates::of(&form)?.resolve(&query.weight)?;
    evaluate(&form, eps, fund, query.witness)
}

/// A bounded grid of weights: `fund:<lo>..<hi>[,<lo>..<hi>...]` or
/// `eps:<lo>..<hi>[,...]`, optionally followed by `;nonzero`. A single range
/// applies to every coordinate; ε-grids step by 1/2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub eps: bool,
    pub ranges: Vec<(Q, Q)>,
    pub nonzero_only: bool,
}

impl GridSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("bad grid {s:?}: {m}"));
        let (body, filter) = match s.split_once(';') {
            Some((b, f)) => (b, Some(f.trim())),
            None => (s, None),
        };
        let nonzero_only = match filter {
            None => false,
            Some("nonzero") => true,
            Some(f) => return Err(bad(&format!("unknown filter {f:?}"))),
        };
        let (kind, ranges) = body
            .split_once(':')
            .ok_or_else(|| bad("expected fund:<lo>..<hi> or eps:<lo>..<hi>"))?;
        let eps = match kind.trim() {
            "eps" => true,
            "fund" => false,
            k => return Err(bad(&format!("unknown encoding {k:?}"))),
        };
        let ranges = ranges
            .split(',')
            .map(|r| {
                let (lo, hi) = r.split_once("..").ok_or_else(|| bad("ranges are written lo..hi"))?;
                if hi.trim().is_empty() {
                    return Err(bad("unbounded grid"));
                }
                let lo = if lo.trim().is_empty() { q(0) } else { parse_q(lo)? };
                let (lo, hi) = (lo, parse_q(hi)?);
                if !eps && !(lo.is_integer() && hi.is_integer()) {
                    return Err(bad("fundamental ranges are integral"));
                }
                Ok((lo, hi))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GridSpec { eps, ranges, nonzero_only })
    }

    fn steps(&self, n: usize) -> Result<Vec<Vec<Q>>> {
        if self.ranges.len() != 1 && self.ranges.len() != n {
            return Err(Error::Parse(format!("grid has {} ranges for {n} coordinates", self.ranges.len())));
        }
        let step = if self.eps { qf(1, 2) } else { q(1) };
        let axes: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                let (lo, hi) = self.ranges[if self.ranges.len() == 1 { 0 } else { i }];
                let mut v = Vec::new();
                let mut x = lo;
                while x <= hi {
                    v.push(x);
                    x += step;
                }
                v
            })
            .collect();
        let total = axes.iter().try_fold(1u64, |acc, a| acc.checked_mul(a.len() as u64));
        match total {
            Some(t) if t <= MAX_GRID_POINTS => Ok(axes),
            _ => Err(Error::Parse(format!("grid exceeds {MAX_GRID_POINTS} points; narrow the ranges"))),
        }
    }

    /// Dominant integral weights in the grid, as sorted Dynkin labels.
    pub fn weights(&self, coords: &Coordinates) -> Result<Vec<Vec<i64>>> {
        let n = if self.eps { coords.ambient_dim() } else { coords.rank() };
        let axes = self.steps(n)?;
        let mut out = BTreeSet::new();
        if axes.iter().any(Vec::is_empty) {
            return Ok(Vec::new());
        }
        let mut idx = vec![0usize; n];
        loop {
            let point: Vec<Q> = idx.iter().zip(&axes).map(|(&i, a)| a[i]).collect();
            let w = if self.eps {
                WeightInput::Eps(point)
            } else {
                WeightInput::Fund(point.iter().map(|x| x.to_integer()).collect())
            };
            match coords.resolve(&w) {
                Ok((_, labels)) => {
                    out.insert(labels);
                }
                Err(Error::InvalidWeight(_)) => {}
                Err(e) => return Err(e),
            }
            let mut k = 0;
            loop {
                if k == n {
                    return Ok(out.into_iter().collect());
                }
                idx[k] += 1;
                if idx[k] < axes[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }
}

/// Evaluates every weight of a grid. Rows come out sorted by Dynkin labels,
/// whatever the number of threads.
pub fn run_batch(algebra: &str, grid: &GridSpec, witness: bool) -> Result<Vec<Report>> {
    let form = lookup(algebra)?;
    let coords = Coordinates::of(&form)?;
    let weights = grid.weights(&coords)?;
    if let FormKind::Absolute(_) = form.kind {
        reducer(&form.name)?;
    }
    let rows: Vec<Report> = weights
        .into_par_iter()
        .map(|labels| {
            let (eps, fund) = coords.resolve(&WeightInput::Fund(labels))?;
            evaluate(&form, eps, fund, witness)
        })
        .collect::<Result<_>>()?;
    Ok(rows
        .into_iter()
        .filter(|r| !grid.nonzero_only || r.action.dim() > 0)
        .collect())
}

/// One line of the golden verification matrix.
#[derive(Clone, Debug)]
pub struct GoldenLine {
    pub form: String,
    pub table: u8,
    pub row_line: usize,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct OrthoLine {
    pub restricted_type: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct GoldenReport {
    pub rows: Vec<GoldenLine>,
    pub ortho: Vec<OrthoLine>,
}

impl GoldenReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed) && self.ortho.iter().all(|o| o.passed)
    }

    pub fn human(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let status = if r.passed { "pass" } else { "FAIL" };
            let _ = writeln!(s, "table {} line {:>3}  {:<14} {status}{}", r.table, r.row_line, r.form, r.detail);
        }
        for o in &self.ortho {
            let status = if o.passed { "pass" } else { "FAIL" };
            let _ = writeln!(s, "ortho set {:<6} {status}{}", o.restricted_type, o.detail);
        }
        let ok_rows = self.rows.iter().filter(|r| r.passed).count();
        let ok_ortho = self.ortho.iter().filter(|o| o.passed).count();
        let _ = writeln!(
            s,
            "golden rows: {ok_rows}/{} pass; ortho sets: {ok_ortho}/{} pass",
            self.rows.len(),
            self.ortho.len()
        );
        s
    }
}

/// Runs the table check on every catalogued form up to `max_rank` and
/// verifies Ξ for every restricted type of that rank.
pub fn verify_golden(table: &GoldenTable, max_rank: usize, exceptional_only: bool) -> GoldenReport {
    let names = instances(max_rank);
    let mut rows: Vec<GoldenLine> = names
        .par_iter()
        .filter_map(|name| {
            let form = match lookup(name) {
                Ok(f) => f,
                Err(e) => return Some(failed(name, e)),
            };
            if exceptional_only && !is_exceptional(&form) {
                return None;
            }
            match golden_check_in(table, &form) {
                Ok(None) => None,
                Ok(Some(v)) => {
                    let detail = if v.passed() {
                        v.erratum.as_ref().map(|(why, _)| format!("  (erratum: {why})")).unwrap_or_default()
                    } else {
                        format!("  {v}")
                    };
                    Some(GoldenLine {
                        form: v.real_form.clone(),
                        table: v.table,
                        row_line: v.row_line,
                        passed: v.passed(),
                        detail,
                    })
                }
                Err(e) => Some(failed(name, e)),
            }
        })
        .collect();
    rows.sort_by_key(|a| (a.table, a.row_line));
    let ortho = restricted_types(max_rank)
        .into_par_iter()
        .filter(|t| !exceptional_only || matches!(t.reduced.family, Family::E | Family::F | Family::G))
        .map(|t| match check_type(t) {
            Ok((set, v)) => OrthoLine {
                restricted_type: t.to_string(),
                passed: v.passed(),
                detail: if v.passed() { String::new() } else { format!("  {}", v.describe(&set.roots)) },
            },
            Err(e) => OrthoLine {
                restricted_type: t.to_string(),
                passed: false,
                detail: format!("  {e}"),
            },
        })
        .collect();
    GoldenReport { rows, ortho }
}

fn failed(name: &str, e: Error) -> GoldenLine {
    GoldenLine {
        form: name.to_string(),
        table: 0,
        row_line: 0,
        passed: false,
        detail: format!("  {e}"),
    }
}

fn is_exceptional(form: &RealForm) -> bool {
    matches!(form.complex_type().family, Family::E | Family::F | Family::G)
}

fn human_table(rows: &[Report]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:<12} {:<24} {:<16} {:>4} {:>4} {:>4}  verdict", "algebra", "eps", "fund", "dim", "+1", "-1");
    for r in rows {
        let a = &r.action;
        let _ = writeln!(
            s,
            "{:<12} {:<24} {:<16} {:>4} {:>4} {:>4}  {}",
            r.algebra,
            r.weight_eps.to_string(),
            format!("({})", join(&r.weight_fund)),
            a.dim(),
            a.plus,
            a.minus,
            a.verdict()
        );
    }
    s
}

fn records(rows: &[Report]) -> Result<String> {
    let mut s = String::new();
    for r in rows {
        let line = serde_json::to_string(&r.record()).map_err(|e| Error::Internal(e.to_string()))?;
        s.push_str(&line);
        s.push('\n');
    }
    Ok(s)
}

/// Runs the command and returns its output and exit status.
pub fn execute(args: &Args) -> (String, i32) {
    let run = || -> Result<(String, i32)> {
        if args.verify_golden {
            let table = match &args.golden_file {
                Some(p) => {
                    let text = std::fs::read_to_string(p)
                        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", p.display())))?;
                    GoldenTable::parse(&text)?
                }
                None => GoldenTable::builtin().clone(),
            };
            let report = verify_golden(&table, args.max_rank, args.exceptional);
            return Ok((report.human(), if report.passed() { 0 } else { 1 }));
        }
        let algebra = args
            .algebra
            .as_deref()
            .ok_or_else(|| Error::Parse("--algebra is required (or use --verify-golden)".into()))?;
        let rows = match (&args.batch, &args.weight) {
            (Some(_), Some(_)) => return Err(Error::Parse("--batch and --weight are exclusive".into())),
            (Some(spec), None) => run_batch(algebra, &GridSpec::parse(spec)?, args.witness)?,
            (None, Some(w)) => vec![run_query(&Query {
                algebra: algebra.to_string(),
                weight: WeightInput::parse(w)?,
                witness: args.witness,
            })?],
            (None, None) => return Err(Error::Parse("one of --weight or --batch is required".into())),
        };
        let text = match args.format {
            Format::Records => records(&rows)?,
            Format::Human if args.batch.is_some() => human_table(&rows),
            Format::Human => rows.iter().map(Report::human).collect(),
        };
        Ok((text, 0))
    };
    let go = || run().unwrap_or_else(|e| (format!("error: {e}\n"), exit_code(&e)));
    match args.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(go),
            Err(e) => (format!("error: {e}\n"), 5),
        },
        None => go(),
    }
}

/// Entry point of the `w0` binary.
pub fn main() -> i32 {
    let args = Args::parse();
    let (text, code) = execute(&args);
    if code == 0 || code == 1 {
        let _ = std::io::stdout().write_all(text.as_bytes());
    } else {
        let _ = std::io::stderr().write_all(text.as_bytes());
    }
    code
}
