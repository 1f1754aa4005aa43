//! Tabulated decompositions of 𝔰 and the comparison against `build_s`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

use super::{build_s, simple_coords_string, SummandDecomposition, SummandKind};
use crate::error::{Error, Result};
use crate::formula::{self, expand_range, split_top_level, Vars};
use crate::linalg::{q, Matrix, Vector};
use crate::realforms::{normalize_name, RealForm};
use crate::rootsys::{cartan_of, fmt_eps, CartanType, Family, RootSystem};

const HEADER: &str = "w0-golden 1";
const BUILTIN: &str = include_str!("../../data/golden.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineKind {
    So1n(String),
    Compact { family: String, size: String },
    Abelian(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandLine {
    pub kind: LineKind,
    pub range: Option<(String, String)>,
    pub flags: Vec<String>,
    pub roots: String,
}

#[derive(Clone, Debug)]
pub struct GoldenRow {
    pub table: u8,
    pub patterns: Vec<String>,
    pub constraint: String,
    pub lets: Vec<(String, String)>,
    pub footnotes: Vec<(String, String)>,
    pub summands: Vec<SummandLine>,
    pub erratum: Option<(String, Vec<SummandLine>)>,
    pub line: usize,
}

#[derive(Clone, Debug)]
pub struct GoldenTable {
    pub rows: Vec<GoldenRow>,
}

fn perr(line: usize, msg: &str) -> Error {
    Error::Parse(format!("golden line {line}: {msg}"))
}

fn parse_summand(line: usize, text: &str) -> Result<SummandLine> {
    let (head, roots) = match text.split_once(':') {
        Some((h, r)) => (h.trim(), r.trim().to_string()),
        None => (text.trim(), String::new()),
    };
    let (word, rest) = head.split_once(char::is_whitespace).unwrap_or((head, ""));
    let mut rest = rest.trim();
    let mut flags = Vec::new();
    if let Some((r, f)) = rest.split_once(" flag ").or_else(|| rest.strip_prefix("flag ").map(|f| ("", f))) {
        flags = f.split_whitespace().map(str::to_string).collect();
        rest = r.trim();
    }
    let mut range = None;
    if let Some((r, f)) = rest.split_once(" for ").or_else(|| rest.strip_prefix("for ").map(|f| ("", f))) {
        let (var, span) = f
            .split_once(" in ")
            .ok_or_else(|| perr(line, "expected `for <var> in <range>`"))?;
        range = Some((var.trim().to_string(), span.trim().to_string()));
        rest = r.trim();
    }
    let kind = match word {
        "so1n" => LineKind::So1n(rest.to_string()),
        "abelian" => LineKind::Abelian(rest.to_string()),
        "compact" => {
            let (family, size) = rest
                .strip_suffix(')')
                .and_then(|s| s.split_once('('))
                .ok_or_else(|| perr(line, "compact summand needs a label like su(k)"))?;
            if !["su", "so", "sp"].contains(&family) {
                return Err(perr(line, &format!("unknown compact family {family}")));
            }
            LineKind::Compact {
                family: family.to_string(),
                size: size.to_string(),
            }
        }
        _ => return Err(perr(line, &format!("unknown summand kind {word:?}"))),
    };
    if matches!(kind, LineKind::Abelian(_)) != roots.is_empty() {
        return Err(perr(line, "only abelian lines have no roots"));
    }
    Ok(SummandLine { kind, range, flags, roots })
}

impl GoldenTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        if lines.by_ref().find(|(_, l)| !l.is_empty()).map(|x| x.1) != Some(HEADER) {
            return Err(Error::Parse(format!("golden table must start with {HEADER:?}")));
        }
        let mut rows = Vec::new();
        let mut cur: Option<GoldenRow> = None;
        for (no, line) in lines {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (word, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match (word, cur.as_mut()) {
                ("row", None) => {
                    let (head, constraint) = rest.split_once(';').ok_or_else(|| perr(no, "row needs `; constraint`"))?;
                    let (table, pats) = head.trim().split_once(' ').ok_or_else(|| perr(no, "row needs a table number"))?;
                    cur = Some(GoldenRow {
                        table: table.parse().map_err(|_| perr(no, "bad table number"))?,
                        patterns: pats.split('|').map(|p| normalize_name(p.trim())).collect(),
                        constraint: constraint.trim().to_string(),
                        lets: Vec::new(),
                        footnotes: Vec::new(),
                        summands: Vec::new(),
                        erratum: None,
                        line: no,
                    });
                }
                ("end", Some(_)) => rows.push(cur.take().unwrap()),
                ("let", Some(row)) => {
                    let (v, e) = rest.split_once('=').ok_or_else(|| perr(no, "let needs `=`"))?;
                    row.lets.push((v.trim().to_string(), e.trim().to_string()));
                }
                ("footnote", Some(row)) => {
                    let (f, c) = rest.split_once(':').ok_or_else(|| perr(no, "footnote needs `:`"))?;
                    row.footnotes.push((f.trim().to_string(), c.trim().to_string()));
                }
                ("erratum", Some(row)) => row.erratum = Some((rest.to_string(), Vec::new())),
                (_, Some(row)) => {
                    let s = parse_summand(no, line)?;
                    match row.erratum.as_mut() {
                        Some((_, lines)) => lines.push(s),
                        None => row.summands.push(s),
                    }
                }
                (_, None) => return Err(perr(no, &format!("unexpected {word:?} outside a row"))),
            }
        }
        if let Some(row) = cur {
            return Err(perr(row.line, "row is not closed by `end`"));
        }
        Ok(GoldenTable { rows })
    }

    pub fn builtin() -> &'static GoldenTable {
        static T: OnceLock<GoldenTable> = OnceLock::new();
        T.get_or_init(|| GoldenTable::parse(BUILTIN).expect("built-in golden table parses"))
    }

    /// The row describing `name`, with its variables bound.
    pub fn find(&self, name: &str) -> Result<Option<(&GoldenRow, Vars)>> {
        let norm = normalize_name(name);
        for row in &self.rows {
            for p in &row.patterns {
                if let Some(mut vars) = formula::match_pattern(p, &norm) {
                    if formula::eval_bool(&row.constraint, &vars)? {
                        for (v, e) in &row.lets {
                            let x = formula::eval(e, &vars)?;
                            vars.insert(v.clone(), x);
                        }
                        return Ok(Some((row, vars)));
                    }
                }
            }
        }
        Ok(None)
    }
}

/// A summand of an instantiated table row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedSummand {
    pub kind: SummandKind,
    pub roots: Vec<Vector>,
    pub highlighted: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedRow {
    pub summands: Vec<ExpectedSummand>,
    pub abelian: usize,
}

fn parse_root(sys: &RootSystem, text: &str, vars: &Vars) -> Result<Vec<Vector>> {
    let text = text.trim();
    let bad = || Error::Parse(format!("golden root {text:?}"));
    if let Some(body) = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        let c: Vec<_> = body
            .split(',')
            .map(|x| x.trim().parse::<i64>().map(q).map_err(|_| bad()))
            .collect::<Result<_>>()?;
        if c.len() != sys.rank() {
            return Err(bad());
        }
        return Ok(vec![sys.from_simple_coords(&c)]);
    }
    if let Some(body) = text.strip_prefix("a(").and_then(|t| t.strip_suffix(')')) {
        if body.contains("..") {
            return expand_range(body, vars)?.into_iter().map(|k| simple_root(sys, k)).collect();
        }
    }
    // A signed sum of terms c·e(k) and c·a(k).
    let mut v = Vector::zeros(sys.ambient_dim);
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let mut sign = 1;
        while i < chars.len() && (chars[i] == '+' || chars[i] == '-' || chars[i].is_whitespace()) {
            if chars[i] == '-' {
                sign = -sign;
            }
            i += 1;
        }
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let coef: i64 = if i > start {
            chars[start..i].iter().collect::<String>().parse().map_err(|_| bad())?
        } else {
            1
        };
        let letter = *chars.get(i).ok_or_else(bad)?;
        if chars.get(i + 1) != Some(&'(') {
            return Err(bad());
        }
        let mut depth = 0;
        let mut j = i + 1;
        loop {
            match chars.get(j) {
                Some('(') => depth += 1,
                Some(')') => {
                    depth -= 1;
                    if depth == 0 {
                        break;
                    }
                }
                None => return Err(bad()),
                _ => {}
            }
            j += 1;
        }
        let k = formula::eval(&chars[i + 2..j].iter().collect::<String>(), vars)?;
        let term = match letter {
            'e' if k >= 1 && (k as usize) <= sys.ambient_dim => Vector::unit(sys.ambient_dim, k as usize - 1),
            'a' => simple_root(sys, k)?,
            _ => return Err(bad()),
        };
        v = &v + &term.scale(q(sign * coef));
        i = j + 1;
    }
    Ok(vec![v])
}

fn simple_root(sys: &RootSystem, k: i64) -> Result<Vector> {
    if k < 1 || k as usize > sys.rank() {
        return Err(Error::Parse(format!("simple root index {k} out of range for {}", sys.name())));
    }
    Ok(sys.simple_roots[k as usize - 1].clone())
}

fn compact_type(family: &str, k: i64) -> Option<CartanType> {
    let t = |f, r| Some(CartanType::new(f, r));
    match (family, k) {
        (_, k) if k < 1 => None,
        ("su", 1) | ("so", 1) | ("so", 2) => None,
        ("su", k) => t(Family::A, k as usize - 1),
        ("sp", k) => t(Family::C, k as usize),
        ("so", 3) => t(Family::A, 1),
        ("so", 4) => t(Family::D2Special, 2),
        ("so", 6) => t(Family::D, 3),
        ("so", k) if k % 2 == 1 => t(Family::B, (k as usize - 1) / 2),
        ("so", k) => t(Family::D, k as usize / 2),
        _ => None,
    }
}

fn instantiate(sys: &RootSystem, row: &GoldenRow, lines: &[SummandLine], vars: &Vars) -> Result<ExpectedRow> {
    let mut active = BTreeSet::new();
    for (f, cond) in &row.footnotes {
        if formula::eval_bool(cond, vars)? {
            active.insert(f.clone());
        }
    }
    let mut out = ExpectedRow {
        summands: Vec::new(),
        abelian: 0,
    };
    for line in lines {
        let values: Vec<Option<i64>> = match &line.range {
            Some((_, span)) => expand_range(span, vars)?.into_iter().map(Some).collect(),
            None => vec![None],
        };
        for val in values {
            let mut vars = vars.clone();
            if let (Some(x), Some((name, _))) = (val, &line.range) {
                vars.insert(name.clone(), x);
            }
            if line.flags.iter().any(|f| f == "a" && active.contains("a")) {
                out.abelian += 1;
                continue;
            }
            let kind = match &line.kind {
                LineKind::Abelian(e) => {
                    out.abelian += usize::try_from(formula::eval(e, &vars)?)
                        .map_err(|_| Error::Parse("negative abelian dimension".into()))?;
                    continue;
                }
                LineKind::So1n(e) => SummandKind::So1n(formula::eval(e, &vars)? as usize),
                LineKind::Compact { family, size } => {
                    match compact_type(family, formula::eval(size, &vars)?) {
                        Some(t) => SummandKind::Compact(t),
                        None => continue,
                    }
                }
            };
            let mut roots = Vec::new();
            let mut highlighted = Vec::new();
            for item in split_top_level(&line.roots, ",") {
                let item = item.trim();
                let (hl, body) = match item.strip_prefix('*') {
                    Some(b) => (true, b),
                    None => (false, item),
                };
                for r in parse_root(sys, body, &vars)? {
                    roots.push(r);
                    highlighted.push(hl);
                }
            }
            if line.flags.iter().any(|f| f == "b" && active.contains("b")) {
                highlighted.iter_mut().for_each(|h| *h = true);
            }
            out.summands.push(ExpectedSummand { kind, roots, highlighted });
        }
    }
    Ok(out)
}

/// Result of comparing `build_s` with the tables.
#[derive(Clone, Debug)]
pub struct GoldenVerdict {
    pub real_form: String,
    pub table: u8,
    pub row_line: usize,
    pub computed: String,
    /// Disagreements between the computation and the (corrected) row.
    pub diffs: Vec<String>,
    /// Agreements up to choice of simple system.
    pub notes: Vec<String>,
    /// For rows carrying an erratum: the reason and the disagreements of the
    /// row as printed.
    pub erratum: Option<(String, Vec<String>)>,
}

impl GoldenVerdict {
    /// Passes when the corrected row agrees and any erratum is still needed.
    pub fn passed(&self) -> bool {
        self.diffs.is_empty() && self.erratum.as_ref().is_none_or(|(_, d)| !d.is_empty())
    }
}

impl fmt::Display for GoldenVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{status} {} [table {}] {}", self.real_form, self.table, self.computed)?;
        for d in &self.diffs {
            write!(f, "\n    diff: {d}")?;
        }
        if let Some((why, d)) = &self.erratum {
            write!(f, "\n    erratum: {why}")?;
            if d.is_empty() {
                write!(f, " (but the printed row already agrees)")?;
            }
        }
        Ok(())
    }
}

/// Roots of 𝔤 that are integral combinations of `basis`.
fn generated(sys: &RootSystem, basis: &[Vector]) -> BTreeSet<Vector> {
    if basis.is_empty() {
        return BTreeSet::new();
    }
    let m = Matrix::from_columns(basis);
    sys.roots()
        .into_iter()
        .filter(|r| m.solve(r).is_some_and(|c| c.is_integral() && &m.apply(&c) == r))
        .collect()
}

fn show(sys: &RootSystem, v: &Vector, table: u8) -> String {
    if table == 2 {
        simple_coords_string(sys, v)
    } else {
        fmt_eps(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Order {
    Bourbaki,
    /// Bourbaki order once some of the listed roots are negated.
    UpToSign,
    Wrong,
}

fn ordered_correctly(kind: SummandKind, roots: &[Vector], highlighted: &[bool]) -> Order {
    if roots.is_empty() {
        return Order::Wrong;
    }
    let cartan = cartan_of(roots);
    let verdict = |b: &[Vec<i64>]| {
        let abs = |m: &[Vec<i64>]| -> Vec<Vec<i64>> { m.iter().map(|r| r.iter().map(|x| x.abs()).collect()).collect() };
        if b == cartan.as_slice() {
            Order::Bourbaki
        } else if abs(b) == abs(&cartan) {
            Order::UpToSign
        } else {
            Order::Wrong
        }
    };
    let want = match kind {
        SummandKind::So1n(2) if roots.len() == 1 => return Order::Bourbaki,
        SummandKind::So1n(3) if roots.len() == 2 && highlighted.iter().all(|h| *h) => return verdict(&[vec![2, 0], vec![0, 2]]),
        SummandKind::So1n(2) | SummandKind::So1n(3) => return Order::Wrong,
        SummandKind::So1n(n) if n % 2 == 0 => CartanType::new(Family::B, n / 2),
        SummandKind::So1n(n) => CartanType::new(Family::D, n.div_ceil(2)),
        SummandKind::Compact(t) if t.family == Family::D2Special => return verdict(&[vec![2, 0], vec![0, 2]]),
        SummandKind::Compact(t) => t,
        SummandKind::Abelian(_) => return Order::Wrong,
    };
    if let SummandKind::So1n(_) = kind {
        if !highlighted[0] || highlighted.iter().skip(1).any(|h| *h) {
            return Order::Wrong;
        }
    }
    let b = if want.family == Family::A && want.rank == 1 {
        vec![vec![2]]
    } else {
        match RootSystem::of_type(want) {
            Ok(s) => s.cartan,
            Err(_) => return Order::Wrong,
        }
    };
    verdict(&b)
}

fn compare(form: &RealForm, dec: &SummandDecomposition, exp: &ExpectedRow, table: u8) -> (Vec<String>, Vec<String>) {
    let d = form.datum().expect("absolutely simple");
    let sys = &d.complex_system;
    let mut diffs = Vec::new();
    let mut notes = Vec::new();

    for (k, s) in exp.summands.iter().enumerate() {
        for r in &s.roots {
            if !sys.is_root(r) {
                diffs.push(format!("listed {} is not a root", show(sys, r, table)));
            }
        }
        match ordered_correctly(s.kind, &s.roots, &s.highlighted) {
            Order::Bourbaki => {}
            Order::UpToSign => notes.push(format!(
                "summand {} ({}) is in Bourbaki order after negating some listed roots",
                k + 1,
                s.kind
            )),
            Order::Wrong => diffs.push(format!("summand {} ({}) is not listed in Bourbaki order", k + 1, s.kind)),
        }
        for (r, &h) in s.roots.iter().zip(&s.highlighted) {
            if d.project(r).is_zero() == h {
                diffs.push(format!(
                    "{} is {}highlighted but restricts to {}",
                    show(sys, r, table),
                    if h { "" } else { "not " },
                    if h { "zero" } else { "a nonzero weight" }
                ));
            }
        }
        for t in &exp.summands[k + 1..] {
            for a in &s.roots {
                for b in &t.roots {
                    if !a.dot(b).is_zero() {
                        diffs.push(format!(
                            "listed roots {} and {} of different summands are not orthogonal",
                            show(sys, a, table),
                            show(sys, b, table)
                        ));
                    }
                }
            }
        }
    }

    let computed_so: Vec<_> = dec.so1n().collect();
    let expected_so: Vec<_> = exp.summands.iter().filter(|s| matches!(s.kind, SummandKind::So1n(_))).collect();
    if computed_so.len() != expected_so.len() {
        diffs.push(format!(
            "{} so(1,n) summands computed, {} listed",
            computed_so.len(),
            expected_so.len()
        ));
    }
    let mut used = vec![false; computed_so.len()];
    for s in &expected_so {
        let want = generated(sys, &s.roots);
        let found = computed_so
            .iter()
            .enumerate()
            .position(|(i, c)| !used[i] && c.kind == s.kind && generated(sys, &c.simple_roots) == want);
        match found {
            Some(i) => {
                used[i] = true;
                let a: BTreeSet<_> = s.roots.iter().collect();
                let b: BTreeSet<_> = computed_so[i].simple_roots.iter().collect();
                if a != b {
                    let fmt_all = |v: &[Vector]| v.iter().map(|r| show(sys, r, table)).collect::<Vec<_>>().join(", ");
                    notes.push(format!(
                        "{}: listed simple roots {} and computed {} span the same subsystem",
                        s.kind,
                        fmt_all(&s.roots),
                        fmt_all(&computed_so[i].simple_roots)
                    ));
                }
            }
            None => diffs.push(format!(
                "no computed {} matches listed roots {}",
                s.kind,
                s.roots.iter().map(|r| show(sys, r, table)).collect::<Vec<_>>().join(", ")
            )),
        }
    }

    let listed_compact: Vec<Vector> = exp
        .summands
        .iter()
        .filter(|s| matches!(s.kind, SummandKind::Compact(_)))
        .flat_map(|s| s.roots.iter().cloned())
        .collect();
    let computed_compact: Vec<Vector> = dec
        .summands
        .iter()
        .filter(|s| matches!(s.kind, SummandKind::Compact(_)))
        .flat_map(|s| s.simple_roots.iter().cloned())
        .collect();
    if generated(sys, &listed_compact) != generated(sys, &computed_compact) {
        diffs.push(format!(
            "compact part differs: listed {{{}}}, computed {{{}}}",
            listed_compact.iter().map(|r| show(sys, r, table)).collect::<Vec<_>>().join(", "),
            computed_compact.iter().map(|r| show(sys, r, table)).collect::<Vec<_>>().join(", ")
        ));
    }
    if exp.abelian != dec.abelian_dim() {
        diffs.push(format!("abelian part R^{} computed, R^{} listed", dec.abelian_dim(), exp.abelian));
    }
    (diffs, notes)
}

/// Compares `build_s(form)` against its table row. Returns `None` for forms
/// outside the tables (compact or not absolutely simple).
pub fn golden_check(form: &RealForm) -> Result<Option<GoldenVerdict>> {
    golden_check_in(GoldenTable::builtin(), form)
}

pub fn golden_check_in(table: &GoldenTable, form: &RealForm) -> Result<Option<GoldenVerdict>> {
    if form.is_compact() {
        return Ok(None);
    }
    let Some(d) = form.datum() else { return Ok(None) };
    if d.complex_system.cartan_type.family == Family::D2Special {
        return Ok(None);
    }
    let Some((row, vars)) = table.find(&form.name)? else {
        return Err(Error::Internal(format!("no table row describes {}", form.name)));
    };
    let dec = build_s(form)?;
    let sys = &d.complex_system;
    let printed = instantiate(sys, row, &row.summands, &vars)?;
    let (printed_diffs, printed_notes) = compare(form, &dec, &printed, row.table);
    let (diffs, notes, erratum) = match &row.erratum {
        None => (printed_diffs, printed_notes, None),
        Some((why, lines)) => {
            let fixed = instantiate(sys, row, lines, &vars)?;
            let (diffs, notes) = compare(form, &dec, &fixed, row.table);
            (diffs, notes, Some((why.clone(), printed_diffs)))
        }
    };
    Ok(Some(GoldenVerdict {
        real_form: form.name.clone(),
        table: row.table,
        row_line: row.line,
        computed: dec.summary(),
        diffs,
        notes,
        erratum,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realforms::{instances, lookup};

    fn check(name: &str) -> GoldenVerdict {
        golden_check(&lookup(name).unwrap()).unwrap().unwrap()
    }

    #[test]
    fn table_parses_and_rows_are_used() {
        let t = GoldenTable::builtin();
        assert_eq!(t.rows.len(), 22);
        let mut hit = vec![false; t.rows.len()];
        for name in instances(8) {
            if let Some((row, _)) = t.find(&name).unwrap() {
                hit[t.rows.iter().position(|r| r.line == row.line).unwrap()] = true;
            }
        }
        assert!(hit.iter().all(|h| *h), "{hit:?}");
    }

    #[test]
    fn documented_examples() {
        let v = check("EIV");
        assert!(v.passed(), "{v}");
        assert_eq!(v.computed, "so(1,9) + R^1");
        assert_eq!(check("EVI").computed, "so(1,2)^4 + su(2)^3");
        for p in 1..=4 {
            let v = check(&format!("su({p},{p})"));
            assert!(v.passed(), "{v}");
            let want = if p > 1 { format!("so(1,2)^{p} + R^{}", p - 1) } else { "so(1,2)".into() };
            assert_eq!(v.computed, want);
        }
    }

    #[test]
    fn every_instance_agrees() {
        for name in instances(8) {
            let f = lookup(&name).unwrap();
            if let Some(v) = golden_check(&f).unwrap() {
                assert!(v.passed(), "{v}");
            }
        }
    }

    #[test]
    fn errata_are_needed() {
        for name in ["so*(8)", "so*(10)", "EIII"] {
            let v = check(name);
            let (_, printed) = v.erratum.as_ref().unwrap();
            assert!(!printed.is_empty(), "{name}");
        }
    }

    #[test]
    fn wrong_rows_are_reported() {
        let text = BUILTIN.replace("so1n 2 : *[1,0]\n  so1n 2 : *[3,2]", "so1n 2 : *[1,0]\n  so1n 2 : *[1,1]");
        let t = GoldenTable::parse(&text).unwrap();
        let v = golden_check_in(&t, &lookup("G").unwrap()).unwrap().unwrap();
        assert!(!v.passed());
        assert!(v.diffs.iter().any(|d| d.contains("(1,1)")), "{v}");
    }

    #[test]
    fn malformed_tables() {
        assert!(GoldenTable::parse("nope").is_err());
        assert!(GoldenTable::parse("w0-golden 1\nrow 1 G ; 1\n  so1n 2 : *[1,0]\n").is_err());
        assert!(GoldenTable::parse("w0-golden 1\nrow 1 G ; 1\n  weird 2 : x\nend\n").is_err());
    }
}
