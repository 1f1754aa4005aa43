//! Catalog of simple real Lie algebras and their restricted roots.
//!
//! Each catalog row gives a Satake diagram (black nodes and arrows, Bourbaki
//! numbering). From it we build the Cartan involution θ on 𝔥*, the
//! projection `P = (1 − θ)/2` onto 𝔞*, and the restricted root system.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::formula::{self, Vars};
use crate::linalg::{q, qf, Matrix, Vector, Q};
use crate::rootsys::{cartan_of, identify_cartan, longest_element_matrix, CartanType, Family, RootSystem};

const BUILTIN: &str = include_str!("../data/realforms.txt");
const HEADER: &str = "w0-realforms 1";

/// Type of a restricted root system: a reduced type, or `BC_n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RestrictedType {
    /// Type of the indivisible roots (`B_n` for `BC_n`, `A1` for `BC1`).
    pub reduced: CartanType,
    pub non_reduced: bool,
}

impl RestrictedType {
    pub fn rank(&self) -> usize {
        self.reduced.rank
    }

    /// Bourbaki system whose ε-coordinates are used for the restricted roots.
    pub fn chart_type(&self) -> CartanType {
        if self.non_reduced {
            CartanType::new(Family::B, self.rank())
        } else {
            self.reduced
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(n) = s.strip_prefix("BC") {
            let rank: usize = n.parse().map_err(|_| Error::Parse(format!("bad restricted type {s:?}")))?;
            return Ok(Self::bc(rank));
        }
        Ok(Self::reduced(s.parse()?))
    }

    pub fn bc(rank: usize) -> Self {
        let reduced = if rank == 1 {
            CartanType::new(Family::A, 1)
        } else {
            CartanType::new(Family::B, rank)
        };
        RestrictedType { reduced, non_reduced: true }
    }

    pub fn reduced(t: CartanType) -> Self {
        let t = if t.rank == 1 { CartanType::new(Family::A, 1) } else { t };
        RestrictedType { reduced: t, non_reduced: false }
    }
}

impl fmt::Display for RestrictedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.non_reduced {
            write!(f, "BC{}", self.rank())
        } else {
            write!(f, "{}", self.reduced)
        }
    }
}

/// Restricted-root data of a noncompact or compact absolutely simple form.
#[derive(Clone, Debug)]
pub struct RestrictedDatum {
    pub complex_system: RootSystem,
    /// Black nodes (0-based).
    pub black: Vec<usize>,
    /// Arrow pairs (0-based).
    pub arrows: Vec<(usize, usize)>,
    /// Cartan involution on the ambient space of 𝔥*.
    pub theta: Matrix,
    /// Orthogonal projection 𝔥* → 𝔞*, on ambient coordinates.
    pub projection: Matrix,
    /// Distinct nonzero restrictions of roots, with multiplicities.
    pub restricted_roots: Vec<(Vector, usize)>,
    pub positive_restricted: Vec<Vector>,
    /// Simple restricted roots, ordered to match the Bourbaki numbering of
    /// [`RestrictedType::chart_type`].
    pub simple: Vec<Vector>,
    /// `None` for compact forms.
    pub restricted_type: Option<RestrictedType>,
    chart: Option<RootSystem>,
}

#[derive(Clone, Debug)]
pub enum FormKind {
    Absolute(Box<RestrictedDatum>),
    /// A complex simple Lie algebra regarded as a real one.
    Complex(CartanType),
}

#[derive(Clone, Debug)]
pub struct RealForm {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    pub kind: FormKind,
}

impl RealForm {
    pub fn datum(&self) -> Option<&RestrictedDatum> {
        match &self.kind {
            FormKind::Absolute(d) => Some(d),
            FormKind::Complex(_) => None,
        }
    }

    pub fn is_compact(&self) -> bool {
        self.datum().is_some_and(|d| d.restricted_type.is_none())
    }

    pub fn is_split(&self) -> bool {
        self.datum().is_some_and(|d| d.is_split())
    }

    /// Quasi-split: the centralizer of 𝔞 is abelian, i.e. no black nodes.
    pub fn is_quasi_split(&self) -> bool {
        self.datum().is_some_and(|d| d.black.is_empty())
    }

    pub fn complex_type(&self) -> CartanType {
        match &self.kind {
            FormKind::Absolute(d) => d.complex_system.cartan_type,
            FormKind::Complex(t) => *t,
        }
    }
}

impl RestrictedDatum {
    fn build(sys: RootSystem, black: Vec<usize>, arrows: Vec<(usize, usize)>, declared: Option<RestrictedType>) -> Result<Self> {
        let r = sys.rank();
        let n = sys.ambient_dim;
        let mut iota: Vec<usize> = (0..r).collect();
        for &(a, b) in &arrows {
            if a >= r || b >= r || black.contains(&a) || black.contains(&b) {
                return Err(Error::Internal(format!("arrow {}<->{} is invalid", a + 1, b + 1)));
            }
            iota[a] = b;
            iota[b] = a;
        }
        if black.iter().any(|&b| b >= r) {
            return Err(Error::Internal("black node out of range".into()));
        }
        let black_roots: Vec<Vector> = black.iter().map(|&i| sys.simple_roots[i].clone()).collect();
        let wb = longest_element_matrix(&black_roots, n);
        let images: Vec<Vector> = (0..r)
            .map(|i| {
                if black.contains(&i) {
                    sys.simple_roots[i].clone()
                } else {
                    -&wb.apply(&sys.simple_roots[iota[i]])
                }
            })
            .collect();

        let s = Matrix::from_columns(&sys.simple_roots);
        let t = Matrix::from_columns(&images);
        let st = s.transpose();
        let gi = (&st * &s).inverse().expect("simple roots independent");
        let pi = &(&s * &gi) * &st;
        let theta = &(&t * &gi) * &st;
        let projection = (&pi - &theta).scale(qf(1, 2));

        if &theta * &theta != pi {
            return Err(Error::Internal("Satake datum does not give an involution".into()));
        }
        for a in sys.roots() {
            let ta = theta.apply(&a);
            if !sys.is_root(&ta) || ta.norm2() != a.norm2() {
                return Err(Error::Internal(format!("θ does not preserve the roots at {a}")));
            }
        }

        let mut counts: BTreeMap<Vector, usize> = BTreeMap::new();
        let mut positive: Vec<Vector> = Vec::new();
        for a in &sys.positive_roots {
            let pa = projection.apply(a);
            if pa.is_zero() {
                continue;
            }
            *counts.entry(pa.clone()).or_default() += 1;
            *counts.entry(-&pa).or_default() += 1;
            if !positive.contains(&pa) {
                positive.push(pa);
            }
        }
        for p in &positive {
            if positive.contains(&-p) {
                return Err(Error::Internal(format!(
                    "positive system of 𝔤 is not compatible with θ: ±{p} both restrict from positive roots"
                )));
            }
        }
        positive.sort();
        let restricted_roots: Vec<(Vector, usize)> = counts.into_iter().collect();

        let simple: Vec<Vector> = positive
            .iter()
            .filter(|g| {
                let half = g.scale(qf(1, 2));
                !positive.contains(&half)
                    && !positive.iter().any(|a| {
                        let rest = *g - a;
                        !rest.is_zero() && positive.contains(&rest)
                    })
            })
            .cloned()
            .collect();
        if simple.len() != projection.rank() {
            return Err(Error::Internal(format!(
                "found {} simple restricted roots for a real rank of {}",
                simple.len(),
                projection.rank()
            )));
        }

        let mut datum = RestrictedDatum {
            complex_system: sys,
            black,
            arrows,
            theta,
            projection,
            restricted_roots,
            positive_restricted: positive,
            simple,
            restricted_type: None,
            chart: None,
        };
        if datum.simple.is_empty() {
            if declared.is_some() {
                return Err(Error::Internal("catalog declares restricted roots for a compact form".into()));
            }
            return Ok(datum);
        }
        let non_reduced = datum
            .positive_restricted
            .iter()
            .any(|g| datum.positive_restricted.contains(&g.scale(q(2))));
        let preferred = declared.filter(|d| d.non_reduced == non_reduced).map(|d| d.reduced);
        let (ty, perm) = identify_cartan(&cartan_of(&datum.simple), preferred)
            .ok_or_else(|| Error::Internal("restricted roots are not an irreducible system".into()))?;
        let found = RestrictedType { reduced: ty, non_reduced };
        if let Some(d) = declared {
            if d != found {
                return Err(Error::Internal(format!("catalog declares restricted type {d}, computed {found}")));
            }
        }
        let mut ordered = vec![Vector::zeros(0); datum.simple.len()];
        for (i, &k) in perm.iter().enumerate() {
            ordered[k] = datum.simple[i].clone();
        }
        datum.simple = ordered;
        datum.chart = Some(RootSystem::of_type(found.chart_type())?);
        datum.restricted_type = Some(found);
        Ok(datum)
    }

    pub fn real_rank(&self) -> usize {
        self.simple.len()
    }

    pub fn is_split(&self) -> bool {
        self.real_rank() == self.complex_system.rank()
    }

    pub fn project(&self, v: &Vector) -> Vector {
        self.projection.apply(v)
    }

    pub fn is_restricted_root(&self, v: &Vector) -> bool {
        self.restricted_roots.iter().any(|(r, _)| r == v)
    }

    pub fn multiplicity(&self, v: &Vector) -> usize {
        self.restricted_roots.iter().find(|(r, _)| r == v).map_or(0, |(_, m)| *m)
    }

    /// Bourbaki system used as coordinates on 𝔞*.
    pub fn chart_system(&self) -> Option<&RootSystem> {
        self.chart.as_ref()
    }

    /// Sends a vector given in the Bourbaki coordinates of the restricted
    /// type into 𝔞* ⊂ 𝔥*.
    pub fn pullback(&self, x: &Vector) -> Result<Vector> {
        let chart = self
            .chart
            .as_ref()
            .ok_or_else(|| Error::Unsupported("compact forms have no restricted roots".into()))?;
        let c = chart
            .simple_coords(x)
            .ok_or_else(|| Error::InvalidWeight(format!("{x} is not in the span of the restricted roots")))?;
        Ok(c.iter()
            .zip(&self.simple)
            .fold(Vector::zeros(self.complex_system.ambient_dim), |acc, (ci, g)| &acc + &g.scale(*ci)))
    }

    /// Inverse of [`Self::pullback`] on 𝔞*.
    pub fn to_chart(&self, v: &Vector) -> Result<Vector> {
        let chart = self
            .chart
            .as_ref()
            .ok_or_else(|| Error::Unsupported("compact forms have no restricted roots".into()))?;
        let s = Matrix::from_columns(&self.simple);
        let c = s
            .solve(v)
            .ok_or_else(|| Error::InvalidWeight(format!("{v} does not lie in 𝔞*")))?;
        Ok(chart.from_simple_coords(&c.0))
    }

    /// Longest restricted Weyl element, on the ambient space of 𝔥*
    /// (identity on the orthogonal complement of 𝔞*).
    pub fn restricted_w0(&self) -> Matrix {
        longest_element_matrix(&self.simple, self.complex_system.ambient_dim)
    }

    /// [`Self::restricted_w0`] expressed in the chart coordinates.
    pub fn restricted_w0_chart(&self) -> Option<Matrix> {
        let chart = self.chart.as_ref()?;
        let w0 = self.restricted_w0();
        let cols: Vec<Vector> = (0..chart.ambient_dim)
            .map(|i| {
                let e = Vector::unit(chart.ambient_dim, i);
                let inside = chart.project_to_span(&e);
                let img = self.to_chart(&w0.apply(&self.pullback(&inside).ok()?)).ok()?;
                Some(&img + &(&e - &inside))
            })
            .collect::<Option<_>>()?;
        Some(Matrix::from_columns(&cols))
    }

    /// Simple roots of 𝔤 whose restriction vanishes, i.e. the black nodes.
    pub fn compact_simple_roots(&self) -> Vec<Vector> {
        self.black.iter().map(|&i| self.complex_system.simple_roots[i].clone()).collect()
    }
}

/// One parsed catalog row.
#[derive(Clone, Debug)]
pub struct CatalogRow {
    pub pattern: String,
    pub constraint: String,
    pub complex: String,
    pub black: String,
    pub arrows: String,
    pub restricted: String,
    pub line: usize,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub rows: Vec<CatalogRow>,
}

pub fn normalize_name(name: &str) -> String {
    name.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '.' { '·' } else { c })
        .collect()
}

fn type_expr(src: &str, vars: &Vars) -> Result<Option<(String, usize)>> {
    let src = src.trim();
    if src == "-" {
        return Ok(None);
    }
    if let Some((then, rest)) = src.split_once(" if ") {
        let (cond, other) = rest
            .split_once(" else ")
            .ok_or_else(|| Error::Parse(format!("conditional type without else: {src:?}")))?;
        let pick = if formula::eval_bool(cond, vars)? { then } else { other };
        return type_expr(pick, vars);
    }
    if src == "D2special" {
        return Ok(Some((src.to_string(), 2)));
    }
    let open = src.find('(').ok_or_else(|| Error::Parse(format!("bad type expression {src:?}")))?;
    let inner = src[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| Error::Parse(format!("bad type expression {src:?}")))?;
    let rank = formula::eval(inner, vars)?;
    if rank < 0 {
        return Err(Error::Parse(format!("negative rank in {src:?}")));
    }
    Ok(Some((src[..open].to_string(), rank as usize)))
}

fn node_list(src: &str, vars: &Vars) -> Result<Vec<usize>> {
    let mut out: Vec<usize> = formula::expand_range_list(src, vars)?
        .into_iter()
        .map(|i| {
            if i < 1 {
                Err(Error::Parse(format!("node {i} out of range in {src:?}")))
            } else {
                Ok(i as usize - 1)
            }
        })
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

fn arrow_list(src: &str, vars: &Vars) -> Result<Vec<(usize, usize)>> {
    let src = src.trim();
    if src == "-" || src.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for item in formula::split_top_level(src, ",") {
        let item = item.trim();
        let (pair, iter) = match item.split_once(" for ") {
            Some((p, it)) => (p, Some(it)),
            None => (item, None),
        };
        let (a, b) = pair
            .split_once("<->")
            .ok_or_else(|| Error::Parse(format!("bad arrow {item:?}")))?;
        let mut emit = |vars: &Vars| -> Result<()> {
            let (x, y) = (formula::eval(a, vars)?, formula::eval(b, vars)?);
            if x < 1 || y < 1 {
                return Err(Error::Parse(format!("arrow node out of range in {item:?}")));
            }
            out.push((x as usize - 1, y as usize - 1));
            Ok(())
        };
        match iter {
            None => emit(vars)?,
            Some(it) => {
                let (var, range) = it
                    .trim()
                    .split_once(" in ")
                    .ok_or_else(|| Error::Parse(format!("bad arrow iteration {item:?}")))?;
                for i in formula::expand_range(range.trim(), vars)? {
                    let mut v = vars.clone();
                    v.insert(var.trim().to_string(), i);
                    emit(&v)?;
                }
            }
        }
    }
    Ok(out)
}

fn family_of(letter: &str) -> Result<Family> {
    Ok(match letter {
        "A" => Family::A,
        "B" => Family::B,
        "C" => Family::C,
        "D" => Family::D,
        "E" => Family::E,
        "F" => Family::F,
        "G" => Family::G,
        "D2special" => Family::D2Special,
        _ => return Err(Error::Parse(format!("unknown family {letter:?}"))),
    })
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let header = lines.by_ref().map(|(_, l)| l.trim()).find(|l| !l.is_empty());
        if header != Some(HEADER) {
            return Err(Error::Parse(format!("catalog must start with {HEADER:?}")));
        }
        let mut rows = Vec::new();
        for (no, line) in lines {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let f: Vec<&str> = line.split(';').map(str::trim).collect();
            if f.len() != 6 {
                return Err(Error::Parse(format!("catalog line {}: expected 6 fields, got {}", no + 1, f.len())));
            }
            rows.push(CatalogRow {
                pattern: normalize_name(f[0]),
                constraint: f[1].to_string(),
                complex: f[2].to_string(),
                black: f[3].to_string(),
                arrows: f[4].to_string(),
                restricted: f[5].to_string(),
                line: no + 1,
            });
        }
        Ok(Catalog { rows })
    }

    pub fn builtin() -> &'static Catalog {
        static CAT: OnceLock<Catalog> = OnceLock::new();
        CAT.get_or_init(|| Catalog::parse(BUILTIN).expect("built-in catalog parses"))
    }

    /// Finds the row for `name` and its parameter bindings.
    pub fn resolve(&self, name: &str) -> Result<(&CatalogRow, Vars)> {
        let norm = normalize_name(name);
        let mut violated = Vec::new();
        for row in &self.rows {
            if let Some(vars) = formula::match_pattern(&row.pattern, &norm) {
                if formula::eval_bool(&row.constraint, &vars)? {
                    return Ok((row, vars));
                }
                violated.push(row.constraint.clone());
            }
        }
        if !violated.is_empty() {
            return Err(Error::ParameterRange {
                name: norm,
                reason: format!("parameters must satisfy one of: {}", violated.join(" | ")),
            });
        }
        Err(Error::UnknownAlgebra {
            suggestion: self.suggest(&norm),
            name: norm,
        })
    }

    fn suggest(&self, name: &str) -> Option<String> {
        let shape = |s: &str| -> String {
            let mut out = String::new();
            let mut in_brace = false;
            let mut last_hash = false;
            for c in s.chars() {
                match c {
                    '{' => in_brace = true,
                    '}' => {
                        in_brace = false;
                        out.push('#');
                        last_hash = true;
                    }
                    _ if in_brace => {}
                    d if d.is_ascii_digit() => {
                        if !last_hash {
                            out.push('#');
                        }
                        last_hash = true;
                    }
                    c => {
                        out.push(c);
                        last_hash = false;
                    }
                }
            }
            out
        };
        let target = shape(name);
        let mut best: Option<(usize, String)> = None;
        for row in &self.rows {
            let d = strsim::levenshtein(&target, &shape(&row.pattern));
            if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
                best = Some((d, row.pattern.replace(['{', '}'], "")));
            }
        }
        best.filter(|(d, _)| *d <= 4).map(|(_, p)| p)
    }

    pub fn build(&self, name: &str) -> Result<RealForm> {
        let norm = normalize_name(name);
        if let Some(t) = norm.strip_prefix("complex:") {
            let t: CartanType = t.parse()?;
            RootSystem::of_type(t)?;
            return Ok(RealForm {
                name: format!("complex:{t}"),
                params: BTreeMap::new(),
                kind: FormKind::Complex(t),
            });
        }
        let (row, vars) = self.resolve(&norm)?;
        let ctx = |e: Error| Error::Internal(format!("catalog line {} ({}): {e}", row.line, row.pattern));
        let (fam, rank) = type_expr(&row.complex, &vars)
            .map_err(ctx)?
            .ok_or_else(|| ctx(Error::Parse("missing complex type".into())))?;
        let sys = RootSystem::new(family_of(&fam).map_err(ctx)?, rank).map_err(ctx)?;
        let black = node_list(&row.black, &vars).map_err(ctx)?;
        let arrows = arrow_list(&row.arrows, &vars).map_err(ctx)?;
        let declared = match type_expr(&row.restricted, &vars).map_err(ctx)? {
            None | Some((_, 0)) => None,
            Some((f, r)) if f == "BC" => Some(RestrictedType::bc(r)),
            Some((f, r)) => Some(RestrictedType::reduced(CartanType::new(family_of(&f).map_err(ctx)?, r))),
        };
        let datum = RestrictedDatum::build(sys, black, arrows, declared).map_err(ctx)?;
        Ok(RealForm {
            name: norm,
            params: vars.into_iter().collect(),
            kind: FormKind::Absolute(Box::new(datum)),
        })
    }
}

/// Looks up a form in the built-in catalog. Results are cached.
pub fn lookup(name: &str) -> Result<Arc<RealForm>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<RealForm>>>> = OnceLock::new();
    let key = normalize_name(name);
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().expect("cache poisoned").get(&key) {
        return Ok(f.clone());
    }
    let form = Arc::new(Catalog::builtin().build(&key)?);
    cache.lock().expect("cache poisoned").insert(key, form.clone());
    Ok(form)
}

/// Names of every catalogued absolutely simple form with complex rank in `1..=max_rank`.
pub fn instances(max_rank: usize) -> Vec<String> {
    let mut out = Vec::new();
    let m = max_rank as i64;
    for n in 2..=m + 1 {
        out.push(format!("sl({n},R)"));
    }
    for total in 2..=m + 1 {
        for p in 1..=total / 2 {
            out.push(format!("su({p},{})", total - p));
        }
    }
    for mm in 2..=(m + 1) / 2 {
        out.push(format!("sl({mm},H)"));
    }
    out.push("so(1,3)".to_string());
    for n in 3..=2 * m + 1 {
        if n == 4 {
            continue;
        }
        let rank = n / 2;
        if rank > m {
            continue;
        }
        for p in 1..=n / 2 {
            out.push(format!("so({p},{})", n - p));
        }
    }
    for n in 1..=m {
        out.push(format!("sp(2·{n},R)"));
    }
    for total in 2..=m {
        for p in 1..=total / 2 {
            out.push(format!("sp(2·,{p},{})", total - p));
        }
    }
    for r in 3..=m {
        out.push(format!("so*({})", 2 * r));
    }
    for e in ["EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII", "EIX", "FI", "FII", "G"] {
        out.push(e.to_string());
    }
    out
}

/// Positive restricted roots counted with multiplicity, as a sanity value.
pub fn restricted_dimension(d: &RestrictedDatum) -> usize {
    d.restricted_roots
        .iter()
        .filter(|(v, _)| d.positive_restricted.contains(v))
        .map(|(_, m)| m)
        .sum()
}

/// Whether `v` is a nonnegative combination of the simple restricted roots.
pub fn is_restricted_positive(d: &RestrictedDatum, v: &Vector) -> bool {
    let s = Matrix::from_columns(&d.simple);
    s.solve(v).is_some_and(|c| c.0.iter().all(|x: &Q| !x.is_negative()))
}
