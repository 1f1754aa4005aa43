//! Branching `V_λ` to 𝔰 and reading off the action of w₀ on `V_λ^𝔩`.
//!
//! Restriction multiplicities use the alternating sum
//! `m(μ) = Σ_{w ∈ W_𝔰} ε(w) mult_λ(μ + ρ_𝔰 − wρ_𝔰)` over the shared Cartan.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{q, Matrix, Vector, Q};
use crate::realforms::{lookup, FormKind, RealForm};
use crate::rootsys::{CartanType, Character, Family, RootSystem};
use crate::so1n::{check_star, so1n_sign, So1nWeight};
use crate::subalg::{build_s, Summand, SummandDecomposition, SummandKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Zero,
    PlusId,
    MinusId,
    Mixed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Zero => "zero",
            Verdict::PlusId => "plus_id",
            Verdict::MinusId => "minus_id",
            Verdict::Mixed => "mixed",
        })
    }
}

/// Eigenvalue counts of w₀ on `V_λ^𝔩`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct W0Action {
    pub plus: u64,
    pub minus: u64,
}

impl W0Action {
    pub fn new(plus: u64, minus: u64) -> Self {
        W0Action { plus, minus }
    }

    pub fn dim(&self) -> u64 {
        self.plus + self.minus
    }

    pub fn verdict(&self) -> Verdict {
        match (self.plus, self.minus) {
            (0, 0) => Verdict::Zero,
            (_, 0) => Verdict::PlusId,
            (0, _) => Verdict::MinusId,
            _ => Verdict::Mixed,
        }
    }

    /// Eigenvalue multisets of a tensor product.
    pub fn tensor(&self, other: &W0Action) -> W0Action {
        W0Action {
            plus: self.plus * other.plus + self.minus * other.minus,
            minus: self.plus * other.minus + self.minus * other.plus,
        }
    }

    fn add(&mut self, sign: i32, mult: u64) {
        if sign > 0 {
            self.plus += mult;
        } else {
            self.minus += mult;
        }
    }
}

impl fmt::Display for W0Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {} (+1: {}, -1: {}) {}", self.dim(), self.plus, self.minus, self.verdict())
    }
}

/// One irreducible constituent of `V_λ|_𝔰`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchConstituent {
    /// The 𝔰-highest weight in 𝔥*.
    pub weight: Vector,
    /// Per summand, its highest weight in the summand chart (`None` for the abelian part).
    pub highest_weights: Vec<Option<Vector>>,
    /// Component of the weight orthogonal to the roots of 𝔰.
    pub abelian_charges: Vector,
    pub multiplicity: u64,
}

/// `(ρ − wρ, ε(w))` in Dynkin labels of 𝔤, for `w` in the Weyl group of `simple`.
/// The orbit walk runs on doubled labels so it stays in integers.
fn alternating_shifts(sys: &RootSystem, simple: &[Vector]) -> Result<Vec<(Vec<i64>, i32)>> {
    let r = sys.rank();
    if simple.is_empty() {
        return Ok(vec![(vec![0; r], 1)]);
    }
    let k = simple.len();
    let mut g = Matrix::zeros(k, k);
    let mut rhs = Vector::zeros(k);
    for j in 0..k {
        for i in 0..k {
            g[(j, i)] = simple[i].dot(&simple[j]);
        }
        rhs[j] = simple[j].norm2() / q(2);
    }
    let c = g
        .solve(&rhs)
        .ok_or_else(|| Error::Internal("simple roots of a subsystem are dependent".into()))?;
    let rho = c.0.iter().zip(simple).fold(Vector::zeros(sys.ambient_dim), |acc, (x, b)| &acc + &b.scale(*x));
    let int = |v: &Vector| -> Result<Vec<i64>> {
        sys.labels(v)
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect::<Option<Vec<i64>>>()
            .ok_or_else(|| Error::Internal(format!("{v} has non-integral labels")))
    };
    let rho2 = int(&rho.scale(q(2)))?;
    // ⟨v, β^∨⟩ = Σ_j c_j · label_j(v) with β^∨ = Σ_j c_j α_j^∨.
    let mut refl = Vec::new();
    for b in simple {
        let coords = sys
            .simple_coords(b)
            .ok_or_else(|| Error::Internal(format!("{b} is not in the root lattice")))?;
        let cor: Vec<i64> = coords
            .iter()
            .zip(&sys.simple_roots)
            .map(|(x, a)| {
                let y = x * a.norm2() / b.norm2();
                y.is_integer().then(|| y.to_integer())
            })
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Internal(format!("coroot of {b} is not integral")))?;
        refl.push((cor, int(b)?));
    }

    let mut seen: HashSet<Vec<i64>> = HashSet::from([rho2.clone()]);
    let mut queue = VecDeque::from([(rho2.clone(), 0usize)]);
    let mut out = Vec::new();
    while let Some((v, len)) = queue.pop_front() {
        let shift: Vec<i64> = rho2.iter().zip(&v).map(|(a, b)| (a - b) / 2).collect();
        out.push((shift, if len % 2 == 0 { 1 } else { -1 }));
        for (cor, lab) in &refl {
            let p: i64 = cor.iter().zip(&v).map(|(c, x)| c * x).sum();
            if p > 0 {
                let u: Vec<i64> = v.iter().zip(lab).map(|(x, l)| x - p * l).collect();
                if seen.insert(u.clone()) {
                    queue.push_back((u, len + 1));
                }
            }
        }
    }
    Ok(out)
}

fn alternating_mult(ch: &Character, mu: &[i64], shifts: &[(Vec<i64>, i32)]) -> Result<u64> {
    let mut total: i128 = 0;
    let mut buf = vec![0i64; mu.len()];
    for (s, sign) in shifts {
        for ((b, m), x) in buf.iter_mut().zip(mu).zip(s) {
            *b = m + x;
        }
        total += *sign as i128 * ch.mult(&buf) as i128;
    }
    u64::try_from(total).map_err(|_| Error::Internal(format!("negative branching multiplicity {total}")))
}

/// Linear functionals on 𝔥* giving the chart ε-coordinates of a summand.
fn chart_functionals(s: &Summand) -> Vec<Vector> {
    let Some(c) = &s.chart_system else { return Vec::new() };
    let dim = s.simple_roots[0].dim();
    (0..c.ambient_dim)
        .map(|i| {
            s.simple_roots
                .iter()
                .zip(&c.fundamental_weights)
                .fold(Vector::zeros(dim), |acc, (b, w)| &acc + &b.scale(w[i] * q(2) / b.norm2()))
        })
        .collect()
}

fn norm_bound(norm2: &Q, v: &Vector) -> i64 {
    let x = norm2.to_f64().unwrap_or(f64::MAX) * v.norm2().to_f64().unwrap_or(f64::MAX);
    x.sqrt().floor() as i64 + 1
}

/// The reduction data of one real form, reusable across weights.
#[derive(Debug)]
pub struct Reducer {
    pub form: Arc<RealForm>,
    pub decomposition: SummandDecomposition,
    s_shifts: Vec<(Vec<i64>, i32)>,
    l_shifts: OnceLock<Vec<(Vec<i64>, i32)>>,
    s_is_g: bool,
    abelian_projector: Matrix,
}

impl Reducer {
    pub fn new(form: Arc<RealForm>) -> Result<Self> {
        let d = form
            .datum()
            .ok_or_else(|| Error::Unsupported(format!("{} is complex; use complex_w0_action", form.name)))?;
        let sys = &d.complex_system;
        let decomposition = build_s(&form)?;
        let simple = decomposition.simple_roots();
        let s_is_g = decomposition.s_roots.len() == sys.num_roots();
        let s_shifts = if s_is_g { Vec::new() } else { alternating_shifts(sys, &simple)? };
        let inside = Matrix::orthogonal_projector(&simple, sys.ambient_dim);
        let abelian_projector = &Matrix::identity(sys.ambient_dim) - &inside;
        Ok(Reducer {
            form,
            decomposition,
            s_shifts,
            l_shifts: OnceLock::new(),
            s_is_g,
            abelian_projector,
        })
    }

    pub fn system(&self) -> &RootSystem {
        &self.form.datum().expect("absolutely simple").complex_system
    }

    fn character(&self, lambda: &Vector) -> Result<Character> {
        self.system().character(lambda)
    }

    fn constituent(&self, weight: Vector, multiplicity: u64) -> BranchConstituent {
        let highest_weights = self
            .decomposition
            .summands
            .iter()
            .map(|s| match s.kind {
                SummandKind::Abelian(_) => None,
                _ => s.chart(&weight),
            })
            .collect();
        BranchConstituent {
            abelian_charges: self.abelian_projector.apply(&weight),
            highest_weights,
            weight,
            multiplicity,
        }
    }

    fn is_s_dominant(&self, mu: &Vector) -> bool {
        self.decomposition.simple_roots().iter().all(|b| !mu.dot(b).is_negative())
    }

    /// Full restriction of `V_λ` to 𝔰.
    pub fn branch(&self, lambda: &Vector) -> Result<Vec<BranchConstituent>> {
        let sys = self.system();
        let ch = self.character(lambda)?;
        if self.s_is_g {
            return Ok(vec![self.constituent(lambda.clone(), 1)]);
        }
        let mut out = Vec::new();
        for (labels, _) in ch.all_weights() {
            let mu = sys.from_int_labels(&labels);
            if !self.is_s_dominant(&mu) {
                continue;
            }
            let m = alternating_mult(&ch, &labels, &self.s_shifts)?;
            if m > 0 {
                out.push(self.constituent(mu, m));
            }
        }
        sort_constituents(&mut out);
        Ok(out)
    }

    /// The constituents that can contain 𝔩-invariants: zero compact and
    /// abelian parts and (*) on every so(1,n) summand.
    pub fn branch_pruned(&self, lambda: &Vector) -> Result<Vec<BranchConstituent>> {
        let sys = self.system();
        let ch = self.character(lambda)?;
        if self.s_is_g {
            return Ok(vec![self.constituent(lambda.clone(), 1)]);
        }
        let bound = lambda.norm2();
        let mut per_summand: Vec<Vec<(Vector, Q)>> = Vec::new();
        for s in self.decomposition.so1n() {
            let SummandKind::So1n(n) = s.kind else { unreachable!() };
            let f = chart_functionals(s);
            let chart_dim = f.len();
            let xmax = norm_bound(&bound, &f[0]);
            let mut cands = Vec::new();
            for x in 0..=xmax {
                let ys: Vec<i64> = match n {
                    2 => vec![0],
                    3 => (-x..=x).collect(),
                    _ => (0..=x).collect(),
                };
                for y in ys {
                    let mut c = Vector::zeros(chart_dim);
                    c[0] = q(x);
                    if chart_dim > 1 {
                        c[1] = q(y);
                    }
                    let w = So1nWeight { n, lambda: c };
                    if !check_star(&w) {
                        continue;
                    }
                    let mu = s
                        .pullback(&w.lambda)
                        .ok_or_else(|| Error::Internal("summand pullback failed".into()))?;
                    let nm = mu.norm2();
                    if nm <= bound {
                        cands.push((mu, nm));
                    }
                }
            }
            per_summand.push(cands);
        }

        let mut out = Vec::new();
        let mut stack: Vec<(usize, Vector, Q)> = vec![(0, Vector::zeros(sys.ambient_dim), Q::zero())];
        while let Some((k, mu, nm)) = stack.pop() {
            if k == per_summand.len() {
                let Some(labels) = sys.int_labels(&mu) else { continue };
                let m = alternating_mult(&ch, &labels, &self.s_shifts)?;
                if m > 0 {
                    out.push(self.constituent(mu, m));
                }
                continue;
            }
            for (v, n2) in &per_summand[k] {
                let total = nm + n2;
                if total <= bound {
                    stack.push((k + 1, &mu + v, total));
                }
            }
        }
        sort_constituents(&mut out);
        Ok(out)
    }

    /// Dimension and sign of the 𝔩-invariants of one constituent.
    pub fn constituent_invariants(&self, c: &BranchConstituent) -> (usize, Option<i32>) {
        constituent_invariants(c, &self.decomposition)
    }

    pub fn w0_action(&self, lambda: &Vector) -> Result<W0Action> {
        self.collect(&self.branch_pruned(lambda)?)
    }

    /// Same answer without pruning; slower, used to cross-check.
    pub fn w0_action_unpruned(&self, lambda: &Vector) -> Result<W0Action> {
        self.collect(&self.branch(lambda)?)
    }

    fn collect(&self, cs: &[BranchConstituent]) -> Result<W0Action> {
        let mut acc = W0Action::default();
        for c in cs {
            if let (1, Some(sign)) = self.constituent_invariants(c) {
                acc.add(sign, c.multiplicity);
            }
        }
        Ok(acc)
    }

    /// `dim V_λ^𝔩` by the alternating sum over the Weyl group of 𝔩 alone.
    pub fn l_invariant_dim(&self, lambda: &Vector) -> Result<u64> {
        let ch = self.character(lambda)?;
        if self.l_shifts.get().is_none() {
            let d = self.form.datum().expect("absolutely simple");
            let shifts = alternating_shifts(self.system(), &d.compact_simple_roots())?;
            let _ = self.l_shifts.set(shifts);
        }
        alternating_mult(&ch, &vec![0; self.system().rank()], self.l_shifts.get().unwrap())
    }

    /// Weyl dimension of a constituent as an 𝔰-module.
    pub fn constituent_dim(&self, c: &BranchConstituent) -> Option<u128> {
        let mut d = 1u128;
        for (s, w) in self.decomposition.summands.iter().zip(&c.highest_weights) {
            if let (Some(sys), Some(w)) = (&s.chart_system, w) {
                d = d.checked_mul(sys.weyl_dimension(w)?)?;
            }
        }
        Some(d)
    }
}

fn sort_constituents(cs: &mut [BranchConstituent]) {
    cs.sort_by(|a, b| b.weight.norm2().cmp(&a.weight.norm2()).then_with(|| b.weight.cmp(&a.weight)));
}

/// `(dim, sign)` of the 𝔩-invariants in a constituent: dimension 1 iff every
/// so(1,n) part satisfies (*) and the compact and abelian parts are trivial.
pub fn constituent_invariants(c: &BranchConstituent, dec: &SummandDecomposition) -> (usize, Option<i32>) {
    if !c.abelian_charges.is_zero() {
        return (0, None);
    }
    let mut sign = 1;
    for (s, w) in dec.summands.iter().zip(&c.highest_weights) {
        match (s.kind, w) {
            (SummandKind::So1n(n), Some(w)) => {
                let w = So1nWeight { n, lambda: w.clone() };
                match so1n_sign(&w) {
                    Ok(x) => sign *= x,
                    Err(_) => return (0, None),
                }
            }
            (SummandKind::Compact(_), Some(w)) if !w.is_zero() => return (0, None),
            _ => {}
        }
    }
    (1, Some(sign))
}

fn cache() -> &'static Mutex<HashMap<String, Arc<Reducer>>> {
    static C: OnceLock<Mutex<HashMap<String, Arc<Reducer>>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Cached reducer for a catalogued absolutely simple form.
pub fn reducer(name: &str) -> Result<Arc<Reducer>> {
    let form = lookup(name)?;
    if let Some(r) = cache().lock().unwrap().get(&form.name) {
        return Ok(r.clone());
    }
    let r = Arc::new(Reducer::new(form.clone())?);
    cache().lock().unwrap().insert(form.name.clone(), r.clone());
    Ok(r)
}

pub fn branch_to_s(form: &str, lambda: &Vector) -> Result<Vec<BranchConstituent>> {
    reducer(form)?.branch(lambda)
}

pub fn w0_action(form: &str, lambda: &Vector) -> Result<W0Action> {
    reducer(form)?.w0_action(lambda)
}

/// The split real form with the given complexification.
pub fn split_form_name(t: CartanType) -> Result<String> {
    let r = t.rank;
    Ok(match (t.family, r) {
        (Family::A, _) => format!("sl({},R)", r + 1),
        (Family::B, _) => format!("so({r},{})", r + 1),
        (Family::C, _) => format!("sp(2·{r},R)"),
        (Family::D, _) => format!("so({r},{r})"),
        (Family::E, 6) => "EI".into(),
        (Family::E, 7) => "EV".into(),
        (Family::E, 8) => "EVIII".into(),
        (Family::F, 4) => "FI".into(),
        (Family::G, 2) => "G".into(),
        _ => return Err(Error::Unsupported(format!("no split form for {t}"))),
    })
}

/// w₀ on `V^𝔩` for the complex form `𝔤` viewed as a real algebra, whose
/// complexification is `𝔤 ⊕ 𝔤` with highest weight `(λ₁, λ₂)`.
pub fn complex_w0_action(t: CartanType, lambda1: &Vector, lambda2: &Vector) -> Result<W0Action> {
    let r = reducer(&split_form_name(t)?)?;
    let dim = r.system().ambient_dim;
    if lambda1.dim() != dim || lambda2.dim() != dim {
        return Err(Error::InvalidWeight(format!(
            "both weights of a {t} pair need {dim} coordinates, got {} and {}",
            lambda1.dim(),
            lambda2.dim()
        )));
    }
    Ok(r.w0_action(lambda1)?.tensor(&r.w0_action(lambda2)?))
}

/// Evaluates a form on a weight, dispatching complex forms to the product rule
/// (their weight is the concatenation `λ₁ ⊕ λ₂`).
pub fn w0_action_any(form: &RealForm, lambda: &Vector) -> Result<W0Action> {
    match &form.kind {
        FormKind::Absolute(_) => w0_action(&form.name, lambda),
        FormKind::Complex(t) => {
            let sys = RootSystem::of_type(*t)?;
            let d = sys.ambient_dim;
            if lambda.dim() != 2 * d {
                return Err(Error::InvalidWeight(format!(
                    "{} weights are pairs: {} coordinates expected, got {}",
                    form.name,
                    2 * d,
                    lambda.dim()
                )));
            }
            let l1 = Vector(lambda.0[..d].to_vec());
            let l2 = Vector(lambda.0[d..].to_vec());
            complex_w0_action(*t, &l1, &l2)
        }
    }
}

/// A weight where two forms disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub weight: Vector,
    pub first: W0Action,
    pub second: W0Action,
}

/// Compares a split and a quasi-split form on a grid of weights.
pub fn quasi_split_agrees(split: &str, quasi_split: &str, grid: &[Vector]) -> Result<Vec<Disagreement>> {
    let a = reducer(split)?;
    let b = reducer(quasi_split)?;
    if a.system().cartan_type != b.system().cartan_type {
        return Err(Error::InvalidSystem {
            family: a.system().name(),
            rank: a.system().rank(),
            reason: format!("{split} and {quasi_split} have different complexifications"),
        });
    }
    let mut out = Vec::new();
    for w in grid {
        let (x, y) = (a.w0_action(w)?, b.w0_action(w)?);
        if x != y {
            out.push(Disagreement {
                weight: w.clone(),
                first: x,
                second: y,
            });
        }
    }
    Ok(out)
}

/// Dominant weights with every Dynkin label at most `max`, in lexicographic label order.
pub fn label_grid(sys: &RootSystem, max: i64) -> Vec<Vector> {
    let r = sys.rank();
    let mut out = Vec::new();
    let mut labels = vec![0i64; r];
    loop {
        out.push(sys.from_int_labels(&labels));
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if labels[i] < max {
                labels[i] += 1;
                break;
            }
            labels[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eps(c: &[i64]) -> Vector {
        Vector::from_ints(c)
    }

    #[test]
    fn sl3_adjoint_is_mixed() {
        let a = w0_action("sl(3,R)", &eps(&[1, 0, -1])).unwrap();
        assert_eq!(a, W0Action::new(1, 1));
        assert_eq!(a.verdict(), Verdict::Mixed);
    }

    #[test]
    fn sl3_adjoint_branching() {
        let cs = branch_to_s("sl(3,R)", &eps(&[1, 0, -1])).unwrap();
        let r = reducer("sl(3,R)").unwrap();
        let total: u128 = cs.iter().map(|c| c.multiplicity as u128 * r.constituent_dim(c).unwrap()).sum();
        assert_eq!(total, 8);
        let adj = cs.iter().filter(|c| r.constituent_dim(c) == Some(3)).count();
        let triv: Vec<_> = cs.iter().filter(|c| r.constituent_dim(c) == Some(1)).collect();
        let doublets: u64 = cs.iter().filter(|c| r.constituent_dim(c) == Some(2)).map(|c| c.multiplicity).sum();
        assert_eq!((adj, triv.len(), doublets), (1, 1, 2));
        assert!(triv[0].abelian_charges.is_zero());
        // Doublets carry nonzero abelian charge.
        assert!(cs
            .iter()
            .filter(|c| r.constituent_dim(c) == Some(2))
            .all(|c| !c.abelian_charges.is_zero()));
    }

    #[test]
    fn trivial_weight() {
        for f in ["sl(3,R)", "su(2,3)", "EIV", "so(3,8)", "sp(2·,1,2)"] {
            let r = reducer(f).unwrap();
            let z = Vector::zeros(r.system().ambient_dim);
            let cs = r.branch(&z).unwrap();
            assert_eq!(cs.len(), 1);
            assert_eq!(cs[0].multiplicity, 1);
            assert_eq!(r.w0_action(&z).unwrap(), W0Action::new(1, 0));
        }
    }

    #[test]
    fn so1n_forms_reduce_to_themselves() {
        let cs = branch_to_s("so(1,5)", &eps(&[2, 1, 0])).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].highest_weights[0], Some(eps(&[2, 1, 0])));
        assert_eq!(w0_action("so(1,5)", &eps(&[1, 1, 0])).unwrap(), W0Action::new(0, 1));
    }

    #[test]
    fn constituent_rule() {
        let r = reducer("sl(3,R)").unwrap();
        let dec = &r.decomposition;
        let so: Vec<usize> = (0..dec.summands.len()).filter(|&i| dec.summands[i].is_so1n()).collect();
        let mk = |ws: Vec<Option<Vector>>| BranchConstituent {
            weight: Vector::zeros(3),
            highest_weights: ws,
            abelian_charges: Vector::zeros(3),
            multiplicity: 1,
        };
        let mut ws: Vec<Option<Vector>> = dec.summands.iter().map(|_| None).collect();
        ws[so[0]] = Some(eps(&[1]));
        assert_eq!(constituent_invariants(&mk(ws.clone()), dec), (1, Some(-1)));

        let r = reducer("sl(4,R)").unwrap();
        let dec = &r.decomposition;
        let mut ws: Vec<Option<Vector>> = dec.summands.iter().map(|_| None).collect();
        ws[0] = Some(eps(&[1]));
        ws[1] = Some(eps(&[2]));
        assert_eq!(constituent_invariants(&mk(ws), dec), (1, Some(-1)));

        let r = reducer("so*(8)").unwrap();
        let dec = &r.decomposition;
        let ws: Vec<Option<Vector>> = dec
            .summands
            .iter()
            .map(|s| match s.kind {
                SummandKind::Compact(_) => Some(eps(&[1, -1])),
                SummandKind::So1n(_) => Some(eps(&[0])),
                _ => None,
            })
            .collect();
        let c = BranchConstituent {
            weight: Vector::zeros(4),
            highest_weights: ws,
            abelian_charges: Vector::zeros(4),
            multiplicity: 1,
        };
        assert_eq!(constituent_invariants(&c, dec), (0, None));
    }

    #[test]
    fn branching_preserves_dimension() {
        for (f, max) in [("sl(3,R)", 2), ("su(1,2)", 2), ("so(2,3)", 1), ("sp(2·,1,1)", 2), ("su(2,2)", 1), ("G", 1)] {
            let r = reducer(f).unwrap();
            let sys = r.system();
            for lambda in label_grid(sys, max) {
                let cs = r.branch(&lambda).unwrap();
                let total: u128 = cs.iter().map(|c| c.multiplicity as u128 * r.constituent_dim(c).unwrap()).sum();
                assert_eq!(total, sys.weyl_dimension(&lambda).unwrap(), "{f} {lambda}");
            }
        }
    }

    #[test]
    fn pruning_keeps_the_answer() {
        for (f, max) in [("sl(3,R)", 2), ("su(1,2)", 2), ("so(1,4)", 2), ("sp(2·,1,1)", 2), ("su(1,3)", 1), ("G", 1)] {
            let r = reducer(f).unwrap();
            for lambda in label_grid(r.system(), max) {
                let a = r.w0_action(&lambda).unwrap();
                assert_eq!(a, r.w0_action_unpruned(&lambda).unwrap(), "{f} {lambda}");
                assert_eq!(a.dim(), r.l_invariant_dim(&lambda).unwrap(), "{f} {lambda}");
            }
        }
    }

    #[test]
    fn complex_case() {
        let a2 = CartanType::new(Family::A, 2);
        let adj = eps(&[1, 0, -1]);
        let a = complex_w0_action(a2, &adj, &adj).unwrap();
        assert_eq!(a, W0Action::new(2, 2));
        let z = Vector::zeros(3);
        assert_eq!(complex_w0_action(a2, &adj, &z).unwrap(), W0Action::new(1, 1));
        assert!(complex_w0_action(a2, &adj, &eps(&[1, -1])).is_err());
    }

    #[test]
    fn quasi_split() {
        let sys = RootSystem::new(Family::A, 3).unwrap();
        let grid = label_grid(&sys, 1);
        assert!(quasi_split_agrees("sl(4,R)", "su(2,2)", &grid).unwrap().is_empty());
        let sys = RootSystem::new(Family::A, 2).unwrap();
        let grid = label_grid(&sys, 2);
        assert!(quasi_split_agrees("sl(3,R)", "su(1,2)", &grid).unwrap().is_empty());
        assert_eq!(w0_action("su(1,2)", &eps(&[1, 0, -1])).unwrap(), W0Action::new(1, 1));
        assert!(quasi_split_agrees("sl(3,R)", "sl(4,R)", &grid).is_err());
    }

    #[test]
    fn split_forms_count_zero_weights() {
        for f in ["sl(3,R)", "so(2,3)", "G", "sp(2·3,R)"] {
            let r = reducer(f).unwrap();
            for lambda in label_grid(r.system(), 1) {
                let zero = Vector::zeros(r.system().ambient_dim);
                let m = r.system().weight_multiplicity(&lambda, &zero).unwrap();
                assert_eq!(r.w0_action(&lambda).unwrap().dim(), m, "{f} {lambda}");
            }
        }
    }

    #[test]
    fn non_dominant_rejected() {
        assert!(w0_action("sl(3,R)", &eps(&[-1, 0, 1])).is_err());
        assert!(w0_action("complex:A2", &eps(&[1, 0, -1])).is_err());
    }
}
