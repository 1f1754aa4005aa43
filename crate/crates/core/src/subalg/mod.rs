//! The reductive subalgebra 𝔰 whose roots restrict to `{0} ∪ ±Ξ`, split into
//! so(1,n), compact and abelian summands.

pub mod golden;

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{q, Matrix, Vector, Q};
use crate::orthoset::ortho_set_for;
use crate::realforms::{RealForm, RestrictedDatum};
use crate::rootsys::{bourbaki_cartan, cartan_of, components, identify_cartan, CartanType, Family, RootSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SummandKind {
    So1n(usize),
    Compact(CartanType),
    Abelian(usize),
}

impl fmt::Display for SummandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SummandKind::So1n(n) => write!(f, "so(1,{n})"),
            SummandKind::Compact(t) => write!(f, "compact {}", compact_name(*t)),
            SummandKind::Abelian(d) => write!(f, "R^{d}"),
        }
    }
}

/// The compact real form of a complex simple type, named classically.
pub fn compact_name(t: CartanType) -> String {
    match t.family {
        Family::A => format!("su({})", t.rank + 1),
        Family::B => format!("so({})", 2 * t.rank + 1),
        Family::C => format!("sp({})", t.rank),
        Family::D => format!("so({})", 2 * t.rank),
        Family::D2Special => "so(4)".into(),
        _ => format!("compact {t}"),
    }
}

/// One summand of 𝔰.
#[derive(Clone, Debug)]
pub struct Summand {
    pub kind: SummandKind,
    /// Simple roots in 𝔥*, in the Bourbaki order of `chart_system`.
    pub simple_roots: Vec<Vector>,
    /// Indices into `simple_roots` of the roots with nonzero restriction.
    pub highlighted: Vec<usize>,
    /// Element of Ξ this summand is attached to (so(1,n) only).
    pub xi: Option<Vector>,
    /// Root system giving the summand's own ε-coordinates.
    pub chart_system: Option<RootSystem>,
}

impl Summand {
    pub fn rank(&self) -> usize {
        match self.kind {
            SummandKind::Abelian(d) => d,
            _ => self.simple_roots.len(),
        }
    }

    pub fn is_so1n(&self) -> bool {
        matches!(self.kind, SummandKind::So1n(_))
    }

    /// Dynkin labels of `v` with respect to this summand's simple roots.
    pub fn labels(&self, v: &Vector) -> Vec<Q> {
        self.simple_roots.iter().map(|b| v.pair_coroot(b)).collect()
    }

    /// Maps a weight of 𝔤 to the summand's ε-coordinates (preserving labels).
    pub fn chart(&self, v: &Vector) -> Option<Vector> {
        let sys = self.chart_system.as_ref()?;
        Some(sys.from_labels(&self.labels(v)))
    }

    /// The element of span(simple_roots) ⊂ 𝔥* with the same labels as `x`,
    /// a vector in the summand's ε-coordinates.
    pub fn pullback(&self, x: &Vector) -> Option<Vector> {
        let sys = self.chart_system.as_ref()?;
        let labels = sys.labels(x);
        let k = self.simple_roots.len();
        let mut g = Matrix::zeros(k, k);
        let mut rhs = Vector::zeros(k);
        for j in 0..k {
            for i in 0..k {
                g[(j, i)] = self.simple_roots[i].dot(&self.simple_roots[j]);
            }
            rhs[j] = labels[j] * self.simple_roots[j].norm2() / q(2);
        }
        let y = g.solve(&rhs)?;
        Some(
            y.0.iter()
                .zip(&self.simple_roots)
                .fold(Vector::zeros(self.simple_roots[0].dim()), |acc, (c, b)| &acc + &b.scale(*c)),
        )
    }

    fn sort_key(&self) -> (u8, usize, Vec<Vector>) {
        let (k, n) = match self.kind {
            SummandKind::So1n(n) => (0, n),
            SummandKind::Compact(t) => (1, t.rank),
            SummandKind::Abelian(d) => (2, d),
        };
        (k, n, self.simple_roots.clone())
    }
}

#[derive(Clone, Debug)]
pub struct SummandDecomposition {
    pub real_form: String,
    pub summands: Vec<Summand>,
    /// Ξ in 𝔞* ⊂ 𝔥*.
    pub xi: Vec<Vector>,
    /// All roots of 𝔤 restricting to 0 or ±Ξ.
    pub s_roots: Vec<Vector>,
}

impl SummandDecomposition {
    pub fn so1n(&self) -> impl Iterator<Item = &Summand> {
        self.summands.iter().filter(|s| s.is_so1n())
    }

    pub fn abelian_dim(&self) -> usize {
        self.summands
            .iter()
            .map(|s| match s.kind {
                SummandKind::Abelian(d) => d,
                _ => 0,
            })
            .sum()
    }

    /// Simple roots of 𝔰 (all non-abelian summands).
    pub fn simple_roots(&self) -> Vec<Vector> {
        self.summands.iter().flat_map(|s| s.simple_roots.iter().cloned()).collect()
    }

    /// Short description, e.g. `so(1,2)^2 + R^1`.
    pub fn summary(&self) -> String {
        let mut parts: Vec<(String, usize)> = Vec::new();
        for s in &self.summands {
            let name = match s.kind {
                SummandKind::So1n(n) => format!("so(1,{n})"),
                SummandKind::Compact(t) => compact_name(t),
                SummandKind::Abelian(d) if d > 0 => format!("R^{d}"),
                SummandKind::Abelian(_) => continue,
            };
            match parts.last_mut() {
                Some((p, c)) if *p == name => *c += 1,
                _ => parts.push((name, 1)),
            }
        }
        if parts.is_empty() {
            return "0".into();
        }
        parts
            .into_iter()
            .map(|(p, c)| if c > 1 { format!("{p}^{c}") } else { p })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Product of the restricted reflections in the elements of Ξ carried by
    /// so(1,n) summands; should equal the restricted w₀.
    pub fn highlighted_w0(&self, ambient: usize) -> Matrix {
        self.so1n()
            .filter_map(|s| s.xi.as_ref())
            .fold(Matrix::identity(ambient), |acc, x| &acc * &Matrix::reflection(x))
    }

    /// Checks the structural invariants of the decomposition.
    pub fn check(&self, d: &RestrictedDatum) -> Result<()> {
        let sys = &d.complex_system;
        let fail = |m: String| Err(Error::Internal(format!("{}: {m}", self.real_form)));
        let rs: Vec<&Summand> = self.summands.iter().filter(|s| !s.simple_roots.is_empty()).collect();
        for (i, a) in rs.iter().enumerate() {
            for b in &rs[i + 1..] {
                for x in &a.simple_roots {
                    for y in &b.simple_roots {
                        if !x.dot(y).is_zero() || sys.is_root(&(x + y)) || sys.is_root(&(x - y)) {
                            return fail(format!("summand roots {x} and {y} are not strongly orthogonal"));
                        }
                    }
                }
            }
        }
        for s in &self.summands {
            if let SummandKind::So1n(n) = s.kind {
                let want = if n == 3 { 2 } else { 1 };
                if s.highlighted.len() != want {
                    return fail(format!("so(1,{n}) has {} highlighted roots", s.highlighted.len()));
                }
            }
        }
        // Every root of 𝔰 is an integral combination of the summand simple roots.
        let simple = self.simple_roots();
        let mut generated = 0;
        if !simple.is_empty() {
            let m = Matrix::from_columns(&simple);
            for r in &self.s_roots {
                match m.solve(r) {
                    Some(c) if c.is_integral() => generated += 1,
                    _ => return fail(format!("root {r} of 𝔰 is not generated by the summands")),
                }
            }
        }
        if generated != self.s_roots.len() {
            return fail("missing roots".into());
        }
        let total: usize = self.summands.iter().map(Summand::rank).sum();
        if total != sys.rank() {
            return fail(format!("summand ranks add up to {total}, not {}", sys.rank()));
        }
        if !self.xi.is_empty() && self.highlighted_w0(sys.ambient_dim) != d.restricted_w0() {
            return fail("product of highlighted reflections differs from the restricted w0".into());
        }
        Ok(())
    }
}

/// Finds `perm` with `cartan[i][j] == bourbaki(t)[perm[i]][perm[j]]` and `perm[fixed] == 0`.
fn match_with_first(cartan: &[Vec<i64>], t: CartanType, fixed: usize) -> Option<Vec<usize>> {
    let b = bourbaki_cartan(t)?;
    let r = cartan.len();
    if b.len() != r {
        return None;
    }
    let mut perm = vec![usize::MAX; r];
    let mut used = vec![false; r];
    perm[fixed] = 0;
    used[0] = true;
    fn go(c: &[Vec<i64>], b: &[Vec<i64>], i: usize, perm: &mut [usize], used: &mut [bool]) -> bool {
        if i == c.len() {
            return (0..c.len()).all(|x| (0..c.len()).all(|y| c[x][y] == b[perm[x]][perm[y]]));
        }
        if perm[i] != usize::MAX {
            return go(c, b, i + 1, perm, used);
        }
        for k in 0..c.len() {
            if used[k] {
                continue;
            }
            let ok = (0..c.len())
                .filter(|&j| perm[j] != usize::MAX)
                .all(|j| c[i][j] == b[k][perm[j]] && c[j][i] == b[perm[j]][k])
                && c[i][i] == b[k][k];
            if ok {
                perm[i] = k;
                used[k] = true;
                if go(c, b, i + 1, perm, used) {
                    return true;
                }
                perm[i] = usize::MAX;
                used[k] = false;
            }
        }
        false
    }
    go(cartan, &b, 0, &mut perm, &mut used).then_some(perm)
}

fn reorder(roots: &[Vector], perm: &[usize]) -> Vec<Vector> {
    let mut out = vec![Vector::zeros(0); roots.len()];
    for (i, &k) in perm.iter().enumerate() {
        out[k] = roots[i].clone();
    }
    out
}

/// Classifies one connected component of the Dynkin graph of 𝔰.
pub fn classify_component(d: &RestrictedDatum, simple: &[Vector]) -> Result<Summand> {
    if simple.is_empty() {
        return Ok(Summand {
            kind: SummandKind::Abelian(0),
            simple_roots: Vec::new(),
            highlighted: Vec::new(),
            xi: None,
            chart_system: None,
        });
    }
    let projections: Vec<Vector> = simple.iter().map(|b| d.project(b)).collect();
    let hl: Vec<usize> = (0..simple.len()).filter(|&i| !projections[i].is_zero()).collect();
    let cartan = cartan_of(simple);
    if hl.is_empty() {
        let (t, perm) = identify_cartan(&cartan, None)
            .ok_or_else(|| Error::Internal("compact component is not a simple root system".into()))?;
        return Ok(Summand {
            kind: SummandKind::Compact(t),
            simple_roots: reorder(simple, &perm),
            highlighted: Vec::new(),
            xi: None,
            chart_system: Some(RootSystem::of_type(t)?),
        });
    }
    if hl.len() != 1 {
        return Err(Error::Internal(format!(
            "component has {} roots with nonzero restriction; its restricted system is not A1",
            hl.len()
        )));
    }
    let r = simple.len();
    let mut options = vec![CartanType::new(Family::B, r)];
    if r >= 3 {
        options.push(CartanType::new(Family::D, r));
    }
    for t in options {
        if let Some(perm) = match_with_first(&cartan, t, hl[0]) {
            let n = match t.family {
                Family::B => 2 * r,
                _ => 2 * r - 1,
            };
            return Ok(Summand {
                kind: SummandKind::So1n(n),
                simple_roots: reorder(simple, &perm),
                highlighted: vec![0],
                xi: Some(projections[hl[0]].clone()),
                chart_system: Some(RootSystem::of_type(t)?),
            });
        }
    }
    Err(Error::Internal(format!(
        "noncompact component with Cartan matrix {cartan:?} is not of so(1,n) type"
    )))
}

/// Builds 𝔰 for a catalogued absolutely simple form.
pub fn build_s(form: &RealForm) -> Result<SummandDecomposition> {
    let d = form
        .datum()
        .ok_or_else(|| Error::Unsupported(format!("{} is complex; use the complex product rule", form.name)))?;
    let sys = &d.complex_system;
    let xi = ortho_set_for(d)?;

    let in_s = |b: &Vector| {
        let p = d.project(b);
        p.is_zero() || xi.iter().any(|x| *x == p || *x == -&p)
    };
    let s_roots: Vec<Vector> = sys.roots().into_iter().filter(|b| in_s(b)).collect();
    let positive: Vec<&Vector> = sys.positive_roots.iter().filter(|b| in_s(b)).collect();
    let simple: Vec<Vector> = positive
        .iter()
        .filter(|g| {
            !positive.iter().any(|a| {
                let rest = **g - *a;
                !rest.is_zero() && positive.contains(&&rest)
            })
        })
        .map(|g| (*g).clone())
        .collect();

    let mut summands: Vec<Summand> = Vec::new();
    let mut noncompact: Vec<Summand> = Vec::new();
    for comp in components(&simple) {
        let roots: Vec<Vector> = comp.iter().map(|&i| simple[i].clone()).collect();
        let s = classify_component(d, &roots)?;
        if s.is_so1n() {
            noncompact.push(s);
        } else {
            summands.push(s);
        }
    }

    // Components attached to the same element of Ξ merge: two so(1,2)'s
    // sharing ξ form an so(1,3) ≅ sl₂(ℂ).
    for x in &xi {
        let group: Vec<Summand> = noncompact.iter().filter(|s| s.xi.as_ref() == Some(x)).cloned().collect();
        match group.len() {
            1 => summands.push(group.into_iter().next().unwrap()),
            2 if group.iter().all(|s| s.simple_roots.len() == 1) => {
                let mut roots: Vec<Vector> = group.iter().map(|s| s.simple_roots[0].clone()).collect();
                roots.sort();
                roots.reverse();
                summands.push(Summand {
                    kind: SummandKind::So1n(3),
                    simple_roots: roots,
                    highlighted: vec![0, 1],
                    xi: Some(x.clone()),
                    chart_system: Some(RootSystem::new(Family::D2Special, 2)?),
                });
            }
            k => {
                return Err(Error::Internal(format!(
                    "{}: {k} noncompact components restrict to {x}",
                    form.name
                )))
            }
        }
    }
    if noncompact.iter().any(|s| !xi.contains(s.xi.as_ref().unwrap())) {
        return Err(Error::Internal(format!("{}: a component restricts outside Ξ", form.name)));
    }

    let used: usize = summands.iter().map(Summand::rank).sum();
    summands.push(Summand {
        kind: SummandKind::Abelian(sys.rank() - used),
        simple_roots: Vec::new(),
        highlighted: Vec::new(),
        xi: None,
        chart_system: None,
    });
    summands.sort_by(cmp_summands);

    let dec = SummandDecomposition {
        real_form: form.name.clone(),
        summands,
        xi,
        s_roots,
    };
    dec.check(d)?;
    Ok(dec)
}

fn cmp_summands(a: &Summand, b: &Summand) -> Ordering {
    a.sort_key().cmp(&b.sort_key())
}

/// Simple-root coordinates of a root of 𝔤, for display.
pub fn simple_coords_string(sys: &RootSystem, v: &Vector) -> String {
    match sys.simple_coords(v) {
        Some(c) => {
            let parts: Vec<String> = c.iter().map(crate::linalg::fmt_q).collect();
            format!("({})", parts.join(","))
        }
        None => v.to_string(),
    }
}

/// Whether `v` is a nonnegative integral combination of `basis`.
pub fn in_positive_span(basis: &[Vector], v: &Vector) -> bool {
    if basis.is_empty() {
        return v.is_zero();
    }
    Matrix::from_columns(basis)
        .solve(v)
        .is_some_and(|c| c.is_integral() && c.0.iter().all(|x| !x.is_negative()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realforms::lookup;

    fn dec(name: &str) -> SummandDecomposition {
        build_s(&lookup(name).unwrap()).unwrap_or_else(|e| panic!("{name}: {e}"))
    }

    #[test]
    fn sl4r() {
        let s = dec("sl(4,R)");
        assert_eq!(s.summary(), "so(1,2)^2 + R^1");
        let hl: Vec<Vector> = s.so1n().map(|x| x.simple_roots[0].clone()).collect();
        assert_eq!(hl, vec![Vector::from_ints(&[0, 1, -1, 0]), Vector::from_ints(&[1, 0, 0, -1])]);
    }

    #[test]
    fn sp_1_1_is_so14() {
        let s = dec("sp(2·,1,1)");
        assert_eq!(s.summary(), "so(1,4)");
        let x = s.so1n().next().unwrap();
        assert_eq!(x.simple_roots, vec![Vector::from_ints(&[0, 2]), Vector::from_ints(&[1, -1])]);
        assert_eq!(x.highlighted, vec![0]);
    }

    #[test]
    fn fii_is_so18() {
        let s = dec("FII");
        assert_eq!(s.summary(), "so(1,8)");
        let f4 = RootSystem::new(Family::F, 4).unwrap();
        let x = s.so1n().next().unwrap();
        assert_eq!(simple_coords_string(&f4, &x.simple_roots[0]), "(0,1,2,2)");
    }

    #[test]
    fn so38() {
        assert_eq!(dec("so(3,8)").summary(), "so(1,2)^2 + so(1,6)");
    }

    #[test]
    fn footnote_cases() {
        // n − 4⌊p/2⌋ = 2: the so₂ part is abelian.
        assert_eq!(dec("so(2,4)").summary(), "so(1,2)^2 + R^1");
        assert_eq!(dec("so(3,3)").summary(), "so(1,2)^2 + R^1");
        // n + 1 − 2p = 3: so(1,3) in the D2special chart.
        let s = dec("so(3,5)");
        assert_eq!(s.summary(), "so(1,2)^2 + so(1,3)");
        let x = s.so1n().find(|x| x.kind == SummandKind::So1n(3)).unwrap();
        assert_eq!(x.chart_system.as_ref().unwrap().cartan_type.family, Family::D2Special);
    }

    #[test]
    fn exceptional_shapes() {
        assert_eq!(dec("EIV").summary(), "so(1,9) + R^1");
        assert_eq!(dec("EVI").summary(), "so(1,2)^4 + su(2)^3");
        assert_eq!(dec("EIII").summary(), "so(1,2)^2 + su(4) + R^1");
        assert_eq!(dec("EVII").summary(), "so(1,2)^3 + so(8)");
        assert_eq!(dec("EIX").summary(), "so(1,2)^4 + so(8)");
        assert_eq!(dec("su(2,2)").summary(), "so(1,2)^2 + R^1");
    }

    #[test]
    fn compact_classification() {
        let s = dec("so*(8)");
        assert_eq!(s.summary(), "so(1,2)^2 + su(2)^2");
        let f = lookup("so*(8)").unwrap();
        let d = f.datum().unwrap();
        // Black nodes a(1), a(3): e1-e2 restricts to zero, e1+e2 does not.
        let c = classify_component(d, &[Vector::from_ints(&[1, -1, 0, 0])]).unwrap();
        assert_eq!(c.kind, SummandKind::Compact(CartanType::new(Family::A, 1)));
        let c = classify_component(d, &[Vector::from_ints(&[1, 1, 0, 0])]).unwrap();
        assert_eq!(c.kind, SummandKind::So1n(2));
        assert_eq!(classify_component(d, &[]).unwrap().kind, SummandKind::Abelian(0));
    }

    #[test]
    fn sl4h_component() {
        let s = dec("sl(4,H)");
        assert_eq!(s.summary(), "so(1,5)^2 + R^1");
        let x = s.so1n().find(|x| x.simple_roots[0] == Vector::from_ints(&[0, 1, 0, 0, 0, 0, -1, 0])).unwrap();
        assert_eq!(x.kind, SummandKind::So1n(5));
    }

    #[test]
    fn charts_round_trip() {
        let s = dec("so(3,8)");
        for x in &s.summands {
            if let Some(sys) = &x.chart_system {
                for w in &sys.fundamental_weights {
                    let v = x.pullback(w).unwrap();
                    assert_eq!(x.chart(&v).unwrap(), *w);
                }
            }
        }
    }

    #[test]
    fn every_form_decomposes() {
        for name in crate::realforms::instances(8) {
            dec(&name);
        }
    }
}
