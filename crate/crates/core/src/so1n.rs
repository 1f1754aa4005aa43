//! Invariants of the centralizer of 𝔞 in representations of so(1,n).
//!
//! Weights are given in the ε-basis of so_{n+1}(ℂ): `B1` for n = 2,
//! `D2special` for n = 3, `B_{n/2}` for even n and `D_{(n+1)/2}` for odd n.

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{fmt_q, q, qf, Vector, Q};
use crate::rootsys::{Family, RootSystem};

/// The complex type used for so(1,n).
pub fn so1n_type(n: usize) -> Result<(Family, usize)> {
    Ok(match n {
        0 | 1 => {
            return Err(Error::ParameterRange {
                name: "n".into(),
                reason: format!("so(1,{n}) needs n >= 2"),
            })
        }
        2 => (Family::B, 1),
        3 => (Family::D2Special, 2),
        n if n % 2 == 0 => (Family::B, n / 2),
        n => (Family::D, n.div_ceil(2)),
    })
}

pub fn so1n_system(n: usize) -> Result<RootSystem> {
    let (f, r) = so1n_type(n)?;
    RootSystem::new(f, r)
}

/// A dominant weight of so_{n+1}(ℂ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct So1nWeight {
    pub n: usize,
    pub lambda: Vector,
}

impl So1nWeight {
    pub fn new(n: usize, lambda: Vector) -> Result<Self> {
        let sys = so1n_system(n)?;
        if lambda.dim() != sys.ambient_dim {
            return Err(Error::InvalidWeight(format!(
                "so(1,{n}) weights have {} coordinates, got {}",
                sys.ambient_dim,
                lambda.dim()
            )));
        }
        sys.check_dominant_weight(&lambda)?;
        Ok(So1nWeight { n, lambda })
    }

    pub fn from_ints(n: usize, coords: &[i64]) -> Result<Self> {
        Self::new(n, Vector::from_ints(coords))
    }
}

fn as_int(x: &Q) -> Option<i64> {
    x.is_integer().then(|| x.to_integer())
}

/// Condition (*): λ = λ₁ε₁ with λ₁ ∈ ℤ for n = 2; otherwise λ = λ₁ε₁ + λ₂ε₂
/// with integers of even sum.
pub fn check_star(w: &So1nWeight) -> bool {
    let l = &w.lambda.0;
    if w.n == 2 {
        return as_int(&l[0]).is_some();
    }
    if l.iter().skip(2).any(|x| !x.is_zero()) {
        return false;
    }
    match (as_int(&l[0]), as_int(&l[1])) {
        (Some(a), Some(b)) => (a + b).is_even(),
        _ => false,
    }
}

/// Dimension of the invariants: 1 under (*), 0 otherwise.
pub fn so1n_dim(w: &So1nWeight) -> usize {
    check_star(w) as usize
}

/// The scalar (−1)^{λ₁} by which w₀ acts on the invariant line.
pub fn so1n_sign(w: &So1nWeight) -> Result<i32> {
    if !check_star(w) {
        return Err(Error::InvalidWeight(format!(
            "{} does not satisfy (*) for so(1,{}); the invariant space is zero",
            w.lambda, w.n
        )));
    }
    let l1 = w.lambda.0[0].to_integer();
    Ok(if l1.is_even() { 1 } else { -1 })
}

/// Row parameters of the doubled Young tableau spanning the invariants:
/// `a_s` (resp. `b_s`) is half the number of boxes of the first (resp.
/// second) row holding a symbol at most `s` in the order 1 < 2 < 2̄ < 1̄.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubledTableau {
    pub a1: Q,
    pub a2: Q,
    pub a2bar: Q,
    pub a1bar: Q,
    pub b1: Q,
    pub b2: Q,
    pub b2bar: Q,
    pub b1bar: Q,
}

impl DoubledTableau {
    /// Equal numbers of each symbol and its bar.
    pub fn is_null(&self) -> bool {
        let ones = self.a1 + self.b1;
        let twos = (self.a2 - self.a1) + (self.b2 - self.b1);
        let twobars = (self.a2bar - self.a2) + (self.b2bar - self.b2);
        let onebars = (self.a1bar - self.a2bar) + (self.b1bar - self.b2bar);
        ones == onebars && twos == twobars
    }

    pub fn params(&self) -> [Q; 8] {
        [self.a1, self.a2, self.a2bar, self.a1bar, self.b1, self.b2, self.b2bar, self.b1bar]
    }

    /// Checks row monotonicity, nullity and the quarter-integrality of the parameters.
    pub fn check(&self, lambda1: i64, lambda2: i64) -> Result<()> {
        let z = Q::zero();
        let ok = z <= self.a1
            && self.a1 <= self.a2
            && self.a2 <= self.a2bar
            && self.a2bar <= self.a1bar
            && z <= self.b1
            && self.b1 <= self.b2
            && self.b2 <= self.b2bar
            && self.b2bar <= self.b1bar;
        if !ok {
            return Err(Error::Internal(format!("tableau rows are not monotone: {self}")));
        }
        if !self.is_null() {
            return Err(Error::Internal(format!("tableau is not null: {self}")));
        }
        if self.params().iter().any(|x| !(x * q(4)).is_integer()) {
            return Err(Error::Internal(format!("parameters outside (1/4)Z: {self}")));
        }
        if self.a1bar != q(lambda1) || self.b1bar != q(lambda2) {
            return Err(Error::Internal(format!("row lengths differ from ({lambda1}, {lambda2})")));
        }
        Ok(())
    }

    /// The two rows, each cell a symbol; a row of length ℓ has 2ℓ cells.
    pub fn rows(&self) -> [Vec<&'static str>; 2] {
        let run = |lo: &Q, hi: &Q| ((hi - lo) * q(2)).to_integer().max(0) as usize;
        let row = |c: [&Q; 4]| {
            let mut v = Vec::new();
            let z = Q::zero();
            let bounds = [&z, c[0], c[1], c[2], c[3]];
            for (k, sym) in ["1", "2", "2̄", "1̄"].into_iter().enumerate() {
                v.extend(std::iter::repeat_n(sym, run(bounds[k], bounds[k + 1])));
            }
            v
        };
        [
            row([&self.a1, &self.a2, &self.a2bar, &self.a1bar]),
            row([&self.b1, &self.b2, &self.b2bar, &self.b1bar]),
        ]
    }

    pub fn render(&self) -> String {
        let [r1, r2] = self.rows();
        format!("{}\n{}", r1.join(" "), r2.join(" "))
    }
}

impl fmt::Display for DoubledTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a1={} a2={} a2bar={} a1bar={} b1={} b2={} b2bar={} b1bar={}",
            fmt_q(&self.a1),
            fmt_q(&self.a2),
            fmt_q(&self.a2bar),
            fmt_q(&self.a1bar),
            fmt_q(&self.b1),
            fmt_q(&self.b2),
            fmt_q(&self.b2bar),
            fmt_q(&self.b1bar)
        )
    }
}

fn check_tableau_input(l1: i64, l2: i64) -> Result<()> {
    if l2 < 0 || l1 < l2 {
        return Err(Error::InvalidWeight(format!("need λ1 >= λ2 >= 0, got ({l1}, {l2})")));
    }
    if (l1 + l2).is_odd() {
        return Err(Error::InvalidWeight(format!("λ1 + λ2 must be even, got ({l1}, {l2})")));
    }
    Ok(())
}

/// The unique invariant tableau for λ = λ₁ε₁ + λ₂ε₂ (n ≥ 4).
pub fn invariant_tableau(l1: i64, l2: i64) -> Result<DoubledTableau> {
    check_tableau_input(l1, l2)?;
    let quarter = qf(l1 + l2, 4);
    let half = qf(l1 + l2, 2);
    let t = DoubledTableau {
        a1: quarter.max(qf(l1 - l2, 2)),
        a2: half,
        a2bar: half,
        a1bar: q(l1),
        b1: Q::zero(),
        b2: Q::zero(),
        b2bar: quarter.min(q(l2)),
        b1bar: q(l2),
    };
    t.check(l1, l2)?;
    Ok(t)
}

/// Enumerates every parameter tuple on the (1/4)ℤ grid satisfying the
/// constraints forced on an invariant tableau and returns the survivors.
pub fn tableau_candidates(l1: i64, l2: i64) -> Vec<DoubledTableau> {
    let grid = |hi: i64| (0..=4 * hi).map(|k| qf(k, 4)).collect::<Vec<Q>>();
    let (ga, gb) = (grid(l1), grid(l2));
    let (a1bar, b1bar) = (q(l1), q(l2));
    let mut out = Vec::new();
    for a1 in &ga {
        for a2 in ga.iter().filter(|x| *x >= a1) {
            for a2bar in ga.iter().filter(|x| *x >= a2 && **x <= a1bar) {
                for b1 in &gb {
                    for b2 in gb.iter().filter(|x| *x >= b1) {
                        for b2bar in gb.iter().filter(|x| *x >= b2 && **x <= b1bar) {
                            let t = DoubledTableau {
                                a1: *a1,
                                a2: *a2,
                                a2bar: *a2bar,
                                a1bar,
                                b1: *b1,
                                b2: *b2,
                                b2bar: *b2bar,
                                b1bar,
                            };
                            let ok = b1.is_zero()
                                && b2.is_zero()
                                && a2bar == a2
                                && t.is_null()
                                && b2bar <= a1
                                && (b2bar >= a1 || *b2bar == b1bar);
                            if ok {
                                out.push(t);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// True iff exactly one tuple survives and it equals `invariant_tableau`.
pub fn tableau_unique(l1: i64, l2: i64) -> bool {
    let Ok(t) = invariant_tableau(l1, l2) else { return false };
    let c = tableau_candidates(l1, l2);
    c.len() == 1 && c[0] == t
}

/// Generator weights of the (*) monoid for so(1,n).
pub fn star_generators(n: usize) -> Vec<Vector> {
    match n {
        2 => vec![Vector::from_ints(&[1])],
        3 => vec![Vector::from_ints(&[1, 1]), Vector::from_ints(&[1, -1])],
        _ => {
            let d = so1n_system(n).map(|s| s.ambient_dim).unwrap_or(0);
            let mut a = Vector::zeros(d);
            a.0[0] = q(1);
            a.0[1] = q(1);
            let mut b = Vector::zeros(d);
            b.0[0] = q(2);
            vec![a, b]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, c: &[i64]) -> So1nWeight {
        So1nWeight::from_ints(n, c).unwrap()
    }

    #[test]
    fn star_examples() {
        assert!(check_star(&w(5, &[1, 1, 0])));
        assert!(!check_star(&w(5, &[1, 0, 0])));
        assert!(!check_star(&w(6, &[1, 1, 1])));
        assert!(check_star(&w(2, &[3])));
        assert!(!check_star(&So1nWeight::new(2, Vector(vec![qf(1, 2)])).unwrap()));
        assert!(!check_star(&So1nWeight::new(5, Vector(vec![qf(1, 2); 3])).unwrap()));
    }

    #[test]
    fn dim_and_sign() {
        assert_eq!(so1n_dim(&w(4, &[2, 0])), 1);
        assert_eq!(so1n_dim(&w(4, &[1, 0])), 0);
        assert_eq!(so1n_dim(&w(3, &[1, -1])), 1);
        for n in 4..=8 {
            let d = so1n_system(n).unwrap().ambient_dim;
            let mut adj = vec![0; d];
            adj[0] = 1;
            adj[1] = 1;
            assert_eq!(so1n_sign(&w(n, &adj)).unwrap(), -1);
            adj[0] = 2;
            adj[1] = 0;
            assert_eq!(so1n_sign(&w(n, &adj)).unwrap(), 1);
        }
        assert_eq!(so1n_sign(&w(2, &[4])).unwrap(), 1);
        assert!(so1n_sign(&w(4, &[1, 0])).is_err());
        assert_eq!(so1n_dim(&w(6, &[0, 0, 0])), 1);
    }

    #[test]
    fn weights_are_validated() {
        assert!(So1nWeight::from_ints(4, &[0, 1]).is_err());
        assert!(So1nWeight::from_ints(4, &[1, 1, 0]).is_err());
        assert!(So1nWeight::from_ints(1, &[1]).is_err());
        assert!(So1nWeight::from_ints(5, &[1, 1, -1]).is_ok());
    }

    #[test]
    fn tableau_examples() {
        let t = invariant_tableau(4, 2).unwrap();
        assert_eq!((t.a1, t.a2, t.a2bar, t.a1bar), (qf(3, 2), q(3), q(3), q(4)));
        assert_eq!((t.b1, t.b2, t.b2bar, t.b1bar), (q(0), q(0), qf(3, 2), q(2)));
        let t = invariant_tableau(5, 1).unwrap();
        assert_eq!((t.a1, t.a2, t.a2bar, t.a1bar), (q(2), q(3), q(3), q(5)));
        assert_eq!((t.b2bar, t.b1bar), (q(1), q(1)));
        let t = invariant_tableau(0, 0).unwrap();
        assert!(t.params().iter().all(|x| x.is_zero()));
        assert!(invariant_tableau(3, 0).is_err());
        assert!(invariant_tableau(1, 3).is_err());
    }

    #[test]
    fn tableau_rows() {
        let t = invariant_tableau(5, 1).unwrap();
        let [r1, r2] = t.rows();
        assert_eq!(r1.len(), 10);
        assert_eq!(r2.len(), 2);
        assert_eq!(r1.iter().filter(|s| **s == "1").count(), 4);
        assert_eq!(r2, vec!["2̄", "2̄"]);
    }

    #[test]
    fn uniqueness_by_brute_force() {
        assert!(tableau_unique(4, 2));
        let c = tableau_candidates(1, 1);
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].a1, c[0].b2bar), (qf(1, 2), qf(1, 2)));
        let c = tableau_candidates(2, 0);
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].a1, c[0].b2bar), (q(1), q(0)));
        for l1 in 0..=6 {
            for l2 in (0..=l1).filter(|l2| (l1 + l2) % 2 == 0) {
                assert!(tableau_unique(l1, l2), "({l1}, {l2})");
            }
        }
        assert!(!tableau_unique(3, 0));
    }
}
