//! Root systems in Bourbaki ε-coordinates.

mod weights;

pub use weights::Character;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{fmt_q, q, qf, Matrix, Vector, Q};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    /// so₄(ℂ) with simple roots ε₁+ε₂ and ε₁−ε₂.
    D2Special,
}

impl Family {
    pub fn letter(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
            Family::D2Special => "D2special",
        }
    }

    fn valid_ranks(self) -> &'static str {
        match self {
            Family::A | Family::B | Family::C => "rank >= 1",
            Family::D => "rank >= 3",
            Family::E => "rank 6, 7 or 8",
            Family::F => "rank 4",
            Family::G => "rank 2",
            Family::D2Special => "rank 2",
        }
    }

    pub fn accepts(self, rank: usize) -> bool {
        match self {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G | Family::D2Special => rank == 2,
        }
    }
}

/// A family together with a rank, e.g. `B3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Self {
        CartanType { family, rank }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::D2Special => f.write_str("D2special"),
            fam => write!(f, "{}{}", fam.letter(), self.rank),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("D2special") {
            return Ok(CartanType::new(Family::D2Special, 2));
        }
        let bad = || Error::Parse(format!("not a Cartan type: {s:?}"));
        let mut chars = s.chars();
        let family = match chars.next().ok_or_else(bad)?.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        Ok(CartanType::new(family, rank))
    }
}

/// Result of moving a vector into the dominant chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dominated {
    pub vector: Vector,
    /// Determinant of the Weyl element used, `(-1)^word.len()`.
    pub sign: i32,
    pub regular: bool,
    /// Simple reflections applied to the input, in order.
    pub word: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    pub ambient_dim: usize,
    pub simple_roots: Vec<Vector>,
    pub fundamental_weights: Vec<Vector>,
    pub weyl_vector: Vector,
    /// Positive roots ordered by height, then lexicographically.
    pub positive_roots: Vec<Vector>,
    /// `cartan[i][j] = ⟨α_i, α_j^∨⟩`.
    pub cartan: Vec<Vec<i64>>,
    root_set: HashSet<Vector>,
    /// Maps an ambient vector in the root span to its simple-root coordinates.
    to_simple: Matrix,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.accepts(rank) {
            return Err(Error::InvalidSystem {
                family: family.letter().to_string(),
                rank,
                reason: format!("family {} requires {}", family.letter(), family.valid_ranks()),
            });
        }
        let (ambient, simple) = bourbaki_simple_roots(family, rank);
        Ok(Self::from_simple_roots(CartanType::new(family, rank), ambient, simple))
    }

    pub fn of_type(t: CartanType) -> Result<Self> {
        Self::new(t.family, t.rank)
    }

    fn from_simple_roots(cartan_type: CartanType, ambient_dim: usize, simple: Vec<Vector>) -> Self {
        let r = simple.len();
        let cartan: Vec<Vec<i64>> = simple
            .iter()
            .map(|a| {
                simple
                    .iter()
                    .map(|b| {
                        let c = a.pair_coroot(b);
                        assert!(c.is_integer());
                        c.to_integer()
                    })
                    .collect()
            })
            .collect();

        let s = Matrix::from_columns(&simple);
        let gram = &s.transpose() * &s;
        let to_simple = &gram.inverse().expect("simple roots independent") * &s.transpose();

        let mut seen: HashSet<Vector> = HashSet::new();
        let mut queue: VecDeque<Vector> = VecDeque::new();
        for a in &simple {
            for v in [a.clone(), -a] {
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
        while let Some(b) = queue.pop_front() {
            for a in &simple {
                let c = b.pair_coroot(a);
                let img = &b - &a.scale(c);
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }

        let coords = |v: &Vector| to_simple.apply(v);
        let mut positive: Vec<(Q, Vector)> = seen
            .iter()
            .filter(|v| coords(v).0.iter().all(|c| !c.is_negative()))
            .map(|v| (coords(v).0.iter().sum(), v.clone()))
            .collect();
        positive.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
        let positive_roots: Vec<Vector> = positive.into_iter().map(|(_, v)| v).collect();

        let weyl_vector = positive_roots
            .iter()
            .fold(Vector::zeros(ambient_dim), |acc, v| &acc + v)
            .scale(qf(1, 2));

        // ϖ_i = Σ_j (A^{-1})_{ij} α_j, where A is the Cartan matrix with rows
        // indexed by α_i; this gives ⟨ϖ_i, α_j^∨⟩ = δ_ij.
        let a = Matrix::from_rows(
            &cartan.iter().map(|row| row.iter().map(|&x| q(x)).collect()).collect::<Vec<_>>(),
        );
        let ainv = a.inverse().expect("Cartan matrix invertible");
        let fundamental_weights = (0..r)
            .map(|i| {
                (0..r).fold(Vector::zeros(ambient_dim), |acc, j| &acc + &simple[j].scale(ainv[(i, j)]))
            })
            .collect();

        RootSystem {
            cartan_type,
            ambient_dim,
            simple_roots: simple,
            fundamental_weights,
            weyl_vector,
            positive_roots,
            cartan,
            root_set: seen,
            to_simple,
        }
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn family(&self) -> Family {
        self.cartan_type.family
    }

    pub fn name(&self) -> String {
        self.cartan_type.to_string()
    }

    /// All roots: positive roots followed by their negatives.
    pub fn roots(&self) -> Vec<Vector> {
        let mut all = self.positive_roots.clone();
        all.extend(self.positive_roots.iter().map(|v| -v));
        all
    }

    pub fn num_roots(&self) -> usize {
        self.root_set.len()
    }

    pub fn is_root(&self, v: &Vector) -> bool {
        self.root_set.contains(v)
    }

    pub fn is_positive_root(&self, v: &Vector) -> bool {
        self.is_root(v) && self.simple_coords(v).is_some_and(|c| c.iter().all(|x| !x.is_negative()))
    }

    /// Coordinates of `v` in the basis of simple roots, if `v` lies in their span.
    pub fn simple_coords(&self, v: &Vector) -> Option<Vec<Q>> {
        let c = self.to_simple.apply(v);
        let back = (0..self.rank()).fold(Vector::zeros(self.ambient_dim), |acc, j| {
            &acc + &self.simple_roots[j].scale(c[j])
        });
        (back == *v).then_some(c.0)
    }

    pub fn height(&self, root: &Vector) -> Q {
        self.simple_coords(root).map(|c| c.iter().sum()).unwrap_or_else(Q::zero)
    }

    pub fn from_simple_coords(&self, c: &[Q]) -> Vector {
        c.iter()
            .zip(&self.simple_roots)
            .fold(Vector::zeros(self.ambient_dim), |acc, (x, a)| &acc + &a.scale(*x))
    }

    /// Dynkin labels `⟨v, α_i^∨⟩`.
    pub fn labels(&self, v: &Vector) -> Vec<Q> {
        self.simple_roots.iter().map(|a| v.pair_coroot(a)).collect()
    }

    pub fn from_labels(&self, labels: &[Q]) -> Vector {
        labels
            .iter()
            .zip(&self.fundamental_weights)
            .fold(Vector::zeros(self.ambient_dim), |acc, (x, w)| &acc + &w.scale(*x))
    }

    pub fn from_int_labels(&self, labels: &[i64]) -> Vector {
        self.from_labels(&labels.iter().map(|&x| q(x)).collect::<Vec<_>>())
    }

    /// Integer Dynkin labels, or `None` for a non-integral vector.
    pub fn int_labels(&self, v: &Vector) -> Option<Vec<i64>> {
        self.labels(v)
            .into_iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    /// Orthogonal projection onto the span of the roots.
    pub fn project_to_span(&self, v: &Vector) -> Vector {
        self.from_labels(&self.labels(v))
    }

    pub fn is_integral(&self, v: &Vector) -> bool {
        self.int_labels(v).is_some()
    }

    pub fn is_dominant(&self, v: &Vector) -> bool {
        self.labels(v).iter().all(|x| !x.is_negative())
    }

    /// Checks that `v` is a dominant integral weight lying in the root span.
    pub fn check_dominant_weight(&self, v: &Vector) -> Result<Vec<i64>> {
        if v.dim() != self.ambient_dim {
            return Err(Error::InvalidWeight(format!(
                "{} has {} coordinates, {} expects {}",
                v,
                v.dim(),
                self.name(),
                self.ambient_dim
            )));
        }
        let labels = self
            .int_labels(v)
            .ok_or_else(|| Error::InvalidWeight(format!("{v} is not integral for {}", self.name())))?;
        if labels.iter().any(|&x| x < 0) {
            return Err(Error::InvalidWeight(format!("{v} is not dominant for {}", self.name())));
        }
        Ok(labels)
    }

    pub fn reflect(&self, root: &Vector, v: &Vector) -> Result<Vector> {
        if !self.is_root(root) {
            return Err(Error::NotARoot {
                system: self.name(),
                root: root.to_string(),
            });
        }
        Ok(reflect_in(root, v))
    }

    pub fn reflect_simple(&self, i: usize, v: &Vector) -> Vector {
        reflect_in(&self.simple_roots[i], v)
    }

    pub fn dominate(&self, v: &Vector) -> Dominated {
        let (cur, word) = dominate_in(&self.simple_roots, v);
        let regular = self.simple_roots.iter().all(|a| !cur.dot(a).is_zero());
        Dominated {
            sign: if word.len() % 2 == 0 { 1 } else { -1 },
            vector: cur,
            regular,
            word,
        }
    }

    /// Applies `s_{word[0]} ⋯ s_{word[k-1]}` to `v`, i.e. undoes [`Self::dominate`].
    pub fn apply_word_inverse(&self, word: &[usize], v: &Vector) -> Vector {
        word.iter().rev().fold(v.clone(), |acc, &i| self.reflect_simple(i, &acc))
    }

    /// Longest Weyl element as a matrix on the ambient space (identity off the root span).
    pub fn w0_matrix(&self) -> Matrix {
        longest_element_matrix(&self.simple_roots, self.ambient_dim)
    }

    /// Weyl dimension formula; `None` on overflow.
    pub fn weyl_dimension(&self, lambda: &Vector) -> Option<u128> {
        let lr = lambda + &self.weyl_vector;
        let mut num = Vec::new();
        let mut den = Vec::new();
        for a in &self.positive_roots {
            let n = lr.pair_coroot(a);
            let d = self.weyl_vector.pair_coroot(a);
            if n.is_zero() {
                return Some(0);
            }
            // For integral weights both pairings are integers.
            num.push(n * q(2));
            den.push(d * q(2));
        }
        exact_ratio_product(&num, &den)
    }

    /// The set of roots as a sorted set, handy for comparisons.
    pub fn root_btree(&self) -> BTreeSet<Vector> {
        self.root_set.iter().cloned().collect()
    }
}

/// Moves `v` into the chamber of an arbitrary simple system, returning the
/// result and the indices of the reflections applied.
pub fn dominate_in(simple: &[Vector], v: &Vector) -> (Vector, Vec<usize>) {
    let mut cur = v.clone();
    let mut word = Vec::new();
    while let Some(i) = simple.iter().position(|a| cur.dot(a).is_negative()) {
        cur = reflect_in(&simple[i], &cur);
        word.push(i);
    }
    (cur, word)
}

/// Longest element of the reflection group generated by `simple`, as a
/// matrix on the ambient space (identity on the orthogonal complement).
pub fn longest_element_matrix(simple: &[Vector], ambient: usize) -> Matrix {
    if simple.is_empty() {
        return Matrix::identity(ambient);
    }
    // A vector with (v, α_j) = -1 for every simple root is regular antidominant.
    let s = Matrix::from_columns(simple);
    let gram = &s.transpose() * &s;
    let target = Vector(vec![-Q::one(); simple.len()]);
    let c = gram.solve(&target).expect("simple roots independent");
    let v = s.apply(&c);
    let (_, word) = dominate_in(simple, &v);
    word.iter().fold(Matrix::identity(ambient), |acc, &i| &Matrix::reflection(&simple[i]) * &acc)
}

/// `⟨α_i, α_j^∨⟩` for an ordered list of roots.
pub fn cartan_of(simple: &[Vector]) -> Vec<Vec<i64>> {
    simple
        .iter()
        .map(|a| {
            simple
                .iter()
                .map(|b| {
                    let c = a.pair_coroot(b);
                    if c.is_integer() {
                        c.to_integer()
                    } else {
                        i64::MIN
                    }
                })
                .collect()
        })
        .collect()
}

/// Bourbaki Cartan matrix of a type.
pub fn bourbaki_cartan(t: CartanType) -> Option<Vec<Vec<i64>>> {
    RootSystem::of_type(t).ok().map(|s| s.cartan)
}

/// Finds a simple type and a relabelling `perm` with
/// `cartan[i][j] == bourbaki[perm[i]][perm[j]]`. Types isomorphic to
/// `preferred` are reported as `preferred`; rank-one systems are `A1`.
pub fn identify_cartan(cartan: &[Vec<i64>], preferred: Option<CartanType>) -> Option<(CartanType, Vec<usize>)> {
    let r = cartan.len();
    if r == 0 {
        return None;
    }
    let mut candidates: Vec<CartanType> = preferred.into_iter().filter(|t| t.rank == r).collect();
    for fam in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
        let t = CartanType::new(fam, r);
        if fam.accepts(r) && (r > 1 || fam == Family::A) && !candidates.contains(&t) {
            candidates.push(t);
        }
    }
    for t in candidates {
        let Some(b) = bourbaki_cartan(t) else { continue };
        let mut perm = vec![usize::MAX; r];
        let mut used = vec![false; r];
        if assign(cartan, &b, 0, &mut perm, &mut used) {
            return Some((t, perm));
        }
    }
    None
}

fn assign(c: &[Vec<i64>], b: &[Vec<i64>], i: usize, perm: &mut [usize], used: &mut [bool]) -> bool {
    if i == c.len() {
        return true;
    }
    for k in 0..c.len() {
        if used[k] || c[i][i] != b[k][k] {
            continue;
        }
        if (0..i).all(|j| c[i][j] == b[k][perm[j]] && c[j][i] == b[perm[j]][k]) {
            perm[i] = k;
            used[k] = true;
            if assign(c, b, i + 1, perm, used) {
                return true;
            }
            used[k] = false;
        }
    }
    false
}

/// Connected components of the Dynkin graph of `simple` (indices, sorted).
pub fn components(simple: &[Vector]) -> Vec<Vec<usize>> {
    let n = simple.len();
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![start];
        comp[start] = id;
        let mut members = Vec::new();
        while let Some(i) = stack.pop() {
            members.push(i);
            for j in 0..n {
                if comp[j] == usize::MAX && !simple[i].dot(&simple[j]).is_zero() {
                    comp[j] = id;
                    stack.push(j);
                }
            }
        }
        members.sort();
        out.push(members);
    }
    out
}

fn reflect_in(root: &Vector, v: &Vector) -> Vector {
    v - &root.scale(v.pair_coroot(root))
}

/// Computes `Π num / Π den` for positive rationals with small numerators by
/// cancelling prime factors; `None` if the result is not an integer fitting in u128.
fn exact_ratio_product(num: &[Q], den: &[Q]) -> Option<u128> {
    let mut exps: std::collections::BTreeMap<u64, i64> = Default::default();
    let mut add = |x: i64, sign: i64| {
        let mut x = x.unsigned_abs();
        let mut p = 2;
        while p * p <= x {
            while x.is_multiple_of(p) {
                *exps.entry(p).or_default() += sign;
                x /= p;
            }
            p += 1;
        }
        if x > 1 {
            *exps.entry(x).or_default() += sign;
        }
    };
    for x in num {
        add(*x.numer(), 1);
        add(*x.denom(), -1);
    }
    for x in den {
        add(*x.numer(), -1);
        add(*x.denom(), 1);
    }
    let mut out: u128 = 1;
    for (p, e) in exps {
        if e < 0 {
            return None;
        }
        for _ in 0..e {
            out = out.checked_mul(p as u128)?;
        }
    }
    Some(out)
}

fn bourbaki_simple_roots(family: Family, r: usize) -> (usize, Vec<Vector>) {
    let e = |n: usize, coeffs: &[(usize, i64)]| {
        let mut v = Vector::zeros(n);
        for &(i, c) in coeffs {
            v[i - 1] += q(c);
        }
        v
    };
    match family {
        Family::A => (r + 1, (1..=r).map(|i| e(r + 1, &[(i, 1), (i + 1, -1)])).collect()),
        Family::B | Family::C | Family::D => {
            let mut s: Vec<Vector> = (1..r).map(|i| e(r, &[(i, 1), (i + 1, -1)])).collect();
            s.push(match family {
                Family::B => e(r, &[(r, 1)]),
                Family::C => e(r, &[(r, 2)]),
                _ => e(r, &[(r - 1, 1), (r, 1)]),
            });
            (r, s)
        }
        Family::G => (3, vec![e(3, &[(1, 1), (2, -1)]), e(3, &[(1, -2), (2, 1), (3, 1)])]),
        Family::F => {
            let h = qf(1, 2);
            (
                4,
                vec![
                    e(4, &[(2, 1), (3, -1)]),
                    e(4, &[(3, 1), (4, -1)]),
                    e(4, &[(4, 1)]),
                    Vector(vec![h, -h, -h, -h]),
                ],
            )
        }
        Family::E => {
            let h = qf(1, 2);
            let mut s = vec![
                Vector(vec![h, -h, -h, -h, -h, -h, -h, h]),
                e(8, &[(1, 1), (2, 1)]),
            ];
            s.extend((3..=8).map(|i| e(8, &[(i - 1, 1), (i - 2, -1)])));
            s.truncate(r);
            (8, s)
        }
        Family::D2Special => (2, vec![e(2, &[(1, 1), (2, 1)]), e(2, &[(1, 1), (2, -1)])]),
    }
}

/// Formats a vector as an ε-combination, e.g. `e1-e3` or `1/2e1+1/2e2`.
pub fn fmt_eps(v: &Vector) -> String {
    let mut out = String::new();
    for (i, c) in v.0.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else if out.is_empty() { "" } else { "+" };
        let a = c.abs();
        let coef = if a.is_one() { String::new() } else { fmt_q(&a) };
        out.push_str(&format!("{sign}{coef}e{}", i + 1));
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(f: Family, r: usize) -> RootSystem {
        RootSystem::new(f, r).unwrap()
    }

    #[test]
    fn root_counts_match_classification() {
        let cases = [
            (Family::A, 1, 2),
            (Family::A, 4, 20),
            (Family::B, 1, 2),
            (Family::B, 3, 18),
            (Family::C, 3, 18),
            (Family::D, 4, 24),
            (Family::G, 2, 12),
            (Family::F, 4, 48),
            (Family::E, 6, 72),
            (Family::E, 7, 126),
            (Family::E, 8, 240),
            (Family::D2Special, 2, 4),
        ];
        for (f, r, n) in cases {
            assert_eq!(sys(f, r).num_roots(), n, "{f:?}{r}");
        }
    }

    #[test]
    fn invalid_ranks_are_rejected() {
        assert!(RootSystem::new(Family::D, 2).is_err());
        assert!(RootSystem::new(Family::E, 5).is_err());
        assert!(RootSystem::new(Family::G, 3).is_err());
        let msg = RootSystem::new(Family::F, 3).unwrap_err().to_string();
        assert!(msg.contains("rank 4"), "{msg}");
    }

    #[test]
    fn g2_cartan_orientation() {
        let g = sys(Family::G, 2);
        assert_eq!(g.cartan, vec![vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn d2special_data() {
        let d = sys(Family::D2Special, 2);
        assert_eq!(d.simple_roots, vec![Vector::from_ints(&[1, 1]), Vector::from_ints(&[1, -1])]);
        assert_eq!(d.weyl_vector, Vector::from_ints(&[1, 0]));
        assert_eq!(d.cartan, vec![vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn b1_fundamental_weight() {
        let b = sys(Family::B, 1);
        assert_eq!(b.fundamental_weights[0], Vector(vec![qf(1, 2)]));
    }

    #[test]
    fn fundamental_weights_dual_to_coroots() {
        for (f, r) in [(Family::E, 8), (Family::F, 4), (Family::G, 2), (Family::C, 5), (Family::D, 5)] {
            let s = sys(f, r);
            for (i, w) in s.fundamental_weights.iter().enumerate() {
                let l = s.labels(w);
                for (j, x) in l.iter().enumerate() {
                    assert_eq!(*x, if i == j { q(1) } else { q(0) });
                }
            }
            let rho = s.fundamental_weights.iter().fold(Vector::zeros(s.ambient_dim), |a, w| &a + w);
            assert_eq!(rho, s.weyl_vector);
        }
    }

    #[test]
    fn reflect_examples() {
        let a2 = sys(Family::A, 2);
        let r = a2.reflect(&Vector::from_ints(&[1, -1, 0]), &Vector::from_ints(&[1, 0, 0])).unwrap();
        assert_eq!(r, Vector::from_ints(&[0, 1, 0]));
        let b2 = sys(Family::B, 2);
        let r = b2.reflect(&Vector::from_ints(&[0, 1]), &Vector::from_ints(&[1, 1])).unwrap();
        assert_eq!(r, Vector::from_ints(&[1, -1]));
        assert!(b2.reflect(&Vector::from_ints(&[1, 2]), &Vector::from_ints(&[1, 1])).is_err());
        let g2 = sys(Family::G, 2);
        for a in g2.roots() {
            assert_eq!(g2.reflect(&a, &a).unwrap(), -&a);
        }
    }

    #[test]
    fn dominate_examples() {
        let a2 = sys(Family::A, 2);
        // ε₁−ε₂ is not dominant in A₂; the orbit of a root meets the chamber at θ.
        let d = a2.dominate(&Vector::from_ints(&[-1, 1, 0]));
        assert_eq!((d.vector.clone(), d.sign, d.regular), (Vector::from_ints(&[1, 0, -1]), 1, true));
        let d = a2.dominate(&Vector::from_ints(&[0, 1, 0]));
        assert_eq!((d.vector.clone(), d.sign), (Vector::from_ints(&[1, 0, 0]), -1));
        let d = a2.dominate(&Vector::zeros(3));
        assert_eq!((d.sign, d.regular), (1, false));
        let b2 = sys(Family::B, 2);
        let v = Vector::from_ints(&[-1, -1]);
        let d = b2.dominate(&v);
        // ε₁+ε₂ is fixed by s_{ε₁−ε₂}, so it is singular and the sign depends on the word.
        assert_eq!((d.vector.clone(), d.regular), (Vector::from_ints(&[1, 1]), false));
        assert_eq!(d.sign, if d.word.len().is_multiple_of(2) { 1 } else { -1 });
        assert_eq!(b2.apply_word_inverse(&d.word, &d.vector), v);
        let d = b2.dominate(&Vector::from_ints(&[-2, -1]));
        assert_eq!((d.vector.clone(), d.sign, d.regular), (Vector::from_ints(&[2, 1]), 1, true));
    }

    #[test]
    fn w0_of_a2_reverses_coordinates() {
        let a2 = sys(Family::A, 2);
        let w0 = a2.w0_matrix();
        let expect = Matrix::from_int_rows(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        assert_eq!(w0, expect);
        let theta = Vector::from_ints(&[1, 0, -1]);
        assert_eq!(w0.apply(&theta), -&theta);
    }

    #[test]
    fn cartan_identification() {
        let b3 = sys(Family::B, 3);
        let mut rev = b3.simple_roots.clone();
        rev.reverse();
        let (t, perm) = identify_cartan(&cartan_of(&rev), None).unwrap();
        assert_eq!(t, CartanType::new(Family::B, 3));
        assert_eq!(perm, vec![2, 1, 0]);
        let c2 = CartanType::new(Family::C, 2);
        assert_eq!(identify_cartan(&bourbaki_cartan(c2).unwrap(), Some(c2)).unwrap().0, c2);
        let d3 = bourbaki_cartan(CartanType::new(Family::D, 3)).unwrap();
        assert_eq!(identify_cartan(&d3, None).unwrap().0, CartanType::new(Family::A, 3));
        let b1 = bourbaki_cartan(CartanType::new(Family::B, 1)).unwrap();
        assert_eq!(identify_cartan(&b1, None).unwrap().0, CartanType::new(Family::A, 1));
        let e6 = sys(Family::E, 6);
        assert_eq!(identify_cartan(&e6.cartan, None).unwrap().0, e6.cartan_type);
        assert!(identify_cartan(&[vec![2, 0], vec![0, 2]], None).is_none());
    }

    #[test]
    fn longest_elements_send_positive_to_negative() {
        for (f, r) in [(Family::E, 7), (Family::F, 4), (Family::D, 5), (Family::A, 4)] {
            let s = sys(f, r);
            let w0 = s.w0_matrix();
            for a in &s.positive_roots {
                assert!(!s.is_positive_root(&w0.apply(a)));
                assert!(s.is_root(&w0.apply(a)));
            }
        }
    }

    #[test]
    fn weyl_dimensions() {
        let a2 = sys(Family::A, 2);
        assert_eq!(a2.weyl_dimension(&a2.from_int_labels(&[1, 1])), Some(8));
        let e8 = sys(Family::E, 8);
        assert_eq!(e8.weyl_dimension(&e8.from_int_labels(&[0, 0, 0, 0, 0, 0, 0, 1])), Some(248));
        let g2 = sys(Family::G, 2);
        assert_eq!(g2.weyl_dimension(&g2.from_int_labels(&[1, 0])), Some(7));
    }

    #[test]
    fn eps_formatting() {
        assert_eq!(fmt_eps(&Vector::from_ints(&[1, 0, -1])), "e1-e3");
        assert_eq!(fmt_eps(&Vector(vec![qf(1, 2), qf(-1, 2)])), "1/2e1-1/2e2");
        assert_eq!(fmt_eps(&Vector::zeros(2)), "0");
    }
}
