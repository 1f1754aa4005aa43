//! Brute-force matrix oracle for small forms.
//!
//! The complexified algebra is realized by the standard matrices of
//! sl(n), so(n) or sp(2n), with a diagonal Cartan subalgebra whose ε-coordinates
//! are those of the catalog's root system. All representations are built from
//! that realization, so the invariant kernel and the Weyl lift are computed by
//! exact linear algebra alone, independently of characters and branching.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{q, Matrix, Vector, Q};
use crate::realforms::RealForm;
use crate::reducer::W0Action;
use crate::rootsys::{Family, RootSystem};
use crate::subalg::build_s;

/// Largest rank the oracle accepts.
pub const MAX_RANK: usize = 4;

/// Largest `p+q` accepted by [`sym2_standard_rep`].
pub const MAX_SYM2_SIZE: usize = 8;

/// Coordinates with respect to a fixed list of independent vectors.
#[derive(Clone, Debug)]
struct Coords {
    basis: Matrix,
    pivots: Vec<usize>,
    inv: Matrix,
}

impl Coords {
    fn new(basis: &[Vector]) -> Result<Self> {
        let b = Matrix::from_columns(basis);
        let (_, pivots) = b.transpose().rref();
        if pivots.len() != basis.len() {
            return Err(Error::Internal("basis vectors are dependent".into()));
        }
        let sub = Matrix::from_rows(&pivots.iter().map(|&p| (0..b.cols()).map(|j| b[(p, j)]).collect()).collect::<Vec<_>>());
        let inv = sub
            .inverse()
            .ok_or_else(|| Error::Internal("pivot block is singular".into()))?;
        Ok(Coords { basis: b, pivots, inv })
    }

    /// `None` if `v` is outside the span.
    fn of(&self, v: &Vector) -> Option<Vector> {
        let c = self.inv.apply(&Vector(self.pivots.iter().map(|&p| v[p]).collect()));
        (self.basis.apply(&c) == *v).then_some(c)
    }
}

/// Names a basis element of the realized algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Generator {
    /// Simple coroot `α_i^∨`.
    H(usize),
    /// `e_α` for the `k`-th positive root.
    E(usize),
    /// `f_α` for the `k`-th positive root.
    F(usize),
}

/// A complex simple Lie algebra as N×N matrices, with a Chevalley-type basis
/// `h_i, e_α, f_α` normalized so that `[e_α, f_α] = α^∨`.
#[derive(Debug)]
pub struct Realization {
    pub system: RootSystem,
    /// Size of the defining matrices.
    pub size: usize,
    /// ε-weight of each standard basis vector.
    pub weights: Vec<Vector>,
    /// Invariant bilinear form, `None` for sl(n).
    pub form: Option<Matrix>,
    pub basis: Vec<Matrix>,
    pub generators: Vec<Generator>,
    coords: Coords,
}

impl Realization {
    pub fn new(system: RootSystem) -> Result<Self> {
        let r = system.rank();
        let amb = system.ambient_dim;
        let eps = |i: usize| Vector::unit(amb, i);
        let (weights, form): (Vec<Vector>, Option<Matrix>) = match system.cartan_type.family {
            Family::A => ((0..amb).map(eps).collect(), None),
            Family::B => {
                let mut w: Vec<Vector> = (0..r).map(eps).collect();
                w.push(Vector::zeros(amb));
                w.extend((0..r).rev().map(|i| -&eps(i)));
                let n = w.len();
                (w, Some(antidiagonal(n, |_| 1)))
            }
            Family::C | Family::D | Family::D2Special => {
                let mut w: Vec<Vector> = (0..r).map(eps).collect();
                w.extend((0..r).rev().map(|i| -&eps(i)));
                let sym = system.cartan_type.family != Family::C;
                (w, Some(antidiagonal(2 * r, |a| if sym || a < r { 1 } else { -1 })))
            }
            _ => {
                return Err(Error::Unsupported(format!(
                    "no matrix realization for {}",
                    system.cartan_type
                )))
            }
        };
        let size = weights.len();
        let cartan = |v: &Vector| -> Matrix {
            let mut m = Matrix::zeros(size, size);
            for (a, w) in weights.iter().enumerate() {
                m[(a, a)] = w.dot(v);
            }
            m
        };
        let root_vector = |alpha: &Vector| -> Result<Matrix> {
            let support: Vec<(usize, usize)> = (0..size)
                .flat_map(|a| (0..size).map(move |b| (a, b)))
                .filter(|&(a, b)| &weights[a] - &weights[b] == *alpha)
                .collect();
            let x = match &form {
                None => {
                    let mut v = Vector::zeros(support.len());
                    v[0] = Q::one();
                    v
                }
                Some(j) => {
                    // (X^T J + J X)_{cd} = Σ_a X_{ac} J_{ad} + Σ_b J_{cb} X_{bd}
                    let mut rows = Vec::new();
                    for c in 0..size {
                        for d in 0..size {
                            let row: Vec<Q> = support
                                .iter()
                                .map(|&(a, b)| {
                                    let mut t = Q::zero();
                                    if b == c {
                                        t += j[(a, d)];
                                    }
                                    if b == d {
                                        t += j[(c, a)];
                                    }
                                    t
                                })
                                .collect();
                            if row.iter().any(|t| !t.is_zero()) {
                                rows.push(row);
                            }
                        }
                    }
                    let ns = if rows.is_empty() {
                        Matrix::identity(support.len()).columns()
                    } else {
                        Matrix::from_rows(&rows).nullspace()
                    };
                    if ns.len() != 1 {
                        return Err(Error::Internal(format!("root space of {alpha} has dimension {}", ns.len())));
                    }
                    ns.into_iter().next().unwrap()
                }
            };
            let mut m = Matrix::zeros(size, size);
            for (&(a, b), c) in support.iter().zip(&x.0) {
                m[(a, b)] = *c;
            }
            Ok(m)
        };

        let coroot = |a: &Vector| a.scale(q(2) / a.norm2());
        let mut basis: Vec<Matrix> = system.simple_roots.iter().map(|a| cartan(&coroot(a))).collect();
        let mut generators: Vec<Generator> = (0..r).map(Generator::H).collect();
        for (k, alpha) in system.positive_roots.iter().enumerate() {
            let e = root_vector(alpha)?;
            let f0 = root_vector(&-alpha)?;
            let h = cartan(&coroot(alpha));
            let ef = e.commutator(&f0);
            let a = (0..size)
                .find(|&a| !h[(a, a)].is_zero())
                .ok_or_else(|| Error::Internal(format!("coroot of {alpha} is zero")))?;
            let t = ef[(a, a)] / h[(a, a)];
            if t.is_zero() || ef != h.scale(t) {
                return Err(Error::Internal(format!("[e, f] is not a multiple of the coroot of {alpha}")));
            }
            basis.push(e);
            basis.push(f0.scale(t.recip()));
            generators.push(Generator::E(k));
            generators.push(Generator::F(k));
        }
        let coords = Coords::new(&basis.iter().map(Matrix::flatten).collect::<Vec<_>>())?;
        Ok(Realization {
            system,
            size,
            weights,
            form,
            basis,
            generators,
            coords,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index(&self, g: Generator) -> usize {
        let r = self.system.rank();
        match g {
            Generator::H(i) => i,
            Generator::E(k) => r + 2 * k,
            Generator::F(k) => r + 2 * k + 1,
        }
    }

    /// Index of a positive root in [`RootSystem::positive_roots`].
    pub fn root_index(&self, alpha: &Vector) -> Result<usize> {
        self.system
            .positive_roots
            .iter()
            .position(|b| b == alpha)
            .ok_or_else(|| Error::NotARoot {
                system: self.system.name(),
                root: alpha.to_string(),
            })
    }

    /// The diagonal matrix of an element of 𝔥 given in ε-coordinates.
    pub fn cartan_element(&self, v: &Vector) -> Matrix {
        let mut m = Matrix::zeros(self.size, self.size);
        for (a, w) in self.weights.iter().enumerate() {
            m[(a, a)] = w.dot(v);
        }
        m
    }

    /// Coordinates of a defining matrix in the Chevalley basis.
    pub fn coordinates(&self, x: &Matrix) -> Result<Vector> {
        self.coords
            .of(&x.flatten())
            .ok_or_else(|| Error::Internal("matrix does not lie in the algebra".into()))
    }
}

fn antidiagonal(n: usize, sign: impl Fn(usize) -> i64) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for a in 0..n {
        m[(a, n - 1 - a)] = q(sign(a));
    }
    m
}

/// A representation given by the images of the Chevalley basis.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub dimension: usize,
    pub algebra: Arc<Realization>,
    /// `generator_images[i]` is the image of `algebra.basis[i]`.
    pub generator_images: Vec<Matrix>,
}

impl MatrixRep {
    pub fn image(&self, g: Generator) -> &Matrix {
        &self.generator_images[self.algebra.index(g)]
    }

    /// Image of an arbitrary element given as a defining matrix.
    pub fn image_of(&self, x: &Matrix) -> Result<Matrix> {
        let c = self.algebra.coordinates(x)?;
        let mut m = Matrix::zeros(self.dimension, self.dimension);
        for (ci, img) in c.0.iter().zip(&self.generator_images) {
            if !ci.is_zero() {
                m = &m + &img.scale(*ci);
            }
        }
        Ok(m)
    }

    /// Checks `[ρ(x), ρ(y)] = ρ([x, y])` on every pair of basis elements.
    pub fn check_brackets(&self) -> Result<()> {
        let b = &self.algebra.basis;
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let lhs = self.generator_images[i].commutator(&self.generator_images[j]);
                let rhs = self.image_of(&b[i].commutator(&b[j]))?;
                if lhs != rhs {
                    return Err(Error::Internal(format!(
                        "bracket of {:?} and {:?} is not preserved",
                        self.algebra.generators[i], self.algebra.generators[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Dimension of the weight space with the given Dynkin labels.
    pub fn weight_space_dim(&self, labels: &[i64]) -> usize {
        let blocks: Vec<Matrix> = labels
            .iter()
            .enumerate()
            .map(|(i, &l)| &self.image(Generator::H(i)).clone() - &Matrix::identity(self.dimension).scale(q(l)))
            .collect();
        Matrix::vstack(&blocks).nullspace().len()
    }
}

fn realization_for(form: &RealForm) -> Result<Arc<Realization>> {
    let d = form
        .datum()
        .ok_or_else(|| Error::Unsupported(format!("{} is complex; the oracle covers absolutely simple forms", form.name)))?;
    let sys = &d.complex_system;
    if sys.rank() > MAX_RANK {
        return Err(Error::Unsupported(format!(
            "{} has rank {}; the oracle stops at rank {MAX_RANK}",
            form.name,
            sys.rank()
        )));
    }
    Ok(Arc::new(Realization::new(sys.clone())?))
}

/// The defining representation of the complexified algebra.
pub fn standard_rep(form: &RealForm) -> Result<MatrixRep> {
    let algebra = realization_for(form)?;
    Ok(MatrixRep {
        dimension: algebra.size,
        generator_images: algebra.basis.clone(),
        algebra,
    })
}

pub fn adjoint_rep(form: &RealForm) -> Result<MatrixRep> {
    let algebra = realization_for(form)?;
    let b = &algebra.basis;
    let images = b
        .iter()
        .map(|x| {
            let cols = b
                .iter()
                .map(|y| algebra.coordinates(&x.commutator(y)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(&cols))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MatrixRep {
        dimension: b.len(),
        generator_images: images,
        algebra,
    })
}

/// Traceless symmetric square of the standard representation of so(p,q):
/// the kernel of the contraction with the invariant form.
pub fn sym2_standard_rep(form: &RealForm) -> Result<MatrixRep> {
    let unsupported = || Error::Unsupported(format!("Sym² of the standard representation is defined here for so(p,q) only, not {}", form.name));
    if !form.name.starts_with("so(") {
        return Err(unsupported());
    }
    let std = standard_rep(form)?;
    let alg = Arc::clone(&std.algebra);
    let j = alg.form.as_ref().ok_or_else(unsupported)?;
    let n = alg.size;
    if n > MAX_SYM2_SIZE {
        return Err(Error::Unsupported(format!("{} is too large for the Sym² oracle", form.name)));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let pos = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let contraction = Matrix::from_rows(&[pairs.iter().map(|&(a, b)| j[(a, b)]).collect()]);
    let kernel = contraction.nullspace();
    let coords = Coords::new(&kernel)?;
    let images = alg
        .basis
        .iter()
        .map(|x| {
            let mut full = Matrix::zeros(pairs.len(), pairs.len());
            for (col, &(a, b)) in pairs.iter().enumerate() {
                for c in 0..n {
                    full[(pos(c, b), col)] += x[(c, a)];
                    full[(pos(a, c), col)] += x[(c, b)];
                }
            }
            let cols = kernel
                .iter()
                .map(|v| {
                    coords
                        .of(&full.apply(v))
                        .ok_or_else(|| Error::Internal("traceless part is not invariant".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(&cols))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MatrixRep {
        dimension: kernel.len(),
        generator_images: images,
        algebra: alg,
    })
}

/// `exp(x)` for nilpotent `x`, as a finite sum.
pub fn exp_nilpotent(x: &Matrix) -> Result<Matrix> {
    let n = x.rows();
    let mut term = Matrix::identity(n);
    let mut sum = Matrix::identity(n);
    for k in 1..=n {
        term = (&term * x).scale(Q::new(1, k as i64));
        if term.is_zero() {
            return Ok(sum);
        }
        sum = &sum + &term;
    }
    Err(Error::Internal("exponential of a non-nilpotent matrix".into()))
}

/// A representative of w₀ acting on the representation space.
#[derive(Clone, Debug)]
pub struct W0Rep {
    pub matrix: Matrix,
    pub inverse: Matrix,
    /// Positive roots of 𝔤 whose SL₂ lifts are multiplied together.
    pub roots: Vec<Vector>,
    /// The Weyl group element on ε-coordinates.
    pub weyl: Matrix,
}

/// Roots whose reflections multiply to an element of the Weyl group of 𝔤
/// that preserves 𝔞 and acts on it as the restricted w₀: the highlighted
/// roots of 𝔰, each completed by its image under `−θ` when that differs.
pub fn lift_roots(form: &RealForm) -> Result<Vec<Vector>> {
    let d = form
        .datum()
        .ok_or_else(|| Error::Unsupported(format!("{} is complex", form.name)))?;
    let sys = &d.complex_system;
    let dec = build_s(form)?;
    let mut roots: Vec<Vector> = Vec::new();
    let mut push = |a: Vector| {
        let a = if sys.is_positive_root(&a) { a } else { -&a };
        if !roots.contains(&a) {
            roots.push(a);
        }
    };
    for s in dec.so1n() {
        for &i in &s.highlighted {
            let a = s.simple_roots[i].clone();
            let conj = &d.project(&a).scale(q(2)) - &a;
            if !sys.is_root(&conj) {
                return Err(Error::Internal(format!("−θ({a}) = {conj} is not a root")));
            }
            push(a);
            push(conj);
        }
    }
    for (i, a) in roots.iter().enumerate() {
        for b in &roots[i + 1..] {
            if !a.dot(b).is_zero() || sys.is_root(&(a + b)) || sys.is_root(&(a - b)) {
                return Err(Error::Internal(format!("lift roots {a} and {b} are not strongly orthogonal")));
            }
        }
    }
    let amb = sys.ambient_dim;
    let weyl = roots.iter().fold(Matrix::identity(amb), |acc, a| &acc * &Matrix::reflection(a));
    let p = &d.projection;
    if &weyl * p != &d.restricted_w0() * p {
        return Err(Error::Internal(format!("lift of w0 for {} does not act on 𝔞 as w0", form.name)));
    }
    Ok(roots)
}

/// `∏ exp(ρ(e_α))·exp(−ρ(f_α))·exp(ρ(e_α))` over [`lift_roots`].
pub fn w0_rep(rep: &MatrixRep, form: &RealForm) -> Result<W0Rep> {
    let roots = lift_roots(form)?;
    let n = rep.dimension;
    let mut m = Matrix::identity(n);
    let mut inv = Matrix::identity(n);
    for a in &roots {
        let k = rep.algebra.root_index(a)?;
        let e = rep.image(Generator::E(k));
        let f = rep.image(Generator::F(k));
        let ee = exp_nilpotent(e)?;
        let ef = exp_nilpotent(&f.scale(q(-1)))?;
        let sigma = &(&ee * &ef) * &ee;
        let ee_inv = exp_nilpotent(&e.scale(q(-1)))?;
        let ef_inv = exp_nilpotent(f)?;
        let sigma_inv = &(&ee_inv * &ef_inv) * &ee_inv;
        m = &m * &sigma;
        inv = &sigma_inv * &inv;
    }
    let amb = rep.algebra.system.ambient_dim;
    let weyl = roots.iter().fold(Matrix::identity(amb), |acc, a| &acc * &Matrix::reflection(a));
    Ok(W0Rep {
        matrix: m,
        inverse: inv,
        roots,
        weyl,
    })
}

impl W0Rep {
    /// Checks `W ρ(h) W⁻¹ = ρ(w·h)` for the simple coroots.
    pub fn check_normalizes(&self, rep: &MatrixRep) -> Result<()> {
        let alg = &rep.algebra;
        for a in &alg.system.simple_roots {
            let h = a.scale(q(2) / a.norm2());
            let lhs = &(&self.matrix * &rep.image_of(&alg.cartan_element(&h))?) * &self.inverse;
            let rhs = rep.image_of(&alg.cartan_element(&self.weyl.apply(&h)))?;
            if lhs != rhs {
                return Err(Error::Internal(format!("w0 representative does not normalize 𝔥 at {h}")));
            }
        }
        Ok(())
    }
}

/// Basis of `V^𝔩`: zero weight vectors killed by the root vectors of the
/// black simple roots.
pub fn l_invariants(rep: &MatrixRep, form: &RealForm) -> Result<Vec<Vector>> {
    let d = form
        .datum()
        .ok_or_else(|| Error::Unsupported(format!("{} is complex", form.name)))?;
    let alg = &rep.algebra;
    let mut blocks: Vec<Matrix> = (0..alg.system.rank()).map(|i| rep.image(Generator::H(i)).clone()).collect();
    for b in d.compact_simple_roots() {
        let k = alg.root_index(&b)?;
        blocks.push(rep.image(Generator::E(k)).clone());
        blocks.push(rep.image(Generator::F(k)).clone());
    }
    Ok(Matrix::vstack(&blocks).nullspace())
}

/// The w₀ action on `V^𝔩`, computed directly.
pub fn oracle_w0_on_invariants(rep: &MatrixRep, form: &RealForm) -> Result<W0Action> {
    let kernel = l_invariants(rep, form)?;
    if kernel.is_empty() {
        return Ok(W0Action::new(0, 0));
    }
    let w = w0_rep(rep, form)?;
    let coords = Coords::new(&kernel)?;
    let cols = kernel
        .iter()
        .map(|v| {
            coords
                .of(&w.matrix.apply(v))
                .ok_or_else(|| Error::Internal(format!("V^l of {} is not stable under the w0 representative", form.name)))
        })
        .collect::<Result<Vec<_>>>()?;
    let m = Matrix::from_columns(&cols);
    let k = kernel.len();
    let id = Matrix::identity(k);
    if &m * &m != id {
        return Err(Error::Internal("w0 representative does not square to 1 on V^l".into()));
    }
    let plus = k - (&m - &id).rank();
    let minus = k - (&m + &id).rank();
    if plus + minus != k {
        return Err(Error::Internal("w0 representative is not diagonalizable on V^l".into()));
    }
    Ok(W0Action::new(plus as u64, minus as u64))
}

/// Highest weights of the irreducible pieces of the adjoint representation:
/// one highest root per simple factor of the complexification.
pub fn adjoint_highest_weights(sys: &RootSystem) -> Vec<Vector> {
    match sys.cartan_type.family {
        Family::D2Special => sys.simple_roots.iter().rev().cloned().collect(),
        _ => vec![sys.positive_roots.last().expect("nonempty root system").clone()],
    }
}

/// Highest weight of the traceless symmetric square of the standard representation.
pub fn sym2_highest_weight(sys: &RootSystem) -> Vector {
    Vector::unit(sys.ambient_dim, 0).scale(q(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realforms::lookup;
    use crate::reducer::{w0_action, Verdict};

    fn form(name: &str) -> Arc<RealForm> {
        lookup(name).unwrap()
    }

    #[test]
    fn sl2_adjoint() {
        let rep = adjoint_rep(&form("sl(2,R)")).unwrap();
        assert_eq!(rep.dimension, 3);
        let h = rep.image(Generator::H(0));
        let mut eig: Vec<Q> = (0..3).map(|i| h[(i, i)]).collect();
        eig.sort();
        assert_eq!(eig, vec![q(-2), q(0), q(2)]);
        assert!(h.is_zero() || (0..3).all(|i| (0..3).all(|j| i == j || h[(i, j)].is_zero())));
    }

    #[test]
    fn dimensions() {
        let sl3 = adjoint_rep(&form("sl(3,R)")).unwrap();
        assert_eq!(sl3.dimension, 8);
        assert_eq!(sl3.weight_space_dim(&[0, 0]), 2);
        assert_eq!(adjoint_rep(&form("so(1,4)")).unwrap().dimension, 10);
        assert_eq!(sym2_standard_rep(&form("so(1,4)")).unwrap().dimension, 14);
        assert_eq!(sym2_standard_rep(&form("so(1,2)")).unwrap().dimension, 5);
        assert_eq!(sym2_standard_rep(&form("so(1,3)")).unwrap().dimension, 9);
    }

    #[test]
    fn sym2_is_v_2e1() {
        for name in ["so(1,2)", "so(1,3)", "so(1,4)", "so(2,3)"] {
            let f = form(name);
            let rep = sym2_standard_rep(&f).unwrap();
            let sys = &f.datum().unwrap().complex_system;
            let ch = sys.character(&sym2_highest_weight(sys)).unwrap();
            let mut total = 0;
            for (labels, m) in ch.all_weights() {
                assert_eq!(rep.weight_space_dim(&labels), m as usize, "{name} at {labels:?}");
                total += m;
            }
            assert_eq!(total as usize, rep.dimension);
        }
    }

    #[test]
    fn brackets_hold() {
        for name in ["sl(3,R)", "so(1,4)", "sp(2·2,R)", "su(1,2)", "so(2,4)"] {
            let f = form(name);
            adjoint_rep(&f).unwrap().check_brackets().unwrap();
            standard_rep(&f).unwrap().check_brackets().unwrap();
        }
        sym2_standard_rep(&form("so(1,3)")).unwrap().check_brackets().unwrap();
        sym2_standard_rep(&form("so(1,4)")).unwrap().check_brackets().unwrap();
    }

    #[test]
    fn documented_examples() {
        let a = oracle_w0_on_invariants(&adjoint_rep(&form("so(1,2)")).unwrap(), &form("so(1,2)")).unwrap();
        assert_eq!((a.dim(), a.verdict()), (1, Verdict::MinusId));
        let a = oracle_w0_on_invariants(&adjoint_rep(&form("sl(3,R)")).unwrap(), &form("sl(3,R)")).unwrap();
        assert_eq!((a.plus, a.minus, a.verdict()), (1, 1, Verdict::Mixed));
        let f = form("so(1,4)");
        let a = oracle_w0_on_invariants(&sym2_standard_rep(&f).unwrap(), &f).unwrap();
        assert_eq!((a.dim(), a.verdict()), (1, Verdict::PlusId));
    }

    #[test]
    fn representative_normalizes_cartan() {
        for name in ["sl(3,R)", "so(1,5)", "su(1,3)", "sp(2·2,R)", "so(1,3)"] {
            let f = form(name);
            let rep = adjoint_rep(&f).unwrap();
            w0_rep(&rep, &f).unwrap().check_normalizes(&rep).unwrap();
        }
    }

    #[test]
    fn agrees_with_reducer() {
        for name in ["so(1,2)", "so(1,3)", "so(1,4)", "so(1,5)", "sl(2,R)", "sl(3,R)", "su(1,2)", "sp(2·2,R)", "so(2,3)", "su(2,2)"] {
            let f = form(name);
            let sys = &f.datum().unwrap().complex_system;
            let rep = adjoint_rep(&f).unwrap();
            let got = oracle_w0_on_invariants(&rep, &f).unwrap();
            let want = adjoint_highest_weights(sys)
                .iter()
                .map(|l| w0_action(name, l).unwrap())
                .fold(W0Action::new(0, 0), |a, b| W0Action::new(a.plus + b.plus, a.minus + b.minus));
            assert_eq!(got, want, "{name} adjoint");
            if let Ok(rep) = sym2_standard_rep(&f) {
                let got = oracle_w0_on_invariants(&rep, &f).unwrap();
                assert_eq!(got, w0_action(name, &sym2_highest_weight(sys)).unwrap(), "{name} sym2");
            }
        }
    }

    #[test]
    fn rejects_out_of_scope() {
        assert!(matches!(adjoint_rep(&form("sl(6,R)")), Err(Error::Unsupported(_))));
        assert!(matches!(adjoint_rep(&form("G")), Err(Error::Unsupported(_))));
        assert!(matches!(sym2_standard_rep(&form("sl(3,R)")), Err(Error::Unsupported(_))));
        assert!(matches!(adjoint_rep(&form("complex:A2")), Err(Error::Unsupported(_))));
    }

    #[test]
    fn exp_rejects_non_nilpotent() {
        assert!(exp_nilpotent(&Matrix::identity(2)).is_err());
    }
}
