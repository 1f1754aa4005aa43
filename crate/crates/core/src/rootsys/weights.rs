//! Weight multiplicities by Freudenthal's recursion, in integer Dynkin labels.

use std::collections::{HashMap, HashSet, VecDeque};

use num_integer::Integer;

use super::RootSystem;
use crate::error::{Error, Result};
use crate::linalg::{q, Matrix, Vector, Q};

/// The dominant part of the character of an irreducible module `V_λ`.
///
/// Built once per highest weight; lookups of arbitrary weights go through
/// the dominant chamber.
#[derive(Clone, Debug)]
pub struct Character {
    highest: Vec<i64>,
    cartan: Vec<Vec<i64>>,
    dominant: HashMap<Vec<i64>, u64>,
}

struct Geometry {
    /// Gram matrix on fundamental weights, scaled to integers.
    gram: Vec<Vec<i64>>,
    /// Positive roots in Dynkin labels.
    pos_labels: Vec<Vec<i64>>,
    /// Converts Dynkin labels to simple-root coordinates.
    label_to_root: Matrix,
}

impl Geometry {
    fn new(sys: &RootSystem) -> Self {
        let r = sys.rank();
        let mut g = Matrix::zeros(r, r);
        for i in 0..r {
            for j in 0..r {
                g[(i, j)] = sys.fundamental_weights[i].dot(&sys.fundamental_weights[j]);
            }
        }
        let mut den = 1i64;
        for i in 0..r {
            for j in 0..r {
                den = den.lcm(g[(i, j)].denom());
            }
        }
        let gram = (0..r)
            .map(|i| (0..r).map(|j| (g[(i, j)] * q(den)).to_integer()).collect())
            .collect();
        let pos_labels = sys
            .positive_roots
            .iter()
            .map(|a| sys.int_labels(a).expect("roots are integral"))
            .collect();
        // labels = Aᵀ c for a vector with simple-root coordinates c.
        let at = Matrix::from_rows(
            &(0..r)
                .map(|i| (0..r).map(|j| q(sys.cartan[j][i])).collect())
                .collect::<Vec<_>>(),
        );
        Geometry {
            gram,
            pos_labels,
            label_to_root: at.inverse().expect("Cartan matrix invertible"),
        }
    }

    fn ip(&self, a: &[i64], b: &[i64]) -> i128 {
        let mut s = 0i128;
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                s += (*x as i128) * (self.gram[i][j] as i128) * (*y as i128);
            }
        }
        s
    }

    fn depth(&self, lambda: &[i64], mu: &[i64]) -> Q {
        let diff = Vector(lambda.iter().zip(mu).map(|(a, b)| q(a - b)).collect());
        self.label_to_root.apply(&diff).0.iter().sum()
    }
}

pub(crate) fn dominate_labels(cartan: &[Vec<i64>], labels: &[i64]) -> (Vec<i64>, usize) {
    let mut cur = labels.to_vec();
    let mut steps = 0;
    while let Some(i) = cur.iter().position(|&x| x < 0) {
        let c = cur[i];
        for (j, x) in cur.iter_mut().enumerate() {
            *x -= c * cartan[i][j];
        }
        steps += 1;
    }
    (cur, steps)
}

impl Character {
    /// Computes the dominant weights of `V_λ` and their multiplicities.
    pub fn new(sys: &RootSystem, lambda: &Vector) -> Result<Self> {
        let labels = sys
            .int_labels(lambda)
            .ok_or_else(|| Error::InvalidWeight(format!("{lambda} is not integral for {}", sys.name())))?;
        Self::from_labels(sys, &labels)
    }

    pub fn from_labels(sys: &RootSystem, labels: &[i64]) -> Result<Self> {
        if labels.len() != sys.rank() {
            return Err(Error::InvalidWeight(format!(
                "{} expects {} Dynkin labels, got {}",
                sys.name(),
                sys.rank(),
                labels.len()
            )));
        }
        if labels.iter().any(|&x| x < 0) {
            return Err(Error::InvalidWeight(format!("labels {labels:?} are not dominant")));
        }
        let geo = Geometry::new(sys);

        // Every dominant weight below λ is reached from λ through dominant
        // weights by subtracting positive roots.
        let mut seen: HashSet<Vec<i64>> = HashSet::from([labels.to_vec()]);
        let mut queue = VecDeque::from([labels.to_vec()]);
        while let Some(mu) = queue.pop_front() {
            for a in &geo.pos_labels {
                let nu: Vec<i64> = mu.iter().zip(a).map(|(x, y)| x - y).collect();
                if nu.iter().all(|&x| x >= 0) && seen.insert(nu.clone()) {
                    queue.push_back(nu);
                }
            }
        }
        let mut order: Vec<(Q, Vec<i64>)> = seen.into_iter().map(|m| (geo.depth(labels, &m), m)).collect();
        order.sort();

        let rho = vec![1i64; sys.rank()];
        let shift = |v: &[i64]| -> Vec<i64> { v.iter().zip(&rho).map(|(a, b)| a + b).collect() };
        let lr = shift(labels);
        let lr2 = geo.ip(&lr, &lr);

        let mut ch = Character {
            highest: labels.to_vec(),
            cartan: sys.cartan.clone(),
            dominant: HashMap::new(),
        };
        for (k, (_, mu)) in order.iter().enumerate() {
            if k == 0 {
                ch.dominant.insert(mu.clone(), 1);
                continue;
            }
            let mr = shift(mu);
            let denom = lr2 - geo.ip(&mr, &mr);
            let mut total: i128 = 0;
            for a in &geo.pos_labels {
                let mut nu = mu.clone();
                loop {
                    for (x, y) in nu.iter_mut().zip(a) {
                        *x += y;
                    }
                    let m = ch.mult(&nu);
                    if m == 0 {
                        break;
                    }
                    total += geo.ip(&nu, a) * m as i128;
                }
            }
            let num = 2 * total;
            if denom <= 0 || num % denom != 0 {
                return Err(Error::Internal(format!(
                    "Freudenthal recursion produced a non-integer multiplicity at {mu:?}"
                )));
            }
            let m = num / denom;
            if m > 0 {
                ch.dominant.insert(mu.clone(), m as u64);
            }
        }
        Ok(ch)
    }

    pub fn highest_labels(&self) -> &[i64] {
        &self.highest
    }

    /// Multiplicity of the weight with the given Dynkin labels.
    pub fn mult(&self, labels: &[i64]) -> u64 {
        let (dom, _) = dominate_labels(&self.cartan, labels);
        self.dominant.get(&dom).copied().unwrap_or(0)
    }

    /// Multiplicity of an ambient weight; zero off the weight lattice of the root span.
    pub fn mult_vector(&self, sys: &RootSystem, mu: &Vector) -> u64 {
        if sys.project_to_span(mu) != *mu {
            return 0;
        }
        sys.int_labels(mu).map_or(0, |l| self.mult(&l))
    }

    /// Dominant weights (labels) with multiplicities, in a deterministic order.
    pub fn dominant_weights(&self) -> Vec<(Vec<i64>, u64)> {
        let mut v: Vec<_> = self.dominant.iter().map(|(k, m)| (k.clone(), *m)).collect();
        v.sort();
        v
    }

    /// All weights of `V_λ` (labels) with multiplicities, obtained by orbit expansion.
    pub fn all_weights(&self) -> Vec<(Vec<i64>, u64)> {
        let mut out = Vec::new();
        for (dom, m) in self.dominant_weights() {
            for w in orbit_labels(&self.cartan, &dom) {
                out.push((w, m));
            }
        }
        out.sort();
        out
    }

    /// `Σ_μ m(μ)`.
    pub fn dimension(&self) -> u128 {
        self.dominant_weights()
            .iter()
            .map(|(d, m)| orbit_labels(&self.cartan, d).len() as u128 * *m as u128)
            .sum()
    }
}

/// Weyl orbit of a dominant weight, in labels.
pub(crate) fn orbit_labels(cartan: &[Vec<i64>], dom: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::from([dom.to_vec()]);
    let mut queue = VecDeque::from([dom.to_vec()]);
    while let Some(mu) = queue.pop_front() {
        for i in 0..mu.len() {
            // Going down only: reflect when the label is positive.
            if mu[i] > 0 {
                let c = mu[i];
                let nu: Vec<i64> = mu.iter().enumerate().map(|(j, x)| x - c * cartan[i][j]).collect();
                if seen.insert(nu.clone()) {
                    queue.push_back(nu);
                }
            }
        }
    }
    let mut v: Vec<_> = seen.into_iter().collect();
    v.sort();
    v
}

impl RootSystem {
    /// Multiplicity of `mu` in `V_lambda`.
    pub fn weight_multiplicity(&self, lambda: &Vector, mu: &Vector) -> Result<u64> {
        let labels = self.check_dominant_weight(lambda)?;
        let ch = Character::from_labels(self, &labels)?;
        if mu.dim() != self.ambient_dim {
            return Err(Error::InvalidWeight(format!("{mu} has the wrong number of coordinates")));
        }
        Ok(ch.mult_vector(self, mu))
    }

    pub fn character(&self, lambda: &Vector) -> Result<Character> {
        let labels = self.check_dominant_weight(lambda)?;
        Character::from_labels(self, &labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    #[test]
    fn adjoint_zero_weight() {
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        let adj = Vector::from_ints(&[1, 0, -1]);
        assert_eq!(a2.weight_multiplicity(&adj, &Vector::zeros(3)).unwrap(), 2);
        assert_eq!(a2.weight_multiplicity(&adj, &adj).unwrap(), 1);
    }

    #[test]
    fn b2_adjoint_short_weight() {
        let b2 = RootSystem::new(Family::B, 2).unwrap();
        let adj = Vector::from_ints(&[1, 1]);
        assert_eq!(b2.weight_multiplicity(&adj, &Vector::from_ints(&[1, 0])).unwrap(), 1);
        assert_eq!(b2.weight_multiplicity(&adj, &Vector::zeros(2)).unwrap(), 2);
        assert_eq!(b2.character(&adj).unwrap().dimension(), 10);
    }

    #[test]
    fn e8_adjoint() {
        let e8 = RootSystem::new(Family::E, 8).unwrap();
        let ch = Character::from_labels(&e8, &[0, 0, 0, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(ch.mult(&[0; 8]), 8);
        assert_eq!(ch.dominant_weights().len(), 2);
    }

    #[test]
    fn non_integral_rejected() {
        let a1 = RootSystem::new(Family::A, 1).unwrap();
        let bad = Vector(vec![crate::linalg::qf(1, 4), crate::linalg::qf(-1, 4)]);
        assert!(a1.weight_multiplicity(&bad, &Vector::zeros(2)).is_err());
    }

    #[test]
    fn weights_outside_root_lattice_coset_vanish() {
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        let ch = Character::from_labels(&a2, &[1, 1]).unwrap();
        assert_eq!(ch.mult(&[1, 0]), 0);
        assert_eq!(ch.mult(&[3, 0]), 0);
    }
}
