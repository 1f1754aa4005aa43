//! Strongly orthogonal restricted roots whose reflections compose to w₀.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::linalg::{q, Matrix, Vector};
use crate::realforms::{RestrictedDatum, RestrictedType};
use crate::rootsys::{longest_element_matrix, Family, RootSystem};

/// A set Ξ, stored in the Bourbaki coordinates of the restricted type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoSet {
    pub system_type: RestrictedType,
    pub roots: Vec<Vector>,
}

/// A possibly non-reduced root system given by its roots and a simple system.
#[derive(Clone, Debug)]
pub struct RestrictedSystem {
    pub roots: HashSet<Vector>,
    pub simple: Vec<Vector>,
    pub ambient_dim: usize,
}

impl RestrictedSystem {
    /// The restricted system of a type in its Bourbaki chart (`BC_n` uses the
    /// `B_n` coordinates with the extra roots `±2ε_i`).
    pub fn of_type(t: RestrictedType) -> Result<Self> {
        let sys = RootSystem::of_type(t.chart_type())?;
        let mut roots: HashSet<Vector> = sys.roots().into_iter().collect();
        if t.non_reduced {
            for i in 0..sys.ambient_dim {
                let e = Vector::unit(sys.ambient_dim, i).scale(q(2));
                roots.insert(-&e);
                roots.insert(e);
            }
        }
        Ok(RestrictedSystem {
            roots,
            simple: sys.simple_roots.clone(),
            ambient_dim: sys.ambient_dim,
        })
    }

    pub fn of_datum(d: &RestrictedDatum) -> Self {
        RestrictedSystem {
            roots: d.restricted_roots.iter().map(|(v, _)| v.clone()).collect(),
            simple: d.simple.clone(),
            ambient_dim: d.complex_system.ambient_dim,
        }
    }

    pub fn w0(&self) -> Matrix {
        longest_element_matrix(&self.simple, self.ambient_dim)
    }

    pub fn strongly_orthogonal(&self, a: &Vector, b: &Vector) -> bool {
        !self.roots.contains(&(a + b)) && !self.roots.contains(&(a - b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoVerdict {
    /// Index pairs that are not strongly orthogonal.
    pub bad_pairs: Vec<(usize, usize)>,
    pub product_is_w0: bool,
}

impl OrthoVerdict {
    pub fn passed(&self) -> bool {
        self.bad_pairs.is_empty() && self.product_is_w0
    }

    pub fn describe(&self, roots: &[Vector]) -> String {
        if self.passed() {
            return "pass".to_string();
        }
        let mut parts: Vec<String> = self
            .bad_pairs
            .iter()
            .map(|&(i, j)| format!("{} and {} are not strongly orthogonal", roots[i], roots[j]))
            .collect();
        if !self.product_is_w0 {
            parts.push("product of reflections differs from w0".to_string());
        }
        format!("fail: {}", parts.join("; "))
    }
}

fn eps(n: usize, terms: &[(usize, i64)]) -> Vector {
    let mut v = Vector::zeros(n);
    for &(i, c) in terms {
        v[i - 1] += q(c);
    }
    v
}

fn from_simple(sys: &RootSystem, coords: &[&[i64]]) -> Vec<Vector> {
    coords
        .iter()
        .map(|c| sys.from_simple_coords(&c.iter().map(|&x| q(x)).collect::<Vec<_>>()))
        .collect()
}

pub fn ortho_set(t: RestrictedType) -> Result<OrthoSet> {
    let chart = t.chart_type();
    let sys = RootSystem::of_type(chart)?;
    let r = chart.rank;
    let n = sys.ambient_dim;
    let pm_pairs = |count: usize| -> Vec<Vector> {
        (1..=count)
            .flat_map(|i| [eps(n, &[(2 * i - 1, 1), (2 * i, -1)]), eps(n, &[(2 * i - 1, 1), (2 * i, 1)])])
            .collect()
    };
    let roots = if t.non_reduced {
        (1..=r).map(|i| eps(n, &[(i, 2)])).collect()
    } else {
        match chart.family {
            Family::A => (1..=r.div_ceil(2)).map(|i| eps(n, &[(i, 1), (r + 2 - i, -1)])).collect(),
            Family::B => {
                let mut v = pm_pairs(r / 2);
                if r % 2 == 1 {
                    v.push(eps(n, &[(r, 1)]));
                }
                v
            }
            Family::C => (1..=r).map(|i| eps(n, &[(i, 2)])).collect(),
            Family::D if r.is_multiple_of(2) => pm_pairs(r / 2),
            Family::D => pm_pairs((r - 1) / 2),
            Family::G => from_simple(&sys, &[&[1, 0], &[3, 2]]),
            Family::F => from_simple(&sys, &[&[0, 1, 0, 0], &[0, 1, 2, 0], &[0, 1, 2, 2], &[2, 3, 4, 2]]),
            Family::E if r == 6 => from_simple(
                &sys,
                &[&[0, 0, 0, 1, 0, 0], &[0, 0, 1, 1, 1, 0], &[1, 0, 1, 1, 1, 1], &[1, 2, 2, 3, 2, 1]],
            ),
            Family::E if r == 7 => from_simple(
                &sys,
                &[
                    &[0, 1, 0, 0, 0, 0, 0],
                    &[0, 0, 1, 0, 0, 0, 0],
                    &[0, 1, 1, 2, 1, 0, 0],
                    &[0, 0, 0, 0, 1, 0, 0],
                    &[0, 1, 1, 2, 2, 2, 1],
                    &[0, 0, 0, 0, 0, 0, 1],
                    &[2, 2, 3, 4, 3, 2, 1],
                ],
            ),
            Family::E => from_simple(
                &sys,
                &[
                    &[0, 1, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 1, 0, 0, 0, 0, 0],
                    &[0, 1, 1, 2, 1, 0, 0, 0],
                    &[0, 0, 0, 0, 1, 0, 0, 0],
                    &[0, 1, 1, 2, 2, 2, 1, 0],
                    &[0, 0, 0, 0, 0, 0, 1, 0],
                    &[2, 3, 4, 6, 5, 4, 3, 2],
                    &[2, 2, 3, 4, 3, 2, 1, 0],
                ],
            ),
            Family::D2Special => return Err(Error::Unsupported("D2special is not a restricted type".into())),
        }
    };
    Ok(OrthoSet { system_type: t, roots })
}

/// Checks strong orthogonality and `∏ s_α = w₀` exactly.
pub fn verify_ortho_set(xi: &[Vector], system: &RestrictedSystem) -> Result<OrthoVerdict> {
    for a in xi {
        if !system.roots.contains(a) {
            return Err(Error::NotARoot {
                system: "restricted system".into(),
                root: a.to_string(),
            });
        }
    }
    let mut bad_pairs = Vec::new();
    for i in 0..xi.len() {
        for j in i + 1..xi.len() {
            if !system.strongly_orthogonal(&xi[i], &xi[j]) {
                bad_pairs.push((i, j));
            }
        }
    }
    let product = xi
        .iter()
        .fold(Matrix::identity(system.ambient_dim), |acc, a| &acc * &Matrix::reflection(a));
    Ok(OrthoVerdict {
        bad_pairs,
        product_is_w0: product == system.w0(),
    })
}

/// Ξ for a real form, as vectors in 𝔞* ⊂ 𝔥*.
pub fn ortho_set_for(d: &RestrictedDatum) -> Result<Vec<Vector>> {
    let Some(t) = d.restricted_type else {
        return Ok(Vec::new());
    };
    ortho_set(t)?.roots.iter().map(|x| d.pullback(x)).collect()
}

/// Every restricted type of rank at most `max_rank`: the reduced classical
/// and exceptional types and `BC_n`.
pub fn restricted_types(max_rank: usize) -> Vec<RestrictedType> {
    use crate::rootsys::CartanType;
    let mut out = Vec::new();
    for f in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
        for r in 1..=max_rank {
            if f.accepts(r) && !(f == Family::C && r < 2) && !(f == Family::B && r < 2) && !(f == Family::D && r < 4) {
                out.push(RestrictedType::reduced(CartanType::new(f, r)));
            }
        }
    }
    out.extend((1..=max_rank).map(RestrictedType::bc));
    out
}

/// Runs [`ortho_set`] and [`verify_ortho_set`] on one type.
pub fn check_type(t: RestrictedType) -> Result<(OrthoSet, OrthoVerdict)> {
    let set = ortho_set(t)?;
    let v = verify_ortho_set(&set.roots, &RestrictedSystem::of_type(t)?)?;
    Ok((set, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn red(f: Family, r: usize) -> RestrictedType {
        RestrictedType::reduced(CartanType::new(f, r))
    }

    #[test]
    fn every_type_verifies() {
        let types = restricted_types(8);
        assert!(types.len() > 30);
        for t in types {
            let (set, v) = check_type(t).unwrap();
            assert!(v.passed(), "{t}: {}", v.describe(&set.roots));
        }
    }

    #[test]
    fn documented_sets() {
        assert_eq!(
            ortho_set(red(Family::C, 2)).unwrap().roots,
            vec![Vector::from_ints(&[2, 0]), Vector::from_ints(&[0, 2])]
        );
        assert_eq!(ortho_set(RestrictedType::bc(1)).unwrap().roots, vec![Vector::from_ints(&[2])]);
        assert_eq!(
            ortho_set(red(Family::A, 3)).unwrap().roots,
            vec![Vector::from_ints(&[1, 0, 0, -1]), Vector::from_ints(&[0, 1, -1, 0])]
        );
        let g = ortho_set(red(Family::G, 2)).unwrap();
        let sys = RootSystem::new(Family::G, 2).unwrap();
        assert_eq!(sys.simple_coords(&g.roots[1]).unwrap(), vec![q(3), q(2)]);
    }

    #[test]
    fn verify_examples() {
        let c2 = RestrictedSystem::of_type(red(Family::C, 2)).unwrap();
        let v = verify_ortho_set(&[Vector::from_ints(&[2, 0]), Vector::from_ints(&[0, 2])], &c2).unwrap();
        assert!(v.passed());

        let a2 = RestrictedSystem::of_type(red(Family::A, 2)).unwrap();
        let v = verify_ortho_set(&[Vector::from_ints(&[1, -1, 0])], &a2).unwrap();
        assert!(!v.passed());
        assert!(!v.product_is_w0);

        let b2 = RestrictedSystem::of_type(red(Family::B, 2)).unwrap();
        let v = verify_ortho_set(&[Vector::from_ints(&[1, -1]), Vector::from_ints(&[1, 1])], &b2).unwrap();
        assert!(v.passed());

        // Orthogonal but not strongly orthogonal in C₂.
        let v = verify_ortho_set(&[Vector::from_ints(&[1, -1]), Vector::from_ints(&[1, 1])], &c2).unwrap();
        assert_eq!(v.bad_pairs, vec![(0, 1)]);

        assert!(verify_ortho_set(&[Vector::from_ints(&[1, 2])], &b2).is_err());
    }

    #[test]
    fn pulled_back_sets_verify_for_real_forms() {
        for name in ["su(2,5)", "EIII", "EIV", "so*(10)", "so(3,8)", "FII", "sl(5,R)"] {
            let f = crate::realforms::lookup(name).unwrap();
            let d = f.datum().unwrap();
            let xi = ortho_set_for(d).unwrap();
            let v = verify_ortho_set(&xi, &RestrictedSystem::of_datum(d)).unwrap();
            assert!(v.passed(), "{name}: {}", v.describe(&xi));
        }
    }
}
