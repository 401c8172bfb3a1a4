//! Systems of difference constraints `x_v - x_u <= w` and `x_v - x_u < w`.
//!
//! Feasibility is Bellman-Ford over lexicographic weights `(w, -strict)`: a
//! strict edge behaves like `w - ε` for an infinitesimal `ε > 0`. Potentials
//! `(p, q)` then give the real solution `p + εq` for any small enough `ε`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Edge {
    from: usize,
    to: usize,
    weight: i128,
    strict: bool,
}

#[derive(Debug, Clone, Default)]
pub struct DifferenceSystem {
    nodes: usize,
    edges: Vec<Edge>,
}

impl DifferenceSystem {
    pub fn new(nodes: usize) -> Self {
        DifferenceSystem {
            nodes,
            edges: Vec::new(),
        }
    }

    /// `x_to - x_from <= weight`.
    pub fn at_most(&mut self, from: usize, to: usize, weight: i128) {
        self.edges.push(Edge {
            from,
            to,
            weight,
            strict: false,
        });
    }

    /// `x_to - x_from < weight`.
    pub fn less_than(&mut self, from: usize, to: usize, weight: i128) {
        self.edges.push(Edge {
            from,
            to,
            weight,
            strict: true,
        });
    }

    /// `x_to - x_from = weight`.
    pub fn equal(&mut self, from: usize, to: usize, weight: i128) {
        self.at_most(from, to, weight);
        self.at_most(to, from, -weight);
    }

    fn potentials(&self) -> Option<Vec<(i128, i128)>> {
        let mut dist = vec![(0i128, 0i128); self.nodes];
        for round in 0..=self.nodes {
            let mut changed = false;
            for e in &self.edges {
                let (p, q) = dist[e.from];
                let cand = (p + e.weight, q - i128::from(e.strict));
                if cand < dist[e.to] {
                    dist[e.to] = cand;
                    changed = true;
                }
            }
            if !changed {
                return Some(dist);
            }
            if round == self.nodes {
                return None;
            }
        }
        None
    }

    pub fn is_feasible(&self) -> bool {
        self.potentials().is_some()
    }

    /// An exact solution, or `None` if the system is infeasible.
    pub fn solve(&self) -> Option<Vec<BigRational>> {
        let dist = self.potentials()?;
        // Largest ε that keeps every edge satisfied, halved so strict
        // edges with slack stay strict.
        let mut eps = BigRational::new(BigInt::one(), BigInt::from(2));
        for e in &self.edges {
            let (pu, qu) = dist[e.from];
            let (pv, qv) = dist[e.to];
            let slack = pu + e.weight - pv;
            let drift = qv - qu + i128::from(e.strict);
            if slack > 0 && drift > 0 {
                let bound = BigRational::new(BigInt::from(slack), BigInt::from(2 * drift));
                if bound < eps {
                    eps = bound;
                }
            }
        }
        Some(
            dist.iter()
                .map(|&(p, q)| BigRational::from_integer(BigInt::from(p)) + &eps * BigInt::from(q))
                .collect(),
        )
    }

    /// Whether `x` satisfies every constraint.
    pub fn check(&self, x: &[BigRational]) -> bool {
        self.edges.iter().all(|e| {
            let lhs = &x[e.to] - &x[e.from];
            let w = BigRational::from_integer(BigInt::from(e.weight));
            if e.strict {
                lhs < w
            } else {
                lhs <= w
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn zeros(len: usize) -> Vec<BigRational> {
        vec![BigRational::zero(); len]
    }

    #[test]
    fn feasible_with_strict_edges() {
        let mut s = DifferenceSystem::new(3);
        s.less_than(0, 1, 1);
        s.less_than(1, 2, 1);
        s.at_most(2, 0, -1);
        // x1 - x0 < 1, x2 - x1 < 1, x0 - x2 <= -1: needs x2 - x0 in [1, 2).
        let x = s.solve().unwrap();
        assert!(s.check(&x));
    }

    #[test]
    fn infeasible_cycles() {
        let mut s = DifferenceSystem::new(2);
        s.less_than(0, 1, 0);
        s.at_most(1, 0, 0);
        assert!(!s.is_feasible());
        let mut s = DifferenceSystem::new(2);
        s.at_most(0, 1, -1);
        s.at_most(1, 0, 0);
        assert!(s.solve().is_none());
        let mut s = DifferenceSystem::new(2);
        s.equal(0, 1, 3);
        let x = s.solve().unwrap();
        assert_eq!(&x[1] - &x[0], BigRational::from_integer(3.into()));
        assert!(!s.check(&zeros(2)));
    }
}
