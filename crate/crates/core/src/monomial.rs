//! Monomials, minimal generating sets, and the skeleton ideals `M_G^(k)`.

use crate::error::{input, Error, Result};
use crate::graph::{Graph, VertexSet};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Exponent vector of a monomial in `x_1, ..., x_n`; coordinate `i - 1` holds
/// the exponent of `x_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// `x_i^e` with `i` 1-based.
    pub fn pure_power(n: usize, i: usize, e: u32) -> Self {
        let mut m = Monomial::one(n);
        m.0[i - 1] = e;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    fn check_same_ring(&self, other: &Monomial) -> Result<()> {
        if self.n() != other.n() {
            return input(format!("monomials live in {} and {} variables", self.n(), other.n()));
        }
        Ok(())
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_same_ring(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_ring(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_ring(other)?;
        Ok(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    /// Indices (1-based) with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i + 1)
    }

    /// Decimal CSV `a1,a2,...,an`.
    pub fn to_csv(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        parts.join(",")
    }

    pub fn from_csv(s: &str) -> Result<Monomial> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Monomial(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Input(format!("{t:?} is not a nonnegative exponent")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }
}

/// Pretty form `x1^3*x2^3`; the unit monomial prints as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Drops every generator divisible by another one and sorts the survivors
/// lexicographically.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<&Monomial> = gens.iter().collect();
    sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    sorted.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for g in sorted {
        if !kept.iter().any(|k| k.divides_unchecked(g)) {
            kept.push(g.clone());
        }
    }
    kept.sort();
    kept
}

/// Monomial ideal stored by its minimal generators in lex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    n: usize,
    generators: Vec<Vec<u32>>,
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.n() != n) {
            return input(format!("generator {bad} does not have {n} exponents"));
        }
        Ok(MonomialIdeal {
            n,
            gens: minimalize(&gens),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    /// Smallest `p` with `x_i^p` in the ideal, if any.
    pub fn pure_power(&self, i: usize) -> Option<u32> {
        self.gens
            .iter()
            .filter(|g| g.support().all(|j| j == i))
            .map(|g| g.exp(i))
            .min()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(IdealJson {
            n: self.n,
            generators: self.gens.iter().map(|g| g.exponents().to_vec()).collect(),
        })
        .expect("ideal serialises")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: IdealJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Input(format!("bad ideal JSON: {e}")))?;
        MonomialIdeal::new(raw.n, raw.generators.into_iter().map(Monomial::new).collect())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

/// `m_σ = ∏_{i∈σ} x_i^{d_σ(i)}`, where `d_σ(i)` counts the neighbours of `i`
/// outside `σ`, the sink included.
pub fn m_sigma(g: &Graph, sigma: VertexSet) -> Result<Monomial> {
    g.check_sigma(sigma)?;
    Ok(m_sigma_unchecked(g, sigma))
}

pub(crate) fn m_sigma_unchecked(g: &Graph, sigma: VertexSet) -> Monomial {
    let mut exps = vec![0u32; g.n()];
    for i in sigma.iter() {
        exps[i - 1] = g.out_degree(sigma, i);
    }
    Monomial(exps)
}

/// Nonempty subsets of `{1..n}` with at most `max_size` elements.
pub(crate) fn small_subsets(n: usize, max_size: usize) -> Vec<VertexSet> {
    fn rec(start: usize, n: usize, left: usize, cur: VertexSet, out: &mut Vec<VertexSet>) {
        for v in start..=n {
            let mut next = cur;
            next.insert(v);
            out.push(next);
            if left > 1 {
                rec(v + 1, n, left - 1, next, out);
            }
        }
    }
    let mut out = Vec::new();
    if max_size > 0 {
        rec(1, n, max_size, VertexSet::EMPTY, &mut out);
    }
    out
}

/// `M_G^(k) = <m_σ : ∅ ≠ σ ⊆ [n], |σ| <= k+1>`, minimalised.
pub fn skeleton_ideal(g: &Graph, k: usize) -> Result<MonomialIdeal> {
    let n = g.n();
    if n == 0 {
        return input("the graph has no non-sink vertices");
    }
    if k >= n {
        return input(format!("k = {k} must lie in 0..={}", n - 1));
    }
    let gens: Vec<Monomial> = small_subsets(n, k + 1)
        .into_iter()
        .map(|s| m_sigma_unchecked(g, s))
        .collect();
    MonomialIdeal::new(n, gens)
}

/// The full G-parking function ideal `M_G = M_G^(n-1)`.
pub fn parking_ideal(g: &Graph) -> Result<MonomialIdeal> {
    skeleton_ideal(g, g.n().saturating_sub(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::connected_graphs;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_slice(v).unwrap()
    }

    #[test]
    fn m_sigma_examples() {
        let k5 = Graph::complete(5).unwrap();
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(m_sigma(&k5, set(&[1])).unwrap(), m(&[4, 0, 0, 0]));
        assert_eq!(m_sigma(&k5, set(&[1, 2])).unwrap(), m(&[3, 3, 0, 0]));
        assert_eq!(m_sigma(&k4, set(&[1, 2, 3])).unwrap(), m(&[1, 1, 1]));
        assert!(m_sigma(&k4, VertexSet::EMPTY).is_err());
        assert!(m_sigma(&k4, set(&[0, 1])).is_err());
    }

    #[test]
    fn skeleton_examples() {
        let k5 = Graph::complete(5).unwrap();
        let ideal = skeleton_ideal(&k5, 1).unwrap();
        let mut expected = vec![];
        for i in 0..4 {
            let mut e = vec![0; 4];
            e[i] = 4;
            expected.push(m(&e));
            for j in i + 1..4 {
                let mut e = vec![0; 4];
                e[i] = 3;
                e[j] = 3;
                expected.push(m(&e));
            }
        }
        expected.sort();
        assert_eq!(ideal.generators(), expected.as_slice());

        let k4 = Graph::complete(4).unwrap();
        let ideal = skeleton_ideal(&k4, 1).unwrap();
        assert_eq!(ideal.to_string(), "<x3^3, x2^2*x3^2, x2^3, x1^2*x3^2, x1^2*x2^2, x1^3>");
        assert_eq!(skeleton_ideal(&k4, 0).unwrap().to_string(), "<x3^3, x2^3, x1^3>");
        assert!(skeleton_ideal(&k4, 3).is_err());
    }

    #[test]
    fn minimalize_examples() {
        let h = Graph::complete(5).unwrap().without_edge(3, 4).unwrap();
        assert_eq!(skeleton_ideal(&h, 1).unwrap().generators().len(), 9);
        assert_eq!(minimalize(&[m(&[2, 0]), m(&[2, 1])]), vec![m(&[2, 0])]);
        assert_eq!(minimalize(&[m(&[1, 1]), m(&[1, 1])]), vec![m(&[1, 1])]);
    }

    #[test]
    fn divisibility_and_lcm() {
        assert!(m(&[3, 3, 0]).divides(&m(&[3, 3, 3])).unwrap());
        assert!(!m(&[3, 3, 1]).divides(&m(&[3, 3, 0])).unwrap());
        assert_eq!(m(&[3, 3, 0]).lcm(&m(&[3, 0, 3])).unwrap(), m(&[3, 3, 3]));
        assert_eq!(m(&[2, 5]).lcm(&Monomial::one(2)).unwrap(), m(&[2, 5]));
        assert!(m(&[1]).divides(&m(&[1, 2])).is_err());
        assert!(m(&[1]).lcm(&m(&[1, 2])).is_err());
    }

    #[test]
    fn serialisation() {
        let ideal = skeleton_ideal(&Graph::complete(4).unwrap(), 1).unwrap();
        let json = ideal.to_json();
        assert_eq!(json["n"], 3);
        assert_eq!(json["generators"][0], serde_json::json!([0, 0, 3]));
        assert_eq!(MonomialIdeal::from_json(&json).unwrap(), ideal);
        assert_eq!(m(&[3, 0, 2]).to_csv(), "3,0,2");
        assert_eq!(Monomial::from_csv("3, 0,2").unwrap(), m(&[3, 0, 2]));
        assert_eq!(m(&[0, 0]).to_string(), "1");
        assert_eq!(m(&[1, 2]).to_string(), "x1*x2^2");
    }

    /// A non-sink leaf whose neighbour is also a non-sink vertex makes the pair
    /// generator a pure power that swallows other generators.
    fn has_pendant_off_sink(g: &Graph) -> bool {
        (1..=g.n()).any(|i| {
            let nb = g.neighbors(i);
            nb.len() == 1 && !nb.contains(0)
        })
    }

    #[test]
    fn generator_count_formula() {
        for nv in 2..=6 {
            for g in connected_graphs(nv) {
                // With one non-sink vertex the 1-skeleton is the whole ideal.
                let count = skeleton_ideal(&g, 1.min(g.n() - 1)).unwrap().generators().len();
                let formula = g.n() + g.edge_count() - g.degree(0).unwrap();
                if has_pendant_off_sink(&g) {
                    assert!(count < formula, "{}", g.edge_key());
                } else {
                    assert_eq!(count, formula, "{}", g.edge_key());
                }
            }
        }
    }

    #[test]
    fn pendant_vertex_counterexample() {
        // 0 - 2 - 1: m_{1} = x1, m_{2} = x2^2, m_{12} = x2.
        let g = Graph::new(3, &[(0, 2), (2, 1)]).unwrap();
        let ideal = skeleton_ideal(&g, 1).unwrap();
        assert_eq!(ideal.to_string(), "<x2, x1>");
        assert_eq!(g.n() + g.edge_count() - g.degree(0).unwrap(), 3);
    }

    #[test]
    fn skeleta_are_nested_and_pairs_factor() {
        for nv in 2..=5 {
            for g in connected_graphs(nv) {
                let n = g.n();
                for k in 0..n.saturating_sub(1) {
                    let small = skeleton_ideal(&g, k).unwrap();
                    let big = skeleton_ideal(&g, k + 1).unwrap();
                    assert!(small.generators().iter().all(|m| big.contains(m)));
                }
                for i in 1..=n {
                    for j in i + 1..=n {
                        let pair = m_sigma(&g, set(&[i, j])).unwrap();
                        let prod = m_sigma(&g, set(&[i]))
                            .unwrap()
                            .mul(&m_sigma(&g, set(&[j])).unwrap())
                            .unwrap();
                        let mut expected = prod.exponents().to_vec();
                        if g.has_edge(i, j) {
                            expected[i - 1] -= 1;
                            expected[j - 1] -= 1;
                        }
                        assert_eq!(pair.exponents(), expected.as_slice());
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn minimalize_keeps_the_ideal(
            raw in proptest::collection::vec(proptest::collection::vec(0u32..4, 3), 1..12),
            probe in proptest::collection::vec(0u32..6, 3),
        ) {
            let gens: Vec<Monomial> = raw.into_iter().map(Monomial::new).collect();
            let min = minimalize(&gens);
            for a in &min {
                for b in &min {
                    prop_assert!(a == b || !a.divides_unchecked(b));
                }
            }
            let probe = Monomial::new(probe);
            let in_full = gens.iter().any(|g| g.divides_unchecked(&probe));
            let in_min = min.iter().any(|g| g.divides_unchecked(&probe));
            prop_assert_eq!(in_full, in_min);
        }
    }
}
