//! Minimal graded Betti numbers of monomial ideals.
//!
//! `β_{i,b}` is read off the upper Koszul simplicial complex
//! `K^b = {τ ⊆ supp(b) squarefree : x^{b-τ} ∈ I}` as `dim H̃_{i-2}(K^b)`, so
//! that `β_1` counts minimal generators. Only degrees in the lcm lattice of
//! the generators can carry nonzero Betti numbers.

use crate::error::{domain, input, Result};
use crate::graph::{require_connected, Graph};
use crate::guard;
use crate::homology::SimplicialComplex;
pub use crate::linalg::Field;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::par::{self, Exec};
use num_bigint::BigInt;
use num_integer::binomial;
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashSet};
use std::fmt;

/// Prime used for the field-independence comparison.
pub const CHECK_PRIME: u64 = 32_003;

/// Multigraded Betti numbers, indexed so that `β_1` counts minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    n: usize,
    fine: BTreeMap<(usize, Monomial), u64>,
}

impl BettiTable {
    pub fn new(n: usize) -> Self {
        BettiTable {
            n,
            fine: BTreeMap::new(),
        }
    }

    /// Adds `mult` to `β_{i,degree}`; zero multiplicities are not stored.
    pub fn add(&mut self, i: usize, degree: Monomial, mult: u64) -> Result<()> {
        if i == 0 {
            return input("homological index starts at 1");
        }
        if degree.n() != self.n {
            return input(format!("degree has {} variables, expected {}", degree.n(), self.n));
        }
        if mult > 0 {
            *self.fine.entry((i, degree)).or_insert(0) += mult;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn fine(&self) -> &BTreeMap<(usize, Monomial), u64> {
        &self.fine
    }

    pub fn get(&self, i: usize, degree: &Monomial) -> u64 {
        self.fine.get(&(i, degree.clone())).copied().unwrap_or(0)
    }

    /// `(i, total degree) -> multiplicity`.
    pub fn coarse(&self) -> BTreeMap<(usize, u32), u64> {
        let mut out = BTreeMap::new();
        for ((i, b), m) in &self.fine {
            *out.entry((*i, b.degree())).or_insert(0) += m;
        }
        out
    }

    pub fn total(&self, i: usize) -> u64 {
        self.fine.iter().filter(|((j, _), _)| *j == i).map(|(_, m)| m).sum()
    }

    /// Largest homological index with a nonzero entry, 0 if empty.
    pub fn length(&self) -> usize {
        self.fine.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// `(β_1, ..., β_length)`.
    pub fn totals(&self) -> Vec<u64> {
        (1..=self.length()).map(|i| self.total(i)).collect()
    }

    /// Degrees carrying `β_{i,·}`, each repeated by its multiplicity.
    pub fn degrees(&self, i: usize) -> Vec<Monomial> {
        self.fine
            .iter()
            .filter(|((j, _), _)| *j == i)
            .flat_map(|((_, b), m)| std::iter::repeat_n(b.clone(), *m as usize))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let fine: Vec<Value> = self
            .fine
            .iter()
            .map(|((i, b), m)| json!({"i": i, "degree": b.exponents(), "mult": m}))
            .collect();
        let coarse: Vec<Value> = self
            .coarse()
            .iter()
            .map(|((i, d), m)| json!({"i": i, "totaldeg": d, "mult": m}))
            .collect();
        json!({"fine": fine, "coarse": coarse})
    }
}

/// Coarse table: one line per homological index, `i: deg^mult ...`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coarse = self.coarse();
        for i in 1..=self.length() {
            let parts: Vec<String> = coarse
                .iter()
                .filter(|((j, _), _)| *j == i)
                .map(|((_, d), m)| format!("S(-{d})^{m}"))
                .collect();
            writeln!(f, "beta_{i} = {} : {}", self.total(i), parts.join(" + "))?;
        }
        Ok(())
    }
}

/// Closure of the generators under pairwise lcm.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    let limit = guard::cell_limit(guard::LCM_LATTICE_LIMIT);
    let gens = ideal.generators();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    while let Some(l) = frontier.pop() {
        for g in gens {
            let m = l.lcm_unchecked(g);
            if !seen.contains(&m) {
                seen.insert(m.clone());
                frontier.push(m);
                guard::check("lcm lattice", seen.len() as u128, limit)?;
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// The upper Koszul complex at degree `b`, with vertex `j` standing for the
/// `j`-th variable in the support of `b`.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, b: &Monomial) -> SimplicialComplex {
    let support: Vec<usize> = b.support().collect();
    let mut faces = Vec::new();
    let mut e = b.exponents().to_vec();
    for mask in 0u64..1 << support.len() {
        for (j, &var) in support.iter().enumerate() {
            e[var - 1] = b.exp(var) - u32::from(mask >> j & 1 == 1);
        }
        if ideal.contains(&Monomial::new(e.clone())) {
            faces.push(mask);
        }
    }
    SimplicialComplex::from_closed(faces)
}

pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    betti_table_with(ideal, Field::Rational, Exec::default())
}

pub fn betti_table_over(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    betti_table_with(ideal, field, Exec::default())
}

pub fn betti_table_with(ideal: &MonomialIdeal, field: Field, exec: Exec) -> Result<BettiTable> {
    if ideal.generators().is_empty() {
        return Ok(BettiTable::new(ideal.n()));
    }
    let lattice = lcm_lattice(ideal)?;
    let per_degree = par::map(exec, &lattice, |b| {
        upper_koszul_complex(ideal, b).reduced_homology(field)
    });
    let mut table = BettiTable::new(ideal.n());
    for (b, hom) in lattice.into_iter().zip(per_degree) {
        for (idx, &dim) in hom.iter().enumerate() {
            // Entry idx is H̃_{idx-1}, which gives β_{idx+1}.
            table.add(idx + 1, b.clone(), dim as u64)?;
        }
    }
    Ok(table)
}

/// `Σ_{j=1}^{n} j·C(j-1, i-1)`, the total `β_i` of `M_n^(1)`.
pub fn total_betti_formula(n: u64, i: u64) -> Result<BigInt> {
    if i == 0 || i > n {
        return input(format!("need 1 <= i <= n, got n = {n}, i = {i}"));
    }
    Ok((1..=n)
        .map(|j| BigInt::from(j) * binomial(BigInt::from(j - 1), BigInt::from(i - 1)))
        .sum())
}

/// `n + |E| − deg(0)`, the closed-form count of minimal generators of
/// `M_G^(1)` for connected `G`.
pub fn first_betti_graph_formula(g: &Graph) -> Result<u64> {
    require_connected(g)?;
    if g.n() == 0 {
        return domain("graph has no non-sink vertices");
    }
    Ok((g.n() + g.edge_count() - g.degree(0)?) as u64)
}
