//! Power ideals `J_G^(k) = ⟨(Σ_{i∈σ} x_i)^{D_σ} : 1 <= |σ| <= k+1⟩` and
//! Hilbert functions of graded quotients by exact linear algebra.

use crate::betti::CHECK_PRIME;
use crate::error::{input, Result};
use crate::graph::{Graph, VertexSet};
use crate::guard;
use crate::linalg::{ModularEchelon, RationalEchelon, SparseRow};
use crate::monomial::{small_subsets, Monomial, MonomialIdeal};
use crate::par::{self, Exec};
use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// A form whose monomials all have the same total degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousPoly {
    n: usize,
    degree: u32,
    terms: BTreeMap<Monomial, BigInt>,
}

/// All exponent vectors of total degree `d` in `n` variables, lex descending.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

impl HomogeneousPoly {
    /// Builds a form, dropping zero coefficients. All monomials must share one degree.
    pub fn new(n: usize, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Result<Self> {
        let mut map: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        let mut degree = None;
        for (m, c) in terms {
            if m.n() != n {
                return input(format!("monomial {m} is not in {n} variables"));
            }
            if *degree.get_or_insert(m.degree()) != m.degree() {
                return input("form is not homogeneous");
            }
            *map.entry(m).or_insert_with(BigInt::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(HomogeneousPoly {
            n,
            degree: degree.unwrap_or(0),
            terms: map,
        })
    }

    pub fn from_monomial(m: &Monomial) -> Self {
        HomogeneousPoly {
            n: m.n(),
            degree: m.degree(),
            terms: BTreeMap::from([(m.clone(), BigInt::one())]),
        }
    }

    /// `(Σ_{i∈support} x_i)^e`, expanded with multinomial coefficients.
    pub fn linear_power(n: usize, support: VertexSet, e: u32) -> Result<Self> {
        let vars: Vec<usize> = support.iter().collect();
        if vars.is_empty() || vars.iter().any(|&v| v == 0 || v > n) {
            return input(format!("support {support} must be a nonempty subset of 1..={n}"));
        }
        let top = factorial(e);
        let terms = monomials_of_degree(vars.len(), e).into_iter().map(|alpha| {
            let mut exps = vec![0u32; n];
            let mut coeff = top.clone();
            for (&v, &a) in vars.iter().zip(&alpha) {
                exps[v - 1] = a;
                coeff /= factorial(a);
            }
            (Monomial::new(exps), coeff)
        });
        HomogeneousPoly::new(n, terms)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The monomial when the form has a single term.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.len() {
            1 => self.terms.keys().next(),
            _ => None,
        }
    }
}

impl fmt::Display for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            match (c.is_one(), m.degree() == 0) {
                (true, false) => write!(f, "{m}")?,
                (_, true) => write!(f, "{c}")?,
                (false, false) => write!(f, "{c}*{m}")?,
            }
        }
        Ok(())
    }
}

/// `p_σ = (Σ_{i∈σ} x_i)^{D_σ}` with `D_σ = Σ_{i∈σ} d_σ(i)`, for `|σ| <= k+1`.
pub fn power_ideal_gens(g: &Graph, k: usize) -> Result<Vec<HomogeneousPoly>> {
    let n = g.n();
    if n == 0 || k >= n {
        return input(format!("need 0 <= k <= n-1, got k = {k} with n = {n}"));
    }
    small_subsets(n, k + 1)
        .into_iter()
        .map(|sigma| {
            let exponent: u32 = sigma.iter().map(|i| g.out_degree(sigma, i)).sum();
            HomogeneousPoly::linear_power(n, sigma, exponent)
        })
        .collect()
}

/// Generators of a monomial ideal as one-term forms.
pub fn monomial_gens(ideal: &MonomialIdeal) -> Vec<HomogeneousPoly> {
    ideal.generators().iter().map(HomogeneousPoly::from_monomial).collect()
}

fn common_n(gens: &[HomogeneousPoly], n: usize) -> Result<()> {
    match gens.iter().find(|p| p.n() != n) {
        Some(p) => input(format!("generator in {} variables, expected {n}", p.n())),
        None => Ok(()),
    }
}

/// `dim_K (S/⟨gens⟩)_d` for `S = K[x_1..x_n]`.
///
/// Degree-`d` monomials divisible by a one-term generator are dropped as
/// columns; the remaining generators contribute every product `x^α·p` of
/// degree `d`, restricted to the surviving columns. The rank is exact over
/// the rationals. A full rank modulo a prime already certifies full rational
/// rank, so that case skips the big-integer elimination.
pub fn hilbert_dim(n: usize, gens: &[HomogeneousPoly], d: u32) -> Result<u64> {
    common_n(gens, n)?;
    let total = binomial(n as u128 + u128::from(d) - 1, u128::from(d));
    let size = if n == 0 { u128::from(d == 0) } else { total };
    guard::check("graded piece", size, guard::cell_limit(guard::GRADED_PIECE_LIMIT))?;
    if n == 0 {
        return Ok(u64::from(d == 0));
    }
    let monomial_gens: Vec<&Monomial> = gens.iter().filter_map(HomogeneousPoly::as_monomial).collect();
    let forms: Vec<&HomogeneousPoly> = gens.iter().filter(|p| p.terms.len() > 1 && p.degree <= d).collect();
    let columns: HashMap<Vec<u32>, usize> = monomials_of_degree(n, d)
        .into_iter()
        .filter(|e| {
            !monomial_gens
                .iter()
                .any(|m| m.exponents().iter().zip(e).all(|(a, b)| a <= b))
        })
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    let cols = columns.len();
    if cols == 0 || forms.is_empty() {
        return Ok(cols as u64);
    }
    let rows = || {
        forms.iter().flat_map(|p| {
            let columns = &columns;
            monomials_of_degree(n, d - p.degree)
                .into_iter()
                .filter_map(move |alpha| {
                    let mut row: SparseRow = p
                        .terms
                        .iter()
                        .filter_map(|(m, c)| {
                            let e: Vec<u32> = m.exponents().iter().zip(&alpha).map(|(a, b)| a + b).collect();
                            columns.get(&e).map(|&col| (col, c.clone()))
                        })
                        .collect();
                    row.sort_by_key(|e| e.0);
                    (!row.is_empty()).then_some(row)
                })
        })
    };
    let mut modular = ModularEchelon::new(CHECK_PRIME);
    for row in rows() {
        modular.insert(&row);
        if modular.rank() == cols {
            return Ok(0);
        }
    }
    let mut exact = RationalEchelon::new();
    for row in rows() {
        exact.insert(row);
        if exact.rank() == cols {
            break;
        }
    }
    Ok((cols - exact.rank()) as u64)
}

/// `1 + Σ_i (deg(i) - 1) + n`, past which both quotients vanish.
pub fn socle_bound(g: &Graph) -> u32 {
    let n = g.n() as u32;
    1 + (1..=g.n()).map(|i| g.deg(i).saturating_sub(1)).sum::<u32>() + n
}

pub fn graded_ideal_equal(n: usize, a: &[HomogeneousPoly], b: &[HomogeneousPoly], max_d: u32) -> Result<bool> {
    graded_ideal_equal_with(n, a, b, max_d, Exec::default())
}

/// Whether `dim A_d = dim B_d = dim (A+B)_d` for every `d <= max_d`.
pub fn graded_ideal_equal_with(
    n: usize,
    a: &[HomogeneousPoly],
    b: &[HomogeneousPoly],
    max_d: u32,
    exec: Exec,
) -> Result<bool> {
    let both: Vec<HomogeneousPoly> = a.iter().chain(b).cloned().collect();
    let per_degree = par::map_range(exec, 0..max_d as usize + 1, |d| -> Result<bool> {
        let d = d as u32;
        let x = hilbert_dim(n, a, d)?;
        Ok(x == hilbert_dim(n, b, d)? && x == hilbert_dim(n, &both, d)?)
    });
    for r in per_degree {
        if !r? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One line of the `M` versus `J` Hilbert function comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HilbertRow {
    pub d: u32,
    pub dim_m: u64,
    pub dim_j: u64,
}

impl HilbertRow {
    pub fn tsv_header() -> &'static str {
        "d\tdim_M\tdim_J\tequal"
    }

    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}",
            self.d,
            self.dim_m,
            self.dim_j,
            self.dim_m == self.dim_j
        )
    }
}

pub fn hilbert_comparison(g: &Graph, k: usize, max_d: u32) -> Result<Vec<HilbertRow>> {
    hilbert_comparison_with(g, k, max_d, Exec::default())
}

/// Hilbert functions of `S/M_G^(k)` and `S/J_G^(k)` in degrees `0..=max_d`.
pub fn hilbert_comparison_with(g: &Graph, k: usize, max_d: u32, exec: Exec) -> Result<Vec<HilbertRow>> {
    let n = g.n();
    let m = monomial_gens(&crate::monomial::skeleton_ideal(g, k)?);
    let j = power_ideal_gens(g, k)?;
    par::map_range(exec, 0..max_d as usize + 1, |d| {
        let d = d as u32;
        Ok(HilbertRow {
            d,
            dim_m: hilbert_dim(n, &m, d)?,
            dim_j: hilbert_dim(n, &j, d)?,
        })
    })
    .into_iter()
    .collect()
}
