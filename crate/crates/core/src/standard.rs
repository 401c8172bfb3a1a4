//! Standard monomials of artinian monomial ideals and the enumerative objects
//! that count them: G-parking functions, degree generating functions,
//! u-parking functions and inversion polynomials of rooted forests.

use crate::error::{domain, input, Result};
use crate::graph::Graph;
use crate::guard;
use crate::monomial::{parking_ideal, skeleton_ideal, Monomial, MonomialIdeal};
use crate::par::{self, Exec};
use crate::qpoly::QPolynomial;
use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

pub const STD_BOX_LIMIT: u128 = 100_000_000;

/// Box `∏ [0, p_i)` cut out by the pure powers of an artinian ideal.
fn box_bounds(ideal: &MonomialIdeal) -> Result<Vec<u32>> {
    (1..=ideal.n())
        .map(|i| match ideal.pure_power(i) {
            Some(p) => Ok(p),
            None => domain(format!("ideal contains no power of x{i}, so the quotient is infinite")),
        })
        .collect()
}

pub fn standard_monomials(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    standard_monomials_with(ideal, Exec::default())
}

/// All monomials outside the ideal, in lex order.
pub fn standard_monomials_with(ideal: &MonomialIdeal, exec: Exec) -> Result<Vec<Monomial>> {
    let mut out = Vec::new();
    for chunk in box_sweep(ideal, exec, |e| Monomial::new(e.to_vec()))? {
        out.extend(chunk);
    }
    Ok(out)
}

/// Visits the box in lex order, chunked for the executor, and maps every
/// standard exponent vector through `f`.
fn box_sweep<R, F>(ideal: &MonomialIdeal, exec: Exec, f: F) -> Result<Vec<Vec<R>>>
where
    R: Send,
    F: Fn(&[u32]) -> R + Sync + Send,
{
    let bounds = box_bounds(ideal)?;
    let total: u128 = bounds.iter().map(|&b| u128::from(b)).product();
    guard::check("standard-monomial box", total, guard::cell_limit(STD_BOX_LIMIT))?;
    let total = total as usize;
    let mut gens: Vec<&[u32]> = ideal.generators().iter().map(|g| g.exponents()).collect();
    gens.sort_by_key(|g| g.iter().sum::<u32>());
    let ranges = par::chunks(total, par::suggested_chunks(exec));
    Ok(par::map(exec, &ranges, |range| {
        let n = bounds.len();
        let mut e = decode(range.start, &bounds);
        let mut found = Vec::new();
        for _ in range.clone() {
            if !gens.iter().any(|g| g.iter().zip(&e).all(|(a, b)| a <= b)) {
                found.push(f(&e));
            }
            // Odometer step, last coordinate fastest.
            for pos in (0..n).rev() {
                e[pos] += 1;
                if e[pos] < bounds[pos] {
                    break;
                }
                e[pos] = 0;
            }
        }
        found
    }))
}

fn decode(mut index: usize, bounds: &[u32]) -> Vec<u32> {
    let mut e = vec![0u32; bounds.len()];
    for pos in (0..bounds.len()).rev() {
        let b = bounds[pos] as usize;
        e[pos] = (index % b) as u32;
        index /= b;
    }
    e
}

/// `dim_K S/I`.
pub fn standard_count(ideal: &MonomialIdeal) -> Result<u64> {
    standard_count_with(ideal, Exec::default())
}

pub fn standard_count_with(ideal: &MonomialIdeal, exec: Exec) -> Result<u64> {
    Ok(box_sweep(ideal, exec, |_| ())?.iter().map(|c| c.len() as u64).sum())
}

/// `(2n-1)(n-1)^(n-1)`, the number of standard monomials of `M_n^(1)`.
pub fn count_formula_one_skeleton(n: u32) -> Result<BigInt> {
    if n == 0 {
        return input("n must be at least 1");
    }
    let base = BigInt::from(n - 1);
    Ok(BigInt::from(2 * n - 1) * Pow::pow(&base, n - 1))
}

/// Whether `b` is a G-parking function, decided by membership in `M_G`.
pub fn is_g_parking(g: &Graph, b: &[u32]) -> Result<bool> {
    if b.len() != g.n() {
        return input(format!("sequence has length {}, expected {}", b.len(), g.n()));
    }
    if g.n() == 0 {
        return Ok(true);
    }
    let full = parking_ideal(g)?;
    Ok(!full.contains(&Monomial::new(b.to_vec())))
}

pub fn degree_generating_function(ideal: &MonomialIdeal) -> Result<QPolynomial> {
    degree_generating_function_with(ideal, Exec::default())
}

/// Coefficient of `q^d` is the number of standard monomials of degree `d`.
pub fn degree_generating_function_with(ideal: &MonomialIdeal, exec: Exec) -> Result<QPolynomial> {
    let mut counts: Vec<u64> = Vec::new();
    for chunk in box_sweep(ideal, exec, |e| e.iter().sum::<u32>() as usize)? {
        for d in chunk {
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
    }
    Ok(QPolynomial::from_counts(&counts))
}

/// `u_{n,k} = (n-k, 0^(n-k-1), 1^k)`.
pub fn u_vector(n: usize, k: usize) -> Result<Vec<u32>> {
    if n == 0 || k >= n {
        return input(format!("need 0 <= k < n, got n = {n}, k = {k}"));
    }
    let mut u = vec![(n - k) as u32];
    u.extend(std::iter::repeat_n(0, n - k - 1));
    u.extend(std::iter::repeat_n(1, k));
    Ok(u)
}

/// Number of sequences whose sorted rearrangement `c` has `c_j < u_1 + ... + u_j`.
///
/// Sorted sequences are built value by value; a value `v` filling sorted slots
/// `j+1..j+m` needs `v < U_{j+1}`, and the `C(n-j, m)` factor places those
/// entries among the remaining positions.
pub fn u_parking_count(u: &[u32]) -> BigInt {
    let n = u.len();
    let prefix: Vec<u64> = u
        .iter()
        .scan(0u64, |acc, &x| {
            *acc += u64::from(x);
            Some(*acc)
        })
        .collect();
    if n == 0 {
        return BigInt::one();
    }
    let top = prefix[n - 1];
    // ways[j] = number of completions once j sorted slots are filled, for the
    // current value v; iterate v downward.
    let mut ways = vec![BigInt::zero(); n + 1];
    ways[n] = BigInt::one();
    for v in (0..top).rev() {
        let mut next = vec![BigInt::zero(); n + 1];
        next[n] = BigInt::one();
        for j in (0..n).rev() {
            let mut total = ways[j].clone();
            if v < prefix[j] {
                for m in 1..=n - j {
                    if ways[j + m].is_zero() {
                        continue;
                    }
                    total += binomial(BigInt::from(n - j), BigInt::from(m)) * &ways[j + m];
                }
            }
            next[j] = total;
        }
        ways = next;
    }
    ways[0].clone()
}

/// `Σ_{j=0}^{k} C(n,j)(k+1-j)(k+1)^{j-1}(n-k)^{n-j}`, evaluated over the
/// rationals so the `j = 0` term `(k+1)^{-1}` is exact.
pub fn yan_formula(n: u32, k: u32) -> Result<BigInt> {
    if n == 0 || k >= n {
        return input(format!("need 0 <= k < n, got n = {n}, k = {k}"));
    }
    let kp1 = BigRational::from_integer(BigInt::from(k + 1));
    let mut sum = BigRational::zero();
    for j in 0..=k {
        let power = Pow::pow(&kp1, i32::try_from(j).unwrap() - 1);
        let term = BigRational::from_integer(
            binomial(BigInt::from(n), BigInt::from(j))
                * BigInt::from(k + 1 - j)
                * Pow::pow(&BigInt::from(n - k), n - j),
        ) * power;
        sum += term;
    }
    assert!(sum.is_integer(), "Yan's sum must be an integer");
    Ok(sum.to_integer())
}

pub fn inversion_polynomial(n: usize) -> Result<QPolynomial> {
    inversion_polynomial_with(n, Exec::default())
}

/// `I_n(q) = Σ_F q^{inv(F)}` over rooted forests on `[n]`, where `(i, j)` is
/// an inversion when `i < j` and `j` lies on the path from `i` to its root.
///
/// Forests are enumerated as parent maps `[n] -> {root} ∪ [n]` without cycles.
pub fn inversion_polynomial_with(n: usize, exec: Exec) -> Result<QPolynomial> {
    guard::check("forest size", n as u128, guard::FOREST_MAX_N as u128)?;
    if n == 0 {
        return Ok(QPolynomial::one());
    }
    let total = n.pow(n as u32);
    let max_inv = n * (n - 1) / 2;
    let ranges = par::chunks(total, par::suggested_chunks(exec));
    let partial = par::map(exec, &ranges, |range| {
        let mut counts = vec![0u64; max_inv + 1];
        // parent[i] == n means "root"; otherwise parent[i] in 0..n, != i.
        let mut parent = vec![0usize; n];
        'maps: for code in range.clone() {
            let mut c = code;
            for (i, p) in parent.iter_mut().enumerate() {
                let digit = c % n;
                c /= n;
                // Digit i encodes "root", other digits name a vertex != i.
                *p = if digit == i { n } else { digit };
            }
            let mut inv = 0usize;
            for i in 0..n {
                let mut cur = parent[i];
                let mut steps = 0;
                while cur != n {
                    if cur > i {
                        inv += 1;
                    }
                    steps += 1;
                    if steps > n {
                        continue 'maps;
                    }
                    cur = parent[cur];
                }
            }
            counts[inv] += 1;
        }
        counts
    });
    let mut counts = vec![0u64; max_inv + 1];
    for part in partial {
        for (c, p) in counts.iter_mut().zip(part) {
            *c += p;
        }
    }
    Ok(QPolynomial::from_counts(&counts))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub graph: String,
    pub dim: u64,
    pub det: String,
    pub diff: String,
}

impl SurveyRow {
    pub fn tsv_header() -> &'static str {
        "graph\tdim\tdet\tdiff"
    }

    pub fn to_tsv(&self) -> String {
        format!("{}\t{}\t{}\t{}", self.graph, self.dim, self.det, self.diff)
    }
}

/// `dim S/M_G^(1)` against `det Q̃_G` for one graph.
pub fn survey_graph(g: &Graph) -> Result<SurveyRow> {
    let dim = standard_count_with(&skeleton_ideal(g, 1)?, Exec::Sequential)?;
    let det = g.reduced_signless_laplacian().det();
    let diff = BigInt::from(dim) - &det;
    Ok(SurveyRow {
        graph: g.edge_key(),
        dim,
        det: det.to_string(),
        diff: format!("{}{}", if diff > BigInt::zero() { "+" } else { "" }, diff),
    })
}

pub fn inequality_survey(max_vertices: usize) -> Result<Vec<SurveyRow>> {
    inequality_survey_with(max_vertices, Exec::default())
}

/// Exhaustive labeled sweep over connected graphs with 3..=`max_vertices`
/// vertices. Reports the data only; nothing is asserted.
pub fn inequality_survey_with(max_vertices: usize, exec: Exec) -> Result<Vec<SurveyRow>> {
    guard::check(
        "survey vertex count",
        max_vertices as u128,
        guard::SURVEY_MAX_VERTICES as u128,
    )?;
    let mut rows = Vec::new();
    for nv in 3..=max_vertices {
        let graphs: Vec<Graph> = crate::enumerate::connected_graphs(nv).collect();
        for row in par::map(exec, &graphs, survey_graph) {
            rows.push(row?);
        }
    }
    Ok(rows)
}
