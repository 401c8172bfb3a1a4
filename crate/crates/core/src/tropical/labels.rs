use super::{Arrangement, Cell, CellComplex, TypePair};
use crate::betti::BettiTable;
use crate::error::{domain, input, Result};
use crate::graph::{is_cone_over_sink, Graph};
use num_rational::BigRational;
use num_traits::Signed;

/// Exponent of `x_i` is `deg(i)` when `i` is in both sides of the type,
/// `deg(i) - 1` when it is in exactly one, and `0` otherwise.
pub(crate) fn label_from_degrees(t: &TypePair, degrees: &[u32]) -> crate::Monomial {
    let exps = (1..=degrees.len())
        .map(|i| match (t.a.contains(i), t.b.contains(i)) {
            (true, true) => degrees[i - 1],
            (true, false) | (false, true) => degrees[i - 1].saturating_sub(1),
            (false, false) => 0,
        })
        .collect();
    crate::Monomial::new(exps)
}

/// Label of a cell for the degrees of `g`.
pub fn monomial_label(cell: &Cell, g: &Graph) -> Result<crate::Monomial> {
    let n = cell.witness.len() + 1;
    if g.n() != n {
        return input(format!(
            "graph has {} non-sink vertices, cell lives in R^{}",
            g.n(),
            n - 1
        ));
    }
    let degrees: Vec<u32> = (1..=n).map(|i| g.degree(i).map(|d| d as u32)).collect::<Result<_>>()?;
    Ok(label_from_degrees(&cell.types, &degrees))
}

/// `β_{i,b}` is the number of cells of codimension `i - 1` labeled `b`.
pub fn betti_from_complex(complex: &CellComplex, g: &Graph) -> Result<BettiTable> {
    let labeled = complex.relabeled(g)?;
    let mut table = BettiTable::new(complex.n());
    for (index, cell) in labeled.cells().iter().enumerate() {
        table.add(labeled.codim(index) + 1, cell.label.clone(), 1)?;
    }
    Ok(table)
}

/// No face has the same label as a cell whose closure contains it.
pub fn verify_minimality(complex: &CellComplex) -> bool {
    let cells = complex.cells();
    complex.faces().iter().all(|&(f, c)| cells[f].label != cells[c].label)
}

/// Blocks of mutually non-adjacent vertices among `1..=n`, or an error if
/// non-adjacency is not an equivalence relation.
fn removed_cliques(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    let block_of = |v: usize| -> Vec<usize> { (1..=n).filter(|&u| u == v || !g.has_edge(u, v)).collect() };
    let mut blocks = Vec::new();
    for v in 1..=n {
        let block = block_of(v);
        for &u in &block {
            if block_of(u) != block {
                return domain(format!(
                    "removed edges around vertices {v} and {u} do not form disjoint cliques"
                ));
            }
        }
        if block.len() > 1 && block[0] == v {
            blocks.push(block);
        }
    }
    Ok(blocks)
}

/// Apex `b` (ambient coordinates, with `a = 0`) of a degenerate arrangement
/// for a cone over `K_n` minus disjoint cliques.
///
/// Cliques are relabeled into contiguous blocks ordered by least vertex, the
/// remaining vertices follow. The block values are `1, ..., d` followed by
/// `d+1, d+2, ...` for the remaining vertices; when the cliques cover every
/// vertex the last block gets `0` instead. The homogeneous vector is then
/// shifted so the entry at `n` is zero, and replaced by its negative (the
/// same arrangement with the hyperplanes exchanged) if that would leave a
/// negative coordinate.
pub fn clique_cone_apex(g: &Graph) -> Result<Vec<BigRational>> {
    let n = g.n();
    if n == 0 {
        return input("graph has no non-sink vertices");
    }
    if !is_cone_over_sink(g) {
        return domain("sink must be adjacent to every other vertex");
    }
    let cliques = removed_cliques(g)?;
    let as_rational = |v: Vec<i64>| v.into_iter().map(|x| BigRational::from_integer(x.into())).collect();
    if cliques.is_empty() {
        return Ok(as_rational((1..n as i64).collect()));
    }
    let d = cliques.len() as i64;
    let covered: usize = cliques.iter().map(Vec::len).sum();
    let mut homogeneous = vec![0i64; n + 1];
    for (c, block) in cliques.iter().enumerate() {
        let value = if covered == n && c + 1 == cliques.len() {
            0
        } else {
            c as i64 + 1
        };
        for &v in block {
            homogeneous[v] = value;
        }
    }
    let in_clique: Vec<bool> = (0..=n).map(|v| cliques.iter().any(|b| b.contains(&v))).collect();
    let mut next = d + 1;
    for v in 1..=n {
        if !in_clique[v] {
            homogeneous[v] = next;
            next += 1;
        }
    }
    let shift = |v: &[i64]| -> Vec<i64> { v[1..n].iter().map(|x| x - v[n]).collect() };
    let mut apex = shift(&homogeneous);
    if apex.iter().any(|x| x.is_negative()) {
        let mirrored: Vec<i64> = homogeneous.iter().map(|x| -x).collect();
        apex = shift(&mirrored);
    }
    Ok(as_rational(apex))
}

impl Arrangement {
    /// `a = 0` and `b` from [`clique_cone_apex`].
    pub fn clique_cone(g: &Graph) -> Result<Arrangement> {
        let b = clique_cone_apex(g)?;
        let a = vec![BigRational::from_integer(0.into()); b.len()];
        Arrangement::new(a, b)
    }
}
