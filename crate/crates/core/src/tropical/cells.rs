use super::diffcons::DifferenceSystem;
use super::labels::label_from_degrees;
use super::{homogenize, normalize, Arrangement, TypePair};
use crate::error::{input, Result};
use crate::graph::{Graph, VertexSet};
use crate::guard;
use crate::matrix::IntMatrix;
use crate::monomial::Monomial;
use crate::par::{self, Exec};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::collections::HashMap;

/// A relatively open cell of the decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub types: TypePair,
    pub dim: usize,
    pub label: Monomial,
    /// A point of the cell in ambient coordinates.
    pub witness: Vec<BigRational>,
}

/// All cells of an arrangement together with the face order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellComplex {
    n: usize,
    cells: Vec<Cell>,
    /// `(face, coface)` index pairs: `cells[face]` lies in the closure of
    /// `cells[coface]`.
    faces: Vec<(usize, usize)>,
}

/// Constraint system whose solutions are exactly the points of type `t`.
fn type_system(a: &[i128], b: &[i128], t: &TypePair) -> DifferenceSystem {
    let n = a.len();
    let mut sys = DifferenceSystem::new(n);
    for (apex, set) in [(a, t.a), (b, t.b)] {
        let lead = set.iter().next().expect("nonempty type") - 1;
        for k in 0..n {
            if k == lead {
                continue;
            }
            let w = apex[k] - apex[lead];
            if set.contains(k + 1) {
                sys.equal(lead, k, w);
            } else {
                sys.less_than(lead, k, w);
            }
        }
    }
    sys
}

pub fn enumerate_cells(arr: &Arrangement) -> Result<CellComplex> {
    enumerate_cells_with(arr, Exec::default())
}

/// Decides every candidate type pair exactly and assembles the face order.
/// Cells come out in lexicographic order of their types and are labeled for
/// the complete graph `K_{n+1}`.
pub fn enumerate_cells_with(arr: &Arrangement, exec: Exec) -> Result<CellComplex> {
    let n = arr.n();
    guard::check("tropical dimension n", n as u128, guard::TROPICAL_MAX_N as u128)?;
    let sides = (1u64 << n) - 1;
    let candidates = sides * sides;
    guard::check(
        "tropical candidate types",
        u128::from(candidates),
        guard::cell_limit(1 << 20),
    )?;
    let (a, b, scale) = arr.scaled()?;
    let degrees = vec![n as u32; n];
    let found = par::map_range(exec, 0..candidates as usize, |code| {
        let code = code as u64;
        let t = TypePair::new(VertexSet((code / sides + 1) << 1), VertexSet((code % sides + 1) << 1));
        let sys = type_system(&a, &b, &t);
        let x = sys.solve()?;
        let h: Vec<BigRational> = x.into_iter().map(|v| v / &scale).collect();
        let mut witness = normalize(h);
        witness.pop();
        Some(Cell {
            types: t,
            dim: t.dim(n),
            label: label_from_degrees(&t, &degrees),
            witness,
        })
    });
    let mut cells: Vec<Cell> = found.into_iter().flatten().collect();
    cells.sort_by(|x, y| x.types.lex_cmp(&y.types));
    Ok(CellComplex::assemble(n, cells))
}

impl CellComplex {
    fn assemble(n: usize, cells: Vec<Cell>) -> Self {
        let mut faces = Vec::new();
        for (i, lower) in cells.iter().enumerate() {
            for (j, upper) in cells.iter().enumerate() {
                if i != j && upper.types.is_subset_of(&lower.types) {
                    debug_assert!(lower.dim < upper.dim, "dimension must rise along the face order");
                    faces.push((i, j));
                }
            }
        }
        CellComplex { n, cells, faces }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn faces(&self) -> &[(usize, usize)] {
        &self.faces
    }

    pub fn codim(&self, index: usize) -> usize {
        self.n - 1 - self.cells[index].dim
    }

    /// Number of cells of each codimension `0, 1, ..., n-1`.
    pub fn counts_by_codim(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n];
        for i in 0..self.cells.len() {
            counts[self.codim(i)] += 1;
        }
        counts
    }

    pub fn maximal_cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| c.dim + 1 == self.n)
    }

    /// `Σ (-1)^codim` over all cells; `1` for any decomposition of `R^{n-1}`.
    pub fn euler_characteristic(&self) -> i64 {
        (0..self.cells.len())
            .map(|i| if self.codim(i).is_multiple_of(2) { 1 } else { -1 })
            .sum()
    }

    /// Same cells and order, labeled by the vertex degrees of `g`.
    pub fn relabeled(&self, g: &Graph) -> Result<CellComplex> {
        if g.n() != self.n {
            return input(format!(
                "graph has {} non-sink vertices, complex needs {}",
                g.n(),
                self.n
            ));
        }
        let degrees: Vec<u32> = (1..=self.n)
            .map(|i| g.degree(i).map(|d| d as u32))
            .collect::<Result<_>>()?;
        let mut out = self.clone();
        for cell in &mut out.cells {
            cell.label = label_from_degrees(&cell.types, &degrees);
        }
        Ok(out)
    }

    /// Overrides one label; meant for negative controls.
    pub fn set_label(&mut self, index: usize, label: Monomial) {
        self.cells[index].label = label;
    }

    /// Each non-maximal cell's type is the componentwise union of the types
    /// of the maximal cells whose closures contain it.
    pub fn union_property_holds(&self) -> bool {
        let top = self.n - 1;
        (0..self.cells.len()).filter(|&i| self.cells[i].dim < top).all(|i| {
            let union = self
                .faces
                .iter()
                .filter(|&&(f, c)| f == i && self.cells[c].dim == top)
                .map(|&(_, c)| self.cells[c].types)
                .reduce(|x, y| x.union(&y));
            union == Some(self.cells[i].types)
        })
    }

    /// Each non-maximal label equals the lcm of the labels of the maximal
    /// cells containing it.
    pub fn labels_are_lcms(&self) -> bool {
        let top = self.n - 1;
        (0..self.cells.len()).filter(|&i| self.cells[i].dim < top).all(|i| {
            let lcm = self
                .faces
                .iter()
                .filter(|&&(f, c)| f == i && self.cells[c].dim == top)
                .map(|&(_, c)| self.cells[c].label.clone())
                .reduce(|x, y| x.lcm_unchecked(&y));
            lcm.as_ref() == Some(&self.cells[i].label)
        })
    }

    /// Face-order pairs whose dimensions differ by one.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        self.faces
            .iter()
            .copied()
            .filter(|&(f, c)| self.cells[f].dim + 1 == self.cells[c].dim)
            .collect()
    }

    /// Oriented directions of a cell: indicator vectors of the tie components
    /// not containing the gauge index `n`.
    fn basis(&self, index: usize) -> Vec<VertexSet> {
        let n = self.n;
        self.cells[index]
            .types
            .tie_components(n)
            .into_iter()
            .filter(|c| !c.contains(n))
            .collect()
    }

    /// Incidence number `[coface : face]` for a covering pair, using the
    /// outward-normal-first orientation convention.
    pub fn incidence(&self, face: usize, coface: usize) -> i32 {
        let upper = self.basis(coface);
        let lower = self.basis(face);
        let d = upper.len();
        assert_eq!(lower.len() + 1, d, "not a covering pair");
        let wf = homogenize(&self.cells[coface].witness);
        let wg = homogenize(&self.cells[face].witness);
        // Inward vector in the coface's coordinates, made integral by a
        // positive rescaling.
        let inward: Vec<BigRational> = upper
            .iter()
            .map(|c| {
                let v = c.iter().next().expect("nonempty component") - 1;
                &wf[v] - &wg[v]
            })
            .collect();
        let denom = inward.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let mut data = vec![BigInt::zero(); d * d];
        for (r, comp) in upper.iter().enumerate() {
            data[r * d] = -(&inward[r] * &denom).to_integer();
            for (k, dir) in lower.iter().enumerate() {
                if comp.0 & !dir.0 == 0 {
                    data[r * d + k + 1] = BigInt::one();
                }
            }
        }
        let det = IntMatrix::from_entries(d, data).det();
        assert!(!det.is_zero(), "face direction must be transverse");
        if det.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Whether the signed coboundary squares to zero on every interval of
    /// length two in the face order.
    pub fn coboundary_squares_to_zero(&self) -> bool {
        let covers = self.covering_pairs();
        let mut inc: HashMap<(usize, usize), i32> = HashMap::new();
        let mut up: HashMap<usize, Vec<usize>> = HashMap::new();
        for &(f, c) in &covers {
            inc.insert((f, c), self.incidence(f, c));
            up.entry(f).or_default().push(c);
        }
        self.faces
            .iter()
            .filter(|&&(f, c)| self.cells[f].dim + 2 == self.cells[c].dim)
            .all(|&(f, c)| {
                let total: i32 = up
                    .get(&f)
                    .into_iter()
                    .flatten()
                    .filter_map(|&m| inc.get(&(m, c)).map(|outer| outer * inc[&(f, m)]))
                    .sum();
                total == 0
            })
    }

    pub fn to_json(&self) -> Value {
        let cells: Vec<Value> = self
            .cells
            .iter()
            .map(|c| {
                json!({
                    "Ta": c.types.a.to_vec(),
                    "Tb": c.types.b.to_vec(),
                    "dim": c.dim,
                    "label": c.label.exponents(),
                    "witness": c.witness.iter().map(ToString::to_string).collect::<Vec<_>>(),
                })
            })
            .collect();
        let faces: Vec<Value> = self.faces.iter().map(|&(f, c)| json!([f, c])).collect();
        json!({"n": self.n, "cells": cells, "faces": faces})
    }
}
