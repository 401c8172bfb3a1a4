//! Simple undirected graphs on `{0, ..., n}` with sink `0`, their Laplacians,
//! and the spanning-tree and TU-subgraph counts attached to them.

use crate::error::{domain, input, Error, Result};
use crate::guard;
use crate::matrix::IntMatrix;
use crate::par::{self, Exec};
use num_bigint::BigInt;
use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

/// Maximum number of vertices (sink included); vertex sets are `u64` masks.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_slice(vertices: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &v in vertices {
            if v >= MAX_VERTICES {
                return input(format!("vertex {v} exceeds the {MAX_VERTICES}-vertex limit"));
            }
            bits |= 1 << v;
        }
        Ok(VertexSet(bits))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares by sorted element lists, so `{1} < {1,2} < {1,3} < {2}`.
    pub fn lex_cmp(self, other: VertexSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Immutable simple undirected graph. Vertex `0` is the sink, `1..=n` are the
/// non-sink vertices that index the polynomial variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph; loops, duplicate edges and labels past `vertex_count`
    /// are rejected.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertex_count == 0 {
            return input("a graph needs at least the sink vertex");
        }
        if vertex_count > MAX_VERTICES {
            return input(format!("at most {MAX_VERTICES} vertices are supported"));
        }
        let mut set = BTreeSet::new();
        let mut adj = vec![0u64; vertex_count];
        for &(i, j) in edges {
            if i >= vertex_count || j >= vertex_count {
                return input(format!("edge {i}-{j} uses a vertex outside 0..{vertex_count}"));
            }
            if i == j {
                return input(format!("loop at vertex {i}"));
            }
            let e = (i.min(j), i.max(j));
            if !set.insert(e) {
                return input(format!("duplicate edge {}-{}", e.0, e.1));
            }
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        Ok(Graph {
            vertex_count,
            edges: set,
            adj,
        })
    }

    /// `K_m` on `{0, ..., m-1}`.
    pub fn complete(m: usize) -> Result<Self> {
        let edges: Vec<_> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
        Graph::new(m, &edges)
    }

    /// Copy of the graph with the edge `{i, j}` removed.
    pub fn without_edge(&self, i: usize, j: usize) -> Result<Self> {
        let e = (i.min(j), i.max(j));
        if !self.edges.contains(&e) {
            return input(format!("edge {}-{} is not in the graph", e.0, e.1));
        }
        let edges: Vec<_> = self.edges.iter().copied().filter(|&f| f != e).collect();
        Graph::new(self.vertex_count, &edges)
    }

    /// Parses the edge-list text format or a named family such as `complete:5`.
    pub fn parse(source: &str) -> Result<Self> {
        if let Some(rest) = source.trim().strip_prefix("complete:") {
            let m: usize = rest
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("bad vertex count in {source:?}")))?;
            return Graph::complete(m);
        }
        let mut edges = Vec::new();
        let mut max_label = 0usize;
        for (idx, raw) in source.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse_err = |msg: String| Error::Parse { line: idx + 1, msg };
            if fields.len() != 2 {
                return Err(parse_err(format!("expected two vertex labels, found {line:?}")));
            }
            let mut ends = [0usize; 2];
            for (slot, field) in ends.iter_mut().zip(&fields) {
                *slot = field
                    .parse()
                    .map_err(|_| parse_err(format!("{field:?} is not a vertex label")))?;
            }
            if ends[0] == ends[1] {
                return Err(parse_err(format!("loop at vertex {}", ends[0])));
            }
            max_label = max_label.max(ends[0]).max(ends[1]);
            edges.push((ends[0], ends[1]));
        }
        let mut seen = BTreeSet::new();
        for (k, &(i, j)) in edges.iter().enumerate() {
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(Error::Parse {
                    line: k + 1,
                    msg: format!("duplicate edge {i}-{j}"),
                });
            }
        }
        Graph::new(max_label + 1, &edges)
    }

    /// Reads a graph from a path, or interprets `source` as a named family.
    pub fn load(source: &str) -> Result<Self> {
        if source.contains(':') && !Path::new(source).exists() {
            return Graph::parse(source);
        }
        let text = std::fs::read_to_string(source).map_err(|e| Error::Input(format!("cannot read {source}: {e}")))?;
        Graph::parse(&text)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of non-sink vertices, which is the number of variables.
    pub fn n(&self) -> usize {
        self.vertex_count - 1
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.vertex_count && j < self.vertex_count && self.adj[i] >> j & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count {
            return input(format!("vertex {v} is outside 0..{}", self.vertex_count));
        }
        Ok(())
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    /// Degree without the range check, for callers that iterate `0..=n`.
    pub(crate) fn deg(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    /// Number of neighbours of `i` outside `sigma`, the sink included.
    pub fn d_sigma(&self, sigma: VertexSet, i: usize) -> Result<usize> {
        self.check_sigma(sigma)?;
        if !sigma.contains(i) {
            return input(format!("vertex {i} is not in {sigma}"));
        }
        Ok(self.out_degree(sigma, i) as usize)
    }

    pub(crate) fn out_degree(&self, sigma: VertexSet, i: usize) -> u32 {
        (self.adj[i] & !sigma.0).count_ones()
    }

    pub(crate) fn check_sigma(&self, sigma: VertexSet) -> Result<()> {
        if sigma.is_empty() {
            return input("σ must be nonempty");
        }
        if sigma.contains(0) {
            return input("σ must not contain the sink 0");
        }
        if sigma.0 >> self.vertex_count != 0 {
            return input(format!("σ = {sigma} has vertices outside 1..={}", self.n()));
        }
        Ok(())
    }

    /// Every vertex reaches the sink.
    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen.count_ones() as usize == self.vertex_count
    }

    fn reduced(&self, off_diagonal: i64) -> IntMatrix {
        let n = self.n();
        IntMatrix::from_fn(n, |r, c| {
            let (i, j) = (r + 1, c + 1);
            if i == j {
                i64::from(self.deg(i))
            } else if self.has_edge(i, j) {
                off_diagonal
            } else {
                0
            }
        })
    }

    /// Laplacian with the sink row and column deleted.
    pub fn reduced_laplacian(&self) -> IntMatrix {
        self.reduced(-1)
    }

    /// Signless Laplacian with the sink row and column deleted.
    pub fn reduced_signless_laplacian(&self) -> IntMatrix {
        self.reduced(1)
    }

    /// Laplacian with row and column `v` deleted.
    pub fn laplacian_minor(&self, v: usize) -> Result<IntMatrix> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.vertex_count).filter(|&u| u != v).collect();
        Ok(IntMatrix::from_fn(keep.len(), |r, c| {
            let (i, j) = (keep[r], keep[c]);
            if i == j {
                i64::from(self.deg(i))
            } else if self.has_edge(i, j) {
                -1
            } else {
                0
            }
        }))
    }

    /// Matrix-tree count `det L̃`.
    pub fn spanning_tree_count(&self) -> BigInt {
        self.reduced_laplacian().det()
    }

    pub fn tu_weighted_count(&self) -> Result<BigInt> {
        self.tu_weighted_count_with(Exec::default())
    }

    /// `Σ_H 4^{c(H)}` over spanning subgraphs `H` made of one tree through the
    /// sink and `c(H)` unicyclic components whose cycle is odd.
    ///
    /// Such an `H` has exactly `n` edges, so only `n`-subsets of `E` are swept.
    pub fn tu_weighted_count_with(&self, exec: Exec) -> Result<BigInt> {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        guard::check(
            "edge count for the TU sweep",
            edges.len() as u128,
            guard::TU_MAX_EDGES as u128,
        )?;
        let n = self.n();
        if n == 0 {
            return Ok(BigInt::from(1));
        }
        if edges.len() < n {
            return Ok(BigInt::from(0));
        }
        // Partition by the smallest chosen edge; each part is an independent sweep.
        let parts = par::map_range(exec, 0..edges.len() - n + 1, |first| {
            let mut acc = [0u64; 33];
            let mut chosen = vec![first];
            tu_sweep(&edges, self.vertex_count, n, &mut chosen, first + 1, &mut acc);
            acc
        });
        let mut total = BigInt::from(0);
        for acc in parts {
            for (c, &count) in acc.iter().enumerate() {
                if count > 0 {
                    total += BigInt::from(count) * BigInt::from(4u32).pow(c as u32);
                }
            }
        }
        Ok(total)
    }

    /// Edge-list rendering `0-1,0-2,...` used as a stable key in reports.
    pub fn edge_key(&self) -> String {
        let parts: Vec<String> = self.edges().map(|(i, j)| format!("{i}-{j}")).collect();
        if parts.is_empty() {
            format!("empty:{}", self.vertex_count)
        } else {
            parts.join(",")
        }
    }

    /// Text form accepted by [`Graph::parse`].
    pub fn to_edge_list(&self) -> String {
        self.edges().map(|(i, j)| format!("{i} {j}\n")).collect()
    }
}

fn tu_sweep(
    edges: &[(usize, usize)],
    vertex_count: usize,
    want: usize,
    chosen: &mut Vec<usize>,
    next: usize,
    acc: &mut [u64; 33],
) {
    if chosen.len() == want {
        if let Some(c) = tu_components(edges, vertex_count, chosen) {
            acc[c] += 1;
        }
        return;
    }
    let remaining = want - chosen.len();
    for e in next..=edges.len().saturating_sub(remaining) {
        chosen.push(e);
        tu_sweep(edges, vertex_count, want, chosen, e + 1, acc);
        chosen.pop();
    }
}

/// Returns the number of odd-unicyclic components if the chosen edges form a
/// valid TU-subgraph rooted at the sink.
fn tu_components(edges: &[(usize, usize)], vertex_count: usize, chosen: &[usize]) -> Option<usize> {
    let mut uf = ParityUnionFind::new(vertex_count);
    let mut odd_cycle = vec![false; vertex_count];
    let mut cycles = vec![0u8; vertex_count];
    for &e in chosen {
        let (i, j) = edges[e];
        match uf.union(i, j) {
            Union::Merged => {}
            Union::Cycle { odd } => {
                let r = uf.find(i).0;
                cycles[r] += 1;
                odd_cycle[r] |= odd;
            }
        }
    }
    // Merging after a cycle was recorded moves the flags to the new root.
    let mut comp_cycles = vec![0u8; vertex_count];
    let mut comp_odd = vec![false; vertex_count];
    let mut comp_seen = vec![false; vertex_count];
    for v in 0..vertex_count {
        let r = uf.find(v).0;
        comp_seen[r] = true;
        comp_cycles[r] += cycles[v];
        comp_odd[r] |= odd_cycle[v];
    }
    let sink_root = uf.find(0).0;
    let mut unicyclic = 0;
    for r in 0..vertex_count {
        if !comp_seen[r] {
            continue;
        }
        if r == sink_root {
            if comp_cycles[r] != 0 {
                return None;
            }
        } else {
            if comp_cycles[r] != 1 || !comp_odd[r] {
                return None;
            }
            unicyclic += 1;
        }
    }
    Some(unicyclic)
}

enum Union {
    Merged,
    Cycle { odd: bool },
}

/// Union-find tracking the parity of each vertex relative to its root.
struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl ParityUnionFind {
    fn new(len: usize) -> Self {
        ParityUnionFind {
            parent: (0..len).collect(),
            parity: vec![false; len],
        }
    }

    fn find(&mut self, v: usize) -> (usize, bool) {
        let p = self.parent[v];
        if p == v {
            return (v, false);
        }
        let (root, par) = self.find(p);
        self.parent[v] = root;
        self.parity[v] ^= par;
        (root, self.parity[v])
    }

    fn union(&mut self, a: usize, b: usize) -> Union {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            // The new edge closes a cycle; it is odd iff a and b share a colour.
            return Union::Cycle { odd: pa == pb };
        }
        self.parent[rb] = ra;
        self.parity[rb] = !(pa ^ pb);
        Union::Merged
    }
}

/// Checks that `g` has the shape `H * {0}`: the sink is adjacent to every other
/// vertex.
pub(crate) fn is_cone_over_sink(g: &Graph) -> bool {
    (1..g.vertex_count()).all(|v| g.has_edge(0, v))
}

pub(crate) fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        domain("graph is not connected to the sink")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k5_minus_34() -> Graph {
        Graph::complete(5).unwrap().without_edge(3, 4).unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(Graph::complete(5).unwrap().degree(1).unwrap(), 4);
        assert_eq!(k5_minus_34().degree(3).unwrap(), 3);
        assert_eq!(Graph::complete(4).unwrap().degree(0).unwrap(), 3);
        assert!(matches!(Graph::complete(4).unwrap().degree(4), Err(Error::Input(_))));
    }

    #[test]
    fn d_sigma_examples() {
        let k4 = Graph::complete(4).unwrap();
        let k5 = Graph::complete(5).unwrap();
        let s = |v: &[usize]| VertexSet::from_slice(v).unwrap();
        assert_eq!(k4.d_sigma(s(&[1]), 1).unwrap(), 3);
        assert_eq!(k5.d_sigma(s(&[1, 2]), 1).unwrap(), 3);
        assert_eq!(k4.d_sigma(s(&[1, 2, 3]), 2).unwrap(), 1);
        assert!(k4.d_sigma(s(&[1, 2]), 3).is_err());
        assert!(k4.d_sigma(s(&[0, 1]), 1).is_err());
        assert!(k4.d_sigma(VertexSet::EMPTY, 1).is_err());
    }

    #[test]
    fn laplacian_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            k4.reduced_signless_laplacian(),
            IntMatrix::from_rows(&[vec![3, 1, 1], vec![1, 3, 1], vec![1, 1, 3]])
        );
        assert_eq!(
            k5_minus_34().reduced_signless_laplacian(),
            IntMatrix::from_rows(&[vec![4, 1, 1, 1], vec![1, 4, 1, 1], vec![1, 1, 3, 0], vec![1, 1, 0, 3]])
        );
        let edge = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(edge.reduced_laplacian(), IntMatrix::from_rows(&[vec![1]]));
    }

    #[test]
    fn spanning_trees() {
        assert_eq!(Graph::complete(4).unwrap().spanning_tree_count(), BigInt::from(16));
        assert_eq!(Graph::complete(5).unwrap().spanning_tree_count(), BigInt::from(125));
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.spanning_tree_count(), BigInt::from(1));
    }

    #[test]
    fn tu_counts() {
        assert_eq!(
            Graph::complete(4).unwrap().tu_weighted_count().unwrap(),
            BigInt::from(20)
        );
        assert_eq!(
            k5_minus_34().tu_weighted_count().unwrap(),
            k5_minus_34().reduced_signless_laplacian().det()
        );
        let tree = Graph::new(5, &[(0, 1), (1, 2), (1, 3), (0, 4)]).unwrap();
        assert_eq!(tree.tu_weighted_count().unwrap(), BigInt::from(1));
        let a = k5_minus_34().tu_weighted_count_with(Exec::Sequential).unwrap();
        let b = k5_minus_34().tu_weighted_count_with(Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn tu_guard() {
        let k8 = Graph::complete(8).unwrap();
        assert!(k8.tu_weighted_count().unwrap_err().is_resource());
    }

    #[test]
    fn parse_format() {
        let g = Graph::parse("# triangle\n0 1\n1 2\n\n0 2 # closing edge\n").unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
        assert_eq!(Graph::parse("complete:5").unwrap(), Graph::complete(5).unwrap());
        assert!(matches!(Graph::parse("0 1\n1 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse("0 1\n2 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse("0 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Graph::parse("0 x\n"), Err(Error::Parse { line: 1, .. })));
        let g = k5_minus_34();
        assert_eq!(Graph::parse(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn connectivity() {
        assert!(Graph::complete(4).unwrap().is_connected());
        assert!(!Graph::new(3, &[(1, 2)]).unwrap().is_connected());
        assert!(Graph::new(1, &[]).unwrap().is_connected());
    }

    #[test]
    fn laplacian_minor_invariance() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3), (3, 4)]).unwrap();
        let base = g.spanning_tree_count();
        for v in 0..5 {
            assert_eq!(g.laplacian_minor(v).unwrap().det(), base);
        }
    }

    #[test]
    fn vertex_set_order() {
        let s = |v: &[usize]| VertexSet::from_slice(v).unwrap();
        assert!(s(&[1]).lex_cmp(s(&[1, 2])).is_lt());
        assert!(s(&[1, 2]).lex_cmp(s(&[1, 3])).is_lt());
        assert!(s(&[1, 3]).lex_cmp(s(&[2])).is_lt());
        assert_eq!(s(&[1, 3]).to_string(), "{1,3}");
    }
}
