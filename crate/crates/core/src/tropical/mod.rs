//! Arrangements of two max-tropical hyperplanes in `R^{n-1}` and the labeled
//! cell decompositions they induce.
//!
//! Points and apexes are handled in homogeneous coordinates of length `n`
//! whose last entry is fixed at `0`; the ambient space is the first `n - 1`
//! coordinates. Types are subsets of `{1, ..., n}` stored as [`VertexSet`]s.

mod cells;
mod diffcons;
mod labels;
mod svg;

pub use cells::{enumerate_cells, enumerate_cells_with, Cell, CellComplex};
pub use diffcons::DifferenceSystem;
pub use labels::{betti_from_complex, clique_cone_apex, monomial_label, verify_minimality};
pub use svg::render_svg;

use crate::error::{input, Result};
use crate::graph::VertexSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// The pair `(T_a(x), T_b(x))` of closed sectors containing a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypePair {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl TypePair {
    pub fn new(a: VertexSet, b: VertexSet) -> Self {
        TypePair { a, b }
    }

    /// Componentwise containment: `self.a ⊆ other.a` and `self.b ⊆ other.b`.
    pub fn is_subset_of(&self, other: &TypePair) -> bool {
        self.a.0 & !other.a.0 == 0 && self.b.0 & !other.b.0 == 0
    }

    pub fn union(&self, other: &TypePair) -> TypePair {
        TypePair::new(self.a.union(other.a), self.b.union(other.b))
    }

    /// Lexicographic on `(a, b)` as sorted lists.
    pub fn lex_cmp(&self, other: &TypePair) -> std::cmp::Ordering {
        self.a.lex_cmp(other.a).then(self.b.lex_cmp(other.b))
    }

    /// Connected components of the tie graph on `{1, ..., n}`, which joins
    /// every two indices sharing `a` or sharing `b`. Sorted by least element.
    pub fn tie_components(&self, n: usize) -> Vec<VertexSet> {
        let mut comps: Vec<VertexSet> = (1..=n).map(VertexSet::singleton).collect();
        for group in [self.a, self.b] {
            let (hit, mut rest): (Vec<VertexSet>, Vec<VertexSet>) = comps.into_iter().partition(|c| c.0 & group.0 != 0);
            if let Some(merged) = hit.into_iter().reduce(VertexSet::union) {
                rest.push(merged);
            }
            comps = rest;
        }
        comps.sort_by_key(|c| c.0.trailing_zeros());
        comps
    }

    /// Dimension of the cell with this type: components of the tie graph minus one.
    pub fn dim(&self, n: usize) -> usize {
        self.tie_components(n).len() - 1
    }
}

impl fmt::Display for TypePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Two tropical hyperplanes with apexes `a` and `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    apex_a: Vec<BigRational>,
    apex_b: Vec<BigRational>,
}

fn normalize(mut v: Vec<BigRational>) -> Vec<BigRational> {
    if let Some(last) = v.last().cloned() {
        for x in &mut v {
            *x -= &last;
        }
    }
    v
}

impl Arrangement {
    /// Apexes given by their `n - 1` ambient coordinates.
    pub fn new(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> Result<Self> {
        if a.len() != b.len() {
            return input(format!("apexes have lengths {} and {}", a.len(), b.len()));
        }
        a.push(BigRational::zero());
        b.push(BigRational::zero());
        Ok(Arrangement { apex_a: a, apex_b: b })
    }

    /// Apexes given by all `n` homogeneous coordinates; the last is subtracted.
    pub fn from_homogeneous(a: Vec<BigRational>, b: Vec<BigRational>) -> Result<Self> {
        if a.len() != b.len() || a.is_empty() {
            return input("homogeneous apexes must be nonempty and of equal length");
        }
        Ok(Arrangement {
            apex_a: normalize(a),
            apex_b: normalize(b),
        })
    }

    pub fn from_integers(a: &[i64], b: &[i64]) -> Result<Self> {
        let conv = |v: &[i64]| v.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        Arrangement::new(conv(a), conv(b))
    }

    /// `a = 0`, `b = (1, 2, ..., n-1)`.
    pub fn generic(n: usize) -> Result<Self> {
        if n == 0 {
            return input("n must be at least 1");
        }
        let b: Vec<i64> = (1..n as i64).collect();
        Arrangement::from_integers(&vec![0; n - 1], &b)
    }

    pub fn n(&self) -> usize {
        self.apex_a.len()
    }

    /// Homogeneous apex `a*`, last entry `0`.
    pub fn apex_a(&self) -> &[BigRational] {
        &self.apex_a
    }

    pub fn apex_b(&self) -> &[BigRational] {
        &self.apex_b
    }

    /// Generic position: the differences `b_i - a_i` are pairwise distinct,
    /// equivalently every `{i, j}` with `i <= j` is realized by a maximal cell.
    pub fn is_generic(&self) -> bool {
        let mut diffs: Vec<BigRational> = self.apex_b.iter().zip(&self.apex_a).map(|(b, a)| b - a).collect();
        diffs.sort();
        diffs.windows(2).all(|w| w[0] != w[1])
    }

    /// Integer apexes after clearing denominators, with the common scale.
    pub(crate) fn scaled(&self) -> Result<(Vec<i128>, Vec<i128>, BigInt)> {
        let scale = self
            .apex_a
            .iter()
            .chain(&self.apex_b)
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let conv = |v: &[BigRational]| -> Result<Vec<i128>> {
            v.iter()
                .map(|x| {
                    let scaled = (x * &scale).to_integer();
                    i128::try_from(&scaled)
                        .ok()
                        .filter(|v| v.abs() < 1 << 60)
                        .map_or_else(|| input("apex coordinates are too large"), Ok)
                })
                .collect()
        };
        Ok((conv(&self.apex_a)?, conv(&self.apex_b)?, scale))
    }

    /// Exchanges the roles of the two hyperplanes.
    pub fn swapped(&self) -> Arrangement {
        Arrangement {
            apex_a: self.apex_b.clone(),
            apex_b: self.apex_a.clone(),
        }
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[BigRational]| {
            v[..v.len() - 1]
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "a=({}) b=({})", show(&self.apex_a), show(&self.apex_b))
    }
}

fn argmax(x: &[BigRational], apex: &[BigRational]) -> VertexSet {
    let shifted: Vec<BigRational> = x.iter().zip(apex).map(|(x, a)| x - a).collect();
    let top = shifted.iter().max().expect("nonempty");
    let mut set = VertexSet::EMPTY;
    for (i, v) in shifted.iter().enumerate() {
        if v == top {
            set.insert(i + 1);
        }
    }
    set
}

/// Appends the gauge coordinate `0` to an ambient point.
pub fn homogenize(x: &[BigRational]) -> Vec<BigRational> {
    let mut v = x.to_vec();
    v.push(BigRational::zero());
    v
}

/// Type of an ambient point `x ∈ R^{n-1}`.
pub fn type_of_point(arr: &Arrangement, x: &[BigRational]) -> Result<TypePair> {
    if x.len() + 1 != arr.n() {
        return input(format!("point has {} coordinates, expected {}", x.len(), arr.n() - 1));
    }
    let h = homogenize(x);
    Ok(TypePair::new(argmax(&h, &arr.apex_a), argmax(&h, &arr.apex_b)))
}

/// `max(λ + x, μ + y)` on homogeneous coordinates, returned in ambient form.
pub fn segment_point(x: &[BigRational], y: &[BigRational], lambda: &BigRational, mu: &BigRational) -> Vec<BigRational> {
    let p: Vec<BigRational> = homogenize(x)
        .iter()
        .zip(homogenize(y))
        .map(|(xi, yi)| (lambda + xi).max(mu + yi))
        .collect();
    let mut p = normalize(p);
    p.pop();
    p
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((p, q)) => p
            .trim()
            .parse::<BigInt>()
            .ok()
            .zip(q.trim().parse::<BigInt>().ok())
            .and_then(|(p, q)| {
                if q.is_zero() {
                    None
                } else {
                    Some(BigRational::new(p, q))
                }
            }),
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    };
    parsed.map_or_else(|| input(format!("not a rational number: {s:?}")), Ok)
}

/// Parses a comma-separated list of rationals; the empty string is the empty list.
pub fn parse_rational_list(s: &str) -> Result<Vec<BigRational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_slice(v).unwrap()
    }

    fn figure_arrangement() -> Arrangement {
        Arrangement::from_integers(&[1, 1], &[3, 0]).unwrap()
    }

    #[test]
    fn point_types() {
        let arr = figure_arrangement();
        let t = |x: &str, y: &str| type_of_point(&arr, &[q(x), q(y)]).unwrap();
        assert_eq!(t("2", "0"), TypePair::new(set(&[1]), set(&[2, 3])));
        assert_eq!(t("2", "-1"), TypePair::new(set(&[1]), set(&[3])));
        assert_eq!(t("1", "1/2"), TypePair::new(set(&[1, 3]), set(&[2])));
        assert!(type_of_point(&arr, &[q("1")]).is_err());
    }

    #[test]
    fn tie_graph() {
        let t = TypePair::new(set(&[1, 3]), set(&[2]));
        assert_eq!(t.tie_components(3), vec![set(&[1, 3]), set(&[2])]);
        assert_eq!(t.dim(3), 1);
        let t = TypePair::new(set(&[1, 2]), set(&[2, 3]));
        assert_eq!(t.dim(3), 0);
        assert_eq!(TypePair::new(set(&[1]), set(&[1])).dim(4), 3);
    }

    #[test]
    fn genericity_and_normalization() {
        assert!(Arrangement::generic(4).unwrap().is_generic());
        assert!(!Arrangement::from_integers(&[0, 0], &[1, 1]).unwrap().is_generic());
        let h = Arrangement::from_homogeneous(vec![q("2"), q("2")], vec![q("5"), q("2")]).unwrap();
        assert_eq!(h, Arrangement::from_integers(&[0], &[3]).unwrap());
    }

    #[test]
    fn segment_points() {
        let x = [q("2"), q("0")];
        let y = [q("-1"), q("3")];
        assert_eq!(segment_point(&x, &y, &q("0"), &q("-100")), x.to_vec());
        assert_eq!(segment_point(&x, &y, &q("-100"), &q("0")), y.to_vec());
        // max((2,0,0), (-1,3,0)) = (2,3,0).
        assert_eq!(segment_point(&x, &y, &q("0"), &q("0")), vec![q("2"), q("3")]);
    }

    #[test]
    fn rationals() {
        assert_eq!(q(" -3/6 "), BigRational::new((-1).into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_rational_list("1,2/3").unwrap().len(), 2);
        assert!(parse_rational_list("").unwrap().is_empty());
    }
}
