//! Reduced simplicial homology over a field.

use crate::linalg::{rank, Field, SparseRow};
use num_bigint::BigInt;
use std::collections::HashMap;

/// A finite simplicial complex whose faces are bitmasks over at most 64
/// vertices. The empty face is stored like any other; a complex without it
/// is the void complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    /// `by_size[s]` holds the faces with `s` vertices, sorted.
    by_size: Vec<Vec<u64>>,
}

impl SimplicialComplex {
    /// Builds the complex from an arbitrary face list, closing it downward.
    pub fn from_faces(faces: &[u64]) -> Self {
        let mut all: std::collections::BTreeSet<u64> = Default::default();
        let mut stack: Vec<u64> = faces.to_vec();
        while let Some(f) = stack.pop() {
            if all.insert(f) {
                let mut rest = f;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    stack.push(f ^ bit);
                }
            }
        }
        Self::from_closed(all)
    }

    /// Trusts that `faces` is already closed under taking subsets.
    pub fn from_closed(faces: impl IntoIterator<Item = u64>) -> Self {
        let mut by_size: Vec<Vec<u64>> = Vec::new();
        for f in faces {
            let s = f.count_ones() as usize;
            if by_size.len() <= s {
                by_size.resize(s + 1, Vec::new());
            }
            by_size[s].push(f);
        }
        for layer in &mut by_size {
            layer.sort_unstable();
            layer.dedup();
        }
        SimplicialComplex { by_size }
    }

    pub fn is_void(&self) -> bool {
        self.by_size.iter().all(Vec::is_empty)
    }

    pub fn faces_of_size(&self, s: usize) -> &[u64] {
        self.by_size.get(s).map_or(&[], Vec::as_slice)
    }

    /// Largest face size, or `None` for the void complex.
    pub fn max_face_size(&self) -> Option<usize> {
        self.by_size.iter().rposition(|l| !l.is_empty())
    }

    /// Boundary of faces of size `s` onto faces of size `s - 1`, one sparse
    /// row per `s`-face. Signs follow the vertex order.
    pub fn boundary_rows(&self, s: usize) -> Vec<SparseRow> {
        if s == 0 {
            return Vec::new();
        }
        let index: HashMap<u64, usize> = self
            .faces_of_size(s - 1)
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i))
            .collect();
        self.faces_of_size(s)
            .iter()
            .map(|&f| {
                let mut row: SparseRow = Vec::with_capacity(s);
                let mut rest = f;
                let mut pos = 0;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    let col = index[&(f ^ bit)];
                    row.push((col, BigInt::from(if pos % 2 == 0 { 1 } else { -1 })));
                    pos += 1;
                }
                row.sort_by_key(|e| e.0);
                row
            })
            .collect()
    }

    /// `dim H̃_{s-1}` for `s = 0..=max_face_size`, so entry 0 is `H̃_{-1}`.
    pub fn reduced_homology(&self, field: Field) -> Vec<usize> {
        let Some(top) = self.max_face_size() else {
            return Vec::new();
        };
        let ranks: Vec<usize> = (0..=top + 1).map(|s| rank(self.boundary_rows(s), field)).collect();
        (0..=top)
            .map(|s| self.faces_of_size(s).len() - ranks[s] - ranks[s + 1])
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn hom(faces: &[u64]) -> Vec<usize> {
        SimplicialComplex::from_faces(faces).reduced_homology(Field::Rational)
    }

    #[test]
    fn classic_spaces() {
        assert_eq!(hom(&[]), Vec::<usize>::new());
        assert_eq!(hom(&[0]), vec![1]);
        assert_eq!(hom(&[0b1]), vec![0, 0]);
        assert_eq!(hom(&[0b1, 0b10]), vec![0, 1]);
        // Hollow triangle is a circle.
        assert_eq!(hom(&[0b011, 0b110, 0b101]), vec![0, 0, 1]);
        assert_eq!(hom(&[0b111]), vec![0, 0, 0, 0]);
        // Boundary of a tetrahedron is a 2-sphere.
        assert_eq!(hom(&[0b0111, 0b1011, 0b1101, 0b1110]), vec![0, 0, 0, 1]);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // Six-vertex triangulation of RP^2.
        let tris: [[u32; 3]; 10] = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let faces: Vec<u64> = tris.iter().map(|t| t.iter().map(|&v| 1u64 << v).sum()).collect();
        let c = SimplicialComplex::from_faces(&faces);
        assert_eq!(c.reduced_homology(Field::Rational), vec![0, 0, 0, 0]);
        assert_eq!(c.reduced_homology(Field::Prime(2)), vec![0, 0, 1, 1]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let c = SimplicialComplex::from_faces(&[0b11111]);
        for s in 2..=5 {
            let outer = c.boundary_rows(s);
            let inner = c.boundary_rows(s - 1);
            for row in &outer {
                let mut acc = vec![BigInt::zero(); c.faces_of_size(s - 2).len()];
                for (mid, v) in row {
                    for (low, w) in &inner[*mid] {
                        acc[*low] += v * w;
                    }
                }
                assert!(acc.iter().all(Zero::is_zero));
            }
        }
    }
}
