//! Reduced simplicial homology of independence complexes, over `Q` or `GF(p)`.
//!
//! Ranks over `Q` use fraction-free (Bareiss) elimination on `i128`, retried
//! with big integers if an intermediate minor overflows.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::{Graph, VertexSet};

/// Coefficient field for homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Field {
    #[default]
    Rational,
    /// `GF(p)` for a prime `p < 2^31`.
    Prime(u32),
}

/// The prime used for characteristic cross-checks.
pub const CHECK_PRIME: u32 = 32749;

/// Faces of a simplicial complex grouped by cardinality; `faces[s]` holds the
/// faces with `s` vertices in increasing bitmask order. `faces[0] = [0]`.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    faces: Vec<Vec<u64>>,
}

impl FaceLattice {
    /// The independence complex of `g[w]`.
    pub fn independence(g: &Graph, w: VertexSet) -> Self {
        let adj = g.adjacency();
        let mut faces: Vec<Vec<u64>> = vec![vec![0]];
        // extend each face by vertices above its maximum, keeping order sorted per size
        let mut layer = vec![0u64];
        loop {
            let mut next = Vec::new();
            for &f in &layer {
                let above = if f == 0 {
                    !0
                } else {
                    u64::MAX.checked_shl(64 - f.leading_zeros()).unwrap_or(0)
                };
                let blocked = crate::graph::BitIter(f).fold(0u64, |acc, v| acc | adj[v]);
                let mut cand = w.bits() & above & !blocked;
                while cand != 0 {
                    let v = cand.trailing_zeros();
                    cand &= cand - 1;
                    next.push(f | 1 << v);
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_unstable();
            faces.push(next.clone());
            layer = next;
        }
        FaceLattice { faces }
    }

    /// Builds from an explicit list of faces (which must be closed under subsets).
    pub fn from_faces(list: &[u64]) -> Self {
        let top = list
            .iter()
            .map(|f| f.count_ones() as usize)
            .max()
            .unwrap_or(0);
        let mut faces = vec![Vec::new(); top + 1];
        for &f in list {
            faces[f.count_ones() as usize].push(f);
        }
        for layer in &mut faces {
            layer.sort_unstable();
            layer.dedup();
        }
        if faces[0].is_empty() {
            faces[0].push(0);
        }
        FaceLattice { faces }
    }

    /// `f_{s-1}` for `s = 0..`, i.e. the number of faces with `s` vertices.
    pub fn counts(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Rank of the boundary map from faces of size `s` to faces of size `s - 1`.
    fn boundary_rank(&self, s: usize, field: Field) -> usize {
        if s == 0 || s >= self.faces.len() {
            return 0;
        }
        let lower = &self.faces[s - 1];
        let upper = &self.faces[s];
        // one row per s-face; rank is invariant under transposition
        let rows: Vec<Vec<(usize, i8)>> = upper
            .iter()
            .map(|&f| {
                crate::graph::BitIter(f)
                    .enumerate()
                    .map(|(pos, v)| {
                        let idx = lower
                            .binary_search(&(f & !(1 << v)))
                            .expect("face lattice is closed under subsets");
                        (idx, if pos % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        match field {
            Field::Prime(p) => rank_mod_p(&rows, lower.len(), p),
            Field::Rational => rank_rational(&rows, lower.len()),
        }
    }

    /// `dim H~_k` for `k = -1, 0, ..., top`; entry `i` of the result is `k = i - 1`.
    pub fn reduced_homology(&self, field: Field) -> Vec<usize> {
        let counts = self.counts();
        let ranks: Vec<usize> = (0..=counts.len())
            .map(|s| self.boundary_rank(s, field))
            .collect();
        (0..counts.len())
            .map(|s| counts[s] - ranks[s] - ranks[s + 1])
            .collect()
    }
}

/// `dim H~_k(Ind(G[W]); Q)` indexed by `k + 1`; `W = {}` gives `[1]`.
pub fn reduced_homology_dims(g: &Graph, w: VertexSet) -> Vec<usize> {
    reduced_homology_dims_over(g, w, Field::Rational)
}

pub fn reduced_homology_dims_over(g: &Graph, w: VertexSet, field: Field) -> Vec<usize> {
    FaceLattice::independence(g, w).reduced_homology(field)
}

fn rank_mod_p(rows: &[Vec<(usize, i8)>], cols: usize, p: u32) -> usize {
    let p = p as u64;
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut dense = vec![0u64; cols];
            for &(c, s) in r {
                dense[c] = if s > 0 { 1 } else { p - 1 };
            }
            dense
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][col], p - 2, p);
        for x in &mut m[rank][col..] {
            *x = *x * inv % p;
        }
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for j in col..cols {
                row[j] = (row[j] + (p - factor) * pivot_row[j]) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

trait Exact: Clone {
    fn from_sign(s: i8) -> Self;
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// `(a * b - c * d) / e`, or `None` on overflow.
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self>;
}

impl Exact for i128 {
    fn from_sign(s: i8) -> Self {
        s as i128
    }
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let num = a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)?;
        debug_assert_eq!(num % e, 0, "Bareiss division must be exact");
        Some(num / e)
    }
}

impl Exact for BigInt {
    fn from_sign(s: i8) -> Self {
        BigInt::from(s)
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        Some((a * b - c * d) / e)
    }
}

fn rank_rational(rows: &[Vec<(usize, i8)>], cols: usize) -> usize {
    bareiss_rank::<i128>(rows, cols).unwrap_or_else(|| {
        bareiss_rank::<BigInt>(rows, cols).expect("big integers do not overflow")
    })
}

fn bareiss_rank<T: Exact>(rows: &[Vec<(usize, i8)>], cols: usize) -> Option<usize> {
    let mut m: Vec<Vec<T>> = rows
        .iter()
        .map(|r| {
            let mut dense = vec![T::zero(); cols];
            for &(c, s) in r {
                dense[c] = T::from_sign(s);
            }
            dense
        })
        .collect();
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            for j in col + 1..cols {
                row[j] = T::cross(&pivot_row[col], &row[j], &row[col], &pivot_row[j], &prev)?;
            }
            row[col] = T::zero();
        }
        prev = pivot_row[col].clone();
        rank += 1;
    }
    Some(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, e).unwrap()
    }

    fn trimmed(mut v: Vec<usize>) -> Vec<usize> {
        while v.len() > 1 && *v.last().unwrap() == 0 {
            v.pop();
        }
        v
    }

    #[test]
    fn empty_vertex_set_is_the_irrelevant_complex() {
        let k2 = g(2, &[(0, 1)]);
        assert_eq!(reduced_homology_dims(&k2, VertexSet::EMPTY), vec![1]);
    }

    #[test]
    fn two_adjacent_vertices_give_two_points() {
        let k2 = g(2, &[(0, 1)]);
        assert_eq!(reduced_homology_dims(&k2, k2.vertices()), vec![0, 1]);
    }

    #[test]
    fn pentagon_is_a_circle() {
        // Ind(C5) is the 5-cycle on the "distance two" pairs
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(reduced_homology_dims(&c5, c5.vertices()), vec![0, 0, 1]);
    }

    #[test]
    fn simplex_is_acyclic() {
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(trimmed(reduced_homology_dims(&e3, e3.vertices())), vec![0]);
    }

    #[test]
    fn disjoint_edges_give_spheres() {
        // Ind(D_r) is the join of r copies of S^0, i.e. S^{r-1}
        for r in 1..=4 {
            let e: Vec<_> = (0..r).map(|k| (2 * k, 2 * k + 1)).collect();
            let d = g(2 * r, &e);
            let h = reduced_homology_dims(&d, d.vertices());
            let mut expected = vec![0; r + 1];
            expected[r] = 1;
            assert_eq!(h, expected);
        }
    }

    #[test]
    fn real_projective_plane_separates_characteristics() {
        // six-vertex triangulation of RP^2 has H_1 = Z/2
        let tris: [[u64; 3]; 10] = [
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
        let mut faces = vec![0u64];
        for t in tris {
            let m: u64 = t.iter().map(|&v| 1u64 << v).sum();
            for sub in 0..8u64 {
                let f = (0..3)
                    .filter(|&i| sub >> i & 1 == 1)
                    .map(|i| 1u64 << t[i])
                    .sum();
                faces.push(f);
            }
            faces.push(m);
        }
        let lat = FaceLattice::from_faces(&faces);
        assert_eq!(trimmed(lat.reduced_homology(Field::Rational)), vec![0]);
        assert_eq!(lat.reduced_homology(Field::Prime(2)), vec![0, 0, 1, 1]);
        assert_eq!(
            trimmed(lat.reduced_homology(Field::Prime(CHECK_PRIME))),
            vec![0]
        );
    }

    #[test]
    fn big_integer_fallback_agrees() {
        // a dense matrix with large minors forces the i128 path to bail out
        let n = 40;
        let rows: Vec<Vec<(usize, i8)>> = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|j| (i * 7 + j * 3) % 5 != 0)
                    .map(|j| (j, if (i + j) % 3 == 0 { -1 } else { 1 }))
                    .collect()
            })
            .collect();
        let big = bareiss_rank::<BigInt>(&rows, n).unwrap();
        assert_eq!(rank_rational(&rows, n), big);
        assert_eq!(rank_mod_p(&rows, n, 1_000_000_007), big);
    }
}
