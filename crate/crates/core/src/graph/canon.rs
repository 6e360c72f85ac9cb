//! Canonical labelling by partition refinement plus individualisation.
//!
//! The search tree individualises vertices of the first non-singleton cell and
//! refines to an equitable partition; every discrete leaf yields a relabelling,
//! and the lexicographically smallest relabelled adjacency wins. Two vertices
//! of a cell with identical neighbourhoods (twins) are swapped by an
//! automorphism that fixes the current node, so only one of them is explored.

use super::{BitIter, Graph};

/// Isomorphism-invariant key: vertex count followed by the canonical adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    let rows = canonical_rows(g.adjacency()).0;
    let width = n.div_ceil(8);
    let mut bytes = Vec::with_capacity(1 + n * width);
    bytes.push(n as u8);
    for row in rows {
        bytes.extend_from_slice(&row.to_le_bytes()[..width]);
    }
    CanonicalForm(bytes)
}

/// The canonically relabelled copy of `g`; isomorphic inputs give equal outputs.
pub fn canonical_graph(g: &Graph) -> Graph {
    Graph::from_adjacency_unchecked(canonical_rows(g.adjacency()).0)
}

/// Canonical adjacency rows and the labelling `perm` (old -> new) producing them.
pub(crate) fn canonical_rows(adj: &[u64]) -> (Vec<u64>, Vec<usize>) {
    let n = adj.len();
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut cells = vec![super::low_bits(n)];
    refine(adj, &mut cells);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(adj, cells, &mut best);
    best.expect("search visits at least one leaf")
}

fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    let mut scratch: Vec<(u32, usize)> = Vec::new();
    let mut changed = true;
    while changed {
        changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut c = 0;
            while c < cells.len() {
                let cell = cells[c];
                if cell.count_ones() == 1 {
                    c += 1;
                    continue;
                }
                scratch.clear();
                scratch.extend(BitIter(cell).map(|v| ((adj[v] & splitter).count_ones(), v)));
                let first = scratch[0].0;
                if scratch.iter().all(|&(k, _)| k == first) {
                    c += 1;
                    continue;
                }
                scratch.sort_unstable();
                let mut pieces: Vec<u64> = Vec::new();
                let mut prev = u32::MAX;
                for &(k, v) in &scratch {
                    if k != prev {
                        pieces.push(0);
                        prev = k;
                    }
                    *pieces.last_mut().unwrap() |= 1 << v;
                }
                let added = pieces.len();
                cells.splice(c..=c, pieces);
                c += added;
                changed = true;
            }
            s += 1;
        }
    }
}

fn search(adj: &[u64], cells: Vec<u64>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
        let n = adj.len();
        let mut perm = vec![0usize; n];
        for (i, c) in cells.iter().enumerate() {
            perm[c.trailing_zeros() as usize] = i;
        }
        let mut rows = vec![0u64; n];
        for v in 0..n {
            rows[perm[v]] = BitIter(adj[v]).fold(0, |acc, u| acc | 1 << perm[u]);
        }
        if best.as_ref().is_none_or(|(b, _)| rows < *b) {
            *best = Some((rows, perm));
        }
        return;
    };
    let cell = cells[target];
    let mut explored: Vec<usize> = Vec::new();
    for v in BitIter(cell) {
        let twin = explored.iter().any(|&u| {
            let mask = !(1u64 << u | 1u64 << v);
            adj[u] & mask == adj[v] & mask
        });
        if twin {
            continue;
        }
        explored.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(1 << v);
        next.push(cell & !(1 << v));
        next.extend_from_slice(&cells[target + 1..]);
        refine(adj, &mut next);
        search(adj, next, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, e).unwrap()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn relabelled_paths_agree() {
        let a = g(3, &[(0, 1), (1, 2)]);
        let b = g(3, &[(1, 0), (0, 2)]);
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn c4_and_d2_differ() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let d2 = g(4, &[(0, 1), (2, 3)]);
        assert_ne!(canonical_form(&c4), canonical_form(&d2));
    }

    #[test]
    fn every_labelling_of_the_paw_has_one_key() {
        let paw = g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        let key = canonical_form(&paw);
        for p in permutations(4) {
            assert_eq!(canonical_form(&paw.permuted(&p)), key);
        }
    }

    #[test]
    fn canonical_graph_is_isomorphic_copy() {
        let paw = g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        let c = canonical_graph(&paw);
        assert_eq!(c.degree_sequence(), paw.degree_sequence());
        assert_eq!(canonical_graph(&c), c);
    }

    #[test]
    fn random_relabellings_of_regular_graphs() {
        let petersen = g(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        );
        let c10 = g(10, &(0..10).map(|i| (i, (i + 1) % 10)).collect::<Vec<_>>());
        let prism = g(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 9),
                (9, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        );
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for graph in [&petersen, &c10, &prism, &Graph::empty(10).unwrap()] {
            let key = canonical_form(graph);
            for _ in 0..100 {
                let mut p: Vec<usize> = (0..10).collect();
                p.shuffle(&mut rng);
                assert_eq!(canonical_form(&graph.permuted(&p)), key);
            }
        }
        assert_ne!(canonical_form(&petersen), canonical_form(&prism));
    }

    #[test]
    fn isomorphism_classes_on_five_vertices() {
        // 34 isomorphism classes of graphs on 5 vertices
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        let mut keys = std::collections::BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let e: Vec<_> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            keys.insert(canonical_form(&g(5, &e)));
        }
        assert_eq!(keys.len(), 34);
    }
}
