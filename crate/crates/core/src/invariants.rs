//! Homological invariants of `R/I(G)` read off the independence complex of `G`.
//!
//! The Hilbert series comes from the f-vector of `Ind(G)`. Graded Betti
//! numbers come from Hochster's formula,
//! `beta_{i,j} = sum_{|W| = j} dim H~_{j-i-1}(Ind(G[W]))`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    independence_number, induced_matching_number, low_bits, matching_number, BitIter, Graph,
    VertexSet,
};
use crate::homology::{reduced_homology_dims_over, Field};

/// Largest graph handled by the `2^n` Hochster sweep.
pub const HOCHSTER_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// Krull dimension of `R/I(G)`.
    pub dim: usize,
    /// `f[i]` is the number of independent sets of size `i` (so `f[0] = 1`).
    pub f: Vec<u64>,
    /// h-polynomial coefficients `h_0..h_s`, `h_s != 0`.
    pub h: Vec<i64>,
    pub deg_h: usize,
}

impl HilbertData {
    /// `dim_K [R/I]_i`, from the Taylor expansion of `h(t) / (1-t)^dim`.
    pub fn hilbert_function(&self, i: usize) -> i128 {
        if self.dim == 0 {
            return self.h.get(i).copied().unwrap_or(0) as i128;
        }
        self.h
            .iter()
            .enumerate()
            .take_while(|&(k, _)| k <= i)
            .map(|(k, &hk)| hk as i128 * binomial(i - k + self.dim - 1, self.dim - 1))
            .sum()
    }

    /// Coefficients of `h(t) * (1-t)^(power - dim)`, i.e. the numerator of the
    /// Hilbert series written over `(1-t)^power`. Needs `power >= dim`.
    pub fn numerator_over(&self, power: usize) -> Vec<i128> {
        assert!(
            power >= self.dim,
            "power {power} below dimension {}",
            self.dim
        );
        let h: Vec<i128> = self.h.iter().map(|&x| x as i128).collect();
        poly_mul(&h, &one_minus_t_pow(power - self.dim))
    }
}

/// Graded Betti numbers of `R/I(G)`; the unit `beta_{0,0}` is not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, usize), u64>,
    pub reg: usize,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `sum (-1)^i beta_{i,j} t^j`, including the `beta_{0,0}` unit, with
    /// trailing zeros (cancellations in the top degree) dropped.
    pub fn k_polynomial(&self) -> Vec<i128> {
        let top = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut p = vec![0i128; top + 1];
        p[0] = 1;
        for (&(i, j), &b) in &self.entries {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            p[j] += sign * b as i128;
        }
        trim(p)
    }

    /// `[[i, j, beta], ...]` in `(i, j)` order.
    pub fn triples(&self) -> Vec<[u64; 3]> {
        self.entries
            .iter()
            .map(|(&(i, j), &b)| [i as u64, j as u64, b])
            .collect()
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub(crate) fn one_minus_t_pow(e: usize) -> Vec<i128> {
    (0..=e)
        .map(|k| {
            if k % 2 == 0 {
                binomial(e, k)
            } else {
                -binomial(e, k)
            }
        })
        .collect()
}

/// Drops trailing zero coefficients, keeping at least one entry.
pub(crate) fn trim(mut p: Vec<i128>) -> Vec<i128> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn check_size(g: &Graph, what: &'static str) -> Result<()> {
    if g.n() > HOCHSTER_LIMIT {
        return Err(Error::TooLarge {
            what,
            n: g.n(),
            limit: HOCHSTER_LIMIT,
        });
    }
    Ok(())
}

/// `f[i]` = number of independent sets of size `i`, for `i = 0..=dim`.
pub fn independence_f_vector(g: &Graph) -> Vec<u64> {
    fn walk(adj: &[u64], cand: u64, size: usize, counts: &mut Vec<u64>) {
        if counts.len() <= size {
            counts.resize(size + 1, 0);
        }
        counts[size] += 1;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            walk(adj, rest & !adj[v], size + 1, counts);
        }
    }
    let mut counts = Vec::new();
    walk(g.adjacency(), low_bits(g.n()), 0, &mut counts);
    counts
}

pub fn hilbert_data(g: &Graph) -> HilbertData {
    let f = independence_f_vector(g);
    let dim = f.len() - 1;
    let h: Vec<i128> = (0..=dim)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(dim - i, k - i) * f[i] as i128
                })
                .sum()
        })
        .collect();
    let h = trim(h);
    debug_assert!(*h.last().unwrap() != 0);
    HilbertData {
        dim,
        deg_h: h.len() - 1,
        h: h.into_iter()
            .map(|x| i64::try_from(x).expect("h-coefficient fits in i64"))
            .collect(),
        f,
    }
}

/// Hochster's formula summed over every vertex subset.
pub fn betti_table(g: &Graph) -> Result<BettiTable> {
    betti_table_over(g, Field::Rational)
}

pub fn betti_table_over(g: &Graph, field: Field) -> Result<BettiTable> {
    check_size(g, "betti_table")?;
    let adj = g.adjacency();
    let mut table = BettiTable::default();
    for w in 1..=low_bits(g.n()) {
        // an isolated vertex of G[W] is a cone point of Ind(G[W])
        if BitIter(w).any(|v| adj[v] & w == 0) {
            continue;
        }
        let j = w.count_ones() as usize;
        let dims = reduced_homology_dims_over(g, VertexSet(w), field);
        for (idx, &b) in dims.iter().enumerate() {
            // idx = k + 1 and i = j - k - 1
            if b > 0 {
                *table.entries.entry((j - idx, j)).or_insert(0) += b as u64;
            }
        }
    }
    table.reg = table.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
    Ok(table)
}

/// Some `u != v` in `W` has `N_W(u) ⊆ N_W(v)`, so `Ind(G[W])` deformation
/// retracts onto `Ind(G[W - v])`; isolated vertices are the case `N_W(u) = {}`.
fn foldable(adj: &[u64], w: u64) -> bool {
    BitIter(w).any(|u| {
        let nu = adj[u] & w;
        nu == 0 || BitIter(w & !(1 << u)).any(|v| nu & !adj[v] == 0)
    })
}

/// `max{k + 1 : H~_k(Ind(G[W])) != 0 for some W}`. Subsets that fold onto a
/// smaller subset are skipped, since their homology already appears there.
pub fn regularity(g: &Graph) -> Result<usize> {
    regularity_over(g, Field::Rational)
}

pub fn regularity_over(g: &Graph, field: Field) -> Result<usize> {
    check_size(g, "regularity")?;
    let adj = g.adjacency();
    let mut reg = 0;
    for w in 1..=low_bits(g.n()) {
        if foldable(adj, w) {
            continue;
        }
        let dims = reduced_homology_dims_over(g, VertexSet(w), field);
        if let Some(top) = dims.iter().rposition(|&b| b > 0) {
            reg = reg.max(top);
        }
    }
    Ok(reg)
}

/// `(reg R/I(G), deg h_{R/I(G)})`.
pub fn rd_pair(g: &Graph) -> Result<(usize, usize)> {
    Ok((regularity(g)?, hilbert_data(g).deg_h))
}

/// The per-graph numbers the census needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub reg: usize,
    pub deg_h: usize,
    pub dim: usize,
    pub im: usize,
    pub m: usize,
}

pub fn summarize(g: &Graph) -> Result<GraphSummary> {
    let hd = hilbert_data(g);
    Ok(GraphSummary {
        reg: regularity(g)?,
        deg_h: hd.deg_h,
        dim: hd.dim,
        im: induced_matching_number(g),
        m: matching_number(g),
    })
}

/// Full machine-readable invariant record; field order is the output key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub graph6: String,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub dim: usize,
    pub f_vector: Vec<u64>,
    pub h_coeffs: Vec<i64>,
    pub deg_h: usize,
    pub reg: usize,
    pub im: usize,
    pub m: usize,
    pub betti: Vec<[u64; 3]>,
}

impl InvariantRecord {
    pub fn compute(g: &Graph) -> Result<Self> {
        let hd = hilbert_data(g);
        let betti = betti_table(g)?;
        debug_assert_eq!(hd.dim, independence_number(g));
        Ok(InvariantRecord {
            graph6: g.to_graph6(),
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            dim: hd.dim,
            f_vector: hd.f,
            h_coeffs: hd.h,
            deg_h: hd.deg_h,
            reg: betti.reg,
            im: induced_matching_number(g),
            m: matching_number(g),
            betti: betti.triples(),
        })
    }
}
