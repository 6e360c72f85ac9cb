//! Cameron-Walker graphs: recognition, structural decomposition, and the
//! closed-form invariants in terms of the decomposition.
//!
//! Recognition is definitional (`im = m`, not a star, not a star triangle).
//! Decomposition is structural and independent of it: degree-one vertices are
//! leaves, adjacent degree-two pairs with a common neighbour of degree above two
//! are pendant triangles, and what remains must be a connected bipartite core
//! whose leaf-carrying vertices form one side. A core vertex of degree one with
//! no triangle is indistinguishable from a leaf and is treated as one; the
//! formulas below do not change under that move.

use serde::{Deserialize, Serialize};

use crate::constructions::CwSpec;
use crate::error::{Error, Result};
use crate::graph::{induced_matching_number, matching_number, BitIter, Graph};
use crate::invariants::{hilbert_data, regularity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexRole {
    CoreV(usize),
    CoreW(usize),
    /// leaf hanging off `v_i`
    Leaf(usize),
    /// one of the two degree-two vertices of a triangle on `w_j`
    Triangle(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CwDecomposition {
    pub m: usize,
    pub p: usize,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    /// `(i, j)` joins `v_i` and `w_j`.
    pub core_edges: Vec<(usize, usize)>,
    /// role of every vertex of the decomposed graph
    pub roles: Vec<VertexRole>,
}

/// The JSON form of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CwRecord {
    pub m: usize,
    pub p: usize,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub core_edges: Vec<[usize; 2]>,
}

impl CwDecomposition {
    pub fn to_spec(&self) -> CwSpec {
        CwSpec {
            core_edges: self.core_edges.clone(),
            s: self.s.clone(),
            t: self.t.clone(),
        }
    }

    pub fn record(&self) -> CwRecord {
        CwRecord {
            m: self.m,
            p: self.p,
            s: self.s.clone(),
            t: self.t.clone(),
            core_edges: self.core_edges.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }

    /// `#{j : t_j >= 1}`.
    pub fn attached(&self) -> usize {
        self.t.iter().filter(|&&t| t > 0).count()
    }

    pub fn pendant_triangles(&self) -> usize {
        self.t.iter().sum()
    }
}

/// `(n, dim, deg h, reg)` predicted from a decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CwFormula {
    pub n: usize,
    pub dim: usize,
    pub deg_h: usize,
    pub reg: usize,
}

pub fn is_cameron_walker(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.edge_count() == 0 || g.is_star() || g.is_star_triangle() {
        return Ok(false);
    }
    Ok(induced_matching_number(g) == matching_number(g))
}

pub fn decompose_cw(g: &Graph) -> Result<CwDecomposition> {
    if !is_cameron_walker(g)? {
        return Err(Error::NotCameronWalker);
    }
    decompose_structure(g)
}

/// The structural stripping step alone, without the definitional check.
pub fn decompose_structure(g: &Graph) -> Result<CwDecomposition> {
    let n = g.n();
    let adj = g.adjacency();
    let fail = |msg: String| Err(Error::Decomposition(msg));

    let mut leaf_of = vec![None; n];
    let mut leaves = 0u64;
    let mut supports = 0u64;
    for v in 0..n {
        if g.degree(v) == 1 {
            let u = adj[v].trailing_zeros() as usize;
            if g.degree(u) == 1 {
                return fail(format!("edge {{{v}, {u}}} is a component"));
            }
            leaf_of[v] = Some(u);
            leaves |= 1 << v;
            supports |= 1 << u;
        }
    }

    let mut triangle_of = vec![None; n];
    let mut tri_vertices = 0u64;
    let mut anchors = 0u64;
    for a in 0..n {
        if g.degree(a) != 2 || tri_vertices >> a & 1 == 1 {
            continue;
        }
        for b in BitIter(adj[a]) {
            if g.degree(b) != 2 || b == a {
                continue;
            }
            let common = adj[a] & adj[b];
            if common.count_ones() != 1 {
                continue;
            }
            let c = common.trailing_zeros() as usize;
            if g.degree(c) > 2 {
                triangle_of[a] = Some(c);
                triangle_of[b] = Some(c);
                tri_vertices |= 1 << a | 1 << b;
                anchors |= 1 << c;
            }
        }
    }

    let core = crate::graph::low_bits(n) & !leaves & !tri_vertices;
    if core == 0 {
        return fail("nothing left after stripping leaves and triangles".into());
    }
    if supports & anchors != 0 {
        let v = (supports & anchors).trailing_zeros();
        return fail(format!(
            "vertex {v} carries both a leaf and a pendant triangle"
        ));
    }
    let first = core.trailing_zeros() as usize;
    if g.component_within(first, core) != core {
        return fail("core is disconnected".into());
    }
    let v_side = supports;
    let w_side = core & !supports;
    if v_side == 0 || w_side == 0 {
        return fail("core has an empty side".into());
    }
    for v in BitIter(v_side) {
        if adj[v] & v_side != 0 {
            return fail(format!(
                "leaf-carrying vertex {v} has a leaf-carrying neighbour"
            ));
        }
    }
    for w in BitIter(w_side) {
        if adj[w] & w_side != 0 {
            return fail(format!(
                "vertices {w} and {} on the triangle side are adjacent",
                (adj[w] & w_side).trailing_zeros()
            ));
        }
    }

    let v_list: Vec<usize> = BitIter(v_side).collect();
    let w_list: Vec<usize> = BitIter(w_side).collect();
    let mut roles = vec![VertexRole::Leaf(0); n];
    let mut index = vec![usize::MAX; n];
    for (i, &v) in v_list.iter().enumerate() {
        roles[v] = VertexRole::CoreV(i);
        index[v] = i;
    }
    for (j, &w) in w_list.iter().enumerate() {
        roles[w] = VertexRole::CoreW(j);
        index[w] = j;
    }
    let mut s = vec![0; v_list.len()];
    let mut t2 = vec![0; w_list.len()];
    for x in 0..n {
        if let Some(u) = leaf_of[x] {
            s[index[u]] += 1;
            roles[x] = VertexRole::Leaf(index[u]);
        } else if let Some(c) = triangle_of[x] {
            t2[index[c]] += 1;
            roles[x] = VertexRole::Triangle(index[c]);
        }
    }
    let core_edges = v_list
        .iter()
        .enumerate()
        .flat_map(|(i, &v)| BitIter(adj[v] & w_side).map(move |w| (i, w)))
        .map(|(i, w)| (i, index[w]))
        .collect();
    Ok(CwDecomposition {
        m: v_list.len(),
        p: w_list.len(),
        s,
        t: t2.into_iter().map(|x| x / 2).collect(),
        core_edges,
        roles,
    })
}

pub fn cw_formula_invariants(dec: &CwDecomposition) -> CwFormula {
    formula_from_counts(&dec.s, &dec.t)
}

/// The same formulas read off a construction spec.
pub fn spec_formula(spec: &CwSpec) -> CwFormula {
    formula_from_counts(&spec.s, &spec.t)
}

fn formula_from_counts(s: &[usize], t: &[usize]) -> CwFormula {
    let sum_s: usize = s.iter().sum();
    let sum_t: usize = t.iter().sum();
    let dim = sum_s + t.iter().map(|&t| t.max(1)).sum::<usize>();
    CwFormula {
        n: s.len() + t.len() + sum_s + 2 * sum_t,
        dim,
        deg_h: dim,
        reg: s.len() + sum_t,
    }
}

/// `e = n - r - d` against the decomposition's triangle counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PendantReport {
    pub e: usize,
    /// `#{j : t_j >= 1}`
    pub attached: usize,
    /// `sum t_j`
    pub total: usize,
}

impl PendantReport {
    /// `e` equals the number of `w_j` carrying triangles, bounds the triangle
    /// count from below, and vanishes only without pendant triangles.
    pub fn holds(&self) -> bool {
        self.e == self.attached && self.e <= self.total && (self.e != 0 || self.total == 0)
    }
}

pub fn pendant_triangle_check(g: &Graph) -> Result<PendantReport> {
    let dec = decompose_cw(g)?;
    let r = regularity(g)?;
    let d = hilbert_data(g).deg_h;
    let e = g
        .n()
        .checked_sub(r + d)
        .ok_or_else(|| Error::Decomposition(format!("r + d = {} exceeds n = {}", r + d, g.n())))?;
    Ok(PendantReport {
        e,
        attached: dec.attached(),
        total: dec.pendant_triangles(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_cw, build_g_abc, build_ribbon, build_star, CwParams};
    use crate::graph::canonical_form;
    use crate::invariants::rd_pair;

    fn gabc(a: usize, b: usize, c: usize) -> Graph {
        build_g_abc(CwParams::new(a, b, c).unwrap()).unwrap()
    }

    #[test]
    fn recognition() {
        // the ribbon is two triangles on a common vertex
        assert!(!is_cameron_walker(&build_ribbon()).unwrap());
        assert!(!is_cameron_walker(&build_star(4).unwrap()).unwrap());
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(!is_cameron_walker(&c5).unwrap());
        assert!(is_cameron_walker(&gabc(2, 3, 2)).unwrap());
        assert!(!is_cameron_walker(&gabc(1, 1, 0)).unwrap());
        let d2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(is_cameron_walker(&d2), Err(Error::Disconnected));
    }

    #[test]
    fn decompose_g232() {
        let dec = decompose_cw(&gabc(2, 3, 2)).unwrap();
        assert_eq!((dec.m, dec.p), (2, 3));
        assert_eq!(dec.s, vec![1, 1]);
        assert_eq!(dec.t, vec![1, 1, 0]);
        assert_eq!(dec.core_edges.len(), 6);
        assert_eq!(
            cw_formula_invariants(&dec),
            CwFormula {
                n: 11,
                dim: 5,
                deg_h: 5,
                reg: 4
            }
        );
    }

    #[test]
    fn formula_examples() {
        let one = |s: usize, t: usize| CwDecomposition {
            m: 1,
            p: 1,
            s: vec![s],
            t: vec![t],
            core_edges: vec![(0, 0)],
            roles: vec![],
        };
        assert_eq!(
            cw_formula_invariants(&one(2, 1)),
            CwFormula {
                n: 6,
                dim: 3,
                deg_h: 3,
                reg: 2
            }
        );
        assert_eq!(
            cw_formula_invariants(&one(1, 1)),
            CwFormula {
                n: 5,
                dim: 2,
                deg_h: 2,
                reg: 2
            }
        );
        for (s, t) in [(2, 1), (1, 1)] {
            let g = build_cw(&one(s, t).to_spec()).unwrap();
            let f = cw_formula_invariants(&one(s, t));
            assert_eq!(rd_pair(&g).unwrap(), (f.reg, f.deg_h));
        }
    }

    #[test]
    fn round_trip_through_builder() {
        let spec = CwSpec {
            // w0 has no triangles but two core neighbours, so it stays in the core
            core_edges: vec![(0, 0), (0, 1), (1, 0), (1, 1), (1, 2)],
            s: vec![2, 1],
            t: vec![0, 2, 1],
        };
        let g = build_cw(&spec).unwrap();
        assert!(is_cameron_walker(&g).unwrap());
        let dec = decompose_cw(&g).unwrap();
        assert_eq!(dec.to_spec(), spec);
        let relabelled = g.permuted(&(0..g.n()).rev().collect::<Vec<_>>());
        let dec2 = decompose_cw(&relabelled).unwrap();
        assert_eq!(
            canonical_form(&build_cw(&dec2.to_spec()).unwrap()),
            canonical_form(&g)
        );
    }

    #[test]
    fn degree_one_core_vertices_become_leaves() {
        // w_0 hangs off v_0 only and has no triangle
        let spec = CwSpec {
            core_edges: vec![(0, 0), (0, 1), (1, 1)],
            s: vec![1, 1],
            t: vec![0, 1],
        };
        let g = build_cw(&spec).unwrap();
        let dec = decompose_cw(&g).unwrap();
        assert_eq!(
            (dec.m, dec.p, dec.s.clone(), dec.t.clone()),
            (2, 1, vec![2, 1], vec![1])
        );
        assert_eq!(
            cw_formula_invariants(&dec),
            cw_formula_invariants(&CwDecomposition {
                m: 2,
                p: 2,
                s: spec.s.clone(),
                t: spec.t.clone(),
                core_edges: spec.core_edges.clone(),
                roles: vec![],
            })
        );
        assert_eq!(
            canonical_form(&build_cw(&dec.to_spec()).unwrap()),
            canonical_form(&g)
        );
    }

    #[test]
    fn pendant_examples() {
        let r = pendant_triangle_check(&gabc(2, 4, 0)).unwrap();
        assert_eq!(
            r,
            PendantReport {
                e: 0,
                attached: 0,
                total: 0
            }
        );
        let r = pendant_triangle_check(&gabc(1, 4, 1)).unwrap();
        assert_eq!(
            r,
            PendantReport {
                e: 1,
                attached: 1,
                total: 1
            }
        );
        let r = pendant_triangle_check(&gabc(1, 1, 1)).unwrap();
        assert_eq!(r.e, 1);
        assert!(r.holds());
        assert_eq!(
            pendant_triangle_check(&build_ribbon()),
            Err(Error::NotCameronWalker)
        );
    }
}
