//! Comparisons of a census against the lattice regions.

use serde::Serialize;

use super::census::RdCensus;
use super::lattice::{lattice_a, lattice_b, lattice_cw};
use crate::constructions::realize_cw;
use crate::invariants::rd_pair;

type Pairs = Vec<(usize, usize)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SandwichReport {
    pub n: usize,
    /// points of `A(n)` the census did not realise
    pub a_not_realized: Pairs,
    /// realised points outside `B(n)`
    pub realized_outside_b: Pairs,
    /// realised points of `B(n) \ A(n)`
    pub band_realized: Pairs,
    /// unrealised points of `B(n) \ A(n)`
    pub band_missing: Pairs,
}

impl SandwichReport {
    pub fn holds(&self) -> bool {
        self.a_not_realized.is_empty() && self.realized_outside_b.is_empty()
    }
}

/// Checks `A(n) ⊆ RD(n) ⊆ B(n)` on a complete census.
pub fn verify_sandwich(census: &RdCensus) -> SandwichReport {
    let n = census.n;
    let rd = census.pairs();
    let (a, b) = (lattice_a(n), lattice_b(n));
    // n <= 2 has no B(n) to speak of; the single edge sits at (1, 1)
    let outside_b = if n >= 3 {
        rd.difference(&b).copied().collect()
    } else {
        Vec::new()
    };
    let band: Vec<_> = b.difference(&a).copied().collect();
    SandwichReport {
        n,
        a_not_realized: a.difference(&rd).copied().collect(),
        realized_outside_b: outside_b,
        band_realized: band.iter().filter(|p| rd.contains(p)).copied().collect(),
        band_missing: band.iter().filter(|p| !rd.contains(p)).copied().collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CwReport {
    pub n: usize,
    /// lattice points with no Cameron-Walker graph in the census
    pub missing: Pairs,
    /// Cameron-Walker pairs outside the region
    pub unexpected: Pairs,
    /// lattice points whose constructed witness computes to a different pair
    pub bad_witnesses: Vec<WitnessMismatch>,
    pub lattice_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessMismatch {
    pub r: usize,
    pub d: usize,
    pub got: Option<(usize, usize)>,
    pub error: Option<String>,
}

impl CwReport {
    pub fn holds(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty() && self.bad_witnesses.is_empty()
    }
}

/// Compares the census's Cameron-Walker pairs with the region and checks the
/// constructed witness of every region point.
pub fn verify_cw_characterization(census: &RdCensus) -> CwReport {
    let n = census.n;
    let lattice = lattice_cw(n);
    let found = census.cw_pairs();
    CwReport {
        n,
        missing: lattice.difference(&found).copied().collect(),
        unexpected: found.difference(&lattice).copied().collect(),
        bad_witnesses: check_cw_witnesses(n),
        lattice_size: lattice.len(),
    }
}

/// Builds the witness for every point of the region on `n` vertices and
/// recomputes its pair; returns the failures.
pub fn check_cw_witnesses(n: usize) -> Vec<WitnessMismatch> {
    lattice_cw(n)
        .into_iter()
        .filter_map(|(r, d)| {
            let got = realize_cw(r, d, n).and_then(|g| {
                if g.n() != n {
                    return Err(crate::Error::InvalidArgument(format!(
                        "witness has {} vertices",
                        g.n()
                    )));
                }
                rd_pair(&g)
            });
            match got {
                Ok(p) if p == (r, d) => None,
                Ok(p) => Some(WitnessMismatch {
                    r,
                    d,
                    got: Some(p),
                    error: None,
                }),
                Err(e) => Some(WitnessMismatch {
                    r,
                    d,
                    got: None,
                    error: Some(e.to_string()),
                }),
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvexityReport {
    pub n: usize,
    /// `(r, d)` holes strictly inside a row's realised range
    pub row_gaps: Pairs,
    /// `(r, d)` holes strictly inside a column's realised range
    pub column_gaps: Pairs,
}

impl ConvexityReport {
    pub fn convex(&self) -> bool {
        self.row_gaps.is_empty() && self.column_gaps.is_empty()
    }
}

/// Whether every row and column of the realised set is an interval.
pub fn convexity_probe(census: &RdCensus) -> ConvexityReport {
    let pts = census.pairs();
    let gaps = |key: fn(&(usize, usize)) -> (usize, usize)| {
        let mut by_line = std::collections::BTreeMap::<usize, Vec<usize>>::new();
        for p in &pts {
            let (line, pos) = key(p);
            by_line.entry(line).or_default().push(pos);
        }
        let mut out = Vec::new();
        for (line, pos) in by_line {
            let (lo, hi) = (pos[0], pos[pos.len() - 1]);
            out.extend((lo..=hi).filter(|x| !pos.contains(x)).map(|x| (line, x)));
        }
        out
    };
    let row_gaps = gaps(|&(r, d)| (r, d));
    let column_gaps = gaps(|&(r, d)| (d, r))
        .into_iter()
        .map(|(d, r)| (r, d))
        .collect();
    ConvexityReport {
        n: census.n,
        row_gaps,
        column_gaps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::{compute_census, enumerate_connected, RdPoint};

    fn census(n: usize) -> RdCensus {
        compute_census(n, &enumerate_connected(n).unwrap()).unwrap()
    }

    #[test]
    fn five_vertices() {
        let c = census(5);
        let s = verify_sandwich(&c);
        assert!(s.holds(), "{s:?}");
        let cw = verify_cw_characterization(&c);
        assert!(cw.holds(), "{cw:?}");
        assert_eq!(cw.lattice_size, 2);
        assert!(convexity_probe(&c).convex());
    }

    #[test]
    fn witnesses_up_to_twelve() {
        for n in 5..=12 {
            assert!(check_cw_witnesses(n).is_empty(), "n = {n}");
        }
    }

    #[test]
    fn gaps_are_reported() {
        let pt = |r, d| RdPoint {
            r,
            d,
            multiplicity: 1,
            witness: String::new(),
            witness_index: 0,
        };
        let mut c = RdCensus::empty(9);
        c.points = vec![pt(1, 1), pt(1, 4), pt(3, 1)];
        let rep = convexity_probe(&c);
        assert_eq!(rep.row_gaps, vec![(1, 2), (1, 3)]);
        assert_eq!(rep.column_gaps, vec![(2, 1)]);
        let s = verify_sandwich(&c);
        assert!(!s.holds());
        assert!(s.a_not_realized.contains(&(2, 2)));
    }
}
