//! Integer points of the regions bounding the census, and the closed-form
//! count of the Cameron-Walker region.

use std::collections::BTreeSet;

use serde::Serialize;

pub type Lattice = BTreeSet<(usize, usize)>;

/// `1 <= r < floor((n-1)/2)`, `1 <= d <= n - r`, `r - d <= 1`: pairs known to
/// be realised.
pub fn lattice_a(n: usize) -> Lattice {
    let top = n.saturating_sub(1) / 2;
    (1..top)
        .flat_map(|r| (r.saturating_sub(1).max(1)..=n - r).map(move |d| (r, d)))
        .collect()
}

/// `1 <= r <= floor((n-1)/2)`, `1 <= d <= n - r`: the outer bound.
pub fn lattice_b(n: usize) -> Lattice {
    let top = n.saturating_sub(1) / 2;
    (1..=top)
        .flat_map(|r| (1..=n - r).map(move |d| (r, d)))
        .collect()
}

/// `2 <= r <= floor((n-1)/2)`, `r <= d <= n - r`, `d >= n + 1 - 2r`.
pub fn lattice_cw(n: usize) -> Lattice {
    let top = n.saturating_sub(1) / 2;
    (2..=top)
        .flat_map(|r| ((n + 1).saturating_sub(2 * r).max(r)..=n - r).map(move |d| (r, d)))
        .collect()
}

/// Number of Cameron-Walker pairs on `n >= 5` vertices, in closed form.
///
/// With `g = floor((n+1)/3)` and `f = (n+1) mod 3`, four times the count is
/// a quadratic in `g` that depends on `f` and the parity of `g`.
pub fn count_cw(n: usize) -> u64 {
    assert!(n >= 5, "count_cw needs n >= 5, got {n}");
    let g = ((n + 1) / 3) as i64;
    let times4 = match ((n + 1) % 3, g % 2 == 0) {
        (0, true) => 3 * g * g - 4,
        (0, false) => 3 * (g * g - 1) - 4,
        (1, true) => g * (3 * g + 2) - 8,
        (1, false) => (3 * g - 1) * (g + 1) - 4,
        (_, true) => g * (3 * g + 4) - 4,
        (_, false) => 3 * g * g + 4 * g - 3 - 4,
    };
    debug_assert_eq!(times4 % 4, 0);
    (times4 / 4) as u64
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticsRow {
    pub n: usize,
    pub count: u64,
    /// `count / n^2`
    pub ratio: f64,
    /// `|ratio - 1/12|`
    pub deviation: f64,
    /// `3 / n`, the tolerance checked for `n >= 20`
    pub bound: f64,
    pub within_bound: bool,
    /// `count / |B(n)|`, a lower proxy for the share of realisable pairs
    pub cw_over_b: f64,
    /// `count / |A(n)|`, an upper proxy for the same share
    pub cw_over_a: f64,
}

/// Table of the Cameron-Walker count against `n^2` and the two lattice
/// proxies for `5 <= n <= n_max`. Diagnostic only.
pub fn asymptotics_probe(n_max: usize) -> Vec<AsymptoticsRow> {
    (5..=n_max)
        .map(|n| {
            let count = count_cw(n);
            let ratio = count as f64 / (n * n) as f64;
            let deviation = (ratio - 1.0 / 12.0).abs();
            let bound = 3.0 / n as f64;
            let (a, b) = (region_size_a(n), region_size_b(n));
            AsymptoticsRow {
                n,
                count,
                ratio,
                deviation,
                bound,
                within_bound: n < 20 || deviation <= bound,
                cw_over_b: count as f64 / b as f64,
                cw_over_a: if a == 0 {
                    f64::NAN
                } else {
                    count as f64 / a as f64
                },
            }
        })
        .collect()
}

// Row sums instead of materialising the sets, so large n stays cheap.
fn region_size_a(n: usize) -> u64 {
    let top = n.saturating_sub(1) / 2;
    (1..top)
        .map(|r| (n - r + 1 - r.saturating_sub(1).max(1)) as u64)
        .sum()
}

fn region_size_b(n: usize) -> u64 {
    let top = n.saturating_sub(1) / 2;
    (1..=top).map(|r| (n - r) as u64).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_regions() {
        assert_eq!(
            lattice_cw(8).into_iter().collect::<Vec<_>>(),
            vec![(2, 5), (2, 6), (3, 3), (3, 4), (3, 5)]
        );
        assert_eq!(
            lattice_cw(5).into_iter().collect::<Vec<_>>(),
            vec![(2, 2), (2, 3)]
        );
        assert_eq!(lattice_cw(9).len(), 7);
        assert_eq!(lattice_b(8).len(), 18);
        assert!(lattice_b(8).iter().all(|&(r, d)| r <= 3 && d <= 8 - r));
        // r < 3 at n = 8; the row r = 2 starts at d = 1
        assert_eq!(lattice_a(8).len(), 7 + 6);
        assert!(lattice_a(8).contains(&(2, 1)));
        assert!(lattice_a(4).is_empty());
    }

    #[test]
    fn closed_form_matches_lattice() {
        for n in 5..=500 {
            assert_eq!(count_cw(n), lattice_cw(n).len() as u64, "n = {n}");
        }
        assert_eq!(count_cw(11), 11);
        assert_eq!(count_cw(8), 5);
        assert_eq!(count_cw(9), 7);
    }

    #[test]
    fn region_sizes() {
        for n in 3..60 {
            assert_eq!(region_size_a(n), lattice_a(n).len() as u64);
            assert_eq!(region_size_b(n), lattice_b(n).len() as u64);
        }
    }

    #[test]
    fn asymptotics() {
        let rows = asymptotics_probe(1000);
        assert!(rows.iter().all(|r| r.within_bound));
        let at = |n: usize| rows.iter().find(|r| r.n == n).unwrap();
        assert!((0.075..=0.092).contains(&at(100).ratio));
        assert!(at(1000).deviation < 0.01 / 12.0);
    }
}
