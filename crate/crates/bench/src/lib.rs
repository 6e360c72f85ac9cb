//! Benchmark fixtures shared by the criterion targets.

use regdeg::constructions::{build_dr, build_g_abc, CwParams};
use regdeg::Graph;

/// A mix of sparse, dense and structured graphs near the size limit.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    let petersen = Graph::from_edge_list(
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
    )
    .expect("fixed edge list");
    let cycle12 =
        Graph::from_edge_list(12, &(0..12).map(|i| (i, (i + 1) % 12)).collect::<Vec<_>>())
            .expect("fixed edge list");
    vec![
        ("petersen", petersen),
        ("c12", cycle12),
        ("d6", build_dr(6).expect("r >= 1")),
        (
            "g_2_3_2",
            build_g_abc(CwParams::new(2, 3, 2).expect("valid")).expect("valid"),
        ),
    ]
}
