//! Named graphs and permutations used throughout the tests and the CLI.
//!
//! The hand-labelled Clebsch graph uses the classic drawing: an outer
//! pentagon, an inner pentagram, two interleaved 10-cycles through a middle
//! ring and a centre vertex joined to the middle ring. Labels are the 1-based
//! ones of that drawing; they are shifted to 0-based on construction.

use crate::boolean_group::folded_cube;
use crate::error::Result;
use crate::graph::{Graph, Permutation};

/// 1-based edge list of the labelled Clebsch drawing.
///
/// Ring positions: outer pentagon `O`, inner pentagram `I`, middle ring `M`,
/// centre `C`.
#[rustfmt::skip]
pub const CLEBSCH_LABELLED_EDGES: [[usize; 2]; 40] = [
    // inner pentagram I18-I162-I306-I90-I234
    [14, 6], [6, 8], [8, 9], [9, 10], [10, 14],
    // outer pentagon O18-O90-O162-O234-O306
    [2, 1], [1, 5], [5, 12], [12, 4], [4, 2],
    // inner/middle 10-cycle
    [14, 13], [13, 9], [9, 11], [11, 6], [6, 3],
    [3, 10], [10, 7], [7, 8], [8, 16], [16, 14],
    // outer/middle 10-cycle
    [2, 11], [11, 12], [12, 16], [16, 1], [1, 3],
    [3, 4], [4, 13], [13, 5], [5, 7], [7, 2],
    // spokes inner-outer
    [14, 2], [9, 1], [6, 5], [10, 12], [8, 4],
    // centre to middle ring
    [15, 13], [15, 11], [15, 3], [15, 7], [15, 16],
];

/// Clebsch graph in the labelling of the hand drawing, 0-based.
pub fn clebsch_labelled() -> Graph {
    let edges: Vec<[usize; 2]> = CLEBSCH_LABELLED_EDGES
        .iter()
        .map(|&[a, b]| [a - 1, b - 1])
        .collect();
    Graph::from_edges(16, &edges).expect("fixture edges are valid")
}

/// `σ = (2 3)(6 7)(10 11)(14 15)` on the labelled Clebsch graph.
pub fn clebsch_sigma() -> Permutation {
    Permutation::from_cycles_one_based(16, &[&[2, 3], &[6, 7], &[10, 11], &[14, 15]])
        .expect("valid cycles")
}

/// `τ = (1 4)(5 8)(9 12)(13 16)` on the labelled Clebsch graph.
pub fn clebsch_tau() -> Permutation {
    Permutation::from_cycles_one_based(16, &[&[1, 4], &[5, 8], &[9, 12], &[13, 16]])
        .expect("valid cycles")
}

/// Clebsch graph as the folded 5-cube in bit order.
pub fn clebsch() -> Graph {
    folded_cube(5).expect("FQ_5 is within bounds")
}

pub fn k4() -> Graph {
    Graph::complete(4).expect("K_4")
}

pub fn c5() -> Graph {
    Graph::cycle(5).expect("C_5")
}

/// `σ = (1 2)`, `τ = (3 4)` on `K_4`.
pub fn k4_pair() -> (Permutation, Permutation) {
    (
        Permutation::from_cycles_one_based(4, &[&[1, 2]]).expect("valid"),
        Permutation::from_cycles_one_based(4, &[&[3, 4]]).expect("valid"),
    )
}

/// All bundled fixtures by CLI name.
pub fn by_name(name: &str) -> Result<Graph> {
    match name {
        "clebsch" => Ok(clebsch()),
        "clebsch-labelled" => Ok(clebsch_labelled()),
        "k4" => Ok(k4()),
        "c5" => Ok(c5()),
        other => Err(crate::Error::usage(format!("unknown fixture `{other}`"))),
    }
}
