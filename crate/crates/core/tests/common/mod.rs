#![allow(dead_code)]

use homforge::minors::MinorMap;
use homforge::structures::{Graph, Signature, Structure};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// The small graph `H` of the minor example: a triangle 1-2-3 with a pendant 0.
pub fn minor_example_h() -> Graph {
    Graph::new(["0", "1", "2", "3"], [("0", "1"), ("1", "2"), ("1", "3"), ("2", "3")]).unwrap()
}

/// The host graph `G`: the 4-cycle a-b-d-c with pendants e and f on d.
pub fn minor_example_g() -> Graph {
    Graph::new(
        ["a", "b", "c", "d", "e", "f"],
        [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"), ("d", "e"), ("d", "f")],
    )
    .unwrap()
}

pub fn minor_example_map(sets: [&[&str]; 4]) -> MinorMap {
    let assignment: Vec<(&str, Vec<&str>)> = ["0", "1", "2", "3"]
        .into_iter()
        .zip(sets)
        .map(|(h, s)| (h, s.to_vec()))
        .collect();
    MinorMap::from_names(minor_example_h(), minor_example_g(), &assignment).unwrap()
}

/// Loop-free binary `E` and unary `U` over `n` elements, each `E`-pair kept
/// with probability `p`.
pub fn random_structure(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Structure {
    let sig = Signature::new([("E", 2), ("U", 1)]).unwrap();
    let mut s = Structure::empty(sig, (0..n).map(|i| format!("x{i}")));
    for a in 0..n {
        for b in 0..n {
            if a != b && rng.gen_bool(p) {
                s.add_tuple(0, vec![a, b]).unwrap();
            }
        }
        if rng.gen_bool(0.3) {
            s.add_tuple(1, vec![a]).unwrap();
        }
    }
    s
}

pub fn shuffled(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    order
}
