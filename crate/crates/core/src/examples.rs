//! Small algebras used throughout the tests, the self-test and the CLI.

use crate::algebra::{Algebra, RelationSet};
use crate::quiver::Quiver;

fn build(vertices: &[&str], arrows: &[(&str, &str, &str)], relations: Option<&[(&str, &str)]>) -> Algebra {
    let q = Quiver::new(vertices.iter().copied(), arrows.iter().copied()).expect("valid quiver");
    let rel = match relations {
        None => RelationSet::all_length_two(&q),
        Some(pairs) => {
            let pairs = pairs.iter().map(|(a, b)| (q.arrow(a).unwrap(), q.arrow(b).unwrap()));
            RelationSet::new(&q, pairs).expect("valid relations")
        }
    };
    Algebra::new(q, rel).expect("admissible")
}

/// Five vertices, arrows `a1: 1->2, a2: 2->3, a3: 3->4, a4: 4->5, b: 2->4,
/// g: 1->5`, all paths of length two are relations.
pub fn main_example() -> Algebra {
    build(
        &["1", "2", "3", "4", "5"],
        &[("a1", "1", "2"), ("a2", "2", "3"), ("a3", "3", "4"), ("a4", "4", "5"), ("b", "2", "4"), ("g", "1", "5")],
        None,
    )
}

/// `1 -a-> 2 -b-> 3 -c-> 4 -d-> 5 -e-> 3`, `3 -f-> 6 -g-> 5`, radical square zero.
pub fn bypass_example() -> Algebra {
    build(
        &["1", "2", "3", "4", "5", "6"],
        &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4"), ("d", "4", "5"), ("e", "5", "3"), ("f", "3", "6"), ("g", "6", "5")],
        None,
    )
}

/// `1 -a1-> 2`, `1' -a1'-> 2`, two parallel arrows `a2, b: 2 -> 3`,
/// relations `a1 a2` and `a1' a2`.
pub fn reduction_example() -> Algebra {
    build(
        &["1", "1'", "2", "3"],
        &[("a1", "1", "2"), ("a1'", "1'", "2"), ("a2", "2", "3"), ("b", "2", "3")],
        Some(&[("a1", "a2"), ("a1'", "a2")]),
    )
}

/// `k[x]/(x^2)`.
pub fn dual_numbers() -> Algebra {
    build(&["1"], &[("x", "1", "1")], None)
}

/// `1 -> 2`, no relations.
pub fn a2() -> Algebra {
    build(&["1", "2"], &[("a", "1", "2")], Some(&[]))
}

/// `1 -> 2 -> 3`, no relations.
pub fn a3_no_relations() -> Algebra {
    build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], Some(&[]))
}

/// `a: 1 -> 2`, `b: 2 -> 1`, relations `ab`, `ba`.
pub fn two_cycle() -> Algebra {
    build(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], None)
}

/// `a: 1 -> 2`, `b: 2 -> 1` with only `ba` a relation (so `ab` survives).
pub fn two_cycle_no_relations_truncated() -> Algebra {
    build(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], Some(&[("b", "a")]))
}
