//! Ready-made spaces for tests, benches and documentation.

use crate::approx::Gotas;
use crate::order::PartialOrder;
use crate::topology::Topology;
use crate::universe::Universe;

/// Four-point space with granules `{a}`, `{a, b}`, `{c, d}` and the order
/// `a < b < d`, `a < c < d`.
pub fn example_space() -> Gotas {
    let u = Universe::new(["a", "b", "c", "d"]).expect("distinct labels");
    let base = [
        u.subset(["a"]).unwrap(),
        u.subset(["a", "b"]).unwrap(),
        u.subset(["c", "d"]).unwrap(),
    ];
    let topology = Topology::generate(&u, &base).expect("same universe");
    let order = PartialOrder::from_labels(
        &u,
        [
            ("a", "a"),
            ("b", "b"),
            ("c", "c"),
            ("d", "d"),
            ("a", "b"),
            ("b", "d"),
            ("a", "d"),
            ("a", "c"),
            ("c", "d"),
        ],
        false,
    )
    .expect("valid order");
    Gotas::new(topology, order).expect("same universe")
}

/// Discrete topology with the equality order on `n` numbered points.
pub fn discrete_space(n: usize) -> Gotas {
    let u = Universe::numbered(n).expect("n >= 1");
    Gotas::new(Topology::discrete(&u), PartialOrder::equality(&u)).expect("same universe")
}
