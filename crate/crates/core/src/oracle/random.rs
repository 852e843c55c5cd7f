//! Random spaces for the oracle and proposition suites.
//!
//! A random base has up to four generators, each containing every element
//! with probability 1/2. A random order is a DAG over index order (so
//! antisymmetry holds by construction) closed reflexively and transitively.

use rand::Rng;

use crate::approx::Gotas;
use crate::order::PartialOrder;
use crate::topology::{BinaryRelation, Topology};
use crate::universe::{Subset, Universe};

const MAX_GENERATORS: usize = 4;
const EDGE_PROBABILITY: f64 = 1.0 / 3.0;

fn random_subset<R: Rng + ?Sized>(rng: &mut R, universe: &Universe) -> Subset {
    let members: Vec<usize> = (0..universe.len()).filter(|_| rng.gen_bool(0.5)).collect();
    universe.subset_from_indices(members).expect("indices in range")
}

fn random_topology<R: Rng + ?Sized>(rng: &mut R, universe: &Universe) -> Topology {
    let count = rng.gen_range(0..=MAX_GENERATORS);
    let base: Vec<Subset> = (0..count).map(|_| random_subset(rng, universe)).collect();
    Topology::generate(universe, &base).expect("same universe")
}

pub fn random_order<R: Rng + ?Sized>(rng: &mut R, universe: &Universe) -> PartialOrder {
    let n = universe.len();
    let mut leq = vec![vec![false; n]; n];
    for x in 0..n {
        leq[x][x] = true;
        for y in x + 1..n {
            leq[x][y] = rng.gen_bool(EDGE_PROBABILITY);
        }
    }
    for k in 0..n {
        for x in 0..n {
            if !leq[x][k] {
                continue;
            }
            for y in 0..n {
                if leq[k][y] {
                    leq[x][y] = true;
                }
            }
        }
    }
    let pairs = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| leq[x][y]);
    PartialOrder::new(universe, pairs.collect::<Vec<_>>(), false)
        .expect("closure of an index-ordered DAG is a partial order")
}

/// Random base topology and random partial order on `n` numbered points.
pub fn random_space<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Gotas {
    let universe = Universe::numbered(n).expect("n >= 1");
    let topology = random_topology(rng, &universe);
    let order = random_order(rng, &universe);
    Gotas::new(topology, order).expect("same universe")
}

/// Random base topology with the equality order.
pub fn random_unordered_space<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Gotas {
    let universe = Universe::numbered(n).expect("n >= 1");
    let topology = random_topology(rng, &universe);
    Gotas::new(topology, PartialOrder::equality(&universe)).expect("same universe")
}

/// Random partition of `n` points into classes; the topology comes from
/// the equivalence relation "same class" and the order is equality.
/// Returns the space and its classes.
pub fn random_partition_space<R: Rng + ?Sized>(rng: &mut R, n: usize) -> (Gotas, Vec<Subset>) {
    let universe = Universe::numbered(n).expect("n >= 1");
    let class_of: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
    let pairs = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| class_of[x] == class_of[y]);
    let relation = BinaryRelation::new(&universe, pairs.collect::<Vec<_>>()).expect("in range");
    let classes = relation.right_neighborhoods();
    let topology = Topology::from_relation(&relation);
    let space = Gotas::new(topology, PartialOrder::equality(&universe)).expect("same universe");
    (space, classes)
}
