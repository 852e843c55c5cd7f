//! Partial orders on a universe and the increasing/decreasing set tests.

use crate::error::{GotasError, OrderAxiom, Result};
use crate::universe::{Subset, Universe};

/// Validated reflexive, antisymmetric, transitive relation `ρ`.
#[derive(Debug, Clone)]
pub struct PartialOrder {
    universe: Universe,
    /// `above[x] = { y : x ρ y }`
    above: Vec<Subset>,
    /// `below[y] = { x : x ρ y }`
    below: Vec<Subset>,
}

impl PartialOrder {
    /// Validates `pairs` as a partial order. With `auto_reflexive` the loops
    /// `(x, x)` are added first; missing transitive pairs are never repaired.
    pub fn new<I>(universe: &Universe, pairs: I, auto_reflexive: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = universe.len();
        let mut leq = vec![vec![false; n]; n];
        for (x, y) in pairs {
            for index in [x, y] {
                if index >= n {
                    return Err(GotasError::IndexOutOfRange { index, size: n });
                }
            }
            leq[x][y] = true;
        }
        if auto_reflexive {
            for (x, row) in leq.iter_mut().enumerate() {
                row[x] = true;
            }
        }

        let label = |i: usize| universe.label(i);
        for x in 0..n {
            if !leq[x][x] {
                return Err(GotasError::OrderViolation {
                    axiom: OrderAxiom::Reflexivity,
                    witness: format!("({0}, {0}) missing", label(x)),
                });
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if leq[x][y] && leq[y][x] {
                    return Err(GotasError::OrderViolation {
                        axiom: OrderAxiom::Antisymmetry,
                        witness: format!("({0}, {1}) and ({1}, {0})", label(x), label(y)),
                    });
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !leq[x][y] {
                    continue;
                }
                for z in 0..n {
                    if leq[y][z] && !leq[x][z] {
                        return Err(GotasError::OrderViolation {
                            axiom: OrderAxiom::Transitivity,
                            witness: format!(
                                "({}, {}) and ({}, {}) present but ({}, {}) missing",
                                label(x),
                                label(y),
                                label(y),
                                label(z),
                                label(x),
                                label(z)
                            ),
                        });
                    }
                }
            }
        }

        let row = |f: &dyn Fn(usize) -> bool| {
            universe
                .subset_from_indices((0..n).filter(|&j| f(j)))
                .expect("indices in range")
        };
        let above = (0..n).map(|x| row(&|y| leq[x][y])).collect();
        let below = (0..n).map(|y| row(&|x| leq[x][y])).collect();
        Ok(Self {
            universe: universe.clone(),
            above,
            below,
        })
    }

    pub fn from_labels<I, S>(universe: &Universe, pairs: I, auto_reflexive: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let pairs = pairs
            .into_iter()
            .map(|(x, y)| Ok((universe.index_of(x.as_ref())?, universe.index_of(y.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, pairs, auto_reflexive)
    }

    /// The discrete order: `x ρ y` iff `x = y`.
    pub fn equality(universe: &Universe) -> Self {
        Self::new(universe, std::iter::empty(), true).expect("equality is a partial order")
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    /// All pairs `(x, y)` with `x ρ y`, row-major.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.above
            .iter()
            .enumerate()
            .flat_map(|(x, up)| up.iter().map(move |y| (x, y)))
    }

    pub fn is_equality(&self) -> bool {
        self.above.iter().all(|up| up.len() == 1)
    }

    /// `a ∈ A` and `a ρ x` imply `x ∈ A`.
    pub fn is_increasing(&self, a: &Subset) -> bool {
        a.iter().all(|x| self.above[x].is_subset(a))
    }

    /// `a ∈ A` and `x ρ a` imply `x ∈ A`.
    pub fn is_decreasing(&self, a: &Subset) -> bool {
        a.iter().all(|y| self.below[y].is_subset(a))
    }
}
