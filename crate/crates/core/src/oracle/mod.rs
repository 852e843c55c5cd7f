//! Brute-force ground truth and the mechanized proposition checker.
//!
//! [`BruteForce`] recomputes the R-operators straight from their
//! definitions by scanning the whole powerset: it keeps every subset that is
//! open (resp. closed), monotone in the requested direction, and inside
//! (resp. around) `A`, then insists that this family has a unique maximum
//! (resp. minimum). It shares no code with [`Gotas::r_lower`] and
//! [`Gotas::r_upper`] beyond the subset type.

mod mutation;
mod propositions;
mod random;

use std::collections::HashSet;

pub use mutation::{Mutant, Mutation};
pub use propositions::{
    check_propositions, merge_reports, CheckMode, PropositionReport, Violation, EXHAUSTIVE_CAP,
};
pub use random::{random_order, random_partition_space, random_space, random_unordered_space};

use crate::approx::{Direction, Gotas};
use crate::error::{GotasError, Result};
use crate::universe::{Subset, Universe};

/// Largest universe the powerset oracle accepts unless overridden.
pub const DEFAULT_ORACLE_CAP: usize = 20;

/// Definition-level evaluator for `r_lower` and `r_upper`.
pub struct BruteForce<'a> {
    space: &'a Gotas,
    opens: HashSet<Subset>,
    closeds: HashSet<Subset>,
    /// `(x, y)` with `x ρ y`, read from the order once.
    order_pairs: Vec<(usize, usize)>,
    powerset: Vec<Subset>,
}

impl<'a> BruteForce<'a> {
    pub fn new(space: &'a Gotas, cap: usize) -> Result<Self> {
        let universe = space.topology().universe();
        if universe.len() > cap {
            return Err(GotasError::CapExceeded {
                size: universe.len(),
                cap,
            });
        }
        Ok(Self {
            space,
            opens: space.topology().opens().iter().cloned().collect(),
            closeds: space.topology().closeds().iter().cloned().collect(),
            order_pairs: space.order().pairs().collect(),
            powerset: universe.powerset()?.collect(),
        })
    }

    pub fn space(&self) -> &Gotas {
        self.space
    }

    fn monotone(&self, s: &Subset, d: Direction) -> bool {
        self.order_pairs.iter().all(|&(x, y)| match d {
            Direction::Inc => !s.contains(x) || s.contains(y),
            Direction::Dec => !s.contains(y) || s.contains(x),
        })
    }

    /// The greatest open `d`-monotone subset of `a`, found by enumeration.
    pub fn r_lower(&self, a: &Subset, d: Direction) -> Result<Subset> {
        let candidates: Vec<&Subset> = self
            .powerset
            .iter()
            .filter(|s| self.opens.contains(*s) && self.monotone(s, d) && s.is_subset(a))
            .collect();
        unique_extremum(&candidates, "maximum", |x, y| y.is_subset(x))
    }

    /// The smallest closed `d`-monotone superset of `a`, found by enumeration.
    pub fn r_upper(&self, a: &Subset, d: Direction) -> Result<Subset> {
        let candidates: Vec<&Subset> = self
            .powerset
            .iter()
            .filter(|s| self.closeds.contains(*s) && self.monotone(s, d) && a.is_subset(s))
            .collect();
        unique_extremum(&candidates, "minimum", |x, y| x.is_subset(y))
    }

    pub fn powerset(&self) -> &[Subset] {
        &self.powerset
    }
}

/// The candidate `x` with `dominates(x, y)` for every candidate `y`.
fn unique_extremum(
    candidates: &[&Subset],
    extremum: &'static str,
    dominates: impl Fn(&Subset, &Subset) -> bool,
) -> Result<Subset> {
    let winners: Vec<&Subset> = candidates
        .iter()
        .copied()
        .filter(|x| candidates.iter().all(|y| dominates(x, y)))
        .collect();
    match winners.as_slice() {
        [only] => Ok((*only).clone()),
        _ => Err(GotasError::NoUniqueExtremum {
            extremum,
            candidates: candidates
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        }),
    }
}

/// Stand-alone form of [`BruteForce::r_lower`].
pub fn oracle_r_lower(space: &Gotas, a: &Subset, d: Direction, cap: usize) -> Result<Subset> {
    BruteForce::new(space, cap)?.r_lower(a, d)
}

/// Stand-alone form of [`BruteForce::r_upper`].
pub fn oracle_r_upper(space: &Gotas, a: &Subset, d: Direction, cap: usize) -> Result<Subset> {
    BruteForce::new(space, cap)?.r_upper(a, d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operator {
    Lower,
    Upper,
}

impl std::fmt::Display for Operator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Operator::Lower => "r_lower",
            Operator::Upper => "r_upper",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub operator: Operator,
    pub direction: Direction,
    pub subset: Subset,
    pub expected: Result<Subset>,
    pub actual: Subset,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleDiff {
    pub comparisons: usize,
    pub mismatches: Vec<Mismatch>,
}

impl OracleDiff {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `r_lower`/`r_upper` with the oracle on every subset and both
/// directions.
pub fn oracle_diff(space: &Gotas, cap: usize) -> Result<OracleDiff> {
    let oracle = BruteForce::new(space, cap)?;
    let mut comparisons = 0;
    let mut mismatches = Vec::new();
    for a in oracle.powerset() {
        for d in Direction::ALL {
            for operator in [Operator::Lower, Operator::Upper] {
                let (expected, actual) = match operator {
                    Operator::Lower => (oracle.r_lower(a, d), space.r_lower(a, d)),
                    Operator::Upper => (oracle.r_upper(a, d), space.r_upper(a, d)),
                };
                comparisons += 1;
                if expected.as_ref() != Ok(&actual) {
                    mismatches.push(Mismatch {
                        operator,
                        direction: d,
                        subset: a.clone(),
                        expected,
                        actual,
                    });
                }
            }
        }
    }
    Ok(OracleDiff {
        comparisons,
        mismatches,
    })
}

/// Short human description of a space, used in violation reports.
pub fn describe(space: &Gotas) -> String {
    let universe: &Universe = space.topology().universe();
    let opens: Vec<String> = space.topology().opens().iter().map(|o| o.to_string()).collect();
    let order: Vec<String> = space
        .order()
        .pairs()
        .filter(|(x, y)| x != y)
        .map(|(x, y)| format!("{}<{}", universe.label(x), universe.label(y)))
        .collect();
    format!(
        "|U|={} opens=[{}] order=[{}]",
        universe.len(),
        opens.join(" "),
        order.join(" ")
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{discrete_space, example_space};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn oracle_matches_the_example() {
        let g = example_space();
        let a = g.subset(["a", "c"]).unwrap();
        assert_eq!(
            oracle_r_lower(&g, &a, Direction::Dec, DEFAULT_ORACLE_CAP).unwrap(),
            g.subset(["a"]).unwrap()
        );
        let empty = g.topology().universe().empty();
        assert_eq!(
            oracle_r_lower(&g, &empty, Direction::Inc, DEFAULT_ORACLE_CAP).unwrap(),
            empty
        );
        let full = g.topology().universe().full();
        assert_eq!(
            oracle_r_upper(&g, &a, Direction::Dec, DEFAULT_ORACLE_CAP).unwrap(),
            full
        );
        assert_eq!(
            oracle_r_upper(&g, &full, Direction::Dec, DEFAULT_ORACLE_CAP).unwrap(),
            full
        );
    }

    #[test]
    fn diff_counts_comparisons() {
        let diff = oracle_diff(&example_space(), DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(diff.comparisons, 64);
        assert!(diff.is_clean());
        let diff = oracle_diff(&discrete_space(1), DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(diff.comparisons, 8);
        assert!(diff.is_clean());
    }

    #[test]
    fn cap_is_enforced() {
        let g = discrete_space(6);
        assert_eq!(
            oracle_diff(&g, 5).unwrap_err(),
            GotasError::CapExceeded { size: 6, cap: 5 }
        );
    }

    #[test]
    fn extremum_must_be_unique() {
        let u = Universe::new(["a", "b"]).unwrap();
        let a = u.subset(["a"]).unwrap();
        let b = u.subset(["b"]).unwrap();
        let err = unique_extremum(&[&a, &b], "maximum", |x, y| y.is_subset(x)).unwrap_err();
        assert!(matches!(err, GotasError::NoUniqueExtremum { .. }));
        assert!(unique_extremum(&[], "maximum", |x, y| y.is_subset(x)).is_err());
    }

    #[test]
    fn oracle_agrees_on_random_spaces() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let n = rand::Rng::gen_range(&mut rng, 1..=4);
            let g = random_space(&mut rng, n);
            let diff = oracle_diff(&g, DEFAULT_ORACLE_CAP).unwrap();
            assert!(diff.is_clean(), "{}: {:?}", describe(&g), diff.mismatches);
            assert_eq!(diff.comparisons, 4 << n);
        }
    }
}
