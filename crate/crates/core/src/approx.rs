//! Lower and upper approximations over an ordered topological space.
//!
//! Everything is built from two primitives per direction:
//!
//! * `r_lower(A, Inc)`: the greatest open increasing subset of `A`,
//! * `r_upper(A, Inc)`: the smallest closed increasing superset of `A`,
//!
//! and their decreasing analogues. The semi, pre, γ and β operators are
//! literal compositions of these two with `A` itself; the direction is
//! fixed throughout a composition. Regions, accuracy and exactness are
//! derived from a family's lower and upper approximations only, so they
//! live as provided methods on [`Approximations`].
//!
//! All operators panic when handed a subset of a different universe.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{GotasError, Result};
use crate::order::PartialOrder;
use crate::topology::Topology;
use crate::universe::{Subset, Universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Direction {
    Inc,
    Dec,
}

impl Direction {
    pub const ALL: [Direction; 2] = [Direction::Inc, Direction::Dec];

    pub fn opposite(self) -> Direction {
        match self {
            Direction::Inc => Direction::Dec,
            Direction::Dec => Direction::Inc,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Inc => "Inc",
            Direction::Dec => "Dec",
        })
    }
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "inc" | "increasing" => Ok(Direction::Inc),
            "dec" | "decreasing" => Ok(Direction::Dec),
            _ => Err(format!("unknown direction `{s}` (expected inc or dec)")),
        }
    }
}

/// Which pair of approximation operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    R,
    #[serde(rename = "S")]
    Semi,
    #[serde(rename = "P")]
    Pre,
    Gamma,
    Beta,
}

impl Family {
    /// Table order.
    pub const ALL: [Family; 5] = [Family::R, Family::Semi, Family::Pre, Family::Gamma, Family::Beta];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::R => "R",
            Family::Semi => "S",
            Family::Pre => "P",
            Family::Gamma => "Gamma",
            Family::Beta => "Beta",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "r" => Ok(Family::R),
            "s" | "semi" => Ok(Family::Semi),
            "p" | "pre" => Ok(Family::Pre),
            "gamma" | "γ" => Ok(Family::Gamma),
            "beta" | "β" => Ok(Family::Beta),
            _ => Err(format!(
                "unknown family `{s}` (expected r, semi, pre, gamma or beta)"
            )),
        }
    }
}

/// Exact cardinality ratio `|lower| / |upper|`.
///
/// Equality and ordering compare values, so `2/4 == 1/2`; the stored
/// numerator and denominator are the raw cardinalities.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Accuracy {
    pub numerator: usize,
    pub denominator: usize,
}

impl Accuracy {
    pub const ONE: Accuracy = Accuracy {
        numerator: 1,
        denominator: 1,
    };

    /// Ratio of the two cardinalities. An empty upper approximation can only
    /// come from `A = ∅`, which is exact; its accuracy is 1.
    pub fn of(lower: &Subset, upper: &Subset) -> Accuracy {
        if upper.is_empty() {
            Accuracy::ONE
        } else {
            Accuracy {
                numerator: lower.len(),
                denominator: upper.len(),
            }
        }
    }

    pub fn as_f64(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }

    pub fn is_one(&self) -> bool {
        self.numerator == self.denominator
    }
}

impl PartialEq for Accuracy {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Accuracy {}

impl PartialOrd for Accuracy {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Accuracy {
    fn cmp(&self, other: &Self) -> Ordering {
        // denominators are positive; cross-multiplication preserves order
        (self.numerator as u128 * other.denominator as u128)
            .cmp(&(other.numerator as u128 * self.denominator as u128))
    }
}

impl fmt::Display for Accuracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Exactness {
    Exact,
    Rough,
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exactness::Exact => "exact",
            Exactness::Rough => "rough",
        })
    }
}

/// One row of the analysis table for a fixed subset.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproxReport {
    pub family: Family,
    pub direction: Direction,
    pub lower: Subset,
    pub upper: Subset,
    pub boundary: Subset,
    pub positive: Subset,
    pub negative: Subset,
    pub accuracy: Accuracy,
    pub exactness: Exactness,
}

/// A source of lower/upper approximations. Implementors supply the two
/// family-indexed operators; regions, accuracy and exactness follow.
pub trait Approximations {
    fn universe(&self) -> &Universe;

    fn lower(&self, family: Family, a: &Subset, d: Direction) -> Subset;

    fn upper(&self, family: Family, a: &Subset, d: Direction) -> Subset;

    /// `upper − lower`.
    fn boundary(&self, family: Family, a: &Subset, d: Direction) -> Subset {
        &self.upper(family, a, d) - &self.lower(family, a, d)
    }

    fn positive(&self, family: Family, a: &Subset, d: Direction) -> Subset {
        self.lower(family, a, d)
    }

    /// `U − upper(A, opposite d)`: the increasing negative region subtracts
    /// the decreasing upper approximation and vice versa.
    fn negative(&self, family: Family, a: &Subset, d: Direction) -> Subset {
        self.upper(family, a, d.opposite()).complement()
    }

    fn accuracy(&self, family: Family, a: &Subset, d: Direction) -> Accuracy {
        Accuracy::of(&self.lower(family, a, d), &self.upper(family, a, d))
    }

    /// Exact iff lower and upper coincide in the same direction.
    fn exactness(&self, family: Family, a: &Subset, d: Direction) -> Exactness {
        if self.lower(family, a, d) == self.upper(family, a, d) {
            Exactness::Exact
        } else {
            Exactness::Rough
        }
    }

    /// Diagnostic variant comparing `lower(A, d)` against
    /// `upper(A, opposite d)`.
    fn exactness_mixed(&self, family: Family, a: &Subset, d: Direction) -> Exactness {
        if self.lower(family, a, d) == self.upper(family, a, d.opposite()) {
            Exactness::Exact
        } else {
            Exactness::Rough
        }
    }

    fn report(&self, family: Family, a: &Subset, d: Direction) -> ApproxReport {
        let lower = self.lower(family, a, d);
        let upper = self.upper(family, a, d);
        ApproxReport {
            family,
            direction: d,
            boundary: &upper - &lower,
            positive: lower.clone(),
            negative: self.negative(family, a, d),
            accuracy: Accuracy::of(&lower, &upper),
            exactness: if lower == upper {
                Exactness::Exact
            } else {
                Exactness::Rough
            },
            lower,
            upper,
        }
    }

    /// Ten rows: families in table order, `Inc` before `Dec`.
    fn full_report(&self, a: &Subset) -> Vec<ApproxReport> {
        Family::ALL
            .iter()
            .flat_map(|&f| Direction::ALL.iter().map(move |&d| (f, d)))
            .map(|(f, d)| self.report(f, a, d))
            .collect()
    }
}

/// `A ∩ cl(int(A))`-style compositions over an arbitrary interior/closure
/// pair. `int` and `cl` are the same-direction primitives.
fn compose_lower(
    family: Family,
    a: &Subset,
    int: impl Fn(&Subset) -> Subset,
    cl: impl Fn(&Subset) -> Subset,
) -> Subset {
    match family {
        Family::R => int(a),
        Family::Semi => a & &cl(&int(a)),
        Family::Pre => a & &int(&cl(a)),
        Family::Gamma => a & &(&cl(&int(a)) | &int(&cl(a))),
        Family::Beta => a & &cl(&int(&cl(a))),
    }
}

fn compose_upper(
    family: Family,
    a: &Subset,
    int: impl Fn(&Subset) -> Subset,
    cl: impl Fn(&Subset) -> Subset,
) -> Subset {
    match family {
        Family::R => cl(a),
        Family::Semi => a | &int(&cl(a)),
        Family::Pre => a | &cl(&int(a)),
        Family::Gamma => a | &(&cl(&int(a)) | &int(&cl(a))),
        Family::Beta => a | &int(&cl(&int(a))),
    }
}

/// Lower approximation built from the plain (unordered) interior and
/// closure of `topology`.
pub fn unordered_lower(topology: &Topology, family: Family, a: &Subset) -> Subset {
    compose_lower(family, a, |s| topology.interior(s), |s| topology.closure(s))
}

/// Upper approximation built from the plain interior and closure.
pub fn unordered_upper(topology: &Topology, family: Family, a: &Subset) -> Subset {
    compose_upper(family, a, |s| topology.interior(s), |s| topology.closure(s))
}

/// A general ordered topological approximation space `(U, τ_R, ρ)`.
#[derive(Debug, Clone)]
pub struct Gotas {
    topology: Topology,
    order: PartialOrder,
    /// Open sets that are increasing (index 0) or decreasing (index 1).
    monotone_opens: [Vec<Subset>; 2],
    /// Closed sets that are increasing (index 0) or decreasing (index 1).
    monotone_closeds: [Vec<Subset>; 2],
}

fn slot(d: Direction) -> usize {
    match d {
        Direction::Inc => 0,
        Direction::Dec => 1,
    }
}

impl Gotas {
    pub fn new(topology: Topology, order: PartialOrder) -> Result<Self> {
        if !topology.universe().same_as(order.universe()) {
            return Err(GotasError::MixedUniverse);
        }
        let monotone = |family: &[Subset], d: Direction| -> Vec<Subset> {
            family
                .iter()
                .filter(|s| match d {
                    Direction::Inc => order.is_increasing(s),
                    Direction::Dec => order.is_decreasing(s),
                })
                .cloned()
                .collect()
        };
        let monotone_opens = [
            monotone(topology.opens(), Direction::Inc),
            monotone(topology.opens(), Direction::Dec),
        ];
        let monotone_closeds = [
            monotone(topology.closeds(), Direction::Inc),
            monotone(topology.closeds(), Direction::Dec),
        ];
        Ok(Self {
            topology,
            order,
            monotone_opens,
            monotone_closeds,
        })
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn order(&self) -> &PartialOrder {
        &self.order
    }

    /// Convenience for `self.universe().subset(labels)`.
    pub fn subset<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        self.universe().subset(labels)
    }

    fn assert_owned(&self, a: &Subset) {
        assert!(
            a.universe().same_as(self.universe()),
            "subset belongs to a different universe"
        );
    }

    /// Greatest open subset of `a` that is increasing (resp. decreasing).
    pub fn r_lower(&self, a: &Subset, d: Direction) -> Subset {
        self.assert_owned(a);
        self.monotone_opens[slot(d)]
            .iter()
            .filter(|o| o.is_subset(a))
            .fold(self.universe().empty(), |acc, o| &acc | o)
    }

    /// Smallest closed superset of `a` that is increasing (resp. decreasing).
    pub fn r_upper(&self, a: &Subset, d: Direction) -> Subset {
        self.assert_owned(a);
        self.monotone_closeds[slot(d)]
            .iter()
            .filter(|c| a.is_subset(c))
            .fold(self.universe().full(), |acc, c| &acc & c)
    }

    pub fn semi_lower(&self, a: &Subset, d: Direction) -> Subset {
        self.lower(Family::Semi, a, d)
    }

    pub fn semi_upper(&self, a: &Subset, d: Direction) -> Subset {
        self.upper(Family::Semi, a, d)
    }

    pub fn pre_lower(&self, a: &Subset, d: Direction) -> Subset {
        self.lower(Family::Pre, a, d)
    }

    pub fn pre_upper(&self, a: &Subset, d: Direction) -> Subset {
        self.upper(Family::Pre, a, d)
    }

    pub fn gamma_lower(&self, a: &Subset, d: Direction) -> Subset {
        self.lower(Family::Gamma, a, d)
    }

    pub fn gamma_upper(&self, a: &Subset, d: Direction) -> Subset {
        self.upper(Family::Gamma, a, d)
    }

    pub fn beta_lower(&self, a: &Subset, d: Direction) -> Subset {
        self.lower(Family::Beta, a, d)
    }

    pub fn beta_upper(&self, a: &Subset, d: Direction) -> Subset {
        self.upper(Family::Beta, a, d)
    }
}

impl Approximations for Gotas {
    fn universe(&self) -> &Universe {
        self.topology.universe()
    }

    fn lower(&self, family: Family, a: &Subset, d: Direction) -> Subset {
        self.assert_owned(a);
        compose_lower(family, a, |s| self.r_lower(s, d), |s| self.r_upper(s, d))
    }

    fn upper(&self, family: Family, a: &Subset, d: Direction) -> Subset {
        self.assert_owned(a);
        compose_upper(family, a, |s| self.r_lower(s, d), |s| self.r_upper(s, d))
    }
}
