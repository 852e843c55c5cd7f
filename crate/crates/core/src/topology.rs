//! Topologies generated from a binary relation or an explicit base, with
//! the plain interior and closure operators.
//!
//! The canonical pipeline takes the right neighborhoods `xR = { y : x R y }`
//! of a relation as a subbase. A caller holding the granules directly can
//! skip the relation and hand them to [`Topology::generate`].

use std::collections::HashSet;

use crate::error::{GotasError, Result};
use crate::universe::{Subset, Universe};

/// General binary relation on a universe; no structural constraints.
#[derive(Debug, Clone)]
pub struct BinaryRelation {
    universe: Universe,
    /// `successors[x]` is the right neighborhood `xR`.
    successors: Vec<Subset>,
}

impl BinaryRelation {
    pub fn new<I>(universe: &Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = universe.len();
        let mut rows = vec![Vec::new(); n];
        for (x, y) in pairs {
            for index in [x, y] {
                if index >= n {
                    return Err(GotasError::IndexOutOfRange { index, size: n });
                }
            }
            rows[x].push(y);
        }
        let successors = rows
            .into_iter()
            .map(|row| universe.subset_from_indices(row))
            .collect::<Result<_>>()?;
        Ok(Self {
            universe: universe.clone(),
            successors,
        })
    }

    pub fn from_labels<I, S>(universe: &Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let pairs = pairs
            .into_iter()
            .map(|(x, y)| Ok((universe.index_of(x.as_ref())?, universe.index_of(y.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, pairs)
    }

    pub fn equality(universe: &Universe) -> Self {
        Self::new(universe, (0..universe.len()).map(|i| (i, i))).expect("indices in range")
    }

    pub fn full(universe: &Universe) -> Self {
        let n = universe.len();
        Self::new(universe, (0..n).flat_map(|x| (0..n).map(move |y| (x, y))))
            .expect("indices in range")
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.successors[x].contains(y)
    }

    /// `{ xR : x ∈ U }` with duplicates removed, in order of first occurrence.
    pub fn right_neighborhoods(&self) -> Vec<Subset> {
        let mut seen = HashSet::new();
        self.successors
            .iter()
            .filter(|s| seen.insert((*s).clone()))
            .cloned()
            .collect()
    }
}

/// Explicit family of open sets over a universe, plus the derived closeds.
#[derive(Debug, Clone)]
pub struct Topology {
    universe: Universe,
    opens: Vec<Subset>,
    closeds: Vec<Subset>,
}

impl Topology {
    /// Smallest topology containing every member of `base`.
    ///
    /// The family is closed under pairwise intersection, then under pairwise
    /// union, then ∅ and U are added; the three steps repeat until nothing
    /// new appears.
    pub fn generate<'a, I>(universe: &Universe, base: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Subset>,
    {
        let mut family: HashSet<Subset> = HashSet::new();
        for s in base {
            if !s.universe().same_as(universe) {
                return Err(GotasError::MixedUniverse);
            }
            family.insert(s.clone());
        }
        loop {
            let before = family.len();
            close_under(&mut family, Subset::intersect);
            close_under(&mut family, Subset::union);
            family.insert(universe.empty());
            family.insert(universe.full());
            if family.len() == before {
                break;
            }
        }
        Ok(Self::from_family(universe, family.into_iter().collect()))
    }

    /// Topology generated by the right neighborhoods of `relation`.
    pub fn from_relation(relation: &BinaryRelation) -> Self {
        Self::generate(relation.universe(), &relation.right_neighborhoods())
            .expect("neighborhoods share the relation's universe")
    }

    /// Accepts `opens` as-is after checking the topology axioms.
    pub fn from_opens(universe: &Universe, opens: Vec<Subset>) -> Result<Self> {
        if opens.iter().any(|o| !o.universe().same_as(universe)) {
            return Err(GotasError::MixedUniverse);
        }
        let family: HashSet<Subset> = opens.into_iter().collect();
        let closed = family.contains(&universe.empty())
            && family.contains(&universe.full())
            && family.iter().all(|a| {
                family
                    .iter()
                    .all(|b| family.contains(&(a & b)) && family.contains(&(a | b)))
            });
        if !closed {
            return Err(GotasError::Document(
                "open family is not closed under finite unions and intersections".into(),
            ));
        }
        Ok(Self::from_family(universe, family.into_iter().collect()))
    }

    pub fn discrete(universe: &Universe) -> Self {
        Self::from_relation(&BinaryRelation::equality(universe))
    }

    pub fn indiscrete(universe: &Universe) -> Self {
        Self::from_family(universe, vec![universe.empty(), universe.full()])
    }

    fn from_family(universe: &Universe, mut opens: Vec<Subset>) -> Self {
        opens.sort_by(Subset::canonical_cmp);
        let mut closeds: Vec<Subset> = opens.iter().map(Subset::complement).collect();
        closeds.sort_by(Subset::canonical_cmp);
        Self {
            universe: universe.clone(),
            opens,
            closeds,
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Open sets sorted by cardinality, then lexicographically.
    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    pub fn closeds(&self) -> &[Subset] {
        &self.closeds
    }

    pub fn is_open(&self, a: &Subset) -> bool {
        self.opens.contains(a)
    }

    pub fn is_closed(&self, a: &Subset) -> bool {
        self.closeds.contains(a)
    }

    /// Greatest open subset of `a`.
    pub fn interior(&self, a: &Subset) -> Subset {
        self.opens
            .iter()
            .filter(|o| o.is_subset(a))
            .fold(self.universe.empty(), |acc, o| &acc | o)
    }

    /// Smallest closed superset of `a`.
    pub fn closure(&self, a: &Subset) -> Subset {
        self.closeds
            .iter()
            .filter(|c| a.is_subset(c))
            .fold(self.universe.full(), |acc, c| &acc & c)
    }
}

fn close_under(family: &mut HashSet<Subset>, op: fn(&Subset, &Subset) -> Subset) {
    let mut frontier: Vec<Subset> = family.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        let members: Vec<Subset> = family.iter().cloned().collect();
        for a in &frontier {
            for b in &members {
                let c = op(a, b);
                if !family.contains(&c) {
                    family.insert(c.clone());
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
}
