//! Deliberately broken operator sets. A proposition suite that stays green
//! against these is not checking anything.

use crate::approx::{Approximations, Direction, Family, Gotas};
use crate::universe::{Subset, Universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// γ upper computed as `A ∩ [R̄(R_(A)) ∪ R_(R̄(A))]`.
    GammaUpperOuterIntersect,
    /// γ upper computed as `A ∪ [R̄(R_(A)) ∩ R_(R̄(A))]`.
    GammaUpperInnerIntersect,
}

/// A space whose γ upper approximation has been corrupted.
pub struct Mutant<'a> {
    pub space: &'a Gotas,
    pub mutation: Mutation,
}

impl<'a> Mutant<'a> {
    pub fn new(space: &'a Gotas, mutation: Mutation) -> Self {
        Self { space, mutation }
    }
}

impl Approximations for Mutant<'_> {
    fn universe(&self) -> &Universe {
        self.space.universe()
    }

    fn lower(&self, family: Family, a: &Subset, d: Direction) -> Subset {
        self.space.lower(family, a, d)
    }

    fn upper(&self, family: Family, a: &Subset, d: Direction) -> Subset {
        if family != Family::Gamma {
            return self.space.upper(family, a, d);
        }
        let g = self.space;
        let closure_of_interior = g.r_upper(&g.r_lower(a, d), d);
        let interior_of_closure = g.r_lower(&g.r_upper(a, d), d);
        match self.mutation {
            Mutation::GammaUpperOuterIntersect => {
                a & &(&closure_of_interior | &interior_of_closure)
            }
            Mutation::GammaUpperInnerIntersect => {
                a | &(&closure_of_interior & &interior_of_closure)
            }
        }
    }
}
