//! Mechanized inclusion and accuracy laws for the approximation families.
//!
//! Each law is evaluated against any [`Approximations`] implementation, so
//! the same suite runs on a real space and on a [`super::Mutant`]. Results
//! come back as one [`PropositionReport`] per law, in a fixed order.

use std::cell::RefCell;
use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::approx::{Approximations, Direction, Family};
use crate::error::{GotasError, Result};
use crate::universe::{Subset, Universe};

/// Largest universe checked over all subsets and all subset pairs.
pub const EXHAUSTIVE_CAP: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Every subset `A` and every ordered pair `(A, B)`.
    Exhaustive,
    /// `samples` random pairs `(A, B)` drawn from a seeded generator.
    Sampled { samples: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub space: String,
    pub direction: Direction,
    pub a: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropositionReport {
    pub id: String,
    pub statement: String,
    pub instances: usize,
    pub violations: Vec<Violation>,
}

impl PropositionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

enum Outcome {
    Skip,
    Hold,
    Fail(String),
}

impl From<std::result::Result<(), String>> for Outcome {
    fn from(r: std::result::Result<(), String>) -> Self {
        match r {
            Ok(()) => Outcome::Hold,
            Err(detail) => Outcome::Fail(detail),
        }
    }
}

type Check = std::result::Result<(), String>;

fn subset_of(left: &str, l: &Subset, right: &str, r: &Subset) -> Check {
    if l.is_subset(r) {
        Ok(())
    } else {
        Err(format!("{left} = {l} ⊄ {right} = {r}"))
    }
}

fn equal(left: &str, l: &Subset, right: &str, r: &Subset) -> Check {
    if l == r {
        Ok(())
    } else {
        Err(format!("{left} = {l} ≠ {right} = {r}"))
    }
}

/// Operators of one direction, with short names for the report text.
struct Ops<'a> {
    ap: &'a dyn Approximations,
    d: Direction,
}

impl Ops<'_> {
    fn lo(&self, f: Family, a: &Subset) -> Subset {
        self.ap.lower(f, a, self.d)
    }

    fn up(&self, f: Family, a: &Subset) -> Subset {
        self.ap.upper(f, a, self.d)
    }

    fn bnd(&self, f: Family, a: &Subset) -> Subset {
        self.ap.boundary(f, a, self.d)
    }

    fn neg(&self, f: Family, a: &Subset) -> Subset {
        self.ap.negative(f, a, self.d)
    }

    fn exact(&self, f: Family, a: &Subset) -> bool {
        self.lo(f, a) == self.up(f, a)
    }
}

use Family::{Beta, Gamma, Pre, Semi, R};

struct Unary {
    id: &'static str,
    statement: &'static str,
    check: fn(&Ops, &Subset) -> Outcome,
}

struct Binary {
    id: &'static str,
    statement: &'static str,
    check: fn(&Ops, &Subset, &Subset) -> Outcome,
}

fn sandwich(o: &Ops, a: &Subset) -> Outcome {
    for f in Family::ALL {
        let (lo, up) = (o.lo(f, a), o.up(f, a));
        if !lo.is_subset(a) || !a.is_subset(&up) {
            return Outcome::Fail(format!("{f}: lower = {lo}, A = {a}, upper = {up}"));
        }
    }
    Outcome::Hold
}

fn exact_implies(o: &Ops, a: &Subset, f: Family) -> Outcome {
    if o.exact(R, a) && !o.exact(f, a) {
        Outcome::Fail(format!(
            "R-exact but {f}: lower = {}, upper = {}",
            o.lo(f, a),
            o.up(f, a)
        ))
    } else {
        Outcome::Hold
    }
}

fn duality(o: &Ops, a: &Subset) -> Outcome {
    let other = Ops {
        ap: o.ap,
        d: o.d.opposite(),
    };
    let upper = o.up(R, a);
    let dual = other.lo(R, &a.complement()).complement();
    equal("R̄(A)", &upper, "U − R_(U − A) [opposite]", &dual).into()
}

fn accuracy_chain(o: &Ops, a: &Subset, strict_chain: bool) -> Outcome {
    if a.is_empty() {
        return Outcome::Skip;
    }
    let acc = |f| o.ap.accuracy(f, a, o.d);
    let (r, g, b) = (acc(R), acc(Gamma), acc(Beta));
    let ok = if strict_chain {
        r <= g && g <= b
    } else {
        r <= g && r <= b
    };
    if ok {
        Outcome::Hold
    } else {
        Outcome::Fail(format!("acc_R = {r}, acc_γ = {g}, acc_β = {b}"))
    }
}

const UNARY: &[Unary] = &[
    Unary {
        id: "sandwich",
        statement: "lower(A) ⊆ A ⊆ upper(A) for R, S, P, γ, β",
        check: sandwich,
    },
    Unary {
        id: "3.4",
        statement: "R-exact ⇒ γ-exact",
        check: |o, a| exact_implies(o, a, Gamma),
    },
    Unary {
        id: "3.5",
        statement: "R_(A) ⊆ γ_(A)",
        check: |o, a| subset_of("R_(A)", &o.lo(R, a), "γ_(A)", &o.lo(Gamma, a)).into(),
    },
    Unary {
        id: "3.6",
        statement: "γ̄(A) ⊆ R̄(A)",
        check: |o, a| subset_of("γ̄(A)", &o.up(Gamma, a), "R̄(A)", &o.up(R, a)).into(),
    },
    Unary {
        id: "3.7",
        statement: "P_(A) ⊆ γ_(A)",
        check: |o, a| subset_of("P_(A)", &o.lo(Pre, a), "γ_(A)", &o.lo(Gamma, a)).into(),
    },
    Unary {
        id: "3.8",
        statement: "S_(A) ⊆ γ_(A)",
        check: |o, a| subset_of("S_(A)", &o.lo(Semi, a), "γ_(A)", &o.lo(Gamma, a)).into(),
    },
    Unary {
        id: "3.9",
        statement: "P̄(A) ⊆ γ̄(A)",
        check: |o, a| subset_of("P̄(A)", &o.up(Pre, a), "γ̄(A)", &o.up(Gamma, a)).into(),
    },
    Unary {
        id: "3.10",
        statement: "β̄(A) ⊆ P̄(A)",
        check: |o, a| subset_of("β̄(A)", &o.up(Beta, a), "P̄(A)", &o.up(Pre, a)).into(),
    },
    Unary {
        id: "3.14",
        statement: "R-exact ⇒ β-exact",
        check: |o, a| exact_implies(o, a, Beta),
    },
    Unary {
        id: "3.15",
        statement: "R_(A) ⊆ β_(A)",
        check: |o, a| subset_of("R_(A)", &o.lo(R, a), "β_(A)", &o.lo(Beta, a)).into(),
    },
    Unary {
        id: "3.16",
        statement: "β̄(A) ⊆ R̄(A)",
        check: |o, a| subset_of("β̄(A)", &o.up(Beta, a), "R̄(A)", &o.up(R, a)).into(),
    },
    Unary {
        id: "3.20",
        statement: "S_(A) ⊆ γ_(A) ⊆ β_(A)",
        check: |o, a| {
            let (s, g, b) = (o.lo(Semi, a), o.lo(Gamma, a), o.lo(Beta, a));
            subset_of("S_(A)", &s, "γ_(A)", &g)
                .and_then(|_| subset_of("γ_(A)", &g, "β_(A)", &b))
                .into()
        },
    },
    Unary {
        id: "3.21a",
        statement: "β̄(A) ⊆ γ̄(A)",
        check: |o, a| subset_of("β̄(A)", &o.up(Beta, a), "γ̄(A)", &o.up(Gamma, a)).into(),
    },
    Unary {
        id: "3.21b",
        statement: "γ̄(A) ⊆ S̄(A)",
        check: |o, a| subset_of("γ̄(A)", &o.up(Gamma, a), "S̄(A)", &o.up(Semi, a)).into(),
    },
    Unary {
        id: "3.23",
        statement: "A ≠ ∅ ⇒ acc_R(A) ≤ acc_γ(A) and acc_R(A) ≤ acc_β(A)",
        check: |o, a| accuracy_chain(o, a, false),
    },
    Unary {
        id: "3.25a",
        statement: "B_β(A) ⊆ B_γ(A)",
        check: |o, a| subset_of("B_β(A)", &o.bnd(Beta, a), "B_γ(A)", &o.bnd(Gamma, a)).into(),
    },
    Unary {
        id: "3.25b",
        statement: "B_γ(A) ⊆ B_S(A)",
        check: |o, a| subset_of("B_γ(A)", &o.bnd(Gamma, a), "B_S(A)", &o.bnd(Semi, a)).into(),
    },
    Unary {
        id: "3.26",
        statement: "B_γ(A) ⊆ B_R(A)",
        check: |o, a| subset_of("B_γ(A)", &o.bnd(Gamma, a), "B_R(A)", &o.bnd(R, a)).into(),
    },
    Unary {
        id: "3.27",
        statement: "B_β(A) ⊆ B_R(A)",
        check: |o, a| subset_of("B_β(A)", &o.bnd(Beta, a), "B_R(A)", &o.bnd(R, a)).into(),
    },
    Unary {
        id: "3.28a",
        statement: "A ≠ ∅ ⇒ acc_R(A) ≤ acc_γ(A) ≤ acc_β(A)",
        check: |o, a| accuracy_chain(o, a, true),
    },
    Unary {
        id: "3.28b",
        statement: "γ_(A) ⊆ β_(A)",
        check: |o, a| subset_of("γ_(A)", &o.lo(Gamma, a), "β_(A)", &o.lo(Beta, a)).into(),
    },
    Unary {
        id: "duality",
        statement: "R̄(A, d) = U − R_(U − A, opposite d)",
        check: duality,
    },
];

/// Monotone in `A`, sub-multiplicative over ∩, super-additive over ∪.
fn lattice_laws(op: impl Fn(&Subset) -> Subset, name: &str, a: &Subset, b: &Subset) -> Check {
    let (fa, fb) = (op(a), op(b));
    if a.is_subset(b) {
        subset_of(&format!("{name}(A)"), &fa, &format!("{name}(B)"), &fb)?;
    }
    subset_of(
        &format!("{name}(A ∩ B)"),
        &op(&(a & b)),
        &format!("{name}(A) ∩ {name}(B)"),
        &(&fa & &fb),
    )?;
    subset_of(
        &format!("{name}(A) ∪ {name}(B)"),
        &(&fa | &fb),
        &format!("{name}(A ∪ B)"),
        &op(&(a | b)),
    )
}

/// Negative regions are antitone; both the ∩ and the ∪ forms are checked.
fn negative_laws(o: &Ops, f: Family, a: &Subset, b: &Subset) -> Check {
    let (na, nb) = (o.neg(f, a), o.neg(f, b));
    let n_union = o.neg(f, &(a | b));
    let n_inter = o.neg(f, &(a & b));
    subset_of("Neg(A ∪ B)", &n_union, "Neg(A) ∩ Neg(B)", &(&na & &nb))?;
    subset_of("Neg(A ∪ B)", &n_union, "Neg(A) ∪ Neg(B)", &(&na | &nb))?;
    subset_of("Neg(A) ∪ Neg(B)", &(&na | &nb), "Neg(A ∩ B)", &n_inter)?;
    subset_of("Neg(A) ∩ Neg(B)", &(&na & &nb), "Neg(A ∩ B)", &n_inter)
}

const BINARY: &[Binary] = &[
    Binary {
        id: "3.2",
        statement: "γ̄ is monotone, γ̄(A ∩ B) ⊆ γ̄(A) ∩ γ̄(B), γ̄(A ∪ B) ⊇ γ̄(A) ∪ γ̄(B)",
        check: |o, a, b| lattice_laws(|s| o.up(Gamma, s), "γ̄", a, b).into(),
    },
    Binary {
        id: "3.3",
        statement: "γ_ is monotone, γ_(A ∩ B) ⊆ γ_(A) ∩ γ_(B), γ_(A ∪ B) ⊇ γ_(A) ∪ γ_(B)",
        check: |o, a, b| lattice_laws(|s| o.lo(Gamma, s), "γ_", a, b).into(),
    },
    Binary {
        id: "3.12",
        statement: "β̄ is monotone, β̄(A ∩ B) ⊆ β̄(A) ∩ β̄(B), β̄(A ∪ B) ⊇ β̄(A) ∪ β̄(B)",
        check: |o, a, b| lattice_laws(|s| o.up(Beta, s), "β̄", a, b).into(),
    },
    Binary {
        id: "3.13",
        statement: "β_ is monotone, β_(A ∩ B) ⊆ β_(A) ∩ β_(B), β_(A ∪ B) ⊇ β_(A) ∪ β_(B)",
        check: |o, a, b| lattice_laws(|s| o.lo(Beta, s), "β_", a, b).into(),
    },
    Binary {
        id: "3.18",
        statement: "Neg_γ(A ∪ B) ⊆ Neg_γ(A) ∩ Neg_γ(B), Neg_γ(A ∩ B) ⊇ Neg_γ(A) ∪ Neg_γ(B)",
        check: |o, a, b| negative_laws(o, Gamma, a, b).into(),
    },
    Binary {
        id: "3.19",
        statement: "Neg_β(A ∪ B) ⊆ Neg_β(A) ∩ Neg_β(B), Neg_β(A ∩ B) ⊇ Neg_β(A) ∪ Neg_β(B)",
        check: |o, a, b| negative_laws(o, Beta, a, b).into(),
    },
];

/// Caches lower/upper so the pair sweep does not recompute compositions.
struct Memo<'a> {
    inner: &'a dyn Approximations,
    cache: RefCell<HashMap<(Subset, Family, Direction, bool), Subset>>,
}

impl<'a> Memo<'a> {
    fn new(inner: &'a dyn Approximations) -> Self {
        Self {
            inner,
            cache: RefCell::new(HashMap::new()),
        }
    }

    fn get(&self, f: Family, a: &Subset, d: Direction, upper: bool) -> Subset {
        let key = (a.clone(), f, d, upper);
        if let Some(hit) = self.cache.borrow().get(&key) {
            return hit.clone();
        }
        let value = if upper {
            self.inner.upper(f, a, d)
        } else {
            self.inner.lower(f, a, d)
        };
        self.cache.borrow_mut().insert(key, value.clone());
        value
    }
}

impl Approximations for Memo<'_> {
    fn universe(&self) -> &Universe {
        self.inner.universe()
    }

    fn lower(&self, family: Family, a: &Subset, d: Direction) -> Subset {
        self.get(family, a, d, false)
    }

    fn upper(&self, family: Family, a: &Subset, d: Direction) -> Subset {
        self.get(family, a, d, true)
    }
}

/// Evaluates every law on `space`. `label` identifies the space in
/// violation records.
pub fn check_propositions(
    space: &dyn Approximations,
    mode: CheckMode,
    label: &str,
) -> Result<Vec<PropositionReport>> {
    let universe = space.universe().clone();
    let (singles, pairs): (Vec<Subset>, Vec<(Subset, Subset)>) = match mode {
        CheckMode::Exhaustive => {
            if universe.len() > EXHAUSTIVE_CAP {
                return Err(GotasError::CapExceeded {
                    size: universe.len(),
                    cap: EXHAUSTIVE_CAP,
                });
            }
            let all: Vec<Subset> = universe.powerset()?.collect();
            let pairs = all
                .iter()
                .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
                .collect();
            (all, pairs)
        }
        CheckMode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut draw = || {
                let members: Vec<usize> =
                    (0..universe.len()).filter(|_| rng.gen_bool(0.5)).collect();
                universe.subset_from_indices(members).expect("in range")
            };
            let pairs: Vec<(Subset, Subset)> = (0..samples).map(|_| (draw(), draw())).collect();
            let singles = pairs.iter().map(|(a, _)| a.clone()).collect();
            (singles, pairs)
        }
    };

    let memo = Memo::new(space);
    let mut reports = Vec::with_capacity(UNARY.len() + BINARY.len());
    for law in UNARY {
        let mut report = empty_report(law.id, law.statement);
        for d in Direction::ALL {
            let ops = Ops { ap: &memo, d };
            for a in &singles {
                match (law.check)(&ops, a) {
                    Outcome::Skip => {}
                    Outcome::Hold => report.instances += 1,
                    Outcome::Fail(detail) => {
                        report.instances += 1;
                        report.violations.push(Violation {
                            space: label.to_string(),
                            direction: d,
                            a: a.to_string(),
                            b: None,
                            detail,
                        });
                    }
                }
            }
        }
        reports.push(report);
    }
    for law in BINARY {
        let mut report = empty_report(law.id, law.statement);
        for d in Direction::ALL {
            let ops = Ops { ap: &memo, d };
            for (a, b) in &pairs {
                report.instances += 1;
                if let Outcome::Fail(detail) = (law.check)(&ops, a, b) {
                    report.violations.push(Violation {
                        space: label.to_string(),
                        direction: d,
                        a: a.to_string(),
                        b: Some(b.to_string()),
                        detail,
                    });
                }
            }
        }
        reports.push(report);
    }
    Ok(reports)
}

fn empty_report(id: &str, statement: &str) -> PropositionReport {
    PropositionReport {
        id: id.to_string(),
        statement: statement.to_string(),
        instances: 0,
        violations: Vec::new(),
    }
}

/// Folds `more` into `into`, matching reports by id. Reports whose id is
/// new to `into` are appended in their original order.
pub fn merge_reports(into: &mut Vec<PropositionReport>, more: Vec<PropositionReport>) {
    for report in more {
        match into.iter_mut().find(|r| r.id == report.id) {
            Some(existing) => {
                existing.instances += report.instances;
                existing.violations.extend(report.violations);
            }
            None => into.push(report),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::Gotas;
    use crate::fixtures::{discrete_space, example_space};
    use crate::oracle::{Mutant, Mutation};

    fn failing(reports: &[PropositionReport]) -> Vec<&str> {
        reports
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.id.as_str())
            .collect()
    }

    #[test]
    fn example_space_passes_everything() {
        let reports = check_propositions(&example_space(), CheckMode::Exhaustive, "ex").unwrap();
        assert_eq!(reports.len(), UNARY.len() + BINARY.len());
        assert!(failing(&reports).is_empty(), "{:?}", failing(&reports));
        let pair_law = reports.iter().find(|r| r.id == "3.2").unwrap();
        assert_eq!(pair_law.instances, 2 * 256);
        let unary_law = reports.iter().find(|r| r.id == "3.5").unwrap();
        assert_eq!(unary_law.instances, 2 * 16);
        let accuracy_law = reports.iter().find(|r| r.id == "3.28a").unwrap();
        assert_eq!(accuracy_law.instances, 2 * 15);
    }

    #[test]
    fn discrete_space_passes_everything() {
        let reports = check_propositions(&discrete_space(4), CheckMode::Exhaustive, "d").unwrap();
        assert!(failing(&reports).is_empty());
    }

    #[test]
    fn exhaustive_mode_is_capped() {
        let err = check_propositions(&discrete_space(6), CheckMode::Exhaustive, "d").unwrap_err();
        assert_eq!(err, GotasError::CapExceeded { size: 6, cap: EXHAUSTIVE_CAP });
        let ok = check_propositions(
            &discrete_space(6),
            CheckMode::Sampled { samples: 40, seed: 3 },
            "d",
        )
        .unwrap();
        assert_eq!(ok.iter().find(|r| r.id == "3.2").unwrap().instances, 80);
    }

    #[test]
    fn outer_intersect_mutation_is_caught() {
        let g = example_space();
        let mutant = Mutant::new(&g, Mutation::GammaUpperOuterIntersect);
        let reports = check_propositions(&mutant, CheckMode::Exhaustive, "ex").unwrap();
        let failed = failing(&reports);
        for id in ["sandwich", "3.9", "3.21a"] {
            assert!(failed.contains(&id), "{id} not caught: {failed:?}");
        }
    }

    #[test]
    fn inner_intersect_mutation_is_caught_on_random_spaces() {
        use rand::SeedableRng;
        // the example space happens to be blind to this mutation
        let g = example_space();
        let mutant = Mutant::new(&g, Mutation::GammaUpperInnerIntersect);
        let reports = check_propositions(&mutant, CheckMode::Exhaustive, "ex").unwrap();
        assert!(failing(&reports).is_empty());

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let caught = (0..30)
            .map(|_| crate::oracle::random_space(&mut rng, 4))
            .filter(|g| {
                let mutant = Mutant::new(g, Mutation::GammaUpperInnerIntersect);
                let reports = check_propositions(&mutant, CheckMode::Exhaustive, "r").unwrap();
                failing(&reports).contains(&"3.9")
            })
            .count();
        assert!(caught > 0);
    }

    /// Upper approximations replaced by complements: not monotone.
    struct Antitone<'a>(&'a Gotas);

    impl Approximations for Antitone<'_> {
        fn universe(&self) -> &Universe {
            self.0.universe()
        }
        fn lower(&self, f: Family, a: &Subset, d: Direction) -> Subset {
            self.0.lower(f, a, d)
        }
        fn upper(&self, _: Family, a: &Subset, _: Direction) -> Subset {
            a.complement()
        }
    }

    #[test]
    fn monotonicity_laws_can_fail() {
        let g = example_space();
        let reports = check_propositions(&Antitone(&g), CheckMode::Exhaustive, "ex").unwrap();
        let failed = failing(&reports);
        for id in ["3.2", "3.12", "3.18", "3.19"] {
            assert!(failed.contains(&id), "{id} not caught: {failed:?}");
        }
        let witness = &reports.iter().find(|r| r.id == "3.2").unwrap().violations[0];
        assert!(witness.b.is_some());
    }

    #[test]
    fn merging_accumulates_by_id() {
        let g = example_space();
        let mut all = check_propositions(&g, CheckMode::Exhaustive, "one").unwrap();
        let more = check_propositions(&g, CheckMode::Exhaustive, "two").unwrap();
        let count = all.len();
        merge_reports(&mut all, more);
        assert_eq!(all.len(), count);
        assert_eq!(all.iter().find(|r| r.id == "3.2").unwrap().instances, 4 * 256);
    }
}
