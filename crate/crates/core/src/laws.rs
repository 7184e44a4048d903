//! The defining identities of left-handed SBIAs, plus derived identities,
//! checked on concrete carriers.

use std::fmt;

use rand::Rng;

use crate::algebra::Sbia;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    // Skew Boolean algebra axioms.
    JoinAssociative,
    MeetAssociative,
    Absorption,
    MeetDistributesLeft,
    MeetDistributesRight,
    ZeroLaws,
    ComplementOrthogonal,
    ComplementSplit,
    Normality,
    LeftNormality,
    LeftHandedMeet,
    LeftHandedJoin,
    Idempotency,
    // Intersection.
    IsectIdempotent,
    IsectCommutative,
    IsectAssociative,
    IsectOfRectangle,
    IsectAbsorbedByMeet,
    IsectIsGreatestLowerBound,
    // Derived identities.
    DiffOfJoinSymmetric,
    DiffThenMeet,
    MeetDiffSplit,
    IteratedDiff,
    DiffProduct,
    IsectOfMeets,
    IsectDiffRestriction,
    /// Claimed in the literature as an identity of left-handed SBIAs but
    /// refuted by `3_L`; see [`Law::is_refuted`].
    IsectDistributesOverJoin,
    IsectDistributesOverCompatibleJoin,
    CompatibleMeetIsIsect,
}

impl Law {
    pub const ALL: [Law; 29] = [
        Law::JoinAssociative,
        Law::MeetAssociative,
        Law::Absorption,
        Law::MeetDistributesLeft,
        Law::MeetDistributesRight,
        Law::ZeroLaws,
        Law::ComplementOrthogonal,
        Law::ComplementSplit,
        Law::Normality,
        Law::LeftNormality,
        Law::LeftHandedMeet,
        Law::LeftHandedJoin,
        Law::Idempotency,
        Law::IsectIdempotent,
        Law::IsectCommutative,
        Law::IsectAssociative,
        Law::IsectOfRectangle,
        Law::IsectAbsorbedByMeet,
        Law::IsectIsGreatestLowerBound,
        Law::DiffOfJoinSymmetric,
        Law::DiffThenMeet,
        Law::MeetDiffSplit,
        Law::IteratedDiff,
        Law::DiffProduct,
        Law::IsectOfMeets,
        Law::IsectDiffRestriction,
        Law::IsectDistributesOverJoin,
        Law::IsectDistributesOverCompatibleJoin,
        Law::CompatibleMeetIsIsect,
    ];

    /// Laws that do not hold in every left-handed SBIA. In `3_L`,
    /// `(1∨2)⊓1 = 2⊓1 = 0` while `(1⊓1)∨(2⊓1) = 1`.
    pub fn is_refuted(self) -> bool {
        self == Law::IsectDistributesOverJoin
    }

    pub fn statement(self) -> &'static str {
        use Law::*;
        match self {
            JoinAssociative => "x∨(y∨z) = (x∨y)∨z",
            MeetAssociative => "x∧(y∧z) = (x∧y)∧z",
            Absorption => "x∨(x∧y) = x = (y∧x)∨x, x∧(x∨y) = x = (y∨x)∧x",
            MeetDistributesLeft => "x∧(y∨z) = (x∧y)∨(x∧z)",
            MeetDistributesRight => "(y∨z)∧x = (y∧x)∨(z∧x)",
            ZeroLaws => "x∨0 = 0∨x = x, x∧0 = 0∧x = 0",
            ComplementOrthogonal => "(x∖y)∧y = y∧(x∖y) = 0",
            ComplementSplit => "(x∖y)∨(x∧y∧x) = x = (x∧y∧x)∨(x∖y)",
            Normality => "x∧y∧z∧t = x∧z∧y∧t",
            LeftNormality => "x∧y∧z = x∧z∧y",
            LeftHandedMeet => "x∧y∧x = x∧y",
            LeftHandedJoin => "x∨y∨x = y∨x",
            Idempotency => "x∨x = x = x∧x",
            IsectIdempotent => "x⊓x = x",
            IsectCommutative => "x⊓y = y⊓x",
            IsectAssociative => "x⊓(y⊓z) = (x⊓y)⊓z",
            IsectOfRectangle => "x⊓(x∧y∧x) = x∧y∧x",
            IsectAbsorbedByMeet => "x∧(x⊓y) = x⊓y = (x⊓y)∧x",
            IsectIsGreatestLowerBound => "x⊓y ≤ x, x⊓y ≤ y, and z ≤ x, z ≤ y imply z ≤ x⊓y",
            DiffOfJoinSymmetric => "x∖(y∨z) = x∖(z∨y)",
            DiffThenMeet => "(x∖y)∧z = (x∧z)∖y",
            MeetDiffSplit => "x = (x∧y)∨(x∖y)",
            IteratedDiff => "(x∖y)∖z = x∖(y∨z)",
            DiffProduct => "(x∖y)∧(z∖t) = (x∧z)∖(y∨t)",
            IsectOfMeets => "(x∧y)⊓(z∧y) = (x⊓z)∧y",
            IsectDiffRestriction => "(x⊓y)∖(x⊓z) = (x⊓y)∖(x⊓y⊓z)",
            IsectDistributesOverJoin => "(x∨y)⊓z = (x⊓z)∨(y⊓z)",
            IsectDistributesOverCompatibleJoin => "x∧y = y∧x implies (x∨y)⊓z = (x⊓z)∨(y⊓z)",
            CompatibleMeetIsIsect => "x∧y = y∧x iff x∧y = x⊓y",
        }
    }

    pub fn arity(self) -> usize {
        use Law::*;
        match self {
            ZeroLaws | Idempotency | IsectIdempotent => 1,
            Absorption
            | ComplementOrthogonal
            | ComplementSplit
            | LeftHandedMeet
            | LeftHandedJoin
            | IsectCommutative
            | IsectOfRectangle
            | IsectAbsorbedByMeet
            | MeetDiffSplit
            | CompatibleMeetIsIsect => 2,
            Normality | DiffProduct => 4,
            _ => 3,
        }
    }

    /// Whether the law holds at `v` (length at least [`Law::arity`]).
    pub fn holds<A: Sbia>(self, alg: &A, v: &[&A::Elem]) -> bool {
        use Law::*;
        let m = |a: &A::Elem, b: &A::Elem| alg.meet(a, b);
        let j = |a: &A::Elem, b: &A::Elem| alg.join(a, b);
        let d = |a: &A::Elem, b: &A::Elem| alg.diff(a, b);
        let i = |a: &A::Elem, b: &A::Elem| alg.isect(a, b);
        let zero = alg.zero();
        let x = v[0];
        let y = v.get(1).copied().unwrap_or(x);
        let z = v.get(2).copied().unwrap_or(x);
        let t = v.get(3).copied().unwrap_or(x);
        match self {
            JoinAssociative => j(x, &j(y, z)) == j(&j(x, y), z),
            MeetAssociative => m(x, &m(y, z)) == m(&m(x, y), z),
            Absorption => {
                j(x, &m(x, y)) == *x
                    && j(&m(y, x), x) == *x
                    && m(x, &j(x, y)) == *x
                    && m(&j(y, x), x) == *x
            }
            MeetDistributesLeft => m(x, &j(y, z)) == j(&m(x, y), &m(x, z)),
            MeetDistributesRight => m(&j(y, z), x) == j(&m(y, x), &m(z, x)),
            ZeroLaws => {
                j(x, &zero) == *x && j(&zero, x) == *x && m(x, &zero) == zero && m(&zero, x) == zero
            }
            ComplementOrthogonal => m(&d(x, y), y) == zero && m(y, &d(x, y)) == zero,
            ComplementSplit => {
                let xyx = m(&m(x, y), x);
                j(&d(x, y), &xyx) == *x && j(&xyx, &d(x, y)) == *x
            }
            Normality => m(&m(&m(x, y), z), t) == m(&m(&m(x, z), y), t),
            LeftNormality => m(&m(x, y), z) == m(&m(x, z), y),
            LeftHandedMeet => m(&m(x, y), x) == m(x, y),
            LeftHandedJoin => j(&j(x, y), x) == j(y, x),
            Idempotency => j(x, x) == *x && m(x, x) == *x,
            IsectIdempotent => i(x, x) == *x,
            IsectCommutative => i(x, y) == i(y, x),
            IsectAssociative => i(x, &i(y, z)) == i(&i(x, y), z),
            IsectOfRectangle => {
                let xyx = m(&m(x, y), x);
                i(x, &xyx) == xyx
            }
            IsectAbsorbedByMeet => {
                let xy = i(x, y);
                m(x, &xy) == xy && m(&xy, x) == xy
            }
            IsectIsGreatestLowerBound => {
                let xy = i(x, y);
                alg.leq(&xy, x)
                    && alg.leq(&xy, y)
                    && (!(alg.leq(z, x) && alg.leq(z, y)) || alg.leq(z, &xy))
            }
            DiffOfJoinSymmetric => d(x, &j(y, z)) == d(x, &j(z, y)),
            DiffThenMeet => m(&d(x, y), z) == d(&m(x, z), y),
            MeetDiffSplit => *x == j(&m(x, y), &d(x, y)),
            IteratedDiff => d(&d(x, y), z) == d(x, &j(y, z)),
            DiffProduct => m(&d(x, y), &d(z, t)) == d(&m(x, z), &j(y, t)),
            IsectOfMeets => i(&m(x, y), &m(z, y)) == m(&i(x, z), y),
            IsectDiffRestriction => d(&i(x, y), &i(x, z)) == d(&i(x, y), &i(&i(x, y), z)),
            IsectDistributesOverJoin => i(&j(x, y), z) == j(&i(x, z), &i(y, z)),
            IsectDistributesOverCompatibleJoin => {
                !alg.commutes(x, y) || i(&j(x, y), z) == j(&i(x, z), &i(y, z))
            }
            CompatibleMeetIsIsect => alg.commutes(x, y) == (m(x, y) == i(x, y)),
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self, self.statement())
    }
}

/// Outcome of checking one law.
#[derive(Clone, Debug)]
pub struct LawReport<E> {
    pub law: Law,
    pub instances: u64,
    pub counterexample: Option<Vec<E>>,
}

impl<E> LawReport<E> {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks `law` on every tuple drawn from `carrier`.
pub fn check_exhaustive<A: Sbia>(alg: &A, law: Law, carrier: &[A::Elem]) -> LawReport<A::Elem> {
    let arity = law.arity();
    let mut idx = vec![0usize; arity];
    let mut instances = 0;
    if carrier.is_empty() {
        return LawReport {
            law,
            instances,
            counterexample: None,
        };
    }
    loop {
        let args: Vec<&A::Elem> = idx.iter().map(|&k| &carrier[k]).collect();
        instances += 1;
        if !law.holds(alg, &args) {
            let counterexample = Some(args.into_iter().cloned().collect());
            return LawReport {
                law,
                instances,
                counterexample,
            };
        }
        let mut pos = 0;
        loop {
            if pos == arity {
                return LawReport {
                    law,
                    instances,
                    counterexample: None,
                };
            }
            idx[pos] += 1;
            if idx[pos] < carrier.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Checks `law` on `trials` tuples produced by `sample`.
pub fn check_sampled<A, R, S>(
    alg: &A,
    law: Law,
    trials: u64,
    rng: &mut R,
    mut sample: S,
) -> LawReport<A::Elem>
where
    A: Sbia,
    R: Rng + ?Sized,
    S: FnMut(&mut R) -> A::Elem,
{
    for n in 0..trials {
        let args: Vec<A::Elem> = (0..law.arity()).map(|_| sample(rng)).collect();
        let refs: Vec<&A::Elem> = args.iter().collect();
        if !law.holds(alg, &refs) {
            return LawReport {
                law,
                instances: n + 1,
                counterexample: Some(args),
            };
        }
    }
    LawReport {
        law,
        instances: trials,
        counterexample: None,
    }
}

pub fn check_all_exhaustive<A: Sbia>(alg: &A, carrier: &[A::Elem]) -> Vec<LawReport<A::Elem>> {
    Law::ALL
        .iter()
        .map(|&law| check_exhaustive(alg, law, carrier))
        .collect()
}
