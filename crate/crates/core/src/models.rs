//! Finite left-handed SBIAs used as an independent evaluation oracle.
//!
//! `(k+1)_L` is the primitive algebra on `{0, 1, …, k}`: on non-zero
//! elements `a ∧ b = a`, `a ∨ b = b`, `a ∖ b = 0`, and `a ⊓ b` is `a` when
//! `a = b` and `0` otherwise. Every finite free algebra is a product of such
//! factors, one per support partition.

use std::fmt;

use crate::algebra::Sbia;
use crate::normal_forms::NormalForm;
use crate::partitions::{enumerate_all, PointedPartition, Universe};
use crate::terms::{evaluate_with, Term};
use crate::{Error, Result};

/// The primitive algebra `(k+1)_L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimitiveModel {
    k: u32,
}

impl PrimitiveModel {
    /// `(k+1)_L`, with `k ≥ 1` non-zero elements.
    pub fn new(k: u32) -> Self {
        assert!(
            k >= 1,
            "a primitive algebra has at least one non-zero element"
        );
        PrimitiveModel { k }
    }

    /// Number of non-zero elements.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.k + 1
    }

    pub fn elements(&self) -> Vec<u32> {
        (0..=self.k).collect()
    }

    pub fn contains(&self, value: u32) -> bool {
        value <= self.k
    }
}

impl fmt::Display for PrimitiveModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            f.write_str("2")
        } else {
            write!(f, "{}_L", self.k + 1)
        }
    }
}

impl Sbia for PrimitiveModel {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn meet(&self, a: &u32, b: &u32) -> u32 {
        if *b == 0 {
            0
        } else {
            *a
        }
    }

    fn join(&self, a: &u32, b: &u32) -> u32 {
        if *b == 0 {
            *a
        } else {
            *b
        }
    }

    fn diff(&self, a: &u32, b: &u32) -> u32 {
        if *b == 0 {
            *a
        } else {
            0
        }
    }

    fn isect(&self, a: &u32, b: &u32) -> u32 {
        if a == b {
            *a
        } else {
            0
        }
    }
}

/// A finite product of primitive algebras with coordinatewise operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductModel {
    factors: Vec<PrimitiveModel>,
}

impl ProductModel {
    pub fn new(factors: Vec<PrimitiveModel>) -> Self {
        ProductModel { factors }
    }

    /// The product the free algebra over `universe` is isomorphic to: one
    /// factor `(k+1)_L` per support partition of rank `k`, in canonical
    /// support order.
    pub fn canonical(universe: Universe) -> Self {
        let factors = enumerate_all(universe)
            .iter()
            .map(|a| PrimitiveModel::new(a.rank() as u32))
            .collect();
        ProductModel { factors }
    }

    pub fn factors(&self) -> &[PrimitiveModel] {
        &self.factors
    }

    pub fn contains(&self, tuple: &[u32]) -> bool {
        tuple.len() == self.factors.len()
            && tuple.iter().zip(&self.factors).all(|(&v, m)| m.contains(v))
    }

    fn zip(
        &self,
        a: &[u32],
        b: &[u32],
        op: impl Fn(&PrimitiveModel, &u32, &u32) -> u32,
    ) -> Vec<u32> {
        self.factors
            .iter()
            .zip(a.iter().zip(b))
            .map(|(m, (x, y))| op(m, x, y))
            .collect()
    }
}

impl Sbia for ProductModel {
    type Elem = Vec<u32>;

    fn zero(&self) -> Vec<u32> {
        vec![0; self.factors.len()]
    }

    fn meet(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        self.zip(a, b, PrimitiveModel::meet)
    }

    fn join(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        self.zip(a, b, PrimitiveModel::join)
    }

    fn diff(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        self.zip(a, b, PrimitiveModel::diff)
    }

    fn isect(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        self.zip(a, b, PrimitiveModel::isect)
    }
}

/// Values for generators `x1, x2, …`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment<E = u32> {
    values: Vec<Option<E>>,
}

impl<E> Assignment<E> {
    pub fn new() -> Self {
        Assignment { values: Vec::new() }
    }

    /// Assigns the `i`-th value to `x_{i+1}`.
    pub fn from_values(values: impl IntoIterator<Item = E>) -> Self {
        Assignment {
            values: values.into_iter().map(Some).collect(),
        }
    }

    pub fn set(&mut self, var: u32, value: E) {
        let i = var as usize - 1;
        if self.values.len() <= i {
            self.values.resize_with(i + 1, || None);
        }
        self.values[i] = Some(value);
    }

    pub fn get(&self, var: u32) -> Option<&E> {
        let i = (var as usize).checked_sub(1)?;
        self.values.get(i)?.as_ref()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &E)> {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.as_ref().map(|v| (i as u32 + 1, v)))
    }
}

impl<E: fmt::Display> fmt::Display for Assignment<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (var, value)) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{var}={value}")?;
        }
        Ok(())
    }
}

/// The assignment into `(k+1)_L`, `k = rank(α)`, sending every generator of
/// the `i`-th block (1-based) to `i` and every generator outside `dom(α)` to
/// `0`. Under it the elementary element of `pp` evaluates to
/// `1 + pp.marked()`.
pub fn witness(pp: &PointedPartition) -> (PrimitiveModel, Assignment<u32>) {
    let alpha = pp.partition();
    let model = PrimitiveModel::new(alpha.rank() as u32);
    let values = alpha
        .universe()
        .indices()
        .map(|x| alpha.block_of(x).map_or(0, |i| i as u32 + 1));
    (model, Assignment::from_values(values))
}

fn check_variables(term: &Term, n: u32) -> Result<()> {
    match term.variables().into_iter().find(|&v| v > n) {
        Some(var) => Err(Error::VariableOutsideUniverse { var, n }),
        None => Ok(()),
    }
}

/// Calls `visit` on every assignment of `x1 … xn` into `model`, as a value
/// slice, until it returns `false`.
pub fn for_each_assignment(model: &PrimitiveModel, n: u32, mut visit: impl FnMut(&[u32]) -> bool) {
    let mut values = vec![0u32; n as usize];
    loop {
        if !visit(&values) {
            return;
        }
        let mut i = 0;
        loop {
            if i == values.len() {
                return;
            }
            if values[i] < model.k() {
                values[i] += 1;
                break;
            }
            values[i] = 0;
            i += 1;
        }
    }
}

/// Values of `term` under all `(n+1)^n` assignments into `(n+1)_L`, in
/// odometer order with `x1` varying fastest.
pub fn evaluation_profile(term: &Term, n: u32) -> Result<Vec<u32>> {
    check_variables(term, n)?;
    let model = PrimitiveModel::new(n.max(1));
    let mut out = Vec::new();
    let mut err = None;
    for_each_assignment(&model, n, |values| {
        match evaluate_with(term, &model, &|i| values.get(i as usize - 1).copied()) {
            Ok(v) => out.push(v),
            Err(e) => err = Some(e),
        }
        err.is_none()
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// An assignment into `(n+1)_L` on which the two terms differ, if any.
pub fn oracle_distinguish(lhs: &Term, rhs: &Term, n: u32) -> Result<Option<Assignment<u32>>> {
    check_variables(lhs, n)?;
    check_variables(rhs, n)?;
    let model = PrimitiveModel::new(n.max(1));
    let mut found = None;
    let mut err = None;
    for_each_assignment(&model, n, |values| {
        let lookup = |i: u32| values.get(i as usize - 1).copied();
        match (
            evaluate_with(lhs, &model, &lookup),
            evaluate_with(rhs, &model, &lookup),
        ) {
            (Ok(a), Ok(b)) if a == b => true,
            (Ok(_), Ok(_)) => {
                found = Some(Assignment::from_values(values.iter().copied()));
                false
            }
            (Err(e), _) | (_, Err(e)) => {
                err = Some(e);
                false
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

/// Decides equality in the free algebra over `x1 … xn` by exhaustive
/// evaluation in `(n+1)_L`. Costs `(n+1)^n` evaluations of each term.
pub fn oracle_equal(lhs: &Term, rhs: &Term, n: u32) -> Result<bool> {
    Ok(oracle_distinguish(lhs, rhs, n)?.is_none())
}

/// Image of a normal form in [`ProductModel::canonical`]: the coordinate of
/// a support is `0` when no clause has that support and `1 + marked`
/// otherwise.
pub fn embed_in_product(e: &NormalForm) -> Vec<u32> {
    enumerate_all(e.universe())
        .iter()
        .map(|support| e.marked_for(support).map_or(0, |m| m as u32 + 1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Universe;
    use crate::terms::{elementary_term, evaluate, parse};

    fn pp(n: u32, text: &str) -> PointedPartition {
        PointedPartition::parse(text, Universe::new(n)).unwrap()
    }

    #[test]
    fn primitive_tables() {
        let m = PrimitiveModel::new(3);
        assert_eq!(m.meet(&2, &3), 2);
        assert_eq!(m.meet(&2, &0), 0);
        assert_eq!(m.meet(&0, &2), 0);
        assert_eq!(m.join(&2, &3), 3);
        assert_eq!(m.join(&2, &0), 2);
        assert_eq!(m.join(&0, &2), 2);
        assert_eq!(m.diff(&2, &3), 0);
        assert_eq!(m.diff(&2, &0), 2);
        assert_eq!(m.diff(&0, &2), 0);
        assert_eq!(m.isect(&2, &2), 2);
        assert_eq!(m.isect(&2, &3), 0);
        assert_eq!(m.to_string(), "4_L");
        assert_eq!(PrimitiveModel::new(1).to_string(), "2");
    }

    #[test]
    fn witness_examples() {
        let p = pp(5, "1|23|4*2");
        let (model, a) = witness(&p);
        assert_eq!(model.k(), 3);
        assert_eq!(a.to_string(), "x1=1 x2=2 x3=2 x4=3 x5=0");
        assert_eq!(evaluate(&elementary_term(&p), &model, &a).unwrap(), 3);

        let p = pp(1, "1*0");
        let (model, a) = witness(&p);
        assert_eq!(a.to_string(), "x1=1");
        assert_eq!(evaluate(&elementary_term(&p), &model, &a).unwrap(), 1);

        let p = pp(2, "1|2*1");
        let (model, a) = witness(&p);
        assert_eq!(a.to_string(), "x1=1 x2=2");
        assert_eq!(evaluate(&elementary_term(&p), &model, &a).unwrap(), 2);
    }

    #[test]
    fn oracle_examples() {
        let t = |s| parse(s).unwrap();
        assert!(oracle_equal(&t("x1 ^ x2 ^ x1"), &t("x1 ^ x2"), 2).unwrap());
        assert!(!oracle_equal(&t("x1 ^ x2"), &t("x2 ^ x1"), 2).unwrap());
        assert!(oracle_equal(&t("x1 & x2"), &t("x2 & x1"), 2).unwrap());
        let cex = oracle_distinguish(&t("x1 ^ x2"), &t("x2 ^ x1"), 2)
            .unwrap()
            .unwrap();
        let m = PrimitiveModel::new(2);
        assert_ne!(
            evaluate(&t("x1 ^ x2"), &m, &cex).unwrap(),
            evaluate(&t("x2 ^ x1"), &m, &cex).unwrap()
        );
        assert_eq!(
            oracle_equal(&t("x3"), &t("x1"), 2),
            Err(Error::VariableOutsideUniverse { var: 3, n: 2 })
        );
    }

    #[test]
    fn profile_has_all_assignments() {
        let p = evaluation_profile(&parse("x1").unwrap(), 3).unwrap();
        assert_eq!(p.len(), 64);
        assert_eq!(&p[..5], &[0, 1, 2, 3, 0]);
    }

    #[test]
    fn assignment_accessors() {
        let mut a = Assignment::new();
        a.set(3, 2u32);
        assert_eq!(a.get(3), Some(&2));
        assert_eq!(a.get(1), None);
        assert_eq!(a.get(0), None);
        assert_eq!(a.to_string(), "x3=2");
    }
}
