//! Terms over the signature `(∧, ∨, ∖, ⊓, 0)` and generators `x1, x2, …`.
//!
//! The concrete syntax uses `^` for ∧, `v` for ∨, `\` for ∖ and `&` for ⊓.
//! Binding strength is `&` > `^` > `\` > `v`; every operator associates to
//! the left.

mod parser;
pub mod random;

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::Sbia;
use crate::models::Assignment;
use crate::partitions::PointedPartition;
use crate::{Error, Result};

pub use parser::parse;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    Var(u32),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Diff(Box<Term>, Box<Term>),
    Isect(Box<Term>, Box<Term>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Meet,
    Join,
    Diff,
    Isect,
}

impl Op {
    fn precedence(self) -> u8 {
        match self {
            Op::Join => 1,
            Op::Diff => 2,
            Op::Meet => 3,
            Op::Isect => 4,
        }
    }

    fn ascii(self) -> &'static str {
        match self {
            Op::Meet => "^",
            Op::Join => "v",
            Op::Diff => "\\",
            Op::Isect => "&",
        }
    }

    fn unicode(self) -> &'static str {
        match self {
            Op::Meet => "∧",
            Op::Join => "∨",
            Op::Diff => "∖",
            Op::Isect => "⊓",
        }
    }
}

impl Term {
    pub fn var(index: u32) -> Term {
        Term::Var(index)
    }

    pub fn binary(op: Op, lhs: Term, rhs: Term) -> Term {
        let (l, r) = (Box::new(lhs), Box::new(rhs));
        match op {
            Op::Meet => Term::Meet(l, r),
            Op::Join => Term::Join(l, r),
            Op::Diff => Term::Diff(l, r),
            Op::Isect => Term::Isect(l, r),
        }
    }

    pub fn meet(self, rhs: Term) -> Term {
        Term::binary(Op::Meet, self, rhs)
    }

    pub fn join(self, rhs: Term) -> Term {
        Term::binary(Op::Join, self, rhs)
    }

    pub fn diff(self, rhs: Term) -> Term {
        Term::binary(Op::Diff, self, rhs)
    }

    pub fn isect(self, rhs: Term) -> Term {
        Term::binary(Op::Isect, self, rhs)
    }

    /// Left-nested fold of `op` over `terms`; `None` when `terms` is empty.
    pub fn fold(op: Op, terms: impl IntoIterator<Item = Term>) -> Option<Term> {
        terms.into_iter().reduce(|acc, t| Term::binary(op, acc, t))
    }

    pub fn as_binary(&self) -> Option<(Op, &Term, &Term)> {
        match self {
            Term::Meet(l, r) => Some((Op::Meet, l, r)),
            Term::Join(l, r) => Some((Op::Join, l, r)),
            Term::Diff(l, r) => Some((Op::Diff, l, r)),
            Term::Isect(l, r) => Some((Op::Isect, l, r)),
            Term::Zero | Term::Var(_) => None,
        }
    }

    pub fn depth(&self) -> usize {
        match self.as_binary() {
            Some((_, l, r)) => 1 + l.depth().max(r.depth()),
            None => 0,
        }
    }

    pub fn size(&self) -> usize {
        match self.as_binary() {
            Some((_, l, r)) => 1 + l.size() + r.size(),
            None => 1,
        }
    }

    /// Indices of the generators occurring in the term.
    pub fn variables(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut BTreeSet<u32>) {
        match self {
            Term::Zero => {}
            Term::Var(i) => {
                out.insert(*i);
            }
            _ => {
                let (_, l, r) = self.as_binary().unwrap();
                l.collect_variables(out);
                r.collect_variables(out);
            }
        }
    }

    /// Renders with the mathematical symbols `∧ ∨ ∖ ⊓`.
    pub fn to_unicode(&self) -> String {
        let mut s = String::new();
        self.write(&mut s, true).unwrap();
        s
    }

    fn write(&self, f: &mut impl fmt::Write, unicode: bool) -> fmt::Result {
        match self {
            Term::Zero => f.write_str("0"),
            Term::Var(i) => write!(f, "x{i}"),
            _ => {
                let (op, l, r) = self.as_binary().unwrap();
                let level = op.precedence();
                write_operand(f, l, level, false, unicode)?;
                let symbol = if unicode { op.unicode() } else { op.ascii() };
                write!(f, " {symbol} ")?;
                write_operand(f, r, level, true, unicode)
            }
        }
    }
}

fn write_operand(
    f: &mut impl fmt::Write,
    t: &Term,
    parent: u8,
    right: bool,
    unicode: bool,
) -> fmt::Result {
    let needs_parens = match t.as_binary() {
        Some((op, _, _)) => op.precedence() < parent || (right && op.precedence() == parent),
        None => false,
    };
    if needs_parens {
        f.write_char('(')?;
        t.write(f, unicode)?;
        f.write_char(')')
    } else {
        t.write(f, unicode)
    }
}

/// The ASCII concrete syntax accepted by [`parse`], with minimal parentheses.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, false)
    }
}

impl std::str::FromStr for Term {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

/// Value of `term` in `algebra` under `assignment`, by structural recursion.
pub fn evaluate<A: Sbia>(
    term: &Term,
    algebra: &A,
    assignment: &Assignment<A::Elem>,
) -> Result<A::Elem> {
    evaluate_with(term, algebra, &|i| assignment.get(i).cloned())
}

pub(crate) fn evaluate_with<A, F>(term: &Term, algebra: &A, lookup: &F) -> Result<A::Elem>
where
    A: Sbia,
    F: Fn(u32) -> Option<A::Elem>,
{
    match term {
        Term::Zero => Ok(algebra.zero()),
        Term::Var(i) => lookup(*i).ok_or(Error::UnassignedVariable(*i)),
        Term::Meet(l, r) => Ok(algebra.meet(
            &evaluate_with(l, algebra, lookup)?,
            &evaluate_with(r, algebra, lookup)?,
        )),
        Term::Join(l, r) => Ok(algebra.join(
            &evaluate_with(l, algebra, lookup)?,
            &evaluate_with(r, algebra, lookup)?,
        )),
        Term::Diff(l, r) => Ok(algebra.diff(
            &evaluate_with(l, algebra, lookup)?,
            &evaluate_with(r, algebra, lookup)?,
        )),
        Term::Isect(l, r) => Ok(algebra.isect(
            &evaluate_with(l, algebra, lookup)?,
            &evaluate_with(r, algebra, lookup)?,
        )),
    }
}

/// How [`elementary_term_with`] spells the product `p`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ElementaryStyle {
    /// `(⊓A) ∧ (⊓A_1) ∧ …` with the marked block listed once.
    #[default]
    Compact,
    /// `(⊓A) ∧ (⊓A_1) ∧ … ∧ (⊓A_k)` with the marked block repeated among
    /// the `A_i`.
    Literal,
}

fn isect_of(block: &[u32]) -> Term {
    Term::fold(Op::Isect, block.iter().map(|&x| Term::Var(x))).expect("blocks are non-empty")
}

/// The elementary element `e(X, α, A) = p ∖ (∨Q)` as a term.
///
/// `p` is the ∧-product of the intersections of the blocks, marked block
/// first; `Q` lists the generators outside `dom(α)` followed by
/// `⊓(A_i ∪ A_j)` for every pair of blocks `i < j`. When `Q` is empty the
/// difference is omitted.
pub fn elementary_term(pp: &PointedPartition) -> Term {
    elementary_term_with(pp, ElementaryStyle::Compact)
}

pub fn elementary_term_with(pp: &PointedPartition, style: ElementaryStyle) -> Term {
    let alpha = pp.partition();
    assert!(
        !alpha.is_empty(),
        "elementary elements need a non-empty domain"
    );
    let blocks = alpha.blocks();
    let others = blocks
        .iter()
        .enumerate()
        .filter(|&(i, _)| style == ElementaryStyle::Literal || i != pp.marked())
        .map(|(_, b)| isect_of(b));
    let p = Term::fold(
        Op::Meet,
        std::iter::once(isect_of(pp.marked_block())).chain(others),
    )
    .unwrap();

    let domain: BTreeSet<u32> = alpha.domain().into_iter().collect();
    let outside = alpha
        .universe()
        .indices()
        .filter(|x| !domain.contains(x))
        .map(Term::Var);
    let pairs = (0..blocks.len()).flat_map(|i| {
        (i + 1..blocks.len()).map(move |j| {
            let mut union: Vec<u32> = blocks[i].iter().chain(&blocks[j]).copied().collect();
            union.sort_unstable();
            isect_of(&union)
        })
    });
    match Term::fold(Op::Join, outside.chain(pairs)) {
        Some(q) => p.diff(q),
        None => p,
    }
}
