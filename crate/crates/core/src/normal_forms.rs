//! Canonical normal forms of elements of the free left-handed SBIA.
//!
//! A [`NormalForm`] over `X_n` is an admissible family of clauses: pointed
//! partitions of non-empty subsets of `{1 … n}` with pairwise distinct
//! supports. It is stored as a map from support partition to the index of
//! its marked block, so admissibility holds by construction.
//!
//! With `π` the support map, the operations are
//!
//! ```text
//! e ∧ f = { c ∈ E : π(c) ∈ π(F) }
//! e ∨ f = { c ∈ E : π(c) ∉ π(F) } ∪ F
//! e ∖ f = { c ∈ E : π(c) ∉ π(F) }
//! e ⊓ f = E ∩ F
//! ```
//!
//! and `e ≤ f` iff `E ⊆ F`. Normal forms over different universes are
//! related only through [`NormalForm::extend_support`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::Rng;
use serde::Deserialize;

use crate::algebra::Sbia;
use crate::partitions::{
    enumerate_all, enumerate_extensions, Partition, PointedPartition, Universe,
};
use crate::terms::{elementary_term, Op, Term};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalForm {
    universe: Universe,
    clauses: BTreeMap<Partition, usize>,
}

impl NormalForm {
    /// The empty family, i.e. `0`.
    pub fn zero(universe: Universe) -> Self {
        NormalForm {
            universe,
            clauses: BTreeMap::new(),
        }
    }

    /// A single clause: the atom indexed by `pp`.
    pub fn atom(pp: &PointedPartition) -> Result<Self> {
        Self::from_clauses(pp.universe(), [pp.clone()])
    }

    /// Builds a normal form, rejecting repeated supports, empty domains and
    /// clauses over another universe.
    pub fn from_clauses(
        universe: Universe,
        clauses: impl IntoIterator<Item = PointedPartition>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for pp in clauses {
            if pp.universe() != universe {
                return Err(Error::UniverseMismatch {
                    left: universe.size(),
                    right: pp.universe().size(),
                });
            }
            if pp.partition().is_empty() {
                return Err(Error::EmptyDomain);
            }
            let text = pp.to_string();
            let marked = pp.marked();
            if map.insert(pp.partition().clone(), marked).is_some() {
                return Err(Error::InvalidNormalForm(format!(
                    "two clauses share the support of {text}"
                )));
            }
        }
        Ok(NormalForm {
            universe,
            clauses: map,
        })
    }

    /// The generator `x` over `universe`: one clause for every support with
    /// `x` in its domain, marked at the block containing `x`.
    pub fn generator(x: u32, universe: Universe) -> Result<Self> {
        if !universe.contains(x) {
            return Err(Error::IndexOutOfRange {
                index: x,
                n: universe.size(),
            });
        }
        let clauses = enumerate_all(universe)
            .into_iter()
            .filter_map(|alpha| alpha.block_of(x).map(|i| (alpha, i)))
            .collect();
        Ok(NormalForm { universe, clauses })
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    /// Number of clauses, i.e. of atoms below the element.
    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    /// Same as [`NormalForm::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.clauses.is_empty()
    }

    /// Clauses as `(support, marked block index)`, in canonical support order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, usize)> {
        self.clauses.iter().map(|(p, &m)| (p, m))
    }

    pub fn clauses(&self) -> Vec<PointedPartition> {
        self.iter()
            .map(|(p, m)| PointedPartition::new(p.clone(), m).expect("stored marks are in range"))
            .collect()
    }

    pub fn supports(&self) -> impl Iterator<Item = &Partition> {
        self.clauses.keys()
    }

    /// Marked block index of the clause with this support, if present.
    pub fn marked_for(&self, support: &Partition) -> Option<usize> {
        self.clauses.get(support).copied()
    }

    pub fn contains_clause(&self, pp: &PointedPartition) -> bool {
        self.marked_for(pp.partition()) == Some(pp.marked())
    }

    fn check_universe(&self, other: &NormalForm) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch {
                left: self.universe.size(),
                right: other.universe.size(),
            });
        }
        Ok(())
    }

    fn filtered(&self, keep: impl Fn(&Partition, usize) -> bool) -> NormalForm {
        NormalForm {
            universe: self.universe,
            clauses: self
                .clauses
                .iter()
                .filter(|(p, &m)| keep(p, m))
                .map(|(p, &m)| (p.clone(), m))
                .collect(),
        }
    }

    fn meet_unchecked(&self, other: &NormalForm) -> NormalForm {
        self.filtered(|p, _| other.clauses.contains_key(p))
    }

    fn join_unchecked(&self, other: &NormalForm) -> NormalForm {
        let mut out = other.clone();
        for (p, &m) in &self.clauses {
            out.clauses.entry(p.clone()).or_insert(m);
        }
        out
    }

    fn diff_unchecked(&self, other: &NormalForm) -> NormalForm {
        self.filtered(|p, _| !other.clauses.contains_key(p))
    }

    fn isect_unchecked(&self, other: &NormalForm) -> NormalForm {
        self.filtered(|p, m| other.clauses.get(p) == Some(&m))
    }

    pub fn meet(&self, other: &NormalForm) -> Result<NormalForm> {
        self.check_universe(other)?;
        Ok(self.meet_unchecked(other))
    }

    pub fn join(&self, other: &NormalForm) -> Result<NormalForm> {
        self.check_universe(other)?;
        Ok(self.join_unchecked(other))
    }

    pub fn diff(&self, other: &NormalForm) -> Result<NormalForm> {
        self.check_universe(other)?;
        Ok(self.diff_unchecked(other))
    }

    pub fn isect(&self, other: &NormalForm) -> Result<NormalForm> {
        self.check_universe(other)?;
        Ok(self.isect_unchecked(other))
    }

    /// `e ≤ f` in the natural order: clause-set inclusion.
    pub fn leq(&self, other: &NormalForm) -> Result<bool> {
        self.check_universe(other)?;
        Ok(self
            .clauses
            .iter()
            .all(|(p, m)| other.clauses.get(p) == Some(m)))
    }

    /// Rewrites every clause `(X, α, A)` as the orthogonal join of the
    /// clauses `(Y, β, A↑)` over all `β` containing `α`.
    pub fn extend_support(&self, target: Universe) -> Result<NormalForm> {
        if !self.universe.is_within(target) {
            return Err(Error::UniverseNotContained {
                sub: self.universe.size(),
                sup: target.size(),
            });
        }
        let mut clauses = BTreeMap::new();
        for (alpha, &m) in &self.clauses {
            let anchor = alpha.blocks()[m][0];
            for beta in enumerate_extensions(alpha, target)? {
                let up = beta.block_of(anchor).expect("extensions keep dom(α)");
                let previous = clauses.insert(beta, up);
                debug_assert!(
                    previous.is_none(),
                    "extensions of distinct supports are disjoint"
                );
            }
        }
        Ok(NormalForm {
            universe: target,
            clauses,
        })
    }

    /// Whether every clause has a rank-1 support, i.e. the element lies in
    /// the center (its 𝒟-class components are all singletons).
    pub fn is_central(&self) -> bool {
        self.clauses.keys().all(|p| p.rank() == 1)
    }

    /// Image in the maximal commutative quotient, a generalized Boolean
    /// algebra: clauses of rank ≥ 2 vanish and each rank-1 clause maps to
    /// its domain.
    pub fn commutative_projection(&self) -> BTreeSet<Vec<u32>> {
        self.clauses
            .keys()
            .filter(|p| p.rank() == 1)
            .map(|p| p.domain())
            .collect()
    }

    /// The normal form written back as a term: the join of its clauses'
    /// elementary terms, or `0`.
    pub fn to_term(&self) -> Term {
        Term::fold(Op::Join, self.clauses().iter().map(elementary_term)).unwrap_or(Term::Zero)
    }

    /// `{"n": 3, "clauses": [{"blocks": [[1,3],[2]], "marked": 0}, …]}`
    pub fn to_json(&self) -> String {
        let mut s = format!("{{\"n\": {}, \"clauses\": [", self.universe.size());
        for (i, (p, m)) in self.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            s.push_str("{\"blocks\": [");
            for (j, block) in p.blocks().iter().enumerate() {
                if j > 0 {
                    s.push(',');
                }
                s.push('[');
                let items: Vec<String> = block.iter().map(u32::to_string).collect();
                s.push_str(&items.join(","));
                s.push(']');
            }
            s.push_str(&format!("], \"marked\": {m}}}"));
        }
        s.push_str("]}");
        s
    }

    /// Reads the JSON encoding. Blocks may be given in any order; `marked`
    /// indexes the blocks as given.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Clause {
            blocks: Vec<Vec<u32>>,
            marked: usize,
        }
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Encoded {
            n: u32,
            clauses: Vec<Clause>,
        }
        let encoded: Encoded = serde_json::from_str(text).map_err(|e| {
            Error::InvalidNormalForm(format!("line {} column {}: {e}", e.line(), e.column()))
        })?;
        let universe = Universe::new(encoded.n);
        let clauses = encoded
            .clauses
            .into_iter()
            .map(|c| {
                let marked_block =
                    c.blocks
                        .get(c.marked)
                        .cloned()
                        .ok_or(Error::MarkedOutOfRange {
                            marked: c.marked,
                            rank: c.blocks.len(),
                        })?;
                let partition = Partition::new(universe, c.blocks)?;
                PointedPartition::with_marked_block(partition, &marked_block)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_clauses(universe, clauses)
    }
}

/// Clauses joined by ` v `, or `0`.
impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, m)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" v ")?;
            }
            write!(f, "{p}*{m}")?;
        }
        Ok(())
    }
}

/// Normal form of `term` over `universe`; decides the word problem.
pub fn normalize(term: &Term, universe: Universe) -> Result<NormalForm> {
    if let Some(&var) = term.variables().iter().find(|&&v| !universe.contains(v)) {
        return Err(Error::VariableOutsideUniverse {
            var,
            n: universe.size(),
        });
    }
    let algebra = FreeAlgebra::new(universe);
    let mut generators = BTreeMap::new();
    for v in term.variables() {
        generators.insert(v, NormalForm::generator(v, universe)?);
    }
    crate::terms::evaluate_with(term, &algebra, &|v| generators.get(&v).cloned())
}

/// The free left-handed SBIA over `x1 … xn`, with normal forms as elements.
#[derive(Clone, Debug)]
pub struct FreeAlgebra {
    universe: Universe,
    supports: Vec<Partition>,
}

impl FreeAlgebra {
    pub fn new(universe: Universe) -> Self {
        FreeAlgebra {
            universe,
            supports: enumerate_all(universe),
        }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    /// Support partitions (atomic 𝒟-classes), in canonical order.
    pub fn supports(&self) -> &[Partition] {
        &self.supports
    }

    pub fn generator(&self, x: u32) -> Result<NormalForm> {
        NormalForm::generator(x, self.universe)
    }

    /// Every element: each support is either absent or present with one of
    /// its blocks marked. Only practical for `n ≤ 3`.
    pub fn elements(&self) -> Vec<NormalForm> {
        let mut out = vec![NormalForm::zero(self.universe)];
        for support in &self.supports {
            let mut next = Vec::with_capacity(out.len() * (support.rank() + 1));
            for e in &out {
                next.push(e.clone());
                for m in 0..support.rank() {
                    let mut with = e.clone();
                    with.clauses.insert(support.clone(), m);
                    next.push(with);
                }
            }
            out = next;
        }
        out
    }

    /// A uniformly random element.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> NormalForm {
        let clauses = self
            .supports
            .iter()
            .filter_map(|s| {
                let choice = rng.gen_range(0..=s.rank());
                (choice > 0).then(|| (s.clone(), choice - 1))
            })
            .collect();
        NormalForm {
            universe: self.universe,
            clauses,
        }
    }
}

impl Sbia for FreeAlgebra {
    type Elem = NormalForm;

    fn zero(&self) -> NormalForm {
        NormalForm::zero(self.universe)
    }

    fn meet(&self, a: &NormalForm, b: &NormalForm) -> NormalForm {
        a.meet_unchecked(b)
    }

    fn join(&self, a: &NormalForm, b: &NormalForm) -> NormalForm {
        a.join_unchecked(b)
    }

    fn diff(&self, a: &NormalForm, b: &NormalForm) -> NormalForm {
        a.diff_unchecked(b)
    }

    fn isect(&self, a: &NormalForm, b: &NormalForm) -> NormalForm {
        a.isect_unchecked(b)
    }

    fn leq(&self, a: &NormalForm, b: &NormalForm) -> bool {
        a.leq(b).unwrap_or(false)
    }
}
