//! Partitions of subsets of a finite universe `{1 … n}`.
//!
//! A [`Partition`] is stored in canonical form: blocks ordered by their
//! minimum element, elements ascending inside each block. Structural equality
//! is therefore mathematical equality.
//!
//! Partitions are totally ordered by universe, then domain size, then the
//! token sequence of their text form (`"12|3" < "13|2" < "1|23"`), where the
//! block separator sorts after every index. All enumerations in this module
//! return their results in that order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// The index set `{1 … n}` of a generator set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Universe(u32);

impl Universe {
    pub const fn new(n: u32) -> Self {
        Universe(n)
    }

    pub const fn size(self) -> u32 {
        self.0
    }

    pub fn contains(self, index: u32) -> bool {
        (1..=self.0).contains(&index)
    }

    pub fn indices(self) -> impl DoubleEndedIterator<Item = u32> + Clone {
        1..=self.0
    }

    pub fn is_within(self, other: Universe) -> bool {
        self.0 <= other.0
    }

    /// The universe with one more generator.
    pub fn successor(self) -> Self {
        Universe(self.0 + 1)
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X_{}", self.0)
    }
}

/// A partition of a subset of a [`Universe`], in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    universe: Universe,
    blocks: Vec<Vec<u32>>,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Token {
    Elem(u32),
    Sep,
}

impl Partition {
    /// Validates and canonicalizes raw blocks.
    pub fn new<B, I>(universe: Universe, raw_blocks: B) -> Result<Self>
    where
        B: IntoIterator<Item = I>,
        I: IntoIterator<Item = u32>,
    {
        let mut seen = BTreeSet::new();
        let mut blocks = Vec::new();
        for raw in raw_blocks {
            let mut block: Vec<u32> = raw.into_iter().collect();
            if block.is_empty() {
                return Err(Error::EmptyBlock);
            }
            for &x in &block {
                if !universe.contains(x) {
                    return Err(Error::IndexOutOfRange {
                        index: x,
                        n: universe.size(),
                    });
                }
                if !seen.insert(x) {
                    return Err(Error::DuplicateIndex(x));
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        Ok(Self::from_sorted_blocks(universe, blocks))
    }

    /// The partition with no blocks (empty domain).
    pub fn empty(universe: Universe) -> Self {
        Partition {
            universe,
            blocks: Vec::new(),
        }
    }

    // Blocks must be valid and internally sorted.
    fn from_sorted_blocks(universe: Universe, mut blocks: Vec<Vec<u32>>) -> Self {
        blocks.sort_unstable_by_key(|b| b[0]);
        Partition { universe, blocks }
    }

    fn from_raw_valid(universe: Universe, mut blocks: Vec<Vec<u32>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        Self::from_sorted_blocks(universe, blocks)
    }

    /// Parses the text form (`"13|2"`, `"x1x10|x2"`, `"∅"`).
    pub fn parse(text: &str, universe: Universe) -> Result<Self> {
        let blocks = parse_blocks(text)?;
        Partition::new(universe, blocks)
    }

    /// Parses the text form, taking the universe to be `{1 … max index}`.
    pub fn parse_inferred(text: &str) -> Result<Self> {
        let blocks = parse_blocks(text)?;
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        Partition::new(Universe::new(n), blocks)
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn rank(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `dom(α)`, ascending.
    pub fn domain(&self) -> Vec<u32> {
        let mut dom: Vec<u32> = self.blocks.iter().flatten().copied().collect();
        dom.sort_unstable();
        dom
    }

    pub fn domain_len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Index of the block containing `x`, if `x ∈ dom(α)`.
    pub fn block_of(&self, x: u32) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&x).is_ok())
    }

    /// Index of `block` among the blocks, if it is one.
    pub fn block_index(&self, block: &[u32]) -> Option<usize> {
        let mut sorted = block.to_vec();
        sorted.sort_unstable();
        self.blocks.iter().position(|b| *b == sorted)
    }

    /// The same partition seen over a larger universe.
    pub fn widen(&self, universe: Universe) -> Result<Self> {
        if !self.universe.is_within(universe) {
            return Err(Error::UniverseNotContained {
                sub: self.universe.size(),
                sup: universe.size(),
            });
        }
        Ok(Partition {
            universe,
            blocks: self.blocks.clone(),
        })
    }

    /// Restriction to the prefix universe `{1 … m}`: every block is cut down
    /// to its elements `≤ m` and blocks that become empty are dropped.
    pub fn restrict(&self, universe: Universe) -> Result<Self> {
        if !universe.is_within(self.universe) {
            return Err(Error::UniverseNotContained {
                sub: universe.size(),
                sup: self.universe.size(),
            });
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .copied()
                    .filter(|&x| x <= universe.size())
                    .collect::<Vec<_>>()
            })
            .filter(|b| !b.is_empty())
            .collect();
        Ok(Self::from_sorted_blocks(universe, blocks))
    }

    fn tokens(&self) -> impl Iterator<Item = Token> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, b)| {
            (i > 0)
                .then_some(Token::Sep)
                .into_iter()
                .chain(b.iter().map(|&x| Token::Elem(x)))
        })
    }

    fn wide_indices(&self) -> bool {
        self.blocks.iter().flatten().any(|&x| x >= 10)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe
            .cmp(&other.universe)
            .then_with(|| self.domain_len().cmp(&other.domain_len()))
            .then_with(|| self.tokens().cmp(other.tokens()))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Elements are concatenated (`13|2`) while every index is a single digit;
/// otherwise each index is written with an `x` prefix (`x1x10|x2`).
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("∅");
        }
        let prefix = if self.wide_indices() { "x" } else { "" };
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for x in block {
                write!(f, "{prefix}{x}")?;
            }
        }
        Ok(())
    }
}

fn parse_blocks(text: &str) -> Result<Vec<Vec<u32>>> {
    let trimmed = text.trim();
    let offset = text.len() - text.trim_start().len();
    if trimmed == "∅" {
        return Ok(Vec::new());
    }
    if trimmed.is_empty() {
        return Err(Error::parse(offset, "expected a partition"));
    }
    let mut blocks = Vec::new();
    let mut pos = offset;
    for part in trimmed.split('|') {
        let block = if part.contains('x') {
            parse_prefixed_block(part, pos)?
        } else {
            part.char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .map(|(i, c)| match c.to_digit(10) {
                    Some(d) if d > 0 => Ok(d),
                    _ => Err(Error::parse(pos + i, format!("unexpected {c:?}"))),
                })
                .collect::<Result<Vec<_>>>()?
        };
        if block.is_empty() {
            return Err(Error::parse(pos, "empty block"));
        }
        blocks.push(block);
        pos += part.len() + 1;
    }
    Ok(blocks)
}

// `x1x10` -> [1, 10]
fn parse_prefixed_block(part: &str, pos: usize) -> Result<Vec<u32>> {
    let body = part.trim();
    let lead = part.len() - part.trim_start().len();
    if !body.starts_with('x') {
        return Err(Error::parse(pos + lead, "expected 'x'"));
    }
    let mut block = Vec::new();
    let mut p = pos + lead;
    for item in body.split('x').skip(1) {
        let value = item
            .parse::<u32>()
            .map_err(|_| Error::parse(p + 1, format!("invalid index {item:?}")))?;
        block.push(value);
        p += item.len() + 1;
    }
    Ok(block)
}

/// A partition with one marked block: the index `(X, α, A)` of an
/// elementary element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointedPartition {
    partition: Partition,
    marked: usize,
}

impl PointedPartition {
    pub fn new(partition: Partition, marked: usize) -> Result<Self> {
        if marked >= partition.rank() {
            return Err(Error::MarkedOutOfRange {
                marked,
                rank: partition.rank(),
            });
        }
        Ok(PointedPartition { partition, marked })
    }

    /// Marks the block equal to `block`.
    pub fn with_marked_block(partition: Partition, block: &[u32]) -> Result<Self> {
        let marked = partition
            .block_index(block)
            .ok_or_else(|| Error::NotABlock {
                block: block.to_vec(),
                partition: partition.to_string(),
            })?;
        Ok(PointedPartition { partition, marked })
    }

    /// Parses `"13|2*1"`: a partition followed by `*` and the zero-based
    /// index of the marked block.
    pub fn parse(text: &str, universe: Universe) -> Result<Self> {
        let (body, marked) = split_mark(text)?;
        Self::new(Partition::parse(body, universe)?, marked)
    }

    pub fn parse_inferred(text: &str) -> Result<Self> {
        let (body, marked) = split_mark(text)?;
        Self::new(Partition::parse_inferred(body)?, marked)
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn marked(&self) -> usize {
        self.marked
    }

    pub fn marked_block(&self) -> &[u32] {
        &self.partition.blocks[self.marked]
    }

    pub fn universe(&self) -> Universe {
        self.partition.universe
    }

    pub fn rank(&self) -> usize {
        self.partition.rank()
    }
}

impl fmt::Display for PointedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*{}", self.partition, self.marked)
    }
}

fn split_mark(text: &str) -> Result<(&str, usize)> {
    let star = text.rfind('*').ok_or_else(|| {
        Error::parse(
            text.len(),
            "expected '*' followed by the marked block index",
        )
    })?;
    let marked = text[star + 1..]
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::parse(star + 1, "invalid marked block index"))?;
    Ok((&text[..star], marked))
}

/// Canonical form of a collection of raw blocks.
pub fn canonicalize<B, I>(universe: Universe, raw_blocks: B) -> Result<Partition>
where
    B: IntoIterator<Item = I>,
    I: IntoIterator<Item = u32>,
{
    Partition::new(universe, raw_blocks)
}

/// An injective map from a source universe into a target universe, used to
/// relate partitions over `Z ⊆ Y` when `Z` is not the prefix `{1 … |Z|}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Injection {
    target: Universe,
    map: Vec<u32>,
}

impl Injection {
    /// `map[i - 1]` is the image of index `i`.
    pub fn new(map: Vec<u32>, target: Universe) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &y in &map {
            if !target.contains(y) {
                return Err(Error::InvalidInjection(format!(
                    "image {y} outside {{1..{}}}",
                    target.size()
                )));
            }
            if !seen.insert(y) {
                return Err(Error::InvalidInjection(format!("image {y} hit twice")));
            }
        }
        Ok(Injection { target, map })
    }

    /// The inclusion `{1 … m} ⊆ {1 … n}`.
    pub fn prefix(source: Universe, target: Universe) -> Result<Self> {
        if !source.is_within(target) {
            return Err(Error::UniverseNotContained {
                sub: source.size(),
                sup: target.size(),
            });
        }
        Ok(Injection {
            target,
            map: source.indices().collect(),
        })
    }

    pub fn source(&self) -> Universe {
        Universe::new(self.map.len() as u32)
    }

    pub fn target(&self) -> Universe {
        self.target
    }

    pub fn image_of(&self, x: u32) -> u32 {
        self.map[x as usize - 1]
    }

    /// Target indices not hit by the map, ascending.
    pub fn complement(&self) -> Vec<u32> {
        let image: BTreeSet<u32> = self.map.iter().copied().collect();
        self.target
            .indices()
            .filter(|y| !image.contains(y))
            .collect()
    }

    /// Transports a partition over the source universe to the target.
    pub fn apply(&self, partition: &Partition) -> Result<Partition> {
        self.check_source(partition)?;
        let blocks = partition
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| self.image_of(x)).collect())
            .collect();
        Ok(Partition::from_raw_valid(self.target, blocks))
    }

    fn check_source(&self, partition: &Partition) -> Result<()> {
        if partition.universe != self.source() {
            return Err(Error::UniverseMismatch {
                left: partition.universe.size(),
                right: self.source().size(),
            });
        }
        Ok(())
    }
}

/// `(Z, α) ⪯ (Y, β)` with `Z = {1 … |Z|}` a prefix of `Y`.
pub fn contains(sub: &Partition, sup: &Partition) -> Result<bool> {
    let inj = Injection::prefix(sub.universe, sup.universe)?;
    contains_via(sub, sup, &inj)
}

/// `(Z, α) ⪯ (Y, β)` along an explicit injection `Z → Y`.
pub fn contains_via(sub: &Partition, sup: &Partition, inj: &Injection) -> Result<bool> {
    if sup.universe != inj.target {
        return Err(Error::UniverseMismatch {
            left: sup.universe.size(),
            right: inj.target.size(),
        });
    }
    let alpha = inj.apply(sub)?;
    let fresh: BTreeSet<u32> = inj.complement().into_iter().collect();
    let old_dom: BTreeSet<u32> = alpha.domain().into_iter().collect();
    // dom(β) ⊆ dom(α) ∪ (Y ∖ Z)
    if !sup
        .blocks
        .iter()
        .flatten()
        .all(|x| old_dom.contains(x) || fresh.contains(x))
    {
        return Ok(false);
    }
    // Each block of α sits inside one block of β, distinct blocks in distinct
    // blocks; this also gives dom(α) ⊆ dom(β).
    let mut hosts = BTreeSet::new();
    for block in &alpha.blocks {
        let Some(host) = sup.block_of(block[0]) else {
            return Ok(false);
        };
        if !block.iter().all(|&x| sup.block_of(x) == Some(host)) || !hosts.insert(host) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn not_contained(sub: &Partition, sup: &Partition) -> Error {
    Error::NotContained {
        sub: sub.to_string(),
        sup: sup.to_string(),
    }
}

/// `A↑`: the block of `β` containing the block `A` of `α`.
pub fn induced_block<'b>(
    block: &[u32],
    alpha: &Partition,
    beta: &'b Partition,
) -> Result<&'b [u32]> {
    let i = alpha.block_index(block).ok_or_else(|| Error::NotABlock {
        block: block.to_vec(),
        partition: alpha.to_string(),
    })?;
    if !contains(alpha, beta)? {
        return Err(not_contained(alpha, beta));
    }
    let host = beta
        .block_of(alpha.blocks[i][0])
        .expect("containment puts dom(α) inside dom(β)");
    Ok(&beta.blocks[host])
}

/// `B↓ = B ∩ dom(α)`, a block of `α`.
pub fn restrict_block<'a>(
    block: &[u32],
    beta: &Partition,
    alpha: &'a Partition,
) -> Result<&'a [u32]> {
    let j = beta.block_index(block).ok_or_else(|| Error::NotABlock {
        block: block.to_vec(),
        partition: beta.to_string(),
    })?;
    if !contains(alpha, beta)? {
        return Err(not_contained(alpha, beta));
    }
    let first_old = beta.blocks[j].iter().find_map(|&x| alpha.block_of(x));
    match first_old {
        Some(i) => Ok(&alpha.blocks[i]),
        None => Err(Error::EmptyRestriction {
            block: beta.blocks[j].clone(),
        }),
    }
}

/// All `β` over `Y` with `(X, α) ⪯ (Y, β)`, `X` a prefix of `Y`.
pub fn enumerate_extensions(alpha: &Partition, target: Universe) -> Result<Vec<Partition>> {
    let inj = Injection::prefix(alpha.universe, target)?;
    enumerate_extensions_via(alpha, &inj)
}

/// All `β` containing `α` along an explicit injection. Every fresh index is
/// placed in turn: left out of the domain, added to an existing block, or
/// started as a new singleton block.
pub fn enumerate_extensions_via(alpha: &Partition, inj: &Injection) -> Result<Vec<Partition>> {
    let base = inj.apply(alpha)?;
    let fresh = inj.complement();
    let mut out = Vec::new();
    let mut blocks = base.blocks.clone();
    grow(inj.target, &mut blocks, &fresh, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn grow(universe: Universe, blocks: &mut Vec<Vec<u32>>, fresh: &[u32], out: &mut Vec<Partition>) {
    let Some((&t, rest)) = fresh.split_first() else {
        out.push(Partition::from_raw_valid(universe, blocks.clone()));
        return;
    };
    grow(universe, blocks, rest, out);
    for i in 0..blocks.len() {
        blocks[i].push(t);
        grow(universe, blocks, rest, out);
        blocks[i].pop();
    }
    blocks.push(vec![t]);
    grow(universe, blocks, rest, out);
    blocks.pop();
}

/// All partitions of non-empty subsets of the universe, in canonical order.
/// There are `B_{n+1} − 1` of them.
pub fn enumerate_all(universe: Universe) -> Vec<Partition> {
    let mut out = Vec::new();
    let fresh: Vec<u32> = universe.indices().collect();
    grow(universe, &mut Vec::new(), &fresh, &mut out);
    out.retain(|p| !p.is_empty());
    out.sort_unstable();
    out
}

/// Bell number `B_m`, via the Bell triangle.
pub fn bell(m: u32) -> BigUint {
    let mut row = vec![BigUint::one()];
    for _ in 0..m {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().cloned().unwrap_or_else(BigUint::zero));
        for v in &row {
            let sum = next.last().unwrap() + v;
            next.push(sum);
        }
        row = next;
    }
    row[0].clone()
}

/// Stirling number of the second kind `S(m, k)`.
pub fn stirling2(m: u32, k: u32) -> Result<BigUint> {
    if k > m {
        return Err(Error::InvalidStirling { m, k });
    }
    // row[j] = S(i, j)
    let mut row = vec![BigUint::zero(); k as usize + 1];
    row[0] = BigUint::one();
    for _ in 0..m {
        for j in (1..=k as usize).rev() {
            row[j] = &row[j] * BigUint::from(j) + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    Ok(row[k as usize].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32, text: &str) -> Partition {
        Partition::parse(text, Universe::new(n)).unwrap()
    }

    #[test]
    fn canonicalize_sorts_blocks_and_elements() {
        let a = canonicalize(Universe::new(5), vec![vec![4], vec![1, 3]]).unwrap();
        assert_eq!(a.blocks(), &[vec![1, 3], vec![4]]);
        let b = canonicalize(Universe::new(5), vec![vec![3, 1], vec![4]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn canonicalize_rejects_bad_blocks() {
        let u = Universe::new(3);
        assert_eq!(
            canonicalize(u, vec![vec![1], vec![1, 2]]),
            Err(Error::DuplicateIndex(1))
        );
        assert_eq!(canonicalize(u, vec![vec![]]), Err(Error::EmptyBlock));
        assert!(matches!(
            canonicalize(u, vec![vec![4]]),
            Err(Error::IndexOutOfRange { index: 4, n: 3 })
        ));
    }

    #[test]
    fn containment_examples() {
        let alpha = p(3, "1|2");
        assert!(contains(&alpha, &p(4, "1|24")).unwrap());
        assert!(!contains(&alpha, &p(4, "13|24")).unwrap());
        assert!(contains(&alpha, &alpha).unwrap());
        assert!(matches!(
            contains(&p(4, "1"), &p(3, "1")),
            Err(Error::UniverseNotContained { .. })
        ));
    }

    #[test]
    fn containment_along_injection() {
        // Z = {1, 2} sent to {2, 4} inside {1 … 4}.
        let inj = Injection::new(vec![2, 4], Universe::new(4)).unwrap();
        let alpha = p(2, "1|2");
        assert!(contains_via(&alpha, &p(4, "13|2|4"), &inj).unwrap());
        assert!(!contains_via(&alpha, &p(4, "1|24"), &inj).unwrap());
        assert!(!contains_via(&alpha, &p(4, "2"), &inj).unwrap());
        assert_eq!(inj.complement(), vec![1, 3]);
        assert!(Injection::new(vec![2, 2], Universe::new(4)).is_err());
    }

    #[test]
    fn induced_and_restricted_blocks() {
        let alpha = p(3, "1|2");
        let beta = p(4, "1|24");
        assert_eq!(induced_block(&[2], &alpha, &beta).unwrap(), &[2, 4]);
        assert_eq!(restrict_block(&[2, 4], &beta, &alpha).unwrap(), &[2]);
        assert_eq!(
            induced_block(&[1], &p(2, "1|2"), &p(3, "1|2|3")).unwrap(),
            &[1]
        );
        assert_eq!(
            induced_block(&[1, 3], &p(3, "13|2"), &p(3, "13|2")).unwrap(),
            &[1, 3]
        );
        assert!(matches!(
            restrict_block(&[3], &p(3, "1|2|3"), &p(2, "1|2")),
            Err(Error::EmptyRestriction { .. })
        ));
        assert!(matches!(
            induced_block(&[1], &alpha, &p(4, "13|24")),
            Err(Error::NotContained { .. })
        ));
    }

    #[test]
    fn extensions_examples() {
        let ext = |a: &Partition, n| -> Vec<String> {
            enumerate_extensions(a, Universe::new(n))
                .unwrap()
                .iter()
                .map(ToString::to_string)
                .collect()
        };
        assert_eq!(ext(&p(2, "1|2"), 3), ["1|2", "13|2", "1|23", "1|2|3"]);
        assert_eq!(ext(&p(2, "12"), 3), ["12", "123", "12|3"]);
        assert_eq!(ext(&p(2, "12"), 2), ["12"]);
        assert!(enumerate_extensions(&p(3, "1"), Universe::new(2)).is_err());
    }

    #[test]
    fn enumerate_small_universes() {
        let names = |n| -> Vec<String> {
            enumerate_all(Universe::new(n))
                .iter()
                .map(ToString::to_string)
                .collect()
        };
        assert_eq!(names(1), ["1"]);
        assert_eq!(names(2), ["1", "2", "12", "1|2"]);
        assert_eq!(enumerate_all(Universe::new(3)).len(), 14);
    }

    #[test]
    fn canonical_order_follows_text_order() {
        let rank2: Vec<String> = enumerate_all(Universe::new(3))
            .into_iter()
            .filter(|a| a.rank() == 2)
            .map(|a| a.to_string())
            .collect();
        assert_eq!(rank2, ["1|2", "1|3", "2|3", "12|3", "13|2", "1|23"]);
    }

    #[test]
    fn bell_and_stirling_values() {
        let b: Vec<u64> = (0..8).map(|m| bell(m).try_into().unwrap()).collect();
        assert_eq!(b, [1, 1, 2, 5, 15, 52, 203, 877]);
        assert_eq!(stirling2(4, 2).unwrap(), BigUint::from(7u32));
        assert_eq!(stirling2(4, 4).unwrap(), BigUint::one());
        assert_eq!(stirling2(0, 0).unwrap(), BigUint::one());
        assert_eq!(stirling2(5, 0).unwrap(), BigUint::zero());
        for m in 0..12 {
            assert_eq!(stirling2(m, m).unwrap(), BigUint::one());
        }
        assert_eq!(stirling2(2, 3), Err(Error::InvalidStirling { m: 2, k: 3 }));
    }

    #[test]
    fn text_forms() {
        let a = p(12, "x1x10|2");
        assert_eq!(a.blocks(), &[vec![1, 10], vec![2]]);
        assert_eq!(a.to_string(), "x1x10|x2");
        assert_eq!(p(12, &a.to_string()), a);
        assert_eq!(p(12, "1|x10").to_string(), "x1|x10");
        assert_eq!(
            Partition::parse("∅", Universe::new(0)).unwrap().to_string(),
            "∅"
        );
        let pp = PointedPartition::parse("13|2*1", Universe::new(3)).unwrap();
        assert_eq!(pp.marked_block(), &[2]);
        assert_eq!(pp.to_string(), "13|2*1");
        assert!(PointedPartition::parse("13|2*2", Universe::new(3)).is_err());
        assert!(matches!(
            Partition::parse("1|x", Universe::new(3)),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(Partition::parse("1||2", Universe::new(3)).is_err());
    }

    #[test]
    fn restriction_to_prefix() {
        assert_eq!(
            p(4, "13|24").restrict(Universe::new(2)).unwrap(),
            p(2, "1|2")
        );
        assert_eq!(
            p(4, "4").restrict(Universe::new(2)).unwrap(),
            Partition::empty(Universe::new(2))
        );
    }
}
