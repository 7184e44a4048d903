//! Counting data of the finite free algebras, the generability test for
//! finite products of primitive algebras, and the partition tree.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::partitions::{bell, enumerate_all, stirling2, Partition, PointedPartition, Universe};
use crate::{Error, Result};

/// Closed-form counts for the free algebra on `n` generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeAlgebraStats {
    pub n: u32,
    /// Number of atomic D-classes, i.e. of supports.
    pub atomic_dclass_count: BigUint,
    pub atom_count: BigUint,
    pub cardinality: BigUint,
    pub center_size: BigUint,
    /// Rank `k` to the number of factors `(k+1)_L`.
    pub factor_signature: BTreeMap<u32, BigUint>,
}

/// Counts for `n ≥ 1` generators.
pub fn stats(n: u32) -> Result<FreeAlgebraStats> {
    if n == 0 {
        return Err(Error::NoGenerators);
    }
    let factor_signature: BTreeMap<u32, BigUint> = (1..=n)
        .map(|k| Ok((k, stirling2(n + 1, k + 1)?)))
        .collect::<Result<_>>()?;
    let cardinality = factor_signature
        .iter()
        .fold(BigUint::one(), |acc, (&k, mult)| {
            acc * pow_big(BigUint::from(k + 1), mult)
        });
    let atomic_dclass_count = bell(n + 1) - BigUint::one();
    let atom_count = bell(n + 2) - bell(n + 1) * 2u32;
    let center_size = BigUint::from(2u32).pow((1u32 << n) - 1);
    Ok(FreeAlgebraStats {
        n,
        atomic_dclass_count,
        atom_count,
        cardinality,
        center_size,
        factor_signature,
    })
}

fn pow_big(base: BigUint, exp: &BigUint) -> BigUint {
    let e = u32::try_from(exp).expect("exponent too large to materialize");
    base.pow(e)
}

impl FreeAlgebraStats {
    /// `cardinality` written as a product of prime-power-like factors, e.g.
    /// `2^7 * 3^6 * 4`.
    pub fn factorization(&self) -> String {
        let parts: Vec<String> = self
            .factor_signature
            .iter()
            .filter(|(_, m)| **m != BigUint::default())
            .map(|(k, m)| {
                if m.is_one() {
                    format!("{}", k + 1)
                } else {
                    format!("{}^{}", k + 1, m)
                }
            })
            .collect();
        parts.join(" * ")
    }

    /// JSON object with integer fields; big numbers are emitted exactly.
    pub fn to_json(&self) -> String {
        let sig: Vec<String> = self
            .factor_signature
            .iter()
            .map(|(k, m)| format!("\"{k}\": {m}"))
            .collect();
        format!(
            "{{\"n\": {}, \"atomic_dclass_count\": {}, \"atom_count\": {}, \"cardinality\": {}, \"center_size\": {}, \"factor_signature\": {{{}}}}}",
            self.n,
            self.atomic_dclass_count,
            self.atom_count,
            self.cardinality,
            self.center_size,
            sig.join(", ")
        )
    }
}

impl fmt::Display for FreeAlgebraStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators          {}", self.n)?;
        writeln!(f, "atomic D-classes    {}", self.atomic_dclass_count)?;
        writeln!(f, "atoms               {}", self.atom_count)?;
        writeln!(f, "cardinality         {}", self.cardinality)?;
        writeln!(f, "factorization       {}", self.factorization())?;
        writeln!(f, "center size         {}", self.center_size)?;
        write!(f, "factor signature   ")?;
        for (k, m) in &self.factor_signature {
            write!(f, " {}_L^{}", k + 1, m)?;
        }
        Ok(())
    }
}

/// Every pointed partition of a non-empty subset of `{1 … n}`, one per atom.
pub fn enumerate_atoms(n: u32) -> Vec<PointedPartition> {
    enumerate_all(Universe::new(n))
        .into_iter()
        .flat_map(|p| {
            (0..p.rank()).map(move |i| {
                PointedPartition::new(p.clone(), i).expect("marked index within rank")
            })
        })
        .collect()
}

/// Whether a product of primitive algebras is `n`-generated. `signature`
/// maps a factor size `m` (the algebra `m_L`) to its multiplicity; sizes
/// below 2 are trivial factors and ignored.
pub fn generable(n: u32, signature: &BTreeMap<u32, u64>) -> bool {
    signature.iter().all(|(&m, &mult)| {
        if m < 2 || mult == 0 {
            return true;
        }
        if m > n + 1 {
            return false;
        }
        let bound = stirling2(n + 1, m).expect("m ≤ n+1");
        BigUint::from(mult) <= bound
    })
}

/// A vertex of the partition tree: a partition of a subset of `{1 … level}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeVertex {
    pub level: u32,
    pub partition: Partition,
}

impl TreeVertex {
    pub fn new(partition: Partition) -> Self {
        TreeVertex {
            level: partition.universe().size(),
            partition,
        }
    }

    pub fn root() -> Self {
        TreeVertex::new(Partition::empty(Universe::new(0)))
    }
}

impl fmt::Display for TreeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)
    }
}

/// Level `i` of the tree in canonical order, starting with the empty partition.
pub fn tree_level(i: u32) -> Vec<TreeVertex> {
    let universe = Universe::new(i);
    std::iter::once(Partition::empty(universe))
        .chain(enumerate_all(universe))
        .map(TreeVertex::new)
        .collect()
}

/// The one-step extensions of `v`: the new element as a singleton block,
/// then added to each block in turn, then left out.
pub fn tree_children(v: &TreeVertex) -> Vec<TreeVertex> {
    let next = Universe::new(v.level + 1);
    let t = v.level + 1;
    let blocks = v.partition.blocks();
    let mut out = Vec::with_capacity(blocks.len() + 2);
    let mut with_singleton = blocks.to_vec();
    with_singleton.push(vec![t]);
    out.push(with_singleton);
    for i in 0..blocks.len() {
        let mut joined = blocks.to_vec();
        joined[i].push(t);
        out.push(joined);
    }
    out.push(blocks.to_vec());
    out.into_iter()
        .map(|b| TreeVertex::new(Partition::new(next, b).expect("extension of a valid partition")))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeFormat {
    Dot,
    Json,
}

impl FromStr for TreeFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(TreeFormat::Dot),
            "json" => Ok(TreeFormat::Json),
            _ => Err(Error::UnsupportedFormat(s.to_string())),
        }
    }
}

#[derive(Serialize)]
struct JsonVertex {
    id: String,
    level: u32,
    label: String,
}

#[derive(Serialize)]
struct JsonEdge {
    from: String,
    to: String,
}

#[derive(Serialize)]
struct JsonTree {
    vertices: Vec<JsonVertex>,
    edges: Vec<JsonEdge>,
}

/// Serializes the first `depth + 1` levels. Node ids are `L<level>_<index>`
/// with the index taken in canonical order within the level.
pub fn export_tree(depth: u32, format: TreeFormat) -> String {
    let levels: Vec<Vec<TreeVertex>> = (0..=depth).map(tree_level).collect();
    let id_of = |v: &TreeVertex| -> String {
        let idx = levels[v.level as usize]
            .binary_search(v)
            .expect("vertex present in its level");
        format!("L{}_{}", v.level, idx)
    };
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (lvl, row) in levels.iter().enumerate() {
        for v in row {
            vertices.push(JsonVertex {
                id: id_of(v),
                level: lvl as u32,
                label: v.to_string(),
            });
            if (lvl as u32) < depth {
                for c in tree_children(v) {
                    edges.push(JsonEdge {
                        from: id_of(v),
                        to: id_of(&c),
                    });
                }
            }
        }
    }
    match format {
        TreeFormat::Json => {
            serde_json::to_string_pretty(&JsonTree { vertices, edges }).expect("serializable")
        }
        TreeFormat::Dot => {
            let mut s = String::from("digraph partition_tree {\n");
            for v in &vertices {
                s.push_str(&format!("  {} [label=\"{}\"];\n", v.id, v.label));
            }
            for e in &edges {
                s.push_str(&format!("  {} -> {};\n", e.from, e.to));
            }
            s.push_str("}\n");
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn stats_small() {
        let s = stats(2).unwrap();
        assert_eq!(s.atomic_dclass_count, big(4));
        assert_eq!(s.atom_count, big(5));
        assert_eq!(s.cardinality, big(24));
        assert_eq!(s.center_size, big(8));
        assert_eq!(
            s.factor_signature,
            BTreeMap::from([(1, big(3)), (2, big(1))])
        );
        let s = stats(3).unwrap();
        assert_eq!(s.cardinality, big(373248));
        assert_eq!(s.factorization(), "2^7 * 3^6 * 4");
        let s = stats(1).unwrap();
        assert_eq!(
            (s.atom_count, s.cardinality, s.center_size),
            (big(1), big(2), big(2))
        );
        assert!(stats(0).is_err());
    }

    #[test]
    fn stats_json_shape() {
        let v: serde_json::Value = serde_json::from_str(&stats(2).unwrap().to_json()).unwrap();
        assert_eq!(v["cardinality"], 24);
        assert_eq!(v["factor_signature"]["2"], 1);
    }

    #[test]
    fn atoms_listing() {
        let names: Vec<String> = enumerate_atoms(2).iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["1*0", "2*0", "12*0", "1|2*0", "1|2*1"]);
        assert_eq!(enumerate_atoms(3).len(), 22);
    }

    #[test]
    fn generability() {
        assert!(generable(3, &BTreeMap::from([(3, 6)])));
        assert!(!generable(3, &BTreeMap::from([(3, 7)])));
        assert!(generable(2, &BTreeMap::from([(2, 1)])));
        assert!(!generable(2, &BTreeMap::from([(4, 1)])));
        assert!(generable(2, &BTreeMap::from([(1, 100), (3, 1)])));
    }

    #[test]
    fn tree_levels_and_children() {
        let sizes: Vec<usize> = (0..=4).map(|i| tree_level(i).len()).collect();
        assert_eq!(sizes, [1, 2, 5, 15, 52]);
        let v = TreeVertex::new(Partition::parse("1|2", Universe::new(2)).unwrap());
        let kids: Vec<String> = tree_children(&v).iter().map(|c| c.to_string()).collect();
        assert_eq!(kids, ["1|2|3", "13|2", "1|23", "1|2"]);
        let root_kids: Vec<String> = tree_children(&TreeVertex::root())
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(root_kids, ["1", "∅"]);
    }

    #[test]
    fn export_counts() {
        let v: serde_json::Value = serde_json::from_str(&export_tree(3, TreeFormat::Json)).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 23);
        assert_eq!(v["edges"].as_array().unwrap().len(), 22);
        let d1: serde_json::Value =
            serde_json::from_str(&export_tree(1, TreeFormat::Json)).unwrap();
        assert_eq!(d1["vertices"][1]["label"], "∅");
        assert_eq!(d1["vertices"][2]["label"], "1");
        let dot = export_tree(0, TreeFormat::Dot);
        assert!(dot.contains("L0_0 [label=\"∅\"]"));
        assert!(!dot.contains("->"));
        assert!("svg".parse::<TreeFormat>().is_err());
    }
}
