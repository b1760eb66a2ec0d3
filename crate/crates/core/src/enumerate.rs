//! Generation of all atomistic lattices on `k` atoms.
//!
//! Starting from the boolean lattice, each level holds lattices of one
//! cardinality. Every lattice of the level is expanded by identifying each
//! non-atom meet-irreducible element with its cover; the candidates are
//! deduplicated by canonical form once the level is complete, and the result
//! becomes the next level. Cardinality drops by exactly one per level, so a
//! class can never reappear in a later level.
//!
//! Unlike a bare enumeration, the quotient edges between levels are kept:
//! invariants that are monotone along them only need to be evaluated at
//! extremal nodes.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_representative, CanonicalForm};
use crate::error::{Error, Result};
use crate::lattice::{bit, bits, boolean_lattice, is_atomistic, quotient, Lattice};

#[derive(Clone, Debug)]
pub struct DagNode {
    pub id: usize,
    /// Stored relabeled into canonical order.
    pub representative: Lattice,
    pub cardinality: usize,
    pub canonical: CanonicalForm,
}

#[derive(Clone, Debug)]
pub struct EnumerationDag {
    pub k: usize,
    pub nodes: Vec<DagNode>,
    /// `(parent, child)` with `child` a single quotient of `parent`. Sorted.
    pub edges: Vec<(usize, usize)>,
    parents: Vec<Vec<usize>>,
    children: Vec<Vec<usize>>,
}

impl EnumerationDag {
    pub fn new(k: usize, nodes: Vec<DagNode>, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        let n = nodes.len();
        let mut parents = vec![Vec::new(); n];
        let mut children = vec![Vec::new(); n];
        for &(p, c) in &edges {
            if p >= n || c >= n {
                return Err(Error::invalid(format!("edge ({p}, {c}) references a missing node")));
            }
            if p >= c {
                return Err(Error::invalid(format!("edge ({p}, {c}) is not ordered by node id")));
            }
            parents[c].push(p);
            children[p].push(c);
        }
        for (i, node) in nodes.iter().enumerate() {
            if node.id != i {
                return Err(Error::invalid(format!("node at position {i} has id {}", node.id)));
            }
        }
        Ok(EnumerationDag {
            k,
            nodes,
            edges,
            parents,
            children,
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn parents(&self, id: usize) -> &[usize] {
        &self.parents[id]
    }

    pub fn children(&self, id: usize) -> &[usize] {
        &self.children[id]
    }

    /// Node counts per cardinality, largest cardinality first.
    pub fn level_sizes(&self) -> Vec<(usize, usize)> {
        let mut levels: BTreeMap<usize, usize> = BTreeMap::new();
        for node in &self.nodes {
            *levels.entry(node.cardinality).or_default() += 1;
        }
        levels.into_iter().rev().collect()
    }

    pub fn find(&self, key: &CanonicalForm) -> Option<usize> {
        self.nodes.iter().position(|n| &n.canonical == key)
    }

    /// For every node, the set of strict ancestors (reflexive-transitive
    /// closure of the parent relation, minus the node itself).
    pub fn ancestors(&self) -> Vec<NodeSet> {
        let n = self.len();
        let mut out: Vec<NodeSet> = Vec::with_capacity(n);
        for id in 0..n {
            let mut set = NodeSet::new(n);
            for &p in &self.parents[id] {
                set.insert(p);
                set.union_with(&out[p]);
            }
            out.push(set);
        }
        out
    }

    pub fn descendants(&self) -> Vec<NodeSet> {
        let n = self.len();
        let mut out: Vec<NodeSet> = (0..n).map(|_| NodeSet::new(n)).collect();
        for id in (0..n).rev() {
            let mut set = NodeSet::new(n);
            for &c in &self.children[id] {
                set.insert(c);
                set.union_with(&out[c]);
            }
            out[id] = set;
        }
        out
    }
}

/// Fixed-capacity bitset over node ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeSet {
    words: Vec<u64>,
}

impl NodeSet {
    pub fn new(capacity: usize) -> Self {
        NodeSet {
            words: vec![0; capacity.div_ceil(64)],
        }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn union_with(&mut self, other: &NodeSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| bits(word).map(move |b| w * 64 + b))
    }
}

/// One completed cardinality level of the enumeration.
#[derive(Clone, Debug)]
pub struct Level {
    pub cardinality: usize,
    /// Id of the first node of this level; nodes are numbered consecutively.
    pub first_id: usize,
    /// Sorted by canonical key.
    pub nodes: Vec<(CanonicalForm, Lattice)>,
    /// Edges from nodes of the previous level into this one.
    pub edges: Vec<(usize, usize)>,
}

/// Meet-irreducible elements that are neither atoms nor the bottom. The
/// bottom only qualifies in the two-element chain, where identifying it with
/// the single atom would destroy the atom.
pub fn admissible_elements(lattice: &Lattice) -> impl Iterator<Item = usize> + '_ {
    let excluded = lattice.upper_covers(lattice.bottom()) | bit(lattice.bottom());
    (0..lattice.size()).filter(move |&a| lattice.upper_covers(a).count_ones() == 1 && excluded & bit(a) == 0)
}

/// Quotients by every admissible element, in element order.
pub fn admissible_quotients(lattice: &Lattice) -> impl Iterator<Item = Lattice> + '_ {
    admissible_elements(lattice)
        .map(move |a| quotient(lattice, a).expect("meet-irreducible element").0)
}

fn check_atoms(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::invalid("at least one atom is required"));
    }
    if k > 6 {
        return Err(Error::Resource(format!("{k} atoms exceed the 64-element lattice limit")));
    }
    Ok(())
}

/// Run the level-synchronous enumeration, handing each completed level to
/// `sink` before the next one is computed.
///
/// `jobs` caps the worker threads; `None` uses the global rayon pool.
pub fn enumerate_levels<F>(k: usize, jobs: Option<usize>, mut sink: F) -> Result<()>
where
    F: FnMut(&Level) -> Result<()> + Send,
{
    check_atoms(k)?;
    let mut run = move || -> Result<()> {
        let (key, root) = canonical_representative(&boolean_lattice(k)?);
        let mut level = Level {
            cardinality: root.size(),
            first_id: 0,
            nodes: vec![(key, root)],
            edges: Vec::new(),
        };
        loop {
            sink(&level)?;
            let candidates: Vec<(usize, CanonicalForm, Lattice)> = level
                .nodes
                .par_iter()
                .enumerate()
                .flat_map_iter(|(i, (_, lattice))| {
                    admissible_quotients(lattice).map(move |q| {
                        let (key, rep) = canonical_representative(&q);
                        (i, key, rep)
                    })
                })
                .collect();
            if candidates.is_empty() {
                return Ok(());
            }

            // barrier: merge the level's candidates
            let mut unique: BTreeMap<CanonicalForm, Lattice> = BTreeMap::new();
            let mut links: Vec<(usize, CanonicalForm)> = Vec::with_capacity(candidates.len());
            for (parent, key, rep) in candidates {
                assert_eq!(rep.atoms().len(), k, "quotient changed the number of atoms");
                links.push((parent, key.clone()));
                unique.entry(key).or_insert(rep);
            }
            let first_id = level.first_id + level.nodes.len();
            let nodes: Vec<(CanonicalForm, Lattice)> = unique.into_iter().collect();
            let mut edges: Vec<(usize, usize)> = links
                .into_iter()
                .map(|(parent, key)| {
                    let pos = nodes.binary_search_by(|(k, _)| k.cmp(&key)).expect("candidate was merged");
                    (level.first_id + parent, first_id + pos)
                })
                .collect();
            edges.sort_unstable();
            edges.dedup();
            level = Level {
                cardinality: level.cardinality - 1,
                first_id,
                nodes,
                edges,
            };
        }
    };
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Resource(format!("cannot start worker pool: {e}")))?
            .install(run),
        None => run(),
    }
}

/// All isomorphism classes of atomistic lattices on `k` atoms, with the
/// quotient edges between them. Node ids follow (cardinality descending,
/// canonical key).
pub fn generate_all(k: usize) -> Result<EnumerationDag> {
    generate_all_with(k, None)
}

pub fn generate_all_with(k: usize, jobs: Option<usize>) -> Result<EnumerationDag> {
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    enumerate_levels(k, jobs, |level| {
        for (i, (key, lattice)) in level.nodes.iter().enumerate() {
            debug_assert!(is_atomistic(lattice));
            nodes.push(DagNode {
                id: level.first_id + i,
                representative: lattice.clone(),
                cardinality: level.cardinality,
                canonical: key.clone(),
            });
        }
        edges.extend_from_slice(&level.edges);
        Ok(())
    })?;
    EnumerationDag::new(k, nodes, edges)
}

/// Nodes whose value is not attained by any strict ancestor, grouped by value.
pub fn maximal_nodes_by_value<F>(dag: &EnumerationDag, value: F) -> BTreeMap<i64, Vec<usize>>
where
    F: Fn(&DagNode) -> i64,
{
    extremal_by_value(dag, &dag.ancestors(), value)
}

/// Nodes whose value is not attained by any strict descendant, grouped by value.
pub fn minimal_nodes_by_value<F>(dag: &EnumerationDag, value: F) -> BTreeMap<i64, Vec<usize>>
where
    F: Fn(&DagNode) -> i64,
{
    extremal_by_value(dag, &dag.descendants(), value)
}

fn extremal_by_value<F>(dag: &EnumerationDag, related: &[NodeSet], value: F) -> BTreeMap<i64, Vec<usize>>
where
    F: Fn(&DagNode) -> i64,
{
    let values: Vec<i64> = dag.nodes.iter().map(&value).collect();
    let mut out: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for id in 0..dag.len() {
        if !related[id].iter().any(|r| values[r] == values[id]) {
            out.entry(values[id]).or_default().push(id);
        }
    }
    out
}

/// `dag.json`: the manifest written next to the per-node lattice files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DagManifest {
    pub k: usize,
    pub nodes: Vec<NodeEntry>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeEntry {
    pub id: usize,
    pub file: String,
    pub cardinality: usize,
    pub canonical_hex: String,
}

pub const DAG_MANIFEST: &str = "dag.json";

pub fn node_file_name(id: usize) -> String {
    format!("node_{id:06}.json")
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("manifest serializes");
    fs::write(path, text + "\n").map_err(|e| Error::io(path, e))
}

/// Enumerate straight to disk, keeping only the current level in memory.
pub fn enumerate_to_dir(k: usize, dir: &Path, jobs: Option<usize>) -> Result<DagManifest> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut manifest = DagManifest {
        k,
        nodes: Vec::new(),
        edges: Vec::new(),
    };
    enumerate_levels(k, jobs, |level| {
        for (i, (key, lattice)) in level.nodes.iter().enumerate() {
            let id = level.first_id + i;
            let file = node_file_name(id);
            lattice.write_file(dir.join(&file))?;
            manifest.nodes.push(NodeEntry {
                id,
                file,
                cardinality: level.cardinality,
                canonical_hex: key.to_hex(),
            });
        }
        manifest.edges.extend(level.edges.iter().map(|&(p, c)| [p, c]));
        Ok(())
    })?;
    write_json(&dir.join(DAG_MANIFEST), &manifest)?;
    Ok(manifest)
}

pub fn write_dag(dag: &EnumerationDag, dir: &Path) -> Result<DagManifest> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut manifest = DagManifest {
        k: dag.k,
        nodes: Vec::with_capacity(dag.len()),
        edges: dag.edges.iter().map(|&(p, c)| [p, c]).collect(),
    };
    for node in &dag.nodes {
        let file = node_file_name(node.id);
        node.representative.write_file(dir.join(&file))?;
        manifest.nodes.push(NodeEntry {
            id: node.id,
            file,
            cardinality: node.cardinality,
            canonical_hex: node.canonical.to_hex(),
        });
    }
    write_json(&dir.join(DAG_MANIFEST), &manifest)?;
    Ok(manifest)
}

pub fn read_manifest(dir: &Path) -> Result<DagManifest> {
    let path = dir.join(DAG_MANIFEST);
    let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
    serde_json::from_str(&text).map_err(|source| Error::Json { path, source })
}

/// Load a dag written by [`write_dag`] or [`enumerate_to_dir`]. Canonical
/// keys are recomputed and checked against the manifest.
pub fn read_dag(dir: &Path) -> Result<EnumerationDag> {
    let manifest = read_manifest(dir)?;
    let nodes = manifest
        .nodes
        .par_iter()
        .map(|entry| {
            let lattice = Lattice::read_file(dir.join(&entry.file))?;
            let (key, rep) = canonical_representative(&lattice);
            if key.to_hex() != entry.canonical_hex {
                return Err(Error::invalid(format!("node {} does not match its canonical key", entry.id)));
            }
            if rep.size() != entry.cardinality {
                return Err(Error::invalid(format!("node {} has the wrong cardinality", entry.id)));
            }
            Ok(DagNode {
                id: entry.id,
                representative: rep,
                cardinality: entry.cardinality,
                canonical: key,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    EnumerationDag::new(manifest.k, nodes, manifest.edges.iter().map(|&[p, c]| (p, c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(generate_all(1).unwrap().len(), 1);
        let d2 = generate_all(2).unwrap();
        assert_eq!((d2.len(), d2.edges.len()), (1, 0));
        assert_eq!(generate_all(3).unwrap().len(), 4);
        assert!(generate_all(0).is_err());
    }

    #[test]
    fn edges_drop_cardinality_by_one() {
        let dag = generate_all(4).unwrap();
        assert_eq!(dag.len(), 50);
        assert_eq!(dag.nodes[0].cardinality, 16);
        assert_eq!(dag.nodes.iter().filter(|n| n.cardinality == 16).count(), 1);
        for &(p, c) in &dag.edges {
            assert_eq!(dag.nodes[p].cardinality, dag.nodes[c].cardinality + 1);
        }
        for id in 1..dag.len() {
            assert!(!dag.parents(id).is_empty(), "node {id} is unreachable");
        }
    }

    #[test]
    fn constant_value_extremes() {
        let dag = generate_all(3).unwrap();
        let max = maximal_nodes_by_value(&dag, |_| 7);
        assert_eq!(max[&7], vec![0]);
        let min = minimal_nodes_by_value(&dag, |_| 7);
        let leaves: Vec<usize> = (0..dag.len()).filter(|&i| dag.children(i).is_empty()).collect();
        assert_eq!(min[&7], leaves);
    }

    #[test]
    fn jobs_do_not_change_the_result() {
        let a = generate_all_with(4, Some(1)).unwrap();
        let b = generate_all_with(4, Some(3)).unwrap();
        assert_eq!(a.edges, b.edges);
        assert!(a.nodes.iter().zip(&b.nodes).all(|(x, y)| x.canonical == y.canonical));
    }

    #[test]
    fn dag_round_trips_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let dag = generate_all(3).unwrap();
        write_dag(&dag, dir.path()).unwrap();
        let back = read_dag(dir.path()).unwrap();
        assert_eq!(back.edges, dag.edges);
        assert!(back.nodes.iter().zip(&dag.nodes).all(|(x, y)| x.canonical == y.canonical));

        let streamed = tempfile::tempdir().unwrap();
        let manifest = enumerate_to_dir(3, streamed.path(), Some(2)).unwrap();
        assert_eq!(manifest, read_manifest(dir.path()).unwrap());
    }
}
