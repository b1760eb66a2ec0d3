//! Multigraded Betti numbers of `S/I` from the lcm-lattice.
//!
//! For `m` above the bottom, `beta_{i,m}(S/I)` is the rank of the reduced
//! homology `H_{i-2}` of the order complex of the open interval `(0, m)`,
//! with rational coefficients. `beta_{0,0} = 1`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{bit, bits, is_atomistic, Lattice};
use crate::realize::{lcm_lattice, MonomialIdeal};

/// A simplicial complex on at most 64 vertices; faces are vertex bitmasks
/// grouped by dimension. `faces[0]` holds the empty face.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    /// Vertex labels, e.g. lattice elements.
    pub vertices: Vec<usize>,
    faces: Vec<Vec<u64>>,
}

impl SimplicialComplex {
    /// The complex generated by `facets` (lists of vertex positions).
    pub fn from_facets(vertices: Vec<usize>, facets: &[Vec<usize>]) -> Result<Self> {
        if vertices.len() > 64 {
            return Err(Error::Resource("simplicial complexes are limited to 64 vertices".into()));
        }
        let mut all: Vec<u64> = vec![0];
        for facet in facets {
            let mut mask = 0u64;
            for &v in facet {
                if v >= vertices.len() {
                    return Err(Error::invalid(format!("facet vertex {v} out of range")));
                }
                mask |= bit(v);
            }
            // every nonempty subset of the facet
            let mut sub = mask;
            while sub != 0 {
                all.push(sub);
                sub = (sub - 1) & mask;
            }
        }
        all.sort_unstable();
        all.dedup();
        Ok(Self::from_face_masks(vertices, all))
    }

    fn from_face_masks(vertices: Vec<usize>, masks: Vec<u64>) -> Self {
        let top = masks.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0);
        let mut faces = vec![Vec::new(); top + 1];
        for m in masks {
            faces[m.count_ones() as usize].push(m);
        }
        for level in &mut faces {
            level.sort_unstable();
        }
        SimplicialComplex { vertices, faces }
    }

    /// Largest face dimension (`-1` when only the empty face is present).
    pub fn dimension(&self) -> isize {
        self.faces.len() as isize - 2
    }

    /// Faces of dimension `d` (`d >= -1`) as vertex bitmasks.
    pub fn faces(&self, d: isize) -> &[u64] {
        usize::try_from(d + 1)
            .ok()
            .and_then(|i| self.faces.get(i))
            .map_or(&[], |v| v.as_slice())
    }

    /// f-vector starting at dimension -1.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(i, f)| if i % 2 == 1 { f.len() as i64 } else { -(f.len() as i64) })
            .sum()
    }

    /// Boundary matrix from dimension `d` to `d - 1`, rows indexed by the
    /// `(d-1)`-faces and columns by the `d`-faces.
    pub fn boundary_matrix(&self, d: isize) -> Vec<Vec<i64>> {
        let lower = self.faces(d - 1);
        let upper = self.faces(d);
        let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut m = vec![vec![0i64; upper.len()]; lower.len()];
        for (c, &face) in upper.iter().enumerate() {
            for (pos, v) in bits(face).enumerate() {
                let r = index[&(face & !bit(v))];
                m[r][c] = if pos % 2 == 0 { 1 } else { -1 };
            }
        }
        m
    }
}

/// Order complex of the open interval `(lo, hi)`: its vertices are the
/// elements strictly between, its faces the chains among them.
pub fn order_complex(lattice: &Lattice, lo: usize, hi: usize) -> Result<SimplicialComplex> {
    if lo >= lattice.size() || hi >= lattice.size() || !lattice.lt(lo, hi) {
        return Err(Error::invalid(format!("{lo} is not strictly below {hi}")));
    }
    let open = (lattice.up_set(lo) & lattice.down_set(hi)) & !bit(lo) & !bit(hi);
    let mut vertices: Vec<usize> = bits(open).collect();
    // a linear extension, so chains are increasing position sequences
    vertices.sort_by_key(|&x| (lattice.down_set(x).count_ones(), x));
    let n = vertices.len();
    let above: Vec<u64> = vertices
        .iter()
        .map(|&x| {
            (0..n)
                .filter(|&j| lattice.lt(x, vertices[j]))
                .fold(0u64, |acc, j| acc | bit(j))
        })
        .collect();
    let mut masks = vec![0u64];
    let mut stack: Vec<(u64, u64)> = (0..n).map(|v| (bit(v), above[v])).collect();
    while let Some((chain, ext)) = stack.pop() {
        masks.push(chain);
        for w in bits(ext) {
            stack.push((chain | bit(w), ext & above[w]));
        }
    }
    Ok(SimplicialComplex::from_face_masks(vertices, masks))
}

/// Ranks of reduced homology over the rationals, from dimension -1 up to the
/// dimension of the complex.
pub fn reduced_homology_ranks(complex: &SimplicialComplex) -> Vec<usize> {
    let top = complex.dimension();
    let f = complex.f_vector();
    // rank of the boundary map out of dimension d, for d = -1 ..= top + 1
    let mut boundary_rank = vec![0usize; f.len() + 1];
    for d in 0..=top {
        boundary_rank[(d + 1) as usize] = rank(complex.boundary_matrix(d));
    }
    (0..f.len())
        .map(|i| f[i] - boundary_rank[i] - boundary_rank[i + 1])
        .collect()
}

/// Exact rank of an integer matrix.
///
/// Unit pivots are eliminated first in `i64`; the remainder goes through
/// fraction-free (Bareiss) elimination in `i128`. On overflow the whole
/// computation restarts with arbitrary precision.
pub fn rank(matrix: Vec<Vec<i64>>) -> usize {
    if matrix.is_empty() || matrix[0].is_empty() {
        return 0;
    }
    let original = matrix.clone();
    match rank_checked(matrix) {
        Some(r) => r,
        None => rank_bigint(original.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()),
    }
}

fn rank_checked(mut m: Vec<Vec<i64>>) -> Option<usize> {
    let cols = m[0].len();
    let mut r = 0usize;
    let mut live_cols: Vec<usize> = (0..cols).collect();
    // unit pivots
    loop {
        let mut found = None;
        'search: for (ci, &c) in live_cols.iter().enumerate() {
            for (i, row) in m.iter().enumerate().skip(r) {
                if row[c] == 1 || row[c] == -1 {
                    found = Some((ci, c, i));
                    break 'search;
                }
            }
        }
        let Some((ci, c, i)) = found else { break };
        m.swap(r, i);
        let pivot_row = m[r].clone();
        let p = pivot_row[c];
        for row in m.iter_mut().skip(r + 1) {
            let factor = row[c] * p;
            if factor != 0 {
                for &cc in &live_cols {
                    row[cc] = row[cc].checked_sub(factor.checked_mul(pivot_row[cc])?)?;
                }
            }
        }
        live_cols.swap_remove(ci);
        r += 1;
    }
    let rest: Vec<Vec<i128>> = m[r..]
        .iter()
        .map(|row| live_cols.iter().map(|&c| row[c] as i128).collect())
        .filter(|row: &Vec<i128>| row.iter().any(|&x| x != 0))
        .collect();
    Some(r + bareiss_i128(rest)?)
}

fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    if m.is_empty() {
        return Some(0);
    }
    let cols = m[0].len();
    let mut r = 0usize;
    let mut prev: i128 = 1;
    for c in 0..cols {
        let Some(i) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, i);
        let p = m[r][c];
        for i in r + 1..m.len() {
            let a = m[i][c];
            for j in c..cols {
                let v = p.checked_mul(m[i][j])?.checked_sub(a.checked_mul(m[r][j])?)?;
                m[i][j] = v / prev;
            }
        }
        prev = p;
        r += 1;
        if r == m.len() {
            break;
        }
    }
    Some(r)
}

fn rank_bigint(mut m: Vec<Vec<BigInt>>) -> usize {
    let cols = m[0].len();
    let zero = BigInt::from(0);
    let mut r = 0usize;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        let Some(i) = (r..m.len()).find(|&i| m[i][c] != zero) else { continue };
        m.swap(r, i);
        let p = m[r][c].clone();
        for i in r + 1..m.len() {
            let a = m[i][c].clone();
            for j in c..cols {
                let v = &p * &m[i][j] - &a * &m[r][j];
                m[i][j] = v / &prev;
            }
        }
        prev = p;
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Nonzero multigraded Betti numbers of `S/I`, keyed by
/// (homological degree, lattice element).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub element: usize,
    pub value: u64,
}

impl BettiTable {
    pub fn get(&self, i: usize, m: usize) -> u64 {
        self.entries.get(&(i, m)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> Vec<BettiEntry> {
        self.entries
            .iter()
            .map(|(&(i, element), &value)| BettiEntry { i, element, value })
            .collect()
    }

    /// Total Betti numbers `beta_i = sum_m beta_{i,m}` for `i = 0..=pdim`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.projective_dimension() + 1];
        for (&(i, _), &v) in &self.entries {
            out[i] += v;
        }
        out
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }
}

pub fn betti_table(lattice: &Lattice) -> Result<BettiTable> {
    if !is_atomistic(lattice) {
        return Err(Error::invalid("Betti numbers are read off atomistic (lcm-)lattices only"));
    }
    let bottom = lattice.bottom();
    let mut entries = BTreeMap::new();
    entries.insert((0, bottom), 1);
    for m in (0..lattice.size()).filter(|&m| m != bottom) {
        let complex = order_complex(lattice, bottom, m)?;
        for (j, &h) in reduced_homology_ranks(&complex).iter().enumerate() {
            // j indexes reduced homology from dimension -1, i.e. i = j + 1
            if h > 0 {
                entries.insert((j + 1, m), h as u64);
            }
        }
    }
    Ok(BettiTable { entries })
}

pub fn pdim_quotient(lattice: &Lattice) -> Result<usize> {
    Ok(betti_table(lattice)?.projective_dimension())
}

pub fn pdim_ideal(lattice: &Lattice) -> Result<usize> {
    Ok(pdim_quotient(lattice)? - 1)
}

/// `depth S/I = n - pdim S/I`.
pub fn depth_quotient(ideal: &MonomialIdeal) -> Result<usize> {
    let pdim = pdim_quotient(&lcm_lattice(ideal)?.lattice)?;
    Ok(ideal.num_vars() - pdim)
}
