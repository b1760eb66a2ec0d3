//! Canonical forms for isomorphism testing.
//!
//! Colors are refined from (height, down-set size, up-set size) using the
//! multisets of colors below and above each element. Remaining ties are broken
//! by individualizing each member of the first non-trivial cell in turn. Every
//! discrete coloring yields a relabeling; the key is the lexicographically
//! smallest serialized order matrix over all of them.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{bit, bits, Lattice};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    key: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.key
    }

    pub fn to_hex(&self) -> String {
        self.key.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(hex: &str) -> Result<Self> {
        if !hex.len().is_multiple_of(2) {
            return Err(Error::invalid("odd-length canonical key"));
        }
        let key = (0..hex.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&hex[i..i + 2], 16))
            .collect::<std::result::Result<Vec<u8>, _>>()
            .map_err(|e| Error::invalid(format!("bad canonical key: {e}")))?;
        Ok(CanonicalForm { key })
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

pub fn canonical_form(lattice: &Lattice) -> CanonicalForm {
    canonical_labeling(lattice).0
}

/// Canonical key plus a relabeling `perm` (element `x` goes to `perm[x]`)
/// under which the lattice's order matrix serializes to the key.
pub fn canonical_labeling(lattice: &Lattice) -> (CanonicalForm, Vec<usize>) {
    let n = lattice.size();
    let mut search = Search {
        lattice,
        best: None,
    };
    let colors = search.refine(initial_colors(lattice));
    search.descend(colors);
    let (key, perm) = search.best.expect("search visits at least one leaf");
    debug_assert_eq!(perm.len(), n);
    (CanonicalForm { key }, perm)
}

/// The lattice relabeled into canonical order, with its key.
pub fn canonical_representative(lattice: &Lattice) -> (CanonicalForm, Lattice) {
    let (key, perm) = canonical_labeling(lattice);
    let relabeled = lattice.relabel(&perm).expect("canonical labeling is a permutation");
    (key, relabeled)
}

pub fn are_isomorphic(a: &Lattice, b: &Lattice) -> bool {
    a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

fn initial_colors(lattice: &Lattice) -> Vec<u32> {
    let n = lattice.size();
    // |down| order is a linear extension
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| lattice.down_set(x).count_ones());
    let mut height = vec![0u32; n];
    for &x in &order {
        height[x] = bits(lattice.lower_covers(x)).map(|y| height[y] + 1).max().unwrap_or(0);
    }
    let sigs: Vec<Vec<u32>> = (0..n)
        .map(|x| {
            vec![
                height[x],
                lattice.down_set(x).count_ones(),
                lattice.up_set(x).count_ones(),
                lattice.upper_covers(x).count_ones(),
                lattice.lower_covers(x).count_ones(),
            ]
        })
        .collect();
    rank(&sigs)
}

/// Replace each signature by its rank among the distinct signatures.
fn rank<T: Ord + Clone>(sigs: &[T]) -> Vec<u32> {
    let mut distinct: Vec<T> = sigs.to_vec();
    distinct.sort();
    distinct.dedup();
    sigs.iter()
        .map(|s| distinct.binary_search(s).expect("signature present") as u32)
        .collect()
}

fn cell_count(colors: &[u32]) -> usize {
    let mut seen = 0u64;
    for &c in colors {
        seen |= bit(c as usize);
    }
    seen.count_ones() as usize
}

struct Search<'a> {
    lattice: &'a Lattice,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let l = self.lattice;
        let n = l.size();
        let mut cells = cell_count(&colors);
        loop {
            if cells == n {
                return colors;
            }
            let sigs: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..n)
                .map(|x| {
                    let mut below: Vec<u32> = bits(l.down_set(x) & !bit(x)).map(|y| colors[y]).collect();
                    let mut above: Vec<u32> = bits(l.up_set(x) & !bit(x)).map(|y| colors[y]).collect();
                    below.sort_unstable();
                    above.sort_unstable();
                    (colors[x], below, above)
                })
                .collect();
            let next = rank(&sigs);
            let next_cells = cell_count(&next);
            colors = next;
            if next_cells == cells {
                return colors;
            }
            cells = next_cells;
        }
    }

    fn descend(&mut self, colors: Vec<u32>) {
        let n = colors.len();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
            self.leaf(&colors);
            return;
        };
        let members: Vec<usize> = (0..n).filter(|&x| colors[x] as usize == target).collect();
        for &v in &members {
            let sigs: Vec<(u32, bool)> = (0..n).map(|x| (colors[x], x != v)).collect();
            let split = self.refine(rank(&sigs));
            self.descend(split);
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        let l = self.lattice;
        let n = l.size();
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let mut inverse = vec![0usize; n];
        for (x, &p) in perm.iter().enumerate() {
            inverse[p] = x;
        }
        let row_bytes = n.div_ceil(8);
        let mut key = Vec::with_capacity(1 + n * row_bytes);
        key.push(n as u8);
        for &x in &inverse {
            let row = bits(l.up_set(x)).fold(0u64, |acc, y| acc | bit(perm[y]));
            key.extend_from_slice(&row.to_be_bytes()[8 - row_bytes..]);
        }
        match &self.best {
            Some((best, _)) if *best <= key => {}
            _ => self.best = Some((key, perm)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean_lattice, chain, quotient};

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn invariant_under_all_relabelings_small() {
        let b3 = boolean_lattice(3).unwrap();
        let (q, _) = quotient(&b3, 0b011).unwrap();
        let pentagon = Lattice::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        for l in [b3, q, pentagon, chain(4).unwrap()] {
            let key = canonical_form(&l);
            for p in permutations(l.size()) {
                assert_eq!(canonical_form(&l.relabel(&p).unwrap()), key);
            }
        }
    }

    #[test]
    fn distinguishes_b2_from_chain() {
        let b2 = boolean_lattice(2).unwrap();
        let c4 = chain(4).unwrap();
        assert_ne!(canonical_form(&b2), canonical_form(&c4));
        assert!(!are_isomorphic(&b2, &c4));
    }

    #[test]
    fn representative_has_the_same_key() {
        let b4 = boolean_lattice(4).unwrap();
        let (q, _) = quotient(&b4, 0b0111).unwrap();
        let (key, rep) = canonical_representative(&q);
        assert_eq!(canonical_form(&rep), key);
        // relabeling the representative again is an automorphism of it
        let (_, perm) = canonical_labeling(&rep);
        assert_eq!(rep.relabel(&perm).unwrap(), rep);
    }

    #[test]
    fn hex_round_trip() {
        let key = canonical_form(&boolean_lattice(3).unwrap());
        assert_eq!(CanonicalForm::from_hex(&key.to_hex()).unwrap(), key);
        assert!(CanonicalForm::from_hex("abc").is_err());
    }
}
