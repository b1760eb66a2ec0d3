//! Length, breadth and order dimension.

use serde::{Deserialize, Serialize};

use crate::lattice::{bit, bits, is_distributive, join_irreducibles, Lattice};

/// One row of the invariant tables. Stanley projective dimensions are
/// `None` when they were not computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub id: usize,
    pub cardinality: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pdim_quotient: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub spdim_quotient: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pdim_ideal: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub spdim_ideal: Option<usize>,
    pub length: usize,
    pub breadth: usize,
    pub order_dimension: usize,
}

impl InvariantRecord {
    /// Record with the purely lattice-theoretic columns filled in.
    pub fn for_lattice(id: usize, lattice: &Lattice) -> Self {
        InvariantRecord {
            id,
            cardinality: lattice.size(),
            pdim_quotient: None,
            spdim_quotient: None,
            pdim_ideal: None,
            spdim_ideal: None,
            length: length(lattice),
            breadth: breadth(lattice),
            order_dimension: order_dimension(lattice),
        }
    }
}

/// Number of edges in a longest chain.
pub fn length(lattice: &Lattice) -> usize {
    let mut order: Vec<usize> = (0..lattice.size()).collect();
    order.sort_by_key(|&x| lattice.down_set(x).count_ones());
    let mut height = vec![0usize; lattice.size()];
    for &x in &order {
        height[x] = bits(lattice.lower_covers(x)).map(|y| height[y] + 1).max().unwrap_or(0);
    }
    height[lattice.top()]
}

/// Smallest `p` such that the join of any `p + 1` elements is already the
/// join of `p` of them.
///
/// An irredundant family can always be traded for one of join-irreducibles
/// of the same size, so only subsets of join-irreducibles are examined.
pub fn breadth(lattice: &Lattice) -> usize {
    let irreducibles = join_irreducibles(lattice);
    let mut p = 1;
    while p < irreducibles.len() && has_irredundant_subset(lattice, &irreducibles, p + 1) {
        p += 1;
    }
    p
}

fn has_irredundant_subset(lattice: &Lattice, pool: &[usize], size: usize) -> bool {
    fn go(lattice: &Lattice, pool: &[usize], start: usize, size: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == size {
            return chosen.iter().enumerate().all(|(i, &x)| {
                let rest = lattice.join_all(chosen.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &y)| y));
                !lattice.leq(x, rest)
            });
        }
        for i in start..pool.len() {
            chosen.push(pool[i]);
            if go(lattice, pool, i + 1, size, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    go(lattice, pool, 0, size, &mut Vec::with_capacity(size))
}

/// Order dimension: the least number of linear extensions whose
/// intersection is the order of `lattice`.
///
/// Computed by distributing the critical pairs over `m` extensions for
/// increasing `m`; each group of reversed pairs must stay acyclic together
/// with the order.
pub fn order_dimension(lattice: &Lattice) -> usize {
    let n = lattice.size();
    let strict_down = |x: usize| lattice.down_set(x) & !bit(x);
    let strict_up = |x: usize| lattice.up_set(x) & !bit(x);
    let mut critical = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x != y
                && !lattice.leq(x, y)
                && !lattice.leq(y, x)
                && strict_down(x) & !strict_down(y) == 0
                && strict_up(y) & !strict_up(x) == 0
            {
                critical.push((x, y));
            }
        }
    }
    if critical.is_empty() {
        return 1;
    }
    // pairs sharing elements interact most; keep them close together
    critical.sort_by_key(|&(x, y)| (x.min(y), x.max(y)));
    let base: Vec<u64> = (0..n).map(|x| lattice.up_set(x)).collect();
    let mut m = 2;
    loop {
        let mut classes = vec![base.clone(); m];
        if assign(&critical, 0, &mut classes, 0) {
            return m;
        }
        m += 1;
    }
}

/// Add `lo < hi` to a transitively closed relation; false if that creates a cycle.
fn reverse_into(up: &mut [u64], lo: usize, hi: usize) -> bool {
    if up[hi] & bit(lo) != 0 {
        return false;
    }
    let above_hi = up[hi];
    for u in 0..up.len() {
        if up[u] & bit(lo) != 0 {
            up[u] |= above_hi;
        }
    }
    true
}

fn assign(pairs: &[(usize, usize)], i: usize, classes: &mut [Vec<u64>], used: usize) -> bool {
    let Some(&(x, y)) = pairs.get(i) else {
        return true;
    };
    // reversing (x, y) puts y below x
    let limit = (used + 1).min(classes.len());
    if classes[..used].iter().any(|up| up[y] & bit(x) != 0) {
        return assign(pairs, i + 1, classes, used);
    }
    for c in 0..limit {
        let saved = classes[c].clone();
        if reverse_into(&mut classes[c], y, x) && assign(pairs, i + 1, classes, used.max(c + 1)) {
            return true;
        }
        classes[c] = saved;
    }
    false
}

/// Least `m` such that the lattice is a sublattice (join and meet preserved)
/// of a product of `m` chains. Such embeddings exist only for distributive
/// lattices, where `m` is the width of the poset of join-irreducibles.
pub fn sublattice_dimension(lattice: &Lattice) -> Option<usize> {
    if !is_distributive(lattice) {
        return None;
    }
    let j = join_irreducibles(lattice);
    if j.is_empty() {
        return Some(0);
    }
    let mut best = 1;
    for mask in 1u64..(1 << j.len()) {
        let members: Vec<usize> = bits(mask).map(|i| j[i]).collect();
        let antichain = members
            .iter()
            .all(|&a| members.iter().all(|&b| a == b || !lattice.leq(a, b)));
        if antichain {
            best = best.max(members.len());
        }
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean_lattice, chain};

    fn m_n(n: usize) -> Lattice {
        // bottom 0, atoms 1..=n, top n+1
        Lattice::from_leq(n + 2, |x, y| x == y || x == 0 || y == n + 1).unwrap()
    }

    /// Dimension by brute force over all sets of linear extensions.
    fn dimension_oracle(l: &Lattice) -> usize {
        fn extensions(l: &Lattice, placed: u64, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let n = l.size();
            if prefix.len() == n {
                out.push(prefix.clone());
                return;
            }
            for x in 0..n {
                if placed & bit(x) == 0 && (l.down_set(x) & !bit(x)) & !placed == 0 {
                    prefix.push(x);
                    extensions(l, placed | bit(x), prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut exts = Vec::new();
        extensions(l, 0, &mut Vec::new(), &mut exts);
        let n = l.size();
        let positions: Vec<Vec<usize>> = exts
            .iter()
            .map(|e| {
                let mut pos = vec![0; n];
                for (i, &x) in e.iter().enumerate() {
                    pos[x] = i;
                }
                pos
            })
            .collect();
        for m in 1.. {
            let mut idx = vec![0usize; m];
            loop {
                let realizes = (0..n).all(|x| {
                    (0..n).all(|y| l.leq(x, y) || idx.iter().any(|&e| positions[e][x] > positions[e][y]))
                });
                if realizes {
                    return m;
                }
                let mut k = 0;
                while k < m && idx[k] + 1 == positions.len() {
                    idx[k] = 0;
                    k += 1;
                }
                if k == m {
                    break;
                }
                idx[k] += 1;
            }
        }
        unreachable!()
    }

    #[test]
    fn boolean_invariants() {
        let b4 = boolean_lattice(4).unwrap();
        assert_eq!((length(&b4), breadth(&b4), order_dimension(&b4)), (4, 4, 4));
        for k in 1..=4 {
            assert_eq!(order_dimension(&boolean_lattice(k).unwrap()), k.max(1));
        }
    }

    #[test]
    fn chains_and_m_n() {
        let c = chain(5).unwrap();
        assert_eq!((length(&c), breadth(&c), order_dimension(&c)), (4, 1, 1));
        let m4 = m_n(4);
        assert_eq!((length(&m4), breadth(&m4), order_dimension(&m4)), (2, 2, 2));
        assert_eq!(sublattice_dimension(&m4), None);
    }

    #[test]
    fn dimension_matches_brute_force() {
        let pentagon = Lattice::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        let b3 = boolean_lattice(3).unwrap();
        let (q, _) = crate::lattice::quotient(&b3, 0b011).unwrap();
        for l in [pentagon, b3, q, m_n(3), m_n(4), chain(3).unwrap()] {
            assert_eq!(order_dimension(&l), dimension_oracle(&l), "{l:?}");
        }
    }

    #[test]
    fn sublattice_dimension_of_distributive_lattices() {
        assert_eq!(sublattice_dimension(&boolean_lattice(3).unwrap()), Some(3));
        assert_eq!(sublattice_dimension(&chain(4).unwrap()), Some(1));
    }
}
