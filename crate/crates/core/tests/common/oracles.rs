//! Slow reference implementations that share no code with the library
//! beyond its input types.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use lcmlattice::{Lattice, MonomialIdeal};

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Rank over the rationals by fraction-free elimination.
pub fn rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
    }
    r
}

/// Multigraded Betti numbers of `S/I` from the Taylor complex: in degree
/// `b`, the complex spanned by generator subsets with lcm `b`, where a face
/// of a subset survives tensoring with the field only when its lcm is still `b`.
/// Returns total Betti numbers indexed by homological degree.
pub fn taylor_betti_totals(ideal: &MonomialIdeal) -> Vec<u64> {
    let gens = ideal.generators();
    let k = gens.len();
    assert!(k <= 12, "Taylor oracle is exponential in the number of generators");
    let n = ideal.num_vars();
    let mut by_degree: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
    for mask in 0u32..(1 << k) {
        let m = (0..k)
            .filter(|&j| mask >> j & 1 == 1)
            .fold(vec![0u32; n], |acc, j| lcm(&acc, &gens[j]));
        by_degree.entry(m).or_default().push(mask);
    }
    let mut totals = vec![0u64; k + 1];
    for subsets in by_degree.values() {
        let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); k + 1];
        for &s in subsets {
            by_size[s.count_ones() as usize].push(s);
        }
        // boundary from size i to size i-1, restricted to this degree
        let boundary_rank = |i: usize| -> usize {
            if i == 0 || by_size[i].is_empty() || by_size[i - 1].is_empty() {
                return 0;
            }
            let index: BTreeMap<u32, usize> = by_size[i - 1].iter().enumerate().map(|(r, &s)| (s, r)).collect();
            let mut matrix = vec![vec![0i128; by_size[i].len()]; by_size[i - 1].len()];
            for (col, &s) in by_size[i].iter().enumerate() {
                let mut sign = 1;
                for j in 0..k {
                    if s >> j & 1 == 1 {
                        if let Some(&row) = index.get(&(s & !(1 << j))) {
                            matrix[row][col] = sign;
                        }
                        sign = -sign;
                    }
                }
            }
            rank(matrix)
        };
        let ranks: Vec<usize> = (0..=k + 1).map(|i| if i <= k { boundary_rank(i) } else { 0 }).collect();
        for i in 0..=k {
            let homology = by_size[i].len() - ranks[i] - ranks[i + 1];
            totals[i] += homology as u64;
        }
    }
    while totals.len() > 1 && *totals.last().unwrap() == 0 {
        totals.pop();
    }
    totals
}

/// Stanley depth by exhaustive enumeration of interval partitions, with
/// only the trivial bound `min rho` pruning. `quotient` selects `S/I`.
pub fn sdepth_brute_force(ideal: &MonomialIdeal, quotient: bool) -> usize {
    let g = ideal.lcm_of_generators();
    let n = g.len();
    let mut points: Vec<Vec<u32>> = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        let inside = ideal.generators().iter().any(|m| m.iter().zip(&cur).all(|(a, b)| a <= b));
        if inside != quotient {
            points.push(cur.clone());
        }
        let mut j = 0;
        while j < n && cur[j] == g[j] {
            cur[j] = 0;
            j += 1;
        }
        if j == n {
            break;
        }
        cur[j] += 1;
    }
    assert!(points.len() <= 64, "brute force is limited to 64 points");
    // linear extension: by total degree
    points.sort_by_key(|p| (p.iter().sum::<u32>(), p.clone()));
    let leq = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);
    let rho = |b: &[u32]| b.iter().zip(&g).filter(|(x, y)| x == y).count();
    let m = points.len();
    let mut intervals: Vec<Vec<(u64, usize)>> = vec![Vec::new(); m];
    for c in 0..m {
        for b in 0..m {
            if leq(&points[c], &points[b]) {
                let mask = (0..m)
                    .filter(|&p| leq(&points[c], &points[p]) && leq(&points[p], &points[b]))
                    .fold(0u64, |acc, p| acc | 1 << p);
                intervals[c].push((mask, rho(&points[b])));
            }
        }
    }
    fn go(intervals: &[Vec<(u64, usize)>], covered: u64, m: usize, current: usize, best: &mut Option<usize>) {
        if best.is_some_and(|b| current <= b) {
            return;
        }
        let Some(c) = (0..m).find(|&p| covered >> p & 1 == 0) else {
            *best = Some(current);
            return;
        };
        for &(mask, r) in &intervals[c] {
            if mask & covered == 0 {
                go(intervals, covered | mask, m, current.min(r), best);
            }
        }
    }
    let mut best = None;
    go(&intervals, 0, m, n, &mut best);
    best.expect("singletons always form a partition")
}

/// Number of isomorphism classes of atomistic lattices on `k` atoms, as
/// families of subsets of `[k]` closed under intersection that contain the
/// empty set, every singleton and `[k]`, counted up to relabeling.
pub fn closure_system_count(k: usize) -> usize {
    let full = (1u32 << k) - 1;
    let middle: Vec<u32> = (1..full).filter(|s| s.count_ones() >= 2).collect();
    let perms = permutations(k);
    let mut classes: BTreeSet<Vec<u32>> = BTreeSet::new();
    for choice in 0u64..(1 << middle.len()) {
        let mut family: Vec<u32> = vec![0, full];
        family.extend((0..k).map(|i| 1u32 << i));
        family.extend((0..middle.len()).filter(|&i| choice >> i & 1 == 1).map(|i| middle[i]));
        let set: BTreeSet<u32> = family.iter().copied().collect();
        if !set.iter().all(|&a| set.iter().all(|&b| set.contains(&(a & b)))) {
            continue;
        }
        let canonical = perms
            .iter()
            .map(|p| {
                let mut image: Vec<u32> = set
                    .iter()
                    .map(|&s| (0..k).filter(|&i| s >> i & 1 == 1).fold(0u32, |acc, i| acc | 1 << p[i]))
                    .collect();
                image.sort_unstable();
                image
            })
            .min()
            .unwrap();
        classes.insert(canonical);
    }
    classes.len()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..k {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Breadth straight from the definition: the least `p` such that every
/// nonempty subset has a subset of size at most `p` with the same join.
pub fn breadth_literal(l: &Lattice) -> usize {
    let n = l.size();
    assert!(n <= 12, "literal breadth is limited to 12 elements");
    let join_of = |mask: u32| (0..n).filter(|&i| mask >> i & 1 == 1).fold(l.bottom(), |acc, i| l.join(acc, i));
    let joins: Vec<usize> = (0..1u32 << n).map(join_of).collect();
    let mut worst = 0;
    for x in 1u32..(1 << n) {
        let target = joins[x as usize];
        let mut smallest = x.count_ones();
        let mut y = x;
        while y > 0 {
            if y.count_ones() < smallest && joins[y as usize] == target {
                smallest = y.count_ones();
            }
            y = (y - 1) & x;
        }
        worst = worst.max(smallest);
    }
    worst as usize
}
