//! Exact Stanley depth of `I` and `S/I` via interval partitions.
//!
//! Let `g` be the lcm of the generators. The characteristic poset is the set
//! of exponent vectors `a <= g` with `x^a` in `I` (ideal mode) or not in `I`
//! (quotient mode). A partition of it into intervals `[a, b]` gives a Stanley
//! decomposition whose depth is the minimum over intervals of `rho(b)`, the
//! number of coordinates where `b` reaches `g`. The Stanley depth is the best
//! such minimum over all partitions.
//!
//! [`sdepth_decision`] answers "is there a partition with every `rho(b) >= d`"
//! as an exact cover problem: points with `rho < d` must be covered by
//! intervals whose top has `rho >= d`, and the search always branches on the
//! point with the fewest remaining choices. Failed coverage states are
//! memoized. For squarefree posets only tops of rank exactly `d` are needed,
//! and a counting argument on the uncovered points per rank prunes early.
//! Short randomized runs with growing node budgets go first; the final run
//! is complete and reuses the failures the earlier ones proved.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::realize::{Exponents, MonomialIdeal};

/// Default cap on the number of lattice points in the box `[0, g]`.
pub const DEFAULT_BOX_CAP: usize = 1 << 16;

/// Environment variable overriding [`DEFAULT_BOX_CAP`].
pub const BOX_CAP_ENV: &str = "LCMLATTICE_SDEPTH_BOX_CAP";

/// Box cap from [`BOX_CAP_ENV`], falling back to the default.
pub fn box_cap_from_env() -> usize {
    std::env::var(BOX_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BOX_CAP)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Ideal,
    Quotient,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Ideal => "ideal",
            Mode::Quotient => "quotient",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CharacteristicPoset {
    num_vars: usize,
    g: Exponents,
    mode: Mode,
    /// Coordinates of point `p` are `coords[p * num_vars..][..num_vars]`.
    coords: Vec<u32>,
    /// Box index of each point; strictly increasing.
    box_index: Vec<usize>,
    /// Point index for each box index, or `NONE`.
    point_at: Vec<u32>,
    strides: Vec<usize>,
    rho: Vec<u32>,
}

const NONE: u32 = u32::MAX;

pub fn char_poset(ideal: &MonomialIdeal, mode: Mode) -> Result<CharacteristicPoset> {
    char_poset_with_cap(ideal, mode, DEFAULT_BOX_CAP)
}

pub fn char_poset_with_cap(ideal: &MonomialIdeal, mode: Mode, box_cap: usize) -> Result<CharacteristicPoset> {
    let n = ideal.num_vars();
    let g = ideal.lcm_of_generators();
    let mut strides = Vec::with_capacity(n);
    let mut volume: usize = 1;
    for &gj in &g {
        strides.push(volume);
        volume = volume
            .checked_mul(gj as usize + 1)
            .filter(|&v| v <= box_cap)
            .ok_or_else(|| Error::Resource(format!("box [0, g] for g = {g:?} exceeds the cap of {box_cap} points")))?;
    }
    let mut coords = Vec::new();
    let mut box_index = Vec::new();
    let mut point_at = vec![NONE; volume];
    let mut rho = Vec::new();
    let mut a = vec![0u32; n];
    for idx in 0..volume {
        let mut rest = idx;
        for j in (0..n).rev() {
            a[j] = (rest / strides[j]) as u32;
            rest %= strides[j];
        }
        let keep = match mode {
            Mode::Ideal => ideal.contains(&a),
            Mode::Quotient => !ideal.contains(&a),
        };
        if keep {
            point_at[idx] = box_index.len() as u32;
            box_index.push(idx);
            coords.extend_from_slice(&a);
            rho.push(a.iter().zip(&g).filter(|(x, y)| x == y).count() as u32);
        }
    }
    Ok(CharacteristicPoset {
        num_vars: n,
        g,
        mode,
        coords,
        box_index,
        point_at,
        strides,
        rho,
    })
}

impl CharacteristicPoset {
    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn g(&self) -> &[u32] {
        &self.g
    }

    pub fn len(&self) -> usize {
        self.box_index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.box_index.is_empty()
    }

    /// Number of points in the whole box `[0, g]`.
    pub fn box_volume(&self) -> usize {
        self.point_at.len()
    }

    pub fn point(&self, p: usize) -> &[u32] {
        &self.coords[p * self.num_vars..(p + 1) * self.num_vars]
    }

    pub fn points(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.len()).map(|p| self.point(p))
    }

    /// Number of coordinates where `a` equals `g`.
    pub fn rho(&self, a: &[u32]) -> usize {
        a.iter().zip(&self.g).filter(|(x, y)| x == y).count()
    }

    pub fn index_of(&self, a: &[u32]) -> Option<usize> {
        if a.len() != self.num_vars || a.iter().zip(&self.g).any(|(x, y)| x > y) {
            return None;
        }
        let idx: usize = a.iter().zip(&self.strides).map(|(&x, &s)| x as usize * s).sum();
        match self.point_at[idx] {
            NONE => None,
            p => Some(p as usize),
        }
    }

    /// Box indices of the points `c` with `lo <= c <= hi` (componentwise),
    /// passed to `f`; stops early when `f` returns false.
    fn for_each_in_box(&self, lo: &[u32], hi: &[u32], mut f: impl FnMut(usize) -> bool) -> bool {
        let n = self.num_vars;
        let mut cur = lo.to_vec();
        let mut idx: usize = lo.iter().zip(&self.strides).map(|(&x, &s)| x as usize * s).sum();
        loop {
            if !f(idx) {
                return false;
            }
            let mut j = 0;
            loop {
                if j == n {
                    return true;
                }
                if cur[j] < hi[j] {
                    cur[j] += 1;
                    idx += self.strides[j];
                    break;
                }
                idx -= (cur[j] - lo[j]) as usize * self.strides[j];
                cur[j] = lo[j];
                j += 1;
            }
        }
    }

    /// Upper bound: every maximal point tops its own interval.
    pub fn sdepth_upper_bound(&self) -> usize {
        (0..self.len())
            .filter(|&p| {
                let a = self.point(p);
                (0..self.num_vars).all(|j| {
                    a[j] == self.g[j] || {
                        let idx = self.box_index[p] + self.strides[j];
                        self.point_at[idx] == NONE
                    }
                })
            })
            .map(|p| self.rho[p] as usize)
            .min()
            .unwrap_or(self.num_vars)
    }

    /// Lower bound: the partition into singletons.
    pub fn sdepth_lower_bound(&self) -> usize {
        self.rho.iter().copied().min().unwrap_or(self.num_vars as u32) as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lower: Exponents,
    pub upper: Exponents,
}

impl Interval {
    /// The Stanley space `x^lower K[Z]` of this interval, where `Z` holds the
    /// variables whose exponent in `upper` reaches `g`.
    pub fn stanley_space(&self, g: &[u32]) -> String {
        let vars: Vec<String> = (0..g.len())
            .filter(|&j| self.upper[j] == g[j])
            .map(|j| format!("x{}", j + 1))
            .collect();
        let ring = format!("K[{}]", vars.join(","));
        if self.lower.iter().all(|&e| e == 0) {
            ring
        } else {
            format!("{}*{}", crate::realize::format_monomial(&self.lower), ring)
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalPartition {
    pub intervals: Vec<Interval>,
}

impl IntervalPartition {
    /// Minimum of `rho(upper)` over the intervals; `num_vars` for the empty partition.
    pub fn value(&self, poset: &CharacteristicPoset) -> usize {
        self.intervals
            .iter()
            .map(|iv| poset.rho(&iv.upper))
            .min()
            .unwrap_or(poset.num_vars)
    }

    /// Re-check that the intervals are disjoint, lie in the poset, cover it,
    /// and all have `rho(upper) >= d`.
    pub fn verify(&self, poset: &CharacteristicPoset, d: usize) -> Result<()> {
        let mut seen = vec![false; poset.len()];
        let mut count = 0usize;
        for iv in &self.intervals {
            if iv.lower.len() != poset.num_vars || iv.upper.len() != poset.num_vars {
                return Err(Error::invalid("interval has the wrong number of coordinates"));
            }
            if iv.lower.iter().zip(&iv.upper).any(|(a, b)| a > b) || iv.upper.iter().zip(&poset.g).any(|(a, b)| a > b)
            {
                return Err(Error::invalid(format!("[{:?}, {:?}] is not an interval of the box", iv.lower, iv.upper)));
            }
            if poset.rho(&iv.upper) < d {
                return Err(Error::invalid(format!("interval top {:?} has rho below {d}", iv.upper)));
            }
            let mut problem = None;
            poset.for_each_in_box(&iv.lower, &iv.upper, |idx| {
                match poset.point_at[idx] {
                    NONE => problem = Some("leaves the poset"),
                    p if seen[p as usize] => problem = Some("overlaps another interval"),
                    p => {
                        seen[p as usize] = true;
                        count += 1;
                    }
                }
                problem.is_none()
            });
            if let Some(what) = problem {
                return Err(Error::invalid(format!("[{:?}, {:?}] {what}", iv.lower, iv.upper)));
            }
        }
        if count != poset.len() {
            return Err(Error::invalid(format!("intervals cover {count} of {} points", poset.len())));
        }
        Ok(())
    }
}

/// Node budget of the first randomized exact-cover run; later runs grow it.
const RESTART_BUDGET: u64 = 2_000;
const RESTARTS: usize = 24;

enum Search {
    Found(IntervalPartition),
    Exhausted,
    Aborted,
}

/// Bound on memoized failure states per decision.
const MEMO_LIMIT: usize = 1 << 20;
/// Posets larger than this are searched without memoization.
const MEMO_MAX_POINTS: usize = 1 << 12;

struct Frame {
    bottom: usize,
    tops: Vec<usize>,
    next: usize,
    /// Points covered by the currently placed interval.
    placed: Vec<usize>,
}

/// A partition of the poset with every interval top satisfying
/// `rho >= d`, or `None` if there is none.
pub fn sdepth_decision(poset: &CharacteristicPoset, d: usize) -> Option<IntervalPartition> {
    if poset.is_empty() {
        return Some(IntervalPartition::default());
    }
    if d <= poset.sdepth_lower_bound() {
        return Some(singletons(poset));
    }
    if d > poset.sdepth_upper_bound() {
        return None;
    }
    match ExactCover::build(poset, d) {
        Some(cover) => cover.solve(),
        None => decision_by_bottoms(poset, d),
    }
}

/// Search that always extends the first uncovered point; needs no option
/// table, so it also handles posets too large for [`ExactCover`].
fn decision_by_bottoms(poset: &CharacteristicPoset, d: usize) -> Option<IntervalPartition> {
    let n_points = poset.len();
    let words = n_points.div_ceil(64);
    let mut covered = vec![0u64; words];
    let is_covered = |covered: &[u64], p: usize| covered[p / 64] >> (p % 64) & 1 == 1;
    let memoize = n_points <= MEMO_MAX_POINTS;
    let mut failed: HashSet<Vec<u64>> = HashSet::new();
    let mut stack: Vec<Frame> = Vec::new();

    // In the squarefree case every interval splits into intervals whose top
    // has rho exactly d plus singletons above rank d, so only those tops are
    // tried, and the uncovered points per rank must be consistent with that.
    let squarefree = poset.g.iter().all(|&e| e == 1);
    let mut uncovered_by_rank = vec![0i64; poset.num_vars + 1];
    for p in 0..n_points {
        uncovered_by_rank[poset.rho[p] as usize] += 1;
    }
    let binom = binomials(d);

    // Points some interval with rho(top) >= d could start at, ignoring coverage.
    let mut viable_tops: Vec<Vec<usize>> = Vec::with_capacity(n_points);
    for c in 0..n_points {
        let mut tops = Vec::new();
        if (poset.rho[c] as usize) < d {
            poset.for_each_in_box(poset.point(c), &poset.g, |idx| {
                let b = poset.point_at[idx];
                if b != NONE {
                    let r = poset.rho[b as usize] as usize;
                    if r == d || (r > d && !squarefree) {
                        tops.push(b as usize);
                    }
                }
                true
            });
            if tops.is_empty() {
                return None;
            }
        } else {
            tops.push(c);
        }
        viable_tops.push(tops);
    }

    let first_uncovered = |covered: &[u64], from: usize| -> Option<usize> {
        let mut w = from / 64;
        let mut word = covered.get(w)? | ((1u64 << (from % 64)) - 1);
        loop {
            if word != u64::MAX {
                let p = w * 64 + (!word).trailing_zeros() as usize;
                return (p < n_points).then_some(p);
            }
            w += 1;
            word = *covered.get(w)?;
        }
    };

    let mut cursor = 0usize;
    'descend: loop {
        let Some(c) = first_uncovered(&covered, cursor) else {
            let intervals = stack
                .iter()
                .map(|f| Interval {
                    lower: poset.point(f.bottom).to_vec(),
                    upper: poset.point(f.tops[f.next - 1]).to_vec(),
                })
                .collect();
            return Some(IntervalPartition { intervals });
        };
        let fresh = !(memoize && failed.contains(&covered))
            && (!squarefree || rank_counts_feasible(&uncovered_by_rank, d, &binom));
        let tops: Vec<usize> = if !fresh {
            Vec::new()
        } else if poset.rho[c] as usize >= d {
            vec![c]
        } else {
            let mut tops: Vec<(usize, usize)> = viable_tops[c]
                .iter()
                .filter(|&&b| {
                    let (lo, hi) = (poset.point(c), poset.point(b));
                    poset.for_each_in_box(lo, hi, |idx| {
                        let p = poset.point_at[idx];
                        p != NONE && !is_covered(&covered, p as usize)
                    })
                })
                .map(|&b| {
                    let size: usize = poset
                        .point(c)
                        .iter()
                        .zip(poset.point(b))
                        .map(|(x, y)| (y - x) as usize + 1)
                        .product();
                    (size, b)
                })
                .collect();
            tops.sort_unstable();
            tops.into_iter().map(|(_, b)| b).collect()
        };
        stack.push(Frame {
            bottom: c,
            tops,
            next: 0,
            placed: Vec::new(),
        });

        // advance the top frame to its next alternative, backtracking as needed
        loop {
            let frame = stack.last_mut()?;
            for &p in &frame.placed {
                covered[p / 64] &= !(1u64 << (p % 64));
                uncovered_by_rank[poset.rho[p] as usize] += 1;
            }
            frame.placed.clear();
            if frame.next < frame.tops.len() {
                let b = frame.tops[frame.next];
                frame.next += 1;
                let c = frame.bottom;
                let mut placed = Vec::new();
                poset.for_each_in_box(poset.point(c), poset.point(b), |idx| {
                    placed.push(poset.point_at[idx] as usize);
                    true
                });
                for &p in &placed {
                    covered[p / 64] |= 1u64 << (p % 64);
                    uncovered_by_rank[poset.rho[p] as usize] -= 1;
                }
                frame.placed = placed;
                cursor = c + 1;
                continue 'descend;
            }
            if memoize && failed.len() < MEMO_LIMIT {
                failed.insert(covered.clone());
            }
            stack.pop();
        }
    }
}

/// Upper bound on the summed sizes of all candidate intervals.
const OPTION_BUDGET: usize = 1 << 23;

struct CoverFrame {
    candidates: Vec<u32>,
    next: usize,
    trail_mark: usize,
    placed: Option<u32>,
}

/// Exact cover formulation: every point with `rho < d` must lie in exactly
/// one chosen interval; points with `rho >= d` may also be left as
/// singletons. Branches on the point with the fewest live intervals.
struct ExactCover<'a> {
    poset: &'a CharacteristicPoset,
    d: usize,
    squarefree: bool,
    /// Candidate intervals as (bottom, top), with their points in CSR form.
    options: Vec<(u32, u32)>,
    option_start: Vec<usize>,
    option_points: Vec<u32>,
    point_start: Vec<usize>,
    point_options: Vec<u32>,
    /// Points that must be covered.
    required: Vec<u32>,
    /// Squarefree only: for each required point, the points above it.
    up_start: Vec<usize>,
    up_points: Vec<u32>,
}

impl<'a> ExactCover<'a> {
    fn build(poset: &'a CharacteristicPoset, d: usize) -> Option<Self> {
        let squarefree = poset.g.iter().all(|&e| e == 1);
        let n_points = poset.len();
        let mut options = Vec::new();
        let mut option_start = vec![0];
        let mut option_points: Vec<u32> = Vec::new();
        let mut required = Vec::new();
        for c in 0..n_points {
            if poset.rho[c] as usize >= d {
                continue;
            }
            required.push(c as u32);
            let mut tops = Vec::new();
            poset.for_each_in_box(poset.point(c), &poset.g, |idx| {
                let b = poset.point_at[idx];
                if b != NONE {
                    let r = poset.rho[b as usize] as usize;
                    if r == d || (r > d && !squarefree) {
                        tops.push(b);
                    }
                }
                true
            });
            for b in tops {
                poset.for_each_in_box(poset.point(c), poset.point(b as usize), |idx| {
                    option_points.push(poset.point_at[idx]);
                    true
                });
                if option_points.len() > OPTION_BUDGET {
                    return None;
                }
                options.push((c as u32, b));
                option_start.push(option_points.len());
            }
        }
        let mut degree = vec![0usize; n_points + 1];
        for &p in &option_points {
            degree[p as usize + 1] += 1;
        }
        for p in 0..n_points {
            degree[p + 1] += degree[p];
        }
        let point_start = degree.clone();
        let mut fill = degree;
        let mut point_options = vec![0u32; option_points.len()];
        for o in 0..options.len() {
            for &p in &option_points[option_start[o]..option_start[o + 1]] {
                point_options[fill[p as usize]] = o as u32;
                fill[p as usize] += 1;
            }
        }
        let (mut up_start, mut up_points) = (vec![0], Vec::new());
        let scan: usize = required.iter().map(|&c| 1usize << (poset.num_vars - poset.rho[c as usize] as usize)).sum();
        if squarefree && scan <= OPTION_BUDGET {
            for &c in &required {
                poset.for_each_in_box(poset.point(c as usize), &poset.g, |idx| {
                    if poset.point_at[idx] != NONE {
                        up_points.push(poset.point_at[idx]);
                    }
                    true
                });
                up_start.push(up_points.len());
            }
        }
        Some(ExactCover {
            poset,
            d,
            squarefree,
            options,
            option_start,
            option_points,
            point_start,
            point_options,
            required,
            up_start,
            up_points,
        })
    }

    /// The counting condition of [`rank_counts_feasible`] applied to the
    /// uncovered points above each uncovered required point: every interval
    /// meets such an upper set in an interval with the same top.
    fn links_feasible(&self, covered: &[u64], binom: &[Vec<i64>]) -> bool {
        if self.up_start.len() != self.required.len() + 1 {
            return true;
        }
        let mut counts = vec![0i64; self.poset.num_vars + 1];
        let is_covered = |p: u32| covered[p as usize / 64] >> (p % 64) & 1 == 1;
        for (k, &f) in self.required.iter().enumerate() {
            if is_covered(f) {
                continue;
            }
            counts.iter_mut().for_each(|c| *c = 0);
            for &q in &self.up_points[self.up_start[k]..self.up_start[k + 1]] {
                if !is_covered(q) {
                    counts[self.poset.rho[q as usize] as usize] += 1;
                }
            }
            if !rank_counts_feasible(&counts, self.d, binom) {
                return false;
            }
        }
        true
    }

    fn points_of(&self, o: u32) -> &[u32] {
        &self.option_points[self.option_start[o as usize]..self.option_start[o as usize + 1]]
    }

    fn options_at(&self, p: u32) -> &[u32] {
        &self.point_options[self.point_start[p as usize]..self.point_start[p as usize + 1]]
    }

    /// Randomized searches with growing node budgets, then a complete one.
    /// Failed states are only recorded once fully explored, so the memo is
    /// shared by all runs.
    fn solve(&self) -> Option<IntervalPartition> {
        let mut failed = HashSet::new();
        let mut rng = StdRng::seed_from_u64(0x5d_e9_7a_11);
        let mut budget = RESTART_BUDGET;
        for _ in 0..RESTARTS {
            match self.search(&mut failed, Some(budget), Some(&mut rng)) {
                Search::Found(p) => return Some(p),
                Search::Exhausted => return None,
                Search::Aborted => budget += budget / 2,
            }
        }
        match self.search(&mut failed, None, None) {
            Search::Found(p) => Some(p),
            _ => None,
        }
    }

    fn search(&self, failed: &mut HashSet<Vec<u64>>, budget: Option<u64>, mut rng: Option<&mut StdRng>) -> Search {
        let mut nodes = 0u64;
        let n_points = self.poset.len();
        let d = self.d;
        let mut covered = vec![0u64; n_points.div_ceil(64)];
        let mut alive = vec![true; self.options.len()];
        let mut live_count: Vec<u32> = (0..n_points as u32).map(|p| self.options_at(p).len() as u32).collect();
        let mut trail: Vec<u32> = Vec::new();
        let mut uncovered_by_rank = vec![0i64; self.poset.num_vars + 1];
        for p in 0..n_points {
            uncovered_by_rank[self.poset.rho[p] as usize] += 1;
        }
        let binom = binomials(d);
        let memoize = n_points <= MEMO_MAX_POINTS;
        let mut stack: Vec<CoverFrame> = Vec::new();

        'descend: loop {
            nodes += 1;
            if budget.is_some_and(|b| nodes > b) {
                return Search::Aborted;
            }
            // most constrained uncovered required point, ties broken at random
            let mut best: Option<(u32, u32)> = None;
            let mut ties = 0u32;
            for &p in &self.required {
                if covered[p as usize / 64] >> (p % 64) & 1 == 0 {
                    let n = live_count[p as usize];
                    match best {
                        Some((_, m)) if n > m => {}
                        Some((_, m)) if n == m => {
                            ties += 1;
                            if rng.as_mut().is_some_and(|r| r.gen_range(0..ties) == 0) {
                                best = Some((p, n));
                            }
                        }
                        _ => {
                            best = Some((p, n));
                            ties = 1;
                            if n <= 1 {
                                break;
                            }
                        }
                    }
                }
            }
            let Some((item, count)) = best else {
                return Search::Found(self.partition(&stack, &covered));
            };
            let viable = count > 0
                && !(memoize && failed.contains(&covered))
                && (!self.squarefree || rank_counts_feasible(&uncovered_by_rank, d, &binom))
                && self.links_feasible(&covered, &binom);
            let candidates = if viable {
                let mut c: Vec<u32> = self.options_at(item).iter().copied().filter(|&o| alive[o as usize]).collect();
                if let Some(r) = rng.as_mut() {
                    c.shuffle(r);
                }
                c.sort_by_key(|&o| std::cmp::Reverse(self.points_of(o).len()));
                c
            } else {
                Vec::new()
            };
            stack.push(CoverFrame {
                candidates,
                next: 0,
                trail_mark: trail.len(),
                placed: None,
            });

            loop {
                let Some(frame) = stack.last_mut() else {
                    return Search::Exhausted;
                };
                if let Some(o) = frame.placed.take() {
                    while trail.len() > frame.trail_mark {
                        let dead = trail.pop().unwrap();
                        alive[dead as usize] = true;
                        for &q in self.points_of(dead) {
                            live_count[q as usize] += 1;
                        }
                    }
                    for &p in self.points_of(o) {
                        covered[p as usize / 64] &= !(1u64 << (p % 64));
                        uncovered_by_rank[self.poset.rho[p as usize] as usize] += 1;
                    }
                }
                if frame.next < frame.candidates.len() {
                    let o = frame.candidates[frame.next];
                    frame.next += 1;
                    frame.placed = Some(o);
                    for &p in self.points_of(o) {
                        covered[p as usize / 64] |= 1u64 << (p % 64);
                        uncovered_by_rank[self.poset.rho[p as usize] as usize] -= 1;
                        for &other in self.options_at(p) {
                            if alive[other as usize] {
                                alive[other as usize] = false;
                                trail.push(other);
                                for &q in self.points_of(other) {
                                    live_count[q as usize] -= 1;
                                }
                            }
                        }
                    }
                    continue 'descend;
                }
                if memoize && failed.len() < MEMO_LIMIT {
                    failed.insert(covered.clone());
                }
                stack.pop();
            }
        }
    }

    /// Chosen intervals plus singletons for the points left over.
    fn partition(&self, stack: &[CoverFrame], covered: &[u64]) -> IntervalPartition {
        let poset = self.poset;
        let mut intervals: Vec<Interval> = stack
            .iter()
            .filter_map(|f| f.placed)
            .map(|o| {
                let (c, b) = self.options[o as usize];
                Interval {
                    lower: poset.point(c as usize).to_vec(),
                    upper: poset.point(b as usize).to_vec(),
                }
            })
            .collect();
        for p in 0..poset.len() {
            if covered[p / 64] >> (p % 64) & 1 == 0 {
                intervals.push(Interval {
                    lower: poset.point(p).to_vec(),
                    upper: poset.point(p).to_vec(),
                });
            }
        }
        IntervalPartition { intervals }
    }
}

fn binomials(n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n + 1]; n + 1];
    for i in 0..=n {
        c[i][0] = 1;
        for j in 1..=i {
            c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
        }
    }
    c
}

/// Squarefree only: whether the uncovered points of rank below `d` can be
/// tiled by intervals with tops of rank `d`. An interval with bottom rank `j`
/// holds `C(d - j, i - j)` points of rank `i`, which fixes the number of
/// intervals per bottom rank; these must be non-negative and fit in the
/// uncovered points of rank `d`.
fn rank_counts_feasible(uncovered: &[i64], d: usize, binom: &[Vec<i64>]) -> bool {
    if d >= uncovered.len() {
        return uncovered.iter().all(|&u| u == 0);
    }
    let mut bottoms = vec![0i64; d];
    let mut total = 0;
    for i in 0..d {
        let x = uncovered[i] - (0..i).map(|j| bottoms[j] * binom[d - j][i - j]).sum::<i64>();
        if x < 0 {
            return false;
        }
        bottoms[i] = x;
        total += x;
    }
    total <= uncovered[d]
}

fn singletons(poset: &CharacteristicPoset) -> IntervalPartition {
    IntervalPartition {
        intervals: poset
            .points()
            .map(|a| Interval {
                lower: a.to_vec(),
                upper: a.to_vec(),
            })
            .collect(),
    }
}

/// Stanley depth of the poset together with an optimal partition.
///
/// Starts at `hint` (clamped to the cheap bounds), climbs while the decision
/// succeeds and descends while it fails.
pub fn sdepth_from(poset: &CharacteristicPoset, hint: usize) -> (usize, IntervalPartition) {
    let lo = poset.sdepth_lower_bound();
    let hi = poset.sdepth_upper_bound().max(lo);
    let mut d = hint.clamp(lo, hi);
    match sdepth_decision(poset, d) {
        Some(mut best) => {
            while d < hi {
                match sdepth_decision(poset, d + 1) {
                    Some(p) => {
                        best = p;
                        d += 1;
                    }
                    None => break,
                }
            }
            (d, best)
        }
        None => loop {
            d -= 1;
            if let Some(p) = sdepth_decision(poset, d) {
                return (d, p);
            }
        },
    }
}

/// Stanley depth of the poset, searching downward from the upper bound.
pub fn sdepth_of_poset(poset: &CharacteristicPoset) -> (usize, IntervalPartition) {
    sdepth_from(poset, poset.sdepth_upper_bound())
}

/// `sdepth I` (ideal mode) or `sdepth S/I` (quotient mode).
pub fn sdepth(ideal: &MonomialIdeal, mode: Mode) -> Result<usize> {
    Ok(sdepth_with_certificate(ideal, mode, DEFAULT_BOX_CAP, None)?.0)
}

/// `n - sdepth`.
pub fn spdim(ideal: &MonomialIdeal, mode: Mode) -> Result<usize> {
    Ok(ideal.num_vars() - sdepth(ideal, mode)?)
}

/// Stanley depth with a verified optimal partition. `hint` is a guess for
/// the answer; a good guess saves failing searches.
pub fn sdepth_with_certificate(
    ideal: &MonomialIdeal,
    mode: Mode,
    box_cap: usize,
    hint: Option<usize>,
) -> Result<(usize, IntervalPartition)> {
    let poset = char_poset_with_cap(ideal, mode, box_cap)?;
    let (d, partition) = match hint {
        Some(h) => sdepth_from(&poset, h),
        None => sdepth_of_poset(&poset),
    };
    partition.verify(&poset, d)?;
    Ok((d, partition))
}
