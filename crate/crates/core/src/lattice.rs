//! Finite lattices stored as dense order and join/meet tables.
//!
//! Elements are indices `0..size`. Every lattice handled here has at most
//! [`MAX_ELEMENTS`] elements, so up-sets and down-sets fit in a single `u64`
//! and join and meet are table lookups.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported lattice (the boolean lattice on 6 atoms).
pub const MAX_ELEMENTS: usize = 64;

/// Iterate the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) fn bit(i: usize) -> u64 {
    1u64 << i
}

#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    size: usize,
    up: Vec<u64>,
    down: Vec<u64>,
    upper_covers: Vec<u64>,
    join: Vec<u8>,
    meet: Vec<u8>,
    bottom: usize,
    top: usize,
    atoms: Vec<usize>,
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lattice")
            .field("size", &self.size)
            .field("atoms", &self.atoms)
            .field("covers", &self.cover_pairs())
            .finish()
    }
}

impl Lattice {
    /// Build a lattice from an order relation given as up-sets:
    /// bit `y` of `up[x]` is set iff `x <= y`.
    pub fn from_up_sets(up: Vec<u64>) -> Result<Self> {
        let size = up.len();
        if size == 0 {
            return Err(Error::NotALattice("empty element set".into()));
        }
        if size > MAX_ELEMENTS {
            return Err(Error::Resource(format!(
                "lattice with {size} elements exceeds the {MAX_ELEMENTS}-element limit"
            )));
        }
        let full = if size == 64 { u64::MAX } else { bit(size) - 1 };
        for (x, &ux) in up.iter().enumerate() {
            if ux & !full != 0 {
                return Err(Error::NotALattice(format!("element {x} relates to an out-of-range index")));
            }
            if ux & bit(x) == 0 {
                return Err(Error::NotALattice(format!("order is not reflexive at {x}")));
            }
            for y in bits(ux & !bit(x)) {
                if up[y] & bit(x) != 0 {
                    return Err(Error::NotALattice(format!("order is not antisymmetric on {x}, {y}")));
                }
                if up[y] & !ux != 0 {
                    return Err(Error::NotALattice(format!("order is not transitive through {y}")));
                }
            }
        }
        let mut down = vec![0u64; size];
        for (x, &ux) in up.iter().enumerate() {
            for y in bits(ux) {
                down[y] |= bit(x);
            }
        }

        let mut join = vec![0u8; size * size];
        let mut meet = vec![0u8; size * size];
        for x in 0..size {
            for y in x..size {
                let ub = up[x] & up[y];
                let j = bits(ub)
                    .find(|&z| up[z] == ub)
                    .ok_or_else(|| Error::NotALattice(format!("no least upper bound for {x}, {y}")))?;
                let lb = down[x] & down[y];
                let m = bits(lb)
                    .find(|&z| down[z] == lb)
                    .ok_or_else(|| Error::NotALattice(format!("no greatest lower bound for {x}, {y}")))?;
                join[x * size + y] = j as u8;
                join[y * size + x] = j as u8;
                meet[x * size + y] = m as u8;
                meet[y * size + x] = m as u8;
            }
        }

        let bottom = (0..size).find(|&x| up[x] == full).expect("lattice has a bottom");
        let top = (0..size).find(|&x| down[x] == full).expect("lattice has a top");

        let upper_covers: Vec<u64> = (0..size)
            .map(|x| {
                let strict = up[x] & !bit(x);
                bits(strict)
                    .filter(|&y| down[y] & strict == bit(y))
                    .fold(0u64, |acc, y| acc | bit(y))
            })
            .collect();
        let atoms = bits(upper_covers[bottom]).collect();

        Ok(Lattice {
            size,
            up,
            down,
            upper_covers,
            join,
            meet,
            bottom,
            top,
            atoms,
        })
    }

    /// Build a lattice from an order predicate on `0..size`.
    pub fn from_leq(size: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if size > MAX_ELEMENTS {
            return Err(Error::Resource(format!(
                "lattice with {size} elements exceeds the {MAX_ELEMENTS}-element limit"
            )));
        }
        let up = (0..size)
            .map(|x| (0..size).filter(|&y| leq(x, y)).fold(0u64, |acc, y| acc | bit(y)))
            .collect();
        Self::from_up_sets(up)
    }

    /// Build a lattice from cover pairs `(x, y)` meaning `y` covers `x`.
    /// The order is the reflexive-transitive closure of the pairs.
    pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> Result<Self> {
        if size == 0 || size > MAX_ELEMENTS {
            return Err(Error::invalid(format!("unsupported lattice size {size}")));
        }
        let mut up: Vec<u64> = (0..size).map(bit).collect();
        for &(x, y) in covers {
            if x >= size || y >= size {
                return Err(Error::invalid(format!("cover pair ({x}, {y}) out of range")));
            }
            up[x] |= bit(y);
        }
        // Closure; cycles surface as antisymmetry failures.
        loop {
            let mut changed = false;
            for x in 0..size {
                let mut acc = up[x];
                for y in bits(up[x]) {
                    acc |= up[y];
                }
                if acc != up[x] {
                    up[x] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let lattice = Self::from_up_sets(up)?;
        for &(x, y) in covers {
            if !lattice.covers(x, y) {
                return Err(Error::invalid(format!("pair ({x}, {y}) is not a cover relation")));
            }
        }
        Ok(lattice)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x] & bit(y) != 0
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size + y] as usize
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size + y] as usize
    }

    /// Join of an arbitrary family; the empty join is the bottom.
    pub fn join_all(&self, elems: impl IntoIterator<Item = usize>) -> usize {
        elems.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// `{y : x <= y}` as a bitmask.
    #[inline]
    pub fn up_set(&self, x: usize) -> u64 {
        self.up[x]
    }

    /// `{y : y <= x}` as a bitmask.
    #[inline]
    pub fn down_set(&self, x: usize) -> u64 {
        self.down[x]
    }

    /// Elements covering `x`, as a bitmask.
    #[inline]
    pub fn upper_covers(&self, x: usize) -> u64 {
        self.upper_covers[x]
    }

    /// Elements covered by `x`, as a bitmask.
    pub fn lower_covers(&self, x: usize) -> u64 {
        let strict = self.down[x] & !bit(x);
        bits(strict)
            .filter(|&y| self.up[y] & strict == bit(y))
            .fold(0, |acc, y| acc | bit(y))
    }

    /// True iff `y` covers `x`.
    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.upper_covers[x] & bit(y) != 0
    }

    /// All cover pairs `(x, y)` with `y` covering `x`, sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.size)
            .flat_map(|x| bits(self.upper_covers[x]).map(move |y| (x, y)))
            .collect()
    }

    /// Atoms below `x`, as a bitmask over element indices.
    pub fn atoms_below(&self, x: usize) -> u64 {
        self.down[x] & self.upper_covers[self.bottom]
    }

    /// Renumber elements: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.size {
            return Err(Error::invalid("permutation length does not match lattice size"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.size || seen & bit(p) != 0 {
                return Err(Error::invalid("relabeling is not a permutation"));
            }
            seen |= bit(p);
        }
        let mut up = vec![0u64; self.size];
        for x in 0..self.size {
            up[perm[x]] = bits(self.up[x]).fold(0, |acc, y| acc | bit(perm[y]));
        }
        Self::from_up_sets(up)
    }

    /// Exhaustive check of the lattice axioms on the stored tables.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.size;
        for x in 0..n {
            if self.join(x, x) != x || self.meet(x, x) != x {
                return Err(Error::NotALattice(format!("idempotence fails at {x}")));
            }
            if !self.leq(self.bottom, x) || !self.leq(x, self.top) {
                return Err(Error::NotALattice(format!("{x} is not between bottom and top")));
            }
            for y in 0..n {
                let (j, m) = (self.join(x, y), self.meet(x, y));
                if j != self.join(y, x) || m != self.meet(y, x) {
                    return Err(Error::NotALattice(format!("commutativity fails on {x}, {y}")));
                }
                if self.join(x, m) != x || self.meet(x, j) != x {
                    return Err(Error::NotALattice(format!("absorption fails on {x}, {y}")));
                }
                if self.leq(x, y) != (j == y) || self.leq(x, y) != (m == x) {
                    return Err(Error::NotALattice(format!("order and tables disagree on {x}, {y}")));
                }
                for z in 0..n {
                    if self.join(self.join(x, y), z) != self.join(x, self.join(y, z))
                        || self.meet(self.meet(x, y), z) != self.meet(x, self.meet(y, z))
                    {
                        return Err(Error::NotALattice(format!("associativity fails on {x}, {y}, {z}")));
                    }
                }
            }
        }
        let covers_of_bottom: Vec<usize> = (0..n).filter(|&x| self.covers(self.bottom, x)).collect();
        if covers_of_bottom != self.atoms {
            return Err(Error::NotALattice("atom list does not match covers of bottom".into()));
        }
        Ok(())
    }

    /// Serializable form: size, atoms and cover pairs.
    pub fn to_record(&self) -> LatticeRecord {
        LatticeRecord {
            size: self.size,
            atoms: self.atoms.clone(),
            covers: self.cover_pairs().into_iter().map(|(x, y)| [x, y]).collect(),
        }
    }

    pub fn from_record(record: &LatticeRecord) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = record.covers.iter().map(|&[x, y]| (x, y)).collect();
        let lattice = Self::from_covers(record.size, &pairs)?;
        let mut atoms = record.atoms.clone();
        atoms.sort_unstable();
        if atoms != lattice.atoms {
            return Err(Error::invalid(format!(
                "declared atoms {:?} differ from covers of bottom {:?}",
                record.atoms, lattice.atoms
            )));
        }
        Ok(lattice)
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let record: LatticeRecord = serde_json::from_str(&text).map_err(|source| Error::Json {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_record(&record)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let text = serde_json::to_string(&self.to_record()).expect("record serializes");
        fs::write(path, text + "\n").map_err(|e| Error::io(path, e))
    }
}

/// On-disk lattice format. `covers` holds pairs `[x, y]` meaning `y` covers `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeRecord {
    pub size: usize,
    pub atoms: Vec<usize>,
    pub covers: Vec<[usize; 2]>,
}

/// The lattice of subsets of a `k`-element set. Element `i` is the subset
/// whose characteristic bitmask is `i`, so atom `j` is `1 << j`.
pub fn boolean_lattice(k: usize) -> Result<Lattice> {
    if k == 0 {
        return Err(Error::invalid("boolean lattice needs at least one atom"));
    }
    if k > 6 {
        return Err(Error::Resource(format!("boolean lattice on {k} atoms exceeds {MAX_ELEMENTS} elements")));
    }
    Lattice::from_leq(1 << k, |x, y| x & y == x)
}

/// The chain `0 < 1 < ... < n-1`.
pub fn chain(n: usize) -> Result<Lattice> {
    Lattice::from_leq(n, |x, y| x <= y)
}

/// Elements with exactly one upper cover.
pub fn meet_irreducibles(lattice: &Lattice) -> Vec<usize> {
    (0..lattice.size())
        .filter(|&x| lattice.upper_covers(x).count_ones() == 1)
        .collect()
}

/// Elements with exactly one lower cover.
pub fn join_irreducibles(lattice: &Lattice) -> Vec<usize> {
    (0..lattice.size())
        .filter(|&x| lattice.lower_covers(x).count_ones() == 1)
        .collect()
}

/// True iff every element other than the bottom is the join of the atoms below it.
pub fn is_atomistic(lattice: &Lattice) -> bool {
    (0..lattice.size())
        .filter(|&x| x != lattice.bottom())
        .all(|x| lattice.join_all(bits(lattice.atoms_below(x))) == x)
}

pub fn is_distributive(lattice: &Lattice) -> bool {
    let n = lattice.size();
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                lattice.meet(x, lattice.join(y, z)) == lattice.join(lattice.meet(x, y), lattice.meet(x, z))
            })
        })
    })
}

/// A map between lattices given on element indices.
#[derive(Clone, Debug)]
pub struct LatticeMorphism {
    pub domain: Lattice,
    pub codomain: Lattice,
    pub map: Vec<usize>,
}

impl LatticeMorphism {
    pub fn new(domain: Lattice, codomain: Lattice, map: Vec<usize>) -> Result<Self> {
        if map.len() != domain.size() || map.iter().any(|&y| y >= codomain.size()) {
            return Err(Error::invalid("map is not a total function between the element sets"));
        }
        Ok(LatticeMorphism { domain, codomain, map })
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_join_preserving(&self) -> bool {
        let n = self.domain.size();
        (0..n).all(|x| {
            (0..n).all(|y| self.map[self.domain.join(x, y)] == self.codomain.join(self.map[x], self.map[y]))
        })
    }

    pub fn is_surjective(&self) -> bool {
        let hit = self.map.iter().fold(0u64, |acc, &y| acc | bit(y));
        hit.count_ones() as usize == self.codomain.size()
    }
}

/// Identify the meet-irreducible `a` with its unique upper cover.
///
/// Returns `L / ~a` together with the canonical surjection. Elements of the
/// quotient keep the relative order of their indices in `L`, with `a`
/// removed.
pub fn quotient(lattice: &Lattice, a: usize) -> Result<(Lattice, LatticeMorphism)> {
    if a >= lattice.size() {
        return Err(Error::invalid(format!("element {a} out of range")));
    }
    let covers = lattice.upper_covers(a);
    if covers.count_ones() != 1 {
        return Err(Error::invalid(format!("element {a} is not meet-irreducible")));
    }
    let a_plus = covers.trailing_zeros() as usize;
    let n = lattice.size();
    let map: Vec<usize> = (0..n)
        .map(|x| {
            let x = if x == a { a_plus } else { x };
            if x > a {
                x - 1
            } else {
                x
            }
        })
        .collect();
    let mut rep = Vec::with_capacity(n - 1);
    rep.extend((0..n).filter(|&x| x != a));

    // x <= y in the quotient iff pi(x v y) = y.
    let q = Lattice::from_leq(n - 1, |x, y| map[lattice.join(rep[x], rep[y])] == y)?;
    debug_assert!(q.check_axioms().is_ok());
    let projection = LatticeMorphism::new(lattice.clone(), q.clone(), map)?;
    Ok((q, projection))
}

/// The surjective join-preserving map from the boolean lattice onto an
/// atomistic lattice, sending the i-th atom to the i-th atom.
pub fn free_map(lattice: &Lattice) -> Result<LatticeMorphism> {
    let k = lattice.atoms().len();
    if k == 0 {
        return Err(Error::invalid("the one-element lattice has no atoms"));
    }
    let boolean = boolean_lattice(k)?;
    let atoms = lattice.atoms();
    let map: Vec<usize> = (0..boolean.size())
        .map(|mask| lattice.join_all(bits(mask as u64).map(|i| atoms[i])))
        .collect();
    let morphism = LatticeMorphism::new(boolean, lattice.clone(), map)?;
    if !morphism.is_surjective() {
        return Err(Error::invalid("lattice is not atomistic: joins of atoms miss some elements"));
    }
    Ok(morphism)
}
