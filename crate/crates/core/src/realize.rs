//! Monomial ideals and their lcm-lattices.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::lattice::{is_atomistic, meet_irreducibles, Lattice, MAX_ELEMENTS};

/// Exponent vector of a monomial.
pub type Exponents = Vec<u32>;

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

/// A monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealRecord", into = "IdealRecord")]
pub struct MonomialIdeal {
    num_vars: usize,
    generators: Vec<Exponents>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct IdealRecord {
    num_vars: usize,
    generators: Vec<Exponents>,
}

impl TryFrom<IdealRecord> for MonomialIdeal {
    type Error = Error;

    fn try_from(r: IdealRecord) -> Result<Self> {
        MonomialIdeal::new(r.num_vars, r.generators)
    }
}

impl From<MonomialIdeal> for IdealRecord {
    fn from(i: MonomialIdeal) -> Self {
        IdealRecord {
            num_vars: i.num_vars,
            generators: i.generators,
        }
    }
}

impl MonomialIdeal {
    /// Validate a minimal generating set. Non-minimal input is an error; use
    /// [`MonomialIdeal::minimalized`] to prune it instead.
    pub fn new(num_vars: usize, generators: Vec<Exponents>) -> Result<Self> {
        Self::check_shape(num_vars, &generators)?;
        for (i, g) in generators.iter().enumerate() {
            for (j, h) in generators.iter().enumerate() {
                if i != j && divides(g, h) {
                    return Err(Error::invalid(format!(
                        "generator {j} is divisible by generator {i}; the generating set is not minimal"
                    )));
                }
            }
        }
        Ok(MonomialIdeal { num_vars, generators })
    }

    /// Drop duplicate and non-minimal generators, keeping first-occurrence order.
    pub fn minimalized(num_vars: usize, generators: Vec<Exponents>) -> Result<Self> {
        Self::check_shape(num_vars, &generators)?;
        let mut kept: Vec<Exponents> = Vec::with_capacity(generators.len());
        for (i, g) in generators.iter().enumerate() {
            let redundant = generators.iter().enumerate().any(|(j, h)| {
                // a strictly smaller divisor, or an equal one seen earlier
                j != i && divides(h, g) && (h != g || j < i)
            });
            if !redundant {
                kept.push(g.clone());
            }
        }
        Ok(MonomialIdeal {
            num_vars,
            generators: kept,
        })
    }

    fn check_shape(num_vars: usize, generators: &[Exponents]) -> Result<()> {
        if generators.is_empty() {
            return Err(Error::invalid("an ideal needs at least one generator"));
        }
        for g in generators {
            if g.len() != num_vars {
                return Err(Error::invalid(format!(
                    "generator has {} exponents, expected {num_vars}",
                    g.len()
                )));
            }
            if g.iter().all(|&e| e == 0) {
                return Err(Error::invalid("the unit monomial generates the whole ring"));
            }
        }
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Exponents] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// The same generators in a polynomial ring with `num_vars` variables.
    pub fn with_num_vars(&self, num_vars: usize) -> Result<Self> {
        if num_vars < self.num_vars && self.generators.iter().any(|g| g[num_vars..].iter().any(|&e| e > 0)) {
            return Err(Error::invalid("dropping variables that occur in a generator"));
        }
        let generators = self
            .generators
            .iter()
            .map(|g| {
                let mut g = g.clone();
                g.resize(num_vars, 0);
                g
            })
            .collect();
        Ok(MonomialIdeal { num_vars, generators })
    }

    /// True iff the monomial with exponents `a` lies in the ideal.
    pub fn contains(&self, a: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, a))
    }

    /// Componentwise maximum of the generators.
    pub fn lcm_of_generators(&self) -> Exponents {
        self.generators
            .iter()
            .fold(vec![0; self.num_vars], |acc, g| lcm(&acc, g))
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().flatten().all(|&e| e <= 1)
    }
}

pub fn format_monomial(exponents: &[u32]) -> String {
    let factors: Vec<String> = exponents
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| format_monomial(g)).collect();
        f.write_str(&gens.join(", "))
    }
}

/// Parse `"x1*x3^2, x2 x4, (x5)"`-style text. Multiplication signs are
/// optional, the list may be wrapped in parentheses, and non-minimal
/// generators are pruned. The number of variables is the largest index used.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let monomials = Parser::new(text).ideal()?;
    let num_vars = monomials
        .iter()
        .flat_map(|m| m.iter().map(|&(v, _)| v))
        .max()
        .unwrap_or(0);
    let generators: Vec<Exponents> = monomials
        .into_iter()
        .map(|m| {
            let mut e = vec![0u32; num_vars];
            for (v, p) in m {
                e[v - 1] += p;
            }
            e
        })
        .collect();
    if generators.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Err(Error::invalid("the unit monomial generates the whole ring"));
    }
    MonomialIdeal::minimalized(num_vars, generators)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .or_else(|_| self.err("number out of range"))
    }

    fn ideal(&mut self) -> Result<Vec<Vec<(usize, u32)>>> {
        let wrapped = self.peek() == Some(b'(');
        if wrapped {
            self.pos += 1;
        }
        let mut out = vec![self.monomial()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            out.push(self.monomial()?);
        }
        if wrapped {
            if self.peek() != Some(b')') {
                return self.err("expected ')'");
            }
            self.pos += 1;
        }
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(out)
    }

    fn monomial(&mut self) -> Result<Vec<(usize, u32)>> {
        let mut factors = Vec::new();
        match self.peek() {
            Some(b'1') => {
                self.number()?;
                return self.err("the unit monomial is not allowed: the ideal must be proper");
            }
            Some(b'x') | Some(b'X') => {}
            Some(_) => return self.err("expected a variable x<N>"),
            None => return self.err("empty generator"),
        }
        loop {
            match self.peek() {
                Some(b'x') | Some(b'X') => {
                    self.pos += 1;
                    let var = self.number()?;
                    if var == 0 {
                        return self.err("variables are numbered from x1");
                    }
                    let mut power = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        power = u32::try_from(self.number()?).or_else(|_| self.err("exponent out of range"))?;
                    }
                    factors.push((var, power));
                }
                Some(b'*') => {
                    self.pos += 1;
                    if !matches!(self.peek(), Some(b'x') | Some(b'X')) {
                        return self.err("expected a variable after '*'");
                    }
                }
                _ => return Ok(factors),
            }
        }
    }
}

/// An lcm-lattice: the lattice plus the lcm monomial of each element. The
/// bottom is a formal element labeled by the zero vector.
#[derive(Clone, Debug)]
pub struct LcmLattice {
    pub lattice: Lattice,
    pub labels: Vec<Exponents>,
}

impl LcmLattice {
    pub fn label(&self, x: usize) -> &[u32] {
        &self.labels[x]
    }
}

/// Lattice of lcms of nonempty generator subsets ordered by divisibility,
/// with a bottom adjoined. Element 0 is the bottom and elements `1..=k` are
/// the generators in order.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<LcmLattice> {
    let ideal = MonomialIdeal::new(ideal.num_vars, ideal.generators.clone())?;
    let mut labels: Vec<Exponents> = vec![vec![0; ideal.num_vars]];
    labels.extend(ideal.generators.iter().cloned());
    let mut seen: BTreeSet<Exponents> = labels.iter().cloned().collect();
    let mut frontier: Vec<Exponents> = ideal.generators.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for g in &ideal.generators {
                let m = lcm(f, g);
                if seen.insert(m.clone()) {
                    next.push(m);
                }
            }
        }
        if seen.len() > MAX_ELEMENTS {
            return Err(Error::Resource(format!(
                "lcm-lattice has more than {MAX_ELEMENTS} elements"
            )));
        }
        next.sort();
        labels.extend(next.iter().cloned());
        frontier = next;
    }
    let lattice = Lattice::from_leq(labels.len(), |x, y| divides(&labels[x], &labels[y]))?;
    debug_assert_eq!(lattice.atoms(), (1..=ideal.generators.len()).collect::<Vec<_>>());
    Ok(LcmLattice { lattice, labels })
}

/// A squarefree monomial ideal whose lcm-lattice is isomorphic to `lattice`.
///
/// There is one variable per meet-irreducible element `m`; the generator for
/// atom `a` is the product of the `x_m` with `a` not below `m`. The result is
/// checked by recomputing its lcm-lattice.
pub fn realize(lattice: &Lattice) -> Result<MonomialIdeal> {
    if lattice.atoms().is_empty() {
        return Err(Error::invalid("the one-element lattice has no atoms"));
    }
    if !is_atomistic(lattice) {
        return Err(Error::invalid("only atomistic lattices are lcm-lattices"));
    }
    if lattice.size() == 2 {
        return MonomialIdeal::new(1, vec![vec![1]]);
    }
    let irreducibles = meet_irreducibles(lattice);
    let generators: Vec<Exponents> = lattice
        .atoms()
        .iter()
        .map(|&a| irreducibles.iter().map(|&m| u32::from(!lattice.leq(a, m))).collect())
        .collect();
    let ideal = MonomialIdeal::new(irreducibles.len(), generators)?;
    let check = lcm_lattice(&ideal)?;
    if canonical_form(&check.lattice) != canonical_form(lattice) {
        return Err(Error::invalid("realization does not reproduce the lattice"));
    }
    Ok(ideal)
}
