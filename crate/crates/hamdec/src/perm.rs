//! Permutations on `0..n` and permutation groups given by generators.
//!
//! Group orders are computed by an orbit-stabilizer chain; degrees in this
//! crate stay in the low hundreds, so transversals are stored as plain
//! permutation tables.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `0..n`, stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image table, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(Error::InvalidPermutation(format!(
                    "image table {:?} is not a bijection on 0..{}",
                    images, n
                )));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` then `other`: x ↦ other(self(x)).
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Parses cycle notation with 0-based points, e.g. `"(0 2 3 1)(4 6 7 5)"`.
    /// Fixed points may be omitted; `degree` fixes the domain.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        let s = text.trim();
        if s.is_empty() || s == "()" {
            return Ok(Permutation { images });
        }
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(|| {
                Error::InvalidPermutation(format!("expected '(' in cycle notation: {:?}", rest))
            })?;
            let close = rest[open..].find(')').ok_or_else(|| {
                Error::InvalidPermutation(format!("unclosed cycle in {:?}", rest))
            })? + open;
            let body = &rest[open + 1..close];
            let points: Vec<usize> = body
                .split(|c: char| c == ' ' || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>().map_err(|_| {
                        Error::InvalidPermutation(format!("bad point {:?} in cycle", t))
                    })
                })
                .collect::<Result<_>>()?;
            for &p in &points {
                if p >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} out of range for degree {}",
                        p, degree
                    )));
                }
                if moved[p] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} appears in two cycles",
                        p
                    )));
                }
                moved[p] = true;
            }
            for i in 0..points.len() {
                images[points[i]] = points[(i + 1) % points.len()];
            }
            rest = &rest[close + 1..];
        }
        Ok(Permutation { images })
    }
}

fn write_cycles(p: &Permutation, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let n = p.degree();
    let mut seen = vec![false; n];
    let mut wrote = false;
    for start in 0..n {
        if seen[start] || p.images[start] == start {
            seen[start] = true;
            continue;
        }
        write!(f, "(")?;
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", x)?;
            first = false;
            x = p.images[x];
        }
        write!(f, ")")?;
        wrote = true;
    }
    if !wrote {
        write!(f, "()")?;
    }
    Ok(())
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_cycles(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_cycles(self, f)
    }
}

/// One level of an orbit-stabilizer chain: a base point plus a transversal
/// mapping each orbit point `v` to a group element carrying the base to `v`.
#[derive(Clone, Debug)]
pub struct ChainLevel {
    pub base_point: usize,
    pub transversal: HashMap<usize, Permutation>,
}

/// A permutation group given by generators, with enough chain structure to
/// answer order, membership, and orbit queries.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    order: u128,
    chain: Vec<ChainLevel>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            order: 1,
            chain: Vec::new(),
        }
    }

    /// Deterministic Schreier-Sims: builds a stabilizer chain from the
    /// generators and derives the exact group order.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator degree {} does not match group degree {}",
                    g.degree(),
                    degree
                )));
            }
        }
        let mut group = PermGroup {
            degree,
            generators: Vec::new(),
            order: 1,
            chain: Vec::new(),
        };
        for g in generators {
            group.extend(g);
        }
        Ok(group)
    }

    /// Constructs a group from precomputed chain data (used by the
    /// automorphism search, which discovers its own transversals).
    pub(crate) fn from_chain(
        degree: usize,
        generators: Vec<Permutation>,
        chain: Vec<ChainLevel>,
    ) -> Self {
        let order = chain
            .iter()
            .map(|lvl| lvl.transversal.len() as u128)
            .product();
        PermGroup {
            degree,
            generators,
            order,
            chain,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        self.sift(p).map_or(false, |r| r.is_identity())
    }

    /// Sifts `p` through the chain; returns the residue, or `None` if `p`
    /// falls outside some transversal.
    fn sift(&self, p: &Permutation) -> Option<Permutation> {
        let mut residue = p.clone();
        for level in &self.chain {
            let image = residue.apply(level.base_point);
            let rep = level.transversal.get(&image)?;
            residue = residue.then(&rep.inverse());
        }
        Some(residue)
    }

    /// Incremental Schreier-Sims insertion of a new generator.
    fn extend(&mut self, g: Permutation) {
        match self.sift(&g) {
            Some(r) if r.is_identity() => return,
            _ => {}
        }
        self.generators.push(g);
        self.rebuild();
    }

    /// Rebuilds the whole chain from the current generator list. Degrees are
    /// small enough that the quadratic rebuild is never a bottleneck.
    fn rebuild(&mut self) {
        self.chain.clear();
        let mut stab_gens: Vec<Permutation> = self.generators.clone();
        loop {
            let base_point = match stab_gens
                .iter()
                .flat_map(|g| (0..self.degree).find(|&x| g.apply(x) != x))
                .min()
            {
                Some(b) => b,
                None => break,
            };
            let transversal = orbit_transversal(self.degree, &stab_gens, base_point);
            // Schreier generators for the stabilizer of base_point.
            let mut next_gens: Vec<Permutation> = Vec::new();
            for (&v, rep) in &transversal {
                for g in &stab_gens {
                    let carried = rep.then(g);
                    let target = transversal.get(&g.apply(v)).unwrap();
                    let schreier = carried.then(&target.inverse());
                    if !schreier.is_identity() && !next_gens.contains(&schreier) {
                        next_gens.push(schreier);
                    }
                }
            }
            self.chain.push(ChainLevel {
                base_point,
                transversal,
            });
            stab_gens = reduce_generators(self.degree, next_gens);
        }
        self.order = self
            .chain
            .iter()
            .map(|lvl| lvl.transversal.len() as u128)
            .product();
    }

    /// Orbit of a point under the full generator set.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        orbit_transversal(self.degree, &self.generators, point)
            .into_keys()
            .collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }
}

fn orbit_transversal(
    degree: usize,
    gens: &[Permutation],
    point: usize,
) -> HashMap<usize, Permutation> {
    let mut transversal = HashMap::new();
    transversal.insert(point, Permutation::identity(degree));
    let mut queue = vec![point];
    while let Some(v) = queue.pop() {
        let rep = transversal[&v].clone();
        for g in gens {
            let w = g.apply(v);
            if !transversal.contains_key(&w) {
                transversal.insert(w, rep.then(g));
                queue.push(w);
            }
        }
    }
    transversal
}

/// Drops redundant Schreier generators by sifting each through a chain built
/// from the ones kept so far.
fn reduce_generators(degree: usize, gens: Vec<Permutation>) -> Vec<Permutation> {
    let mut kept = PermGroup {
        degree,
        generators: Vec::new(),
        order: 1,
        chain: Vec::new(),
    };
    for g in gens {
        kept.extend(g);
    }
    kept.generators
}

/// Closes a set of points under a generator list acting on an arbitrary
/// index set via `act(g, x)`.
pub fn orbit_closure<F>(num_points: usize, gens: &[Permutation], start: usize, act: F) -> Vec<bool>
where
    F: Fn(&Permutation, usize) -> usize,
{
    let mut in_orbit = vec![false; num_points];
    in_orbit[start] = true;
    let mut queue = vec![start];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = act(g, x);
            if !in_orbit[y] {
                in_orbit[y] = true;
                queue.push(y);
            }
        }
    }
    in_orbit
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_cycles() {
        let p = Permutation::parse_cycles("(0 2 3 1)(4 6 7 5)", 8).unwrap();
        assert_eq!(p.apply(0), 2);
        assert_eq!(p.apply(1), 0);
        assert_eq!(p.apply(5), 4);
        assert_eq!(format!("{}", p), "(0 2 3 1)(4 6 7 5)");
        let roundtrip = Permutation::parse_cycles(&format!("{}", p), 8).unwrap();
        assert_eq!(p, roundtrip);
    }

    #[test]
    fn parse_rejects_duplicates_and_out_of_range() {
        assert!(Permutation::parse_cycles("(0 1)(1 2)", 3).is_err());
        assert!(Permutation::parse_cycles("(0 5)", 3).is_err());
    }

    #[test]
    fn compose_and_inverse() {
        let p = Permutation::parse_cycles("(0 1 2)", 3).unwrap();
        let q = p.inverse();
        assert!(p.then(&q).is_identity());
        assert_eq!(p.then(&p), q);
    }

    #[test]
    fn symmetric_group_order() {
        // S4 generated by a transposition and a 4-cycle.
        let gens = vec![
            Permutation::parse_cycles("(0 1)", 4).unwrap(),
            Permutation::parse_cycles("(0 1 2 3)", 4).unwrap(),
        ];
        let g = PermGroup::from_generators(4, gens).unwrap();
        assert_eq!(g.order(), 24);
        assert!(g.is_transitive());
        assert!(g.contains(&Permutation::parse_cycles("(0 2)(1 3)", 4).unwrap()));
    }

    #[test]
    fn intransitive_group() {
        let gens = vec![Permutation::parse_cycles("(0 1)", 4).unwrap()];
        let g = PermGroup::from_generators(4, gens).unwrap();
        assert_eq!(g.order(), 2);
        assert!(!g.is_transitive());
        assert_eq!(g.orbit(2), vec![2]);
    }

    #[test]
    fn dihedral_group_on_pentagon() {
        let gens = vec![
            Permutation::parse_cycles("(0 1 2 3 4)", 5).unwrap(),
            Permutation::parse_cycles("(1 4)(2 3)", 5).unwrap(),
        ];
        let g = PermGroup::from_generators(5, gens).unwrap();
        assert_eq!(g.order(), 10);
    }
}
