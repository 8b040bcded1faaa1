//! Finite matrix groups over the rationals: closure from generators, the
//! action on polynomials, the Reynolds operator, and validation of
//! primary invariant systems.

use std::collections::{HashMap, HashSet};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::buchberger;
use crate::monomial::{monomials_of_degree_desc, Monomial, MonomialOrder};
use crate::poly::{Homogeneity, Polynomial, Rational};

pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;
pub const DEFAULT_BATCH_SIZE: usize = 1000;

/// A square matrix of rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn new(n: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: entries.len(),
            });
        }
        Ok(QMatrix { n, entries })
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Rational::one();
        }
        QMatrix { n, entries }
    }

    /// Permutation matrix sending `x_{cols[j]}` weight into column j:
    /// column j is the unit vector `e_{cols[j]}` (1-based), matching the
    /// column-list presentation of the built-in instances.
    pub fn from_column_units(cols: &[usize]) -> Self {
        let n = cols.len();
        let mut entries = vec![Rational::zero(); n * n];
        for (j, &i) in cols.iter().enumerate() {
            entries[(i - 1) * n + j] = Rational::one();
        }
        QMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        debug_assert_eq!(self.n, other.n);
        let n = self.n;
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        entries[i * n + j] += a * b;
                    }
                }
            }
        }
        QMatrix { n, entries }
    }

    pub fn is_identity(&self) -> bool {
        *self == QMatrix::identity(self.n)
    }

    /// True when the matrix is invertible (nonzero determinant).
    pub fn is_invertible(&self) -> bool {
        // Gaussian elimination with exact pivots.
        let n = self.n;
        let mut m = self.entries.clone();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r * n + col].is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => return false,
            };
            if pivot != col {
                for j in 0..n {
                    m.swap(pivot * n + j, col * n + j);
                }
            }
            let inv = m[col * n + col].recip();
            for r in (col + 1)..n {
                let factor = &m[r * n + col] * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let sub = &factor * &m[col * n + j];
                    m[r * n + j] -= sub;
                }
            }
        }
        true
    }

    /// True when every column has exactly one nonzero entry (a monomial
    /// matrix: permutation combined with scaling).
    pub fn is_monomial(&self) -> bool {
        (0..self.n).all(|j| {
            (0..self.n)
                .filter(|&i| !self.get(i, j).is_zero())
                .count()
                == 1
        })
    }

    /// True for a plain permutation matrix (monomial with unit entries).
    pub fn is_permutation(&self) -> bool {
        self.is_monomial()
            && self
                .entries
                .iter()
                .all(|e| e.is_zero() || e.is_one())
    }
}

/// A finite group of invertible rational matrices, closed from its
/// generators in deterministic breadth-first order.
#[derive(Debug, Clone)]
pub struct GroupRepresentation {
    n: usize,
    generators: Vec<QMatrix>,
    elements: Vec<QMatrix>,
}

impl GroupRepresentation {
    pub fn close(generators: Vec<QMatrix>) -> Result<Self> {
        Self::close_with_cap(generators, DEFAULT_CLOSURE_CAP)
    }

    /// Smallest multiplicatively closed set containing the generators and
    /// the identity, enumerated breadth-first. A finite closed subset of
    /// GL_n automatically contains inverses.
    pub fn close_with_cap(generators: Vec<QMatrix>, cap: usize) -> Result<Self> {
        let n = match generators.first() {
            Some(g) => g.n(),
            None => {
                return Ok(GroupRepresentation {
                    n: 0,
                    generators,
                    elements: vec![],
                })
            }
        };
        for g in &generators {
            if g.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: g.n(),
                });
            }
            if !g.is_invertible() {
                return Err(Error::SingularMatrix);
            }
        }
        let mut elements = vec![QMatrix::identity(n)];
        let mut seen: HashSet<QMatrix> = elements.iter().cloned().collect();
        let mut frontier = 0;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            frontier += 1;
            for g in &generators {
                let next = current.mul(g);
                if seen.insert(next.clone()) {
                    if elements.len() + 1 > cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    elements.push(next);
                }
            }
        }
        Ok(GroupRepresentation {
            n,
            generators,
            elements,
        })
    }

    pub fn trivial(n: usize) -> Self {
        GroupRepresentation {
            n,
            generators: vec![],
            elements: vec![QMatrix::identity(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[QMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[QMatrix] {
        &self.elements
    }

    pub fn is_permutation_group(&self) -> bool {
        self.elements.iter().all(|m| m.is_permutation())
    }

    pub fn is_monomial_group(&self) -> bool {
        self.elements.iter().all(|m| m.is_monomial())
    }
}

/// Apply a group element to a polynomial: variable `x_j` is replaced by
/// the linear form given by column j of the matrix, `sum_i M[i][j] x_i`.
pub fn act(g: &QMatrix, p: &Polynomial) -> Result<Polynomial> {
    let n = p.nvars();
    if g.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: g.n(),
        });
    }
    if g.is_monomial() {
        // Fast path: each variable maps to a scalar multiple of a single
        // variable, so every term maps to a single term.
        let mut dest = vec![(0usize, Rational::zero()); n];
        for (j, slot) in dest.iter_mut().enumerate() {
            for i in 0..n {
                let e = g.get(i, j);
                if !e.is_zero() {
                    *slot = (i, e.clone());
                    break;
                }
            }
        }
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; n];
                let mut coeff = c.clone();
                for (j, &e) in m.exponents().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    let (i, scale) = &dest[j];
                    exps[*i] += e;
                    if !scale.is_one() {
                        let mut pw = Rational::one();
                        for _ in 0..e {
                            pw *= scale;
                        }
                        coeff *= pw;
                    }
                }
                (Monomial::new(exps), coeff)
            })
            .collect();
        return Ok(Polynomial::from_terms(n, p.order(), terms));
    }
    let images: Vec<Polynomial> = (0..n)
        .map(|j| {
            let terms = (0..n)
                .filter(|&i| !g.get(i, j).is_zero())
                .map(|i| (Monomial::variable(n, i), g.get(i, j).clone()))
                .collect();
            Polynomial::from_terms(n, p.order(), terms)
        })
        .collect();
    p.substitute(&images)
}

/// The averaging projection onto the invariant ring:
/// (1/|G|) sum over g of g.p.
pub fn reynolds(p: &Polynomial, group: &GroupRepresentation) -> Result<Polynomial> {
    let mut acc = Polynomial::zero(p.nvars(), p.order());
    for g in group.elements() {
        acc = acc.add(&act(g, p)?)?;
    }
    let scale = BigRational::new(1.into(), (group.order() as i64).into());
    Ok(acc.scale(&scale))
}

pub fn is_invariant(p: &Polynomial, group: &GroupRepresentation) -> Result<bool> {
    // Generators suffice: the fixed set of a generating set is the fixed
    // set of the group.
    for g in group.generators() {
        if &act(g, p)? != p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lazily yields the Reynolds images of the degree-d monomials, in
/// descending monomial order, skipping zero images. When the whole group
/// consists of monomial matrices, only one representative per monomial
/// orbit is expanded (the images of orbit mates agree up to a nonzero
/// scalar, so they contribute no new candidates).
pub struct ReynoldsDegreeBasis<'a> {
    group: &'a GroupRepresentation,
    monomials: Box<dyn Iterator<Item = Monomial> + 'a>,
    order: MonomialOrder,
    orbit_dedup: bool,
    seen: HashSet<Monomial>,
    pub batch_size: usize,
}

impl<'a> ReynoldsDegreeBasis<'a> {
    pub fn new(d: u32, group: &'a GroupRepresentation, order: MonomialOrder) -> Self {
        Self::with_batch_size(d, group, order, DEFAULT_BATCH_SIZE)
    }

    pub fn with_batch_size(
        d: u32,
        group: &'a GroupRepresentation,
        order: MonomialOrder,
        batch_size: usize,
    ) -> Self {
        ReynoldsDegreeBasis {
            group,
            monomials: Box::new(monomials_of_degree_desc(group.n(), d, order)),
            order,
            orbit_dedup: group.is_monomial_group(),
            seen: HashSet::new(),
            batch_size,
        }
    }

    /// Pull up to `batch_size` further images.
    pub fn next_batch(&mut self) -> Vec<Polynomial> {
        let mut out = Vec::new();
        while out.len() < self.batch_size {
            match self.next() {
                Some(p) => out.push(p),
                None => break,
            }
        }
        out
    }

    fn orbit_of(&self, m: &Monomial) -> Vec<Monomial> {
        let n = self.group.n();
        let mut orbit = Vec::new();
        for g in self.group.elements() {
            let mut exps = vec![0u32; n];
            for (j, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let i = (0..n)
                    .find(|&i| !g.get(i, j).is_zero())
                    .expect("monomial matrix column");
                exps[i] += e;
            }
            orbit.push(Monomial::new(exps));
        }
        orbit
    }
}

impl Iterator for ReynoldsDegreeBasis<'_> {
    type Item = Polynomial;

    fn next(&mut self) -> Option<Polynomial> {
        loop {
            let m = self.monomials.next()?;
            if self.orbit_dedup {
                if self.seen.contains(&m) {
                    continue;
                }
                for o in self.orbit_of(&m) {
                    self.seen.insert(o);
                }
            }
            let mono = Polynomial::monomial(self.group.n(), self.order, m, Rational::one());
            let image = reynolds(&mono, self.group).expect("dimensions agree");
            if !image.is_zero() {
                return Some(image);
            }
        }
    }
}

/// A validated homogeneous system of parameters inside the invariant
/// ring: exactly n homogeneous invariants generating a zero-dimensional
/// ideal.
#[derive(Debug, Clone)]
pub struct PrimarySystem {
    polys: Vec<Polynomial>,
    degrees: Vec<u32>,
}

impl PrimarySystem {
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }
}

/// Check a candidate list of primary invariants: count, homogeneity,
/// invariance, and zero-dimensionality of the generated ideal (every
/// variable must have a pure power among the leading monomials of a
/// Groebner basis).
pub fn validate_primaries(
    polys: &[Polynomial],
    group: &GroupRepresentation,
) -> Result<PrimarySystem> {
    let n = group.n();
    if polys.len() != n {
        return Err(Error::InvalidPrimaries(format!(
            "expected {} polynomials (one per variable), got {}",
            n,
            polys.len()
        )));
    }
    let mut degrees = Vec::with_capacity(n);
    for (k, p) in polys.iter().enumerate() {
        if p.nvars() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p.nvars(),
            });
        }
        match p.homogeneous_degree() {
            Homogeneity::Degree(d) if d >= 1 => degrees.push(d),
            Homogeneity::Degree(_) | Homogeneity::Zero => {
                return Err(Error::InvalidPrimaries(format!(
                    "primary #{} must be nonconstant and nonzero",
                    k + 1
                )))
            }
            Homogeneity::No => {
                return Err(Error::InvalidPrimaries(format!(
                    "primary #{} is not homogeneous: {}",
                    k + 1,
                    p.to_text()
                )))
            }
        }
        if !is_invariant(p, group)? {
            return Err(Error::InvalidPrimaries(format!(
                "primary #{} is not invariant: {}",
                k + 1,
                p.to_text()
            )));
        }
    }
    // Zero-dimensionality: each variable carries a pure power among the
    // Groebner leading monomials.
    let gb = buchberger(polys);
    let mut covered = vec![false; n];
    for g in &gb {
        let lm = g.leading_monomial().unwrap();
        let nz: Vec<usize> = lm
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect();
        if nz.len() == 1 {
            covered[nz[0]] = true;
        }
    }
    if let Some(i) = covered.iter().position(|&c| !c) {
        return Err(Error::InvalidPrimaries(format!(
            "ideal is not zero-dimensional: no pure power of x{} among leading monomials",
            i + 1
        )));
    }
    Ok(PrimarySystem {
        polys: polys.to_vec(),
        degrees,
    })
}

/// Invariant-subspace dimension at a fixed degree by orbit counting, for
/// permutation groups: one invariant per monomial orbit.
pub fn permutation_invariant_dimension(group: &GroupRepresentation, d: u32) -> Option<usize> {
    if !group.is_permutation_group() {
        return None;
    }
    let n = group.n();
    let mut orbit_of: HashMap<Monomial, usize> = HashMap::new();
    let mut orbits = 0usize;
    for m in monomials_of_degree_desc(n, d, MonomialOrder::DegRevLex) {
        if orbit_of.contains_key(&m) {
            continue;
        }
        orbits += 1;
        for g in group.elements() {
            let mut exps = vec![0u32; n];
            for (j, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let i = (0..n).find(|&i| !g.get(i, j).is_zero()).unwrap();
                exps[i] += e;
            }
            orbit_of.insert(Monomial::new(exps), orbits);
        }
    }
    Some(orbits)
}
