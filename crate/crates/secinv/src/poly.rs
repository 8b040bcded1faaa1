//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept strictly descending under the polynomial's monomial
//! order; the zero polynomial is the empty term list. Coefficients are
//! arbitrary-precision rationals, always reduced, never floating point.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from(BigInt::from(n))
}

/// A term is a monomial with a nonzero rational coefficient.
pub type Term = (Monomial, Rational);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    order: MonomialOrder,
    // Strictly descending by monomial under `order`; no zero coefficients.
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(nvars: usize, order: MonomialOrder) -> Self {
        Polynomial {
            nvars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize, order: MonomialOrder) -> Self {
        Polynomial::constant(nvars, order, Rational::one())
    }

    pub fn constant(nvars: usize, order: MonomialOrder, c: Rational) -> Self {
        let mut p = Polynomial::zero(nvars, order);
        if !c.is_zero() {
            p.terms.push((Monomial::one(nvars), c));
        }
        p
    }

    pub fn variable(nvars: usize, order: MonomialOrder, i: usize) -> Self {
        Polynomial {
            nvars,
            order,
            terms: vec![(Monomial::variable(nvars, i), Rational::one())],
        }
    }

    pub fn monomial(nvars: usize, order: MonomialOrder, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.nvars(), nvars);
        let mut p = Polynomial::zero(nvars, order);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Build from an arbitrary term list: merges duplicates, drops zeros,
    /// sorts descending.
    pub fn from_terms(nvars: usize, order: MonomialOrder, terms: Vec<Term>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Polynomial {
            nvars,
            order,
            terms: merged,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch);
        }
        Ok(())
    }

    /// Leading monomial, coefficient and term of a nonzero polynomial.
    pub fn leading_parts(&self) -> Result<(&Monomial, &Rational, Term)> {
        let (m, c) = self.terms.first().ok_or(Error::ZeroPolynomial)?;
        Ok((m, c, (m.clone(), c.clone())))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    /// `Some(d)` if every term has degree `d`; for the zero polynomial,
    /// which is homogeneous of every degree, `Homogeneity::Zero`.
    pub fn homogeneous_degree(&self) -> Homogeneity {
        let mut it = self.terms.iter();
        let d = match it.next() {
            None => return Homogeneity::Zero,
            Some((m, _)) => m.degree(),
        };
        if it.all(|(m, _)| m.degree() == d) {
            Homogeneity::Degree(d)
        } else {
            Homogeneity::No
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        !matches!(self.homogeneous_degree(), Homogeneity::No)
    }

    /// Total degree; zero polynomial reports None.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.merge_with(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.merge_with(other, true))
    }

    fn merge_with(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (m, c) = b.next().unwrap();
                    out.push((m.clone(), if negate { -c.clone() } else { c.clone() }));
                }
                (Some((ma, _)), Some((mb, _))) => match self.order.compare(ma, mb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        let (m, c) = b.next().unwrap();
                        out.push((m.clone(), if negate { -c.clone() } else { c.clone() }));
                    }
                    Ordering::Equal => {
                        let (m, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let c = if negate {
                            ca.clone() - cb.clone()
                        } else {
                            ca.clone() + cb.clone()
                        };
                        if !c.is_zero() {
                            out.push((m.clone(), c));
                        }
                    }
                },
            }
        }
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.order);
        }
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    /// Multiply by a single term. Order-preserving since monomial orders
    /// are multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.order);
        }
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.nvars, self.order));
        }
        // Repeated merge of term-shifted copies of the shorter factor.
        let (short, long) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(self.nvars, self.order);
        for (m, c) in &short.terms {
            acc = acc.merge_with(&long.mul_term(m, c), false);
        }
        Ok(acc)
    }

    /// Subtract `c * m * g` in place-ish (returns the merged result).
    /// This is the inner step of multivariate division.
    pub fn sub_mul_term(&self, c: &Rational, m: &Monomial, g: &Polynomial) -> Polynomial {
        self.merge_with(&g.mul_term(m, c), true)
    }

    /// Divide all coefficients by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Substitute each variable by the given polynomial. Used for linear
    /// changes of variables (group actions).
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: images.len(),
            });
        }
        let out_n = images
            .first()
            .map(|p| p.nvars())
            .unwrap_or(self.nvars);
        let mut acc = Polynomial::zero(out_n, self.order);
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(out_n, self.order, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    prod = prod.mul(&images[i])?;
                }
            }
            acc = acc.merge_with(&prod, false);
        }
        Ok(acc)
    }

    /// Render with the given variable names; inverse of the parser.
    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }

    /// Render with default names x1..xn.
    pub fn to_text(&self) -> String {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        format!("{}", self.display(&names))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// All terms share this degree.
    Degree(u32),
    /// The zero polynomial: homogeneous of every degree.
    Zero,
    /// Not homogeneous.
    No,
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.terms.iter().enumerate() {
            let abs = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut wrote_factor = false;
            if !abs.is_one() || m.is_one() {
                write!(f, "{abs}")?;
                wrote_factor = true;
            }
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote_factor {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.names[v])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote_factor = true;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2(text: &str) -> Polynomial {
        crate::parser::parse_polynomial(text, &["x".into(), "y".into()], MonomialOrder::DegRevLex)
            .unwrap()
    }

    #[test]
    fn cancellation_in_addition() {
        let a = p2("x+y");
        let b = p2("x-y");
        assert_eq!(a.add(&b).unwrap(), p2("2*x"));
    }

    #[test]
    fn difference_of_squares() {
        let a = p2("x+y");
        let b = p2("x-y");
        assert_eq!(a.mul(&b).unwrap(), p2("x^2-y^2"));
    }

    #[test]
    fn scaling_by_half() {
        let a = p2("x+y");
        assert_eq!(a.scale(&rat(1, 2)), p2("1/2*x+1/2*y"));
    }

    #[test]
    fn leading_parts_degrevlex() {
        // 3x^2y + y^3: degree-3 terms, x^2y > y^3 in degrevlex
        let p = p2("3*x^2*y + y^3");
        let (lm, lc, _) = p.leading_parts().unwrap();
        assert_eq!(lm, &Monomial::new(vec![2, 1]));
        assert_eq!(lc, &rat_int(3));
    }

    #[test]
    fn leading_parts_constant_and_variable() {
        let p = p2("7");
        let (lm, lc, _) = p.leading_parts().unwrap();
        assert!(lm.is_one());
        assert_eq!(lc, &rat_int(7));

        let q = p2("x");
        let (lm, lc, _) = q.leading_parts().unwrap();
        assert_eq!(lm, &Monomial::new(vec![1, 0]));
        assert_eq!(lc, &rat_int(1));
    }

    #[test]
    fn leading_parts_of_zero_fails() {
        let z = Polynomial::zero(2, MonomialOrder::DegRevLex);
        assert!(z.leading_parts().is_err());
    }

    #[test]
    fn homogeneity() {
        assert_eq!(p2("x^2+x*y").homogeneous_degree(), Homogeneity::Degree(2));
        assert_eq!(p2("x^2+x").homogeneous_degree(), Homogeneity::No);
        assert_eq!(p2("0").homogeneous_degree(), Homogeneity::Zero);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let a = p2("x");
        let b = Polynomial::variable(3, MonomialOrder::DegRevLex, 0);
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn homogeneous_product_degree_adds() {
        let a = p2("x^2+x*y");
        let b = p2("x-y");
        match a.mul(&b).unwrap().homogeneous_degree() {
            Homogeneity::Degree(d) => assert_eq!(d, 3),
            h => panic!("expected homogeneous product, got {h:?}"),
        }
    }
}
