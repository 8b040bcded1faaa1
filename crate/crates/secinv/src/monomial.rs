//! Monomials as sparse-free exponent vectors and the three supported
//! monomial orders.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// A monomial in a fixed number of variables, stored as one exponent per
/// variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The constant monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exponents: vec![0; n],
        }
    }

    /// The single variable `x_i` (zero-based index).
    pub fn variable(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial { exponents: e }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.nvars() == other.nvars()
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exponents: other
                .exponents
                .iter()
                .zip(&self.exponents)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// The supported monomial orders. All three are total, multiplicative
/// orders; `DegRevLex` and `DegLex` refine total degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    DegLex,
    Lex,
}

impl MonomialOrder {
    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::Lex => "lex",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "degrevlex" => Some(MonomialOrder::DegRevLex),
            "deglex" => Some(MonomialOrder::DegLex),
            "lex" => Some(MonomialOrder::Lex),
            _ => None,
        }
    }

    /// Compare two monomials of the same length under this order.
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Lex => a.exponents.cmp(&b.exponents),
            MonomialOrder::DegLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| a.exponents.cmp(&b.exponents)),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // Ties broken by the last differing exponent: smaller wins.
                for (x, y) in a.exponents.iter().zip(&b.exponents).rev() {
                    match x.cmp(y) {
                        Ordering::Equal => {}
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }),
        }
    }

    /// Checked comparison, rejecting length mismatches.
    pub fn try_compare(self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::DimensionMismatch {
                expected: a.nvars(),
                got: b.nvars(),
            });
        }
        Ok(self.compare(a, b))
    }
}

/// All monomials of degree `d` in `n` variables, in strictly descending
/// order under `ord`. Generated lazily so that huge degree levels cost
/// nothing until consumed.
pub fn monomials_of_degree_desc(
    n: usize,
    d: u32,
    ord: MonomialOrder,
) -> impl Iterator<Item = Monomial> {
    DegreeEnumerator::new(n, d, ord)
}

struct DegreeEnumerator {
    // Current exponent vector, or None when exhausted.
    current: Option<Vec<u32>>,
    ord: MonomialOrder,
}

impl DegreeEnumerator {
    fn new(n: usize, d: u32, ord: MonomialOrder) -> Self {
        let current = if n == 0 {
            if d == 0 {
                Some(vec![])
            } else {
                None
            }
        } else {
            // x_1^d is the largest degree-d monomial in all three orders.
            let mut e = vec![0; n];
            e[0] = d;
            Some(e)
        };
        DegreeEnumerator { current, ord }
    }

    /// Descending-lex successor among compositions of fixed sum.
    /// Used directly for lex/deglex (same-degree deglex ties are lex ties).
    fn step_desc_lex(e: &mut [u32]) -> bool {
        let n = e.len();
        // Find the rightmost position j < n-1 whose suffix sum (beyond j)
        // is positive in a way that lets us decrement at j.
        // Descending lex successor: find last j < n-1 with e[j] > 0 ignoring
        // the final position, decrement it, and push everything after into
        // position j+1 as the largest possible remainder.
        let mut j = None;
        for k in (0..n.saturating_sub(1)).rev() {
            if e[k] > 0 {
                j = Some(k);
                break;
            }
        }
        let j = match j {
            Some(j) => j,
            None => return false,
        };
        let tail: u32 = e[j + 1..].iter().sum();
        e[j] -= 1;
        for v in &mut e[j + 1..] {
            *v = 0;
        }
        e[j + 1] = tail + 1;
        true
    }

    /// Descending degrevlex successor. Descending degrevlex on a fixed
    /// degree equals ascending lex on the reversed exponent vector.
    fn step_desc_degrevlex(e: &mut [u32]) -> bool {
        let n = e.len();
        // Work on reversed coordinates r = (e[n-1], ..., e[0]) and take the
        // ascending-lex successor among compositions of the same sum:
        // increment at the latest possible reversed position.
        // In original coordinates: find the earliest position k > 0 with a
        // positive prefix sum before it, i.e. the mirrored move.
        // Reversed view: find largest reversed index j < n-1 whose reversed
        // suffix has positive sum; that suffix lives at original indices
        // 0..n-1-j.
        // Equivalent original-coordinate formulation:
        let mut first_nonzero = None;
        for (k, item) in e.iter().enumerate().take(n) {
            if *item > 0 {
                first_nonzero = Some(k);
                break;
            }
        }
        let k = match first_nonzero {
            Some(k) => k,
            None => return false,
        };
        if k == n - 1 {
            // Only the last variable carries weight: this is x_n^d, the
            // smallest degree-d monomial.
            return false;
        }
        // Move one unit from the head of the vector to position k+1 and
        // collapse the rest of the head onto position 0.
        let head = e[k];
        e[k] = 0;
        e[k + 1] += 1;
        e[0] = head - 1;
        true
    }
}

impl Iterator for DegreeEnumerator {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        let e = self.current.as_mut()?;
        let out = Monomial::new(e.clone());
        let more = if e.is_empty() {
            false
        } else {
            match self.ord {
                MonomialOrder::Lex | MonomialOrder::DegLex => Self::step_desc_lex(e),
                MonomialOrder::DegRevLex => Self::step_desc_degrevlex(e),
            }
        };
        if !more {
            self.current = None;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_textbook_case() {
        // x^2 y vs x y^2 with x > y
        let a = m(&[2, 1]);
        let b = m(&[1, 2]);
        assert_eq!(MonomialOrder::DegRevLex.compare(&a, &b), Ordering::Greater);
    }

    #[test]
    fn compare_equal_on_identical() {
        let a = m(&[1, 2, 3]);
        for ord in [
            MonomialOrder::DegRevLex,
            MonomialOrder::DegLex,
            MonomialOrder::Lex,
        ] {
            assert_eq!(ord.compare(&a, &a), Ordering::Equal);
        }
    }

    #[test]
    fn lex_ignores_degree() {
        // y^3 vs x with x > y
        let a = m(&[0, 3]);
        let b = m(&[1, 0]);
        assert_eq!(MonomialOrder::Lex.compare(&a, &b), Ordering::Less);
    }

    #[test]
    fn degrevlex_separates_same_degree() {
        // classic: x1 x3 < x2^2 in degrevlex, but x1 x3 > x2^2 in lex
        let a = m(&[1, 0, 1]);
        let b = m(&[0, 2, 0]);
        assert_eq!(MonomialOrder::DegRevLex.compare(&a, &b), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.compare(&a, &b), Ordering::Greater);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let a = m(&[1, 0]);
        let b = m(&[1, 0, 0]);
        assert!(MonomialOrder::DegRevLex.try_compare(&a, &b).is_err());
    }

    #[test]
    fn enumeration_is_strictly_descending_and_complete() {
        for ord in [
            MonomialOrder::DegRevLex,
            MonomialOrder::DegLex,
            MonomialOrder::Lex,
        ] {
            for n in 1..=4usize {
                for d in 0..=5u32 {
                    let all: Vec<Monomial> = monomials_of_degree_desc(n, d, ord).collect();
                    let expected = num_integer::binomial(
                        (n as u64) + (d as u64) - 1,
                        d as u64,
                    );
                    assert_eq!(all.len() as u64, expected, "n={n} d={d} {ord:?}");
                    for w in all.windows(2) {
                        assert_eq!(
                            ord.compare(&w[0], &w[1]),
                            Ordering::Greater,
                            "n={n} d={d} {ord:?}: {:?} !> {:?}",
                            w[0],
                            w[1]
                        );
                    }
                    for mono in &all {
                        assert_eq!(mono.degree(), d);
                    }
                }
            }
        }
    }

    #[test]
    fn lcm_and_division() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 3, 0]);
        assert_eq!(a.lcm(&b), m(&[2, 3, 0]));
        assert!(!a.divides(&b));
        assert!(a.divides(&a.lcm(&b)));
        assert_eq!(a.div_into(&a.lcm(&b)), m(&[0, 2, 0]));
    }
}
