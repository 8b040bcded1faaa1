//! Molien series of a rational representation and the per-degree
//! secondary-invariant counts m_d relative to a primary system.
//!
//! The series is the group average of 1/det(I - t M_g), expanded as a
//! truncated power series with exact rational arithmetic. Each
//! determinant is obtained by fraction-free (Bareiss) elimination on the
//! polynomial matrix I - t M_g, then inverted as a power series.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::GroupRepresentation;
use crate::poly::Rational;

/// Dense univariate polynomial in t, used only inside this module.
type UniPoly = Vec<Rational>;

fn poly_mul(a: &UniPoly, b: &UniPoly) -> UniPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(out)
}

fn poly_sub(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn trim(mut p: UniPoly) -> UniPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Exact division, panics if the division leaves a remainder. Bareiss
/// elimination guarantees exactness at every step.
fn poly_div_exact(num: &UniPoly, den: &UniPoly) -> UniPoly {
    assert!(!den.is_empty(), "division by zero polynomial");
    let mut rem = num.clone();
    let mut quot = vec![Rational::zero(); num.len().saturating_sub(den.len()) + 1];
    let dlead = den.last().unwrap();
    while rem.len() >= den.len() {
        let shift = rem.len() - den.len();
        let c = rem.last().unwrap() / dlead;
        quot[shift] = c.clone();
        let mut sub = vec![Rational::zero(); shift];
        sub.extend(den.iter().map(|d| d * &c));
        rem = poly_sub(&rem, &sub);
        if rem.len() > shift + den.len() {
            unreachable!();
        }
        if rem.len() == shift + den.len() {
            // leading term did not cancel; cannot happen with exact division
            panic!("inexact polynomial division");
        }
    }
    assert!(rem.is_empty(), "inexact polynomial division");
    trim(quot)
}

/// det(I - t M) by fraction-free Gaussian elimination over Q[t].
fn char_denominator(m: &crate::group::QMatrix) -> UniPoly {
    let n = m.n();
    // a[i][j] = delta_ij - t m_ij
    let mut a: Vec<Vec<UniPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c0 = if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    };
                    trim(vec![c0, -m.get(i, j).clone()])
                })
                .collect()
        })
        .collect();
    let mut sign = false;
    let mut prev_pivot: UniPoly = vec![Rational::one()];
    for k in 0..n {
        if a[k][k].is_empty() {
            let swap = (k + 1..n).find(|&r| !a[r][k].is_empty());
            match swap {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return vec![], // determinant is zero
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = poly_sub(&poly_mul(&a[k][k], &a[i][j]), &poly_mul(&a[i][k], &a[k][j]));
                a[i][j] = poly_div_exact(&num, &prev_pivot);
            }
            a[i][k] = vec![];
        }
        prev_pivot = a[k][k].clone();
    }
    let mut det = a[n - 1][n - 1].clone();
    if sign {
        for c in &mut det {
            *c = -c.clone();
        }
    }
    det
}

/// Truncated power-series reciprocal of a polynomial with nonzero
/// constant term; returns coefficients 0..=max_degree.
fn series_recip(p: &UniPoly, max_degree: u32) -> Vec<Rational> {
    let c0 = p.first().expect("unit constant term").clone();
    assert!(!c0.is_zero());
    let inv0 = c0.recip();
    let len = max_degree as usize + 1;
    let mut out = vec![Rational::zero(); len];
    out[0] = inv0.clone();
    for d in 1..len {
        let mut acc = Rational::zero();
        for k in 1..=d.min(p.len() - 1) {
            acc += &p[k] * &out[d - k];
        }
        out[d] = -acc * &inv0;
    }
    out
}

/// Coefficients a_0..a_D of the Molien series: a_d is the dimension of
/// the degree-d invariant subspace. Fails if any coefficient is not a
/// non-negative integer, which would indicate an arithmetic or closure
/// bug (or a modular-case input, which is out of scope).
pub fn molien_series(group: &GroupRepresentation, max_degree: u32) -> Result<Vec<BigInt>> {
    let len = max_degree as usize + 1;
    let mut sum = vec![Rational::zero(); len];
    for g in group.elements() {
        let den = char_denominator(g);
        let inv = series_recip(&den, max_degree);
        for (s, v) in sum.iter_mut().zip(inv) {
            *s += v;
        }
    }
    let order = BigRational::from(BigInt::from(group.order() as i64));
    let mut out = Vec::with_capacity(len);
    for (d, s) in sum.into_iter().enumerate() {
        let v = s / &order;
        if !v.is_integer() || v.is_negative() {
            return Err(Error::NonIntegerMolienCoefficient(d as u32));
        }
        out.push(v.to_integer());
    }
    Ok(out)
}

/// Multiply the Molien series by prod_i (1 - t^{deg p_i}): the resulting
/// polynomial's coefficients are the secondary counts m_d.
pub fn secondary_counts(
    series: &[BigInt],
    primary_degrees: &[u32],
    order: usize,
) -> Result<(Vec<BigInt>, BigInt)> {
    let len = series.len();
    let mut m: Vec<BigInt> = series.to_vec();
    for &d in primary_degrees {
        let d = d as usize;
        // multiply by (1 - t^d), truncated
        for i in (d..len).rev() {
            let lower = m[i - d].clone();
            m[i] -= lower;
        }
    }
    for (d, v) in m.iter().enumerate() {
        if v.is_negative() {
            return Err(Error::NegativeSecondaryCount(d as u32));
        }
    }
    let prod: BigInt = primary_degrees
        .iter()
        .fold(BigInt::one(), |acc, &d| acc * BigInt::from(d));
    let (total, rem) = num_integer::Integer::div_rem(&prod, &BigInt::from(order as i64));
    if !rem.is_zero() {
        return Err(Error::InvalidPrimaries(format!(
            "product of primary degrees {prod} is not divisible by the group order {order}"
        )));
    }
    let sum: BigInt = m.iter().sum();
    if sum != total {
        return Err(Error::InvalidPrimaries(format!(
            "secondary counts sum to {sum}, expected {total}; \
             the primaries are not a homogeneous system of parameters"
        )));
    }
    Ok((m, total))
}

/// Molien coefficients and secondary counts out to the degree cap
/// sum(deg p_i - 1), beyond which every m_d vanishes.
#[derive(Debug, Clone)]
pub struct MolienProfile {
    pub series: Vec<BigInt>,
    pub counts: Vec<BigInt>,
    pub total: BigInt,
    pub max_degree: u32,
}

impl MolienProfile {
    pub fn compute(group: &GroupRepresentation, primary_degrees: &[u32]) -> Result<Self> {
        let cap: u32 = primary_degrees.iter().map(|&d| d - 1).sum();
        let series = molien_series(group, cap)?;
        let (counts, total) = secondary_counts(&series, primary_degrees, group.order())?;
        Ok(MolienProfile {
            series,
            counts,
            total,
            max_degree: cap,
        })
    }

    pub fn count_at(&self, d: u32) -> BigInt {
        self.counts
            .get(d as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::QMatrix;
    use crate::poly::rat;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn trivial_group_counts_all_monomials() {
        let g = GroupRepresentation::trivial(3);
        let s = molien_series(&g, 5).unwrap();
        // a_d = C(d + 2, d)
        let expected: Vec<BigInt> = (0..=5u64)
            .map(|d| BigInt::from(num_integer::binomial(d + 2, d)))
            .collect();
        assert_eq!(s, expected);
    }

    #[test]
    fn swap_group_series() {
        let g = GroupRepresentation::close(vec![QMatrix::from_column_units(&[2, 1])]).unwrap();
        let s = molien_series(&g, 5).unwrap();
        // 1/2 (1/(1-t)^2 + 1/(1-t^2)) = 1,1,2,2,3,3,...
        assert_eq!(s, vec![big(1), big(1), big(2), big(2), big(3), big(3)]);
    }

    #[test]
    fn sign_action_series() {
        let m = QMatrix::new(1, vec![rat(-1, 1)]).unwrap();
        let g = GroupRepresentation::close(vec![m]).unwrap();
        let s = molien_series(&g, 4).unwrap();
        assert_eq!(s, vec![big(1), big(0), big(1), big(0), big(1)]);
    }

    #[test]
    fn trivial_group_with_variable_primaries() {
        let g = GroupRepresentation::trivial(3);
        let profile = MolienProfile::compute(&g, &[1, 1, 1]).unwrap();
        assert_eq!(profile.total, big(1));
        assert_eq!(profile.counts, vec![big(1)]);
        assert_eq!(profile.max_degree, 0);
    }

    #[test]
    fn swap_group_counts() {
        // primaries x+y (deg 1) and xy (deg 2): total = 2/2 = 1
        let g = GroupRepresentation::close(vec![QMatrix::from_column_units(&[2, 1])]).unwrap();
        let profile = MolienProfile::compute(&g, &[1, 2]).unwrap();
        assert_eq!(profile.total, big(1));
        assert_eq!(profile.count_at(0), big(1));
        assert!(profile.counts.iter().skip(1).all(|c| c.is_zero()));
    }

    #[test]
    fn bad_primaries_detected() {
        // swap group with degrees (1, 1): product 1 not divisible... it is,
        // but the counts go negative / fail the sum check.
        let g = GroupRepresentation::close(vec![QMatrix::from_column_units(&[2, 1])]).unwrap();
        let series = molien_series(&g, 0).unwrap();
        assert!(secondary_counts(&series, &[1, 1], g.order()).is_err());
    }

    #[test]
    fn non_permutation_matrix_determinant() {
        // rotation by 90 degrees has order 4; series counts invariants of C4
        let m = QMatrix::new(2, vec![rat(0, 1), rat(-1, 1), rat(1, 1), rat(0, 1)]).unwrap();
        let g = GroupRepresentation::close(vec![m]).unwrap();
        assert_eq!(g.order(), 4);
        let s = molien_series(&g, 4).unwrap();
        // C4 on the plane: invariant dims 1,0,1,0,3
        // (degree 4: x^2y^2, (x^2+y^2)^2 and x^3y-xy^3)
        assert_eq!(s, vec![big(1), big(0), big(1), big(0), big(3)]);
    }
}
