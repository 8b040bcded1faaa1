//! Built-in benchmark instances: permutation (and one non-permutation)
//! matrix groups with their published primary invariants.

use crate::error::{Error, Result};
use crate::group::QMatrix;
use crate::monomial::{Monomial, MonomialOrder};
use crate::parser::parse_rational;
use crate::poly::{Polynomial, Rational};
use num_traits::One;

#[derive(Debug, Clone, Copy)]
pub struct ExpectedCounts {
    pub secondaries: usize,
    pub max_secondary_degree: u32,
    pub irreducibles: usize,
    pub max_irreducible_degree: u32,
}

#[derive(Debug, Clone)]
pub struct BenchmarkInstance {
    pub number: usize,
    pub description: &'static str,
    pub nvars: usize,
    pub generators: Vec<QMatrix>,
    /// Primary invariants as parseable expressions over x1..xn; empty for
    /// instance 9, whose primaries were never published.
    pub primaries: Vec<String>,
    /// Large instances that may exceed desk-scale resources.
    pub stretch: bool,
    pub expected: ExpectedCounts,
}

impl BenchmarkInstance {
    pub fn variable_names(&self) -> Vec<String> {
        (1..=self.nvars).map(|i| format!("x{i}")).collect()
    }

    pub fn parse_primaries(&self, order: MonomialOrder) -> Result<Vec<Polynomial>> {
        let names = self.variable_names();
        self.primaries
            .iter()
            .map(|t| crate::parser::parse_polynomial(t, &names, order))
            .collect()
    }

    pub fn has_primaries(&self) -> bool {
        !self.primaries.is_empty()
    }
}

/// Elementary symmetric polynomial e_k in n variables.
pub fn elementary_symmetric(n: usize, k: usize, order: MonomialOrder) -> Polynomial {
    assert!(k >= 1 && k <= n);
    let mut terms = Vec::new();
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let mut exps = vec![0u32; n];
        for &i in &subset {
            exps[i] = 1;
        }
        terms.push((Monomial::new(exps), Rational::one()));
        // next k-subset in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return Polynomial::from_terms(n, order, terms);
            }
            i -= 1;
            if subset[i] != i + n - k {
                break;
            }
        }
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

fn perm(cols: &[usize]) -> QMatrix {
    QMatrix::from_column_units(cols)
}

fn strs(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn elem_sym_texts(n: usize) -> Vec<String> {
    let order = MonomialOrder::DegRevLex;
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    (1..=n)
        .map(|k| format!("{}", elementary_symmetric(n, k, order).display(&names)))
        .collect()
}

/// The nine built-in instances. Instance 9 carries only its matrices.
pub fn instances() -> Vec<BenchmarkInstance> {
    vec![
        BenchmarkInstance {
            number: 1,
            description: "13-dimensional representation of S2",
            nvars: 13,
            generators: vec![perm(&[2, 1, 13, 12, 11, 8, 10, 6, 9, 7, 5, 4, 3])],
            primaries: strs(&[
                "x9",
                "x7+x10",
                "x6+x8",
                "x5+x11",
                "x4+x12",
                "x3+x13",
                "x1+x2",
                "x3*x13",
                "x4*x12",
                "x5*x11",
                "x7*x10",
                "x6*x8",
                "x1*x2",
            ]),
            stretch: false,
            expected: ExpectedCounts {
                secondaries: 32,
                max_secondary_degree: 6,
                irreducibles: 15,
                max_irreducible_degree: 2,
            },
        },
        BenchmarkInstance {
            number: 2,
            description: "6-dimensional representation of S3",
            nvars: 6,
            generators: vec![perm(&[1, 4, 5, 2, 3, 6]), perm(&[4, 1, 5, 2, 6, 3])],
            primaries: strs(&[
                "x3+x5+x6",
                "x1+x2+x4",
                "x3*x5+x3*x6+x5*x6",
                "x3*x4+x2*x5+x1*x6",
                "x1*x2*x4",
                "x1^3*x2^3+x1^3*x4^3+x2^3*x4^3+x3^2*x5^2*x6^2",
            ]),
            stretch: false,
            expected: ExpectedCounts {
                secondaries: 12,
                max_secondary_degree: 9,
                irreducibles: 4,
                max_irreducible_degree: 3,
            },
        },
        BenchmarkInstance {
            number: 3,
            description: "6-dimensional representation of A4",
            nvars: 6,
            generators: vec![perm(&[4, 1, 5, 2, 6, 3]), perm(&[2, 3, 1, 6, 4, 5])],
            primaries: strs(&[
                "x1+x2+x3+x4+x5+x6",
                "x3*x4+x2*x5+x1*x6",
                "x1*x2+x1*x3+x2*x3+x1*x4+x2*x4+x1*x5+x3*x5+x4*x5+x2*x6+x3*x6+x4*x6+x5*x6",
                "x3^2*x4+x3*x4^2+x2^2*x5+x2*x5^2+x1^2*x6+x1*x6^2",
                "x1*x2*x4+x1*x3*x5+x2*x3*x6+x4*x5*x6",
                "x1^2*x2^4+x1^4*x3^2+x2^2*x3^4+x1^4*x4^2+x2^2*x4^4+x3^4*x5^2+x4^4*x5^2+x1^2*x5^4+x2^4*x6^2+x5^4*x6^2+x3^2*x6^4+x4^2*x6^4",
            ]),
            stretch: false,
            expected: ExpectedCounts {
                secondaries: 18,
                max_secondary_degree: 11,
                irreducibles: 8,
                max_irreducible_degree: 5,
            },
        },
        BenchmarkInstance {
            number: 4,
            description: "6-dimensional representation of D6",
            nvars: 6,
            generators: vec![perm(&[6, 5, 4, 3, 2, 1]), perm(&[3, 1, 2, 6, 4, 5])],
            primaries: elem_sym_texts(6),
            stretch: false,
            expected: ExpectedCounts {
                secondaries: 120,
                max_secondary_degree: 14,
                irreducibles: 10,
                max_irreducible_degree: 4,
            },
        },
        BenchmarkInstance {
            number: 5,
            description: "8-dimensional representation of D8",
            nvars: 8,
            generators: vec![
                perm(&[8, 7, 6, 5, 4, 3, 2, 1]),
                perm(&[4, 1, 2, 3, 8, 5, 6, 7]),
            ],
            primaries: strs(&[
                "x1+x2+x3+x4+x5+x6+x7+x8",
                "x4*x5+x1*x6+x2*x7+x3*x8",
                "x3*x5+x4*x6+x1*x7+x2*x8",
                "x2*x5+x3*x6+x4*x7+x1*x8",
                "x1*x5+x2*x6+x3*x7+x4*x8",
                "x1*x3+x2*x4+x5*x7+x6*x8",
                "x1*x2*x3*x4+x5*x6*x7*x8",
                "x1*x2^3+x2*x3^3+x1^3*x4+x3*x4^3+x5^3*x6+x6^3*x7+x7^3*x8+x5*x8^3",
            ]),
            stretch: false,
            expected: ExpectedCounts {
                secondaries: 64,
                max_secondary_degree: 11,
                irreducibles: 24,
                max_irreducible_degree: 5,
            },
        },
        BenchmarkInstance {
            number: 6,
            description: "7-dimensional representation of D14",
            nvars: 7,
            generators: vec![
                perm(&[2, 3, 4, 5, 6, 7, 1]),
                perm(&[1, 7, 6, 5, 4, 3, 2]),
            ],
            primaries: elem_sym_texts(7),
            stretch: false,
            expected: ExpectedCounts {
                secondaries: 360,
                max_secondary_degree: 18,
                irreducibles: 19,
                max_irreducible_degree: 7,
            },
        },
        BenchmarkInstance {
            number: 7,
            description: "15-dimensional representation of S3",
            nvars: 15,
            generators: vec![
                perm(&[2, 1, 3, 4, 7, 14, 5, 8, 11, 13, 9, 15, 10, 6, 12]),
                perm(&[1, 3, 2, 4, 5, 9, 8, 7, 6, 13, 12, 11, 10, 15, 14]),
            ],
            primaries: strs(&[
                "x1+x2+x3",
                "x1*x2+x1*x3+x2*x3",
                "x1*x2*x3",
                "x10+x13",
                "x10*x13",
                "x6+x9+x11+x12+x14+x15",
                "x11*x12+x6*x14+x9*x15",
                "x9*x11+x6*x12+x14*x15",
                "x6*x11+x9*x12+x9*x14+x12*x14+x6*x15+x11*x15",
                "x6*x9*x14+x6*x11*x14+x11*x12*x14+x6*x9*x15+x9*x12*x15+x11*x12*x15",
                "x6^6+x9^6+x11^6+x12^6+x14^6+x15^6",
                "x4",
                "x5+x7+x8",
                "x5*x7+x5*x8+x7*x8",
                "x5*x7*x8",
            ]),
            stretch: true,
            expected: ExpectedCounts {
                secondaries: 1728,
                max_secondary_degree: 17,
                irreducibles: 76,
                max_irreducible_degree: 4,
            },
        },
        BenchmarkInstance {
            number: 8,
            description: "18-dimensional representation of S3",
            nvars: 18,
            generators: vec![
                perm(&[2, 1, 3, 4, 12, 10, 7, 11, 14, 6, 8, 5, 15, 9, 13, 17, 16, 18]),
                perm(&[1, 3, 2, 14, 8, 7, 6, 5, 9, 10, 15, 13, 12, 4, 11, 16, 18, 17]),
            ],
            primaries: strs(&[
                "x1+x2+x3",
                "x1*x2+x1*x3+x2*x3",
                "x1*x2*x3",
                "x4+x9+x14",
                "x4*x9+x4*x14+x9*x14",
                "x4*x9*x14",
                "x16+x17+x18",
                "x16*x17+x16*x18+x17*x18",
                "x16*x17*x18",
                "x6+x7+x10",
                "x6*x7+x6*x10+x7*x10",
                "x6*x7*x10",
                "x5+x8+x11+x12+x13+x15",
                "x5*x12+x8*x13+x11*x15",
                "x8*x11+x12*x13+x5*x15",
                "x5*x11+x8*x12+x5*x13+x11*x13+x8*x15+x12*x15",
                "x5*x8*x12+x5*x11*x12+x5*x8*x13+x11*x12*x15+x8*x13*x15+x11*x13*x15",
                "x5^6+x8^6+x11^6+x12^6+x13^6+x15^6",
            ]),
            stretch: true,
            expected: ExpectedCounts {
                secondaries: 31104,
                max_secondary_degree: 22,
                irreducibles: 137,
                max_irreducible_degree: 4,
            },
        },
        BenchmarkInstance {
            number: 9,
            description: "10-dimensional representation of S5 (primaries not published)",
            nvars: 10,
            generators: example9_generators(),
            primaries: vec![],
            stretch: true,
            expected: ExpectedCounts {
                secondaries: 720,
                max_secondary_degree: 22,
                irreducibles: 46,
                max_irreducible_degree: 9,
            },
        },
    ]
}

pub fn instance(number: usize) -> Result<BenchmarkInstance> {
    instances()
        .into_iter()
        .find(|b| b.number == number)
        .ok_or_else(|| Error::Problem(format!("no built-in example {number} (valid: 1..9)")))
}

fn example9_generators() -> Vec<QMatrix> {
    let rows1: [[&str; 10]; 10] = [
        ["1", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
        ["0", "1", "1/3", "1/3", "1/3", "0", "0", "0", "0", "0"],
        ["0", "0", "1/3", "-2/3", "-2/3", "0", "0", "0", "0", "0"],
        ["0", "0", "-2/3", "1/3", "-2/3", "0", "0", "0", "0", "0"],
        ["0", "0", "-2/3", "-2/3", "1/3", "0", "0", "0", "0", "0"],
        ["0", "0", "0", "0", "0", "1", "0", "0", "0", "0"],
        ["0", "0", "0", "0", "0", "0", "0", "0", "1", "0"],
        ["0", "0", "0", "0", "0", "0", "0", "0", "0", "1"],
        ["0", "0", "0", "0", "0", "0", "1", "0", "0", "0"],
        ["0", "0", "0", "0", "0", "0", "0", "1", "0", "0"],
    ];
    let rows2: [[&str; 10]; 10] = [
        ["1", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
        ["0", "0", "1/3", "-2/3", "-2/3", "0", "0", "0", "0", "0"],
        ["0", "0", "-2/3", "1/3", "-2/3", "0", "0", "0", "0", "0"],
        ["0", "0", "-2/3", "-2/3", "1/3", "0", "0", "0", "0", "0"],
        ["0", "1", "1/3", "1/3", "1/3", "0", "0", "0", "0", "0"],
        ["0", "0", "0", "0", "0", "-1", "-1", "1", "1", "0"],
        ["0", "0", "0", "0", "0", "-1", "0", "0", "0", "1"],
        ["0", "0", "0", "0", "0", "-1", "0", "1", "0", "0"],
        ["0", "0", "0", "0", "0", "0", "-1", "0", "0", "0"],
        ["0", "0", "0", "0", "0", "0", "-1", "1", "0", "0"],
    ];
    let build = |rows: &[[&str; 10]; 10]| {
        let entries: Vec<Rational> = rows
            .iter()
            .flat_map(|r| r.iter().map(|s| parse_rational(s).unwrap()))
            .collect();
        QMatrix::new(10, entries).unwrap()
    };
    vec![build(&rows1), build(&rows2)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupRepresentation;

    #[test]
    fn elementary_symmetric_basics() {
        let names: Vec<String> = (1..=3).map(|i| format!("x{i}")).collect();
        let e2 = elementary_symmetric(3, 2, MonomialOrder::DegRevLex);
        let expected = crate::parser::parse_polynomial(
            "x1*x2+x1*x3+x2*x3",
            &names,
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        assert_eq!(e2, expected);
    }

    #[test]
    fn group_orders_match_molien_totals() {
        // |G| must equal (product of primary degrees) / (secondary count)
        // for every instance with published primaries.
        let expected_orders = [(1, 2), (2, 6), (3, 12), (4, 6), (5, 8), (6, 14), (7, 6), (8, 6)];
        for (num, order) in expected_orders {
            let inst = instance(num).unwrap();
            let g = GroupRepresentation::close(inst.generators.clone()).unwrap();
            assert_eq!(g.order(), order, "instance {num}");
        }
    }

    #[test]
    fn example9_group_is_s5() {
        let inst = instance(9).unwrap();
        let g = GroupRepresentation::close(inst.generators.clone()).unwrap();
        assert_eq!(g.order(), 120);
        assert!(!inst.has_primaries());
    }

    #[test]
    fn all_primaries_parse_and_are_invariant() {
        for inst in instances() {
            if !inst.has_primaries() {
                continue;
            }
            let polys = inst.parse_primaries(MonomialOrder::DegRevLex).unwrap();
            assert_eq!(polys.len(), inst.nvars, "instance {}", inst.number);
            let g = GroupRepresentation::close(inst.generators.clone()).unwrap();
            for (i, p) in polys.iter().enumerate() {
                assert!(p.is_homogeneous(), "instance {} primary {}", inst.number, i);
                assert!(
                    crate::group::is_invariant(p, &g).unwrap(),
                    "instance {} primary {} not invariant",
                    inst.number,
                    i
                );
            }
        }
    }
}
