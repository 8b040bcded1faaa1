//! Run reports: a human-readable table and a line-delimited JSON form.
//!
//! The JSON form is a sequence of records, one JSON object per line,
//! each tagged with a `record` field. The schema is documented in
//! `docs/output-schema.md` and versioned by `SCHEMA_VERSION`.

use std::io::Write;
use std::time::Duration;

use serde::Serialize;

use crate::error::Result;
use crate::secondary::{Provenance, SecondaryResult};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct MetaRecord<'a> {
    pub record: &'static str,
    pub schema: u32,
    pub algorithm: &'a str,
    pub group_order: usize,
    pub nvars: usize,
    pub primary_degrees: &'a [u32],
    pub threads: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeRecord {
    pub record: &'static str,
    pub degree: u32,
    pub expected: usize,
    pub secondaries: usize,
    pub irreducibles: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantRecord {
    pub record: &'static str,
    pub degree: u32,
    pub label: usize,
    pub irreducible: bool,
    pub provenance: &'static str,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poly: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TotalsRecord {
    pub record: &'static str,
    pub secondaries: usize,
    pub irreducibles: usize,
    pub max_secondary_degree: u32,
    pub max_irreducible_degree: u32,
    pub reductions: u64,
    pub reduction_steps: u64,
    pub candidates_generated: u64,
    pub candidates_accepted: u64,
    pub full_gb_recomputations: u64,
    pub basis_size: usize,
    pub elapsed_ms: u128,
}

fn provenance_name(p: Provenance) -> &'static str {
    match p {
        Provenance::Unit => "unit",
        Provenance::PowerProduct => "power-product",
        Provenance::ReynoldsImage => "reynolds-image",
    }
}

/// Everything needed to render a finished run.
pub struct RunReport<'a> {
    pub result: &'a SecondaryResult,
    pub algorithm: &'a str,
    pub group_order: usize,
    pub nvars: usize,
    pub primary_degrees: &'a [u32],
    pub threads: usize,
    pub elapsed: Duration,
    pub variable_names: &'a [String],
    /// Include full polynomial text in the output.
    pub include_polynomials: bool,
}

impl RunReport<'_> {
    pub fn write_text(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let r = self.result;
        writeln!(
            out,
            "group order {}, {} variables, primary degrees {:?}, algorithm {}",
            self.group_order, self.nvars, self.primary_degrees, self.algorithm
        )?;
        writeln!(out, "{:>6} {:>8} {:>12} {:>12}", "degree", "m_d", "secondaries", "irreducible")?;
        for (d, target, total, irr) in r.per_degree_counts() {
            writeln!(out, "{d:>6} {target:>8} {total:>12} {irr:>12}")?;
        }
        writeln!(
            out,
            "total: {} secondary invariants (max degree {}), {} irreducible (max degree {})",
            r.total_secondaries(),
            r.max_secondary_degree(),
            r.total_irreducibles(),
            r.max_irreducible_degree()
        )?;
        let c = &r.counters;
        writeln!(
            out,
            "work: {} reductions ({} steps), {} candidates generated, {} accepted, \
             {} full basis recomputations, final basis size {}",
            c.reductions,
            c.reduction_steps,
            c.candidates_generated,
            c.candidates_accepted,
            c.full_gb_recomputations,
            c.basis_size
        )?;
        writeln!(out, "elapsed: {:.3}s", self.elapsed.as_secs_f64())?;
        if self.include_polynomials {
            for level in &r.levels {
                for (i, s) in level.invariants.iter().enumerate() {
                    let tag = if s.irreducible { "irreducible" } else { "reducible" };
                    writeln!(
                        out,
                        "S[{}][{}] ({}, {}): {}",
                        level.degree,
                        i,
                        tag,
                        provenance_name(s.provenance),
                        s.poly.display(self.variable_names)
                    )?;
                }
            }
        }
        Ok(())
    }

    pub fn write_json_lines(&self, out: &mut dyn Write) -> Result<()> {
        let meta = MetaRecord {
            record: "meta",
            schema: SCHEMA_VERSION,
            algorithm: self.algorithm,
            group_order: self.group_order,
            nvars: self.nvars,
            primary_degrees: self.primary_degrees,
            threads: self.threads,
        };
        write_record(out, &meta)?;
        let r = self.result;
        for (degree, expected, secondaries, irreducibles) in r.per_degree_counts() {
            write_record(
                out,
                &DegreeRecord {
                    record: "degree",
                    degree,
                    expected,
                    secondaries,
                    irreducibles,
                },
            )?;
        }
        let mut label = 0usize;
        for level in &r.levels {
            for s in &level.invariants {
                write_record(
                    out,
                    &InvariantRecord {
                        record: "invariant",
                        degree: level.degree,
                        label,
                        irreducible: s.irreducible,
                        provenance: provenance_name(s.provenance),
                        factors: s.factors.clone(),
                        poly: self
                            .include_polynomials
                            .then(|| format!("{}", s.poly.display(self.variable_names))),
                    },
                )?;
                label += 1;
            }
        }
        let c = &r.counters;
        write_record(
            out,
            &TotalsRecord {
                record: "totals",
                secondaries: r.total_secondaries(),
                irreducibles: r.total_irreducibles(),
                max_secondary_degree: r.max_secondary_degree(),
                max_irreducible_degree: r.max_irreducible_degree(),
                reductions: c.reductions,
                reduction_steps: c.reduction_steps,
                candidates_generated: c.candidates_generated,
                candidates_accepted: c.candidates_accepted,
                full_gb_recomputations: c.full_gb_recomputations,
                basis_size: c.basis_size,
                elapsed_ms: self.elapsed.as_millis(),
            },
        )?;
        Ok(())
    }
}

fn write_record<T: Serialize>(out: &mut dyn Write, record: &T) -> Result<()> {
    let line = serde_json::to_string(record)
        .map_err(|e| crate::error::Error::Problem(format!("serialization failed: {e}")))?;
    writeln!(out, "{line}")
        .map_err(|e| crate::error::Error::Problem(format!("write failed: {e}")))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{validate_primaries, GroupRepresentation, QMatrix};
    use crate::monomial::MonomialOrder;
    use crate::parser::parse_polynomial;
    use crate::secondary::{compute_secondaries, SecondaryOptions};

    #[test]
    fn json_lines_roundtrip() {
        let names: Vec<String> = vec!["x".into(), "y".into()];
        let order = MonomialOrder::DegRevLex;
        let group =
            GroupRepresentation::close(vec![QMatrix::from_column_units(&[2, 1])]).unwrap();
        let primaries = vec![
            parse_polynomial("x + y", &names, order).unwrap(),
            parse_polynomial("x * y", &names, order).unwrap(),
        ];
        let system = validate_primaries(&primaries, &group).unwrap();
        let result =
            compute_secondaries(&system, &group, SecondaryOptions::default()).unwrap();
        let report = RunReport {
            result: &result,
            algorithm: "improved",
            group_order: group.order(),
            nvars: 2,
            primary_degrees: &[1, 2],
            threads: 1,
            elapsed: Duration::from_millis(5),
            variable_names: &names,
            include_polynomials: true,
        };
        let mut buf = Vec::new();
        report.write_json_lines(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut kinds = Vec::new();
        for line in text.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            kinds.push(v["record"].as_str().unwrap().to_string());
        }
        assert_eq!(kinds.first().map(String::as_str), Some("meta"));
        assert_eq!(kinds.last().map(String::as_str), Some("totals"));
        assert!(kinds.iter().any(|k| k == "invariant"));

        let mut buf = Vec::new();
        report.write_text(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("total: 1 secondary invariants"));
    }
}
