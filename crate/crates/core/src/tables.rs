//! Parameter tables comparing dual one-point codes at a non-rational point
//! (`C1`) against those at an `F_q`-rational point (`C2`).

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::feng_rao::OrderBoundTable;
use crate::suzuki::{nonrational_point_semigroup, rational_point_semigroup, SuzukiParams};

/// One table row. Serializes to exactly `rho_ell, n, dim, d1, d2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CodeRecord {
    #[serde(skip)]
    pub q: u64,
    pub rho_ell: u64,
    pub n: u64,
    pub dim: u64,
    pub d1: u64,
    pub d2: u64,
}

impl CodeRecord {
    /// Index `ell` of `rho_ell`, recovered as `n - dim`.
    pub fn ell(&self) -> u64 {
        self.n - self.dim
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub q: u64,
    pub n: u64,
    /// Last `ell` examined, the larger of the two horizons.
    pub scan_limit: u64,
    pub records: Vec<CodeRecord>,
    /// Indices skipped because the `ell`-th elements of the two semigroups differ.
    pub suppressed: u64,
}

/// `q^4 + 2g`, the length used by the published tables.
pub fn code_length(p: &SuzukiParams) -> u64 {
    p.q().pow(4) + 2 * p.genus()
}

pub fn compare(p: &SuzukiParams) -> Comparison {
    compare_with_length(p, code_length(p))
}

pub fn compare_with_length(p: &SuzukiParams, n: u64) -> Comparison {
    let generic = nonrational_point_semigroup(p);
    let rational = rational_point_semigroup(p);
    let t1 = OrderBoundTable::build(&generic).expect("genus is positive");
    let t2 = OrderBoundTable::build(&rational).expect("genus is positive");
    let scan_limit = t1.horizon().max(t2.horizon());

    let mut records = Vec::new();
    let mut suppressed = 0;
    for ell in 1..=scan_limit {
        let rho = generic.element_at_index(ell);
        if rho != rational.element_at_index(ell) {
            suppressed += 1;
            continue;
        }
        debug_assert_eq!(generic.index_of(rho), rational.index_of(rho));
        let (d1, d2) = (t1.d_ord(ell), t2.d_ord(ell));
        if d1 > d2 {
            records.push(CodeRecord {
                q: p.q(),
                rho_ell: rho,
                n,
                dim: n - ell,
                d1,
                d2,
            });
        }
    }
    records.sort();
    Comparison {
        q: p.q(),
        n,
        scan_limit,
        records,
        suppressed,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown format {0:?}, expected csv, markdown or json")]
pub struct UnknownFormat(pub String);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Markdown,
    Json,
}

impl FromStr for Format {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "markdown" | "md" => Ok(Format::Markdown),
            "json" => Ok(Format::Json),
            other => Err(UnknownFormat(other.to_owned())),
        }
    }
}

pub fn render(records: &[CodeRecord], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("rho_ell,n,dim,d1,d2\n");
            for r in records {
                writeln!(out, "{},{},{},{},{}", r.rho_ell, r.n, r.dim, r.d1, r.d2).unwrap();
            }
        }
        Format::Markdown => {
            out.push_str("| rho_ell | n | n-ell | d(C1) | d(C2) |\n");
            out.push_str("|---|---|---|---|---|\n");
            for r in records {
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} |",
                    r.rho_ell, r.n, r.dim, r.d1, r.d2
                )
                .unwrap();
            }
        }
        Format::Json => {
            out = serde_json::to_string_pretty(records).expect("records serialize");
            out.push('\n');
        }
    }
    out
}

/// Parses a format name and renders in one go.
pub fn render_named(records: &[CodeRecord], format: &str) -> Result<String, UnknownFormat> {
    Ok(render(records, format.parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q8() -> SuzukiParams {
        SuzukiParams::from_q(8).unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(code_length(&q8()), 4124);
        assert_eq!(code_length(&SuzukiParams::from_q(32).unwrap()), 1048824);
        assert_eq!(code_length(&q8()), 4096 + 2 * 14);
    }

    #[test]
    fn table_q8() {
        let c = compare(&q8());
        let rows: Vec<_> = c
            .records
            .iter()
            .map(|r| (r.rho_ell, r.n, r.dim, r.d1, r.d2))
            .collect();
        assert_eq!(
            rows,
            vec![
                (34, 4124, 4103, 10, 8),
                (35, 4124, 4102, 12, 10),
                (36, 4124, 4101, 12, 10)
            ]
        );
        assert_eq!(c.scan_limit, 41);
        assert!(c.suppressed > 0);
    }

    #[test]
    fn length_override() {
        let c = compare_with_length(&q8(), 5888);
        assert_eq!(c.records[0].n, 5888);
        assert_eq!(c.records[0].dim, 5888 - 21);
        assert_eq!(c.records[0].ell(), 21);
    }

    #[test]
    fn render_formats() {
        let recs = compare(&q8()).records;
        assert_eq!(render(&[], Format::Csv), "rho_ell,n,dim,d1,d2\n");
        let csv = render(&recs, Format::Csv);
        assert_eq!(csv.lines().count(), 4);
        assert_eq!(csv.lines().nth(1), Some("34,4124,4103,10,8"));

        let json: serde_json::Value = serde_json::from_str(&render(&recs, Format::Json)).unwrap();
        let arr = json.as_array().unwrap();
        assert_eq!(arr.len(), 3);
        assert_eq!(arr[0].as_object().unwrap().len(), 5);
        assert_eq!(arr[0]["rho_ell"], 34);
        assert_eq!(arr[0]["dim"], 4103);

        let md = render(&recs, Format::Markdown);
        assert_eq!(md.lines().nth(2), Some("| 34 | 4124 | 4103 | 10 | 8 |"));
    }

    #[test]
    fn unknown_format() {
        assert_eq!(
            render_named(&[], "xml"),
            Err(UnknownFormat("xml".to_owned()))
        );
        assert_eq!("md".parse::<Format>(), Ok(Format::Markdown));
    }
}
