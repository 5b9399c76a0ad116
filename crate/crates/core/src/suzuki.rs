//! Weierstrass semigroups of the Suzuki curve `Y^q + Y = X^q0 (X^q + X)`.
//!
//! At an `F_q`-rational point the semigroup is `<q, q+q0, q+2q0, q+2q0+1>`.
//! At every other point it is generated by the two families `F1` and `F2`
//! below, and minimally by the `nu_{h,k}` / `mu_h` values of
//! [`generator_set`]. Everything here is exact integer arithmetic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::semigroup::{is_representable, NumericalSemigroup};

/// Largest supported `s`; keeps `q^4 + 2g` inside `u64`.
pub const MAX_S: u32 = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("s must be in 1..={MAX_S}, got {0}")]
    SOutOfRange(u32),
    #[error("q must be 2*4^s with 1 <= s <= {MAX_S} (8, 32, 128, ...), got {0}")]
    InvalidQ(u64),
}

/// `q0 = 2^s`, `q = 2 q0^2`, `g = q0 (q - 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SuzukiParams {
    s: u32,
}

impl SuzukiParams {
    pub fn new(s: u32) -> Result<Self, ParamsError> {
        if (1..=MAX_S).contains(&s) {
            Ok(Self { s })
        } else {
            Err(ParamsError::SOutOfRange(s))
        }
    }

    pub fn from_q(q: u64) -> Result<Self, ParamsError> {
        (1..=MAX_S)
            .map(|s| Self { s })
            .find(|p| p.q() == q)
            .ok_or(ParamsError::InvalidQ(q))
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn q0(&self) -> u64 {
        1 << self.s
    }

    pub fn q(&self) -> u64 {
        2 * self.q0() * self.q0()
    }

    pub fn genus(&self) -> u64 {
        self.q0() * (self.q() - 1)
    }
}

/// Admissible index `(h, j, k, l)` of an element of `F1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct F1Index {
    pub h: u64,
    pub j: u64,
    pub k: u64,
    pub l: u64,
}

impl F1Index {
    pub fn is_admissible(&self, p: &SuzukiParams) -> bool {
        let q0 = p.q0();
        self.l <= 1
            && self.k < q0
            && self.j < q0
            && self.h >= m_threshold(p, self.j, self.k, self.l).max(1)
            && self.h <= 2 * q0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorKind {
    /// `h in [1, q0]`, `k in [0, 2h - 2]`.
    Nu { h: u64, k: u64 },
    /// `h in [q0 + 1, 2 q0]`.
    Mu { h: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorLabel {
    pub kind: GeneratorKind,
    pub value: u64,
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GeneratorKind::Nu { h, k } => write!(f, "nu({h},{k})={}", self.value),
            GeneratorKind::Mu { h } => write!(f, "mu({h})={}", self.value),
        }
    }
}

pub fn rational_point_semigroup(p: &SuzukiParams) -> NumericalSemigroup {
    let (q, q0) = (p.q(), p.q0());
    NumericalSemigroup::from_generators(&[q, q + q0, q + 2 * q0, q + 2 * q0 + 1])
        .expect("q and q+q0+... are coprime")
}

/// `ceil(q0/(q0-1) * (j + k + l - (k + l)/q))` with the denominators cleared.
pub fn m_threshold(p: &SuzukiParams, j: u64, k: u64, l: u64) -> u64 {
    let (q, q0) = (p.q(), p.q0());
    let num = q0 * (q * (j + k + l) - (k + l));
    let den = (q0 - 1) * q;
    num.div_ceil(den)
}

/// `n_{h,j,k,l} = hq - (l + 2k) q0 - j`.
pub fn f1_value(p: &SuzukiParams, idx: &F1Index) -> u64 {
    idx.h * p.q() - (idx.l + 2 * idx.k) * p.q0() - idx.j
}

pub fn family_f1(p: &SuzukiParams) -> BTreeMap<F1Index, u64> {
    let q0 = p.q0();
    let mut out = BTreeMap::new();
    for l in 0..=1 {
        for k in 0..q0 {
            for j in 0..q0 {
                let lo = m_threshold(p, j, k, l).max(1);
                for h in lo..=2 * q0 {
                    let idx = F1Index { h, j, k, l };
                    out.insert(idx, f1_value(p, &idx));
                }
            }
        }
    }
    out
}

/// `n_h = hq - (2h - 2q0 - 1) q0 - (q0 - 1)` for `h in [q0 + 1, 2 q0]`, keyed by `h`.
pub fn family_f2(p: &SuzukiParams) -> BTreeMap<u64, u64> {
    let (q, q0) = (p.q(), p.q0());
    (q0 + 1..=2 * q0)
        .map(|h| (h, h * q - (2 * h - 2 * q0 - 1) * q0 - (q0 - 1)))
        .collect()
}

pub fn generator_set(p: &SuzukiParams) -> Vec<GeneratorLabel> {
    let (q, q0) = (p.q(), p.q0());
    let nus = (1..=q0).flat_map(|h| {
        (0..=2 * h - 2).map(move |k| GeneratorLabel {
            kind: GeneratorKind::Nu { h, k },
            value: h * q - k * q0 - (2 * h - k - 2) / 2,
        })
    });
    let mus = (q0 + 1..=2 * q0).map(|h| GeneratorLabel {
        kind: GeneratorKind::Mu { h },
        value: h * q - (2 * (h - q0) - 1) * q0 - (q0 - 1),
    });
    nus.chain(mus).collect()
}

pub fn generator_values(p: &SuzukiParams) -> Vec<u64> {
    let mut v: Vec<u64> = generator_set(p).iter().map(|g| g.value).collect();
    v.sort_unstable();
    v
}

/// Semigroup at any point that is not `F_q`-rational.
pub fn nonrational_point_semigroup(p: &SuzukiParams) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(&generator_values(p))
        .expect("generator set contains q and q+... coprime entries")
}

/// `<F1 u F2>`, the semigroup as produced by the two families directly.
pub fn family_semigroup(p: &SuzukiParams) -> NumericalSemigroup {
    let gens: Vec<u64> = family_f1(p)
        .into_values()
        .chain(family_f2(p).into_values())
        .collect();
    NumericalSemigroup::from_generators(&gens).expect("F1 contains q and q-1")
}

/// `floor((2h - (l + 2k) - 2) / 2) - j`.
pub fn delta(idx: &F1Index) -> i64 {
    let (h, j, k, l) = (idx.h as i64, idx.j as i64, idx.k as i64, idx.l as i64);
    (2 * h - (l + 2 * k) - 2).div_euclid(2) - j
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Observed {
    Count(u64),
    Holds(bool),
}

impl fmt::Display for Observed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Observed::Count(n) => write!(f, "{n}"),
            Observed::Holds(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: &'static str,
    pub description: &'static str,
    pub expected: Observed,
    pub actual: Observed,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub q: u64,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verification for q = {}", self.q)?;
        for c in &self.checks {
            writeln!(
                f,
                "[{}] ({}) {}: expected {}, actual {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.id,
                c.description,
                c.expected,
                c.actual
            )?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

struct ReportBuilder(Vec<CheckResult>);

impl ReportBuilder {
    fn count(&mut self, id: &'static str, description: &'static str, expected: u64, actual: u64) {
        self.0.push(CheckResult {
            id,
            description,
            expected: Observed::Count(expected),
            actual: Observed::Count(actual),
            passed: expected == actual,
        });
    }

    fn holds(&mut self, id: &'static str, description: &'static str, actual: bool) {
        self.0.push(CheckResult {
            id,
            description,
            expected: Observed::Holds(true),
            actual: Observed::Holds(actual),
            passed: actual,
        });
    }
}

/// Checks the counting, structure and minimality statements for one `q` by
/// exhaustive computation.
pub fn verify_structure(p: &SuzukiParams) -> VerificationReport {
    let (q, q0, g) = (p.q(), p.q0(), p.genus());
    let top = 2 * g - 1;
    let f1 = family_f1(p);
    let f2 = family_f2(p);
    let f1_set: BTreeSet<u64> = f1.values().copied().collect();
    let f2_set: BTreeSet<u64> = f2.values().copied().collect();
    let mut r = ReportBuilder(Vec::new());

    // (a) distinct values, and exactly 2 q0^3 of them
    let distinct = if f1_set.len() == f1.len() {
        f1_set.len() as u64
    } else {
        0
    };
    r.count(
        "a",
        "|F1| = 2q0^3 with pairwise distinct values",
        2 * q0.pow(3),
        distinct,
    );

    r.count(
        "b",
        "|F1 n [1, 2g-1]| = 2q0^3 - 2q0 - 1",
        2 * q0.pow(3) - 2 * q0 - 1,
        f1_set.range(1..=top).count() as u64,
    );

    let f2_ok = f2_set.len() == f2.len() && f2_set.iter().all(|&v| v < top);
    r.count(
        "c",
        "|F2| = q0, all values below 2g-1",
        q0,
        if f2_ok {
            f2_set.range(1..=top).count() as u64
        } else {
            0
        },
    );

    r.holds("d", "F1 and F2 are disjoint", f1_set.is_disjoint(&f2_set));

    let families = family_semigroup(p);
    r.holds(
        "e",
        "[2g-q+2, 2g+1] is contained in <F1 u F2>",
        (2 * g - q + 2..=2 * g + 1).all(|x| families.contains(x)),
    );

    let below: BTreeSet<u64> = f1_set
        .iter()
        .chain(f2_set.iter())
        .chain(std::iter::once(&0))
        .copied()
        .filter(|&x| x <= top)
        .collect();
    r.count(
        "f",
        "|(F1 u F2 u {0}) n [0, 2g-1]| = g",
        g,
        below.len() as u64,
    );

    let generated = nonrational_point_semigroup(p);
    let cover = generated.bound().max(families.bound());
    r.holds(
        "g",
        "<G> = <F1 u F2> on the common membership range",
        (0..=cover).all(|x| generated.contains(x) == families.contains(x)),
    );

    let gens = generator_values(p);
    let distinct_gens = gens.windows(2).all(|w| w[0] != w[1]);
    let independent = gens
        .iter()
        .enumerate()
        .filter(|&(i, &gamma)| {
            let rest: Vec<u64> = gens
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, &v)| v)
                .collect();
            !is_representable(gamma, &rest)
        })
        .count() as u64;
    r.count(
        "h",
        "every generator lies outside <G minus itself>",
        q0 * q0 + q0,
        if distinct_gens { independent } else { 0 },
    );

    let rational = rational_point_semigroup(p);
    r.holds(
        "i",
        "rational-point semigroup symmetric, the other one not",
        rational.is_symmetric() == Ok(true) && generated.is_symmetric() == Ok(false),
    );

    VerificationReport { q, checks: r.0 }
}
