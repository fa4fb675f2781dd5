//! Closed-form dimension values for the generated families, checked
//! against exhaustive search, one table per published result.
//!
//! Every row carries the stated closed-form value next to the computed
//! one. The odd-wheel table's n=5 entry is a known discrepancy in the
//! published closed form: its stated value is 1 while exhaustive search
//! gives 2, so that row is flagged instead of failing.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::families::{ClosingArc, FamilySpec, FanVariant, WheelVariant};
use crate::resolver::{metric_dimension, DimMode};

/// Dimension of the triangle-simple even wheel on rim n.
pub fn wheel_even_dimension(n: usize) -> usize {
    assert!(n >= 4 && n.is_multiple_of(2));
    if n == 4 {
        2
    } else {
        n / 2 - 1
    }
}

/// Stated closed form for odd wheels carrying a triangle-simple spanning
/// fan, reproduced verbatim including its two known defects: the n=5
/// value (stated 1, exhaustively 2) and the centers-in/v1-to-vn case
/// (stated (n-1)/2, but the closing arc out of v1 shortens d(v1,vn) to 1
/// and a basis of size (n-3)/2 exists). Callers flag those cells.
pub fn wheel_odd_stated_dimension(n: usize, variant: FanVariant, closing: ClosingArc) -> usize {
    assert!(n >= 5 && n % 2 == 1);
    if n == 5 {
        return 1;
    }
    match (variant, closing) {
        (FanVariant::CentersOut, _) => (n - 3) / 2,
        (FanVariant::CentersIn, ClosingArc::VnToV1) => (n - 3) / 2,
        (FanVariant::CentersIn, ClosingArc::V1ToVn) => (n - 1) / 2,
    }
}

/// Dimension of the triangle-simple fan with m centers and path length n.
/// The n=5 column grows one step faster than the surrounding cases, and
/// for odd n >= 7 the two spoke schemes differ by one.
pub fn fan_dimension(m: usize, n: usize, variant: FanVariant) -> usize {
    assert!(m >= 1 && n >= 2);
    match (m, n) {
        (1, 2..=4) => 1,
        (_, 2) => m - 1,
        (_, 3..=4) => m,
        (_, 5) => m + 1,
        _ if n.is_multiple_of(2) => n / 2 + m - 2,
        _ => match variant {
            FanVariant::CentersOut => (n - 1) / 2 + m - 2,
            FanVariant::CentersIn => (n - 1) / 2 + m - 1,
        },
    }
}

/// Dimension of a path amalgamation of t strongly oriented cycles.
pub fn amalgamation_dimension(t: usize) -> usize {
    assert!(t >= 2);
    t - 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyTarget {
    T6,
    T7,
    T8,
    T9,
    T10,
    T11,
}

impl fmt::Display for VerifyTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            VerifyTarget::T6 => "T6",
            VerifyTarget::T7 => "T7",
            VerifyTarget::T8 => "T8",
            VerifyTarget::T9 => "T9",
            VerifyTarget::T10 => "T10",
            VerifyTarget::T11 => "T11",
        };
        write!(f, "{name}")
    }
}

impl FromStr for VerifyTarget {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "T6" | "t6" => Ok(VerifyTarget::T6),
            "T7" | "t7" => Ok(VerifyTarget::T7),
            "T8" | "t8" => Ok(VerifyTarget::T8),
            "T9" | "t9" => Ok(VerifyTarget::T9),
            "T10" | "t10" => Ok(VerifyTarget::T10),
            "T11" | "t11" => Ok(VerifyTarget::T11),
            other => Err(format!("unknown table `{other}` (expected T6..T11)")),
        }
    }
}

/// Inclusive integer range written `lo..hi`, or a single value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub lo: usize,
    pub hi: usize,
}

impl Bounds {
    pub fn new(lo: usize, hi: usize) -> Self {
        assert!(lo <= hi, "empty bounds {lo}..{hi}");
        Bounds { lo, hi }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl FromStr for Bounds {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let parse_end = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| format!("`{t}` is not an integer in range `{s}`"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse_end(a)?, parse_end(b)?),
            None => {
                let v = parse_end(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(Bounds { lo, hi })
    }
}

/// Parameter windows for one table run. Only the fields a table consumes
/// matter to it; the rest keep their defaults.
#[derive(Debug, Clone, Copy)]
pub struct TableBounds {
    pub n: Bounds,
    pub m: Bounds,
    pub t: Bounds,
    pub x: Bounds,
    pub len: Bounds,
}

impl TableBounds {
    /// Per-table defaults small enough to run in seconds.
    pub fn defaults(target: VerifyTarget) -> Self {
        let b = |lo, hi| Bounds::new(lo, hi);
        let base = TableBounds {
            n: b(2, 10),
            m: b(1, 4),
            t: b(2, 4),
            x: b(1, 3),
            len: b(3, 6),
        };
        match target {
            VerifyTarget::T6 => TableBounds { n: b(4, 14), ..base },
            VerifyTarget::T7 => TableBounds { n: b(5, 9), ..base },
            VerifyTarget::T8 => base,
            VerifyTarget::T9 => TableBounds { n: b(8, 14), ..base },
            VerifyTarget::T10 => TableBounds { n: b(3, 14), ..base },
            VerifyTarget::T11 => base,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRow {
    pub family: String,
    pub stated: usize,
    pub computed: usize,
    pub matches: bool,
    /// Known-discrepancy marker: a flagged mismatch is reported, not failed.
    pub flagged: bool,
    pub note: String,
}

struct Pending {
    spec: FamilySpec,
    stated: usize,
    mode: DimMode,
    flagged: bool,
    note: String,
}

impl Pending {
    fn plain(spec: FamilySpec, stated: usize) -> Self {
        Pending {
            spec,
            stated,
            mode: DimMode::RequireStrong,
            flagged: false,
            note: String::new(),
        }
    }
}

fn evaluate(p: Pending) -> VerificationRow {
    let inst = p.spec.generate().expect("table parameters are valid");
    let computed = metric_dimension(&inst.digraph, p.mode, false)
        .expect("generated family instances have a defined dimension")
        .dimension;
    VerificationRow {
        family: p.spec.to_string(),
        stated: p.stated,
        computed,
        matches: computed == p.stated,
        flagged: p.flagged,
        note: p.note,
    }
}

/// Builds one verification table; rows are ordered by parameters and the
/// computation is deterministic regardless of the rayon worker count.
pub fn table(target: VerifyTarget, b: &TableBounds) -> Vec<VerificationRow> {
    let mut pending = Vec::new();
    match target {
        VerifyTarget::T6 => {
            for n in b.n.iter().filter(|n| n % 2 == 0 && *n >= 4) {
                for variant in [WheelVariant::A, WheelVariant::B] {
                    pending.push(Pending::plain(
                        FamilySpec::WheelC3Simple { n, variant },
                        wheel_even_dimension(n),
                    ));
                }
            }
        }
        VerifyTarget::T7 => {
            for n in b.n.iter().filter(|n| n % 2 == 1 && *n >= 5) {
                for variant in [FanVariant::CentersOut, FanVariant::CentersIn] {
                    for closing in [ClosingArc::VnToV1, ClosingArc::V1ToVn] {
                        let mut p = Pending::plain(
                            FamilySpec::WheelOdd {
                                n,
                                variant,
                                closing,
                            },
                            wheel_odd_stated_dimension(n, variant, closing),
                        );
                        if n == 5 {
                            p.flagged = true;
                            p.note = "known discrepancy in the published closed form; \
                                      the computed value is authoritative"
                                .to_string();
                        } else if variant == FanVariant::CentersIn && closing == ClosingArc::V1ToVn
                        {
                            p.flagged = true;
                            p.note = "known discrepancy in the published case mapping \
                                      (the closing arc out of v1 admits a smaller basis); \
                                      the computed value is authoritative"
                                .to_string();
                        }
                        pending.push(p);
                    }
                }
            }
        }
        VerifyTarget::T8 => {
            for m in b.m.iter().filter(|&m| m >= 1) {
                for n in b.n.iter().filter(|&n| n >= 2) {
                    for variant in [FanVariant::CentersOut, FanVariant::CentersIn] {
                        pending.push(Pending::plain(
                            FamilySpec::FanC3Simple { m, n, variant },
                            fan_dimension(m, n, variant),
                        ));
                    }
                }
            }
        }
        VerifyTarget::T9 => {
            for n in b.n.iter().filter(|&n| n >= 8) {
                pending.push(Pending::plain(FamilySpec::WheelDim2 { n }, 2));
            }
        }
        VerifyTarget::T10 => {
            for n in b.n.iter().filter(|&n| n >= 3) {
                let mut p = Pending::plain(FamilySpec::FanDim2 { n }, 2);
                p.mode = DimMode::AllowSentinel;
                p.note = "allow-sentinel mode (v1 is a source vertex)".to_string();
                pending.push(p);
            }
        }
        VerifyTarget::T11 => {
            for t in b.t.iter().filter(|&t| t >= 2) {
                for lengths in b.len.iter().combinations_with_replacement(t) {
                    let min = *lengths.iter().min().expect("t >= 2");
                    for x in b.x.iter().filter(|&x| x >= 1 && x < min) {
                        pending.push(Pending::plain(
                            FamilySpec::PathAmal {
                                x,
                                lengths: lengths.clone(),
                            },
                            amalgamation_dimension(t),
                        ));
                    }
                }
            }
        }
    }
    pending.into_par_iter().map(evaluate).collect()
}

pub fn has_unflagged_mismatch(rows: &[VerificationRow]) -> bool {
    rows.iter().any(|r| !r.matches && !r.flagged)
}

/// Fixed-width text table, one line per row.
pub fn render_rows(rows: &[VerificationRow]) -> String {
    use std::fmt::Write;
    let family_width = rows
        .iter()
        .map(|r| r.family.len())
        .chain(["family".len()])
        .max()
        .unwrap_or(6);
    let mut out = String::new();
    writeln!(
        out,
        "{:family_width$}  {:>6}  {:>8}  {:>6}  note",
        "family", "stated", "computed", "result"
    )
    .unwrap();
    for r in rows {
        let result = if r.matches {
            "ok"
        } else if r.flagged {
            "FLAG"
        } else {
            "FAIL"
        };
        let mut line = format!(
            "{:family_width$}  {:>6}  {:>8}  {:>6}",
            r.family, r.stated, r.computed, result
        );
        if !r.note.is_empty() {
            line.push_str("  ");
            line.push_str(&r.note);
        }
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
    out
}
