//! Values printed in the published tables, transcribed verbatim (including
//! entries that disagree with the computed ones).

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PublishedRow {
    pub label: &'static str,
    /// Lagrangian root system as printed.
    #[serde(rename = "gammaL")]
    pub gamma_l: &'static str,
    #[serde(rename = "N")]
    pub n: usize,
    /// Free rank of `π₁(Symp_h)` as printed; absent for `k = 5`.
    pub pi1: Option<u32>,
}

const fn row(label: &'static str, gamma_l: &'static str, n: usize, pi1: Option<u32>) -> PublishedRow {
    PublishedRow {
        label,
        gamma_l,
        n,
        pi1,
    }
}

const K2: &[PublishedRow] = &[row("OB", "A1", 0, Some(2)), row("BOA", "trivial", 1, Some(3))];

const K3: &[PublishedRow] = &[
    row("M", "A1×A2", 0, Some(2)),
    row("MO", "A2", 1, Some(3)),
    row("MA", "A1×A1", 2, Some(4)),
    row("MB", "A1×A1", 2, Some(4)),
    row("MOA", "A1", 3, Some(5)),
    row("MOB", "A1", 3, Some(5)),
    row("MAB", "A1", 3, Some(5)),
    row("MOAB", "trivial", 4, Some(6)),
];

const K4: &[PublishedRow] = &[
    row("M", "A4", 0, Some(0)),
    row("MO", "A3", 4, Some(4)),
    row("MA", "A3", 4, Some(4)),
    row("MB", "A1×A2", 6, Some(6)),
    row("MC", "A1×A2", 6, Some(6)),
    row("MOA", "A2", 7, Some(7)),
    row("MOB", "A1×A1", 8, Some(8)),
    row("MOC", "A2", 7, Some(7)),
    row("MAB", "A2", 7, Some(7)),
    row("MAC", "A1×A1", 8, Some(7)),
    row("MBC", "A1×A1", 8, Some(7)),
    row("MOAB", "A1", 9, Some(8)),
    row("MOAC", "A1", 9, Some(9)),
    row("MOBC", "A1", 9, Some(9)),
    row("MABC", "A1", 9, Some(9)),
    row("MOABC", "trivial", 10, Some(10)),
];

const K5: &[PublishedRow] = &[
    row("M", "D5", 0, None),
    row("MO", "A4", 10, None),
    row("MA", "D4", 8, None),
    row("MB", "A1×A3", 13, None),
    row("MC", "A2×A2", 15, None),
    row("MD", "A4", 10, None),
    row("MOA", "A3", 14, None),
    row("MOB", "A1×A2", 16, None),
    row("MOC", "A1×A2", 16, None),
    row("MOD", "A3", 14, None),
    row("MAB", "A3", 14, None),
    row("MAC", "A1×A1×A1", 17, None),
    row("MAD", "A3", 14, None),
    row("MBC", "A1×A1×A1", 17, None),
    row("MBD", "A1×A2", 16, None),
    row("MCD", "A1×A2", 16, None),
    row("MOAB", "A2", 17, None),
    row("MOAC", "A1×A1", 18, None),
    row("MOAD", "A2", 17, None),
    row("MOBC", "A1×A1", 18, None),
    row("MOBD", "A1×A1", 18, None),
    row("MOCD", "A2", 17, None),
    row("MABC", "A1×A1", 18, None),
    row("MABD", "A2", 17, None),
    row("MACD", "A1×A1", 18, None),
    row("MBCD", "A1×A1", 18, None),
    row("MOABC", "A1", 19, None),
    row("MOABD", "A1", 19, None),
    row("MOACD", "A1", 19, None),
    row("MOBCD", "A1", 19, None),
    row("MABCD", "A1", 19, None),
    row("MOABCD", "trivial", 20, None),
];

pub fn published_table(k: usize) -> Option<&'static [PublishedRow]> {
    match k {
        2 => Some(K2),
        3 => Some(K3),
        4 => Some(K4),
        5 => Some(K5),
        _ => None,
    }
}

pub fn published_row(k: usize, label: &str) -> Option<&'static PublishedRow> {
    published_table(k)?.iter().find(|r| r.label == label)
}

/// The constant `Q` as printed, with `true` when it is only conjectured.
pub fn published_q(k: usize) -> Option<(i64, bool)> {
    match k {
        1 => Some((1, false)),
        2 => Some((3, false)),
        3 => Some((6, false)),
        4 => Some((10, false)),
        5 => Some((15, true)),
        _ => None,
    }
}
