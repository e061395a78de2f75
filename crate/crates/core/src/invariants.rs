//! Symplectomorphism-group invariants assembled from the face of a form.
//!
//! * `k ≤ 4`: the Torelli part is trivial, `π₀ = W(Γ_L)` and
//!   `rank π₁ = N + r_mon(k)` with `r_mon = 1, 2, 2, 0` for `k = 1, 2, 3, 4`.
//! * `k = 5`: `N = 0` gives Torelli part `PB₅(S²)/Z₂` and `rank π₁ = 0`;
//!   `N = 8` gives `PB₄(S²)/Z₂` and `5 ≤ rank π₁ ≤ 9`; `N > 8` gives a trivial
//!   Torelli part and `rank π₁ = N - 5` once the form is equivalent to one with
//!   all `c_i < 1/2`.
//! * `S² × S²`: `π₁ = Z₂ ⊕ Z₂` for the monotone form and `Z ⊕ Z₂ ⊕ Z₂` otherwise.
//!
//! `Q = PR[Γ_L] + rank π₁ - rank Ab(Torelli)`.

use num_traits::Signed;
use serde::{Serialize, Serializer};

use crate::cone::{enumerate_faces, identify_face, FaceDescriptor};
use crate::dynkin::DynkinType;
use crate::error::{Error, Result};
use crate::lattice::{rat, BasisTag, FormClass};
use crate::packing::cremona_to_packing_form;
use crate::published::{published_q, published_row, PublishedRow};
use crate::reduction::{is_balanced, reduce_to_fundamental_domain};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Torelli {
    Trivial,
    Pb4ModCenter,
    Pb5ModCenter,
    Unknown,
}

impl Torelli {
    pub fn name(self) -> &'static str {
        match self {
            Torelli::Trivial => "trivial",
            Torelli::Pb4ModCenter => "PB4_mod_center",
            Torelli::Pb5ModCenter => "PB5_mod_center",
            Torelli::Unknown => "unknown",
        }
    }

    /// Free rank of the abelianization, when known.
    fn abelian_rank(self) -> Option<i64> {
        match self {
            Torelli::Trivial => Some(0),
            Torelli::Pb5ModCenter => Some(5),
            Torelli::Pb4ModCenter | Torelli::Unknown => None,
        }
    }
}

impl Serialize for Torelli {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pi0Description {
    pub torelli: Torelli,
    /// `Γ_L`, whose Weyl group is the homological image.
    pub weyl: DynkinType,
    #[serde(rename = "weylOrder", serialize_with = "as_string")]
    pub weyl_order: u128,
    pub note: String,
}

fn as_string<S: Serializer>(x: &u128, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pi1Rank {
    Exact(i64),
    Interval(i64, i64),
}

impl Pi1Rank {
    pub fn exact(self) -> Option<i64> {
        match self {
            Pi1Rank::Exact(r) => Some(r),
            Pi1Rank::Interval(..) => None,
        }
    }
}

impl std::fmt::Display for Pi1Rank {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Pi1Rank::Exact(r) => write!(f, "{r}"),
            Pi1Rank::Interval(lo, hi) => write!(f, "[{lo},{hi}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pi1 {
    pub kind: &'static str,
    pub lo: i64,
    pub hi: i64,
    /// Orders of the finite cyclic summands, where known.
    pub torsion: Vec<u32>,
    pub note: String,
}

impl Pi1 {
    fn new(rank: Pi1Rank, torsion: Vec<u32>, note: impl Into<String>) -> Self {
        let (kind, lo, hi) = match rank {
            Pi1Rank::Exact(r) => ("exact", r, r),
            Pi1Rank::Interval(lo, hi) => ("interval", lo, hi),
        };
        Self {
            kind,
            lo,
            hi,
            torsion,
            note: note.into(),
        }
    }

    pub fn rank(&self) -> Pi1Rank {
        if self.kind == "exact" {
            Pi1Rank::Exact(self.lo)
        } else {
            Pi1Rank::Interval(self.lo, self.hi)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub code: &'static str,
    pub message: String,
}

fn flag(code: &'static str, message: impl Into<String>) -> Flag {
    Flag {
        code,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SympReport {
    pub input: FormClass,
    pub reduced: FormClass,
    pub face: FaceDescriptor,
    #[serde(rename = "gammaL")]
    pub gamma_l: DynkinType,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "NL")]
    pub n_l: usize,
    pub pi0: Pi0Description,
    pub pi1: Pi1,
    #[serde(rename = "Q")]
    pub q: Option<i64>,
    pub flags: Vec<Flag>,
}

/// Monotone baseline for `rank π₁` on `CP² # k(-CP²)`.
fn monotone_rank(k: usize) -> i64 {
    match k {
        1 => 1,
        2 | 3 => 2,
        _ => 0,
    }
}

fn reduce_normalized(w: &FormClass) -> Result<FormClass> {
    match w.basis() {
        BasisTag::BF(0) => {
            let (a, b) = (&w.areas()[0], &w.areas()[1]);
            if !a.is_positive() || !b.is_positive() {
                return Err(Error::NotReducible(format!(
                    "{w}: both S² factors need positive area"
                )));
            }
            let (big, small) = if a >= b { (a, b) } else { (b, a) };
            Ok(FormClass::bf_form(big / small, rat(1, 1), vec![]))
        }
        _ => Ok(reduce_to_fundamental_domain(w)?.0.normalized()?),
    }
}

fn check_range(w: &FormClass) -> Result<()> {
    let ok = match w.basis() {
        BasisTag::H(k) => (1..=5).contains(&k),
        BasisTag::BF(n) => n <= 4,
    };
    if !ok {
        return Err(Error::OutOfRange {
            what: "k",
            value: w.k() as i64,
            range: "1..=5",
        });
    }
    Ok(())
}

pub fn analyze(w: &FormClass) -> Result<SympReport> {
    check_range(w)?;
    let reduced = reduce_normalized(w)?;
    let face = identify_face(&reduced)?;
    let gamma_l = face.gamma_l.clone();
    let (n, n_l) = (face.n, face.n_l);
    let mut flags = Vec::new();

    let (torelli, pi1) = if reduced.basis() == BasisTag::BF(0) {
        let rank = if n == 0 { 0 } else { 1 };
        (
            Torelli::Trivial,
            Pi1::new(Pi1Rank::Exact(rank), vec![2, 2], "S² × S²: Z^N ⊕ Z₂ ⊕ Z₂"),
        )
    } else {
        let k = reduced.k();
        if k <= 4 {
            let rank = n as i64 + monotone_rank(k);
            (
                Torelli::Trivial,
                Pi1::new(Pi1Rank::Exact(rank), vec![], format!("N + {}", monotone_rank(k))),
            )
        } else {
            match n {
                0 => (
                    Torelli::Pb5ModCenter,
                    Pi1::new(Pi1Rank::Exact(0), vec![], "monotone"),
                ),
                8 => {
                    flags.push(flag(
                        "pi1-interval",
                        "only 5 ≤ rank π₁ ≤ 9 is known on this face",
                    ));
                    (
                        Torelli::Pb4ModCenter,
                        Pi1::new(Pi1Rank::Interval(5, 9), vec![], "bounds for the N = 8 edge"),
                    )
                }
                _ => {
                    let rank = n as i64 - 5;
                    let note = match small_ball_certificate(&reduced)? {
                        Some(how) => format!("N - 5; {how}"),
                        None => {
                            flags.push(flag(
                                "rank-hypothesis-uncertified",
                                "could not exhibit an equivalent form with all c_i < 1/2",
                            ));
                            "N - 5 (hypothesis not certified)".to_string()
                        }
                    };
                    (Torelli::Trivial, Pi1::new(Pi1Rank::Exact(rank), vec![], note))
                }
            }
        }
    };

    let q = match (pi1.rank().exact(), torelli.abelian_rank()) {
        (Some(r), Some(t)) => Some(gamma_l.positive_root_count() as i64 + r - t),
        _ => None,
    };
    if reduced.basis() == BasisTag::H(5) {
        flags.push(flag(
            "q-conjectural",
            "constancy of Q over all forms on CP² # 5(-CP²) is conjectural",
        ));
    }
    if let Some(printed) = &face.printed_gamma_l {
        flags.push(flag(
            "paper-gammaL",
            format!("published Γ_L {printed} differs from computed {gamma_l}"),
        ));
    }

    let note = match torelli {
        Torelli::Trivial => "π₀ ≅ W(Γ_L)".to_string(),
        t => format!("1 → {} → π₀ → W(Γ_L) → 1", t.name()),
    };
    Ok(SympReport {
        input: w.clone(),
        face,
        pi0: Pi0Description {
            torelli,
            weyl_order: gamma_l.weyl_order(),
            weyl: gamma_l.clone(),
            note,
        },
        gamma_l,
        n,
        n_l,
        pi1,
        q,
        flags,
        reduced,
    })
}

/// Evidence that a reduced `k = 5` form is equivalent to one with every
/// `c_i < 1/2`.
fn small_ball_certificate(w: &FormClass) -> Result<Option<String>> {
    let half = rat(1, 2);
    if w.exceptional_areas().iter().all(|c| *c < half) {
        return Ok(Some("c_i < 1/2".to_string()));
    }
    if !is_balanced(w)? {
        return Ok(None);
    }
    let move_ = cremona_to_packing_form(w)?;
    if move_.all_checks_positive() && move_.sizes.iter().all(|s| *s < half) {
        return Ok(Some(format!("c_i < 1/2 after reflecting in {}", move_.root)));
    }
    Ok(None)
}

pub fn q_invariant(w: &FormClass) -> Result<Option<i64>> {
    Ok(analyze(w)?.q)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub label: String,
    #[serde(rename = "gammaL")]
    pub gamma_l: DynkinType,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "pi1", serialize_with = "rank_string")]
    pub pi1: Pi1Rank,
    #[serde(rename = "Q")]
    pub q: Option<i64>,
    pub conditions: String,
    pub representative: FormClass,
    pub printed: Option<PublishedRow>,
    pub discrepancies: Vec<String>,
}

fn rank_string<S: Serializer>(r: &Pi1Rank, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableDocument {
    pub k: usize,
    pub rows: Vec<TableRow>,
    #[serde(rename = "publishedQ")]
    pub published_q: Option<i64>,
}

pub fn emit_table(k: usize) -> Result<TableDocument> {
    let faces = enumerate_faces(k)?;
    let rows = faces
        .into_iter()
        .map(|face| {
            let report = analyze(&face.representative)?;
            let label = face.label.clone().unwrap_or_default();
            let printed = published_row(k, &label).copied();
            let mut discrepancies = Vec::new();
            if let Some(p) = &printed {
                if let Some(g) = &face.printed_gamma_l {
                    discrepancies.push(format!("Γ_L printed {g}, computed {}", face.gamma_l));
                }
                if p.n != face.n {
                    discrepancies.push(format!("N printed {}, computed {}", p.n, face.n));
                }
                if let (Some(printed_rank), Some(r)) = (p.pi1, report.pi1.rank().exact()) {
                    if printed_rank as i64 != r {
                        discrepancies.push(format!("π₁ rank printed {printed_rank}, derived {r}"));
                    }
                }
            }
            Ok(TableRow {
                label,
                gamma_l: face.gamma_l,
                n: face.n,
                pi1: report.pi1.rank(),
                q: report.q,
                conditions: face.conditions,
                representative: face.representative,
                printed,
                discrepancies,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TableDocument {
        k,
        rows,
        published_q: published_q(k).map(|(q, _)| q),
    })
}
