//! Negative and square-zero sphere classes under a reduced form on
//! `S² × S² # n(-CP²)`, `n ≤ 4`, in the basis `B, F, E1, …, En`.
//!
//! A class `A = pB + qF - Σ r_i E_i` has area `pμ + qf - Σ a_i r_i` (with
//! `μ = ω(B)`, `f = ω(F)`, `a_i = ω(E_i)`) and twice its virtual genus is
//! `2(p-1)(q-1) - Σ r_i(r_i - 1)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{virtual_genus, BasisTag, FormClass, HomologyClass, Rational};
use crate::reduction::is_reduced;
use crate::roots::{enumerate_exceptional, positive_roots};

pub const MAX_N: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConstraintCheck {
    #[serde(with = "crate::lattice::rational_text")]
    pub area: Rational,
    pub area_ok: bool,
    pub adjunction_value: i64,
    pub genus: i64,
}

fn bf_n(w: &FormClass) -> Result<usize> {
    match w.basis() {
        BasisTag::BF(n) => Ok(n),
        got => Err(Error::WrongBasis {
            expected: "BFBasis",
            got,
        }),
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_N {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            range: "0..=4",
        });
    }
    Ok(())
}

/// `(p, q, r)` of a `BFBasis` class.
fn pqr(a: &HomologyClass) -> (i64, i64, Vec<i64>) {
    let c = a.coeffs();
    (c[0], c[1], c[2..].iter().map(|x| -x).collect())
}

fn adjunction_value(p: i64, q: i64, r: &[i64]) -> i64 {
    2 * (p - 1) * (q - 1) - r.iter().map(|x| x * (x - 1)).sum::<i64>()
}

pub fn passes_constraints(a: &HomologyClass, w: &FormClass) -> Result<ConstraintCheck> {
    bf_n(w)?;
    let area = w.area(a)?;
    let (p, q, r) = pqr(a);
    Ok(ConstraintCheck {
        area_ok: area.is_positive(),
        area,
        adjunction_value: adjunction_value(p, q, &r),
        genus: virtual_genus(a),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditReport {
    pub bound: i64,
    /// Classes in the search box.
    pub searched: u64,
    /// Classes with positive area and non-negative adjunction value.
    pub checked: u64,
    pub violations: Vec<HomologyClass>,
    /// `checked` broken down by `p`.
    pub census: BTreeMap<i64, u64>,
    /// Set when the form is not reduced, in which case violations are expected.
    pub precondition_breach: bool,
}

/// Search every `pB + qF - Σ r_i E_i` with `|p|, |q|, |r_i| ≤ bound`, keep those
/// with positive area and `2(p-1)(q-1) - Σ r_i(r_i-1) ≥ 0`, and test `p ≥ 0`,
/// `p = 0 ⇒ q ∈ {0, 1}`, `p = 1 ⇒ r_i ∈ {0, 1}`, `p > 1 ⇒ q ≥ 1`.
pub fn lemma_classes_audit(w: &FormClass, bound: i64) -> Result<AuditReport> {
    let n = bf_n(w)?;
    check_n(n)?;
    if bound < 0 {
        return Err(Error::OutOfRange {
            what: "bound",
            value: bound,
            range: "0..",
        });
    }
    let scaled = integer_areas(w);
    let side = 2 * bound + 1;
    let pairs: Vec<(i64, i64)> = (-bound..=bound)
        .flat_map(|p| (-bound..=bound).map(move |q| (p, q)))
        .collect();
    let parts: Vec<(u64, Vec<Vec<i64>>, i64)> = pairs
        .par_iter()
        .map(|&(p, q)| {
            let budget = 2 * (p - 1) * (q - 1);
            let mut found = Vec::new();
            let mut count = 0u64;
            if budget >= 0 {
                let base = p as i128 * scaled[0] + q as i128 * scaled[1];
                let mut r = Vec::with_capacity(n);
                audit_fill(&scaled[2..], bound, budget, base, &mut r, &mut |r| {
                    count += 1;
                    if !lemma_holds(p, q, r) {
                        let mut v = vec![p, q];
                        v.extend(r);
                        found.push(v);
                    }
                });
            }
            (count, found, p)
        })
        .collect();
    let mut census = BTreeMap::new();
    let mut checked = 0;
    let mut violations = Vec::new();
    for (count, found, p) in parts {
        checked += count;
        if count > 0 {
            *census.entry(p).or_insert(0) += count;
        }
        for v in found {
            let (p, q, r) = (v[0], v[1], &v[2..]);
            violations.push(HomologyClass::bf_class(p, q, r));
        }
    }
    violations.sort();
    Ok(AuditReport {
        bound,
        searched: (side as u64).pow(n as u32 + 2),
        checked,
        violations,
        census,
        precondition_breach: !is_reduced(w),
    })
}

/// Areas scaled to integers by a common denominator.
fn integer_areas(w: &FormClass) -> Vec<i128> {
    let den = w
        .areas()
        .iter()
        .fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
    w.areas()
        .iter()
        .map(|a| {
            (a.numer() * (&den / a.denom()))
                .to_i128()
                .expect("area numerators fit in i128")
        })
        .collect()
}

/// Enumerate `r` with `Σ r_i(r_i - 1) ≤ budget`; emit those with positive area.
fn audit_fill(
    a: &[i128],
    bound: i64,
    budget: i64,
    area: i128,
    r: &mut Vec<i64>,
    emit: &mut impl FnMut(&[i64]),
) {
    let i = r.len();
    if i == a.len() {
        if area > 0 {
            emit(r);
        }
        return;
    }
    for x in -bound..=bound {
        let cost = x * (x - 1);
        if cost > budget {
            continue;
        }
        r.push(x);
        audit_fill(a, bound, budget - cost, area - a[i] * x as i128, r, emit);
        r.pop();
    }
}

fn lemma_holds(p: i64, q: i64, r: &[i64]) -> bool {
    match p {
        p if p < 0 => false,
        0 => q == 0 || q == 1,
        1 => r.iter().all(|&x| x == 0 || x == 1),
        _ => q >= 1,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum FamilyKind {
    /// `B - kF - Σ r_i E_i`, `k ≥ -1`.
    B,
    /// `F - Σ r_i E_i`.
    F,
    /// `E_j - Σ_{i>j} r_i E_i`.
    E,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativeSphereFamily {
    pub family: FamilyKind,
    pub members: Vec<HomologyClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NegativeSpheres {
    pub families: Vec<NegativeSphereFamily>,
    /// Candidates with positive area that fail the genus-0 equality.
    pub higher_genus: Vec<HomologyClass>,
}

impl NegativeSpheres {
    /// All members of square `-2`, sorted.
    pub fn minus_two(&self) -> Vec<HomologyClass> {
        let mut v: Vec<HomologyClass> = self
            .families
            .iter()
            .flat_map(|f| f.members.iter())
            .filter(|c| c.square() == -2)
            .cloned()
            .collect();
        v.sort();
        v
    }
}

fn require_reduced_bf(w: &FormClass) -> Result<usize> {
    let n = bf_n(w)?;
    check_n(n)?;
    if !is_reduced(w) {
        return Err(Error::NotReduced(w.to_string()));
    }
    Ok(n)
}

fn subsets(n: usize, from: usize) -> impl Iterator<Item = Vec<i64>> {
    (0u32..1 << n).filter_map(move |mask| {
        let r: Vec<i64> = (0..n).map(|i| ((mask >> i) & 1) as i64).collect();
        r[..from].iter().all(|&x| x == 0).then_some(r)
    })
}

/// Negative-square classes of the three families with positive area.
pub fn enumerate_negative_spheres(w: &FormClass) -> Result<NegativeSpheres> {
    let n = require_reduced_bf(w)?;
    let mu_floor = (w.areas()[0].clone() / w.reference_area())
        .floor()
        .to_integer()
        .to_i64()
        .unwrap_or(i64::MAX - 8);
    let mut b_family = Vec::new();
    for k in -1..=mu_floor + 4 {
        for r in subsets(n, 0) {
            b_family.push(HomologyClass::bf_class(1, -k, &r));
        }
    }
    let f_family: Vec<HomologyClass> = subsets(n, 0)
        .map(|r| HomologyClass::bf_class(0, 1, &r))
        .collect();
    let mut e_family = Vec::new();
    for j in 1..=n {
        for mut r in subsets(n, j) {
            r[j - 1] = -1;
            e_family.push(HomologyClass::bf_class(0, 0, &r));
        }
    }
    let mut higher_genus = Vec::new();
    let mut families = Vec::new();
    for (family, candidates) in [
        (FamilyKind::B, b_family),
        (FamilyKind::F, f_family),
        (FamilyKind::E, e_family),
    ] {
        let mut members = Vec::new();
        for a in candidates {
            if a.square() >= 0 {
                continue;
            }
            let check = passes_constraints(&a, w)?;
            if !check.area_ok {
                continue;
            }
            if check.adjunction_value == 0 {
                members.push(a);
            } else {
                higher_genus.push(a);
            }
        }
        members.sort();
        families.push(NegativeSphereFamily { family, members });
    }
    Ok(NegativeSpheres {
        families,
        higher_genus,
    })
}

/// Square-zero sphere classes: `B`, `F`, `B + F - E_i - E_j`, and for `n = 4`
/// also `2B + F - ΣE_i` and `B + 2F - ΣE_i`.
pub fn square_zero_spheres(n: usize) -> Result<Vec<HomologyClass>> {
    check_n(n)?;
    let mut out = vec![
        HomologyClass::bf_class(1, 0, &vec![0; n]),
        HomologyClass::bf_class(0, 1, &vec![0; n]),
    ];
    for i in 0..n {
        for j in i + 1..n {
            let mut r = vec![0; n];
            r[i] = 1;
            r[j] = 1;
            out.push(HomologyClass::bf_class(1, 1, &r));
        }
    }
    if n == 4 {
        out.push(HomologyClass::bf_class(2, 1, &[1; 4]));
        out.push(HomologyClass::bf_class(1, 2, &[1; 4]));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MinimalExceptional {
    pub class: HomologyClass,
    #[serde(with = "crate::lattice::rational_text")]
    pub area: Rational,
    /// Whether `E_k` attains the minimum.
    pub last_is_minimal: bool,
}

/// Area-minimal exceptional class of a reduced `HBasis` form; `E_k` is
/// preferred among minimizers.
pub fn min_exceptional_area(w: &FormClass) -> Result<MinimalExceptional> {
    let BasisTag::H(k) = w.basis() else {
        return Err(Error::WrongBasis {
            expected: "HBasis",
            got: w.basis(),
        });
    };
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "k",
            value: 0,
            range: "1..=8",
        });
    }
    if !is_reduced(w) {
        return Err(Error::NotReduced(w.to_string()));
    }
    let classes = enumerate_exceptional(k)?.classes;
    let min = classes
        .iter()
        .map(|c| w.area_unchecked(c))
        .min()
        .expect("E_k is always exceptional");
    let last = HomologyClass::exceptional(w.basis(), k);
    let last_area = w.area_unchecked(&last);
    if last_area == min {
        return Ok(MinimalExceptional {
            class: last,
            area: min,
            last_is_minimal: true,
        });
    }
    let class = classes
        .into_iter()
        .find(|c| w.area_unchecked(c) == min)
        .expect("minimum is attained");
    Ok(MinimalExceptional {
        class,
        area: min,
        last_is_minimal: false,
    })
}

/// The minimal configuration of curves for the open stratum. Accepts
/// `HBasis(2..=5)` and `BFBasis(1..=4)`.
pub fn minimal_open_configuration(basis: BasisTag) -> Result<Vec<HomologyClass>> {
    let h = |d: i64, a: &[i64]| HomologyClass::h_class(d, a);
    let bf = |p: i64, q: i64, r: &[i64]| HomologyClass::bf_class(p, q, r);
    let out = match basis {
        BasisTag::H(2) => vec![h(0, &[-1, 0])],
        BasisTag::H(3) => vec![h(0, &[-1, 0, 0]), h(0, &[0, -1, 0]), h(1, &[0, 1, 1])],
        BasisTag::H(4) => vec![
            h(1, &[1, 1, 0, 0]),
            h(1, &[0, 0, 1, 1]),
            h(0, &[-1, 0, 0, 0]),
            h(0, &[0, 0, -1, 0]),
        ],
        BasisTag::H(5) => vec![
            h(2, &[1; 5]),
            h(0, &[-1, 0, 0, 0, 0]),
            h(0, &[0, -1, 0, 0, 0]),
            h(0, &[0, 0, -1, 0, 0]),
            h(0, &[0, 0, 0, -1, 0]),
        ],
        BasisTag::BF(1) => vec![bf(1, 0, &[1])],
        BasisTag::BF(2) => vec![bf(0, 0, &[-1, 0]), bf(1, 0, &[1, 0]), bf(0, 1, &[1, 0])],
        // The printed list has F - E1 in place of E1, which leaves E1 - E2 and
        // E1 - E3 uncovered; this is the image of the CP² # 4 list.
        BasisTag::BF(3) => vec![
            bf(0, 0, &[-1, 0, 0]),
            bf(0, 0, &[0, -1, 0]),
            bf(1, 0, &[1, 0, 0]),
            bf(1, 1, &[1, 1, 1]),
        ],
        BasisTag::BF(4) => vec![
            bf(1, 1, &[0, 1, 1, 1]),
            bf(1, 0, &[1, 0, 0, 0]),
            bf(0, 1, &[1, 0, 0, 0]),
            bf(0, 0, &[0, -1, 0, 0]),
            bf(0, 0, &[0, 0, -1, 0]),
        ],
        other => {
            return Err(Error::InvalidInput(format!(
                "no minimal configuration listed for {other}; use HBasis(2..=5) or BFBasis(1..=4)"
            )))
        }
    };
    Ok(out)
}

/// Positive roots of `basis` that pair every member of the configuration
/// non-negatively; empty when the configuration has the defining property.
pub fn configuration_gaps(basis: BasisTag) -> Result<Vec<HomologyClass>> {
    let config = minimal_open_configuration(basis)?;
    Ok(positive_roots(basis)?
        .into_iter()
        .filter(|r| config.iter().all(|c| c.pair_unchecked(r) >= 0))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{parse_class, rat};

    fn form(s: &str) -> FormClass {
        s.parse().unwrap()
    }

    fn class(s: &str, n: usize) -> HomologyClass {
        parse_class(s, BasisTag::BF(n)).unwrap()
    }

    #[test]
    fn constraint_examples() {
        let w = form("(1, 1 | 1/8, 1/16)");
        let c = passes_constraints(&class("B - F", 2), &w).unwrap();
        assert_eq!((c.area_ok, c.adjunction_value), (false, 0));
        let w2 = form("(3/2, 1 | 1/8, 1/16)");
        assert!(passes_constraints(&class("B - F", 2), &w2).unwrap().area_ok);
        let f = passes_constraints(&class("F", 2), &w).unwrap();
        assert_eq!((f.area_ok, f.adjunction_value, f.genus), (true, 0, 0));
        let w4 = form("(1, 1 | 1/5, 1/6, 1/7, 1/8)");
        let x = class("B + F - E1 - E2 - E3 - E4", 4);
        let c = passes_constraints(&x, &w4).unwrap();
        assert_eq!((c.adjunction_value, x.square()), (0, -2));
        assert!(matches!(
            passes_constraints(&x, &form("(1 | 1/3)")),
            Err(Error::WrongBasis { .. })
        ));
    }

    #[test]
    fn audit_reduced_forms_is_clean() {
        for s in ["(1, 1 | 1/3, 1/3, 1/3, 1/3)", "(2, 1 | 1/2, 1/4, 1/8, 1/16)", "(3/2, 1 |)"] {
            let r = lemma_classes_audit(&form(s), 6).unwrap();
            assert!(r.violations.is_empty(), "{s}: {:?}", r.violations);
            assert!(r.checked > 0 && !r.precondition_breach);
        }
    }

    #[test]
    fn audit_flags_non_reduced_input() {
        // a_1 + a_2 > μ breaks the reduced condition and lets -B + E1 + E2 through
        let w = form("(1, 1 | 9/10, 9/10)");
        let r = lemma_classes_audit(&w, 3).unwrap();
        assert!(r.precondition_breach);
        assert!(!r.violations.is_empty());
    }

    #[test]
    fn negative_sphere_examples() {
        let w2 = form("(3/2, 1 | 1/3, 1/5)");
        let m2: Vec<String> = enumerate_negative_spheres(&w2)
            .unwrap()
            .minus_two()
            .iter()
            .map(|c| c.to_string())
            .collect();
        for s in ["B - F", "E1 - E2", "B - E1 - E2", "F - E1 - E2"] {
            assert!(m2.contains(&s.to_string()), "{s} not in {m2:?}");
        }
        let w4 = form("(3/2, 1 | 2/5, 1/3, 1/4, 1/5)");
        assert_eq!(enumerate_negative_spheres(&w4).unwrap().minus_two().len(), 20);
        let rect = enumerate_negative_spheres(&form("(3/2, 1 |)")).unwrap();
        assert_eq!(rect.minus_two(), vec![class("B - F", 0)]);
        let square = enumerate_negative_spheres(&form("(1, 1 |)")).unwrap();
        assert!(square.minus_two().is_empty());
        assert!(square.higher_genus.is_empty());
    }

    #[test]
    fn square_zero_lists() {
        let counts: Vec<usize> = (0..=4).map(|n| square_zero_spheres(n).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 2, 3, 5, 10]);
        for n in 0..=4 {
            for c in square_zero_spheres(n).unwrap() {
                assert_eq!((c.square(), virtual_genus(&c)), (0, 0));
            }
        }
        assert!(square_zero_spheres(5).is_err());
    }

    #[test]
    fn min_exceptional_examples() {
        let m = min_exceptional_area(&form("(1 | 1/3, 1/3, 1/3, 1/3, 1/3)")).unwrap();
        assert!(m.last_is_minimal);
        assert_eq!(m.area, rat(1, 3));
        let w = min_exceptional_area(&form("(1 | 1/2, 1/4, 1/8)")).unwrap();
        assert_eq!((w.class.to_string(), w.area), ("E3".to_string(), rat(1, 8)));
        // 49/100 + 48/100 + 47/100 > 1, so this one is outside the domain
        let near = form("(1 | 49/100, 12/25, 47/100, 23/50, 9/20)");
        assert!(matches!(min_exceptional_area(&near), Err(Error::NotReduced(_))));
        let scaled = min_exceptional_area(&form("(1 | 49/150, 8/25, 47/150, 23/75, 3/10)")).unwrap();
        assert_eq!(scaled.class.to_string(), "E5");
    }

    #[test]
    fn configurations_cover_positive_roots() {
        for b in [
            BasisTag::H(2),
            BasisTag::H(3),
            BasisTag::H(4),
            BasisTag::H(5),
            BasisTag::BF(1),
            BasisTag::BF(2),
            BasisTag::BF(3),
            BasisTag::BF(4),
        ] {
            let gaps = configuration_gaps(b).unwrap();
            assert!(gaps.is_empty(), "{b}: {gaps:?}");
        }
        let s = minimal_open_configuration(BasisTag::BF(3)).unwrap();
        let printed: Vec<String> = s.iter().map(|c| c.to_string()).collect();
        assert_eq!(printed, ["E1", "E2", "B - E1", "B + F - E1 - E2 - E3"]);

        let b = BasisTag::BF(3);
        let as_printed: Vec<HomologyClass> = ["F - E1", "E2", "B - E1", "B + F - E1 - E2 - E3"]
            .iter()
            .map(|c| class(c, 3))
            .collect();
        let uncovered: Vec<String> = positive_roots(b)
            .unwrap()
            .into_iter()
            .filter(|r| as_printed.iter().all(|c| c.pair_unchecked(r) >= 0))
            .map(|r| r.to_string())
            .collect();
        assert_eq!(uncovered, ["E1 - E2", "E1 - E3"]);
    }
}
