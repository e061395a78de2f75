//! `-2` root classes and `-1` exceptional classes of `CP² # k(-CP²)`.
//!
//! A class `dH - Σ a_i E_i` is a root when `K·A = 0` and `A·A = -2`, i.e.
//! `Σ a_i = 3d` and `Σ a_i² = d² + 2`; it is exceptional when `K·A = A·A = -1`,
//! i.e. `Σ a_i = 3d - 1` and `Σ a_i² = d² + 1`. Cauchy–Schwarz
//! (`(Σ a_i)² ≤ k Σ a_i²`) bounds `d` for `k ≤ 8`, so both searches are finite
//! and exhaustive.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::dynkin::{dynkin_classify, DynkinType};
use crate::error::{Error, Result};
use crate::lattice::{rat, BasisTag, FormClass, HomologyClass};
use crate::reduction::is_reduced;

pub const MAX_K: usize = 8;

/// Letters of the simple roots in their canonical order.
pub const EDGE_LETTERS: [char; 8] = ['O', 'A', 'B', 'C', 'D', 'E', 'F', 'G'];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSet {
    pub k: usize,
    pub roots: Vec<HomologyClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionalSet {
    pub k: usize,
    pub classes: Vec<HomologyClass>,
}

/// Positive roots of a form, split by area.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSplit {
    pub lagrangian: Vec<HomologyClass>,
    pub symplectic: Vec<HomologyClass>,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "NL")]
    pub n_l: usize,
}

fn check_k(k: usize) -> Result<()> {
    if k > MAX_K {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            range: "0..=8",
        });
    }
    Ok(())
}

pub fn enumerate_roots(k: usize) -> Result<RootSet> {
    check_k(k)?;
    Ok(RootSet {
        k,
        roots: solve(k, 0, 2),
    })
}

pub fn enumerate_exceptional(k: usize) -> Result<ExceptionalSet> {
    check_k(k)?;
    Ok(ExceptionalSet {
        k,
        classes: solve(k, 1, 1),
    })
}

/// All `dH - Σ a_i E_i` with `Σ a_i = 3d - t` and `Σ a_i² = d² + s`, sorted.
fn solve(k: usize, t: i64, s: i64) -> Vec<HomologyClass> {
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    // (3d - t)² ≤ k (d² + s) fails for |d| > 8 whenever k ≤ 8, s ≤ 2, t ≤ 1.
    for d in -8i64..=8 {
        let sum = 3 * d - t;
        let sq = d * d + s;
        if sum * sum > k as i64 * sq {
            continue;
        }
        let mut a = Vec::with_capacity(k);
        fill(k, sum, sq, &mut a, &mut |a| out.push(HomologyClass::h_class(d, a)));
    }
    out.sort();
    out
}

fn fill(k: usize, sum: i64, sq: i64, a: &mut Vec<i64>, emit: &mut impl FnMut(&[i64])) {
    let left = k - a.len();
    if left == 0 {
        if sum == 0 && sq == 0 {
            emit(a);
        }
        return;
    }
    if sq < 0 || sum * sum > left as i64 * sq {
        return;
    }
    let m = (sq as f64).sqrt() as i64 + 1;
    for x in -m..=m {
        if x * x > sq {
            continue;
        }
        a.push(x);
        fill(k, sum - x, sq - x * x, a, emit);
        a.pop();
    }
}

/// The canonical simple system with its edge letters: `O = H - E1 - E2 - E3`
/// (for `k ≥ 3`), then `A = E1 - E2`, `B = E2 - E3`, …. On `S² × S²` the only
/// simple root is `B - F`.
#[allow(clippy::needless_range_loop)]
pub fn simple_roots(basis: BasisTag) -> Vec<(char, HomologyClass)> {
    match basis {
        BasisTag::BF(0) => vec![('A', HomologyClass::bf_class(1, -1, &[]))],
        BasisTag::BF(_) => Vec::new(),
        BasisTag::H(k) => {
            let mut out = Vec::new();
            if k >= 3 {
                let mut a = vec![0; k];
                a[..3].fill(1);
                out.push(('O', HomologyClass::h_class(1, &a)));
            }
            for i in 1..k {
                let r = &HomologyClass::exceptional(basis, i)
                    - &HomologyClass::exceptional(basis, i + 1);
                out.push((EDGE_LETTERS[i], r));
            }
            out
        }
    }
}

/// A fixed form in the open reduced chamber, `(1 | c_i = 1/4 - i/1000)`, used to
/// decide which roots are positive. On `S² × S²` it is `(2, 1 |)`.
pub fn reference_form(basis: BasisTag) -> FormClass {
    match basis {
        BasisTag::BF(0) => FormClass::bf_form(rat(2, 1), rat(1, 1), vec![]),
        BasisTag::BF(n) => reference_form(BasisTag::H(n + 1))
            .to_basis(basis)
            .expect("partner basis"),
        BasisTag::H(k) => FormClass::h_form(
            rat(1, 1),
            (1..=k as i64).map(|i| rat(250 - i, 1000)).collect(),
        ),
    }
}

/// Roots of the manifold described by `basis`, in that basis.
fn all_roots(basis: BasisTag) -> Result<Vec<HomologyClass>> {
    match basis {
        BasisTag::H(k) => Ok(enumerate_roots(k)?.roots),
        BasisTag::BF(0) => {
            let r = HomologyClass::bf_class(1, -1, &[]);
            Ok(vec![-&r, r])
        }
        BasisTag::BF(n) => {
            let mut v = enumerate_roots(n + 1)?
                .roots
                .iter()
                .map(|r| r.to_basis(basis))
                .collect::<Result<Vec<_>>>()?;
            v.sort();
            Ok(v)
        }
    }
}

/// Roots with positive area against [`reference_form`].
pub fn positive_roots(basis: BasisTag) -> Result<Vec<HomologyClass>> {
    let reference = reference_form(basis);
    Ok(all_roots(basis)?
        .into_iter()
        .filter(|r| reference.area_unchecked(r).is_positive())
        .collect())
}

/// Accepts reduced forms in either basis; `BFBasis(n ≥ 1)` input is converted
/// to `HBasis(n + 1)` and the returned roots are in that basis.
fn h_picture(w: &FormClass) -> Result<FormClass> {
    match w.basis() {
        BasisTag::BF(n) if n >= 1 => w.to_basis(BasisTag::H(n + 1)),
        _ => Ok(w.clone()),
    }
}

fn require_reduced(w: &FormClass) -> Result<()> {
    check_k(w.k())?;
    if !is_reduced(w) {
        return Err(Error::NotReduced(w.to_string()));
    }
    Ok(())
}

pub fn positive_split(w: &FormClass) -> Result<RootSplit> {
    require_reduced(w)?;
    let w = h_picture(w)?;
    let mut lagrangian = Vec::new();
    let mut symplectic = Vec::new();
    for r in positive_roots(w.basis())? {
        let a = w.area_unchecked(&r);
        if a.is_zero() {
            lagrangian.push(r);
        } else if a.is_positive() {
            symplectic.push(r);
        } else {
            return Err(Error::NotReduced(format!(
                "{w}: positive root {r} has negative area"
            )));
        }
    }
    Ok(RootSplit {
        n: symplectic.len(),
        n_l: lagrangian.len(),
        lagrangian,
        symplectic,
    })
}

/// Zero-area members of the canonical simple system.
pub fn lagrangian_simple_roots(w: &FormClass) -> Result<Vec<(char, HomologyClass)>> {
    require_reduced(w)?;
    let w = h_picture(w)?;
    Ok(simple_roots(w.basis())
        .into_iter()
        .filter(|(_, r)| w.area_unchecked(r).is_zero())
        .collect())
}

/// Dynkin type `Γ_L` of the zero-area roots.
pub fn lagrangian_system(w: &FormClass) -> Result<DynkinType> {
    let simple: Vec<HomologyClass> = lagrangian_simple_roots(w)?
        .into_iter()
        .map(|(_, r)| r)
        .collect();
    let t = dynkin_classify(&simple)?;
    let split = positive_split(w)?;
    assert_eq!(
        t.positive_root_count() as usize,
        split.n_l,
        "simple-root closure of {t} disagrees with the zero-area roots of {w}"
    );
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{canonical_class, parse_class, virtual_genus};

    fn form(s: &str) -> FormClass {
        s.parse().unwrap()
    }

    #[test]
    fn small_root_sets() {
        assert!(enumerate_roots(1).unwrap().roots.is_empty());
        let r3 = enumerate_roots(3).unwrap().roots;
        let b = BasisTag::H(3);
        let mut expected: Vec<HomologyClass> = [
            "E1 - E2",
            "E2 - E3",
            "E1 - E3",
            "H - E1 - E2 - E3",
        ]
        .iter()
        .flat_map(|s| {
            let c = parse_class(s, b).unwrap();
            [-&c, c]
        })
        .collect();
        expected.sort();
        assert_eq!(r3, expected);
        assert!(matches!(enumerate_roots(9), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn small_exceptional_sets() {
        let e1 = enumerate_exceptional(1).unwrap().classes;
        assert_eq!(e1, vec![HomologyClass::exceptional(BasisTag::H(1), 1)]);
        let e2: Vec<String> = enumerate_exceptional(2)
            .unwrap()
            .classes
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(e2.len(), 3);
        for s in ["E1", "E2", "H - E1 - E2"] {
            assert!(e2.contains(&s.to_string()), "{s} missing from {e2:?}");
        }
        let e5 = enumerate_exceptional(5).unwrap().classes;
        assert_eq!(e5.len(), 16);
        assert!(e5.contains(&HomologyClass::h_class(2, &[1; 5])));
    }

    #[test]
    fn counts_and_adjunction() {
        let roots: Vec<usize> = (1..=8).map(|k| enumerate_roots(k).unwrap().roots.len()).collect();
        assert_eq!(roots, vec![0, 2, 8, 20, 40, 72, 126, 240]);
        let exc: Vec<usize> = (1..=8)
            .map(|k| enumerate_exceptional(k).unwrap().classes.len())
            .collect();
        assert_eq!(exc, vec![1, 3, 6, 10, 16, 27, 56, 240]);
        for k in 1..=8 {
            let kc = canonical_class(BasisTag::H(k));
            for r in enumerate_roots(k).unwrap().roots {
                assert_eq!((r.pairing(&kc).unwrap(), r.square(), virtual_genus(&r)), (0, -2, 0));
            }
            for e in enumerate_exceptional(k).unwrap().classes {
                assert_eq!((e.pairing(&kc).unwrap(), e.square(), virtual_genus(&e)), (-1, -1, 0));
            }
        }
    }

    #[test]
    fn positive_roots_are_half() {
        for k in 2..=8 {
            let b = BasisTag::H(k);
            let pos = positive_roots(b).unwrap();
            assert_eq!(pos.len() * 2, enumerate_roots(k).unwrap().roots.len());
            for (_, s) in simple_roots(b) {
                assert!(pos.contains(&s));
            }
        }
        assert_eq!(positive_roots(BasisTag::BF(4)).unwrap().len(), 20);
    }

    #[test]
    fn split_examples() {
        let m5 = form("(1 | 1/3, 1/3, 1/3, 1/3, 1/3)");
        let s = positive_split(&m5).unwrap();
        assert_eq!((s.n, s.n_l), (0, 20));
        let mo = form("(1 | 1/4, 1/4, 1/4, 1/4, 1/4)");
        let s = positive_split(&mo).unwrap();
        assert_eq!((s.n, s.n_l), (10, 10));
        let open3 = form("(1 | 1/2, 1/4, 1/8)");
        let s = positive_split(&open3).unwrap();
        assert_eq!((s.n, s.n_l), (4, 0));
        assert!(matches!(
            positive_split(&form("(1 | 1/4, 1/3)")),
            Err(Error::NotReduced(_))
        ));
    }

    #[test]
    fn lagrangian_system_examples() {
        use crate::dynkin::DynkinComponent::*;
        let m5 = form("(1 | 1/3, 1/3, 1/3, 1/3, 1/3)");
        assert_eq!(lagrangian_system(&m5).unwrap(), DynkinType::new([D(5)]));
        let ma = form("(1 | 2/5, 3/10, 3/10, 3/10, 3/10)");
        assert_eq!(lagrangian_system(&ma).unwrap(), DynkinType::new([D(4)]));
        let mb = form("(1 | 3/8, 3/8, 1/4, 1/4)");
        assert_eq!(lagrangian_system(&mb).unwrap(), DynkinType::new([A(1), A(2)]));
    }

    #[test]
    fn bf_forms_are_accepted() {
        let w = form("(1 | 1/3, 1/3, 1/3)").to_basis(BasisTag::BF(2)).unwrap();
        let s = positive_split(&w).unwrap();
        assert_eq!((s.n, s.n_l), (0, 4));
        let square = form("(1, 1 |)");
        assert_eq!(positive_split(&square).unwrap().n_l, 1);
        let rect = form("(3/2, 1 |)");
        assert_eq!(positive_split(&rect).unwrap().n, 1);
    }
}
