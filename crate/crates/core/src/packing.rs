//! Ball packings relative to `RP²` and the Cremona moves that prepare a
//! balanced form on `CP² # 5(-CP²)` for them.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{int, rat, BasisTag, FormClass, HomologyClass, Rational};
use crate::reduction::{is_balanced, reflect_class, reflect_form};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PackingSpec {
    #[serde(serialize_with = "crate::lattice::rational_text::vec")]
    sizes: Vec<Rational>,
}

impl PackingSpec {
    pub fn new(sizes: Vec<Rational>) -> Result<Self> {
        if sizes.len() != 5 {
            return Err(Error::InvalidInput(format!(
                "a packing needs 5 sizes, got {}",
                sizes.len()
            )));
        }
        if let Some(bad) = sizes.iter().find(|c| !c.is_positive()) {
            return Err(Error::InvalidInput(format!("packing size {bad} is not positive")));
        }
        Ok(Self { sizes })
    }

    pub fn sizes(&self) -> &[Rational] {
        &self.sizes
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PackingCheck {
    pub class: HomologyClass,
    #[serde(with = "crate::lattice::rational_text")]
    pub slack: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PackingVerdict {
    pub feasible: bool,
    /// Set when the largest size is exactly `1/2`.
    pub boundary: bool,
    /// `[(3/2 - c_1) | 1 - c_1, c_2, c_3, c_4, c_5, 1/2 - c_1]` on `CP² # 6(-CP²)`.
    pub certificate: FormClass,
    pub checks: Vec<PackingCheck>,
    #[serde(with = "crate::lattice::rational_text")]
    pub min_slack: Rational,
}

/// The classes tested against the certificate: `E_i`, `H - E_i - E_j` and
/// `2H - ΣE + E_i` on `CP² # 6(-CP²)`.
fn certificate_classes() -> Vec<HomologyClass> {
    let b = BasisTag::H(6);
    let mut out: Vec<HomologyClass> = (1..=6).map(|i| HomologyClass::exceptional(b, i)).collect();
    for i in 0..6 {
        for j in i + 1..6 {
            let mut a = vec![0; 6];
            a[i] = 1;
            a[j] = 1;
            out.push(HomologyClass::h_class(1, &a));
        }
    }
    for i in 0..6 {
        let mut a = vec![1; 6];
        a[i] = 0;
        out.push(HomologyClass::h_class(2, &a));
    }
    out
}

pub fn relative_packing_feasible(p: &PackingSpec) -> PackingVerdict {
    let mut c = p.sizes.clone();
    c.sort_by(|a, b| b.cmp(a));
    let half = rat(1, 2);
    let sum: Rational = c.iter().fold(Rational::zero(), |a, b| a + b);
    let mut areas = vec![rat(3, 2) - &c[0], int(1) - &c[0]];
    areas.extend(c[1..].iter().cloned());
    areas.push(&half - &c[0]);
    let certificate = FormClass::h_form(areas[0].clone(), areas[1..].to_vec());
    let checks: Vec<PackingCheck> = certificate_classes()
        .into_iter()
        .map(|class| PackingCheck {
            slack: certificate.area_unchecked(&class),
            class,
        })
        .collect();
    let min_slack = checks
        .iter()
        .map(|x| x.slack.clone())
        .min()
        .expect("non-empty checklist");
    let feasible = c[0] <= half && sum < int(2) && !min_slack.is_negative();
    PackingVerdict {
        feasible,
        boundary: c[0] == half,
        certificate,
        checks,
        min_slack,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CremonaPacking {
    pub root: HomologyClass,
    /// The reflected form.
    pub form: FormClass,
    /// Image of `H` in the old basis.
    pub h: HomologyClass,
    /// Images of `E_1, …, E_5` in the old basis.
    pub e: Vec<HomologyClass>,
    /// `h - 2e_i` with its area under the original form.
    pub checks: Vec<PackingCheck>,
    /// `ω(e_i) / ω(h)`.
    #[serde(serialize_with = "crate::lattice::rational_text::vec")]
    pub sizes: Vec<Rational>,
}

impl CremonaPacking {
    pub fn all_checks_positive(&self) -> bool {
        self.checks.iter().all(|c| c.slack.is_positive())
    }
}

/// Reflect a balanced reduced `k = 5` form in the first of `H - E3 - E4 - E5`,
/// `H - E2 - E3 - E4`, `H - E1 - E2 - E3` whose inequality (`c3 < c4 + c5`,
/// `c2 < c3 + c4`, `c1 < c2 + c3`) holds.
pub fn cremona_to_packing_form(w: &FormClass) -> Result<CremonaPacking> {
    if !is_balanced(w)? {
        return Err(Error::NotBalanced(w.to_string()));
    }
    let c = |i| w.c(i).clone();
    let start = if c(3) < c(4) + c(5) {
        3
    } else if c(2) < c(3) + c(4) {
        2
    } else {
        1
    };
    let mut a = vec![0; 5];
    a[start - 1..start + 2].fill(1);
    let root = HomologyClass::h_class(1, &a);
    let b = BasisTag::H(5);
    let h = reflect_class(&HomologyClass::line(b), &root)?;
    let e: Vec<HomologyClass> = (1..=5)
        .map(|i| reflect_class(&HomologyClass::exceptional(b, i), &root))
        .collect::<Result<_>>()?;
    let checks = e
        .iter()
        .map(|ei| {
            let class = &h - &(2 * ei);
            PackingCheck {
                slack: w.area_unchecked(&class),
                class,
            }
        })
        .collect();
    let h_area = w.area_unchecked(&h);
    let sizes = e.iter().map(|ei| w.area_unchecked(ei) / &h_area).collect();
    Ok(CremonaPacking {
        form: reflect_form(w, &root)?,
        root,
        h,
        e,
        checks,
        sizes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(v: &[(i64, i64)]) -> PackingSpec {
        PackingSpec::new(v.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    fn form(s: &str) -> FormClass {
        s.parse().unwrap()
    }

    #[test]
    fn feasibility_examples() {
        let v = relative_packing_feasible(&spec(&[(1, 3); 5]));
        assert!(v.feasible && !v.boundary);
        assert!(v.min_slack.is_positive());
        assert!(!relative_packing_feasible(&spec(&[(1, 2); 5])).feasible);
        let big = spec(&[(3, 5), (1, 10), (1, 10), (1, 10), (1, 10)]);
        assert!(!relative_packing_feasible(&big).feasible);
        let edge = relative_packing_feasible(&spec(&[(1, 2), (1, 10), (1, 10), (1, 10), (1, 10)]));
        assert!(edge.feasible && edge.boundary);
        assert!(PackingSpec::new(vec![rat(1, 2); 4]).is_err());
        assert!(PackingSpec::new(vec![rat(1, 2), rat(0, 1), rat(1, 3), rat(1, 3), rat(1, 3)]).is_err());
    }

    #[test]
    fn sizes_are_sorted_first() {
        let a = relative_packing_feasible(&spec(&[(1, 10), (2, 5), (1, 5), (1, 4), (1, 3)]));
        let b = relative_packing_feasible(&spec(&[(2, 5), (1, 3), (1, 4), (1, 5), (1, 10)]));
        assert_eq!(a, b);
    }

    #[test]
    fn cremona_examples() {
        let m = cremona_to_packing_form(&form("(1 | 1/3, 1/3, 1/3, 1/3, 1/3)")).unwrap();
        assert_eq!(m.root.to_string(), "H - E3 - E4 - E5");
        assert_eq!(m.h.to_string(), "2H - E3 - E4 - E5");
        assert_eq!(m.checks[2].class.to_string(), "-E3 + E4 + E5");
        assert!(m.all_checks_positive());
        assert!(matches!(
            cremona_to_packing_form(&form("(1 | 1/2, 1/4, 1/8, 1/16, 1/32)")),
            Err(Error::NotBalanced(_))
        ));
        let w = cremona_to_packing_form(&form("(1 | 2/5, 3/10, 3/10, 3/10, 3/10)")).unwrap();
        assert_eq!(w.root.to_string(), "H - E3 - E4 - E5");
        let only_first = cremona_to_packing_form(&form("(1 | 1/5, 3/20, 1/10, 1/20, 1/20)")).unwrap();
        assert_eq!(only_first.root.to_string(), "H - E1 - E2 - E3");
    }

    #[test]
    fn basis_map_is_an_isometry() {
        use crate::lattice::canonical_class;
        let m = cremona_to_packing_form(&form("(1 | 1/3, 1/3, 1/3, 1/3, 1/3)")).unwrap();
        let mut images = vec![m.h.clone()];
        images.extend(m.e.iter().cloned());
        let b = BasisTag::H(5);
        for i in 0..6 {
            for j in 0..6 {
                let x = HomologyClass::unit(b, i).pairing(&HomologyClass::unit(b, j)).unwrap();
                assert_eq!(images[i].pairing(&images[j]).unwrap(), x);
            }
        }
        let k = canonical_class(b);
        let k_image = &(-3 * &m.h) + &m.e.iter().fold(HomologyClass::zero(b), |acc, e| &acc + e);
        assert_eq!(k_image, k);
    }
}
