//! Faces of the normalized reduced cone `P^k`.
//!
//! For `3 ≤ k ≤ 8` the closure of `P^k` (at `ν = 1`) is the simplex on the
//! monotone point `M` and one vertex per simple root:
//!
//! ```text
//! M = (1/3, …, 1/3)   O = (0, …, 0)   A = (1, 0, …)   B = (1/2, 1/2, 0, …)
//! C = (1/3, 1/3, 1/3, 0, …)   D = (1/3, 1/3, 1/3, 1/3, 0, …)   …
//! ```
//!
//! The vertex for a root is the far end of the edge on which every other
//! simple root has zero area. A face is named `M` followed by the letters of
//! the simple roots with positive area, e.g. `MOA`.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::dynkin::DynkinType;
use crate::error::{Error, Result};
use crate::lattice::{rat, BasisTag, FormClass, HomologyClass, Rational};
use crate::published::published_row;
use crate::reduction::{is_reduced, require_normalized};
use crate::roots::{lagrangian_system, positive_split, simple_roots, EDGE_LETTERS};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceDescriptor {
    pub k: usize,
    /// Letter label for `2 ≤ k ≤ 5`; `None` outside that range.
    pub label: Option<String>,
    #[serde(rename = "strictEdges")]
    pub strict_edges: Vec<HomologyClass>,
    #[serde(rename = "gammaL")]
    pub gamma_l: DynkinType,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "NL")]
    pub n_l: usize,
    pub conditions: String,
    pub representative: FormClass,
    /// `Γ_L` as printed in the published table, when it differs from `gamma_l`.
    #[serde(rename = "printedGammaL", skip_serializing_if = "Option::is_none")]
    pub printed_gamma_l: Option<String>,
}

impl FaceDescriptor {
    pub fn label_or_dash(&self) -> &str {
        self.label.as_deref().unwrap_or("-")
    }
}

/// Work in `HBasis`; `S² × S²` stays in `BFBasis(0)`.
fn h_picture(w: &FormClass) -> Result<FormClass> {
    match w.basis() {
        BasisTag::BF(n) if n >= 1 => w.to_basis(BasisTag::H(n + 1))?.normalized(),
        _ => Ok(w.clone()),
    }
}

pub fn identify_face(w: &FormClass) -> Result<FaceDescriptor> {
    if !is_reduced(w) {
        return Err(Error::NotReduced(w.to_string()));
    }
    require_normalized(w)?;
    let w = h_picture(w)?;
    let k = w.k();
    let simple = simple_roots(w.basis());
    let strict: Vec<(char, HomologyClass)> = simple
        .into_iter()
        .filter(|(_, r)| w.area_unchecked(r).is_positive())
        .collect();
    let label = match (w.basis(), k) {
        (BasisTag::H(_), 2) => Some(if strict.is_empty() { "OB" } else { "BOA" }.to_string()),
        (BasisTag::H(_), 3..=5) => Some(std::iter::once('M').chain(strict.iter().map(|(c, _)| *c)).collect()),
        _ => None,
    };
    let split = positive_split(&w)?;
    let gamma_l = lagrangian_system(&w)?;
    let printed_gamma_l = label
        .as_deref()
        .and_then(|l| published_row(k, l))
        .filter(|row| row.gamma_l.parse::<DynkinType>().ok().as_ref() != Some(&gamma_l))
        .map(|row| row.gamma_l.to_string());
    Ok(FaceDescriptor {
        k,
        label,
        strict_edges: strict.into_iter().map(|(_, r)| r).collect(),
        gamma_l,
        n: split.n,
        n_l: split.n_l,
        conditions: conditions(&w),
        representative: w,
        printed_gamma_l,
    })
}

/// Area conditions in the style `λ<1; c1>c2=c3`, with `λ = c1 + c2 + c3`.
fn conditions(w: &FormClass) -> String {
    if let BasisTag::BF(0) = w.basis() {
        let mu = &w.areas()[0];
        return if mu == w.reference_area() { "μ=1".into() } else { "μ>1".into() };
    }
    let k = w.k();
    let mut out = String::new();
    if k >= 3 {
        let lambda = w.c(1) + w.c(2) + w.c(3);
        out.push_str(if lambda == w.areas()[0] { "λ=1; " } else { "λ<1; " });
    }
    if k >= 1 {
        out.push_str("c1");
        for i in 2..=k {
            out.push(if w.c(i - 1) == w.c(i) { '=' } else { '>' });
            out.push_str(&format!("c{i}"));
        }
    }
    out
}

fn check_table_k(k: usize) -> Result<()> {
    if !(2..=5).contains(&k) {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            range: "2..=5",
        });
    }
    Ok(())
}

/// Vertex of the closed simplex for the simple root with the given letter index
/// (`0 = O`, `1 = A`, …).
pub fn vertex(k: usize, letter: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); k];
    match letter {
        0 => {}
        1 => v[0] = rat(1, 1),
        2 => v[..2].fill(rat(1, 2)),
        j => v[..j].fill(rat(1, 3)),
    }
    v
}

/// Equal-weight barycentre of `M` and the vertices of the given letters. With
/// `M` present every `c_i` stays positive, and the point lies in the relative
/// interior of the face because the closure is a simplex.
pub fn face_representative(k: usize, letters: &[usize]) -> FormClass {
    let mut c = vec![rat(1, 3); k];
    for &l in letters {
        for (x, y) in c.iter_mut().zip(vertex(k, l)) {
            *x += y;
        }
    }
    let w = rat(1, letters.len() as i64 + 1);
    FormClass::h_form(rat(1, 1), c.into_iter().map(|x| x * &w).collect())
}

/// Faces in table order: by number of letters, then by letter order.
pub fn enumerate_faces(k: usize) -> Result<Vec<FaceDescriptor>> {
    check_table_k(k)?;
    if k == 2 {
        return [(rat(1, 4), rat(1, 4)), (rat(1, 2), rat(1, 6))]
            .into_iter()
            .map(|(a, b)| identify_face(&FormClass::h_form(rat(1, 1), vec![a, b])))
            .collect();
    }
    let mut subsets: Vec<Vec<usize>> = (0u32..1 << k)
        .map(|mask| (0..k).filter(|i| mask & (1 << i) != 0).collect())
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets
        .iter()
        .map(|s| identify_face(&face_representative(k, s)))
        .collect()
}

/// Face label for a set of letter indices (`k ≥ 3`).
pub fn label_of(letters: &[usize]) -> String {
    std::iter::once('M')
        .chain(letters.iter().map(|&l| EDGE_LETTERS[l]))
        .collect()
}

/// A set of negative classes pairing each other non-negatively.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibleLabelSet {
    classes: Vec<HomologyClass>,
}

impl AdmissibleLabelSet {
    pub fn new(classes: Vec<HomologyClass>) -> Result<Self> {
        for (i, a) in classes.iter().enumerate() {
            if a.square() >= 0 {
                return Err(Error::NotAdmissible(format!("{a} has square {}", a.square())));
            }
            for b in &classes[i + 1..] {
                if a == b {
                    return Err(Error::NotAdmissible(format!("{a} listed twice")));
                }
                let p = a.pairing(b)?;
                if p < 0 {
                    return Err(Error::NotAdmissible(format!("{a} · {b} = {p}")));
                }
            }
        }
        Ok(Self { classes })
    }

    pub fn classes(&self) -> &[HomologyClass] {
        &self.classes
    }

    pub fn union(&self, other: &AdmissibleLabelSet) -> Result<Self> {
        let mut v = self.classes.clone();
        v.extend(other.classes.iter().cloned());
        Self::new(v)
    }
}

/// `2 Σ (-A_i·A_i - 1)`.
pub fn codim_of_label_set(c: &AdmissibleLabelSet) -> i64 {
    2 * c.classes.iter().map(|a| -a.square() - 1).sum::<i64>()
}
