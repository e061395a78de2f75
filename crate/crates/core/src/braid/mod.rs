//! Abelian bookkeeping for pure braid groups of the sphere.
//!
//! Generators are the standard `A_ij`, `1 ≤ i < j ≤ n`. For every strand `j`
//! the surface relation `(Π_{i<j} A_ij)(Π_{k>j} A_jk) = 1` holds; in the
//! quotient by the centre the full twist `τ`, whose image is the sum of all
//! generators, is killed as well. Words are handled only through their
//! exponent vectors, which is all the abelianization needs.

mod snf;

pub use snf::{smith_normal_form, SmithForm};

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PureBraidPresentation {
    pub n: usize,
    pub quotient_full_twist: bool,
    /// `(i, j)` with `i < j`, 1-based, in lexicographic order.
    pub generators: Vec<(usize, usize)>,
    /// Relations as words in the generators.
    pub relation_words: Vec<Vec<(usize, usize)>>,
}

pub fn build_presentation(n: usize, quotient_full_twist: bool) -> Result<PureBraidPresentation> {
    if n < 3 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            range: "3..",
        });
    }
    let generators: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut relation_words: Vec<Vec<(usize, usize)>> = (1..=n)
        .map(|j| {
            (1..j)
                .map(|i| (i, j))
                .chain((j + 1..=n).map(|k| (j, k)))
                .collect()
        })
        .collect();
    if quotient_full_twist {
        relation_words.push(generators.clone());
    }
    Ok(PureBraidPresentation {
        n,
        quotient_full_twist,
        generators,
        relation_words,
    })
}

impl PureBraidPresentation {
    pub fn generator_index(&self, g: (usize, usize)) -> Option<usize> {
        self.generators.iter().position(|&h| h == g)
    }

    /// Exponent-sum vector of a word.
    pub fn exponent_vector(&self, word: &[(usize, usize)]) -> Result<Vec<i64>> {
        let mut v = vec![0; self.generators.len()];
        for &g in word {
            let i = self.generator_index(g).ok_or_else(|| {
                Error::InvalidInput(format!("A{}{} is not a generator for n = {}", g.0, g.1, self.n))
            })?;
            v[i] += 1;
        }
        Ok(v)
    }

    pub fn relation_matrix(&self) -> Vec<Vec<i64>> {
        self.relation_words
            .iter()
            .map(|w| self.exponent_vector(w).expect("relations use declared generators"))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Abelianization {
    pub free_rank: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<i128>,
}

impl std::fmt::Display for Abelianization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

fn quotient_of(rows: &[Vec<i64>], cols: usize) -> (Abelianization, SmithForm) {
    let s = smith_normal_form(rows);
    let ab = Abelianization {
        free_rank: cols - s.rank(),
        torsion: s.divisors.iter().copied().filter(|&d| d > 1).collect(),
    };
    (ab, s)
}

pub fn abelianization(p: &PureBraidPresentation) -> Abelianization {
    quotient_of(&p.relation_matrix(), p.generators.len()).0
}

/// Whether the images of `subset` generate the abelianization. This is only a
/// necessary condition for generating the group itself.
pub fn span_check(p: &PureBraidPresentation, subset: &[(usize, usize)]) -> Result<bool> {
    let m = p.generators.len();
    let mut rows = p.relation_matrix();
    for &g in subset {
        let mut e = vec![0; m];
        e[p.generator_index(g).ok_or_else(|| {
            Error::InvalidInput(format!("A{}{} is not a generator for n = {}", g.0, g.1, p.n))
        })?] = 1;
        rows.push(e);
    }
    let (ab, _) = quotient_of(&rows, m);
    Ok(ab.free_rank == 0 && ab.torsion.is_empty())
}

/// Whether a word maps to zero in the abelianization: adding its exponent
/// vector to the relations leaves the relation lattice unchanged.
pub fn word_is_trivial(p: &PureBraidPresentation, word: &[(usize, usize)]) -> Result<bool> {
    let m = p.generators.len();
    let mut rows = p.relation_matrix();
    let (_, before) = quotient_of(&rows, m);
    rows.push(p.exponent_vector(word)?);
    let (_, after) = quotient_of(&rows, m);
    Ok(before.divisors == after.divisors)
}

/// `A_ij` in Artin generators: `σ_{j-1} ⋯ σ_{i+1} σ_i² σ_{i+1}⁻¹ ⋯ σ_{j-1}⁻¹`,
/// written as signed generator indices.
pub fn artin_word(i: usize, j: usize) -> Vec<i64> {
    assert!(i < j, "A_ij needs i < j");
    let mut w: Vec<i64> = (i + 1..j).rev().map(|s| s as i64).collect();
    w.extend([i as i64, i as i64]);
    w.extend((i + 1..j).map(|s| -(s as i64)));
    w
}
