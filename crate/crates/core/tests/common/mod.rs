#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use chamberkit::lattice::rat;
use chamberkit::{FormClass, Rational};
use rand::Rng;

/// Lorentzian pairing `diag(1, -1, …, -1)` on raw coefficient vectors.
pub fn h_pair(a: &[i64], b: &[i64]) -> i64 {
    a[0] * b[0] - a[1..].iter().zip(&b[1..]).map(|(x, y)| x * y).sum::<i64>()
}

/// `x + (x·r) r`, the reflection in a `-2` class.
pub fn h_reflect(x: &[i64], r: &[i64]) -> Vec<i64> {
    let t = h_pair(x, r);
    x.iter().zip(r).map(|(a, b)| a + t * b).collect()
}

/// Order of the group generated by reflections in `simple`, found by a
/// breadth-first search over the images of the standard basis.
pub fn weyl_order_bfs(dim: usize, simple: &[Vec<i64>]) -> usize {
    let identity: Vec<Vec<i64>> = (0..dim)
        .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut seen = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(g) = queue.pop_front() {
        for r in simple {
            let next: Vec<Vec<i64>> = g.iter().map(|v| h_reflect(v, r)).collect();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.len()
}

/// Areas of `w` pulled back along the reflection in `r`; raw `HBasis` vectors.
pub fn reflect_areas(areas: &[Rational], r: &[i64]) -> Vec<Rational> {
    let dim = areas.len();
    let area_of = |v: &[i64]| -> Rational {
        v.iter()
            .zip(areas)
            .map(|(c, a)| a * rat(*c, 1))
            .fold(rat(0, 1), |s, x| s + x)
    };
    (0..dim)
        .map(|i| {
            let mut e = vec![0; dim];
            e[i] = 1;
            area_of(&h_reflect(&e, r))
        })
        .collect()
}

/// Apply `steps` random root reflections (from `roots`) to a form.
pub fn scramble<R: Rng>(w: &FormClass, roots: &[Vec<i64>], steps: usize, rng: &mut R) -> FormClass {
    let mut areas = w.areas().to_vec();
    for _ in 0..steps {
        if roots.is_empty() {
            break;
        }
        let r = &roots[rng.gen_range(0..roots.len())];
        areas = reflect_areas(&areas, r);
    }
    FormClass::new(w.basis(), areas).unwrap()
}

/// Coefficients of `dH + Σ x_i E_i` as `(d, x_1, …)`.
pub fn raw(c: &chamberkit::HomologyClass) -> Vec<i64> {
    c.coeffs().to_vec()
}
