//! Random reduced forms for property tests.
//!
//! For `k ≥ 3` a reduced normalized form is a convex combination of the
//! simplex vertices `M, O, A, B, …` with positive weight on `M`. Zeroing some
//! of the other weights lands on walls, which is how `wall_bias` is used.

use rand::Rng;

use crate::cone::vertex;
use crate::lattice::{rat, BasisTag, FormClass, Rational};

const WEIGHT_MAX: i64 = 60;

fn weight<R: Rng + ?Sized>(rng: &mut R, wall_bias: f64) -> i64 {
    if rng.gen_bool(wall_bias) {
        0
    } else {
        rng.gen_range(1..=WEIGHT_MAX)
    }
}

/// A reduced form `(1 | c_1, …, c_k)`, `1 ≤ k ≤ 8`. With `wall_bias = 0` the
/// form is almost surely in the open chamber.
pub fn random_reduced_h<R: Rng + ?Sized>(k: usize, rng: &mut R, wall_bias: f64) -> FormClass {
    assert!((1..=8).contains(&k), "k must be in 1..=8");
    let c: Vec<Rational> = match k {
        1 => vec![rat(rng.gen_range(1..WEIGHT_MAX), WEIGHT_MAX)],
        2 => {
            // Triangle O = (0, 0), A = (1, 0), B = (1/2, 1/2); O and B need
            // positive weight to keep c_1 + c_2 < 1 and c_2 > 0.
            let (o, a, b) = (
                rng.gen_range(1..=WEIGHT_MAX),
                weight(rng, wall_bias),
                rng.gen_range(1..=WEIGHT_MAX),
            );
            let total = o + a + b;
            vec![rat(2 * a + b, 2 * total), rat(b, 2 * total)]
        }
        _ => {
            let m = rng.gen_range(1..=WEIGHT_MAX);
            let mut c = vec![rat(m, 3); k];
            let mut total = m;
            for letter in 0..k {
                let w = weight(rng, wall_bias);
                total += w;
                for (x, y) in c.iter_mut().zip(vertex(k, letter)) {
                    *x += y * rat(w, 1);
                }
            }
            c.into_iter().map(|x| x / rat(total, 1)).collect()
        }
    };
    FormClass::h_form(rat(1, 1), c)
}

/// A reduced form in `BFBasis(n)`, normalized to `ω(F) = 1`, `0 ≤ n ≤ 7`.
pub fn random_reduced_bf<R: Rng + ?Sized>(n: usize, rng: &mut R, wall_bias: f64) -> FormClass {
    if n == 0 {
        let mu = if rng.gen_bool(wall_bias) {
            rat(1, 1)
        } else {
            rat(rng.gen_range(WEIGHT_MAX + 1..=4 * WEIGHT_MAX), WEIGHT_MAX)
        };
        return FormClass::bf_form(mu, rat(1, 1), vec![]);
    }
    random_reduced_h(n + 1, rng, wall_bias)
        .to_basis(BasisTag::BF(n))
        .and_then(|w| w.normalized())
        .expect("partner basis with positive fibre area")
}
