//! Reduced forms and Weyl-chamber descent.
//!
//! A form `(ν | c_1, …, c_k)` is reduced when `ν > c_1 ≥ … ≥ c_k > 0` and
//! `ν ≥ c_1 + c_2 + c_3`. Every class in the symplectic cone with the standard
//! canonical class is carried into this domain by reflections in `-2` classes:
//! transpositions `E_i - E_j` sort the `c_i`, and the Cremona reflection in
//! `H - E_1 - E_2 - E_3` lowers `ν` whenever `c_1 + c_2 + c_3 > ν`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Degeneration, Error, Result};
use crate::lattice::{parse_class, BasisTag, FormClass, HomologyClass, Rational};

/// Descent steps allowed before giving up.
pub const ITERATION_CAP: usize = 1_000_000;

/// Reduced in the sense of the fundamental domain (strict `c_k > 0`).
///
/// `BFBasis(n)` forms are tested against `μ ≥ f > a_1 ≥ … ≥ a_n > 0`,
/// `a_i + a_j ≤ f`, with `f = ω(F)`, which is the same domain after basis change.
pub fn is_reduced(w: &FormClass) -> bool {
    match w.basis() {
        BasisTag::H(k) => is_reduced_h(w, k),
        BasisTag::BF(_) => is_reduced_bf(w),
    }
}

fn is_reduced_h(w: &FormClass, k: usize) -> bool {
    let nu = &w.areas()[0];
    let c = w.exceptional_areas();
    if !nu.is_positive() {
        return false;
    }
    if k == 0 {
        return true;
    }
    if !(c[0] < *nu) || !c[k - 1].is_positive() {
        return false;
    }
    if c.windows(2).any(|p| p[0] < p[1]) {
        return false;
    }
    match k {
        1 => true,
        2 => &c[0] + &c[1] < *nu,
        _ => &c[0] + &c[1] + &c[2] <= *nu,
    }
}

fn is_reduced_bf(w: &FormClass) -> bool {
    let a = w.areas();
    let (mu, f) = (&a[0], &a[1]);
    let e = w.exceptional_areas();
    if !f.is_positive() || mu < f {
        return false;
    }
    if e.is_empty() {
        return true;
    }
    if !(e[0] < *f) || !e[e.len() - 1].is_positive() {
        return false;
    }
    if e.windows(2).any(|p| p[0] < p[1]) {
        return false;
    }
    // a_i + a_j ≤ f for i ≠ j; the largest pair is a_1 + a_2.
    e.len() < 2 || &e[0] + &e[1] <= *f
}

/// Closure of the reduced cone in `HBasis`: `c_k ≥ 0` allowed.
pub fn in_reduced_closure(w: &FormClass) -> bool {
    let BasisTag::H(k) = w.basis() else {
        return false;
    };
    let nu = &w.areas()[0];
    let c = w.exceptional_areas();
    if !nu.is_positive() || c.iter().any(|x| x.is_negative()) {
        return false;
    }
    if c.windows(2).any(|p| p[0] < p[1]) {
        return false;
    }
    match k {
        0 => true,
        1 => c[0] <= *nu,
        2 => &c[0] + &c[1] <= *nu,
        _ => &c[0] + &c[1] + &c[2] <= *nu,
    }
}

fn check_root(root: &HomologyClass) -> Result<()> {
    let sq = root.square();
    if sq != -2 {
        return Err(Error::NotARoot {
            class: root.to_string(),
            square: sq,
        });
    }
    Ok(())
}

/// `x ↦ x + (x·r) r`, the lattice reflection in a `-2` class.
pub fn reflect_class(x: &HomologyClass, root: &HomologyClass) -> Result<HomologyClass> {
    check_root(root)?;
    let t = x.pairing(root)?;
    Ok(x + &(t * root))
}

/// Reflect the Poincaré dual class of a form. In area coordinates the new area
/// of a basis class `b` is the old area of its reflection.
pub fn reflect_form(w: &FormClass, root: &HomologyClass) -> Result<FormClass> {
    check_root(root)?;
    let r_area = w.area(root)?;
    let basis = w.basis();
    let areas = (0..basis.dim())
        .map(|i| {
            let b = HomologyClass::unit(basis, i);
            let t = b.pair_unchecked(root);
            &w.areas()[i] + &r_area * Rational::from_integer(t.into())
        })
        .collect();
    FormClass::new(basis, areas)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionStep {
    /// Reflection in a `-2` class.
    Reflect(HomologyClass),
    /// Swap of `E_i` and `E_j` (1-based), i.e. reflection in `E_i - E_j`.
    Permute(usize, usize),
    /// Total sign flip `w ↦ -w`.
    Negate,
}

impl ReductionStep {
    pub fn apply(&self, w: &FormClass) -> Result<FormClass> {
        match self {
            ReductionStep::Reflect(r) => reflect_form(w, r),
            ReductionStep::Permute(i, j) => {
                let b = w.basis();
                let n = b.exceptional_count();
                if *i == 0 || *j == 0 || *i > n || *j > n || i == j {
                    return Err(Error::InvalidInput(format!("bad permutation {i} {j} for {b}")));
                }
                let r = &HomologyClass::exceptional(b, *i) - &HomologyClass::exceptional(b, *j);
                reflect_form(w, &r)
            }
            ReductionStep::Negate => Ok(w.negated()),
        }
    }
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionStep::Reflect(r) => write!(f, "REFLECT {r}"),
            ReductionStep::Permute(i, j) => write!(f, "PERMUTE {i} {j}"),
            ReductionStep::Negate => f.write_str("NEGATE"),
        }
    }
}

/// The reflections that carry `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub start: FormClass,
    pub end: FormClass,
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    /// Apply every step to `start`.
    pub fn replay(&self) -> Result<FormClass> {
        self.steps.iter().try_fold(self.start.clone(), |w, s| s.apply(&w))
    }

    /// Replay and compare against the recorded end form.
    pub fn verify(&self) -> Result<bool> {
        Ok(self.replay()? == self.end)
    }

    /// Line-oriented log: `START`, one line per step, `END`.
    pub fn to_log(&self) -> String {
        let mut out = format!("START {}\n", self.start);
        for s in &self.steps {
            out.push_str(&s.to_string());
            out.push('\n');
        }
        out.push_str(&format!("END {}\n", self.end));
        out
    }

    pub fn from_log(text: &str) -> Result<Self> {
        let mut start: Option<FormClass> = None;
        let mut end: Option<FormClass> = None;
        let mut steps = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (verb, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            let bad = |m: &str| Error::Parse(format!("line {}: {m}", lineno + 1));
            match verb {
                "START" => start = Some(rest.parse()?),
                "END" => end = Some(rest.parse()?),
                "NEGATE" => steps.push(ReductionStep::Negate),
                "PERMUTE" => {
                    let mut it = rest.split_whitespace().map(|t| t.parse::<usize>());
                    match (it.next(), it.next(), it.next()) {
                        (Some(Ok(i)), Some(Ok(j)), None) => steps.push(ReductionStep::Permute(i, j)),
                        _ => return Err(bad("PERMUTE needs two indices")),
                    }
                }
                "REFLECT" => {
                    let basis = start
                        .as_ref()
                        .ok_or_else(|| bad("REFLECT before START"))?
                        .basis();
                    steps.push(ReductionStep::Reflect(parse_class(rest, basis)?));
                }
                other => return Err(bad(&format!("unknown directive `{other}`"))),
            }
        }
        match (start, end) {
            (Some(start), Some(end)) => Ok(ReductionTrace { start, end, steps }),
            _ => Err(Error::Parse("trace needs START and END lines".into())),
        }
    }
}

/// Carry `w` into the reduced domain.
///
/// `BFBasis(n ≥ 1)` input is first rewritten in `HBasis(n + 1)`. The returned
/// form is not rescaled; call [`FormClass::normalized`] for `ν = 1`.
///
/// Errors: [`Error::Degenerate`] when the descent lands on `c_i = 0` (a
/// blow-down), [`Error::NotReducible`] when the class is outside the cone or the
/// iteration cap is hit.
pub fn reduce_to_fundamental_domain(w: &FormClass) -> Result<(FormClass, ReductionTrace)> {
    let start = w.clone();
    let mut cur = match w.basis() {
        BasisTag::H(_) => w.clone(),
        BasisTag::BF(n) => {
            let target = BasisTag::H(n + 1);
            w.to_basis(target).map_err(|_| Error::WrongBasis {
                expected: "HBasis or BFBasis(n ≥ 1)",
                got: w.basis(),
            })?
        }
    };
    let start_h = cur.clone();
    let k = cur.k();
    let mut steps = Vec::new();

    if !cur.self_pairing().is_positive() {
        return Err(Error::NotReducible(format!("{w} has non-positive square")));
    }
    if cur.areas()[0].is_negative() {
        cur = cur.negated();
        steps.push(ReductionStep::Negate);
    }

    let cremona = (k >= 3).then(|| {
        let mut a = vec![0i64; k];
        a[..3].fill(1);
        HomologyClass::h_class(1, &a)
    });

    let mut iterations = 0usize;
    loop {
        if !cur.areas()[0].is_positive() {
            return Err(Error::NotReducible(format!(
                "H-area became non-positive at {cur}; {w} is not in the symplectic cone"
            )));
        }
        // Stable bubble sort by adjacent transpositions.
        let mut swapped = true;
        while swapped {
            swapped = false;
            for i in 1..k {
                if cur.c(i) < cur.c(i + 1) {
                    let step = ReductionStep::Permute(i, i + 1);
                    cur = step.apply(&cur)?;
                    steps.push(step);
                    swapped = true;
                    iterations += 1;
                    if iterations > ITERATION_CAP {
                        return Err(cap_error(w));
                    }
                }
            }
        }
        let Some(r) = &cremona else { break };
        let lambda = cur.c(1) + cur.c(2) + cur.c(3);
        if lambda <= cur.areas()[0] {
            break;
        }
        cur = reflect_form(&cur, r)?;
        steps.push(ReductionStep::Reflect(r.clone()));
        iterations += 1;
        if iterations > ITERATION_CAP {
            return Err(cap_error(w));
        }
    }

    let trace_start = if start.basis() == cur.basis() { start } else { start_h };
    let trace = ReductionTrace {
        start: trace_start,
        end: cur.clone(),
        steps,
    };

    if k >= 1 {
        let last = cur.c(k);
        if last.is_negative() {
            return Err(Error::NotReducible(format!(
                "E{k} has negative area at {cur}; {w} is not in the cone with the standard canonical class"
            )));
        }
        if last.is_zero() {
            let blown_down = (1..=k).filter(|&i| cur.c(i).is_zero()).collect();
            return Err(Error::Degenerate(Box::new(Degeneration {
                end: cur,
                trace,
                blown_down,
            })));
        }
    }
    if !is_reduced_h(&cur, k) {
        return Err(Error::NotReducible(format!(
            "descent stopped at non-reduced {cur}; {w} is not in the symplectic cone"
        )));
    }
    Ok((cur, trace))
}

fn cap_error(w: &FormClass) -> Error {
    Error::NotReducible(format!("iteration cap {ITERATION_CAP} reached for {w}"))
}

/// For reduced `k = 5` forms: true unless all of `c_1 ≥ c_2 + c_3`,
/// `c_2 ≥ c_3 + c_4` and `c_3 ≥ c_4 + c_5` hold.
pub fn is_balanced(w: &FormClass) -> Result<bool> {
    if w.basis() != BasisTag::H(5) {
        return Err(Error::WrongK {
            expected: 5,
            got: w.k(),
        });
    }
    if !is_reduced(w) {
        return Err(Error::NotReduced(w.to_string()));
    }
    let c = |i| w.c(i);
    let all_hold = *c(1) >= c(2) + c(3) && *c(2) >= c(3) + c(4) && *c(3) >= c(4) + c(5);
    Ok(!all_hold)
}

/// Unit check for `ν = 1` in `HBasis`.
pub(crate) fn require_normalized(w: &FormClass) -> Result<()> {
    if w.reference_area().is_one() {
        Ok(())
    } else {
        Err(Error::NotNormalized(w.to_string()))
    }
}
