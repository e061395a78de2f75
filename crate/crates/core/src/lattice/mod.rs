//! Second homology of `CP² # k(-CP²)` with its intersection form.
//!
//! Two bases are supported. `HBasis(k)` is the standard line/exceptional basis
//! `H, E1, …, Ek`; `BFBasis(n)` is the `S² × S² # n(-CP²)` basis
//! `B, F, E1, …, En`. For `k ≥ 2` the two describe the same manifold via
//!
//! ```text
//! B = H - E2,   F = H - E1,   E'1 = H - E1 - E2,   E'i = E(i+1)  (i ≥ 2)
//! ```
//!
//! Classes carry integer coefficients over their basis. Forms carry the exact
//! areas of the basis classes, so `area(w, A)` is a plain dot product.

mod literal;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use literal::{parse_class, parse_rational};

pub type Rational = num_rational::BigRational;

/// Serialize rationals as `p/q` strings.
pub mod rational_text {
    use super::Rational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn vec<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| r.to_string()))
    }
}

/// Build an exact rational from a small numerator/denominator pair.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisTag {
    /// `H, E1, …, Ek` on `CP² # k(-CP²)`.
    H(usize),
    /// `B, F, E1, …, En` on `S² × S² # n(-CP²)`.
    BF(usize),
}

impl BasisTag {
    pub fn dim(self) -> usize {
        match self {
            BasisTag::H(k) => k + 1,
            BasisTag::BF(n) => n + 2,
        }
    }

    /// Number of leading non-exceptional basis vectors.
    fn head(self) -> usize {
        match self {
            BasisTag::H(_) => 1,
            BasisTag::BF(_) => 2,
        }
    }

    /// Number of exceptional basis vectors `E_i`.
    pub fn exceptional_count(self) -> usize {
        self.dim() - self.head()
    }

    /// The partner tag for the same manifold in the other basis, if any.
    pub fn partner(self) -> Option<BasisTag> {
        match self {
            BasisTag::H(k) if k >= 2 => Some(BasisTag::BF(k - 1)),
            BasisTag::BF(n) if n >= 1 => Some(BasisTag::H(n + 1)),
            _ => None,
        }
    }

    pub fn same_manifold(self, other: BasisTag) -> bool {
        self == other || self.partner() == Some(other)
    }

    /// Name of the `i`-th basis vector (0-based).
    pub fn name(self, i: usize) -> String {
        match (self, i) {
            (BasisTag::H(_), 0) => "H".into(),
            (BasisTag::H(_), i) => format!("E{i}"),
            (BasisTag::BF(_), 0) => "B".into(),
            (BasisTag::BF(_), 1) => "F".into(),
            (BasisTag::BF(_), i) => format!("E{}", i - 1),
        }
    }

    /// Entry `(i, j)` of the Gram matrix of the intersection form.
    fn gram(self, i: usize, j: usize) -> i64 {
        match self {
            BasisTag::H(_) => match (i, j) {
                (0, 0) => 1,
                (i, j) if i == j => -1,
                _ => 0,
            },
            BasisTag::BF(_) => match (i, j) {
                (0, 1) | (1, 0) => 1,
                (0, 0) | (1, 1) => 0,
                (i, j) if i == j => -1,
                _ => 0,
            },
        }
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisTag::H(k) => write!(f, "H({k})"),
            BasisTag::BF(n) => write!(f, "BF({n})"),
        }
    }
}

fn check_same(a: BasisTag, b: BasisTag) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::BasisMismatch(a, b))
    }
}

/// An integral class in `H₂`, as coefficients over a tagged basis.
///
/// Ordering is lexicographic on `(basis, coeffs)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomologyClass {
    basis: BasisTag,
    coeffs: Vec<i64>,
}

impl HomologyClass {
    pub fn new(basis: BasisTag, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != basis.dim() {
            return Err(Error::Dimension {
                basis,
                expected: basis.dim(),
                got: coeffs.len(),
            });
        }
        Ok(Self { basis, coeffs })
    }

    pub fn zero(basis: BasisTag) -> Self {
        Self {
            basis,
            coeffs: vec![0; basis.dim()],
        }
    }

    /// The `i`-th basis vector (0-based over the whole basis).
    pub fn unit(basis: BasisTag, i: usize) -> Self {
        let mut c = Self::zero(basis);
        c.coeffs[i] = 1;
        c
    }

    /// `H` in `HBasis(k)`, or `B` in `BFBasis(n)`.
    pub fn line(basis: BasisTag) -> Self {
        Self::unit(basis, 0)
    }

    /// The fibre class `F` of `BFBasis(n)`.
    pub fn fibre(n: usize) -> Self {
        Self::unit(BasisTag::BF(n), 1)
    }

    /// The exceptional class `E_i` (1-based) in either basis.
    pub fn exceptional(basis: BasisTag, i: usize) -> Self {
        assert!(
            (1..=basis.exceptional_count()).contains(&i),
            "E{i} does not exist in {basis}"
        );
        Self::unit(basis, basis.head() + i - 1)
    }

    /// `d H - Σ a_i E_i` in `HBasis(a.len())`.
    pub fn h_class(d: i64, a: &[i64]) -> Self {
        let mut coeffs = Vec::with_capacity(a.len() + 1);
        coeffs.push(d);
        coeffs.extend(a.iter().map(|x| -x));
        Self {
            basis: BasisTag::H(a.len()),
            coeffs,
        }
    }

    /// `p B + q F - Σ r_i E_i` in `BFBasis(r.len())`.
    pub fn bf_class(p: i64, q: i64, r: &[i64]) -> Self {
        let mut coeffs = Vec::with_capacity(r.len() + 2);
        coeffs.push(p);
        coeffs.push(q);
        coeffs.extend(r.iter().map(|x| -x));
        Self {
            basis: BasisTag::BF(r.len()),
            coeffs,
        }
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Intersection pairing with another class on the same basis.
    pub fn pairing(&self, other: &HomologyClass) -> Result<i64> {
        check_same(self.basis, other.basis)?;
        Ok(self.pair_unchecked(other))
    }

    pub(crate) fn pair_unchecked(&self, other: &HomologyClass) -> i64 {
        match self.basis {
            BasisTag::H(_) => {
                let (h, e) = self.coeffs.split_first().unwrap();
                let (oh, oe) = other.coeffs.split_first().unwrap();
                h * oh - e.iter().zip(oe).map(|(a, b)| a * b).sum::<i64>()
            }
            BasisTag::BF(_) => {
                let c = &self.coeffs;
                let o = &other.coeffs;
                c[0] * o[1] + c[1] * o[0]
                    - c[2..].iter().zip(&o[2..]).map(|(a, b)| a * b).sum::<i64>()
            }
        }
    }

    pub fn square(&self) -> i64 {
        self.pair_unchecked(self)
    }

    /// `K · A` for the canonical class of this basis.
    pub fn k_dot(&self) -> i64 {
        canonical_class(self.basis).pair_unchecked(self)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Express this class in another basis of the same manifold.
    pub fn to_basis(&self, target: BasisTag) -> Result<HomologyClass> {
        if target == self.basis {
            return Ok(self.clone());
        }
        if !self.basis.same_manifold(target) {
            return Err(Error::BasisMismatch(self.basis, target));
        }
        let c = &self.coeffs;
        let coeffs = match (self.basis, target) {
            (BasisTag::H(_), BasisTag::BF(_)) => {
                // H = B+F-E'1, E1 = B-E'1, E2 = F-E'1, Ej = E'(j-1)
                let (d, x1, x2) = (c[0], c[1], c[2]);
                let mut out = vec![d + x1, d + x2, -d - x1 - x2];
                out.extend_from_slice(&c[3..]);
                out
            }
            (BasisTag::BF(_), BasisTag::H(_)) => {
                // B = H-E2, F = H-E1, E'1 = H-E1-E2, E'i = E(i+1)
                let (b, f, y1) = (c[0], c[1], c[2]);
                let mut out = vec![b + f + y1, -f - y1, -b - y1];
                out.extend_from_slice(&c[3..]);
                out
            }
            _ => unreachable!("same_manifold admits only H <-> BF partners"),
        };
        Ok(HomologyClass {
            basis: target,
            coeffs,
        })
    }

    /// Append a zero coefficient for a new exceptional class `E_{k+1}`.
    pub fn blow_up(&self) -> HomologyClass {
        let basis = match self.basis {
            BasisTag::H(k) => BasisTag::H(k + 1),
            BasisTag::BF(n) => BasisTag::BF(n + 1),
        };
        let mut coeffs = self.coeffs.clone();
        coeffs.push(0);
        HomologyClass { basis, coeffs }
    }
}

impl Add for &HomologyClass {
    type Output = HomologyClass;
    fn add(self, rhs: &HomologyClass) -> HomologyClass {
        assert_eq!(self.basis, rhs.basis, "adding classes across bases");
        HomologyClass {
            basis: self.basis,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &HomologyClass {
    type Output = HomologyClass;
    fn sub(self, rhs: &HomologyClass) -> HomologyClass {
        self + &(-rhs)
    }
}

impl Neg for &HomologyClass {
    type Output = HomologyClass;
    fn neg(self) -> HomologyClass {
        HomologyClass {
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul<&HomologyClass> for i64 {
    type Output = HomologyClass;
    fn mul(self, rhs: &HomologyClass) -> HomologyClass {
        HomologyClass {
            basis: rhs.basis,
            coeffs: rhs.coeffs.iter().map(|a| self * a).collect(),
        }
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let name = self.basis.name(i);
            let mag = c.unsigned_abs();
            match (first, c < 0) {
                (true, false) => {}
                (true, true) => f.write_str("-")?,
                (false, false) => f.write_str(" + ")?,
                (false, true) => f.write_str(" - ")?,
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            f.write_str(&name)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for HomologyClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `K = -3H + Σ E_i` in `HBasis`, `K = -2B - 2F + Σ E_i` in `BFBasis`.
pub fn canonical_class(basis: BasisTag) -> HomologyClass {
    let mut coeffs = vec![1; basis.dim()];
    match basis {
        BasisTag::H(_) => coeffs[0] = -3,
        BasisTag::BF(_) => {
            coeffs[0] = -2;
            coeffs[1] = -2;
        }
    }
    HomologyClass { basis, coeffs }
}

/// `(A·A + K·A)/2 + 1`; zero for every embedded sphere by adjunction.
///
/// `A·A ≡ K·A (mod 2)` because `K` is characteristic, so the value is an integer.
pub fn virtual_genus(a: &HomologyClass) -> i64 {
    (a.square() + a.k_dot()) / 2 + 1
}

/// Intersection pairing of two classes.
pub fn pairing(a: &HomologyClass, b: &HomologyClass) -> Result<i64> {
    a.pairing(b)
}

/// A cohomology class of a symplectic form, stored as the exact areas of the
/// basis classes: `(ν | c_1, …, c_k)` in `HBasis`, `(ω(B), ω(F) | a_1, …, a_n)`
/// in `BFBasis`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormClass {
    basis: BasisTag,
    areas: Vec<Rational>,
}

impl FormClass {
    pub fn new(basis: BasisTag, areas: Vec<Rational>) -> Result<Self> {
        if areas.len() != basis.dim() {
            return Err(Error::Dimension {
                basis,
                expected: basis.dim(),
                got: areas.len(),
            });
        }
        Ok(Self { basis, areas })
    }

    /// `(ν | c_1, …, c_k)`.
    pub fn h_form(nu: Rational, c: Vec<Rational>) -> Self {
        let mut areas = Vec::with_capacity(c.len() + 1);
        areas.push(nu);
        areas.extend(c);
        Self {
            basis: BasisTag::H(areas.len() - 1),
            areas,
        }
    }

    /// `ω(B) = μ`, `ω(F) = f`, `ω(E_i) = a_i`.
    pub fn bf_form(mu: Rational, f: Rational, a: Vec<Rational>) -> Self {
        let mut areas = Vec::with_capacity(a.len() + 2);
        areas.push(mu);
        areas.push(f);
        areas.extend(a);
        Self {
            basis: BasisTag::BF(areas.len() - 2),
            areas,
        }
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn areas(&self) -> &[Rational] {
        &self.areas
    }

    /// Number of blow-ups of `CP²` this form lives on (`n + 1` for `BFBasis(n)`).
    pub fn k(&self) -> usize {
        match self.basis {
            BasisTag::H(k) => k,
            BasisTag::BF(n) => n + 1,
        }
    }

    /// Areas of the exceptional basis classes `E_1, …`.
    pub fn exceptional_areas(&self) -> &[Rational] {
        &self.areas[self.basis.head()..]
    }

    /// Area of `E_i` (1-based).
    pub fn c(&self, i: usize) -> &Rational {
        &self.exceptional_areas()[i - 1]
    }

    /// Area of the normalizing class: `H` in `HBasis`, `F` in `BFBasis`.
    pub fn reference_area(&self) -> &Rational {
        match self.basis {
            BasisTag::H(_) => &self.areas[0],
            BasisTag::BF(_) => &self.areas[1],
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.reference_area().is_one()
    }

    /// Divide by the reference area so that `ω(H) = 1` (or `ω(F) = 1`).
    pub fn normalized(&self) -> Result<FormClass> {
        let r = self.reference_area().clone();
        if r.is_zero() {
            return Err(Error::ZeroArea(self.to_string()));
        }
        Ok(self.scaled(&r.recip()))
    }

    pub fn scaled(&self, s: &Rational) -> FormClass {
        FormClass {
            basis: self.basis,
            areas: self.areas.iter().map(|a| a * s).collect(),
        }
    }

    pub fn negated(&self) -> FormClass {
        FormClass {
            basis: self.basis,
            areas: self.areas.iter().map(|a| -a).collect(),
        }
    }

    /// `ω(A) = [ω] · A`.
    pub fn area(&self, a: &HomologyClass) -> Result<Rational> {
        check_same(self.basis, a.basis)?;
        Ok(self.area_unchecked(a))
    }

    pub(crate) fn area_unchecked(&self, a: &HomologyClass) -> Rational {
        let mut acc = Rational::zero();
        for (x, c) in self.areas.iter().zip(&a.coeffs) {
            if *c != 0 {
                acc += x * Rational::from_integer((*c).into());
            }
        }
        acc
    }

    /// Coefficients of the Poincaré dual class. Both Gram matrices are
    /// involutions, so this is the Gram matrix applied to the area vector.
    pub fn pd_coeffs(&self) -> Vec<Rational> {
        let d = self.basis.dim();
        (0..d)
            .map(|i| {
                (0..d)
                    .filter(|&j| self.basis.gram(i, j) != 0)
                    .map(|j| &self.areas[j] * Rational::from_integer(self.basis.gram(i, j).into()))
                    .fold(Rational::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// `[ω] · [ω]`.
    pub fn self_pairing(&self) -> Rational {
        self.areas
            .iter()
            .zip(self.pd_coeffs())
            .map(|(a, p)| a * p)
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// The same cohomology class described in another basis of the manifold.
    pub fn to_basis(&self, target: BasisTag) -> Result<FormClass> {
        if target == self.basis {
            return Ok(self.clone());
        }
        if !self.basis.same_manifold(target) {
            return Err(Error::BasisMismatch(self.basis, target));
        }
        let areas = (0..target.dim())
            .map(|i| {
                let v = HomologyClass::unit(target, i).to_basis(self.basis)?;
                Ok(self.area_unchecked(&v))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FormClass {
            basis: target,
            areas,
        })
    }

    /// Drop the last exceptional class (projection to `c_k = 0`).
    pub fn blow_down(&self) -> Result<FormClass> {
        let basis = match self.basis {
            BasisTag::H(k) if k >= 1 => BasisTag::H(k - 1),
            BasisTag::BF(n) if n >= 1 => BasisTag::BF(n - 1),
            other => {
                return Err(Error::InvalidInput(format!(
                    "{other} has no exceptional class to blow down"
                )))
            }
        };
        let mut areas = self.areas.clone();
        areas.pop();
        Ok(FormClass { basis, areas })
    }

    /// True when every listed area is strictly positive.
    pub fn all_positive(&self) -> bool {
        self.areas.iter().all(|a| a.is_positive())
    }
}

impl fmt::Display for FormClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = self.basis.head();
        let left: Vec<String> = self.areas[..head].iter().map(|a| a.to_string()).collect();
        let right: Vec<String> = self.areas[head..].iter().map(|a| a.to_string()).collect();
        if right.is_empty() {
            write!(f, "({} |)", left.join(", "))
        } else {
            write!(f, "({} | {})", left.join(", "), right.join(", "))
        }
    }
}

impl std::str::FromStr for FormClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        literal::parse_form(s)
    }
}

impl Serialize for FormClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(k: usize) -> HomologyClass {
        HomologyClass::line(BasisTag::H(k))
    }

    fn e(k: usize, i: usize) -> HomologyClass {
        HomologyClass::exceptional(BasisTag::H(k), i)
    }

    fn form(s: &str) -> FormClass {
        s.parse().unwrap()
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(h(2).pairing(&h(2)).unwrap(), 1);
        assert_eq!(e(2, 1).pairing(&e(2, 2)).unwrap(), 0);
        assert_eq!(e(2, 1).pairing(&e(2, 1)).unwrap(), -1);
        let x = HomologyClass::h_class(1, &[1, 1]);
        assert_eq!(x.pairing(&x).unwrap(), -1);
    }

    #[test]
    fn pairing_rejects_mixed_bases() {
        let err = h(2).pairing(&h(3)).unwrap_err();
        assert_eq!(err, Error::BasisMismatch(BasisTag::H(2), BasisTag::H(3)));
    }

    #[test]
    fn bf_gram_matrix() {
        let b = HomologyClass::line(BasisTag::BF(1));
        let f = HomologyClass::fibre(1);
        let e1 = HomologyClass::exceptional(BasisTag::BF(1), 1);
        assert_eq!(b.square(), 0);
        assert_eq!(f.square(), 0);
        assert_eq!(b.pairing(&f).unwrap(), 1);
        assert_eq!(e1.square(), -1);
    }

    #[test]
    fn h_to_bf_matches_transition() {
        let bf = h(2).to_basis(BasisTag::BF(1)).unwrap();
        assert_eq!(bf, HomologyClass::bf_class(1, 1, &[1]));
        assert_eq!(bf.to_string(), "B + F - E1");
        // E1 = B - E'1, E2 = F - E'1
        assert_eq!(
            e(3, 1).to_basis(BasisTag::BF(2)).unwrap(),
            HomologyClass::bf_class(1, 0, &[1, 0])
        );
        assert_eq!(
            e(3, 3).to_basis(BasisTag::BF(2)).unwrap(),
            HomologyClass::bf_class(0, 0, &[0, -1])
        );
    }

    #[test]
    fn canonical_class_is_fixed_by_basis_change() {
        for k in 2..=8 {
            let kh = canonical_class(BasisTag::H(k));
            let kbf = canonical_class(BasisTag::BF(k - 1));
            assert_eq!(kh.to_basis(BasisTag::BF(k - 1)).unwrap(), kbf);
            assert_eq!(kh.square(), 9 - k as i64);
            assert_eq!(kbf.square(), 9 - k as i64);
        }
    }

    #[test]
    fn change_basis_needs_same_manifold() {
        assert!(h(3).to_basis(BasisTag::BF(1)).is_err());
        assert!(HomologyClass::line(BasisTag::BF(0)).to_basis(BasisTag::H(1)).is_err());
    }

    #[test]
    fn form_transition_to_bf() {
        // (1 | c1, c2) -> ω(B) = 1 - c2, ω(F) = 1 - c1, ω(E'1) = 1 - c1 - c2
        let w = form("(1 | 1/2, 1/4)");
        let bf = w.to_basis(BasisTag::BF(1)).unwrap();
        assert_eq!(bf, form("(3/4, 1/2 | 1/4)"));
        // normalized by the F-area: μ = (1-c2)/(1-c1), a1 = (1-c1-c2)/(1-c1)
        let n = bf.normalized().unwrap();
        assert_eq!(n, form("(3/2, 1 | 1/2)"));
    }

    #[test]
    fn area_examples() {
        let mono3 = form("(1 | 1/3, 1/3, 1/3)");
        assert_eq!(mono3.area(&HomologyClass::h_class(1, &[1, 1, 1])).unwrap(), int(0));
        let mono5 = form("(1 | 1/3, 1/3, 1/3, 1/3, 1/3)");
        assert_eq!(
            mono5.area(&HomologyClass::h_class(2, &[1, 1, 1, 1, 1])).unwrap(),
            rat(1, 3)
        );
        let w = form("(1 | 3/5, 1/5)");
        assert_eq!(w.area(&(&e(2, 1) - &e(2, 2))).unwrap(), rat(2, 5));
        assert_eq!(w.area(&h(2)).unwrap(), int(1));
    }

    #[test]
    fn virtual_genus_examples() {
        assert_eq!(virtual_genus(&h(1)), 0);
        assert_eq!(virtual_genus(&e(1, 1)), 0);
        // conic: (4 - 6)/2 + 1
        assert_eq!(virtual_genus(&(2 * &h(1))), 0);
        // plane cubic: (9 - 9)/2 + 1
        assert_eq!(virtual_genus(&(3 * &h(1))), 1);
    }

    #[test]
    fn self_pairing_of_forms() {
        let w = form("(1 | 1/2, 1/2, 1/2)");
        assert_eq!(w.self_pairing(), rat(1, 4));
        let v = form("(2, 1 | 1/2)");
        // PD = 1·B + 2·F - 1/2 E1, square = 2·2 - 1/4
        assert_eq!(v.self_pairing(), rat(15, 4));
        // invariant under change of basis
        let w2 = form("(1 | 1/2, 1/4, 1/8)");
        assert_eq!(w2.self_pairing(), w2.to_basis(BasisTag::BF(2)).unwrap().self_pairing());
    }

    #[test]
    fn normalization_rejects_zero_area() {
        assert!(matches!(form("(0 | 1)").normalized(), Err(Error::ZeroArea(_))));
    }
}
