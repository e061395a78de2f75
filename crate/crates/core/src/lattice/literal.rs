//! Textual literals for classes and forms.
//!
//! Classes: `2H - E1 - E2 - E3`, `B + 2F - E1` (basis supplied by the caller).
//! Forms: `(nu | c1, ..., ck)` for `HBasis(k)` and `(mu, f | a1, ..., an)` for
//! `BFBasis(n)`. Rationals are written `p/q`; decimals are rejected.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{BasisTag, FormClass, HomologyClass, Rational};
use crate::error::{Error, Result};

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    if t.contains('.') || t.contains('e') || t.contains('E') {
        return Err(Error::Parse(format!(
            "decimal literal `{t}` is not accepted; write an exact fraction such as 2/5"
        )));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in `{t}`")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in `{t}`")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{t}`")));
    }
    Ok(Rational::new(num, den))
}

pub(super) fn parse_form(s: &str) -> Result<FormClass> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("form literal must be parenthesized: `{t}`")))?;
    let (left, right) = inner
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("form literal needs `|`: `{t}`")))?;
    let head = split_list(left)?;
    let tail = split_list(right)?;
    match head.len() {
        1 => Ok(FormClass::h_form(head[0].clone(), tail)),
        2 => Ok(FormClass::bf_form(head[0].clone(), head[1].clone(), tail)),
        n => Err(Error::Parse(format!(
            "form literal needs one (ν) or two (μ, f) leading entries, got {n}"
        ))),
    }
}

fn split_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// Parse a class literal over the given basis.
pub fn parse_class(s: &str, basis: BasisTag) -> Result<HomologyClass> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty class literal".into()));
    }
    let mut coeffs = vec![0i64; basis.dim()];
    if compact == "0" {
        return HomologyClass::new(basis, coeffs);
    }
    let bytes = compact.as_bytes();
    let mut pos = 0;
    let mut first = true;
    while pos < bytes.len() {
        let mut sign = 1i64;
        match bytes[pos] {
            b'+' => pos += 1,
            b'-' => {
                sign = -1;
                pos += 1;
            }
            _ if first => {}
            _ => return Err(Error::Parse(format!("expected `+` or `-` in `{s}`"))),
        }
        first = false;
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let mag: i64 = if start == pos {
            1
        } else {
            compact[start..pos]
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient in `{s}`")))?
        };
        let name_start = pos;
        if pos < bytes.len() && bytes[pos].is_ascii_alphabetic() {
            pos += 1;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
        }
        let name = &compact[name_start..pos];
        let idx = index_of(name, basis)
            .ok_or_else(|| Error::Parse(format!("unknown basis element `{name}` for {basis}")))?;
        coeffs[idx] += sign * mag;
    }
    HomologyClass::new(basis, coeffs)
}

fn index_of(name: &str, basis: BasisTag) -> Option<usize> {
    (0..basis.dim()).find(|&i| basis.name(i) == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn decimals_are_rejected_with_hint() {
        let err = parse_rational("0.4").unwrap_err();
        assert!(err.to_string().contains("fraction"));
        assert!("(1 | 0.4, 0.3)".parse::<FormClass>().is_err());
    }

    #[test]
    fn parses_forms_in_both_bases() {
        let w: FormClass = "(1 | 1/3, 1/3, 1/3)".parse().unwrap();
        assert_eq!(w.basis(), BasisTag::H(3));
        let v: FormClass = "( 3/2 , 1 | 1/2 )".parse().unwrap();
        assert_eq!(v.basis(), BasisTag::BF(1));
        let s: FormClass = "(2, 1 |)".parse().unwrap();
        assert_eq!(s.basis(), BasisTag::BF(0));
        assert_eq!(s.to_string(), "(2, 1 |)");
    }

    #[test]
    fn parses_class_literals() {
        let b = BasisTag::H(3);
        let x = parse_class("2H - E1 - E2 - E3", b).unwrap();
        assert_eq!(x, HomologyClass::h_class(2, &[1, 1, 1]));
        assert_eq!(parse_class("2 H -E1-E2 - E3", b).unwrap(), x);
        assert_eq!(parse_class("-E1 + E2", b).unwrap().to_string(), "-E1 + E2");
        assert_eq!(parse_class("0", b).unwrap(), HomologyClass::zero(b));
        assert!(parse_class("B - F", b).is_err());
        assert!(parse_class("E4", b).is_err());
        let bf = parse_class("B + 2F - E1", BasisTag::BF(1)).unwrap();
        assert_eq!(bf, HomologyClass::bf_class(1, 2, &[1]));
    }

    fn arb_class() -> impl Strategy<Value = HomologyClass> {
        prop_oneof![
            (0usize..=8).prop_map(BasisTag::H),
            (0usize..=7).prop_map(BasisTag::BF)
        ]
        .prop_flat_map(|b| {
            proptest::collection::vec(-20i64..=20, b.dim())
                .prop_map(move |c| HomologyClass::new(b, c).unwrap())
        })
    }

    fn arb_form() -> impl Strategy<Value = FormClass> {
        let r = (-50i64..=50, 1i64..=30).prop_map(|(n, d)| Rational::new(n.into(), d.into()));
        prop_oneof![
            (0usize..=8).prop_map(BasisTag::H),
            (0usize..=7).prop_map(BasisTag::BF)
        ]
        .prop_flat_map(move |b| {
            proptest::collection::vec(r.clone(), b.dim())
                .prop_map(move |a| FormClass::new(b, a).unwrap())
        })
    }

    proptest! {
        #[test]
        fn class_print_parse_round_trip(c in arb_class()) {
            let printed = c.to_string();
            let back = parse_class(&printed, c.basis()).unwrap();
            prop_assert_eq!(&back, &c);
            prop_assert_eq!(back.to_string(), printed);
        }

        #[test]
        fn form_print_parse_round_trip(w in arb_form()) {
            let printed = w.to_string();
            let back: FormClass = printed.parse().unwrap();
            prop_assert_eq!(&back, &w);
            prop_assert_eq!(back.to_string(), printed);
        }
    }
}
