use std::time::Instant;

use chamberkit::curves::{
    enumerate_negative_spheres, lemma_classes_audit, min_exceptional_area, minimal_open_configuration,
    square_zero_spheres, FamilyKind,
};
use chamberkit::lattice::virtual_genus;
use chamberkit::roots::positive_split;
use chamberkit::sample::{random_reduced_bf, random_reduced_h};
use chamberkit::{BasisTag, HomologyClass};
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn symplectic_in_bf(w: &chamberkit::FormClass) -> Vec<HomologyClass> {
    let mut v: Vec<HomologyClass> = positive_split(w)
        .unwrap()
        .symplectic
        .iter()
        .map(|r| r.to_basis(w.basis()).unwrap())
        .collect();
    v.sort();
    v
}

#[test]
fn minus_two_spheres_are_the_symplectic_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for n in 0..=4 {
        for bias in [0.0, 0.5] {
            for _ in 0..10 {
                let w = random_reduced_bf(n, &mut rng, bias);
                let spheres = enumerate_negative_spheres(&w).unwrap();
                assert_eq!(spheres.minus_two(), symplectic_in_bf(&w), "{w}");
            }
        }
    }
}

#[test]
fn family_members_match_their_patterns() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for n in 0..=4 {
        let w = random_reduced_bf(n, &mut rng, 0.3);
        let spheres = enumerate_negative_spheres(&w).unwrap();
        for fam in &spheres.families {
            for c in &fam.members {
                let x = c.coeffs();
                assert!(x[2..].iter().all(|&r| r == 0 || r == -1) || fam.family == FamilyKind::E);
                match fam.family {
                    FamilyKind::B => assert_eq!(x[0], 1),
                    FamilyKind::F => assert_eq!((x[0], x[1]), (0, 1)),
                    FamilyKind::E => {
                        assert_eq!((x[0], x[1]), (0, 0));
                        let j = x[2..].iter().position(|&r| r != 0).unwrap();
                        assert_eq!(x[2 + j], 1);
                        assert!(x[3 + j..].iter().all(|&r| r == 0 || r == -1));
                    }
                }
                assert!(c.square() < 0);
                assert_eq!(virtual_genus(c), 0, "{c}");
                assert!(w.area(c).unwrap().is_positive());
            }
        }
    }
}

#[test]
fn square_zero_classes_are_spheres() {
    for n in 0..=4 {
        for c in square_zero_spheres(n).unwrap() {
            assert_eq!((c.square(), virtual_genus(&c)), (0, 0), "{c}");
        }
    }
}

#[test]
fn configuration_members() {
    for b in [BasisTag::H(2), BasisTag::H(3), BasisTag::H(4), BasisTag::H(5)] {
        for c in minimal_open_configuration(b).unwrap() {
            assert_eq!((c.square(), c.k_dot()), (-1, -1), "{c}");
        }
    }
    for n in 1..=4 {
        for c in minimal_open_configuration(BasisTag::BF(n)).unwrap() {
            assert_eq!(virtual_genus(&c), 0, "{c}");
            assert!(c.square() == -1, "{c}");
        }
    }
}

#[test]
fn audit_finds_no_violations() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let t = Instant::now();
    for n in 0..=4 {
        for _ in 0..3 {
            let w = random_reduced_bf(n, &mut rng, 0.3);
            let report = lemma_classes_audit(&w, 6).unwrap();
            assert!(!report.precondition_breach);
            assert!(report.violations.is_empty(), "{w}: {:?}", report.violations);
            assert!(report.checked > 0);
        }
    }
    eprintln!("audit: {:?}", t.elapsed());
}

#[test]
fn minimal_exceptional_is_last() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for k in [1, 3, 4, 5] {
        for _ in 0..20 {
            let w = random_reduced_h(k, &mut rng, 0.3);
            let m = min_exceptional_area(&w).unwrap();
            assert_eq!(m.area, w.c(k).clone(), "{w}");
            assert!(m.last_is_minimal);
        }
    }
}

#[test]
fn two_point_blowup_can_have_a_smaller_line_class() {
    let w: chamberkit::FormClass = "(1 | 1/2, 1/3)".parse().unwrap();
    let m = min_exceptional_area(&w).unwrap();
    assert_eq!(m.class, HomologyClass::h_class(1, &[1, 1]));
    assert_eq!(m.area, chamberkit::lattice::rat(1, 6));
    assert!(!m.last_is_minimal);
}
