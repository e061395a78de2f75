use chamberkit::braid::{abelianization, build_presentation, smith_normal_form, span_check};

#[test]
fn full_group_and_quotient() {
    for n in 3..=7 {
        let full = abelianization(&build_presentation(n, false).unwrap());
        let quot = abelianization(&build_presentation(n, true).unwrap());
        // n(n-1)/2 generators, n relations of which n - 1 are independent over Q.
        assert_eq!(full.free_rank, n * (n - 1) / 2 - n, "n = {n}");
        assert_eq!(quot.free_rank, full.free_rank, "n = {n}");
        assert_eq!(full.torsion, vec![2]);
        assert!(quot.torsion.is_empty(), "n = {n}: {quot}");
    }
}

#[test]
fn small_generating_sets() {
    let p = build_presentation(5, true).unwrap();
    let all = p.generators.clone();
    assert!(span_check(&p, &all).unwrap());
    assert!(span_check(&p, &[(2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]).unwrap());
    assert!(!span_check(&p, &[(2, 4), (2, 5), (3, 4), (3, 5)]).unwrap());
}

#[test]
fn smith_form_of_a_known_matrix() {
    let s = smith_normal_form(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    assert_eq!(s.divisors, vec![2, 6, 12]);
}
