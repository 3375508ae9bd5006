use num_bigint::BigInt;
use schurlc::{
    char_poly, check_strong_ilc, dimension_poly, inverse_kl_recursion_check, kl_defining_recursion_check, kl_poly,
    reduced_char_poly, z_poly, z_poly_from_definition, SchurPoly, SchurVector,
};

#[test]
fn characteristic_identities() {
    let t_minus_one = SchurPoly::new(vec![SchurVector::from_pairs(&[(&[], -1)]), SchurVector::from_pairs(&[(&[], 1)])]);
    for m in 1..=10 {
        for d in 1..=10 {
            let h = char_poly(m, d).unwrap();
            let reduced = reduced_char_poly(m, d).unwrap();
            assert_eq!(t_minus_one.mul(&reduced.signed()), h.signed(), "m={m} d={d}");
            assert!(h.eval_at_one().is_zero(), "m={m} d={d}");
        }
    }
}

#[test]
fn kl_degree_and_constant_term() {
    for m in 0..=8 {
        for d in 1..=8 {
            let dims = dimension_poly(&kl_poly(m, d).unwrap());
            assert_eq!(dims.coeffs()[0], BigInt::from(1), "m={m} d={d}");
            assert!(dims.coeffs().len() - 1 <= ((d - 1) / 2) as usize, "m={m} d={d}");
        }
    }
}

#[test]
fn recursions_hold() {
    for m in 0..=9 {
        for d in 1..=(10 - m) {
            assert!(kl_defining_recursion_check(m, d).unwrap().verdict, "m={m} d={d}");
            assert!(inverse_kl_recursion_check(m, d).unwrap().verdict, "m={m} d={d}");
        }
    }
}

#[test]
fn z_is_palindromic_and_matches_definition() {
    for m in 0..=10 {
        for d in 1..=(12 - m) {
            let z = z_poly(m, d).unwrap();
            assert!(z.is_palindromic(), "m={m} d={d}");
            assert_eq!(z.degree(), Some(d as usize));
            if m + d <= 10 {
                assert_eq!(z, z_poly_from_definition(m, d).unwrap(), "m={m} d={d}");
            }
        }
    }
}

#[test]
fn boolean_z_is_strongly_ilc() {
    for d in 1..=8 {
        assert!(check_strong_ilc(&z_poly(0, d).unwrap()).unwrap().verdict, "d={d}");
    }
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(kl_poly(-1, 2).is_err());
    assert!(z_poly(1, 0).is_err());
    assert!(char_poly(1, -3).is_err());
}
