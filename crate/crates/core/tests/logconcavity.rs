use proptest::prelude::*;
use rayon::prelude::*;
use schurlc::{
    check_ilc, check_strong_ilc, dimension_poly, inverse_kl_poly, is_log_concave, kl_poly, q_dimension_poly,
    reduced_char_poly, substitute_t_plus_one, times_t_plus_one, verify_hook_corollary, verify_lpp_midpoint,
    verify_lpp_sort, z_poly, Error, SchurPoly, SchurVector, SkewShape,
};

fn family(k: u8, m: i64, d: i64) -> SchurPoly {
    match k {
        0 => reduced_char_poly(m, d).unwrap().unsigned(),
        1 => kl_poly(m, d).unwrap(),
        2 => inverse_kl_poly(m, d).unwrap(),
        _ => z_poly(m, d).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn strong_implies_ilc_implies_dimensions(k in 0u8..4, m in 0i64..=6, d in 1i64..=6) {
        let p = family(k, m, d);
        let strong = check_strong_ilc(&p).unwrap();
        let ilc = check_ilc(&p).unwrap();
        if strong.verdict {
            prop_assert!(ilc.verdict);
        }
        if ilc.verdict {
            prop_assert!(is_log_concave(&dimension_poly(&p)));
            for q in [2, 3, 5] {
                prop_assert!(is_log_concave(&q_dimension_poly(&p, q)));
            }
        }
    }

    #[test]
    fn hook_corollary(a in 1i64..=4, b in 1i64..=4, p in 1i64..=4, q in 1i64..=4) {
        prop_assume!(a <= b && p <= q);
        let r = verify_hook_corollary(a, b, p, q).unwrap();
        prop_assert!(r.verdict, "{:?}", r.witnesses);
    }
}

#[test]
fn preservation_on_reduced_characteristic() {
    for m in 1..=6 {
        for d in 1..=6 {
            let p = reduced_char_poly(m, d).unwrap().unsigned();
            assert!(check_strong_ilc(&p).unwrap().verdict, "m={m} d={d}");
            assert!(check_strong_ilc(&times_t_plus_one(&p)).unwrap().verdict, "m={m} d={d}");
            assert!(check_strong_ilc(&substitute_t_plus_one(&p)).unwrap().verdict, "m={m} d={d}");
        }
    }
}

#[test]
fn lpp_on_all_small_shapes() {
    let shapes = SkewShape::all_with_outer_size_at_most(6);
    let failures: Vec<String> = shapes
        .par_iter()
        .flat_map_iter(|x| {
            shapes.iter().filter_map(move |y| {
                let mid = verify_lpp_midpoint(x, y).unwrap();
                let sort = verify_lpp_sort(x, y).unwrap();
                (!mid.verdict || !sort.verdict).then(|| format!("{x} {y}"))
            })
        })
        .collect();
    assert!(failures.is_empty(), "{:?}", &failures[..failures.len().min(5)]);
}

#[test]
fn signed_input_is_refused() {
    let p = SchurPoly::new(vec![SchurVector::from_pairs(&[(&[1], 1)]), SchurVector::from_pairs(&[(&[1], -1)])]);
    assert!(matches!(check_ilc(&p), Err(Error::NotHonest)));
}
