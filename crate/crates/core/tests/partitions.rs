use proptest::prelude::*;
use schurlc::{
    is_schur_positive, midpoint_pair, schur_product, sort_split, star_pair, Partition, SchurVector, SkewShape,
};

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn skew(max_len: usize, max_part: usize) -> impl Strategy<Value = SkewShape> {
    partition(max_len, max_part).prop_flat_map(|outer| {
        let subs = outer.subpartitions();
        (0..subs.len()).prop_map(move |k| SkewShape::new(outer.clone(), subs[k].clone()).unwrap())
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition(8, 8)) {
        let c = p.conjugate();
        prop_assert_eq!(c.size(), p.size());
        prop_assert_eq!(c.conjugate(), p);
    }

    #[test]
    fn rotation_is_an_involution_on_normalized_shapes(s in skew(6, 6)) {
        let n = s.normalized();
        prop_assert_eq!(n.rotate180().rotate180(), n.clone());
        prop_assert_eq!(s.rotate180().size(), s.size());
    }

    #[test]
    fn pair_operations_preserve_size(a in partition(6, 6), b in partition(6, 6)) {
        let total = a.size() + b.size();
        let (x, y) = sort_split(&a, &b);
        prop_assert_eq!(x.size() + y.size(), total);
        let (x, y) = midpoint_pair(&a, &b);
        prop_assert_eq!(x.size() + y.size(), total);
        if let Ok((x, y)) = star_pair(&a, &b) {
            prop_assert_eq!(x.size() + y.size(), total);
        }
    }

    #[test]
    fn text_format_round_trips(s in skew(5, 5)) {
        prop_assert_eq!(s.to_string().parse::<SkewShape>().unwrap(), s.clone());
        prop_assert_eq!(s.outer().to_string().parse::<Partition>().unwrap(), s.outer().clone());
    }
}

#[test]
fn star_pair_dominates_on_hooks() {
    for m in 1..=4i64 {
        for n in 1..=4i64 {
            for i in 0..=3i64 {
                for j in 0..=3i64 {
                    let mu = Partition::hook(m, i).unwrap();
                    let nu = Partition::hook(n, j).unwrap();
                    let (l, r) = star_pair(&mu, &nu).unwrap();
                    let diff = schur_product(&SchurVector::s(l), &SchurVector::s(r))
                        - schur_product(&SchurVector::s(mu.clone()), &SchurVector::s(nu.clone()));
                    assert!(is_schur_positive(&diff), "({mu}, {nu}): {diff}");
                }
            }
        }
    }
}

#[test]
fn degenerate_blocks_are_rejected() {
    assert!(Partition::from_blocks(&[(2, 1), (1, -1)]).is_err());
    assert!(Partition::hook(0, 2).is_err());
    assert!("3,4".parse::<Partition>().is_err());
    assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
}
