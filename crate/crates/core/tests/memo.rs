use schurlc::schur::lr::{clear_memo, memo_len, memo_preload, memo_snapshot, set_memo_enabled};
use schurlc::sweep::{Family, Property};
use schurlc::{kl_poly, z_poly};

fn outputs() -> Vec<String> {
    let mut out = Vec::new();
    for (m, d) in [(2, 5), (3, 4), (1, 7)] {
        out.push(kl_poly(m, d).unwrap().to_string());
        out.push(z_poly(m, d).unwrap().to_string());
        out.push(format!("{:?}", Property::StrongIlc.check(&Family::InvKl.poly(m, d).unwrap()).unwrap()));
    }
    out
}

// One test so the global toggle is not raced by siblings in this binary.
#[test]
fn memo_does_not_change_results() {
    set_memo_enabled(false);
    clear_memo();
    let cold = outputs();
    assert_eq!(memo_len(), 0);

    set_memo_enabled(true);
    let warm = outputs();
    assert!(memo_len() > 0);
    assert_eq!(cold, warm);
    assert_eq!(warm, outputs());

    let snap = memo_snapshot();
    clear_memo();
    memo_preload(snap.clone());
    assert_eq!(memo_len(), snap.len());
    assert_eq!(outputs(), cold);
}
