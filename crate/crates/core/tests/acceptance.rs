//! Acceptance battery: one line per criterion, every criterion asserted.

use std::io::Write;

use schurlc::battery::{run_criterion, CRITERIA};
use schurlc::{check_ilc, check_strong_ilc, remark_example_poly, SchurVector};

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    for (id, _) in CRITERIA {
        let o = run_criterion(id, false);
        let status = if o.passed { "PASS" } else { "FAIL" };
        let line = format!("[{status}] {:>2}. {} ({:.2?}): {}\n", o.id, o.name, o.elapsed, o.detail);
        let _ = std::io::stderr().lock().write_all(line.as_bytes());
        if !o.passed {
            failed.push(o.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn non_strong_example_witness_is_frozen() {
    let p = remark_example_poly();
    assert!(check_ilc(&p).unwrap().verdict);
    let strong = check_strong_ilc(&p).unwrap();
    let w = &strong.witnesses[0];
    assert_eq!((w.i, w.j), (1, 2));
    assert_eq!(
        w.difference,
        SchurVector::from_pairs(&[(&[1, 1, 1, 1], 16), (&[2, 1, 1], 12), (&[2, 2], 18), (&[3, 1], -2), (&[4], 2)])
    );
}
