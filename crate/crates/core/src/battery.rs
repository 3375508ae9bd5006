//! The verification battery: reproduced examples and oracle comparisons,
//! grouped into numbered criteria.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::binomial;
use rayon::prelude::*;

use crate::data;
use crate::logconcavity::{
    check_ilc, check_strong_ilc, dimension_poly, ilc_difference, is_log_concave, q_dimension_poly,
    substitute_t_plus_one, times_t_plus_one, SchurPoly,
};
use crate::matroid::{
    char_poly, inverse_kl_recursion_check, kl_defining_recursion_check, kl_poly, kl_poly_hook_form, reduced_char_poly,
    z_poly, z_poly_from_definition,
};
use crate::partition::{Partition, SkewShape};
use crate::schur::{
    dimension, generic_degree, hook_product_closed_form, hook_product_six_sums, jacobi_trudi_expand, lr_coefficient,
    pieri_multiply, schur_product, skew_expand, standard_tableaux, SchurVector,
};
use crate::sweep::{sweep, Family, Grid, Property};

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

pub const CRITERIA: [(u8, &str); 12] = [
    (1, "ILC but not strongly ILC example"),
    (2, "braid matroid B_7: KL polynomial not ILC"),
    (3, "skew expansion: LR enumeration = Jacobi-Trudi"),
    (4, "hook product closed form"),
    (5, "characteristic polynomials: strong ILC"),
    (6, "KL polynomials: ILC and strong ILC"),
    (7, "inverse KL polynomials: ILC and strong ILC"),
    (8, "recursion oracles"),
    (9, "Z-polynomials"),
    (10, "preservation under (t+1)J(t) and J(t+1)"),
    (11, "ordinary and q-log-concavity of dimensions"),
    (12, "LR coefficient properties"),
];

/// Criterion ids of a named suite.
pub fn suite(name: &str) -> Option<Vec<u8>> {
    let ids: &[u8] = match name {
        "all" => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12],
        "remarks" => &[1, 2],
        "oracles" => &[3],
        "hooks" => &[4],
        "charpoly" => &[5],
        "kl" => &[6],
        "invkl" => &[7],
        "recursions" => &[8],
        "z" => &[9],
        "preservation" => &[10],
        "dims" => &[11],
        "lr" => &[12],
        _ => return None,
    };
    Some(ids.to_vec())
}

pub const SUITES: [&str; 12] =
    ["all", "remarks", "oracles", "hooks", "charpoly", "kl", "invkl", "recursions", "z", "preservation", "dims", "lr"];

/// Outcome of one criterion: `Ok(detail)` or `Err(first failure)`.
type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn run_criterion(id: u8, extended: bool) -> Outcome {
    let name = CRITERIA.iter().find(|c| c.0 == id).map(|c| c.1).unwrap_or("unknown");
    let start = Instant::now();
    let result = match id {
        1 => remark_example(),
        2 => braid_remark(),
        3 => oracle_equivalence(),
        4 => hook_closed_form(),
        5 => characteristic(),
        6 => kl_family(extended),
        7 => inverse_kl_family(extended),
        8 => recursions(),
        9 => z_family(extended),
        10 => preservation(),
        11 => dimensions(),
        12 => lr_properties(),
        _ => Err(format!("no criterion {id}")),
    };
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome { id, name, passed, detail, elapsed: start.elapsed() }
}

pub fn run(ids: &[u8], extended: bool) -> Vec<Outcome> {
    ids.iter().map(|&id| run_criterion(id, extended)).collect()
}

fn v(pairs: &[(&[usize], i64)]) -> SchurVector {
    SchurVector::from_pairs(pairs)
}

fn remark_example() -> Check {
    let ds = data::remark();
    let p = &ds.poly;
    let ilc = check_ilc(p).map_err(|e| e.to_string())?;
    ensure(ilc.verdict, || "check_ilc rejected the example polynomial".into())?;
    let strong = check_strong_ilc(p).map_err(|e| e.to_string())?;
    ensure(!strong.verdict, || "check_strong_ilc accepted the example polynomial".into())?;
    let expected = v(&[(&[1, 1, 1, 1], 16), (&[2, 1, 1], 12), (&[2, 2], 18), (&[3, 1], -2), (&[4], 2)]);
    ensure(strong.witnesses.len() == 1, || format!("expected one witness, got {}", strong.witnesses.len()))?;
    let w = &strong.witnesses[0];
    ensure((w.i, w.j) == (1, 2), || format!("witness at ({},{}), expected (1,2)", w.i, w.j))?;
    ensure(w.difference == expected, || format!("witness difference {} != {expected}", w.difference))?;
    for rec in &ds.differences {
        let got = ilc_difference(p, rec.i, rec.j);
        ensure(got == rec.difference, || {
            format!("({},{}) difference {got} != recorded {}", rec.i, rec.j, rec.difference)
        })?;
    }
    Ok(format!("ILC holds, strong ILC fails only at (1,2) with {expected}"))
}

fn braid_remark() -> Check {
    let ds = data::braid_b7();
    let p = &ds.poly;
    let got = ilc_difference(p, 1, 1);
    let recorded = &ds.differences[0].difference;
    ensure(&got == recorded, || format!("computed difference differs from the recorded display: {}", &got - recorded))?;
    for neg in [&[8, 2, 2, 1, 1][..], &[7, 2, 2, 2, 1]] {
        let lam = Partition::new(neg.to_vec()).expect("literal");
        ensure(got.coeff(&lam) == BigInt::from(-1), || format!("coefficient of s{lam:?} is not -1"))?;
    }
    ensure(!got.is_schur_positive(), || "difference is Schur positive".into())?;
    let ilc = check_ilc(p).map_err(|e| e.to_string())?;
    ensure(!ilc.verdict && ilc.witnesses[0].i == 1, || "check_ilc did not fail at i = 1".into())?;
    let negatives: Vec<String> = got.negative_terms().iter().map(|(l, c)| format!("{c}s{l:?}")).collect();
    Ok(format!("{}-term difference matches; negative terms {}", got.len(), negatives.join(", ")))
}

fn oracle_equivalence() -> Check {
    let shapes = SkewShape::all_with_outer_size_at_most(8);
    let bad = shapes.par_iter().find_first(|s| {
        let lr = skew_expand(s);
        lr != jacobi_trudi_expand(s) || lr != skew_expand(&s.rotate180()) || !lr.is_homogeneous(s.size())
    });
    if let Some(s) = bad {
        return Err(format!("mismatch on {s}"));
    }
    Ok(format!("{} skew shapes agree, rotation invariant", shapes.len()))
}

fn hook_closed_form() -> Check {
    let mut count = 0;
    let mut literal_off = 0;
    for m in 1..=5i64 {
        for n in 1..=5i64 {
            for a in 0..=4i64 {
                for b in 0..=4i64 {
                    if a + b == 0 {
                        continue;
                    }
                    let closed = hook_product_closed_form(m, a, n, b).map_err(|e| e.to_string())?;
                    let h1 = SchurVector::s(Partition::hook(m, a).expect("arm >= 1"));
                    let h2 = SchurVector::s(Partition::hook(n, b).expect("arm >= 1"));
                    let lr = schur_product(&h1, &h2);
                    ensure(closed == lr, || {
                        format!("(m,a,n,b)=({m},{a},{n},{b}): closed form minus LR = {}", &closed - &lr)
                    })?;
                    if hook_product_six_sums(m, a, n, b).map_err(|e| e.to_string())? != lr {
                        literal_off += 1;
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} hook pairs agree ({literal_off} with b = 0 need the factors swapped)"))
}

fn sweep_check(family: Family, property: Property, grid: &Grid) -> std::result::Result<usize, String> {
    let r = sweep(family, property, grid).map_err(|e| e.to_string())?;
    if let Some(c) = r.failures().next() {
        let w = &c.report.witnesses[0];
        return Err(format!("{family} {property} fails at m={} d={}: ({},{}) {}", c.m, c.d, w.i, w.j, w.difference));
    }
    Ok(r.cells.len())
}

fn characteristic() -> Check {
    let grid = Grid::new(1, 10, 1, 10);
    let n = sweep_check(Family::RedChar, Property::StrongIlc, &grid)?;
    sweep_check(Family::Char, Property::StrongIlc, &grid)?;
    let t_minus_one = SchurPoly::new(vec![-SchurVector::s(Partition::empty()), SchurVector::s(Partition::empty())]);
    let bad = grid.cells().into_par_iter().find_first(|&(m, d)| {
        let h = char_poly(m, d).expect("valid");
        let reduced = reduced_char_poly(m, d).expect("valid");
        !h.eval_at_one().is_zero() || t_minus_one.mul(&reduced.signed()) != h.signed()
    });
    if let Some((m, d)) = bad {
        return Err(format!("H(1) != 0 or (t-1)H~ != H at m={m} d={d}"));
    }
    Ok(format!("{n} cells: reduced and full strong ILC, H(1) = 0, (t-1)H~ = H"))
}

fn bound(extended: bool) -> i64 {
    if extended {
        15
    } else {
        12
    }
}

fn kl_family(extended: bool) -> Check {
    let grid = Grid::sum_at_most(bound(extended));
    let n = sweep_check(Family::Kl, Property::Ilc, &grid)?;
    sweep_check(Family::Kl, Property::StrongIlc, &grid)?;
    let forms = Grid::sum_at_most(bound(extended).max(14));
    if let Some((m, d)) = forms
        .cells()
        .into_par_iter()
        .find_first(|&(m, d)| kl_poly(m, d).expect("valid") != kl_poly_hook_form(m, d).expect("valid"))
    {
        return Err(format!("skew and hook forms differ at m={m} d={d}"));
    }
    Ok(format!(
        "{n} cells with m+d <= {}: ILC and strong ILC; skew form = hook form for m+d <= {}",
        bound(extended),
        bound(extended).max(14)
    ))
}

fn inverse_kl_family(extended: bool) -> Check {
    let grid = Grid::sum_at_most(bound(extended));
    let n = sweep_check(Family::InvKl, Property::Ilc, &grid)?;
    sweep_check(Family::InvKl, Property::StrongIlc, &grid)?;
    Ok(format!("{n} cells with m+d <= {}: ILC and strong ILC", bound(extended)))
}

fn recursions() -> Check {
    let cells = Grid::sum_at_most(10).cells();
    let bad = cells.par_iter().find_first(|&&(m, d)| {
        !kl_defining_recursion_check(m, d).expect("valid").verdict
            || !inverse_kl_recursion_check(m, d).expect("valid").verdict
    });
    if let Some((m, d)) = bad {
        return Err(format!("recursion fails at m={m} d={d}"));
    }
    Ok(format!("{} cells: KL defining recursion and inverse KL recursion hold", cells.len()))
}

fn z_family(extended: bool) -> Check {
    let identity = Grid::sum_at_most(12);
    if let Some((m, d)) = identity.cells().into_par_iter().find_first(|&(m, d)| {
        let z = z_poly(m, d).expect("valid");
        z != z_poly_from_definition(m, d).expect("valid") || !z.is_palindromic() || z.degree() != Some(d as usize)
    }) {
        return Err(format!("closed form, definition or palindromicity fails at m={m} d={d}"));
    }
    sweep_check(Family::Z, Property::StrongIlc, &Grid::new(0, 0, 1, 10))?;
    sweep_check(Family::Z, Property::StrongIlc, &Grid::new(1, 10, 1, 5))?;
    let first_three = Grid::new(1, 8, 2, 8).cells();
    if let Some((m, d)) = first_three.par_iter().copied().find_first(|&(m, d)| {
        let z = z_poly(m, d).expect("valid");
        let d = d as usize;
        !ilc_difference(&z, 1, 1).is_schur_positive() || !ilc_difference(&z, d - 1, d - 1).is_schur_positive()
    }) {
        return Err(format!("first-three-terms inequality fails at m={m} d={d}"));
    }
    // Conjecture sweep: reported, never asserted.
    let conj = sweep(Family::Z, Property::StrongIlc, &Grid::sum_at_most(bound(extended))).map_err(|e| e.to_string())?;
    let failing: Vec<String> = conj.failures().map(|c| format!("({},{})", c.m, c.d)).collect();
    let report = if failing.is_empty() {
        format!("conjecture sweep m+d <= {}: all {} cells strongly ILC", bound(extended), conj.cells.len())
    } else {
        format!("conjecture sweep m+d <= {}: failing cells {}", bound(extended), failing.join(" "))
    };
    Ok(format!(
        "{} identity cells; Boolean d <= 10 and d <= 5, m <= 10 strongly ILC; first three terms for m <= 8, d <= 8; {report}",
        identity.cells().len()
    ))
}

fn preservation() -> Check {
    let cells = Grid::new(1, 6, 1, 6).cells();
    let bad = cells.par_iter().find_map_first(|&(m, d)| {
        let h = reduced_char_poly(m, d).expect("valid").unsigned();
        for (label, p) in [("H~", h.clone()), ("(t+1)H~", times_t_plus_one(&h)), ("H~(t+1)", substitute_t_plus_one(&h))]
        {
            if !check_strong_ilc(&p).expect("positive").verdict {
                return Some(format!("{label} not strongly ILC at m={m} d={d}"));
            }
        }
        None
    });
    match bad {
        Some(msg) => Err(msg),
        None => Ok(format!("{} cells stay strongly ILC under both transformations", cells.len())),
    }
}

fn dimensions() -> Check {
    let cells = Grid::sum_at_most(12).cells();
    let bad = cells.par_iter().find_map_first(|&(m, d)| {
        for family in [Family::Kl, Family::InvKl] {
            let p = family.poly(m, d).expect("valid");
            if !is_log_concave(&dimension_poly(&p)) {
                return Some(format!("{family} dimensions not log-concave at m={m} d={d}"));
            }
            for q in [2, 3, 5] {
                if !is_log_concave(&q_dimension_poly(&p, q)) {
                    return Some(format!("{family} q={q} dimensions not log-concave at m={m} d={d}"));
                }
            }
        }
        None
    });
    if let Some(msg) = bad {
        return Err(msg);
    }
    let mut shapes = 0;
    for n in 0..=10 {
        for lam in Partition::all(n) {
            ensure(generic_degree(&lam).at_one() == standard_tableaux(&lam), || {
                format!("generic degree of {lam:?} at q=1")
            })?;
            shapes += 1;
        }
    }
    Ok(format!("{} cells log-concave at q = 1, 2, 3, 5; generic degrees match for {shapes} partitions", cells.len()))
}

fn lr_properties() -> Check {
    let mut triples = 0usize;
    for n in 0..=8 {
        for lam in Partition::all(n) {
            let conj = lam.conjugate();
            for mu in lam.subpartitions() {
                for nu in Partition::all(n - mu.size()) {
                    let c = lr_coefficient(&lam, &mu, &nu);
                    let swapped = lr_coefficient(&lam, &nu, &mu);
                    let conjugated = lr_coefficient(&conj, &mu.conjugate(), &nu.conjugate());
                    ensure(c == swapped && c == conjugated, || {
                        format!("c^{lam:?}_{mu:?},{nu:?}: {c} {swapped} {conjugated}")
                    })?;
                    triples += 1;
                }
            }
        }
    }
    for s in SkewShape::all_with_outer_size_at_most(6) {
        let f = skew_expand(&s);
        for n in 1..=4 {
            let row = SchurVector::s(Partition::row(n));
            ensure(pieri_multiply(&f, n) == schur_product(&f, &row), || format!("Pieri mismatch for {s} and n={n}"))?;
        }
    }
    let mut pairs = 0;
    for p in 0..=8usize {
        for r in 0..=(8 - p) {
            for a in Partition::all(p) {
                for b in Partition::all(r) {
                    let (fa, fb) = (SchurVector::s(a.clone()), SchurVector::s(b.clone()));
                    let lhs = dimension(&schur_product(&fa, &fb));
                    let rhs = binomial(BigInt::from(p + r), BigInt::from(p)) * dimension(&fa) * dimension(&fb);
                    ensure(lhs == rhs, || format!("dimension identity fails for {a:?}, {b:?}"))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{triples} triples symmetric and conjugation symmetric; Pieri consistent; {pairs} dimension identities"))
}
