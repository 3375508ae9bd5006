//! Frobenius characteristics of the equivariant characteristic, Kazhdan-Lusztig,
//! inverse Kazhdan-Lusztig and Z-polynomials of the uniform matroid `U_{m,d}`
//! (rank `d` on `m + d` elements; `m = 0` is the Boolean matroid `B_d`).
//!
//! The q-niform matroid `U_{m,d}(q)` has the same partition-indexed data, so
//! the same constructors serve both; `q` only enters through generic degrees.

use std::fmt;

use crate::data;
use crate::error::{Error, Result};
use crate::logconcavity::{CheckReport, SchurPoly, Witness};
use crate::partition::{Partition, SkewShape};
use crate::schur::{schur_product_sum, skew_expand, SchurVector};

/// Polynomial whose coefficients are `sign * vector` with each vector Schur
/// positive.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SignedSchurPoly {
    coeffs: Vec<(i8, SchurVector)>,
}

impl SignedSchurPoly {
    fn from_terms(terms: Vec<(usize, i8, SchurVector)>) -> Self {
        let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut coeffs = vec![(1, SchurVector::zero()); deg + 1];
        for (k, sign, v) in terms {
            coeffs[k] = (sign, v);
        }
        while coeffs.last().is_some_and(|c| c.1.is_zero()) {
            coeffs.pop();
        }
        SignedSchurPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[(i8, SchurVector)] {
        &self.coeffs
    }

    /// The polynomial with the signs applied.
    pub fn signed(&self) -> SchurPoly {
        SchurPoly::new(self.coeffs.iter().map(|(s, v)| if *s < 0 { -v } else { v.clone() }).collect())
    }

    /// The polynomial with every sign dropped.
    pub fn unsigned(&self) -> SchurPoly {
        SchurPoly::new(self.coeffs.iter().map(|(_, v)| v.clone()).collect())
    }

    /// Signed sum of the coefficients, i.e. the value at `t = 1`.
    pub fn eval_at_one(&self) -> SchurVector {
        let mut out = SchurVector::zero();
        for c in self.signed().coeffs() {
            out += c;
        }
        out
    }
}

impl fmt::Display for SignedSchurPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.signed(), f)
    }
}

impl fmt::Debug for SignedSchurPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_params(m: i64, d: i64) -> Result<(i64, i64)> {
    if m < 0 || d < 1 {
        return Err(Error::InvalidParams(format!("need m >= 0 and d >= 1, got m={m} d={d}")));
    }
    Ok((m, d))
}

fn sign(i: i64) -> i8 {
    if i % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `s_(arm, 1^leg)`, or `None` when degenerate.
fn hook(arm: i64, leg: i64) -> Option<SchurVector> {
    Partition::hook(arm, leg).ok().map(SchurVector::s)
}

fn s_row(n: i64) -> SchurVector {
    SchurVector::s(Partition::row(n as usize))
}

/// Characteristic polynomial
/// `sum_{i<d} (-1)^i (s_(m+d-i,1^i) + s_(m+d-i+1,1^{i-1})) t^{d-i} + (-1)^d s_(m+1,1^{d-1})`,
/// dropping the `1^{-1}` summand at `i = 0`.
pub fn char_poly(m: i64, d: i64) -> Result<SignedSchurPoly> {
    let (m, d) = check_params(m, d)?;
    let mut terms = Vec::new();
    for i in 0..d {
        let mut v = hook(m + d - i, i).expect("arm >= 1");
        if let Some(extra) = hook(m + d - i + 1, i - 1) {
            v += &extra;
        }
        terms.push(((d - i) as usize, sign(i), v));
    }
    terms.push((0, sign(d), hook(m + 1, d - 1).expect("arm >= 1")));
    Ok(SignedSchurPoly::from_terms(terms))
}

/// Reduced characteristic polynomial `sum_{i=1}^d (-1)^{i-1} s_(m+d-i+1,1^{i-1}) t^{d-i}`.
pub fn reduced_char_poly(m: i64, d: i64) -> Result<SignedSchurPoly> {
    let (m, d) = check_params(m, d)?;
    let terms =
        (1..=d).map(|i| ((d - i) as usize, sign(i - 1), hook(m + d - i + 1, i - 1).expect("arm >= 1"))).collect();
    Ok(SignedSchurPoly::from_terms(terms))
}

/// `(m+d-2i, (d-2i+1)^i) / ((d-2i-1)^i)`, or `None` when not a skew shape.
pub fn kl_shape(m: i64, d: i64, i: i64) -> Option<SkewShape> {
    let outer = Partition::from_blocks(&[(m + d - 2 * i, 1), (d - 2 * i + 1, i)]).ok()?;
    let inner = Partition::from_blocks(&[(d - 2 * i - 1, i)]).ok()?;
    SkewShape::new(outer, inner).ok()
}

/// Kazhdan-Lusztig polynomial `sum_i s_{(m+d-2i,(d-2i+1)^i)/((d-2i-1)^i)} t^i`.
pub fn kl_poly(m: i64, d: i64) -> Result<SchurPoly> {
    let (m, d) = check_params(m, d)?;
    let coeffs = (0..=(d - 1) / 2).map(|i| kl_shape(m, d, i).map(|s| skew_expand(&s)).unwrap_or_default()).collect();
    Ok(SchurPoly::new(coeffs))
}

/// Same polynomial written as `s_(m+d) + sum_{i>=1} sum_{b=1}^{min(m,d-2i)} s_(m+d-2i-b+1, b+1, 2^{i-1}) t^i`.
pub fn kl_poly_hook_form(m: i64, d: i64) -> Result<SchurPoly> {
    let (m, d) = check_params(m, d)?;
    let mut coeffs = vec![s_row(m + d)];
    for i in 1..=(d - 1) / 2 {
        let mut v = SchurVector::zero();
        for b in 1..=m.min(d - 2 * i) {
            if let Ok(p) = Partition::from_blocks(&[(m + d - 2 * i - b + 1, 1), (b + 1, 1), (2, i - 1)]) {
                v += &SchurVector::s(p);
            }
        }
        coeffs.push(v);
    }
    Ok(SchurPoly::new(coeffs))
}

/// Inverse Kazhdan-Lusztig polynomial `sum_i s_(m+1, 2^i, 1^{d-2i-1}) t^i`.
pub fn inverse_kl_poly(m: i64, d: i64) -> Result<SchurPoly> {
    let (m, d) = check_params(m, d)?;
    let coeffs = (0..=(d - 1) / 2)
        .map(|i| {
            Partition::from_blocks(&[(m + 1, 1), (2, i), (1, d - 2 * i - 1)]).map(SchurVector::s).unwrap_or_default()
        })
        .collect();
    Ok(SchurPoly::new(coeffs))
}

/// Report on `lhs == rhs`, one cell per power of `t`; mismatches carry
/// `lhs - rhs`.
pub fn identity_report(lhs: &SchurPoly, rhs: &SchurPoly) -> CheckReport {
    let n = lhs.coeffs().len().max(rhs.coeffs().len());
    let witnesses: Vec<Witness> = (0..n)
        .filter_map(|k| {
            let diff = &lhs.coeff(k) - &rhs.coeff(k);
            (!diff.is_zero()).then_some(Witness { i: k, j: k, difference: diff })
        })
        .collect();
    CheckReport { verdict: witnesses.is_empty(), witnesses, cells_checked: n }
}

fn poly_product_sum(items: &[(i64, &SchurPoly, &SchurPoly)]) -> SchurPoly {
    let n = items.iter().map(|(_, a, b)| a.coeffs().len() + b.coeffs().len()).max().unwrap_or(0);
    let coeffs = (0..n)
        .map(|k| {
            let mut triples = Vec::new();
            for &(s, a, b) in items {
                for (i, ai) in a.coeffs().iter().enumerate() {
                    if k >= i && k - i < b.coeffs().len() {
                        triples.push((s, ai, &b.coeffs()[k - i]));
                    }
                }
            }
            schur_product_sum(&triples)
        })
        .collect();
    SchurPoly::new(coeffs)
}

/// `t^d P(1/t) = sum_{k=0}^{d-1} H_{B_k} P_{m,d-k} + H_{m,d}` with `H_{B_0} = 1`.
pub fn kl_defining_recursion_check(m: i64, d: i64) -> Result<CheckReport> {
    let (m, d) = check_params(m, d)?;
    let lhs = kl_poly(m, d)?.reversed(d as usize);
    let mut parts: Vec<(SchurPoly, SchurPoly)> = Vec::new();
    for k in 0..d {
        let h =
            if k == 0 { SchurPoly::constant(SchurVector::s(Partition::empty())) } else { char_poly(0, k)?.signed() };
        parts.push((h, kl_poly(m, d - k)?));
    }
    let items: Vec<_> = parts.iter().map(|(h, p)| (1, h, p)).collect();
    let rhs = poly_product_sum(&items).add(&char_poly(m, d)?.signed());
    Ok(identity_report(&lhs, &rhs))
}

/// `Q_{m,d} = -sum_{k=1}^{d-1} (-1)^k P_{B_k} Q_{m,d-k} - (-1)^d P_{m,d}`.
pub fn inverse_kl_recursion_check(m: i64, d: i64) -> Result<CheckReport> {
    let (m, d) = check_params(m, d)?;
    let lhs = inverse_kl_poly(m, d)?;
    let mut parts: Vec<(i64, SchurPoly, SchurPoly)> = Vec::new();
    for k in 1..d {
        parts.push((-(sign(k) as i64), kl_poly(0, k)?, inverse_kl_poly(m, d - k)?));
    }
    let items: Vec<_> = parts.iter().map(|(s, a, b)| (*s, a, b)).collect();
    let mut rhs = poly_product_sum(&items);
    let p = kl_poly(m, d)?;
    rhs = if sign(d) > 0 { rhs.sub(&p) } else { rhs.add(&p) };
    Ok(identity_report(&lhs, &rhs))
}

/// `(m+k-d+2i, (k-d+2i+1)^{d-i-k}) / ((k-d+2i-1)^{d-i-k})`.
fn z_shape(m: i64, d: i64, i: i64, k: i64) -> Option<SkewShape> {
    let base = k - d + 2 * i;
    let reps = d - i - k;
    let outer = Partition::from_blocks(&[(m + base, 1), (base + 1, reps)]).ok()?;
    let inner = Partition::from_blocks(&[(base - 1, reps)]).ok()?;
    SkewShape::new(outer, inner).ok()
}

/// Z-polynomial from its coefficient formulas and palindromic symmetry.
pub fn z_poly(m: i64, d: i64) -> Result<SchurPoly> {
    let (m, d) = check_params(m, d)?;
    let mut coeffs = vec![SchurVector::zero(); d as usize + 1];
    coeffs[0] = s_row(m + d);
    coeffs[d as usize] = s_row(m + d);
    for i in 1..=d / 2 {
        let mut v = SchurVector::zero();
        for k in (d - 2 * i + 1)..=(d - i) {
            if let Some(shape) = z_shape(m, d, i, k) {
                let sk = skew_expand(&shape);
                let row = s_row(k);
                v += &schur_product_sum(&[(1, &sk, &row)]);
            }
        }
        coeffs[(d - i) as usize] = v.clone();
        coeffs[i as usize] = v;
    }
    Ok(SchurPoly::new(coeffs))
}

/// Z-polynomial as `sum_{k<d} s_(k) P_{m,d-k} t^k + s_(m+d) t^d`.
pub fn z_poly_from_definition(m: i64, d: i64) -> Result<SchurPoly> {
    let (m, d) = check_params(m, d)?;
    let mut out = SchurPoly::new(vec![SchurVector::zero(); d as usize].into_iter().chain([s_row(m + d)]).collect());
    for k in 0..d {
        let row = SchurPoly::constant(s_row(k));
        out = out.add(&row.mul(&kl_poly(m, d - k)?).shift(k as usize));
    }
    Ok(out)
}

pub fn braid_b7_chp() -> SchurPoly {
    data::braid_b7().poly
}

pub fn remark_example_poly() -> SchurPoly {
    data::remark().poly
}

/// The 47-term difference `c_1^2 - c_0 c_2` recorded alongside the braid data.
pub fn braid_b7_recorded_difference() -> SchurVector {
    data::braid_b7().differences.remove(0).difference
}
