//! Induced log-concavity of polynomials with Schur-vector coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{midpoint_pair, sort_split, Partition, SkewShape};
use crate::schur::{dimension, generic_degree, schur_product_sum, skew_expand, SchurVector};

/// Polynomial in `t` whose coefficients are Schur vectors; trailing zero
/// coefficients are trimmed.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SchurPoly {
    coeffs: Vec<SchurVector>,
}

impl SchurPoly {
    pub fn new(mut coeffs: Vec<SchurVector>) -> Self {
        while coeffs.last().is_some_and(SchurVector::is_zero) {
            coeffs.pop();
        }
        SchurPoly { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(v: SchurVector) -> Self {
        Self::new(vec![v])
    }

    pub fn coeffs(&self) -> &[SchurVector] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> SchurVector {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Every coefficient is Schur positive.
    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(SchurVector::is_schur_positive)
    }

    /// `t^d p(1/t)`, padding with zeros; `d` must be at least the degree.
    pub fn reversed(&self, d: usize) -> SchurPoly {
        assert!(self.coeffs.len() <= d + 1, "reversal degree below polynomial degree");
        SchurPoly::new((0..=d).map(|i| self.coeff(d - i)).collect())
    }

    /// `p(t) = t^d p(1/t)` with `d` the degree.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    pub fn add(&self, other: &SchurPoly) -> SchurPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        SchurPoly::new((0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &SchurPoly) -> SchurPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        SchurPoly::new((0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    /// Product with coefficients multiplied by `schur_product`.
    pub fn mul(&self, other: &SchurPoly) -> SchurPoly {
        if self.is_zero() || other.is_zero() {
            return SchurPoly::zero();
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let coeffs = (0..n)
            .map(|k| {
                let items: Vec<_> = (0..self.coeffs.len())
                    .filter(|&i| k >= i && k - i < other.coeffs.len())
                    .map(|i| (1, &self.coeffs[i], &other.coeffs[k - i]))
                    .collect();
                schur_product_sum(&items)
            })
            .collect();
        SchurPoly::new(coeffs)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> SchurPoly {
        if self.is_zero() {
            return SchurPoly::zero();
        }
        let mut coeffs = vec![SchurVector::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        SchurPoly::new(coeffs)
    }
}

impl fmt::Display for SchurPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SchurPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    pub difference: SchurVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub verdict: bool,
    pub witnesses: Vec<Witness>,
    pub cells_checked: usize,
}

impl CheckReport {
    fn from_cells(cells: Vec<(usize, usize, SchurVector)>, cells_checked: usize) -> Self {
        let mut witnesses: Vec<Witness> = cells
            .into_iter()
            .filter(|(_, _, d)| !d.is_schur_positive())
            .map(|(i, j, difference)| Witness { i, j, difference })
            .collect();
        witnesses.sort_by_key(|w| (w.i, w.j));
        CheckReport { verdict: witnesses.is_empty(), witnesses, cells_checked }
    }

    /// A single-cell report on `difference`.
    pub fn single(i: usize, j: usize, difference: SchurVector) -> Self {
        Self::from_cells(vec![(i, j, difference)], 1)
    }

    /// Combines reports, keeping witnesses sorted.
    pub fn merge(reports: impl IntoIterator<Item = CheckReport>) -> Self {
        let mut witnesses = Vec::new();
        let mut cells_checked = 0;
        for r in reports {
            witnesses.extend(r.witnesses);
            cells_checked += r.cells_checked;
        }
        witnesses.sort_by_key(|w| (w.i, w.j));
        CheckReport { verdict: witnesses.is_empty(), witnesses, cells_checked }
    }
}

/// `c_i c_j - c_{i-1} c_{j+1}`.
pub fn ilc_difference(p: &SchurPoly, i: usize, j: usize) -> SchurVector {
    let (a, b) = (p.coeff(i), p.coeff(j));
    let (c, d) = (p.coeff(i - 1), p.coeff(j + 1));
    schur_product_sum(&[(1, &a, &b), (-1, &c, &d)])
}

fn check_cells(p: &SchurPoly, pairs: impl Iterator<Item = (usize, usize)>) -> Result<CheckReport> {
    if !p.is_positive() {
        return Err(Error::NotHonest);
    }
    let deg = p.degree().unwrap_or(0);
    let mut cells = Vec::new();
    let mut checked = 0;
    for (i, j) in pairs {
        checked += 1;
        // c_{deg+1} = 0, so the boundary cell is a product of positive vectors.
        if j == deg {
            continue;
        }
        cells.push((i, j, ilc_difference(p, i, j)));
    }
    Ok(CheckReport::from_cells(cells, checked))
}

/// `c_i^2 - c_{i-1} c_{i+1}` Schur positive for every `i >= 1`.
pub fn check_ilc(p: &SchurPoly) -> Result<CheckReport> {
    let deg = p.degree().unwrap_or(0);
    check_cells(p, (1..=deg).map(|i| (i, i)))
}

/// `c_i c_j - c_{i-1} c_{j+1}` Schur positive for every `1 <= i <= j`.
pub fn check_strong_ilc(p: &SchurPoly) -> Result<CheckReport> {
    let deg = p.degree().unwrap_or(0);
    check_cells(p, (1..=deg).flat_map(move |i| (i..=deg).map(move |j| (i, j))))
}

/// `(t + 1) p(t)`.
pub fn times_t_plus_one(p: &SchurPoly) -> SchurPoly {
    p.add(&p.shift(1))
}

/// `p(t + 1)`.
pub fn substitute_t_plus_one(p: &SchurPoly) -> SchurPoly {
    let n = p.coeffs.len();
    let coeffs = (0..n)
        .map(|i| {
            let mut acc = SchurVector::zero();
            for j in i..n {
                acc += &p.coeffs[j].scale(&binomial(BigInt::from(j), BigInt::from(i)));
            }
            acc
        })
        .collect();
    SchurPoly::new(coeffs)
}

/// The skew shape `(n+ki, (a+ki)^{ci+d}) / ((b+ki)^{ci+d})`.
pub fn skew_family_shape(n: i64, k: i64, a: i64, b: i64, c: i64, d: i64, i: i64) -> Result<SkewShape> {
    let inapplicable = |e: Error| Error::Inapplicable(format!("shape at index {i}: {e}"));
    let reps = c * i + d;
    let outer = Partition::from_blocks(&[(n + k * i, 1), (a + k * i, reps)]).map_err(inapplicable)?;
    let inner = Partition::from_blocks(&[(b + k * i, reps)]).map_err(inapplicable)?;
    SkewShape::new(outer, inner).map_err(inapplicable)
}

/// Log-concavity at `i` of the skew family `(n+ki, (a+ki)^{ci+d}) / ((b+ki)^{ci+d})`.
#[allow(clippy::too_many_arguments)]
pub fn verify_skew_family(n: i64, k: i64, a: i64, b: i64, c: i64, d: i64, i: i64) -> Result<CheckReport> {
    if i < 1 {
        return Err(Error::Inapplicable(format!("index {i} must be at least 1")));
    }
    let prev = skew_expand(&skew_family_shape(n, k, a, b, c, d, i - 1)?);
    let mid = skew_expand(&skew_family_shape(n, k, a, b, c, d, i)?);
    let next = skew_expand(&skew_family_shape(n, k, a, b, c, d, i + 1)?);
    let diff = schur_product_sum(&[(1, &mid, &mid), (-1, &prev, &next)]);
    Ok(CheckReport::single(i as usize, i as usize, diff))
}

/// `s_(q,1^a) s_(p,1^b) - s_(q+1,1^{a-1}) s_(p-1,1^{b+1})`, with the
/// degenerate hook `(0,1^{b+1})` read as zero.
pub fn hook_corollary_difference(a: i64, b: i64, p: i64, q: i64) -> Result<SchurVector> {
    if !(1 <= a && a <= b && 1 <= p && p <= q) {
        return Err(Error::Inapplicable(format!("need 1 <= a <= b and 1 <= p <= q, got a={a} b={b} p={p} q={q}")));
    }
    let hook = |arm: i64, leg: i64| Partition::hook(arm, leg).map(SchurVector::s).unwrap_or_default();
    let (l1, l2) = (hook(q, a), hook(p, b));
    let (r1, r2) = (hook(q + 1, a - 1), hook(p - 1, b + 1));
    Ok(schur_product_sum(&[(1, &l1, &l2), (-1, &r1, &r2)]))
}

pub fn verify_hook_corollary(a: i64, b: i64, p: i64, q: i64) -> Result<CheckReport> {
    Ok(CheckReport::single(1, 1, hook_corollary_difference(a, b, p, q)?))
}

fn pair_difference(x: &SkewShape, y: &SkewShape, first: SkewShape, second: SkewShape) -> CheckReport {
    let (sx, sy) = (skew_expand(x), skew_expand(y));
    let (s1, s2) = (skew_expand(&first), skew_expand(&second));
    CheckReport::single(1, 1, schur_product_sum(&[(1, &s1, &s2), (-1, &sx, &sy)]))
}

fn constructed(outer: Partition, inner: Partition) -> Result<SkewShape> {
    SkewShape::new(outer, inner).map_err(|e| Error::Inapplicable(e.to_string()))
}

/// `s_{ceil/ceil} s_{floor/floor} - s_x s_y`.
pub fn verify_lpp_midpoint(x: &SkewShape, y: &SkewShape) -> Result<CheckReport> {
    let (oc, of) = midpoint_pair(x.outer(), y.outer());
    let (ic, iff) = midpoint_pair(x.inner(), y.inner());
    Ok(pair_difference(x, y, constructed(oc, ic)?, constructed(of, iff)?))
}

/// `s_{sort1/sort1} s_{sort2/sort2} - s_x s_y`.
pub fn verify_lpp_sort(x: &SkewShape, y: &SkewShape) -> Result<CheckReport> {
    let (o1, o2) = sort_split(x.outer(), y.outer());
    let (i1, i2) = sort_split(x.inner(), y.inner());
    Ok(pair_difference(x, y, constructed(o1, i1)?, constructed(o2, i2)?))
}

/// Integer polynomial in `t`, trimmed.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn abs(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(Signed::abs).collect() }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let unit = mag == BigInt::from(1);
            match i {
                0 => out.push_str(&mag.to_string()),
                1 if unit => out.push('t'),
                1 => out.push_str(&format!("{mag}t")),
                _ if unit => out.push_str(&format!("t^{i}")),
                _ => out.push_str(&format!("{mag}t^{i}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Dimension of every coefficient.
pub fn dimension_poly(p: &SchurPoly) -> IntPoly {
    IntPoly::new(p.coeffs.iter().map(dimension).collect())
}

/// Generic-degree dimension of every coefficient at the integer `q`.
pub fn q_dimension_poly(p: &SchurPoly, q: u64) -> IntPoly {
    let q = BigInt::from(q);
    IntPoly::new(p.coeffs.iter().map(|v| v.iter().map(|(lam, c)| c * generic_degree(lam).eval(&q)).sum()).collect())
}

/// `a_i^2 >= a_{i-1} a_{i+1}` for every interior index.
pub fn is_log_concave(p: &IntPoly) -> bool {
    let a = &p.coeffs;
    (1..a.len().saturating_sub(1)).all(|i| &a[i] * &a[i] >= &a[i - 1] * &a[i + 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> SchurVector {
        SchurVector::s(Partition::new(v.to_vec()).unwrap())
    }

    fn v(pairs: &[(&[usize], i64)]) -> SchurVector {
        SchurVector::from_pairs(pairs)
    }

    fn sk(o: &[usize], i: &[usize]) -> SkewShape {
        SkewShape::new(Partition::new(o.to_vec()).unwrap(), Partition::new(i.to_vec()).unwrap()).unwrap()
    }

    fn remark() -> SchurPoly {
        SchurPoly::new(vec![
            v(&[(&[2], 4)]),
            v(&[(&[2], 2), (&[1, 1], 4)]),
            v(&[(&[2], 1), (&[1, 1], 4)]),
            v(&[(&[1, 1], 4)]),
        ])
    }

    #[test]
    fn ilc_examples() {
        let r = check_ilc(&remark()).unwrap();
        assert!(r.verdict);
        assert_eq!(r.cells_checked, 3);
        assert!(check_ilc(&SchurPoly::new(vec![s(&[2]), s(&[1, 1])])).unwrap().verdict);
        assert_eq!(ilc_difference(&remark(), 1, 1), v(&[(&[1, 1, 1, 1], 16), (&[2, 1, 1], 16), (&[2, 2], 16)]));
        assert_eq!(ilc_difference(&remark(), 2, 2), v(&[(&[2, 2], 1), (&[3, 1], 1), (&[4], 1)]));
    }

    #[test]
    fn strong_ilc_examples() {
        let r = check_strong_ilc(&remark()).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!((r.witnesses[0].i, r.witnesses[0].j), (1, 2));
        assert_eq!(
            r.witnesses[0].difference,
            v(&[(&[1, 1, 1, 1], 16), (&[2, 1, 1], 12), (&[2, 2], 18), (&[3, 1], -2), (&[4], 2)])
        );
        assert_eq!(r.cells_checked, 6);
        // unsigned reduced characteristic polynomial of U_{1,3}
        let h = SchurPoly::new(vec![s(&[2, 1, 1]), s(&[3, 1]), s(&[4])]);
        assert!(check_strong_ilc(&h).unwrap().verdict);
        let c = check_strong_ilc(&SchurPoly::constant(s(&[3]))).unwrap();
        assert!(c.verdict);
        assert_eq!(c.cells_checked, 0);
    }

    #[test]
    fn dishonest_input_is_refused() {
        let p = SchurPoly::new(vec![s(&[2]), -s(&[1, 1])]);
        assert_eq!(check_ilc(&p), Err(Error::NotHonest));
        assert_eq!(check_strong_ilc(&p), Err(Error::NotHonest));
    }

    #[test]
    fn transformations() {
        let p = SchurPoly::new(vec![s(&[2]), s(&[1, 1])]);
        assert_eq!(times_t_plus_one(&p), SchurPoly::new(vec![s(&[2]), s(&[2]) + s(&[1, 1]), s(&[1, 1])]));
        assert_eq!(times_t_plus_one(&SchurPoly::zero()), SchurPoly::zero());
        let h = SchurPoly::new(vec![s(&[2, 1]), s(&[3])]);
        assert_eq!(times_t_plus_one(&h), SchurPoly::new(vec![s(&[2, 1]), s(&[2, 1]) + s(&[3]), s(&[3])]));

        let sq = SchurPoly::new(vec![SchurVector::zero(), SchurVector::zero(), s(&[2])]);
        let two = s(&[2]).scale(&BigInt::from(2));
        assert_eq!(substitute_t_plus_one(&sq), SchurPoly::new(vec![s(&[2]), two, s(&[2])]));
        assert_eq!(substitute_t_plus_one(&SchurPoly::constant(s(&[3]))), SchurPoly::constant(s(&[3])));
        assert_eq!(substitute_t_plus_one(&p), SchurPoly::new(vec![s(&[2]) + s(&[1, 1]), s(&[1, 1])]));
    }

    #[test]
    fn skew_family_examples() {
        assert!(verify_skew_family(6, -2, 6, 4, 1, 0, 1).unwrap().verdict);
        let r = verify_skew_family(4, 0, 2, 1, 0, 1, 1).unwrap();
        assert!(r.verdict);
        assert!(r.witnesses.is_empty());
        assert!(verify_skew_family(6, 1, 2, 1, 1, 0, 1).unwrap().verdict);
        assert!(matches!(verify_skew_family(2, -2, 2, 1, 1, 0, 1), Err(Error::Inapplicable(_))));
    }

    #[test]
    fn hook_corollary_examples() {
        assert_eq!(
            hook_corollary_difference(1, 1, 2, 2).unwrap(),
            v(&[(&[4, 2], 1), (&[3, 3], 1), (&[3, 2, 1], 2), (&[2, 2, 2], 1), (&[2, 2, 1, 1], 1)])
        );
        assert!(verify_hook_corollary(1, 2, 1, 1).unwrap().verdict);
        assert!(verify_hook_corollary(2, 2, 3, 3).unwrap().verdict);
        assert!(matches!(verify_hook_corollary(2, 1, 1, 1), Err(Error::Inapplicable(_))));
    }

    #[test]
    fn lpp_examples() {
        let x = sk(&[3, 1], &[]);
        let r = verify_lpp_midpoint(&x, &x).unwrap();
        assert!(r.verdict);
        assert_eq!(r.cells_checked, 1);
        assert!(verify_lpp_sort(&x, &x).unwrap().verdict);

        let r = verify_lpp_midpoint(&sk(&[5], &[]), &sk(&[1], &[])).unwrap();
        assert!(r.verdict);
        assert!(verify_lpp_sort(&sk(&[2, 1, 1, 1, 1], &[]), &sk(&[2, 2, 2], &[])).unwrap().verdict);
        assert!(verify_lpp_sort(&sk(&[2, 1, 1, 1], &[]), &sk(&[2, 2, 2], &[])).unwrap().verdict);
    }

    #[test]
    fn midpoint_difference_matches_pieri() {
        let (three, five, one) = (s(&[3]), s(&[5]), s(&[1]));
        let expected = schur_product_sum(&[(1, &three, &three), (-1, &five, &one)]);
        assert_eq!(expected, v(&[(&[3, 3], 1), (&[4, 2], 1)]));
    }

    #[test]
    fn dimension_examples() {
        let p = SchurPoly::new(vec![s(&[4]), s(&[2, 2])]);
        assert_eq!(dimension_poly(&p), IntPoly::from_i64(&[1, 2]));
        assert_eq!(q_dimension_poly(&p, 2), IntPoly::from_i64(&[1, 20]));
        assert_eq!(q_dimension_poly(&p, 1), dimension_poly(&p));
        assert_eq!(dimension_poly(&SchurPoly::zero()), IntPoly::default());
    }

    #[test]
    fn log_concavity_of_integer_sequences() {
        assert!(is_log_concave(&IntPoly::from_i64(&[1, 2])));
        assert!(!is_log_concave(&IntPoly::from_i64(&[1, 3, 2, 4])));
        assert!(is_log_concave(&IntPoly::from_i64(&[2, -3, 1]).abs()));
    }

    #[test]
    fn text_formats() {
        assert_eq!(IntPoly::from_i64(&[1, 2]).to_string(), "1 + 2t");
        assert_eq!(IntPoly::from_i64(&[1, 2, 1]).to_string(), "1 + 2t + t^2");
        assert_eq!(IntPoly::from_i64(&[2, -3, 1]).to_string(), "2 - 3t + t^2");
        assert_eq!(SchurPoly::new(vec![s(&[4]), s(&[2, 2])]).to_string(), "(s(4)) + (s(2,2))t");
    }
}
