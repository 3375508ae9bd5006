//! Exact arithmetic in the Schur basis.

mod hook;
mod jacobi_trudi;
pub mod lr;
mod qpoly;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::partition::{Partition, SkewShape};

pub use hook::{hook_product_closed_form, hook_product_six_sums};
pub use jacobi_trudi::jacobi_trudi_expand;
pub use qpoly::{generic_degree, QPoly};

/// A finite integer combination of Schur functions. Zero coefficients are
/// never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SchurVector {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single Schur function `s_p`.
    pub fn s(p: Partition) -> Self {
        Self::term(p, BigInt::one())
    }

    pub fn term(p: Partition, c: impl Into<BigInt>) -> Self {
        let mut v = Self::zero();
        v.add_term(p, c.into());
        v
    }

    /// Builds a vector from `(parts, coefficient)` pairs; panics on
    /// non-partitions, so it is meant for literals.
    pub fn from_pairs(pairs: &[(&[usize], i64)]) -> Self {
        let mut v = Self::zero();
        for &(parts, c) in pairs {
            v.add_term(Partition::new(parts.to_vec()).expect("literal partition"), BigInt::from(c));
        }
        v
    }

    pub fn add_term(&mut self, p: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, p: &Partition) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lexicographic order of the partition.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn is_schur_positive(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn is_homogeneous(&self, n: usize) -> bool {
        self.terms.keys().all(|p| p.size() == n)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        SchurVector { terms: self.terms.iter().map(|(p, c)| (p.clone(), c * k)).collect() }
    }

    /// Negative part of the vector, as a list of offending terms.
    pub fn negative_terms(&self) -> Vec<(Partition, BigInt)> {
        self.iter().filter(|(_, c)| c.is_negative()).map(|(p, c)| (p.clone(), c.clone())).collect()
    }
}

impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.iter().enumerate() {
            let mag = c.abs();
            let sign = if c.is_negative() {
                "-"
            } else if k > 0 {
                "+"
            } else {
                ""
            };
            let sep = if k > 0 { " " } else { "" };
            let space = if k > 0 { " " } else { "" };
            if mag.is_one() {
                write!(f, "{sep}{sign}{space}s{p:?}")?;
            } else {
                write!(f, "{sep}{sign}{space}{mag}s{p:?}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl AddAssign<&SchurVector> for SchurVector {
    fn add_assign(&mut self, rhs: &SchurVector) {
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), c.clone());
        }
    }
}

impl SubAssign<&SchurVector> for SchurVector {
    fn sub_assign(&mut self, rhs: &SchurVector) {
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), -c);
        }
    }
}

impl Add for &SchurVector {
    type Output = SchurVector;
    fn add(self, rhs: &SchurVector) -> SchurVector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &SchurVector {
    type Output = SchurVector;
    fn sub(self, rhs: &SchurVector) -> SchurVector {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for SchurVector {
    type Output = SchurVector;
    fn add(mut self, rhs: SchurVector) -> SchurVector {
        self += &rhs;
        self
    }
}

impl Sub for SchurVector {
    type Output = SchurVector;
    fn sub(mut self, rhs: SchurVector) -> SchurVector {
        self -= &rhs;
        self
    }
}

impl Neg for &SchurVector {
    type Output = SchurVector;
    fn neg(self) -> SchurVector {
        SchurVector { terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect() }
    }
}

impl Neg for SchurVector {
    type Output = SchurVector;
    fn neg(self) -> SchurVector {
        -&self
    }
}

impl FromIterator<(Partition, BigInt)> for SchurVector {
    fn from_iter<I: IntoIterator<Item = (Partition, BigInt)>>(iter: I) -> Self {
        let mut v = SchurVector::zero();
        for (p, c) in iter {
            v.add_term(p, c);
        }
        v
    }
}

/// Number of Littlewood-Richardson tableaux of shape `lam / mu` and content
/// `nu`; zero when the sizes do not match or `mu` does not fit in `lam`.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    lr::lr_tableaux_count(lam, mu, nu)
}

/// Dense accumulator over the partitions of each size. Machine integers are
/// used until something overflows.
struct Accumulator {
    dense: HashMap<usize, Vec<i128>>,
}

impl Accumulator {
    fn add_product(&mut self, a: &Partition, b: &Partition, coeff: i128) -> Option<()> {
        let n = a.size() + b.size();
        let len = lr::size_table(n).partitions.len();
        let slots = self.dense.entry(n).or_insert_with(|| vec![0; len]);
        for &(id, c) in lr::product_terms(a, b).iter() {
            let slot = &mut slots[id as usize];
            *slot = slot.checked_add(coeff.checked_mul(c as i128)?)?;
        }
        Some(())
    }

    fn finish(self) -> SchurVector {
        let mut out = SchurVector::zero();
        for (n, slots) in self.dense {
            let table = lr::size_table(n);
            for (id, c) in slots.into_iter().enumerate() {
                if c != 0 {
                    out.terms.insert(table.partitions[id].clone(), BigInt::from(c));
                }
            }
        }
        out
    }
}

/// `sum_k sign_k * f_k * g_k` over the given triples.
pub fn schur_product_sum(items: &[(i64, &SchurVector, &SchurVector)]) -> SchurVector {
    if let Some(v) = product_sum_small(items) {
        return v;
    }
    let mut out: HashMap<Partition, BigInt> = HashMap::new();
    for &(sign, f, g) in items {
        for (a, ca) in &f.terms {
            for (b, cb) in &g.terms {
                let k = ca * cb * sign;
                let table = lr::size_table(a.size() + b.size());
                for &(id, c) in lr::product_terms(a, b).iter() {
                    *out.entry(table.partitions[id as usize].clone()).or_default() += &k * c;
                }
            }
        }
    }
    out.into_iter().collect()
}

fn product_sum_small(items: &[(i64, &SchurVector, &SchurVector)]) -> Option<SchurVector> {
    let mut acc = Accumulator { dense: HashMap::new() };
    for &(sign, f, g) in items {
        for (a, ca) in &f.terms {
            let ca = ca.to_i64()? as i128;
            for (b, cb) in &g.terms {
                let cb = cb.to_i64()? as i128;
                let k = ca.checked_mul(cb)?.checked_mul(sign as i128)?;
                acc.add_product(a, b, k)?;
            }
        }
    }
    Some(acc.finish())
}

pub fn schur_product(f: &SchurVector, g: &SchurVector) -> SchurVector {
    schur_product_sum(&[(1, f, g)])
}

/// `f * s_(n)` by adding horizontal strips of size `n`.
pub fn pieri_multiply(f: &SchurVector, n: usize) -> SchurVector {
    let mut out = SchurVector::zero();
    for (lam, c) in &f.terms {
        for mu in horizontal_strips(lam, n) {
            out.add_term(mu, c.clone());
        }
    }
    out
}

/// All `mu` containing `lam` with `mu / lam` a horizontal strip of size `n`.
pub fn horizontal_strips(lam: &Partition, n: usize) -> Vec<Partition> {
    fn rec(lam: &Partition, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > lam.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("strip extension"));
            }
            return;
        }
        let base = lam.get(i);
        let cap = if i == 0 { left } else { (lam.get(i - 1) - base).min(left) };
        for add in 0..=cap {
            cur.push(base + add);
            rec(lam, i + 1, left - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lam, 0, n, &mut Vec::new(), &mut out);
    out
}

/// `s_{outer/inner}` in the Schur basis.
pub fn skew_expand(s: &SkewShape) -> SchurVector {
    lr::skew_contents(s.outer(), s.inner()).into_iter().map(|(p, c)| (p, BigInt::from(c))).collect()
}

pub fn is_schur_positive(f: &SchurVector) -> bool {
    f.is_schur_positive()
}

/// Number of standard Young tableaux of shape `p`.
pub fn standard_tableaux(p: &Partition) -> BigInt {
    let mut num: BigInt = (1..=p.size()).map(BigInt::from).product();
    let den: BigInt = p.hook_lengths().into_iter().map(BigInt::from).product();
    num /= den;
    num
}

/// Dimension of the virtual representation with Frobenius image `f`.
pub fn dimension(f: &SchurVector) -> BigInt {
    f.terms.iter().map(|(p, c)| c * standard_tableaux(p)).sum()
}
