use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::Partition;

/// Integer polynomial in `q`, stored densely from the constant term up with
/// no trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn monomial(exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = BigInt::one();
        QPoly { coeffs }
    }

    /// `[k]_q = 1 + q + ... + q^(k-1)`.
    pub fn q_integer(k: usize) -> Self {
        QPoly { coeffs: vec![BigInt::one(); k] }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return QPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    /// Exact division by a monic polynomial; `None` if there is a remainder.
    pub fn div_exact_monic(&self, d: &QPoly) -> Option<QPoly> {
        let dd = d.degree()?;
        debug_assert!(d.coeffs[dd].is_one());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return rem.iter().all(Zero::is_zero).then(QPoly::default);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &c * di;
            }
            quot[k] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| QPoly::new(quot))
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| match e {
                0 => c.to_string(),
                1 if c.is_one() => "q".to_string(),
                1 => format!("{c}q"),
                _ if c.is_one() => format!("q^{e}"),
                _ => format!("{c}q^{e}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Generic degree of the unipotent representation indexed by `p`:
/// `q^{n(p)} [n]_q! / prod_c [h(c)]_q`.
pub fn generic_degree(p: &Partition) -> QPoly {
    let mut num = QPoly::monomial(p.n_stat());
    for k in 1..=p.size() {
        num = num.mul(&QPoly::q_integer(k));
    }
    let mut hooks = p.hook_lengths();
    hooks.sort_unstable_by(|a, b| b.cmp(a));
    for h in hooks {
        num = num.div_exact_monic(&QPoly::q_integer(h)).expect("q-hook formula divides exactly");
    }
    num
}
