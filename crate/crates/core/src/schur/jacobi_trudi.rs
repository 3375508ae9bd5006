use std::collections::HashMap;

use num_bigint::BigInt;

use super::{pieri_multiply, SchurVector};
use crate::partition::{Partition, SkewShape};

/// `s_{outer/inner}` as `det(h_{outer_i - inner_j - i + j})`.
///
/// Each h-monomial is converted to the Schur basis by repeated Pieri steps
/// starting from `s_()`, so nothing here touches the tableau enumeration.
pub fn jacobi_trudi_expand(s: &SkewShape) -> SchurVector {
    let n = s.outer().len();
    let entry = |i: usize, j: usize| -> i64 { s.outer().get(i) as i64 - s.inner().get(j) as i64 - i as i64 + j as i64 };
    let mut monomials: HashMap<Vec<usize>, i64> = HashMap::new();
    let mut used = vec![false; n];
    let mut factors = Vec::with_capacity(n);
    expand_rows(0, n, &entry, &mut used, &mut factors, 0, &mut monomials);

    let mut out = SchurVector::zero();
    let mut keys: Vec<_> = monomials.into_iter().filter(|(_, c)| *c != 0).collect();
    keys.sort();
    for (factors, c) in keys {
        let mut v = SchurVector::s(Partition::empty());
        for &k in &factors {
            v = pieri_multiply(&v, k);
        }
        out += &v.scale(&BigInt::from(c));
    }
    out
}

fn expand_rows(
    i: usize,
    n: usize,
    entry: &dyn Fn(usize, usize) -> i64,
    used: &mut [bool],
    factors: &mut Vec<usize>,
    inversions: usize,
    out: &mut HashMap<Vec<usize>, i64>,
) {
    if i == n {
        let mut key: Vec<usize> = factors.iter().copied().filter(|&k| k > 0).collect();
        key.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        *out.entry(key).or_insert(0) += sign;
        return;
    }
    for j in 0..n {
        if used[j] {
            continue;
        }
        let k = entry(i, j);
        if k < 0 {
            continue;
        }
        let larger_used = used[j + 1..].iter().filter(|&&u| u).count();
        used[j] = true;
        factors.push(k as usize);
        expand_rows(i + 1, n, entry, used, factors, inversions + larger_used, out);
        factors.pop();
        used[j] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sk(o: &[usize], i: &[usize]) -> SkewShape {
        SkewShape::new(Partition::new(o.to_vec()).unwrap(), Partition::new(i.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(jacobi_trudi_expand(&sk(&[4, 4], &[2])), SchurVector::from_pairs(&[(&[4, 2], 1)]));
        assert_eq!(jacobi_trudi_expand(&sk(&[2, 1], &[])), SchurVector::from_pairs(&[(&[2, 1], 1)]));
        assert_eq!(jacobi_trudi_expand(&sk(&[6, 5, 4], &[3, 2])), jacobi_trudi_expand(&sk(&[6, 4, 3], &[2, 1])));
        assert_eq!(jacobi_trudi_expand(&sk(&[], &[])), SchurVector::from_pairs(&[(&[], 1)]));
    }
}
