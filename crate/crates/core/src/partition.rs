//! Partitions and skew shapes.
//!
//! A [`Partition`] is always stored trimmed (no trailing zeros) and weakly
//! decreasing; every constructor that could produce something else returns
//! [`Error::Degenerate`] instead of silently repairing the input.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from its parts, trimming trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Degenerate(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; `(0)` is the empty partition.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Builds a partition from exponent notation: `[(a, k), (b, l)]` is
    /// `(a^k, b^l)`.
    ///
    /// A block with `k == 0` is absent. A negative count, or a negative part
    /// with a positive count, is degenerate. Zero parts are allowed only
    /// where they end up trailing.
    pub fn from_blocks(blocks: &[(i64, i64)]) -> Result<Self> {
        let mut parts = Vec::new();
        for &(part, count) in blocks {
            if count < 0 {
                return Err(Error::Degenerate(format!("negative repetition {part}^{count}")));
            }
            if count == 0 {
                continue;
            }
            if part < 0 {
                return Err(Error::Degenerate(format!("negative part {part}^{count}")));
            }
            parts.extend(std::iter::repeat_n(part as usize, count as usize));
        }
        Self::new(parts)
    }

    /// The hook `(arm, 1^leg)`; degenerate when `arm == 0`.
    pub fn hook(arm: i64, leg: i64) -> Result<Self> {
        if arm <= 0 {
            return Err(Error::Degenerate(format!("hook with first part {arm}")));
        }
        Self::from_blocks(&[(arm, 1), (1, leg)])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-indexed), or 0 past the end.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// True when the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.get(0);
        let parts = (0..width).map(|j| self.parts.iter().take_while(|&&p| p > j).count()).collect();
        Partition { parts }
    }

    /// Hook length of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                hooks.push((row - j - 1) + (conj.parts[j] - i - 1) + 1);
            }
        }
        hooks
    }

    /// `sum_i (i - 1) * parts[i]` with rows indexed from 1.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// All partitions of `n` in descending lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `self` (including the empty one and `self`).
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(bound: &[usize], i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: cur.clone() });
            if i == bound.len() {
                return;
            }
            for p in 1..=bound[i].min(max) {
                cur.push(p);
                rec(bound, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.parts, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A skew shape `outer / inner` with `inner` contained in `outer`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Degenerate(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(p: Partition) -> Self {
        SkewShape { outer: p, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Rotates the diagram by 180 degrees inside the `len(outer) x outer[0]`
    /// rectangle.
    pub fn rotate180(&self) -> SkewShape {
        let rows = self.outer.len();
        let width = self.outer.get(0);
        let outer = (0..rows).map(|i| width - self.inner.get(rows - 1 - i)).collect();
        let inner = (0..rows).map(|i| width - self.outer.get(rows - 1 - i)).collect();
        // Complements of partitions in a rectangle are partitions.
        SkewShape {
            outer: Partition::new(outer).expect("rectangle complement"),
            inner: Partition::new(inner).expect("rectangle complement"),
        }
    }

    /// Drops empty rows at the top and bottom and empty columns on the left,
    /// none of which change the skew Schur function.
    pub fn normalized(&self) -> SkewShape {
        let mut outer = self.outer.parts.clone();
        let mut inner: Vec<usize> = (0..outer.len()).map(|i| self.inner.get(i)).collect();
        while !outer.is_empty() && outer[0] == inner[0] {
            outer.remove(0);
            inner.remove(0);
        }
        while !outer.is_empty() && outer.last() == inner.last() {
            outer.pop();
            inner.pop();
        }
        let shift = inner.last().copied().unwrap_or(0);
        for (o, i) in outer.iter_mut().zip(inner.iter_mut()) {
            *o -= shift;
            *i -= shift;
        }
        SkewShape {
            outer: Partition::new(outer).expect("trimmed partition"),
            inner: Partition::new(inner).expect("trimmed partition"),
        }
    }

    /// Every skew shape whose outer partition has size at most `max_outer`.
    pub fn all_with_outer_size_at_most(max_outer: usize) -> Vec<SkewShape> {
        let mut out = Vec::new();
        for n in 0..=max_outer {
            for outer in Partition::all(n) {
                for inner in outer.subpartitions() {
                    out.push(SkewShape { outer: outer.clone(), inner });
                }
            }
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{:?}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut pieces = s.trim().splitn(2, '/');
        let outer: Partition = pieces.next().unwrap_or("").parse()?;
        let inner: Partition = match pieces.next() {
            Some(t) => t.parse()?,
            None => Partition::empty(),
        };
        SkewShape::new(outer, inner)
    }
}

/// Merges the parts of `a` and `b` in decreasing order and deals them out
/// alternately: odd positions to the first result, even positions to the
/// second.
pub fn sort_split(a: &Partition, b: &Partition) -> (Partition, Partition) {
    let mut all: Vec<usize> = a.parts.iter().chain(&b.parts).copied().collect();
    all.sort_unstable_by(|x, y| y.cmp(x));
    let first = all.iter().step_by(2).copied().collect();
    let second = all.iter().skip(1).step_by(2).copied().collect();
    (Partition { parts: first }, Partition { parts: second })
}

/// Coordinate-wise `(ceil((a+b)/2), floor((a+b)/2))` after zero padding.
pub fn midpoint_pair(a: &Partition, b: &Partition) -> (Partition, Partition) {
    let n = a.len().max(b.len());
    let sums: Vec<usize> = (0..n).map(|i| a.get(i) + b.get(i)).collect();
    let ceil = sums.iter().map(|s| s.div_ceil(2)).collect();
    let floor = sums.iter().map(|s| s / 2).collect();
    (Partition::new(ceil).expect("sum of partitions halved"), Partition::new(floor).expect("sum of partitions halved"))
}

/// The star operation on an ordered pair of partitions, padded with zeros to
/// a common length:
///
/// `lambda_k = mu_k - k + #{j : nu_j - j >= mu_k - k}`,
/// `rho_j = nu_j - j + 1 + #{k : mu_k - k > nu_j - j}`.
pub fn star_pair(mu: &Partition, nu: &Partition) -> Result<(Partition, Partition)> {
    let n = mu.len().max(nu.len());
    let m: Vec<i64> = (0..n).map(|k| mu.get(k) as i64 - (k as i64 + 1)).collect();
    let v: Vec<i64> = (0..n).map(|j| nu.get(j) as i64 - (j as i64 + 1)).collect();
    let lambda: Vec<i64> = m.iter().map(|&mk| mk + v.iter().filter(|&&vj| vj >= mk).count() as i64).collect();
    let rho: Vec<i64> = v.iter().map(|&vj| vj + 1 + m.iter().filter(|&&mk| mk > vj).count() as i64).collect();
    let to_partition = |xs: Vec<i64>| -> Result<Partition> {
        if xs.iter().any(|&x| x < 0) {
            return Err(Error::Degenerate(format!("star operation produced {xs:?}")));
        }
        Partition::new(xs.into_iter().map(|x| x as usize).collect())
    };
    Ok((to_partition(lambda)?, to_partition(rho)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn skew(o: &[usize], i: &[usize]) -> SkewShape {
        SkewShape::new(p(o), p(i)).unwrap()
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[3, 2, 0]), p(&[3, 2]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
    }

    #[test]
    fn exponent_notation() {
        assert_eq!(Partition::from_blocks(&[(3, 1), (2, 2), (1, 3)]).unwrap(), p(&[3, 2, 2, 1, 1, 1]));
        assert_eq!(Partition::from_blocks(&[(4, 1), (1, 0)]).unwrap(), p(&[4]));
        assert!(matches!(Partition::from_blocks(&[(4, 1), (1, -1)]), Err(Error::Degenerate(_))));
        assert!(matches!(Partition::from_blocks(&[(-1, 2)]), Err(Error::Degenerate(_))));
        assert!(matches!(Partition::hook(0, 3), Err(Error::Degenerate(_))));
        assert_eq!(Partition::from_blocks(&[(2, 1), (0, 3)]).unwrap(), p(&[2]));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn conjugate_is_an_involution() {
        for n in 0..=9 {
            for lam in Partition::all(n) {
                let c = lam.conjugate();
                assert_eq!(c.size(), n);
                assert_eq!(c.conjugate(), lam);
            }
        }
    }

    #[test]
    fn rotate_examples() {
        assert_eq!(skew(&[6, 5, 4], &[3, 2]).rotate180(), skew(&[6, 4, 3], &[2, 1]));
        assert_eq!(skew(&[5], &[]).rotate180(), skew(&[5], &[]));
        // (n+ki,(a+ki)^{ci+d})/((b+ki)^{ci+d}) at (n,k,a,b,c,d,i)=(5,1,2,1,1,0,1),
        // rotated: (n+ki,(n-b)^{ci+d})/((n-a)^{ci+d}).
        let s = SkewShape::new(
            Partition::from_blocks(&[(6, 1), (3, 1)]).unwrap(),
            Partition::from_blocks(&[(2, 1)]).unwrap(),
        )
        .unwrap();
        let expected = SkewShape::new(
            Partition::from_blocks(&[(6, 1), (4, 1)]).unwrap(),
            Partition::from_blocks(&[(3, 1)]).unwrap(),
        )
        .unwrap();
        assert_eq!(s.rotate180(), expected);
    }

    #[test]
    fn rotation_is_an_involution_up_to_normalization() {
        for s in SkewShape::all_with_outer_size_at_most(8) {
            let r = s.rotate180();
            assert_eq!(r.size(), s.size());
            assert_eq!(r.rotate180().normalized(), s.normalized(), "{s:?}");
            let n = s.normalized();
            assert_eq!(n.rotate180().rotate180(), n, "{s:?}");
        }
    }

    #[test]
    fn sort_split_examples() {
        let a = Partition::from_blocks(&[(2, 1), (2, 0), (1, 3)]).unwrap();
        let b = Partition::from_blocks(&[(2, 1), (2, 2), (1, 0)]).unwrap();
        assert_eq!((a.clone(), b.clone()), (p(&[2, 1, 1, 1]), p(&[2, 2, 2])));
        assert_eq!(sort_split(&a, &b), (p(&[2, 2, 1, 1]), p(&[2, 2, 1])));
        // (m+1,2^{i-1},1^{d-2i+1}) and (m+1,2^{i+1},1^{d-2i-3}) at m=1, d=5, i=1
        let a = Partition::from_blocks(&[(2, 1), (2, 0), (1, 4)]).unwrap();
        assert_eq!(sort_split(&a, &b), (p(&[2, 2, 1, 1]), p(&[2, 2, 1, 1])));
        assert_eq!(sort_split(&p(&[3, 1]), &p(&[2, 2])), (p(&[3, 2]), p(&[2, 1])));
        assert_eq!(sort_split(&Partition::empty(), &Partition::empty()), (Partition::empty(), Partition::empty()));
    }

    #[test]
    fn midpoint_examples() {
        assert_eq!(midpoint_pair(&p(&[5]), &p(&[1])), (p(&[3]), p(&[3])));
        assert_eq!(midpoint_pair(&p(&[4, 2]), &p(&[4, 2])), (p(&[4, 2]), p(&[4, 2])));
        assert_eq!(midpoint_pair(&p(&[3]), &p(&[2, 1])), (p(&[3, 1]), p(&[2])));
    }

    #[test]
    fn star_examples() {
        assert_eq!(star_pair(&p(&[2]), &p(&[2, 1, 1])).unwrap(), (p(&[2, 1]), p(&[2, 1])));
        assert_eq!(star_pair(&p(&[3]), &p(&[2, 1])).unwrap(), (p(&[2]), p(&[3, 1])));
        assert_eq!(star_pair(&p(&[3]), &p(&[3])).unwrap(), (p(&[3]), p(&[3])));
    }

    #[test]
    fn star_matches_hook_cases() {
        // Closed forms for ((m,1^i),(n,1^j))^*.
        for m in 1..=4i64 {
            for n in 1..=4i64 {
                for i in 0..=3i64 {
                    for j in 0..=3i64 {
                        let mu = Partition::hook(m, i).unwrap();
                        let nu = Partition::hook(n, j).unwrap();
                        let expected = match (m <= n, i < j) {
                            (true, true) => (Partition::hook(m, j - 1), Partition::hook(n, i + 1)),
                            (true, false) => (Partition::hook(m, j), Partition::hook(n, i)),
                            (false, true) => (Partition::hook(m - 1, j - 1), Partition::hook(n + 1, i + 1)),
                            (false, false) => (Partition::hook(m - 1, j), Partition::hook(n + 1, i)),
                        };
                        let (l, r) = star_pair(&mu, &nu).unwrap();
                        assert_eq!(l.size() + r.size(), mu.size() + nu.size());
                        assert_eq!((l, r), (expected.0.unwrap(), expected.1.unwrap()), "m={m} n={n} i={i} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn hook_length_examples() {
        let mut h = p(&[2, 1]).hook_lengths();
        h.sort();
        assert_eq!(h, vec![1, 1, 3]);
        assert_eq!(p(&[4]).hook_lengths(), vec![4, 3, 2, 1]);
        assert_eq!(p(&[2, 2]).hook_lengths(), vec![3, 2, 2, 1]);
    }

    #[test]
    fn n_stat_examples() {
        assert_eq!(p(&[2]).n_stat(), 0);
        assert_eq!(p(&[1, 1]).n_stat(), 1);
        assert_eq!(p(&[2, 1]).n_stat(), 1);
    }

    #[test]
    fn text_format() {
        let s: SkewShape = "6,5,4/3,2".parse().unwrap();
        assert_eq!(s, skew(&[6, 5, 4], &[3, 2]));
        assert_eq!(s.to_string(), "6,5,4/3,2");
        assert_eq!("3/-".parse::<SkewShape>().unwrap(), skew(&[3], &[]));
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert!(matches!("2/3".parse::<SkewShape>(), Err(Error::Degenerate(_))));
        assert!(matches!("2,x".parse::<Partition>(), Err(Error::Parse(_))));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let four = Partition::all(4);
        assert_eq!(four, vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
    }
}
