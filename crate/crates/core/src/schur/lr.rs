//! Littlewood-Richardson tableau enumeration.
//!
//! Tableaux are filled row by row, top to bottom. The reverse reading word
//! reads each row right to left, so inside a row the letters arrive in
//! decreasing order and the lattice condition reduces to a per-row check on
//! the counts accumulated in earlier rows:
//!
//! `before[k] + row[k] <= before[k - 1]` for every letter `k >= 2`.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;

use crate::partition::Partition;

/// Search space for one enumeration.
struct Search<'a> {
    inner: &'a [usize],
    /// Fixed outer shape; `None` lets the outer shape grow.
    outer: Option<&'a [usize]>,
    /// Fixed content; `None` allows any lattice content.
    content: Option<&'a [usize]>,
    total: usize,
}

struct State {
    gamma: Vec<usize>,
    prev: Vec<usize>,
    counts: Vec<usize>,
    row_counts: Vec<usize>,
    placed: usize,
}

impl Search<'_> {
    fn inner_at(&self, r: usize) -> usize {
        self.inner.get(r).copied().unwrap_or(0)
    }

    fn run(&self, emit: &mut dyn FnMut(&[usize], &[usize])) {
        let letters = match (self.content, self.outer) {
            (Some(c), _) => c.len(),
            (None, Some(o)) => o.len(),
            (None, None) => self.total,
        };
        let mut st = State {
            gamma: Vec::new(),
            prev: Vec::new(),
            counts: vec![0; letters],
            row_counts: vec![0; letters],
            placed: 0,
        };
        self.row(0, &mut st, emit);
    }

    fn row(&self, r: usize, st: &mut State, emit: &mut dyn FnMut(&[usize], &[usize])) {
        if st.placed == self.total {
            match self.outer {
                Some(outer) => {
                    if (r..outer.len()).all(|i| outer[i] == self.inner_at(i)) {
                        emit(outer, &st.counts);
                    }
                }
                None => {
                    let mut gamma = st.gamma.clone();
                    gamma.extend(self.inner.iter().skip(r));
                    emit(&gamma, &st.counts);
                }
            }
            return;
        }
        let start = self.inner_at(r);
        let end = match self.outer {
            Some(outer) => {
                if r >= outer.len() {
                    return;
                }
                outer[r]
            }
            None => {
                let room = start + (self.total - st.placed);
                if r == 0 {
                    room
                } else {
                    room.min(st.gamma[r - 1])
                }
            }
        };
        let kmax = (r + 1).min(st.counts.len());
        self.letter(r, 1, kmax, start, end, st, emit);
    }

    #[allow(clippy::too_many_arguments)]
    fn letter(
        &self,
        r: usize,
        k: usize,
        kmax: usize,
        col: usize,
        end: usize,
        st: &mut State,
        emit: &mut dyn FnMut(&[usize], &[usize]),
    ) {
        if k > kmax {
            let start = self.inner_at(r);
            if self.outer.is_some() && col != end {
                return;
            }
            if self.outer.is_none() && col == start && r >= self.inner.len() {
                return;
            }
            self.commit_row(r, col, st, emit);
            return;
        }
        let idx = k - 1;
        let mut nmax = end - col;
        if let Some(content) = self.content {
            nmax = nmax.min(content[idx] - st.counts[idx]);
        }
        if k >= 2 {
            nmax = nmax.min(st.counts[idx - 1] - st.counts[idx]);
        }
        if r > 0 {
            // Column strictness: letter k may only sit below inner cells or entries < k.
            let above_start = self.inner_at(r - 1);
            let below_k = st.prev.iter().take_while(|&&e| e < k).count();
            let limit = above_start + below_k;
            nmax = nmax.min(limit.saturating_sub(col));
        }
        for n in 0..=nmax {
            st.row_counts[idx] = n;
            self.letter(r, k + 1, kmax, col + n, end, st, emit);
        }
        st.row_counts[idx] = 0;
    }

    fn commit_row(&self, r: usize, col: usize, st: &mut State, emit: &mut dyn FnMut(&[usize], &[usize])) {
        let row: Vec<usize> =
            st.row_counts.iter().enumerate().flat_map(|(i, &n)| std::iter::repeat_n(i + 1, n)).collect();
        let added = row.len();
        let saved_row_counts = st.row_counts.clone();
        for (c, n) in st.counts.iter_mut().zip(&saved_row_counts) {
            *c += n;
        }
        st.placed += added;
        st.gamma.push(col);
        let saved_prev = std::mem::replace(&mut st.prev, row);
        st.row_counts.iter_mut().for_each(|x| *x = 0);

        self.row(r + 1, st, emit);

        st.prev = saved_prev;
        st.gamma.pop();
        st.placed -= added;
        for (c, n) in st.counts.iter_mut().zip(&saved_row_counts) {
            *c -= n;
        }
        st.row_counts = saved_row_counts;
    }
}

fn trimmed(counts: &[usize]) -> Partition {
    Partition::new(counts.to_vec()).expect("lattice content is a partition")
}

/// Number of LR tableaux of shape `outer / inner` and content `content`.
pub fn lr_tableaux_count(outer: &Partition, inner: &Partition, content: &Partition) -> u64 {
    if !outer.contains(inner) || outer.size() != inner.size() + content.size() {
        return 0;
    }
    let search = Search {
        inner: inner.parts(),
        outer: Some(outer.parts()),
        content: Some(content.parts()),
        total: content.size(),
    };
    let mut count = 0;
    search.run(&mut |_, counts| {
        if counts == content.parts() {
            count += 1;
        }
    });
    count
}

/// Contents of all LR tableaux of the skew shape, with multiplicity.
pub fn skew_contents(outer: &Partition, inner: &Partition) -> HashMap<Partition, u64> {
    let search =
        Search { inner: inner.parts(), outer: Some(outer.parts()), content: None, total: outer.size() - inner.size() };
    let mut out = HashMap::new();
    search.run(&mut |_, counts| {
        *out.entry(trimmed(counts)).or_insert(0) += 1;
    });
    out
}

/// Outer shapes of all LR tableaux with inner shape `base` and content
/// `content`: the Schur expansion of `s_base * s_content`.
pub fn product_outer_shapes(base: &Partition, content: &Partition) -> HashMap<Partition, u64> {
    let search = Search { inner: base.parts(), outer: None, content: Some(content.parts()), total: content.size() };
    let mut out = HashMap::new();
    search.run(&mut |gamma, _| {
        *out.entry(trimmed(gamma)).or_insert(0) += 1;
    });
    out
}

/// Dense index of the partitions of one size.
pub struct SizeTable {
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, u32>,
}

impl SizeTable {
    pub fn id(&self, p: &Partition) -> u32 {
        self.index[p]
    }
}

static TABLES: OnceLock<DashMap<usize, Arc<SizeTable>>> = OnceLock::new();

pub fn size_table(n: usize) -> Arc<SizeTable> {
    let tables = TABLES.get_or_init(DashMap::new);
    if let Some(t) = tables.get(&n) {
        return t.clone();
    }
    let partitions = Partition::all(n);
    let index = partitions.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
    let table = Arc::new(SizeTable { partitions, index });
    tables.entry(n).or_insert(table).clone()
}

/// Expansion of `s_a * s_b` as `(id in size_table(|a|+|b|), coefficient)`.
pub type ProductTerms = Arc<[(u32, u64)]>;

static MEMO_ENABLED: AtomicBool = AtomicBool::new(true);
static PRODUCT_MEMO: OnceLock<DashMap<(Partition, Partition), ProductTerms>> = OnceLock::new();

/// Turns the process-wide product memo on or off. Results never depend on it.
pub fn set_memo_enabled(enabled: bool) {
    MEMO_ENABLED.store(enabled, Ordering::SeqCst);
}

pub fn memo_enabled() -> bool {
    MEMO_ENABLED.load(Ordering::SeqCst)
}

pub fn clear_memo() {
    if let Some(m) = PRODUCT_MEMO.get() {
        m.clear();
    }
}

pub fn memo_len() -> usize {
    PRODUCT_MEMO.get().map_or(0, |m| m.len())
}

/// Factors `(a, b)` and the terms of `s_a s_b`.
pub type MemoEntry = (Partition, Partition, Vec<(Partition, u64)>);

/// Snapshot of the memo as `(a, b, [(gamma, coefficient)])`.
pub fn memo_snapshot() -> Vec<MemoEntry> {
    let Some(memo) = PRODUCT_MEMO.get() else {
        return Vec::new();
    };
    let mut out: Vec<_> = memo
        .iter()
        .map(|entry| {
            let (a, b) = entry.key();
            let table = size_table(a.size() + b.size());
            let terms = entry.value().iter().map(|&(id, c)| (table.partitions[id as usize].clone(), c)).collect();
            (a.clone(), b.clone(), terms)
        })
        .collect();
    out.sort_by(|x, y| (&x.0, &x.1).cmp(&(&y.0, &y.1)));
    out
}

/// Seeds the memo with previously computed products. Entries are trusted.
pub fn memo_preload(entries: Vec<MemoEntry>) {
    let memo = PRODUCT_MEMO.get_or_init(DashMap::new);
    for (a, b, terms) in entries {
        let table = size_table(a.size() + b.size());
        let ids: Vec<(u32, u64)> = terms.iter().map(|(p, c)| (table.id(p), *c)).collect();
        memo.insert(ordered_key(&a, &b), ids.into());
    }
}

fn ordered_key(a: &Partition, b: &Partition) -> (Partition, Partition) {
    if (a.size(), a) <= (b.size(), b) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

fn compute_product(a: &Partition, b: &Partition) -> ProductTerms {
    // Fewer content letters means a smaller search tree.
    let (base, content) = if (b.size(), b.len()) <= (a.size(), a.len()) { (a, b) } else { (b, a) };
    let table = size_table(a.size() + b.size());
    let mut terms: Vec<(u32, u64)> =
        product_outer_shapes(base, content).into_iter().map(|(g, c)| (table.id(&g), c)).collect();
    terms.sort_unstable();
    terms.into()
}

pub fn product_terms(a: &Partition, b: &Partition) -> ProductTerms {
    if !memo_enabled() {
        return compute_product(a, b);
    }
    let memo = PRODUCT_MEMO.get_or_init(DashMap::new);
    let key = ordered_key(a, b);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let terms = compute_product(&key.0, &key.1);
    memo.entry(key).or_insert(terms).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn counts_match_known_values() {
        assert_eq!(lr_tableaux_count(&p(&[4, 2]), &p(&[2, 1]), &p(&[2, 1])), 1);
        assert_eq!(lr_tableaux_count(&p(&[4, 4]), &p(&[2]), &p(&[3, 3])), 0);
        assert_eq!(lr_tableaux_count(&p(&[3, 1]), &p(&[3, 1]), &p(&[])), 1);
        assert_eq!(lr_tableaux_count(&p(&[2]), &p(&[1]), &p(&[1])), 1);
        // c^{(5,4,3,2)}_{(3,3,1),(4,3)} = 2, c^{...}_{(3,3,1),(4,2,1)} = 3
        assert_eq!(lr_tableaux_count(&p(&[5, 4, 3, 2]), &p(&[3, 3, 1]), &p(&[4, 3])), 2);
        assert_eq!(lr_tableaux_count(&p(&[5, 4, 3, 2]), &p(&[3, 3, 1]), &p(&[4, 2, 1])), 3);
        assert_eq!(lr_tableaux_count(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
    }

    #[test]
    fn mismatched_inputs_give_zero() {
        assert_eq!(lr_tableaux_count(&p(&[1]), &p(&[1]), &p(&[1])), 0);
        assert_eq!(lr_tableaux_count(&p(&[1, 1, 1]), &p(&[2]), &p(&[1])), 0);
    }

    #[test]
    fn product_of_two_boxes() {
        let terms = product_outer_shapes(&p(&[1]), &p(&[1]));
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[&p(&[2])], 1);
        assert_eq!(terms[&p(&[1, 1])], 1);
    }

    #[test]
    fn memo_does_not_change_results() {
        let a = p(&[3, 2, 1]);
        let b = p(&[2, 2]);
        let with = product_terms(&a, &b);
        let swapped = product_terms(&b, &a);
        set_memo_enabled(false);
        let without = product_terms(&a, &b);
        set_memo_enabled(true);
        assert_eq!(&*with, &*without);
        assert_eq!(&*with, &*swapped);
    }
}
