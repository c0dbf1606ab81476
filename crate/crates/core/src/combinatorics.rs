//! Interval partitions, compositions, permutations, and the auxiliary set
//! operations everything else is built from.
//!
//! Ground sets live in the positive integers. A labeled interval partition is
//! a finite family of pairwise disjoint integer intervals; its standardized
//! form forgets the labels and keeps only the ordered block sizes, which is
//! exactly a composition. Permutations are kept in one-line notation.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A set of consecutive integers `{start, ..., start + len - 1}` with
/// `start >= 1` and `len >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    start: usize,
    len: usize,
}

impl Interval {
    pub fn new(start: usize, len: usize) -> Result<Self> {
        if start == 0 {
            return Err(Error::invalid("interval", "start must be >= 1"));
        }
        if len == 0 {
            return Err(Error::invalid("interval", "length must be >= 1"));
        }
        Ok(Interval { start, len })
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// Largest element (inclusive).
    pub fn end(&self) -> usize {
        self.start + self.len - 1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.start <= x && x <= self.end()
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        self.start..=self.end()
    }

    fn overlaps(&self, other: &Interval) -> bool {
        self.start <= other.end() && other.start <= self.end()
    }

    fn is_subset_of(&self, other: &Interval) -> bool {
        other.start <= self.start && self.end() <= other.end()
    }
}

/// An interval partition of a finite subset of the positive integers:
/// pairwise disjoint intervals, stored sorted by start. May be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LabeledIntervalPartition {
    blocks: Vec<Interval>,
}

impl LabeledIntervalPartition {
    pub fn new(mut blocks: Vec<Interval>) -> Result<Self> {
        blocks.sort();
        for w in blocks.windows(2) {
            if w[0].end() >= w[1].start {
                return Err(Error::invalid(
                    "interval partition",
                    format!(
                        "blocks [{},{}] and [{},{}] are not disjoint",
                        w[0].start,
                        w[0].end(),
                        w[1].start,
                        w[1].end()
                    ),
                ));
            }
        }
        Ok(LabeledIntervalPartition { blocks })
    }

    pub fn empty() -> Self {
        LabeledIntervalPartition { blocks: Vec::new() }
    }

    /// Builds a partition from explicit element sets; each set must be a run
    /// of consecutive integers. Convenient for tests and small examples.
    pub fn from_sets(sets: &[&[usize]]) -> Result<Self> {
        let mut blocks = Vec::with_capacity(sets.len());
        for set in sets {
            let mut v: Vec<usize> = set.to_vec();
            v.sort_unstable();
            v.dedup();
            if v.is_empty() {
                return Err(Error::invalid("interval partition", "empty block"));
            }
            if v.last().unwrap() - v[0] + 1 != v.len() {
                return Err(Error::invalid(
                    "interval partition",
                    format!("block {:?} is not an interval", v),
                ));
            }
            blocks.push(Interval::new(v[0], v.len())?);
        }
        LabeledIntervalPartition::new(blocks)
    }

    pub fn blocks(&self) -> &[Interval] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Number of elements in the ground set.
    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(Interval::len).sum()
    }

    /// Ground set as a sorted vector.
    pub fn ground_set(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ground_size());
        for b in &self.blocks {
            out.extend(b.elements());
        }
        out
    }

    /// True when some single block contains both `x` and `x + 1`.
    pub fn spans_pair(&self, x: usize) -> bool {
        self.blocks.iter().any(|b| b.contains(x) && b.contains(x + 1))
    }
}

impl fmt::Display for LabeledIntervalPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if b.len == 1 {
                write!(f, "{{{}}}", b.start)?;
            } else {
                write!(f, "{{{}..{}}}", b.start, b.end())?;
            }
        }
        write!(f, "}}")
    }
}

/// Outcome of comparing two partitions (or two compositions) under
/// refinement order: `Less` means the left argument is strictly finer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartialOrderResult {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// An ordered sequence of positive block sizes; the standardized form of an
/// interval partition. The empty composition is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::invalid("composition", "parts must be >= 1"));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn single(n: usize) -> Self {
        assert!(n >= 1, "single block must have size >= 1");
        Composition { parts: vec![n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn block_count(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition { parts }
    }

    /// The interval partition of `[n]` with these block sizes.
    pub fn canonical_partition(&self) -> LabeledIntervalPartition {
        let mut blocks = Vec::with_capacity(self.parts.len());
        let mut start = 1;
        for &p in &self.parts {
            blocks.push(Interval { start, len: p });
            start += p;
        }
        LabeledIntervalPartition { blocks }
    }

    /// True when `self` refines `coarser`: equal sizes and every part of
    /// `coarser` is a sum of consecutive parts of `self`.
    pub fn refines(&self, coarser: &Composition) -> bool {
        if self.size() != coarser.size() {
            return false;
        }
        let mut i = 0;
        for &c in &coarser.parts {
            let mut acc = 0;
            while acc < c {
                if i >= self.parts.len() {
                    return false;
                }
                acc += self.parts[i];
                i += 1;
            }
            if acc != c {
                return false;
            }
        }
        i == self.parts.len()
    }

    /// Refinement order on compositions of equal size.
    pub fn partial_order(&self, other: &Composition) -> PartialOrderResult {
        if self == other {
            PartialOrderResult::Equal
        } else if self.refines(other) {
            PartialOrderResult::Less
        } else if other.refines(self) {
            PartialOrderResult::Greater
        } else {
            PartialOrderResult::Incomparable
        }
    }

    /// Standardized restriction to a subset `a` of the ground set `[n]`
    /// (elements are 1-based). Equals `standardize_partition(restrict(canonical, a))`.
    pub fn restrict(&self, a: &[usize]) -> Composition {
        standardize_partition(&restrict(&self.canonical_partition(), a))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::invalid("composition", format!("expected [..] form, got {s:?}")))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Composition::empty());
        }
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            let p: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::invalid("composition", format!("bad part {tok:?}")))?;
            parts.push(p);
        }
        Composition::new(parts)
    }
}

// Graded order: size first, then componentwise on the parts. Keeps linear
// combinations and printed output deterministic.
impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

/// A permutation of `[n]` in one-line notation; the empty permutation is
/// allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in &one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::invalid(
                    "permutation",
                    format!("{:?} is not a bijection of [{}]", one_line, n),
                ));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn empty() -> Self {
        Permutation { one_line: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.one_line.len()
    }

    pub fn is_empty(&self) -> bool {
        self.one_line.is_empty()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// Shifted concatenation: values of `other` are moved above `self`.
    pub fn concat(&self, other: &Permutation) -> Permutation {
        let m = self.len();
        let mut one_line = self.one_line.clone();
        one_line.extend(other.one_line.iter().map(|&v| v + m));
        Permutation { one_line }
    }

    /// Standardization of the subword at the given 1-based positions.
    pub fn restrict_st(&self, positions: &[usize]) -> Permutation {
        let idx: Vec<usize> = positions.iter().map(|&p| p - 1).collect();
        subword_standardize(&self.one_line, &idx)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.one_line.is_empty() {
            return write!(f, "e");
        }
        if self.one_line.len() <= 9 {
            for v in &self.one_line {
                write!(f, "{}", v)?;
            }
            Ok(())
        } else {
            write!(f, "(")?;
            for (i, v) in self.one_line.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", v)?;
            }
            write!(f, ")")
        }
    }
}

impl std::str::FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "e" {
            return Ok(Permutation::empty());
        }
        let values: Vec<usize> = if t.contains(',') {
            t.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::invalid("permutation", format!("bad entry {tok:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::invalid("permutation", format!("bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.one_line.cmp(&other.one_line))
    }
}

/// The coarsest interval partition of a finite set: its maximal runs of
/// consecutive integers. Input order and duplicates are irrelevant.
pub fn cliques(a: &[usize]) -> LabeledIntervalPartition {
    let mut v: Vec<usize> = a.to_vec();
    v.sort_unstable();
    v.dedup();
    assert!(v.first().is_none_or(|&x| x >= 1), "elements must be >= 1");
    let mut blocks = Vec::new();
    let mut i = 0;
    while i < v.len() {
        let start = v[i];
        let mut j = i + 1;
        while j < v.len() && v[j] == v[j - 1] + 1 {
            j += 1;
        }
        blocks.push(Interval {
            start,
            len: j - i,
        });
        i = j;
    }
    LabeledIntervalPartition { blocks }
}

/// The cliques of `a` through `partition`: intersect every block with every
/// maximal run of `a` and drop empties. An interval partition of
/// `a ∩ ground(partition)`.
pub fn restrict(partition: &LabeledIntervalPartition, a: &[usize]) -> LabeledIntervalPartition {
    let runs = cliques(a);
    let mut blocks = Vec::new();
    for block in &partition.blocks {
        for run in &runs.blocks {
            if block.overlaps(run) {
                let start = block.start.max(run.start);
                let end = block.end().min(run.end());
                blocks.push(Interval {
                    start,
                    len: end - start + 1,
                });
            }
        }
    }
    blocks.sort();
    LabeledIntervalPartition { blocks }
}

/// Forgets labels: the composition of block sizes in ground-set order.
pub fn standardize_partition(partition: &LabeledIntervalPartition) -> Composition {
    Composition {
        parts: partition.blocks.iter().map(Interval::len).collect(),
    }
}

/// Merges two interval partitions along overlap-connected components.
///
/// Blocks that merely touch (share no element) stay separate. The result is
/// an interval partition of the union of the two ground sets; the operation
/// is associative with the empty partition as unit.
pub fn glue(
    left: &LabeledIntervalPartition,
    right: &LabeledIntervalPartition,
) -> LabeledIntervalPartition {
    if left.is_empty() {
        return right.clone();
    }
    if right.is_empty() {
        return left.clone();
    }
    let mut all: Vec<Interval> = left.blocks.iter().chain(right.blocks.iter()).copied().collect();
    all.sort();
    let mut blocks: Vec<Interval> = Vec::with_capacity(all.len());
    for iv in all {
        match blocks.last_mut() {
            // strict overlap only: a shared element, not mere adjacency
            Some(last) if iv.start <= last.end() => {
                let end = last.end().max(iv.end());
                last.len = end - last.start + 1;
            }
            _ => blocks.push(iv),
        }
    }
    LabeledIntervalPartition { blocks }
}

fn refines_partition(fine: &LabeledIntervalPartition, coarse: &LabeledIntervalPartition) -> bool {
    // both sorted; every fine block must sit inside one coarse block
    let mut j = 0;
    for b in &fine.blocks {
        while j < coarse.blocks.len() && coarse.blocks[j].end() < b.start {
            j += 1;
        }
        if j >= coarse.blocks.len() || !b.is_subset_of(&coarse.blocks[j]) {
            return false;
        }
    }
    true
}

/// Refinement order on labeled partitions: `Less` when the left argument is
/// a strict refinement of the right one over the same ground set.
pub fn compare(
    left: &LabeledIntervalPartition,
    right: &LabeledIntervalPartition,
) -> PartialOrderResult {
    if left == right {
        return PartialOrderResult::Equal;
    }
    if left.ground_set() != right.ground_set() {
        return PartialOrderResult::Incomparable;
    }
    if refines_partition(left, right) {
        PartialOrderResult::Less
    } else if refines_partition(right, left) {
        PartialOrderResult::Greater
    } else {
        PartialOrderResult::Incomparable
    }
}

/// The unique refinement of `partition` whose standardized form is `shape`,
/// when `shape` refines `standardize_partition(partition)`; `None` otherwise.
pub fn refine_to(
    partition: &LabeledIntervalPartition,
    shape: &Composition,
) -> Option<LabeledIntervalPartition> {
    let mut blocks = Vec::with_capacity(shape.block_count());
    let mut i = 0;
    for b in &partition.blocks {
        let mut covered = 0;
        let mut start = b.start;
        while covered < b.len {
            let p = *shape.parts.get(i)?;
            if covered + p > b.len {
                return None;
            }
            blocks.push(Interval { start, len: p });
            start += p;
            covered += p;
            i += 1;
        }
    }
    if i != shape.block_count() {
        return None;
    }
    Some(LabeledIntervalPartition { blocks })
}

/// The unique interval partition of the set `a` (sorted, duplicate-free) with
/// standardized form `shape`, when one exists.
///
/// The parts of `shape` must tile `a` in order: each part consumes that many
/// consecutive integers of `a`.
pub fn partition_of_shape(a: &[usize], shape: &Composition) -> Option<LabeledIntervalPartition> {
    if a.len() != shape.size() {
        return None;
    }
    let mut blocks = Vec::with_capacity(shape.block_count());
    let mut i = 0;
    for &p in &shape.parts {
        let start = a[i];
        for k in 1..p {
            if a[i + k] != start + k {
                return None;
            }
        }
        blocks.push(Interval { start, len: p });
        i += p;
    }
    Some(LabeledIntervalPartition { blocks })
}

/// Relative order of the letters of `word` at the 0-based indices in `idx`,
/// ties broken left to right. Panics on an out-of-range index.
pub fn subword_standardize<T: PartialOrd>(word: &[T], idx: &[usize]) -> Permutation {
    let mut order: Vec<usize> = (0..idx.len()).collect();
    order.sort_by(|&p, &q| {
        let (a, b) = (&word[idx[p]], &word[idx[q]]);
        a.partial_cmp(b)
            .unwrap_or(Ordering::Equal)
            .then_with(|| idx[p].cmp(&idx[q]))
    });
    let mut one_line = vec![0; idx.len()];
    for (rank, &p) in order.iter().enumerate() {
        one_line[p] = rank + 1;
    }
    Permutation { one_line }
}

/// Shifted-block concatenation of standardized partitions; on compositions
/// this is list append.
pub fn composition_concat(s: &Composition, t: &Composition) -> Composition {
    s.concat(t)
}

/// All compositions of `n`, in canonical order. There are `2^(n-1)` of them
/// for `n >= 1` and exactly the empty composition for `n = 0`.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out = Vec::with_capacity(1 << (n - 1));
    let mut current = Vec::new();
    fn go(rem: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rem == 0 {
            out.push(Composition {
                parts: current.clone(),
            });
            return;
        }
        for p in 1..=rem {
            current.push(p);
            go(rem - p, current, out);
            current.pop();
        }
    }
    go(n, &mut current, &mut out);
    out.sort();
    out
}

/// All permutations of `[n]` in canonical (lexicographic) order.
pub fn permutations_of(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut values: Vec<usize> = (1..=n).collect();
    let mut used = vec![false; n];
    let mut current = Vec::with_capacity(n);
    fn go(
        values: &[usize],
        used: &mut [bool],
        current: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        if current.len() == values.len() {
            out.push(Permutation {
                one_line: current.clone(),
            });
            return;
        }
        for i in 0..values.len() {
            if !used[i] {
                used[i] = true;
                current.push(values[i]);
                go(values, used, current, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    go(&mut values, &mut used, &mut current, &mut out);
    out
}

/// Calls `f` with every `k`-subset of `{0, .., n-1}` as a sorted slice.
pub fn for_each_subset_of_size(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // advance to the next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lip(sets: &[&[usize]]) -> LabeledIntervalPartition {
        LabeledIntervalPartition::from_sets(sets).unwrap()
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn cliques_maximal_runs() {
        assert_eq!(cliques(&[2, 4, 5, 6]), lip(&[&[2], &[4, 5, 6]]));
        assert_eq!(cliques(&[]), LabeledIntervalPartition::empty());
        assert_eq!(cliques(&[1, 2, 3]), lip(&[&[1, 2, 3]]));
    }

    #[test]
    fn restrict_examples() {
        let i = lip(&[&[2, 3], &[4, 5], &[6, 7], &[8]]);
        assert_eq!(restrict(&i, &[2, 4, 5, 6]), lip(&[&[2], &[4, 5], &[6]]));
        let j = lip(&[&[2, 3, 4]]);
        assert_eq!(restrict(&j, &[2, 4, 5]), lip(&[&[2], &[4]]));
        assert_eq!(restrict(&i, &[]), LabeledIntervalPartition::empty());
    }

    #[test]
    fn restrict_refines_cliques_of_intersection() {
        let i = lip(&[&[2, 3], &[4, 5], &[6, 7], &[8]]);
        let a = [2, 4, 5, 6];
        let ia = restrict(&i, &a);
        let ca = cliques(&[2, 4, 5, 6]);
        assert!(matches!(
            compare(&ia, &ca),
            PartialOrderResult::Less | PartialOrderResult::Equal
        ));
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize_partition(&lip(&[&[2], &[4, 5], &[6]])), comp(&[1, 2, 1]));
        assert_eq!(
            standardize_partition(&LabeledIntervalPartition::empty()),
            Composition::empty()
        );
        assert_eq!(
            standardize_partition(&lip(&[&[5], &[6], &[10, 11, 12]])),
            comp(&[1, 1, 3])
        );
    }

    #[test]
    fn glue_examples() {
        let i = lip(&[&[1], &[2], &[3, 4], &[5, 6, 7]]);
        let j = lip(&[&[2, 3], &[4, 5]]);
        assert_eq!(glue(&i, &j), lip(&[&[1], &[2, 3, 4, 5, 6, 7]]));
        assert_eq!(glue(&i, &i), i);
        assert_eq!(
            glue(&lip(&[&[1, 2]]), &lip(&[&[3, 4]])),
            lip(&[&[1, 2], &[3, 4]])
        );
        assert_eq!(glue(&i, &LabeledIntervalPartition::empty()), i);
        assert_eq!(glue(&LabeledIntervalPartition::empty(), &i), i);
    }

    #[test]
    fn compare_examples() {
        let fine = lip(&[&[2], &[3], &[1]]);
        let coarse = lip(&[&[2, 3], &[1]]);
        assert_eq!(compare(&fine, &coarse), PartialOrderResult::Less);
        assert_eq!(compare(&coarse, &fine), PartialOrderResult::Greater);
        assert_eq!(
            compare(&lip(&[&[1, 2], &[3]]), &lip(&[&[1], &[2, 3]])),
            PartialOrderResult::Incomparable
        );
        assert_eq!(compare(&fine, &fine), PartialOrderResult::Equal);
        assert_eq!(
            compare(&lip(&[&[2], &[3], &[1]]), &lip(&[&[5], &[3], &[4]])),
            PartialOrderResult::Incomparable
        );
    }

    #[test]
    fn composition_partial_order() {
        // parts of the coarser side are sums of consecutive runs of the finer
        assert!(comp(&[1, 1, 2, 1]).refines(&comp(&[1, 3, 1])));
        assert!(comp(&[1, 1]).refines(&comp(&[2])));
        assert!(!comp(&[2]).refines(&comp(&[1, 1])));
        assert!(!comp(&[1, 2]).refines(&comp(&[2, 1])));
        assert_eq!(comp(&[1, 1]).partial_order(&comp(&[2])), PartialOrderResult::Less);
        assert_eq!(
            comp(&[1, 2]).partial_order(&comp(&[2, 1])),
            PartialOrderResult::Incomparable
        );
        assert_eq!(comp(&[2]).partial_order(&comp(&[2])), PartialOrderResult::Equal);
    }

    #[test]
    fn refine_to_examples() {
        let i = lip(&[&[5], &[6], &[10, 11, 12]]);
        let s = comp(&[1, 1, 2, 1]);
        assert_eq!(refine_to(&i, &s), Some(lip(&[&[5], &[6], &[10, 11], &[12]])));
        assert_eq!(refine_to(&i, &standardize_partition(&i)), Some(i.clone()));
        assert_eq!(refine_to(&lip(&[&[1, 2]]), &comp(&[1, 2])), None);
    }

    #[test]
    fn refine_to_matches_refinement_order() {
        let i = lip(&[&[5], &[6], &[10, 11, 12]]);
        for s in compositions_of(5) {
            let got = refine_to(&i, &s);
            let expected_some = s.refines(&standardize_partition(&i));
            assert_eq!(got.is_some(), expected_some, "shape {s}");
            if let Some(x) = got {
                assert_eq!(standardize_partition(&x), s);
                assert!(matches!(
                    compare(&x, &i),
                    PartialOrderResult::Less | PartialOrderResult::Equal
                ));
            }
        }
    }

    #[test]
    fn subword_standardize_examples() {
        let w = [6, 4, 5, 1, 2, 3];
        // 0-based indices {2,4,5} pick the subword 5,2,3
        assert_eq!(
            subword_standardize(&w, &[2, 4, 5]),
            Permutation::new(vec![3, 1, 2]).unwrap()
        );
        let v = [2, 3, 4, 1, 2, 1];
        assert_eq!(
            subword_standardize(&v, &[0, 1, 2, 3, 4, 5]),
            Permutation::new(vec![3, 5, 6, 1, 4, 2]).unwrap()
        );
        assert_eq!(subword_standardize(&w, &[]), Permutation::empty());
    }

    #[test]
    fn concat_examples() {
        assert_eq!(comp(&[2]).concat(&comp(&[1, 1])), comp(&[2, 1, 1]));
        assert_eq!(Composition::empty().concat(&comp(&[3])), comp(&[3]));
        assert_eq!(comp(&[1, 2]).concat(&comp(&[3])), comp(&[1, 2, 3]));
        let a = Permutation::new(vec![2, 1]).unwrap();
        let b = Permutation::new(vec![1, 2]).unwrap();
        assert_eq!(a.concat(&b), Permutation::new(vec![2, 1, 3, 4]).unwrap());
    }

    #[test]
    fn composition_restriction_examples() {
        let s = comp(&[1, 1, 2]);
        assert_eq!(s.restrict(&[3, 4]), comp(&[2]));
        assert_eq!(s.restrict(&[2, 3, 4]), comp(&[1, 2]));
        assert_eq!(s.restrict(&[]), Composition::empty());
    }

    #[test]
    fn partition_of_shape_walk() {
        assert_eq!(
            partition_of_shape(&[1, 3, 4], &comp(&[1, 2])),
            Some(lip(&[&[1], &[3, 4]]))
        );
        assert_eq!(partition_of_shape(&[1, 2, 4], &comp(&[1, 2])), None);
        // singletons fit anywhere, even adjacent
        assert_eq!(
            partition_of_shape(&[3, 4], &comp(&[1, 1])),
            Some(lip(&[&[3], &[4]]))
        );
        assert_eq!(partition_of_shape(&[], &Composition::empty()), Some(LabeledIntervalPartition::empty()));
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(compositions_of(0).len(), 1);
        assert_eq!(compositions_of(5).len(), 16);
        assert_eq!(permutations_of(4).len(), 24);
        let mut count = 0;
        for_each_subset_of_size(6, 3, |s| {
            assert_eq!(s.len(), 3);
            count += 1;
        });
        assert_eq!(count, 20);
        let mut empty = 0;
        for_each_subset_of_size(4, 0, |_| empty += 1);
        assert_eq!(empty, 1);
    }

    #[test]
    fn display_forms() {
        assert_eq!(comp(&[1, 2]).to_string(), "[1,2]");
        assert_eq!(Composition::empty().to_string(), "[]");
        assert_eq!(Permutation::new(vec![3, 1, 4, 2]).unwrap().to_string(), "3142");
        assert_eq!(Permutation::empty().to_string(), "e");
        let long = Permutation::new((1..=10).rev().collect()).unwrap();
        assert_eq!(long.to_string(), "(10 9 8 7 6 5 4 3 2 1)");
        assert_eq!("[1,2]".parse::<Composition>().unwrap(), comp(&[1, 2]));
        assert_eq!("[]".parse::<Composition>().unwrap(), Composition::empty());
        assert_eq!(
            "3142".parse::<Permutation>().unwrap(),
            Permutation::new(vec![3, 1, 4, 2]).unwrap()
        );
        assert_eq!(
            "10,9,8,7,6,5,4,3,2,1".parse::<Permutation>().unwrap(),
            Permutation::new((1..=10).rev().collect()).unwrap()
        );
    }
}
