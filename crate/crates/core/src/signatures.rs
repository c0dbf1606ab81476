//! Counting functionals: occurrences of standardized interval partitions in
//! partitions, of permutation patterns in permutations, and of vincular
//! patterns in a partition/permutation host, plus the closed-form evaluators
//! built on binomial counts.

use num::BigUint;

use crate::combinatorics::{
    for_each_subset_of_size, permutations_of, subword_standardize, Composition, Permutation,
};
use crate::vincular_hopf::VincularPattern;

/// Block id (0-based) for every 1-based position of the canonical partition.
pub(crate) fn block_ids(l: &Composition) -> Vec<usize> {
    let mut ids = vec![0usize; l.size() + 1];
    let mut pos = 1;
    for (bi, &p) in l.parts().iter().enumerate() {
        for _ in 0..p {
            ids[pos] = bi;
            pos += 1;
        }
    }
    ids
}

/// Standardized restriction of the canonical partition of `l` to the sorted
/// position set `a`: parts break at gaps and at block boundaries.
pub(crate) fn restricted_shape(ids: &[usize], a: &[usize]) -> Composition {
    let mut parts = Vec::new();
    let mut run = 0usize;
    for (i, &x) in a.iter().enumerate() {
        if i > 0 {
            let prev = a[i - 1];
            if x != prev + 1 || ids[x] != ids[prev] {
                parts.push(run);
                run = 0;
            }
        }
        run += 1;
    }
    if run > 0 {
        parts.push(run);
    }
    Composition::new(parts).unwrap()
}

/// Occurrences of `s` in `l`, counting a subset whenever its standardized
/// restriction equals `s` or is coarser. Brute force over subsets of size
/// `|s|`; subsets of any other size never qualify.
pub fn ipc_count(l: &Composition, s: &Composition) -> u64 {
    let n = l.size();
    let k = s.size();
    let ids = block_ids(l);
    let mut count = 0;
    let mut positions = Vec::with_capacity(k);
    for_each_subset_of_size(n, k, |idx| {
        positions.clear();
        positions.extend(idx.iter().map(|&i| i + 1));
        if s.refines(&restricted_shape(&ids, &positions)) {
            count += 1;
        }
    });
    count
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn single_block_count(n: usize, parts: &[usize]) -> BigUint {
    let total: usize = parts.iter().sum();
    let k = parts.len();
    if total > n {
        return BigUint::from(0u32);
    }
    binomial(n - total + k, k)
}

/// Occurrences of `s` in the single block of size `n`, in closed form:
/// the number of weak compositions of the slack into `k + 1` gaps.
pub fn ipc_single_block(n: usize, s: &Composition) -> BigUint {
    single_block_count(n, s.parts())
}

/// Occurrences of `s` in `l` computed by splitting the parts of `s` across
/// the blocks of `l` and multiplying single-block counts. Agrees with
/// [`ipc_count`] everywhere and stays polynomial for long hosts.
pub fn ipc_chen_eval(l: &Composition, s: &Composition) -> BigUint {
    let blocks = l.parts();
    let parts = s.parts();
    let m = blocks.len();
    let k = parts.len();
    // table[j][t]: ways to place parts t.. into blocks j..
    let mut table = vec![vec![BigUint::from(0u32); k + 1]; m + 1];
    table[m][k] = BigUint::from(1u32);
    for j in (0..m).rev() {
        for t in 0..=k {
            let mut acc = BigUint::from(0u32);
            for t2 in t..=k {
                let here = single_block_count(blocks[j], &parts[t..t2]);
                if here != BigUint::from(0u32) {
                    acc += here * &table[j + 1][t2];
                }
            }
            table[j][t] = acc;
        }
    }
    table[0][0].clone()
}

/// Occurrences of the vincular pattern `pat` in the host `(l, host)`: subsets
/// whose restricted shape is `pat`'s block composition or coarser and whose
/// standardized subpermutation equals `pat`'s permutation.
///
/// Panics when `l` and `host` disagree on size.
pub fn gpc_count(l: &Composition, host: &Permutation, pat: &VincularPattern) -> u64 {
    assert_eq!(
        l.size(),
        host.len(),
        "host partition and permutation must have equal size"
    );
    let n = host.len();
    let k = pat.size();
    let ids = block_ids(l);
    let mut count = 0;
    let mut positions = Vec::with_capacity(k);
    for_each_subset_of_size(n, k, |idx| {
        positions.clear();
        positions.extend(idx.iter().map(|&i| i + 1));
        if pat.blocks().refines(&restricted_shape(&ids, &positions))
            && host.restrict_st(&positions) == *pat.perm()
        {
            count += 1;
        }
    });
    count
}

/// The expansion of a fixed-gap pattern: all single-block vincular patterns
/// of the full span whose anchor positions standardize to `sigma`.
///
/// Anchors start at position 1 and are separated by the prescribed gaps, so
/// `gaps` must have length `|sigma| - 1` (empty for `|sigma| <= 1`).
pub fn delay_patterns(sigma: &Permutation, gaps: &[usize]) -> Vec<VincularPattern> {
    if sigma.is_empty() {
        assert!(gaps.is_empty(), "gaps must be empty for the empty pattern");
        return vec![VincularPattern::empty()];
    }
    assert_eq!(
        gaps.len(),
        sigma.len() - 1,
        "need one gap per consecutive pair of pattern positions"
    );
    let mut anchors = Vec::with_capacity(sigma.len());
    let mut pos = 1usize;
    anchors.push(pos);
    for &g in gaps {
        pos += 1 + g;
        anchors.push(pos);
    }
    let span = pos;
    let anchor_idx: Vec<usize> = anchors.iter().map(|&p| p - 1).collect();
    permutations_of(span)
        .into_iter()
        .filter(|gamma| subword_standardize(gamma.one_line(), &anchor_idx) == *sigma)
        .map(VincularPattern::consecutive)
        .collect()
}

/// Occurrences of `sigma` in the host with exact gap `gaps[i]` between the
/// `i`-th and `i+1`-th chosen positions: the delay-pattern expansion summed
/// through [`gpc_count`].
pub fn gpc_delay_count(
    l: &Composition,
    host: &Permutation,
    sigma: &Permutation,
    gaps: &[usize],
) -> u64 {
    delay_patterns(sigma, gaps)
        .iter()
        .map(|pat| gpc_count(l, host, pat))
        .sum()
}

/// One-line standardization of a numeric series, ties broken left to right.
pub fn standardize_series(series: &[f64]) -> Permutation {
    let idx: Vec<usize> = (0..series.len()).collect();
    subword_standardize(series, &idx)
}

/// Counts `pat` in a numeric series: the series is standardized to a
/// permutation and hosted on a single block.
pub fn pattern_count_in_series(series: &[f64], pat: &VincularPattern) -> u64 {
    if series.is_empty() {
        return if pat.is_empty() { 1 } else { 0 };
    }
    let host = standardize_series(series);
    let l = Composition::single(series.len());
    gpc_count(&l, &host, pat)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn vp(s: &str) -> VincularPattern {
        s.parse().unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn ipc_count_block_of_four() {
        let l = c(&[4]);
        assert_eq!(ipc_count(&l, &c(&[1, 1])), 6);
        assert_eq!(ipc_count(&l, &c(&[2])), 3);
        assert_eq!(ipc_count(&l, &c(&[1, 2])), 3);
        assert_eq!(ipc_count(&l, &c(&[2, 1])), 3);
        assert_eq!(ipc_count(&l, &c(&[1, 1, 2])), 1);
        assert_eq!(ipc_count(&l, &c(&[1, 2, 1])), 1);
        assert_eq!(ipc_count(&l, &c(&[2, 1, 1])), 1);
        assert_eq!(ipc_count(&l, &Composition::empty()), 1);
    }

    #[test]
    fn ipc_single_block_examples() {
        assert_eq!(ipc_single_block(9, &c(&[3, 5])), big(3));
        assert_eq!(ipc_single_block(4, &c(&[1, 1])), big(6));
        assert_eq!(ipc_single_block(7, &c(&[7])), big(1));
        assert_eq!(ipc_single_block(2, &c(&[3])), big(0));
        assert_eq!(ipc_single_block(5, &Composition::empty()), big(1));
    }

    #[test]
    fn ipc_chen_eval_examples() {
        assert_eq!(ipc_chen_eval(&c(&[4]), &c(&[2])), big(3));
        assert_eq!(ipc_chen_eval(&c(&[2, 2]), &c(&[2])), big(2));
        assert_eq!(ipc_chen_eval(&c(&[3, 1, 2]), &Composition::empty()), big(1));
        assert_eq!(
            ipc_chen_eval(&Composition::empty(), &Composition::empty()),
            big(1)
        );
        assert_eq!(ipc_chen_eval(&Composition::empty(), &c(&[1])), big(0));
    }

    #[test]
    fn chen_eval_matches_brute_force_spot() {
        for l in [c(&[4]), c(&[2, 2]), c(&[1, 2, 2]), c(&[3, 3])] {
            for s in [
                Composition::empty(),
                c(&[1]),
                c(&[2]),
                c(&[1, 1]),
                c(&[2, 1]),
                c(&[1, 2]),
                c(&[3]),
            ] {
                assert_eq!(
                    ipc_chen_eval(&l, &s),
                    big(ipc_count(&l, &s)),
                    "host {l} pattern {s}"
                );
            }
        }
    }

    #[test]
    fn gpc_count_examples() {
        assert_eq!(gpc_count(&c(&[1, 2, 2]), &p("13254"), &vp("2|1")), 2);
        assert_eq!(gpc_count(&c(&[1, 2, 2]), &p("45321"), &vp("2|1")), 9);
        assert_eq!(
            gpc_count(&c(&[1, 2, 2]), &p("13254"), &VincularPattern::empty()),
            1
        );
    }

    #[test]
    #[should_panic(expected = "equal size")]
    fn gpc_count_dimension_mismatch() {
        gpc_count(&c(&[2]), &p("132"), &vp("1|"));
    }

    #[test]
    fn delay_pattern_family() {
        let fam = delay_patterns(&p("21"), &[1]);
        let expected: Vec<VincularPattern> = ["231|", "312|", "321|"]
            .iter()
            .map(|s| vp(s))
            .collect();
        assert_eq!(fam, expected);
    }

    #[test]
    fn gpc_delay_examples() {
        let l = c(&[6]);
        let host = p("134265");
        // consecutive descents sit at positions (3,4) and (5,6)
        assert_eq!(gpc_delay_count(&l, &host, &p("21"), &[0]), 2);
        // zero gaps match the single-block pattern
        assert_eq!(
            gpc_delay_count(&l, &host, &p("21"), &[0]),
            gpc_count(&l, &host, &VincularPattern::consecutive(p("21")))
        );
        // oracle: scan all runs of the full span directly
        let counted = gpc_delay_count(&l, &host, &p("21"), &[1]);
        let mut direct = 0;
        for start in 1..=4 {
            let positions = [start, start + 2];
            if host.restrict_st(&positions) == p("21") {
                direct += 1;
            }
        }
        assert_eq!(counted, direct);
    }

    #[test]
    fn series_standardization() {
        assert_eq!(standardize_series(&[1.0, 3.0, 4.0, 2.0, 6.0, 5.0]), p("134265"));
        // ties standardize left to right
        assert_eq!(standardize_series(&[2.0, 1.0, 2.0]), p("213"));
        assert_eq!(standardize_series(&[]), Permutation::empty());
    }

    #[test]
    fn series_pattern_counts() {
        let series = [1.0, 3.0, 4.0, 2.0, 6.0, 5.0];
        assert_eq!(pattern_count_in_series(&series, &vp("21|3")), 2);
        assert_eq!(pattern_count_in_series(&series, &vp("1|2")), 12);
        let constant = [5.0; 6];
        assert_eq!(pattern_count_in_series(&constant, &vp("21|")), 0);
        assert_eq!(pattern_count_in_series(&[], &vp("1|")), 0);
        assert_eq!(pattern_count_in_series(&[], &VincularPattern::empty()), 1);
    }
}
