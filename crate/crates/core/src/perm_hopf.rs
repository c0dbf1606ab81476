//! Permutation-side operations: the superinfiltration product with the
//! shifted-concatenation coproduct, the supershuffle, the classical
//! comparison products on permutations, and the pattern-counting functional.

use crate::combinatorics::{permutations_of, Permutation};
use crate::error::Result;
use crate::freealg::{LinComb, Tensor2};
use crate::guard;

pub type PermTensor = Tensor2<Permutation, Permutation>;

/// Shifted concatenation of one-line words.
pub fn perm_concat(alpha: &Permutation, beta: &Permutation) -> Permutation {
    alpha.concat(beta)
}

/// All splittings of `sigma` as a shifted concatenation. A split at `i` is
/// valid exactly when the first `i` entries are a permutation of `[i]`.
pub fn delta_conc(sigma: &Permutation) -> LinComb<PermTensor> {
    let n = sigma.len();
    let word = sigma.one_line();
    let mut out = LinComb::zero();
    for i in 0..=n {
        if word[..i].iter().all(|&v| v <= i) {
            let left = Permutation::new(word[..i].to_vec()).unwrap();
            let right = Permutation::new(word[i..].iter().map(|&v| v - i).collect()).unwrap();
            out.add_basis(Tensor2(left, right));
        }
    }
    out
}

fn covers_with_sizes(n: usize, ka: usize, kb: usize, mut f: impl FnMut(&[usize], &[usize])) {
    // A gets `ka` positions, B gets `kb`, together they cover [n]
    if ka + kb < n {
        return;
    }
    let overlap = ka + kb - n;
    let mut a_set: Vec<usize> = Vec::with_capacity(ka);
    crate::combinatorics::for_each_subset_of_size(n, ka, |a_idx| {
        a_set.clear();
        a_set.extend(a_idx.iter().map(|&i| i + 1));
        let complement: Vec<usize> = (1..=n).filter(|x| !a_set.contains(x)).collect();
        crate::combinatorics::for_each_subset_of_size(ka, overlap, |o_idx| {
            let mut b_set: Vec<usize> = complement.clone();
            b_set.extend(o_idx.iter().map(|&i| a_set[i]));
            b_set.sort_unstable();
            f(&a_set, &b_set);
        });
    });
}

/// Hosts of the superinfiltration: all permutations `γ` together with covers
/// `A ∪ B = [|γ|]` whose restrictions standardize to `σ` and `τ`.
pub fn superinfiltration(
    sigma: &Permutation,
    tau: &Permutation,
) -> Result<LinComb<Permutation>> {
    guard::check(
        "superinfiltration",
        sigma.len() + tau.len(),
        guard::permutation_guard(),
    )?;
    let mut out = LinComb::zero();
    for n in sigma.len().max(tau.len())..=sigma.len() + tau.len() {
        for gamma in permutations_of(n) {
            covers_with_sizes(n, sigma.len(), tau.len(), |a, b| {
                if gamma.restrict_st(a) == *sigma && gamma.restrict_st(b) == *tau {
                    out.add_basis(gamma.clone());
                }
            });
        }
    }
    Ok(out)
}

/// Superinfiltration restricted to disjoint covers, so the host size is
/// forced to `|σ| + |τ|`.
pub fn supershuffle(sigma: &Permutation, tau: &Permutation) -> Result<LinComb<Permutation>> {
    guard::check(
        "supershuffle",
        sigma.len() + tau.len(),
        guard::permutation_guard(),
    )?;
    let n = sigma.len() + tau.len();
    let mut out = LinComb::zero();
    for gamma in permutations_of(n) {
        crate::combinatorics::for_each_subset_of_size(n, sigma.len(), |a_idx| {
            let a: Vec<usize> = a_idx.iter().map(|&i| i + 1).collect();
            let b: Vec<usize> = (1..=n).filter(|x| !a.contains(x)).collect();
            if gamma.restrict_st(&a) == *sigma && gamma.restrict_st(&b) == *tau {
                out.add_basis(gamma.clone());
            }
        });
    }
    Ok(out)
}

/// Coproduct dual to the superinfiltration: standardized restrictions over
/// all covers of the position set.
pub fn delta_superinfiltration(sigma: &Permutation) -> Result<LinComb<PermTensor>> {
    guard::check(
        "delta_superinfiltration",
        sigma.len(),
        guard::permutation_guard(),
    )?;
    let n = sigma.len();
    let mut out = LinComb::zero();
    for ka in 0..=n {
        for kb in 0..=n {
            covers_with_sizes(n, ka, kb, |a, b| {
                out.add_basis(Tensor2(sigma.restrict_st(a), sigma.restrict_st(b)));
            });
        }
    }
    Ok(out)
}

/// Convolution-style product: hosts whose first `m` positions standardize to
/// `σ` and last `n` positions to `τ`.
pub fn mr_star(sigma: &Permutation, tau: &Permutation) -> Result<LinComb<Permutation>> {
    guard::check("mr_star", sigma.len() + tau.len(), guard::permutation_guard())?;
    let m = sigma.len();
    let n = m + tau.len();
    let mut out = LinComb::zero();
    let front: Vec<usize> = (1..=m).collect();
    let back: Vec<usize> = (m + 1..=n).collect();
    for gamma in permutations_of(n) {
        if gamma.restrict_st(&front) == *sigma && gamma.restrict_st(&back) == *tau {
            out.add_basis(gamma);
        }
    }
    Ok(out)
}

/// Shuffle of `σ` with the value-shifted copy of `τ`.
pub fn mr_star_prime(sigma: &Permutation, tau: &Permutation) -> Result<LinComb<Permutation>> {
    guard::check(
        "mr_star_prime",
        sigma.len() + tau.len(),
        guard::permutation_guard(),
    )?;
    let m = sigma.len();
    let shifted: Vec<usize> = tau.one_line().iter().map(|&v| v + m).collect();
    let n = m + tau.len();
    let mut out = LinComb::zero();
    crate::combinatorics::for_each_subset_of_size(n, m, |a_idx| {
        let mut word = vec![0usize; n];
        let mut ai = 0;
        let mut bi = 0;
        for (pos, slot) in word.iter_mut().enumerate() {
            if ai < m && a_idx[ai] == pos {
                *slot = sigma.one_line()[ai];
                ai += 1;
            } else {
                *slot = shifted[bi];
                bi += 1;
            }
        }
        out.add_basis(Permutation::new(word).unwrap());
    });
    Ok(out)
}

/// Positionwise split with standardization of both sides.
pub fn delta_star(sigma: &Permutation) -> LinComb<PermTensor> {
    let n = sigma.len();
    let mut out = LinComb::zero();
    for i in 0..=n {
        let front: Vec<usize> = (1..=i).collect();
        let back: Vec<usize> = (i + 1..=n).collect();
        out.add_basis(Tensor2(sigma.restrict_st(&front), sigma.restrict_st(&back)));
    }
    out
}

/// Number of position subsets of `host` whose standardized restriction is
/// `pattern`. Only subsets of the pattern's size are inspected.
pub fn pc_count(host: &Permutation, pattern: &Permutation) -> u64 {
    let n = host.len();
    let k = pattern.len();
    let mut count = 0;
    crate::combinatorics::for_each_subset_of_size(n, k, |idx| {
        let positions: Vec<usize> = idx.iter().map(|&i| i + 1).collect();
        if host.restrict_st(&positions) == *pattern {
            count += 1;
        }
    });
    count
}
