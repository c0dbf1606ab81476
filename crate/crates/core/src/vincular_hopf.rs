//! The combined Hopf algebra on pairs of a standardized interval partition
//! and a permutation of the same size, together with the two embeddings from
//! the partition and permutation algebras.

use std::fmt;

use crate::combinatorics::{permutations_of, Composition, Permutation};
use crate::error::{Error, Result};
use crate::freealg::{Basis, LinComb, Tensor2};
use crate::guard;
use crate::partition_hopf;

/// A vincular permutation pattern: block sizes mark which selected positions
/// must be consecutive in a host.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VincularPattern {
    blocks: Composition,
    perm: Permutation,
}

pub type VincTensor = Tensor2<VincularPattern, VincularPattern>;

impl VincularPattern {
    pub fn new(blocks: Composition, perm: Permutation) -> Result<Self> {
        if blocks.size() != perm.len() {
            return Err(Error::SizeMismatch {
                context: format!(
                    "blocks {} cover {} positions but permutation {} has length {}",
                    blocks,
                    blocks.size(),
                    perm,
                    perm.len()
                ),
            });
        }
        Ok(VincularPattern { blocks, perm })
    }

    pub fn empty() -> Self {
        VincularPattern::default()
    }

    /// The pattern whose positions are all consecutive.
    pub fn consecutive(perm: Permutation) -> Self {
        let blocks = if perm.is_empty() {
            Composition::empty()
        } else {
            Composition::single(perm.len())
        };
        VincularPattern { blocks, perm }
    }

    pub fn blocks(&self) -> &Composition {
        &self.blocks
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn size(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// Componentwise shifted concatenation.
    pub fn concat(&self, other: &VincularPattern) -> VincularPattern {
        VincularPattern {
            blocks: self.blocks.concat(&other.blocks),
            perm: self.perm.concat(&other.perm),
        }
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "e");
        }
        let wide = self.perm.one_line().iter().any(|&v| v > 9);
        let mut pos = 0;
        for (bi, &len) in self.blocks.parts().iter().enumerate() {
            if bi > 0 {
                write!(f, "|")?;
            }
            for k in 0..len {
                if wide && k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.perm.one_line()[pos])?;
                pos += 1;
            }
        }
        if self.blocks.block_count() == 1 {
            // a lone block needs the bar to mark the form as vincular
            write!(f, "|")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for VincularPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "e" {
            return Ok(VincularPattern::empty());
        }
        let mut segments: Vec<&str> = t.split('|').collect();
        if segments.len() > 1 && segments.last() == Some(&"") {
            segments.pop();
        }
        let mut parts = Vec::with_capacity(segments.len());
        let mut values = Vec::new();
        for seg in segments {
            let seg = seg.trim();
            if seg.is_empty() {
                return Err(Error::invalid("vincular pattern", "empty block segment"));
            }
            let before = values.len();
            if seg.contains(',') {
                for tok in seg.split(',') {
                    let v: usize = tok.trim().parse().map_err(|_| {
                        Error::invalid("vincular pattern", format!("bad entry {tok:?}"))
                    })?;
                    values.push(v);
                }
            } else {
                for ch in seg.chars() {
                    let d = ch.to_digit(10).ok_or_else(|| {
                        Error::invalid("vincular pattern", format!("bad digit {ch:?}"))
                    })?;
                    values.push(d as usize);
                }
            }
            parts.push(values.len() - before);
        }
        VincularPattern::new(Composition::new(parts)?, Permutation::new(values)?)
    }
}

impl PartialOrd for VincularPattern {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VincularPattern {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.blocks.cmp(&other.blocks))
            .then_with(|| self.perm.cmp(&other.perm))
    }
}

impl Basis for VincularPattern {
    fn degree(&self) -> usize {
        self.size()
    }

    fn parenthesize() -> bool {
        true
    }
}

/// Componentwise concatenation; associative with the empty pattern as unit.
pub fn genconc(x: &VincularPattern, y: &VincularPattern) -> VincularPattern {
    x.concat(y)
}

/// Dual of [`genconc`]: simultaneous splits of the block list and the
/// permutation.
pub fn deconcgen(x: &VincularPattern) -> LinComb<VincTensor> {
    let mut out = LinComb::zero();
    let parts = x.blocks.parts();
    let word = x.perm.one_line();
    let mut prefix = 0usize;
    for i in 0..=parts.len() {
        if i > 0 {
            prefix += parts[i - 1];
        }
        if word[..prefix].iter().all(|&v| v <= prefix) {
            let left = VincularPattern {
                blocks: Composition::new(parts[..i].to_vec()).unwrap(),
                perm: Permutation::new(word[..prefix].to_vec()).unwrap(),
            };
            let right = VincularPattern {
                blocks: Composition::new(parts[i..].to_vec()).unwrap(),
                perm: Permutation::new(word[prefix..].iter().map(|&v| v - prefix).collect())
                    .unwrap(),
            };
            out.add_basis(Tensor2(left, right));
        }
    }
    out
}

/// Gluing coproduct with permutation legs: for every cover and every
/// partition pair gluing back to the blocks, pairs the standardized
/// partitions with the standardized subpermutations.
pub fn coqsgen(x: &VincularPattern) -> Result<LinComb<VincTensor>> {
    guard::check("coqsgen", x.size(), guard::partition_guard())?;
    let mut out = LinComb::zero();
    partition_hopf::cover_refinements(&x.blocks, false, |a, b, sa, sb| {
        let pa = x.perm.restrict_st(a);
        let pb = x.perm.restrict_st(b);
        out.add_basis(Tensor2(
            VincularPattern { blocks: sa, perm: pa },
            VincularPattern { blocks: sb, perm: pb },
        ));
    });
    Ok(out)
}

/// Quasi-shuffle product on vincular patterns, dual to [`coqsgen`]. Hosts are
/// enumerated per admissible size: the partition part as in the partition
/// quasi-shuffle, the permutation part by filtering the symmetric group.
pub fn qsgen(
    x: &VincularPattern,
    y: &VincularPattern,
) -> Result<LinComb<VincularPattern>> {
    guard::check("qsgen", x.size() + y.size(), guard::vincular_guard())?;
    qsgen_with(x, y, host_perms_brute_force)
}

/// Same product, enumerating host permutations as order-preserving value
/// interleavings of the two chains instead of filtering the full symmetric
/// group. Agrees with [`qsgen`] on every input.
pub fn qsgen_interleaved(
    x: &VincularPattern,
    y: &VincularPattern,
) -> Result<LinComb<VincularPattern>> {
    guard::check("qsgen", x.size() + y.size(), guard::vincular_guard())?;
    qsgen_with(x, y, host_perms_interleaved)
}

fn qsgen_with(
    x: &VincularPattern,
    y: &VincularPattern,
    hosts: impl Fn(usize, &[usize], &[usize], &Permutation, &Permutation) -> Vec<Permutation>,
) -> Result<LinComb<VincularPattern>> {
    let mut out = LinComb::zero();
    partition_hopf::for_each_quasi_shuffle_host(&x.blocks, &y.blocks, |n, a, b, g| {
        for gamma in hosts(n, a, b, &x.perm, &y.perm) {
            out.add_basis(VincularPattern {
                blocks: g.clone(),
                perm: gamma,
            });
        }
    });
    Ok(out)
}

fn host_perms_brute_force(
    n: usize,
    a: &[usize],
    b: &[usize],
    sigma: &Permutation,
    tau: &Permutation,
) -> Vec<Permutation> {
    permutations_of(n)
        .into_iter()
        .filter(|gamma| gamma.restrict_st(a) == *sigma && gamma.restrict_st(b) == *tau)
        .collect()
}

/// Hosts as linear extensions of the union of two chains: positions of `a`
/// ordered by the ranks of `sigma`, positions of `b` by the ranks of `tau`.
/// Values 1..n are handed out in order; a shared position must be at the
/// head of both chains before it can receive a value.
fn host_perms_interleaved(
    n: usize,
    a: &[usize],
    b: &[usize],
    sigma: &Permutation,
    tau: &Permutation,
) -> Vec<Permutation> {
    let chain = |positions: &[usize], pat: &Permutation| -> Vec<usize> {
        // chain[r] = position receiving the (r+1)-th smallest value
        let mut by_rank = vec![0usize; positions.len()];
        for (i, &v) in pat.one_line().iter().enumerate() {
            by_rank[v - 1] = positions[i];
        }
        by_rank
    };
    let chain_a = chain(a, sigma);
    let chain_b = chain(b, tau);
    let mut in_a = vec![false; n + 1];
    let mut in_b = vec![false; n + 1];
    for &p in a {
        in_a[p] = true;
    }
    for &p in b {
        in_b[p] = true;
    }

    let mut out = Vec::new();
    let mut word = vec![0usize; n];
    fn go(
        ia: usize,
        ib: usize,
        value: usize,
        n: usize,
        chain_a: &[usize],
        chain_b: &[usize],
        in_a: &[bool],
        in_b: &[bool],
        word: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        if value > n {
            out.push(Permutation::new(word.clone()).unwrap());
            return;
        }
        let head_a = chain_a.get(ia).copied();
        let head_b = chain_b.get(ib).copied();
        if let (Some(pa), Some(pb)) = (head_a, head_b) {
            if pa == pb {
                word[pa - 1] = value;
                go(ia + 1, ib + 1, value + 1, n, chain_a, chain_b, in_a, in_b, word, out);
                return;
            }
        }
        if let Some(pa) = head_a {
            // a shared position waits until it heads the other chain too
            if !in_b[pa] {
                word[pa - 1] = value;
                go(ia + 1, ib, value + 1, n, chain_a, chain_b, in_a, in_b, word, out);
            }
        }
        if let Some(pb) = head_b {
            if !in_a[pb] {
                word[pb - 1] = value;
                go(ia, ib + 1, value + 1, n, chain_a, chain_b, in_a, in_b, word, out);
            }
        }
    }
    go(0, 0, 1, n, &chain_a, &chain_b, &in_a, &in_b, &mut word, &mut out);
    out
}

/// Embeds a standardized partition as the sum over all permutations of its
/// size. A homomorphism for both the products and the coproducts.
pub fn embed_psi(s: &Composition) -> Result<LinComb<VincularPattern>> {
    guard::check("embed_psi", s.size(), guard::permutation_guard())?;
    let mut out = LinComb::zero();
    for sigma in permutations_of(s.size()) {
        out.add_basis(VincularPattern {
            blocks: s.clone(),
            perm: sigma,
        });
    }
    Ok(out)
}

/// Embeds a permutation with the singletons' partition.
pub fn embed_phi(sigma: &Permutation) -> VincularPattern {
    let blocks = Composition::new(vec![1; sigma.len()]).unwrap();
    VincularPattern {
        blocks,
        perm: sigma.clone(),
    }
}
