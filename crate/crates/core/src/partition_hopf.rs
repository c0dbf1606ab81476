//! The two bialgebra structures on standardized interval partitions: the
//! concatenation product with its gluing coproduct, and the dual
//! quasi-shuffle product with deconcatenation.

use crate::combinatorics::{
    glue, partition_of_shape, standardize_partition, Composition,
};
use crate::error::Result;
use crate::freealg::{bilinear, LinComb, Rational, Tensor2};
use crate::guard;

use num::{ToPrimitive, Zero};

pub type CompTensor = Tensor2<Composition, Composition>;

/// Bilinear extension of block-size concatenation.
pub fn conc_product(
    x: &LinComb<Composition>,
    y: &LinComb<Composition>,
) -> LinComb<Composition> {
    bilinear(x, y, |s, t| LinComb::basis(s.concat(t)))
}

/// Coefficient of the empty partition.
pub fn counit(x: &LinComb<Composition>) -> Rational {
    x.coeff(&Composition::empty())
}

/// The scalar embedding onto the empty partition.
pub fn unit(c: Rational) -> LinComb<Composition> {
    LinComb::term(Composition::empty(), c)
}

/// Deconcatenation: all two-sided splits of the block list.
pub fn deconc(s: &Composition) -> LinComb<CompTensor> {
    let mut out = LinComb::zero();
    let parts = s.parts();
    for i in 0..=parts.len() {
        let left = Composition::new(parts[..i].to_vec()).unwrap();
        let right = Composition::new(parts[i..].to_vec()).unwrap();
        out.add_basis(Tensor2(left, right));
    }
    out
}

/// Enumerates, for every cover `A ∪ A' = [n]` of the ground set of `g`, the
/// pairs of interval partitions `(I, I')` of `A` and `A'` whose gluing is
/// exactly `g`. The callback receives the two position sets (sorted, 1-based)
/// and the standardized forms of `I` and `I'`.
///
/// `I` must refine the restriction of `g` to `A`, so it is that restriction
/// with extra cuts; a cut is admissible only where the other side keeps a
/// block spanning the cut, and a within-block adjacency covered by neither
/// side kills the cover. Enumerating cut choices therefore visits each valid
/// pair exactly once.
fn for_each_cover_refinement(
    g: &Composition,
    disjoint_only: bool,
    mut f: impl FnMut(&[usize], &[usize], Composition, Composition),
) {
    let n = g.size();
    // block id per position, 1-based
    let mut block_id = vec![0usize; n + 2];
    {
        let mut pos = 1;
        for (bi, &p) in g.parts().iter().enumerate() {
            for _ in 0..p {
                block_id[pos] = bi + 1;
                pos += 1;
            }
        }
    }
    // pairs (x, x+1) lying inside a single block of g
    let inner_pairs: Vec<usize> = (1..n).filter(|&x| block_id[x] == block_id[x + 1]).collect();

    let mut in_a = vec![false; n + 2];
    let mut in_b = vec![false; n + 2];
    let mut a: Vec<usize> = Vec::with_capacity(n);
    let mut b: Vec<usize> = Vec::with_capacity(n);

    // standardized form of the chosen side: parts break at gaps, at block
    // boundaries of g, and at chosen cut positions
    fn side_composition(
        sel: &[usize],
        block_id: &[usize],
        cuts: &[usize],
        choices: &[u8],
        side: u8,
    ) -> Composition {
        let mut parts = Vec::new();
        let mut run = 0usize;
        for (i, &x) in sel.iter().enumerate() {
            if i > 0 {
                let prev = sel[i - 1];
                let contiguous = x == prev + 1 && block_id[x] == block_id[prev];
                let cut_here = contiguous
                    && cuts
                        .iter()
                        .position(|&c| c == prev)
                        .is_some_and(|k| choices[k] == side);
                if !contiguous || cut_here {
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

    fn recurse(
        pos: usize,
        n: usize,
        disjoint_only: bool,
        block_id: &[usize],
        inner_pairs: &[usize],
        in_a: &mut Vec<bool>,
        in_b: &mut Vec<bool>,
        a: &mut Vec<usize>,
        b: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize], &[usize], Composition, Composition),
    ) {
        if pos > n {
            // classify within-block adjacencies; collect the free cut sites
            let mut free: Vec<usize> = Vec::new();
            for &x in inner_pairs {
                let span_a = in_a[x] && in_a[x + 1];
                let span_b = in_b[x] && in_b[x + 1];
                match (span_a, span_b) {
                    (false, false) => return, // uncovered adjacency
                    (true, true) => free.push(x),
                    _ => {}
                }
            }
            // choice per free site: keep both, cut the A side, cut the B side
            let mut choices = vec![0u8; free.len()];
            loop {
                let sa = side_composition(a, block_id, &free, &choices, 1);
                let sb = side_composition(b, block_id, &free, &choices, 2);
                f(a, b, sa, sb);
                // odometer over {0,1,2}^free
                let mut i = 0;
                loop {
                    if i == choices.len() {
                        return;
                    }
                    if choices[i] < 2 {
                        choices[i] += 1;
                        break;
                    }
                    choices[i] = 0;
                    i += 1;
                }
            }
        } else {
            // position goes to A only, B only, or both
            in_a[pos] = true;
            a.push(pos);
            recurse(pos + 1, n, disjoint_only, block_id, inner_pairs, in_a, in_b, a, b, f);
            if !disjoint_only {
                in_b[pos] = true;
                b.push(pos);
                recurse(pos + 1, n, disjoint_only, block_id, inner_pairs, in_a, in_b, a, b, f);
                b.pop();
                in_b[pos] = false;
            }
            a.pop();
            in_a[pos] = false;

            in_b[pos] = true;
            b.push(pos);
            recurse(pos + 1, n, disjoint_only, block_id, inner_pairs, in_a, in_b, a, b, f);
            b.pop();
            in_b[pos] = false;
        }
    }

    recurse(
        1,
        n,
        disjoint_only,
        &block_id,
        &inner_pairs,
        &mut in_a,
        &mut in_b,
        &mut a,
        &mut b,
        &mut f,
    );
}

pub(crate) fn cover_refinements(
    g: &Composition,
    disjoint_only: bool,
    f: impl FnMut(&[usize], &[usize], Composition, Composition),
) {
    for_each_cover_refinement(g, disjoint_only, f)
}

/// Gluing coproduct: sums `std(I) ⊗ std(I')` over all covers of the ground
/// set and all partition pairs gluing back to `s`. Cocommutative.
pub fn coqspart(s: &Composition) -> Result<LinComb<CompTensor>> {
    guard::check("coqspart", s.size(), guard::partition_guard())?;
    let mut out = LinComb::zero();
    for_each_cover_refinement(s, false, |_, _, sa, sb| {
        out.add_basis(Tensor2(sa, sb));
    });
    Ok(out)
}

/// Restriction of the gluing coproduct to disjoint covers.
pub fn shuffle_coproduct(s: &Composition) -> Result<LinComb<CompTensor>> {
    guard::check("shuffle_coproduct", s.size(), guard::partition_guard())?;
    let mut out = LinComb::zero();
    for_each_cover_refinement(s, true, |_, _, sa, sb| {
        out.add_basis(Tensor2(sa, sb));
    });
    Ok(out)
}

/// Enumerates the covers `A ∪ A' = [n]` (over all admissible `n`) for which
/// `A` carries the unique partition shaped `s` and `A'` the one shaped `t`,
/// calling the callback with both partitions glued.
pub(crate) fn for_each_quasi_shuffle_host(
    s: &Composition,
    t: &Composition,
    mut f: impl FnMut(usize, &[usize], &[usize], Composition),
) {
    let k = s.size();
    let l = t.size();
    for n in k.max(l)..=k + l {
        let overlap = k + l - n;
        let mut a_set: Vec<usize> = Vec::with_capacity(k);
        crate::combinatorics::for_each_subset_of_size(n, k, |a_idx| {
            a_set.clear();
            a_set.extend(a_idx.iter().map(|&i| i + 1));
            let Some(ia) = partition_of_shape(&a_set, s) else {
                return;
            };
            let complement: Vec<usize> =
                (1..=n).filter(|x| !a_set.contains(x)).collect();
            crate::combinatorics::for_each_subset_of_size(k, overlap, |o_idx| {
                let mut b_set: Vec<usize> = complement.clone();
                b_set.extend(o_idx.iter().map(|&i| a_set[i]));
                b_set.sort_unstable();
                let Some(ib) = partition_of_shape(&b_set, t) else {
                    return;
                };
                let glued = glue(&ia, &ib);
                f(n, &a_set, &b_set, standardize_partition(&glued));
            });
        });
    }
}

/// Quasi-shuffle product, dual to [`coqspart`]: sums the glued partition over
/// every host size and every compatible cover. Commutative with the empty
/// partition as unit.
pub fn qspart(s: &Composition, t: &Composition) -> Result<LinComb<Composition>> {
    guard::check("qspart", s.size() + t.size(), guard::partition_guard())?;
    let mut out = LinComb::zero();
    for_each_quasi_shuffle_host(s, t, |_, _, _, g| {
        out.add_basis(g);
    });
    Ok(out)
}

/// Structure constant `⟨s ⊗ t, coqspart(g)⟩`.
pub fn section_coefficient(s: &Composition, t: &Composition, g: &Composition) -> Result<u64> {
    let delta = coqspart(g)?;
    let c = delta.coeff(&Tensor2(s.clone(), t.clone()));
    if c.is_zero() {
        return Ok(0);
    }
    Ok(c.to_integer().to_u64().expect("count fits u64"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::rat;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn t2(a: &[usize], b: &[usize]) -> CompTensor {
        Tensor2(c(a), c(b))
    }

    #[test]
    fn conc_product_examples() {
        let x = LinComb::basis(c(&[2]));
        let y = LinComb::basis(c(&[1, 1]));
        assert_eq!(conc_product(&x, &y), LinComb::basis(c(&[2, 1, 1])));
        let e = LinComb::basis(Composition::empty());
        assert_eq!(conc_product(&e, &x), x);
        let a = conc_product(&conc_product(&LinComb::basis(c(&[1])), &LinComb::basis(c(&[2]))), &LinComb::basis(c(&[3])));
        let b = conc_product(&LinComb::basis(c(&[1])), &conc_product(&LinComb::basis(c(&[2])), &LinComb::basis(c(&[3]))));
        assert_eq!(a, b);
        assert_eq!(a, LinComb::basis(c(&[1, 2, 3])));
    }

    #[test]
    fn coqspart_single_block_of_two() {
        let delta = coqspart(&c(&[2])).unwrap();
        let mut expected = LinComb::zero();
        expected.add_term(t2(&[], &[2]), rat(1));
        expected.add_term(t2(&[1], &[2]), rat(2));
        expected.add_term(t2(&[2], &[]), rat(1));
        expected.add_term(t2(&[2], &[1]), rat(2));
        expected.add_term(t2(&[2], &[2]), rat(1));
        expected.add_term(t2(&[1, 1], &[2]), rat(1));
        expected.add_term(t2(&[2], &[1, 1]), rat(1));
        assert_eq!(delta, expected);
    }

    #[test]
    fn coqspart_two_singletons() {
        let delta = coqspart(&c(&[1, 1])).unwrap();
        let mut expected = LinComb::zero();
        expected.add_term(t2(&[], &[1, 1]), rat(1));
        expected.add_term(t2(&[1], &[1]), rat(2));
        expected.add_term(t2(&[1], &[1, 1]), rat(2));
        expected.add_term(t2(&[1, 1], &[]), rat(1));
        expected.add_term(t2(&[1, 1], &[1]), rat(2));
        expected.add_term(t2(&[1, 1], &[1, 1]), rat(1));
        assert_eq!(delta, expected);
    }

    #[test]
    fn coqspart_unit() {
        let delta = coqspart(&Composition::empty()).unwrap();
        assert_eq!(delta, LinComb::basis(t2(&[], &[])));
    }

    #[test]
    fn qspart_golden() {
        let p = qspart(&c(&[2]), &c(&[2])).unwrap();
        let mut expected = LinComb::zero();
        expected.add_term(c(&[2, 2]), rat(2));
        expected.add_term(c(&[3]), rat(2));
        expected.add_term(c(&[2]), rat(1));
        assert_eq!(p, expected);

        let p = qspart(&c(&[2]), &c(&[1, 1])).unwrap();
        let mut expected = LinComb::zero();
        expected.add_term(c(&[2]), rat(1));
        expected.add_term(c(&[2, 1]), rat(2));
        expected.add_term(c(&[1, 2]), rat(2));
        expected.add_term(c(&[1, 1, 2]), rat(1));
        expected.add_term(c(&[1, 2, 1]), rat(1));
        expected.add_term(c(&[2, 1, 1]), rat(1));
        assert_eq!(p, expected);
    }

    #[test]
    fn qspart_unit_and_commutative() {
        let e = Composition::empty();
        let s = c(&[1, 2]);
        assert_eq!(qspart(&e, &s).unwrap(), LinComb::basis(s.clone()));
        assert_eq!(qspart(&s, &e).unwrap(), LinComb::basis(s.clone()));
        let t = c(&[2, 1]);
        assert_eq!(qspart(&s, &t).unwrap(), qspart(&t, &s).unwrap());
    }

    #[test]
    fn deconc_examples() {
        let d = deconc(&c(&[2, 1]));
        let mut expected = LinComb::zero();
        expected.add_term(t2(&[], &[2, 1]), rat(1));
        expected.add_term(t2(&[2], &[1]), rat(1));
        expected.add_term(t2(&[2, 1], &[]), rat(1));
        assert_eq!(d, expected);

        assert_eq!(deconc(&Composition::empty()), LinComb::basis(t2(&[], &[])));

        let d = deconc(&c(&[2, 2]));
        let mut expected = LinComb::zero();
        expected.add_term(t2(&[], &[2, 2]), rat(1));
        expected.add_term(t2(&[2], &[2]), rat(1));
        expected.add_term(t2(&[2, 2], &[]), rat(1));
        assert_eq!(d, expected);
    }

    #[test]
    fn shuffle_coproduct_examples() {
        let d = shuffle_coproduct(&c(&[1, 1])).unwrap();
        let mut expected = LinComb::zero();
        expected.add_term(t2(&[], &[1, 1]), rat(1));
        expected.add_term(t2(&[1, 1], &[]), rat(1));
        expected.add_term(t2(&[1], &[1]), rat(2));
        assert_eq!(d, expected);

        assert_eq!(
            shuffle_coproduct(&Composition::empty()).unwrap(),
            LinComb::basis(t2(&[], &[]))
        );

        // no disjoint cover splits a glued pair
        let d = shuffle_coproduct(&c(&[2])).unwrap();
        let mut expected = LinComb::zero();
        expected.add_term(t2(&[], &[2]), rat(1));
        expected.add_term(t2(&[2], &[]), rat(1));
        assert_eq!(d, expected);
    }

    #[test]
    fn section_coefficient_examples() {
        assert_eq!(section_coefficient(&c(&[1]), &c(&[2]), &c(&[2])).unwrap(), 2);
        assert_eq!(section_coefficient(&c(&[1]), &c(&[1]), &c(&[1, 1])).unwrap(), 2);
        assert_eq!(section_coefficient(&c(&[1]), &c(&[1]), &c(&[2])).unwrap(), 0);
        let g = c(&[2, 1]);
        assert_eq!(
            section_coefficient(&Composition::empty(), &g, &g).unwrap(),
            1
        );
    }

    #[test]
    fn counit_unit_examples() {
        assert_eq!(counit(&unit(rat(1))), rat(1));
        assert_eq!(counit(&LinComb::basis(c(&[2]))), rat(0));
        let x = unit(rat(3)) + LinComb::basis(c(&[1]));
        assert_eq!(counit(&x), rat(3));
    }

    #[test]
    fn size_guard_refuses() {
        let big = Composition::single(13);
        assert!(coqspart(&big).is_err());
        assert!(qspart(&big, &c(&[1])).is_err());
        assert!(qspart(&c(&[1]), &big).is_err());
    }
}
