//! Free module with exact rational coefficients over an ordered basis.
//!
//! Every algebra in this crate stores its elements as a [`LinComb`]: a finite
//! map from basis elements to arbitrary-precision rationals. Iteration (and
//! therefore printing) follows the basis order, which is graded first and
//! componentwise after that, so output is deterministic across runs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::Result;

/// Exact rational scalar; never rounded.
pub type Rational = BigRational;

/// Shorthand for an integer-valued scalar.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// A basis for a free module: ordered, printable, graded.
pub trait Basis: Clone + Ord + fmt::Display {
    /// Filtration degree; the unit of a graded algebra has degree 0.
    fn degree(&self) -> usize;

    /// Whether the printed form should be parenthesized inside a linear
    /// combination (used by bases whose rendering contains separators).
    fn parenthesize() -> bool {
        false
    }
}

/// Pair of basis elements, the basis of a two-fold tensor product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor2<A, B>(pub A, pub B);

/// Triple of basis elements, the basis of a three-fold tensor product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor3<A, B, C>(pub A, pub B, pub C);

impl<A: Basis, B: Basis> PartialOrd for Tensor2<A, B> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<A: Basis, B: Basis> Ord for Tensor2<A, B> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
            .then_with(|| self.1.cmp(&other.1))
    }
}

impl<A: Basis, B: Basis> fmt::Display for Tensor2<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} (x) {})", self.0, self.1)
    }
}

impl<A: Basis, B: Basis> Basis for Tensor2<A, B> {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree()
    }
}

impl<A: Basis, B: Basis, C: Basis> PartialOrd for Tensor3<A, B, C> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<A: Basis, B: Basis, C: Basis> Ord for Tensor3<A, B, C> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
            .then_with(|| self.1.cmp(&other.1))
            .then_with(|| self.2.cmp(&other.2))
    }
}

impl<A: Basis, B: Basis, C: Basis> fmt::Display for Tensor3<A, B, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} (x) {} (x) {})", self.0, self.1, self.2)
    }
}

impl<A: Basis, B: Basis, C: Basis> Basis for Tensor3<A, B, C> {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree() + self.2.degree()
    }
}

/// Finite rational linear combination of basis elements. Zero coefficients
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinComb<B: Basis> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Basis> Default for LinComb<B> {
    fn default() -> Self {
        LinComb::zero()
    }
}

impl<B: Basis> LinComb<B> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(b: B) -> Self {
        LinComb::term(b, Rational::one())
    }

    pub fn term(b: B, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(b, coeff);
        }
        LinComb { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `b`, zero if absent.
    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, b: B, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(b);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_basis(&mut self, b: B) {
        self.add_term(b, Rational::one());
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LinComb::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(b, q)| (b.clone(), q * c))
                .collect(),
        }
    }

    /// Bilinear pairing with the basis as an orthonormal family.
    pub fn pairing(&self, other: &LinComb<B>) -> Rational {
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Rational::zero();
        for (b, c) in &small.terms {
            if let Some(d) = big.terms.get(b) {
                acc += c * d;
            }
        }
        acc
    }

    /// Linear extension of a map defined on basis elements.
    pub fn linear_map<C: Basis>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            for (d, q) in f(b).terms {
                out.add_term(d, q * c);
            }
        }
        out
    }

    /// Linear extension of a fallible map defined on basis elements.
    pub fn try_linear_map<C: Basis>(
        &self,
        mut f: impl FnMut(&B) -> Result<LinComb<C>>,
    ) -> Result<LinComb<C>> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            for (d, q) in f(b)?.terms {
                out.add_term(d, q * c);
            }
        }
        Ok(out)
    }

    /// Largest degree of a basis element with nonzero coefficient; zero for
    /// the zero vector.
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Basis::degree).max().unwrap_or(0)
    }
}

/// Bilinear extension of a map defined on pairs of basis elements.
pub fn bilinear<A: Basis, B: Basis, C: Basis>(
    x: &LinComb<A>,
    y: &LinComb<B>,
    mut f: impl FnMut(&A, &B) -> LinComb<C>,
) -> LinComb<C> {
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            for (d, q) in f(a, b).terms {
                out.add_term(d, q * ca * cb);
            }
        }
    }
    out
}

/// Bilinear extension of a fallible map defined on pairs of basis elements.
pub fn try_bilinear<A: Basis, B: Basis, C: Basis>(
    x: &LinComb<A>,
    y: &LinComb<B>,
    mut f: impl FnMut(&A, &B) -> Result<LinComb<C>>,
) -> Result<LinComb<C>> {
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            for (d, q) in f(a, b)?.terms {
                out.add_term(d, q * ca * cb);
            }
        }
    }
    Ok(out)
}

/// Tensor product of two linear combinations.
pub fn tensor2<A: Basis, B: Basis>(x: &LinComb<A>, y: &LinComb<B>) -> LinComb<Tensor2<A, B>> {
    bilinear(x, y, |a, b| LinComb::basis(Tensor2(a.clone(), b.clone())))
}

impl<B: Basis> Add for LinComb<B> {
    type Output = LinComb<B>;

    fn add(self, rhs: LinComb<B>) -> LinComb<B> {
        let mut out = self;
        for (b, c) in rhs.terms {
            out.add_term(b, c);
        }
        out
    }
}

impl<B: Basis> Add for &LinComb<B> {
    type Output = LinComb<B>;

    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        self.clone() + rhs.clone()
    }
}

impl<B: Basis> Sub for LinComb<B> {
    type Output = LinComb<B>;

    fn sub(self, rhs: LinComb<B>) -> LinComb<B> {
        self + (-rhs)
    }
}

impl<B: Basis> Sub for &LinComb<B> {
    type Output = LinComb<B>;

    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        self.clone() - rhs.clone()
    }
}

impl<B: Basis> Neg for LinComb<B> {
    type Output = LinComb<B>;

    fn neg(self) -> LinComb<B> {
        LinComb {
            terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect(),
        }
    }
}

impl<B: Basis> Mul<Rational> for LinComb<B> {
    type Output = LinComb<B>;

    fn mul(self, rhs: Rational) -> LinComb<B> {
        self.scale(&rhs)
    }
}

impl<B: Basis> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "- ")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let magnitude = c.abs();
            if B::parenthesize() {
                write!(f, "{}*({})", magnitude, b)?;
            } else {
                write!(f, "{}*{}", magnitude, b)?;
            }
        }
        Ok(())
    }
}

impl Basis for crate::combinatorics::Composition {
    fn degree(&self) -> usize {
        self.size()
    }
}

impl Basis for crate::combinatorics::Permutation {
    fn degree(&self) -> usize {
        self.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Composition;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn module_axioms() {
        let s = LinComb::basis(c(&[2]));
        let zero = LinComb::<Composition>::zero();
        assert_eq!(s.clone() + zero.clone(), s);
        assert_eq!(
            s.scale(&rat(2)) + s.scale(&rat(3)),
            LinComb::term(c(&[2]), rat(5))
        );
        assert_eq!(s.clone() + (-s.clone()), zero);
        assert!((s.clone() - s).is_zero());
    }

    #[test]
    fn pairing_examples() {
        let s = LinComb::basis(c(&[2]));
        let t = LinComb::basis(c(&[1, 1]));
        assert_eq!(s.pairing(&s), rat(1));
        assert_eq!(s.pairing(&t), rat(0));
        // <2s + t, s - t> = 2 - 1
        let x = s.scale(&rat(2)) + t.clone();
        let y = s.clone() - t;
        assert_eq!(x.pairing(&y), rat(1));
    }

    #[test]
    fn linearity_instances() {
        let s = LinComb::basis(c(&[1]));
        let t = LinComb::basis(c(&[2]));
        let f = |a: &Composition, b: &Composition| LinComb::basis(a.concat(b));
        // (ax) . y = a (x . y)
        assert_eq!(
            bilinear(&s.scale(&rat(3)), &t, f),
            bilinear(&s, &t, f).scale(&rat(3))
        );
        // (x + y) . z = x.z + y.z
        let z = LinComb::basis(c(&[1, 1]));
        assert_eq!(
            bilinear(&(&s + &t), &z, f),
            bilinear(&s, &z, f) + bilinear(&t, &z, f)
        );
        // linear maps kill zero
        assert_eq!(
            LinComb::<Composition>::zero().linear_map(|b| LinComb::basis(b.clone())),
            LinComb::zero()
        );
    }

    #[test]
    fn display_canonical() {
        let mut x = LinComb::zero();
        x.add_term(c(&[2, 2]), rat(2));
        x.add_term(c(&[3]), rat(2));
        x.add_term(c(&[2]), rat(1));
        assert_eq!(x.to_string(), "1*[2] + 2*[3] + 2*[2,2]");
        let y: LinComb<Composition> = LinComb::term(c(&[2]), rat(-1));
        assert_eq!(y.to_string(), "- 1*[2]");
        let z = LinComb::basis(c(&[1])) - LinComb::term(c(&[3]), rat(2));
        assert_eq!(z.to_string(), "1*[1] - 2*[3]");
        assert_eq!(LinComb::<Composition>::zero().to_string(), "0");
    }

    #[test]
    fn tensor_display_and_order() {
        let t = Tensor2(Composition::empty(), Composition::empty());
        assert_eq!(LinComb::basis(t).to_string(), "1*([] (x) [])");
        // graded before componentwise: total degree dominates
        let low = Tensor2(c(&[2]), c(&[1]));
        let high = Tensor2(c(&[1]), c(&[1, 2]));
        assert!(low < high);
    }
}
