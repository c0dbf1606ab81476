//! Words on positive integers and the relabeling isomorphism onto
//! standardized interval partitions: a letter `n` corresponds to a single
//! block of size `n`, concatenation of words to block concatenation.

use std::fmt;

use crate::combinatorics::Composition;
use crate::error::{Error, Result};
use crate::freealg::{Basis, LinComb};
use crate::partition_hopf::qspart;

/// A word whose letters are positive integers; may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntWord {
    letters: Vec<usize>,
}

impl IntWord {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.iter().any(|&l| l == 0) {
            return Err(Error::invalid("word", "letters must be >= 1"));
        }
        Ok(IntWord { letters })
    }

    pub fn empty() -> Self {
        IntWord { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of the letters; the grading transported through the isomorphism.
    pub fn weight(&self) -> usize {
        self.letters.iter().sum()
    }

    pub fn concat(&self, other: &IntWord) -> IntWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        IntWord { letters }
    }
}

impl fmt::Display for IntWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

impl std::str::FromStr for IntWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "e" {
            return Ok(IntWord::empty());
        }
        let letters = t
            .split('.')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::invalid("word", format!("bad letter {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        IntWord::new(letters)
    }
}

impl PartialOrd for IntWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl Basis for IntWord {
    fn degree(&self) -> usize {
        self.weight()
    }
}

/// Letters to block sizes. A bijection on basis elements.
pub fn phi(w: &IntWord) -> Composition {
    Composition::new(w.letters.clone()).expect("letters are positive")
}

/// Block sizes to letters; inverse of [`phi`].
pub fn phi_inverse(s: &Composition) -> IntWord {
    IntWord {
        letters: s.parts().to_vec(),
    }
}

/// Quasi-shuffle product on words, transported through the isomorphism.
pub fn qswrd(u: &IntWord, v: &IntWord) -> Result<LinComb<IntWord>> {
    let product = qspart(&phi(u), &phi(v))?;
    Ok(product.linear_map(|s| LinComb::basis(phi_inverse(s))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::rat;

    fn w(letters: &[usize]) -> IntWord {
        IntWord::new(letters.to_vec()).unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&w(&[1, 3, 2])), Composition::new(vec![1, 3, 2]).unwrap());
        assert_eq!(phi(&IntWord::empty()), Composition::empty());
        let word = w(&[2, 1, 4]);
        assert_eq!(phi_inverse(&phi(&word)), word);
    }

    #[test]
    fn phi_is_algebra_morphism() {
        let u = w(&[1, 2]);
        let v = w(&[3]);
        assert_eq!(phi(&u.concat(&v)), phi(&u).concat(&phi(&v)));
    }

    #[test]
    fn qswrd_golden_two_by_two() {
        let p = qswrd(&w(&[2]), &w(&[2])).unwrap();
        let mut expected = LinComb::zero();
        expected.add_term(w(&[2, 2]), rat(2));
        expected.add_term(w(&[3]), rat(2));
        expected.add_term(w(&[2]), rat(1));
        assert_eq!(p, expected);
    }

    #[test]
    fn qswrd_golden_mixed() {
        let p = qswrd(&w(&[1, 2]), &w(&[1, 1])).unwrap();
        let mut expected = LinComb::zero();
        expected.add_term(w(&[1, 2, 1]), rat(3));
        expected.add_term(w(&[1, 2]), rat(3));
        expected.add_term(w(&[1, 2, 1, 1]), rat(1));
        expected.add_term(w(&[1, 1, 2]), rat(6));
        expected.add_term(w(&[1, 1, 1, 2]), rat(3));
        expected.add_term(w(&[1, 1, 2, 1]), rat(2));
        assert_eq!(p, expected);
    }

    #[test]
    fn qswrd_unit_and_commutative() {
        let e = IntWord::empty();
        let v = w(&[2, 1]);
        assert_eq!(qswrd(&e, &v).unwrap(), LinComb::basis(v.clone()));
        let u = w(&[1, 1]);
        assert_eq!(qswrd(&u, &v).unwrap(), qswrd(&v, &u).unwrap());
    }

    #[test]
    fn display_form() {
        assert_eq!(w(&[1, 3, 2]).to_string(), "1.3.2");
        assert_eq!(IntWord::empty().to_string(), "e");
        assert_eq!("1.3.2".parse::<IntWord>().unwrap(), w(&[1, 3, 2]));
    }
}
