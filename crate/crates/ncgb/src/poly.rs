//! Noncommutative polynomials with exact coefficients and leading data.
//!
//! A polynomial is a strictly descending term list under the ambient ordering,
//! with no zero coefficients; the empty list is zero. Every constructor
//! normalizes, so leading-term queries are O(1) and always consistent. All
//! operations interpret their inputs against a single [`Context`]; mixing
//! contexts is a hard error caught by the field assertions in `normalize`.

use std::cmp::Ordering;

use crate::error::Error;
use crate::order::OrderSpec;
use crate::scalar::{FieldSpec, Scalar};
use crate::word::{Signature, Word};

/// The ambient interpretation of polynomials: coefficient field, alphabet,
/// and monomial ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Context {
    pub field: FieldSpec,
    pub signature: Signature,
    pub order: OrderSpec,
}

impl Context {
    pub fn new(field: FieldSpec, signature: Signature, order: OrderSpec) -> Result<Self, Error> {
        if order.nvars() != signature.nvars() {
            return Err(Error::InvalidOrder(
                "ordering precedence does not cover the declared variables".into(),
            ));
        }
        Ok(Context {
            field,
            signature,
            order,
        })
    }

    pub fn compare(&self, a: &Word, b: &Word) -> Ordering {
        self.order.compare(a, b, &self.signature)
    }
}

/// One term: a nonzero coefficient on a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub word: Word,
}

/// Homogeneity classification of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial: homogeneous of undefined degree.
    Zero,
    /// All terms share this weighted degree.
    Degree(u64),
    /// Terms of several degrees.
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: Vec<Term>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn constant(c: Scalar) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![Term {
                    coeff: c,
                    word: Word::one(),
                }],
            }
        }
    }

    pub fn from_term(coeff: Scalar, word: Word) -> Self {
        if coeff.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![Term { coeff, word }],
            }
        }
    }

    /// Merges equal words, drops zero coefficients, sorts strictly descending.
    pub fn normalize(raw: Vec<(Scalar, Word)>, ctx: &Context) -> Poly {
        let mut items: Vec<(Scalar, Word)> = raw;
        for (c, w) in &items {
            assert!(c.field() == ctx.field, "coefficient from a different field");
            debug_assert!(w.letters().iter().all(|&i| (i as usize) < ctx.signature.nvars()));
        }
        items.sort_by(|a, b| ctx.compare(&b.1, &a.1));
        let mut terms: Vec<Term> = Vec::with_capacity(items.len());
        for (c, w) in items {
            match terms.last_mut() {
                Some(t) if t.word == w => {
                    t.coeff = &t.coeff + &c;
                }
                _ => terms.push(Term { coeff: c, word: w }),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        Poly { terms }
    }

    /// Leading monomial and coefficient; fails on zero.
    pub fn leading(&self) -> Result<(&Word, &Scalar), Error> {
        self.terms
            .first()
            .map(|t| (&t.word, &t.coeff))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_word(&self) -> Result<&Word, Error> {
        Ok(self.leading()?.0)
    }

    /// Weighted degree of the highest term; `None` for zero.
    pub fn degree(&self, sig: &Signature) -> Option<u64> {
        self.terms
            .iter()
            .map(|t| t.word.wdegree(sig))
            .max()
    }

    /// The leading homogeneous part: all terms of maximal weighted degree.
    pub fn leading_homogeneous(&self, sig: &Signature) -> Result<Poly, Error> {
        let top = self.degree(sig).ok_or(Error::ZeroPolynomial)?;
        let terms = self
            .terms
            .iter()
            .filter(|t| t.word.wdegree(sig) == top)
            .cloned()
            .collect();
        Ok(Poly { terms })
    }

    pub fn homogeneity(&self, sig: &Signature) -> Homogeneity {
        let mut degrees = self.terms.iter().map(|t| t.word.wdegree(sig));
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degrees.all(|e| e == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::Mixed
                }
            }
        }
    }

    pub fn add(&self, other: &Poly, ctx: &Context) -> Poly {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match ctx.compare(&a.word, &b.word) {
                Ordering::Greater => {
                    terms.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.coeff + &b.coeff;
                    if !c.is_zero() {
                        terms.push(Term {
                            coeff: c,
                            word: a.word.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        Poly { terms }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: -&t.coeff,
                    word: t.word.clone(),
                })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly, ctx: &Context) -> Poly {
        self.add(&other.neg(), ctx)
    }

    pub fn scalar_mul(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: c * &t.coeff,
                    word: t.word.clone(),
                })
                .collect(),
        }
    }

    /// Two-sided monomial multiple `left * f * right`. The term order is
    /// preserved because monomial orderings are compatible with two-sided
    /// multiplication, so no re-sort happens.
    pub fn sandwich(left: &Word, f: &Poly, right: &Word) -> Poly {
        Poly {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone(),
                    word: Word::concat3(left, &t.word, right),
                })
                .collect(),
        }
    }

    /// Ring product, built from sandwiches; a convenience, not a fast path.
    pub fn mul(&self, other: &Poly, ctx: &Context) -> Poly {
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                raw.push((&a.coeff * &b.coeff, a.word.concat(&b.word)));
            }
        }
        Poly::normalize(raw, ctx)
    }

    /// Rescales so the leading coefficient is one; fails on zero.
    pub fn monic(&self) -> Result<Poly, Error> {
        let (_, lc) = self.leading()?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        Ok(self.scalar_mul(&lc.inverse()?))
    }
}
