//! Two-sided division with remainder, normality tests, and interreduction.
//!
//! The remainder of a division is not unique in general; this implementation
//! fixes a deterministic strategy: at each step the current leading word is
//! rewritten by the lowest-index divisor whose leading monomial divides it,
//! at the leftmost occurrence. Reduction is full: every term of the result is
//! normal, not just the leading one.

use crate::error::Error;
use crate::poly::{Context, Poly};
use crate::word::{first_occurrence, Word};

/// One step of a division certificate: `coeff * left * g[divisor] * right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub coeff: crate::scalar::Scalar,
    pub left: Word,
    pub divisor: usize,
    pub right: Word,
}

/// A division certificate: `f = sum of summands + remainder`, where every
/// summand's product has leading monomial at most that of `f`, and no word of
/// the remainder is divisible by any divisor's leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub summands: Vec<Summand>,
    pub remainder: Poly,
}

/// Divides `f` by the list of divisors, returning the full certificate.
pub fn remainder(f: &Poly, divisors: &[Poly], ctx: &Context) -> Result<Representation, Error> {
    reduce_impl(f, divisors, ctx, true)
}

/// Remainder only, without certificate bookkeeping. The value is identical to
/// `remainder(..).remainder`.
pub fn normal_form(f: &Poly, divisors: &[Poly], ctx: &Context) -> Result<Poly, Error> {
    Ok(reduce_impl(f, divisors, ctx, false)?.remainder)
}

fn reduce_impl(
    f: &Poly,
    divisors: &[Poly],
    ctx: &Context,
    track: bool,
) -> Result<Representation, Error> {
    let mut leading_monomials = Vec::with_capacity(divisors.len());
    for g in divisors {
        let (lm, lc) = g.leading().map_err(|_| Error::ZeroGenerator)?;
        leading_monomials.push((lm.clone(), lc.clone()));
    }

    let mut work = f.clone();
    let mut normal_terms = Vec::new();
    let mut summands = Vec::new();

    loop {
        let (lm, lc) = match work.leading() {
            Ok((w, c)) => (w.clone(), c.clone()),
            Err(_) => break,
        };
        let hit = leading_monomials
            .iter()
            .enumerate()
            .find_map(|(i, (glm, _))| first_occurrence(glm, &lm).map(|occ| (i, occ)));
        match hit {
            Some((i, occ)) => {
                let c = lc.div(&leading_monomials[i].1);
                let multiple = Poly::sandwich(&occ.left, &divisors[i], &occ.right).scalar_mul(&c);
                work = work.sub(&multiple, ctx);
                if track {
                    summands.push(Summand {
                        coeff: c,
                        left: occ.left,
                        divisor: i,
                        right: occ.right,
                    });
                }
            }
            None => {
                // The leading term is normal; move it out and keep going.
                let t = work.terms()[0].clone();
                normal_terms.push((t.coeff, t.word));
                let rest = work.terms()[1..]
                    .iter()
                    .map(|t| (t.coeff.clone(), t.word.clone()))
                    .collect();
                work = Poly::normalize(rest, ctx);
            }
        }
    }

    Ok(Representation {
        summands,
        remainder: Poly::normalize(normal_terms, ctx),
    })
}

/// True iff no word of `f` is divisible by any divisor's leading monomial.
pub fn is_normal(f: &Poly, divisors: &[Poly], _ctx: &Context) -> Result<bool, Error> {
    let mut lms = Vec::with_capacity(divisors.len());
    for g in divisors {
        lms.push(g.leading().map_err(|_| Error::ZeroGenerator)?.0);
    }
    Ok(f.terms()
        .iter()
        .all(|t| lms.iter().all(|lm| first_occurrence(lm, &t.word).is_none())))
}

/// Rebuilds `sum of summands + remainder`; test and verification helper.
pub fn reconstruct(rep: &Representation, divisors: &[Poly], ctx: &Context) -> Poly {
    let mut acc = rep.remainder.clone();
    for s in &rep.summands {
        let piece = Poly::sandwich(&s.left, &divisors[s.divisor], &s.right).scalar_mul(&s.coeff);
        acc = acc.add(&piece, ctx);
    }
    acc
}

/// Iteratively replaces every element whose leading monomial is divisible by
/// another's with its remainder against the rest (dropping zeros) until the
/// set is LM-reduced, then rescales everything monic. The two-sided ideal is
/// unchanged.
pub fn interreduce(gens: &[Poly], ctx: &Context) -> Result<Vec<Poly>, Error> {
    let mut basis: Vec<Poly> = Vec::with_capacity(gens.len());
    for g in gens {
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        basis.push(g.clone());
    }

    'outer: loop {
        for i in 0..basis.len() {
            let reducible = {
                let lm_i = basis[i].leading_word()?;
                basis.iter().enumerate().any(|(j, g)| {
                    if i == j {
                        return false;
                    }
                    let lm_j = g.leading_word().expect("nonzero by construction");
                    // Equal leading monomials: only the later element yields.
                    first_occurrence(lm_j, lm_i).is_some() && (lm_i != lm_j || j < i)
                })
            };
            if reducible {
                let victim = basis.remove(i);
                let r = normal_form(&victim, &basis, ctx)?;
                if !r.is_zero() {
                    basis.insert(i, r);
                }
                continue 'outer;
            }
        }
        break;
    }

    basis.iter().map(|g| g.monic()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::OrderSpec;
    use crate::scalar::{FieldSpec, Scalar};
    use crate::word::Signature;

    fn ctx() -> Context {
        Context::new(
            FieldSpec::Rationals,
            Signature::new(vec!["x".into(), "y".into()], vec![1, 1]).unwrap(),
            OrderSpec::deglex_default(2),
        )
        .unwrap()
    }

    fn q(n: i64) -> Scalar {
        Scalar::from_integer(FieldSpec::Rationals, n)
    }

    fn w(letters: &[u32]) -> Word {
        Word::from_letters(letters.to_vec())
    }

    fn poly(c: &Context, terms: &[(i64, &[u32])]) -> Poly {
        Poly::normalize(terms.iter().map(|&(n, ls)| (q(n), w(ls))).collect(), c)
    }

    #[test]
    fn monomial_quotient() {
        let c = ctx();
        let f = poly(&c, &[(1, &[0, 1, 0])]); // xyx
        let g = poly(&c, &[(1, &[0, 1])]); // xy
        let rep = remainder(&f, &[g.clone()], &c).unwrap();
        assert!(rep.remainder.is_zero());
        assert_eq!(
            rep.summands,
            vec![Summand { coeff: q(1), left: Word::one(), divisor: 0, right: w(&[0]) }]
        );
        assert_eq!(reconstruct(&rep, &[g], &c), f);
    }

    #[test]
    fn reduction_rewrites_only_divisible_words() {
        let c = ctx();
        // xyx - yxx against xx - yx: only the word yxx is divisible.
        let f = poly(&c, &[(1, &[0, 1, 0]), (-1, &[1, 0, 0])]);
        let g = poly(&c, &[(1, &[0, 0]), (-1, &[1, 0])]);
        let rep = remainder(&f, &[g.clone()], &c).unwrap();
        let expect = poly(&c, &[(1, &[0, 1, 0]), (-1, &[1, 1, 0])]); // xyx - yyx
        assert_eq!(rep.remainder, expect);
        assert!(is_normal(&rep.remainder, &[g.clone()], &c).unwrap());
        assert_eq!(reconstruct(&rep, &[g], &c), f);
    }

    #[test]
    fn normal_inputs_pass_through() {
        let c = ctx();
        let f = poly(&c, &[(1, &[1, 1, 1])]); // yyy
        let gs = vec![
            poly(&c, &[(1, &[0, 0]), (-1, &[1, 0])]),
            poly(&c, &[(1, &[0, 1]), (-1, &[1, 0])]),
        ];
        let rep = remainder(&f, &gs, &c).unwrap();
        assert_eq!(rep.remainder, f);
        assert!(rep.summands.is_empty());
    }

    #[test]
    fn normality_checks() {
        let c = ctx();
        let g = vec![poly(&c, &[(1, &[0, 0]), (-1, &[1, 0])])];
        assert!(is_normal(&poly(&c, &[(1, &[1, 1, 1])]), &g, &c).unwrap());
        assert!(!is_normal(&poly(&c, &[(1, &[1, 0, 0])]), &g, &c).unwrap());
        assert!(is_normal(&Poly::zero(), &g, &c).unwrap());
    }

    #[test]
    fn zero_divisors_are_rejected() {
        let c = ctx();
        let f = poly(&c, &[(1, &[0])]);
        assert_eq!(
            remainder(&f, &[Poly::zero()], &c),
            Err(Error::ZeroGenerator)
        );
    }

    #[test]
    fn tracked_and_untracked_remainders_agree() {
        let c = ctx();
        let f = poly(&c, &[(1, &[0, 0, 0]), (2, &[0, 1, 0]), (-1, &[1, 0, 0])]);
        let gs = vec![
            poly(&c, &[(1, &[0, 0]), (-1, &[1, 0])]),
            poly(&c, &[(2, &[0, 1])]),
        ];
        let rep = remainder(&f, &gs, &c).unwrap();
        assert_eq!(normal_form(&f, &gs, &c).unwrap(), rep.remainder);
        assert_eq!(reconstruct(&rep, &gs, &c), f);
    }

    #[test]
    fn interreduce_examples() {
        let c = ctx();
        // {xx, xxx}: the cube is a multiple of the square.
        let out = interreduce(
            &[poly(&c, &[(1, &[0, 0])]), poly(&c, &[(1, &[0, 0, 0])])],
            &c,
        )
        .unwrap();
        assert_eq!(out, vec![poly(&c, &[(1, &[0, 0])])]);

        // Monic rescaling.
        let out = interreduce(&[poly(&c, &[(2, &[0, 1])])], &c).unwrap();
        assert_eq!(out, vec![poly(&c, &[(1, &[0, 1])])]);

        // {xx - y, xxx - xy} reduces the second to xy - yx.
        let out = interreduce(
            &[
                poly(&c, &[(1, &[0, 0]), (-1, &[1])]),
                poly(&c, &[(1, &[0, 0, 0]), (-1, &[0, 1])]),
            ],
            &c,
        )
        .unwrap();
        assert_eq!(
            out,
            vec![
                poly(&c, &[(1, &[0, 0]), (-1, &[1])]),
                poly(&c, &[(1, &[0, 1]), (-1, &[1, 0])]),
            ]
        );
    }

    #[test]
    fn interreduced_sets_are_lm_reduced() {
        let c = ctx();
        let gens = vec![
            poly(&c, &[(1, &[0, 0]), (-1, &[1])]),
            poly(&c, &[(1, &[0, 0, 0]), (-1, &[0, 1])]),
            poly(&c, &[(3, &[0, 1, 0, 1])]),
            poly(&c, &[(1, &[0, 1])]),
        ];
        let out = interreduce(&gens, &c).unwrap();
        for (i, g) in out.iter().enumerate() {
            assert!(g.leading().unwrap().1.is_one());
            for (j, h) in out.iter().enumerate() {
                if i != j {
                    assert!(!crate::word::divides(
                        h.leading_word().unwrap(),
                        g.leading_word().unwrap()
                    ));
                }
            }
        }
    }
}
