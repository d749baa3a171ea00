//! Minimal homogeneous generating sets of graded two-sided ideals.
//!
//! The truncated completion loop doubles as a selector: a generator enters
//! the minimal set exactly when it survives division by the basis built from
//! everything processed before it. Which same-degree generators are kept
//! depends on the processing order, but the number kept per degree does not.

use std::collections::BTreeMap;

use crate::completion::{truncate_loop, truncated_gb, sorted_homogeneous, TruncatedBasis};
use crate::division::normal_form;
use crate::error::Error;
use crate::poly::{Context, Poly};

/// Result of the minimal-generator computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinGenOutput {
    /// Original input indices of the generators kept, in processing order.
    pub kept: Vec<usize>,
    /// A truncated basis of the ideal, truncated at the largest input degree.
    pub basis: TruncatedBasis,
    /// Count of kept generators per degree (only nonzero entries).
    pub degree_profile: BTreeMap<u64, usize>,
}

/// Selects a minimal homogeneous generating subset of `gens` and computes a
/// truncated basis of the generated ideal along the way. Input that is not
/// sorted by degree is sorted stably first, so ties keep their given order.
pub fn min_gen_set(gens: &[Poly], ctx: &Context) -> Result<MinGenOutput, Error> {
    let sorted = sorted_homogeneous(gens, ctx)?;
    let n0 = sorted
        .last()
        .map(|(_, f)| f.degree(&ctx.signature).expect("nonzero generator"))
        .unwrap_or(0);
    let (elements, kept) = truncate_loop(sorted, n0, ctx)?;

    let mut degree_profile = BTreeMap::new();
    for &i in &kept {
        let d = gens[i].degree(&ctx.signature).expect("nonzero generator");
        *degree_profile.entry(d).or_insert(0) += 1;
    }
    Ok(MinGenOutput {
        kept,
        basis: TruncatedBasis {
            elements,
            truncation_degree: n0,
        },
        degree_profile,
    })
}

/// Independent minimality check: walking the generators in degree order, a
/// kept one must survive division by a truncated basis of its predecessors,
/// and a dropped one must reduce to zero against it. `claimed` holds input
/// indices.
pub fn verify_minimal(gens: &[Poly], claimed: &[usize], ctx: &Context) -> Result<bool, Error> {
    if claimed.iter().any(|&i| i >= gens.len()) {
        return Ok(false);
    }
    let sorted = sorted_homogeneous(gens, ctx)?;
    let polys: Vec<Poly> = sorted.iter().map(|(_, f)| f.clone()).collect();
    for (pos, (orig_index, f)) in sorted.iter().enumerate() {
        let d = f.degree(&ctx.signature).expect("nonzero generator");
        let prefix_basis = truncated_gb(&polys[..pos], d, ctx)?;
        let r = normal_form(f, &prefix_basis.elements, ctx)?;
        let keep = claimed.contains(orig_index);
        if keep == r.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::OrderSpec;
    use crate::scalar::{FieldSpec, Scalar};
    use crate::word::{Signature, Word};

    fn ctx() -> Context {
        Context::new(
            FieldSpec::Rationals,
            Signature::new(vec!["x".into(), "y".into()], vec![1, 1]).unwrap(),
            OrderSpec::deglex_default(2),
        )
        .unwrap()
    }

    fn poly(c: &Context, terms: &[(i64, &[u32])]) -> Poly {
        Poly::normalize(
            terms
                .iter()
                .map(|&(n, ls)| {
                    (
                        Scalar::from_integer(FieldSpec::Rationals, n),
                        Word::from_letters(ls.to_vec()),
                    )
                })
                .collect(),
            c,
        )
    }

    #[test]
    fn drops_generators_inside_the_prior_ideal() {
        let c = ctx();
        let gens = vec![
            poly(&c, &[(1, &[0, 0])]),    // xx
            poly(&c, &[(1, &[0, 1])]),    // xy
            poly(&c, &[(1, &[0, 1, 0])]), // xyx = xy * x
        ];
        let out = min_gen_set(&gens, &c).unwrap();
        assert_eq!(out.kept, vec![0, 1]);
        assert_eq!(out.degree_profile, BTreeMap::from([(2, 2)]));
        assert_eq!(out.basis.truncation_degree, 3);
    }

    #[test]
    fn obstructions_run_before_same_degree_generators() {
        let c = ctx();
        // The second generator equals the reduced self-overlap of the first,
        // so the overlap pass of degree 3 absorbs it.
        let gens = vec![
            poly(&c, &[(1, &[0, 0]), (-1, &[1, 0])]),
            poly(&c, &[(1, &[0, 1, 0]), (-1, &[1, 1, 0])]),
        ];
        let out = min_gen_set(&gens, &c).unwrap();
        assert_eq!(out.kept, vec![0]);
        assert_eq!(out.degree_profile, BTreeMap::from([(2, 1)]));
    }

    #[test]
    fn distinct_leading_monomials_of_equal_degree_all_stay() {
        let c = ctx();
        let gens = vec![poly(&c, &[(1, &[0, 0])]), poly(&c, &[(1, &[0, 1])])];
        let out = min_gen_set(&gens, &c).unwrap();
        assert_eq!(out.kept, vec![0, 1]);
        assert_eq!(out.basis.elements, gens);
        assert_eq!(out.basis.truncation_degree, 2);
    }

    #[test]
    fn empty_input_generates_the_zero_ideal() {
        let c = ctx();
        let out = min_gen_set(&[], &c).unwrap();
        assert!(out.kept.is_empty());
        assert!(out.basis.elements.is_empty());
        assert!(out.degree_profile.is_empty());
    }

    #[test]
    fn verify_minimal_examples() {
        let c = ctx();
        let gens = vec![
            poly(&c, &[(1, &[0, 0])]),
            poly(&c, &[(1, &[0, 1])]),
            poly(&c, &[(1, &[0, 1, 0])]),
        ];
        assert!(verify_minimal(&gens, &[0, 1], &c).unwrap());
        assert!(!verify_minimal(&gens, &[0, 1, 2], &c).unwrap());

        let single = vec![poly(&c, &[(1, &[0, 1])])];
        assert!(verify_minimal(&single, &[0], &c).unwrap());
    }

    #[test]
    fn minimal_sets_verify_and_dropped_elements_reduce() {
        let c = ctx();
        let gens = vec![
            poly(&c, &[(1, &[0, 0]), (-1, &[1, 0])]),
            poly(&c, &[(1, &[0, 1]), (1, &[1, 0])]),
            poly(&c, &[(1, &[0, 0, 1])]),
            poly(&c, &[(1, &[0, 1, 0]), (-1, &[1, 1, 0])]),
        ];
        let out = min_gen_set(&gens, &c).unwrap();
        assert!(verify_minimal(&gens, &out.kept, &c).unwrap());
        for (i, f) in gens.iter().enumerate() {
            if !out.kept.contains(&i) {
                let r = normal_form(f, &out.basis.elements, &c).unwrap();
                assert!(r.is_zero(), "dropped generator {i} must reduce to zero");
            }
        }
    }

    #[test]
    fn fresh_high_degree_generators_extend_the_profile_by_one() {
        let c = ctx();
        let gens = vec![
            poly(&c, &[(1, &[0, 0]), (-1, &[1, 0])]),
            poly(&c, &[(1, &[0, 1]), (1, &[1, 0])]),
        ];
        let out = min_gen_set(&gens, &c).unwrap();
        assert_eq!(out.kept.len(), 2);

        // y^4 is not in the ideal: every basis leading monomial contains x.
        let extra = poly(&c, &[(1, &[1, 1, 1, 1])]);
        let mut extended: Vec<Poly> = out.kept.iter().map(|&i| gens[i].clone()).collect();
        extended.push(extra.clone());
        let again = min_gen_set(&extended, &c).unwrap();

        let mut expect = out.degree_profile.clone();
        *expect.entry(4).or_insert(0) += 1;
        assert_eq!(again.degree_profile, expect);
    }

    #[test]
    fn degree_profile_is_stable_under_same_degree_permutations() {
        let c = ctx();
        // Three quadratics with a linear dependency keep two of three, no
        // matter the order.
        let f0 = poly(&c, &[(1, &[0, 1]), (-1, &[1, 0])]);
        let f1 = poly(&c, &[(1, &[0, 1]), (1, &[1, 0])]);
        let f2 = poly(&c, &[(2, &[0, 1])]); // f0 + f1
        let base = min_gen_set(&[f0.clone(), f1.clone(), f2.clone()], &c).unwrap();
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let all = [f0, f1, f2];
        for p in perms {
            let shuffled: Vec<Poly> = p.iter().map(|&i| all[i].clone()).collect();
            let out = min_gen_set(&shuffled, &c).unwrap();
            assert_eq!(out.degree_profile, base.degree_profile, "perm {p:?}");
        }
    }
}
