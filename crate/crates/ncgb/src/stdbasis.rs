//! Minimal standard bases of arbitrary ideals via leading homogeneous parts.
//!
//! Under a graded ordering, a Gröbner basis is a standard basis: the leading
//! homogeneous parts of its elements generate the associated graded ideal.
//! Selecting a minimal homogeneous generating subset of those parts therefore
//! selects a minimal standard basis from the original elements.

use crate::completion::truncated_gb;
use crate::division::{normal_form, Representation};
use crate::error::Error;
use crate::mingen::min_gen_set;
use crate::poly::{Context, Poly};

/// The selection made by [`min_standard_basis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StdBasisOutput {
    /// Indices into the input basis whose elements form the minimal standard
    /// basis.
    pub kept: Vec<usize>,
    /// The leading homogeneous parts of the kept elements: a minimal
    /// homogeneous generating set of the associated graded ideal.
    pub lh_min: Vec<Poly>,
}

/// Extracts a minimal standard basis from a finite Gröbner basis taken with
/// respect to the ambient graded ordering. The Gröbner property itself is the
/// caller's responsibility; [`crate::completion::is_groebner_up_to`] can
/// certify it up to a chosen degree.
pub fn min_standard_basis(gb: &[Poly], ctx: &Context) -> Result<StdBasisOutput, Error> {
    let mut lh_parts = Vec::with_capacity(gb.len());
    for g in gb {
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        lh_parts.push(g.leading_homogeneous(&ctx.signature)?);
    }
    let selected = min_gen_set(&lh_parts, ctx)?;
    let lh_min = selected.kept.iter().map(|&i| lh_parts[i].clone()).collect();
    Ok(StdBasisOutput {
        kept: selected.kept,
        lh_min,
    })
}

/// Certifies, up to `check_degree`, that the leading homogeneous parts of the
/// two sets generate the same graded ideal. `reference` should be a Gröbner
/// basis with respect to the ambient graded ordering, so that its leading
/// homogeneous parts generate the full associated graded ideal.
pub fn is_standard_basis(
    candidate: &[Poly],
    reference: &[Poly],
    check_degree: u64,
    ctx: &Context,
) -> Result<bool, Error> {
    let lh_of = |set: &[Poly]| -> Result<Vec<Poly>, Error> {
        let mut out = Vec::with_capacity(set.len());
        for g in set {
            if g.is_zero() {
                return Err(Error::ZeroGenerator);
            }
            let lh = g.leading_homogeneous(&ctx.signature)?;
            // Parts above the certification window cannot affect it.
            if lh.degree(&ctx.signature).expect("nonzero part") <= check_degree {
                out.push(lh);
            }
        }
        Ok(out)
    };
    let lh_candidate = lh_of(candidate)?;
    let lh_reference = lh_of(reference)?;

    let basis_candidate = truncated_gb(&lh_candidate, check_degree, ctx)?;
    let basis_reference = truncated_gb(&lh_reference, check_degree, ctx)?;

    for f in &lh_candidate {
        if !normal_form(f, &basis_reference.elements, ctx)?.is_zero() {
            return Ok(false);
        }
    }
    for f in &lh_reference {
        if !normal_form(f, &basis_candidate.elements, ctx)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks a claimed exact representation `f = sum coeff * left * g * right`:
/// the identity must hold with zero remainder and every summand's leading
/// homogeneous degree must stay within that of `f`.
pub fn check_representation_bound(
    f: &Poly,
    divisors: &[Poly],
    rep: &Representation,
    ctx: &Context,
) -> bool {
    if !rep.remainder.is_zero() {
        return false;
    }
    if rep.summands.iter().any(|s| s.divisor >= divisors.len()) {
        return false;
    }
    let mut acc = Poly::zero();
    for s in &rep.summands {
        let piece = Poly::sandwich(&s.left, &divisors[s.divisor], &s.right).scalar_mul(&s.coeff);
        acc = acc.add(&piece, ctx);
    }
    if &acc != f {
        return false;
    }
    let Some(bound) = f.degree(&ctx.signature) else {
        // Zero can only be represented by the empty sum.
        return rep.summands.is_empty();
    };
    rep.summands.iter().all(|s| {
        let g = &divisors[s.divisor];
        let d = s.left.wdegree(&ctx.signature)
            + g.degree(&ctx.signature).expect("nonzero divisor")
            + s.right.wdegree(&ctx.signature);
        d <= bound
    })
}
