//! Brute-force verifier, independent of the division and completion code.
//!
//! Ideal membership, per-degree ideal dimensions, and per-degree minimal
//! generator counts are all computed by exact row reduction over the word
//! basis: the only word operation used is equality of whole words, never
//! factor divisibility, so agreement with the Gröbner machinery is a real
//! cross-check. Rows are kept sparse (a homogeneous polynomial is already a
//! sparse vector over the degree-q words); pivots are leading words.

use std::collections::HashMap;

use crate::error::Error;
use crate::poly::{Context, Homogeneity, Poly};
use crate::word::{count_words_of_degree, words_of_degree, Word};

/// Tuning knobs; row reduction refuses degrees whose word count explodes.
#[derive(Debug, Clone, Copy)]
pub struct OracleOptions {
    pub max_words_per_degree: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            max_words_per_degree: 100_000,
        }
    }
}

/// Echelonized span of one graded component.
#[derive(Debug, Clone)]
pub struct DegreeSpan {
    pub degree: u64,
    pub ambient_dim: usize,
    /// Monic rows with pairwise distinct leading words.
    pub echelon: Vec<Poly>,
}

/// Spans of every component up to the bound.
#[derive(Debug, Clone)]
pub struct IdealSpan {
    pub max_degree: u64,
    pub spans: Vec<DegreeSpan>,
}

/// Per-degree dimension table and minimal generator counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub max_degree: u64,
    pub ambient_dims: Vec<usize>,
    pub ideal_dims: Vec<usize>,
    pub betti: Vec<usize>,
}

/// Sparse row-echelon accumulator keyed by leading word.
struct Echelon {
    rows: Vec<Poly>,
    pivot_of: HashMap<Word, usize>,
}

impl Echelon {
    fn new() -> Self {
        Echelon {
            rows: Vec::new(),
            pivot_of: HashMap::new(),
        }
    }

    /// Eliminates pivot words from the top of `f` until the leading word is
    /// fresh or the row vanishes. Leading words of span members are always
    /// pivots, so a nonzero result certifies non-membership.
    fn reduce(&self, f: &Poly, ctx: &Context) -> Poly {
        let mut h = f.clone();
        loop {
            let Ok((lm, lc)) = h.leading() else { break };
            let Some(&row) = self.pivot_of.get(lm) else { break };
            let lc = lc.clone();
            h = h.sub(&self.rows[row].scalar_mul(&lc), ctx);
        }
        h
    }

    /// Returns true when the row was independent and grew the span.
    fn insert(&mut self, f: Poly, ctx: &Context) -> bool {
        let r = self.reduce(&f, ctx);
        if r.is_zero() {
            return false;
        }
        let monic = r.monic().expect("nonzero row");
        let lm = monic.leading_word().expect("nonzero row").clone();
        self.pivot_of.insert(lm, self.rows.len());
        self.rows.push(monic);
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

fn ambient_words(ctx: &Context, degree: u64, opts: &OracleOptions) -> Result<Vec<Word>, Error> {
    let count = count_words_of_degree(&ctx.signature, degree);
    if count > opts.max_words_per_degree as u128 {
        return Err(Error::WordCountExceeded {
            degree,
            words: count.min(usize::MAX as u128) as usize,
            cap: opts.max_words_per_degree,
        });
    }
    let mut words = words_of_degree(&ctx.signature, degree);
    words.sort_by(|a, b| ctx.compare(b, a));
    Ok(words)
}

fn homogeneous_degrees(gens: &[Poly], ctx: &Context) -> Result<Vec<u64>, Error> {
    gens.iter()
        .enumerate()
        .map(|(index, f)| match f.homogeneity(&ctx.signature) {
            Homogeneity::Degree(d) => Ok(d),
            Homogeneity::Zero => Err(Error::ZeroGenerator),
            Homogeneity::Mixed => Err(Error::NonHomogeneous { index }),
        })
        .collect()
}

/// Realizes the graded ideal of the homogeneous generators degree by degree:
/// for each `q <= max_degree`, row-reduces every product `u * f * v` of
/// weighted degree `q` over the degree-`q` word basis.
pub fn span_ideal(
    gens: &[Poly],
    max_degree: u64,
    ctx: &Context,
    opts: &OracleOptions,
) -> Result<IdealSpan, Error> {
    let degrees = homogeneous_degrees(gens, ctx)?;
    let words: Vec<Vec<Word>> = (0..=max_degree)
        .map(|q| ambient_words(ctx, q, opts))
        .collect::<Result<_, _>>()?;
    let mut spans = Vec::with_capacity(max_degree as usize + 1);
    for q in 0..=max_degree {
        let mut echelon = Echelon::new();
        for (f, &df) in gens.iter().zip(&degrees) {
            if df > q {
                continue;
            }
            for a in 0..=(q - df) {
                let b = q - df - a;
                for u in &words[a as usize] {
                    for v in &words[b as usize] {
                        echelon.insert(Poly::sandwich(u, f, v), ctx);
                    }
                }
            }
        }
        spans.push(DegreeSpan {
            degree: q,
            ambient_dim: words[q as usize].len(),
            echelon: echelon.rows,
        });
    }
    Ok(IdealSpan { max_degree, spans })
}

/// Per-degree count of generators any minimal homogeneous generating set must
/// have: the dimension of the degree-`q` component not already reachable from
/// lower degrees. Lower-degree reachability needs only one-letter extensions
/// of the lower spans, since longer cofactors factor through them.
pub fn minimal_betti(
    gens: &[Poly],
    max_degree: u64,
    ctx: &Context,
    opts: &OracleOptions,
) -> Result<Vec<usize>, Error> {
    let span = span_ideal(gens, max_degree, ctx, opts)?;
    Ok(betti_from_span(&span, ctx))
}

fn betti_from_span(span: &IdealSpan, ctx: &Context) -> Vec<usize> {
    let nvars = ctx.signature.nvars();
    let mut betti = Vec::with_capacity(span.spans.len());
    for q in 0..span.spans.len() as u64 {
        let mut from_below = Echelon::new();
        for i in 0..nvars {
            let w = ctx.signature.weight(i);
            if w > q {
                continue;
            }
            let lower = &span.spans[(q - w) as usize].echelon;
            let letter = Word::letter_word(i as u32);
            for e in lower {
                from_below.insert(Poly::sandwich(&letter, e, &Word::one()), ctx);
            }
            for e in lower {
                from_below.insert(Poly::sandwich(&Word::one(), e, &letter), ctx);
            }
        }
        let dim_q = span.spans[q as usize].echelon.len();
        betti.push(dim_q - from_below.rank());
    }
    betti
}

/// Ambient dims, ideal dims, and betti numbers in one pass.
pub fn report(
    gens: &[Poly],
    max_degree: u64,
    ctx: &Context,
    opts: &OracleOptions,
) -> Result<OracleReport, Error> {
    let span = span_ideal(gens, max_degree, ctx, opts)?;
    let betti = betti_from_span(&span, ctx);
    Ok(OracleReport {
        max_degree,
        ambient_dims: span.spans.iter().map(|s| s.ambient_dim).collect(),
        ideal_dims: span.spans.iter().map(|s| s.echelon.len()).collect(),
        betti,
    })
}

/// Membership test against the span realized up to `max_degree`.
///
/// For homogeneous generators the graded components are checked exactly, so
/// the answer is authoritative for `f` of degree within the bound. For
/// inhomogeneous generators the span of all products of top degree within the
/// bound is used; a `true` is then still a certificate, while `false` only
/// means the membership is not witnessed within the bound.
pub fn member(
    f: &Poly,
    gens: &[Poly],
    max_degree: u64,
    ctx: &Context,
    opts: &OracleOptions,
) -> Result<bool, Error> {
    if f.is_zero() {
        return Ok(true);
    }
    let degree = f.degree(&ctx.signature).expect("nonzero");
    if degree > max_degree {
        return Err(Error::DegreeExceedsBound {
            degree,
            bound: max_degree,
        });
    }

    let all_homogeneous = gens
        .iter()
        .all(|g| !matches!(g.homogeneity(&ctx.signature), Homogeneity::Mixed));
    if all_homogeneous {
        let span = span_ideal(gens, degree, ctx, opts)?;
        // A graded ideal contains f iff it contains every component of f.
        for q in 0..=degree {
            let component = Poly::normalize(
                f.terms()
                    .iter()
                    .filter(|t| t.word.wdegree(&ctx.signature) == q)
                    .map(|t| (t.coeff.clone(), t.word.clone()))
                    .collect(),
                ctx,
            );
            if component.is_zero() {
                continue;
            }
            let mut echelon = Echelon::new();
            for row in &span.spans[q as usize].echelon {
                echelon.insert(row.clone(), ctx);
            }
            if !echelon.reduce(&component, ctx).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    } else {
        let words: Vec<Vec<Word>> = (0..=max_degree)
            .map(|q| ambient_words(ctx, q, opts))
            .collect::<Result<_, _>>()?;
        let mut echelon = Echelon::new();
        for g in gens {
            if g.is_zero() {
                return Err(Error::ZeroGenerator);
            }
            let dg = g.degree(&ctx.signature).expect("nonzero");
            if dg > max_degree {
                continue;
            }
            for extension in 0..=(max_degree - dg) {
                for a in 0..=extension {
                    let b = extension - a;
                    for u in &words[a as usize] {
                        for v in &words[b as usize] {
                            echelon.insert(Poly::sandwich(u, g, v), ctx);
                        }
                    }
                }
            }
        }
        Ok(echelon.reduce(f, ctx).is_zero())
    }
}
