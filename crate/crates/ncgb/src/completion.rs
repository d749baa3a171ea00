//! Overlap elements and completion: full Buchberger-style completion with
//! mandatory guards, and degree-truncated completion for graded ideals.
//!
//! Obstructions are processed in non-decreasing degree order, FIFO within a
//! degree, so runs are reproducible. For homogeneous inputs the working basis
//! stays LM-reduced on its own; the ungraded loop restores LM-reducedness by
//! displacing elements whose leading monomial becomes divisible by a new
//! remainder's and re-reducing them.

use std::collections::BinaryHeap;
use std::collections::VecDeque;

use crate::division::{interreduce, normal_form};
use crate::error::Error;
use crate::poly::{Context, Homogeneity, Poly};
use crate::word::{divides, proper_overlaps, OverlapShape, Word};

/// A pending overlap between two working-basis elements, with the weighted
/// degree of the corresponding overlap element (computed from words alone).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionTask {
    pub left: usize,
    pub right: usize,
    pub shape: OverlapShape,
    pub degree: u64,
}

/// A degree-truncated basis: monic homogeneous elements in non-decreasing
/// degree order, LM-reduced as a set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedBasis {
    pub elements: Vec<Poly>,
    pub truncation_degree: u64,
}

/// Stopping criterion for the ungraded completion loop. One is mandatory:
/// completion may not terminate on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Guard {
    MaxDegree(u64),
    MaxElements(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompletionStatus {
    /// Every obstruction was exhausted; the output is a Gröbner basis.
    Complete,
    /// The guard fired; the partial basis is still a generating set.
    GuardHit { pending: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionResult {
    pub basis: Vec<Poly>,
    pub status: CompletionStatus,
}

/// A failed certificate: the overlap of the named pair survives division.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbWitness {
    pub left: usize,
    pub right: usize,
    pub shape: OverlapShape,
    pub remainder: Poly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GbCheck {
    Certified,
    Failed(GbWitness),
}

impl GbCheck {
    pub fn is_certified(&self) -> bool {
        matches!(self, GbCheck::Certified)
    }
}

/// The overlap element of `f` and `g` for a given shape:
/// `f * right_cofactor / lc(f) - left_cofactor * g / lc(g)`.
/// Its words all lie strictly below the common product of leading monomials.
pub fn overlap_element(f: &Poly, g: &Poly, shape: &OverlapShape, ctx: &Context) -> Result<Poly, Error> {
    let (lm_f, lc_f) = f.leading()?;
    let (lm_g, lc_g) = g.leading()?;
    let lhs = lm_f.concat(&shape.right_cofactor);
    let rhs = shape.left_cofactor.concat(lm_g);
    if lhs != rhs
        || divides(lm_f, &shape.left_cofactor)
        || divides(lm_g, &shape.right_cofactor)
    {
        return Err(Error::InvalidOverlapShape);
    }
    let a = Poly::sandwich(&Word::one(), f, &shape.right_cofactor).scalar_mul(&lc_f.inverse()?);
    let b = Poly::sandwich(&shape.left_cofactor, g, &Word::one()).scalar_mul(&lc_g.inverse()?);
    Ok(a.sub(&b, ctx))
}

/// All obstruction tasks for the ordered pair `(i, j)` of basis elements.
/// Elements with an empty leading monomial (units) produce none.
fn tasks_for_pair(i: usize, j: usize, gi: &Poly, gj: &Poly, ctx: &Context) -> Vec<ObstructionTask> {
    let lm_i = gi.leading_word().expect("nonzero basis element");
    let lm_j = gj.leading_word().expect("nonzero basis element");
    if lm_i.is_empty() || lm_j.is_empty() {
        return Vec::new();
    }
    proper_overlaps(lm_i, lm_j)
        .expect("nonempty leading monomials")
        .into_iter()
        .map(|shape| {
            let degree =
                lm_i.wdegree(&ctx.signature) + shape.right_cofactor.wdegree(&ctx.signature);
            debug_assert_eq!(
                degree,
                shape.left_cofactor.wdegree(&ctx.signature) + lm_j.wdegree(&ctx.signature)
            );
            ObstructionTask {
                left: i,
                right: j,
                shape,
                degree,
            }
        })
        .collect()
}

/// Min-heap entry: smallest degree first, insertion order within a degree.
#[derive(Debug, PartialEq, Eq)]
struct QueuedTask {
    degree: u64,
    seq: u64,
    task: ObstructionTask,
}

impl Ord for QueuedTask {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .degree
            .cmp(&self.degree)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

impl PartialOrd for QueuedTask {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Default)]
struct TaskQueue {
    heap: BinaryHeap<QueuedTask>,
    next_seq: u64,
}

impl TaskQueue {
    fn push(&mut self, task: ObstructionTask) {
        self.heap.push(QueuedTask {
            degree: task.degree,
            seq: self.next_seq,
            task,
        });
        self.next_seq += 1;
    }

    fn min_degree(&self) -> Option<u64> {
        self.heap.peek().map(|e| e.degree)
    }

    fn pop(&mut self) -> Option<ObstructionTask> {
        self.heap.pop().map(|e| e.task)
    }
}

/// Enqueues the tasks produced by appending element `new` to the working
/// basis: pairs with every live earlier element in both orders, then the
/// self-pair. `None` slots are displaced elements and contribute nothing.
fn enqueue_new_element_tasks(
    queue: &mut TaskQueue,
    slots: &[Option<Poly>],
    new: usize,
    ctx: &Context,
    degree_cap: Option<u64>,
) {
    let g_new = slots[new].as_ref().expect("new element is live");
    let mut push = |task: ObstructionTask| {
        if degree_cap.map_or(true, |cap| task.degree <= cap) {
            queue.push(task);
        }
    };
    for (i, slot) in slots.iter().enumerate().take(new) {
        let Some(gi) = slot else { continue };
        for t in tasks_for_pair(i, new, gi, g_new, ctx) {
            push(t);
        }
        for t in tasks_for_pair(new, i, g_new, gi, ctx) {
            push(t);
        }
    }
    for t in tasks_for_pair(new, new, g_new, g_new, ctx) {
        push(t);
    }
}

/// Same, for the truncated loop where the basis only ever grows.
fn enqueue_for_live_basis(
    queue: &mut TaskQueue,
    basis: &[Poly],
    new: usize,
    ctx: &Context,
    degree_cap: u64,
) {
    let mut push = |task: ObstructionTask| {
        if task.degree <= degree_cap {
            queue.push(task);
        }
    };
    for (i, gi) in basis.iter().enumerate().take(new) {
        for t in tasks_for_pair(i, new, gi, &basis[new], ctx) {
            push(t);
        }
        for t in tasks_for_pair(new, i, &basis[new], gi, ctx) {
            push(t);
        }
    }
    for t in tasks_for_pair(new, new, &basis[new], &basis[new], ctx) {
        push(t);
    }
}

/// Shared loop for the truncated computations: processes pending generators
/// and obstructions in non-decreasing degree order. Obstructions of a degree
/// are exhausted before the generators of that degree. Returns the basis and
/// the original indices of the generators that survived division (the kept
/// set), in processing order.
pub(crate) fn truncate_loop(
    gens: Vec<(usize, Poly)>,
    n0: u64,
    ctx: &Context,
) -> Result<(Vec<Poly>, Vec<usize>), Error> {
    let sig = &ctx.signature;
    let mut basis: Vec<Poly> = Vec::new();
    let mut kept: Vec<usize> = Vec::new();
    let mut queue = TaskQueue::default();
    let mut next_gen = 0usize;

    loop {
        let gen_degree = gens[next_gen..]
            .first()
            .map(|(_, f)| f.degree(sig).expect("nonzero generator"))
            .filter(|&d| d <= n0);
        let task_degree = queue.min_degree();
        let n = match (gen_degree, task_degree) {
            (None, None) => break,
            (a, b) => a.unwrap_or(u64::MAX).min(b.unwrap_or(u64::MAX)),
        };

        // First pass: every obstruction of degree n. Newly created tasks all
        // have strictly larger degree, so popping while the top matches n is
        // the same as snapshotting the degree class up front.
        while queue.min_degree() == Some(n) {
            let task = queue.pop().expect("nonempty queue");
            let o = overlap_element(&basis[task.left], &basis[task.right], &task.shape, ctx)?;
            let r = normal_form(&o, &basis, ctx)?;
            if r.is_zero() {
                continue;
            }
            debug_assert_eq!(r.homogeneity(sig), Homogeneity::Degree(n));
            basis.push(r.monic()?);
            let new = basis.len() - 1;
            enqueue_for_live_basis(&mut queue, &basis, new, ctx, n0);
        }

        // Second pass: every pending generator of degree n, in input order.
        while next_gen < gens.len() {
            let d = gens[next_gen].1.degree(sig).expect("nonzero generator");
            if d != n {
                break;
            }
            let (orig_index, f) = gens[next_gen].clone();
            next_gen += 1;
            let r = normal_form(&f, &basis, ctx)?;
            if r.is_zero() {
                continue;
            }
            kept.push(orig_index);
            basis.push(r.monic()?);
            let new = basis.len() - 1;
            enqueue_for_live_basis(&mut queue, &basis, new, ctx, n0);
        }
    }

    Ok((basis, kept))
}

/// Validates and stably sorts homogeneous generators by degree, pairing each
/// with its original input index.
pub(crate) fn sorted_homogeneous(
    gens: &[Poly],
    ctx: &Context,
) -> Result<Vec<(usize, Poly)>, Error> {
    let mut indexed = Vec::with_capacity(gens.len());
    for (i, f) in gens.iter().enumerate() {
        match f.homogeneity(&ctx.signature) {
            Homogeneity::Degree(d) => indexed.push((d, i, f.clone())),
            Homogeneity::Zero => return Err(Error::ZeroGenerator),
            Homogeneity::Mixed => return Err(Error::NonHomogeneous { index: i }),
        }
    }
    indexed.sort_by_key(|(d, _, _)| *d);
    Ok(indexed.into_iter().map(|(_, i, f)| (i, f)).collect())
}

/// Degree-truncated completion for homogeneous generators: returns a basis
/// whose leading monomials detect every ideal element of degree at most `n0`.
/// Generators of larger degree cannot contribute below the truncation and are
/// skipped.
pub fn truncated_gb(gens: &[Poly], n0: u64, ctx: &Context) -> Result<TruncatedBasis, Error> {
    let sorted = sorted_homogeneous(gens, ctx)?;
    if let Some((_, f)) = sorted.first() {
        let smallest = f.degree(&ctx.signature).expect("nonzero generator");
        if n0 < smallest {
            return Err(Error::TruncationDegreeTooLow { given: n0, smallest });
        }
    }
    let (elements, _) = truncate_loop(sorted, n0, ctx)?;
    Ok(TruncatedBasis {
        elements,
        truncation_degree: n0,
    })
}

/// Checks whether every overlap element of degree at most `n` (over all
/// ordered pairs, self-pairs included) divides to zero by the degree-`n` part
/// of the basis. For homogeneous LM-reduced input this certifies the
/// truncated Gröbner property; the first surviving remainder is the witness.
pub fn is_groebner_up_to(basis: &[Poly], n: u64, ctx: &Context) -> Result<GbCheck, Error> {
    if basis.iter().any(Poly::is_zero) {
        return Err(Error::ZeroGenerator);
    }
    let sig = &ctx.signature;
    let bounded: Vec<Poly> = basis
        .iter()
        .filter(|g| g.degree(sig).map_or(false, |d| d <= n))
        .cloned()
        .collect();
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            for task in tasks_for_pair(i, j, &basis[i], &basis[j], ctx) {
                if task.degree > n {
                    continue;
                }
                let o = overlap_element(&basis[i], &basis[j], &task.shape, ctx)?;
                let r = normal_form(&o, &bounded, ctx)?;
                if !r.is_zero() {
                    return Ok(GbCheck::Failed(GbWitness {
                        left: i,
                        right: j,
                        shape: task.shape,
                        remainder: r,
                    }));
                }
            }
        }
    }
    Ok(GbCheck::Certified)
}

/// Completion for arbitrary (possibly inhomogeneous) generators. The input is
/// interreduced first, and the working basis is kept LM-reduced throughout:
/// when a new remainder's leading monomial divides an older element's, the
/// older element is displaced and re-enters the loop through re-reduction.
pub fn buchberger(gens: &[Poly], guard: Guard, ctx: &Context) -> Result<CompletionResult, Error> {
    let start = interreduce(gens, ctx)?;

    // Slots; displaced elements become None and their tasks are skipped.
    let mut slots: Vec<Option<Poly>> = start.into_iter().map(Some).collect();
    let mut queue = TaskQueue::default();
    let mut pending_polys: VecDeque<Poly> = VecDeque::new();

    for i in 0..slots.len() {
        for j in 0..slots.len() {
            if let (Some(gi), Some(gj)) = (&slots[i], &slots[j]) {
                for t in tasks_for_pair(i, j, gi, gj, ctx) {
                    queue.push(t);
                }
            }
        }
    }

    loop {
        // Re-reduce displaced elements before any pair work.
        if let Some(h) = pending_polys.pop_front() {
            let live = live_elements(&slots);
            let r = normal_form(&h, &live, ctx)?;
            if !r.is_zero() {
                if let Some(outcome) =
                    append_element(&mut slots, &mut queue, &mut pending_polys, r, guard, ctx)?
                {
                    return Ok(outcome);
                }
            }
            continue;
        }

        let task = loop {
            match queue.pop() {
                None => {
                    return Ok(CompletionResult {
                        basis: live_elements(&slots),
                        status: CompletionStatus::Complete,
                    })
                }
                Some(t) => {
                    if slots[t.left].is_none() || slots[t.right].is_none() {
                        continue;
                    }
                    break t;
                }
            }
        };

        if let Guard::MaxDegree(cap) = guard {
            if task.degree > cap {
                // Everything still queued has at least this degree.
                let pending = 1 + count_live_tasks(&queue, &slots);
                return Ok(CompletionResult {
                    basis: live_elements(&slots),
                    status: CompletionStatus::GuardHit { pending },
                });
            }
        }

        let (f, g) = (
            slots[task.left].as_ref().expect("checked live"),
            slots[task.right].as_ref().expect("checked live"),
        );
        let o = overlap_element(f, g, &task.shape, ctx)?;
        let live = live_elements(&slots);
        let r = normal_form(&o, &live, ctx)?;
        if r.is_zero() {
            continue;
        }
        if let Some(outcome) =
            append_element(&mut slots, &mut queue, &mut pending_polys, r, guard, ctx)?
        {
            return Ok(outcome);
        }
    }
}

fn live_elements(slots: &[Option<Poly>]) -> Vec<Poly> {
    slots.iter().filter_map(|s| s.clone()).collect()
}

fn count_live_tasks(queue: &TaskQueue, slots: &[Option<Poly>]) -> usize {
    queue
        .heap
        .iter()
        .filter(|e| slots[e.task.left].is_some() && slots[e.task.right].is_some())
        .count()
}

/// Appends a nonzero normal remainder to the working basis, displacing any
/// element whose leading monomial it now divides. Returns the guard outcome
/// if the element budget is exhausted.
fn append_element(
    slots: &mut Vec<Option<Poly>>,
    queue: &mut TaskQueue,
    pending_polys: &mut VecDeque<Poly>,
    r: Poly,
    guard: Guard,
    ctx: &Context,
) -> Result<Option<CompletionResult>, Error> {
    if let Guard::MaxElements(cap) = guard {
        let live_count = slots.iter().filter(|s| s.is_some()).count();
        if live_count >= cap {
            let pending = 1 + pending_polys.len() + count_live_tasks(queue, slots);
            return Ok(Some(CompletionResult {
                basis: live_elements(slots),
                status: CompletionStatus::GuardHit { pending },
            }));
        }
    }

    let monic = r.monic()?;
    let new_lm = monic.leading_word()?.clone();
    for slot in slots.iter_mut() {
        let displaced = slot
            .as_ref()
            .map_or(false, |g| divides(&new_lm, g.leading_word().expect("live element")));
        if displaced {
            pending_polys.push_back(slot.take().expect("displaced element"));
        }
    }

    slots.push(Some(monic));
    let new = slots.len() - 1;
    enqueue_new_element_tasks(queue, slots, new, ctx, None);
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::OrderSpec;
    use crate::scalar::{FieldSpec, Scalar};
    use crate::word::Signature;

    fn ctx_with(weights: &[u64]) -> Context {
        let names = ["x", "y"][..weights.len()].iter().map(|s| s.to_string()).collect();
        Context::new(
            FieldSpec::Rationals,
            Signature::new(names, weights.to_vec()).unwrap(),
            OrderSpec::deglex_default(weights.len()),
        )
        .unwrap()
    }

    fn ctx() -> Context {
        ctx_with(&[1, 1])
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
    fn overlap_element_examples() {
        let c = ctx();
        // f = g = xx - yx, shape x|x: f*x - x*f = xyx - yxx.
        let f = poly(&c, &[(1, &[0, 0]), (-1, &[1, 0])]);
        let shape = OverlapShape { right_cofactor: w(&[0]), left_cofactor: w(&[0]) };
        let o = overlap_element(&f, &f, &shape, &c).unwrap();
        assert_eq!(o, poly(&c, &[(1, &[0, 1, 0]), (-1, &[1, 0, 0])]));
        assert_eq!(o.homogeneity(&c.signature), Homogeneity::Degree(3));

        // xy - yx has no self-overlap shapes at all.
        let g = poly(&c, &[(1, &[0, 1]), (-1, &[1, 0])]);
        assert!(proper_overlaps(g.leading_word().unwrap(), g.leading_word().unwrap())
            .unwrap()
            .is_empty());

        // Weighted case: x^2 - y with y of weight 2 is homogeneous; its
        // self-overlap is xy - yx.
        let c12 = ctx_with(&[1, 2]);
        let h = poly(&c12, &[(1, &[0, 0]), (-1, &[1])]);
        let o = overlap_element(&h, &h, &shape, &c12).unwrap();
        assert_eq!(o, poly(&c12, &[(1, &[0, 1]), (-1, &[1, 0])]));
    }

    #[test]
    fn invalid_shapes_are_rejected() {
        let c = ctx();
        let f = poly(&c, &[(1, &[0, 0])]);
        let g = poly(&c, &[(1, &[1, 1])]);
        let shape = OverlapShape { right_cofactor: w(&[0]), left_cofactor: w(&[0]) };
        assert_eq!(
            overlap_element(&f, &g, &shape, &c),
            Err(Error::InvalidOverlapShape)
        );
    }

    #[test]
    fn groebner_certificate_examples() {
        let c = ctx();
        let commutator = poly(&c, &[(1, &[0, 1]), (-1, &[1, 0])]);
        assert!(is_groebner_up_to(&[commutator], 10, &c).unwrap().is_certified());

        let g = poly(&c, &[(1, &[0, 0]), (-1, &[1, 0])]);
        match is_groebner_up_to(&[g.clone()], 3, &c).unwrap() {
            GbCheck::Failed(wit) => {
                assert_eq!(wit.remainder, poly(&c, &[(1, &[0, 1, 0]), (-1, &[1, 1, 0])]));
            }
            GbCheck::Certified => panic!("expected a witness"),
        }

        let completed = vec![g, poly(&c, &[(1, &[0, 1, 0]), (-1, &[1, 1, 0])])];
        assert!(is_groebner_up_to(&completed, 3, &c).unwrap().is_certified());
    }

    #[test]
    fn truncated_completion_examples() {
        let c = ctx();
        let g = poly(&c, &[(1, &[0, 0]), (-1, &[1, 0])]);

        let basis = truncated_gb(&[g.clone()], 3, &c).unwrap();
        assert_eq!(
            basis.elements,
            vec![g.clone(), poly(&c, &[(1, &[0, 1, 0]), (-1, &[1, 1, 0])])]
        );
        assert_eq!(basis.truncation_degree, 3);
        assert!(is_groebner_up_to(&basis.elements, 3, &c).unwrap().is_certified());

        let basis = truncated_gb(&[g.clone()], 2, &c).unwrap();
        assert_eq!(basis.elements, vec![g]);

        let commutator = poly(&c, &[(1, &[0, 1]), (-1, &[1, 0])]);
        let basis = truncated_gb(&[commutator.clone()], 8, &c).unwrap();
        assert_eq!(basis.elements, vec![commutator]);
    }

    #[test]
    fn truncated_completion_validates_input() {
        let c = ctx();
        let inhomogeneous = poly(&c, &[(1, &[0, 0]), (-1, &[1])]);
        assert_eq!(
            truncated_gb(&[inhomogeneous], 4, &c),
            Err(Error::NonHomogeneous { index: 0 })
        );

        let g = poly(&c, &[(1, &[0, 0])]);
        assert_eq!(
            truncated_gb(&[g], 1, &c),
            Err(Error::TruncationDegreeTooLow { given: 1, smallest: 2 })
        );
    }

    #[test]
    fn truncation_is_monotone_in_the_degree() {
        let c = ctx();
        let gens = vec![
            poly(&c, &[(1, &[0, 0]), (-1, &[1, 0])]),
            poly(&c, &[(1, &[1, 1])]),
        ];
        let deep = truncated_gb(&gens, 6, &c).unwrap();
        for m in 2..=6u64 {
            let shallow = truncated_gb(&gens, m, &c).unwrap();
            let prefix: Vec<&Poly> = deep
                .elements
                .iter()
                .filter(|g| g.degree(&c.signature).unwrap() <= m)
                .collect();
            assert_eq!(shallow.elements.iter().collect::<Vec<_>>(), prefix, "m = {m}");
        }
    }

    #[test]
    fn fresh_leading_monomials_extend_certificates() {
        let c = ctx();
        let gens = vec![poly(&c, &[(1, &[0, 0]), (-1, &[1, 0])])];
        let basis = truncated_gb(&gens, 3, &c).unwrap();
        // Append a degree-3 element whose leading monomial avoids the basis.
        let fresh = poly(&c, &[(1, &[1, 1, 1])]);
        for g in &basis.elements {
            assert!(!divides(g.leading_word().unwrap(), fresh.leading_word().unwrap()));
        }
        let mut extended = basis.elements.clone();
        extended.push(fresh);
        assert!(is_groebner_up_to(&extended, 3, &c).unwrap().is_certified());
    }

    #[test]
    fn completion_examples() {
        let c = ctx();
        let commutator = poly(&c, &[(1, &[0, 1]), (-1, &[1, 0])]);
        let out = buchberger(&[commutator.clone()], Guard::MaxDegree(10), &c).unwrap();
        assert_eq!(out.status, CompletionStatus::Complete);
        assert_eq!(out.basis, vec![commutator]);

        // x^2 - y completes with the commutator.
        let g = poly(&c, &[(1, &[0, 0]), (-1, &[1])]);
        let out = buchberger(&[g.clone()], Guard::MaxDegree(6), &c).unwrap();
        assert_eq!(out.status, CompletionStatus::Complete);
        assert_eq!(
            out.basis,
            vec![g, poly(&c, &[(1, &[0, 1]), (-1, &[1, 0])])]
        );

        let sq = poly(&c, &[(1, &[0, 0])]);
        let out = buchberger(&[sq.clone()], Guard::MaxElements(5), &c).unwrap();
        assert_eq!(out.status, CompletionStatus::Complete);
        assert_eq!(out.basis, vec![sq]);
    }

    #[test]
    fn guard_reports_pending_work() {
        let c = ctx();
        // x^2 - xy never completes at bounded degree; the guard must fire.
        let g = poly(&c, &[(1, &[0, 0]), (-1, &[0, 1])]);
        let out = buchberger(&[g], Guard::MaxDegree(4), &c).unwrap();
        match out.status {
            CompletionStatus::GuardHit { pending } => assert!(pending > 0),
            CompletionStatus::Complete => {
                // If it completed below the cap, every overlap must reduce.
                assert!(is_groebner_up_to(&out.basis, 8, &c).unwrap().is_certified());
            }
        }
    }
}
