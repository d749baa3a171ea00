//! Words of the free monoid on the generators: weighted degrees, two-sided
//! divisibility, and overlap enumeration.
//!
//! A word is a finite sequence of variable indices; the empty word is the
//! monoid identity.

use crate::error::Error;

/// The generator alphabet: distinct names with positive weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    names: Vec<String>,
    weights: Vec<u64>,
}

impl Signature {
    pub fn new(names: Vec<String>, weights: Vec<u64>) -> Result<Self, Error> {
        if names.is_empty() {
            return Err(Error::InvalidSignature("at least one variable required".into()));
        }
        if names.len() != weights.len() {
            return Err(Error::InvalidSignature(
                "names and weights must have equal length".into(),
            ));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::InvalidSignature(format!("duplicate variable name `{a}`")));
            }
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidSignature(format!(
                "weight of `{}` must be positive",
                names[i]
            )));
        }
        Ok(Signature { names, weights })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weight(&self, i: usize) -> u64 {
        self.weights[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A monomial of the free algebra: a sequence of variable indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    /// The empty word, i.e. the monomial 1.
    pub fn one() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn from_letters(letters: Vec<u32>) -> Self {
        Word { letters }
    }

    pub fn letter_word(i: u32) -> Self {
        Word { letters: vec![i] }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn concat3(left: &Word, mid: &Word, right: &Word) -> Word {
        let mut letters = Vec::with_capacity(left.len() + mid.len() + right.len());
        letters.extend_from_slice(&left.letters);
        letters.extend_from_slice(&mid.letters);
        letters.extend_from_slice(&right.letters);
        Word { letters }
    }

    fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word {
            letters: self.letters[range].to_vec(),
        }
    }

    /// Weighted degree: the sum of the letters' weights; 0 for the empty word.
    pub fn wdegree(&self, sig: &Signature) -> u64 {
        self.letters.iter().map(|&i| sig.weight(i as usize)).sum()
    }
}

/// One two-sided occurrence of a factor: `v = left * u * right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub left: Word,
    pub right: Word,
}

/// The cofactor pair of an overlap between two leading monomials `a` and `b`:
/// `a * right_cofactor = left_cofactor * b`, where the shared part is a proper
/// suffix of `a` and a proper prefix of `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapShape {
    /// Multiplies the first element on the right.
    pub right_cofactor: Word,
    /// Multiplies the second element on the left.
    pub left_cofactor: Word,
}

/// All splittings `v = left * u * right`, leftmost first; empty iff `u` does
/// not divide `v`. The empty pattern is rejected.
pub fn occurrences(u: &Word, v: &Word) -> Result<Vec<Occurrence>, Error> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut found = Vec::new();
    if u.len() > v.len() {
        return Ok(found);
    }
    for i in 0..=(v.len() - u.len()) {
        if v.letters[i..i + u.len()] == u.letters[..] {
            found.push(Occurrence {
                left: v.slice(0..i),
                right: v.slice(i + u.len()..v.len()),
            });
        }
    }
    Ok(found)
}

/// Leftmost occurrence of `u` in `v`. Unlike [`occurrences`] this accepts the
/// empty pattern, which occurs at position 0 with `right = v`.
pub(crate) fn first_occurrence(u: &Word, v: &Word) -> Option<Occurrence> {
    if u.is_empty() {
        return Some(Occurrence {
            left: Word::one(),
            right: v.clone(),
        });
    }
    if u.len() > v.len() {
        return None;
    }
    (0..=(v.len() - u.len()))
        .find(|&i| v.letters[i..i + u.len()] == u.letters[..])
        .map(|i| Occurrence {
            left: v.slice(0..i),
            right: v.slice(i + u.len()..v.len()),
        })
}

/// True if `u` divides `v` as a factor. Empty `u` divides everything.
pub fn divides(u: &Word, v: &Word) -> bool {
    first_occurrence(u, v).is_some()
}

/// Proper overlaps of `a` against `b`: one shape for every nonempty shared
/// word that is simultaneously a proper suffix of `a` and a proper prefix of
/// `b`, ordered by increasing shared length. Inclusion matches (one word a
/// factor of the other) and the full self-match are not overlaps.
pub fn proper_overlaps(a: &Word, b: &Word) -> Result<Vec<OverlapShape>, Error> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut shapes = Vec::new();
    for shared in 1..a.len().min(b.len()) {
        if a.letters[a.len() - shared..] == b.letters[..shared] {
            shapes.push(OverlapShape {
                right_cofactor: b.slice(shared..b.len()),
                left_cofactor: a.slice(0..a.len() - shared),
            });
        }
    }
    Ok(shapes)
}

/// Number of words of the given weighted degree, as u128 to survive overflow.
pub fn count_words_of_degree(sig: &Signature, degree: u64) -> u128 {
    let mut counts = vec![0u128; degree as usize + 1];
    counts[0] = 1;
    for q in 1..=degree {
        let mut total: u128 = 0;
        for i in 0..sig.nvars() {
            let w = sig.weight(i);
            if w <= q {
                total = total.saturating_add(counts[(q - w) as usize]);
            }
        }
        counts[q as usize] = total;
    }
    counts[degree as usize]
}

/// All words of the given weighted degree, in letter-index order.
pub fn words_of_degree(sig: &Signature, degree: u64) -> Vec<Word> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    enumerate(sig, degree, &mut stack, &mut out);
    out
}

fn enumerate(sig: &Signature, remaining: u64, stack: &mut Vec<u32>, out: &mut Vec<Word>) {
    if remaining == 0 {
        out.push(Word::from_letters(stack.clone()));
        return;
    }
    for i in 0..sig.nvars() {
        let w = sig.weight(i);
        if w <= remaining {
            stack.push(i as u32);
            enumerate(sig, remaining - w, stack, out);
            stack.pop();
        }
    }
}

/// All words of length at most `maxlen`, shortest first.
pub fn words_up_to_len(sig: &Signature, maxlen: usize) -> Vec<Word> {
    let mut out = vec![Word::one()];
    let mut frontier = vec![Word::one()];
    for _ in 0..maxlen {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 0..sig.nvars() {
                let ext = w.concat(&Word::letter_word(i as u32));
                next.push(ext);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
