//! The Weyl group as an exact matrix group: words, inversion lengths,
//! reduced-word detection, longest elements of parabolic subgroups, guarded
//! enumeration and Demazure products.
//!
//! Composition convention, fixed once for the whole crate: the word `(a, b)`
//! maps to the matrix product `M_a * M_b` acting on column vectors, i.e. the
//! leftmost letter is applied last to a vector.

use std::collections::BTreeSet;
use std::collections::HashMap;

use crate::mat::{dot, IMat};
use crate::rootsys::{Root, RootSystem};
use crate::{Error, Result};

/// A word in the simple reflections, letters zero-based.
pub type Word = Vec<usize>;

/// A Weyl group element, stored as its action on simple-root coordinates and
/// on fundamental-weight coordinates, together with the inverses of both.
/// Keeping the four matrices makes every dual action a plain product, with no
/// matrix inversion anywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    root_mat: IMat,
    root_inv: IMat,
    weight_mat: IMat,
    weight_inv: IMat,
    length: usize,
}

impl WeylElement {
    pub fn identity(rank: usize) -> WeylElement {
        let id = IMat::identity(rank);
        WeylElement {
            root_mat: id.clone(),
            root_inv: id.clone(),
            weight_mat: id.clone(),
            weight_inv: id,
            length: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.root_mat.n()
    }

    /// `#{beta in Phi+ : w(beta) in Phi-}`, cached at construction.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.root_mat == IMat::identity(self.rank())
    }

    /// Action on simple-root coordinates.
    pub fn root_matrix(&self) -> &IMat {
        &self.root_mat
    }

    pub fn act_on_root(&self, root: &Root) -> Root {
        Root(self.root_mat.mul_vec(&root.0))
    }

    /// Action on fundamental-weight coordinates (the contragredient of the
    /// root action, expressed in the dual basis).
    pub fn act_on_weight(&self, lambda: &[i64]) -> Result<Vec<i64>> {
        self.check_rank(lambda)?;
        Ok(self.weight_mat.mul_vec(lambda))
    }

    /// Action on simple-coroot coordinates.
    pub fn act_on_coroot(&self, cv: &[i64]) -> Result<Vec<i64>> {
        self.check_rank(cv)?;
        // Coroots pair with weights by dot product, so the coroot action is
        // the inverse-transpose of the weight action.
        Ok(self.weight_inv.transpose().mul_vec(cv))
    }

    /// Action on fundamental-coweight coordinates (the coordinate system of
    /// cocycles).
    pub fn act_on_coweight(&self, v: &[i64]) -> Result<Vec<i64>> {
        self.check_rank(v)?;
        Ok(self.root_inv.transpose().mul_vec(v))
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            root_mat: self.root_inv.clone(),
            root_inv: self.root_mat.clone(),
            weight_mat: self.weight_inv.clone(),
            weight_inv: self.weight_mat.clone(),
            length: self.length,
        }
    }

    /// `self * other` with the length recomputed by inversion count.
    pub fn mul(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        let mut out = self.compose(other);
        out.length = inversion_count(rs, &out.root_mat);
        out
    }

    fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            root_mat: self.root_mat.mul(&other.root_mat),
            root_inv: other.root_inv.mul(&self.root_inv),
            weight_mat: self.weight_mat.mul(&other.weight_mat),
            weight_inv: other.weight_inv.mul(&self.weight_inv),
            length: 0,
        }
    }

    /// True iff `l(w * s_i) > l(w)`, i.e. `w(alpha_i)` is positive.
    pub fn ascends_right(&self, i: usize) -> bool {
        self.root_mat.col(i).iter().all(|&c| c >= 0)
    }

    /// True iff `l(s_i * w) > l(w)`, i.e. `w^{-1}(alpha_i)` is positive.
    pub fn ascends_left(&self, i: usize) -> bool {
        self.root_inv.col(i).iter().all(|&c| c >= 0)
    }

    /// The lexicographically smallest reduced word, extracted by repeatedly
    /// stripping the smallest possible first letter.
    pub fn reduced_word(&self, rs: &RootSystem) -> Word {
        let mut w = self.clone();
        let mut word = Word::new();
        let k = self.rank();
        loop {
            let Some(i) = (0..k).find(|&i| !w.ascends_left(i)) else {
                break;
            };
            word.push(i);
            w = simple_reflection_unchecked(rs, i).compose(&w);
        }
        word
    }

    fn check_rank(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: v.len(),
            });
        }
        Ok(())
    }
}

fn inversion_count(rs: &RootSystem, root_mat: &IMat) -> usize {
    rs.positive_roots()
        .iter()
        .filter(|r| root_mat.mul_vec(&r.0).iter().all(|&c| c <= 0))
        .count()
}

fn simple_reflection_unchecked(rs: &RootSystem, i: usize) -> WeylElement {
    let k = rs.rank();
    let c = rs.cartan();
    // s_i(alpha_j) = alpha_j - C[j][i] alpha_i
    let mut root_mat = IMat::identity(k);
    for j in 0..k {
        root_mat.set(i, j, root_mat.get(i, j) - c.get(j, i));
    }
    // On weight coordinates: lambda_j -> lambda_j - delta_{ij} sum, i.e.
    // lambda -> lambda - lambda_i * (row i of C).
    let mut weight_mat = IMat::identity(k);
    for j in 0..k {
        weight_mat.set(j, i, weight_mat.get(j, i) - c.get(i, j));
    }
    WeylElement {
        root_inv: root_mat.clone(),
        root_mat,
        weight_inv: weight_mat.clone(),
        weight_mat,
        length: 1,
    }
}

/// The simple reflection `s_i` (zero-based node index).
pub fn simple_reflection(rs: &RootSystem, i: usize) -> Result<WeylElement> {
    if i >= rs.rank() {
        return Err(Error::IndexOutOfRange(i, rs.rank()));
    }
    Ok(simple_reflection_unchecked(rs, i))
}

/// Product of the simple reflections of `word`, leftmost letter first in the
/// matrix product.
pub fn word_to_element(rs: &RootSystem, word: &[usize]) -> Result<WeylElement> {
    let mut w = WeylElement::identity(rs.rank());
    for &i in word {
        w = w.compose(&simple_reflection(rs, i)?);
    }
    w.length = inversion_count(rs, &w.root_mat);
    Ok(w)
}

pub fn is_reduced(rs: &RootSystem, word: &[usize]) -> Result<bool> {
    Ok(word_to_element(rs, word)?.length() == word.len())
}

/// Longest element of the parabolic subgroup generated by `{s_i : i in S}`,
/// with a reduced word using only letters of `S`. Found by greedily taking
/// right ascents; the length at the fixed point is the number of positive
/// roots supported on `S`.
pub fn longest_element(rs: &RootSystem, s: &BTreeSet<usize>) -> Result<(WeylElement, Word)> {
    for &i in s {
        if i >= rs.rank() {
            return Err(Error::IndexOutOfRange(i, rs.rank()));
        }
    }
    let mut w = WeylElement::identity(rs.rank());
    let mut word = Word::new();
    loop {
        let Some(&i) = s.iter().find(|&&i| w.ascends_right(i)) else {
            break;
        };
        w = w.compose(&simple_reflection_unchecked(rs, i));
        word.push(i);
    }
    w.length = word.len();
    debug_assert_eq!(w.length, inversion_count(rs, &w.root_mat));
    Ok((w, word))
}

/// Left fold `x * s_i := x s_i` when that ascends, else `x`.
pub fn demazure_product(rs: &RootSystem, word: &[usize]) -> Result<WeylElement> {
    let mut w = WeylElement::identity(rs.rank());
    for &i in word {
        if i >= rs.rank() {
            return Err(Error::IndexOutOfRange(i, rs.rank()));
        }
        if w.ascends_right(i) {
            let len = w.length + 1;
            w = w.compose(&simple_reflection_unchecked(rs, i));
            w.length = len;
        }
    }
    Ok(w)
}

/// Default enumeration guard.
pub const DEFAULT_ENUM_LIMIT: usize = 1_000_000;

/// All group elements in canonical order (length, then lexicographically
/// smallest reduced word), each paired with that word.
///
/// The search is a breadth-first closure under left multiplication, keyed by
/// the orbit of the regular weight `rho`; matrices are only materialized once
/// the closure is known to fit under `limit`.
pub fn enumerate(rs: &RootSystem, limit: usize) -> Result<Vec<(WeylElement, Word)>> {
    let k = rs.rank();
    let c = rs.cartan();

    struct State {
        key: Vec<i64>,
        word: Word,
        parent: usize,
        letter: usize,
        length: usize,
    }

    let rho = vec![1i64; k];
    let mut states = vec![State {
        key: rho.clone(),
        word: Word::new(),
        parent: usize::MAX,
        letter: usize::MAX,
        length: 0,
    }];
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    index.insert(rho, 0);

    let mut layer: Vec<usize> = vec![0];
    let mut length = 0;
    while !layer.is_empty() {
        length += 1;
        let mut next: Vec<usize> = Vec::new();
        for &si in &layer {
            for i in 0..k {
                // s_i on weight coordinates: lambda -> lambda - lambda_i * C_i.
                let lam = &states[si].key;
                let li = lam[i];
                let child: Vec<i64> = (0..k).map(|j| lam[j] - li * c.get(i, j)).collect();
                let word = {
                    let mut w = Word::with_capacity(states[si].word.len() + 1);
                    w.push(i);
                    w.extend_from_slice(&states[si].word);
                    w
                };
                match index.get(&child) {
                    Some(&existing) => {
                        let st = &mut states[existing];
                        if st.length == length && word < st.word {
                            st.word = word;
                            st.parent = si;
                            st.letter = i;
                        }
                    }
                    None => {
                        if states.len() >= limit {
                            return Err(Error::GroupTooLarge {
                                limit,
                                partial: states.len(),
                            });
                        }
                        index.insert(child.clone(), states.len());
                        next.push(states.len());
                        states.push(State {
                            key: child,
                            word,
                            parent: si,
                            letter: i,
                            length,
                        });
                    }
                }
            }
        }
        layer = next;
    }

    // Materialize matrices along the search tree: element = s_letter * parent.
    let mut elements: Vec<WeylElement> = Vec::with_capacity(states.len());
    for (idx, st) in states.iter().enumerate() {
        if idx == 0 {
            elements.push(WeylElement::identity(k));
            continue;
        }
        let mut w = simple_reflection_unchecked(rs, st.letter).compose(&elements[st.parent]);
        w.length = st.length;
        elements.push(w);
    }

    let mut out: Vec<(WeylElement, Word)> = elements
        .into_iter()
        .zip(states.into_iter().map(|s| s.word))
        .collect();
    out.sort_by(|a, b| (a.0.length, &a.1).cmp(&(b.0.length, &b.1)));
    Ok(out)
}

/// Group order and maximal length by the same breadth-first closure as
/// [`enumerate`], but storing only orbit keys; usable for groups too large to
/// materialize.
pub fn enumerate_count(rs: &RootSystem, limit: usize) -> Result<(usize, usize)> {
    let k = rs.rank();
    let c = rs.cartan();
    let rho = vec![1i64; k];
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    seen.insert(rho.clone());
    let mut layer = vec![rho];
    let mut depth = 0usize;
    loop {
        let mut next = Vec::new();
        for lam in &layer {
            for i in 0..k {
                let li = lam[i];
                let child: Vec<i64> = (0..k).map(|j| lam[j] - li * c.get(i, j)).collect();
                if seen.insert(child.clone()) {
                    if seen.len() > limit {
                        return Err(Error::GroupTooLarge {
                            limit,
                            partial: seen.len(),
                        });
                    }
                    next.push(child);
                }
            }
        }
        if next.is_empty() {
            return Ok((seen.len(), depth));
        }
        depth += 1;
        layer = next;
    }
}

/// Convenience wrapper for pairing in fundamental-weight coordinates.
pub fn weight_coroot_pairing(lambda: &[i64], cv: &[i64]) -> i64 {
    dot(lambda, cv)
}
