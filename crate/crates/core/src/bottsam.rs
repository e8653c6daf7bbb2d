//! Word-level Bott-Samelson combinatorics: the dimension of the Schubert
//! image of a word variety, dimensions of the contracted classes attached to
//! node subsets, and the face report enumerating them.

use std::collections::BTreeSet;

use crate::bundle::ParabolicSet;
use crate::rootsys::RootSystem;
use crate::weyl::{self, Word};
use crate::{Error, Result};

/// Largest rank for which the `2^k` subset report is generated.
pub const FACE_REPORT_MAX_RANK: usize = 12;

/// One row of the face report: a proper subset, the dimension of its class,
/// and the longest word of the corresponding parabolic subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceRow {
    pub subset: Vec<usize>,
    pub dimension: usize,
    pub longest_word: Word,
}

/// Dimension of the Schubert variety a word variety maps onto: the length of
/// the Demazure product. Equals the word length exactly when the word is
/// reduced.
pub fn image_dimension(rs: &RootSystem, word: &Word) -> Result<usize> {
    Ok(weyl::demazure_product(rs, word)?.length())
}

/// Dimension of a contracted class for the subset `I`: the number of
/// positive roots supported on `I`, which is also the length of the longest
/// element of the parabolic subgroup generated by `I`.
pub fn chi_dimension(rs: &RootSystem, p: &ParabolicSet) -> Result<usize> {
    if let Some(&t) = p.0.iter().find(|&&t| t >= rs.rank()) {
        return Err(Error::IndexOutOfRange(t, rs.rank()));
    }
    Ok(rs.positive_subsystem(&p.0).len())
}

/// One row per proper subset of the node set, in canonical order (by size,
/// then lexicographically).
pub fn simplicial_face_report(rs: &RootSystem) -> Result<Vec<FaceRow>> {
    let k = rs.rank();
    if k > FACE_REPORT_MAX_RANK {
        return Err(Error::RankTooLarge(k, FACE_REPORT_MAX_RANK));
    }
    let mut subsets: Vec<Vec<usize>> = (0..(1u32 << k) - 1)
        .map(|mask| (0..k).filter(|t| mask >> t & 1 == 1).collect())
        .collect();
    subsets.sort_by_key(|s| (s.len(), s.clone()));
    subsets
        .into_iter()
        .map(|subset| {
            let set: BTreeSet<usize> = subset.iter().copied().collect();
            let (_, longest_word) = weyl::longest_element(rs, &set)?;
            Ok(FaceRow {
                dimension: rs.positive_subsystem(&set).len(),
                subset,
                longest_word,
            })
        })
        .collect()
}
