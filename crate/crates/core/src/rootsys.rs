//! Root system generation by reflection closure, the coefficient vectors of
//! the positive-root sums, and sub-systems supported on a subset of nodes.
//!
//! Roots are stored in simple-root coordinates and coroots in simple-coroot
//! coordinates, so every pairing in the crate is an integer dot product.

use std::collections::BTreeSet;

use crate::diagrams::DynkinDiagram;
use crate::mat::{dot, IMat};
use crate::{Error, Result};

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c != 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Positive roots and positive coroots of a diagram, index-aligned: the
/// coroot at position `i` is the coroot of the root at position `i`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    diagram: DynkinDiagram,
    cartan: IMat,
    positive_roots: Vec<Root>,
    positive_coroots: Vec<Vec<i64>>,
}

impl RootSystem {
    /// Reflection closure starting from the simple roots. The coroot closure
    /// runs in lockstep on the transposed Cartan matrix, which keeps the
    /// root/coroot index alignment.
    pub fn generate(diagram: &DynkinDiagram) -> RootSystem {
        let cartan = diagram.cartan_matrix();
        let k = diagram.rank();

        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut pairs: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        for t in 0..k {
            let mut e = vec![0i64; k];
            e[t] = 1;
            seen.insert(e.clone());
            pairs.push((e.clone(), e));
        }

        let mut frontier: Vec<usize> = (0..k).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &idx in &frontier {
                let (root, coroot) = (pairs[idx].0.clone(), pairs[idx].1.clone());
                for i in 0..k {
                    // s_i(beta) = beta - <beta, alpha_i^v> alpha_i
                    let pr: i64 = (0..k).map(|j| root[j] * cartan.get(j, i)).sum();
                    let mut new_root = root.clone();
                    new_root[i] -= pr;
                    if new_root.iter().any(|&c| c < 0) || seen.contains(&new_root) {
                        continue;
                    }
                    // s_i(beta^v) = beta^v - <alpha_i, beta^v> alpha_i^v
                    let pc: i64 = (0..k).map(|j| coroot[j] * cartan.get(i, j)).sum();
                    let mut new_coroot = coroot.clone();
                    new_coroot[i] -= pc;
                    seen.insert(new_root.clone());
                    next.push(pairs.len());
                    pairs.push((new_root, new_coroot));
                }
            }
            frontier = next;
        }

        pairs.sort_by_key(|(r, _)| (r.iter().sum::<i64>(), r.clone()));
        let (positive_roots, positive_coroots) = pairs
            .into_iter()
            .map(|(r, c)| (Root(r), c))
            .unzip();
        RootSystem {
            diagram: diagram.clone(),
            cartan,
            positive_roots,
            positive_coroots,
        }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn cartan(&self) -> &IMat {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    /// All positive roots supported only on coordinates in `S` (zero-based).
    pub fn positive_subsystem(&self, s: &BTreeSet<usize>) -> Vec<Root> {
        self.positive_roots
            .iter()
            .filter(|r| r.support().is_subset(s))
            .cloned()
            .collect()
    }

    /// Coordinate-wise sum of all positive roots.
    pub fn b_coefficients(&self) -> Vec<i64> {
        let mut b = vec![0i64; self.rank()];
        for r in &self.positive_roots {
            for (bi, &c) in b.iter_mut().zip(&r.0) {
                *bi += c;
            }
        }
        b
    }

    /// Coordinate-wise sum over the sub-system generated by the nodes NOT in
    /// `I` (zero-based). Entries at positions in `I` are always zero.
    pub fn c_coefficients(&self, i_set: &BTreeSet<usize>) -> Vec<i64> {
        let complement: BTreeSet<usize> =
            (0..self.rank()).filter(|t| !i_set.contains(t)).collect();
        let mut c = vec![0i64; self.rank()];
        for r in self.positive_subsystem(&complement) {
            for (ci, &v) in c.iter_mut().zip(&r.0) {
                *ci += v;
            }
        }
        c
    }

    /// The unique coordinate-wise maximal positive root of a connected
    /// diagram.
    pub fn highest_root(&self) -> Result<Root> {
        if !self.diagram.is_connected() {
            return Err(Error::NotConnected);
        }
        let top = self
            .positive_roots
            .iter()
            .max_by_key(|r| (r.height(), r.0.clone()))
            .expect("nonempty root system")
            .clone();
        debug_assert!(self
            .positive_roots
            .iter()
            .all(|r| r.0.iter().zip(&top.0).all(|(&a, &b)| a <= b)));
        Ok(top)
    }
}

/// `<lambda, cv>` for `lambda` in fundamental-weight coordinates and `cv` in
/// simple-coroot coordinates.
pub fn pairing(lambda: &[i64], cv: &[i64]) -> Result<i64> {
    if lambda.len() != cv.len() {
        return Err(Error::RankMismatch {
            expected: lambda.len(),
            got: cv.len(),
        });
    }
    Ok(dot(lambda, cv))
}
