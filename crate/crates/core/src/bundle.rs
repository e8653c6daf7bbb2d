//! The complete numerical model of a `G/B`-bundle over the projective line:
//! tags, fundamental sections and their pivotal degrees, minimality and
//! isomorphism, together with the relative canonical decompositions, the
//! degree identity and the homogeneity inequalities that drive the
//! triviality criterion.

use std::collections::BTreeSet;

use crate::lattice::{tag_of, Cocycle, IsogenyLattice, Tag};
use crate::mat::dot;
use crate::rootsys::RootSystem;
use crate::weyl::{self, WeylElement};
use crate::{Error, Result};

/// The subset `I` of Dynkin nodes NOT inside the Levi part of a parabolic
/// subgroup; zero-based indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicSet(pub BTreeSet<usize>);

impl ParabolicSet {
    pub fn new<I: IntoIterator<Item = usize>>(iter: I) -> ParabolicSet {
        ParabolicSet(iter.into_iter().collect())
    }

    pub fn contains(&self, t: usize) -> bool {
        self.0.contains(&t)
    }
}

/// The isomorphism datum of a `G/B`-bundle: a lattice and a dominant cocycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagBundleModel {
    lattice: IsogenyLattice,
    theta: Cocycle,
}

/// Degrees of one fundamental section against the pivotal rank-one
/// sub-bundles: `d_t(w) = <w(alpha_t), theta>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionDegrees {
    pub element: WeylElement,
    pub degrees: Vec<i64>,
}

impl FlagBundleModel {
    /// Builds the model, enforcing dominance (tag entries >= 0) and lattice
    /// membership of the cocycle.
    pub fn new(lattice: IsogenyLattice, theta_coords: &[i64]) -> Result<FlagBundleModel> {
        if theta_coords.iter().any(|&c| c < 0) {
            return Err(Error::NotDominant);
        }
        let theta = lattice.cocycle(theta_coords)?;
        Ok(FlagBundleModel { lattice, theta })
    }

    pub fn lattice(&self) -> &IsogenyLattice {
        &self.lattice
    }

    pub fn theta(&self) -> &Cocycle {
        &self.theta
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    /// The tag, the complete isomorphism invariant of the bundle.
    pub fn tag(&self) -> Tag {
        tag_of(&self.theta)
    }

    /// Degrees of the fundamental section indexed by `w`.
    pub fn fundamental_section_degrees(&self, w: &WeylElement) -> Result<SectionDegrees> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        let theta = self.theta.coords();
        let degrees = (0..self.rank())
            .map(|t| dot(&w.root_matrix().col(t), theta))
            .collect();
        Ok(SectionDegrees {
            element: w.clone(),
            degrees,
        })
    }

    /// Degrees for every fundamental section, one per Weyl element, in the
    /// canonical enumeration order. Subject to the enumeration guard.
    pub fn all_section_degrees(
        &self,
        rs: &RootSystem,
        limit: usize,
    ) -> Result<Vec<SectionDegrees>> {
        weyl::enumerate(rs, limit)?
            .into_iter()
            .map(|(w, _)| self.fundamental_section_degrees(&w))
            .collect()
    }

    /// Two models over the same diagram and lattice are isomorphic iff their
    /// tags agree.
    pub fn isomorphic(&self, other: &FlagBundleModel) -> Result<bool> {
        if self.lattice != other.lattice {
            return Err(Error::ModelMismatch);
        }
        Ok(self.tag() == other.tag())
    }
}

/// A fundamental section is minimal iff all of its pivotal degrees are
/// nonnegative.
pub fn is_minimal_section(sd: &SectionDegrees) -> bool {
    sd.degrees.iter().all(|&d| d >= 0)
}

/// Moves `raw` (fundamental-coweight coordinates) into the dominant chamber
/// by greedy sign-fixing reflections; returns the dominant representative
/// and the element `w` with `w(raw)` dominant.
pub fn normalize_to_dominant(rs: &RootSystem, raw: &[i64]) -> Result<(Vec<i64>, WeylElement)> {
    if raw.len() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            got: raw.len(),
        });
    }
    let mut v = raw.to_vec();
    let mut w = WeylElement::identity(rs.rank());
    loop {
        let Some(i) = v.iter().position(|&c| c < 0) else {
            break;
        };
        let s = weyl::simple_reflection(rs, i)?;
        v = s.act_on_coweight(&v)?;
        w = s.mul(rs, &w);
    }
    Ok((v, w))
}

/// `b - c` coordinate-wise: the pull-back of the relative canonical class of
/// the parabolic contraction, in the basis of the pivotal relative canonical
/// classes. With `I` the full node set this is `b` itself (the Borel case).
pub fn rel_canonical_decomposition(rs: &RootSystem, p: &ParabolicSet) -> Vec<i64> {
    let b = rs.b_coefficients();
    let c = rs.c_coefficients(&p.0);
    b.iter().zip(&c).map(|(&bi, &ci)| bi - ci).collect()
}

/// `|Phi+| - |Phi+(I)|`, the fiber dimension of the parabolic quotient.
pub fn dim_gp(rs: &RootSystem, p: &ParabolicSet) -> usize {
    let complement: BTreeSet<usize> = (0..rs.rank()).filter(|t| !p.contains(*t)).collect();
    rs.num_positive() - rs.positive_subsystem(&complement).len()
}

/// Checks the exact degree identity
/// `dim = sum_{j not in I} (b_j - c_j) d_j + sum_{i in I} b_i d_i`.
pub fn degree_identity_holds(rs: &RootSystem, p: &ParabolicSet, tag: &Tag) -> Result<bool> {
    if tag.0.len() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            got: tag.0.len(),
        });
    }
    if tag.0.iter().any(|&d| d < 0) {
        return Err(Error::NegativeTag);
    }
    let b = rs.b_coefficients();
    let bc = rel_canonical_decomposition(rs, p);
    let lhs: i64 = (0..rs.rank())
        .map(|t| {
            if p.contains(t) {
                b[t] * tag.0[t]
            } else {
                bc[t] * tag.0[t]
            }
        })
        .sum();
    Ok(lhs == dim_gp(rs, p) as i64)
}

fn check_components_meet(rs: &RootSystem, p: &ParabolicSet) -> Result<()> {
    for range in rs.diagram().component_ranges() {
        if !range.clone().any(|t| p.contains(t)) {
            return Err(Error::ComponentMissesI(range.collect()));
        }
    }
    Ok(())
}

/// `b_j - c_j > 0` for every `j` outside `I`. Requires every connected
/// component of the diagram to meet `I`.
pub fn homogeneity_inequality_1(rs: &RootSystem, p: &ParabolicSet) -> Result<bool> {
    check_components_meet(rs, p)?;
    let bc = rel_canonical_decomposition(rs, p);
    Ok((0..rs.rank()).all(|t| p.contains(t) || bc[t] > 0))
}

/// `sum_{i in I} b_i >= |Phi+ \ Phi+(I)|`.
pub fn homogeneity_inequality_2(rs: &RootSystem, p: &ParabolicSet) -> Result<bool> {
    check_components_meet(rs, p)?;
    let b = rs.b_coefficients();
    let lhs: i64 = p.0.iter().map(|&i| b[i]).sum();
    Ok(lhs >= dim_gp(rs, p) as i64)
}

/// All tags with `d_i >= 1` on `I` and `d_j >= 0` off `I` satisfying the
/// degree identity. Every returned tag is asserted to vanish off `I` (the
/// restricted-triviality conclusion) rather than assumed to.
pub fn unsplit_tag_solutions(rs: &RootSystem, p: &ParabolicSet) -> Result<Vec<Tag>> {
    check_components_meet(rs, p)?;
    let k = rs.rank();
    let b = rs.b_coefficients();
    let bc = rel_canonical_decomposition(rs, p);
    let target = dim_gp(rs, p) as i64;

    // Weights are >= 1 on every active term, so each coordinate is bounded
    // by the target and the search is finite.
    let weights: Vec<i64> = (0..k)
        .map(|t| if p.contains(t) { b[t] } else { bc[t] })
        .collect();
    let mins: Vec<i64> = (0..k).map(|t| i64::from(p.contains(t))).collect();

    let mut out = Vec::new();
    let mut current = vec![0i64; k];
    search(&weights, &mins, target, 0, &mut current, &mut out);

    let solutions: Vec<Tag> = out.into_iter().map(Tag).collect();
    for tag in &solutions {
        assert!(
            restricted_trivial(tag, p)?,
            "degree-identity solution {:?} fails to vanish off I",
            tag
        );
    }
    Ok(solutions)
}

fn search(
    weights: &[i64],
    mins: &[i64],
    remaining: i64,
    t: usize,
    current: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if t == weights.len() {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    let w = weights[t];
    let max = if w > 0 { remaining / w } else { 0 };
    for d in mins[t]..=max.max(mins[t]) {
        let used = w * d;
        if used > remaining {
            break;
        }
        current[t] = d;
        search(weights, mins, remaining - used, t + 1, current, out);
    }
    current[t] = 0;
}

/// The restriction of the bundle to the Levi flag is trivial iff the tag
/// vanishes at every node outside `I`.
pub fn restricted_trivial(tag: &Tag, p: &ParabolicSet) -> Result<bool> {
    if tag.0.iter().any(|&d| d < 0) {
        return Err(Error::NegativeTag);
    }
    Ok(tag
        .0
        .iter()
        .enumerate()
        .all(|(t, &d)| p.contains(t) || d == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::DynkinDiagram;
    use crate::weyl::{enumerate, simple_reflection, word_to_element};

    fn rs(spec: &str) -> RootSystem {
        RootSystem::generate(&DynkinDiagram::parse(spec).unwrap())
    }

    fn adjoint_model(spec: &str, theta: &[i64]) -> (RootSystem, FlagBundleModel) {
        let rs = rs(spec);
        let lat = IsogenyLattice::adjoint(rs.diagram());
        let m = FlagBundleModel::new(lat, theta).unwrap();
        (rs, m)
    }

    #[test]
    fn tag_is_theta() {
        let (_, m) = adjoint_model("A1", &[7]);
        assert_eq!(m.tag(), Tag(vec![7]));
        let (_, m) = adjoint_model("A2", &[1, 2]);
        assert_eq!(m.tag(), Tag(vec![1, 2]));
        let (_, m) = adjoint_model("A2", &[0, 0]);
        assert_eq!(m.tag(), Tag(vec![0, 0]));
    }

    #[test]
    fn section_degrees_examples() {
        let (rs, m) = adjoint_model("A2", &[1, 2]);
        let id = WeylElement::identity(2);
        assert_eq!(m.fundamental_section_degrees(&id).unwrap().degrees, vec![1, 2]);
        let s1 = simple_reflection(&rs, 0).unwrap();
        assert_eq!(
            m.fundamental_section_degrees(&s1).unwrap().degrees,
            vec![-1, 3]
        );

        let (rs1, m1) = adjoint_model("A1", &[4]);
        let s = simple_reflection(&rs1, 0).unwrap();
        assert_eq!(m1.fundamental_section_degrees(&s).unwrap().degrees, vec![-4]);
    }

    #[test]
    fn degree_antisymmetry_small() {
        let (rs, m) = adjoint_model("B2", &[2, 1]);
        for (w, _) in enumerate(&rs, 100).unwrap() {
            let base = m.fundamental_section_degrees(&w).unwrap();
            for t in 0..2 {
                let wr = w.mul(&rs, &simple_reflection(&rs, t).unwrap());
                let pair = m.fundamental_section_degrees(&wr).unwrap();
                assert_eq!(pair.degrees[t], -base.degrees[t]);
            }
        }
    }

    #[test]
    fn minimal_sections() {
        let (rs, m) = adjoint_model("A1", &[1]);
        let id = WeylElement::identity(1);
        assert!(is_minimal_section(&m.fundamental_section_degrees(&id).unwrap()));
        let s = simple_reflection(&rs, 0).unwrap();
        assert!(!is_minimal_section(&m.fundamental_section_degrees(&s).unwrap()));

        // Trivial bundle: every section minimal.
        let (rs2, m0) = adjoint_model("A2", &[0, 0]);
        for (w, _) in enumerate(&rs2, 100).unwrap() {
            assert!(is_minimal_section(&m0.fundamental_section_degrees(&w).unwrap()));
        }
    }

    #[test]
    fn strictly_dominant_theta_has_unique_minimal_section() {
        let (rs, m) = adjoint_model("G2", &[1, 2]);
        let minimal: Vec<_> = enumerate(&rs, 100)
            .unwrap()
            .into_iter()
            .filter(|(w, _)| {
                is_minimal_section(&m.fundamental_section_degrees(w).unwrap())
            })
            .collect();
        assert_eq!(minimal.len(), 1);
        assert!(minimal[0].0.is_identity());
    }

    #[test]
    fn normalization_examples() {
        let rs1 = rs("A1");
        let (dom, w) = normalize_to_dominant(&rs1, &[-4]).unwrap();
        assert_eq!(dom, vec![4]);
        assert_eq!(w.length(), 1);

        let (same, id) = normalize_to_dominant(&rs1, &[3]).unwrap();
        assert_eq!(same, vec![3]);
        assert!(id.is_identity());
    }

    #[test]
    fn normalization_agrees_with_orbit_enumeration() {
        // Independent oracle: enumerate the whole orbit of (-1, 3) and check
        // there is exactly one dominant representative.
        let rs2 = rs("A2");
        let raw = vec![-1i64, 3];
        let orbit: BTreeSet<Vec<i64>> = enumerate(&rs2, 100)
            .unwrap()
            .iter()
            .map(|(w, _)| w.act_on_coweight(&raw).unwrap())
            .collect();
        let dominant: Vec<_> = orbit
            .iter()
            .filter(|v| v.iter().all(|&c| c >= 0))
            .collect();
        assert_eq!(dominant.len(), 1);
        let (dom, w) = normalize_to_dominant(&rs2, &raw).unwrap();
        assert_eq!(&dom, dominant[0]);
        assert_eq!(w.act_on_coweight(&raw).unwrap(), dom);
    }

    #[test]
    fn isomorphism_is_tag_equality() {
        let (_, m1) = adjoint_model("A1", &[1]);
        let (_, m2) = adjoint_model("A1", &[2]);
        assert!(m1.isomorphic(&m1).unwrap());
        assert!(!m1.isomorphic(&m2).unwrap());

        // Pre-composing theta with a Weyl element and renormalizing yields
        // an isomorphic model.
        let rs2 = rs("A2");
        let theta = vec![1i64, 2];
        let w = word_to_element(&rs2, &[1, 0]).unwrap();
        let moved = w.act_on_coweight(&theta).unwrap();
        let (renorm, _) = normalize_to_dominant(&rs2, &moved).unwrap();
        assert_eq!(renorm, theta);
    }

    #[test]
    fn relative_canonical_examples() {
        let a3 = rs("A3");
        let p = ParabolicSet::new([1]);
        assert_eq!(rel_canonical_decomposition(&a3, &p), vec![2, 4, 2]);
        let full = ParabolicSet::new(0..3);
        assert_eq!(rel_canonical_decomposition(&a3, &full), a3.b_coefficients());
        let a2 = rs("A2");
        assert_eq!(
            rel_canonical_decomposition(&a2, &ParabolicSet::new([0])),
            vec![2, 1]
        );
    }

    #[test]
    fn dim_gp_examples() {
        let a3 = rs("A3");
        assert_eq!(dim_gp(&a3, &ParabolicSet::new([1])), 4);
        assert_eq!(dim_gp(&a3, &ParabolicSet::new([])), 0);
        assert_eq!(dim_gp(&a3, &ParabolicSet::new(0..3)), 6);
    }

    #[test]
    fn degree_identity_examples() {
        let a2 = rs("A2");
        let p = ParabolicSet::new([0]);
        assert!(degree_identity_holds(&a2, &p, &Tag(vec![1, 0])).unwrap());
        assert!(degree_identity_holds(&a2, &p, &Tag(vec![0, 2])).unwrap());
        assert!(!degree_identity_holds(&a2, &p, &Tag(vec![1, 1])).unwrap());
        assert!(!degree_identity_holds(&a2, &p, &Tag(vec![0, 0])).unwrap());
    }

    #[test]
    fn unsplit_solutions_examples() {
        let a2 = rs("A2");
        assert_eq!(
            unsplit_tag_solutions(&a2, &ParabolicSet::new([0])).unwrap(),
            vec![Tag(vec![1, 0])]
        );
        assert_eq!(
            unsplit_tag_solutions(&a2, &ParabolicSet::new([0, 1])).unwrap(),
            Vec::<Tag>::new()
        );
        let a3 = rs("A3");
        assert_eq!(
            unsplit_tag_solutions(&a3, &ParabolicSet::new([1])).unwrap(),
            vec![Tag(vec![0, 1, 0])]
        );
        // A component disjoint from I is rejected.
        let prod = rs("A1+A1");
        assert!(matches!(
            unsplit_tag_solutions(&prod, &ParabolicSet::new([0])),
            Err(Error::ComponentMissesI(_))
        ));
    }

    #[test]
    fn homogeneity_examples() {
        let a3 = rs("A3");
        assert!(homogeneity_inequality_2(&a3, &ParabolicSet::new([1])).unwrap());
        let a2 = rs("A2");
        assert!(homogeneity_inequality_1(&a2, &ParabolicSet::new([0])).unwrap());
        assert!(homogeneity_inequality_1(&a2, &ParabolicSet::new(0..2)).unwrap());
    }

    #[test]
    fn restricted_trivial_examples() {
        let p = ParabolicSet::new([0]);
        assert!(restricted_trivial(&Tag(vec![1, 0]), &p).unwrap());
        assert!(!restricted_trivial(&Tag(vec![1, 1]), &p).unwrap());
        assert!(restricted_trivial(&Tag(vec![0, 0]), &ParabolicSet::new([])).unwrap());
    }
}
