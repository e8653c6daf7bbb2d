//! Isogeny lattices, cocycles, the tagging map and tag admissibility.
//!
//! Cocycles are written in fundamental-coweight coordinates throughout, which
//! makes the tagging map the identity on coordinates: all of the content sits
//! in lattice membership, decided exactly by Smith normal form.

use serde::Serialize;

use crate::diagrams::DynkinDiagram;
use crate::mat::IMat;
use crate::snf::{smith_normal_form, solve};
use crate::{Error, Result};

/// A lattice `L` with coroot lattice <= `L` <= coweight lattice, given by a
/// basis matrix whose columns are expressed in fundamental-coweight
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsogenyLattice {
    diagram: DynkinDiagram,
    basis: IMat,
}

/// An integer tag vector; one entry per Dynkin node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Tag(pub Vec<i64>);

/// A lattice element in fundamental-coweight coordinates, remembering its
/// expression in the lattice basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    coords: Vec<i64>,
    basis_coords: Vec<i64>,
}

impl Cocycle {
    /// Fundamental-coweight coordinates.
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Coordinates with respect to the lattice basis.
    pub fn basis_coords(&self) -> &[i64] {
        &self.basis_coords
    }
}

impl IsogenyLattice {
    /// The full coweight lattice (identity basis): the kernel lattice of the
    /// adjoint group.
    pub fn adjoint(diagram: &DynkinDiagram) -> IsogenyLattice {
        IsogenyLattice {
            diagram: diagram.clone(),
            basis: IMat::identity(diagram.rank()),
        }
    }

    /// The coroot lattice (Cartan-matrix columns): the kernel lattice of the
    /// simply connected group.
    pub fn simply_connected(diagram: &DynkinDiagram) -> IsogenyLattice {
        IsogenyLattice {
            diagram: diagram.clone(),
            basis: diagram.cartan_matrix(),
        }
    }

    /// A custom lattice from an explicit basis matrix (columns in
    /// fundamental-coweight coordinates). Rejects bases that are singular or
    /// do not contain the coroot lattice.
    pub fn custom(diagram: &DynkinDiagram, basis: IMat) -> Result<IsogenyLattice> {
        if basis.n() != diagram.rank() {
            return Err(Error::RankMismatch {
                expected: diagram.rank(),
                got: basis.n(),
            });
        }
        if basis.det() == 0 {
            return Err(Error::BadLattice("singular basis".into()));
        }
        let lattice = IsogenyLattice {
            diagram: diagram.clone(),
            basis,
        };
        let cartan = diagram.cartan_matrix();
        for j in 0..diagram.rank() {
            if !lattice.membership(&cartan.col(j))? {
                return Err(Error::BadLattice(format!(
                    "coroot column {} is not contained in the lattice",
                    j + 1
                )));
            }
        }
        Ok(lattice)
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn basis(&self) -> &IMat {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    /// True iff `v` is an integer combination of the basis columns.
    pub fn membership(&self, v: &[i64]) -> Result<bool> {
        if v.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: v.len(),
            });
        }
        Ok(solve(&self.basis.rows(), v).is_some())
    }

    /// Builds the cocycle with the given fundamental-coweight coordinates,
    /// checking lattice membership.
    pub fn cocycle(&self, coords: &[i64]) -> Result<Cocycle> {
        if coords.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: coords.len(),
            });
        }
        let basis_coords =
            solve(&self.basis.rows(), coords).ok_or(Error::NotInLattice)?;
        Ok(Cocycle {
            coords: coords.to_vec(),
            basis_coords,
        })
    }

    /// A witness cocycle with the given tag, if the tag is admissible.
    pub fn is_admissible(&self, tag: &Tag) -> Result<Option<Cocycle>> {
        if tag.0.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: tag.0.len(),
            });
        }
        Ok(self.cocycle(&tag.0).ok())
    }

    /// Index of the admissible-tag lattice in `Z^k`: `|det(basis)|`, reported
    /// via the Smith normal form diagonal.
    pub fn admissible_index(&self) -> u64 {
        let snf = smith_normal_form(&self.basis.rows());
        (0..self.rank())
            .map(|i| snf.d[i][i].unsigned_abs() as u64)
            .product()
    }
}

/// The tagging map: the identity on fundamental-coweight coordinates.
pub fn tag_of(theta: &Cocycle) -> Tag {
    Tag(theta.coords.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(spec: &str) -> DynkinDiagram {
        DynkinDiagram::parse(spec).unwrap()
    }

    #[test]
    fn tagging_map_is_coordinate_identity() {
        let adj = IsogenyLattice::adjoint(&d("A1"));
        let theta = adj.cocycle(&[5]).unwrap();
        assert_eq!(tag_of(&theta), Tag(vec![5]));
        let theta = adj.cocycle(&[0]).unwrap();
        assert_eq!(tag_of(&theta), Tag(vec![0]));

        // In the simply connected A2 lattice, the first coroot is the first
        // Cartan column.
        let sc = IsogenyLattice::simply_connected(&d("A2"));
        let theta = sc.cocycle(&[2, -1]).unwrap();
        assert_eq!(tag_of(&theta), Tag(vec![2, -1]));
        assert_eq!(theta.basis_coords(), &[1, 0]);
    }

    #[test]
    fn admissibility_examples() {
        let adj = IsogenyLattice::adjoint(&d("A3"));
        for tag in [vec![1, 7, -2], vec![0, 0, 0], vec![5, 5, 5]] {
            assert!(adj.is_admissible(&Tag(tag)).unwrap().is_some());
        }

        let sc1 = IsogenyLattice::simply_connected(&d("A1"));
        assert!(sc1.is_admissible(&Tag(vec![1])).unwrap().is_none());
        let witness = sc1.is_admissible(&Tag(vec![2])).unwrap().unwrap();
        assert_eq!(witness.basis_coords(), &[1]);
        assert_eq!(tag_of(&witness), Tag(vec![2]));
    }

    #[test]
    fn indices() {
        assert_eq!(IsogenyLattice::adjoint(&d("E8")).admissible_index(), 1);
        assert_eq!(
            IsogenyLattice::simply_connected(&d("A1")).admissible_index(),
            2
        );
        assert_eq!(
            IsogenyLattice::simply_connected(&d("A2")).admissible_index(),
            3
        );
    }

    #[test]
    fn membership_examples() {
        let sc = IsogenyLattice::simply_connected(&d("A1"));
        assert!(!sc.membership(&[1]).unwrap());
        assert!(sc.membership(&[2]).unwrap());
        let adj = IsogenyLattice::adjoint(&d("B2"));
        assert!(adj.membership(&[3, -4]).unwrap());
        // Basis columns are members of their own lattice.
        let sc2 = IsogenyLattice::simply_connected(&d("G2"));
        for j in 0..2 {
            assert!(sc2.membership(&sc2.basis().col(j)).unwrap());
        }
    }

    #[test]
    fn custom_lattice_validation() {
        // Index-two sublattice of the D4 coweight lattice containing the
        // coroots (half-spin style example).
        let diag = d("A1");
        let ok = IsogenyLattice::custom(&diag, IMat::from_rows(&[vec![2]])).unwrap();
        assert_eq!(ok.admissible_index(), 2);
        let singular = IsogenyLattice::custom(&diag, IMat::from_rows(&[vec![0]]));
        assert!(singular.is_err());
        // A lattice missing a coroot is rejected: 3Z does not contain 2.
        let missing = IsogenyLattice::custom(&diag, IMat::from_rows(&[vec![3]]));
        assert!(missing.is_err());
    }

    #[test]
    fn sc_index_equals_cartan_determinant_rank_le_8() {
        use crate::diagrams::Family;
        let mut diagrams: Vec<DynkinDiagram> = Vec::new();
        for r in 1..=8 {
            diagrams.push(DynkinDiagram::simple(Family::A, r).unwrap());
            diagrams.push(DynkinDiagram::simple(Family::B, r).unwrap());
            diagrams.push(DynkinDiagram::simple(Family::C, r).unwrap());
            if r >= 3 {
                diagrams.push(DynkinDiagram::simple(Family::D, r).unwrap());
            }
        }
        for spec in ["E6", "E7", "E8", "F4", "G2"] {
            diagrams.push(d(spec));
        }
        for diag in diagrams {
            let sc = IsogenyLattice::simply_connected(&diag);
            let det = diag.cartan_matrix().det().unsigned_abs() as u64;
            assert_eq!(sc.admissible_index(), det, "{diag}");
        }
    }
}
