//! Python bindings for the flagbundles library.
//!
//! The module mirrors the CLI conventions: node indices, word letters and
//! subsets are 1-based at the Python boundary.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use flagbundles::bottsam;
use flagbundles::bundle::{self, FlagBundleModel, ParabolicSet};
use flagbundles::cohom::{self, CohomologyResult};
use flagbundles::diagrams::DynkinDiagram;
use flagbundles::lattice::{IsogenyLattice, Tag};
use flagbundles::rootsys;
use flagbundles::weyl;

fn err(e: flagbundles::Error) -> PyErr {
    PyValueError::new_err(format!("{} ({})", e, e.code()))
}

fn to_zero_based(indices: Vec<usize>) -> PyResult<Vec<usize>> {
    indices
        .into_iter()
        .map(|i| {
            i.checked_sub(1)
                .ok_or_else(|| PyValueError::new_err("indices are 1-based"))
        })
        .collect()
}

fn to_one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|&i| i + 1).collect()
}

/// A root system together with its Dynkin diagram; the entry point of the
/// bindings.
#[pyclass(name = "RootSystem")]
struct PyRootSystem {
    rs: rootsys::RootSystem,
}

#[pymethods]
impl PyRootSystem {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        let diagram = DynkinDiagram::parse(spec).map_err(err)?;
        Ok(PyRootSystem {
            rs: rootsys::RootSystem::generate(&diagram),
        })
    }

    fn rank(&self) -> usize {
        self.rs.rank()
    }

    fn num_positive_roots(&self) -> usize {
        self.rs.num_positive()
    }

    fn weyl_order(&self) -> u128 {
        self.rs.diagram().weyl_order()
    }

    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.rs.cartan().rows()
    }

    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.rs.positive_roots().iter().map(|r| r.0.clone()).collect()
    }

    fn positive_coroots(&self) -> Vec<Vec<i64>> {
        self.rs.positive_coroots().to_vec()
    }

    fn b_coefficients(&self) -> Vec<i64> {
        self.rs.b_coefficients()
    }

    fn c_coefficients(&self, i_set: Vec<usize>) -> PyResult<Vec<i64>> {
        let s: BTreeSet<usize> = to_zero_based(i_set)?.into_iter().collect();
        Ok(self.rs.c_coefficients(&s))
    }

    fn highest_root(&self) -> PyResult<Vec<i64>> {
        Ok(self.rs.highest_root().map_err(err)?.0)
    }

    fn longest_word(&self) -> PyResult<Vec<usize>> {
        let all: BTreeSet<usize> = (0..self.rs.rank()).collect();
        let (_, word) = weyl::longest_element(&self.rs, &all).map_err(err)?;
        Ok(to_one_based(&word))
    }

    /// Lexicographically minimal reduced words of all group elements, in
    /// canonical order; fails above `limit` elements.
    #[pyo3(signature = (limit = weyl::DEFAULT_ENUM_LIMIT))]
    fn enumerate_words(&self, limit: usize) -> PyResult<Vec<Vec<usize>>> {
        Ok(weyl::enumerate(&self.rs, limit)
            .map_err(err)?
            .iter()
            .map(|(_, w)| to_one_based(w))
            .collect())
    }

    fn is_reduced(&self, word: Vec<usize>) -> PyResult<bool> {
        weyl::is_reduced(&self.rs, &to_zero_based(word)?).map_err(err)
    }

    /// Dimension of the Schubert image of a word variety.
    fn image_dimension(&self, word: Vec<usize>) -> PyResult<usize> {
        bottsam::image_dimension(&self.rs, &to_zero_based(word)?).map_err(err)
    }

    fn chi_dimension(&self, i_set: Vec<usize>) -> PyResult<usize> {
        let p = ParabolicSet::new(to_zero_based(i_set)?);
        bottsam::chi_dimension(&self.rs, &p).map_err(err)
    }

    /// Rows `(subset, dimension, longest_word)` for every proper subset.
    fn simplicial_face_report(&self) -> PyResult<Vec<(Vec<usize>, usize, Vec<usize>)>> {
        Ok(bottsam::simplicial_face_report(&self.rs)
            .map_err(err)?
            .into_iter()
            .map(|row| {
                (
                    to_one_based(&row.subset),
                    row.dimension,
                    to_one_based(&row.longest_word),
                )
            })
            .collect())
    }

    fn euler_characteristic(&self, lam: Vec<i64>) -> PyResult<BigInt> {
        cohom::euler_characteristic(&self.rs, &lam).map_err(err)
    }

    fn weyl_dimension(&self, lam: Vec<i64>) -> PyResult<BigInt> {
        Ok(cohom::weyl_dimension(&self.rs, &lam).map_err(err)?.into())
    }

    fn dot_reflect(&self, lam: Vec<i64>, i: usize) -> PyResult<Vec<i64>> {
        let i = i
            .checked_sub(1)
            .ok_or_else(|| PyValueError::new_err("indices are 1-based"))?;
        cohom::dot_reflect(&self.rs, &lam, i).map_err(err)
    }

    /// `None` if all cohomology vanishes, else `(degree, dimension)`.
    fn cohomology(&self, lam: Vec<i64>) -> PyResult<Option<(usize, BigInt)>> {
        Ok(match cohom::cohomology(&self.rs, &lam).map_err(err)? {
            CohomologyResult::AllZero => None,
            CohomologyResult::NonZero { degree, dimension } => {
                Some((degree, dimension.into()))
            }
        })
    }

    fn rel_canonical_decomposition(&self, i_set: Vec<usize>) -> PyResult<Vec<i64>> {
        let p = ParabolicSet::new(to_zero_based(i_set)?);
        Ok(bundle::rel_canonical_decomposition(&self.rs, &p))
    }

    fn dim_gp(&self, i_set: Vec<usize>) -> PyResult<usize> {
        let p = ParabolicSet::new(to_zero_based(i_set)?);
        Ok(bundle::dim_gp(&self.rs, &p))
    }

    fn homogeneity_inequalities(&self, i_set: Vec<usize>) -> PyResult<(bool, bool)> {
        let p = ParabolicSet::new(to_zero_based(i_set)?);
        Ok((
            bundle::homogeneity_inequality_1(&self.rs, &p).map_err(err)?,
            bundle::homogeneity_inequality_2(&self.rs, &p).map_err(err)?,
        ))
    }

    fn unsplit_tag_solutions(&self, i_set: Vec<usize>) -> PyResult<Vec<Vec<i64>>> {
        let p = ParabolicSet::new(to_zero_based(i_set)?);
        Ok(bundle::unsplit_tag_solutions(&self.rs, &p)
            .map_err(err)?
            .into_iter()
            .map(|t| t.0)
            .collect())
    }

    fn normalize_to_dominant(&self, raw: Vec<i64>) -> PyResult<(Vec<i64>, Vec<usize>)> {
        let (dom, w) = bundle::normalize_to_dominant(&self.rs, &raw).map_err(err)?;
        Ok((dom, to_one_based(&w.reduced_word(&self.rs))))
    }
}

/// An isogeny lattice (`"adjoint"` or `"sc"`) over a diagram, with tag
/// admissibility and the bundle model.
#[pyclass(name = "Lattice")]
struct PyLattice {
    lattice: IsogenyLattice,
}

#[pymethods]
impl PyLattice {
    #[new]
    fn new(spec: &str, kind: &str) -> PyResult<Self> {
        let diagram = DynkinDiagram::parse(spec).map_err(err)?;
        let lattice = match kind {
            "adjoint" => IsogenyLattice::adjoint(&diagram),
            "sc" | "simply-connected" => IsogenyLattice::simply_connected(&diagram),
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown lattice kind `{other}`"
                )))
            }
        };
        Ok(PyLattice { lattice })
    }

    fn admissible_index(&self) -> u64 {
        self.lattice.admissible_index()
    }

    fn membership(&self, v: Vec<i64>) -> PyResult<bool> {
        self.lattice.membership(&v).map_err(err)
    }

    /// Basis coordinates of an admissible tag's witness cocycle, or `None`.
    fn is_admissible(&self, tag: Vec<i64>) -> PyResult<Option<Vec<i64>>> {
        Ok(self
            .lattice
            .is_admissible(&Tag(tag))
            .map_err(err)?
            .map(|c| c.basis_coords().to_vec()))
    }

    fn tag(&self, cocycle: Vec<i64>) -> PyResult<Vec<i64>> {
        let theta = self.lattice.cocycle(&cocycle).map_err(err)?;
        Ok(flagbundles::lattice::tag_of(&theta).0)
    }

    /// Degrees of the fundamental section indexed by `word` for the bundle
    /// with dominant cocycle `theta`.
    fn section_degrees(&self, theta: Vec<i64>, word: Vec<usize>) -> PyResult<Vec<i64>> {
        let rs = rootsys::RootSystem::generate(self.lattice.diagram());
        let model = FlagBundleModel::new(self.lattice.clone(), &theta).map_err(err)?;
        let w = weyl::word_to_element(&rs, &to_zero_based(word)?).map_err(err)?;
        Ok(model.fundamental_section_degrees(&w).map_err(err)?.degrees)
    }

    /// `(word, degrees, minimal)` for every fundamental section.
    #[pyo3(signature = (theta, limit = weyl::DEFAULT_ENUM_LIMIT))]
    fn all_section_degrees(
        &self,
        theta: Vec<i64>,
        limit: usize,
    ) -> PyResult<Vec<(Vec<usize>, Vec<i64>, bool)>> {
        let rs = rootsys::RootSystem::generate(self.lattice.diagram());
        let model = FlagBundleModel::new(self.lattice.clone(), &theta).map_err(err)?;
        weyl::enumerate(&rs, limit)
            .map_err(err)?
            .into_iter()
            .map(|(w, word)| {
                let sd = model.fundamental_section_degrees(&w).map_err(err)?;
                let minimal = bundle::is_minimal_section(&sd);
                Ok((to_one_based(&word), sd.degrees, minimal))
            })
            .collect()
    }
}

#[pymodule]
fn flagbundles_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootSystem>()?;
    m.add_class::<PyLattice>()?;
    Ok(())
}
