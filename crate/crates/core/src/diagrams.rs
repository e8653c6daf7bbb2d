//! Dynkin diagrams of types A-G (including products), their Cartan matrices,
//! and recognition of a Cartan matrix from raw intersection data.
//!
//! Node numbering inside each simple component follows the classical
//! convention in which the `b`-vector of the positive-root sum comes out in
//! its tabulated form (see the `rootsys` tests); node indices of a product
//! diagram run consecutively through the components.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::mat::IMat;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }

    pub fn valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// An ordered product of simple components, nodes numbered consecutively.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DynkinDiagram {
    components: Vec<(Family, usize)>,
}

impl DynkinDiagram {
    pub fn new(components: Vec<(Family, usize)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::MalformedToken(String::new()));
        }
        for &(f, r) in &components {
            if !f.valid_rank(r) {
                return Err(Error::InvalidRank(f.letter(), r));
            }
        }
        Ok(DynkinDiagram { components })
    }

    pub fn simple(family: Family, rank: usize) -> Result<Self> {
        DynkinDiagram::new(vec![(family, rank)])
    }

    /// Parses a spec like `"A3"` or `"a1+g2"`: `+`-separated family/rank
    /// tokens, case-insensitive, no spaces.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut components = Vec::new();
        for token in spec.split('+') {
            let token = token.trim();
            let mut chars = token.chars();
            let letter = chars
                .next()
                .ok_or_else(|| Error::MalformedToken(token.to_string()))?;
            let family = Family::from_letter(letter)
                .ok_or_else(|| Error::MalformedToken(token.to_string()))?;
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::MalformedToken(token.to_string()))?;
            if !family.valid_rank(rank) {
                return Err(Error::InvalidRank(family.letter(), rank));
            }
            components.push((family, rank));
        }
        DynkinDiagram::new(components)
    }

    pub fn components(&self) -> &[(Family, usize)] {
        &self.components
    }

    /// Total rank `k`.
    pub fn rank(&self) -> usize {
        self.components.iter().map(|&(_, r)| r).sum()
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    /// Ranges of global (zero-based) node indices per component.
    pub fn component_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for &(_, r) in &self.components {
            out.push(start..start + r);
            start += r;
        }
        out
    }

    /// Block-diagonal Cartan matrix `C`, with `C[i][j] = <alpha_i, alpha_j^v>`.
    pub fn cartan_matrix(&self) -> IMat {
        let k = self.rank();
        let mut m = IMat::identity(k);
        for i in 0..k {
            m.set(i, i, 2);
        }
        let mut offset = 0;
        for &(f, r) in &self.components {
            let block = simple_cartan(f, r);
            for i in 0..r {
                for j in 0..r {
                    m.set(offset + i, offset + j, block.get(i, j));
                }
            }
            offset += r;
        }
        m
    }

    /// Order of the Weyl group, by the classical closed forms.
    pub fn weyl_order(&self) -> u128 {
        self.components
            .iter()
            .map(|&(f, r)| simple_weyl_order(f, r))
            .product()
    }

    /// Components sorted by (family, rank). Two diagrams with the same
    /// canonical form have permutation-equivalent Cartan matrices.
    pub fn canonical(&self) -> DynkinDiagram {
        let mut comps: Vec<(Family, usize)> = self
            .components
            .iter()
            .map(|&(f, r)| normalize_component(f, r))
            .collect();
        comps.sort();
        DynkinDiagram { components: comps }
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|&(fam, r)| format!("{}{}", fam.letter(), r))
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// Low-rank coincidences, mapped to the alphabetically first presentation.
fn normalize_component(f: Family, r: usize) -> (Family, usize) {
    match (f, r) {
        (Family::B, 1) | (Family::C, 1) => (Family::A, 1),
        (Family::C, 2) => (Family::B, 2),
        (Family::D, 3) => (Family::A, 3),
        other => other,
    }
}

fn simple_weyl_order(f: Family, r: usize) -> u128 {
    let fact = |n: usize| -> u128 { (1..=n as u128).product() };
    match f {
        Family::A => fact(r + 1),
        Family::B | Family::C => (1u128 << r) * fact(r),
        Family::D => (1u128 << (r - 1)) * fact(r),
        Family::E => match r {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1_152,
        Family::G => 12,
    }
}

/// Cartan matrix of one simple component (zero-based node indices).
fn simple_cartan(f: Family, r: usize) -> IMat {
    let mut m = IMat::zero(r);
    for i in 0..r {
        m.set(i, i, 2);
    }
    let mut edge = |i: usize, j: usize, cij: i64, cji: i64| {
        m.set(i, j, cij);
        m.set(j, i, cji);
    };
    match f {
        Family::A => {
            for i in 0..r.saturating_sub(1) {
                edge(i, i + 1, -1, -1);
            }
        }
        Family::B => {
            // alpha_r short: <alpha_{r-1}, alpha_r^v> = -2.
            for i in 0..r.saturating_sub(2) {
                edge(i, i + 1, -1, -1);
            }
            if r >= 2 {
                edge(r - 2, r - 1, -2, -1);
            }
        }
        Family::C => {
            // alpha_r long: transpose of type B.
            for i in 0..r.saturating_sub(2) {
                edge(i, i + 1, -1, -1);
            }
            if r >= 2 {
                edge(r - 2, r - 1, -1, -2);
            }
        }
        Family::D => {
            for i in 0..r.saturating_sub(3) {
                edge(i, i + 1, -1, -1);
            }
            edge(r - 3, r - 2, -1, -1);
            edge(r - 3, r - 1, -1, -1);
        }
        Family::E => {
            // Chain 1-3-4-5-...-r with node 2 attached to node 4.
            edge(0, 2, -1, -1);
            for i in 2..r - 1 {
                edge(i, i + 1, -1, -1);
            }
            edge(1, 3, -1, -1);
        }
        Family::F => {
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
            edge(0, 1, -1, -1);
            edge(1, 2, -2, -1);
            edge(2, 3, -1, -1);
        }
        Family::G => {
            // alpha_1 short, alpha_2 long.
            edge(0, 1, -1, -3);
        }
    }
    m
}

/// Checks the defining inequalities of a Cartan matrix (diagonal 2,
/// nonpositive off-diagonal, zero symmetry, entry products in {0,1,2,3},
/// nonsingular).
pub fn validate_cartan(m: &IMat) -> Result<()> {
    let n = m.n();
    for i in 0..n {
        if m.get(i, i) != 2 {
            return Err(Error::NotACartanMatrix(format!(
                "diagonal entry ({i},{i}) is {} instead of 2",
                m.get(i, i)
            )));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            let cij = m.get(i, j);
            let cji = m.get(j, i);
            if cij > 0 {
                return Err(Error::NotACartanMatrix(format!(
                    "positive off-diagonal entry at ({i},{j})"
                )));
            }
            if (cij == 0) != (cji == 0) {
                return Err(Error::NotACartanMatrix(format!(
                    "asymmetric zero pattern at ({i},{j})"
                )));
            }
            if !(0..=3).contains(&(cij * cji)) {
                return Err(Error::NotACartanMatrix(format!(
                    "entry product {} at ({i},{j}) outside 0..3",
                    cij * cji
                )));
            }
        }
    }
    if m.det() == 0 {
        return Err(Error::NotACartanMatrix("singular".into()));
    }
    Ok(())
}

/// Recognizes an integer matrix as the Cartan matrix of a unique diagram, up
/// to simultaneous row/column permutation. Components are emitted in
/// canonical sorted order; the returned permutation `p` satisfies
/// `M[p[a]][p[b]] == cartan(diagram)[a][b]`.
pub fn classify_cartan(m: &IMat) -> Result<(DynkinDiagram, Vec<usize>)> {
    validate_cartan(m)?;
    let n = m.n();

    // Connected components of the support graph.
    let mut comp_id = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp_id[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut stack = vec![start];
        let mut nodes = Vec::new();
        comp_id[start] = id;
        while let Some(v) = stack.pop() {
            nodes.push(v);
            for w in 0..n {
                if w != v && m.get(v, w) != 0 && comp_id[w] == usize::MAX {
                    comp_id[w] = id;
                    stack.push(w);
                }
            }
        }
        nodes.sort_unstable();
        comps.push(nodes);
    }

    // Classify each component independently.
    let mut classified: Vec<((Family, usize), Vec<usize>)> = Vec::new();
    for nodes in &comps {
        let (fam, perm) = classify_component(m, nodes)?;
        classified.push(((fam, nodes.len()), perm));
    }
    classified.sort_by_key(|&((f, r), _)| (f, r));

    let mut components = Vec::new();
    let mut perm = Vec::new();
    for ((f, r), p) in classified {
        components.push((f, r));
        perm.extend(p);
    }
    Ok((DynkinDiagram { components }, perm))
}

fn classify_component(m: &IMat, nodes: &[usize]) -> Result<(Family, Vec<usize>)> {
    let r = nodes.len();
    let mut candidates: Vec<Family> = Vec::new();
    for f in [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ] {
        if f.valid_rank(r) && normalize_component(f, r) == (f, r) {
            candidates.push(f);
        }
    }
    for f in candidates {
        let target = simple_cartan(f, r);
        if let Some(perm) = find_matching(m, nodes, &target) {
            return Ok((f, perm));
        }
    }
    Err(Error::NotACartanMatrix(
        "matches no finite type".to_string(),
    ))
}

/// Backtracking search for `p` with `M[p[a]][p[b]] == target[a][b]`, where
/// `p` maps target nodes to members of `nodes`.
fn find_matching(m: &IMat, nodes: &[usize], target: &IMat) -> Option<Vec<usize>> {
    let r = nodes.len();
    let mut assign: Vec<usize> = Vec::with_capacity(r);
    let mut used = vec![false; r];

    fn rec(
        m: &IMat,
        nodes: &[usize],
        target: &IMat,
        assign: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let a = assign.len();
        if a == nodes.len() {
            return true;
        }
        for (idx, &cand) in nodes.iter().enumerate() {
            if used[idx] {
                continue;
            }
            let ok = (0..a).all(|b| {
                m.get(cand, assign[b]) == target.get(a, b)
                    && m.get(assign[b], cand) == target.get(b, a)
            });
            if ok {
                used[idx] = true;
                assign.push(cand);
                if rec(m, nodes, target, assign, used) {
                    return true;
                }
                assign.pop();
                used[idx] = false;
            }
        }
        false
    }

    if rec(m, nodes, target, &mut assign, &mut used) {
        Some(assign)
    } else {
        None
    }
}
