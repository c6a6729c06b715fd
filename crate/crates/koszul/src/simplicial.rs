//! Abstract simplicial complexes and exact reduced homology.
//!
//! Complexes live on a set of labelled vertices (here: variable indices) and
//! are stored by their facets. The void complex (no faces at all) is the one
//! with an empty facet list; the irrelevant complex `{∅}` has the single
//! empty facet. Reduced homology is computed over a field by Gaussian
//! elimination on the boundary matrices, including the augmentation row, so
//! `H~_{-1}` of `{∅}` has rank 1.

use std::collections::BTreeSet;

use crate::linalg;
use crate::monomial::{min_generators, MonomialIdeal, Multidegree};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    /// Inclusion-maximal faces, each sorted ascending; all faces are the
    /// subsets of facets. Empty list = void complex.
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// The complex generated by a set of faces (closes downward, keeps the
    /// maximal ones). A non-void complex always contains the empty face.
    pub fn from_faces(vertices: Vec<usize>, faces: Vec<Vec<usize>>) -> Self {
        let mut sorted: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        sorted.sort_by_key(|f| std::cmp::Reverse(f.len()));
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for f in sorted {
            if !facets.iter().any(|g| is_subset(&f, g)) {
                facets.push(f);
            }
        }
        facets.sort();
        SimplicialComplex { vertices, facets }
    }

    pub fn void(vertices: Vec<usize>) -> Self {
        SimplicialComplex { vertices, facets: Vec::new() }
    }

    /// Only the empty face.
    pub fn irrelevant(vertices: Vec<usize>) -> Self {
        SimplicialComplex { vertices, facets: vec![Vec::new()] }
    }

    pub fn full_simplex(vertices: Vec<usize>) -> Self {
        let facet = {
            let mut v = vertices.clone();
            v.sort_unstable();
            v
        };
        SimplicialComplex { vertices, facets: vec![facet] }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].len() == self.vertices.len()
    }

    /// Dimension of the complex; `None` for the void complex, `Some(-1)` for
    /// the irrelevant complex.
    pub fn dim(&self) -> Option<i64> {
        self.facets
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
    }

    pub fn is_face(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        self.facets.iter().any(|g| is_subset(&f, g))
    }

    /// All faces of dimension `d` (`d = -1` yields the empty face for
    /// non-void complexes).
    pub fn faces_of_dim(&self, d: i64) -> Vec<Vec<usize>> {
        if self.is_void() {
            return Vec::new();
        }
        if d < 0 {
            return if d == -1 { vec![Vec::new()] } else { Vec::new() };
        }
        let k = d as usize + 1;
        let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in &self.facets {
            if f.len() >= k {
                for c in combinations(f, k) {
                    out.insert(c);
                }
            }
        }
        out.into_iter().collect()
    }

    /// Subcomplex whose facets are the `(i+1)`- and `i`-faces; reduced
    /// homology in degree `i` is unchanged. Above the dimension of the
    /// complex there is nothing to restrict.
    pub fn restrict_to_dimension(&self, i: i64) -> SimplicialComplex {
        match self.dim() {
            None => self.clone(),
            Some(d) if i > d => self.clone(),
            _ => {
                let mut faces = self.faces_of_dim(i + 1);
                faces.extend(self.faces_of_dim(i));
                if faces.is_empty() {
                    // keep the empty face of a non-void complex
                    faces.push(Vec::new());
                }
                SimplicialComplex::from_faces(self.vertices.clone(), faces)
            }
        }
    }

    /// Faces whose vertex-set complement is not a face.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let mut universe = self.vertices.clone();
        universe.sort_unstable();
        let k = universe.len();
        assert!(k <= 25, "alexander dual enumeration limited to small vertex sets");
        let mut faces = Vec::new();
        for mask in 0u32..(1 << k) {
            let sigma: Vec<usize> = (0..k)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| universe[i])
                .collect();
            let complement: Vec<usize> = (0..k)
                .filter(|&i| mask & (1 << i) == 0)
                .map(|i| universe[i])
                .collect();
            if !self.is_face(&complement) {
                faces.push(sigma);
            }
        }
        SimplicialComplex::from_faces(self.vertices.clone(), faces)
    }

    /// link_Δ(σ) = { τ : τ ∪ σ ∈ Δ, τ ∩ σ = ∅ }.
    pub fn link(&self, sigma: &[usize]) -> SimplicialComplex {
        let mut faces = Vec::new();
        for f in &self.facets {
            if is_subset(&{
                let mut s = sigma.to_vec();
                s.sort_unstable();
                s
            }, f) {
                let tau: Vec<usize> = f.iter().copied().filter(|v| !sigma.contains(v)).collect();
                faces.push(tau);
            }
        }
        let verts: Vec<usize> = self
            .vertices
            .iter()
            .copied()
            .filter(|v| !sigma.contains(v))
            .collect();
        SimplicialComplex::from_faces(verts, faces)
    }

    /// Reduced Euler characteristic: sum of `(-1)^dim` over all faces
    /// including the empty one.
    pub fn reduced_euler(&self) -> i64 {
        if self.is_void() {
            return 0;
        }
        let top = self.dim().unwrap();
        let mut chi = -1i64; // empty face
        for d in 0..=top {
            chi += (if d % 2 == 0 { 1 } else { -1 }) * self.faces_of_dim(d).len() as i64;
        }
        chi
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > items.len() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + items.len() - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// A chain is a formal combination of faces of a fixed dimension.
pub type SimplicialChain<S> = Vec<(Vec<usize>, S)>;

#[derive(Clone, Debug)]
pub struct HomologyResult<S> {
    pub dimension: i64,
    pub rank: usize,
    /// Cycles of the original complex spanning the homology, linearly
    /// independent modulo boundaries.
    pub basis: Vec<SimplicialChain<S>>,
}

/// Boundary of a single face under the sign rule: deleting the vertex in
/// ascending position `r` contributes `(-1)^r`. The boundary of a vertex is
/// the empty face (augmentation row).
pub fn boundary_of_face<S: Scalar>(face: &[usize]) -> SimplicialChain<S> {
    let mut out = Vec::new();
    for r in 0..face.len() {
        let mut f: Vec<usize> = face.to_vec();
        f.remove(r);
        let sign = if r % 2 == 0 { S::one() } else { S::zero() - S::one() };
        out.push((f, sign));
    }
    out
}

type FaceBasis = Vec<Vec<usize>>;

/// Matrix of `∂_d : C_d -> C_{d-1}` (row per `(d-1)`-face, column per
/// `d`-face), together with the two face bases.
fn boundary_matrix<S: Scalar>(
    k: &SimplicialComplex,
    d: i64,
) -> (FaceBasis, FaceBasis, Vec<Vec<S>>) {
    let rows_faces = k.faces_of_dim(d - 1);
    let cols_faces = k.faces_of_dim(d);
    let mut rows = vec![vec![S::zero(); cols_faces.len()]; rows_faces.len()];
    for (c, face) in cols_faces.iter().enumerate() {
        for (sub, coeff) in boundary_of_face::<S>(face) {
            let r = rows_faces.binary_search(&sub).expect("missing face");
            rows[r][c] = coeff;
        }
    }
    (rows_faces, cols_faces, rows)
}

/// Exact reduced homology in degree `i >= -1`, with a cycle basis.
pub fn reduced_homology<S: Scalar>(k: &SimplicialComplex, i: i64) -> HomologyResult<S> {
    assert!(i >= -1, "reduced homology defined for i >= -1");
    if k.is_void() {
        return HomologyResult { dimension: i, rank: 0, basis: Vec::new() };
    }
    // quick contractibility pre-check: nothing above the full simplex
    if k.is_full_simplex() {
        return HomologyResult { dimension: i, rank: 0, basis: Vec::new() };
    }
    let (_, cycles_faces, d_i) = boundary_matrix::<S>(k, i);
    if cycles_faces.is_empty() {
        return HomologyResult { dimension: i, rank: 0, basis: Vec::new() };
    }
    let kernel = linalg::kernel_basis(&d_i, cycles_faces.len());
    let (_, upper_faces, d_ip1) = boundary_matrix::<S>(k, i + 1);
    // boundary vectors expressed in the i-face basis: columns of d_{i+1}
    let boundaries: Vec<Vec<S>> = (0..upper_faces.len())
        .map(|c| d_ip1.iter().map(|row| row[c].clone()).collect())
        .collect();
    let chosen = linalg::independent_mod(&boundaries, &kernel);
    let basis: Vec<SimplicialChain<S>> = chosen
        .iter()
        .map(|&idx| {
            kernel[idx]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(f, c)| (cycles_faces[f].clone(), c.clone()))
                .collect()
        })
        .collect();
    HomologyResult { dimension: i, rank: basis.len(), basis }
}

/// Rank only, with the cheap full-skeleton pre-check.
pub fn reduced_homology_rank<S: Scalar>(k: &SimplicialComplex, i: i64) -> usize {
    if k.is_void() || k.is_full_simplex() {
        return 0;
    }
    // if every (i+1)-subset of the vertex set is a face, the restricted
    // complex is contractible in degree i
    if i >= 0 {
        let want = i as usize + 2;
        if want <= k.vertices.len() {
            let full = binomial(k.vertices.len(), want);
            if k.faces_of_dim(i + 1).len() as u128 == full {
                return 0;
            }
        }
    }
    reduced_homology::<S>(k, i).rank
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Stanley-Reisner ideal of a complex: minimal non-faces of the vertex set,
/// as squarefree generators in the ambient `n` variables.
pub fn stanley_reisner(k: &SimplicialComplex, n: usize) -> MonomialIdeal {
    assert!(!k.is_void(), "Stanley-Reisner ideal of the void complex");
    let mut universe = k.vertices().to_vec();
    universe.sort_unstable();
    let m = universe.len();
    assert!(m <= 25, "non-face enumeration limited to small vertex sets");
    let mut nonfaces = Vec::new();
    for mask in 1u32..(1 << m) {
        let subset: Vec<usize> = (0..m)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| universe[i])
            .collect();
        if !k.is_face(&subset) {
            nonfaces.push(Multidegree::from_vars(n, &subset));
        }
    }
    min_generators(n, nonfaces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Coeff;

    fn complex(verts: &[usize], facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_faces(verts.to_vec(), facets.iter().map(|f| f.to_vec()).collect())
    }

    #[test]
    fn facets_form_antichain() {
        let k = complex(&[0, 1, 2], &[&[0, 1], &[0], &[1, 2], &[2]]);
        assert_eq!(k.facets(), &[vec![0, 1], vec![1, 2]]);
        assert!(k.is_face(&[1]));
        assert!(k.is_face(&[]));
        assert!(!k.is_face(&[0, 2]));
    }

    #[test]
    fn homology_of_spheres_and_simplices() {
        // full simplex: contractible
        let full = SimplicialComplex::full_simplex(vec![0, 1, 2, 3]);
        for i in -1..3 {
            assert_eq!(reduced_homology::<Coeff>(&full, i).rank, 0);
        }
        // boundary of the 3-simplex: a 2-sphere
        let boundary = complex(&[0, 1, 2, 3], &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        assert_eq!(reduced_homology::<Coeff>(&boundary, 2).rank, 1);
        assert_eq!(reduced_homology::<Coeff>(&boundary, 1).rank, 0);
        assert_eq!(reduced_homology::<Coeff>(&boundary, 0).rank, 0);
        // irrelevant complex: rank 1 in degree -1
        let irr = SimplicialComplex::irrelevant(vec![0, 1]);
        assert_eq!(reduced_homology::<Coeff>(&irr, -1).rank, 1);
        // void complex: zero everywhere
        let void = SimplicialComplex::void(vec![0, 1]);
        assert_eq!(reduced_homology::<Coeff>(&void, -1).rank, 0);
    }

    #[test]
    fn homology_basis_elements_are_cycles() {
        let circle = complex(&[0, 1, 2], &[&[0, 1], &[1, 2], &[0, 2]]);
        let h = reduced_homology::<Coeff>(&circle, 1);
        assert_eq!(h.rank, 1);
        // boundary of the basis cycle vanishes
        use std::collections::BTreeMap;
        let mut acc: BTreeMap<Vec<usize>, Coeff> = BTreeMap::new();
        for (face, coeff) in &h.basis[0] {
            for (sub, sign) in boundary_of_face::<Coeff>(face) {
                let e = acc.entry(sub).or_insert_with(num_traits::Zero::zero);
                *e = e.clone() + sign * coeff.clone();
            }
        }
        assert!(acc.values().all(num_traits::Zero::is_zero));
    }

    #[test]
    fn restriction_keeps_degree_homology() {
        let k = complex(
            &[0, 1, 2, 3, 4],
            &[&[0, 1, 2], &[1, 2, 3], &[0, 3], &[3, 4]],
        );
        for i in 0..3 {
            let r = k.restrict_to_dimension(i);
            assert_eq!(
                reduced_homology::<Coeff>(&k, i).rank,
                reduced_homology::<Coeff>(&r, i).rank
            );
        }
        let full = SimplicialComplex::full_simplex(vec![0, 1, 2]);
        assert_eq!(full.restrict_to_dimension(5), full);
    }

    #[test]
    fn alexander_duality() {
        let k = complex(&[0, 1, 2, 3], &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        let dual = k.alexander_dual();
        let m = 4i64;
        for i in -1..=2i64 {
            let j = m - i - 3;
            assert_eq!(
                reduced_homology::<Coeff>(&k, i).rank,
                reduced_homology::<Coeff>(&dual, j).rank,
            );
        }
        // double dual is the identity
        assert_eq!(dual.alexander_dual(), k);
        // dual of the void complex is the full simplex
        let void = SimplicialComplex::void(vec![0, 1, 2]);
        assert!(void.alexander_dual().is_full_simplex());
    }

    #[test]
    fn stanley_reisner_minimal_nonfaces() {
        // hollow triangle: single non-face {0,1,2}
        let k = complex(&[0, 1, 2], &[&[0, 1], &[1, 2], &[0, 2]]);
        let i = stanley_reisner(&k, 3);
        assert_eq!(i.gens(), &[Multidegree::new(vec![1, 1, 1])]);
        // full simplex: zero ideal
        let full = SimplicialComplex::full_simplex(vec![0, 1, 2]);
        assert!(stanley_reisner(&full, 3).is_zero());
    }

    #[test]
    fn reduced_euler_identity() {
        let k = complex(&[0, 1, 2, 3], &[&[0, 1, 2], &[2, 3]]);
        let mut chi = 0i64;
        for i in -1..=2i64 {
            let sign = if (i.rem_euclid(2)) == 0 { 1 } else { -1 };
            chi += sign * reduced_homology::<Coeff>(&k, i).rank as i64;
        }
        assert_eq!(k.reduced_euler(), chi);
    }
}
