//! Free resolutions of monomial ideals and their minimization.
//!
//! Homological degree 0 holds the minimal generators of the ideal (the
//! augmentation maps each degree-0 basis element to its label with
//! coefficient 1 and is not stored). Differentials preserve multidegree, so a
//! matrix entry is a single scalar: the monomial part is always the label
//! difference between source and target. `Size` in reports counts the rank-1
//! augmentation target as in the classical convention, while [`FreeResolution::size`]
//! is the bare sum of ranks.

use std::collections::BTreeMap;

use crate::monomial::{min_generators, MonomialIdeal, Multidegree};
use crate::mvtree::MVTree;
use crate::scalar::Scalar;
use crate::simplicial::SimplicialComplex;

/// Sparse column: `(row, coefficient)` pairs, rows strictly increasing.
pub type Column<S> = Vec<(usize, S)>;

#[derive(Clone, Debug)]
pub struct FreeResolution<S> {
    n: usize,
    /// Multidegree labels of the module generators per homological degree.
    modules: Vec<Vec<Multidegree>>,
    /// `diffs[d]` maps degree `d` to degree `d-1` (column per source
    /// generator); `diffs[0]` is empty.
    diffs: Vec<Vec<Column<S>>>,
}

impl<S: Scalar> FreeResolution<S> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modules(&self) -> &[Vec<Multidegree>] {
        &self.modules
    }

    /// Number of homological degrees carrying a module.
    pub fn length(&self) -> usize {
        self.modules.len()
    }

    pub fn rank(&self, d: usize) -> usize {
        self.modules.get(d).map_or(0, Vec::len)
    }

    /// Sum of all ranks.
    pub fn size(&self) -> usize {
        self.modules.iter().map(Vec::len).sum()
    }

    /// Sum of all ranks plus the rank-1 augmentation target.
    pub fn size_with_augmentation(&self) -> usize {
        self.size() + 1
    }

    pub fn column(&self, d: usize, col: usize) -> &Column<S> {
        &self.diffs[d][col]
    }

    /// Scalar coefficient and monomial part of a differential entry.
    pub fn entry(&self, d: usize, col: usize, row: usize) -> Option<(S, Multidegree)> {
        let coeff = self.diffs[d][col]
            .iter()
            .find(|(r, _)| *r == row)
            .map(|(_, c)| c.clone())?;
        let monomial = self.modules[d][col].quotient(&self.modules[d - 1][row]);
        Some((coeff, monomial))
    }

    /// No invertible (scalar, i.e. equal-label) entries anywhere.
    pub fn is_minimal(&self) -> bool {
        for d in 1..self.modules.len() {
            for (col, column) in self.diffs[d].iter().enumerate() {
                for (row, coeff) in column {
                    if !coeff.is_zero() && self.modules[d][col] == self.modules[d - 1][*row] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Betti-style readout: multiplicity of each `(degree, label)`.
    pub fn label_multiplicities(&self) -> BTreeMap<(usize, Multidegree), usize> {
        let mut out = BTreeMap::new();
        for (d, labels) in self.modules.iter().enumerate() {
            for l in labels {
                *out.entry((d, l.clone())).or_insert(0) += 1;
            }
        }
        out
    }

    /// Structural checks: multidegree preservation, `∂∘∂ = 0`, and vanishing
    /// of the augmentation composed with `∂_1`.
    pub fn check_complex(&self) -> bool {
        for d in 1..self.modules.len() {
            for (col, column) in self.diffs[d].iter().enumerate() {
                for (row, _) in column {
                    if !self.modules[d - 1][*row].divides(&self.modules[d][col]) {
                        return false;
                    }
                }
            }
        }
        // augmentation row: coefficients of each ∂_1 column sum to zero
        if self.modules.len() > 1 {
            for column in &self.diffs[1] {
                let sum = column
                    .iter()
                    .fold(S::zero(), |a, (_, c)| a + c.clone());
                if !sum.is_zero() {
                    return false;
                }
            }
        }
        for d in 2..self.modules.len() {
            for column in &self.diffs[d] {
                let mut acc: BTreeMap<usize, S> = BTreeMap::new();
                for (mid, c1) in column {
                    for (row, c2) in &self.diffs[d - 1][*mid] {
                        let e = acc.entry(*row).or_insert_with(S::zero);
                        *e = e.clone() + c1.clone() * c2.clone();
                    }
                }
                if acc.values().any(|v| !v.is_zero()) {
                    return false;
                }
            }
        }
        true
    }
}

fn sorted_column<S: Scalar>(mut col: Vec<(usize, S)>) -> Column<S> {
    col.retain(|(_, c)| !c.is_zero());
    col.sort_by_key(|(r, _)| *r);
    col
}

/// Simplicial resolution supported on a set of generator-index faces closed
/// under subsets (Taylor on the full power set, Lyubeznik and Scarf on
/// subcomplexes). Faces of size `k` live in homological degree `k-1` and are
/// labelled by the lcm of their generators; the differential deletes the
/// element in position `k` with sign `(-1)^{k-1}`.
fn simplicial_subresolution<S: Scalar>(
    n: usize,
    gens: &[Multidegree],
    faces: &[Vec<usize>],
) -> FreeResolution<S> {
    let mut by_size: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for f in faces {
        if !f.is_empty() {
            by_size.entry(f.len()).or_default().push(f.clone());
        }
    }
    let top = by_size.keys().max().copied().unwrap_or(0);
    let mut modules = Vec::new();
    let mut diffs: Vec<Vec<Column<S>>> = vec![Vec::new()];
    let mut prev_index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for size in 1..=top {
        let mut level = by_size.remove(&size).unwrap_or_default();
        level.sort();
        let labels: Vec<Multidegree> = level
            .iter()
            .map(|f| {
                f.iter()
                    .map(|&i| gens[i].clone())
                    .reduce(|a, b| a.lcm(&b))
                    .unwrap()
            })
            .collect();
        if size > 1 {
            let cols = level
                .iter()
                .map(|f| {
                    let mut col = Vec::new();
                    for k in 0..f.len() {
                        let mut sub = f.clone();
                        sub.remove(k);
                        let row = *prev_index
                            .get(&sub)
                            .expect("face set not closed under subsets");
                        let coeff = if k % 2 == 0 { S::one() } else { S::zero() - S::one() };
                        col.push((row, coeff));
                    }
                    sorted_column(col)
                })
                .collect();
            diffs.push(cols);
        }
        prev_index = level
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i))
            .collect();
        modules.push(labels);
    }
    FreeResolution { n, modules, diffs }
}

fn power_set(r: usize) -> Vec<Vec<usize>> {
    assert!(r <= 20, "power set enumeration limited to 20 generators");
    (0u32..(1 << r))
        .map(|mask| (0..r).filter(|&i| mask & (1 << i) != 0).collect())
        .collect()
}

/// Taylor resolution on the minimal generators (canonical order).
pub fn taylor<S: Scalar>(ideal: &MonomialIdeal) -> FreeResolution<S> {
    assert!(!ideal.is_zero());
    let faces = power_set(ideal.num_gens());
    simplicial_subresolution(ideal.n(), ideal.gens(), &faces)
}

/// Lyubeznik resolution for an explicitly ordered minimal generating set:
/// the Taylor subcomplex on the subsets `J` such that no `m_s` divides
/// `lcm { m_j : j in J, j > s }`.
pub fn lyubeznik<S: Scalar>(n: usize, gens: &[Multidegree]) -> FreeResolution<S> {
    let r = gens.len();
    assert!(r > 0);
    let admissible: Vec<Vec<usize>> = power_set(r)
        .into_iter()
        .filter(|j| {
            (0..r).all(|s| {
                let tail: Vec<&Multidegree> =
                    j.iter().filter(|&&x| x > s).map(|&x| &gens[x]).collect();
                match tail.split_first() {
                    None => true,
                    Some((first, rest)) => {
                        let lcm = rest.iter().fold((*first).clone(), |a, b| a.lcm(b));
                        !gens[s].divides(&lcm)
                    }
                }
            })
        })
        .collect();
    simplicial_subresolution(n, gens, &admissible)
}

#[derive(Clone, Debug)]
pub struct ScarfResult<S> {
    /// Scarf complex on generator indices (faces with a unique lcm).
    pub complex: SimplicialComplex,
    pub is_generic: bool,
    /// The algebraic Scarf complex, returned as a resolution only for
    /// generic ideals (where it is minimal).
    pub resolution: Option<FreeResolution<S>>,
}

/// Scarf complex, genericity test, and the Scarf resolution when generic.
pub fn scarf<S: Scalar>(ideal: &MonomialIdeal) -> ScarfResult<S> {
    let gens = ideal.gens();
    let r = gens.len();
    let mut lcm_count: BTreeMap<Multidegree, usize> = BTreeMap::new();
    let subsets = power_set(r);
    let lcms: Vec<Option<Multidegree>> = subsets
        .iter()
        .map(|j| {
            j.iter()
                .map(|&i| gens[i].clone())
                .reduce(|a, b| a.lcm(&b))
        })
        .collect();
    for l in lcms.iter().flatten() {
        *lcm_count.entry(l.clone()).or_insert(0) += 1;
    }
    let faces: Vec<Vec<usize>> = subsets
        .iter()
        .zip(&lcms)
        .filter(|(_, l)| l.as_ref().is_none_or(|l| lcm_count[l] == 1))
        .map(|(j, _)| j.clone())
        .collect();
    let complex = SimplicialComplex::from_faces((0..r).collect(), faces.clone());
    let is_generic = (0..r).all(|i| {
        (i + 1..r).all(|j| {
            let shared = (0..ideal.n()).any(|v| {
                let e = gens[i].exp(v);
                e > 0 && e == gens[j].exp(v)
            });
            !shared
                || (0..r).any(|k| {
                    k != i && k != j && gens[k].strictly_divides(&gens[i].lcm(&gens[j]))
                })
        })
    });
    let resolution = is_generic.then(|| simplicial_subresolution(ideal.n(), gens, &faces));
    ScarfResult { complex, is_generic, resolution }
}

// ---------------------------------------------------------------------------
// Mapping-cone resolution supported on a Mayer-Vietoris tree.
//
// All element arithmetic happens at a fixed total multidegree, so module
// elements are sparse coefficient vectors over the generators of one
// homological degree (the monomial part of each term is the label
// difference). An effective resolution carries a contracting homotopy good
// enough to produce boundary preimages of cycles, which is what the
// comparison-map lifting needs.
// ---------------------------------------------------------------------------

type Vect<S> = Vec<(usize, S)>;

fn vect_add<S: Scalar>(a: &Vect<S>, b: &Vect<S>) -> Vect<S> {
    let mut acc: BTreeMap<usize, S> = a.iter().cloned().collect();
    for (i, c) in b {
        let e = acc.entry(*i).or_insert_with(S::zero);
        *e = e.clone() + c.clone();
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn vect_scale<S: Scalar>(a: &Vect<S>, s: &S) -> Vect<S> {
    if s.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(i, c)| (*i, c.clone() * s.clone())).collect()
}

enum EffKind<S> {
    /// Taylor resolution of at most two generators with its explicit
    /// contracting homotopy.
    Small,
    Cone(Box<ConeData<S>>),
}

struct ConeData<S> {
    pivot: Multidegree,
    rest: EffRes<S>,
    tilde: EffRes<S>,
    /// Lifted comparison map: `iota[q][k]` is the image in `P(rest ⊕
    /// <pivot>)_q` of the `k`-th generator of `P(tilde)_q`. At level 0 the
    /// pivot component is the last index.
    iota: Vec<Vec<Vect<S>>>,
}

struct EffRes<S> {
    ideal: MonomialIdeal,
    res: FreeResolution<S>,
    kind: EffKind<S>,
}

impl<S: Scalar> EffRes<S> {
    fn small(n: usize, gens: &[Multidegree]) -> EffRes<S> {
        debug_assert!((1..=2).contains(&gens.len()));
        let ideal = min_generators(n, gens.to_vec());
        let faces = power_set(gens.len());
        let res = simplicial_subresolution(n, gens, &faces);
        EffRes { ideal, res, kind: EffKind::Small }
    }

    fn gens(&self) -> &[Multidegree] {
        &self.res.modules[0]
    }

    /// Preimage under the augmentation of `coeff · x^a` (requires `x^a` in
    /// the ideal).
    fn h_aug(&self, a: &Multidegree, coeff: &S) -> Vect<S> {
        if coeff.is_zero() {
            return Vec::new();
        }
        match &self.kind {
            EffKind::Small => {
                let idx = self
                    .gens()
                    .iter()
                    .position(|g| g.divides(a))
                    .expect("monomial outside the ideal");
                vec![(idx, coeff.clone())]
            }
            EffKind::Cone(data) => {
                // image of the sigma splitting, then the direct-sum homotopy
                let in_rest = data.rest.ideal.contains(a);
                let in_pivot = data.pivot.divides(a);
                let half = coeff.clone() / S::from_int(2);
                let (c_rest, c_pivot) = match (in_rest, in_pivot) {
                    (true, true) => (half.clone(), half),
                    (true, false) => (coeff.clone(), S::zero()),
                    (false, true) => (S::zero(), coeff.clone()),
                    (false, false) => panic!("monomial outside the ideal"),
                };
                let mut v = data.rest.h_aug(a, &c_rest);
                if !c_pivot.is_zero() {
                    v.push((data.rest.res.rank(0), c_pivot));
                }
                v
            }
        }
    }

    /// Boundary preimage of a cycle `v` in degree `q` and multidegree `a`
    /// (for `q = 0` a cycle is an element with vanishing augmentation).
    fn h(&self, q: usize, a: &Multidegree, v: &Vect<S>) -> Vect<S> {
        if v.is_empty() {
            return Vec::new();
        }
        match &self.kind {
            EffKind::Small => small_homotopy(self, q, a, v),
            EffKind::Cone(data) => {
                let rest_rank = |d: usize| data.rest.res.rank(d);
                if q == 0 {
                    let pivot_idx = rest_rank(0);
                    let s_pivot = v
                        .iter()
                        .find(|(i, _)| *i == pivot_idx)
                        .map(|(_, c)| c.clone())
                        .unwrap_or_else(S::zero);
                    let s_rest = v
                        .iter()
                        .filter(|(i, _)| *i != pivot_idx)
                        .fold(S::zero(), |acc, (_, c)| acc + c.clone());
                    // rho of the componentwise augmentation lands in the
                    // intersection; its augmentation preimage is the new
                    // tilde coordinate
                    let in_tilde = data.tilde.ideal.contains(a);
                    let alpha = if in_tilde {
                        (s_rest - s_pivot) / S::from_int(2)
                    } else {
                        S::zero()
                    };
                    let a_part = data.tilde.h_aug(a, &alpha);
                    // subtract its image under the stored comparison map
                    // (which carries the matching augmentation), leaving a
                    // componentwise cycle for the summand homotopies
                    let corr = vect_scale(&apply_iota(data, 0, &a_part), &(S::zero() - S::one()));
                    let z = vect_add(v, &corr);
                    let mut z_rest: Vect<S> = Vec::new();
                    for (i, c) in &z {
                        if *i == pivot_idx {
                            debug_assert!(c.is_zero(), "pivot component must cancel");
                        } else {
                            z_rest.push((*i, c.clone()));
                        }
                    }
                    let b_part = data.rest.h(0, a, &z_rest);
                    assemble_cone_level(&data.rest.res, 1, b_part, a_part)
                } else {
                    // split v into the rest part and the tilde part
                    let boundary = rest_rank(q);
                    let mut b: Vect<S> = Vec::new();
                    let mut t: Vect<S> = Vec::new();
                    for (i, c) in v {
                        if *i < boundary {
                            b.push((*i, c.clone()));
                        } else {
                            t.push((*i - boundary, c.clone()));
                        }
                    }
                    let ht = data.tilde.h(q - 1, a, &t);
                    let iota_ht = apply_iota(data, q, &ht);
                    let arg = vect_add(&b, &iota_ht);
                    let hb = data.rest.h(q, a, &arg);
                    let neg_ht = vect_scale(&ht, &(S::zero() - S::one()));
                    assemble_cone_level(&data.rest.res, q + 1, hb, neg_ht)
                }
            }
        }
    }
}

/// Fröberg's contracting homotopy of the Taylor resolution of at most two
/// generators, evaluated on an element of degree `q` and multidegree `a`.
fn small_homotopy<S: Scalar>(eff: &EffRes<S>, q: usize, a: &Multidegree, v: &Vect<S>) -> Vect<S> {
    let gens = eff.gens();
    if q >= 1 || gens.len() == 1 {
        // top of the complex, only the zero cycle has a preimage
        return Vec::new();
    }
    let mut out: Vect<S> = Vec::new();
    for (idx, c) in v {
        // term c · x^{a - m_idx} · u_idx ; iota is the least generator
        // dividing x^a
        let iota = gens.iter().position(|g| g.divides(a)).expect("term outside the ideal");
        if iota < *idx {
            // up into u_{iota, idx}: the only 2-subset
            out = vect_add(&out, &[(0usize, c.clone())].to_vec());
        }
    }
    out
}

/// Lay out `(rest-part, tilde-part)` in the cone's module at `level`.
fn assemble_cone_level<S: Scalar>(
    rest_res: &FreeResolution<S>,
    level: usize,
    b: Vect<S>,
    t: Vect<S>,
) -> Vect<S> {
    let offset = rest_res.rank(level) + usize::from(level == 0);
    let mut out = b;
    for (i, c) in t {
        out.push((i + offset, c));
    }
    out.sort_by_key(|(i, _)| *i);
    out
}

/// Apply the stored comparison map at level `q` to an element of
/// `P(tilde)_q`.
fn apply_iota<S: Scalar>(data: &ConeData<S>, q: usize, v: &Vect<S>) -> Vect<S> {
    let mut out: Vect<S> = Vec::new();
    for (i, c) in v {
        out = vect_add(&out, &vect_scale(&data.iota[q][*i], c));
    }
    out
}

fn build_eff<S: Scalar>(tree: &MVTree, node: usize) -> EffRes<S> {
    let n = tree.n();
    let data = &tree.nodes()[node];
    if data.gens.len() <= 2 {
        return EffRes::small(n, &data.gens);
    }
    let (tilde_idx, rest_idx) = data.children.expect("interior node has children");
    let tilde = build_eff::<S>(tree, tilde_idx);
    let rest = build_eff::<S>(tree, rest_idx);
    let pivot = data.pivot.clone().expect("split node has a pivot");
    build_cone(n, &data.gens, pivot, rest, tilde)
}

fn build_cone<S: Scalar>(
    n: usize,
    node_gens: &[Multidegree],
    pivot: Multidegree,
    rest: EffRes<S>,
    tilde: EffRes<S>,
) -> EffRes<S> {
    // lift the inclusion of the intersection through the homotopies
    let mut iota: Vec<Vec<Vect<S>>> = Vec::new();
    for q in 0..tilde.res.length() {
        let mut level = Vec::new();
        for (k, label) in tilde.res.modules()[q].iter().enumerate() {
            let image: Vect<S> = if q == 0 {
                // i(x^label) = (x^label, -x^label), then the augmentation
                // preimages on both summands
                let mut v = rest.h_aug(label, &S::one());
                v.push((rest.res.rank(0), S::zero() - S::one()));
                v
            } else {
                let w = tilde.res.column(q, k);
                let mut z: Vect<S> = Vec::new();
                for (row, c) in w {
                    z = vect_add(&z, &vect_scale(&iota[q - 1][*row], c));
                }
                // strip the pivot coordinate bookkeeping for q-1 = 0: the
                // homotopy of the direct sum is applied componentwise
                if q == 1 {
                    let pivot_idx = rest.res.rank(0);
                    let mut z_rest: Vect<S> = Vec::new();
                    for (i, c) in &z {
                        if *i != pivot_idx {
                            z_rest.push((*i, c.clone()));
                        }
                    }
                    // pivot summand has nothing above level 0
                    rest.h(0, label, &z_rest)
                } else {
                    rest.h(q - 1, label, &z)
                }
            };
            level.push(image);
        }
        iota.push(level);
    }

    // assemble the cone modules and differentials
    let mut modules: Vec<Vec<Multidegree>> = Vec::new();
    let mut diffs: Vec<Vec<Column<S>>> = vec![Vec::new()];
    let top = rest.res.length().max(tilde.res.length() + 1);
    for q in 0..top {
        let mut labels: Vec<Multidegree> = rest
            .res
            .modules()
            .get(q)
            .cloned()
            .unwrap_or_default();
        if q == 0 {
            labels.push(pivot.clone());
        }
        if q >= 1 {
            if let Some(t) = tilde.res.modules().get(q - 1) {
                labels.extend(t.iter().cloned());
            }
        }
        modules.push(labels);
    }
    for q in 1..top {
        let rest_cols = rest
            .res
            .modules()
            .get(q)
            .map_or(0, Vec::len);
        let mut cols: Vec<Column<S>> = Vec::new();
        for col in 0..rest_cols {
            cols.push(rest.res.column(q, col).clone());
        }
        let tilde_count = tilde.res.modules().get(q - 1).map_or(0, Vec::len);
        let offset = rest.res.rank(q - 1) + usize::from(q == 1);
        if tilde_count > 0 {
            for (k, iota_col) in iota[q - 1].iter().enumerate().take(tilde_count) {
                let mut col: Vect<S> = iota_col.clone();
                if q >= 2 {
                    for (row, c) in tilde.res.column(q - 1, k) {
                        col.push((row + offset, S::zero() - c.clone()));
                    }
                }
                cols.push(sorted_column(col));
            }
        }
        diffs.push(cols);
    }
    let ideal = min_generators(n, node_gens.to_vec());
    let res = FreeResolution { n, modules, diffs };
    debug_assert_eq!(
        {
            let mut m = res.modules[0].clone();
            m.sort_by(|a, b| a.cmp_canonical(b));
            m
        },
        ideal.gens().to_vec()
    );
    EffRes { ideal, res, kind: EffKind::Cone(Box::new(ConeData { pivot, rest, tilde, iota })) }
}

/// Mapping-cone resolution supported on the relevant nodes of a
/// Mayer-Vietoris tree.
pub fn mv_resolution<S: Scalar>(tree: &MVTree) -> FreeResolution<S> {
    let eff = build_eff::<S>(tree, 0);
    debug_assert!(eff.res.check_complex());
    eff.res
}

/// Chain complex reduction: cancel invertible (equal-label) entries from the
/// top homological degree downward until none remain. The result is the
/// minimal resolution.
pub fn minimize<S: Scalar>(res: &FreeResolution<S>) -> FreeResolution<S> {
    let mut modules = res.modules.clone();
    let diffs = res.diffs.clone();
    // dense working copies per level for easy row/column surgery
    let mut dense: Vec<Vec<Vec<S>>> = Vec::with_capacity(diffs.len());
    for d in 0..diffs.len() {
        let rows = if d == 0 { 0 } else { modules[d - 1].len() };
        let mut m = vec![vec![S::zero(); modules.get(d).map_or(0, Vec::len)]; rows];
        if d > 0 {
            for (col, column) in diffs[d].iter().enumerate() {
                for (row, c) in column {
                    m[*row][col] = c.clone();
                }
            }
        }
        dense.push(m);
    }
    for d in (1..modules.len()).rev() {
        loop {
            // find a reduction pair: equal labels, nonzero coefficient
            let mut found = None;
            'scan: for row in 0..modules[d - 1].len() {
                for col in 0..modules[d].len() {
                    if !dense[d][row][col].is_zero()
                        && modules[d][col] == modules[d - 1][row]
                    {
                        found = Some((row, col));
                        break 'scan;
                    }
                }
            }
            let Some((row_a, col_b)) = found else { break };
            let u = dense[d][row_a][col_b].clone();
            let u_inv = u.inv();
            // column operations at level d kill the row
            for col in 0..modules[d].len() {
                if col == col_b || dense[d][row_a][col].is_zero() {
                    continue;
                }
                let f = dense[d][row_a][col].clone() * u_inv.clone();
                for row in dense[d].iter_mut().take(modules[d - 1].len()) {
                    let upd = row[col_b].clone() * f.clone();
                    row[col] = row[col].clone() - upd;
                }
            }
            // delete column b and row a at level d
            for row in dense[d].iter_mut() {
                row.remove(col_b);
            }
            dense[d].remove(row_a);
            modules[d].remove(col_b);
            modules[d - 1].remove(row_a);
            // level d+1 loses row b
            if d + 1 < modules.len() {
                dense[d + 1].remove(col_b);
            }
            // level d-1 loses column a
            if d >= 2 {
                for row in dense[d - 1].iter_mut() {
                    row.remove(row_a);
                }
            }
        }
    }
    while modules.last().is_some_and(Vec::is_empty) {
        modules.pop();
        dense.pop();
    }
    let mut out_diffs: Vec<Vec<Column<S>>> = vec![Vec::new()];
    for (d, m) in dense.iter().enumerate().skip(1) {
        if d >= modules.len() {
            break;
        }
        let cols = modules[d].len();
        let mut level: Vec<Column<S>> = Vec::with_capacity(cols);
        for col in 0..cols {
            let column: Vec<(usize, S)> = m
                .iter()
                .take(modules[d - 1].len())
                .enumerate()
                .filter(|(_, row)| !row[col].is_zero())
                .map(|(r, row)| (r, row[col].clone()))
                .collect();
            level.push(column);
        }
        out_diffs.push(level);
    }
    let out = FreeResolution { n: res.n, modules, diffs: out_diffs };
    debug_assert!(out.is_minimal());
    debug_assert!(out.check_complex());
    out
}

/// Graded invariants of a minimal resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    /// `(homological degree, total degree) -> rank`.
    pub betti_table: BTreeMap<(usize, u64), usize>,
    pub projdim: usize,
    pub regularity: u64,
    pub depth: usize,
}

/// Betti table, projective dimension, regularity and depth. Panics when the
/// input still has invertible entries.
pub fn invariants<S: Scalar>(res: &FreeResolution<S>) -> Invariants {
    assert!(res.is_minimal(), "invariants require a minimal resolution");
    let mut betti_table = BTreeMap::new();
    let mut regularity = 0;
    for (d, labels) in res.modules().iter().enumerate() {
        for l in labels {
            *betti_table.entry((d, l.degree())).or_insert(0) += 1;
            regularity = regularity.max(l.degree() - d as u64);
        }
    }
    let projdim = res.length() - 1;
    Invariants {
        betti_table,
        projdim,
        regularity,
        depth: res.n() - projdim,
    }
}

/// Multigraded Betti numbers through the minimized Taylor resolution.
pub fn betti_numbers(ideal: &MonomialIdeal) -> BTreeMap<(usize, Multidegree), usize> {
    let res = taylor::<crate::Coeff>(ideal);
    minimize(&res).label_multiplicities()
}

/// Betti totals per homological degree.
pub fn betti_totals(map: &BTreeMap<(usize, Multidegree), usize>) -> Vec<usize> {
    let mut out = Vec::new();
    for ((i, _), c) in map {
        if out.len() <= *i {
            out.resize(i + 1, 0);
        }
        out[*i] += c;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mvtree::{build_tree, build_tree_from_ordered, PivotStrategy};
    use crate::Coeff;

    fn md(e: &[u64]) -> Multidegree {
        Multidegree::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| md(g)).collect())
    }

    fn q(v: i64) -> Coeff {
        Coeff::from_int(v)
    }

    #[test]
    fn taylor_shape_and_signs() {
        // I = <x^2 y, x y^3, xz, yz>: length 4, size 16 with augmentation
        let i = ideal(3, &[&[2, 1, 0], &[1, 3, 0], &[1, 0, 1], &[0, 1, 1]]);
        let t = taylor::<Coeff>(&i);
        assert_eq!(t.length(), 4);
        assert_eq!(t.size_with_augmentation(), 16);
        assert_eq!(t.size(), (1 << 4) - 1);
        assert!(t.check_complex());
        // d2 column for the pair {x^2 y, x y^3}: +x at u_2, -y^2 at u_1,
        // under the delete-position sign rule
        let c = canonical_order_of(&i, &[&[2, 1, 0], &[1, 3, 0]]);
        let pair_label = md(&[2, 3, 0]);
        let col_idx = t.modules()[1].iter().position(|l| *l == pair_label).unwrap();
        let (c0, m0) = t.entry(1, col_idx, c[0]).unwrap();
        let (c1, m1) = t.entry(1, col_idx, c[1]).unwrap();
        assert_eq!((c0, m0), (q(-1), md(&[0, 2, 0])));
        assert_eq!((c1, m1), (q(1), md(&[1, 0, 0])));
        // single generator: one module, no differential
        let single = taylor::<Coeff>(&ideal(2, &[&[3, 1]]));
        assert_eq!(single.length(), 1);
        assert_eq!(single.size(), 1);
        // two generators: degree-1 generator at the lcm, always minimal
        let two = taylor::<Coeff>(&ideal(2, &[&[2, 0], &[0, 2]]));
        assert_eq!(two.modules()[1], vec![md(&[2, 2])]);
        assert!(two.is_minimal());
    }

    fn canonical_order_of(i: &MonomialIdeal, gens: &[&[u64]]) -> Vec<usize> {
        gens.iter()
            .map(|g| i.gens().iter().position(|x| *x == md(g)).unwrap())
            .collect()
    }

    #[test]
    fn lyubeznik_orders() {
        // in the canonical-paper order the Lyubeznik resolution equals Taylor
        let gens = [md(&[2, 1, 0]), md(&[1, 3, 0]), md(&[1, 0, 1]), md(&[0, 1, 1])];
        let l = lyubeznik::<Coeff>(3, &gens);
        assert_eq!(l.size_with_augmentation(), 16);
        // reordered to xz, yz, x^2 y, x y^3: size 10 and minimal
        let gens = [md(&[1, 0, 1]), md(&[0, 1, 1]), md(&[2, 1, 0]), md(&[1, 3, 0])];
        let l = lyubeznik::<Coeff>(3, &gens);
        assert_eq!(l.size_with_augmentation(), 10);
        assert!(l.is_minimal());
        assert!(l.check_complex());
        // single generator
        let l = lyubeznik::<Coeff>(2, &[md(&[1, 1])]);
        assert_eq!(l.length(), 1);
    }

    #[test]
    fn scarf_faces_and_genericity() {
        let i = ideal(3, &[&[2, 1, 0], &[1, 3, 0], &[1, 0, 1], &[0, 1, 1]]);
        let s = scarf::<Coeff>(&i);
        assert!(!s.is_generic);
        assert!(s.resolution.is_none());
        // facets {12} and {34} in the listed generator order
        let order = canonical_order_of(&i, &[&[2, 1, 0], &[1, 3, 0], &[1, 0, 1], &[0, 1, 1]]);
        let mut expect: Vec<Vec<usize>> = vec![
            vec![order[0], order[1]],
            vec![order[2], order[3]],
        ];
        expect.iter_mut().for_each(|f| f.sort_unstable());
        expect.sort();
        let facets = s.complex.facets().to_vec();
        assert_eq!(facets, expect);
        // a strongly generic ideal: Scarf resolution is minimal with the
        // oracle Betti numbers
        let g = ideal(3, &[&[3, 1, 0], &[1, 2, 0], &[0, 3, 1], &[2, 0, 2]]);
        let s = scarf::<Coeff>(&g);
        assert!(s.is_generic);
        let res = s.resolution.unwrap();
        assert!(res.is_minimal());
        assert_eq!(res.label_multiplicities(), betti_numbers(&g));
        // single generator: faces {}, {1}
        let s = scarf::<Coeff>(&ideal(2, &[&[1, 1]]));
        assert!(s.complex.is_face(&[0]));
    }

    #[test]
    fn mv_resolution_worked_example() {
        // <x^2, y^2, xy> split at xy, then y^2: a 3-term resolution whose
        // last differential carries a unit entry at the repeated multidegree
        let tree = build_tree_from_ordered(
            2,
            vec![md(&[1, 1]), md(&[0, 2]), md(&[2, 0])],
        );
        let res = mv_resolution::<Coeff>(&tree);
        assert!(res.check_complex());
        assert_eq!(
            res.modules()[0].iter().map(Multidegree::degree).sum::<u64>(),
            6
        );
        assert_eq!(res.rank(0), 3);
        assert_eq!(res.rank(1), 3);
        assert_eq!(res.rank(2), 1);
        // ranks match relevant-node generator counts per dimension
        let bounds = crate::mvtree::relevant_betti_bounds(&tree);
        assert_eq!(bounds.upper_totals(), vec![3, 3, 1]);
        // the top column carries the invertible entry witnessing the repeat
        let top_label = &res.modules()[2][0];
        assert_eq!(top_label, &md(&[2, 2]));
        let unit_row = res.modules()[1].iter().position(|l| l == &md(&[2, 2])).unwrap();
        let (c, m) = res.entry(2, 0, unit_row).unwrap();
        assert_eq!(m, md(&[0, 0]));
        assert!(c == q(1) || c == q(-1));
        // the remaining two rows of the last column carry y and -x
        let row_x2y = res.modules()[1].iter().position(|l| l == &md(&[2, 1])).unwrap();
        let row_xy2 = res.modules()[1].iter().position(|l| l == &md(&[1, 2])).unwrap();
        let (cy, my) = res.entry(2, 0, row_x2y).unwrap();
        let (cx, mx) = res.entry(2, 0, row_xy2).unwrap();
        assert_eq!(my, md(&[0, 1]));
        assert_eq!(mx, md(&[1, 0]));
        assert_eq!(cy.clone() + cx.clone(), q(0)); // opposite signs
        // minimization reaches beta = (3, 2) with degree-1 labels x^2 y, x y^2
        let min = minimize(&res);
        assert_eq!(min.rank(0), 3);
        assert_eq!(min.rank(1), 2);
        assert_eq!(min.length(), 2);
        let mut labels = min.modules()[1].clone();
        labels.sort_by(|a, b| a.cmp_canonical(b));
        assert_eq!(labels, vec![md(&[1, 2]), md(&[2, 1])]);
        let oracle = minimize(&taylor::<Coeff>(&ideal(2, &[&[2, 0], &[0, 2], &[1, 1]])));
        assert_eq!(min.label_multiplicities(), oracle.label_multiplicities());
    }

    #[test]
    fn mv_resolution_zero_repeat_tree_is_minimal() {
        let i = ideal(3, &[&[1, 2, 0], &[1, 1, 3], &[0, 5, 0], &[0, 0, 6]]);
        let tree = build_tree(&i, PivotStrategy::LexLast);
        let res = mv_resolution::<Coeff>(&tree);
        assert!(res.is_minimal());
        assert_eq!(res.rank(0), 4);
        assert_eq!(res.rank(1), 4);
        assert_eq!(res.rank(2), 1);
    }

    #[test]
    fn minimize_taylor_examples() {
        // Taylor of <x^2 y, x y^3, xz, yz> minimizes to size 10
        let i = ideal(3, &[&[2, 1, 0], &[1, 3, 0], &[1, 0, 1], &[0, 1, 1]]);
        let min = minimize(&taylor::<Coeff>(&i));
        assert_eq!(min.size_with_augmentation(), 10);
        // already-minimal input is unchanged
        let again = minimize(&min);
        assert_eq!(again.label_multiplicities(), min.label_multiplicities());
        // triangle ideal: beta_1 multidegree (1,1,1) with multiplicity 2
        let t = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let b = betti_numbers(&t);
        assert_eq!(b[&(1, md(&[1, 1, 1]))], 2);
        assert_eq!(betti_totals(&b), vec![3, 2]);
        // single generator
        let b = betti_numbers(&ideal(2, &[&[2, 1]]));
        assert_eq!(b.len(), 1);
        assert_eq!(b[&(0, md(&[2, 1]))], 1);
    }

    #[test]
    fn betti_multidegree_table() {
        let i = ideal(3, &[&[2, 1, 0], &[1, 0, 1], &[0, 3, 0], &[0, 0, 3]]);
        let b = betti_numbers(&i);
        let dim2: std::collections::BTreeSet<Multidegree> = b
            .keys()
            .filter(|(d, _)| *d == 2)
            .map(|(_, m)| m.clone())
            .collect();
        assert_eq!(dim2, [md(&[2, 3, 1]), md(&[1, 3, 3])].into_iter().collect());
        assert_eq!(betti_totals(&b), vec![4, 5, 2]);
    }

    #[test]
    fn invariants_small() {
        let single = minimize(&taylor::<Coeff>(&ideal(3, &[&[2, 1, 1]])));
        let inv = invariants(&single);
        assert_eq!(inv.projdim, 0);
        assert_eq!(inv.regularity, 4);
        assert_eq!(inv.depth, 3);
    }

    #[test]
    fn mv_resolution_all_strategies_agree_after_minimization() {
        let i = ideal(3, &[&[2, 1, 0], &[1, 0, 1], &[0, 3, 0], &[0, 0, 3]]);
        let oracle = betti_numbers(&i);
        for s in crate::mvtree::ALL_STRATEGIES {
            let res = mv_resolution::<Coeff>(&build_tree(&i, s));
            assert!(res.check_complex(), "strategy {s}");
            let min = minimize(&res);
            assert_eq!(min.label_multiplicities(), oracle, "strategy {s}");
            assert!(min.size() <= res.size());
            assert!(res.size() <= taylor::<Coeff>(&i).size());
        }
    }
}
