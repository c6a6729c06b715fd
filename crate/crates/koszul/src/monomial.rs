//! Multidegrees, monomial ideals and their combinatorial algebra.
//!
//! A monomial is identified with its exponent vector in `N^n`; divisibility,
//! lcm and gcd are componentwise. Ideals are stored by their unique minimal
//! generating set, canonically sorted, so that equality of ideals is equality
//! of the structs.

use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial. All entries are nonnegative; the length is
/// the ambient variable count and must agree between operands.
///
/// Exponents are machine-width; additive operations are checked and panic on
/// overflow rather than wrapping.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree(Vec<u64>);

impl fmt::Debug for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?}", self.0)
    }
}

impl Multidegree {
    pub fn new(exponents: Vec<u64>) -> Self {
        Multidegree(exponents)
    }

    pub fn zero(n: usize) -> Self {
        Multidegree(vec![0; n])
    }

    /// Single variable `x_i`.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Multidegree(e)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u64] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u64 {
        self.0[i]
    }

    pub fn set_exp(&mut self, i: usize, e: u64) {
        self.0[i] = e;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Total degree; panics on overflow.
    pub fn degree(&self) -> u64 {
        self.0
            .iter()
            .try_fold(0u64, |a, &e| a.checked_add(e))
            .expect("total degree overflow")
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.0[i] > 0).collect()
    }

    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&e| e > 0).count()
    }

    pub fn has_full_support(&self) -> bool {
        self.0.iter().all(|&e| e > 0)
    }

    /// One bit per variable presence; cheap divisibility pre-filter.
    pub fn support_mask(&self) -> u64 {
        assert!(self.n() <= 64, "support masks need n <= 64");
        let mut m = 0u64;
        for i in 0..self.n() {
            if self.0[i] > 0 {
                m |= 1 << i;
            }
        }
        m
    }

    /// Componentwise `<=`.
    pub fn divides(&self, other: &Multidegree) -> bool {
        assert_eq!(self.n(), other.n(), "multidegree length mismatch");
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn strictly_divides(&self, other: &Multidegree) -> bool {
        assert_eq!(self.n(), other.n(), "multidegree length mismatch");
        self.0
            .iter()
            .zip(&other.0)
            .all(|(&a, &b)| if b > 0 { a < b } else { a == 0 })
    }

    pub fn lcm(&self, other: &Multidegree) -> Multidegree {
        assert_eq!(self.n(), other.n(), "multidegree length mismatch");
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Multidegree) -> Multidegree {
        assert_eq!(self.n(), other.n(), "multidegree length mismatch");
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Product of monomials; panics on exponent overflow.
    pub fn times(&self, other: &Multidegree) -> Multidegree {
        assert_eq!(self.n(), other.n(), "multidegree length mismatch");
        Multidegree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Quotient `self / other`; panics unless `other` divides `self`.
    pub fn quotient(&self, other: &Multidegree) -> Multidegree {
        assert!(other.divides(self), "monomial quotient of a non-multiple");
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Subtract 1 from every nonzero coordinate: `lcm(m, x_1..x_n)/(x_1..x_n)`.
    pub fn outer_corner(&self) -> Multidegree {
        Multidegree(self.0.iter().map(|&e| e.saturating_sub(1)).collect())
    }

    /// Add the indicator of a variable set.
    pub fn plus_vars(&self, vars: &[usize]) -> Multidegree {
        let mut e = self.0.clone();
        for &v in vars {
            e[v] = e[v].checked_add(1).expect("exponent overflow");
        }
        Multidegree(e)
    }

    /// Squarefree monomial supported on `vars`.
    pub fn from_vars(n: usize, vars: &[usize]) -> Multidegree {
        let mut e = vec![0; n];
        for &v in vars {
            e[v] = 1;
        }
        Multidegree(e)
    }

    pub fn cmp_lex(&self, other: &Multidegree) -> Ordering {
        self.0.cmp(&other.0)
    }

    pub fn cmp_deglex(&self, other: &Multidegree) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.cmp_lex(other))
    }

    pub fn cmp_degrevlex(&self, other: &Multidegree) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for i in (0..self.n()).rev() {
                match self.0[i].cmp(&other.0[i]) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {}
                }
            }
            Ordering::Equal
        })
    }

    /// Canonical order used for generator storage: degrevlex, ties by lex.
    pub fn cmp_canonical(&self, other: &Multidegree) -> Ordering {
        self.cmp_degrevlex(other).then_with(|| self.cmp_lex(other))
    }
}

/// Monomial ideal stored by its minimal generators, canonically sorted
/// (ascending degrevlex-then-lex). The zero ideal has no generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Multidegree>,
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal{:?}", self.gens)
    }
}

/// Unique inclusion-minimal antichain generating the same ideal.
pub fn min_generators(n: usize, raw: Vec<Multidegree>) -> MonomialIdeal {
    for m in &raw {
        assert_eq!(m.n(), n, "generator length mismatch");
    }
    let mut kept: Vec<Multidegree> = Vec::with_capacity(raw.len());
    'outer: for m in raw {
        let mut i = 0;
        while i < kept.len() {
            if kept[i].divides(&m) {
                continue 'outer;
            }
            if m.divides(&kept[i]) {
                kept.swap_remove(i);
            } else {
                i += 1;
            }
        }
        kept.push(m);
    }
    kept.sort_by(|a, b| a.cmp_canonical(b));
    kept.dedup();
    MonomialIdeal { n, gens: kept }
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Multidegree>) -> Self {
        min_generators(n, gens)
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn principal(m: Multidegree) -> Self {
        let n = m.n();
        MonomialIdeal { n, gens: vec![m] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Multidegree] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// A monomial ideal is proper unless 1 is among its generators.
    pub fn is_proper(&self) -> bool {
        !self.gens.iter().any(|g| g.is_zero())
    }

    /// Membership: some generator divides the monomial.
    pub fn contains(&self, m: &Multidegree) -> bool {
        assert_eq!(m.n(), self.n, "multidegree length mismatch");
        self.gens.iter().any(|g| g.divides(m))
    }

    /// lcm of all minimal generators. `None` for the zero ideal.
    pub fn lambda(&self) -> Option<Multidegree> {
        let mut it = self.gens.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, g| acc.lcm(g)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.n, other.n, "ambient variable count mismatch");
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        min_generators(self.n, gens)
    }

    /// Intersection via pairwise lcms of generators.
    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.n, other.n, "ambient variable count mismatch");
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        min_generators(self.n, gens)
    }

    /// Quotient ideal `(I : x^m) = < lcm(g, m)/m >`.
    pub fn colon(&self, m: &Multidegree) -> MonomialIdeal {
        assert_eq!(m.n(), self.n, "multidegree length mismatch");
        let gens = self
            .gens
            .iter()
            .map(|g| g.lcm(m).quotient(m))
            .collect();
        min_generators(self.n, gens)
    }

    /// lcm lattice graded by the number of generators in each subset.
    ///
    /// `levels[i]` (1-based level `i+1`) holds the distinct lcms of exactly
    /// `i+1` minimal generators.
    pub fn lcm_lattice(&self) -> LcmLattice {
        let r = self.gens.len();
        let mut levels: Vec<Vec<Multidegree>> = Vec::with_capacity(r);
        if r == 0 {
            return LcmLattice { levels };
        }
        // lcms of exactly i generators, as sets of subset-lcms per size.
        let mut current: Vec<Multidegree> = self.gens.clone();
        let mut per_subset: Vec<(usize, Multidegree)> = self
            .gens
            .iter()
            .enumerate()
            .map(|(i, g)| (i, g.clone()))
            .collect();
        for size in 1..=r {
            let mut level = current.clone();
            level.sort_by(|a, b| a.cmp_canonical(b));
            level.dedup();
            levels.push(level);
            if size == r {
                break;
            }
            // extend each subset (tracked by its maximal index) by one generator
            let mut next: Vec<(usize, Multidegree)> = Vec::new();
            for (max_idx, l) in &per_subset {
                for j in (max_idx + 1)..r {
                    next.push((j, l.lcm(&self.gens[j])));
                }
            }
            per_subset = next;
            current = per_subset.iter().map(|(_, l)| l.clone()).collect();
        }
        LcmLattice { levels }
    }

    /// `I + m^(lambda+1)`: the smallest artinian ideal whose minimal
    /// generators include those of `I`.
    pub fn artinian_closure(&self) -> MonomialIdeal {
        assert!(!self.is_zero(), "artinian closure of the zero ideal");
        assert!(self.is_proper(), "artinian closure of the unit ideal");
        let lambda = self.lambda().unwrap();
        let mut gens = self.gens.clone();
        for i in 0..self.n {
            let mut pure = Multidegree::zero(self.n);
            pure.set_exp(i, lambda.exp(i).checked_add(1).expect("exponent overflow"));
            gens.push(pure);
        }
        min_generators(self.n, gens)
    }

    /// Artinian: a pure power of every variable among the generators.
    pub fn is_artinian(&self) -> bool {
        (0..self.n).all(|i| {
            self.gens
                .iter()
                .any(|g| g.exp(i) > 0 && g.support_size() == 1)
        })
    }

    /// Boundary test: `m` is on a wall of `I` iff dividing once by every
    /// support variable leaves the ideal.
    pub fn on_boundary(&self, m: &Multidegree) -> bool {
        self.contains(m) && !self.contains(&m.outer_corner())
    }

    /// Classify a monomial of the ideal as interior, k-wall, closed corner or
    /// maximal corner. Panics when `m` is not in the ideal.
    pub fn corner_classify(&self, m: &Multidegree) -> CornerReport {
        assert!(self.contains(m), "corner classification of a monomial outside the ideal");
        if self.contains(&m.outer_corner()) {
            return CornerReport {
                multidegree: m.clone(),
                kind: CornerKind::Interior,
            };
        }
        let support = m.support();
        let s = support.len();
        // union of the variable sets that reach a generator exactly
        let mut zero_union: Vec<bool> = vec![false; self.n];
        for g in &self.gens {
            if g.divides(m) {
                for &i in &support {
                    if m.exp(i) == g.exp(i) {
                        zero_union[i] = true;
                    }
                }
            }
        }
        let touched = support.iter().filter(|&&i| zero_union[i]).count();
        let wall = s - touched;
        let closed = wall == 0
            && support.iter().all(|&keep| {
                let mut div = m.clone();
                for &i in &support {
                    if i != keep {
                        div.set_exp(i, div.exp(i) - 1);
                    }
                }
                self.contains(&div)
            });
        let kind = if closed && s == self.n {
            CornerKind::MaximalCorner
        } else if closed {
            CornerKind::ClosedCorner
        } else {
            CornerKind::Wall(wall)
        };
        CornerReport {
            multidegree: m.clone(),
            kind,
        }
    }

    /// True when no monomial multiple of `x^base` supported in `cone`
    /// re-enters the ideal: raise `base` to the generator bound on the cone
    /// and test once.
    pub fn cone_is_free(&self, base: &Multidegree, cone: &[usize]) -> bool {
        let Some(lambda) = self.lambda() else {
            return true; // zero ideal: everything stays outside
        };
        let mut probe = base.clone();
        for &i in cone {
            probe.set_exp(i, probe.exp(i).max(lambda.exp(i)) + 1);
        }
        !self.contains(&probe)
    }

    /// Locally free and true free direction cones at a multidegree: variable
    /// sets whose one-step bumps (locally) or arbitrary multiples (truly,
    /// by the finite bound criterion) keep the point below `m` outside the
    /// ideal. All `n` directions are candidates, not only the support of `m`.
    pub fn free_direction_cones(&self, m: &Multidegree) -> FreeDirectionCones {
        assert_eq!(m.n(), self.n, "multidegree length mismatch");
        let base = m.outer_corner();
        let universe: Vec<usize> = (0..self.n).collect();
        // membership is monotone, so the locally-free sets are downward
        // closed and one test per subset suffices
        let locally_free =
            maximal_subsets(&universe, |set| !self.contains(&base.plus_vars(set)));
        let true_free = maximal_subsets(&universe, |set| self.cone_is_free(&base, set));
        FreeDirectionCones {
            multidegree: m.clone(),
            locally_free,
            true_free,
        }
    }

    /// Apply a variable permutation: variable `i` becomes `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> MonomialIdeal {
        assert_eq!(perm.len(), self.n);
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0; self.n];
                for i in 0..self.n {
                    e[perm[i]] = g.exp(i);
                }
                Multidegree::new(e)
            })
            .collect();
        min_generators(self.n, gens)
    }
}

/// All squarefree division data of an ideal graded by subset size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcmLattice {
    /// `levels[i]` = distinct lcms of exactly `i+1` minimal generators.
    pub levels: Vec<Vec<Multidegree>>,
}

impl LcmLattice {
    /// Distinct multidegrees over all levels.
    pub fn distinct_multidegrees(&self) -> Vec<Multidegree> {
        let mut all: Vec<Multidegree> = self.levels.iter().flatten().cloned().collect();
        all.sort_by(|a, b| a.cmp_canonical(b));
        all.dedup();
        all
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CornerKind {
    Interior,
    Wall(usize),
    ClosedCorner,
    MaximalCorner,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerReport {
    pub multidegree: Multidegree,
    pub kind: CornerKind,
}

impl CornerReport {
    /// Wall level; closed and maximal corners sit on 0-walls.
    pub fn wall_level(&self) -> Option<usize> {
        match self.kind {
            CornerKind::Interior => None,
            CornerKind::Wall(k) => Some(k),
            CornerKind::ClosedCorner | CornerKind::MaximalCorner => Some(0),
        }
    }

    pub fn is_closed_corner(&self) -> bool {
        matches!(self.kind, CornerKind::ClosedCorner | CornerKind::MaximalCorner)
    }

    pub fn is_maximal_corner(&self) -> bool {
        matches!(self.kind, CornerKind::MaximalCorner)
    }
}

/// Maximal free-direction cones at a multidegree. Every true free cone is
/// contained in some locally free cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeDirectionCones {
    pub multidegree: Multidegree,
    pub locally_free: Vec<Vec<usize>>,
    pub true_free: Vec<Vec<usize>>,
}

/// Inclusion-maximal subsets of `universe` satisfying a downward-closed
/// predicate.
pub(crate) fn maximal_subsets<F>(universe: &[usize], pred: F) -> Vec<Vec<usize>>
where
    F: Fn(&[usize]) -> bool,
{
    let k = universe.len();
    assert!(k <= 20, "subset enumeration limited to small universes");
    let mut good: Vec<u32> = Vec::new();
    for mask in 1u32..(1 << k) {
        let set: Vec<usize> = (0..k)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| universe[i])
            .collect();
        if pred(&set) {
            good.push(mask);
        }
    }
    let mut maximal = Vec::new();
    'outer: for &m in &good {
        for &other in &good {
            if other != m && other & m == m {
                continue 'outer;
            }
        }
        maximal.push(
            (0..k)
                .filter(|&i| m & (1 << i) != 0)
                .map(|i| universe[i])
                .collect::<Vec<_>>(),
        );
    }
    maximal.sort();
    maximal
}
