//! Stanley, irreducible and primary decompositions of monomial ideals.
//!
//! The central fact is that the maximal corners of an artinian ideal (the
//! multidegrees with top Koszul homology) describe both the standard
//! monomials and the irreducible components; non-artinian ideals are handled
//! through their artinian closure, zeroing the true free directions of the
//! corners introduced by the closure.

use std::collections::{BTreeMap, BTreeSet};

use crate::monomial::{MonomialIdeal, Multidegree};
use crate::mvtree::{self, PivotStrategy};

/// Disjoint cover of the standard monomials by shifted polynomial cones
/// `x^base · k[free]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyDecomposition {
    pub cones: Vec<(Multidegree, Vec<usize>)>,
}

impl StanleyDecomposition {
    /// Krull dimension of the quotient: the largest free-cone size.
    pub fn dimension(&self) -> usize {
        self.cones.iter().map(|(_, f)| f.len()).max().unwrap_or(0)
    }

    pub fn covers(&self, m: &Multidegree) -> bool {
        self.cones.iter().any(|(b, f)| cone_contains(b, f, m))
    }

    pub fn covering_count(&self, m: &Multidegree) -> usize {
        self.cones.iter().filter(|(b, f)| cone_contains(b, f, m)).count()
    }

    /// Graded series numerator against the denominator `(1-t)^denom`:
    /// `Σ t^{deg base} (1-t)^{denom - |free|}`.
    pub fn graded_numerator(&self, denom: u32) -> crate::hilbert::UnivariatePolynomial {
        use crate::hilbert::UnivariatePolynomial;
        let mut out = UnivariatePolynomial::zero();
        for (base, free) in &self.cones {
            let factor = UnivariatePolynomial::one_minus_t().pow(denom - free.len() as u32);
            out = out.add(&UnivariatePolynomial::monomial(base.degree(), 1).mul(&factor));
        }
        out
    }
}

fn cone_contains(base: &Multidegree, free: &[usize], m: &Multidegree) -> bool {
    (0..m.n()).all(|i| {
        if free.contains(&i) {
            m.exp(i) >= base.exp(i)
        } else {
            m.exp(i) == base.exp(i)
        }
    })
}

/// Multidegrees of the maximal corners (top Koszul homology) of an ideal,
/// collected from the relevant nodes of a Mayer-Vietoris tree and confirmed
/// by the corner test.
pub fn maximal_corners(ideal: &MonomialIdeal) -> Vec<Multidegree> {
    let tree = mvtree::build_tree(ideal, PivotStrategy::LexLast);
    let mut seen: BTreeSet<Multidegree> = BTreeSet::new();
    for node in tree.relevant_nodes() {
        for g in &node.gens {
            seen.insert(g.clone());
        }
    }
    seen.into_iter()
        .filter(|m| ideal.corner_classify(m).is_maximal_corner())
        .collect()
}

/// Stanley decomposition of `R/I`.
///
/// Artinian case: every standard monomial divides a maximal corner shifted
/// down by one; the decomposition is the (finite) list of standard monomials
/// as singleton cones. General case: the singleton cones of the artinian
/// closure, plus a free cone `x^{τ + ν̄} k[τ]` for every face `τ` of the
/// lower Koszul complex at each maximal corner `ν` of the closure that uses a
/// capped exponent.
pub fn stanley_decomposition(ideal: &MonomialIdeal) -> StanleyDecomposition {
    assert!(!ideal.is_zero() && ideal.is_proper());
    let n = ideal.n();
    let closure = ideal.artinian_closure();
    let corners = maximal_corners(&closure);
    // inner part: standard monomials of the closure, deduplicated
    let mut singles: BTreeSet<Multidegree> = BTreeSet::new();
    for nu in &corners {
        let below = nu.outer_corner();
        for m in box_below(&below) {
            if !closure.contains(&m) {
                singles.insert(m);
            }
        }
    }
    let mut cones: Vec<(Multidegree, Vec<usize>)> = Vec::new();
    if ideal.is_artinian() {
        cones.extend(singles.into_iter().map(|m| (m, Vec::new())));
        return StanleyDecomposition { cones };
    }
    let lambda = ideal.lambda().unwrap();
    let mut free_cones: Vec<(Multidegree, Vec<usize>)> = Vec::new();
    for nu in &corners {
        if !(0..n).any(|i| nu.exp(i) == lambda.exp(i) + 1) {
            continue;
        }
        let lower = crate::homology::lower_koszul(ideal, nu);
        if lower.is_void() {
            continue;
        }
        let base = nu.outer_corner();
        let top = lower.dim().unwrap_or(-1);
        for d in 0..=top {
            for tau in lower.faces_of_dim(d) {
                if !ideal.cone_is_free(&base, &tau) {
                    continue;
                }
                // the skeleton point and its backward cone: every divisor in
                // the directions outside tau carries the same free cone
                let point = base.plus_vars(&tau);
                for p in divisors_off(&point, &tau) {
                    free_cones.push((p, tau.clone()));
                }
            }
        }
    }
    // deterministic disjointness: drop singletons covered by a free cone,
    // then add free cones that are not contained in an earlier one
    free_cones.sort_by(|a, b| a.0.cmp_canonical(&b.0).then(a.1.cmp(&b.1)));
    let mut kept: Vec<(Multidegree, Vec<usize>)> = Vec::new();
    for (base, tau) in free_cones {
        if tau.is_empty() {
            continue; // skeleton points with no free direction are singletons
        }
        let covered = kept.iter().any(|(b, f)| {
            tau.iter().all(|v| f.contains(v)) && cone_contains(b, f, &base)
        });
        if !covered {
            kept.push((base, tau));
        }
    }
    singles.retain(|m| !kept.iter().any(|(b, f)| cone_contains(b, f, m)));
    cones.extend(singles.into_iter().map(|m| (m, Vec::new())));
    cones.extend(kept);
    StanleyDecomposition { cones }
}

/// Divisors of `m` obtained by lowering coordinates outside `fixed`.
fn divisors_off(m: &Multidegree, fixed: &[usize]) -> Vec<Multidegree> {
    let n = m.n();
    let mut out = vec![m.clone()];
    for i in 0..n {
        if fixed.contains(&i) {
            continue;
        }
        let mut next = Vec::new();
        for v in &out {
            for e in 0..=m.exp(i) {
                let mut w = v.clone();
                w.set_exp(i, e);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

fn box_below(bound: &Multidegree) -> Vec<Multidegree> {
    let n = bound.n();
    let mut out = vec![Multidegree::zero(n)];
    for i in 0..n {
        let mut next = Vec::new();
        for m in &out {
            for e in 0..=bound.exp(i) {
                let mut v = m.clone();
                v.set_exp(i, e);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Irreducible component `m^a = < x_i^{a_i} : a_i > 0 >`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IrreducibleComponent(pub Multidegree);

impl IrreducibleComponent {
    pub fn as_ideal(&self) -> MonomialIdeal {
        let n = self.0.n();
        let gens = self
            .0
            .support()
            .iter()
            .map(|&i| {
                let mut m = Multidegree::zero(n);
                m.set_exp(i, self.0.exp(i));
                m
            })
            .collect();
        MonomialIdeal::new(n, gens)
    }

    pub fn support(&self) -> Vec<usize> {
        self.0.support()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IrreducibleRoute {
    /// Directly from the maximal corners; the ideal must be artinian.
    Artinian,
    /// Corners of the artinian closure with the true free directions zeroed.
    ViaClosure,
    /// From the Betti multidegrees of the ideal itself.
    Direct,
}

/// Irredundant irreducible decomposition.
pub fn irreducible_decomposition(
    ideal: &MonomialIdeal,
    route: IrreducibleRoute,
) -> Vec<IrreducibleComponent> {
    assert!(!ideal.is_zero() && ideal.is_proper());
    match route {
        IrreducibleRoute::Artinian => {
            assert!(ideal.is_artinian(), "artinian route needs an artinian ideal");
            maximal_corners(ideal)
                .into_iter()
                .map(IrreducibleComponent)
                .collect()
        }
        IrreducibleRoute::ViaClosure => {
            let closure = ideal.artinian_closure();
            let comps: BTreeSet<Multidegree> = maximal_corners(&closure)
                .into_iter()
                .map(|nu| {
                    let cones = ideal.free_direction_cones(&nu);
                    let mut out = nu.clone();
                    for cone in &cones.true_free {
                        for &i in cone {
                            out.set_exp(i, 0);
                        }
                    }
                    out
                })
                .collect();
            reduce_components(ideal, comps)
        }
        IrreducibleRoute::Direct => {
            let betti = mvtree::exact_betti(ideal, PivotStrategy::LexLast);
            let multidegrees: BTreeSet<Multidegree> =
                betti.keys().map(|(_, m)| m.clone()).collect();
            // group by the outer corner
            let mut groups: BTreeMap<Multidegree, Vec<Multidegree>> = BTreeMap::new();
            for m in multidegrees {
                groups.entry(m.outer_corner()).or_default().push(m);
            }
            let mut components: Vec<Multidegree> = Vec::new();
            let mut candidates: Vec<(Multidegree, Vec<usize>)> = Vec::new();
            for (outer, group) in groups {
                let nu = group
                    .iter()
                    .cloned()
                    .reduce(|a, b| a.lcm(&b))
                    .unwrap();
                let cones = ideal.free_direction_cones(&nu);
                debug_assert_eq!(outer, nu.outer_corner());
                if cones.locally_free.is_empty() {
                    components.push(nu);
                } else {
                    for c in cones.true_free {
                        candidates.push((nu.clone(), c));
                    }
                }
            }
            // auto-reduction: per cone keep only divisibility-maximal nu
            let mut reduced: Vec<(Multidegree, Vec<usize>)> = Vec::new();
            for (nu, c) in &candidates {
                let dominated = candidates.iter().any(|(nu2, c2)| {
                    c2 == c && nu2 != nu && nu.divides(nu2)
                });
                if !dominated {
                    reduced.push((nu.clone(), c.clone()));
                }
            }
            let mut comps: BTreeSet<Multidegree> = components.into_iter().collect();
            for (nu, c) in reduced {
                let mut out = nu.clone();
                for &i in &c {
                    out.set_exp(i, 0);
                }
                if !out.is_zero() {
                    comps.insert(out);
                }
            }
            reduce_components(ideal, comps)
        }
    }
}

/// Final reduction to the irredundant decomposition: drop candidates that do
/// not contain the ideal, then keep a component exactly when its canonical
/// witness monomial (one below the component on its support, above the
/// generator bound elsewhere) lies in every other component.
fn reduce_components(
    ideal: &MonomialIdeal,
    comps: BTreeSet<Multidegree>,
) -> Vec<IrreducibleComponent> {
    let lambda = ideal.lambda().expect("nonzero ideal");
    let all: Vec<Multidegree> = comps
        .into_iter()
        .filter(|m| !m.is_zero())
        .filter(|m| {
            let comp = IrreducibleComponent(m.clone()).as_ideal();
            ideal.gens().iter().all(|g| comp.contains(g))
        })
        .collect();
    let witness = |a: &Multidegree| -> Multidegree {
        let mut w = Multidegree::zero(a.n());
        for i in 0..a.n() {
            w.set_exp(i, if a.exp(i) > 0 { a.exp(i) - 1 } else { lambda.exp(i) + 1 });
        }
        w
    };
    let ideals: Vec<MonomialIdeal> = all
        .iter()
        .map(|m| IrreducibleComponent(m.clone()).as_ideal())
        .collect();
    let mut kept = Vec::new();
    for (x, m) in all.iter().enumerate() {
        let w = witness(m);
        let needed = ideals
            .iter()
            .enumerate()
            .all(|(y, other)| y == x || other.contains(&w));
        if needed {
            kept.push(IrreducibleComponent(m.clone()));
        }
    }
    kept.sort();
    kept
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub ideal: MonomialIdeal,
    pub radical_support: Vec<usize>,
}

/// Irredundant primary decomposition: intersect the irreducible components
/// sharing a support.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Vec<PrimaryComponent> {
    let comps = irreducible_decomposition(ideal, IrreducibleRoute::ViaClosure);
    let mut by_support: BTreeMap<Vec<usize>, Vec<IrreducibleComponent>> = BTreeMap::new();
    for c in comps {
        by_support.entry(c.support()).or_default().push(c);
    }
    by_support
        .into_iter()
        .map(|(support, group)| {
            let ideal = group
                .iter()
                .map(IrreducibleComponent::as_ideal)
                .reduce(|a, b| a.intersection(&b))
                .unwrap();
            PrimaryComponent { ideal, radical_support: support }
        })
        .collect()
}

/// Distinct supports of the irreducible components and the minimum support
/// size.
pub fn associated_primes_and_height(ideal: &MonomialIdeal) -> (Vec<Vec<usize>>, usize) {
    let comps = irreducible_decomposition(ideal, IrreducibleRoute::ViaClosure);
    let primes: BTreeSet<Vec<usize>> = comps.iter().map(IrreducibleComponent::support).collect();
    let height = primes.iter().map(Vec::len).min().unwrap_or(0);
    (primes.into_iter().collect(), height)
}

/// Support tree: the closure corners grouped by the set of variables whose
/// exponent exceeds the generator bound. Each node's corners, with those
/// variables zeroed, are the irreducible components of one support; the
/// complements of the inclusion-maximal labels are the minimal primes.
#[derive(Clone, Debug)]
pub struct SupportTree {
    pub n: usize,
    /// `(label, corners)` sorted by label; the parent of a nonempty label is
    /// the label minus its largest element.
    pub nodes: Vec<(Vec<usize>, Vec<Multidegree>)>,
}

impl SupportTree {
    pub fn height(&self) -> usize {
        let deepest = self.nodes.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        self.n - deepest
    }

    /// Complements of the inclusion-maximal labels.
    pub fn minimal_primes(&self) -> Vec<Vec<usize>> {
        let labels: Vec<&Vec<usize>> = self.nodes.iter().map(|(l, _)| l).collect();
        let mut out: Vec<Vec<usize>> = labels
            .iter()
            .filter(|l| {
                !labels
                    .iter()
                    .any(|o| o != *l && l.iter().all(|v| o.contains(v)))
            })
            .map(|l| (0..self.n).filter(|v| !l.contains(v)).collect())
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

pub fn support_tree(ideal: &MonomialIdeal) -> SupportTree {
    assert!(!ideal.is_zero() && ideal.is_proper());
    let n = ideal.n();
    let lambda = ideal.lambda().unwrap();
    let closure = ideal.artinian_closure();
    let mut nodes: BTreeMap<Vec<usize>, Vec<Multidegree>> = BTreeMap::new();
    for nu in maximal_corners(&closure) {
        let label: Vec<usize> = (0..n).filter(|&i| nu.exp(i) > lambda.exp(i)).collect();
        nodes.entry(label).or_default().push(nu);
    }
    SupportTree { n, nodes: nodes.into_iter().collect() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(e: &[u64]) -> Multidegree {
        Multidegree::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| md(g)).collect())
    }

    fn example_ideal() -> MonomialIdeal {
        // <x^2 y, xz, y^3, z^3>
        ideal(3, &[&[2, 1, 0], &[1, 0, 1], &[0, 3, 0], &[0, 0, 3]])
    }

    #[test]
    fn stanley_of_example() {
        let s = stanley_decomposition(&example_ideal());
        let singles: Vec<&Multidegree> = s
            .cones
            .iter()
            .filter(|(_, f)| f.is_empty())
            .map(|(b, _)| b)
            .collect();
        assert_eq!(singles.len(), 13);
        let frees: Vec<&(Multidegree, Vec<usize>)> =
            s.cones.iter().filter(|(_, f)| !f.is_empty()).collect();
        assert_eq!(frees.len(), 1);
        assert_eq!(frees[0], &(md(&[3, 0, 0]), vec![0]));
        assert_eq!(s.dimension(), 1);
        // series: 1 + 3t + 5t^2 + 3t^3 + t^4 + t^3/(1-t)
        use crate::hilbert::UnivariatePolynomial as U;
        let lhs = s.graded_numerator(1); // over (1-t)
        let mut poly = U::zero();
        for (d, c) in [(0, 1), (1, 3), (2, 5), (3, 3), (4, 1)] {
            poly.add_term(d, c);
        }
        let expect = poly.mul(&U::one_minus_t()).add(&U::monomial(3, 1));
        assert_eq!(lhs, expect);
    }

    #[test]
    fn stanley_of_artinian_pair() {
        let s = stanley_decomposition(&ideal(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(s.cones, vec![(md(&[0, 0]), vec![])]);
        assert_eq!(s.dimension(), 0);
    }

    #[test]
    fn stanley_disjoint_cover_on_box() {
        for i in [
            example_ideal(),
            ideal(2, &[&[1, 1]]),
            ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]),
            ideal(2, &[&[3, 0], &[1, 2]]),
        ] {
            let s = stanley_decomposition(&i);
            let bound = i.lambda().unwrap().plus_vars(&(0..i.n()).collect::<Vec<_>>());
            for m in box_below(&bound) {
                if i.contains(&m) {
                    assert_eq!(s.covering_count(&m), 0, "{m:?} in ideal but covered");
                } else {
                    assert_eq!(s.covering_count(&m), 1, "{m:?} cover count");
                }
            }
            // ray check: cones stay outside the ideal far beyond the box
            for (b, f) in &s.cones {
                if !f.is_empty() {
                    let mut probe = b.clone();
                    for &v in f {
                        probe.set_exp(v, probe.exp(v) + 40);
                    }
                    assert!(!i.contains(&probe));
                }
            }
        }
    }

    #[test]
    fn irreducible_routes_and_examples() {
        // artinian example
        let closed = ideal(3, &[&[3, 0, 0], &[2, 1, 0], &[1, 0, 1], &[0, 3, 0], &[0, 0, 3]]);
        let comps = irreducible_decomposition(&closed, IrreducibleRoute::Artinian);
        let expect: Vec<Multidegree> = vec![md(&[3, 1, 1]), md(&[2, 3, 1]), md(&[1, 3, 3])];
        let got: Vec<Multidegree> = comps.iter().map(|c| c.0.clone()).collect();
        assert_eq!(
            got.iter().collect::<BTreeSet<_>>(),
            expect.iter().collect::<BTreeSet<_>>()
        );
        // non-artinian example through both routes
        let i = example_ideal();
        let expect: BTreeSet<Multidegree> =
            [md(&[0, 1, 1]), md(&[2, 3, 1]), md(&[1, 3, 3])].into_iter().collect();
        for route in [IrreducibleRoute::ViaClosure, IrreducibleRoute::Direct] {
            let comps = irreducible_decomposition(&i, route);
            let got: BTreeSet<Multidegree> = comps.iter().map(|c| c.0.clone()).collect();
            assert_eq!(got, expect, "{route:?}");
        }
        // membership equivalence pins <x, y^3, z^3> over the typo variant
        assert!(!i.contains(&md(&[0, 2, 2])));
        let comp = IrreducibleComponent(md(&[1, 3, 3])).as_ideal();
        assert!(!comp.contains(&md(&[0, 2, 2])));
    }

    #[test]
    fn irreducible_membership_on_box() {
        for i in [
            example_ideal(),
            ideal(2, &[&[1, 1]]),
            ideal(2, &[&[3, 0], &[1, 2]]),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1]]),
        ] {
            let comps = irreducible_decomposition(&i, IrreducibleRoute::ViaClosure);
            let ideals: Vec<MonomialIdeal> =
                comps.iter().map(IrreducibleComponent::as_ideal).collect();
            let bound = i.lambda().unwrap().plus_vars(&(0..i.n()).collect::<Vec<_>>());
            for m in box_below(&bound) {
                let inside = i.contains(&m);
                assert_eq!(inside, ideals.iter().all(|c| c.contains(&m)), "{m:?}");
            }
            // irredundance: dropping any component changes membership
            for skip in 0..ideals.len() {
                let witness = box_below(&bound).into_iter().find(|m| {
                    !i.contains(m)
                        && ideals
                            .iter()
                            .enumerate()
                            .all(|(j, c)| j == skip || c.contains(m))
                });
                assert!(witness.is_some(), "component {skip} is redundant");
            }
        }
    }

    #[test]
    fn primary_decomposition_examples() {
        let i = example_ideal();
        let parts = primary_decomposition(&i);
        assert_eq!(parts.len(), 2);
        let small = parts.iter().find(|p| p.radical_support == vec![1, 2]).unwrap();
        assert_eq!(small.ideal, ideal(3, &[&[0, 1, 0], &[0, 0, 1]]));
        let big = parts.iter().find(|p| p.radical_support == vec![0, 1, 2]).unwrap();
        assert_eq!(
            big.ideal,
            ideal(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 3], &[1, 0, 1]])
        );
        // an irreducible ideal is its own decomposition
        let irr = ideal(3, &[&[2, 0, 0], &[0, 1, 0]]);
        let parts = primary_decomposition(&irr);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].ideal, irr);
    }

    #[test]
    fn eight_generator_example() {
        // <x^3y^5z, y^5z^4, y^3z^5, xyz^5, x^2z^5, x^4z^3, x^4y^2z^2, x^4y^4z>
        let i = ideal(
            3,
            &[
                &[3, 5, 1],
                &[0, 5, 4],
                &[0, 3, 5],
                &[1, 1, 5],
                &[2, 0, 5],
                &[4, 0, 3],
                &[4, 2, 2],
                &[4, 4, 1],
            ],
        );
        let parts = primary_decomposition(&i);
        let expect: Vec<MonomialIdeal> = vec![
            ideal(3, &[&[4, 0, 0], &[0, 5, 0], &[0, 0, 5]]),
            ideal(3, &[&[0, 4, 0], &[0, 0, 3], &[0, 2, 2]]),
            ideal(3, &[&[0, 0, 1]]),
            ideal(3, &[&[3, 0, 0], &[0, 0, 4]]),
            ideal(3, &[&[2, 0, 0], &[0, 3, 0], &[1, 1, 0]]),
        ];
        let got: BTreeSet<_> = parts.iter().map(|p| p.ideal.clone()).collect();
        assert_eq!(got, expect.into_iter().collect());
        let (_, height) = associated_primes_and_height(&i);
        assert_eq!(height, 1);
        // support tree shape
        let tree = support_tree(&i);
        let labels: Vec<Vec<usize>> = tree.nodes.iter().map(|(l, _)| l.clone()).collect();
        assert_eq!(
            labels,
            vec![vec![], vec![0], vec![0, 1], vec![1], vec![2]]
        );
        let root = &tree.nodes[0];
        assert_eq!(root.1, vec![md(&[4, 5, 5])]);
        let x_node = tree.nodes.iter().find(|(l, _)| l == &vec![0]).unwrap();
        let mut xs = x_node.1.clone();
        xs.sort_by(|a, b| a.cmp_canonical(b));
        assert_eq!(xs, vec![md(&[5, 2, 3]), md(&[5, 4, 2])]);
        assert_eq!(tree.height(), 1);
        // minimal primes are complements of maximal labels
        assert_eq!(tree.minimal_primes(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn primes_and_height_examples() {
        let i = example_ideal();
        let (primes, height) = associated_primes_and_height(&i);
        assert_eq!(height, 2);
        assert_eq!(primes, vec![vec![0, 1, 2], vec![1, 2]]);
        // artinian: single prime of full support
        let a = ideal(2, &[&[2, 0], &[0, 2]]);
        let (primes, height) = associated_primes_and_height(&a);
        assert_eq!(primes, vec![vec![0, 1]]);
        assert_eq!(height, 2);
        // support tree of an artinian ideal has only the root
        let tree = support_tree(&a);
        assert_eq!(tree.nodes.len(), 1);
        assert!(tree.nodes[0].0.is_empty());
        // leaves' complements match the minimal associated primes
        let i8 = example_ideal();
        let tree = support_tree(&i8);
        let minimal_from_tree: BTreeSet<Vec<usize>> =
            tree.minimal_primes().into_iter().collect();
        let comps = irreducible_decomposition(&i8, IrreducibleRoute::ViaClosure);
        let mut minimal: BTreeSet<Vec<usize>> = BTreeSet::new();
        let supports: Vec<Vec<usize>> =
            comps.iter().map(IrreducibleComponent::support).collect();
        for s in &supports {
            if !supports.iter().any(|o| o != s && o.iter().all(|v| s.contains(v))) {
                minimal.insert(s.clone());
            }
        }
        assert_eq!(minimal_from_tree, minimal);
    }
}
