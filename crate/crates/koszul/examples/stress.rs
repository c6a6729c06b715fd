//! Randomized stress run over a wider corpus than the test suites use.
//!
//! Usage: `cargo run --release --example stress -- [rounds]`

use std::collections::{BTreeMap, BTreeSet};

use koszul::decomp::{self, IrreducibleRoute};
use koszul::homology;
use koszul::hilbert;
use koszul::monomial::{MonomialIdeal, Multidegree};
use koszul::mvtree::{self, PivotStrategy, ALL_STRATEGIES};
use koszul::resolution::{self, betti_numbers};
use koszul::Coeff;

struct Lcg(u64);
impl Lcg {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 11
    }
    fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

fn random_ideal(rng: &mut Lcg, n_max: usize, r_max: usize, e_max: u64) -> MonomialIdeal {
    loop {
        let n = 2 + (rng.below(n_max as u64 - 1) as usize);
        let r = 2 + (rng.below(r_max as u64 - 1) as usize);
        let mut gens = Vec::new();
        for _ in 0..r {
            let exps: Vec<u64> = (0..n).map(|_| rng.below(e_max + 1)).collect();
            let m = Multidegree::new(exps);
            if !m.is_zero() {
                gens.push(m);
            }
        }
        if gens.is_empty() {
            continue;
        }
        let ideal = MonomialIdeal::new(n, gens);
        if ideal.num_gens() >= 2 {
            return ideal;
        }
    }
}

fn box_points(bound: &Multidegree) -> Vec<Multidegree> {
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

fn main() {
    let rounds: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1500);
    let mut rng = Lcg(0x7A57_0002);
    for step in 0..rounds {
        // wider than the committed corpus: n up to 5, exponents up to 6, r up to 7
        let i = random_ideal(&mut rng, 5, 8, 9);
        let oracle = betti_numbers(&i);
        let k_ref = hilbert::k_poly_from_lattice(&i);

        for s in ALL_STRATEGIES {
            let tree = mvtree::build_tree(&i, s);
            let mv = resolution::mv_resolution::<Coeff>(&tree);
            assert!(mv.check_complex(), "cone broken: {i:?} {s}");
            let min = resolution::minimize(&mv);
            assert_eq!(min.label_multiplicities(), oracle, "min mismatch: {i:?} {s}");
            assert_eq!(
                hilbert::k_poly_from_resolution(&mv).0,
                k_ref,
                "k-poly mismatch: {i:?} {s}"
            );
            let bounds = mvtree::relevant_betti_bounds(&tree);
            for (key, c) in &oracle {
                assert!(bounds.upper.get(key).copied().unwrap_or(0) >= *c, "{i:?} {s}");
            }
            for key in &bounds.lower {
                assert_eq!(oracle.get(key), Some(&1), "{i:?} {s}");
            }
        }

        // exact tree route
        let exact = mvtree::exact_betti(&i, PivotStrategy::LexLast);
        assert_eq!(exact, oracle, "exact betti mismatch: {i:?}");

        // naive route and lifted generators
        let naive = homology::naive_koszul_homology::<Coeff>(&i);
        assert_eq!(naive.ranks, oracle, "naive mismatch: {i:?}");
        let tree = mvtree::build_tree(&i, PivotStrategy::LexLast);
        let lifted = homology::lift_tree_generators::<Coeff>(&tree);
        for ((deg, a), gens) in &lifted.generators {
            assert_eq!(oracle.get(&(*deg, a.clone())), Some(&gens.len()), "{i:?}");
            for g in gens {
                assert!(g.koszul_differential().is_zero(), "{i:?}");
                let (rank, reference) = homology::homology_at::<Coeff>(&i, a, *deg);
                assert!(rank >= 1);
                if rank == 1 {
                    assert!(
                        homology::same_class_up_to_scalar(&i, a, *deg, g, &reference[0]),
                        "class mismatch: {i:?} at {a:?} degree {deg}"
                    );
                }
            }
        }

        // decompositions with brute-force membership
        let closure_route = decomp::irreducible_decomposition(&i, IrreducibleRoute::ViaClosure);
        let direct_route = decomp::irreducible_decomposition(&i, IrreducibleRoute::Direct);
        let set = |v: &[decomp::IrreducibleComponent]| -> BTreeSet<Multidegree> {
            v.iter().map(|c| c.0.clone()).collect()
        };
        assert_eq!(set(&closure_route), set(&direct_route), "routes differ: {i:?}");
        let comp_ideals: Vec<MonomialIdeal> =
            closure_route.iter().map(|c| c.as_ideal()).collect();
        let s = decomp::stanley_decomposition(&i);
        let bound = i.lambda().unwrap().plus_vars(&(0..i.n()).collect::<Vec<_>>());
        if box_points(&bound).len() <= 20000 {
            for m in box_points(&bound) {
                let inside = i.contains(&m);
                assert_eq!(inside, comp_ideals.iter().all(|c| c.contains(&m)), "{i:?} {m:?}");
                assert_eq!(
                    usize::from(!inside),
                    s.covering_count(&m),
                    "stanley cover: {i:?} {m:?}"
                );
            }
        }
        let numerator = s.graded_numerator(i.n() as u32);
        assert_eq!(
            numerator,
            hilbert::hilbert_series_quotient(&i).specialize(),
            "stanley series: {i:?}"
        );
        let (_, height) = decomp::associated_primes_and_height(&i);
        assert_eq!(s.dimension(), i.n() - height, "krull: {i:?}");

        // primary components are primary: a power of each support variable
        // is present and all generators live on the support
        for p in decomp::primary_decomposition(&i) {
            for g in p.ideal.gens() {
                assert!(g.support().iter().all(|v| p.radical_support.contains(v)));
            }
            for &v in &p.radical_support {
                assert!(p
                    .ideal
                    .gens()
                    .iter()
                    .any(|g| g.exp(v) > 0 && g.support_size() == 1));
            }
        }

        // graded invariants agree between tree-exact and resolution routes
        let min = resolution::minimize(&resolution::taylor::<Coeff>(&i));
        let inv = resolution::invariants(&min);
        let mut table: BTreeMap<(usize, u64), usize> = BTreeMap::new();
        for ((d, m), c) in &exact {
            *table.entry((*d, m.degree())).or_insert(0) += c;
        }
        assert_eq!(table, inv.betti_table, "graded table: {i:?}");

        if step % 100 == 0 {
            println!("step {step} ok ({:?} gens {})", i.n(), i.num_gens());
        }
    }
    println!("stress finished: {rounds} rounds clean");
}
