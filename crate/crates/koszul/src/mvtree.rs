//! Mayer-Vietoris trees of monomial ideals.
//!
//! A node holding an ideal `J` with a distinguished pivot generator `m` has
//! two children: the intersection `J' ∩ <m>` (generated by the lcms of the
//! pivot with the other generators) on the even side, and `J' = J` minus the
//! pivot on the odd side. Relevant nodes (position 1 or even) carry candidate
//! Betti multidegrees: every nonzero `β_{i,a}` appears among the dimension-`i`
//! relevant generators, each multidegree appearing exactly once is an actual
//! Betti multidegree, and the appearance counts bound the Betti numbers from
//! above.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;

use crate::monomial::{min_generators, MonomialIdeal, Multidegree};
use crate::simplicial;
use crate::Position;

/// Pivot selection strategies. `*First` takes the largest generator with
/// respect to the term order, `*Last` the smallest; `MaxExponent` takes a
/// generator with the largest exponent of any variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PivotStrategy {
    LexFirst,
    LexLast,
    DeglexFirst,
    DeglexLast,
    DegrevlexFirst,
    DegrevlexLast,
    MaxExponent,
}

pub const ALL_STRATEGIES: [PivotStrategy; 7] = [
    PivotStrategy::LexFirst,
    PivotStrategy::LexLast,
    PivotStrategy::DeglexFirst,
    PivotStrategy::DeglexLast,
    PivotStrategy::DegrevlexFirst,
    PivotStrategy::DegrevlexLast,
    PivotStrategy::MaxExponent,
];

impl fmt::Display for PivotStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl PivotStrategy {
    pub fn name(&self) -> &'static str {
        match self {
            PivotStrategy::LexFirst => "lex_first",
            PivotStrategy::LexLast => "lex_last",
            PivotStrategy::DeglexFirst => "deglex_first",
            PivotStrategy::DeglexLast => "deglex_last",
            PivotStrategy::DegrevlexFirst => "degrevlex_first",
            PivotStrategy::DegrevlexLast => "degrevlex_last",
            PivotStrategy::MaxExponent => "max_exponent",
        }
    }

    pub fn from_name(name: &str) -> Option<PivotStrategy> {
        ALL_STRATEGIES.iter().copied().find(|s| s.name() == name)
    }
}

#[derive(Clone, Copy)]
enum Pivot {
    Strategy(PivotStrategy),
    FirstInOrder,
}

fn choose_pivot(gens: &[Multidegree], pivot: Pivot) -> usize {
    use std::cmp::Ordering;
    debug_assert!(gens.len() >= 2);
    match pivot {
        Pivot::FirstInOrder => 0,
        Pivot::Strategy(PivotStrategy::MaxExponent) => {
            // variable with the globally largest exponent (smallest index on
            // ties), then the canonically smallest generator achieving it
            let n = gens[0].n();
            let (var, _) = (0..n)
                .map(|v| (v, gens.iter().map(|g| g.exp(v)).max().unwrap()))
                .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
                .unwrap();
            let best = gens.iter().map(|g| g.exp(var)).max().unwrap();
            (0..gens.len())
                .filter(|&i| gens[i].exp(var) == best)
                .min_by(|&a, &b| gens[a].cmp_canonical(&gens[b]))
                .unwrap()
        }
        Pivot::Strategy(s) => {
            let cmp = |a: &Multidegree, b: &Multidegree| -> Ordering {
                match s {
                    PivotStrategy::LexFirst | PivotStrategy::LexLast => a.cmp_lex(b),
                    PivotStrategy::DeglexFirst | PivotStrategy::DeglexLast => a.cmp_deglex(b),
                    PivotStrategy::DegrevlexFirst | PivotStrategy::DegrevlexLast => {
                        a.cmp_degrevlex(b)
                    }
                    PivotStrategy::MaxExponent => unreachable!(),
                }
            };
            let first = matches!(
                s,
                PivotStrategy::LexFirst | PivotStrategy::DeglexFirst | PivotStrategy::DegrevlexFirst
            );
            let mut best = 0;
            for i in 1..gens.len() {
                let ord = cmp(&gens[i], &gens[best]);
                if (first && ord == Ordering::Greater) || (!first && ord == Ordering::Less) {
                    best = i;
                }
            }
            best
        }
    }
}

/// Split an ideal at a pivot chosen by a strategy; returns
/// `(pivot, tilde, rest)` with `tilde = rest ∩ <pivot>`.
pub fn split_node(
    ideal: &MonomialIdeal,
    strategy: PivotStrategy,
) -> (Multidegree, MonomialIdeal, MonomialIdeal) {
    assert!(ideal.num_gens() >= 2, "splitting needs at least two generators");
    let idx = choose_pivot(ideal.gens(), Pivot::Strategy(strategy));
    let (pivot, tilde, rest) = split_at(ideal.n(), ideal.gens(), idx);
    (
        pivot,
        min_generators(ideal.n(), tilde),
        min_generators(ideal.n(), rest),
    )
}

fn split_at(
    _n: usize,
    gens: &[Multidegree],
    idx: usize,
) -> (Multidegree, Vec<Multidegree>, Vec<Multidegree>) {
    let pivot = gens[idx].clone();
    let rest: Vec<Multidegree> = gens
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != idx)
        .map(|(_, g)| g.clone())
        .collect();
    let tilde: Vec<Multidegree> = rest.iter().map(|g| g.lcm(&pivot)).collect();
    (pivot, tilde, rest)
}

#[derive(Clone, Debug)]
pub struct MVNode {
    pub position: Position,
    pub dimension: usize,
    /// Minimal generators; the stored order is the build order and is what a
    /// first-in-order pivot refers to.
    pub gens: Vec<Multidegree>,
    pub pivot: Option<Multidegree>,
    /// Indices of `(tilde, rest)` children in the tree arena.
    pub children: Option<(usize, usize)>,
}

impl MVNode {
    pub fn is_relevant(&self) -> bool {
        use num_traits::One;
        self.position.is_one() || (&self.position % 2u32) == BigUint::from(0u32)
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_none()
    }

    pub fn ideal(&self, n: usize) -> MonomialIdeal {
        min_generators(n, self.gens.clone())
    }
}

#[derive(Clone, Debug)]
pub struct MVTree {
    n: usize,
    nodes: Vec<MVNode>,
}

impl MVTree {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> &[MVNode] {
        &self.nodes
    }

    pub fn root(&self) -> &MVNode {
        &self.nodes[0]
    }

    pub fn relevant_nodes(&self) -> impl Iterator<Item = &MVNode> {
        self.nodes.iter().filter(|n| n.is_relevant())
    }

    pub fn leaves(&self) -> impl Iterator<Item = &MVNode> {
        self.nodes.iter().filter(|n| n.is_leaf())
    }
}

fn build_with(n: usize, gens: Vec<Multidegree>, pivot: Pivot) -> MVTree {
    use num_traits::One;
    assert!(!gens.is_empty(), "tree of the zero ideal");
    let mut nodes = vec![MVNode {
        position: BigUint::one(),
        dimension: 0,
        gens,
        pivot: None,
        children: None,
    }];
    let mut stack = vec![0usize];
    while let Some(idx) = stack.pop() {
        if nodes[idx].gens.len() < 2 {
            continue;
        }
        let pivot_idx = choose_pivot(&nodes[idx].gens, pivot);
        let (pv, tilde_raw, rest) = split_at(n, &nodes[idx].gens, pivot_idx);
        let tilde = min_generators(n, tilde_raw).gens().to_vec();
        let pos = nodes[idx].position.clone();
        let dim = nodes[idx].dimension;
        nodes[idx].pivot = Some(pv);
        let tilde_idx = nodes.len();
        nodes.push(MVNode {
            position: &pos << 1u32,
            dimension: dim + 1,
            gens: tilde,
            pivot: None,
            children: None,
        });
        let rest_idx = nodes.len();
        nodes.push(MVNode {
            position: (&pos << 1u32) + BigUint::one(),
            dimension: dim,
            gens: rest,
            pivot: None,
            children: None,
        });
        nodes[idx].children = Some((tilde_idx, rest_idx));
        stack.push(rest_idx);
        stack.push(tilde_idx);
    }
    MVTree { n, nodes }
}

/// Mayer-Vietoris tree of an ideal under a pivot strategy.
pub fn build_tree(ideal: &MonomialIdeal, strategy: PivotStrategy) -> MVTree {
    build_with(ideal.n(), ideal.gens().to_vec(), Pivot::Strategy(strategy))
}

/// Tree that always pivots on the first generator in the given order;
/// children on the odd side keep the order, tilde children are re-sorted
/// canonically.
pub fn build_tree_from_ordered(n: usize, gens: Vec<Multidegree>) -> MVTree {
    build_with(n, gens, Pivot::FirstInOrder)
}

/// Parallel construction of the same tree (identical output).
pub fn build_tree_parallel(ideal: &MonomialIdeal, strategy: PivotStrategy) -> MVTree {
    let n = ideal.n();
    fn expand(
        n: usize,
        position: Position,
        dimension: usize,
        gens: Vec<Multidegree>,
        strategy: PivotStrategy,
    ) -> Vec<MVNode> {
        use num_traits::One;
        if gens.len() < 2 {
            return vec![MVNode { position, dimension, gens, pivot: None, children: None }];
        }
        let pivot_idx = choose_pivot(&gens, Pivot::Strategy(strategy));
        let (pv, tilde_raw, rest) = split_at(n, &gens, pivot_idx);
        let tilde = min_generators(n, tilde_raw).gens().to_vec();
        let tilde_pos = &position << 1u32;
        let rest_pos = (&position << 1u32) + BigUint::one();
        let (mut left, right) = rayon::join(
            || expand(n, tilde_pos.clone(), dimension + 1, tilde, strategy),
            || expand(n, rest_pos, dimension, rest, strategy),
        );
        let mut nodes = vec![MVNode {
            position,
            dimension,
            gens,
            pivot: Some(pv),
            children: Some((1, 1 + left.len())),
        }];
        // shift child indices into the combined arena
        for node in left.iter_mut() {
            if let Some((a, b)) = node.children {
                node.children = Some((a + 1, b + 1));
            }
        }
        let offset = 1 + left.len();
        let mut right = right;
        for node in right.iter_mut() {
            if let Some((a, b)) = node.children {
                node.children = Some((a + offset, b + offset));
            }
        }
        nodes.extend(left);
        nodes.extend(right);
        nodes
    }
    use num_traits::One;
    let nodes = expand(n, BigUint::one(), 0, ideal.gens().to_vec(), strategy);
    MVTree { n, nodes }
}

/// Lower and upper bounds for the multigraded Betti numbers read off the
/// relevant nodes, with verdicts for the undecided entries once
/// [`resolve_undecided`] has run.
#[derive(Clone, Debug, Default)]
pub struct BettiBounds {
    /// `β̂`: number of appearances of a multidegree among relevant generators
    /// of each dimension.
    pub upper: BTreeMap<(usize, Multidegree), usize>,
    /// `β̄ = 1` entries: multidegrees appearing exactly once over all
    /// relevant nodes.
    pub lower: BTreeSet<(usize, Multidegree)>,
    /// Verdicts for entries not decided by the bounds alone.
    pub verdicts: BTreeMap<(usize, Multidegree), Verdict>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Zero,
    Nonzero(usize),
    Unknown,
}

impl BettiBounds {
    /// Total appearance count of a multidegree over all dimensions.
    fn total_count(&self, a: &Multidegree) -> usize {
        self.upper
            .iter()
            .filter(|((_, m), _)| m == a)
            .map(|(_, c)| c)
            .sum()
    }

    /// Entries with `β̂` support that are not pinned by the lower bound.
    pub fn undecided_entries(&self) -> Vec<(usize, Multidegree)> {
        self.upper
            .keys()
            .filter(|k| !self.lower.contains(k))
            .cloned()
            .collect()
    }

    /// Betti totals per homological degree assuming `β = β̂`.
    pub fn upper_totals(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for ((i, _), c) in &self.upper {
            if out.len() <= *i {
                out.resize(i + 1, 0);
            }
            out[*i] += c;
        }
        out
    }

    pub fn has_repeats(&self) -> bool {
        self.upper.keys().any(|k| !self.lower.contains(k))
    }
}

pub fn relevant_betti_bounds(tree: &MVTree) -> BettiBounds {
    let mut upper: BTreeMap<(usize, Multidegree), usize> = BTreeMap::new();
    for node in tree.relevant_nodes() {
        for g in &node.gens {
            *upper.entry((node.dimension, g.clone())).or_insert(0) += 1;
        }
    }
    let mut totals: BTreeMap<&Multidegree, usize> = BTreeMap::new();
    for ((_, m), c) in &upper {
        *totals.entry(m).or_insert(0) += c;
    }
    let lower: BTreeSet<(usize, Multidegree)> = upper
        .keys()
        .filter(|(_, m)| totals[m] == 1)
        .cloned()
        .collect();
    BettiBounds { upper, lower, verdicts: BTreeMap::new() }
}

/// Decide whether a repeated multidegree contributes to the Koszul homology,
/// using (1) boundary and corner tests, (2) the Mayer-Vietoris trees of the
/// upper and lower Koszul ideals, and (3) the single-dimension repetition
/// rule. Entries that survive all three are left `Unknown`.
pub fn resolve_undecided(ideal: &MonomialIdeal, bounds: &BettiBounds) -> BettiBounds {
    let n = ideal.n();
    let mut out = bounds.clone();
    for (i, a) in bounds.undecided_entries() {
        let verdict = decide_entry(ideal, bounds, i, &a, n);
        out.verdicts.insert((i, a), verdict);
    }
    out
}

fn decide_entry(
    ideal: &MonomialIdeal,
    bounds: &BettiBounds,
    i: usize,
    a: &Multidegree,
    n: usize,
) -> Verdict {
    // Test 1: homological degree out of range, interior multidegrees, corners.
    if i >= n {
        return Verdict::Zero;
    }
    if ideal.contains(&a.outer_corner()) {
        return Verdict::Zero;
    }
    let report = ideal.corner_classify(a);
    if report.is_closed_corner() {
        // boundary-sphere homology: rank 1 exactly in degree support-1
        return if i + 1 == a.support_size() {
            Verdict::Nonzero(1)
        } else {
            Verdict::Zero
        };
    }
    // Test 2: bounds of the Koszul ideals at the support multidegree.
    let sigma = a.support();
    let sigma_md = Multidegree::from_vars(n, &sigma);
    let s = sigma.len();
    if i < s {
        let upper_complex = crate::homology::upper_koszul(ideal, a);
        let ki_upper = simplicial::stanley_reisner(&upper_complex, n);
        if let Some(v) = koszul_ideal_test(&ki_upper, &sigma_md, s - i - 1) {
            return v;
        }
        let lower_complex = crate::homology::lower_koszul(ideal, a);
        if !lower_complex.is_void() {
            let ki_lower = simplicial::stanley_reisner(&lower_complex, n);
            if let Some(v) = koszul_ideal_test(&ki_lower, &sigma_md, i) {
                return v;
            }
        }
    }
    // Test 3: repetitions confined to a single dimension are all real.
    let dims: Vec<usize> = bounds
        .upper
        .keys()
        .filter(|(_, m)| m == a)
        .map(|(d, _)| *d)
        .collect();
    if dims.len() == 1 {
        let count = bounds.upper[&(dims[0], a.clone())];
        return if dims[0] == i {
            Verdict::Nonzero(count)
        } else {
            Verdict::Zero
        };
    }
    Verdict::Unknown
}

/// Read `β_{d, σ}` of a Koszul ideal from its own tree when that tree
/// decides it.
fn koszul_ideal_test(ki: &MonomialIdeal, sigma: &Multidegree, d: usize) -> Option<Verdict> {
    if ki.is_zero() || !ki.is_proper() {
        return Some(Verdict::Zero);
    }
    let tree = build_tree(ki, PivotStrategy::LexLast);
    let b = relevant_betti_bounds(&tree);
    let total = b.total_count(sigma);
    if total == 0 {
        return Some(Verdict::Zero);
    }
    let count_here = b.upper.get(&(d, sigma.clone())).copied().unwrap_or(0);
    if total == 1 {
        return Some(if count_here == 1 {
            Verdict::Nonzero(1)
        } else {
            Verdict::Zero
        });
    }
    // all appearances in one dimension decide the rank there and elsewhere
    let dims: BTreeSet<usize> = b
        .upper
        .keys()
        .filter(|(_, m)| m == sigma)
        .map(|(dd, _)| *dd)
        .collect();
    if dims.len() == 1 {
        let only = *dims.iter().next().unwrap();
        return Some(if only == d {
            Verdict::Nonzero(count_here)
        } else {
            Verdict::Zero
        });
    }
    None
}

/// Exact multigraded Betti numbers through the tree route: bounds, the three
/// tests, and a final simplicial fallback for anything left unknown.
pub fn exact_betti(
    ideal: &MonomialIdeal,
    strategy: PivotStrategy,
) -> BTreeMap<(usize, Multidegree), usize> {
    let tree = build_tree(ideal, strategy);
    let bounds = relevant_betti_bounds(&tree);
    let resolved = resolve_undecided(ideal, &bounds);
    let mut out = BTreeMap::new();
    for key in resolved.upper.keys() {
        let value = if resolved.lower.contains(key) {
            1
        } else {
            match resolved.verdicts.get(key) {
                Some(Verdict::Nonzero(k)) => *k,
                Some(Verdict::Zero) => 0,
                Some(Verdict::Unknown) | None => {
                    crate::homology::homology_at::<crate::Coeff>(ideal, &key.1, key.0).0
                }
            }
        };
        if value > 0 {
            out.insert(key.clone(), value);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MvClass {
    A,
    B1,
    B2,
    NoneVerified,
}

#[derive(Clone, Debug)]
pub struct MvTypeReport {
    pub class: MvClass,
    /// Strategy witnessing the classification.
    pub witness: Option<PivotStrategy>,
    /// Strategies (among those tried) whose trees have no repeated relevant
    /// multidegree.
    pub repeat_free: Vec<PivotStrategy>,
}

/// Best-effort classification against the minimal-resolution oracle: type A
/// when some tried strategy yields a repeat-free tree; otherwise B2/B1 when
/// the upper/lower bound of some tried tree matches the true Betti numbers.
pub fn classify_mv_type(
    ideal: &MonomialIdeal,
    strategies: &[PivotStrategy],
    oracle: &BTreeMap<(usize, Multidegree), usize>,
) -> MvTypeReport {
    let mut repeat_free = Vec::new();
    let mut b1_witness = None;
    let mut b2_witness = None;
    for &s in strategies {
        let tree = build_tree(ideal, s);
        let bounds = relevant_betti_bounds(&tree);
        if !bounds.has_repeats() {
            repeat_free.push(s);
        }
        let lower_map: BTreeMap<(usize, Multidegree), usize> =
            bounds.lower.iter().map(|k| (k.clone(), 1)).collect();
        if b1_witness.is_none() && &lower_map == oracle {
            b1_witness = Some(s);
        }
        let upper_nonzero: BTreeMap<(usize, Multidegree), usize> = bounds
            .upper
            .iter()
            .map(|(k, c)| (k.clone(), *c))
            .collect();
        if b2_witness.is_none() && &upper_nonzero == oracle {
            b2_witness = Some(s);
        }
    }
    if let Some(&s) = repeat_free.first() {
        return MvTypeReport { class: MvClass::A, witness: Some(s), repeat_free };
    }
    if let Some(s) = b2_witness {
        return MvTypeReport { class: MvClass::B2, witness: Some(s), repeat_free };
    }
    if let Some(s) = b1_witness {
        return MvTypeReport { class: MvClass::B1, witness: Some(s), repeat_free };
    }
    MvTypeReport { class: MvClass::NoneVerified, witness: None, repeat_free }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeShape {
    pub unmixed: bool,
    pub pure: bool,
    pub linear: bool,
    /// Degrees `(g_0, g_1, …)` of a pure tree.
    pub shift_type: Option<Vec<u64>>,
    /// Differences `(…, g_1 - g_0, g_0)` of a pure tree.
    pub degree_type: Option<Vec<u64>>,
}

/// Degree behaviour of the relevant-node generators per dimension.
pub fn tree_shape(tree: &MVTree) -> TreeShape {
    let mut per_dim: BTreeMap<usize, BTreeSet<u64>> = BTreeMap::new();
    for node in tree.relevant_nodes() {
        let entry = per_dim.entry(node.dimension).or_default();
        for g in &node.gens {
            entry.insert(g.degree());
        }
    }
    let dims: Vec<usize> = per_dim.keys().copied().collect();
    let unmixed = dims.iter().enumerate().all(|(x, a)| {
        dims.iter().skip(x + 1).all(|b| per_dim[a].is_disjoint(&per_dim[b]))
    });
    let pure = per_dim.values().all(|s| s.len() == 1);
    let (shift_type, degree_type, linear) = if pure {
        let shifts: Vec<u64> = per_dim.values().map(|s| *s.iter().next().unwrap()).collect();
        let g0 = shifts[0];
        let linear = shifts.iter().enumerate().all(|(d, &g)| g == g0 + d as u64);
        let mut diffs: Vec<u64> = shifts.windows(2).map(|w| w[1] - w[0]).collect();
        diffs.reverse();
        diffs.push(g0);
        (Some(shifts), Some(diffs), linear)
    } else {
        (None, None, false)
    };
    TreeShape { unmixed, pure, linear, shift_type, degree_type }
}
