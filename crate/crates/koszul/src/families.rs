//! Constructors, predicates, and Betti formulas for structured families of
//! monomial ideals, and the series-parallel network algebra.

use std::collections::BTreeMap;

use crate::decomp::{self, IrreducibleComponent};
use crate::monomial::{MonomialIdeal, Multidegree};
use crate::mvtree::{self, MVTree, PivotStrategy};

pub fn binomial(n: u64, k: u64) -> u128 {
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

fn squarefree_of_degree(n: usize, k: usize) -> Vec<Multidegree> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k == 0 || k > n {
        return out;
    }
    loop {
        out.push(Multidegree::from_vars(n, &idx));
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
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

/// All squarefree degree-`k` monomials in `n` variables.
pub fn k_out_of_n(k: usize, n: usize) -> MonomialIdeal {
    assert!(k >= 1 && k <= n);
    MonomialIdeal::new(n, squarefree_of_degree(n, k))
}

/// The `n - k + 1` windows of `k` consecutive variables.
pub fn consecutive(k: usize, n: usize) -> MonomialIdeal {
    assert!(k >= 1 && k <= n);
    let gens = (0..=n - k)
        .map(|s| Multidegree::from_vars(n, &(s..s + k).collect::<Vec<_>>()))
        .collect();
    MonomialIdeal::new(n, gens)
}

/// All `n` windows of `k` consecutive variables, wrapping around.
pub fn cyclic(k: usize, n: usize) -> MonomialIdeal {
    assert!(k >= 1 && k <= n);
    let gens = (0..n)
        .map(|s| {
            let vars: Vec<usize> = (0..k).map(|t| (s + t) % n).collect();
            Multidegree::from_vars(n, &vars)
        })
        .collect();
    MonomialIdeal::new(n, gens)
}

/// Degree-`k` monomials in `n` variables with every exponent at most `cap`:
/// the tail of the `k`-th power of the irrelevant ideal. `cap = 1` is the
/// `k`-out-of-`n` ideal, `cap = k` the full power.
pub fn multistate(n: usize, k: u64, cap: u64) -> MonomialIdeal {
    assert!(cap >= 1);
    MonomialIdeal::new(n, tail_ideal_gens(n, k, cap))
}

/// `β_i = C(n, k+i) · C(i+k-1, k-1)` for `0 <= i <= n-k`.
pub fn betti_k_out_of_n(k: usize, n: usize) -> Vec<u128> {
    (0..=n - k)
        .map(|i| {
            binomial(n as u64, (k + i) as u64) * binomial((i + k - 1) as u64, (k - 1) as u64)
        })
        .collect()
}

/// Betti numbers of the consecutive ideal by the tree recursion
/// `β_i(k,n) = β_{i-2}(k,n-k-1) + β_{i-1}(k,n-k-1) + β_i(k,n-1)` with the
/// short base cases `β = (n-k+1, n-k)` whenever `2k >= n`.
pub fn betti_consecutive(k: usize, n: usize) -> Vec<u128> {
    assert!(k >= 1 && k <= n);
    let mut table: BTreeMap<usize, Vec<u128>> = BTreeMap::new();
    let at = |v: &[u128], i: usize| v.get(i).copied().unwrap_or(0);
    for m in k..=n {
        let v = if 2 * k >= m {
            vec![(m - k + 1) as u128, (m - k) as u128]
        } else {
            let prev = table[&(m - 1)].clone();
            let short: Vec<u128> = table.get(&(m - k - 1)).cloned().unwrap_or_default();
            let mut v = vec![
                (m - k + 1) as u128,
                (m - 2 * k + 1) as u128 + at(&prev, 1),
            ];
            for i in 2..(short.len() + 2).max(prev.len()) + 1 {
                v.push(at(&short, i - 2) + at(&short, i - 1) + at(&prev, i));
            }
            v
        };
        table.insert(m, v);
    }
    let mut out = table.remove(&n).unwrap();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

// ---------------------------------------------------------------------------
// Powers of prime ideals and their tails
// ---------------------------------------------------------------------------

/// Generators of `<x_1,…,x_n>^k` in the pivot order that yields a pure
/// (`k`-linear) tree: blocks of descending top exponent `i`, within a block
/// ascending distinguished variable `j` (the first variable attaining the top
/// exponent), recursively ordered on the remaining variables.
pub fn prime_power_ideal(n: usize, k: u64) -> Vec<Multidegree> {
    tail_ideal_gens(n, k, k)
}

/// Ordered generators of the degree-`k`, exponent-capped tail.
pub fn tail_ideal_gens(n: usize, k: u64, cap: u64) -> Vec<Multidegree> {
    let mut all = monomials_of_degree(n, k)
        .into_iter()
        .filter(|m| (0..n).all(|v| m.exp(v) <= cap))
        .collect::<Vec<_>>();
    all.sort_by(|a, b| power_order(a.exps(), b.exps()));
    all
}

fn monomials_of_degree(n: usize, k: u64) -> Vec<Multidegree> {
    fn rec(n: usize, k: u64, prefix: &mut Vec<u64>, out: &mut Vec<Multidegree>) {
        if prefix.len() == n - 1 {
            prefix.push(k);
            out.push(Multidegree::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=k {
            prefix.push(e);
            rec(n, k - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

fn power_order(a: &[u64], b: &[u64]) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    if a.is_empty() {
        return Ordering::Equal;
    }
    let ia = *a.iter().max().unwrap();
    let ib = *b.iter().max().unwrap();
    // descending top exponent, ascending distinguished variable
    match ib.cmp(&ia) {
        Ordering::Equal => {}
        other => return other,
    }
    let ja = a.iter().position(|&e| e == ia).unwrap();
    let jb = b.iter().position(|&e| e == ib).unwrap();
    match ja.cmp(&jb) {
        Ordering::Equal => {}
        other => return other,
    }
    let rest = |v: &[u64], j: usize| -> Vec<u64> {
        v.iter()
            .enumerate()
            .filter(|(x, _)| *x != j)
            .map(|(_, e)| *e)
            .collect()
    };
    power_order(&rest(a, ja), &rest(b, jb))
}

/// Free directions left of a tail generator: the variables whose bump stays
/// within the block constraints, witnessed by a later generator.
fn tail_free_count(m: &Multidegree) -> usize {
    let i = (0..m.n()).map(|v| m.exp(v)).max().unwrap();
    let j = (0..m.n()).find(|&v| m.exp(v) == i).unwrap();
    (0..m.n())
        .filter(|&l| {
            if l == j {
                false
            } else if l > j {
                m.exp(l) < i
            } else {
                m.exp(l) + 1 < i
            }
        })
        .count()
}

/// Betti numbers of the capped tail through its pure tree: every generator
/// contributes a shifted prime subtree on its free directions.
pub fn betti_tail(n: usize, k: u64, cap: u64) -> Vec<u128> {
    let gens = tail_ideal_gens(n, k, cap);
    let mut out = vec![gens.len() as u128];
    let top = gens.iter().map(tail_free_count).max().unwrap_or(0);
    for d in 1..=top {
        out.push(
            gens.iter()
                .map(|m| binomial(tail_free_count(m) as u64, d as u64))
                .sum(),
        );
    }
    out
}

pub fn betti_prime_power(n: usize, k: u64) -> Vec<u128> {
    betti_tail(n, k, k)
}

/// Number of degree-`k` monomials in `n` variables whose first `pos - 1`
/// variables have exponent below `l`, whose variable `pos` (1-based) has
/// exponent exactly `l`, and whose remaining variables are bounded by `l`:
/// the block sizes of the power ordering, via the generating function
/// `(1 - x^l)^{pos-1} (1 - x^{l+1})^{n-pos} / (1-x)^{n-1}` at `x^{k-l}`.
pub fn block_count(n: usize, k: u64, pos: usize, l: u64) -> u128 {
    assert!((1..=n).contains(&pos) && l >= 1 && l <= k);
    let want = (k - l) as usize;
    // expand the two binomial factors, then convolve with CR(n-1, j)
    let mut poly: BTreeMap<usize, i128> = BTreeMap::new();
    poly.insert(0, 1);
    let mut mul_factor = |step: usize, times: usize| {
        for _ in 0..times {
            let mut next: BTreeMap<usize, i128> = BTreeMap::new();
            for (d, c) in &poly {
                *next.entry(*d).or_insert(0) += c;
                if d + step <= want {
                    *next.entry(d + step).or_insert(0) -= c;
                }
            }
            poly = next;
        }
    };
    mul_factor(l as usize, pos - 1);
    mul_factor(l as usize + 1, n - pos);
    let mut acc: i128 = 0;
    for (d, c) in &poly {
        if *d <= want {
            let j = (want - d) as u64;
            acc += c * binomial((n as u64 - 1) + j - 1, j) as i128;
        }
    }
    assert!(acc >= 0);
    acc as u128
}

// ---------------------------------------------------------------------------
// Valla ideals
// ---------------------------------------------------------------------------

/// `I_{a,b} = < x_1^{a+b-2j} J^j (j < b), x_1^{a-t} J^t (b <= t <= a) >` with
/// `J = <x_2,…,x_n>`.
pub fn valla(n: usize, a: u64, b: u64) -> MonomialIdeal {
    assert!(n >= 2 && a >= b && b >= 1);
    let mut gens = Vec::new();
    let tail_vars = n - 1;
    let mut push_block = |x1: u64, t: u64| {
        for m in monomials_of_degree(tail_vars, t) {
            let mut e = vec![x1];
            e.extend(m.exps());
            gens.push(Multidegree::new(e));
        }
    };
    for j in 0..b {
        push_block(a + b - 2 * j, j);
    }
    for t in b..=a {
        push_block(a - t, t);
    }
    MonomialIdeal::new(n, gens)
}

/// Graded Betti table `(i, total degree) -> rank` of the Valla ideal.
pub fn betti_valla(n: usize, a: u64, b: u64) -> BTreeMap<(usize, u64), u128> {
    assert!(n >= 2 && a >= b && b >= 1);
    let nu = (n - 1) as u64; // variables of J
    let mut table: BTreeMap<(usize, u64), u128> = BTreeMap::new();
    let count_level = |j: u64| binomial(nu + j - 1, j); // generators of J^j
    for i in 0..n {
        let outer = binomial(nu, i as u64);
        if outer == 0 {
            continue;
        }
        // first block: degree a+b-j+i, one shifted prime subtree per
        // generator of x_1-level j
        for j in 0..b {
            let c = outer * count_level(j);
            if c > 0 {
                *table.entry((i, a + b - j + i as u64)).or_insert(0) += c;
            }
        }
        // second block below the pure power: all at degree a+i
        for t in b..a {
            let c = outer * count_level(t);
            if c > 0 {
                *table.entry((i, a + i as u64)).or_insert(0) += c;
            }
        }
        // the J^a part lives in n-1 variables
        let c = binomial(nu + a - 1, a + i as u64) * binomial(a + i as u64 - 1, i as u64);
        if c > 0 {
            *table.entry((i, a + i as u64)).or_insert(0) += c;
        }
    }
    table
}

pub fn betti_totals_u128(table: &BTreeMap<(usize, u64), u128>) -> Vec<u128> {
    let mut out = Vec::new();
    for ((i, _), c) in table {
        if out.len() <= *i {
            out.resize(i + 1, 0);
        }
        out[*i] += c;
    }
    out
}

// ---------------------------------------------------------------------------
// Ferrers ideals
// ---------------------------------------------------------------------------

/// Weakly decreasing positive partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FerrersPartition(pub Vec<u64>);

impl FerrersPartition {
    pub fn new(lambda: Vec<u64>) -> Self {
        assert!(!lambda.is_empty());
        assert!(lambda.windows(2).all(|w| w[0] >= w[1]));
        assert!(*lambda.last().unwrap() >= 1);
        FerrersPartition(lambda)
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn cols(&self) -> usize {
        self.0[0] as usize
    }
}

/// Edge ideal of the Ferrers graph: variables `x_1..x_n` then `y_1..y_m`,
/// generators `x_i y_j` for `j <= λ_i`.
pub fn ferrers(lambda: &FerrersPartition) -> MonomialIdeal {
    let rows = lambda.rows();
    let cols = lambda.cols();
    let n = rows + cols;
    let mut gens = Vec::new();
    for (i, &li) in lambda.0.iter().enumerate() {
        for j in 0..li as usize {
            gens.push(Multidegree::from_vars(n, &[i, rows + j]));
        }
    }
    MonomialIdeal::new(n, gens)
}

/// `β_k = Σ_j Σ_{i <= λ_j} C(j+i-2, k)` (1-based `i`, `j`).
pub fn betti_ferrers(lambda: &FerrersPartition) -> Vec<u128> {
    let projdim = ferrers_projdim(lambda);
    (0..=projdim)
        .map(|k| {
            lambda
                .0
                .iter()
                .enumerate()
                .map(|(j0, &lj)| {
                    (1..=lj)
                        .map(|i| binomial(j0 as u64 + i - 1, k))
                        .sum::<u128>()
                })
                .sum()
        })
        .collect()
}

pub fn ferrers_projdim(lambda: &FerrersPartition) -> u64 {
    lambda
        .0
        .iter()
        .enumerate()
        .map(|(j0, &l)| l + j0 as u64 + 1 - 2)
        .max()
        .unwrap()
}

/// Irredundant irreducible (and primary) decomposition:
/// `<x_1..x_n> ∩_i <x_1..x_{i-1}, y_1..y_{λ_i}>` over the rows where the
/// partition drops.
pub fn ferrers_decomposition(lambda: &FerrersPartition) -> Vec<IrreducibleComponent> {
    let rows = lambda.rows();
    let cols = lambda.cols();
    let n = rows + cols;
    let mut comps = vec![Multidegree::from_vars(n, &(0..rows).collect::<Vec<_>>())];
    for (i0, &li) in lambda.0.iter().enumerate() {
        if i0 == 0 || lambda.0[i0 - 1] != li {
            let mut vars: Vec<usize> = (0..i0).collect();
            vars.extend((0..li as usize).map(|j| rows + j));
            comps.push(Multidegree::from_vars(n, &vars));
        }
    }
    comps.sort_by(|a, b| a.cmp_canonical(b));
    comps.into_iter().map(IrreducibleComponent).collect()
}

// ---------------------------------------------------------------------------
// Series-parallel networks
// ---------------------------------------------------------------------------

/// Two-terminal network built from single edges by series and parallel
/// composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NetworkExpr {
    Edge,
    Series(Vec<NetworkExpr>),
    Parallel(Vec<NetworkExpr>),
}

impl NetworkExpr {
    pub fn edge_count(&self) -> usize {
        match self {
            NetworkExpr::Edge => 1,
            NetworkExpr::Series(c) | NetworkExpr::Parallel(c) => {
                c.iter().map(NetworkExpr::edge_count).sum()
            }
        }
    }
}

/// Minimal-cut ideal of a network: edges are numbered depth-first left to
/// right; a series join sums the pieces, a parallel join intersects them.
pub fn network_ideal(expr: &NetworkExpr) -> MonomialIdeal {
    let n = expr.edge_count();
    fn rec(expr: &NetworkExpr, n: usize, next: &mut usize) -> MonomialIdeal {
        match expr {
            NetworkExpr::Edge => {
                let ideal = MonomialIdeal::principal(Multidegree::var(n, *next));
                *next += 1;
                ideal
            }
            NetworkExpr::Series(children) => children
                .iter()
                .map(|c| rec(c, n, next))
                .reduce(|a, b| a.sum(&b))
                .expect("nonempty children"),
            NetworkExpr::Parallel(children) => children
                .iter()
                .map(|c| rec(c, n, next))
                .reduce(|a, b| a.intersection(&b))
                .expect("nonempty children"),
        }
    }
    rec(expr, n, &mut 0)
}

/// The parallel connection of pure series blocks `{r_1, …, r_k}`:
/// `<x_{1,1..r_1}> ∩ … ∩ <x_{k,1..r_k}>`.
pub fn pure_series_parallel(rs: &[usize]) -> NetworkExpr {
    NetworkExpr::Parallel(
        rs.iter()
            .map(|&r| NetworkExpr::Series(vec![NetworkExpr::Edge; r]))
            .collect(),
    )
}

/// Relevant-node and leaf counts per dimension of a tree.
fn tree_profile(tree: &MVTree) -> (Vec<u128>, Vec<u128>) {
    let mut relevant: Vec<u128> = Vec::new();
    let mut leaves: Vec<u128> = Vec::new();
    for node in tree.nodes() {
        if node.is_relevant() {
            if relevant.len() <= node.dimension {
                relevant.resize(node.dimension + 1, 0);
            }
            relevant[node.dimension] += 1;
        }
        if node.is_leaf() {
            if leaves.len() <= node.dimension {
                leaves.resize(node.dimension + 1, 0);
            }
            leaves[node.dimension] += 1;
        }
    }
    (relevant, leaves)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeparableMode {
    Sum,
    Intersection,
}

/// Betti numbers of `J + K` or `J ∩ K` for ideals on disjoint variable sets,
/// from the Betti numbers of `J` and the tree of `K` (which must witness the
/// exactness of its own bounds, i.e. be of type A or B2):
///
/// sum:          `β_i = β_i(K) + r_J R_i + Σ_{j<i} L_j (β_{i-j}(J) + β_{i-j-1}(J))`
/// intersection: `β_i = r_J R_{i+1} + Σ_{j<i+1} L_j (β_{i+1-j}(J) + β_{i-j}(J)) - β_{i+1}(J)`
pub fn separable_betti_from_data(
    j_betti: &[u128],
    r_j: u128,
    k_tree: &MVTree,
    mode: SeparableMode,
) -> Vec<u128> {
    let k_betti = crate::mvtree::relevant_betti_bounds(k_tree)
        .upper_totals()
        .iter()
        .map(|&c| c as u128)
        .collect::<Vec<u128>>();
    let (relevant, leaves) = tree_profile(k_tree);
    let at = |v: &[u128], i: usize| v.get(i).copied().unwrap_or(0);
    let j_at = |i: i64| {
        if i < 0 {
            0
        } else {
            at(j_betti, i as usize)
        }
    };
    let mut out = Vec::new();
    let top = j_betti.len() + leaves.len() + k_betti.len() + 2;
    for i in 0..top {
        let v = match mode {
            SeparableMode::Sum => {
                let mut v = at(&k_betti, i) + r_j * at(&relevant, i);
                for (j, l) in leaves.iter().enumerate() {
                    if j < i {
                        v += l * (j_at(i as i64 - j as i64) + j_at(i as i64 - j as i64 - 1));
                    }
                }
                v
            }
            SeparableMode::Intersection => {
                let mut v = r_j * at(&relevant, i + 1);
                for (j, l) in leaves.iter().enumerate() {
                    if j < i + 1 {
                        v += l * (j_at(i as i64 + 1 - j as i64) + j_at(i as i64 - j as i64));
                    }
                }
                v - j_at(i as i64 + 1)
            }
        };
        out.push(v);
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Formula route for two concrete ideals on disjoint variables, with the
/// Betti numbers of `J` from the minimal-resolution oracle and the lex tree
/// of `K`.
pub fn separable_betti(
    j: &MonomialIdeal,
    k: &MonomialIdeal,
    mode: SeparableMode,
) -> Vec<u128> {
    assert_eq!(j.n(), k.n());
    let j_support = j.gens().iter().fold(0u64, |m, g| m | g.support_mask());
    let k_support = k.gens().iter().fold(0u64, |m, g| m | g.support_mask());
    assert_eq!(j_support & k_support, 0, "separable pieces must not share variables");
    let j_betti: Vec<u128> = crate::resolution::betti_totals(&crate::resolution::betti_numbers(j))
        .iter()
        .map(|&c| c as u128)
        .collect();
    let tree = mvtree::build_tree(k, PivotStrategy::LexLast);
    separable_betti_from_data(&j_betti, j.num_gens() as u128, &tree, mode)
}

/// Betti numbers of `I_{{r_1,…,r_k}}` by peeling one prime block at a time
/// with the intersection formula; the base case is `β_i = C(r, i+1)`.
pub fn betti_series_parallel(rs: &[usize]) -> Vec<u128> {
    assert!(!rs.is_empty());
    let prime_betti =
        |r: usize| -> Vec<u128> { (0..r).map(|i| binomial(r as u64, i as u64 + 1)).collect() };
    let mut betti = prime_betti(rs[0]);
    let mut generators: u128 = rs[0] as u128;
    for &r in &rs[1..] {
        let prime = MonomialIdeal::new(
            r,
            (0..r).map(|v| Multidegree::var(r, v)).collect(),
        );
        let tree = mvtree::build_tree(&prime, PivotStrategy::LexLast);
        betti = separable_betti_from_data(&betti, generators, &tree, SeparableMode::Intersection);
        generators *= r as u128;
    }
    betti
}

// ---------------------------------------------------------------------------
// Stability predicates
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub stable: bool,
    pub strongly_stable: bool,
    pub squarefree_stable: bool,
    pub lex_segment: bool,
    pub quasi_stable: bool,
}

fn max_index(m: &Multidegree) -> usize {
    (0..m.n()).rev().find(|&i| m.exp(i) > 0).expect("constant monomial")
}

/// Stability-style predicates, checked on the minimal generators where that
/// suffices and degreewise on all monomials for the lex-segment test.
pub fn stability_predicates(ideal: &MonomialIdeal) -> StabilityReport {
    let n = ideal.n();
    let swap = |m: &Multidegree, from: usize, to: usize| -> Multidegree {
        let mut e = m.clone();
        e.set_exp(from, e.exp(from) - 1);
        e.set_exp(to, e.exp(to) + 1);
        e
    };
    let stable = ideal.gens().iter().all(|m| {
        let mx = max_index(m);
        (0..mx).all(|i| ideal.contains(&swap(m, mx, i)))
    });
    let strongly_stable = ideal.gens().iter().all(|m| {
        m.support()
            .iter()
            .all(|&j| (0..j).all(|i| ideal.contains(&swap(m, j, i))))
    });
    let squarefree = ideal.gens().iter().all(Multidegree::is_squarefree);
    let squarefree_stable = squarefree
        && ideal.gens().iter().all(|m| {
            let mx = max_index(m);
            (0..mx)
                .filter(|&j| m.exp(j) == 0)
                .all(|j| ideal.contains(&swap(m, mx, j)))
        });
    let max_degree = ideal.gens().iter().map(Multidegree::degree).max().unwrap_or(0);
    let lex_segment = (1..=max_degree).all(|d| {
        let mut monos = monomials_of_degree(n, d);
        monos.sort_by(|a, b| b.cmp_lex(a)); // descending lex
        let mut seen_outside = false;
        for m in monos {
            let inside = ideal.contains(&m);
            if inside && seen_outside {
                return false;
            }
            if !inside {
                seen_outside = true;
            }
        }
        true
    });
    let (primes, _) = decomp::associated_primes_and_height(ideal);
    let quasi_stable = primes
        .iter()
        .all(|p| p.iter().copied().eq(0..p.len()));
    StabilityReport { stable, strongly_stable, squarefree_stable, lex_segment, quasi_stable }
}

/// Eliahou-Kervaire Betti numbers `β_i = Σ_k C(max(m_k) - 1, i)` of a stable
/// ideal (1-based max variable index). Panics on non-stable input.
pub fn betti_stable(ideal: &MonomialIdeal) -> Vec<u128> {
    assert!(
        stability_predicates(ideal).stable,
        "Eliahou-Kervaire formula needs a stable ideal"
    );
    let tops: Vec<usize> = ideal.gens().iter().map(max_index).collect();
    let top = tops.iter().copied().max().unwrap_or(0);
    (0..=top)
        .map(|i| {
            tops.iter()
                .map(|&mx| binomial(mx as u64, i as u64))
                .sum()
        })
        .filter(|&v| v > 0)
        .collect()
}
