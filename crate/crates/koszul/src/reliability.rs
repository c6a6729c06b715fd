//! Reliability of coherent systems through their monomial ideals.
//!
//! The minimal non-failure points of a coherent system are the minimal
//! generators of a monomial ideal; the reliability is the probability mass of
//! the ideal's monomials, and with a common component probability `p` it is
//! the K-polynomial specialized at `p`. Truncating the inclusion-exclusion
//! identity over the Taylor levels gives the classical alternating bounds.

use crate::hilbert::{k_poly_from_lattice, KPolynomial, UnivariatePolynomial};
use crate::monomial::{min_generators, MonomialIdeal, Multidegree};

/// Coherent system described by its minimal non-failure (or failure) points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherentSystem {
    n: usize,
    minimal_points: Vec<Multidegree>,
}

impl CoherentSystem {
    /// Points are minimized with respect to divisibility if they do not
    /// already form an antichain.
    pub fn new(n: usize, points: Vec<Multidegree>) -> (CoherentSystem, bool) {
        let ideal = min_generators(n, points.clone());
        let was_antichain = ideal.num_gens() == points.len();
        (
            CoherentSystem { n, minimal_points: ideal.gens().to_vec() },
            !was_antichain,
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn minimal_points(&self) -> &[Multidegree] {
        &self.minimal_points
    }

    pub fn is_binary(&self) -> bool {
        self.minimal_points.iter().all(Multidegree::is_squarefree)
    }
}

/// The system ideal generated by the minimal points.
pub fn system_ideal(system: &CoherentSystem) -> MonomialIdeal {
    MonomialIdeal::new(system.n, system.minimal_points.clone())
}

/// Reliability polynomial in a common component probability `p`: the
/// K-polynomial specialized at `x_i = p`.
pub fn reliability_polynomial(system: &CoherentSystem) -> UnivariatePolynomial {
    k_poly_from_lattice(&system_ideal(system)).specialize()
}

/// Multilinear reliability polynomial in independent per-component
/// probabilities; binary systems only.
pub fn reliability_per_component(system: &CoherentSystem) -> Result<KPolynomial, String> {
    if !system.is_binary() {
        return Err(
            "per-component probabilities are supported for binary systems only".to_string(),
        );
    }
    Ok(k_poly_from_lattice(&system_ideal(system)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundSide {
    Upper,
    Lower,
}

#[derive(Clone, Debug)]
pub struct BonferroniBound {
    pub r: usize,
    pub polynomial: UnivariatePolynomial,
    pub side: BoundSide,
    /// Number of orthant intersections used: `Σ_{j<=r} C(|F*|, j)`.
    pub sets_used: u128,
}

/// Truncated inclusion-exclusion over the Taylor levels `1..=r`: odd `r`
/// bounds the reliability from above, even `r` from below.
pub fn bonferroni_bounds(system: &CoherentSystem, r: usize) -> BonferroniBound {
    let points = &system.minimal_points;
    let count = points.len();
    assert!((1..=count).contains(&r), "truncation level out of range");
    let mut polynomial = UnivariatePolynomial::zero();
    let mut sets_used: u128 = 0;
    // iterate subsets by size via Gosper-style enumeration per level
    for level in 1..=r {
        sets_used += crate::families::binomial(count as u64, level as u64);
        let sign = if level % 2 == 1 { 1 } else { -1 };
        for subset in combinations_of(count, level) {
            let lcm = subset
                .iter()
                .map(|&i| points[i].clone())
                .reduce(|a, b| a.lcm(&b))
                .unwrap();
            polynomial.add_term(lcm.degree(), sign);
        }
    }
    let side = if r % 2 == 1 { BoundSide::Upper } else { BoundSide::Lower };
    BonferroniBound { r, polynomial, side, sets_used }
}

fn combinations_of(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
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

/// Exact reliability of a binary system by enumerating all `2^n` outcomes,
/// as a polynomial in `p` (expanded from `p^k (1-p)^{n-k}` terms).
pub fn brute_force_reliability(system: &CoherentSystem) -> UnivariatePolynomial {
    assert!(system.is_binary(), "outcome enumeration is for binary systems");
    let n = system.n;
    assert!(n <= 20);
    let ideal = system_ideal(system);
    let mut out = UnivariatePolynomial::zero();
    for mask in 0u32..(1 << n) {
        let outcome = Multidegree::new(
            (0..n).map(|i| u64::from(mask & (1 << i) != 0)).collect(),
        );
        if ideal.contains(&outcome) {
            let k = outcome.degree();
            // p^k (1-p)^(n-k)
            let term = UnivariatePolynomial::monomial(k, 1)
                .mul(&UnivariatePolynomial::one_minus_t().pow((n as u64 - k) as u32));
            out = out.add(&term);
        }
    }
    out
}

/// The eight-edge bridge-style network used across the tests: nine minimal
/// paths on eight components.
pub fn example_network() -> CoherentSystem {
    let rows: [&[u64; 8]; 9] = [
        &[1, 0, 0, 0, 0, 1, 0, 0],
        &[1, 0, 0, 1, 0, 0, 1, 0],
        &[0, 1, 0, 1, 0, 1, 0, 0],
        &[1, 0, 0, 1, 1, 0, 0, 1],
        &[0, 1, 0, 0, 0, 0, 1, 0],
        &[0, 0, 1, 1, 1, 1, 0, 0],
        &[0, 1, 0, 0, 1, 0, 0, 1],
        &[0, 0, 1, 0, 1, 0, 1, 0],
        &[0, 0, 1, 0, 0, 0, 0, 1],
    ];
    let (system, minimized) = CoherentSystem::new(
        8,
        rows.iter().map(|r| Multidegree::new(r.to_vec())).collect(),
    );
    assert!(!minimized);
    system
}
