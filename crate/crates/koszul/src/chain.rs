//! Chains of the Koszul complex of a monomial module and their differentials.
//!
//! A term `c · x^mu ⊗ x_{j_1} ∧ … ∧ x_{j_p}` is stored as the pair of its
//! symmetric multidegree `mu` and the exterior index set `J` (a bitmask), with
//! a scalar coefficient. The Koszul differential lowers the exterior degree,
//! the de Rham (Spencer) differential raises it; on a homogeneous element of
//! symmetric degree `q` and exterior degree `p` the two compose to
//! `(p + q) · id`.

use std::collections::BTreeMap;

use crate::monomial::{MonomialIdeal, Multidegree};
use crate::scalar::Scalar;

/// Exterior index set as a bitmask over the variables.
pub type VarSet = u64;

pub fn varset_from(vars: &[usize]) -> VarSet {
    let mut s = 0;
    for &v in vars {
        assert!(v < 64);
        s |= 1 << v;
    }
    s
}

pub fn varset_members(s: VarSet) -> Vec<usize> {
    (0..64).filter(|i| s & (1 << i) != 0).collect()
}

/// Position of `v` among the ascending members of `s`; `v` must be a member.
fn position_in(s: VarSet, v: usize) -> u32 {
    debug_assert!(s & (1 << v) != 0);
    (s & ((1u64 << v) - 1)).count_ones()
}

#[derive(Clone, Debug, PartialEq)]
pub struct KoszulChain<S> {
    n: usize,
    terms: BTreeMap<(Multidegree, VarSet), S>,
}

impl<S: Scalar> KoszulChain<S> {
    pub fn zero(n: usize) -> Self {
        KoszulChain { n, terms: BTreeMap::new() }
    }

    pub fn term(coeff: S, mu: Multidegree, j: VarSet) -> Self {
        let n = mu.n();
        let mut c = KoszulChain::zero(n);
        c.add_term(coeff, mu, j);
        c
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Multidegree, VarSet, &S)> {
        self.terms.iter().map(|((mu, j), c)| (mu, *j, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, coeff: S, mu: Multidegree, j: VarSet) {
        if coeff.is_zero() {
            return;
        }
        assert_eq!(mu.n(), self.n);
        use std::collections::btree_map::Entry;
        match self.terms.entry((mu, j)) {
            Entry::Occupied(mut e) => {
                let v = e.get().clone() + coeff;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &KoszulChain<S>) -> KoszulChain<S> {
        let mut out = self.clone();
        for ((mu, j), c) in &other.terms {
            out.add_term(c.clone(), mu.clone(), *j);
        }
        out
    }

    pub fn scale(&self, s: &S) -> KoszulChain<S> {
        if s.is_zero() {
            return KoszulChain::zero(self.n);
        }
        KoszulChain {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.clone() * s.clone()))
                .collect(),
        }
    }

    pub fn negate(&self) -> KoszulChain<S> {
        self.scale(&(S::zero() - S::one()))
    }

    /// Total multidegree `mu + J` when all terms agree; `None` otherwise or
    /// for the zero chain.
    pub fn total_multidegree(&self) -> Option<Multidegree> {
        let mut result: Option<Multidegree> = None;
        for (mu, j) in self.terms.keys() {
            let total = mu.plus_vars(&varset_members(*j));
            match &result {
                None => result = Some(total),
                Some(t) if *t == total => {}
                Some(_) => return None,
            }
        }
        result
    }

    /// Exterior degree when all terms agree.
    pub fn exterior_degree(&self) -> Option<u32> {
        let mut result: Option<u32> = None;
        for (_, j) in self.terms.keys() {
            let p = j.count_ones();
            match result {
                None => result = Some(p),
                Some(q) if q == p => {}
                Some(_) => return None,
            }
        }
        result
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || (self.total_multidegree().is_some() && self.exterior_degree().is_some())
    }

    /// Koszul differential: `∂(x^mu ⊗ x_J) = Σ_k (-1)^{pos(k)} x_k x^mu ⊗ x_{J \ k}`
    /// with `pos` the 0-based position of `k` in the ascending members of `J`.
    pub fn koszul_differential(&self) -> KoszulChain<S> {
        let mut out = KoszulChain::zero(self.n);
        for ((mu, j), c) in &self.terms {
            for k in varset_members(*j) {
                let sign = if position_in(*j, k).is_multiple_of(2) {
                    c.clone()
                } else {
                    S::zero() - c.clone()
                };
                let mut new_mu = mu.clone();
                new_mu.set_exp(k, new_mu.exp(k) + 1);
                out.add_term(sign, new_mu, j & !(1 << k));
            }
        }
        out
    }

    /// De Rham differential: `δ(x^mu ⊗ x_J) = Σ_k mu_k x^{mu - e_k} ⊗ x_k ∧ x_J`.
    pub fn spencer_differential(&self) -> KoszulChain<S> {
        let mut out = KoszulChain::zero(self.n);
        for ((mu, j), c) in &self.terms {
            for k in 0..self.n {
                let e = mu.exp(k);
                if e == 0 || j & (1 << k) != 0 {
                    continue;
                }
                let new_j = j | (1 << k);
                let sign = if position_in(new_j, k).is_multiple_of(2) {
                    c.clone() * S::from_int(e as i64)
                } else {
                    S::zero() - c.clone() * S::from_int(e as i64)
                };
                let mut new_mu = mu.clone();
                new_mu.set_exp(k, e - 1);
                out.add_term(sign, new_mu, new_j);
            }
        }
        out
    }

    /// Spencer differential of the Koszul complex of a module: only terms
    /// whose symmetric part stays in the module survive.
    pub fn spencer_differential_in(&self, module: &MonomialIdeal) -> KoszulChain<S> {
        let full = self.spencer_differential();
        let mut out = KoszulChain::zero(self.n);
        for ((mu, j), c) in &full.terms {
            if module.contains(mu) {
                out.add_term(c.clone(), mu.clone(), *j);
            }
        }
        out
    }

    /// Projection onto the terms whose symmetric part lies in a module.
    pub fn restrict_to(&self, module: &MonomialIdeal) -> KoszulChain<S> {
        let mut out = KoszulChain::zero(self.n);
        for ((mu, j), c) in &self.terms {
            if module.contains(mu) {
                out.add_term(c.clone(), mu.clone(), *j);
            }
        }
        out
    }

    /// `self = c * other` for some scalar `c`? Returns the scalar.
    pub fn scalar_multiple_of(&self, other: &KoszulChain<S>) -> Option<S> {
        if other.is_zero() {
            return self.is_zero().then(S::zero);
        }
        let ((mu0, j0), c0) = other.terms.iter().next().unwrap();
        let mine = self.terms.get(&(mu0.clone(), *j0))?;
        let ratio = mine.clone() / c0.clone();
        (self == &other.scale(&ratio)).then_some(ratio)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Coeff;

    fn md(e: &[u64]) -> Multidegree {
        Multidegree::new(e.to_vec())
    }

    fn q(v: i64) -> Coeff {
        Scalar::from_int(v)
    }

    #[test]
    fn single_variable_differential() {
        // ∂(x^a ⊗ x_1) = x^{a+e_1} ⊗ 1
        let c = KoszulChain::term(q(1), md(&[2, 0, 3]), varset_from(&[1]));
        let d = c.koszul_differential();
        assert_eq!(d, KoszulChain::term(q(1), md(&[2, 1, 3]), 0));
    }

    #[test]
    fn paper_cycle_is_cycle() {
        // ∂(x y^4 z^6 ⊗ y - y^5 z^6 ⊗ x) = 0
        let c = KoszulChain::term(q(1), md(&[1, 4, 6]), varset_from(&[1]))
            .add(&KoszulChain::term(q(-1), md(&[0, 5, 6]), varset_from(&[0])));
        assert!(c.koszul_differential().is_zero());
    }

    #[test]
    fn spencer_basic() {
        // δ(x^2 ⊗ 1) = 2 x ⊗ x
        let c = KoszulChain::term(q(1), md(&[2]), 0);
        assert_eq!(c.spencer_differential(), KoszulChain::term(q(2), md(&[1]), 1));
    }

    #[test]
    fn squares_vanish_and_homotopy_identity() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=4usize);
            // random homogeneous bidegree element: fixed exterior set and
            // random symmetric multidegrees of a fixed total degree
            let p = rng.gen_range(0..=n);
            let mut vars: Vec<usize> = (0..n).collect();
            for i in (1..vars.len()).rev() {
                vars.swap(i, rng.gen_range(0..=i));
            }
            let j = varset_from(&vars[..p]);
            let q_deg = rng.gen_range(0..=4u64);
            let mut chain = KoszulChain::zero(n);
            for _ in 0..rng.gen_range(1..=3) {
                let mut left = q_deg;
                let mut e = vec![0u64; n];
                for item in e.iter_mut().take(n - 1) {
                    let take = rng.gen_range(0..=left);
                    *item = take;
                    left -= take;
                }
                e[n - 1] = left;
                chain.add_term(q(rng.gen_range(-3..=3)), md(&e), j);
            }
            let dd = chain.koszul_differential().koszul_differential();
            assert!(dd.is_zero());
            let ss = chain.spencer_differential().spencer_differential();
            assert!(ss.is_zero());
            // (δ∂ + ∂δ) = (p + q) id on homogeneous bidegree (q, p)
            let lhs = chain
                .koszul_differential()
                .spencer_differential()
                .add(&chain.spencer_differential().koszul_differential());
            assert_eq!(lhs, chain.scale(&q((p as u64 + q_deg) as i64)));
        }
    }
}
