//! K-polynomials: numerators of multigraded Hilbert series.
//!
//! `H_I(x) = K_I(x) / Π(1-x_i)`; the numerator can be computed by
//! inclusion-exclusion over the lcm lattice or as the alternating sum of the
//! module labels of any free resolution, and all routes agree after
//! cancellation.

use std::collections::BTreeMap;
use std::fmt;

use crate::monomial::{MonomialIdeal, Multidegree};
use crate::resolution::FreeResolution;
use crate::scalar::Scalar;

/// Integer-coefficient formal sum of monomials, stored fully combined.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct KPolynomial {
    n: usize,
    coeffs: BTreeMap<Multidegree, i64>,
}

impl fmt::Debug for KPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K{:?}", self.coeffs)
    }
}

impl KPolynomial {
    pub fn zero(n: usize) -> Self {
        KPolynomial { n, coeffs: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        let mut p = KPolynomial::zero(n);
        p.add_term(Multidegree::zero(n), 1);
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &BTreeMap<Multidegree, i64> {
        &self.coeffs
    }

    pub fn coeff(&self, m: &Multidegree) -> i64 {
        self.coeffs.get(m).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Multidegree, c: i64) {
        if c == 0 {
            return;
        }
        assert_eq!(m.n(), self.n);
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &KPolynomial) -> KPolynomial {
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            out.add_term(m.clone(), *c);
        }
        out
    }

    pub fn negate(&self) -> KPolynomial {
        KPolynomial {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &KPolynomial) -> KPolynomial {
        self.add(&other.negate())
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Substitute every variable by the same indeterminate (`x_i -> p`),
    /// collecting by total degree.
    pub fn specialize(&self) -> UnivariatePolynomial {
        let mut out = UnivariatePolynomial::zero();
        for (m, c) in &self.coeffs {
            out.add_term(m.degree(), *c);
        }
        out
    }

    /// Evaluate at per-variable scalar values.
    pub fn eval<S: Scalar>(&self, values: &[S]) -> S {
        assert_eq!(values.len(), self.n);
        let mut acc = S::zero();
        for (m, c) in &self.coeffs {
            let mut term = S::from_int(*c);
            for (i, v) in values.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    term = term * v.clone();
                }
            }
            acc = acc + term;
        }
        acc
    }
}

/// Inclusion-exclusion over the generator subsets:
/// `K_I = Σ_{∅ ≠ J} (-1)^{|J|-1} x^{lcm J}`.
///
/// Each subset contributes separately: two subsets of the same size sharing
/// an lcm both count, otherwise the expansion would miscount the monomials
/// of the ideal.
pub fn k_poly_from_lattice(ideal: &MonomialIdeal) -> KPolynomial {
    assert!(!ideal.is_zero());
    let r = ideal.num_gens();
    assert!(r <= 25, "inclusion-exclusion limited to 25 generators");
    let gens = ideal.gens();
    let mut out = KPolynomial::zero(ideal.n());
    // depth-first over subsets, carrying the running lcm
    fn rec(
        gens: &[Multidegree],
        from: usize,
        acc: Option<&Multidegree>,
        size: usize,
        out: &mut KPolynomial,
    ) {
        if let Some(lcm) = acc {
            out.add_term(lcm.clone(), if size % 2 == 1 { 1 } else { -1 });
        }
        for i in from..gens.len() {
            let next = match acc {
                None => gens[i].clone(),
                Some(lcm) => lcm.lcm(&gens[i]),
            };
            rec(gens, i + 1, Some(&next), size + 1, out);
        }
    }
    rec(gens, 0, None, 0, &mut out);
    out
}

/// Alternating sum of the module labels of a resolution (combined), plus the
/// number of summands before any cancellation.
pub fn k_poly_from_resolution<S: Scalar>(res: &FreeResolution<S>) -> (KPolynomial, usize) {
    let mut out = KPolynomial::zero(res.n());
    let mut summands = 0;
    for (d, labels) in res.modules().iter().enumerate() {
        let sign = if d % 2 == 0 { 1 } else { -1 };
        for l in labels {
            out.add_term(l.clone(), sign);
            summands += 1;
        }
    }
    (out, summands)
}

/// Alternating sum of a multigraded Betti table.
pub fn k_poly_from_betti(
    n: usize,
    betti: &BTreeMap<(usize, Multidegree), usize>,
) -> (KPolynomial, usize) {
    let mut out = KPolynomial::zero(n);
    let mut summands = 0;
    for ((d, m), count) in betti {
        let sign = if d % 2 == 0 { 1 } else { -1 };
        out.add_term(m.clone(), sign * *count as i64);
        summands += count;
    }
    (out, summands)
}

/// Numerator of the Hilbert series of `R/I`: `1 - K_I`.
pub fn hilbert_series_quotient(ideal: &MonomialIdeal) -> KPolynomial {
    assert!(ideal.is_proper(), "quotient series of the unit ideal");
    KPolynomial::one(ideal.n()).sub(&k_poly_from_lattice(ideal))
}

/// Integer polynomial in a single variable.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UnivariatePolynomial {
    coeffs: BTreeMap<u64, i64>,
}

impl fmt::Debug for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(d, c)| match d {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{d}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl UnivariatePolynomial {
    pub fn zero() -> Self {
        UnivariatePolynomial::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(0, c);
        p
    }

    pub fn monomial(degree: u64, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, c);
        p
    }

    /// `1 - t`.
    pub fn one_minus_t() -> Self {
        let mut p = Self::constant(1);
        p.add_term(1, -1);
        p
    }

    pub fn coeffs(&self) -> &BTreeMap<u64, i64> {
        &self.coeffs
    }

    pub fn coeff(&self, degree: u64) -> i64 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, degree: u64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(degree).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&degree);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &other.coeffs {
            out.add_term(*d, *c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &other.coeffs {
            out.add_term(*d, -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (d1, c1) in &self.coeffs {
            for (d2, c2) in &other.coeffs {
                out.add_term(d1 + d2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::constant(1);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn eval<S: Scalar>(&self, value: &S) -> S {
        let mut acc = S::zero();
        for (d, c) in &self.coeffs {
            let mut term = S::from_int(*c);
            for _ in 0..*d {
                term = term * value.clone();
            }
            acc = acc + term;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}
