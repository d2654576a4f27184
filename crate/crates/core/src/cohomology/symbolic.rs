//! Polynomial expressions in `tau1, tau2, tau3, f` with coefficients in
//! `Z[t1,t2,t3]`, and their reduction to the standard basis.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::generators::{f_value, tau_value, GeneratorSet};
use super::{CohomologyClass, CohomologyError};
use crate::gkmgraph::LabeledGraph;
use crate::polyring::{elementary_symmetric, s, t, Polynomial};
use crate::rootsys::{RootSystem, WeylElement};
use crate::scalar::Coefficient;

/// `tau1^a tau2^b tau3^c f^d`. Ordered by weighted degree (`tau` weighs 1,
/// `f` weighs 3), then by the `tau3`, `tau2`, `tau1` exponents; every rewrite
/// in [`normal_form`] strictly lowers this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct SymbolMonomial {
    pub tau: [u32; 3],
    pub f: u32,
}

impl SymbolMonomial {
    pub const ONE: SymbolMonomial = SymbolMonomial { tau: [0; 3], f: 0 };

    pub fn tau(i: usize) -> Self {
        let mut m = Self::ONE;
        m.tau[i - 1] = 1;
        m
    }

    pub fn f() -> Self {
        SymbolMonomial { tau: [0; 3], f: 1 }
    }

    pub fn weight(&self) -> u32 {
        self.tau.iter().sum::<u32>() + 3 * self.f
    }

    fn key(&self) -> (u32, u32, u32, u32, u32) {
        (self.weight(), self.tau[2], self.tau[1], self.tau[0], self.f)
    }

    fn times(&self, other: &Self) -> Self {
        SymbolMonomial { tau: [0, 1, 2].map(|i| self.tau[i] + other.tau[i]), f: self.f + other.f }
    }

    /// The value at a vertex, in the generator classes of `system`.
    pub fn evaluate_at<C: Coefficient>(&self, system: RootSystem, w: &WeylElement) -> Polynomial<C> {
        let mut out = Polynomial::one();
        for i in 0..3 {
            if self.tau[i] > 0 {
                out = &out * &tau_value::<C>(system, w, i + 1).pow(self.tau[i]);
            }
        }
        if self.f > 0 {
            out = &out * &f_value::<C>(w).pow(self.f);
        }
        out
    }
}

impl Ord for SymbolMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for SymbolMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SymbolMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for i in 0..3 {
            match self.tau[i] {
                0 => {}
                1 => parts.push(format!("tau{}", i + 1)),
                e => parts.push(format!("tau{}^{e}", i + 1)),
            }
        }
        match self.f {
            0 => {}
            1 => parts.push("f".to_string()),
            e => parts.push(format!("f^{e}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolPoly<C> {
    terms: BTreeMap<SymbolMonomial, Polynomial<C>>,
}

impl<C: Coefficient> Default for SymbolPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> SymbolPoly<C> {
    pub fn zero() -> Self {
        SymbolPoly { terms: BTreeMap::new() }
    }

    pub fn constant(p: Polynomial<C>) -> Self {
        Self::term(SymbolMonomial::ONE, p)
    }

    pub fn term(m: SymbolMonomial, c: Polynomial<C>) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn tau(i: usize) -> Self {
        Self::term(SymbolMonomial::tau(i), Polynomial::one())
    }

    pub fn f() -> Self {
        Self::term(SymbolMonomial::f(), Polynomial::one())
    }

    pub fn add_term(&mut self, m: SymbolMonomial, c: Polynomial<C>) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Polynomial::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SymbolMonomial, &Polynomial<C>)> + '_ {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common total degree of the terms, counting `tau` as 1, `f` as 3 and
    /// the coefficient's own degree. `None` for zero or inhomogeneous input.
    pub fn degree(&self) -> Option<u32> {
        let mut degrees =
            self.terms.iter().map(|(m, c)| if c.is_homogeneous() { c.degree().map(|d| d + m.weight()) } else { None });
        let first = degrees.next()??;
        degrees.all(|d| d == Some(first)).then_some(first)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant(Polynomial::one());
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn evaluate_at(&self, system: RootSystem, w: &WeylElement) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out = out + &(c * &m.evaluate_at(system, w));
        }
        out
    }

    /// The class taking the value of `self` at every vertex of `graph`.
    pub fn evaluate(&self, graph: Arc<LabeledGraph>, degree: u32) -> Result<CohomologyClass<C>, CohomologyError> {
        let system = graph.system();
        CohomologyClass::from_fn(graph, degree, |w| self.evaluate_at(system, w))
    }
}

impl<C: Coefficient> Add for &SymbolPoly<C> {
    type Output = SymbolPoly<C>;
    fn add(self, rhs: Self) -> SymbolPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Neg for &SymbolPoly<C> {
    type Output = SymbolPoly<C>;
    fn neg(self) -> SymbolPoly<C> {
        SymbolPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl<C: Coefficient> Sub for &SymbolPoly<C> {
    type Output = SymbolPoly<C>;
    fn sub(self, rhs: Self) -> SymbolPoly<C> {
        self + &-rhs
    }
}

impl<C: Coefficient> Mul for &SymbolPoly<C> {
    type Output = SymbolPoly<C>;
    fn mul(self, rhs: Self) -> SymbolPoly<C> {
        let mut out = SymbolPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }
}

impl<C: Coefficient> fmt::Display for SymbolPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().rev().map(|(m, c)| format!("({c})*{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `tau1^i1 tau2^i2 f^j` with `i1 <= 2`, `i2 <= 1`, `j <= 1` (`j = 0` on `A2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisMonomial {
    pub tau1: u32,
    pub tau2: u32,
    pub f: u32,
}

impl BasisMonomial {
    pub fn all(system: RootSystem) -> Vec<BasisMonomial> {
        let f_max = match system {
            RootSystem::A2 => 0,
            RootSystem::G2 => 1,
        };
        let mut out = Vec::new();
        for tau1 in 0..=2 {
            for tau2 in 0..=1 {
                for f in 0..=f_max {
                    out.push(BasisMonomial { tau1, tau2, f });
                }
            }
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.tau1 + self.tau2 + 3 * self.f
    }

    pub fn to_symbol(&self) -> SymbolMonomial {
        SymbolMonomial { tau: [self.tau1, self.tau2, 0], f: self.f }
    }

    fn from_symbol(m: &SymbolMonomial) -> Option<Self> {
        (m.tau[2] == 0 && m.tau[0] <= 2 && m.tau[1] <= 1 && m.f <= 1).then_some(BasisMonomial {
            tau1: m.tau[0],
            tau2: m.tau[1],
            f: m.f,
        })
    }

    pub fn evaluate_at<C: Coefficient>(&self, system: RootSystem, w: &WeylElement) -> Polynomial<C> {
        self.to_symbol().evaluate_at(system, w)
    }
}

/// `"tau1^2 tau2^0 f^1"`.
impl fmt::Display for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tau1^{} tau2^{} f^{}", self.tau1, self.tau2, self.f)
    }
}

impl FromStr for BasisMonomial {
    type Err = CohomologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CohomologyError::Malformed(format!("bad basis monomial {s:?}"));
        let parts: Vec<&str> = s.split(' ').collect();
        let [a, b, c] = parts[..] else { return Err(bad()) };
        let exp = |part: &str, name: &str| -> Result<u32, CohomologyError> {
            part.strip_prefix(name).and_then(|e| e.strip_prefix('^')).and_then(|e| e.parse().ok()).ok_or_else(bad)
        };
        let m = BasisMonomial { tau1: exp(a, "tau1")?, tau2: exp(b, "tau2")?, f: exp(c, "f")? };
        if m.tau1 > 2 || m.tau2 > 1 || m.f > 1 {
            return Err(bad());
        }
        Ok(m)
    }
}

/// A class written as `sum_m c_m(t) * m` over the standard basis. Every basis
/// monomial of the system is present, most with zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCertificate<C> {
    system: RootSystem,
    degree: u32,
    coefficients: BTreeMap<BasisMonomial, Polynomial<C>>,
}

impl<C: Coefficient> ReductionCertificate<C> {
    /// Each coefficient must be zero or homogeneous of degree
    /// `degree - deg(m)`.
    pub fn new(
        system: RootSystem,
        degree: u32,
        coefficients: BTreeMap<BasisMonomial, Polynomial<C>>,
    ) -> Result<Self, CohomologyError> {
        let basis = BasisMonomial::all(system);
        if let Some(m) = coefficients.keys().find(|m| !basis.contains(m)) {
            return Err(CohomologyError::Malformed(format!("{m} is not a basis monomial for {system}")));
        }
        let mut full = BTreeMap::new();
        for m in basis {
            let c = coefficients.get(&m).cloned().unwrap_or_else(Polynomial::zero);
            let ok = c.is_zero() || (m.degree() <= degree && c.is_homogeneous_of_degree(degree - m.degree()));
            if !ok {
                return Err(CohomologyError::Malformed(format!("coefficient of {m} has the wrong degree")));
            }
            full.insert(m, c);
        }
        Ok(ReductionCertificate { system, degree, coefficients: full })
    }

    pub fn system(&self) -> RootSystem {
        self.system
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficient(&self, m: &BasisMonomial) -> &Polynomial<C> {
        &self.coefficients[m]
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&BasisMonomial, &Polynomial<C>)> + '_ {
        self.coefficients.iter()
    }

    pub fn to_symbol(&self) -> SymbolPoly<C> {
        let mut out = SymbolPoly::zero();
        for (m, c) in &self.coefficients {
            out.add_term(m.to_symbol(), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> CertificateJson<C> {
        CertificateJson {
            system: self.system,
            degree: self.degree,
            coeffs: self.coefficients.iter().map(|(m, c)| (m.to_string(), c.clone())).collect(),
        }
    }

    pub fn from_json(json: &CertificateJson<C>) -> Result<Self, CohomologyError> {
        let mut coefficients = BTreeMap::new();
        for (name, c) in &json.coeffs {
            coefficients.insert(name.parse()?, c.clone());
        }
        Self::new(json.system, json.degree, coefficients)
    }
}

/// `{"system":"g2","degree":k,"coeffs":{"tau1^0 tau2^0 f^0":<polynomial>,...}}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(bound(serialize = "C: Coefficient", deserialize = "C: Coefficient"))]
pub struct CertificateJson<C> {
    pub system: RootSystem,
    pub degree: u32,
    pub coeffs: BTreeMap<String, Polynomial<C>>,
}

/// Rewrites `e_1, e_2, e_3` of the `tau`s and `f^2` for one system.
struct Rules<C> {
    e1: SymbolPoly<C>,
    e2: SymbolPoly<C>,
    e3: SymbolPoly<C>,
    f_squared: Option<SymbolPoly<C>>,
}

impl<C: Coefficient> Rules<C> {
    fn new(system: RootSystem) -> Self {
        match system {
            RootSystem::A2 => {
                let ts = [t(1), t(2), t(3)];
                Rules {
                    e1: SymbolPoly::constant(elementary_symmetric(1, &ts)),
                    e2: SymbolPoly::constant(elementary_symmetric(2, &ts)),
                    e3: SymbolPoly::constant(elementary_symmetric(3, &ts)),
                    f_squared: None,
                }
            }
            RootSystem::G2 => {
                let ss = [s(1), s(2), s(3)];
                let e3s = elementary_symmetric(3, &ss);
                let two_f = SymbolPoly::term(SymbolMonomial::f(), Polynomial::constant(C::from_int(2)));
                Rules {
                    e1: SymbolPoly::zero(),
                    e2: SymbolPoly::constant(elementary_symmetric(2, &ss)),
                    e3: &two_f - &SymbolPoly::constant(e3s.clone()),
                    f_squared: Some(SymbolPoly::term(SymbolMonomial::f(), e3s)),
                }
            }
        }
    }

    /// The replacement for the leading factor of a reducible monomial, and
    /// the cofactor left over.
    fn rewrite(&self, m: &SymbolMonomial) -> Option<(SymbolPoly<C>, SymbolMonomial)> {
        let (t1, t2) = (SymbolPoly::tau(1), SymbolPoly::tau(2));
        let mut rest = *m;
        if m.tau[2] > 0 {
            rest.tau[2] -= 1;
            return Some((&(&self.e1 - &t1) - &t2, rest));
        }
        if m.tau[1] >= 2 {
            rest.tau[1] -= 2;
            let e1_sum = &self.e1 * &(&t1 + &t2);
            let replacement = &(&e1_sum - &(&t1 * &t1)) - &(&(&t1 * &t2) + &self.e2);
            return Some((replacement, rest));
        }
        if m.tau[0] >= 3 {
            rest.tau[0] -= 3;
            let replacement = &(&(&self.e1 * &(&t1 * &t1)) - &(&self.e2 * &t1)) + &self.e3;
            return Some((replacement, rest));
        }
        if m.f >= 2 {
            rest.f -= 2;
            return self.f_squared.clone().map(|r| (r, rest));
        }
        None
    }
}

/// Rewrites `expr` into the standard basis using
/// `tau3 -> e1 - tau1 - tau2`, the quadratic relation for `tau2^2`, the cubic
/// satisfied by `tau1`, and `f^2 -> e3(s) f`.
pub fn normal_form<C: Coefficient>(
    system: RootSystem,
    expr: &SymbolPoly<C>,
) -> Result<ReductionCertificate<C>, CohomologyError> {
    let degree = match expr.degree() {
        Some(d) => d,
        None if expr.is_zero() => 0,
        None => return Err(CohomologyError::Malformed("expression is not homogeneous".into())),
    };
    let rules = Rules::<C>::new(system);
    let mut work: BTreeMap<SymbolMonomial, Polynomial<C>> = expr.terms.clone();
    let mut done = BTreeMap::new();
    while let Some((m, c)) = work.pop_last() {
        if c.is_zero() {
            continue;
        }
        if let Some(b) = BasisMonomial::from_symbol(&m).filter(|b| system == RootSystem::G2 || b.f == 0) {
            done.insert(b, c);
            continue;
        }
        let (replacement, rest) =
            rules.rewrite(&m).ok_or_else(|| CohomologyError::Malformed(format!("{m} has no reduction on {system}")))?;
        for (rm, rc) in replacement.terms() {
            let key = rm.times(&rest);
            debug_assert!(key < m);
            let entry = work.entry(key).or_insert_with(Polynomial::zero);
            *entry = &*entry + &(rc * &c);
        }
    }
    ReductionCertificate::new(system, degree, done)
}

/// `sum_m c_m * m` computed in the generator classes.
pub fn evaluate_certificate<C: Coefficient>(
    cert: &ReductionCertificate<C>,
    gs: &GeneratorSet<C>,
) -> Result<CohomologyClass<C>, CohomologyError> {
    let graph = gs.graph().clone();
    if graph.system() != cert.system {
        return Err(CohomologyError::Malformed("certificate and generators are for different systems".into()));
    }
    let one = CohomologyClass::constant(graph.clone(), Polynomial::one())?;
    let mut out = CohomologyClass::zero(graph, cert.degree);
    for (m, c) in &cert.coefficients {
        if c.is_zero() {
            continue;
        }
        let mut term = one.clone();
        for _ in 0..m.tau1 {
            term = &term * &gs.tau[0];
        }
        for _ in 0..m.tau2 {
            term = &term * &gs.tau[1];
        }
        if m.f > 0 {
            let f = gs.f.as_ref().ok_or_else(|| CohomologyError::Malformed("no f on this graph".into()))?;
            term = &term * f;
        }
        out = &out + &term.scale_by(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::make_generators;
    use crate::gkmgraph::{build_from_root_system, build_g2_combinatorial};
    use num_bigint::BigInt;

    type P = Polynomial<BigInt>;

    fn g2() -> Arc<LabeledGraph> {
        Arc::new(build_g2_combinatorial())
    }

    #[test]
    fn basis_names_round_trip() {
        let all = BasisMonomial::all(RootSystem::G2);
        assert_eq!(all.len(), 12);
        assert_eq!(BasisMonomial::all(RootSystem::A2).len(), 6);
        for m in all {
            assert_eq!(m.to_string().parse::<BasisMonomial>().unwrap(), m);
        }
        assert_eq!(BasisMonomial { tau1: 2, tau2: 0, f: 1 }.to_string(), "tau1^2 tau2^0 f^1");
        assert!("tau1^3 tau2^0 f^0".parse::<BasisMonomial>().is_err());
        assert!("tau2^0 tau1^0 f^0".parse::<BasisMonomial>().is_err());
    }

    #[test]
    fn relations_reduce_to_zero() {
        let tau = [1, 2, 3].map(SymbolPoly::<BigInt>::tau);
        let sum = &(&tau[0] + &tau[1]) + &tau[2];
        assert!(normal_form(RootSystem::G2, &sum).unwrap().to_symbol().is_zero());

        let f = SymbolPoly::<BigInt>::f();
        let e3s: P = &(&s(1) * &s(2)) * &s(3);
        let rel = &(&f * &f) - &(&f * &SymbolPoly::constant(e3s));
        assert!(normal_form(RootSystem::G2, &rel).unwrap().to_symbol().is_zero());
    }

    #[test]
    fn tau1_cubed() {
        let cube = SymbolPoly::<BigInt>::tau(1).pow(3);
        let cert = normal_form(RootSystem::G2, &cube).unwrap();
        let e2s: P = elementary_symmetric(2, &[s(1), s(2), s(3)]);
        let e3s: P = elementary_symmetric(3, &[s(1), s(2), s(3)]);
        assert_eq!(*cert.coefficient(&BasisMonomial { tau1: 1, tau2: 0, f: 0 }), -e2s);
        assert_eq!(*cert.coefficient(&BasisMonomial { tau1: 0, tau2: 0, f: 1 }), P::constant(BigInt::from(2)));
        assert_eq!(*cert.coefficient(&BasisMonomial { tau1: 0, tau2: 0, f: 0 }), -e3s);
    }

    #[test]
    fn normal_form_preserves_values() {
        for graph in [g2(), Arc::new(build_from_root_system(RootSystem::A2))] {
            let system = graph.system();
            let gs = make_generators::<BigInt>(graph.clone()).unwrap();
            let mut expr = &SymbolPoly::tau(3).pow(4) * &SymbolPoly::tau(2).pow(2);
            expr = &expr + &(&SymbolPoly::constant(t(1).pow(3)) * &SymbolPoly::tau(2).pow(3));
            if system == RootSystem::G2 {
                expr = &expr - &SymbolPoly::f().pow(2);
                expr = &expr + &(&SymbolPoly::f() * &SymbolPoly::tau(1).pow(3));
            }
            let degree = expr.degree().unwrap();
            let cert = normal_form(system, &expr).unwrap();
            let direct = expr.evaluate(graph.clone(), degree).unwrap();
            assert_eq!(evaluate_certificate(&cert, &gs).unwrap(), direct);
            assert_eq!(cert.to_symbol().evaluate(graph, degree).unwrap(), direct);
        }
    }

    #[test]
    fn certificate_json_round_trip() {
        let cert = normal_form(RootSystem::G2, &SymbolPoly::<BigInt>::tau(2).pow(5)).unwrap();
        let json = serde_json::to_string(&cert.to_json()).unwrap();
        let back: CertificateJson<BigInt> = serde_json::from_str(&json).unwrap();
        assert_eq!(ReductionCertificate::from_json(&back).unwrap(), cert);
        assert_eq!(back.coeffs.len(), 12);
    }

    #[test]
    fn inhomogeneous_expressions_are_rejected() {
        let expr = &SymbolPoly::<BigInt>::tau(1) + &SymbolPoly::f();
        assert!(normal_form(RootSystem::G2, &expr).is_err());
        assert!(normal_form(RootSystem::A2, &SymbolPoly::<BigInt>::f()).is_err());
    }
}
