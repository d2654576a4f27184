//! Sparse polynomials in `t1, t2, t3` over an exact coefficient ring.
//!
//! A [`Polynomial`] is a map from exponent triples to nonzero coefficients.
//! The map is kept canonical after every operation, so structural equality is
//! polynomial equality.

mod json;
mod linear;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

pub use linear::{LinearForm, Weight};

use crate::scalar::{Coefficient, IntegralDomain};

/// Exponents of `(t1, t2, t3)`.
pub type Exponent = [u32; 3];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial is not divisible by {0}")]
    NotDivisible(LinearForm),
    #[error("linear form {0} has no coefficient equal to +-1")]
    NoUnitCoefficient(LinearForm),
    #[error("the zero vector is not a linear form")]
    ZeroLinearForm,
    #[error("linear form {0:?} is not primitive with positive leading coefficient")]
    NotCanonical([i64; 3]),
    #[error("polynomial is not homogeneous of degree 1")]
    NotLinear,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<C> {
    terms: BTreeMap<Exponent, C>,
}

impl<C: Coefficient> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial([0, 0, 0], c)
    }

    /// The variable `t_i`, `i` in `1..=3`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i - 1] = 1;
        Self::monomial(e, C::one())
    }

    pub fn monomial(exponent: Exponent, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Polynomial { terms }
    }

    pub fn linear(coeffs: &[i64; 3]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| {
            let mut e = [0; 3];
            e[i] = 1;
            (e, C::from_int(c))
        }))
    }

    /// Sums the given terms; repeated exponents are merged.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Terms in increasing lexicographic order of exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &C)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &Exponent) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(total_degree).max()
    }

    /// The zero polynomial counts as homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(total_degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn is_homogeneous_of_degree(&self, degree: u32) -> bool {
        self.terms.keys().all(|e| total_degree(e) == degree)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(e, a)| (*e, a.clone() * c.clone())).collect() }
    }

    /// Multiplies by the monomial `t^shift`.
    pub fn shift(&self, shift: &Exponent) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0] + shift[0], e[1] + shift[1], e[2] + shift[2]], c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, point: &[C; 3]) -> C {
        let mut sum = C::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (x, &k) in point.iter().zip(e.iter()) {
                for _ in 0..k {
                    v = v * x.clone();
                }
            }
            sum = sum + v;
        }
        sum
    }

    /// Splits `self` as `sum_d part_d * t_var^d`, with `t_var` removed from
    /// each `part_d`.
    fn collect_in(&self, var: usize) -> BTreeMap<u32, Polynomial<C>> {
        let mut parts: BTreeMap<u32, Polynomial<C>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[var] = 0;
            parts.entry(e[var]).or_default().terms.insert(rest, c.clone());
        }
        parts
    }

    /// Restricts `self` to the hyperplane `form = 0` by solving for a variable
    /// whose coefficient in `form` is `±1`. The result no longer involves that
    /// variable and vanishes exactly when `form` divides `self`.
    pub fn substitute_eliminating(&self, form: &LinearForm) -> Result<Self, PolyError> {
        let var = form.unit_variable().ok_or(PolyError::NoUnitCoefficient(*form))?;
        let c = form.coeffs();
        // t_var = -c_var * sum_{i != var} c_i t_i, using c_var^{-1} = c_var.
        let mut image = [0i64; 3];
        for i in 0..3 {
            if i != var {
                image[i] = -c[var] * c[i];
            }
        }
        let image = Self::linear(&image);
        let mut out = Self::zero();
        let mut power = Self::one();
        let mut power_deg = 0;
        for (d, part) in self.collect_in(var) {
            while power_deg < d {
                power = &power * &image;
                power_deg += 1;
            }
            out = out + &part * &power;
        }
        Ok(out)
    }

    /// Exact quotient `self / form`, or [`PolyError::NotDivisible`].
    ///
    /// When `form` has a unit coefficient this is long division in that
    /// variable, which never leaves the integers. Otherwise it falls back to
    /// lexicographic multivariate division.
    pub fn div_exact_linear(&self, form: &LinearForm) -> Result<Self, PolyError> {
        let Some(var) = form.unit_variable() else {
            return self.div_exact(&form.to_polynomial()).ok_or(PolyError::NotDivisible(*form));
        };
        let unit = C::from_int(form.coeffs()[var]);
        let divisor: Self = form.to_polynomial();
        let mut quotient = Self::zero();
        let mut rem = self.clone();
        loop {
            let parts = rem.collect_in(var);
            let Some((&d, top)) = parts.iter().next_back() else { break };
            if d == 0 {
                break;
            }
            let mut e = [0; 3];
            e[var] = d - 1;
            let step = top.shift(&e).scale(&unit);
            rem = rem - &step * &divisor;
            quotient = quotient + step;
        }
        if rem.is_zero() {
            Ok(quotient)
        } else {
            Err(PolyError::NotDivisible(*form))
        }
    }

    /// Exact quotient by an arbitrary nonzero polynomial, via lexicographic
    /// long division. Returns `None` when the divisor does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lead_e, lead_c) = divisor.terms.iter().next_back()?;
        let mut quotient = Self::zero();
        let mut rem = self.clone();
        while let Some((e, c)) = rem.terms.iter().next_back() {
            if (0..3).any(|i| e[i] < lead_e[i]) {
                return None;
            }
            let q = IntegralDomain::div_exact(c, lead_c)?;
            let shift = [e[0] - lead_e[0], e[1] - lead_e[1], e[2] - lead_e[2]];
            let step = Self::monomial(shift, q);
            rem = rem - &step * divisor;
            quotient = quotient + step;
        }
        Some(quotient)
    }

    /// Writes a degree-1 homogeneous polynomial as `scale * form` with `form`
    /// canonical.
    pub fn as_linear_form(&self) -> Result<(C, LinearForm), PolyError> {
        if self.is_zero() || self.degree() != Some(1) || !self.is_homogeneous() {
            return Err(PolyError::NotLinear);
        }
        let mut c = [0i64; 3];
        for (e, a) in &self.terms {
            let i = e.iter().position(|&k| k == 1).unwrap();
            c[i] = a.to_i64().ok_or(PolyError::NotLinear)?;
        }
        let form = LinearForm::new(c)?;
        let i = c.iter().position(|&x| x != 0).unwrap();
        Ok((C::from_int(c[i] / form.coeffs()[i]), form))
    }

    /// Exact quotient by a degree-1 polynomial (not necessarily primitive).
    pub fn div_exact_by_linear_poly(&self, divisor: &Self) -> Result<Self, PolyError> {
        let (scale, form) = divisor.as_linear_form()?;
        let q = self.div_exact_linear(&form)?;
        let mut out = Self::zero();
        for (e, c) in q.terms {
            let c = IntegralDomain::div_exact(&c, &scale).ok_or(PolyError::NotDivisible(form))?;
            out.terms.insert(e, c);
        }
        Ok(out)
    }

    /// `self(images[0], images[1], images[2])`.
    pub fn substitute(&self, images: &[Polynomial<C>; 3]) -> Self {
        let mut powers: [Vec<Polynomial<C>>; 3] = [vec![Self::one()], vec![Self::one()], vec![Self::one()]];
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            for i in 0..3 {
                while powers[i].len() <= e[i] as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e[i] as usize];
            }
            out = out + term;
        }
        out
    }

    /// Converts coefficients into another coefficient ring.
    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

pub fn total_degree(e: &Exponent) -> u32 {
    e[0] + e[1] + e[2]
}

/// All exponent triples of total degree `k`, in increasing lexicographic order.
/// There are `(k+1)(k+2)/2` of them.
pub fn monomials_of_degree(k: u32) -> Vec<Exponent> {
    let mut out = Vec::with_capacity(((k + 1) * (k + 2) / 2) as usize);
    for a in 0..=k {
        for b in 0..=k - a {
            out.push([a, b, k - a - b]);
        }
    }
    out
}

/// `e_i(x1, x2, x3)` for `i` in `1..=3`.
pub fn elementary_symmetric<C: Coefficient>(i: usize, args: &[Polynomial<C>; 3]) -> Polynomial<C> {
    let [a, b, c] = args;
    match i {
        1 => a + b + c,
        2 => &(a * b) + &(a * c) + &(b * c),
        3 => &(a * b) * c,
        _ => panic!("elementary symmetric index must be 1, 2 or 3, got {i}"),
    }
}

/// `s_1 = t1 - t2`, `s_2 = t2 - t3`, `s_3 = t3 - t1`.
pub fn s<C: Coefficient>(i: usize) -> Polynomial<C> {
    Weight::s(i).to_polynomial()
}

pub fn t<C: Coefficient>(i: usize) -> Polynomial<C> {
    Polynomial::var(i)
}

impl<'a, C: Coefficient> Add<&'a Polynomial<C>> for &'a Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Add for Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(mut self, rhs: Polynomial<C>) -> Polynomial<C> {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<C: Coefficient> Add<&Polynomial<C>> for Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(mut self, rhs: &Polynomial<C>) -> Polynomial<C> {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
        self
    }
}

impl<C: Coefficient> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -self.clone()
    }
}

impl<'a, C: Coefficient> Sub<&'a Polynomial<C>> for &'a Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.clone() - rhs
    }
}

impl<C: Coefficient> Sub for Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Polynomial<C>) -> Polynomial<C> {
        self - &rhs
    }
}

impl<C: Coefficient> Sub<&Polynomial<C>> for Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(mut self, rhs: &Polynomial<C>) -> Polynomial<C> {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
        self
    }
}

impl<'a, C: Coefficient> Mul<&'a Polynomial<C>> for &'a Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> IntegralDomain for Polynomial<C> {
    fn zero_element() -> Self {
        Self::zero()
    }
    fn one_element() -> Self {
        Self::one()
    }
    fn is_zero_element(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        Polynomial::div_exact(self, divisor)
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let is_const = *e == [0, 0, 0];
            if !abs.is_one() || is_const {
                write!(f, "{}", abs)?;
                if !is_const {
                    f.write_str("*")?;
                }
            }
            let mut first = true;
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "t{}", i + 1)?;
                if k > 1 {
                    write!(f, "^{}", k)?;
                }
            }
        }
        Ok(())
    }
}
