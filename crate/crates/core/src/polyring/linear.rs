use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{PolyError, Polynomial};
use crate::scalar::Coefficient;

/// A signed integer vector `c1*t1 + c2*t2 + c3*t3` in the `t`-basis of
/// `H^2(BT)`. Roots and the images of roots under Weyl group elements are
/// weights; unlike [`LinearForm`] they keep their sign.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Weight(pub [i64; 3]);

impl Weight {
    pub const ZERO: Weight = Weight([0, 0, 0]);

    /// `t_i` for `i` in `1..=3`.
    pub fn t(i: usize) -> Self {
        let mut c = [0; 3];
        c[i - 1] = 1;
        Weight(c)
    }

    /// `s_1 = t1 - t2`, `s_2 = t2 - t3`, `s_3 = t3 - t1`, for `i` in `1..=3`.
    pub fn s(i: usize) -> Self {
        Self::t(i) - Self::t(i % 3 + 1)
    }

    pub fn coeffs(&self) -> [i64; 3] {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0, 0, 0]
    }

    /// Standard inner product with `{t_i}` orthonormal.
    pub fn dot(&self, other: &Weight) -> i64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn to_polynomial<C: Coefficient>(&self) -> Polynomial<C> {
        Polynomial::linear(&self.0)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        self + (-rhs)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight([-self.0[0], -self.0[1], -self.0[2]])
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: Weight) -> Weight {
        Weight([self * rhs.0[0], self * rhs.0[1], self * rhs.0[2]])
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.0)
    }
}

/// A nonzero linear form up to sign and scaling: stored primitive, with its
/// first nonzero coefficient positive.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LinearForm([i64; 3]);

impl LinearForm {
    /// Normalizes `coeffs`; fails only on the zero vector.
    pub fn new(coeffs: [i64; 3]) -> Result<Self, PolyError> {
        let g = coeffs.iter().fold(0i64, |g, c| g.gcd(c));
        if g == 0 {
            return Err(PolyError::ZeroLinearForm);
        }
        let lead = coeffs.iter().copied().find(|c| *c != 0).unwrap();
        let g = if lead < 0 { -g } else { g };
        Ok(LinearForm([coeffs[0] / g, coeffs[1] / g, coeffs[2] / g]))
    }

    pub fn from_weight(w: &Weight) -> Result<Self, PolyError> {
        Self::new(w.0)
    }

    /// Builds the form only if `coeffs` is already in canonical form.
    pub fn from_canonical(coeffs: [i64; 3]) -> Result<Self, PolyError> {
        let form = Self::new(coeffs)?;
        if form.0 == coeffs {
            Ok(form)
        } else {
            Err(PolyError::NotCanonical(coeffs))
        }
    }

    pub fn coeffs(&self) -> [i64; 3] {
        self.0
    }

    pub fn as_weight(&self) -> Weight {
        Weight(self.0)
    }

    /// Index (0-based) of the first variable whose coefficient is `±1`.
    pub fn unit_variable(&self) -> Option<usize> {
        self.0.iter().position(|c| c.abs() == 1)
    }

    pub fn to_polynomial<C: Coefficient>(&self) -> Polynomial<C> {
        Polynomial::linear(&self.0)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.0)
    }
}

fn write_combination(f: &mut fmt::Formatter<'_>, coeffs: &[i64; 3]) -> fmt::Result {
    let mut first = true;
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else { "+" };
        if first {
            if c < 0 {
                f.write_str("-")?;
            }
        } else {
            write!(f, " {} ", sign)?;
        }
        if c.abs() != 1 {
            write!(f, "{}", c.abs())?;
        }
        write!(f, "t{}", i + 1)?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        assert_eq!(LinearForm::new([-2, 4, -2]).unwrap().coeffs(), [1, -2, 1]);
        assert_eq!(LinearForm::new([0, -3, 3]).unwrap().coeffs(), [0, 1, -1]);
        assert!(matches!(LinearForm::new([0, 0, 0]), Err(PolyError::ZeroLinearForm)));
        assert!(LinearForm::from_canonical([-1, 0, 1]).is_err());
        assert!(LinearForm::from_canonical([1, 0, -1]).is_ok());
    }

    #[test]
    fn s_basis() {
        assert_eq!(Weight::s(1), Weight([1, -1, 0]));
        assert_eq!(Weight::s(2), Weight([0, 1, -1]));
        assert_eq!(Weight::s(3), Weight([-1, 0, 1]));
        assert_eq!(Weight::s(1) + Weight::s(2) + Weight::s(3), Weight::ZERO);
    }

    #[test]
    fn display() {
        assert_eq!(Weight([1, -2, 1]).to_string(), "t1 - 2t2 + t3");
        assert_eq!(Weight([0, -1, 0]).to_string(), "-t2");
        assert_eq!(Weight::ZERO.to_string(), "0");
    }
}
