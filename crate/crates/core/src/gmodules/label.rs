use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Identity card of a simple restricted W(1)-module.
///
/// `lambda` is the highest-weight label of `L(λ)`; `lowest_weight` is the
/// e_0-weight `μ` of the (unique up to scalar) vector killed by e_{-1}, i.e.
/// the module is `L⁻(μ)`. The two labels determine each other:
/// `μ = 0 ⇔ λ = 0`, `μ = 1 ⇔ λ = p-1`, and `μ = λ + 1` for `1 <= λ <= p-2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SimpleLabel {
    pub lambda: u64,
    pub lowest_weight: u64,
    pub dim: usize,
}

impl SimpleLabel {
    pub fn from_lambda(p: u64, lambda: u64) -> Result<Self> {
        if lambda >= p {
            return Err(Error::LabelOutOfRange { lambda, p });
        }
        let (lowest_weight, dim) = if lambda == 0 {
            (0, 1)
        } else if lambda == p - 1 {
            (1, p as usize - 1)
        } else {
            (lambda + 1, p as usize)
        };
        Ok(Self {
            lambda,
            lowest_weight,
            dim,
        })
    }

    pub fn from_lowest_weight(p: u64, mu: u64) -> Result<Self> {
        if mu >= p {
            return Err(Error::LabelOutOfRange { lambda: mu, p });
        }
        let lambda = match mu {
            0 => 0,
            1 => p - 1,
            _ => mu - 1,
        };
        Self::from_lambda(p, lambda)
    }

    /// Label of `L⁻(ī)` for an arbitrary integer `i`.
    pub fn from_lowest_degree(p: u64, i: i64) -> Self {
        Self::from_lowest_weight(p, i.rem_euclid(p as i64) as u64).expect("reduced mod p")
    }

    pub fn highest(&self) -> String {
        format!("L({})", self.lambda)
    }

    pub fn lowest(&self) -> String {
        format!("L⁻({})", self.lowest_weight)
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.highest(), self.lowest())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn correspondence_and_dims() {
        let p = 7;
        let l0 = SimpleLabel::from_lambda(p, 0).unwrap();
        assert_eq!((l0.lowest_weight, l0.dim), (0, 1));
        let top = SimpleLabel::from_lambda(p, 6).unwrap();
        assert_eq!((top.lowest_weight, top.dim), (1, 6));
        let mid = SimpleLabel::from_lambda(p, 3).unwrap();
        assert_eq!((mid.lowest_weight, mid.dim), (4, 7));
        for mu in 0..p {
            assert_eq!(
                SimpleLabel::from_lowest_weight(p, mu).unwrap().lowest_weight,
                mu
            );
        }
        assert!(SimpleLabel::from_lambda(p, 7).is_err());
    }

    #[test]
    fn reduction_of_degrees() {
        assert_eq!(SimpleLabel::from_lowest_degree(5, 5).lambda, 0);
        assert_eq!(SimpleLabel::from_lowest_degree(5, 4).lambda, 3);
        assert_eq!(SimpleLabel::from_lowest_degree(7, 2).highest(), "L(1)");
        assert_eq!(SimpleLabel::from_lowest_degree(7, 6).lowest(), "L⁻(6)");
    }
}
