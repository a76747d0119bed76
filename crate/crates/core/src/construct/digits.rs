use std::fmt;

use crate::error::{Error, Result};

/// Little-endian base-`b` digits `c_0, c_1, ...` of a path-length offset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitVector {
    base: u64,
    digits: Vec<u64>,
}

impl DigitVector {
    pub fn new(base: u64, digits: Vec<u64>) -> Result<Self> {
        if base < 2 {
            return Err(Error::InvalidInput(format!("base must be >= 2, got {base}")));
        }
        if let Some(&d) = digits.iter().find(|&&d| d >= base) {
            return Err(Error::InvalidInput(format!("digit {d} out of range for base {base}")));
        }
        Ok(DigitVector { base, digits })
    }

    /// The unique `width`-digit expansion of `value`; fails if `value >= base^width`.
    pub fn from_value(value: u64, base: u64, width: usize) -> Result<Self> {
        if base < 2 {
            return Err(Error::InvalidInput(format!("base must be >= 2, got {base}")));
        }
        let mut rest = value;
        let mut digits = Vec::with_capacity(width);
        for _ in 0..width {
            digits.push(rest % base);
            rest /= base;
        }
        if rest != 0 {
            return Err(Error::InvalidInput(format!(
                "{value} needs more than {width} base-{base} digits"
            )));
        }
        Ok(DigitVector { base, digits })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn width(&self) -> usize {
        self.digits.len()
    }

    /// `sum c_e * b^e`.
    pub fn value(&self) -> u64 {
        self.digits.iter().rev().fold(0, |acc, &d| acc * self.base + d)
    }
}

impl fmt::Display for DigitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")_{}", self.base)
    }
}
