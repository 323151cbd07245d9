//! Run-mode selector for the two arithmetic backends.
//!
//! The context is carried as metadata on assembled systems and drives the
//! generic-instantiation choice at the entry points: `Double` runs kernels
//! at `f64`, `Extended` runs them at [`fe_core::BigReal`] inside a
//! [`fe_core::with_digits`] scope. One run sticks to one mode throughout.

use crate::error::SystemsError;

pub const DEFAULT_EXTENDED_DIGITS: u32 = 100;
pub const MIN_EXTENDED_DIGITS: u32 = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrecisionContext {
    Double,
    Extended { digits: u32 },
}

impl PrecisionContext {
    pub fn extended(digits: u32) -> Result<Self, SystemsError> {
        if digits < MIN_EXTENDED_DIGITS {
            return Err(SystemsError::InvalidDigits(digits));
        }
        Ok(PrecisionContext::Extended { digits })
    }

    pub fn digits(&self) -> u32 {
        match self {
            PrecisionContext::Double => 15,
            PrecisionContext::Extended { digits } => *digits,
        }
    }

    pub fn is_extended(&self) -> bool {
        matches!(self, PrecisionContext::Extended { .. })
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext::Double
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_floor() {
        assert!(PrecisionContext::extended(29).is_err());
        assert_eq!(PrecisionContext::extended(30).unwrap().digits(), 30);
        assert_eq!(PrecisionContext::Double.digits(), 15);
    }
}
