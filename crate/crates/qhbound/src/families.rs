//! Parameter families of the lattice subsystem codes.
//!
//! These are pure formula evaluations; [`crate::lattice`] builds the codes
//! concretely and [`crate::distance`] confirms the distances by brute force.

use thiserror::Error;

use crate::bounds::CodeParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("lattice sides must be at least 1")]
    ZeroSide,
    #[error("family index t must be at least 1")]
    ZeroIndex,
    #[error("family parameters overflow the supported integer range")]
    Overflow,
}

/// `[[ab, 1, (a-1)(b-1), min(a, b)]]`: the code of an a x b lattice.
pub fn rect_family(a: u64, b: u64) -> Result<CodeParams, FamilyError> {
    if a == 0 || b == 0 {
        return Err(FamilyError::ZeroSide);
    }
    let n = a.checked_mul(b).ok_or(FamilyError::Overflow)?;
    let r = (a - 1).checked_mul(b - 1).ok_or(FamilyError::Overflow)?;
    let d = a.min(b);
    Ok(CodeParams::new(n, 1, r, d).expect("family parameters are always valid"))
}

/// `[[a^2, 1, (a-1)^2, a]]`: the square-lattice family.
pub fn square_family(a: u64) -> Result<CodeParams, FamilyError> {
    rect_family(a, a)
}

/// `[[(2t+1)^2, 1, 4t^2, 2t+1]]`: the odd-sided square family, indexed by
/// `t >= 1` so that the distance is `2t + 1`.
pub fn odd_family(t: u64) -> Result<CodeParams, FamilyError> {
    if t == 0 {
        return Err(FamilyError::ZeroIndex);
    }
    let side = t
        .checked_mul(2)
        .and_then(|x| x.checked_add(1))
        .ok_or(FamilyError::Overflow)?;
    square_family(side)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_members() {
        assert_eq!(square_family(3).unwrap().to_string(), "[[9,1,4,3]]");
        assert_eq!(square_family(1).unwrap().to_string(), "[[1,1,0,1]]");
        assert_eq!(rect_family(3, 4).unwrap().to_string(), "[[12,1,6,3]]");
        assert_eq!(rect_family(1, 7).unwrap().to_string(), "[[7,1,0,1]]");
        assert_eq!(odd_family(1).unwrap().to_string(), "[[9,1,4,3]]");
        assert_eq!(odd_family(2).unwrap().to_string(), "[[25,1,16,5]]");
    }

    #[test]
    fn rejects_degenerate_arguments() {
        assert_eq!(rect_family(0, 3), Err(FamilyError::ZeroSide));
        assert_eq!(rect_family(3, 0), Err(FamilyError::ZeroSide));
        assert_eq!(square_family(0), Err(FamilyError::ZeroSide));
        assert_eq!(odd_family(0), Err(FamilyError::ZeroIndex));
    }

    #[test]
    fn rejects_overflowing_sides() {
        assert_eq!(rect_family(u64::MAX, 2), Err(FamilyError::Overflow));
        assert_eq!(odd_family(u64::MAX), Err(FamilyError::Overflow));
    }

    proptest! {
        #[test]
        fn odd_family_is_the_odd_square_slice(t in 1u64..=2000) {
            prop_assert_eq!(odd_family(t).unwrap(), square_family(2 * t + 1).unwrap());
        }

        #[test]
        fn rect_family_is_symmetric(a in 1u64..=2000, b in 1u64..=2000) {
            prop_assert_eq!(rect_family(a, b).unwrap(), rect_family(b, a).unwrap());
        }

        #[test]
        fn stabilizer_count_identity(a in 1u64..=2000, b in 1u64..=2000) {
            // n - k - r = a + b - 2: the number of independent stabilizers.
            let p = rect_family(a, b).unwrap();
            prop_assert_eq!(p.n() - p.k() - p.r(), a + b - 2);
        }
    }
}
