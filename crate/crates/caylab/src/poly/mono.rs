//! Dense per-term exponent vectors, bit-packed into a word.
//!
//! Every monomial stores one exponent byte per variable, variable 0 in
//! the most significant byte, so the natural `u128` order is the lex
//! order on exponent vectors. Capacity: 16 variables, exponents to 255 --
//! ample for the constructions here (ambient dimension <= 8, certificate
//! checks to 10 variables).

use super::PolyError;

pub const MAX_VARS: usize = 16;
pub const MAX_EXPONENT: u32 = 255;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono(u128);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn from_exponents(exps: &[u32]) -> Result<Self, PolyError> {
        if exps.len() > MAX_VARS {
            return Err(PolyError::TooManyVariables(exps.len()));
        }
        let mut packed = 0u128;
        for (i, &e) in exps.iter().enumerate() {
            if e > MAX_EXPONENT {
                return Err(PolyError::ExponentOverflow);
            }
            packed |= (e as u128) << (8 * (MAX_VARS - 1 - i));
        }
        Ok(Mono(packed))
    }

    pub fn variable(index: usize) -> Self {
        debug_assert!(index < MAX_VARS);
        Mono(1u128 << (8 * (MAX_VARS - 1 - index)))
    }

    #[inline]
    pub fn exponent(&self, index: usize) -> u32 {
        ((self.0 >> (8 * (MAX_VARS - 1 - index))) & 0xff) as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    pub fn total_degree(&self) -> u32 {
        (0..MAX_VARS).map(|i| self.exponent(i)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == 0
    }

    /// Product of monomials = per-variable exponent sums.
    pub fn mul(&self, other: &Mono) -> Result<Mono, PolyError> {
        for i in 0..MAX_VARS {
            if self.exponent(i) + other.exponent(i) > MAX_EXPONENT {
                return Err(PolyError::ExponentOverflow);
            }
        }
        Ok(Mono(self.0 + other.0))
    }

    /// Exact quotient; `None` when some exponent of `other` exceeds ours.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        for i in 0..MAX_VARS {
            if self.exponent(i) < other.exponent(i) {
                return None;
            }
        }
        Some(Mono(self.0 - other.0))
    }

    pub fn gcd(&self, other: &Mono) -> Mono {
        let mut packed = 0u128;
        for i in 0..MAX_VARS {
            let e = self.exponent(i).min(other.exponent(i)) as u128;
            packed |= e << (8 * (MAX_VARS - 1 - i));
        }
        Mono(packed)
    }

    /// Degrevlex comparison: higher total degree first; ties broken by
    /// the rightmost differing exponent, smaller exponent winning.
    pub fn degrevlex_cmp(&self, other: &Mono, nvars: usize) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..nvars).rev() {
            match self.exponent(i).cmp(&other.exponent(i)) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pack_roundtrip() {
        let m = Mono::from_exponents(&[3, 0, 7]).unwrap();
        assert_eq!(m.exponents(3), vec![3, 0, 7]);
        assert_eq!(m.total_degree(), 10);
    }

    #[test]
    fn lex_order_matches_packed_order() {
        let a = Mono::from_exponents(&[1, 0, 0]).unwrap();
        let b = Mono::from_exponents(&[0, 9, 9]).unwrap();
        assert!(a > b);
    }

    #[test]
    fn product_and_quotient() {
        let a = Mono::from_exponents(&[2, 1]).unwrap();
        let b = Mono::from_exponents(&[1, 3]).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.exponents(2), vec![3, 4]);
        assert_eq!(ab.div(&b), Some(a));
        assert_eq!(a.div(&b), None);
    }

    #[test]
    fn exponent_overflow_detected() {
        let big = Mono::from_exponents(&[200]).unwrap();
        assert_eq!(big.mul(&big), Err(PolyError::ExponentOverflow));
        assert!(Mono::from_exponents(&[300]).is_err());
    }

    #[test]
    fn ten_variables_supported() {
        let exps: Vec<u32> = (0..10).collect();
        let m = Mono::from_exponents(&exps).unwrap();
        assert_eq!(m.exponents(10), exps);
        assert_eq!(m.total_degree(), 45);
    }

    #[test]
    fn degrevlex_tie_break() {
        // same total degree: x0*x2 vs x1^2 -- rightmost difference rules
        let a = Mono::from_exponents(&[1, 0, 1]).unwrap();
        let b = Mono::from_exponents(&[0, 2, 0]).unwrap();
        assert_eq!(a.degrevlex_cmp(&b, 3), std::cmp::Ordering::Less);
    }
}
