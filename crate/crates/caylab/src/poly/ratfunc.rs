//! Unreduced rational functions: numerator/denominator pairs compared by
//! exact cross-multiplication. No multivariate gcd is ever attempted.

use super::multipoly::MultiPoly;
use super::PolyError;
use crate::field::{Field, FieldElement, PrimeField};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    /// Numerator/denominator pair; the denominator must be a nonzero
    /// polynomial.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, PolyError> {
        if num.field() != den.field() {
            return Err(PolyError::FieldMismatch);
        }
        if num.nvars() != den.nvars() {
            return Err(PolyError::ArityMismatch(num.nvars(), den.nvars()));
        }
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        let den = MultiPoly::one(num.field(), num.nvars());
        RatFunc { num, den }
    }

    pub fn constant(field: Field, nvars: usize, value: FieldElement) -> Self {
        Self::from_poly(MultiPoly::constant(field, nvars, value))
    }

    pub fn variable(field: Field, nvars: usize, index: usize) -> Self {
        Self::from_poly(MultiPoly::variable(field, nvars, index))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn field(&self) -> Field {
        self.num.field()
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero_poly(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RatFunc) -> Result<RatFunc, PolyError> {
        // identical denominators add without growing
        if self.den == other.den {
            return RatFunc::new(self.num.add(&other.num)?, self.den.clone());
        }
        let num = self
            .num
            .mul(&other.den)?
            .add(&other.num.mul(&self.den)?)?;
        RatFunc::new(num, self.den.mul(&other.den)?)
    }

    pub fn sub(&self, other: &RatFunc) -> Result<RatFunc, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> Result<RatFunc, PolyError> {
        RatFunc::new(self.num.mul(&other.num)?, self.den.mul(&other.den)?)
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc, PolyError> {
        if other.num.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        RatFunc::new(self.num.mul(&other.den)?, self.den.mul(&other.num)?)
    }

    pub fn scale(&self, factor: &FieldElement) -> RatFunc {
        RatFunc {
            num: self.num.scale(factor),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, exp: i64) -> Result<RatFunc, PolyError> {
        let base = if exp < 0 {
            RatFunc::new(self.den.clone(), self.num.clone())?
        } else {
            self.clone()
        };
        let mut acc = RatFunc::constant(self.field(), self.nvars(), self.field().one());
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// Semantic equality as rational maps: `a/b = c/d` iff `ad - cb = 0`
    /// after exact expansion.
    pub fn equal(&self, other: &RatFunc) -> Result<bool, PolyError> {
        if self.field() != other.field() {
            return Err(PolyError::FieldMismatch);
        }
        if self.nvars() != other.nvars() {
            return Err(PolyError::ArityMismatch(self.nvars(), other.nvars()));
        }
        Ok(self.num.mul(&other.den)? == other.num.mul(&self.den)?)
    }

    /// Compose with a per-variable assignment. Fails with
    /// `ZeroDenominator` when the substituted denominator collapses to
    /// the zero polynomial.
    pub fn substitute(&self, assignment: &[RatFunc]) -> Result<RatFunc, PolyError> {
        let n = self.num.substitute(assignment)?;
        let d = self.den.substitute(assignment)?;
        n.div(&d)
    }

    /// Exact value; `PoleAtPoint` when the denominator vanishes there.
    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement, PolyError> {
        let d = self.den.evaluate(point)?;
        if d.is_zero() {
            return Err(PolyError::PoleAtPoint);
        }
        let n = self.num.evaluate(point)?;
        Ok(n.div(&d)?)
    }

    pub fn to_prime_field(&self, target: PrimeField) -> Result<RatFunc, PolyError> {
        RatFunc::new(
            self.num.to_prime_field(target)?,
            self.den.to_prime_field(target)?,
        )
    }

    pub fn embed(&self, nvars: usize, offset: usize) -> Result<RatFunc, PolyError> {
        RatFunc::new(self.num.embed(nvars, offset)?, self.den.embed(nvars, offset)?)
    }

    pub fn compact_to(&self, kept: &[usize]) -> Result<RatFunc, PolyError> {
        RatFunc::new(self.num.compact_to(kept)?, self.den.compact_to(kept)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn var(nvars: usize, i: usize) -> RatFunc {
        RatFunc::variable(q(), nvars, i)
    }

    fn one(nvars: usize) -> RatFunc {
        RatFunc::constant(q(), nvars, q().one())
    }

    #[test]
    fn difference_of_squares_cancels() {
        // (x^2 - 1)/(x - 1) = (x + 1)/1
        let x = var(1, 0);
        let lhs = RatFunc::new(
            x.num().pow(2).unwrap().sub(&MultiPoly::one(q(), 1)).unwrap(),
            x.num().sub(&MultiPoly::one(q(), 1)).unwrap(),
        )
        .unwrap();
        let rhs = x.add(&one(1)).unwrap();
        assert!(lhs.equal(&rhs).unwrap());
        assert!(!x.equal(&rhs).unwrap());
    }

    #[test]
    fn substitution_inverts_moebius() {
        // (x+1)/x with x -> 1/(y-1) gives y
        let x = var(1, 0);
        let f = x.add(&one(1)).unwrap().div(&x).unwrap();
        let y = var(1, 0);
        let inv = one(1).div(&y.sub(&one(1)).unwrap()).unwrap();
        let composed = f.substitute(&[inv]).unwrap();
        assert!(composed.equal(&y).unwrap());
    }

    #[test]
    fn identity_substitution_is_identity() {
        let x = var(2, 0);
        let yy = var(2, 1);
        let f = x.mul(&yy).unwrap().add(&one(2)).unwrap();
        let composed = f.substitute(&[var(2, 0), var(2, 1)]).unwrap();
        assert!(composed.equal(&f).unwrap());
    }

    #[test]
    fn quadric_pullback_numerator() {
        // y1 y2 y3 - 1 under y_i -> (x_i - 1)/(x_i + 1):
        // numerator -2 (x1x2 + x2x3 + x1x3 + 1)
        let rel = var(3, 0)
            .mul(&var(3, 1))
            .unwrap()
            .mul(&var(3, 2))
            .unwrap()
            .sub(&one(3))
            .unwrap();
        let phi: Vec<RatFunc> = (0..3)
            .map(|i| {
                var(3, i)
                    .sub(&one(3))
                    .unwrap()
                    .div(&var(3, i).add(&one(3)).unwrap())
                    .unwrap()
            })
            .collect();
        let pulled = rel.substitute(&phi).unwrap();
        let x = |i| MultiPoly::variable(q(), 3, i);
        let quadric = x(0)
            .mul(&x(1))
            .unwrap()
            .add(&x(1).mul(&x(2)).unwrap())
            .unwrap()
            .add(&x(0).mul(&x(2)).unwrap())
            .unwrap()
            .add(&MultiPoly::one(q(), 3))
            .unwrap();
        assert_eq!(pulled.num(), &quadric.scale(&q().element_from_i64(-2)));
    }

    #[test]
    fn pole_detection() {
        // 1/(y - 1) at y = 1
        let y = var(1, 0);
        let f = one(1).div(&y.sub(&one(1)).unwrap()).unwrap();
        assert_eq!(f.evaluate(&[q().one()]), Err(PolyError::PoleAtPoint));
        assert!(f.evaluate(&[q().element_from_i64(2)]).unwrap().is_one());
    }

    #[test]
    fn evaluate_commutes_with_substitute() {
        use crate::field::SampleStream;
        let mut stream = SampleStream::new(3);
        let f13 = Field::prime(13).unwrap();
        // f(x0, x1) = (x0^2 + x1)/(x0 + 1), sigma = (x1/(x0+2), x0 x1)
        let x0 = RatFunc::variable(f13, 2, 0);
        let x1 = RatFunc::variable(f13, 2, 1);
        let c1 = RatFunc::constant(f13, 2, f13.one());
        let c2 = RatFunc::constant(f13, 2, f13.element_from_i64(2));
        let f = x0
            .mul(&x0)
            .unwrap()
            .add(&x1)
            .unwrap()
            .div(&x0.add(&c1).unwrap())
            .unwrap();
        let sigma = vec![
            x1.div(&x0.add(&c2).unwrap()).unwrap(),
            x0.mul(&x1).unwrap(),
        ];
        let composed = f.substitute(&sigma).unwrap();
        let mut checked = 0;
        while checked < 50 {
            let pt = stream.point(&f13, 2);
            let inner: Result<Vec<_>, _> = sigma.iter().map(|s| s.evaluate(&pt)).collect();
            let (Ok(inner), Ok(lhs)) = (inner, composed.evaluate(&pt)) else {
                continue;
            };
            let Ok(rhs) = f.evaluate(&inner) else { continue };
            assert_eq!(lhs, rhs);
            checked += 1;
        }
    }
}
