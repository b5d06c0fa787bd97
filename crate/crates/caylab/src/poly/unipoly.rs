//! Dense univariate polynomials, lowest degree first.

use super::PolyError;
use crate::field::{Field, FieldElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn zero(field: Field) -> Self {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        UniPoly {
            field,
            coeffs: vec![field.one()],
        }
    }

    /// From ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(field: Field, coeffs: Vec<FieldElement>) -> Self {
        let mut p = UniPoly { field, coeffs };
        p.trim();
        p
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            field,
            coeffs.iter().map(|&c| field.element_from_i64(c)).collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(FieldElement::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        assert_eq!(self.field, other.field, "mixed fields");
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        UniPoly::from_coeffs(self.field, coeffs)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            field: self.field,
            coeffs: self.coeffs.iter().map(FieldElement::neg).collect(),
        }
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        assert_eq!(self.field, other.field, "mixed fields");
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        UniPoly::from_coeffs(self.field, coeffs)
    }

    pub fn scale(&self, factor: &FieldElement) -> UniPoly {
        UniPoly::from_coeffs(
            self.field,
            self.coeffs.iter().map(|c| c.mul(factor)).collect(),
        )
    }

    pub fn monic(&self) -> Option<UniPoly> {
        let lead = self.leading()?;
        let inv = lead.inverse().ok()?;
        Some(self.scale(&inv))
    }

    /// Euclidean division by a nonzero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly), PolyError> {
        assert_eq!(self.field, divisor.field, "mixed fields");
        let dd = divisor.degree().ok_or(PolyError::ZeroDenominator)?;
        let lead_inv = divisor.leading().unwrap().inverse()?;
        let mut rem = self.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.coeffs[rd].mul(&lead_inv);
            let shift = rd - dd;
            quot[shift] = quot[shift].add(&c);
            for i in 0..=dd {
                let delta = divisor.coeffs[i].mul(&c);
                rem.coeffs[shift + i] = rem.coeffs[shift + i].sub(&delta);
            }
            rem.trim();
        }
        Ok((UniPoly::from_coeffs(self.field, quot), rem))
    }

    /// Monic Euclidean gcd; returns the zero polynomial for two zeros.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly, PolyError> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic().unwrap_or(a))
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(self.field);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&self.field.element_from_u64(i as u64)))
            .collect();
        UniPoly::from_coeffs(self.field, coeffs)
    }

    pub fn evaluate(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Multiplicity of the root at 0 (count of leading zero coefficients).
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len())
    }

    /// Exact division by s^k.
    pub fn shift_down(&self, k: usize) -> UniPoly {
        assert!(self.valuation() >= k, "root at 0 has smaller multiplicity");
        UniPoly::from_coeffs(self.field, self.coeffs[k.min(self.coeffs.len())..].to_vec())
    }
}

/// Number of distinct roots in the algebraic closure:
/// deg g - deg gcd(g, g'). Requires characteristic 0 or p > deg g.
pub fn squarefree_degree(g: &UniPoly) -> Result<usize, PolyError> {
    let deg = match g.degree() {
        Some(d) => d,
        None => return Ok(0),
    };
    let p = g.field().characteristic();
    if p != 0 && p <= deg as u64 {
        return Err(PolyError::CharacteristicTooSmall(p, deg));
    }
    if deg == 0 {
        return Ok(0);
    }
    let gcd = g.gcd(&g.derivative())?;
    Ok(deg - gcd.degree().unwrap_or(0))
}
