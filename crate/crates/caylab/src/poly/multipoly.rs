//! Sparse multivariate polynomials with canonical term normalization.

use std::collections::BTreeMap;

use super::mono::Mono;
use super::ratfunc::RatFunc;
use super::unipoly::UniPoly;
use super::{PolyError, MAX_TERMS};
use crate::field::{Field, FieldElement, PrimeField};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Multivariate polynomial: a term map from exponent vectors to nonzero
/// coefficients, all in one field. Terms are kept in lex order, zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Mono, FieldElement>,
}

impl MultiPoly {
    pub fn zero(field: Field, nvars: usize) -> Self {
        MultiPoly {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: Field, nvars: usize, value: FieldElement) -> Self {
        let mut p = MultiPoly::zero(field, nvars);
        p.add_term(Mono::ONE, value);
        p
    }

    pub fn one(field: Field, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    pub fn from_i64(field: Field, nvars: usize, value: i64) -> Self {
        Self::constant(field, nvars, field.element_from_i64(value))
    }

    pub fn variable(field: Field, nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index out of range");
        let mut p = MultiPoly::zero(field, nvars);
        p.add_term(Mono::variable(index), field.one());
        p
    }

    /// Build from (exponent vector, coefficient) pairs; like terms merge.
    pub fn from_terms(
        field: Field,
        nvars: usize,
        terms: &[(Vec<u32>, FieldElement)],
    ) -> Result<Self, PolyError> {
        let mut p = MultiPoly::zero(field, nvars);
        for (exps, coeff) in terms {
            if exps.len() != nvars {
                return Err(PolyError::ArityMismatch(exps.len(), nvars));
            }
            if coeff.field() != field {
                return Err(PolyError::FieldMismatch);
            }
            p.add_term(Mono::from_exponents(exps)?, coeff.clone());
        }
        Ok(p)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|v| v.is_one())
    }

    pub fn constant_value(&self) -> Option<FieldElement> {
        if self.is_zero() {
            Some(self.field.zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mono::total_degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> FieldElement {
        match Mono::from_exponents(exps) {
            Ok(m) => self.terms.get(&m).cloned().unwrap_or_else(|| self.field.zero()),
            Err(_) => self.field.zero(),
        }
    }

    /// Leading term in lex order (largest packed monomial).
    pub fn leading_term(&self) -> Option<(Mono, FieldElement)> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (*m, c.clone()))
    }

    fn add_term(&mut self, mono: Mono, coeff: FieldElement) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&coeff);
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    fn check_compatible(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if self.field != other.field {
            return Err(PolyError::FieldMismatch);
        }
        if self.nvars != other.nvars {
            return Err(PolyError::ArityMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn scale(&self, factor: &FieldElement) -> MultiPoly {
        if factor.is_zero() {
            return MultiPoly::zero(self.field, self.nvars);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.mul(factor);
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_compatible(other)?;
        let mut out = MultiPoly::zero(self.field, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb)?, ca.mul(cb));
            }
            if out.terms.len() > MAX_TERMS {
                return Err(PolyError::ExpressionTooLarge);
            }
        }
        Ok(out)
    }

    pub fn mul_term(&self, mono: &Mono, coeff: &FieldElement) -> Result<MultiPoly, PolyError> {
        let mut out = MultiPoly::zero(self.field, self.nvars);
        if coeff.is_zero() {
            return Ok(out);
        }
        for (m, c) in &self.terms {
            out.add_term(m.mul(mono)?, c.mul(coeff));
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Result<MultiPoly, PolyError> {
        let mut acc = MultiPoly::one(self.field, self.nvars);
        for _ in 0..exp {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to one variable.
    pub fn partial_derivative(&self, var: usize) -> MultiPoly {
        assert!(var < self.nvars, "variable index out of range");
        let mut out = MultiPoly::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let factor = self.field.element_from_u64(e as u64);
            let mut exps = m.exponents(self.nvars);
            exps[var] -= 1;
            out.add_term(
                Mono::from_exponents(&exps).expect("smaller exponent"),
                c.mul(&factor),
            );
        }
        out
    }

    /// Exact value at a point of matching arity and field.
    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::ArityMismatch(point.len(), self.nvars));
        }
        if point.iter().any(|x| x.field() != self.field) {
            return Err(PolyError::FieldMismatch);
        }
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    t = t.mul(&x.pow(e as i64)?);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Compose with an assignment sending each variable to a rational
    /// function (all of one common arity). The result's denominator is
    /// the product of substituted denominators raised to the occurrence
    /// degree of each variable; no reduction is attempted.
    pub fn substitute(&self, assignment: &[RatFunc]) -> Result<RatFunc, PolyError> {
        if assignment.len() != self.nvars {
            return Err(PolyError::ArityMismatch(assignment.len(), self.nvars));
        }
        let (tfield, tvars) = match assignment.first() {
            Some(r) => (r.num().field(), r.num().nvars()),
            None => (self.field, 0),
        };
        if tfield != self.field {
            return Err(PolyError::FieldMismatch);
        }
        for r in assignment {
            if r.num().field() != tfield || r.num().nvars() != tvars {
                return Err(PolyError::ArityMismatch(r.num().nvars(), tvars));
            }
            if r.den().is_zero() {
                return Err(PolyError::ZeroDenominator);
            }
        }
        let degs: Vec<u32> = (0..self.nvars).map(|i| self.degree_in(i)).collect();
        // power tables per variable, up to the occurrence degree
        let mut num_pows: Vec<Vec<MultiPoly>> = Vec::with_capacity(self.nvars);
        let mut den_pows: Vec<Vec<MultiPoly>> = Vec::with_capacity(self.nvars);
        for (i, r) in assignment.iter().enumerate() {
            let mut np = vec![MultiPoly::one(tfield, tvars)];
            let mut dp = vec![MultiPoly::one(tfield, tvars)];
            for k in 1..=degs[i] as usize {
                np.push(np[k - 1].mul(r.num())?);
                dp.push(dp[k - 1].mul(r.den())?);
            }
            num_pows.push(np);
            den_pows.push(dp);
        }
        let mut numerator = MultiPoly::zero(tfield, tvars);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(tfield, tvars, c.clone());
            for i in 0..self.nvars {
                let e = m.exponent(i) as usize;
                t = t.mul(&num_pows[i][e])?;
                t = t.mul(&den_pows[i][degs[i] as usize - e])?;
            }
            numerator = numerator.add(&t)?;
            if numerator.num_terms() > MAX_TERMS {
                return Err(PolyError::ExpressionTooLarge);
            }
        }
        let mut denominator = MultiPoly::one(tfield, tvars);
        for (i, _) in assignment.iter().enumerate() {
            denominator = denominator.mul(&den_pows[i][degs[i] as usize])?;
        }
        RatFunc::new(numerator, denominator)
    }

    /// Re-embed into a wider variable space, shifting indices by `offset`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Result<MultiPoly, PolyError> {
        let mut out = MultiPoly::zero(self.field, nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; nvars];
            for i in 0..self.nvars {
                let e = m.exponent(i);
                if e > 0 {
                    if offset + i >= nvars {
                        return Err(PolyError::ArityMismatch(offset + i + 1, nvars));
                    }
                    exps[offset + i] = e;
                }
            }
            out.add_term(Mono::from_exponents(&exps)?, c.clone());
        }
        Ok(out)
    }

    /// Keep only the listed variables, compacting them to indices 0..r.
    /// Fails if a dropped variable actually occurs.
    pub fn compact_to(&self, kept: &[usize]) -> Result<MultiPoly, PolyError> {
        let mut out = MultiPoly::zero(self.field, kept.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; kept.len()];
            let mut seen: u32 = kept.iter().map(|&v| m.exponent(v)).sum();
            for (j, &v) in kept.iter().enumerate() {
                exps[j] = m.exponent(v);
            }
            seen = m.total_degree() - seen;
            if seen != 0 {
                return Err(PolyError::ArityMismatch(self.nvars, kept.len()));
            }
            out.add_term(Mono::from_exponents(&exps)?, c.clone());
        }
        Ok(out)
    }

    /// Map rational coefficients into F_p (rejecting denominators
    /// divisible by p); terms that reduce to zero are dropped.
    pub fn to_prime_field(&self, target: PrimeField) -> Result<MultiPoly, PolyError> {
        let field = Field::Prime(target);
        let mut out = MultiPoly::zero(field, self.nvars);
        for (m, c) in &self.terms {
            out.add_term(*m, c.to_prime_field(target)?);
        }
        Ok(out)
    }

    /// Exact polynomial quotient; fails when the division is not exact.
    pub fn divide_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_compatible(divisor)?;
        let (dm, dc) = divisor.leading_term().ok_or(PolyError::ZeroDenominator)?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.field, self.nvars);
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.div(&dm).ok_or(PolyError::InexactDivision)?;
            let qc = rc.div(&dc)?;
            quot.add_term(qm, qc.clone());
            rem = rem.sub(&divisor.mul_term(&qm, &qc)?)?;
        }
        Ok(quot)
    }

    /// Componentwise monomial gcd of all terms.
    pub fn monomial_gcd(&self) -> Mono {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => *m,
            None => return Mono::ONE,
        };
        it.fold(first, |acc, m| acc.gcd(m))
    }

    /// Strip the common monomial factor from every term.
    pub fn divide_monomial(&self, mono: &Mono) -> MultiPoly {
        let mut out = MultiPoly::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.div(mono).expect("monomial divides"), c.clone());
        }
        out
    }

    /// Coefficients with respect to one variable, ascending in its power.
    /// Each coefficient keeps the full arity with `var`-degree zero.
    pub fn coefficients_in(&self, var: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![MultiPoly::zero(self.field, self.nvars); d + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            let mut exps = m.exponents(self.nvars);
            exps[var] = 0;
            out[e].add_term(Mono::from_exponents(&exps).expect("clamped"), c.clone());
        }
        out
    }

    /// Restriction to the line base + s*dir, as an exact univariate in s.
    pub fn univariate_restrict(
        &self,
        base: &[FieldElement],
        dir: &[FieldElement],
    ) -> Result<UniPoly, PolyError> {
        if base.len() != self.nvars || dir.len() != self.nvars {
            return Err(PolyError::ArityMismatch(base.len(), self.nvars));
        }
        if base.iter().chain(dir).any(|x| x.field() != self.field) {
            return Err(PolyError::FieldMismatch);
        }
        assert!(
            dir.iter().any(|d| !d.is_zero()),
            "direction must be nonzero"
        );
        // power tables for each linear factor base_i + s*dir_i
        let mut pows: Vec<Vec<UniPoly>> = Vec::with_capacity(self.nvars);
        for i in 0..self.nvars {
            let lin = UniPoly::from_coeffs(self.field, vec![base[i].clone(), dir[i].clone()]);
            let d = self.degree_in(i) as usize;
            let mut tab = vec![UniPoly::one(self.field)];
            for k in 1..=d {
                tab.push(tab[k - 1].mul(&lin));
            }
            pows.push(tab);
        }
        let mut acc = UniPoly::zero(self.field);
        for (m, c) in &self.terms {
            let mut t = UniPoly::from_coeffs(self.field, vec![c.clone()]);
            for i in 0..self.nvars {
                let e = m.exponent(i) as usize;
                if e > 0 {
                    t = t.mul(&pows[i][e]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Canonical display: degrevlex term order, explicit signs, and (over
    /// the rationals) primitive integer coefficients with the leading one
    /// positive.
    pub fn canonical_string(&self, names: &[&str]) -> String {
        self.format(names, true)
    }

    /// Same layout, but coefficients exactly as stored (no rescaling):
    /// for printing coefficients of a larger normalized polynomial.
    pub fn exact_string(&self, names: &[&str]) -> String {
        self.format(names, false)
    }

    fn format(&self, names: &[&str], normalize: bool) -> String {
        assert!(names.len() >= self.nvars, "not enough variable names");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut monos: Vec<&Mono> = self.terms.keys().collect();
        monos.sort_by(|a, b| b.degrevlex_cmp(a, self.nvars));

        enum Coeff {
            Rat(Rational),
            Res(u64),
        }
        use crate::field::Rational;
        let coeffs: Vec<Coeff> = match self.field {
            Field::Rationals => {
                let mut rats: Vec<Rational> = monos
                    .iter()
                    .map(|m| self.terms[*m].as_rational().unwrap().clone())
                    .collect();
                if normalize {
                    let mut lcm = BigInt::one();
                    for r in &rats {
                        lcm = lcm.lcm(r.denom());
                    }
                    let mut ints: Vec<BigInt> =
                        rats.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
                    let mut gcd = BigInt::zero();
                    for v in &ints {
                        gcd = gcd.gcd(v);
                    }
                    if !gcd.is_one() && !gcd.is_zero() {
                        for v in &mut ints {
                            *v = &*v / &gcd;
                        }
                    }
                    if ints[0].is_negative() {
                        for v in &mut ints {
                            *v = -&*v;
                        }
                    }
                    rats = ints.into_iter().map(Rational::from_integer).collect();
                }
                rats.into_iter().map(Coeff::Rat).collect()
            }
            Field::Prime(_) => monos
                .iter()
                .map(|m| Coeff::Res(self.terms[*m].residue().unwrap()))
                .collect(),
        };

        let mut out = String::new();
        for (k, (m, c)) in monos.iter().zip(coeffs.iter()).enumerate() {
            let (neg, mag) = match c {
                Coeff::Rat(v) => {
                    let mag = if v.denom().is_one() {
                        v.numer().abs().to_string()
                    } else {
                        format!("{}/{}", v.numer().abs(), v.denom())
                    };
                    (v.numer().is_negative(), mag)
                }
                Coeff::Res(v) => (false, v.to_string()),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for i in 0..self.nvars {
                let e = m.exponent(i);
                if e == 1 {
                    factors.push(names[i].to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", names[i], e));
                }
            }
            if factors.is_empty() {
                out.push_str(&mag);
            } else {
                if mag != "1" {
                    out.push_str(&mag);
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    /// (x1+1)(x2+1)(x3+1) - x1 x2 x3, expanded by repeated products.
    fn shifted_product_gap(field: Field, n: usize) -> MultiPoly {
        let mut a = MultiPoly::one(field, n);
        let mut b = MultiPoly::one(field, n);
        for i in 0..n {
            let xi = MultiPoly::variable(field, n, i);
            a = a.mul(&xi.add(&MultiPoly::one(field, n)).unwrap()).unwrap();
            b = b.mul(&xi).unwrap();
        }
        a.sub(&b).unwrap()
    }

    #[test]
    fn expansion_identity_three_vars() {
        // independent expansion: sum of pairwise products + sum + 1
        let f = shifted_product_gap(q(), 3);
        let mut expected = MultiPoly::one(q(), 3);
        for i in 0..3 {
            expected = expected.add(&MultiPoly::variable(q(), 3, i)).unwrap();
            for j in (i + 1)..3 {
                let prod = MultiPoly::variable(q(), 3, i)
                    .mul(&MultiPoly::variable(q(), 3, j))
                    .unwrap();
                expected = expected.add(&prod).unwrap();
            }
        }
        assert_eq!(f, expected);
    }

    #[test]
    fn self_subtraction_vanishes() {
        let f = shifted_product_gap(q(), 4);
        assert!(f.sub(&f).unwrap().is_zero());
    }

    #[test]
    fn square_of_binomial() {
        let x = MultiPoly::variable(q(), 1, 0);
        let xp1 = x.add(&MultiPoly::one(q(), 1)).unwrap();
        let sq = xp1.pow(2).unwrap();
        assert_eq!(sq.coefficient(&[2]), q().one());
        assert_eq!(sq.coefficient(&[1]), q().element_from_i64(2));
        assert_eq!(sq.coefficient(&[0]), q().one());
        assert_eq!(sq.num_terms(), 3);
    }

    #[test]
    fn field_mismatch_rejected() {
        let a = MultiPoly::one(q(), 2);
        let b = MultiPoly::one(Field::prime(13).unwrap(), 2);
        assert_eq!(a.add(&b), Err(PolyError::FieldMismatch));
        assert_eq!(a.mul(&b), Err(PolyError::FieldMismatch));
    }

    #[test]
    fn partial_derivatives() {
        // d/dx1 (x1x2 + x2x3 + x1x3 + 1) = x2 + x3
        let f = {
            let x = |i| MultiPoly::variable(q(), 3, i);
            x(0).mul(&x(1))
                .unwrap()
                .add(&x(1).mul(&x(2)).unwrap())
                .unwrap()
                .add(&x(0).mul(&x(2)).unwrap())
                .unwrap()
                .add(&MultiPoly::one(q(), 3))
                .unwrap()
        };
        let d = f.partial_derivative(0);
        let expected = MultiPoly::variable(q(), 3, 1)
            .add(&MultiPoly::variable(q(), 3, 2))
            .unwrap();
        assert_eq!(d, expected);

        // d/dx (x^3) = 3x^2
        let x3 = MultiPoly::variable(q(), 1, 0).pow(3).unwrap();
        let d3 = x3.partial_derivative(0);
        assert_eq!(d3.coefficient(&[2]), q().element_from_i64(3));
        assert_eq!(d3.num_terms(), 1);

        // d/dx1 of the n=3 hypersurface: (x2+1)(x3+1) - x2 x3
        let f3 = shifted_product_gap(q(), 3);
        let d1 = f3.partial_derivative(0);
        let x = |i| MultiPoly::variable(q(), 3, i);
        let expected = x(1)
            .add(&MultiPoly::one(q(), 3))
            .unwrap()
            .mul(&x(2).add(&MultiPoly::one(q(), 3)).unwrap())
            .unwrap()
            .sub(&x(1).mul(&x(2)).unwrap())
            .unwrap();
        assert_eq!(d1, expected);
    }

    #[test]
    fn evaluate_hypersurface_at_diagonal_mod_13() {
        // n = 3, a = 7 over F_13: 8^3 - 7^3 = 169 = 13^2
        let f13 = Field::prime(13).unwrap();
        let f = shifted_product_gap(f13, 3);
        let a = f13.element_from_i64(7);
        let v = f.evaluate(&[a.clone(), a.clone(), a]).unwrap();
        assert!(v.is_zero());
        let one = MultiPoly::one(f13, 3);
        assert!(one
            .evaluate(&[f13.zero(), f13.zero(), f13.zero()])
            .unwrap()
            .is_one());
    }

    #[test]
    fn exact_division_roundtrip() {
        let f = shifted_product_gap(q(), 3);
        let g = shifted_product_gap(q(), 3)
            .add(&MultiPoly::variable(q(), 3, 1))
            .unwrap();
        let prod = f.mul(&g).unwrap();
        assert_eq!(prod.divide_exact(&f).unwrap(), g);
        assert_eq!(prod.divide_exact(&g).unwrap(), f);
        let x = MultiPoly::variable(q(), 3, 0);
        assert_eq!(
            f.divide_exact(&x).unwrap_err(),
            PolyError::InexactDivision
        );
    }

    #[test]
    fn line_restriction_basics() {
        // x1^2 along base 0, dir 1 -> s^2
        let f = MultiPoly::variable(q(), 1, 0).pow(2).unwrap();
        let g = f
            .univariate_restrict(&[q().zero()], &[q().one()])
            .unwrap();
        assert_eq!(g.degree(), Some(2));
        assert!(g.coeff(0).is_zero() && g.coeff(1).is_zero() && g.coeff(2).is_one());
    }

    #[test]
    fn canonical_display() {
        let x = MultiPoly::variable(q(), 2, 0);
        let y = MultiPoly::variable(q(), 2, 1);
        // -x^2 + (3/2) y - 1/2, canonical integer form: 2x^2 - 3y + 1
        let p = x
            .pow(2)
            .unwrap()
            .neg()
            .add(&y.scale(&q().element_from_ratio(3, 2).unwrap()))
            .unwrap()
            .sub(&MultiPoly::constant(
                q(),
                2,
                q().element_from_ratio(1, 2).unwrap(),
            ))
            .unwrap();
        assert_eq!(p.canonical_string(&["x", "y"]), "2*x^2 - 3*y + 1");
        assert_eq!(MultiPoly::zero(q(), 2).canonical_string(&["x", "y"]), "0");
    }
}
