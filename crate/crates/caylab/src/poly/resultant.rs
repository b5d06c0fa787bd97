//! Resultants via the Sylvester matrix, with fraction-free (Bareiss)
//! elimination over the polynomial ring in the remaining variables.

use super::multipoly::MultiPoly;
use super::PolyError;

/// Resultant of `p` and `q` with respect to `var`. Both inputs must have
/// positive degree in `var`; the result no longer involves `var`.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, var: usize) -> Result<MultiPoly, PolyError> {
    if p.field() != q.field() {
        return Err(PolyError::FieldMismatch);
    }
    if p.nvars() != q.nvars() {
        return Err(PolyError::ArityMismatch(p.nvars(), q.nvars()));
    }
    let dp = p.degree_in(var) as usize;
    let dq = q.degree_in(var) as usize;
    if dp == 0 || dq == 0 {
        return Err(PolyError::DegreeZero);
    }
    let pc = p.coefficients_in(var); // ascending
    let qc = q.coefficients_in(var);
    let n = dp + dq;
    let field = p.field();
    let nvars = p.nvars();
    let zero = MultiPoly::zero(field, nvars);

    // Sylvester matrix: dq shifted rows of p's coefficients (descending),
    // then dp shifted rows of q's.
    let mut m = vec![vec![zero.clone(); n]; n];
    for row in 0..dq {
        for (k, c) in pc.iter().rev().enumerate() {
            m[row][row + k] = c.clone();
        }
    }
    for row in 0..dp {
        for (k, c) in qc.iter().rev().enumerate() {
            m[dq + row][row + k] = c.clone();
        }
    }
    bareiss_determinant(m, field, nvars)
}

/// Fraction-free determinant. Every division is exact in the polynomial
/// ring, so intermediate entries stay polynomial.
fn bareiss_determinant(
    mut m: Vec<Vec<MultiPoly>>,
    field: crate::field::Field,
    nvars: usize,
) -> Result<MultiPoly, PolyError> {
    let n = m.len();
    if n == 0 {
        return Ok(MultiPoly::one(field, nvars));
    }
    let mut sign_flip = false;
    let mut prev_pivot = MultiPoly::one(field, nvars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return Ok(MultiPoly::zero(field, nvars)),
            }
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].mul(&pivot)?.sub(&m[i][k].mul(&m[k][j])?)?;
                m[i][j] = t.divide_exact(&prev_pivot)?;
            }
            m[i][k] = MultiPoly::zero(field, nvars);
        }
        prev_pivot = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign_flip { det.neg() } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn q() -> Field {
        Field::Rationals
    }

    fn var(nvars: usize, i: usize) -> MultiPoly {
        MultiPoly::variable(q(), nvars, i)
    }

    #[test]
    fn resultant_with_linear_factor_is_evaluation() {
        // Res_y(y^2 - x, y - 1) = 1 - x  (vars: x = 0, y = 1)
        let y2_minus_x = var(2, 1).pow(2).unwrap().sub(&var(2, 0)).unwrap();
        let y_minus_1 = var(2, 1).sub(&MultiPoly::one(q(), 2)).unwrap();
        let r = resultant(&y2_minus_x, &y_minus_1, 1).unwrap();
        let expected = MultiPoly::one(q(), 2).sub(&var(2, 0)).unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn resultant_of_two_linear() {
        // Res_y(y - a, y - b) = +-(b - a)  (vars: a=0, b=1, y=2)
        let p = var(3, 2).sub(&var(3, 0)).unwrap();
        let qq = var(3, 2).sub(&var(3, 1)).unwrap();
        let r = resultant(&p, &qq, 2).unwrap();
        let diff = var(3, 1).sub(&var(3, 0)).unwrap();
        assert!(r == diff || r == diff.neg());
    }

    #[test]
    fn constant_in_variable_rejected() {
        let p = var(2, 0);
        let qq = var(2, 1);
        assert_eq!(resultant(&p, &p, 1), Err(PolyError::DegreeZero));
        assert_eq!(resultant(&qq, &p, 1).unwrap_err(), PolyError::DegreeZero);
    }

    #[test]
    fn shared_root_makes_resultant_vanish() {
        // Res_y((y - x)(y + 1), (y - x)(y + 2)) = 0
        let y = var(2, 1);
        let x = var(2, 0);
        let common = y.sub(&x).unwrap();
        let a = common
            .mul(&y.add(&MultiPoly::one(q(), 2)).unwrap())
            .unwrap();
        let b = common
            .mul(&y.add(&MultiPoly::from_i64(q(), 2, 2)).unwrap())
            .unwrap();
        assert!(resultant(&a, &b, 1).unwrap().is_zero());
    }

    #[test]
    fn bareiss_matches_direct_expansion_on_random_inputs() {
        // 50 random specializations: the resultant evaluated at x0 is zero
        // iff the specialized pair has a common root (gcd degree > 0).
        use crate::field::SampleStream;
        use crate::poly::unipoly::UniPoly;
        let f = Field::prime(101).unwrap();
        let mut stream = SampleStream::new(17);
        let mut hits = 0;
        for trial in 0..50 {
            // random bivariate p, q with constant leading y-coefficient,
            // half the trials share a planted factor (y - x)
            let mut rand_poly = |share: bool| {
                let mut acc = MultiPoly::zero(f, 2);
                for ey in 0..2u32 {
                    for ex in 0..2u32 {
                        let c = stream.element(&f);
                        let t = MultiPoly::from_terms(f, 2, &[(vec![ex, ey], c)]).unwrap();
                        acc = acc.add(&t).unwrap();
                    }
                }
                acc = acc
                    .add(&MultiPoly::from_terms(f, 2, &[(vec![0, 2], f.one())]).unwrap())
                    .unwrap();
                if share {
                    let planted = MultiPoly::variable(f, 2, 1)
                        .sub(&MultiPoly::variable(f, 2, 0))
                        .unwrap();
                    acc = acc.mul(&planted).unwrap();
                }
                acc
            };
            let share = trial % 2 == 0;
            let p = rand_poly(share);
            let qq = rand_poly(share);
            let r = resultant(&p, &qq, 1).unwrap();
            let x0 = stream.element(&f);
            let spec = |g: &MultiPoly| {
                let coeffs = g
                    .coefficients_in(1)
                    .iter()
                    .map(|c| c.evaluate(&[x0.clone(), f.zero()]).unwrap())
                    .collect();
                UniPoly::from_coeffs(f, coeffs)
            };
            let pu = spec(&p);
            let qu = spec(&qq);
            // specialization argument is valid while the leading y-coeffs
            // survive; ours are constants, so it always is
            let gcd_deg = pu.gcd(&qu).unwrap().degree().unwrap_or(0);
            let r0 = r.evaluate(&[x0.clone(), f.zero()]).unwrap();
            assert_eq!(r0.is_zero(), gcd_deg > 0, "trial {trial}");
            if r0.is_zero() {
                hits += 1;
            }
        }
        assert!(hits >= 25, "planted common factors must be detected");
    }
}
