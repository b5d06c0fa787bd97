//! The explicit constructions: the sl(n) birational-projection family,
//! the rank-2 exceptional candidate, the torus-coordinate elimination,
//! the classical matrix Cayley map, and the known-degree table.

use crate::engine::{EngineError, MapCandidate, ProjectionCenter, ProjectionSpec};
use crate::field::{nth_root_of_unity, Field, FieldElement, FieldError, SampleStream};
use crate::matrix::{MatrixError, SquareMatrix};
use crate::poly::{resultant, MultiPoly, PolyError, RatFunc};
use crate::weyl::{builtin_pair, BuiltinPair, WeylError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("the n = 2 hypersurface is a hyperplane; the projection construction needs n >= 3")]
    HyperplaneCase,
    #[error("zeta index selects the excluded root of unity 1")]
    BadRoot,
    #[error("diagonal center does not lie on the hypersurface")]
    NotOnHypersurface,
    #[error("smoothness certificate failed: the two diagonal equations share a root")]
    CenterNotSmooth,
    #[error("diagonal center lies on the target hyperplane")]
    CenterOnTarget,
    #[error("characteristic {0} is excluded for this construction")]
    BadCharacteristic(u64),
    #[error("eliminant does not match the reference polynomial (coefficients of t1^{0:?} differ)")]
    EliminationMismatch(Vec<usize>),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Components (x_i + 1)/x_i: the torus-to-hypersurface direction.
pub fn sln_phi_components(n: usize, field: Field) -> Result<Vec<RatFunc>, BuildError> {
    let one = MultiPoly::one(field, n);
    (0..n)
        .map(|i| {
            let x = MultiPoly::variable(field, n, i);
            Ok(RatFunc::new(x.add(&one)?, x)?)
        })
        .collect()
}

/// The birational leg y_i -> 1/(y_i - 1) on the sl(n) pair. Its image
/// lies on the hypersurface, not on the target hyperplane.
pub fn sln_psi(n: usize, field: Field) -> Result<MapCandidate, BuildError> {
    let pair = builtin_pair(&BuiltinPair::Sl(n), field)?;
    let one = MultiPoly::one(field, n);
    let components = (0..n)
        .map(|i| {
            let y = MultiPoly::variable(field, n, i);
            Ok(RatFunc::new(one.clone(), y.sub(&one)?)?)
        })
        .collect::<Result<Vec<_>, BuildError>>()?;
    Ok(MapCandidate::new(pair, components)?)
}

/// (x_1 + 1)...(x_n + 1) - x_1...x_n, expanded. Total degree n - 1.
pub fn sln_hypersurface(n: usize, field: Field) -> Result<MultiPoly, BuildError> {
    assert!(n >= 2, "need at least two variables");
    let mut shifted = MultiPoly::one(field, n);
    let mut plain = MultiPoly::one(field, n);
    let one = MultiPoly::one(field, n);
    for i in 0..n {
        let x = MultiPoly::variable(field, n, i);
        shifted = shifted.mul(&x.add(&one)?)?;
        plain = plain.mul(&x)?;
    }
    Ok(shifted.sub(&plain)?)
}

/// Irreducibility certificate for the hypersurface: every restriction to
/// x_j = 1 (j != i) has degree exactly one in x_i, and the constant term
/// is nonzero, so no coordinate hyperplane divides it.
pub fn sln_irreducibility_certificate(n: usize) -> Result<bool, BuildError> {
    let field = Field::Rationals;
    let f = sln_hypersurface(n, field)?;
    if f.coefficient(&vec![0; n]).is_zero() {
        return Ok(false);
    }
    for i in 0..n {
        let assignment: Vec<RatFunc> = (0..n)
            .map(|j| {
                if j == i {
                    RatFunc::variable(field, n, i)
                } else {
                    RatFunc::constant(field, n, field.one())
                }
            })
            .collect();
        let restricted = f.substitute(&assignment)?;
        if restricted.num().degree_in(i) != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A diagonal center for the projection: a = 1/(zeta - 1) for an n-th
/// root of unity zeta != 1.
#[derive(Debug, Clone)]
pub struct SlnCenter {
    pub n: usize,
    pub zeta: FieldElement,
    pub a: FieldElement,
    pub point: Vec<FieldElement>,
}

/// Build and certify the center: it lies on the hypersurface, off the
/// target hyperplane, and the smoothness system has no solution (checked
/// by a univariate gcd over F_p).
pub fn sln_center(n: usize, p: u64, zeta_index: usize) -> Result<SlnCenter, BuildError> {
    if n == 2 {
        return Err(BuildError::HyperplaneCase);
    }
    assert!(n >= 3, "center construction needs n >= 3");
    if zeta_index % n == 0 {
        return Err(BuildError::BadRoot);
    }
    let primitive = nth_root_of_unity(p, n as u64)?;
    let zeta = primitive.pow(zeta_index as i64)?;
    if zeta.is_one() {
        return Err(BuildError::BadRoot);
    }
    let field = zeta.field();
    let a = zeta.sub(&field.one()).inverse()?;
    let point = vec![a.clone(); n];

    let f = sln_hypersurface(n, field)?;
    if !f.evaluate(&point)?.is_zero() {
        return Err(BuildError::NotOnHypersurface);
    }
    let n_a = field.element_from_u64(n as u64).mul(&a);
    if n_a.is_zero() {
        return Err(BuildError::CenterOnTarget);
    }
    if !diagonal_smoothness_gcd_is_constant(n, field)? {
        return Err(BuildError::CenterNotSmooth);
    }
    Ok(SlnCenter { n, zeta, a, point })
}

/// gcd of (1+t)^n - t^n and (1+t)^{n-1} - t^{n-1} over F_p[t]: constant
/// iff no diagonal point is singular on the hypersurface.
fn diagonal_smoothness_gcd_is_constant(n: usize, field: Field) -> Result<bool, BuildError> {
    use crate::poly::UniPoly;
    let diag = |k: usize| -> UniPoly {
        // (1+t)^k - t^k = sum_{j<k} C(k,j) t^j
        let mut coeffs = Vec::with_capacity(k);
        let mut binom: i64 = 1;
        for j in 0..k {
            coeffs.push(field.element_from_i64(binom));
            binom = binom * (k as i64 - j as i64) / (j as i64 + 1);
        }
        UniPoly::from_coeffs(field, coeffs)
    };
    let g = diag(n).gcd(&diag(n - 1))?;
    Ok(g.degree() == Some(0))
}

/// Projection data for the sl(n) construction over F_p.
pub fn sln_projection_spec(n: usize, p: u64, zeta_index: usize) -> Result<ProjectionSpec, BuildError> {
    let center = sln_center(n, p, zeta_index)?;
    let field = center.a.field();
    let f = sln_hypersurface(n, field)?;
    let mut hyperplane = MultiPoly::zero(field, n);
    for i in 0..n {
        hyperplane = hyperplane.add(&MultiPoly::variable(field, n, i))?;
    }
    Ok(ProjectionSpec::new(
        f,
        ProjectionCenter::Finite(center.point),
        hyperplane,
    )?)
}

/// The full torus-to-hyperplane candidate: project the image of the
/// birational leg from the diagonal center. With b_i = 1/(y_i - 1) and
/// lambda = n a / (n a - sum b), the components are a + lambda (b_i - a);
/// lambda solves L(a.1 + lambda (b - a.1)) = 0 for L = sum x_i.
pub fn sln_full_candidate(n: usize, p: u64, zeta_index: usize) -> Result<MapCandidate, BuildError> {
    let center = sln_center(n, p, zeta_index)?;
    let field = center.a.field();
    let pair = builtin_pair(&BuiltinPair::Sl(n), field)?;
    let one = MultiPoly::one(field, n);
    // shifted factors y_i - 1 and their partial products
    let factors: Vec<MultiPoly> = (0..n)
        .map(|i| MultiPoly::variable(field, n, i).sub(&one))
        .collect::<Result<_, _>>()?;
    let mut all = MultiPoly::one(field, n);
    for f in &factors {
        all = all.mul(f)?;
    }
    let complement = |i: usize| -> Result<MultiPoly, PolyError> {
        let mut acc = MultiPoly::one(field, n);
        for (j, f) in factors.iter().enumerate() {
            if j != i {
                acc = acc.mul(f)?;
            }
        }
        Ok(acc)
    };
    let mut cofactor_sum = MultiPoly::zero(field, n);
    for i in 0..n {
        cofactor_sum = cofactor_sum.add(&complement(i)?)?;
    }
    // over the common denominator prod (y_j - 1):
    // c_i = a (n prod_{j != i} (y_j - 1) - sum_k prod_{j != k} (y_j - 1))
    //       / (n a prod_j (y_j - 1) - sum_k prod_{j != k} (y_j - 1)),
    // the lowest form of a + lambda (b_i - a) with b_i = 1/(y_i - 1)
    // and lambda = n a / (n a - sum b)
    let n_elem = field.element_from_u64(n as u64);
    let denominator = all.scale(&n_elem.mul(&center.a)).sub(&cofactor_sum)?;
    let components = (0..n)
        .map(|i| {
            let num = complement(i)?
                .scale(&n_elem)
                .sub(&cofactor_sum)?
                .scale(&center.a);
            Ok(RatFunc::new(num, denominator.clone())?)
        })
        .collect::<Result<Vec<_>, BuildError>>()?;
    Ok(MapCandidate::new(pair, components)?)
}

/// The rank-2 exceptional candidate: psi_i = -(y_i + 1)/(y_i - 1)
/// followed by the mean-subtracting linear projection. Needs 1/3, so
/// characteristic 3 is excluded.
pub fn g2_candidate(field: Field) -> Result<MapCandidate, BuildError> {
    if field.characteristic() == 3 {
        return Err(BuildError::BadCharacteristic(3));
    }
    let pair = builtin_pair(&BuiltinPair::G2, field)?;
    let one = MultiPoly::one(field, 3);
    // over the common denominator 3 prod (y_j - 1):
    // c_i = psi_i - (psi_1 + psi_2 + psi_3)/3 with psi_i = -(y_i+1)/(y_i-1)
    let shifted_up: Vec<MultiPoly> = (0..3)
        .map(|i| MultiPoly::variable(field, 3, i).add(&one))
        .collect::<Result<_, _>>()?;
    let shifted_down: Vec<MultiPoly> = (0..3)
        .map(|i| MultiPoly::variable(field, 3, i).sub(&one))
        .collect::<Result<_, _>>()?;
    let mut all = MultiPoly::one(field, 3);
    for f in &shifted_down {
        all = all.mul(f)?;
    }
    let three = field.element_from_i64(3);
    let denominator = all.scale(&three);
    let lifted = |i: usize| -> Result<MultiPoly, PolyError> {
        // (y_i + 1) prod_{j != i} (y_j - 1)
        let mut acc = shifted_up[i].clone();
        for (j, f) in shifted_down.iter().enumerate() {
            if j != i {
                acc = acc.mul(f)?;
            }
        }
        Ok(acc)
    };
    let mut lifted_sum = MultiPoly::zero(field, 3);
    for i in 0..3 {
        lifted_sum = lifted_sum.add(&lifted(i)?)?;
    }
    let components = (0..3)
        .map(|i| {
            let num = lifted_sum.sub(&lifted(i)?.scale(&three))?;
            Ok(RatFunc::new(num, denominator.clone())?)
        })
        .collect::<Result<Vec<_>, BuildError>>()?;
    Ok(MapCandidate::new(pair, components)?)
}

/// The rank-1 torus map t -> (t - 1)/(t + 1): a birational equivariant
/// map for the Z/2 inversion action, accepted for the `Sl2` and `Pgl2`
/// pairs.
pub fn rank_one_candidate(which: &BuiltinPair, field: Field) -> Result<MapCandidate, BuildError> {
    if !matches!(which, BuiltinPair::Sl2 | BuiltinPair::Pgl2) {
        return Err(BuildError::Weyl(WeylError::BadParameter(
            "rank-one candidate exists for sl2 and pgl2 only".into(),
        )));
    }
    let pair = builtin_pair(which, field)?;
    let t = MultiPoly::variable(field, 1, 0);
    let one = MultiPoly::one(field, 1);
    let component = RatFunc::new(t.sub(&one)?, t.add(&one)?)?;
    Ok(MapCandidate::new(pair, vec![component])?)
}

/// Quadric image of the torus relation under the rank-2 map, plus the
/// projection-from-infinity data: direction (1,1,1) onto {sum x = 0}.
pub fn g2_projection_spec(field: Field) -> Result<ProjectionSpec, BuildError> {
    if field.characteristic() == 3 {
        return Err(BuildError::BadCharacteristic(3));
    }
    let (quadric, _) = g2_quadric_pullback(field)?;
    let mut hyperplane = MultiPoly::zero(field, 3);
    for i in 0..3 {
        hyperplane = hyperplane.add(&MultiPoly::variable(field, 3, i))?;
    }
    let ones = vec![field.one(); 3];
    Ok(ProjectionSpec::new(
        quadric,
        ProjectionCenter::Direction(ones),
        hyperplane,
    )?)
}

/// The quadric x1x2 + x2x3 + x1x3 + 1 and a certificate that the torus
/// relation y1y2y3 - 1 pulls back to exactly -2 times it under
/// y_i -> (x_i - 1)/(x_i + 1).
pub fn g2_quadric_pullback(field: Field) -> Result<(MultiPoly, bool), BuildError> {
    let x = |i| MultiPoly::variable(field, 3, i);
    let quadric = x(0)
        .mul(&x(1))?
        .add(&x(1).mul(&x(2))?)?
        .add(&x(0).mul(&x(2))?)?
        .add(&MultiPoly::one(field, 3))?;
    let relation = RatFunc::from_poly(
        x(0).mul(&x(1))?.mul(&x(2))?.sub(&MultiPoly::one(field, 3))?,
    );
    let one = MultiPoly::one(field, 3);
    let phi: Vec<RatFunc> = (0..3)
        .map(|i| Ok(RatFunc::new(x(i).sub(&one)?, x(i).add(&one)?)?))
        .collect::<Result<Vec<_>, BuildError>>()?;
    let pulled = relation.substitute(&phi)?;
    let expected = quadric.scale(&field.element_from_i64(-2));
    let ok = pulled.num() == &expected;
    Ok((quadric, ok))
}

/// Result of eliminating the second torus coordinate from the two-line
/// system relating (t1, t2) to the symmetric combinations (s1, s2).
#[derive(Debug, Clone)]
pub struct SexticElimination {
    /// Monic-in-t1 eliminant over Q, variables (t1, s1, s2).
    pub eliminant: MultiPoly,
    /// Its t1-coefficients, ascending, with t1 cleared from each.
    pub coefficients: Vec<MultiPoly>,
    /// The embedded reference coefficients, same layout.
    pub reference: Vec<MultiPoly>,
    /// Per-coefficient agreement with the reference.
    pub coefficient_matches: Vec<bool>,
    /// Exact certificate for the t2 recovery formula.
    pub recovery_verified: bool,
}

impl SexticElimination {
    pub fn matches_reference(&self) -> bool {
        self.coefficient_matches.iter().all(|&b| b)
    }

    pub fn check(&self) -> Result<(), BuildError> {
        if self.matches_reference() {
            Ok(())
        } else {
            let bad: Vec<usize> = self
                .coefficient_matches
                .iter()
                .enumerate()
                .filter(|(_, &ok)| !ok)
                .map(|(i, _)| i)
                .collect();
            Err(BuildError::EliminationMismatch(bad))
        }
    }
}

/// Variables of the elimination system: (t1, t2, s1, s2).
fn system_polynomials(field: Field) -> Result<(MultiPoly, MultiPoly), BuildError> {
    let v = |i| MultiPoly::variable(field, 4, i);
    let (t1, t2, s1, s2) = (v(0), v(1), v(2), v(3));
    let one = MultiPoly::one(field, 4);
    // -t2 + 1/t2 = s1 - t1 + 1/t1, cleared by t1 t2:
    // t1^2 t2 - t1 t2^2 - s1 t1 t2 + t1 - t2
    let p1 = t1
        .pow(2)?
        .mul(&t2)?
        .sub(&t1.mul(&t2.pow(2)?)?)?
        .sub(&s1.mul(&t1)?.mul(&t2)?)?
        .add(&t1)?
        .sub(&t2)?;
    // t1 t2 - 1/(t1 t2) = s2 - t1 + 1/t1, cleared by t1 t2:
    // t1^2 t2^2 + t1^2 t2 - s2 t1 t2 - t2 - 1
    let p2 = t1
        .pow(2)?
        .mul(&t2.pow(2)?)?
        .add(&t1.pow(2)?.mul(&t2)?)?
        .sub(&s2.mul(&t1)?.mul(&t2)?)?
        .sub(&t2)?
        .sub(&one)?;
    Ok((p1, p2))
}

/// The embedded reference coefficients (ascending powers of t1) the
/// eliminant is compared against.
pub fn reference_sextic_coefficients(field: Field) -> Result<Vec<MultiPoly>, BuildError> {
    // variables (t1, s1, s2); each coefficient is t1-free
    let v = |i| MultiPoly::variable(field, 3, i);
    let (s1, s2) = (v(1), v(2));
    let one = MultiPoly::one(field, 3);
    let c = |k: i64| MultiPoly::from_i64(field, 3, k);
    let sum = s1.add(&s2)?;
    let prod = s1.mul(&s2)?;
    let two_sum = sum.scale(&field.element_from_i64(2));
    Ok(vec![
        one.clone(),                                   // t1^0: 1
        sum.add(&one)?,                                // t1^1: s1 + s2 + 1
        prod.add(&two_sum)?.add(&one)?,                // t1^2: s1 s2 + 2s1 + 2s2 + 1
        s1.pow(2)?.add(&s2.pow(2)?)?.add(&c(-5))?,     // t1^3: s1^2 + s2^2 - 5
        prod.sub(&two_sum)?.sub(&one)?,                // t1^4: s1 s2 - 2s1 - 2s2 - 1
        sum.neg(),                                     // t1^5: -(s1 + s2)
        one,                                           // t1^6: 1
    ])
}

/// Eliminate t2 from the system, normalize (strip monomial factors and
/// content, make monic in t1), verify the recovery formula by an exact
/// cofactor certificate, and compare against the reference display.
pub fn g2_sextic_elimination() -> Result<SexticElimination, BuildError> {
    let field = Field::Rationals;
    let (p1, p2) = system_polynomials(field)?;
    let raw = resultant(&p1, &p2, 1)?;

    // strip the extraneous t1^k factor introduced by denominator clearing
    let stripped = raw.divide_monomial(&raw.monomial_gcd());
    // normalize to monic in t1: the top t1-coefficient must be constant
    let coeffs_t1 = stripped.coefficients_in(0);
    let lead = coeffs_t1
        .last()
        .and_then(MultiPoly::constant_value)
        .ok_or_else(|| BuildError::EliminationMismatch(Vec::new()))?;
    let monic = stripped.scale(&lead.inverse()?);

    // down to three variables (t1, s1, s2)
    let eliminant = monic.compact_to(&[0, 2, 3])?;
    let coefficients: Vec<MultiPoly> = eliminant.coefficients_in(0);
    let reference = reference_sextic_coefficients(field)?;
    let width = coefficients.len().max(reference.len());
    let coefficient_matches: Vec<bool> = (0..width)
        .map(|k| {
            let lhs = coefficients.get(k);
            let rhs = reference.get(k);
            match (lhs, rhs) {
                (Some(a), Some(b)) => a == b,
                (Some(a), None) => a.is_zero(),
                (None, Some(b)) => b.is_zero(),
                (None, None) => true,
            }
        })
        .collect();

    // recovery certificate: rec_den * t2 - (t1^2 - 1) + t1 P1 + P2 = 0,
    // so on the solution set t2 = (t1^2 - 1) / rec_den exactly
    let recovery_verified = {
        let v = |i| MultiPoly::variable(field, 4, i);
        let (t1, t2, s1, s2) = (v(0), v(1), v(2), v(3));
        let one = MultiPoly::one(field, 4);
        let rec_den = s1
            .mul(&t1.pow(2)?)?
            .add(&s2.mul(&t1)?)?
            .sub(&t1.pow(3)?)?
            .sub(&t1.pow(2)?)?
            .add(&t1)?
            .add(&one)?;
        let identity = rec_den
            .mul(&t2)?
            .sub(&t1.pow(2)?.sub(&one)?)?
            .add(&t1.mul(&p1)?)?
            .add(&p2)?;
        identity.is_zero()
    };

    Ok(SexticElimination {
        eliminant,
        coefficients,
        reference,
        coefficient_matches,
        recovery_verified,
    })
}

/// Random finite-field consistency check: draw a torus point, form the
/// symmetric combinations, and test that the computed eliminant vanishes.
/// Returns (vanished, total).
pub fn sextic_consistency_samples(
    elimination: &SexticElimination,
    p: u64,
    count: usize,
    seed: u64,
) -> Result<(usize, usize), BuildError> {
    let target = crate::field::PrimeField::new(p)?;
    let field = Field::Prime(target);
    let poly = elimination.eliminant.to_prime_field(target)?;
    let mut stream = SampleStream::new(seed);
    let mut vanished = 0;
    for _ in 0..count {
        let t1 = stream.nonzero_element(&field);
        let t2 = stream.nonzero_element(&field);
        let t3 = t1.mul(&t2).inverse()?;
        let z = |t: &FieldElement| -> Result<FieldElement, FieldError> {
            Ok(t.sub(&t.inverse()?))
        };
        let (z1, z2, z3) = (z(&t1)?, z(&t2)?, z(&t3)?);
        let s1 = z1.sub(&z2);
        let s2 = z1.sub(&z3);
        if poly.evaluate(&[t1, s1, s2])?.is_zero() {
            vanished += 1;
        }
    }
    Ok((vanished, count))
}

/// The classical matrix map X -> (I - X)(I + X)^{-1}, exact.
pub fn classical_cayley(x: &SquareMatrix) -> Result<SquareMatrix, BuildError> {
    let identity = SquareMatrix::identity(x.field(), x.dim());
    let denominator = identity.add(x)?;
    let inverse = denominator.inverse()?;
    Ok(identity.sub(x)?.mul(&inverse)?)
}

/// Random rational skew-symmetric matrix from a seeded stream.
pub fn random_skew(dim: usize, stream: &mut SampleStream) -> SquareMatrix {
    let field = Field::Rationals;
    let mut m = SquareMatrix::zero(field, dim);
    for i in 0..dim {
        for j in (i + 1)..dim {
            let v = stream.element(&field);
            m.set(i, j, v.clone());
            m.set(j, i, v.neg());
        }
    }
    m
}

/// How a tabulated value is asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValueKind {
    Exact,
    UpperBound,
}

/// One tabulated Cayley-degree fact.
#[derive(Debug, Clone, serde::Serialize)]
pub struct KnownResult {
    pub group: String,
    pub kind: ValueKind,
    pub value: u32,
    pub provenance: String,
}

/// The known-degree table. Exact values win over upper bounds; among
/// bounds the smallest is kept.
pub fn known_table() -> Vec<KnownResult> {
    let mut raw: Vec<KnownResult> = Vec::new();
    let mut push = |group: String, kind: ValueKind, value: u32, provenance: &str| {
        raw.push(KnownResult {
            group,
            kind,
            value,
            provenance: provenance.to_string(),
        });
    };

    for n in 1..=12u32 {
        push(
            format!("SO_{n}"),
            ValueKind::Exact,
            1,
            "classical Cayley map",
        );
    }
    for n in 1..=6u32 {
        push(
            format!("Sp_{}", 2 * n),
            ValueKind::Exact,
            1,
            "classical Cayley map",
        );
    }
    for n in 1..=12u32 {
        push(
            format!("PGL_{n}"),
            ValueKind::Exact,
            1,
            "Cayley group classification",
        );
    }
    push("SL_2".into(), ValueKind::Exact, 1, "Cayley group classification");
    push("SL_3".into(), ValueKind::Exact, 1, "Cayley group classification");
    push(
        "SL_4".into(),
        ValueKind::Exact,
        2,
        "projection upper bound n-2 plus non-Cayley lower bound",
    );
    for n in 3..=12u32 {
        push(
            format!("SL_{n}"),
            ValueKind::UpperBound,
            n - 2,
            "diagonal-center projection of the shifted-product hypersurface",
        );
    }
    push(
        "G_2".into(),
        ValueKind::Exact,
        2,
        "quadric projection from infinity plus non-Cayley lower bound",
    );
    for n in 2..=12u32 {
        if n <= 5 {
            push(
                format!("Spin_{n}"),
                ValueKind::Exact,
                1,
                "exceptional isomorphism with a Cayley group",
            );
        } else {
            push(
                format!("Spin_{n}"),
                ValueKind::Exact,
                2,
                "two-sheeted cover of SO_n, which is Cayley",
            );
        }
    }
    for n in 2..=12u32 {
        for d in 2..n {
            if n % d == 0 {
                push(
                    format!("SL_{n}/mu_{d}"),
                    ValueKind::UpperBound,
                    n / d,
                    "isogeny onto PGL_n of kernel order n/d",
                );
            }
        }
    }
    for d in 2..=6u32 {
        let (value, provenance) = if d <= 2 {
            (1, "isomorphic to a Cayley group")
        } else {
            (2, "kernel-order-2 isogeny onto PGL_2d plus non-Cayley lower bound")
        };
        push(
            format!("SL_{}/mu_{}", 2 * d, d),
            ValueKind::Exact,
            value,
            provenance,
        );
    }

    // exact beats bound; among bounds keep the smallest
    let mut table: Vec<KnownResult> = Vec::new();
    for entry in raw {
        match table.iter_mut().find(|e| e.group == entry.group) {
            None => table.push(entry),
            Some(existing) => {
                let replace = match (existing.kind, entry.kind) {
                    (ValueKind::UpperBound, ValueKind::Exact) => true,
                    (ValueKind::UpperBound, ValueKind::UpperBound) => {
                        entry.value < existing.value
                    }
                    _ => false,
                };
                if replace {
                    *existing = entry;
                }
            }
        }
    }
    table.sort_by(|a, b| a.group.cmp(&b.group));
    table
}

pub fn table_lookup<'t>(table: &'t [KnownResult], group: &str) -> Option<&'t KnownResult> {
    table.iter().find(|e| e.group == group)
}
