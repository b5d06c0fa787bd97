//! Degree computation: structural projection analysis and brute-force
//! finite-field fiber histograms.

use std::collections::BTreeMap;

use super::candidate::MapCandidate;
use super::EngineError;
use crate::field::{mul_mod, pow_mod, Field, FieldElement, PrimeField, SampleStream};
use crate::poly::{squarefree_degree, MultiPoly, PolyError};
use crate::weyl::Side;

pub const DEFAULT_SAMPLES: usize = 20;
pub const DEFAULT_BRUTE_CAP: u128 = 20_000_000;
/// Fiber sizes rarer than this fraction of nonempty fibers are treated
/// as special loci, not generic behavior.
pub const DEFAULT_FIBER_THRESHOLD: f64 = 0.02;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeMethod {
    StructuralProjection,
    BruteForceHistogram,
}

/// Outcome of a degree computation.
#[derive(Debug, Clone, serde::Serialize)]
pub struct DegreeReport {
    pub method: DegreeMethod,
    pub degree: usize,
    /// Line samples (projection) or enumerated torus points (brute force).
    pub samples: u64,
    /// Fiber-size histogram over nonempty fibers (brute force only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub histogram: Option<BTreeMap<usize, u64>>,
    pub prime: u64,
    /// Whether every projection sample agreed (projection only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unanimous: Option<bool>,
}

/// Projection data: a hypersurface F, a center (on F, or a direction at
/// infinity), and the target hyperplane L = 0.
#[derive(Debug, Clone)]
pub struct ProjectionSpec {
    hypersurface: MultiPoly,
    center: ProjectionCenter,
    hyperplane: MultiPoly,
}

#[derive(Debug, Clone)]
pub enum ProjectionCenter {
    /// A point on the hypersurface, off the target hyperplane.
    Finite(Vec<FieldElement>),
    /// A direction vector with L(d) != 0 (projection from infinity).
    Direction(Vec<FieldElement>),
}

impl ProjectionSpec {
    pub fn new(
        hypersurface: MultiPoly,
        center: ProjectionCenter,
        hyperplane: MultiPoly,
    ) -> Result<Self, EngineError> {
        if hypersurface.total_degree() <= 1 {
            return Err(EngineError::DegenerateSpec(
                "hypersurface of degree <= 1: projection degree is undefined".into(),
            ));
        }
        if hyperplane.total_degree() != 1 {
            return Err(EngineError::DegenerateSpec(
                "target locus must be a linear form".into(),
            ));
        }
        let spec = ProjectionSpec {
            hypersurface,
            center,
            hyperplane,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<(), EngineError> {
        match &self.center {
            ProjectionCenter::Finite(c) => {
                if !self.hypersurface.evaluate(c).map_err(EngineError::Poly)?.is_zero() {
                    return Err(EngineError::DegenerateSpec(
                        "finite center does not lie on the hypersurface".into(),
                    ));
                }
                if self.hyperplane.evaluate(c).map_err(EngineError::Poly)?.is_zero() {
                    return Err(EngineError::DegenerateSpec(
                        "center lies on the target hyperplane".into(),
                    ));
                }
            }
            ProjectionCenter::Direction(d) => {
                if self.hyperplane.evaluate(d).map_err(EngineError::Poly)?.is_zero() {
                    return Err(EngineError::DegenerateSpec(
                        "projection direction is parallel to the target hyperplane".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn hypersurface(&self) -> &MultiPoly {
        &self.hypersurface
    }

    fn to_prime_field(&self, p: u64) -> Result<ProjectionSpec, EngineError> {
        match self.hypersurface.field() {
            Field::Prime(f) if f.modulus() == p => Ok(self.clone()),
            Field::Prime(f) => Err(EngineError::WrongField {
                have: f.modulus(),
                want: p,
            }),
            Field::Rationals => {
                let target = PrimeField::new(p)?;
                let map_pt = |v: &[FieldElement]| -> Result<Vec<FieldElement>, PolyError> {
                    v.iter()
                        .map(|x| x.to_prime_field(target).map_err(PolyError::Field))
                        .collect()
                };
                let center = match &self.center {
                    ProjectionCenter::Finite(c) => ProjectionCenter::Finite(map_pt(c)?),
                    ProjectionCenter::Direction(d) => ProjectionCenter::Direction(map_pt(d)?),
                };
                ProjectionSpec::new(
                    self.hypersurface.to_prime_field(target)?,
                    center,
                    self.hyperplane.to_prime_field(target)?,
                )
            }
        }
    }

    /// Random point on {L = 0}: sample every coordinate but a pivot, then
    /// solve the linear form for the pivot.
    fn sample_target(&self, stream: &mut SampleStream) -> Vec<FieldElement> {
        let field = self.hyperplane.field();
        let m = self.hyperplane.nvars();
        let coeffs: Vec<FieldElement> = (0..m)
            .map(|i| {
                let mut e = vec![0u32; m];
                e[i] = 1;
                self.hyperplane.coefficient(&e)
            })
            .collect();
        let pivot = coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("linear form has a nonzero coefficient");
        let constant = self.hyperplane.coefficient(&vec![0u32; m]);
        let mut q: Vec<FieldElement> = (0..m).map(|_| stream.element(&field)).collect();
        let mut acc = constant;
        for (i, c) in coeffs.iter().enumerate() {
            if i != pivot && !c.is_zero() {
                acc = acc.add(&c.mul(&q[i]));
            }
        }
        q[pivot] = acc.neg().div(&coeffs[pivot]).expect("pivot coefficient nonzero");
        q
    }
}

/// Degree of the projection by line sampling: restrict F to the line
/// through the center and a random hyperplane target, strip the center's
/// root to its exact multiplicity, and count distinct residual roots.
/// The reported degree is the modal value; ties double the sample count
/// (up to 8x) before giving up.
pub fn projection_degree(
    spec: &ProjectionSpec,
    p: u64,
    samples: usize,
    stream: &mut SampleStream,
) -> Result<DegreeReport, EngineError> {
    assert!(samples >= 2, "need at least two samples");
    let spec = spec.to_prime_field(p)?;
    let f = &spec.hypersurface;
    let field = f.field();
    let mut values: Vec<usize> = Vec::new();
    let mut draw = |values: &mut Vec<usize>, count: usize| -> Result<(), EngineError> {
        let mut attempts = 0;
        while values.len() < count {
            attempts += 1;
            if attempts > 100 * count {
                return Err(EngineError::DegenerateSpec(
                    "could not sample enough admissible targets".into(),
                ));
            }
            let q = spec.sample_target(stream);
            if f.evaluate(&q)?.is_zero() {
                continue;
            }
            let g = match &spec.center {
                ProjectionCenter::Finite(c) => {
                    let dir: Vec<FieldElement> =
                        q.iter().zip(c.iter()).map(|(a, b)| a.sub(b)).collect();
                    if dir.iter().all(FieldElement::is_zero) {
                        continue;
                    }
                    f.univariate_restrict(c, &dir)?
                }
                ProjectionCenter::Direction(d) => f.univariate_restrict(&q, d)?,
            };
            if g.is_zero() {
                return Err(EngineError::DegenerateSpec(
                    "line through the center lies inside the hypersurface".into(),
                ));
            }
            let residual = match &spec.center {
                ProjectionCenter::Finite(_) => g.shift_down(g.valuation()),
                ProjectionCenter::Direction(_) => g,
            };
            values.push(squarefree_degree(&residual)?);
        }
        Ok(())
    };

    draw(&mut values, samples)?;
    let mut target = samples;
    loop {
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for v in &values {
            *counts.entry(*v).or_default() += 1;
        }
        let best = counts.values().copied().max().unwrap();
        let modal: Vec<usize> = counts
            .iter()
            .filter(|(_, &c)| c == best)
            .map(|(&v, _)| v)
            .collect();
        if modal.len() == 1 {
            let degree = modal[0];
            if degree == 0 {
                return Err(EngineError::DegenerateSpec(
                    "modal residual intersection count is zero".into(),
                ));
            }
            return Ok(DegreeReport {
                method: DegreeMethod::StructuralProjection,
                degree,
                samples: values.len() as u64,
                histogram: None,
                prime: field.characteristic(),
                unanimous: Some(counts.len() == 1),
            });
        }
        if target >= samples * 8 {
            return Err(EngineError::Unstable(format!(
                "values {modal:?} tied after {} samples",
                values.len()
            )));
        }
        target *= 2;
        draw(&mut values, target)?;
    }
}

/// A prime-field polynomial compiled for fast evaluation.
struct CompiledPoly {
    /// (coefficient, exponents) with exponents split off the last variable.
    terms: Vec<(u64, Vec<u32>, u32)>,
    degree_last: usize,
}

impl CompiledPoly {
    fn compile(poly: &MultiPoly, nvars: usize, p: u64) -> Self {
        let mut terms = Vec::with_capacity(poly.num_terms());
        let mut degree_last = 0usize;
        for (m, c) in poly.terms() {
            let exps = m.exponents(nvars);
            let last = exps[nvars - 1];
            degree_last = degree_last.max(last as usize);
            let coeff = c.residue().expect("prime-field coefficient") % p;
            terms.push((coeff, exps[..nvars - 1].to_vec(), last));
        }
        CompiledPoly { terms, degree_last }
    }

    /// Dense coefficients in the last variable after fixing a prefix.
    /// `pows[i][k]` must hold prefix_i^k.
    fn slice(&self, pows: &[Vec<u64>], p: u64, out: &mut [u64]) {
        out.iter_mut().for_each(|v| *v = 0);
        for (coeff, prefix_exps, last) in &self.terms {
            let mut t = *coeff;
            for (i, &e) in prefix_exps.iter().enumerate() {
                if e > 0 {
                    t = mul_mod(t, pows[i][e as usize], p);
                }
            }
            let slot = &mut out[*last as usize];
            *slot = (*slot + t) % p;
        }
    }
}

fn horner(coeffs: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in coeffs.iter().rev() {
        acc = (mul_mod(acc, x, p) + c) % p;
    }
    acc
}

/// Exhaustive fiber histogram over the free torus coordinates in F_p^*.
/// The image is read in the free Lie coordinates; the degree is the
/// largest fiber size whose frequency among nonempty fibers exceeds
/// `threshold`.
pub fn brute_force_degree(
    candidate: &MapCandidate,
    p: u64,
    cap: u128,
    threshold: f64,
) -> Result<DegreeReport, EngineError> {
    let over_p = candidate.to_prime_field(p)?;
    let pair = over_p.pair();
    let r = pair.rank();
    assert!(r >= 1, "rank-zero pair has no free coordinates");
    let needed = (p as u128 - 1).pow(r as u32);
    if needed > cap {
        return Err(EngineError::CapExceeded { needed, cap });
    }
    let image_space = (p as u128).pow(r as u32);
    // dense counter over all encoded image vectors
    if image_space > 120_000_000 {
        return Err(EngineError::CapExceeded {
            needed: image_space,
            cap: 120_000_000,
        });
    }

    // reduced free map, compacted to the free variables
    let mut nums = Vec::with_capacity(r);
    let mut dens = Vec::with_capacity(r);
    for &i in pair.free() {
        let reduced = pair.reduce_to_free(&over_p.components()[i], Side::Torus)?;
        let num = reduced.num().compact_to(pair.free())?;
        let den = reduced.den().compact_to(pair.free())?;
        nums.push(CompiledPoly::compile(&num, r, p));
        dens.push(CompiledPoly::compile(&den, r, p));
    }

    let mut counts: Vec<u32> = vec![0; image_space as usize];
    let mut valid: u64 = 0;

    // odometer over the first r-1 coordinates; innermost coordinate is
    // evaluated by Horner on per-prefix dense slices
    let mut prefix = vec![1u64; r.saturating_sub(1)];
    let max_deg = nums
        .iter()
        .chain(dens.iter())
        .flat_map(|c| c.terms.iter().map(|(_, pre, _)| pre.iter().copied().max().unwrap_or(0)))
        .max()
        .unwrap_or(0) as usize;
    let mut pows: Vec<Vec<u64>> = vec![vec![1; max_deg + 1]; r.saturating_sub(1)];
    let mut num_slices: Vec<Vec<u64>> = nums
        .iter()
        .map(|c| vec![0; c.degree_last + 1])
        .collect();
    let mut den_slices: Vec<Vec<u64>> = dens
        .iter()
        .map(|c| vec![0; c.degree_last + 1])
        .collect();

    loop {
        for (i, &v) in prefix.iter().enumerate() {
            let tab = &mut pows[i];
            tab[0] = 1;
            for k in 1..tab.len() {
                tab[k] = mul_mod(tab[k - 1], v, p);
            }
        }
        for (c, out) in nums.iter().zip(num_slices.iter_mut()) {
            c.slice(&pows, p, out);
        }
        for (c, out) in dens.iter().zip(den_slices.iter_mut()) {
            c.slice(&pows, p, out);
        }
        'point: for last in 1..p {
            // batched inversion of all denominators at this point
            let mut den_vals = Vec::with_capacity(r);
            let mut prod = 1u64;
            for ds in &den_slices {
                let v = horner(ds, last, p);
                if v == 0 {
                    continue 'point;
                }
                prod = mul_mod(prod, v, p);
                den_vals.push(v);
            }
            let inv_prod = pow_mod(prod, p - 2, p);
            // one inversion for all r denominators (r is tiny)
            let mut inverses = vec![0u64; r];
            for (i, slot) in inverses.iter_mut().enumerate() {
                let mut rest = inv_prod;
                for (j, dv) in den_vals.iter().enumerate() {
                    if j != i {
                        rest = mul_mod(rest, *dv, p);
                    }
                }
                *slot = rest;
            }
            let mut index: u128 = 0;
            for i in 0..r {
                let nv = horner(&num_slices[i], last, p);
                let image = mul_mod(nv, inverses[i], p);
                index = index * p as u128 + image as u128;
            }
            counts[index as usize] += 1;
            valid += 1;
        }
        // advance odometer
        let mut i = 0;
        loop {
            if i == prefix.len() {
                // roll-over: enumeration finished
                let mut histogram: BTreeMap<usize, u64> = BTreeMap::new();
                for &c in &counts {
                    if c > 0 {
                        *histogram.entry(c as usize).or_default() += 1;
                    }
                }
                let nonempty: u64 = histogram.values().sum();
                let degree = histogram
                    .iter()
                    .filter(|(_, &count)| (count as f64) / (nonempty as f64) > threshold)
                    .map(|(&size, _)| size)
                    .max()
                    .ok_or_else(|| {
                        EngineError::DegenerateSpec(
                            "no fiber size clears the frequency threshold".into(),
                        )
                    })?;
                return Ok(DegreeReport {
                    method: DegreeMethod::BruteForceHistogram,
                    degree,
                    samples: valid,
                    histogram: Some(histogram),
                    prime: p,
                    unanimous: None,
                });
            }
            prefix[i] += 1;
            if prefix[i] < p {
                break;
            }
            prefix[i] = 1;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RatFunc;
    use crate::weyl::{builtin_pair, BuiltinPair};

    fn q() -> Field {
        Field::Rationals
    }

    fn moebius_candidate(field: Field) -> MapCandidate {
        // t -> (t - 1)/(t + 1) on the rank-1 pair
        let pair = builtin_pair(&BuiltinPair::Pgl2, field).unwrap();
        let t = RatFunc::variable(field, 1, 0);
        let one = RatFunc::constant(field, 1, field.one());
        let c = t.sub(&one).unwrap().div(&t.add(&one).unwrap()).unwrap();
        MapCandidate::new(pair, vec![c]).unwrap()
    }

    #[test]
    fn moebius_map_has_degree_one() {
        let c = moebius_candidate(q());
        let report = brute_force_degree(&c, 101, DEFAULT_BRUTE_CAP, DEFAULT_FIBER_THRESHOLD)
            .unwrap();
        assert_eq!(report.degree, 1);
        assert_eq!(report.method, DegreeMethod::BruteForceHistogram);
        // every defined input lands in its own fiber
        let hist = report.histogram.unwrap();
        assert_eq!(hist.get(&1).copied().unwrap_or(0), report.samples);
    }

    #[test]
    fn squared_moebius_has_degree_two() {
        // t -> ((t^2) - 1)/((t^2) + 1)
        let field = q();
        let pair = builtin_pair(&BuiltinPair::Pgl2, field).unwrap();
        let t = RatFunc::variable(field, 1, 0);
        let one = RatFunc::constant(field, 1, field.one());
        let t2 = t.mul(&t).unwrap();
        let c = t2.sub(&one).unwrap().div(&t2.add(&one).unwrap()).unwrap();
        let cand = MapCandidate::new(pair, vec![c]).unwrap();
        let report =
            brute_force_degree(&cand, 101, DEFAULT_BRUTE_CAP, DEFAULT_FIBER_THRESHOLD).unwrap();
        assert_eq!(report.degree, 2);
    }

    #[test]
    fn cap_is_respected() {
        let c = moebius_candidate(q());
        let err = brute_force_degree(&c, 101, 10, DEFAULT_FIBER_THRESHOLD).unwrap_err();
        assert!(matches!(err, EngineError::CapExceeded { needed: 100, cap: 10 }));
    }

    #[test]
    fn quadric_direction_projection_has_degree_two() {
        // x1x2 + x2x3 + x1x3 + 1 projected along (1,1,1) to {sum x = 0}
        let x = |i| MultiPoly::variable(q(), 3, i);
        let f = x(0)
            .mul(&x(1))
            .unwrap()
            .add(&x(1).mul(&x(2)).unwrap())
            .unwrap()
            .add(&x(0).mul(&x(2)).unwrap())
            .unwrap()
            .add(&MultiPoly::one(q(), 3))
            .unwrap();
        let l = x(0).add(&x(1)).unwrap().add(&x(2)).unwrap();
        let ones = vec![q().one(), q().one(), q().one()];
        let spec = ProjectionSpec::new(f, ProjectionCenter::Direction(ones), l).unwrap();
        let mut stream = SampleStream::new(0);
        let report = projection_degree(&spec, 1009, DEFAULT_SAMPLES, &mut stream).unwrap();
        assert_eq!(report.degree, 2);
        assert_eq!(report.unanimous, Some(true));
    }

    #[test]
    fn hyperplane_case_is_degenerate() {
        let x = |i| MultiPoly::variable(q(), 2, i);
        let f = x(0).add(&x(1)).unwrap();
        let l = x(0);
        let err = ProjectionSpec::new(f, ProjectionCenter::Direction(vec![q().one(), q().zero()]), l)
            .unwrap_err();
        assert!(matches!(err, EngineError::DegenerateSpec(_)));
    }

    #[test]
    fn off_surface_center_rejected() {
        let x = |i| MultiPoly::variable(q(), 2, i);
        // F = x0^2 - x1, center (1, 0) is not on it
        let f = x(0).pow(2).unwrap().sub(&x(1)).unwrap();
        let l = x(0).add(&x(1)).unwrap();
        let err = ProjectionSpec::new(
            f,
            ProjectionCenter::Finite(vec![q().one(), q().zero()]),
            l,
        )
        .unwrap_err();
        assert!(matches!(err, EngineError::DegenerateSpec(_)));
    }
}
