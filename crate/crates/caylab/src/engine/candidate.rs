//! Candidate maps and their exact verification.

use super::EngineError;
use crate::field::{Field, FieldElement, PrimeField, SampleStream};
use crate::poly::{PolyError, RatFunc};
use crate::weyl::{Side, SignedPermutation, TorusLiePair};

/// How many random points a degraded (sampled) identity check uses.
pub const SAMPLED_CHECK_POINTS: usize = 50;
/// Primes used when a rational-coefficient identity degrades to sampling.
pub const SAMPLED_CHECK_PRIMES: [u64; 2] = [10007, 10009];

/// A candidate generalized Cayley map restricted to the torus: an
/// m-tuple of rational functions in the ambient torus variables, read as
/// ambient Lie coordinates of the image.
#[derive(Debug, Clone)]
pub struct MapCandidate {
    pair: TorusLiePair,
    components: Vec<RatFunc>,
}

impl MapCandidate {
    pub fn new(pair: TorusLiePair, components: Vec<RatFunc>) -> Result<Self, EngineError> {
        if components.len() != pair.ambient() {
            return Err(EngineError::ComponentCount(
                components.len(),
                pair.ambient(),
            ));
        }
        for c in &components {
            if c.field() != pair.field() {
                return Err(EngineError::Poly(PolyError::FieldMismatch));
            }
            if c.nvars() != pair.ambient() {
                return Err(EngineError::Poly(PolyError::ArityMismatch(
                    c.nvars(),
                    pair.ambient(),
                )));
            }
        }
        Ok(MapCandidate { pair, components })
    }

    pub fn pair(&self) -> &TorusLiePair {
        &self.pair
    }

    pub fn components(&self) -> &[RatFunc] {
        &self.components
    }

    pub fn field(&self) -> Field {
        self.pair.field()
    }

    /// Maximum total degree over all component numerators/denominators;
    /// a cheap input-size measure for sample-error bounds.
    pub fn max_degree(&self) -> u32 {
        self.components
            .iter()
            .map(|c| c.num().total_degree().max(c.den().total_degree()))
            .max()
            .unwrap_or(0)
    }

    /// Rational-coefficient candidates reduced into F_p; prime-field
    /// candidates must already live there.
    pub fn to_prime_field(&self, p: u64) -> Result<MapCandidate, EngineError> {
        match self.field() {
            Field::Prime(f) if f.modulus() == p => Ok(self.clone()),
            Field::Prime(f) => Err(EngineError::WrongField {
                have: f.modulus(),
                want: p,
            }),
            Field::Rationals => {
                let target = PrimeField::new(p)?;
                let components = self
                    .components
                    .iter()
                    .map(|c| c.to_prime_field(target))
                    .collect::<Result<Vec<_>, _>>()?;
                let pair = self.pair.with_field(Field::Prime(target))?;
                Ok(MapCandidate { pair, components })
            }
        }
    }

    /// A full torus point from free-coordinate values: dependent
    /// coordinates are filled in from their dependency monomials.
    /// `None` when a dependency is undefined at the point.
    pub fn torus_point(&self, free_values: &[FieldElement]) -> Option<Vec<FieldElement>> {
        let pair = &self.pair;
        assert_eq!(free_values.len(), pair.rank(), "free value count");
        let field = pair.field();
        let mut point = vec![field.zero(); pair.ambient()];
        for (slot, value) in pair.free().iter().zip(free_values) {
            point[*slot] = value.clone();
        }
        for (j, expr) in pair.torus_deps() {
            match expr.evaluate(&point) {
                Ok(v) => point[*j] = v,
                Err(_) => return None,
            }
        }
        Some(point)
    }

    /// Random torus point with nonzero free coordinates and all
    /// dependencies defined.
    fn random_torus_point(&self, stream: &mut SampleStream) -> Vec<FieldElement> {
        let field = self.pair.field();
        loop {
            let free: Vec<FieldElement> = (0..self.pair.rank())
                .map(|_| stream.nonzero_element(&field))
                .collect();
            if let Some(point) = self.torus_point(&free) {
                return point;
            }
        }
    }

    /// Components reduced to the free torus coordinates. Components built
    /// over one shared denominator stay on a shared denominator, which
    /// keeps the check arithmetic flat.
    fn reduced_components(&self) -> Result<Vec<RatFunc>, PolyError> {
        self.components
            .iter()
            .map(|c| self.pair.reduce_to_free(c, Side::Torus))
            .collect()
    }

    /// True iff each Lie dependency, with dependent coordinates replaced
    /// by the matching components, reduces to zero over the free torus
    /// variables. Falls back to sampling when expansion overflows.
    pub fn check_target_containment(&self) -> Result<bool, EngineError> {
        match self.containment_symbolic() {
            Ok(v) => Ok(v),
            Err(PolyError::ExpressionTooLarge) => Ok(self.containment_sampled()),
            Err(e) => Err(e.into()),
        }
    }

    fn containment_symbolic(&self) -> Result<bool, PolyError> {
        let field = self.field();
        let ambient = self.pair.ambient();
        let reduced = self.reduced_components()?;
        for (j, form) in self.pair.lie_deps() {
            // the dependency form evaluated on the components; linear
            // forms combine the reduced components term by term
            let substituted = if form.total_degree() <= 1 {
                let mut acc = RatFunc::constant(field, ambient, field.zero());
                for (mono, coeff) in form.terms() {
                    let term = match (0..ambient).find(|&v| mono.exponent(v) == 1) {
                        Some(v) => reduced[v].scale(coeff),
                        None => RatFunc::constant(field, ambient, coeff.clone()),
                    };
                    acc = acc.add(&term)?;
                }
                acc
            } else {
                let inner = form.substitute(&self.components)?;
                self.pair.reduce_to_free(&inner, Side::Torus)?
            };
            let diff = reduced[*j].sub(&substituted)?;
            if !diff.num().is_zero() {
                // unreduced numerator may still be semantically zero
                let zero = RatFunc::constant(field, ambient, field.zero());
                if !diff.equal(&zero)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn containment_sampled(&self) -> bool {
        let mut stream = SampleStream::new(0xC0_17A1);
        let mut checked = 0;
        while checked < SAMPLED_CHECK_POINTS {
            let point = self.random_torus_point(&mut stream);
            let values: Result<Vec<FieldElement>, _> = self
                .components
                .iter()
                .map(|c| c.evaluate(&point))
                .collect();
            let Ok(values) = values else { continue };
            for (j, form) in self.pair.lie_deps() {
                // the linear form evaluated on the component values
                let expected = form.evaluate(&values).expect("linear form evaluation");
                if values[*j] != expected {
                    return false;
                }
            }
            checked += 1;
        }
        true
    }

    /// Componentwise equivariance for each listed Weyl element:
    /// reduce(act_on_lie(g, components)) = reduce(components after
    /// act_on_torus(g)). Symbolic first; on expansion overflow the check
    /// degrades to sampled verification with a quantified error bound.
    pub fn check_equivariance(
        &self,
        elements: &[SignedPermutation],
        stream: &mut SampleStream,
    ) -> Result<EquivarianceReport, EngineError> {
        let mut results = Vec::with_capacity(elements.len());
        let mut mode = CheckMode::Symbolic;
        let mut failure_bound: f64 = 0.0;
        let reduced = match self.reduced_components() {
            Ok(r) => Some(r),
            Err(PolyError::ExpressionTooLarge) => {
                mode = CheckMode::Sampled;
                None
            }
            Err(e) => return Err(e.into()),
        };
        for (idx, g) in elements.iter().enumerate() {
            let outcome = match (mode, &reduced) {
                (CheckMode::Symbolic, Some(reduced)) => {
                    match self.equivariance_symbolic(g, reduced) {
                        Ok(pass) => Some(pass),
                        Err(PolyError::ExpressionTooLarge) => None,
                        Err(e) => return Err(e.into()),
                    }
                }
                _ => None,
            };
            let (pass, witness) = match outcome {
                Some(true) => (true, None),
                Some(false) => (false, self.find_witness(g, stream)),
                None => {
                    mode = CheckMode::Sampled;
                    let (pass, witness, bound) = self.equivariance_sampled(g, stream)?;
                    failure_bound = failure_bound.max(bound);
                    (pass, witness)
                }
            };
            results.push(ElementCheck {
                element: idx,
                pass,
                witness,
            });
        }
        Ok(EquivarianceReport {
            results,
            mode,
            failure_bound: match mode {
                CheckMode::Symbolic => None,
                CheckMode::Sampled => Some(failure_bound),
            },
        })
    }

    /// One element, symbolically, on pre-reduced components. Reduction
    /// commutes with the action up to torus equality because every
    /// generator preserves the dependency locus (validated when the pair
    /// is built), so comparing re-reduced images of reduced components
    /// decides the identity on the torus.
    fn equivariance_symbolic(
        &self,
        g: &SignedPermutation,
        reduced: &[RatFunc],
    ) -> Result<bool, PolyError> {
        let lie_side = g.act_on_lie(reduced);
        for (i, lhs) in lie_side.iter().enumerate() {
            let moved = g.act_on_torus_func(&reduced[i])?;
            let rhs = self.pair.reduce_to_free(&moved, Side::Torus)?;
            if !lhs.equal(&rhs)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Evaluate both sides of the equivariance identity at random torus
    /// points. Returns (pass, witness, failure-probability bound).
    fn equivariance_sampled(
        &self,
        g: &SignedPermutation,
        stream: &mut SampleStream,
    ) -> Result<(bool, Option<Witness>, f64), EngineError> {
        match self.field() {
            Field::Prime(f) => {
                // the candidate is tied to its own prime; sample there
                let per_point = sz_bound(self.max_degree(), f.modulus());
                let (pass, witness) =
                    sample_equivariance(self, g, stream, SAMPLED_CHECK_POINTS)?;
                Ok((pass, witness, per_point.powi(SAMPLED_CHECK_POINTS as i32)))
            }
            Field::Rationals => {
                // reduce mod two distinct primes > 10^4 and sample both
                let mut bound = 1.0_f64;
                let mut witness = None;
                for p in SAMPLED_CHECK_PRIMES {
                    let reduced = self.to_prime_field(p)?;
                    let per_point = sz_bound(reduced.max_degree(), p);
                    let (pass, w) =
                        sample_equivariance(&reduced, g, stream, SAMPLED_CHECK_POINTS)?;
                    if !pass {
                        return Ok((false, w, 0.0));
                    }
                    witness = witness.or(w);
                    bound *= per_point.powi(SAMPLED_CHECK_POINTS as i32);
                }
                Ok((true, witness, bound))
            }
        }
    }

    /// Point where the two sides of the equivariance identity differ.
    fn find_witness(&self, g: &SignedPermutation, stream: &mut SampleStream) -> Option<Witness> {
        for _ in 0..200 {
            let point = self.random_torus_point(stream);
            if let Some(w) = witness_at(self, g, &point) {
                return Some(w);
            }
        }
        None
    }
}

fn sz_bound(degree: u32, p: u64) -> f64 {
    // conservative Schwartz-Zippel bound for one cross-multiplied
    // componentwise identity
    ((4 * degree.max(1)) as f64 / p as f64).min(1.0)
}

fn witness_at(
    candidate: &MapCandidate,
    g: &SignedPermutation,
    point: &[FieldElement],
) -> Option<Witness> {
    let lie_side = g.act_on_lie(candidate.components());
    // torus side evaluated as composition: move the point, then evaluate
    let moved_point: Vec<FieldElement> = {
        let mut out = Vec::with_capacity(point.len());
        for j in 0..point.len() {
            let v = point[g.perm()[j]].clone();
            let v = if g.signs()[j] == 1 {
                v
            } else {
                v.inverse().ok()?
            };
            out.push(v);
        }
        out
    };
    for (i, (lhs, original)) in lie_side.iter().zip(candidate.components()).enumerate() {
        let (Ok(l), Ok(r)) = (lhs.evaluate(point), original.evaluate(&moved_point)) else {
            return None;
        };
        if l != r {
            return Some(Witness {
                point: point.to_vec(),
                component: i,
                lie_value: l,
                torus_value: r,
            });
        }
    }
    None
}

fn sample_equivariance(
    candidate: &MapCandidate,
    g: &SignedPermutation,
    stream: &mut SampleStream,
    points: usize,
) -> Result<(bool, Option<Witness>), EngineError> {
    let mut checked = 0;
    let mut attempts = 0;
    while checked < points {
        attempts += 1;
        if attempts > points * 100 {
            return Err(EngineError::DegenerateSpec(
                "could not sample enough pole-free points".into(),
            ));
        }
        let field = candidate.field();
        let free: Vec<FieldElement> = (0..candidate.pair().rank())
            .map(|_| stream.nonzero_element(&field))
            .collect();
        let Some(point) = candidate.torus_point(&free) else {
            continue;
        };
        match witness_at(candidate, g, &point) {
            Some(w) => return Ok((false, Some(w))),
            None => {
                // count only points where both sides actually evaluated
                let ok = candidate
                    .components()
                    .iter()
                    .all(|c| c.evaluate(&point).is_ok());
                if ok {
                    checked += 1;
                }
            }
        }
    }
    Ok((true, None))
}

/// Whether a verification winds up exact or sampled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMode {
    Symbolic,
    Sampled,
}

#[derive(Debug, Clone)]
pub struct Witness {
    pub point: Vec<FieldElement>,
    pub component: usize,
    pub lie_value: FieldElement,
    pub torus_value: FieldElement,
}

#[derive(Debug, Clone)]
pub struct ElementCheck {
    pub element: usize,
    pub pass: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone)]
pub struct EquivarianceReport {
    pub results: Vec<ElementCheck>,
    pub mode: CheckMode,
    /// Upper bound on the probability a sampled pass is a false accept.
    pub failure_bound: Option<f64>,
}

impl EquivarianceReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }
}

impl MapCandidate {
    /// Positive dominance certificate: sample points until the reduced
    /// free-coordinate Jacobian has full rank r. After `trials` failed
    /// samples the check reports `false` (inconclusive, never a proof).
    pub fn check_dominance(
        &self,
        p: u64,
        trials: usize,
        stream: &mut SampleStream,
    ) -> Result<bool, EngineError> {
        let over_p = self.to_prime_field(p)?;
        let pair = over_p.pair();
        let field = pair.field();
        let r = pair.rank();
        // reduced map: free Lie components as functions of free torus vars
        let mut reduced = Vec::with_capacity(r);
        for &i in pair.free() {
            reduced.push(pair.reduce_to_free(&over_p.components[i], Side::Torus)?);
        }
        // numerator/denominator partials per component and variable
        let mut parts = Vec::with_capacity(r);
        for rf in &reduced {
            let n = rf.num().clone();
            let d = rf.den().clone();
            let per_var: Vec<_> = pair
                .free()
                .iter()
                .map(|&v| (n.partial_derivative(v), d.partial_derivative(v)))
                .collect();
            parts.push((n, d, per_var));
        }
        'trial: for _ in 0..trials {
            let free: Vec<FieldElement> = (0..r)
                .map(|_| stream.nonzero_element(&field))
                .collect();
            let Some(point) = over_p.torus_point(&free) else {
                continue;
            };
            let mut jac = vec![vec![field.zero(); r]; r];
            for (row, (n, d, per_var)) in parts.iter().enumerate() {
                let dv = d.evaluate(&point)?;
                if dv.is_zero() {
                    continue 'trial;
                }
                let nv = n.evaluate(&point)?;
                let d2 = dv.mul(&dv);
                for (col, (dn, dd)) in per_var.iter().enumerate() {
                    let dnv = dn.evaluate(&point)?;
                    let ddv = dd.evaluate(&point)?;
                    // (n' d - n d') / d^2
                    jac[row][col] = dnv.mul(&dv).sub(&nv.mul(&ddv)).div(&d2)?;
                }
            }
            if matrix_rank(&mut jac) == r {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn matrix_rank(m: &mut [Vec<FieldElement>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..rows).find(|&i| !m[i][col].is_zero());
        let Some(pivot) = pivot else { continue };
        m.swap(rank, pivot);
        let inv = m[rank][col].inverse().expect("nonzero pivot");
        for j in 0..cols {
            m[rank][j] = m[rank][j].mul(&inv);
        }
        for i in 0..rows {
            if i != rank && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for j in 0..cols {
                    let delta = m[rank][j].mul(&factor);
                    m[i][j] = m[i][j].sub(&delta);
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
