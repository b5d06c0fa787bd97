//! Isogeny precomposition and product maps.

use super::candidate::MapCandidate;
use super::EngineError;
use crate::poly::{MultiPoly, RatFunc};
use crate::weyl::{Side, TorusLiePair};

/// A torus self-isogeny: an integer exponent matrix E with det E != 0,
/// acting on the free coordinates by t_i -> prod_j t_j^{E_ij}. The
/// kernel order is |det E|.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsogenySpec {
    exponents: Vec<Vec<i64>>,
}

impl IsogenySpec {
    pub fn new(exponents: Vec<Vec<i64>>) -> Result<Self, EngineError> {
        let r = exponents.len();
        if r == 0 || exponents.iter().any(|row| row.len() != r) {
            return Err(EngineError::RankMismatch(0, r));
        }
        let spec = IsogenySpec { exponents };
        if spec.determinant() == 0 {
            return Err(EngineError::SingularIsogeny);
        }
        Ok(spec)
    }

    pub fn identity(r: usize) -> Self {
        let exponents = (0..r)
            .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
            .collect();
        IsogenySpec { exponents }
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[Vec<i64>] {
        &self.exponents
    }

    /// Exact integer determinant (cofactor expansion; ranks here are tiny).
    pub fn determinant(&self) -> i64 {
        fn det(m: &[Vec<i64>]) -> i64 {
            let n = m.len();
            if n == 1 {
                return m[0][0];
            }
            let mut acc = 0i64;
            for col in 0..n {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, v)| *v)
                            .collect()
                    })
                    .collect();
                let sign = if col % 2 == 0 { 1 } else { -1 };
                acc += sign * m[0][col] * det(&minor);
            }
            acc
        }
        det(&self.exponents)
    }

    pub fn kernel_order(&self) -> u64 {
        self.determinant().unsigned_abs()
    }

    /// Block-diagonal direct sum; kernel orders multiply.
    pub fn block_diag(a: &IsogenySpec, b: &IsogenySpec) -> IsogenySpec {
        let ra = a.rank();
        let r = ra + b.rank();
        let mut exponents = vec![vec![0i64; r]; r];
        for (i, row) in a.exponents.iter().enumerate() {
            exponents[i][..ra].copy_from_slice(row);
        }
        for (i, row) in b.exponents.iter().enumerate() {
            exponents[ra + i][ra..].copy_from_slice(row);
        }
        IsogenySpec { exponents }
    }
}

/// The reduced Weyl action of one generator on the free coordinates, as
/// a Laurent-monomial exponent matrix. Row k holds the exponents of the
/// image of free coordinate k.
fn reduced_generator_matrix(
    pair: &TorusLiePair,
    generator: &crate::weyl::SignedPermutation,
) -> Result<Vec<Vec<i64>>, EngineError> {
    let free = pair.free();
    let r = free.len();
    let position = |ambient: usize| free.iter().position(|&f| f == ambient);
    let mut rows = Vec::with_capacity(r);
    for &fi in free {
        let target = generator.perm()[fi];
        let sign = i64::from(generator.signs()[fi]);
        let mut row = vec![0i64; r];
        match position(target) {
            Some(k) => row[k] = sign,
            None => {
                // dependent image: expand its Laurent dependency
                let expr = pair
                    .torus_deps()
                    .iter()
                    .find(|(j, _)| *j == target)
                    .map(|(_, e)| e)
                    .expect("non-free coordinate has a dependency");
                let exps = laurent_exponents(expr)?;
                for (k, &f) in free.iter().enumerate() {
                    row[k] = sign * exps[f];
                }
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Exponent vector of a Laurent monomial given as a one-term/one-term
/// rational function.
fn laurent_exponents(expr: &RatFunc) -> Result<Vec<i64>, EngineError> {
    let single = |p: &MultiPoly| -> Result<Vec<i64>, EngineError> {
        if p.num_terms() != 1 {
            return Err(EngineError::DegenerateSpec(
                "dependency is not a Laurent monomial".into(),
            ));
        }
        let (mono, _) = p.leading_term().unwrap();
        Ok((0..p.nvars()).map(|i| mono.exponent(i) as i64).collect())
    };
    let num = single(expr.num())?;
    let den = single(expr.den())?;
    Ok(num.iter().zip(den.iter()).map(|(a, b)| a - b).collect())
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = (0..n).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

impl MapCandidate {
    /// Precompose with a torus isogeny. The isogeny must have the pair's
    /// rank and commute with the reduced Weyl action of every generator.
    pub fn compose_with_isogeny(&self, iso: &IsogenySpec) -> Result<MapCandidate, EngineError> {
        let pair = self.pair();
        let r = pair.rank();
        if iso.rank() != r {
            return Err(EngineError::RankMismatch(iso.rank(), r));
        }
        for (k, g) in pair.generators().iter().enumerate() {
            let m = reduced_generator_matrix(pair, g)?;
            if mat_mul(&m, iso.exponents()) != mat_mul(iso.exponents(), &m) {
                return Err(EngineError::NotIntertwining(k));
            }
        }
        let field = pair.field();
        let ambient = pair.ambient();
        // assignment: free coordinate k -> prod_j free_j^{E_kj}
        let mut assignment: Vec<RatFunc> = (0..ambient)
            .map(|i| RatFunc::variable(field, ambient, i))
            .collect();
        for (k, &fk) in pair.free().iter().enumerate() {
            let mut num = MultiPoly::one(field, ambient);
            let mut den = MultiPoly::one(field, ambient);
            for (j, &fj) in pair.free().iter().enumerate() {
                let e = iso.exponents()[k][j];
                let var = MultiPoly::variable(field, ambient, fj);
                for _ in 0..e.unsigned_abs() {
                    if e > 0 {
                        num = num.mul(&var).map_err(EngineError::Poly)?;
                    } else {
                        den = den.mul(&var).map_err(EngineError::Poly)?;
                    }
                }
            }
            assignment[fk] = RatFunc::new(num, den).map_err(EngineError::Poly)?;
        }
        let mut components = Vec::with_capacity(ambient);
        for c in self.components() {
            let reduced = pair.reduce_to_free(c, Side::Torus)?;
            components.push(reduced.substitute(&assignment)?);
        }
        MapCandidate::new(pair.clone(), components)
    }
}

/// Candidate on the product pair with concatenated components.
pub fn product_map(a: &MapCandidate, b: &MapCandidate) -> Result<MapCandidate, EngineError> {
    let pair = TorusLiePair::product(a.pair(), b.pair())?;
    let ambient = pair.ambient();
    let offset = a.pair().ambient();
    let mut components = Vec::with_capacity(ambient);
    for c in a.components() {
        components.push(c.embed(ambient, 0).map_err(EngineError::Poly)?);
    }
    for c in b.components() {
        components.push(c.embed(ambient, offset).map_err(EngineError::Poly)?);
    }
    MapCandidate::new(pair, components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::degree::{
        brute_force_degree, DEFAULT_BRUTE_CAP, DEFAULT_FIBER_THRESHOLD,
    };
    use crate::field::Field;
    use crate::weyl::{builtin_pair, BuiltinPair};

    fn q() -> Field {
        Field::Rationals
    }

    fn moebius(field: Field) -> MapCandidate {
        let pair = builtin_pair(&BuiltinPair::Pgl2, field).unwrap();
        let t = RatFunc::variable(field, 1, 0);
        let one = RatFunc::constant(field, 1, field.one());
        let c = t.sub(&one).unwrap().div(&t.add(&one).unwrap()).unwrap();
        MapCandidate::new(pair, vec![c]).unwrap()
    }

    #[test]
    fn determinants() {
        assert_eq!(IsogenySpec::identity(3).kernel_order(), 1);
        let e = IsogenySpec::new(vec![vec![2]]).unwrap();
        assert_eq!(e.kernel_order(), 2);
        let f = IsogenySpec::new(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(f.determinant(), -2);
        assert_eq!(IsogenySpec::block_diag(&e, &f).kernel_order(), 4);
        assert!(matches!(
            IsogenySpec::new(vec![vec![1, 1], vec![1, 1]]),
            Err(EngineError::SingularIsogeny)
        ));
    }

    #[test]
    fn identity_isogeny_keeps_the_map() {
        let c = moebius(q());
        let composed = c.compose_with_isogeny(&IsogenySpec::identity(1)).unwrap();
        assert!(composed.components()[0].equal(&c.components()[0]).unwrap());
    }

    #[test]
    fn squaring_isogeny_doubles_the_degree() {
        let c = moebius(q());
        let sq = IsogenySpec::new(vec![vec![2]]).unwrap();
        let composed = c.compose_with_isogeny(&sq).unwrap();
        let report =
            brute_force_degree(&composed, 101, DEFAULT_BRUTE_CAP, DEFAULT_FIBER_THRESHOLD)
                .unwrap();
        assert_eq!(report.degree, 2);
    }

    #[test]
    fn rank_mismatch_rejected() {
        let c = moebius(q());
        let e = IsogenySpec::identity(2);
        assert!(matches!(
            c.compose_with_isogeny(&e),
            Err(EngineError::RankMismatch(2, 1))
        ));
    }

    #[test]
    fn non_intertwining_isogeny_rejected() {
        // shear on a rank-2 product torus does not commute with the
        // first factor's inversion
        let pa = moebius(q());
        let pb = moebius(q());
        let prod = product_map(&pa, &pb).unwrap();
        let shear = IsogenySpec::new(vec![vec![1, 1], vec![0, 1]]).unwrap();
        assert!(matches!(
            prod.compose_with_isogeny(&shear),
            Err(EngineError::NotIntertwining(_))
        ));
    }

    #[test]
    fn product_map_concatenates() {
        let a = moebius(q());
        let b = moebius(q());
        let prod = product_map(&a, &b).unwrap();
        assert_eq!(prod.pair().ambient(), 2);
        assert_eq!(prod.components().len(), 2);
        assert!(prod.check_target_containment().unwrap());
    }

    #[test]
    fn sl_generator_reduced_action_is_monomial() {
        // the last transposition on sl(3) sends y2 -> 1/(y1 y2) on free
        // coordinates
        let pair = builtin_pair(&BuiltinPair::Sl(3), q()).unwrap();
        let g = &pair.generators()[1]; // (2 3), touching the dependent slot
        let m = reduced_generator_matrix(&pair, g).unwrap();
        assert_eq!(m, vec![vec![1, 0], vec![-1, -1]]);
    }
}
