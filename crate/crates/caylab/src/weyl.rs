//! Torus/Lie-algebra pairs with their Weyl actions.
//!
//! A pair presents a maximal torus T and its Lie algebra by ambient
//! coordinates plus dependency relations (a Laurent monomial per
//! dependent torus coordinate, a linear form per dependent Lie
//! coordinate). Weyl elements are signed permutations of the ambient
//! coordinates: y_i -> y_{sigma(i)}^{eps_i} on the torus side and
//! x_i -> eps_i x_{sigma(i)} on the Lie side.

use crate::field::Field;
use crate::poly::{MultiPoly, PolyError, RatFunc, MAX_VARS};
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("group closure exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("bad pair parameter: {0}")]
    BadParameter(String),
    #[error("generator {generator} does not preserve the {side} dependency locus")]
    DependencyViolated { generator: usize, side: &'static str },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A coordinate permutation combined with per-coordinate inversion
/// (torus) or negation (Lie algebra).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self, WeylError> {
        let m = perm.len();
        if signs.len() != m {
            return Err(WeylError::BadParameter(
                "permutation and sign vector lengths differ".into(),
            ));
        }
        let mut seen = vec![false; m];
        for &p in &perm {
            if p >= m || seen[p] {
                return Err(WeylError::BadParameter("not a permutation".into()));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(WeylError::BadParameter("signs must be +-1".into()));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn identity(m: usize) -> Self {
        SignedPermutation {
            perm: (0..m).collect(),
            signs: vec![1; m],
        }
    }

    pub fn transposition(m: usize, i: usize, j: usize) -> Self {
        assert!(i < m && j < m);
        let mut perm: Vec<usize> = (0..m).collect();
        perm.swap(i, j);
        SignedPermutation {
            perm,
            signs: vec![1; m],
        }
    }

    /// y_i -> 1/y_i on every coordinate (x_i -> -x_i on the Lie side).
    pub fn global_inversion(m: usize) -> Self {
        SignedPermutation {
            perm: (0..m).collect(),
            signs: vec![-1; m],
        }
    }

    pub fn arity(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s == 1)
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Group law chosen so that acting by `a.compose(b)` equals acting by
    /// `b` first, then `a`, on functions.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let m = self.perm.len();
        assert_eq!(m, other.perm.len(), "mixed arities");
        let perm = (0..m).map(|j| self.perm[other.perm[j]]).collect();
        let signs = (0..m)
            .map(|j| other.signs[j] * self.signs[other.perm[j]])
            .collect();
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let m = self.perm.len();
        let mut perm = vec![0usize; m];
        let mut signs = vec![1i8; m];
        for j in 0..m {
            perm[self.perm[j]] = j;
            signs[self.perm[j]] = self.signs[j];
        }
        SignedPermutation { perm, signs }
    }

    /// Block embedding into a wider ambient space at `offset`.
    fn embed(&self, ambient: usize, offset: usize) -> SignedPermutation {
        let mut perm: Vec<usize> = (0..ambient).collect();
        let mut signs = vec![1i8; ambient];
        for j in 0..self.perm.len() {
            perm[offset + j] = offset + self.perm[j];
            signs[offset + j] = self.signs[j];
        }
        SignedPermutation { perm, signs }
    }

    /// Substitute every torus variable occurrence per this element:
    /// y_j -> y_{sigma(j)}^{eps_j}.
    pub fn act_on_torus_func(&self, f: &RatFunc) -> Result<RatFunc, PolyError> {
        let m = self.perm.len();
        let field = f.field();
        let assignment: Vec<RatFunc> = (0..m)
            .map(|j| {
                let target = RatFunc::variable(field, m, self.perm[j]);
                if self.signs[j] == 1 {
                    Ok(target)
                } else {
                    RatFunc::constant(field, m, field.one()).div(&target)
                }
            })
            .collect::<Result<_, _>>()?;
        f.substitute(&assignment)
    }

    /// Componentwise torus substitution on a map's component tuple.
    pub fn act_on_torus(&self, components: &[RatFunc]) -> Result<Vec<RatFunc>, PolyError> {
        components
            .iter()
            .map(|c| self.act_on_torus_func(c))
            .collect()
    }

    /// Linear action on a tuple of ambient Lie coordinates:
    /// out_i = eps_i * in_{sigma(i)}.
    pub fn act_on_lie(&self, components: &[RatFunc]) -> Vec<RatFunc> {
        let m = self.perm.len();
        assert_eq!(components.len(), m, "component count != ambient dimension");
        (0..m)
            .map(|i| {
                let c = components[self.perm[i]].clone();
                if self.signs[i] == 1 {
                    c
                } else {
                    c.neg()
                }
            })
            .collect()
    }

    /// Substitute every Lie variable occurrence: x_j -> eps_j x_{sigma(j)}.
    pub fn act_on_lie_func(&self, f: &RatFunc) -> Result<RatFunc, PolyError> {
        let m = self.perm.len();
        let field = f.field();
        let assignment: Vec<RatFunc> = (0..m)
            .map(|j| {
                let v = RatFunc::variable(field, m, self.perm[j]);
                if self.signs[j] == 1 {
                    v
                } else {
                    v.neg()
                }
            })
            .collect();
        f.substitute(&assignment)
    }

    fn key(&self) -> (Vec<usize>, Vec<i8>) {
        (self.perm.clone(), self.signs.clone())
    }
}

/// Full closure of a generating set, including the identity.
#[derive(Debug, Clone)]
pub struct GroupClosure {
    elements: Vec<SignedPermutation>,
}

impl GroupClosure {
    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// BFS closure from the identity, multiplying by generators in the given
/// order. Deterministic element ordering; `CapExceeded` past `cap`.
pub fn close_group(
    generators: &[SignedPermutation],
    cap: usize,
) -> Result<GroupClosure, WeylError> {
    assert!(cap >= 1, "cap must be positive");
    let m = generators
        .first()
        .map(SignedPermutation::arity)
        .unwrap_or(0);
    let identity = SignedPermutation::identity(m);
    let mut seen = HashSet::new();
    seen.insert(identity.key());
    let mut elements = vec![identity];
    let mut frontier = 0;
    while frontier < elements.len() {
        let current = elements[frontier].clone();
        frontier += 1;
        for g in generators {
            let next = current.compose(g);
            if seen.insert(next.key()) {
                if elements.len() + 1 > cap {
                    return Err(WeylError::CapExceeded(cap));
                }
                elements.push(next);
            }
        }
    }
    Ok(GroupClosure { elements })
}

/// Which side of the pair a reduction works on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Torus,
    Lie,
}

/// A maximal torus and its Lie algebra in ambient coordinates, plus the
/// Weyl generators. Dependent coordinates are eliminated by substitution,
/// so all identity checks happen in plain rational-function fields.
#[derive(Debug, Clone)]
pub struct TorusLiePair {
    name: String,
    ambient: usize,
    free: Vec<usize>,
    torus_deps: Vec<(usize, RatFunc)>,
    lie_deps: Vec<(usize, MultiPoly)>,
    generators: Vec<SignedPermutation>,
    field: Field,
}

impl TorusLiePair {
    /// Validates arity bookkeeping and that every generator preserves
    /// both dependency loci.
    pub fn new(
        name: impl Into<String>,
        ambient: usize,
        torus_deps: Vec<(usize, RatFunc)>,
        lie_deps: Vec<(usize, MultiPoly)>,
        generators: Vec<SignedPermutation>,
        field: Field,
    ) -> Result<Self, WeylError> {
        if ambient > MAX_VARS {
            return Err(WeylError::BadParameter(format!(
                "ambient dimension {ambient} exceeds {MAX_VARS}"
            )));
        }
        if torus_deps.len() != lie_deps.len() {
            return Err(WeylError::BadParameter(
                "torus and Lie sides must declare the same dependent coordinates".into(),
            ));
        }
        let dependent: HashSet<usize> = torus_deps.iter().map(|(i, _)| *i).collect();
        if dependent.len() != torus_deps.len()
            || !lie_deps.iter().all(|(i, _)| dependent.contains(i))
        {
            return Err(WeylError::BadParameter(
                "dependent coordinate indices must match on both sides".into(),
            ));
        }
        let free: Vec<usize> = (0..ambient).filter(|i| !dependent.contains(i)).collect();
        let pair = TorusLiePair {
            name: name.into(),
            ambient,
            free,
            torus_deps,
            lie_deps,
            generators,
            field,
        };
        pair.validate_generators()?;
        Ok(pair)
    }

    fn validate_generators(&self) -> Result<(), WeylError> {
        for (k, g) in self.generators.iter().enumerate() {
            if g.arity() != self.ambient {
                return Err(WeylError::BadParameter(format!(
                    "generator {k} has arity {} != ambient {}",
                    g.arity(),
                    self.ambient
                )));
            }
            for (j, expr) in &self.torus_deps {
                // defining relation y_j - expr must stay on the locus
                let rel = RatFunc::variable(self.field, self.ambient, *j).sub(expr)?;
                let moved = g.act_on_torus_func(&rel)?;
                let reduced = self.reduce_to_free(&moved, Side::Torus)?;
                if !reduced.is_zero_poly() && !reduced.num().is_zero() {
                    return Err(WeylError::DependencyViolated {
                        generator: k,
                        side: "torus",
                    });
                }
            }
            for (j, form) in &self.lie_deps {
                let rel = RatFunc::variable(self.field, self.ambient, *j)
                    .sub(&RatFunc::from_poly(form.clone()))?;
                let moved = g.act_on_lie_func(&rel)?;
                let reduced = self.reduce_to_free(&moved, Side::Lie)?;
                if !reduced.num().is_zero() {
                    return Err(WeylError::DependencyViolated {
                        generator: k,
                        side: "lie",
                    });
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Number of free coordinates (the rank).
    pub fn rank(&self) -> usize {
        self.free.len()
    }

    pub fn free(&self) -> &[usize] {
        &self.free
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn generators(&self) -> &[SignedPermutation] {
        &self.generators
    }

    pub fn torus_deps(&self) -> &[(usize, RatFunc)] {
        &self.torus_deps
    }

    pub fn lie_deps(&self) -> &[(usize, MultiPoly)] {
        &self.lie_deps
    }

    pub fn closure(&self, cap: usize) -> Result<GroupClosure, WeylError> {
        if self.generators.is_empty() {
            return close_group(&[SignedPermutation::identity(self.ambient)], cap);
        }
        close_group(&self.generators, cap)
    }

    /// Substitute dependent coordinates by their dependency expressions;
    /// the result involves free coordinates only (still ambient arity).
    pub fn reduce_to_free(&self, f: &RatFunc, side: Side) -> Result<RatFunc, PolyError> {
        let mut assignment: Vec<RatFunc> = (0..self.ambient)
            .map(|i| RatFunc::variable(self.field, self.ambient, i))
            .collect();
        match side {
            Side::Torus => {
                for (j, expr) in &self.torus_deps {
                    assignment[*j] = expr.clone();
                }
            }
            Side::Lie => {
                for (j, form) in &self.lie_deps {
                    assignment[*j] = RatFunc::from_poly(form.clone());
                }
            }
        }
        f.substitute(&assignment)
    }

    /// Same field, re-tagged. Dependency coefficients here are always
    /// +-1 integers, so the translation is exact in any field.
    pub fn with_field(&self, field: Field) -> Result<TorusLiePair, WeylError> {
        if field == self.field {
            return Ok(self.clone());
        }
        let translate_rf = |r: &RatFunc| -> Result<RatFunc, WeylError> {
            Ok(RatFunc::new(
                translate_poly(r.num(), field)?,
                translate_poly(r.den(), field)?,
            )?)
        };
        let torus_deps = self
            .torus_deps
            .iter()
            .map(|(j, e)| Ok((*j, translate_rf(e)?)))
            .collect::<Result<_, WeylError>>()?;
        let lie_deps = self
            .lie_deps
            .iter()
            .map(|(j, e)| Ok((*j, translate_poly(e, field)?)))
            .collect::<Result<_, WeylError>>()?;
        TorusLiePair::new(
            self.name.clone(),
            self.ambient,
            torus_deps,
            lie_deps,
            self.generators.clone(),
            field,
        )
    }

    /// Block concatenation: ambient spaces side by side, generators
    /// embedded per factor, Weyl group the direct product.
    pub fn product(a: &TorusLiePair, b: &TorusLiePair) -> Result<TorusLiePair, WeylError> {
        if a.field != b.field {
            return Err(WeylError::BadParameter(
                "product factors must share a field".into(),
            ));
        }
        let ambient = a.ambient + b.ambient;
        if ambient > MAX_VARS {
            return Err(WeylError::BadParameter(format!(
                "product ambient dimension {ambient} exceeds {MAX_VARS}"
            )));
        }
        let mut torus_deps = Vec::new();
        let mut lie_deps = Vec::new();
        for (j, e) in &a.torus_deps {
            torus_deps.push((*j, e.embed(ambient, 0)?));
        }
        for (j, e) in &b.torus_deps {
            torus_deps.push((a.ambient + j, e.embed(ambient, a.ambient)?));
        }
        for (j, e) in &a.lie_deps {
            lie_deps.push((*j, e.embed(ambient, 0)?));
        }
        for (j, e) in &b.lie_deps {
            lie_deps.push((a.ambient + j, e.embed(ambient, a.ambient)?));
        }
        let mut generators = Vec::new();
        for g in &a.generators {
            generators.push(g.embed(ambient, 0));
        }
        for g in &b.generators {
            generators.push(g.embed(ambient, a.ambient));
        }
        TorusLiePair::new(
            format!("product({},{})", a.name, b.name),
            ambient,
            torus_deps,
            lie_deps,
            generators,
            a.field,
        )
    }
}

fn translate_poly(p: &MultiPoly, field: Field) -> Result<MultiPoly, WeylError> {
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        let v = match c.as_rational() {
            Some(r) => {
                use num_traits::ToPrimitive;
                let n = r.numer().to_i64().ok_or_else(|| {
                    WeylError::BadParameter("dependency coefficient too large".into())
                })?;
                let d = r.denom().to_i64().ok_or_else(|| {
                    WeylError::BadParameter("dependency coefficient too large".into())
                })?;
                field
                    .element_from_ratio(n, d)
                    .map_err(|e| WeylError::Poly(PolyError::Field(e)))?
            }
            None => match c.residue() {
                Some(v) => field.element_from_u64(v),
                None => unreachable!(),
            },
        };
        terms.push((m.exponents(p.nvars()), v));
    }
    Ok(MultiPoly::from_terms(field, p.nvars(), &terms)?)
}

/// Built-in pair descriptors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuiltinPair {
    /// sl(n): ambient n, y_n = (y_1...y_{n-1})^-1, x_n = -(x_1+...+x_{n-1}),
    /// adjacent transpositions. Requires n >= 2.
    Sl(usize),
    /// sl(3) dependencies plus the global inversion generator.
    G2,
    /// Rank-1 torus, no dependencies, Weyl group Z/2 acting by inversion.
    Sl2,
    /// Same rank-1 pattern as [`BuiltinPair::Sl2`].
    Pgl2,
    Product(Box<BuiltinPair>, Box<BuiltinPair>),
}

impl std::fmt::Display for BuiltinPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BuiltinPair::Sl(n) => write!(f, "sl({n})"),
            BuiltinPair::G2 => write!(f, "g2"),
            BuiltinPair::Sl2 => write!(f, "sl2"),
            BuiltinPair::Pgl2 => write!(f, "pgl2"),
            BuiltinPair::Product(a, b) => write!(f, "product({a},{b})"),
        }
    }
}

/// Construct a built-in pair over the given coefficient field.
pub fn builtin_pair(which: &BuiltinPair, field: Field) -> Result<TorusLiePair, WeylError> {
    match which {
        BuiltinPair::Sl(n) => {
            let n = *n;
            if n < 2 {
                return Err(WeylError::BadParameter("sl(n) needs n >= 2".into()));
            }
            if n > MAX_VARS {
                return Err(WeylError::BadParameter(format!(
                    "sl(n) supported up to n = {MAX_VARS}"
                )));
            }
            sl_pair(n, field, false)
        }
        BuiltinPair::G2 => sl_pair(3, field, true),
        BuiltinPair::Sl2 => rank_one_pair("sl2", field),
        BuiltinPair::Pgl2 => rank_one_pair("pgl2", field),
        BuiltinPair::Product(a, b) => {
            let pa = builtin_pair(a, field)?;
            let pb = builtin_pair(b, field)?;
            TorusLiePair::product(&pa, &pb)
        }
    }
}

fn sl_pair(n: usize, field: Field, with_inversion: bool) -> Result<TorusLiePair, WeylError> {
    // y_{n-1} = 1 / (y_0 ... y_{n-2})
    let mut prod = MultiPoly::one(field, n);
    for i in 0..n - 1 {
        prod = prod.mul(&MultiPoly::variable(field, n, i))?;
    }
    let torus_dep = RatFunc::new(MultiPoly::one(field, n), prod)?;
    // x_{n-1} = -(x_0 + ... + x_{n-2})
    let mut sum = MultiPoly::zero(field, n);
    for i in 0..n - 1 {
        sum = sum.add(&MultiPoly::variable(field, n, i))?;
    }
    let lie_dep = sum.neg();
    let mut generators: Vec<SignedPermutation> = (0..n - 1)
        .map(|i| SignedPermutation::transposition(n, i, i + 1))
        .collect();
    let name = if with_inversion {
        generators.push(SignedPermutation::global_inversion(n));
        "g2".to_string()
    } else {
        format!("sl({n})")
    };
    TorusLiePair::new(
        name,
        n,
        vec![(n - 1, torus_dep)],
        vec![(n - 1, lie_dep)],
        generators,
        field,
    )
}

fn rank_one_pair(name: &str, field: Field) -> Result<TorusLiePair, WeylError> {
    TorusLiePair::new(
        name,
        1,
        Vec::new(),
        Vec::new(),
        vec![SignedPermutation::global_inversion(1)],
        field,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn transpositions_generate_sym3() {
        let gens = vec![
            SignedPermutation::transposition(3, 0, 1),
            SignedPermutation::transposition(3, 1, 2),
        ];
        assert_eq!(close_group(&gens, 100).unwrap().order(), 6);
    }

    #[test]
    fn sym3_with_inversion_has_order_12() {
        let gens = vec![
            SignedPermutation::transposition(3, 0, 1),
            SignedPermutation::transposition(3, 1, 2),
            SignedPermutation::global_inversion(3),
        ];
        assert_eq!(close_group(&gens, 100).unwrap().order(), 12);
    }

    #[test]
    fn identity_closure_is_trivial() {
        let gens = vec![SignedPermutation::identity(4)];
        assert_eq!(close_group(&gens, 10).unwrap().order(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let gens = vec![
            SignedPermutation::transposition(4, 0, 1),
            SignedPermutation::transposition(4, 1, 2),
            SignedPermutation::transposition(4, 2, 3),
        ];
        assert_eq!(
            close_group(&gens, 10).unwrap_err(),
            WeylError::CapExceeded(10)
        );
    }

    #[test]
    fn closure_orders_for_builtins() {
        for n in 2..=6 {
            let pair = builtin_pair(&BuiltinPair::Sl(n), q()).unwrap();
            let expected: usize = (1..=n).product();
            assert_eq!(pair.closure(1000).unwrap().order(), expected, "sl({n})");
        }
        let g2 = builtin_pair(&BuiltinPair::G2, q()).unwrap();
        assert_eq!(g2.closure(100).unwrap().order(), 12);
        let prod = builtin_pair(
            &BuiltinPair::Product(Box::new(BuiltinPair::Sl2), Box::new(BuiltinPair::Pgl2)),
            q(),
        )
        .unwrap();
        assert_eq!(prod.ambient(), 2);
        assert_eq!(prod.rank(), 2);
        assert_eq!(prod.closure(100).unwrap().order(), 4);
    }

    #[test]
    fn torus_action_examples() {
        // inversion on one variable: t -> 1/t
        let inv = SignedPermutation::global_inversion(1);
        let t = RatFunc::variable(q(), 1, 0);
        let moved = inv.act_on_torus_func(&t).unwrap();
        let one_over_t = RatFunc::new(MultiPoly::one(q(), 1), MultiPoly::variable(q(), 1, 0)).unwrap();
        assert!(moved.equal(&one_over_t).unwrap());

        // (12) with trivial signs: y1 + 2 y2 -> y2 + 2 y1
        let swap = SignedPermutation::transposition(2, 0, 1);
        let f = RatFunc::variable(q(), 2, 0)
            .add(&RatFunc::variable(q(), 2, 1).scale(&q().element_from_i64(2)))
            .unwrap();
        let g = swap.act_on_torus_func(&f).unwrap();
        let expected = RatFunc::variable(q(), 2, 1)
            .add(&RatFunc::variable(q(), 2, 0).scale(&q().element_from_i64(2)))
            .unwrap();
        assert!(g.equal(&expected).unwrap());
    }

    #[test]
    fn lie_action_examples() {
        let v: Vec<RatFunc> = (0..3).map(|i| RatFunc::variable(q(), 3, i)).collect();
        let inv = SignedPermutation::global_inversion(3);
        let out = inv.act_on_lie(&v);
        for (o, i) in out.iter().zip(v.iter()) {
            assert!(o.equal(&i.neg()).unwrap());
        }
        let id = SignedPermutation::identity(3);
        let out = id.act_on_lie(&v);
        for (o, i) in out.iter().zip(v.iter()) {
            assert!(o.equal(i).unwrap());
        }
        let swap = SignedPermutation::transposition(2, 0, 1);
        let w: Vec<RatFunc> = (0..2).map(|i| RatFunc::variable(q(), 2, i)).collect();
        let out = swap.act_on_lie(&w);
        assert!(out[0].equal(&w[1]).unwrap());
        assert!(out[1].equal(&w[0]).unwrap());
    }

    #[test]
    fn g2_inversion_on_psi_component_flips_sign() {
        // iota applied to -(y1+1)/(y1-1) equals minus the original
        let g2 = builtin_pair(&BuiltinPair::G2, q()).unwrap();
        let iota = &g2.generators()[2];
        let y = RatFunc::variable(q(), 3, 0);
        let one = RatFunc::constant(q(), 3, q().one());
        let psi1 = y.add(&one).unwrap().div(&y.sub(&one).unwrap()).unwrap().neg();
        let moved = iota.act_on_torus_func(&psi1).unwrap();
        assert!(moved.equal(&psi1.neg()).unwrap());
    }

    #[test]
    fn reduce_to_free_on_sl3() {
        let pair = builtin_pair(&BuiltinPair::Sl(3), q()).unwrap();
        // defining relation y1 y2 y3 - 1 reduces to 0
        let rel = RatFunc::variable(q(), 3, 0)
            .mul(&RatFunc::variable(q(), 3, 1))
            .unwrap()
            .mul(&RatFunc::variable(q(), 3, 2))
            .unwrap()
            .sub(&RatFunc::constant(q(), 3, q().one()))
            .unwrap();
        assert!(pair
            .reduce_to_free(&rel, Side::Torus)
            .unwrap()
            .num()
            .is_zero());
        // x1 + x2 + x3 reduces to 0 on the Lie side
        let sum = RatFunc::variable(q(), 3, 0)
            .add(&RatFunc::variable(q(), 3, 1))
            .unwrap()
            .add(&RatFunc::variable(q(), 3, 2))
            .unwrap();
        assert!(pair.reduce_to_free(&sum, Side::Lie).unwrap().num().is_zero());
        // y3 itself reduces to 1/(y1 y2)
        let y3 = RatFunc::variable(q(), 3, 2);
        let reduced = pair.reduce_to_free(&y3, Side::Torus).unwrap();
        let expected = RatFunc::new(
            MultiPoly::one(q(), 3),
            MultiPoly::variable(q(), 3, 0)
                .mul(&MultiPoly::variable(q(), 3, 1))
                .unwrap(),
        )
        .unwrap();
        assert!(reduced.equal(&expected).unwrap());
    }

    #[test]
    fn inverse_action_roundtrip() {
        let g2 = builtin_pair(&BuiltinPair::G2, q()).unwrap();
        let phi: Vec<RatFunc> = (0..3)
            .map(|i| {
                let y = RatFunc::variable(q(), 3, i);
                let one = RatFunc::constant(q(), 3, q().one());
                y.add(&one).unwrap().div(&y.sub(&one).unwrap()).unwrap()
            })
            .collect();
        for g in g2.closure(100).unwrap().elements() {
            let there = g.act_on_torus(&phi).unwrap();
            let back = g.inverse().act_on_torus(&there).unwrap();
            for (b, original) in back.iter().zip(phi.iter()) {
                assert!(b.equal(original).unwrap());
            }
        }
    }

    #[test]
    fn generators_preserve_dependency_loci() {
        // TorusLiePair::new re-validates; these must all construct
        for n in 2..=6 {
            builtin_pair(&BuiltinPair::Sl(n), q()).unwrap();
        }
        builtin_pair(&BuiltinPair::G2, q()).unwrap();
        builtin_pair(
            &BuiltinPair::Product(Box::new(BuiltinPair::Sl(3)), Box::new(BuiltinPair::G2)),
            q(),
        )
        .unwrap();
    }

    #[test]
    fn lie_action_preserves_zero_coefficient_sum() {
        use crate::field::SampleStream;
        let pair = builtin_pair(&BuiltinPair::Sl(4), q()).unwrap();
        let mut stream = SampleStream::new(5);
        for _ in 0..50 {
            // random linear form with zero coefficient sum
            let mut coeffs: Vec<_> = (0..3).map(|_| stream.element(&q())).collect();
            let last = coeffs
                .iter()
                .fold(q().zero(), |acc, c| acc.add(c))
                .neg();
            coeffs.push(last);
            for g in pair.generators() {
                // act on the coordinate tuple and collect the moved form
                let vars: Vec<RatFunc> = (0..4).map(|i| RatFunc::variable(q(), 4, i)).collect();
                let moved = g.act_on_lie(&vars);
                let mut form = RatFunc::constant(q(), 4, q().zero());
                for (c, m) in coeffs.iter().zip(moved.iter()) {
                    form = form.add(&m.scale(c)).unwrap();
                }
                // sum of coefficients = value at (1,1,1,1)
                let ones = vec![q().one(); 4];
                assert!(form.evaluate(&ones).unwrap().is_zero());
            }
        }
    }
}
