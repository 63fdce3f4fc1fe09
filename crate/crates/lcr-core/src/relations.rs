//! Polynomial relations among constitutive coefficients.
//!
//! Write the equation's nonzero coefficients as `c_0..c_m` (V side, by
//! derivative order) and `d_0..d_m` (I side). As the element parameters
//! vary, the coefficient vector sweeps out a variety; this module finds
//! polynomials vanishing on it and proves them exact.
//!
//! The vanishing ideal is bihomogeneous (scaling the two operators
//! independently stays on the variety) and homogeneous under the
//! grading `deg(c_i) = deg(d_i) = i`, so the search runs stratum by
//! stratum: all monomials of an exact c-degree, d-degree, and weighted
//! degree. Candidate relations are kernel vectors of the evaluation
//! matrix at random projective parameter points; they are lifted to
//! integers by rational reconstruction, re-verified on fresh samples,
//! and can be certified exactly by symbolic substitution
//! ([`verify_relation_exact`]), which is a proof rather than a
//! probabilistic check.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand_core::SeedableRng;

use crate::constitutive::{build_consteq, ConstEq, Parameterization};
use crate::network::Network;
use crate::polyalg::diffop::Shape;
use crate::polyalg::fp::{Fp, MODULUS};
use crate::polyalg::linalg::FieldMatrix;
use crate::polyalg::poly::{MultiPoly, VarRegistry};
use crate::polyalg::PolyError;

/// Hard cap on stratum size.
pub const MAX_STRATUM: usize = 200;

/// A relation among the coefficients, homogeneous in each variable
/// group and under the weighted grading.
#[derive(Clone, Debug)]
pub struct RelationPoly {
    /// Integer polynomial in `c0..`, `d0..`. When `lifted` is false the
    /// coefficients are residues modulo the working prime instead.
    pub poly: MultiPoly,
    pub bidegree: (usize, usize),
    pub weighted_degree: usize,
    pub lifted: bool,
}

impl RelationPoly {
    /// Canonical text form, terms in ascending monomial order.
    pub fn text(&self) -> String {
        self.poly.render_ascending()
    }
}

impl fmt::Display for RelationPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

/// Errors from relation discovery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationError {
    StratumTooLarge {
        size: usize,
        max: usize,
    },
    TooFewSamples {
        needed: usize,
        got: usize,
    },
    /// A relation variable is not of the form `c<index>` or `d<index>`.
    BadVariable(String),
    Poly(PolyError),
}

impl fmt::Display for RelationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationError::StratumTooLarge { size, max } => {
                write!(f, "stratum has {size} monomials, cap is {max}")
            }
            RelationError::TooFewSamples { needed, got } => {
                write!(f, "need at least {needed} samples, got {got}")
            }
            RelationError::BadVariable(name) => write!(f, "not a coefficient variable: {name:?}"),
            RelationError::Poly(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for RelationError {}

impl From<PolyError> for RelationError {
    fn from(e: PolyError) -> RelationError {
        RelationError::Poly(e)
    }
}

/// Registry of relation variables for the given operator shapes:
/// `c0..c{max_v}` then `d0..d{max_i}`.
pub fn relation_registry(v_shape: Shape, i_shape: Shape) -> Arc<VarRegistry> {
    let mut names = Vec::with_capacity(v_shape.max_deg + i_shape.max_deg + 2);
    for i in 0..=v_shape.max_deg {
        names.push(alloc::format!("c{i}"));
    }
    for j in 0..=i_shape.max_deg {
        names.push(alloc::format!("d{j}"));
    }
    VarRegistry::new(names).expect("generated names are distinct")
}

/// All monomials in the live coefficient variables (indices inside the
/// shape ranges) with c-degree `cdeg`, d-degree `ddeg`, and weighted
/// degree `wdeg` (weight of `c_i` and `d_i` is `i`). Exponent vectors
/// over [`relation_registry`], ascending lexicographic order.
pub fn monomial_stratum(
    v_shape: Shape,
    i_shape: Shape,
    cdeg: usize,
    ddeg: usize,
    wdeg: usize,
) -> Vec<Vec<u16>> {
    let n_c = v_shape.max_deg + 1;
    let n_vars = n_c + i_shape.max_deg + 1;
    // Exponent assignments for one variable group with a given total
    // degree, tagged with their weighted degree.
    fn group(range: Shape, offset: usize, n_vars: usize, deg: usize) -> Vec<(Vec<u16>, usize)> {
        let mut out = Vec::new();
        let mut exps = alloc::vec![0u16; n_vars];
        fn rec(
            idx: usize,
            hi: usize,
            left: usize,
            weight: usize,
            offset: usize,
            exps: &mut Vec<u16>,
            out: &mut Vec<(Vec<u16>, usize)>,
        ) {
            if left == 0 {
                out.push((exps.clone(), weight));
                return;
            }
            if idx > hi {
                return;
            }
            for take in 0..=left {
                exps[offset + idx] = take as u16;
                rec(
                    idx + 1,
                    hi,
                    left - take,
                    weight + take * idx,
                    offset,
                    exps,
                    out,
                );
            }
            exps[offset + idx] = 0;
        }
        rec(
            range.min_deg,
            range.max_deg,
            deg,
            0,
            offset,
            &mut exps,
            &mut out,
        );
        out
    }
    let c_parts = group(v_shape, 0, n_vars, cdeg);
    let d_parts = group(i_shape, n_c, n_vars, ddeg);
    let mut out = Vec::new();
    for (c_exps, c_w) in &c_parts {
        if *c_w > wdeg {
            continue;
        }
        for (d_exps, d_w) in &d_parts {
            if c_w + d_w != wdeg {
                continue;
            }
            let mut exps = c_exps.clone();
            for (e, d) in exps.iter_mut().zip(d_exps) {
                *e += *d;
            }
            out.push(exps);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Search one stratum for relations on a network's coefficients.
///
/// Coefficients are sampled through the projective parameterization (two
/// nonzero field values per element), the setting in which the
/// homogeneity properties hold; affine relations follow because every
/// affine coefficient tuple is a projective specialization. Candidates
/// are kernel vectors, integer-lifted when possible, and all re-verified
/// on a fresh batch of samples before being returned.
pub fn find_relations(
    net: &Network,
    cdeg: usize,
    ddeg: usize,
    wdeg: usize,
    samples: usize,
    seed: u64,
) -> Result<Vec<RelationPoly>, RelationError> {
    let eq = build_consteq(net, Parameterization::Projective)?;
    let v_shape = eq.v_op().shape();
    let i_shape = eq.i_op().shape();
    let stratum = monomial_stratum(v_shape, i_shape, cdeg, ddeg, wdeg);
    if stratum.is_empty() {
        return Ok(Vec::new());
    }
    if stratum.len() > MAX_STRATUM {
        return Err(RelationError::StratumTooLarge {
            size: stratum.len(),
            max: MAX_STRATUM,
        });
    }
    if samples < 2 * stratum.len() {
        return Err(RelationError::TooFewSamples {
            needed: 2 * stratum.len(),
            got: samples,
        });
    }
    let reg = relation_registry(v_shape, i_shape);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);

    let mut matrix = FieldMatrix::zeros(samples, stratum.len());
    for s in 0..samples {
        let values = sample_coefficients(&eq, v_shape, i_shape, &mut rng);
        for (m, exps) in stratum.iter().enumerate() {
            matrix[(s, m)] = eval_monomial(exps, &values);
        }
    }
    let kernel = matrix.kernel();

    let fresh: Vec<Vec<Fp>> = (0..stratum.len() + 8)
        .map(|_| sample_coefficients(&eq, v_shape, i_shape, &mut rng))
        .collect();

    let mut out = Vec::new();
    for vector in kernel {
        let (coeffs, lifted) = lift_vector(&vector);
        // Reject sampling flukes: the candidate must vanish on samples
        // it was not fitted to.
        let survives = fresh.iter().all(|values| {
            let mut acc = Fp::ZERO;
            for (coeff, exps) in coeffs.iter().zip(&stratum) {
                acc += Fp::from_bigint(coeff) * eval_monomial(exps, values);
            }
            acc.is_zero()
        });
        if !survives {
            continue;
        }
        let mut poly = MultiPoly::zero(&reg);
        for (coeff, exps) in coeffs.iter().zip(&stratum) {
            if coeff.is_zero() {
                continue;
            }
            let term = MultiPoly::monomial(&reg, exps.clone(), coeff.clone())?;
            poly = poly.try_add(&term)?;
        }
        out.push(RelationPoly {
            poly,
            bidegree: (cdeg, ddeg),
            weighted_degree: wdeg,
            lifted,
        });
    }
    Ok(out)
}

/// Evaluate the coefficient vector of `eq` at one random projective
/// parameter point, indexed as in [`relation_registry`].
fn sample_coefficients(
    eq: &ConstEq,
    v_shape: Shape,
    i_shape: Shape,
    rng: &mut rand_chacha::ChaCha8Rng,
) -> Vec<Fp> {
    let pt: Vec<Fp> = (0..eq.n_params())
        .map(|_| Fp::random_nonzero(rng))
        .collect();
    let mut values = Vec::with_capacity(v_shape.max_deg + i_shape.max_deg + 2);
    for i in 0..=v_shape.max_deg {
        values.push(eq.v_op().coeff(i).eval(&pt).expect("arity"));
    }
    for j in 0..=i_shape.max_deg {
        values.push(eq.i_op().coeff(j).eval(&pt).expect("arity"));
    }
    values
}

fn eval_monomial(exps: &[u16], values: &[Fp]) -> Fp {
    let mut acc = Fp::ONE;
    for (e, v) in exps.iter().zip(values) {
        if *e > 0 {
            acc *= v.pow(*e as u64);
        }
    }
    acc
}

/// Scale so the first nonzero coordinate is 1, then rationally
/// reconstruct every coordinate and clear denominators. On any
/// reconstruction failure, fall back to raw residues with `lifted =
/// false`.
fn lift_vector(vector: &[Fp]) -> (Vec<BigInt>, bool) {
    let lead = vector
        .iter()
        .find(|v| !v.is_zero())
        .expect("kernel basis vectors are nonzero");
    let inv = lead.inv().expect("nonzero");
    let scaled: Vec<Fp> = vector.iter().map(|v| *v * inv).collect();

    let mut rationals = Vec::with_capacity(scaled.len());
    for v in &scaled {
        match reconstruct_rational(v.value()) {
            Some(r) => rationals.push(r),
            None => {
                let raw = scaled.iter().map(|v| BigInt::from(v.value())).collect();
                return (raw, false);
            }
        }
    }
    let mut denom_lcm = BigInt::one();
    for (_, den) in &rationals {
        denom_lcm = denom_lcm.lcm(den);
    }
    let mut ints: Vec<BigInt> = rationals
        .iter()
        .map(|(num, den)| num * (&denom_lcm / den))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if !content.is_zero() && !content.is_one() {
        for c in &mut ints {
            *c /= &content;
        }
    }
    if let Some(first) = ints.iter().find(|c| !c.is_zero()) {
        if first.is_negative() {
            for c in &mut ints {
                *c = -&*c;
            }
        }
    }
    (ints, true)
}

/// Rational reconstruction of `a` modulo the working prime: the unique
/// `n/d` with `|n|, d` below `2^30` and `n ≡ a d`, if one exists.
fn reconstruct_rational(a: u64) -> Option<(BigInt, BigInt)> {
    const BOUND: i128 = (1 << 30) - 1;
    let (mut r0, mut r1) = (MODULUS as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > BOUND {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > BOUND {
        return None;
    }
    let (num, den) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
    Some((BigInt::from(num), BigInt::from(den)))
}

fn parse_relation_vars(reg: &VarRegistry) -> Result<Vec<(bool, usize)>, RelationError> {
    reg.names()
        .iter()
        .map(|name| {
            let is_c = match name.as_bytes().first() {
                Some(b'c') => true,
                Some(b'd') => false,
                _ => return Err(RelationError::BadVariable(name.clone())),
            };
            let idx: usize = name[1..]
                .parse()
                .map_err(|_| RelationError::BadVariable(name.clone()))?;
            Ok((is_c, idx))
        })
        .collect()
}

/// Certify a relation by exact symbolic substitution: plug the
/// projective coefficient polynomials into it and expand over the
/// integers. True exactly when the expansion is the zero polynomial.
pub fn verify_relation_exact(net: &Network, r: &RelationPoly) -> Result<bool, RelationError> {
    let eq = build_consteq(net, Parameterization::Projective)?;
    let vars = parse_relation_vars(r.poly.registry())?;
    let images: Vec<MultiPoly> = vars
        .iter()
        .map(|&(is_c, idx)| {
            if is_c {
                eq.v_op().coeff(idx)
            } else {
                eq.i_op().coeff(idx)
            }
        })
        .collect();
    let expanded = r.poly.compose(&images)?;
    Ok(expanded.is_zero())
}

/// Check the two homogeneity properties numerically: at fresh sample
/// points, the relation must also vanish after independent scaling of
/// the two coefficient groups and after the weighted scaling
/// `c_i -> λ^i c_i`, `d_j -> λ^j d_j`.
pub fn scaling_invariance_check(
    net: &Network,
    r: &RelationPoly,
    trials: usize,
    seed: u64,
) -> Result<bool, RelationError> {
    let eq = build_consteq(net, Parameterization::Projective)?;
    let vars = parse_relation_vars(r.poly.registry())?;
    let v_shape = eq.v_op().shape();
    let i_shape = eq.i_op().shape();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let base = sample_coefficients(&eq, v_shape, i_shape, &mut rng);
        // The registry of `r` may extend past this model's degrees;
        // missing coefficients are zero.
        let value_of = |side_c: bool, idx: usize| -> Fp {
            let (offset, max) = if side_c {
                (0, v_shape.max_deg)
            } else {
                (v_shape.max_deg + 1, i_shape.max_deg)
            };
            if idx <= max {
                base[offset + idx]
            } else {
                Fp::ZERO
            }
        };
        let lambda = Fp::random_nonzero(&mut rng);
        let delta = Fp::random_nonzero(&mut rng);
        let raw: Vec<Fp> = vars.iter().map(|&(c, i)| value_of(c, i)).collect();
        let biscaled: Vec<Fp> = vars
            .iter()
            .map(|&(c, i)| value_of(c, i) * if c { lambda } else { delta })
            .collect();
        let weighted: Vec<Fp> = vars
            .iter()
            .map(|&(c, i)| value_of(c, i) * lambda.pow(i as u64))
            .collect();
        for point in [raw, biscaled, weighted] {
            if !r.poly.eval(&point)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
