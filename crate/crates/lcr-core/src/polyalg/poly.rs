//! Sparse multivariate polynomials with exact integer coefficients.
//!
//! A [`MultiPoly`] is a map from exponent tuples to nonzero `BigInt`
//! coefficients, tied to an ordered [`VarRegistry`] of parameter names.
//! Binary operations require both operands to share a registry and
//! return [`PolyError::RegistryMismatch`](super::PolyError) otherwise;
//! there is no implicit coercion between parameter spaces.
//!
//! Everything is exact. There is no division, no floating point, and no
//! normalization beyond dropping zero coefficients.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::fp::Fp;
use super::PolyError;

/// An ordered list of distinct variable names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarRegistry {
    names: Vec<String>,
}

impl VarRegistry {
    /// Build a registry; names must be pairwise distinct.
    pub fn new<I, S>(names: I) -> Result<Arc<VarRegistry>, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(VarRegistry { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> Option<&str> {
        self.names.get(i).map(String::as_str)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A sparse polynomial over the registry's variables, with `BigInt`
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    reg: Arc<VarRegistry>,
    terms: BTreeMap<Vec<u16>, BigInt>,
}

impl MultiPoly {
    /// The zero polynomial.
    pub fn zero(reg: &Arc<VarRegistry>) -> MultiPoly {
        MultiPoly {
            reg: Arc::clone(reg),
            terms: BTreeMap::new(),
        }
    }

    /// A constant polynomial.
    pub fn constant(reg: &Arc<VarRegistry>, c: impl Into<BigInt>) -> MultiPoly {
        let mut p = MultiPoly::zero(reg);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(alloc::vec![0; reg.len()], c);
        }
        p
    }

    /// The polynomial `1`.
    pub fn one(reg: &Arc<VarRegistry>) -> MultiPoly {
        MultiPoly::constant(reg, 1)
    }

    /// The single variable at registry index `i`.
    pub fn var(reg: &Arc<VarRegistry>, i: usize) -> Result<MultiPoly, PolyError> {
        if i >= reg.len() {
            return Err(PolyError::VarOutOfRange(i));
        }
        let mut exps = alloc::vec![0u16; reg.len()];
        exps[i] = 1;
        MultiPoly::monomial(reg, exps, 1)
    }

    /// The variable with the given name.
    pub fn var_named(reg: &Arc<VarRegistry>, name: &str) -> Result<MultiPoly, PolyError> {
        let i = reg
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        MultiPoly::var(reg, i)
    }

    /// A single term `c * x^exps`.
    pub fn monomial(
        reg: &Arc<VarRegistry>,
        exps: Vec<u16>,
        c: impl Into<BigInt>,
    ) -> Result<MultiPoly, PolyError> {
        if exps.len() != reg.len() {
            return Err(PolyError::ArityMismatch {
                expected: reg.len(),
                got: exps.len(),
            });
        }
        let mut p = MultiPoly::zero(reg);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        Ok(p)
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.reg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponent tuples.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &BigInt)> {
        self.terms.iter()
    }

    /// The coefficient of an exponent tuple (zero if absent).
    pub fn coeff(&self, exps: &[u16]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Largest total degree over all terms; zero polynomial reports 0.
    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    /// True when every coefficient is nonnegative.
    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn same_registry(&self, other: &MultiPoly) -> bool {
        Arc::ptr_eq(&self.reg, &other.reg) || self.reg == other.reg
    }

    fn add_term(&mut self, exps: Vec<u16>, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c.clone());
            }
        }
    }

    /// Exact sum; fails on registry mismatch.
    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        if !self.same_registry(other) {
            return Err(PolyError::RegistryMismatch);
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    /// Exact difference; fails on registry mismatch.
    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.try_add(&other.neg())
    }

    /// Exact product; fails on registry mismatch.
    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        if !self.same_registry(other) {
            return Err(PolyError::RegistryMismatch);
        }
        let mut out = MultiPoly::zero(&self.reg);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u16> = ea.iter().zip(eb).map(|(&x, &y)| x + y).collect();
                out.add_term(exps, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Negation.
    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            reg: Arc::clone(&self.reg),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    /// Multiply by an integer scalar.
    pub fn scale(&self, c: impl Into<BigInt>) -> MultiPoly {
        let c = c.into();
        if c.is_zero() {
            return MultiPoly::zero(&self.reg);
        }
        MultiPoly {
            reg: Arc::clone(&self.reg),
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v * &c))
                .collect(),
        }
    }

    /// `self^e` by repeated multiplication.
    pub fn pow(&self, e: u16) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.reg);
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same registry");
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Result<MultiPoly, PolyError> {
        if i >= self.reg.len() {
            return Err(PolyError::VarOutOfRange(i));
        }
        let mut out = MultiPoly::zero(&self.reg);
        for (e, c) in &self.terms {
            let k = e[i];
            if k == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[i] = k - 1;
            out.add_term(exps, &(c * BigInt::from(k)));
        }
        Ok(out)
    }

    /// Evaluate at a point of `F_p`, one value per registry variable.
    pub fn eval(&self, point: &[Fp]) -> Result<Fp, PolyError> {
        if point.len() != self.reg.len() {
            return Err(PolyError::ArityMismatch {
                expected: self.reg.len(),
                got: point.len(),
            });
        }
        let mut acc = Fp::ZERO;
        for (e, c) in &self.terms {
            let mut t = Fp::from_bigint(c);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t *= point[i].pow(k as u64);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitute `images[i]` for variable `i`; all images must share one
    /// registry. Expansion is exact over the integers.
    pub fn compose(&self, images: &[MultiPoly]) -> Result<MultiPoly, PolyError> {
        if images.len() != self.reg.len() {
            return Err(PolyError::ArityMismatch {
                expected: self.reg.len(),
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => Arc::clone(p.registry()),
            None => {
                // Nullary source polynomial: the constant carries over to
                // an empty target registry.
                let reg = VarRegistry::new(Vec::<String>::new()).expect("empty registry");
                return Ok(MultiPoly::constant(
                    &reg,
                    self.terms.values().fold(BigInt::zero(), |a, b| a + b),
                ));
            }
        };
        for im in images {
            if !(Arc::ptr_eq(im.registry(), &target) || **im.registry() == *target) {
                return Err(PolyError::RegistryMismatch);
            }
        }
        let mut out = MultiPoly::zero(&target);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(&target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.try_mul(&images[i].pow(k))?;
                }
            }
            out = out.try_add(&t)?;
        }
        Ok(out)
    }

    /// Render with a fixed term order: descending lexicographic on
    /// exponent tuples permuted to alphabetical variable order, factors
    /// alphabetical within each monomial. `render_ascending` flips the
    /// term order (used for coefficient-relation polynomials).
    pub fn render(&self) -> String {
        self.render_ordered(false)
    }

    pub fn render_ascending(&self) -> String {
        self.render_ordered(true)
    }

    fn render_ordered(&self, ascending: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        // Permutation of registry indices in alphabetical name order.
        let mut order: Vec<usize> = (0..self.reg.len()).collect();
        order.sort_by(|&a, &b| self.reg.name(a).cmp(&self.reg.name(b)));
        let mut keyed: Vec<(Vec<u16>, &Vec<u16>, &BigInt)> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let key: Vec<u16> = order.iter().map(|&i| e[i]).collect();
                (key, e, c)
            })
            .collect();
        keyed.sort_by(|x, y| {
            if ascending {
                x.0.cmp(&y.0)
            } else {
                y.0.cmp(&x.0)
            }
        });

        let mut out = String::new();
        for (idx, (_, exps, coeff)) in keyed.iter().enumerate() {
            let mag = coeff.abs();
            if idx == 0 {
                if coeff.is_negative() {
                    out.push('-');
                }
            } else if coeff.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            for &i in &order {
                let k = exps[i];
                if k == 0 {
                    continue;
                }
                let name = self.reg.name(i).expect("index in range");
                if k == 1 {
                    factors.push(name.to_string());
                } else {
                    factors.push(alloc::format!("{name}^{k}"));
                }
            }
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl PartialOrd for MultiPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.same_registry(other) {
            Some(self.terms.cmp(&other.terms))
        } else {
            None
        }
    }
}
