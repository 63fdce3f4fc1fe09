//! Linear differential operators with polynomial coefficients.
//!
//! A [`DiffOp`] is a dense coefficient list indexed by derivative order:
//! index `i` holds the polynomial multiplying `d^i/dt^i`. Orders stay
//! tiny (at most the network's leaf count), so density costs nothing.
//!
//! Operator product is coefficient convolution; there is no gcd or
//! cancellation anywhere, so products and sums of operators with
//! nonnegative coefficients keep nonnegative coefficients.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::poly::{MultiPoly, VarRegistry};
use super::PolyError;

/// The degree span `[min_deg, max_deg]` of a nonzero operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    pub min_deg: usize,
    pub max_deg: usize,
}

impl Shape {
    pub fn new(min_deg: usize, max_deg: usize) -> Shape {
        assert!(min_deg <= max_deg, "shape requires min_deg <= max_deg");
        Shape { min_deg, max_deg }
    }

    /// Degree span width.
    pub fn width(&self) -> usize {
        self.max_deg - self.min_deg
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.min_deg, self.max_deg)
    }
}

/// Coefficient alternation of an operator.
///
/// `Alternating`: every nonzero coefficient sits at the same degree
/// parity (single-term operators are alternating). `Nonalternating`:
/// every degree from min to max carries a nonzero coefficient. `Neither`
/// covers the remaining patterns; the constitutive recursion never
/// produces it, so seeing it downstream signals a bug.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Alternation {
    Alternating,
    Nonalternating,
    Neither,
}

/// A differential operator `sum_i p_i(params) d^i/dt^i`.
///
/// Invariant: the coefficient list is nonempty and its last entry is a
/// nonzero polynomial; all entries share one variable registry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOp {
    coeffs: Vec<MultiPoly>,
}

impl DiffOp {
    /// Build from a dense coefficient list (index = derivative order).
    /// Trailing zero polynomials are trimmed; an identically zero list
    /// is rejected.
    pub fn new(mut coeffs: Vec<MultiPoly>) -> Result<DiffOp, PolyError> {
        while coeffs.last().is_some_and(MultiPoly::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(PolyError::ZeroOperator);
        }
        let reg = coeffs[0].registry();
        if coeffs.iter().any(|c| c.registry() != reg) {
            return Err(PolyError::RegistryMismatch);
        }
        Ok(DiffOp { coeffs })
    }

    /// Highest derivative order.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `d^k/dt^k`; zero polynomial above the order.
    pub fn coeff(&self, k: usize) -> MultiPoly {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(self.registry()))
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        self.coeffs[0].registry()
    }

    /// Orders with a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// `[lowest, highest]` nonzero order. Total because a `DiffOp` is
    /// nonzero by construction.
    pub fn shape(&self) -> Shape {
        let support = self.support();
        Shape::new(support[0], *support.last().expect("nonzero operator"))
    }

    /// Classify the coefficient pattern; see [`Alternation`].
    pub fn alternation(&self) -> Alternation {
        let support = self.support();
        let parity = support[0] % 2;
        if support.iter().all(|&i| i % 2 == parity) {
            return Alternation::Alternating;
        }
        let shape = self.shape();
        if support.len() == shape.width() + 1 {
            Alternation::Nonalternating
        } else {
            Alternation::Neither
        }
    }

    /// Operator sum (termwise); rejects an identically zero result.
    pub fn try_add(&self, other: &DiffOp) -> Result<DiffOp, PolyError> {
        if self.registry() != other.registry() {
            return Err(PolyError::RegistryMismatch);
        }
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k).try_add(&other.coeff(k))?);
        }
        DiffOp::new(coeffs)
    }

    /// Operator product: coefficient convolution,
    /// `(fg)_k = sum_{i+j=k} f_i g_j`.
    pub fn try_mul(&self, other: &DiffOp) -> Result<DiffOp, PolyError> {
        if self.registry() != other.registry() {
            return Err(PolyError::RegistryMismatch);
        }
        let n = self.order() + other.order() + 1;
        let mut coeffs = alloc::vec![MultiPoly::zero(self.registry()); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].try_add(&a.try_mul(b)?)?;
            }
        }
        DiffOp::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn reg() -> Arc<VarRegistry> {
        VarRegistry::new(["R", "L", "C"]).unwrap()
    }

    fn d(coeffs: Vec<MultiPoly>) -> DiffOp {
        DiffOp::new(coeffs).unwrap()
    }

    #[test]
    fn zero_operator_is_rejected() {
        let reg = reg();
        assert_eq!(
            DiffOp::new(vec![MultiPoly::zero(&reg)]).unwrap_err(),
            PolyError::ZeroOperator
        );
        assert_eq!(DiffOp::new(vec![]).unwrap_err(), PolyError::ZeroOperator);
    }

    #[test]
    fn s_times_s_is_s_squared() {
        let reg = reg();
        let s = d(vec![MultiPoly::zero(&reg), MultiPoly::one(&reg)]);
        let s2 = s.try_mul(&s).unwrap();
        assert_eq!(s2.order(), 2);
        assert!(s2.coeff(0).is_zero());
        assert!(s2.coeff(1).is_zero());
        assert_eq!(s2.coeff(2), MultiPoly::one(&reg));
    }

    #[test]
    fn convolution_example() {
        // (Rs + C) * (Ls) = RL s^2 + CL s
        let reg = reg();
        let r = MultiPoly::var_named(&reg, "R").unwrap();
        let l = MultiPoly::var_named(&reg, "L").unwrap();
        let c = MultiPoly::var_named(&reg, "C").unwrap();
        let f = d(vec![c.clone(), r.clone()]);
        let g = d(vec![MultiPoly::zero(&reg), l.clone()]);
        let fg = f.try_mul(&g).unwrap();
        assert!(fg.coeff(0).is_zero());
        assert_eq!(fg.coeff(1), c.try_mul(&l).unwrap());
        assert_eq!(fg.coeff(2), r.try_mul(&l).unwrap());
    }

    #[test]
    fn add_trims_and_rejects_zero_sum() {
        let reg = reg();
        let s = d(vec![MultiPoly::zero(&reg), MultiPoly::one(&reg)]);
        let sum = s.try_add(&s).unwrap();
        assert_eq!(sum.coeff(1), MultiPoly::constant(&reg, 2));
        let neg = d(vec![MultiPoly::zero(&reg), MultiPoly::constant(&reg, -2)]);
        assert_eq!(sum.try_add(&neg).unwrap_err(), PolyError::ZeroOperator);
    }

    #[test]
    fn shape_and_alternation() {
        let reg = reg();
        let l = MultiPoly::var_named(&reg, "L").unwrap();
        let ls = d(vec![MultiPoly::zero(&reg), l]);
        assert_eq!(ls.shape(), Shape::new(1, 1));
        assert_eq!(ls.alternation(), Alternation::Alternating);

        // RL s^2 + CL s + RC: dense from 0 to 2.
        let r = MultiPoly::var_named(&reg, "R").unwrap();
        let lv = MultiPoly::var_named(&reg, "L").unwrap();
        let c = MultiPoly::var_named(&reg, "C").unwrap();
        let dense = d(vec![
            r.try_mul(&c).unwrap(),
            c.try_mul(&lv).unwrap(),
            r.try_mul(&lv).unwrap(),
        ]);
        assert_eq!(dense.shape(), Shape::new(0, 2));
        assert_eq!(dense.alternation(), Alternation::Nonalternating);

        // Degrees {0, 3}: mixed parity with a gap.
        let gap = d(vec![
            MultiPoly::one(&reg),
            MultiPoly::zero(&reg),
            MultiPoly::zero(&reg),
            MultiPoly::one(&reg),
        ]);
        assert_eq!(gap.alternation(), Alternation::Neither);
    }

    #[test]
    fn degree_additivity() {
        let reg = reg();
        let r = MultiPoly::var_named(&reg, "R").unwrap();
        let f = d(vec![r.clone(), MultiPoly::one(&reg)]);
        let g = d(vec![MultiPoly::zero(&reg), r]);
        let fg = f.try_mul(&g).unwrap();
        let (sf, sg, sfg) = (f.shape(), g.shape(), fg.shape());
        assert_eq!(sfg.min_deg, sf.min_deg + sg.min_deg);
        assert_eq!(sfg.max_deg, sf.max_deg + sg.max_deg);
    }
}
