//! Constitutive differential equations of series-parallel networks.
//!
//! Every network satisfies a single equation `f1 V = f2 I` between the
//! port voltage and current, where `f1`, `f2` are differential operators
//! in `d/dt` whose coefficients are polynomials in the element
//! parameters. The base equations are `V = R I`, `V = L dI/dt`, and
//! `dV/dt = C I` (with `C` the inverse capacitance, which keeps every
//! composition polynomial). Combination is a fold:
//!
//! - series:   `(f1, f2), (f3, f4)  ->  (f1 f3, f1 f4 + f2 f3)`
//! - parallel: `(f1, f2), (f3, f4)  ->  (f1 f4 + f2 f3, f2 f4)`
//!
//! Both operations are exactly associative and commutative here because
//! every coefficient is a polynomial with nonnegative coefficients, so
//! no cancellation can occur. N-ary nodes fold left to right.
//!
//! Two parameterizations are supported. The affine one gives each
//! element a single parameter (its label). The projective one gives each
//! element a parameter pair `label_0`, `label_1` replacing the implicit
//! constant: `R0 V = R1 I`, `L0 V = L1 dI/dt`, `C0 dV/dt = C1 I`. The
//! affine equation is the projective one at `label_0 = 1`.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::network::{ElementKind, Network};
use crate::polyalg::diffop::DiffOp;
use crate::polyalg::poly::{MultiPoly, VarRegistry};
use crate::polyalg::PolyError;

/// How element parameters enter the equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parameterization {
    /// One parameter per element; the equation's constant is 1.
    Affine,
    /// Two parameters per element (`label_0`, `label_1`).
    Projective,
}

/// Which operator a coefficient belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    V,
    I,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::V => "V",
            Side::I => "I",
        }
    }
}

/// One nonzero coefficient of the equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffEntry {
    pub side: Side,
    pub order: usize,
    pub poly: MultiPoly,
}

/// The nonzero coefficients of an equation in a fixed order: V side by
/// descending derivative order, then I side by descending order. The
/// leading V coefficient sits at index 0 and serves as the monic
/// normalizer for identifiability questions.
#[derive(Clone, Debug)]
pub struct CoefficientMap {
    entries: Vec<CoeffEntry>,
}

impl CoefficientMap {
    pub fn entries(&self) -> &[CoeffEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The normalizing entry (always index 0: the V side's leading
    /// coefficient).
    pub fn monic(&self) -> &CoeffEntry {
        &self.entries[0]
    }

    pub fn monic_index(&self) -> usize {
        0
    }

    /// Entries other than the monic one.
    pub fn nonmonic(&self) -> impl Iterator<Item = &CoeffEntry> {
        self.entries.iter().skip(1)
    }

    pub fn n_nonmonic(&self) -> usize {
        self.entries.len() - 1
    }
}

/// A constitutive equation `v_op V = i_op I` with its parameter
/// registry.
#[derive(Clone, Debug)]
pub struct ConstEq {
    v_op: DiffOp,
    i_op: DiffOp,
    registry: Arc<VarRegistry>,
    parameterization: Parameterization,
    n_elements: usize,
}

impl ConstEq {
    pub fn v_op(&self) -> &DiffOp {
        &self.v_op
    }

    pub fn i_op(&self) -> &DiffOp {
        &self.i_op
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.registry
    }

    pub fn parameterization(&self) -> Parameterization {
        self.parameterization
    }

    pub fn n_elements(&self) -> usize {
        self.n_elements
    }

    /// Number of free parameters: one per element in the affine
    /// parameterization, two in the projective one. Always the registry
    /// size.
    pub fn n_params(&self) -> usize {
        self.registry.len()
    }

    /// Collect the nonzero coefficients in canonical order.
    pub fn coefficient_map(&self) -> CoefficientMap {
        let mut entries = Vec::new();
        for k in (0..=self.v_op.order()).rev() {
            let poly = self.v_op.coeff(k);
            if !poly.is_zero() {
                entries.push(CoeffEntry {
                    side: Side::V,
                    order: k,
                    poly,
                });
            }
        }
        for k in (0..=self.i_op.order()).rev() {
            let poly = self.i_op.coeff(k);
            if !poly.is_zero() {
                entries.push(CoeffEntry {
                    side: Side::I,
                    order: k,
                    poly,
                });
            }
        }
        CoefficientMap { entries }
    }
}

impl fmt::Display for ConstEq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) V = ({}) I",
            op_text(&self.v_op),
            op_text(&self.i_op)
        )
    }
}

fn op_text(op: &DiffOp) -> String {
    let mut parts = Vec::new();
    for k in (0..=op.order()).rev() {
        let c = op.coeff(k);
        if c.is_zero() {
            continue;
        }
        let coeff = if c.n_terms() > 1 {
            alloc::format!("({})", c.render())
        } else {
            c.render()
        };
        let part = match k {
            0 => coeff,
            1 => alloc::format!("{coeff}*s"),
            _ => alloc::format!("{coeff}*s^{k}"),
        };
        parts.push(part);
    }
    parts.join(" + ")
}

/// Build the constitutive equation of a network.
///
/// The parameter registry lists the leaves in pre-order; the projective
/// parameterization appends `_0` and `_1` to each label. Fails only if
/// the network carries duplicate labels (possible when the tree was
/// assembled from raw enum variants rather than the checked
/// constructors).
pub fn build_consteq(net: &Network, param: Parameterization) -> Result<ConstEq, PolyError> {
    let leaves = net.leaves();
    let mut names: Vec<String> = Vec::with_capacity(leaves.len() * 2);
    for e in &leaves {
        match param {
            Parameterization::Affine => names.push(e.label().to_string()),
            Parameterization::Projective => {
                names.push(alloc::format!("{}_0", e.label()));
                names.push(alloc::format!("{}_1", e.label()));
            }
        }
    }
    let registry = VarRegistry::new(names)?;
    let (v_op, i_op) = build_ops(net, param, &registry);
    Ok(ConstEq {
        v_op,
        i_op,
        registry,
        parameterization: param,
        n_elements: leaves.len(),
    })
}

type OpPair = (DiffOp, DiffOp);

fn build_ops(net: &Network, param: Parameterization, reg: &Arc<VarRegistry>) -> OpPair {
    match net {
        Network::Leaf(e) => leaf_ops(e.kind(), e.label(), param, reg),
        Network::Series(cs) => fold_children(cs, param, reg, combine_series),
        Network::Parallel(cs) => fold_children(cs, param, reg, combine_parallel),
    }
}

fn fold_children(
    children: &[Network],
    param: Parameterization,
    reg: &Arc<VarRegistry>,
    combine: fn(OpPair, OpPair) -> OpPair,
) -> (DiffOp, DiffOp) {
    let mut iter = children.iter();
    let first = iter.next().expect("combination node has children");
    let mut acc = build_ops(first, param, reg);
    for child in iter {
        acc = combine(acc, build_ops(child, param, reg));
    }
    acc
}

/// Series rule: `(f1 f3) V = (f1 f4 + f2 f3) I`.
fn combine_series(a: (DiffOp, DiffOp), b: (DiffOp, DiffOp)) -> (DiffOp, DiffOp) {
    let (f1, f2) = a;
    let (f3, f4) = b;
    let v = f1.try_mul(&f3).expect("same registry");
    let i = f1
        .try_mul(&f4)
        .expect("same registry")
        .try_add(&f2.try_mul(&f3).expect("same registry"))
        .expect("nonnegative coefficients cannot cancel");
    (v, i)
}

/// Parallel rule: `(f1 f4 + f2 f3) V = (f2 f4) I`.
fn combine_parallel(a: (DiffOp, DiffOp), b: (DiffOp, DiffOp)) -> (DiffOp, DiffOp) {
    let (f1, f2) = a;
    let (f3, f4) = b;
    let v = f1
        .try_mul(&f4)
        .expect("same registry")
        .try_add(&f2.try_mul(&f3).expect("same registry"))
        .expect("nonnegative coefficients cannot cancel");
    let i = f2.try_mul(&f4).expect("same registry");
    (v, i)
}

fn leaf_ops(
    kind: ElementKind,
    label: &str,
    param: Parameterization,
    reg: &Arc<VarRegistry>,
) -> (DiffOp, DiffOp) {
    let var = |name: &str| {
        MultiPoly::var_named(reg, name).expect("registry contains every leaf parameter")
    };
    let op = |coeffs: Vec<MultiPoly>| DiffOp::new(coeffs).expect("nonzero operator");
    let zero = MultiPoly::zero(reg);
    match param {
        Parameterization::Affine => {
            let one = MultiPoly::one(reg);
            let p = var(label);
            match kind {
                // V = R I
                ElementKind::Resistor => (op(alloc::vec![one]), op(alloc::vec![p])),
                // V = L dI/dt
                ElementKind::Inductor => (op(alloc::vec![one]), op(alloc::vec![zero, p])),
                // dV/dt = C I
                ElementKind::Capacitor => (op(alloc::vec![zero, one]), op(alloc::vec![p])),
            }
        }
        Parameterization::Projective => {
            let p0 = var(&alloc::format!("{label}_0"));
            let p1 = var(&alloc::format!("{label}_1"));
            match kind {
                // R0 V = R1 I
                ElementKind::Resistor => (op(alloc::vec![p0]), op(alloc::vec![p1])),
                // L0 V = L1 dI/dt
                ElementKind::Inductor => (op(alloc::vec![p0]), op(alloc::vec![zero, p1])),
                // C0 dV/dt = C1 I
                ElementKind::Capacitor => (op(alloc::vec![zero, p0]), op(alloc::vec![p1])),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(net: &str) -> ConstEq {
        build_consteq(&Network::parse(net).unwrap(), Parameterization::Affine).unwrap()
    }

    fn v_coeffs(e: &ConstEq) -> Vec<String> {
        (0..=e.v_op().order())
            .map(|k| e.v_op().coeff(k).render())
            .collect()
    }

    fn i_coeffs(e: &ConstEq) -> Vec<String> {
        (0..=e.i_op().order())
            .map(|k| e.i_op().coeff(k).render())
            .collect()
    }

    #[test]
    fn single_elements() {
        let r = eq("R");
        assert_eq!(v_coeffs(&r), ["1"]);
        assert_eq!(i_coeffs(&r), ["R"]);
        let l = eq("L");
        assert_eq!(v_coeffs(&l), ["1"]);
        assert_eq!(i_coeffs(&l), ["0", "L"]);
        let c = eq("C");
        assert_eq!(v_coeffs(&c), ["0", "1"]);
        assert_eq!(i_coeffs(&c), ["C"]);
    }

    #[test]
    fn resistor_inductor_series() {
        // V = (L s + R) I
        let e = eq("R & L");
        assert_eq!(v_coeffs(&e), ["1"]);
        assert_eq!(i_coeffs(&e), ["R", "L"]);
    }

    #[test]
    fn resistor_inductor_parallel() {
        // (L s + R) V = R L s I
        let e = eq("R | L");
        assert_eq!(v_coeffs(&e), ["R", "L"]);
        assert_eq!(i_coeffs(&e), ["0", "L*R"]);
    }

    #[test]
    fn lrc_series() {
        // s V = (L s^2 + R s + C) I
        let e = eq("L & R & C");
        assert_eq!(v_coeffs(&e), ["0", "1"]);
        assert_eq!(i_coeffs(&e), ["C", "R", "L"]);
    }

    #[test]
    fn lc_pair() {
        // (L s^2 + C) V = C L s I
        let par = eq("L | C");
        assert_eq!(v_coeffs(&par), ["C", "0", "L"]);
        assert_eq!(i_coeffs(&par), ["0", "C*L"]);
        // s V = (L s^2 + C) I
        let ser = eq("L & C");
        assert_eq!(v_coeffs(&ser), ["0", "1"]);
        assert_eq!(i_coeffs(&ser), ["C", "0", "L"]);
    }

    #[test]
    fn capacitors_in_series() {
        // s^2 V = (C1 + C2) s I
        let e = eq("C1 & C2");
        assert_eq!(v_coeffs(&e), ["0", "0", "1"]);
        assert_eq!(i_coeffs(&e), ["0", "C1 + C2"]);
    }

    #[test]
    fn two_parallel_resistors() {
        let e = eq("R1 | R2");
        assert_eq!(v_coeffs(&e), ["R1 + R2"]);
        assert_eq!(i_coeffs(&e), ["R1*R2"]);
    }

    #[test]
    fn rc_parallel_then_inductor() {
        // (R s + C) V = (R L s^2 + C L s + R C) I
        let e = eq("(R | C) & L");
        assert_eq!(v_coeffs(&e), ["C", "R"]);
        assert_eq!(i_coeffs(&e), ["C*R", "C*L", "L*R"]);
    }

    #[test]
    fn two_branch_network() {
        // (R1 L s^2 + (C L + R1 R2) s + C R2) V
        //   = (R1 R2 L s^2 + (C R2 L + C R1 L) s + R1 R2 C) I
        let e = eq("(R1 | C) & (R2 | L)");
        assert_eq!(v_coeffs(&e), ["C*R2", "C*L + R1*R2", "L*R1"]);
        assert_eq!(i_coeffs(&e), ["C*R1*R2", "C*L*R1 + C*L*R2", "L*R1*R2"]);
    }

    #[test]
    fn swapped_grouping_differs() {
        let a = eq("(R1 | C) & (R2 | L)");
        let b = eq("(R1 & C) | (R2 & L)");
        assert_ne!(i_coeffs(&a), i_coeffs(&b));
    }

    #[test]
    fn five_element_network() {
        let e = eq("L1 | (R & (C1 | C2 | L2))");
        assert_eq!(
            v_coeffs(&e),
            [
                "C1*C2*R",
                "C1*C2*L1 + C1*C2*L2",
                "C1*L2*R + C2*L2*R",
                "C1*L1*L2 + C2*L1*L2",
            ]
        );
        assert_eq!(
            i_coeffs(&e),
            ["0", "C1*C2*L1*R", "C1*C2*L1*L2", "C1*L1*L2*R + C2*L1*L2*R"]
        );
    }

    #[test]
    fn projective_parameterization() {
        let net = Network::parse("(R | C) & L").unwrap();
        let e = build_consteq(&net, Parameterization::Projective).unwrap();
        assert_eq!(e.n_params(), 6);
        assert_eq!(e.n_elements(), 3);
        assert_eq!(v_coeffs(&e), ["C_1*L_0*R_0", "C_0*L_0*R_1"]);
        assert_eq!(i_coeffs(&e), ["C_1*L_0*R_1", "C_1*L_1*R_0", "C_0*L_1*R_1"]);
    }

    #[test]
    fn coefficient_map_ordering() {
        let e = eq("(R | C) & L");
        let map = e.coefficient_map();
        let listed: Vec<(Side, usize, String)> = map
            .entries()
            .iter()
            .map(|c| (c.side, c.order, c.poly.render()))
            .collect();
        assert_eq!(
            listed,
            [
                (Side::V, 1, "R".to_string()),
                (Side::V, 0, "C".to_string()),
                (Side::I, 2, "L*R".to_string()),
                (Side::I, 1, "C*L".to_string()),
                (Side::I, 0, "C*R".to_string()),
            ]
        );
        assert_eq!(map.monic_index(), 0);
        assert_eq!(map.monic().poly.render(), "R");
        assert_eq!(map.n_nonmonic(), 4);
        assert_eq!(e.n_params(), 3);
    }

    #[test]
    fn registry_is_preorder() {
        let e = eq("(R1 | C) & (R2 | L)");
        assert_eq!(e.registry().names(), ["R1", "C", "R2", "L"]);
    }

    #[test]
    fn display_renders_equation() {
        let e = eq("R | L");
        assert_eq!(e.to_string(), "(L*s + R) V = (L*R*s) I");
    }

    #[test]
    fn fold_is_order_independent() {
        let a = eq("L & R & C");
        let b = eq("C & R & L");
        assert_eq!(v_coeffs(&a), v_coeffs(&b));
        assert_eq!(i_coeffs(&a), i_coeffs(&b));
    }
}
