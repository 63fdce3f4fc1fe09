//! A finite type algebra for constitutive equations.
//!
//! An equation's type records four observables: the gap between the two
//! operators' minimal degrees, the gap between their maximal degrees,
//! and one alternation bit per operator (1 when the operator's support
//! sits in a single parity class, 0 when it is dense). Both gaps stay in
//! `{-1, 0, 1}` for every series-parallel network, so there are 36
//! candidate types, of which exactly 22 arise; see [`type_closure`] and
//! [`FORBIDDEN_TYPES`].
//!
//! Types compose: the type of a combination depends only on the types
//! of the operands, through [`TypeQuad::combine_series`] and
//! [`TypeQuad::combine_parallel`]. The resistor-free networks occupy the
//! four all-alternating types with gaps `±1`, named by [`LcClass`]; the
//! tables [`SERIES_TABLE`] and [`PARALLEL_TABLE`] record shape, nonzero
//! coefficient count, and identifiability for every pairing of
//! identifiable LC operands.

use core::fmt;

use alloc::vec::Vec;

use crate::constitutive::ConstEq;
use crate::network::{CombineOp, ElementKind};
use crate::polyalg::diffop::{Alternation, Shape};

/// Errors from type classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TypeError {
    /// A degree gap fell outside `{-1, 0, 1}`.
    GapOutOfRange { v_gap: i64, i_gap: i64 },
    /// An operator was neither alternating nor dense.
    MixedAlternation,
    /// The equation involves a resistor, so it has no LC class.
    NotLc,
    /// The type is not one of the four LC classes.
    NotLcType(TypeQuad),
}

impl fmt::Display for TypeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeError::GapOutOfRange { v_gap, i_gap } => {
                write!(f, "degree gaps ({v_gap}, {i_gap}) outside [-1, 1]")
            }
            TypeError::MixedAlternation => {
                write!(f, "operator support is neither alternating nor dense")
            }
            TypeError::NotLc => write!(f, "network contains a resistor"),
            TypeError::NotLcType(q) => write!(f, "type {q} is not an LC class"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for TypeError {}

/// An equation type `(a, b, c, d)`: `a` is the minimal-degree gap
/// (V minus I), `b` the maximal-degree gap, `c` and `d` the alternation
/// bits of the V and I operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeQuad {
    pub a: i8,
    pub b: i8,
    pub c: u8,
    pub d: u8,
}

impl fmt::Display for TypeQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

impl TypeQuad {
    pub const fn new(a: i8, b: i8, c: u8, d: u8) -> TypeQuad {
        TypeQuad { a, b, c, d }
    }

    /// The type of a single element's equation.
    pub fn base(kind: ElementKind) -> TypeQuad {
        match kind {
            ElementKind::Resistor => TypeQuad::new(0, 0, 1, 1),
            ElementKind::Inductor => TypeQuad::new(-1, -1, 1, 1),
            ElementKind::Capacitor => TypeQuad::new(1, 1, 1, 1),
        }
    }

    /// Type of a series combination.
    ///
    /// The V operator is a product, so its gap components take the
    /// extremes and its alternation bit is a product. The I operator is
    /// a sum of two products; it stays alternating only when all four
    /// factors alternate and the two products' minimal degrees agree in
    /// parity, which for gaps in `{-1, 0, 1}` is `|a| == |e|`.
    pub fn combine_series(self, other: TypeQuad) -> TypeQuad {
        let parity = (self.a.abs() == other.a.abs()) as u8;
        TypeQuad {
            a: self.a.max(other.a),
            b: self.b.min(other.b),
            c: self.c * other.c,
            d: self.c * self.d * other.c * other.d * parity,
        }
    }

    /// Type of a parallel combination (the sum lands on the V side).
    pub fn combine_parallel(self, other: TypeQuad) -> TypeQuad {
        let parity = (self.a.abs() == other.a.abs()) as u8;
        TypeQuad {
            a: self.a.min(other.a),
            b: self.b.max(other.b),
            c: self.c * self.d * other.c * other.d * parity,
            d: self.d * other.d,
        }
    }

    pub fn combine(self, op: CombineOp, other: TypeQuad) -> TypeQuad {
        match op {
            CombineOp::Series => self.combine_series(other),
            CombineOp::Parallel => self.combine_parallel(other),
        }
    }

    /// The type of the dual equation: gaps negate, alternation bits
    /// swap sides.
    pub fn dual(self) -> TypeQuad {
        TypeQuad {
            a: -self.a,
            b: -self.b,
            c: self.d,
            d: self.c,
        }
    }

    /// All 36 candidate quads in ascending order.
    pub fn all_candidates() -> Vec<TypeQuad> {
        let mut out = Vec::with_capacity(36);
        for a in [-1i8, 0, 1] {
            for b in [-1i8, 0, 1] {
                for c in [0u8, 1] {
                    for d in [0u8, 1] {
                        out.push(TypeQuad::new(a, b, c, d));
                    }
                }
            }
        }
        out.sort();
        out
    }
}

/// Read an equation's type off its two operators.
pub fn type_of(eq: &ConstEq) -> Result<TypeQuad, TypeError> {
    let vs = eq.v_op().shape();
    let is = eq.i_op().shape();
    let a = vs.min_deg as i64 - is.min_deg as i64;
    let b = vs.max_deg as i64 - is.max_deg as i64;
    if a.abs() > 1 || b.abs() > 1 {
        return Err(TypeError::GapOutOfRange { v_gap: a, i_gap: b });
    }
    let bit = |alt: Alternation| match alt {
        Alternation::Alternating => Ok(1u8),
        Alternation::Nonalternating => Ok(0u8),
        Alternation::Neither => Err(TypeError::MixedAlternation),
    };
    Ok(TypeQuad {
        a: a as i8,
        b: b as i8,
        c: bit(eq.v_op().alternation())?,
        d: bit(eq.i_op().alternation())?,
    })
}

/// The set of types reachable from the three base types under both
/// combinations, ascending. Exactly the 22 candidates outside
/// [`FORBIDDEN_TYPES`].
pub fn type_closure() -> Vec<TypeQuad> {
    let mut reached: Vec<TypeQuad> = Vec::new();
    for kind in [
        ElementKind::Resistor,
        ElementKind::Inductor,
        ElementKind::Capacitor,
    ] {
        let q = TypeQuad::base(kind);
        if !reached.contains(&q) {
            reached.push(q);
        }
    }
    loop {
        let mut added = false;
        for i in 0..reached.len() {
            for j in 0..reached.len() {
                for q in [
                    reached[i].combine_series(reached[j]),
                    reached[i].combine_parallel(reached[j]),
                ] {
                    if !reached.contains(&q) {
                        reached.push(q);
                        added = true;
                    }
                }
            }
        }
        if !added {
            break;
        }
    }
    reached.sort();
    reached
}

/// The 14 candidate types no series-parallel network attains.
pub const FORBIDDEN_TYPES: [TypeQuad; 14] = [
    TypeQuad::new(1, 0, 0, 1),
    TypeQuad::new(-1, 0, 1, 0),
    TypeQuad::new(0, 1, 1, 0),
    TypeQuad::new(0, -1, 0, 1),
    TypeQuad::new(1, 1, 0, 1),
    TypeQuad::new(-1, -1, 1, 0),
    TypeQuad::new(-1, -1, 0, 1),
    TypeQuad::new(1, 1, 1, 0),
    TypeQuad::new(1, 0, 1, 1),
    TypeQuad::new(-1, 0, 1, 1),
    TypeQuad::new(0, 1, 1, 1),
    TypeQuad::new(0, -1, 1, 1),
    TypeQuad::new(1, -1, 0, 1),
    TypeQuad::new(-1, 1, 1, 0),
];

/// The four types of resistor-free equations: fully alternating, both
/// gaps `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LcClass {
    A,
    B,
    C,
    D,
}

impl fmt::Display for LcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LcClass::A => "A",
            LcClass::B => "B",
            LcClass::C => "C",
            LcClass::D => "D",
        };
        f.write_str(s)
    }
}

impl LcClass {
    pub const fn quad(self) -> TypeQuad {
        match self {
            LcClass::A => TypeQuad::new(-1, -1, 1, 1),
            LcClass::B => TypeQuad::new(-1, 1, 1, 1),
            LcClass::C => TypeQuad::new(1, -1, 1, 1),
            LcClass::D => TypeQuad::new(1, 1, 1, 1),
        }
    }

    pub fn from_quad(q: TypeQuad) -> Option<LcClass> {
        [LcClass::A, LcClass::B, LcClass::C, LcClass::D]
            .into_iter()
            .find(|c| c.quad() == q)
    }

    /// Operator shapes of an identifiable network of this class whose
    /// larger maximal degree is `n`; `None` when `n` has the wrong
    /// parity for the class.
    pub fn identifiable_shapes(self, n: usize) -> Option<(Shape, Shape)> {
        let odd = matches!(self, LcClass::A | LcClass::D);
        if n == 0 || (n % 2 == 1) != odd {
            return None;
        }
        let (v, i) = match self {
            LcClass::A => (Shape::new(0, n - 1), Shape::new(1, n)),
            LcClass::B => (Shape::new(0, n), Shape::new(1, n - 1)),
            LcClass::C => (Shape::new(1, n - 1), Shape::new(0, n)),
            LcClass::D => (Shape::new(1, n), Shape::new(0, n - 1)),
        };
        Some((v, i))
    }

    /// The class of the dual network's equation.
    pub fn dual(self) -> LcClass {
        match self {
            LcClass::A => LcClass::D,
            LcClass::B => LcClass::C,
            LcClass::C => LcClass::B,
            LcClass::D => LcClass::A,
        }
    }

    /// A smallest network of this class, as parseable text.
    pub fn minimal_witness(self) -> &'static str {
        match self {
            LcClass::A => "L",
            LcClass::B => "L | C",
            LcClass::C => "L & C",
            LcClass::D => "C",
        }
    }
}

/// Classify a resistor-free equation; rejects equations whose registry
/// mentions a resistor parameter.
pub fn lc_class(eq: &ConstEq) -> Result<LcClass, TypeError> {
    if eq.registry().names().iter().any(|n| n.starts_with('R')) {
        return Err(TypeError::NotLc);
    }
    let q = type_of(eq)?;
    LcClass::from_quad(q).ok_or(TypeError::NotLcType(q))
}

/// A shape in terms of the combined size `n`: `[min_const, n + max_offset]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShapeExpr {
    pub min_const: usize,
    pub max_offset: i32,
}

impl ShapeExpr {
    pub fn at(self, n: usize) -> Shape {
        Shape::new(self.min_const, (n as i32 + self.max_offset) as usize)
    }
}

/// One row of the LC combination tables: combining identifiable
/// networks of the two classes (sizes `n1`, `n2`, `n = n1 + n2`) yields
/// the given shapes, `n + count_offset` nonzero coefficients besides the
/// monic one, and the given class; the result is identifiable exactly
/// when `count_offset == 0`.
#[derive(Clone, Copy, Debug)]
pub struct LcTableRow {
    pub op: CombineOp,
    pub pair: (LcClass, LcClass),
    pub v_shape: ShapeExpr,
    pub i_shape: ShapeExpr,
    pub count_offset: i32,
    pub identifiable: bool,
    pub result: LcClass,
}

const fn row(
    op: CombineOp,
    pair: (LcClass, LcClass),
    v: (usize, i32),
    i: (usize, i32),
    count_offset: i32,
    result: LcClass,
) -> LcTableRow {
    LcTableRow {
        op,
        pair,
        v_shape: ShapeExpr {
            min_const: v.0,
            max_offset: v.1,
        },
        i_shape: ShapeExpr {
            min_const: i.0,
            max_offset: i.1,
        },
        count_offset,
        identifiable: count_offset == 0,
        result,
    }
}

use CombineOp::{Parallel, Series};
use LcClass::{A, B, C, D};

/// Series combinations of identifiable LC operands, pairs ascending.
pub const SERIES_TABLE: [LcTableRow; 10] = [
    row(Series, (A, A), (0, -2), (1, -1), -1, A),
    row(Series, (A, B), (0, -1), (1, 0), 0, A),
    row(Series, (A, C), (1, -2), (0, -1), -1, C),
    row(Series, (A, D), (1, -1), (0, 0), 0, C),
    row(Series, (B, B), (0, 0), (1, -1), 0, B),
    row(Series, (B, C), (1, -1), (0, 0), 0, C),
    row(Series, (B, D), (1, 0), (0, -1), 0, D),
    row(Series, (C, C), (2, -2), (1, -1), -2, C),
    row(Series, (C, D), (2, -1), (1, 0), -1, C),
    row(Series, (D, D), (2, 0), (1, -1), -1, D),
];

/// Parallel combinations of identifiable LC operands, pairs ascending.
/// Exactly the dual image of [`SERIES_TABLE`]: shapes swap sides,
/// classes map A <-> D and B <-> C, counts carry over.
pub const PARALLEL_TABLE: [LcTableRow; 10] = [
    row(Parallel, (A, A), (1, -1), (2, 0), -1, A),
    row(Parallel, (A, B), (1, 0), (2, -1), -1, B),
    row(Parallel, (A, C), (0, -1), (1, 0), 0, A),
    row(Parallel, (A, D), (0, 0), (1, -1), 0, B),
    row(Parallel, (B, B), (1, -1), (2, -2), -2, B),
    row(Parallel, (B, C), (0, 0), (1, -1), 0, B),
    row(Parallel, (B, D), (0, -1), (1, -2), -1, B),
    row(Parallel, (C, C), (1, -1), (0, 0), 0, C),
    row(Parallel, (C, D), (1, 0), (0, -1), 0, D),
    row(Parallel, (D, D), (1, -1), (0, -2), -1, D),
];

/// Look up the table row for a combination; the pair is unordered.
pub fn lc_table_lookup(op: CombineOp, x: LcClass, y: LcClass) -> &'static LcTableRow {
    let pair = if x <= y { (x, y) } else { (y, x) };
    let table = match op {
        CombineOp::Series => &SERIES_TABLE,
        CombineOp::Parallel => &PARALLEL_TABLE,
    };
    table
        .iter()
        .find(|r| r.pair == pair)
        .expect("all ten unordered pairs are tabulated")
}
