//! Local identifiability of element parameters from constitutive
//! coefficients.
//!
//! The question: after normalizing the equation by its monic
//! coefficient, is the map from parameters to the remaining
//! coefficients finite-to-one? Generically that holds exactly when the
//! map's Jacobian has full column rank, which is tested at random
//! points of `F_p` (Schwartz-Zippel makes false negatives vanishingly
//! unlikely; taking the best of three points guards further).
//!
//! Instead of differentiating quotients `c_i / c_k`, the test uses the
//! quotient-rule numerator `M[i][j] = (d c_i / d x_j) c_k - c_i (d c_k /
//! d x_j)`, which is the Jacobian scaled by `c_k^2` row-wise and so has
//! the same rank wherever `c_k` is nonzero.
//!
//! For networks with at most two element kinds, counting coefficients
//! suffices ([`count_criterion`]): the network is locally identifiable
//! exactly when the nonmonic coefficient count equals the parameter
//! count. Three-kind networks are refused, since a five-element network
//! exists with six nonmonic coefficients, five parameters, and
//! deficient rank.
//!
//! [`GhProblem`] carries the linear-algebra core of the two-operand
//! analysis: given alternating monic `f1`, `f3`, the map `(f4, f2) ->
//! f1 f4 + f3 f2` restricted to the right parities is represented by the
//! reduced `(G H)` matrix; identifiability of the combination
//! corresponds to that matrix being square (and then generically
//! invertible).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand_core::{RngCore, SeedableRng};

use crate::constitutive::{build_consteq, ConstEq, Parameterization};
use crate::network::{CombineOp, Network};
use crate::polyalg::diffop::Shape;
use crate::polyalg::fp::Fp;
use crate::polyalg::linalg::FieldMatrix;
use crate::polyalg::poly::MultiPoly;
use crate::polyalg::PolyError;

/// How a verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    RankTest,
    CountCriterion,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::RankTest => "RankTest",
            Method::CountCriterion => "CountCriterion",
        }
    }
}

/// Outcome of an identifiability test.
///
/// Invariants: `locally_identifiable` iff `generic_rank == n_params`,
/// and `generic_rank <= min(n_params, n_nonmonic)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentVerdict {
    pub locally_identifiable: bool,
    pub generic_rank: usize,
    pub n_params: usize,
    pub n_nonmonic: usize,
    pub method: Method,
}

/// Errors from the identifiability machinery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentifyError {
    /// The monic coefficient vanished at every sampled point.
    DegenerateEvaluation {
        tries: usize,
    },
    /// The counting criterion applies only to two-kind networks.
    NotApplicable {
        distinct_kinds: usize,
    },
    /// Shapes violate the gap or parity rules of the factorization
    /// problem.
    ShapeGapViolation {
        detail: String,
    },
    /// Instantiation data does not fit the declared shapes.
    BadInstance {
        detail: String,
    },
    Poly(PolyError),
}

impl fmt::Display for IdentifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentifyError::DegenerateEvaluation { tries } => {
                write!(
                    f,
                    "monic coefficient vanished at all {tries} sampled points"
                )
            }
            IdentifyError::NotApplicable { distinct_kinds } => write!(
                f,
                "count criterion needs at most two element kinds, network has {distinct_kinds}"
            ),
            IdentifyError::ShapeGapViolation { detail } => {
                write!(f, "shape rules violated: {detail}")
            }
            IdentifyError::BadInstance { detail } => write!(f, "bad instantiation: {detail}"),
            IdentifyError::Poly(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for IdentifyError {}

impl From<PolyError> for IdentifyError {
    fn from(e: PolyError) -> IdentifyError {
        IdentifyError::Poly(e)
    }
}

const POINTS: usize = 3;
const RESAMPLE_TRIES: usize = 16;

/// Decide local identifiability of the affine parameters by generic
/// Jacobian rank. Deterministic for a fixed seed.
pub fn is_locally_identifiable(net: &Network, seed: u64) -> Result<IdentVerdict, IdentifyError> {
    let eq = build_consteq(net, Parameterization::Affine)?;
    rank_test(&eq, seed)
}

/// The rank test on an already-built affine equation.
pub fn rank_test(eq: &ConstEq, seed: u64) -> Result<IdentVerdict, IdentifyError> {
    let map = eq.coefficient_map();
    let n = eq.n_params();
    let monic = &map.monic().poly;
    // One symbolic differentiation pass; everything after is field
    // evaluation.
    let entries: Vec<&MultiPoly> = map.entries().iter().map(|c| &c.poly).collect();
    let mut partials: Vec<Vec<MultiPoly>> = Vec::with_capacity(entries.len());
    for poly in &entries {
        let row = (0..n)
            .map(|j| poly.partial(j).expect("parameter index in range"))
            .collect();
        partials.push(row);
    }
    let monic_partials = &partials[map.monic_index()];

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut generic_rank = 0;
    for _ in 0..POINTS {
        let (pt, monic_val) = sample_nondegenerate(monic, n, &mut rng)?;
        let mut m = FieldMatrix::zeros(entries.len(), n);
        for (i, poly) in entries.iter().enumerate() {
            let ci = poly.eval(&pt).expect("point arity matches registry");
            for j in 0..n {
                let dij = partials[i][j].eval(&pt).expect("arity");
                let dkj = monic_partials[j].eval(&pt).expect("arity");
                m[(i, j)] = dij * monic_val - ci * dkj;
            }
        }
        generic_rank = generic_rank.max(m.rank());
    }
    Ok(IdentVerdict {
        locally_identifiable: generic_rank == n,
        generic_rank,
        n_params: n,
        n_nonmonic: map.n_nonmonic(),
        method: Method::RankTest,
    })
}

fn sample_nondegenerate(
    monic: &MultiPoly,
    n: usize,
    rng: &mut impl RngCore,
) -> Result<(Vec<Fp>, Fp), IdentifyError> {
    for _ in 0..RESAMPLE_TRIES {
        let pt: Vec<Fp> = (0..n).map(|_| Fp::random_nonzero(rng)).collect();
        let val = monic.eval(&pt).expect("arity");
        if !val.is_zero() {
            return Ok((pt, val));
        }
    }
    Err(IdentifyError::DegenerateEvaluation {
        tries: RESAMPLE_TRIES,
    })
}

/// Coefficient-counting criterion for networks with at most two element
/// kinds: locally identifiable iff the nonmonic coefficient count
/// equals the parameter count.
pub fn count_criterion(net: &Network) -> Result<IdentVerdict, IdentifyError> {
    let distinct_kinds = net.kinds_present().len();
    if distinct_kinds > 2 {
        return Err(IdentifyError::NotApplicable { distinct_kinds });
    }
    let eq = build_consteq(net, Parameterization::Affine)?;
    let map = eq.coefficient_map();
    let n_params = eq.n_params();
    let n_nonmonic = map.n_nonmonic();
    let locally_identifiable = n_nonmonic == n_params;
    // The criterion implies the rank without computing it; keep the
    // verdict invariants intact either way.
    let mut generic_rank = n_params.min(n_nonmonic);
    if (generic_rank == n_params) != locally_identifiable {
        generic_rank = n_params - 1;
    }
    Ok(IdentVerdict {
        locally_identifiable,
        generic_rank,
        n_params,
        n_nonmonic,
        method: Method::CountCriterion,
    })
}

/// An alternating shape factorization problem: shapes of `(f1, f2, f3,
/// f4)` where `f1`, `f3` are the known alternating monic operators and
/// the unknowns `(f4, f2)` enter the sum `f1 f4 + f3 f2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GhProblem {
    shapes: [Shape; 4],
}

impl GhProblem {
    /// Validate the LC shape rules: every shape spans an even range
    /// (alternating support), and both operand pairs have min- and
    /// max-degree gaps of exactly 1.
    pub fn new(shapes: [Shape; 4]) -> Result<GhProblem, IdentifyError> {
        let violation = |detail: String| Err(IdentifyError::ShapeGapViolation { detail });
        for (i, s) in shapes.iter().enumerate() {
            if (s.max_deg - s.min_deg) % 2 != 0 {
                return violation(alloc::format!(
                    "shape {} = {s} spans an odd range, cannot be alternating",
                    i + 1
                ));
            }
        }
        for (x, y) in [(0, 1), (2, 3)] {
            let dmin = shapes[x].min_deg.abs_diff(shapes[y].min_deg);
            let dmax = shapes[x].max_deg.abs_diff(shapes[y].max_deg);
            if dmin != 1 || dmax != 1 {
                return violation(alloc::format!(
                    "shapes {} and {} must differ by exactly 1 at both ends, got {} and {}",
                    x + 1,
                    y + 1,
                    shapes[x],
                    shapes[y],
                ));
            }
        }
        Ok(GhProblem { shapes })
    }

    pub fn shapes(&self) -> [Shape; 4] {
        self.shapes
    }

    /// Smallest degree in the sum `f1 f4 + f3 f2`.
    pub fn d_min(&self) -> usize {
        let [s1, s2, s3, s4] = self.shapes;
        (s1.min_deg + s4.min_deg).min(s2.min_deg + s3.min_deg)
    }

    /// Largest degree in the sum.
    pub fn d_max(&self) -> usize {
        let [s1, s2, s3, s4] = self.shapes;
        (s1.max_deg + s4.max_deg).max(s2.max_deg + s3.max_deg)
    }

    /// Row count of the reduced `(G H)` matrix: one row per degree of
    /// the right parity between `d_min` and `d_max`.
    pub fn rows(&self) -> usize {
        (self.d_max() - self.d_min()) / 2 + 1
    }

    /// Columns contributed by the unknown `f4`.
    pub fn g_cols(&self) -> usize {
        self.shapes[3].width() / 2 + 1
    }

    /// Columns contributed by the unknown `f2`.
    pub fn h_cols(&self) -> usize {
        self.shapes[1].width() / 2 + 1
    }

    pub fn cols(&self) -> usize {
        self.g_cols() + self.h_cols()
    }

    /// A quadruple is alternating good exactly when the reduced matrix
    /// is square; then the factorization has generically finitely many
    /// solutions.
    pub fn is_alternating_good(&self) -> bool {
        self.rows() == self.cols()
    }

    /// Build the reduced `(G H)` matrix from dense coefficient vectors
    /// for `f1` and `f3` (index = degree). Entries off each shape's
    /// alternating support must be zero, the support endpoints nonzero.
    pub fn instantiate(&self, f1: &[Fp], f3: &[Fp]) -> Result<FieldMatrix, IdentifyError> {
        check_alternating(f1, self.shapes[0], "f1")?;
        check_alternating(f3, self.shapes[2], "f3")?;
        let d_min = self.d_min();
        let d_max = self.d_max();
        let mut m = FieldMatrix::zeros(self.rows(), self.cols());
        let row_degrees = (d_min..=d_max).filter(|d| (d_max - d).is_multiple_of(2));
        for (r, deg) in row_degrees.enumerate() {
            let mut col = 0;
            let s4 = self.shapes[3];
            for e in (s4.min_deg..=s4.max_deg).step_by(2) {
                if deg >= e && deg - e < f1.len() {
                    m[(r, col)] = f1[deg - e];
                }
                col += 1;
            }
            let s2 = self.shapes[1];
            for e in (s2.min_deg..=s2.max_deg).step_by(2) {
                if deg >= e && deg - e < f3.len() {
                    m[(r, col)] = f3[deg - e];
                }
                col += 1;
            }
        }
        Ok(m)
    }

    /// Instantiate with uniformly random nonzero coefficients on both
    /// supports.
    pub fn random_instance(&self, rng: &mut impl RngCore) -> FieldMatrix {
        let draw = |shape: Shape, rng: &mut dyn RngCore| {
            let mut coeffs = alloc::vec![Fp::ZERO; shape.max_deg + 1];
            for d in (shape.min_deg..=shape.max_deg).step_by(2) {
                coeffs[d] = Fp::random_nonzero(rng);
            }
            coeffs
        };
        let f1 = draw(self.shapes[0], rng);
        let f3 = draw(self.shapes[2], rng);
        self.instantiate(&f1, &f3)
            .expect("random draw satisfies its own shapes")
    }
}

fn check_alternating(coeffs: &[Fp], shape: Shape, name: &str) -> Result<(), IdentifyError> {
    let bad = |detail: String| Err(IdentifyError::BadInstance { detail });
    if coeffs.len() != shape.max_deg + 1 {
        return bad(alloc::format!(
            "{name} has {} coefficients, shape {shape} needs {}",
            coeffs.len(),
            shape.max_deg + 1
        ));
    }
    for (d, c) in coeffs.iter().enumerate() {
        let on_support = d >= shape.min_deg && (shape.max_deg - d).is_multiple_of(2);
        if !on_support && !c.is_zero() {
            return bad(alloc::format!(
                "{name} is nonzero at degree {d}, off the support"
            ));
        }
        if (d == shape.min_deg || d == shape.max_deg) && c.is_zero() {
            return bad(alloc::format!("{name} vanishes at its shape endpoint {d}"));
        }
    }
    Ok(())
}

/// The factorization problem induced by one series or parallel
/// combination of two equations. For a series node the known operators
/// are the operands' V sides; for a parallel node duality puts the sum
/// on the V side and the known operators are the I sides.
pub fn gh_problem_for_split(
    op: CombineOp,
    left: &ConstEq,
    right: &ConstEq,
) -> Result<GhProblem, IdentifyError> {
    let lv = left.v_op().shape();
    let li = left.i_op().shape();
    let rv = right.v_op().shape();
    let ri = right.i_op().shape();
    let shapes = match op {
        CombineOp::Series => [lv, li, rv, ri],
        CombineOp::Parallel => [ri, rv, li, lv],
    };
    GhProblem::new(shapes)
}
