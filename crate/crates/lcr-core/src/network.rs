//! Series-parallel LCR networks: representation, parsing, printing,
//! duality, enumeration, and random generation.
//!
//! A network is a rooted tree whose leaves are labeled circuit elements
//! and whose internal nodes are series or parallel combinations with at
//! least two children. Series and parallel combination are commutative
//! and associative, so trees are kept flattened: a series node never has
//! a series child, and likewise for parallel.
//!
//! Concrete syntax: `&` is series, `|` is parallel, `&` binds tighter,
//! both n-ary, parentheses allowed. Labels start with the element's kind
//! letter (`R`, `L`, `C`) followed by `[A-Za-z0-9_']*`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use rand_core::{RngCore, SeedableRng};

/// Hard cap on exhaustive enumeration.
pub const MAX_ENUM_LEAVES: usize = 8;

/// The three element kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ElementKind {
    Resistor,
    Inductor,
    Capacitor,
}

impl ElementKind {
    /// The label's leading letter.
    pub fn letter(self) -> char {
        match self {
            ElementKind::Resistor => 'R',
            ElementKind::Inductor => 'L',
            ElementKind::Capacitor => 'C',
        }
    }

    pub fn from_letter(c: char) -> Option<ElementKind> {
        match c {
            'R' => Some(ElementKind::Resistor),
            'L' => Some(ElementKind::Inductor),
            'C' => Some(ElementKind::Capacitor),
            _ => None,
        }
    }

    /// Kind swap under network duality: L and C trade places, R stays.
    pub fn dual(self) -> ElementKind {
        match self {
            ElementKind::Resistor => ElementKind::Resistor,
            ElementKind::Inductor => ElementKind::Capacitor,
            ElementKind::Capacitor => ElementKind::Inductor,
        }
    }
}

/// Series or parallel combination.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CombineOp {
    Series,
    Parallel,
}

impl CombineOp {
    pub fn dual(self) -> CombineOp {
        match self {
            CombineOp::Series => CombineOp::Parallel,
            CombineOp::Parallel => CombineOp::Series,
        }
    }
}

/// A labeled circuit element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    kind: ElementKind,
    label: String,
}

impl Element {
    /// Build an element; the label must be legal and its leading letter
    /// must match the kind.
    pub fn new(kind: ElementKind, label: impl Into<String>) -> Result<Element, NetworkError> {
        let label = label.into();
        check_label(&label)?;
        if !label.starts_with(kind.letter()) {
            return Err(NetworkError::LabelKindMismatch {
                label,
                kind: kind.letter(),
            });
        }
        Ok(Element { kind, label })
    }

    /// Build from a bare label, inferring the kind from its first letter.
    pub fn from_label(label: impl Into<String>) -> Result<Element, NetworkError> {
        let label = label.into();
        check_label(&label)?;
        let kind = ElementKind::from_letter(label.chars().next().expect("nonempty"))
            .expect("checked leading letter");
        Ok(Element { kind, label })
    }

    pub fn kind(&self) -> ElementKind {
        self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The dual element: swapped kind letter, same tail, a prime mark
    /// appended so duals stay distinguishable from the originals.
    pub fn dual(&self) -> Element {
        let kind = self.kind.dual();
        let tail: String = self.label.chars().skip(1).collect();
        Element {
            kind,
            label: format!("{}{}'", kind.letter(), tail),
        }
    }
}

fn check_label(label: &str) -> Result<(), NetworkError> {
    let mut chars = label.chars();
    let ok_head = chars.next().is_some_and(|c| matches!(c, 'R' | 'L' | 'C'));
    let ok_tail = chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'');
    if ok_head && ok_tail {
        Ok(())
    } else {
        Err(NetworkError::BadLabel(label.to_string()))
    }
}

/// A series-parallel network.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Network {
    Leaf(Element),
    Series(Vec<Network>),
    Parallel(Vec<Network>),
}

/// Errors from network construction and parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NetworkError {
    /// Parse failure at a byte offset of the input.
    Syntax { pos: usize, msg: String },
    /// The same label appears on two leaves.
    DuplicateLabel(String),
    /// A label's leading letter contradicts the declared kind.
    LabelKindMismatch { label: String, kind: char },
    /// The label violates `[RLC][A-Za-z0-9_']*`.
    BadLabel(String),
    /// A combination node needs at least two children.
    TooFewChildren,
    /// Enumeration request above the hard leaf cap.
    LimitExceeded { requested: usize, max: usize },
    /// No element kinds supplied.
    NoKinds,
    /// Zero leaves requested.
    ZeroLeaves,
}

impl fmt::Display for NetworkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NetworkError::Syntax { pos, msg } => write!(f, "syntax error at byte {pos}: {msg}"),
            NetworkError::DuplicateLabel(l) => write!(f, "duplicate label {l:?}"),
            NetworkError::LabelKindMismatch { label, kind } => {
                write!(
                    f,
                    "label {label:?} does not start with kind letter '{kind}'"
                )
            }
            NetworkError::BadLabel(l) => write!(f, "bad label {l:?}"),
            NetworkError::TooFewChildren => write!(f, "combination needs at least two children"),
            NetworkError::LimitExceeded { requested, max } => {
                write!(f, "requested {requested} leaves, enumeration cap is {max}")
            }
            NetworkError::NoKinds => write!(f, "no element kinds supplied"),
            NetworkError::ZeroLeaves => write!(f, "a network needs at least one leaf"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for NetworkError {}

impl Network {
    pub fn leaf(e: Element) -> Network {
        Network::Leaf(e)
    }

    /// Series combination; flattens series children and checks label
    /// uniqueness.
    pub fn series(children: Vec<Network>) -> Result<Network, NetworkError> {
        Network::combine(CombineOp::Series, children)
    }

    /// Parallel combination; flattens parallel children and checks label
    /// uniqueness.
    pub fn parallel(children: Vec<Network>) -> Result<Network, NetworkError> {
        Network::combine(CombineOp::Parallel, children)
    }

    pub fn combine(op: CombineOp, children: Vec<Network>) -> Result<Network, NetworkError> {
        if children.len() < 2 {
            return Err(NetworkError::TooFewChildren);
        }
        let mut flat = Vec::with_capacity(children.len());
        for child in children {
            match (op, child) {
                (CombineOp::Series, Network::Series(grand)) => flat.extend(grand),
                (CombineOp::Parallel, Network::Parallel(grand)) => flat.extend(grand),
                (_, other) => flat.push(other),
            }
        }
        let net = match op {
            CombineOp::Series => Network::Series(flat),
            CombineOp::Parallel => Network::Parallel(flat),
        };
        let mut seen = BTreeSet::new();
        for e in net.leaves() {
            if !seen.insert(e.label()) {
                return Err(NetworkError::DuplicateLabel(e.label().to_string()));
            }
        }
        Ok(net)
    }

    /// Leaves in pre-order.
    pub fn leaves(&self) -> Vec<&Element> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Element>) {
        match self {
            Network::Leaf(e) => out.push(e),
            Network::Series(cs) | Network::Parallel(cs) => {
                for c in cs {
                    c.collect_leaves(out);
                }
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves().len()
    }

    /// The distinct element kinds present.
    pub fn kinds_present(&self) -> BTreeSet<ElementKind> {
        self.leaves().iter().map(|e| e.kind()).collect()
    }

    /// Count of leaves of each kind, indexed (R, L, C).
    pub fn kind_counts(&self) -> (usize, usize, usize) {
        let mut counts = (0, 0, 0);
        for e in self.leaves() {
            match e.kind() {
                ElementKind::Resistor => counts.0 += 1,
                ElementKind::Inductor => counts.1 += 1,
                ElementKind::Capacitor => counts.2 += 1,
            }
        }
        counts
    }

    /// Parse the concrete syntax. Whitespace is insignificant.
    pub fn parse(text: &str) -> Result<Network, NetworkError> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        p.skip_ws();
        let net = p.parallel()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(NetworkError::Syntax {
                pos: p.pos,
                msg: "trailing input".to_string(),
            });
        }
        // Re-run label checks through the constructors (single leaves
        // have nothing to combine, but still need uniqueness).
        let mut seen = BTreeSet::new();
        for e in net.leaves() {
            if !seen.insert(e.label().to_string()) {
                return Err(NetworkError::DuplicateLabel(e.label().to_string()));
            }
        }
        Ok(net)
    }

    /// Canonical text form; round-trips through [`Network::parse`].
    pub fn format(&self) -> String {
        self.format_inner(true)
    }

    fn format_inner(&self, top: bool) -> String {
        match self {
            Network::Leaf(e) => e.label().to_string(),
            Network::Series(cs) => {
                let body = cs
                    .iter()
                    .map(|c| c.format_inner(false))
                    .collect::<Vec<_>>()
                    .join(" & ");
                if top {
                    body
                } else {
                    format!("({body})")
                }
            }
            Network::Parallel(cs) => {
                let body = cs
                    .iter()
                    .map(|c| c.format_inner(false))
                    .collect::<Vec<_>>()
                    .join(" | ");
                if top {
                    body
                } else {
                    format!("({body})")
                }
            }
        }
    }

    /// The dual network: series and parallel swap, inductors and
    /// capacitors swap, every label gains a prime mark. Child order is
    /// preserved, so taking the dual twice restores the structure.
    pub fn dual(&self) -> Network {
        match self {
            Network::Leaf(e) => Network::Leaf(e.dual()),
            Network::Series(cs) => Network::Parallel(cs.iter().map(Network::dual).collect()),
            Network::Parallel(cs) => Network::Series(cs.iter().map(Network::dual).collect()),
        }
    }

    /// Structural equality ignoring labels (kinds and tree shape only).
    pub fn same_structure(&self, other: &Network) -> bool {
        match (self, other) {
            (Network::Leaf(a), Network::Leaf(b)) => a.kind() == b.kind(),
            (Network::Series(a), Network::Series(b))
            | (Network::Parallel(a), Network::Parallel(b)) => {
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.same_structure(y))
            }
            _ => false,
        }
    }

    /// A label-free canonical key: children sorted, so two networks get
    /// the same key exactly when they agree up to reordering children
    /// and relabeling leaves.
    pub fn structure_key(&self) -> String {
        match self {
            Network::Leaf(e) => e.kind().letter().to_string(),
            Network::Series(cs) | Network::Parallel(cs) => {
                let mut keys: Vec<String> = cs.iter().map(Network::structure_key).collect();
                keys.sort();
                let op = if matches!(self, Network::Series(_)) {
                    '&'
                } else {
                    '|'
                };
                format!("{op}({})", keys.join(","))
            }
        }
    }

    /// Every canonical series-parallel network with at most `max_leaves`
    /// leaves over the given kinds, one representative per equivalence
    /// class under child reordering. Leaves are labeled deterministically
    /// (`R1`, `R2`, ... or a bare letter when the kind occurs once).
    /// Ordered by leaf count, then structurally.
    pub fn enumerate(
        kinds: &[ElementKind],
        max_leaves: usize,
    ) -> Result<Vec<Network>, NetworkError> {
        if max_leaves > MAX_ENUM_LEAVES {
            return Err(NetworkError::LimitExceeded {
                requested: max_leaves,
                max: MAX_ENUM_LEAVES,
            });
        }
        let kinds: Vec<ElementKind> = {
            let set: BTreeSet<ElementKind> = kinds.iter().copied().collect();
            if set.is_empty() {
                return Err(NetworkError::NoKinds);
            }
            set.into_iter().collect()
        };
        let mut out = Vec::new();
        // shapes[k] = canonical kind-labeled tree shapes with k+1 leaves.
        let mut shapes: Vec<Vec<TreeShape>> = Vec::new();
        for k in 1..=max_leaves {
            let this = enumerate_shapes(k, &shapes, &kinds);
            for shape in &this {
                out.push(shape.to_network());
            }
            shapes.push(this);
        }
        Ok(out)
    }

    /// Deterministic pseudo-random network with the given leaf count.
    pub fn random(
        kinds: &[ElementKind],
        leaves: usize,
        seed: u64,
    ) -> Result<Network, NetworkError> {
        if leaves == 0 {
            return Err(NetworkError::ZeroLeaves);
        }
        if kinds.is_empty() {
            return Err(NetworkError::NoKinds);
        }
        let kinds: Vec<ElementKind> = {
            let set: BTreeSet<ElementKind> = kinds.iter().copied().collect();
            set.into_iter().collect()
        };
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let shape = random_shape(&mut rng, leaves, None, &kinds);
        Ok(shape.to_network())
    }
}

impl fmt::Display for Network {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

/// Label-free tree used during enumeration and random generation.
/// Derived `Ord` gives the deterministic structural order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum TreeShape {
    Leaf(ElementKind),
    Series(Vec<TreeShape>),
    Parallel(Vec<TreeShape>),
}

impl TreeShape {
    fn leaf_count(&self) -> usize {
        match self {
            TreeShape::Leaf(_) => 1,
            TreeShape::Series(cs) | TreeShape::Parallel(cs) => {
                cs.iter().map(TreeShape::leaf_count).sum()
            }
        }
    }

    fn is_series(&self) -> bool {
        matches!(self, TreeShape::Series(_))
    }

    fn is_parallel(&self) -> bool {
        matches!(self, TreeShape::Parallel(_))
    }

    /// Attach deterministic labels: kinds occurring once get a bare
    /// letter, others are numbered in pre-order.
    fn to_network(&self) -> Network {
        let mut totals = (0usize, 0usize, 0usize);
        self.count_kinds(&mut totals);
        let mut counters = (0usize, 0usize, 0usize);
        self.build(&totals, &mut counters)
    }

    fn count_kinds(&self, totals: &mut (usize, usize, usize)) {
        match self {
            TreeShape::Leaf(k) => match k {
                ElementKind::Resistor => totals.0 += 1,
                ElementKind::Inductor => totals.1 += 1,
                ElementKind::Capacitor => totals.2 += 1,
            },
            TreeShape::Series(cs) | TreeShape::Parallel(cs) => {
                for c in cs {
                    c.count_kinds(totals);
                }
            }
        }
    }

    fn build(
        &self,
        totals: &(usize, usize, usize),
        counters: &mut (usize, usize, usize),
    ) -> Network {
        match self {
            TreeShape::Leaf(k) => {
                let (total, counter) = match k {
                    ElementKind::Resistor => (totals.0, &mut counters.0),
                    ElementKind::Inductor => (totals.1, &mut counters.1),
                    ElementKind::Capacitor => (totals.2, &mut counters.2),
                };
                *counter += 1;
                let label = if total == 1 {
                    k.letter().to_string()
                } else {
                    format!("{}{}", k.letter(), counter)
                };
                Network::Leaf(Element::new(*k, label).expect("generated label is legal"))
            }
            TreeShape::Series(cs) => {
                Network::Series(cs.iter().map(|c| c.build(totals, counters)).collect())
            }
            TreeShape::Parallel(cs) => {
                Network::Parallel(cs.iter().map(|c| c.build(totals, counters)).collect())
            }
        }
    }
}

/// All canonical shapes with exactly `k` leaves, given shapes for all
/// smaller leaf counts (`smaller[j]` holds count `j+1`).
fn enumerate_shapes(k: usize, smaller: &[Vec<TreeShape>], kinds: &[ElementKind]) -> Vec<TreeShape> {
    let mut out: Vec<TreeShape> = Vec::new();
    if k == 1 {
        for &kind in kinds {
            out.push(TreeShape::Leaf(kind));
        }
        out.sort();
        return out;
    }
    // Candidate children for a series node: anything not series-rooted,
    // ordered deterministically; dually for parallel.
    let mut series_cands: Vec<TreeShape> = Vec::new();
    let mut parallel_cands: Vec<TreeShape> = Vec::new();
    for level in smaller {
        for s in level {
            if !s.is_series() {
                series_cands.push(s.clone());
            }
            if !s.is_parallel() {
                parallel_cands.push(s.clone());
            }
        }
    }
    let mut buf = Vec::new();
    collect_multisets(&series_cands, k, 0, &mut buf, &mut |children| {
        out.push(TreeShape::Series(children.to_vec()));
    });
    collect_multisets(&parallel_cands, k, 0, &mut buf, &mut |children| {
        out.push(TreeShape::Parallel(children.to_vec()));
    });
    out.sort();
    out
}

/// Non-decreasing index sequences over `cands` with total leaf count
/// `remaining` and at least two entries: exactly the multisets.
fn collect_multisets(
    cands: &[TreeShape],
    remaining: usize,
    min_idx: usize,
    buf: &mut Vec<TreeShape>,
    emit: &mut impl FnMut(&[TreeShape]),
) {
    if remaining == 0 {
        if buf.len() >= 2 {
            emit(buf);
        }
        return;
    }
    for idx in min_idx..cands.len() {
        let lc = cands[idx].leaf_count();
        if lc <= remaining {
            buf.push(cands[idx].clone());
            collect_multisets(cands, remaining - lc, idx, buf, emit);
            buf.pop();
        }
    }
}

fn rand_below(rng: &mut impl RngCore, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}

fn random_shape(
    rng: &mut impl RngCore,
    leaves: usize,
    forbidden: Option<CombineOp>,
    kinds: &[ElementKind],
) -> TreeShape {
    if leaves == 1 {
        return TreeShape::Leaf(kinds[rand_below(rng, kinds.len())]);
    }
    let op = match forbidden {
        Some(CombineOp::Series) => CombineOp::Parallel,
        Some(CombineOp::Parallel) => CombineOp::Series,
        None => {
            if rng.next_u64() & 1 == 0 {
                CombineOp::Series
            } else {
                CombineOp::Parallel
            }
        }
    };
    let n_children = 2 + rand_below(rng, leaves - 1);
    // Random composition of `leaves` into n_children positive parts.
    let mut parts = alloc::vec![1usize; n_children];
    for _ in 0..leaves - n_children {
        let i = rand_below(rng, n_children);
        parts[i] += 1;
    }
    let children = parts
        .into_iter()
        .map(|p| random_shape(rng, p, Some(op), kinds))
        .collect();
    match op {
        CombineOp::Series => TreeShape::Series(children),
        CombineOp::Parallel => TreeShape::Parallel(children),
    }
}

/// Recursive-descent parser for the network grammar.
struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> NetworkError {
        NetworkError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    // parallel := series { "|" series }
    fn parallel(&mut self) -> Result<Network, NetworkError> {
        let mut children = alloc::vec![self.series()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(b'|') {
                self.pos += 1;
                self.skip_ws();
                children.push(self.series()?);
            } else {
                break;
            }
        }
        if children.len() == 1 {
            Ok(children.pop().expect("one child"))
        } else {
            Network::parallel(children)
        }
    }

    // series := atom { "&" atom }
    fn series(&mut self) -> Result<Network, NetworkError> {
        let mut children = alloc::vec![self.atom()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(b'&') {
                self.pos += 1;
                self.skip_ws();
                children.push(self.atom()?);
            } else {
                break;
            }
        }
        if children.len() == 1 {
            Ok(children.pop().expect("one child"))
        } else {
            Network::series(children)
        }
    }

    // atom := LABEL | "(" parallel ")"
    fn atom(&mut self) -> Result<Network, NetworkError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parallel()?;
                self.skip_ws();
                if self.peek() == Some(b')') {
                    self.pos += 1;
                    Ok(inner)
                } else {
                    Err(self.err("expected ')'"))
                }
            }
            Some(b'R' | b'L' | b'C') => {
                let start = self.pos;
                self.pos += 1;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_' || c == b'\'')
                {
                    self.pos += 1;
                }
                let label = core::str::from_utf8(&self.src[start..self.pos])
                    .expect("ASCII slice")
                    .to_string();
                Ok(Network::Leaf(
                    Element::from_label(label).expect("scanned label is legal"),
                ))
            }
            Some(_) => Err(self.err("expected a label or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Network {
        Network::parse(s).unwrap()
    }

    #[test]
    fn parse_two_leaf_series() {
        let n = parse("R1 & L1");
        match &n {
            Network::Series(cs) => assert_eq!(cs.len(), 2),
            _ => panic!("expected series"),
        }
        assert_eq!(n.format(), "R1 & L1");
    }

    #[test]
    fn parse_single_leaf() {
        let n = parse("L1");
        assert!(matches!(n, Network::Leaf(_)));
        assert_eq!(n.format(), "L1");
    }

    #[test]
    fn parse_nested() {
        let n = parse("(R1 & C1) | (R2 & L1)");
        match &n {
            Network::Parallel(cs) => {
                assert_eq!(cs.len(), 2);
                assert!(matches!(cs[0], Network::Series(_)));
            }
            _ => panic!("expected parallel"),
        }
        assert_eq!(n.format(), "(R1 & C1) | (R2 & L1)");
    }

    #[test]
    fn series_binds_tighter() {
        let n = parse("R1 & C1 | R2");
        assert!(matches!(n, Network::Parallel(_)));
    }

    #[test]
    fn flattening_is_canonical() {
        let n = parse("R1 & (R2 & R3)");
        match n {
            Network::Series(cs) => assert_eq!(cs.len(), 3),
            _ => panic!("expected flattened series"),
        }
    }

    #[test]
    fn redundant_parens_collapse() {
        let n = parse("((L1))");
        assert!(matches!(n, Network::Leaf(_)));
    }

    #[test]
    fn format_examples() {
        assert_eq!(parse("L1&R1&C1").format(), "L1 & R1 & C1");
        assert_eq!(
            parse("(R1&C1)|(R2&L1)").dual().format(),
            "(R1' | L1') & (R2' | C1')"
        );
    }

    #[test]
    fn syntax_error_reports_position() {
        match Network::parse("R1 & ") {
            Err(NetworkError::Syntax { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(
            Network::parse("R1 ) L2"),
            Err(NetworkError::Syntax { .. })
        ));
        assert!(matches!(
            Network::parse("X1 & R1"),
            Err(NetworkError::Syntax { .. })
        ));
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert_eq!(
            Network::parse("R1 & R1").unwrap_err(),
            NetworkError::DuplicateLabel("R1".into())
        );
    }

    #[test]
    fn kind_mismatch_rejected() {
        assert!(matches!(
            Element::new(ElementKind::Resistor, "L1"),
            Err(NetworkError::LabelKindMismatch { .. })
        ));
    }

    #[test]
    fn dual_examples() {
        let r = parse("R1");
        assert_eq!(r.dual().format(), "R1'");
        let n = parse("(R1 & C1) | (R2 & L1)");
        let d = n.dual();
        assert_eq!(d.format(), "(R1' | L1') & (R2' | C1')");
        assert!(d.dual().same_structure(&n));
        // Kind counts swap between L and C.
        let (r0, l0, c0) = n.kind_counts();
        let (r1, l1, c1) = d.kind_counts();
        assert_eq!((r0, l0, c0), (r1, c1, l1));
    }

    #[test]
    fn enumerate_single_kind_three_leaves() {
        // series of 3; parallel of 3; series(x, parallel(y,z));
        // parallel(x, series(y,z)).
        let all = Network::enumerate(&[ElementKind::Resistor], 3).unwrap();
        let three: Vec<_> = all.iter().filter(|n| n.leaf_count() == 3).collect();
        assert_eq!(three.len(), 4);
    }

    #[test]
    fn enumerate_two_kinds_two_leaves() {
        let all = Network::enumerate(&[ElementKind::Inductor, ElementKind::Capacitor], 2).unwrap();
        let formatted: BTreeSet<String> = all.iter().map(Network::format).collect();
        let expect: BTreeSet<String> = [
            "L", "C", "L & C", "L | C", "L1 & L2", "L1 | L2", "C1 & C2", "C1 | C2",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        assert_eq!(formatted, expect);
    }

    #[test]
    fn enumerate_caps_leaf_count() {
        assert!(matches!(
            Network::enumerate(&[ElementKind::Resistor], 9),
            Err(NetworkError::LimitExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_has_no_structural_duplicates() {
        let all = Network::enumerate(
            &[
                ElementKind::Resistor,
                ElementKind::Inductor,
                ElementKind::Capacitor,
            ],
            4,
        )
        .unwrap();
        // structure_key collapses labels but keeps kinds, which is the
        // enumeration's notion of identity.
        let keys: BTreeSet<String> = all.iter().map(Network::structure_key).collect();
        assert_eq!(keys.len(), all.len());
    }

    #[test]
    fn random_network_is_deterministic() {
        let kinds = [
            ElementKind::Resistor,
            ElementKind::Inductor,
            ElementKind::Capacitor,
        ];
        let a = Network::random(&kinds, 5, 17).unwrap();
        let b = Network::random(&kinds, 5, 17).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.leaf_count(), 5);
        let c = Network::random(&kinds, 5, 18).unwrap();
        // Different seeds generally give different trees.
        assert!(a != c || a.format() == c.format());
        assert!(Network::random(&kinds, 1, 0).unwrap().leaf_count() == 1);
    }
}
