//! Acceptance suite: one test per shipping criterion.
//!
//! Each test prints a single machine-greppable verdict line of the form
//! `[acceptance] criterion NN: PASS — detail` (run with `--nocapture` to
//! see them) and fails loudly otherwise. Expected values are frozen:
//! regressions here mean observable behavior changed.

use lcr_core::identify::gh_problem_for_split;
use lcr_core::typesys::{lc_class, lc_table_lookup, type_of};
use lcr_core::{
    build_consteq, count_criterion, find_relations, is_locally_identifiable,
    scaling_invariance_check, type_closure, verify_relation_exact, Alternation, CombineOp, ConstEq,
    Element, ElementKind, Fp, LcClass, MultiPoly, Network, Parameterization, TypeQuad, VarRegistry,
    FORBIDDEN_TYPES,
};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::SeedableRng;
use std::collections::BTreeSet;
use std::sync::Arc;

fn pass(criterion: u32, detail: &str) {
    println!("[acceptance] criterion {criterion:02}: PASS — {detail}");
}

fn check(criterion: u32, ok: bool, detail: &str) {
    if !ok {
        println!("[acceptance] criterion {criterion:02}: FAIL — {detail}");
        panic!("criterion {criterion:02} failed: {detail}");
    }
}

fn net(s: &str) -> Network {
    Network::parse(s).unwrap()
}

fn affine(n: &Network) -> ConstEq {
    build_consteq(n, Parameterization::Affine).unwrap()
}

// ---------------------------------------------------------------------
// Criterion 01: constitutive equations of the reference networks
// ---------------------------------------------------------------------

/// Product of named parameters times an integer.
fn term(reg: &Arc<VarRegistry>, c: i64, vars: &[&str]) -> MultiPoly {
    let mut p = MultiPoly::constant(reg, BigInt::from(c));
    for v in vars {
        p = p.try_mul(&MultiPoly::var_named(reg, v).unwrap()).unwrap();
    }
    p
}

fn sum(parts: Vec<MultiPoly>) -> MultiPoly {
    let mut acc = parts[0].clone();
    for p in &parts[1..] {
        acc = acc.try_add(p).unwrap();
    }
    acc
}

/// The equation must match the expected coefficient lists exactly up to
/// one positive integer scalar applied to the whole equation.
fn assert_proportional(criterion: u32, eq: &ConstEq, v: &[MultiPoly], i: &[MultiPoly], who: &str) {
    let got_v: Vec<MultiPoly> = (0..v.len()).map(|k| eq.v_op().coeff(k)).collect();
    let got_i: Vec<MultiPoly> = (0..i.len()).map(|k| eq.i_op().coeff(k)).collect();
    check(
        criterion,
        eq.v_op().order() + 1 == v.len() && eq.i_op().order() + 1 == i.len(),
        &format!("{who}: operator orders differ"),
    );
    let lead = |polys: &[MultiPoly]| -> BigInt {
        polys
            .iter()
            .flat_map(|p| p.terms().map(|(_, c)| c.clone()).collect::<Vec<_>>())
            .find(|c| !BigInt::from(0).eq(c))
            .unwrap()
    };
    let all_got: Vec<MultiPoly> = got_v.iter().chain(&got_i).cloned().collect();
    let all_exp: Vec<MultiPoly> = v.iter().chain(i).cloned().collect();
    let (g0, e0) = (lead(&all_got), lead(&all_exp));
    check(
        criterion,
        g0 > BigInt::from(0) && e0 > BigInt::from(0),
        &format!("{who}: leading coefficients not positive"),
    );
    for (g, e) in all_got.iter().zip(&all_exp) {
        check(
            criterion,
            g.scale(e0.clone()) == e.scale(g0.clone()),
            &format!(
                "{who}: coefficients not proportional ({} vs {})",
                g.render(),
                e.render()
            ),
        );
    }
}

#[test]
fn criterion_01_reference_equations() {
    // V = (L s + R) I
    let eq = affine(&net("R & L"));
    let reg = eq.registry();
    assert_proportional(
        1,
        &eq,
        &[term(reg, 1, &[])],
        &[term(reg, 1, &["R"]), term(reg, 1, &["L"])],
        "R & L",
    );

    // (L s + R) V = (R L s) I
    let eq = affine(&net("R | L"));
    let reg = eq.registry();
    assert_proportional(
        1,
        &eq,
        &[term(reg, 1, &["R"]), term(reg, 1, &["L"])],
        &[term(reg, 0, &[]), term(reg, 1, &["R", "L"])],
        "R | L",
    );

    // s V = (L s^2 + R s + C) I
    let eq = affine(&net("L & R & C"));
    let reg = eq.registry();
    assert_proportional(
        1,
        &eq,
        &[term(reg, 0, &[]), term(reg, 1, &[])],
        &[
            term(reg, 1, &["C"]),
            term(reg, 1, &["R"]),
            term(reg, 1, &["L"]),
        ],
        "L & R & C",
    );

    // Five elements, one resistor in the middle of a reactive bridge.
    let eq = affine(&net("L1 | (R & (C1 | C2 | L2))"));
    let reg = eq.registry();
    let v = vec![
        term(reg, 1, &["C1", "C2", "R"]),
        sum(vec![
            term(reg, 1, &["C1", "C2", "L1"]),
            term(reg, 1, &["C1", "C2", "L2"]),
        ]),
        sum(vec![
            term(reg, 1, &["C1", "L2", "R"]),
            term(reg, 1, &["C2", "L2", "R"]),
        ]),
        sum(vec![
            term(reg, 1, &["C1", "L1", "L2"]),
            term(reg, 1, &["C2", "L1", "L2"]),
        ]),
    ];
    let i = vec![
        term(reg, 0, &[]),
        term(reg, 1, &["C1", "C2", "L1", "R"]),
        term(reg, 1, &["C1", "C2", "L1", "L2"]),
        sum(vec![
            term(reg, 1, &["C1", "L1", "L2", "R"]),
            term(reg, 1, &["C2", "L1", "L2", "R"]),
        ]),
    ];
    assert_proportional(1, &eq, &v, &i, "L1 | (R & (C1 | C2 | L2))");

    pass(1, "four reference equations match frozen coefficients");
}

// ---------------------------------------------------------------------
// Criterion 02: identifiability verdicts of the reference networks
// ---------------------------------------------------------------------

#[test]
fn criterion_02_reference_verdicts() {
    for seed in [42u64, 31337] {
        let v = is_locally_identifiable(&net("L & R & C"), seed).unwrap();
        check(
            2,
            v.locally_identifiable && v.generic_rank == 3 && v.n_params == 3,
            &format!(
                "L & R & C expected rank 3/3, got {}/{}",
                v.generic_rank, v.n_params
            ),
        );

        let v = is_locally_identifiable(&net("L1 | (R & (C1 | C2 | L2))"), seed).unwrap();
        check(
            2,
            !v.locally_identifiable
                && v.n_params == 5
                && v.n_nonmonic == 6
                && v.generic_rank == 4,
            &format!(
                "five-element network expected rank 4 of 5 params (6 nonmonic), got rank {} of {} ({} nonmonic)",
                v.generic_rank, v.n_params, v.n_nonmonic
            ),
        );

        let v = is_locally_identifiable(&net("((R1 | C) & (R2 | L)) & R3"), seed).unwrap();
        check(
            2,
            v.locally_identifiable && v.generic_rank == 5 && v.n_params == 5,
            &format!(
                "five-param chain expected 5/5, got {}/{}",
                v.generic_rank, v.n_params
            ),
        );

        let v = is_locally_identifiable(&net("(((R1 | C) & (R2 | L)) & R3) & R4"), seed).unwrap();
        check(
            2,
            !v.locally_identifiable && v.generic_rank == 5 && v.n_params == 6,
            &format!(
                "six-param chain expected 5/6, got {}/{}",
                v.generic_rank, v.n_params
            ),
        );
    }
    pass(2, "reference ranks 3/3, 4/5, 5/5, 5/6 are seed-stable");
}

// ---------------------------------------------------------------------
// Criterion 03: the 22-type closure
// ---------------------------------------------------------------------

#[test]
fn criterion_03_type_closure() {
    let closure: BTreeSet<TypeQuad> = type_closure().into_iter().collect();
    check(
        3,
        closure.len() == 22,
        &format!("closure has {} types", closure.len()),
    );
    check(
        3,
        FORBIDDEN_TYPES.len() == 14,
        "forbidden list must have 14 entries",
    );
    for f in FORBIDDEN_TYPES {
        check(
            3,
            !closure.contains(&f),
            &format!("forbidden type {f} is reachable"),
        );
    }
    let all: BTreeSet<TypeQuad> = TypeQuad::all_candidates().into_iter().collect();
    check(
        3,
        all.len() == 36,
        "candidate space must have 36 quadruples",
    );
    let union: BTreeSet<TypeQuad> = closure
        .iter()
        .copied()
        .chain(FORBIDDEN_TYPES.iter().copied())
        .collect();
    check(
        3,
        union == all,
        "closure and forbidden set must partition the 36 candidates",
    );
    for kind in [
        ElementKind::Resistor,
        ElementKind::Inductor,
        ElementKind::Capacitor,
    ] {
        check(
            3,
            closure.contains(&TypeQuad::base(kind)),
            &format!("base type of {kind:?} missing from closure"),
        );
    }
    pass(
        3,
        "closure is exactly 22 types, complement the 14 forbidden ones",
    );
}

// ---------------------------------------------------------------------
// Criterion 04: type algebra is sound at every root split
// ---------------------------------------------------------------------

#[test]
fn criterion_04_type_algebra_soundness() {
    let kinds = [
        ElementKind::Resistor,
        ElementKind::Inductor,
        ElementKind::Capacitor,
    ];
    let mut splits = 0;
    for network in Network::enumerate(&kinds, 6).unwrap() {
        let (op, children) = match &network {
            Network::Leaf(e) => {
                let quad = type_of(&affine(&network)).unwrap();
                check(
                    4,
                    quad == TypeQuad::base(e.kind()),
                    &format!("leaf {network} has type {quad}"),
                );
                continue;
            }
            Network::Series(c) => (CombineOp::Series, c),
            Network::Parallel(c) => (CombineOp::Parallel, c),
        };
        let built = type_of(&affine(&network)).unwrap();
        let mut folded = type_of(&affine(&children[0])).unwrap();
        for child in &children[1..] {
            folded = folded.combine(op, type_of(&affine(child)).unwrap());
        }
        check(
            4,
            built == folded,
            &format!("{network}: built type {built} but algebra predicts {folded}"),
        );
        splits += 1;
    }
    pass(
        4,
        &format!("type algebra matches built equations on {splits} root splits"),
    );
}

// ---------------------------------------------------------------------
// Criterion 05: counting criterion equals rank test on two-kind networks
// ---------------------------------------------------------------------

#[test]
fn criterion_05_count_equals_rank_on_two_kinds() {
    let pairs: [&[ElementKind]; 3] = [
        &[ElementKind::Resistor, ElementKind::Inductor],
        &[ElementKind::Resistor, ElementKind::Capacitor],
        &[ElementKind::Inductor, ElementKind::Capacitor],
    ];
    let mut total = 0;
    for kinds in pairs {
        for network in Network::enumerate(kinds, 6).unwrap() {
            let count = count_criterion(&network).unwrap();
            let rank = is_locally_identifiable(&network, 97).unwrap();
            check(
                5,
                count.locally_identifiable == rank.locally_identifiable
                    && count.generic_rank == rank.generic_rank
                    && count.n_params == rank.n_params
                    && count.n_nonmonic == rank.n_nonmonic,
                &format!(
                    "{network}: count criterion says {} (rank {}), rank test says {} (rank {})",
                    count.locally_identifiable,
                    count.generic_rank,
                    rank.locally_identifiable,
                    rank.generic_rank
                ),
            );
            total += 1;
        }
    }
    check(
        5,
        total == 3 * 2018,
        &format!("expected 6054 networks, saw {total}"),
    );
    pass(
        5,
        "count criterion and rank test agree on all 6054 two-kind networks",
    );
}

// ---------------------------------------------------------------------
// Criterion 06: the twenty combination-table rows
// ---------------------------------------------------------------------

fn relabel(network: &Network, suffix: &str) -> Network {
    match network {
        Network::Leaf(e) => {
            Network::Leaf(Element::new(e.kind(), format!("{}{}", e.label(), suffix)).unwrap())
        }
        Network::Series(c) => {
            Network::series(c.iter().map(|n| relabel(n, suffix)).collect()).unwrap()
        }
        Network::Parallel(c) => {
            Network::parallel(c.iter().map(|n| relabel(n, suffix)).collect()).unwrap()
        }
    }
}

#[test]
fn criterion_06_minimal_witness_table_rows() {
    let classes = [LcClass::A, LcClass::B, LcClass::C, LcClass::D];
    let mut rows = 0;
    for op in [CombineOp::Series, CombineOp::Parallel] {
        for &x in &classes {
            for &y in classes.iter().filter(|&&y| x <= y) {
                let row = lc_table_lookup(op, x, y);
                let left = relabel(&net(x.minimal_witness()), "x");
                let right = relabel(&net(y.minimal_witness()), "y");
                let n = left.leaf_count() + right.leaf_count();
                let composed = Network::combine(op, vec![left, right]).unwrap();
                let eq = affine(&composed);
                let who = format!("{op:?}({x}, {y}) on {composed}");

                check(
                    6,
                    eq.v_op().shape() == row.v_shape.at(n),
                    &format!("{who}: V shape"),
                );
                check(
                    6,
                    eq.i_op().shape() == row.i_shape.at(n),
                    &format!("{who}: I shape"),
                );
                let nonmonic = eq.coefficient_map().n_nonmonic() as i64;
                check(
                    6,
                    nonmonic == n as i64 + row.count_offset as i64,
                    &format!("{who}: {nonmonic} nonmonic vs offset {}", row.count_offset),
                );
                let count = count_criterion(&composed).unwrap();
                let rank = is_locally_identifiable(&composed, 6).unwrap();
                check(
                    6,
                    count.locally_identifiable == row.identifiable
                        && rank.locally_identifiable == row.identifiable,
                    &format!("{who}: identifiability"),
                );
                check(
                    6,
                    lc_class(&eq).unwrap() == row.result,
                    &format!("{who}: resulting class"),
                );
                rows += 1;
            }
        }
    }
    check(6, rows == 20, &format!("checked {rows} rows"));
    pass(6, "all 20 table rows verified on minimal witnesses");
}

// ---------------------------------------------------------------------
// Criterion 07: duality preserves verdicts and swaps the equation
// ---------------------------------------------------------------------

#[test]
fn criterion_07_duality() {
    let kinds = [
        ElementKind::Resistor,
        ElementKind::Inductor,
        ElementKind::Capacitor,
    ];
    let mut rng = StdRng::seed_from_u64(4242);
    for i in 0..500u64 {
        let leaves = 1 + (i as usize % 6);
        let network = Network::random(&kinds, leaves, 70_000 + i).unwrap();
        let dual = network.dual();

        let a = is_locally_identifiable(&network, 42).unwrap();
        let b = is_locally_identifiable(&dual, 42).unwrap();
        check(
            7,
            a.locally_identifiable == b.locally_identifiable && a.generic_rank == b.generic_rank,
            &format!(
                "{network}: verdict {} rank {} but dual gives {} rank {}",
                a.locally_identifiable, a.generic_rank, b.locally_identifiable, b.generic_rank
            ),
        );

        // Projectively, the dual equation is the original with the V and
        // I operators exchanged and each element's parameter pair
        // swapped. The leaf order is preserved, so the parameter vectors
        // align position by position.
        let eq = build_consteq(&network, Parameterization::Projective).unwrap();
        let dual_eq = build_consteq(&dual, Parameterization::Projective).unwrap();
        for _ in 0..3 {
            let pt: Vec<Fp> = (0..eq.n_params())
                .map(|_| Fp::random_nonzero(&mut rng))
                .collect();
            let mut swapped = pt.clone();
            for chunk in swapped.chunks_exact_mut(2) {
                chunk.swap(0, 1);
            }
            let orders = eq.v_op().order().max(eq.i_op().order());
            for k in 0..=orders {
                let vd = dual_eq.v_op().coeff(k).eval(&swapped).unwrap();
                let io = eq.i_op().coeff(k).eval(&pt).unwrap();
                let id = dual_eq.i_op().coeff(k).eval(&swapped).unwrap();
                let vo = eq.v_op().coeff(k).eval(&pt).unwrap();
                check(
                    7,
                    vd == io && id == vo,
                    &format!("{network}: dual equation is not the coefficient swap at order {k}"),
                );
            }
        }
    }
    pass(
        7,
        "500 random networks: dual verdicts equal, swap identity holds at 3 points",
    );
}

// ---------------------------------------------------------------------
// Criterion 08: structural invariants of every small equation
// ---------------------------------------------------------------------

#[test]
fn criterion_08_equation_invariants() {
    let kinds = [
        ElementKind::Resistor,
        ElementKind::Inductor,
        ElementKind::Capacitor,
    ];
    let mut seen = 0;
    for network in Network::enumerate(&kinds, 6).unwrap() {
        let eq = affine(&network);
        let n = network.leaf_count();
        let (v, i) = (eq.v_op().shape(), eq.i_op().shape());
        let who = network.format();
        check(
            8,
            v.max_deg <= n && i.max_deg <= n,
            &format!("{who}: degree exceeds size"),
        );
        check(
            8,
            v.min_deg.abs_diff(i.min_deg) <= 1 && v.max_deg.abs_diff(i.max_deg) <= 1,
            &format!("{who}: end gap exceeds one"),
        );
        check(
            8,
            eq.v_op().alternation() != Alternation::Neither
                && eq.i_op().alternation() != Alternation::Neither,
            &format!("{who}: mixed alternation"),
        );
        let reactive_only = !network.kinds_present().contains(&ElementKind::Resistor);
        if reactive_only {
            check(
                8,
                eq.v_op().alternation() == Alternation::Alternating
                    && eq.i_op().alternation() == Alternation::Alternating,
                &format!("{who}: reactive network must alternate"),
            );
            check(
                8,
                v.min_deg.abs_diff(i.min_deg) == 1
                    && v.max_deg.abs_diff(i.max_deg) == 1
                    && v.width() % 2 == 0
                    && i.width() % 2 == 0,
                &format!("{who}: reactive shapes must have odd gaps and even spans"),
            );
            check(8, lc_class(&eq).is_ok(), &format!("{who}: no class"));
        }
        seen += 1;
    }
    check(
        8,
        seen == 14691,
        &format!("expected 14691 networks, saw {seen}"),
    );
    pass(
        8,
        "invariants hold for all 14691 networks with at most 6 elements",
    );
}

// ---------------------------------------------------------------------
// Criterion 09: coefficient relations
// ---------------------------------------------------------------------

#[test]
fn criterion_09_relations() {
    let rcl = net("(R | C) & L");
    let found = find_relations(&rcl, 1, 1, 2, 16, 42).unwrap();
    check(
        9,
        found.len() == 1,
        &format!(
            "(R | C) & L stratum (1,1,2): kernel dimension {}",
            found.len()
        ),
    );
    let r = &found[0];
    check(9, r.lifted, "(R | C) & L relation failed to lift");
    check(
        9,
        r.text() == "c1*d1 - c0*d2",
        &format!("(R | C) & L relation is {}", r.text()),
    );
    check(
        9,
        verify_relation_exact(&rcl, r).unwrap(),
        "symbolic verification failed",
    );
    check(
        9,
        scaling_invariance_check(&rcl, r, 100, 9).unwrap(),
        "(R | C) & L relation failed the scaling check",
    );

    let bridge = net("(R1 | C) & (R2 | L)");
    let found = find_relations(&bridge, 2, 2, 4, 32, 42).unwrap();
    check(
        9,
        found.len() == 1,
        &format!("bridge stratum (2,2,4): kernel dimension {}", found.len()),
    );
    let r = &found[0];
    check(9, r.lifted, "bridge relation failed to lift");
    check(
        9,
        r.text()
            == "c2^2*d0^2 - c1*c2*d0*d1 + c0*c2*d1^2 + 2*c0*c2*d0*d2 - c0*c1*d1*d2 + c0^2*d2^2",
        &format!("bridge relation is {}", r.text()),
    );
    check(
        9,
        verify_relation_exact(&bridge, r).unwrap(),
        "symbolic verification failed",
    );
    check(
        9,
        scaling_invariance_check(&bridge, r, 100, 9).unwrap(),
        "bridge relation failed the scaling check",
    );

    // Low strata of the series references must be relation-free.
    for name in ["R & L", "L & R & C"] {
        let network = net(name);
        for cdeg in 0..=2usize {
            for ddeg in 0..=(2 - cdeg) {
                for wdeg in 0..=6 {
                    let stratum_rels = find_relations(&network, cdeg, ddeg, wdeg, 64, 7).unwrap();
                    check(
                        9,
                        stratum_rels.is_empty(),
                        &format!("{name} has a relation in stratum ({cdeg},{ddeg},{wdeg})"),
                    );
                }
            }
        }
    }
    pass(
        9,
        "reference relations found, lifted, verified symbolically, scaling-invariant",
    );
}

// ---------------------------------------------------------------------
// Criterion 10: coefficient-recovery problems at identifiable splits
// ---------------------------------------------------------------------

#[test]
fn criterion_10_recovery_problems() {
    let lc = [ElementKind::Inductor, ElementKind::Capacitor];
    let mut rng = StdRng::seed_from_u64(1010);
    let mut squares = 0;
    let mut splits = 0;
    for network in Network::enumerate(&lc, 6).unwrap() {
        let (op, children) = match &network {
            Network::Series(c) if c.len() == 2 => (CombineOp::Series, c),
            Network::Parallel(c) if c.len() == 2 => (CombineOp::Parallel, c),
            _ => continue,
        };
        if !count_criterion(&children[0]).unwrap().locally_identifiable
            || !count_criterion(&children[1]).unwrap().locally_identifiable
        {
            continue;
        }
        let left = affine(&children[0]);
        let right = affine(&children[1]);
        let problem = gh_problem_for_split(op, &left, &right).unwrap();
        let identifiable = count_criterion(&network).unwrap().locally_identifiable;
        check(
            10,
            problem.is_alternating_good() == identifiable,
            &format!(
                "{network}: {}x{} problem vs identifiability {identifiable}",
                problem.rows(),
                problem.cols()
            ),
        );
        splits += 1;
        if problem.is_alternating_good() {
            squares += 1;
            for draw in 0..100 {
                let m = problem.random_instance(&mut rng);
                let det = m.determinant().unwrap();
                check(
                    10,
                    !det.is_zero(),
                    &format!("{network}: singular instance at draw {draw}"),
                );
            }
        }
    }
    check(
        10,
        splits >= 90 && squares >= 50,
        &format!("{splits} splits, {squares} square"),
    );
    pass(
        10,
        &format!("{splits} identifiable splits: squareness tracks identifiability, {squares} square problems stay invertible over 100 draws"),
    );
}
