//! Library-level checks of suites, reports, scripts and mutations.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shearq::suites::*;

fn opts() -> SuiteOptions {
    SuiteOptions {
        samples: 50,
        ..SuiteOptions::default()
    }
}

#[test]
fn unknown_suite_yields_none() {
    assert!(run_suite("nope", &opts(), &Inputs::default()).is_none());
    assert!(SUITES.iter().all(|(n, _)| is_suite(n)));
}

#[test]
fn suite_runs_are_deterministic_up_to_timing() {
    let strip = |mut v: Vec<IdentityReport>| {
        for r in v.iter_mut() {
            r.elapsed_ms = 0.0;
        }
        v
    };
    let a = strip(run_suite("pvi", &opts(), &Inputs::default()).unwrap());
    let b = strip(run_suite("pvi", &opts(), &Inputs::default()).unwrap());
    assert_eq!(a, b);
}

#[test]
fn failures_carry_witnesses() {
    let reps = an_nelson_regge(&opts());
    for r in reps.iter().filter(|r| !r.passed()) {
        assert!(
            r.witness.as_deref().is_some_and(|w| !w.is_empty()),
            "{}",
            r.id
        );
    }
    let crossing = reps
        .iter()
        .find(|r| r.id == "A4/nr/crossing-opposite-sign/0123")
        .unwrap();
    assert!(crossing.diagnostic && crossing.passed());
}

#[test]
fn report_roundtrips_through_json() {
    let report = Report {
        schema: REPORT_SCHEMA.into(),
        environment: Environment {
            version: "0".into(),
            seed: 1,
            moduli: vec![5, 7],
            samples: 1,
            suites: vec!["pvi".into()],
        },
        reports: pvi(&opts()),
    };
    let text = serde_json::to_string(&report).unwrap();
    let back: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
    assert!(back.all_pass());
}

#[test]
fn script_parser_accepts_three_moves_and_comments() {
    let s = parse_script("flip X1\n# note\npflip S  # root\ndecor P\n").unwrap();
    assert_eq!(
        s,
        vec![
            ScriptMove::Flip("X1".into()),
            ScriptMove::PendingFlip("S".into()),
            ScriptMove::Decoration("P".into())
        ]
    );
    assert!(parse_script("twist X1").is_err());
}

#[test]
fn script_stops_at_a_bad_move() {
    let g = MonodromyRealization::spine(3).graph;
    let reps = run_script(
        &g,
        &[
            ScriptMove::Flip("nope".into()),
            ScriptMove::Flip("X1".into()),
        ],
        &opts(),
    );
    assert_eq!(reps.len(), 1);
    assert!(!reps[0].passed());
}

#[test]
fn mutations_change_relations() {
    let rels = an_core_relations(3);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for kind in [
        Mutation::QShift,
        Mutation::Negate,
        Mutation::Reverse,
        Mutation::Drop,
    ] {
        for r in &rels {
            if let Some(m) = mutate(r, kind, &mut rng) {
                assert_ne!(m.terms, r.terms);
            }
        }
    }
}

#[test]
fn mutants_are_caught_on_a3() {
    let real = MonodromyRealization::spine(3);
    let ck = Checker::new(&real.graph, &BaseEnv(&real), &[5, 7], 2);
    let res = run_mutants(&ck, &an_core_relations(3), 20, 2);
    assert_eq!(res.len(), 20);
    assert!(res.iter().all(|m| m.caught));
}

#[test]
fn bundled_graphs_validate() {
    assert!(graph_validate(&bundled_graphs()).iter().all(|r| r.passed()));
}

#[test]
fn geodesic_pair_is_hermitian_on_a4() {
    let real = MonodromyRealization::spine(4);
    let ck = Checker::new(&real.graph, &BaseEnv(&real), &[5], 1);
    for g in ["G01", "G02", "G03", "G12", "G13", "G23"] {
        assert!(ck.check_star_fixed(g, "", g).passed(), "{g}");
    }
}
