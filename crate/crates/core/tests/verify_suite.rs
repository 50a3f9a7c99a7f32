use circmyc::verify::{find, registry, run_all, run_check, run_suite, Ctx, Profile, Status};
use serde_json::json;

#[test]
fn quick_profile_has_no_failures_and_is_deterministic() {
    let a = run_all(Profile::Quick, false);
    let b = run_all(Profile::Quick, false);
    assert_eq!(a.summary.fail, 0, "{}", a.to_json());
    assert!(a.summary.pass > 0);
    assert_eq!(a.to_json(), b.to_json());
    assert!(a.results.iter().all(|r| r.elapsed_ms.is_none()));
    for def in registry() {
        assert!(a.results.iter().any(|r| r.name == def.name), "{} never ran", def.name);
    }
}

#[test]
fn registry_names_are_unique() {
    let names: Vec<_> = registry().iter().map(|c| c.name).collect();
    let mut sorted = names.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), names.len());
    assert_eq!(names.len(), 20);
    assert!(find("no-such-check").is_err());
}

#[test]
fn explicit_instances() {
    let ctx = Ctx::new(Profile::Quick);
    let r = run_check("product-example", &json!({"m": 3}), &ctx, false).unwrap();
    assert_eq!(
        (r.status, r.lhs.clone(), r.rhs.clone()),
        (Status::Pass, json!(6), json!(6))
    );

    let r = run_check("chi-kneser", &json!({"m": 4, "n": 2}), &ctx, false).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.lhs, json!(2));

    let r = run_check("phi2-contrapositive", &json!({"graph": "C5"}), &ctx, false).unwrap();
    assert_eq!(r.status, Status::Pass);

    let r = run_check("mmm2", &json!({"graph": "K3", "t": 1}), &ctx, false).unwrap();
    assert_eq!(r.status, Status::Skip);
    assert!(run_check("unknown", &json!({}), &ctx, false).is_err());
}

#[test]
fn bad_params_skip_and_tiny_budgets_exhaust() {
    let ctx = Ctx::new(Profile::Quick);
    let r = run_check("chi-kneser", &json!({"m": "four"}), &ctx, false).unwrap();
    assert_eq!(r.status, Status::Skip);
    assert!(r.detail.is_some());

    let tiny = Ctx::new(Profile::Quick).with_node_limit(2);
    let rep = run_suite(&["chi-kneser"], &tiny, false).unwrap();
    assert!(rep.results.iter().any(|r| r.status == Status::Exhausted));
    assert_eq!(rep.summary.fail, 0);
}
