use gbd_core::suites::{run_suite, Suite};

#[test]
fn every_suite_passes_with_nonempty_cases() {
    for s in [Suite::Oracle, Suite::Inequalities, Suite::Asymptotics] {
        let r = run_suite(s).unwrap();
        assert!(!r.cases.is_empty());
        let failed: Vec<_> = r.cases.iter().filter(|c| !c.pass).collect();
        assert!(r.pass, "{s}: {failed:?}");
    }
}

#[test]
fn oracle_suite_env_deviation_is_within_tolerance() {
    let r = run_suite(Suite::Oracle).unwrap();
    let env: Vec<_> = r.cases.iter().filter(|c| c.id.starts_with("oracle_env/")).collect();
    assert_eq!(env.len(), 8);
    assert!(env.iter().all(|c| c.max_dev <= 1e-6));
}

#[test]
fn asymptotics_include_the_negative_cases() {
    let r = run_suite(Suite::Asymptotics).unwrap();
    assert!(r.cases.iter().any(|c| c.id == "gamma_to_infinity/left_sigma_log/no_convergence" && c.pass));
    assert!(r.cases.iter().any(|c| c.id.starts_with("gamma_invariant/") && c.pass));
}
