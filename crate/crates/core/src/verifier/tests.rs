use std::collections::HashSet;

use super::*;

#[test]
fn ids_are_unique_and_plenty() {
    let all = list_claims(None);
    assert!(all.len() >= 25, "{}", all.len());
    let ids: HashSet<_> = all.iter().map(|c| c.id).collect();
    assert_eq!(ids.len(), all.len());
    let mut sorted: Vec<_> = all.iter().map(|c| c.id).collect();
    sorted.sort();
    assert_eq!(sorted, all.iter().map(|c| c.id).collect::<Vec<_>>());
}

#[test]
fn every_anchor_entry_has_a_claim() {
    let all = list_claims(None);
    for (entry, prefixes) in ANCHOR_MAP {
        for p in *prefixes {
            assert!(all.iter().any(|c| c.id.starts_with(p)), "{entry}: nothing under {p}");
        }
    }
    // And every claim belongs to some entry.
    for c in &all {
        assert!(ANCHOR_MAP.iter().any(|(_, ps)| ps.iter().any(|p| c.id.starts_with(p))), "{}", c.id);
    }
}

#[test]
fn filters() {
    assert_eq!(list_claims(Some("rem3-7")).len(), 4);
    assert!(list_claims(Some("zzz")).is_empty());
    assert!(list_claims(Some("prop3")).iter().all(|c| c.id.starts_with("prop3")));
}

#[test]
fn comparators() {
    assert!(Comparator::Exact.matches(" 10 ", "10"));
    assert!(!Comparator::Exact.matches("10", "9"));
    assert!(Comparator::SetEquality.matches("a; b", "b;a"));
    assert!(!Comparator::SetEquality.matches("a; b", "a"));
    const V: &[&str] = &["x", "y"];
    assert!(Comparator::UpToScalar(V).matches("(x+y)^2", "2*x^2 + 4*x*y + 2*y^2"));
    assert!(!Comparator::UpToScalar(V).matches("x", "0"));
    assert!(!Comparator::Polynomial(V).matches("(x+y)^2", "2*x^2 + 4*x*y + 2*y^2"));
    assert!(Comparator::Polynomial(V).matches("x*y", "y*x"));
    assert!(!Comparator::Polynomial(V).matches("x*y", "not a polynomial"));
}

#[test]
fn summaries_and_rendering() {
    let empty = Report::new(Vec::new());
    let v: serde_json::Value = serde_json::from_str(&render(&empty, Format::Json)).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 0);
    assert_eq!(v["summary"]["pass"], 0);
    assert_eq!(empty.exit_code(), 0);

    let mk = |id: &str, status| ClaimResult {
        id: id.into(),
        status,
        paper_anchor: "a".into(),
        expected: "1".into(),
        computed: "1".into(),
        runtime_ms: 0,
    };
    let one = Report::new(vec![mk("x", Status::Pass)]);
    assert_eq!(one.summary, Summary { pass: 1, fail: 0, error: 0 });
    let mixed =
        Report::new(vec![mk("a", Status::Pass), mk("b", Status::Fail), mk("c", Status::Error), mk("d", Status::Fail)]);
    assert_eq!(mixed.summary, Summary { pass: 1, fail: 2, error: 1 });
    assert_eq!(mixed.exit_code(), 2);
    assert_eq!(Report::new(vec![mk("b", Status::Fail)]).exit_code(), 1);
    let md = render(&mixed, Format::Markdown);
    assert_eq!(md.lines().filter(|l| l.starts_with("| `")).count(), 4);
    assert_eq!("xml".parse::<Format>(), Err(VerifyError::UnknownFormat("xml".into())));
    assert_eq!(run(None, 0).unwrap_err(), VerifyError::ZeroJobs);
}

#[test]
fn prop3_passes() {
    let r = run(Some("prop3"), 2).unwrap();
    assert_eq!(r.results.len(), 9);
    assert!(r.results.iter().all(|x| x.status == Status::Pass), "{:#?}", r.results);
}

#[test]
fn corrupted_quartic_fails() {
    let r = run_with(&Context::corrupted(), Some("prop3"), 2).unwrap();
    assert!(r.summary.fail + r.summary.error > 0);
    assert_ne!(r.exit_code(), 0);
    let r = run_with(&Context::corrupted(), Some("eq3-1.pencil"), 1).unwrap();
    assert_eq!(r.summary.fail, 1);
}

#[test]
fn panics_become_errors() {
    let claim = ClaimSpec {
        id: "x.panic",
        description: "",
        anchor: Anchor { section: "", quote: "" },
        expected: "",
        comparator: Comparator::Exact,
        runner: |_| panic!("boom"),
    };
    let r = run_claim(&claim, &Context::default());
    assert_eq!(r.status, Status::Error);
    assert!(r.computed.contains("boom"));
}
