use roughmat::{CheckResult, Status, Subset, SuiteReport, Universe, Violation, Witness};
use serde_json::{json, Value};

pub fn names(universe: &Universe, s: &Subset) -> Vec<String> {
    s.iter().map(|e| universe.name(e)).collect()
}

fn braced(universe: &Universe, s: &Subset) -> String {
    format!("{{{}}}", names(universe, s).join(","))
}

/// Witness with element names in place of indices.
pub fn witness(universe: &Universe, v: &Violation) -> String {
    match &v.witness {
        Witness::None => String::new(),
        Witness::Set(s) => braced(universe, s),
        Witness::Pair(a, b) => format!("({}, {})", braced(universe, a), braced(universe, b)),
        Witness::Exchange {
            first,
            second,
            element,
        } => format!(
            "({}, {}, {})",
            braced(universe, first),
            braced(universe, second),
            universe.name(*element)
        ),
        Witness::Rank {
            set,
            expected,
            found,
        } => format!(
            "{}: expected rank {expected}, found {found}",
            braced(universe, set)
        ),
        Witness::Count { expected, found } => format!("expected {expected}, found {found}"),
    }
}

fn row(universe: &Universe, r: &CheckResult) -> String {
    let mut line = format!(
        "{:<8} {:<26} {}",
        r.status.name(),
        r.check.id(),
        r.subject.describe(universe)
    );
    if let Some(v) = &r.violation {
        line.push_str(format!("  witness {}", witness(universe, v)).trim_end());
    }
    if let Some(d) = &r.detail {
        line.push_str(&format!("  ({d})"));
    }
    line.push('\n');
    line
}

fn tally(report: &SuiteReport) -> [usize; 3] {
    let mut counts = [0; 3];
    for r in &report.results {
        counts[match r.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Skipped => 2,
        }] += 1;
    }
    counts
}

pub fn report_text(universe: &Universe, report: &SuiteReport) -> String {
    let mut out = format!("instance {}\n", report.digest);
    for r in &report.results {
        out.push_str(&row(universe, r));
    }
    let [pass, fail, skipped] = tally(report);
    out.push_str(&format!(
        "summary: {pass} passed, {fail} failed, {skipped} skipped\n"
    ));
    out
}

pub fn report_json(universe: &Universe, report: &SuiteReport) -> Value {
    let results: Vec<Value> = report
        .results
        .iter()
        .map(|r| {
            json!({
                "check": r.check.id(),
                "subject": r.subject.describe(universe),
                "status": r.status.name(),
                "witness": r.violation.as_ref().map(|v| json!({
                    "text": witness(universe, v),
                    "sets": v.witness.sets().iter().map(|s| names(universe, s)).collect::<Vec<_>>(),
                })),
                "detail": r.detail,
            })
        })
        .collect();
    let [pass, fail, skipped] = tally(report);
    json!({
        "digest": report.digest,
        "results": results,
        "summary": { "passed": pass, "failed": fail, "skipped": skipped },
    })
}
