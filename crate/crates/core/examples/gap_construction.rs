//! Checks the eight-graph gap family for a given ε (default 3).

use fallcolor::theorems::theorem3_verify;
use fallcolor::SearchLimits;

fn main() -> fallcolor::Result<()> {
    let eps = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let limits = SearchLimits { node_budget: 0, time_budget: 30.0 };
    let report = theorem3_verify(eps, &limits)?;
    for e in &report.entries {
        let show = |q: &Option<fallcolor::theorems::gap::Quantity>| {
            q.as_ref().map_or("-".to_owned(), |q| format!("{}={}", q.name, q.value))
        };
        println!(
            "step {} {:<26} {:<18} {:<18} gap={:<4} {:?}{}",
            e.step,
            e.graph.name.clone().unwrap_or_default(),
            show(&e.param_low),
            show(&e.param_high),
            e.gap.map_or("-".into(), |g| g.to_string()),
            e.status,
            if e.known_refutation { " (expected)" } else { "" }
        );
    }
    Ok(())
}
