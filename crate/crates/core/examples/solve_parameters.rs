//! Solves all eight parameters for a graph given as an expression
//! (default `prod(cycle(4),cycle(5))`) and prints the JSON report.

use std::collections::BTreeSet;

use fallcolor::expr::parse_expression;
use fallcolor::solvers::parameter_report;
use fallcolor::{Parameter, SearchLimits};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "prod(cycle(4),cycle(5))".into());
    let g = parse_expression(&text)?;
    let all: BTreeSet<Parameter> = Parameter::ALL.into_iter().collect();
    let report = parameter_report(&g, &SearchLimits { node_budget: 0, time_budget: 30.0 }, &all)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    for v in report.chain_violations() {
        eprintln!("chain violation: {v}");
    }
    Ok(())
}
