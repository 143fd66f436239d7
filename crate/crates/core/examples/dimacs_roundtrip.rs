//! Writes a graph as DIMACS, reads it back and writes a witness coloring
//! in the JSON format `check` accepts.

use fallcolor::expr::parse_expression;
use fallcolor::graph::dimacs;
use fallcolor::solvers::find_fall_coloring;
use fallcolor::SearchLimits;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse_expression("join(path(3),cycle(4))")?;
    let text = dimacs::to_string(&g);
    print!("{text}");
    let back = dimacs::read_str(&text)?;
    assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    let fall = find_fall_coloring(&g, 4, &SearchLimits::unlimited())?.expect("P3 v C4 is fall 4-colorable");
    println!("{}", serde_json::to_string(&fall)?);
    Ok(())
}
