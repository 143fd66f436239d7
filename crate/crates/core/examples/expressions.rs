//! Parses graph expressions from the command line, or a few samples.

use fallcolor::expr::parse_expression;

fn main() {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = [
            "prod(cycle(4),cycle(5))",
            "join(cycle(4), cycle(6))",
            "ttree(6)",
            "join(kbip(2,2),complete(3),path(2))",
            "prod(path(3)",
        ]
        .map(String::from)
        .to_vec();
    }
    for text in &inputs {
        match parse_expression(text) {
            Ok(g) => println!("{text:<40} n={} m={} name={}", g.n(), g.m(), g.label()),
            Err(e) => println!("{text:<40} {e}"),
        }
    }
}
