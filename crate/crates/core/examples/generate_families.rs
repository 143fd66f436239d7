//! Builds each named family and prints its size and degree range.

use fallcolor::graph::{generate, FamilySpec};

fn main() -> fallcolor::Result<()> {
    let specs = [
        FamilySpec::path(6),
        FamilySpec::cycle(7),
        FamilySpec::complete(5),
        FamilySpec::complete_bipartite(3, 4),
        FamilySpec::bipartite_minus_matching(6),
        FamilySpec::t_tree(5),
        FamilySpec::pendant_path(3),
        FamilySpec::caterpillar_g6(3),
    ];
    for spec in &specs {
        let g = generate(spec)?;
        let d = g.degree_stats()?;
        println!(
            "{:<10} n={:<3} m={:<3} degrees {}..={}",
            g.label(),
            d.n,
            d.m,
            d.min_degree,
            d.max_degree
        );
    }
    Ok(())
}
