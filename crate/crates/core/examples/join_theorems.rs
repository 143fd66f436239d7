//! Fall colorings of joins: compose two part colorings, split the result
//! back, and compare parameters of a join with the sum over its parts.

use fallcolor::graph::{generate, join, FamilySpec};
use fallcolor::solvers::find_fall_coloring;
use fallcolor::theorems::{compose_join_fall, restrict_fall, verify_join_additivity};
use fallcolor::{classify, Parameter, SearchLimits};

fn main() -> fallcolor::Result<()> {
    let lim = SearchLimits::unlimited();
    let c4 = generate(&FamilySpec::cycle(4))?;
    let c6 = generate(&FamilySpec::cycle(6))?;
    let f4 = find_fall_coloring(&c4, 2, &lim)?.expect("C4 has a fall 2-coloring");
    let f6 = find_fall_coloring(&c6, 3, &lim)?.expect("C6 has a fall 3-coloring");

    let joint = compose_join_fall(&[(&c4, &f4), (&c6, &f6)])?;
    let g = join(&[&c4, &c6])?;
    println!("composed {:?}, fall on join: {}", joint.colors(), classify(&g, &joint)?.fall);
    for (i, part) in restrict_fall(&[&c4, &c6], &joint)?.iter().enumerate() {
        println!("part {i}: {:?}", part.colors());
    }

    for p in Parameter::ALL {
        let a = verify_join_additivity(&[&c4, &c6], p, &lim)?;
        println!("{:<14} join={:<10} sum={:<10} holds={}", p.name(), a.lhs, a.rhs, a.holds);
    }
    Ok(())
}
