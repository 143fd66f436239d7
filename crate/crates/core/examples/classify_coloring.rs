//! Classifies a few hand-written colorings of `C6` and `P4`.

use fallcolor::graph::{generate, FamilySpec};
use fallcolor::{classify, Coloring};

fn main() -> fallcolor::Result<()> {
    let c6 = generate(&FamilySpec::cycle(6))?;
    let p4 = generate(&FamilySpec::path(4))?;
    let cases = [
        (&c6, vec![1, 2, 3, 1, 2, 3]),
        (&c6, vec![1, 2, 1, 2, 1, 2]),
        (&c6, vec![1, 2, 1, 2, 1, 3]),
        (&p4, vec![2, 1, 3, 1]),
        (&p4, vec![1, 2, 3, 1]),
    ];
    for (g, colors) in cases {
        let c = Coloring::from_colors(colors)?;
        let cls = classify(g, &c)?;
        println!(
            "{} {:?}: proper={} fall={} b={} grundy={} partial_grundy={} complete={}",
            g.label(),
            c.colors(),
            cls.proper,
            cls.fall,
            cls.b_coloring,
            cls.grundy,
            cls.partial_grundy,
            cls.complete
        );
    }
    Ok(())
}
