//! Count solution classes of a hand-written coloring under each equation
//! family.

use radocount::counting::count_classes;
use radocount::{Coloring, Equation};

fn main() {
    let c = Coloring::parse_runlength("R4 B6 R1").unwrap();
    println!("coloring {c} over [1, {}]", c.n());
    for eq in [
        Equation::schur(),
        Equation::schur_like(2).unwrap(),
        Equation::two_coef(3, 2).unwrap(),
        Equation::four_var(),
    ] {
        let k = count_classes(&eq, &c);
        println!(
            "  {eq:<18} mono={:<3} nonmono={:<3} total={}",
            k.mono,
            k.nonmono,
            k.total()
        );
    }

    // with a third color, triple equations can have rainbow solutions
    let c3 = Coloring::parse_runlength("R1 B1 R1 B1 G1 B1 G1 B1 G1 B1").unwrap();
    let k = count_classes(&Equation::schur(), &c3);
    println!("coloring {c3}: rainbow={}", k.rainbow);
}
