//! The closed-form recipe colorings, and how their exact counts track the
//! predicted leading terms.

use radocount::counting::count_classes;
use radocount::search::Direction;
use radocount::theory::{canonical_coloring, predicted_min};
use radocount::Equation;

fn main() {
    for eq in [
        Equation::schur(),
        Equation::schur_like(2).unwrap(),
        Equation::schur_like(3).unwrap(),
    ] {
        println!("{eq}");
        for n in [44usize, 88, 176] {
            let c = canonical_coloring(&eq, n, None, Direction::Min).unwrap();
            let mono = count_classes(&eq, &c).mono;
            let predicted = predicted_min(&eq, n).unwrap().value.to_f64();
            println!("  n={n:<3} {c:<14} mono={mono:<5} predicted {predicted:.1}");
        }
    }

    // irrational block proportions: boundaries are placed by exact
    // arithmetic in Q(sqrt 3), rounded only at the final cell grid
    let eq = Equation::four_var();
    for n in [97usize, 194] {
        let c = canonical_coloring(&eq, n, None, Direction::Min).unwrap();
        let mono = count_classes(&eq, &c).mono;
        let predicted = predicted_min(&eq, n).unwrap().value.to_f64();
        println!("{eq}  n={n} {c} mono={mono} predicted {predicted:.1}");
    }
}
