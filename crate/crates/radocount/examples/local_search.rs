// Steepest single-flip descent at sizes far beyond exhaustive reach.
// Heuristic: the report says so, and every witness is re-counted from
// scratch before it is returned.

use radocount::counting::count_classes;
use radocount::search::{local_search, Direction, Objective, ObjectiveClass};
use radocount::theory::canonical_coloring;
use radocount::Equation;

fn main() {
    let eq = Equation::schur();
    let objective = Objective::new(eq, ObjectiveClass::Mono, Direction::Min);
    for n in [100usize, 200] {
        let rep = local_search(n, 2, &objective, 4, 42).unwrap();
        let recipe = canonical_coloring(&eq, n, None, Direction::Min).unwrap();
        let recipe_count = count_classes(&eq, &recipe).mono;
        println!(
            "n={n}: local optimum {} after {} evaluations (recipe coloring gives {})",
            rep.best_value, rep.evaluated, recipe_count
        );
        println!("   {}", rep.witnesses[0]);
    }
}
