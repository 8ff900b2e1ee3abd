// The two-coefficient family ax+by=az has conjectured colorings but no
// count formula: measure them against exhaustive minima where the space
// is small enough.

use radocount::counting::count_classes;
use radocount::search::{exhaustive, Direction, Objective, ObjectiveClass, SearchConfig};
use radocount::theory::canonical_coloring;
use radocount::Equation;

fn main() {
    for (a, b) in [(3u32, 2u32), (2, 3)] {
        let eq = Equation::two_coef(a, b).unwrap();
        println!("{eq}");
        let objective = Objective::new(eq, ObjectiveClass::Mono, Direction::Min);
        for n in [12usize, 18, 24] {
            let recipe = canonical_coloring(&eq, n, None, Direction::Min).unwrap();
            let recipe_count = count_classes(&eq, &recipe).mono;
            let opt = exhaustive(n, 2, &objective, None, &SearchConfig::default())
                .unwrap()
                .best_value;
            println!("  n={n:<2} recipe {recipe} -> {recipe_count} (exhaustive min {opt})");
        }
    }
}
