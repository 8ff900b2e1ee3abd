//! Optimum at a fixed blue count: enumerate the distinct cell multisets
//! with exactly mu_B blue cells and compare against the fixed-mu_B block
//! recipes, min and max.

use radocount::counting::count_classes;
use radocount::search::{exhaustive, Direction, Objective, ObjectiveClass, SearchConfig};
use radocount::theory::canonical_coloring;
use radocount::Equation;

fn main() {
    let eq = Equation::schur();
    let n = 16usize;
    let config = SearchConfig::default();
    println!("n={n}   exhaustive      recipe");
    for mu in 8..=n as u64 {
        let min_obj = Objective::new(eq, ObjectiveClass::Mono, Direction::Min);
        let max_obj = Objective::new(eq, ObjectiveClass::Mono, Direction::Max);
        let lo = exhaustive(n, 2, &min_obj, Some(&[n as u64 - mu, mu]), &config).unwrap();
        let hi = exhaustive(n, 2, &max_obj, Some(&[n as u64 - mu, mu]), &config).unwrap();
        let lo_recipe = canonical_coloring(&eq, n, Some(mu as usize), Direction::Min).unwrap();
        let hi_recipe = canonical_coloring(&eq, n, Some(mu as usize), Direction::Max).unwrap();
        println!(
            "mu_B={mu:<2} min={:<3} max={:<3} min={:<3} ({})  max={:<3} ({})",
            lo.best_value,
            hi.best_value,
            count_classes(&eq, &lo_recipe).mono,
            lo_recipe,
            count_classes(&eq, &hi_recipe).mono,
            hi_recipe,
        );
    }
}
