//! The verify driver: recipe counts vs predictions across a doubling
//! ladder of n, with the fitted leading coefficient.

use radocount::search::SearchConfig;
use radocount::theory::{predicted_min, verify, VerifyMode};
use radocount::Equation;

fn main() {
    let n_list = [22usize, 44, 88, 176, 352];
    let config = SearchConfig { budget: 1 << 22, threads: 4 };
    for eq in [Equation::schur(), Equation::schur_like(2).unwrap()] {
        let rows = verify(&eq, &n_list, VerifyMode::Theorem, &config).unwrap();
        let coeff = predicted_min(&eq, 1).unwrap().coefficient.to_f64();
        println!("{eq}  (leading coefficient {coeff:.6})");
        println!("  {:>4} {:>9} {:>10} {:>7} {:>10}", "n", "recipe", "predicted", "gap", "exact-opt");
        for row in &rows {
            let opt = row
                .exhaustive_opt
                .map(|v| v.to_string())
                .unwrap_or_else(|| "-".into());
            println!(
                "  {:>4} {:>9} {:>10.1} {:>7.1} {:>10}",
                row.n,
                row.canonical_count,
                row.predicted.unwrap(),
                row.gap.unwrap(),
                opt
            );
        }
        println!("  fitted alpha = {:.8}", rows[0].alpha_fit.unwrap());
    }
}
