//! Update counts of the coarse and fine solves; the ratio tends to `r^2`.

use interpbound::harness::CostCounters;

fn main() {
    println!("     P   r  coarse       fine         ratio      r^2");
    for p in [10u64, 100, 1_000, 100_000] {
        for r in [2u64, 4, 8] {
            let (coarse, fine) = CostCounters::predicted(p, r, 5);
            println!(
                "{p:>6}  {r}  {coarse:<11}  {fine:<11}  {:<9.5}  {}",
                fine as f64 / coarse as f64,
                r * r
            );
        }
    }
}
