//! Builds one interpolant piece and samples it at the subnodes.

use interpbound::interpolant::cubic_coefficients;
use interpbound::InterpolantPiece;

fn main() -> interpbound::Result<()> {
    let (p1, p2, d1, d2) = (0.0, 0.1, 1.0, 2.0);
    let q = cubic_coefficients(p1, p2, d1, d2)?;
    println!(
        "q(t) = {:+.3} t^3 {:+.3} t^2 {:+.3} t {:+.3}",
        q.a3, q.a2, q.a1, q.a0
    );
    println!(
        "q(0) = {}, q(1) = {}, q'(0) = {}, q'(1) = {}",
        q.eval(0.0),
        q.eval(1.0),
        q.derivative(0.0),
        q.derivative(1.0)
    );

    let piece = InterpolantPiece::from_values(0, p1, p2, d1, d2)?;
    println!(
        "v(t) = {:+.3} t^2 {:+.3} t {:+.3}",
        piece.c2, piece.c1, piece.c0
    );
    for r in [2, 4, 8] {
        let v: Vec<String> = piece.sample(r)?.iter().map(|v| format!("{v:.4}")).collect();
        println!("r = {r}: {}", v.join(" "));
    }
    Ok(())
}
