//! The deflation chain of `t^3 sin t * exp(y)`, two ways.
//!
//! The direct route alternates even-part extraction with division by `t`;
//! every member stays an exact mode sum (one of them picks up a factor of
//! pi). The closed form expresses each member as a weighted sum of shifted
//! copies of the first even part, divided by `t * prod (i^2 pi^2 - t^2)`,
//! with one derivative quotient at the removable denominator zeros. The two
//! routes are compared pointwise on a grid.
//!
//! Run with: cargo run -p stripharm --example deflation_chain

use stripharm::chain::{h_chain_direct, HChainEvaluator};
use stripharm::grid::{Axis, GridSpec};
use stripharm::mode::{Mode, ModeSum, Trig};
use stripharm::pi::PiScalar;
use stripharm::rational::rat_int;

fn main() {
    let u = ModeSum::single(
        Mode::trig_exp(PiScalar::one(), 3, Trig::Sin, rat_int(1), vec![rat_int(1)]).unwrap(),
    );
    let order = 4;
    println!("u(t, y) = {u}, declared order {order}\n");

    let chain = h_chain_direct(&u, order).unwrap();
    println!("direct chain members:");
    for level in &chain.levels {
        match level.h.as_mode_sum() {
            Some(ms) => println!("  member {}: {ms}", level.position),
            None => println!("  member {}: (numeric ratio evaluator)", level.position),
        }
        println!(
            "    oddness residual {:.2e}, vanishing residuals {:?}",
            level.oddness.residual,
            level
                .vanishing
                .iter()
                .map(|(i, r)| format!("{i}pi: {r:.1e}"))
                .collect::<Vec<_>>()
        );
    }

    let closed = HChainEvaluator::new(&u, order).unwrap();
    let grid = GridSpec::new(
        Axis::new(-3.1, 3.1, 0.05).unwrap(),
        vec![Axis::new(-1.0, 1.0, 0.25).unwrap()],
        closed.singular_points(order - 1),
        0.05,
    )
    .unwrap();

    println!("\nclosed form vs direct (relative residual over the grid):");
    for j in 1..order {
        let direct = chain.levels.get(j as usize).map(|l| l.h.clone());
        let mut worst = 0.0f64;
        let mut scale = 0.0f64;
        for t in grid.t_values() {
            for y in grid.y_points() {
                let a = direct.as_ref().map_or(0.0, |h| h.eval(t, &y));
                let b = closed.eval(j, t, &y).unwrap();
                worst = worst.max((a - b).abs());
                scale = scale.max(a.abs()).max(closed.even_part().magnitude(t, &y));
            }
        }
        println!("  member {}: {:.3e}", j + 1, worst / scale);
    }

    println!("\nremovable singularities (one derivative quotient):");
    for t in [0.0, std::f64::consts::PI] {
        println!(
            "  member 2 at t = {t:.5}: {:.6e}",
            closed.eval(1, t, &[0.3]).unwrap()
        );
    }
}
