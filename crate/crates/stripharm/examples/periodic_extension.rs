//! Periodic extension from oddness at two points.
//!
//! Oddness at `t1 < t2` forces `2(t2 - t1)`-periodicity, so the core window
//! tiles the axis. The verifier samples periodicity, core agreement, and
//! the seam jumps of the two one-sided continuations; a deliberately
//! corrupted tile shows what a defect looks like.
//!
//! Run with: cargo run -p stripharm --example periodic_extension

use stripharm::extension::{build_extension, verify_extension};
use stripharm::grid::{Axis, GridSpec};
use stripharm::mode::{Mode, ModeSum, TPoint, Trig};
use stripharm::multipoly::MultiPoly;
use stripharm::pi::PiScalar;
use stripharm::rational::{rat, rat_int};

fn main() {
    let u = ModeSum::new(
        1,
        vec![
            Mode::trig_exp(PiScalar::one(), 0, Trig::Sin, rat_int(1), vec![rat_int(1)]).unwrap(),
            Mode::trig_exp(
                PiScalar::from_rational(rat(1, 3)),
                0,
                Trig::Sin,
                rat_int(2),
                vec![rat_int(2)],
            )
            .unwrap(),
        ],
    )
    .unwrap();
    println!("u(t, y) = {u}");
    println!("odd at 0 and pi, so the extension has period 2 pi\n");

    let e = build_extension(&u, &TPoint::zero(), &TPoint::pi(1, 1), (-6.0, 9.0)).unwrap();
    let mut grid = GridSpec::default_for(1);
    grid.t = Axis::new(-7.0, 7.0, 0.35).unwrap();
    let report = verify_extension(&e, &grid);
    println!("periodicity residual: {:.3e}", report.periodicity_residual);
    println!("core agreement:       {:.3e}", report.core_agreement);
    println!("seam mismatch:        {:.3e}", report.seam_jump_rel);

    println!("\nevaluation far outside the declared domain:");
    for t in [-50.0, 123.456] {
        println!(
            "  u~({t}, 0.5) = {:.12}  (tile {})",
            e.eval(t, &[0.5]),
            e.tile_index(t)
        );
    }

    println!("\nwith tile 1 rescaled by 3/2 (fault injection):");
    let corrupted = build_extension(&u, &TPoint::zero(), &TPoint::pi(1, 1), (-6.0, 9.0))
        .unwrap()
        .corrupt_tile(1, rat(3, 2));
    let report = verify_extension(&corrupted, &grid);
    println!("periodicity residual: {:.3e}", report.periodicity_residual);
    println!("seam mismatch:        {:.3e}", report.seam_jump_rel);
    let worst = report
        .seams
        .iter()
        .max_by(|a, b| a.jump_rel.total_cmp(&b.jump_rel))
        .unwrap();
    println!(
        "worst seam row: t = {:.4}, derivative order {}, jump {:.3e}",
        worst.seam_t, worst.order, worst.jump
    );

    println!("\ninputs that are not odd at both points are rejected:");
    let ty = ModeSum::single(Mode::poly_harm(PiScalar::one(), 1, MultiPoly::var(1, 0)).unwrap());
    match build_extension(&ty, &TPoint::zero(), &TPoint::value(1.0), (-10.0, 10.0)) {
        Err(e) => println!("  t*y with t2 = 1: {e}"),
        Ok(_) => unreachable!("t*y is odd at 0 only"),
    }
}
