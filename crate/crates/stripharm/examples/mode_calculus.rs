//! The exact calculus on mode sums: the strip Laplacian, certified
//! polyharmonic order, shifts, rescaling, and growth classification.
//!
//! Run with: cargo run -p stripharm --example mode_calculus

use stripharm::mode::{Mode, ModeSum, TPoint, Trig};
use stripharm::multipoly::MultiPoly;
use stripharm::pi::PiScalar;
use stripharm::rational::{rat, rat_int};

fn main() {
    let u = ModeSum::single(
        Mode::trig_exp(PiScalar::one(), 3, Trig::Sin, rat_int(1), vec![rat_int(1)]).unwrap(),
    );
    println!("u = {u}\n");

    println!("iterating the strip Laplacian:");
    let mut current = u.clone();
    let mut n = 0;
    while !current.is_zero() {
        println!("  L^{n} u = {current}");
        current = current.apply_laplacian().unwrap();
        n += 1;
    }
    println!("  L^{n} u = 0");
    println!("certified order: {}\n", u.polyharmonic_order().unwrap());

    println!("exact shift by pi (coefficients live in the pi ring):");
    println!("  u(t + pi, y) = {}\n", u.shifted(&TPoint::pi(1, 1), false));

    println!("shift by 1 falls back to a numeric overlay:");
    let shifted = u.shifted(&TPoint::value(1.0), false);
    println!("  exact: {}, modes: {}\n", shifted.is_exact(), shifted.modes().len());

    let two = ModeSum::single(
        Mode::trig_exp(PiScalar::one(), 0, Trig::Sin, rat_int(2), vec![rat_int(2)]).unwrap(),
    );
    println!("rescaling sin(2t) exp(2y) to hyperplane spacing pi (from pi/2):");
    println!(
        "  normalized: {}\n",
        two.normalized(&TPoint::zero(), &TPoint::pi(1, 2)).unwrap()
    );

    println!("growth classification against spacing pi:");
    for sum in [
        ModeSum::single(
            Mode::trig_exp(PiScalar::one(), 0, Trig::Sin, rat(1, 2), vec![rat(1, 2)]).unwrap(),
        ),
        ModeSum::single(
            Mode::trig_exp(PiScalar::one(), 0, Trig::Sin, rat_int(1), vec![rat_int(1)]).unwrap(),
        ),
        ModeSum::single(Mode::poly_harm(PiScalar::one(), 3, MultiPoly::var(1, 0)).unwrap()),
    ] {
        let g = sum.growth(&TPoint::pi(1, 1));
        println!("  {sum}: rate {} -> {}", g.rate, g.class);
    }
}
