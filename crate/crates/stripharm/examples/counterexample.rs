//! The two-line sharpness demonstration.
//!
//! `sin t * exp(y)` is harmonic on the plane strip, vanishes on the two
//! parallel lines `t = 0` and `t = pi`, and is not the zero function. Its
//! transverse growth sits exactly at the critical rate `pi / spacing`, which
//! is why the uniqueness statement does not apply: the growth bound is sharp.
//!
//! Run with: cargo run -p stripharm --example counterexample

use stripharm::mode::{Mode, ModeSum, TPoint, Trig};
use stripharm::pi::PiScalar;
use stripharm::rational::rat_int;
use stripharm::verdict::uniqueness_verdict;

fn main() {
    let u = ModeSum::single(
        Mode::trig_exp(PiScalar::one(), 0, Trig::Sin, rat_int(1), vec![rat_int(1)]).unwrap(),
    );
    println!("u(t, y) = {u}\n");

    println!("vanishing on the two lines:");
    for (label, point) in [("t = 0", TPoint::zero()), ("t = pi", TPoint::pi(1, 1))] {
        println!("  {label}: {:?}", u.vanishing_at(&point));
    }
    println!("\nbut u(pi/2, 0) = {}", u.eval(std::f64::consts::FRAC_PI_2, &[0.0]));

    let growth = u.growth(&TPoint::pi(1, 1));
    println!(
        "\ngrowth rate {} against spacing pi: {}",
        growth.rate, growth.class
    );

    let verdict = uniqueness_verdict(&u, &TPoint::zero(), &TPoint::pi(1, 1), 1).unwrap();
    println!("\nuniqueness verdict: {}", verdict.conclusion);
    for check in &verdict.checks {
        println!("  [{}] {}", check.status, check.name);
    }
    for note in &verdict.notes {
        println!("  note: {note}");
    }
}
