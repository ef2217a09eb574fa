//! Symmetry and uniqueness verdicts on concrete inputs.
//!
//! A verdict checks the hyperplane/antisymmetry hypotheses, classifies the
//! transverse growth against the spacing, and only then certifies the
//! asserted conclusion. The three possible outcomes are all shown here.
//!
//! Run with: cargo run -p stripharm --example symmetry_verdicts

use stripharm::mode::{Mode, ModeSum, TPoint, Trig};
use stripharm::pi::PiScalar;
use stripharm::rational::{rat, rat_int, Rational};
use stripharm::verdict::{symmetry_verdict, uniqueness_verdict, Verdict};

fn sin_exp(m: u32, k: Rational) -> Mode {
    Mode::trig_exp(PiScalar::one(), m, Trig::Sin, k.clone(), vec![k]).unwrap()
}

fn cos_exp(m: u32, k: Rational) -> Mode {
    Mode::trig_exp(PiScalar::one(), m, Trig::Cos, k.clone(), vec![k]).unwrap()
}

fn show(label: &str, verdict: &Verdict) {
    println!("{label}");
    println!("  statement: {}", verdict.theorem);
    println!(
        "  growth rate {} -> {}",
        verdict.growth.rate, verdict.growth.class
    );
    for check in &verdict.checks {
        match check.residual {
            Some(r) => println!("  [{}] {} (residual {r:.2e})", check.status, check.name),
            None => println!("  [{}] {}", check.status, check.name),
        }
    }
    println!("  conclusion: {}\n", verdict.conclusion);
}

fn main() {
    let spacing = TPoint::pi(1, 1);

    // confirmed: subcritical, odd, hypotheses hold
    let u = ModeSum::new(1, vec![sin_exp(0, rat(1, 2)), cos_exp(1, rat(1, 2))]).unwrap();
    let v = symmetry_verdict(&u, &TPoint::zero(), &spacing, 2).unwrap();
    show(&format!("u = {u}"), &v);

    // growth violated: the critical two-line function
    let critical = ModeSum::single(sin_exp(0, rat_int(1)));
    let v = symmetry_verdict(&critical, &TPoint::zero(), &spacing, 1).unwrap();
    show(&format!("u = {critical}"), &v);

    // precondition violated: an even input fails the antisymmetric pair
    let even = ModeSum::single(sin_exp(1, rat(1, 2)));
    let v = symmetry_verdict(&even, &TPoint::zero(), &spacing, 2).unwrap();
    show(&format!("u = {even}"), &v);

    // uniqueness on four hyperplanes, order 2: t sin t vanishes on all of
    // them yet is nonzero, sitting exactly on the growth boundary
    let t_sine = ModeSum::single(sin_exp(1, rat_int(1)));
    let v = uniqueness_verdict(&t_sine, &TPoint::zero(), &spacing, 2).unwrap();
    show(&format!("u = {t_sine} (4 hyperplanes)"), &v);
}
