//! The annihilation test behind the Fourier route.
//!
//! For a strip function odd at 0 and +-pi, every sine coefficient `a_k(y)`
//! must be annihilated by `(Delta_y - k^2)^N`. The check computes `a_k`
//! symbolically and applies the operator exactly, so a failure comes with
//! the surviving terms. `t * y` is the standard function that fails: it is
//! odd at 0 but does not vanish at the period ends.
//!
//! Run with: cargo run -p stripharm --example helmholtz_check

use stripharm::expsum::{ExpPolySum, KernelVerdict};
use stripharm::fourier::helmholtz_annihilation_check;
use stripharm::mode::{Mode, ModeSum, Trig};
use stripharm::multipoly::MultiPoly;
use stripharm::pi::PiScalar;
use stripharm::rational::{rat, rat_int};

fn main() {
    // odd at 0 and +-pi: an integer sine sum in two transverse dimensions,
    // one mode on an axis direction and one on a pythagorean direction
    let h = ModeSum::new(
        2,
        vec![
            Mode::trig_exp(
                PiScalar::from_int(2),
                0,
                Trig::Sin,
                rat_int(1),
                vec![rat_int(1), rat_int(0)],
            )
            .unwrap(),
            Mode::trig_exp(
                PiScalar::from_int(-1),
                0,
                Trig::Sin,
                rat_int(5),
                vec![rat_int(3), rat_int(4)],
            )
            .unwrap(),
        ],
    )
    .unwrap();
    println!("h(t, y) = {h}\n");
    for k in 1..=5u32 {
        let report = helmholtz_annihilation_check(&h, k, 1).unwrap();
        println!(
            "  k = {k}: a_k = {} -> annihilated: {}",
            report.coefficient, report.pass
        );
    }

    println!("\nthe failing case h(t, y) = t*y:");
    let ty = ModeSum::single(
        Mode::poly_harm(PiScalar::one(), 1, MultiPoly::var(1, 0)).unwrap(),
    );
    let report = helmholtz_annihilation_check(&ty, 1, 1).unwrap();
    println!("  a_1(y) = {}", report.coefficient);
    println!("  annihilated: {}", report.pass);
    println!("  surviving terms: {}", report.surviving);

    println!("\nthe kernel-plus-growth decision on transverse sums:");
    let mut zero = ExpPolySum::zero(1);
    println!("  f = 0: {:?}", zero.kernel_decide(&rat_int(1), 1).unwrap());
    zero.add_exponential(&PiScalar::one(), vec![rat_int(1)]);
    println!(
        "  f = exp(y): {:?}",
        zero.kernel_decide(&rat_int(1), 1).unwrap()
    );
    let mut half = ExpPolySum::zero(1);
    half.add_exponential(&PiScalar::one(), vec![rat(1, 2)]);
    match half.kernel_decide(&rat_int(1), 1) {
        Err(e) => println!("  f = exp(y/2): {e}"),
        Ok(KernelVerdict::IdenticallyZero | KernelVerdict::GrowthViolated { .. }) => {
            unreachable!("exp(y/2) is not in the kernel")
        }
    }
}
