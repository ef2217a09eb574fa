//! The linear-algebra oracle for hyperplane vanishing.
//!
//! A template of modes with undetermined coefficients turns `u = 0` on
//! equidistant hyperplanes into a linear system. Subcritical templates are
//! pinned to the trivial solution on 2N points; adding one critically
//! growing mode opens a null-space direction, which is exactly the
//! mechanism behind the two-line counterexample.
//!
//! Run with: cargo run -p stripharm --example uniqueness_nullspace

use stripharm::mode::{Mode, ModeSum, TPoint, Trig};
use stripharm::nullspace::{nullspace_member, vanishing_nullspace, Constraint, NullspaceBasis};
use stripharm::pi::PiScalar;
use stripharm::rational::{rat, rat_int, Rational};

fn trig_mode(m: u32, trig: Trig, k: Rational) -> Mode {
    Mode::trig_exp(PiScalar::one(), m, trig, k.clone(), vec![k]).unwrap()
}

fn main() {
    // order-2 template at the subcritical frequency 1/2
    let template = ModeSum::new(
        1,
        vec![
            trig_mode(0, Trig::Sin, rat(1, 2)),
            trig_mode(1, Trig::Sin, rat(1, 2)),
            trig_mode(0, Trig::Cos, rat(1, 2)),
            trig_mode(1, Trig::Cos, rat(1, 2)),
        ],
    )
    .unwrap();
    let points: Vec<Constraint> = (0..4)
        .map(|j| Constraint::Point(TPoint::pi(j, 1)))
        .collect();
    println!("template: {template}");
    println!("constraints: vanishing at 0, pi, 2pi, 3pi\n");
    let pinned = vanishing_nullspace(&template, &points);
    println!("null space dimension: {} (subcritical, pinned)\n", pinned.dim);

    // inject the critical sine
    let mut modes = template.modes().to_vec();
    modes.push(trig_mode(0, Trig::Sin, rat_int(1)));
    let widened = ModeSum::new(1, modes).unwrap();
    let open = vanishing_nullspace(&widened, &points);
    println!(
        "after adding sin(t) exp(y) (critical rate): dimension {}",
        open.dim
    );
    if let NullspaceBasis::Exact(basis) = &open.basis {
        for v in basis {
            let member = nullspace_member(&widened, v);
            println!("  member: {member}");
            for c in &points {
                let Constraint::Point(p) = c else { unreachable!() };
                println!("    vanishing at {p}: {:?}", member.vanishing_at(p));
            }
        }
    }

    // antisymmetry pairs instead of vanishing points: the hypotheses of the
    // oddness statement select exactly the odd part of the template
    println!("\nantisymmetry pairs u(j pi) = -u(-j pi) for j = 0, 1:");
    let pairs = vec![
        Constraint::Pair(TPoint::zero(), TPoint::zero()),
        Constraint::Pair(TPoint::pi(1, 1), TPoint::pi(-1, 1)),
    ];
    let odd = vanishing_nullspace(&template, &pairs);
    println!("null space dimension: {}", odd.dim);
    if let NullspaceBasis::Exact(basis) = &odd.basis {
        for v in basis {
            println!("  member: {}", nullspace_member(&template, v));
        }
    }
}
