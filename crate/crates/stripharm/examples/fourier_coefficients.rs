//! Sine coefficients of strip functions: exact closed form vs quadrature.
//!
//! The classic case `h(t, y) = t * y` has `a_k(y) = (-1)^(k+1) (2/k) y` and
//! illustrates why vanishing at the period ends matters: these coefficients
//! do not satisfy the modified Helmholtz equation (see the helmholtz_check
//! example). The closed form returns exact pi-ring values; the 8x64-panel
//! quadrature agrees to ~1e-10.
//!
//! Run with: cargo run -p stripharm --example fourier_coefficients

use stripharm::fourier::{fourier_closed_form, fourier_quadrature};
use stripharm::mode::{Mode, ModeSum, Trig};
use stripharm::multipoly::MultiPoly;
use stripharm::pi::PiScalar;
use stripharm::rational::rat_int;

fn main() {
    let ty = ModeSum::single(
        Mode::poly_harm(PiScalar::one(), 1, MultiPoly::var(1, 0)).unwrap(),
    );
    println!("h(t, y) = {ty}\n");
    println!("exact sine coefficients:");
    for k in 1..=6u32 {
        println!("  a_{k}(y) = {}", fourier_closed_form(&ty, k).unwrap());
    }

    println!("\nclosed form vs quadrature at y = 0.7:");
    for k in 1..=6u32 {
        let closed = fourier_closed_form(&ty, k).unwrap().eval(&[0.7]);
        let quad = fourier_quadrature(&ty, k, &[0.7]);
        println!("  k = {k}: {closed:.15} vs {quad:.15} (diff {:.2e})", (closed - quad).abs());
    }

    // a case whose exact coefficient keeps powers of pi
    let cubic = ModeSum::single(
        Mode::poly_harm(PiScalar::one(), 3, MultiPoly::var(1, 0)).unwrap(),
    );
    println!("\nh(t, y) = {cubic}:");
    println!("  a_1(y) = {}", fourier_closed_form(&cubic, 1).unwrap());

    // orthogonality: a pure sine mode hits exactly one coefficient
    let sine = ModeSum::single(
        Mode::trig_exp(PiScalar::one(), 0, Trig::Sin, rat_int(2), vec![rat_int(2)]).unwrap(),
    );
    println!("\nh(t, y) = {sine}:");
    for k in 1..=3u32 {
        println!("  a_{k}(y) = {}", fourier_closed_form(&sine, k).unwrap());
    }
}
