//! The polynomial family behind the deflation-chain closed form.
//!
//! All polynomials are expressed in the scaled variable `x = t / pi`
//! (hyperplane spacing 1), which turns every identity here into an exact
//! rational-coefficient identity. Provides:
//!
//! - [`rising_product`]: the product `(1+x)(2+x)...(j+x)` whose mirrored
//!   copies make up the closed-form denominator,
//! - [`chain_weight`]: the degree-`j` weight of the shifted even-part copy
//!   `w((j-2l) pi + t, y)` in the level-`j` representation,
//! - [`chain_weight_raw`]: the same weight as produced by one step of the
//!   level recursion, before the common factor `x` is divided out,
//! - [`verify_deflation_identities`]: the exact checker for
//!   `chain_weight_raw(j, l) = x * chain_weight(j, l)` together with the
//!   factor bookkeeping of the two intermediate product rewrites.
//!
//! The explicit product formula for `chain_weight` has degree `2l` once
//! `l > j/2`, so it cannot be the intended degree-`j` weight there; the upper
//! half of the range is therefore built from the reflection symmetry
//! `weight(j, l)(x) = weight(j, j-l)(-x)`. The recursion checker validates
//! this choice exactly for every `j` it is run on.

use crate::poly::{Poly, PolyError};
use crate::rational::{binomial, rat_int};

/// `(1+x)(2+x)...(j+x)`; degree `j`, value `j!` at zero. `j >= 1`.
pub fn rising_product(j: u32) -> Poly {
    let mut acc = Poly::one();
    for i in 1..=j {
        acc = &acc * &Poly::from_ints(&[i as i64, 1]);
    }
    acc
}

fn reflect(p: &Poly) -> Poly {
    p.compose_affine(&rat_int(-1), &rat_int(0))
}

/// The weight of the copy `w((j-2l) pi + t, y)` in the level-`j` closed form.
///
/// Boundary cases are the mirrored and plain rising products; for
/// `1 <= l <= j/2` the explicit product formula applies, and for `l > j/2`
/// the reflection symmetry defines the weight (see module docs).
pub fn chain_weight(j: u32, l: i64) -> Result<Poly, PolyError> {
    if l < 0 || l > j as i64 {
        return Err(PolyError::IndexOutOfRange { j, l });
    }
    let l = l as u32;
    if l == 0 {
        return Ok(reflect(&rising_product(j)));
    }
    if l == j {
        return Ok(rising_product(j));
    }
    if 2 * l > j {
        return Ok(reflect(&chain_weight(j, (j - l) as i64)?));
    }
    // binom(j,l) * prod_{s=0}^{l-1} ((j-s) - x)((j-s) + x)
    //            * prod_{s=0}^{j-1-2l} ((j-l-s) - x)
    let mut acc = Poly::constant(binomial(j, l));
    for s in 0..l {
        let i = (j - s) as i64;
        acc = &acc * &Poly::from_ints(&[i, -1]);
        acc = &acc * &Poly::from_ints(&[i, 1]);
    }
    // empty when 2l = j (upper bound -1)
    let tail = j as i64 - 1 - 2 * l as i64;
    for s in 0..=tail {
        let i = j as i64 - l as i64 - s;
        acc = &acc * &Poly::from_ints(&[i, -1]);
    }
    Ok(acc)
}

fn weight_or_seed(j: u32, l: i64) -> Result<Poly, PolyError> {
    if j == 0 && l == 0 {
        Ok(Poly::one())
    } else {
        chain_weight(j, l)
    }
}

/// One step of the level recursion: the degree-`j+1` weight before the common
/// factor `x` is divided out. `j >= 1`.
///
/// The step combines the two shifted level-`j-1` weights with the quadratic
/// prefactors `(j -+ x)((j-1) -+ x)`; at the boundary indices only one of the
/// two contributions exists.
pub fn chain_weight_raw(j: u32, l: i64) -> Result<Poly, PolyError> {
    if j == 0 || l < 0 || l > j as i64 {
        return Err(PolyError::IndexOutOfRange { j, l });
    }
    let ji = j as i64;
    let minus = &Poly::from_ints(&[ji, -1]) * &Poly::from_ints(&[ji - 1, -1]);
    let plus = &Poly::from_ints(&[ji, 1]) * &Poly::from_ints(&[ji - 1, 1]);
    let shift_up = |p: &Poly| p.compose_affine(&rat_int(1), &rat_int(1));
    let shift_down = |p: &Poly| p.compose_affine(&rat_int(1), &rat_int(-1));

    let mut acc = Poly::zero();
    if l < ji {
        let prev = weight_or_seed(j - 1, l)?;
        acc = &acc - &(&minus * &shift_up(&prev));
    }
    if l > 0 {
        let prev = weight_or_seed(j - 1, l - 1)?;
        acc = &acc + &(&plus * &shift_down(&prev));
    }
    Ok(acc)
}

/// Outcome of one `(j, l)` identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityStatus {
    ExactPass,
    /// The exact difference `raw - x * weight` as a witness.
    ExactFail { difference: Poly },
}

/// Which of the two printed scalar-factor rewrites of the recursion's A/B
/// terms holds exactly. Only defined for interior `l` (both terms present).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorCheck {
    /// `A = weight * (j-l)/l * (l - x)` holds exactly.
    pub a_over_l: bool,
    /// `A = weight * (j-l)/j * (l - x)` holds exactly.
    pub a_over_j: bool,
    /// `B = weight * l/j * ((j-l) + x)` holds exactly.
    pub b_over_j: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityEntry {
    pub l: u32,
    pub status: IdentityStatus,
    pub factors: Option<FactorCheck>,
}

/// Per-`j` report; `entries` has exactly `j + 1` rows (`l = 0..=j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub j: u32,
    pub entries: Vec<IdentityEntry>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.status == IdentityStatus::ExactPass)
    }
}

fn factor_check(j: u32, l: u32) -> Result<FactorCheck, PolyError> {
    let ji = j as i64;
    let li = l as i64;
    let weight = chain_weight(j, li)?;
    // A = (j - x)((j-1) - x) * weight_{j-1, l}(x + 1)
    let minus = &Poly::from_ints(&[ji, -1]) * &Poly::from_ints(&[ji - 1, -1]);
    let a = &minus * &chain_weight(j - 1, li)?.compose_affine(&rat_int(1), &rat_int(1));
    // B = (j + x)((j-1) + x) * weight_{j-1, l-1}(x - 1)
    let plus = &Poly::from_ints(&[ji, 1]) * &Poly::from_ints(&[ji - 1, 1]);
    let b = &plus * &chain_weight(j - 1, li - 1)?.compose_affine(&rat_int(1), &rat_int(-1));

    let l_minus_x = Poly::from_ints(&[li, -1]);
    let jl_plus_x = Poly::from_ints(&[ji - li, 1]);
    let a_over_l = &weight.scale(&(rat_int(ji - li) / rat_int(li))) * &l_minus_x;
    let a_over_j = &weight.scale(&(rat_int(ji - li) / rat_int(ji))) * &l_minus_x;
    let b_over_j = &weight.scale(&(rat_int(li) / rat_int(ji))) * &jl_plus_x;
    Ok(FactorCheck {
        a_over_l: a == a_over_l,
        a_over_j: a == a_over_j,
        b_over_j: b == b_over_j,
    })
}

/// Checks `chain_weight_raw(j, l) = x * chain_weight(j, l)` by exact
/// subtraction for every `1 <= j <= j_max`, `0 <= l <= j`, recording factor
/// bookkeeping for the interior indices. Failures are data, not errors.
pub fn verify_deflation_identities(j_max: u32) -> Vec<IdentityReport> {
    let x = Poly::x();
    let mut reports = Vec::new();
    for j in 1..=j_max {
        let mut entries = Vec::new();
        for l in 0..=j {
            let raw = chain_weight_raw(j, l as i64).expect("index in range");
            let weight = chain_weight(j, l as i64).expect("index in range");
            let difference = &raw - &(&x * &weight);
            let status = if difference.is_zero() {
                IdentityStatus::ExactPass
            } else {
                IdentityStatus::ExactFail { difference }
            };
            let factors = if l >= 1 && l < j {
                Some(factor_check(j, l).expect("index in range"))
            } else {
                None
            };
            entries.push(IdentityEntry { l, status, factors });
        }
        reports.push(IdentityReport { j, entries });
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rising_product_small() {
        assert_eq!(rising_product(1), Poly::from_ints(&[1, 1]));
        assert_eq!(rising_product(2), Poly::from_ints(&[2, 3, 1]));
        // value at 0 is j!
        let mut fact = rat_int(1);
        for j in 1..=8u32 {
            fact *= rat_int(j as i64);
            assert_eq!(rising_product(j).eval(&rat_int(0)), fact, "j = {j}");
        }
    }

    #[test]
    fn weight_boundaries() {
        assert_eq!(chain_weight(1, 0).unwrap(), Poly::from_ints(&[1, -1]));
        assert_eq!(chain_weight(1, 1).unwrap(), Poly::from_ints(&[1, 1]));
        // interior with empty trailing product: 2(4 - x^2)
        assert_eq!(chain_weight(2, 1).unwrap(), Poly::from_ints(&[8, 0, -2]));
        assert!(chain_weight(2, 3).is_err());
        assert!(chain_weight(2, -1).is_err());
    }

    #[test]
    fn weight_upper_half_by_reflection() {
        // weight(3,1) = 3(9 - x^2)(2 - x); weight(3,2) its mirror image
        assert_eq!(chain_weight(3, 1).unwrap(), Poly::from_ints(&[54, -27, -6, 3]));
        assert_eq!(chain_weight(3, 2).unwrap(), Poly::from_ints(&[54, 27, -6, -3]));
    }

    #[test]
    fn weight_degrees_exact() {
        for j in 1..=8u32 {
            for l in 0..=j {
                let w = chain_weight(j, l as i64).unwrap();
                assert_eq!(w.degree(), Some(j as usize), "degree of weight({j},{l})");
                let raw = chain_weight_raw(j, l as i64).unwrap();
                assert_eq!(raw.degree(), Some(j as usize + 1), "degree of raw({j},{l})");
            }
        }
    }

    #[test]
    fn raw_base_cases() {
        // x(1 - x)
        assert_eq!(chain_weight_raw(1, 0).unwrap(), Poly::from_ints(&[0, 1, -1]));
        // x(1 - x)(2 - x)
        assert_eq!(chain_weight_raw(2, 0).unwrap(), Poly::from_ints(&[0, 2, -3, 1]));
        // 2x(4 - x^2)
        assert_eq!(chain_weight_raw(2, 1).unwrap(), Poly::from_ints(&[0, 8, 0, -2]));
    }

    #[test]
    fn identity_suite_passes_exactly() {
        let reports = verify_deflation_identities(8);
        let mut count = 0;
        for r in &reports {
            assert_eq!(r.entries.len(), r.j as usize + 1);
            for e in &r.entries {
                assert_eq!(
                    e.status,
                    IdentityStatus::ExactPass,
                    "identity failed at j={}, l={}",
                    r.j,
                    e.l
                );
                count += 1;
            }
        }
        // sum over j <= 8 of (j + 1)
        assert_eq!(count, 44);
    }

    #[test]
    fn factor_bookkeeping_finding() {
        // The A-term rewrite holds with denominator j, not l; the B-term
        // rewrite holds as printed. Verified exactly for every interior index.
        for r in verify_deflation_identities(8) {
            for e in &r.entries {
                if let Some(fc) = &e.factors {
                    assert!(fc.a_over_j, "A factor (j-l)/j at j={}, l={}", r.j, e.l);
                    assert!(fc.b_over_j, "B factor l/j at j={}, l={}", r.j, e.l);
                    // (j-l)/l only coincides when l == j - l... via j = 2l the
                    // two candidates are equal; elsewhere it must fail.
                    if r.j != 2 * e.l {
                        assert!(!fc.a_over_l, "A factor (j-l)/l at j={}, l={}", r.j, e.l);
                    }
                }
            }
        }
    }

    #[test]
    fn weight_reflection_symmetry() {
        for j in 1..=8u32 {
            for l in 0..=j {
                let a = chain_weight(j, l as i64).unwrap();
                let b = chain_weight(j, (j - l) as i64)
                    .unwrap()
                    .compose_affine(&rat_int(-1), &rat_int(0));
                assert_eq!(a, b, "reflection at j={j}, l={l}");
            }
        }
    }

    proptest! {
        #[test]
        fn divide_round_trip(qc in proptest::collection::vec(-9i64..=9, 1..=11),
                             rc in proptest::collection::vec(-9i64..=9, 1..=11)) {
            let q = Poly::from_ints(&qc);
            let r = Poly::from_ints(&rc);
            prop_assume!(!q.is_zero());
            let prod = &q * &r;
            prop_assert_eq!(prod.divide_exact(&q).unwrap(), r);
        }
    }

    use crate::rational::rat_int;
}
