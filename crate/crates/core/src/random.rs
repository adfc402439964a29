//! Reproducible random rationals, series and seeds for the randomized checks.
//!
//! Every value has numerator in `[-9, 9]` and denominator in `[1, 4]`; a
//! leading coefficient is resampled until nonzero.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::{rat, Rational};
use crate::series::Series;

pub type SuiteRng = ChaCha8Rng;

/// Generator for one independent stream under a master seed.
pub fn stream_rng(seed: u64, stream: u64) -> SuiteRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn rational<G: Rng>(rng: &mut G) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn nonzero_rational<G: Rng>(rng: &mut G) -> Rational {
    loop {
        let r = rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// `len` arguments with a nonzero first entry, suitable for `X_1^{-1}`.
pub fn args<G: Rng>(rng: &mut G, len: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(len);
    if len > 0 {
        out.push(nonzero_rational(rng));
    }
    out.extend((1..len).map(|_| rational(rng)));
    out
}

/// Zero constant term, nonzero linear term.
pub fn invertible_series<G: Rng>(rng: &mut G, order: usize) -> Series {
    let mut coeffs = vec![Rational::zero()];
    coeffs.extend(args(rng, order));
    Series::from_coeffs(coeffs)
}

/// An invertible series with all even coefficients zero.
pub fn odd_series<G: Rng>(rng: &mut G, order: usize) -> Series {
    let mut coeffs = vec![Rational::zero(); order + 1];
    for n in (1..=order).step_by(2) {
        coeffs[n] = if n == 1 {
            nonzero_rational(rng)
        } else {
            rational(rng)
        };
    }
    Series::from_coeffs(coeffs)
}

/// Plain series with an arbitrary (possibly nonzero) constant term.
pub fn any_series<G: Rng>(rng: &mut G, order: usize) -> Series {
    Series::from_coeffs((0..=order).map(|_| rational(rng)).collect())
}

pub fn even_seeds<G: Rng>(rng: &mut G, count: usize) -> Vec<Rational> {
    (0..count).map(|_| rational(rng)).collect()
}

/// `g_1, g_3, ...` with `g_1 != 0`.
pub fn odd_seeds<G: Rng>(rng: &mut G, count: usize) -> Vec<Rational> {
    args(rng, count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Signed;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<_> = (0..8).map(|_| rational(&mut stream_rng(7, 1))).collect();
        let b: Vec<_> = (0..8).map(|_| rational(&mut stream_rng(7, 1))).collect();
        assert_eq!(a, b);
        let mut r1 = stream_rng(7, 1);
        let mut r2 = stream_rng(7, 2);
        let s1: Vec<_> = (0..16).map(|_| rational(&mut r1)).collect();
        let s2: Vec<_> = (0..16).map(|_| rational(&mut r2)).collect();
        assert_ne!(s1, s2);
    }

    #[test]
    fn values_stay_in_range() {
        let mut rng = stream_rng(1, 0);
        for _ in 0..500 {
            let r = rational(&mut rng);
            assert!(r.numer().abs() <= BigInt::from(9));
            assert!(*r.denom() <= BigInt::from(4));
        }
        for _ in 0..50 {
            let s = invertible_series(&mut rng, 6);
            assert!(s.is_invertible());
            let o = odd_series(&mut rng, 7);
            assert!(o.is_odd() && o.is_invertible());
        }
    }
}
