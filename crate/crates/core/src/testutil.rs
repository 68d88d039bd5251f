//! Shared proptest strategies for unit tests.

use proptest::prelude::*;

use crate::poly::Polynomial;
use crate::rational::{frac, Rational};

pub fn rational(bound: i64) -> impl Strategy<Value = Rational> {
    (-bound..=bound, 1..=bound).prop_map(|(n, d)| frac(n, d))
}

pub fn nonzero_rational(bound: i64) -> impl Strategy<Value = Rational> {
    (1..=bound, 1..=bound, any::<bool>())
        .prop_map(|(n, d, neg)| frac(if neg { -n } else { n }, d))
}

/// Polynomial of exact degree in `lo..=hi`.
pub fn poly(lo: usize, hi: usize, bound: i64) -> impl Strategy<Value = Polynomial> {
    (lo..=hi).prop_flat_map(move |d| {
        (
            proptest::collection::vec(rational(bound), d),
            nonzero_rational(bound),
        )
            .prop_map(|(mut c, lc)| {
                c.push(lc);
                Polynomial::new(c)
            })
    })
}

pub fn int_poly(lo: usize, hi: usize, bound: i64) -> impl Strategy<Value = Polynomial> {
    (lo..=hi).prop_flat_map(move |d| {
        (proptest::collection::vec(-bound..=bound, d), 1..=bound).prop_map(|(mut c, lc)| {
            c.push(lc);
            Polynomial::from_ints(&c)
        })
    })
}

pub fn monic_int_poly(lo: usize, hi: usize, bound: i64) -> impl Strategy<Value = Polynomial> {
    (lo..=hi).prop_flat_map(move |d| {
        proptest::collection::vec(-bound..=bound, d).prop_map(|mut c| {
            c.push(1);
            Polynomial::from_ints(&c)
        })
    })
}
