//! Shared generators for the unit-test suites.

use std::sync::Arc;

use proptest::prelude::*;

use crate::field::{ContextOps, Cyclotomic, CyclotomicContext, Rat};

pub(crate) fn ctx(n: u64) -> Arc<CyclotomicContext> {
    CyclotomicContext::new(n).unwrap()
}

pub(crate) fn arb_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

pub(crate) fn arb_cyc(n: u64) -> impl Strategy<Value = Cyclotomic> {
    let c = ctx(n);
    let phi = c.degree();
    proptest::collection::vec(arb_rat(), phi).prop_map(move |coeffs| {
        let mut acc = c.zero();
        for (k, r) in coeffs.into_iter().enumerate() {
            acc += &c.zeta_pow(k as i64).scale(&r);
        }
        acc
    })
}

/// Sparse-ish vectors: most entries zero, a few small scalars.
pub(crate) fn arb_vector(n: u64, len: usize) -> impl Strategy<Value = Vec<Cyclotomic>> {
    let c = ctx(n);
    let entry = prop_oneof![
        3 => Just(0i64),
        2 => 1i64..=3,
        1 => -2i64..=-1,
    ];
    proptest::collection::vec((entry, 0i64..12), len).prop_map(move |raw| {
        raw.into_iter()
            .map(|(m, p)| c.zeta_pow(p).scale(&Rat::from_integer(m.into())))
            .collect()
    })
}
