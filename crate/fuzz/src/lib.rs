//! Shared fixtures for the fuzz targets: a fixed cyclotomic context and a
//! fixed host Hopf algebra for the parsers that require one. The host is the
//! group algebra of Z_2 x Z_2, small enough that every fuzz iteration stays
//! cheap while still having nontrivial group-likes, twists, and comodules.

use std::sync::{Arc, OnceLock};

use cyclohopf::{cyclic_group, group_algebra, CyclotomicContext, HopfAlgebraData};

pub fn ctx() -> Arc<CyclotomicContext> {
    static CTX: OnceLock<Arc<CyclotomicContext>> = OnceLock::new();
    CTX.get_or_init(|| CyclotomicContext::new(4).unwrap()).clone()
}

pub fn klein_host() -> &'static HopfAlgebraData {
    static HOST: OnceLock<HopfAlgebraData> = OnceLock::new();
    HOST.get_or_init(|| {
        let table = cyclic_group(2)
            .unwrap()
            .direct_product(&cyclic_group(2).unwrap());
        group_algebra(&ctx(), &table).unwrap().0
    })
}
