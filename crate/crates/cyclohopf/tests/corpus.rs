//! Replays every checked-in fuzz corpus seed through its parser. The seeds
//! double as format regression fixtures: each must load cleanly against the
//! same fixed host the fuzz targets use, and documents with emitters must
//! survive an emit and reload round trip unchanged.

use std::fs;
use std::path::PathBuf;
use std::sync::Arc;

use cyclohopf::field::parse_scalar;
use cyclohopf::{
    algebra_to_file, check_cocycle, check_pseudo_twist, comodule_to_file, cyclic_group,
    group_algebra, hopf_to_file, parse_algebra, parse_cocycle, parse_comodule, parse_comodules,
    parse_grouplikes, parse_hopf, parse_rep, parse_twist, to_json, CyclotomicContext,
    HopfAlgebraData, TwistKind,
};

const TARGETS: [&str; 9] = [
    "parse_algebra",
    "parse_cocycle",
    "parse_comodule",
    "parse_comodules",
    "parse_grouplikes",
    "parse_hopf",
    "parse_rep",
    "parse_scalar",
    "parse_twist",
];

fn fuzz_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz")
}

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = fuzz_root().join("corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("missing corpus directory {}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            let text = fs::read_to_string(&path)
                .unwrap_or_else(|e| panic!("unreadable seed {}: {e}", path.display()));
            (name, text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "corpus directory for {target} has no seeds");
    out
}

/// The same fixed host the fuzz targets pin: k[Z_2 x Z_2] over Q(zeta_4).
fn klein_host() -> (Arc<CyclotomicContext>, HopfAlgebraData) {
    let ctx = CyclotomicContext::new(4).unwrap();
    let table = cyclic_group(2)
        .unwrap()
        .direct_product(&cyclic_group(2).unwrap());
    let (h, _) = group_algebra(&ctx, &table).unwrap();
    (ctx, h)
}

#[test]
fn every_fuzz_target_has_a_corpus_and_vice_versa() {
    let mut dirs: Vec<String> = fs::read_dir(fuzz_root().join("corpus"))
        .expect("fuzz corpus directory")
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    dirs.sort();
    let mut targets: Vec<String> = fs::read_dir(fuzz_root().join("fuzz_targets"))
        .expect("fuzz target directory")
        .map(|e| {
            let name = e.unwrap().file_name().to_string_lossy().into_owned();
            name.strip_suffix(".rs").expect("rust source").to_string()
        })
        .collect();
    targets.sort();
    assert_eq!(dirs, targets, "corpus directories and fuzz targets diverge");
    assert_eq!(dirs, TARGETS.map(String::from).to_vec());
}

#[test]
fn scalar_seeds_parse() {
    let ctx = CyclotomicContext::new(4).unwrap();
    for (name, text) in seeds("parse_scalar") {
        parse_scalar(&ctx, &text).unwrap_or_else(|e| panic!("seed {name}: {e}"));
    }
}

#[test]
fn hopf_seeds_validate_and_round_trip_byte_for_byte() {
    for (name, text) in seeds("parse_hopf") {
        let h = parse_hopf(&text).unwrap_or_else(|e| panic!("seed {name}: {e}"));
        assert!(h.validate().all_passed(), "seed {name} fails validation");
        let emitted = to_json(&hopf_to_file(&h));
        let again = parse_hopf(&emitted).unwrap();
        assert_eq!(again, h, "seed {name} changes under reload");
        assert_eq!(emitted, text, "emitter output drifted from seed {name}");
    }
}

#[test]
fn algebra_seeds_validate_and_round_trip() {
    for (name, text) in seeds("parse_algebra") {
        let a = parse_algebra(&text).unwrap_or_else(|e| panic!("seed {name}: {e}"));
        assert!(a.validate().all_passed(), "seed {name} fails validation");
        let again = parse_algebra(&to_json(&algebra_to_file(&a))).unwrap();
        assert_eq!(again, a, "seed {name} changes under reload");
    }
}

#[test]
fn rep_seeds_parse_with_an_inline_or_supplied_host() {
    let (_, host) = klein_host();
    for (name, text) in seeds("parse_rep") {
        let rep = parse_rep(&text, None)
            .or_else(|_| parse_rep(&text, Some(host.clone())))
            .unwrap_or_else(|e| panic!("seed {name}: {e}"));
        assert!(rep.matrix.rows() > 0);
    }
}

#[test]
fn grouplike_seeds_verify_against_the_klein_host() {
    let (_, host) = klein_host();
    for (name, text) in seeds("parse_grouplikes") {
        let gl = parse_grouplikes(&text, &host).unwrap_or_else(|e| panic!("seed {name}: {e}"));
        // The seeds close up to the full Klein group or the Z_2 subgroup the
        // single declared factor generates (the verifier adjoins the unit).
        assert!(gl.len() == 4 || gl.len() == 2, "seed {name}: {}", gl.len());
    }
}

#[test]
fn twist_seeds_classify_as_twists() {
    let (_, host) = klein_host();
    for (name, text) in seeds("parse_twist") {
        let twist = parse_twist(&text, &host).unwrap_or_else(|e| panic!("seed {name}: {e}"));
        assert_ne!(
            check_pseudo_twist(&twist).kind,
            TwistKind::Neither,
            "seed {name} is not even a pseudo-twist"
        );
    }
}

#[test]
fn cocycle_seeds_pass_the_cocycle_checks() {
    let (_, host) = klein_host();
    for (name, text) in seeds("parse_cocycle") {
        let c = parse_cocycle(&text, &host).unwrap_or_else(|e| panic!("seed {name}: {e}"));
        assert!(
            check_cocycle(&c).all_passed(),
            "seed {name} fails the cocycle identities"
        );
    }
}

#[test]
fn comodule_seeds_parse_and_round_trip() {
    let (_, host) = klein_host();
    for (name, text) in seeds("parse_comodule") {
        let c = parse_comodule(&text, &host).unwrap_or_else(|e| panic!("seed {name}: {e}"));
        let again = parse_comodule(&to_json(&comodule_to_file(&c)), &host).unwrap();
        assert_eq!(again.dim, c.dim, "seed {name} changes dimension under reload");
        assert_eq!(again.coeffs, c.coeffs, "seed {name} changes under reload");
        assert_eq!(again.self_dual, c.self_dual);
    }
}

#[test]
fn comodule_list_seeds_parse() {
    let (_, host) = klein_host();
    for (name, text) in seeds("parse_comodules") {
        let list = parse_comodules(&text, &host).unwrap_or_else(|e| panic!("seed {name}: {e}"));
        assert!(!list.is_empty(), "seed {name} carries no comodules");
    }
}
