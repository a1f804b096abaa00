//! NNF against bounded model search: same satisfiability, same extension.

mod common;

use common::random::{concept, role_setup};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sdl_core::logic::{is_nnf, nnf};
use sdl_core::oracle::{enumerate_models, find_model};
use sdl_core::syntax::render_concept;

#[test]
fn nnf_preserves_satisfiability_and_extension() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x00ff_0009);
    let mut sat = 0;
    for _ in 0..1000 {
        let setup = role_setup(&mut rng);
        let c = concept(&mut rng, 3, &setup.simple);
        let n = nnf(&c);
        assert!(is_nnf(&n) && nnf(&n) == n, "{}", render_concept(&c));
        let kb = setup.kb();
        let (mc, mn) = (find_model(&kb, &c, 3).unwrap(), find_model(&kb, &n, 3).unwrap());
        assert_eq!(mc.is_some(), mn.is_some(), "{}", render_concept(&c));
        if let Some(m) = mc {
            sat += 1;
            assert_eq!(m.extension(&c), m.extension(&n), "{}", render_concept(&c));
        }
    }
    assert!(sat > 100 && sat < 1000, "degenerate sample: {sat} satisfiable");
}

#[test]
fn nnf_agrees_on_every_small_model() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x00ff_0010);
    for _ in 0..200 {
        let setup = role_setup(&mut rng);
        let c = concept(&mut rng, 2, &setup.simple);
        let n = nnf(&c);
        for m in enumerate_models(&setup.kb(), &c, 2).unwrap() {
            assert_eq!(m.extension(&c), m.extension(&n), "{}", render_concept(&c));
        }
    }
}
