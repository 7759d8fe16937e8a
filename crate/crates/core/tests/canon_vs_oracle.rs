use std::collections::HashMap;

use lcn_core::canon::{canonicalize, describe, simplify_y, zero_word};
use lcn_core::oracle::{lc_presentation, CompletionLimits, RewritingSystem};
use lcn_core::Word;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn system(n: usize) -> RewritingSystem {
    RewritingSystem::complete(&lc_presentation(n).unwrap(), CompletionLimits::default()).unwrap()
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    Word::from_indices(n, (0..len).map(|_| rng.gen_range(1..=n))).unwrap()
}

#[test]
fn canonical_forms_are_sound_and_unique() {
    for n in 1..=9 {
        let sys = system(n);
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let mut by_class: HashMap<Word, Word> = HashMap::new();
        for _ in 0..4000 {
            let w = random_word(&mut rng, n, 12);
            let cf = canonicalize(&w).unwrap();
            let rendered = cf.word();
            assert!(sys.equal(&w, &rendered), "n={n}: {w} -> {cf}");
            assert_eq!(describe(&w).unwrap(), cf, "n={n}: {w}");
            assert_eq!(canonicalize(&rendered).unwrap(), cf, "n={n}: {w}");
            let prev = by_class.entry(sys.normal_form(&w)).or_insert_with(|| rendered.clone());
            assert_eq!(*prev, rendered, "n={n}: two canonical forms for one class");
            if cf.is_zero() {
                assert!(sys.equal(&rendered, &zero_word(n).unwrap()));
            }
        }
    }
}

#[test]
fn every_simplify_rewrite_preserves_the_element() {
    for n in 4..=9 {
        let sys = system(n);
        let mut rng = ChaCha8Rng::seed_from_u64(100 + n as u64);
        for _ in 0..3000 {
            let y = random_word(&mut rng, n, 6);
            assert!(sys.equal(&y, &simplify_y(&y)), "n={n}: {y}");
        }
    }
}
