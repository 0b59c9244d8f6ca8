mod common;

use std::time::Instant;

use radix::verifier::certify;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{draw, COMPLEX, GENERAL, REAL};

#[test]
fn every_family_certifies() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for family in GENERAL.iter().chain(REAL.iter()).chain(COMPLEX.iter()) {
        let start = Instant::now();
        for _ in 0..3 {
            let (set, t) = draw(*family, &mut rng);
            let cert = certify(&t, &set);
            assert!(cert.pass, "{family:?} {:?}\n{cert:#?}", t.case);
        }
        eprintln!("{family:?}: {:?}", start.elapsed());
    }
}
