use std::time::Instant;

use ararank::fixtures::{fixture, FixtureId};
use ararank::oracle::{compare_radicals, groebner, MonomialOrder};

#[test]
fn accepted_certificates_generate_the_radical() {
    for id in FixtureId::catalog() {
        let f = fixture(id).unwrap();
        let Some(cert) = &f.certificate else { continue };
        let r = cert.check().unwrap();
        assert!(r.accepted, "{id}");
        let t = Instant::now();
        let cmp = compare_radicals(&f.ideal, &r.emitted).unwrap();
        assert!(cmp.equal(), "{id}: {cmp:?}");
        eprintln!("{id}: {:?}", t.elapsed());
    }
}

#[test]
fn candidate_sets_generate_the_radical() {
    for id in FixtureId::catalog() {
        let f = fixture(id).unwrap();
        if f.ring.num_params() > 0 {
            continue;
        }
        let Some(c) = &f.candidates else { continue };
        let t = Instant::now();
        assert!(compare_radicals(&f.ideal, c).unwrap().equal(), "{id}");
        let b = groebner(c, &f.ring, &MonomialOrder::degrevlex()).unwrap();
        b.check_s_polynomials().unwrap();
        b.check_generators(c).unwrap();
        eprintln!("{id}: {:?}", t.elapsed());
    }
}
