mod common;

use ararank::certificates::{check_gsv, check_prop1, Prop1Certificate};
use ararank::combinatorics::{build_im, im_block, MonomialIdeal};
use ararank::fixtures::{fixture, FixtureId};
use ararank::oracle::compare_radicals;
use ararank::ring::{FieldSpec, Gf4, Scalar, SquarefreeMonomial, VarSet};
use ararank::search::{search_grouping, SearchConfig, SearchStatus};

use common::{mono, qq};

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn relabel(m: SquarefreeMonomial, map: &[usize]) -> SquarefreeMonomial {
    SquarefreeMonomial::new(VarSet::from_indices(m.support().iter().map(|v| map[v])))
}

/// `I_1` is the pentagon ideal after renaming variables, and the renaming
/// carries the five-element criterion along.
#[test]
fn first_family_member_is_a_relabelled_pentagon() {
    let im = build_im(1, FieldSpec::Rational).unwrap();
    let pentagon = fixture(FixtureId::Example1).unwrap().ideal;
    let used: Vec<usize> = {
        let all = im.ideal.generators().iter().fold(VarSet::EMPTY, |acc, g| acc.union(g.support()));
        all.iter().collect()
    };
    assert_eq!(used.len(), 5);
    let mut target: Vec<SquarefreeMonomial> = pentagon.generators().to_vec();
    target.sort();
    let iso = permutations(&[0, 1, 2, 3, 4]).into_iter().find_map(|p| {
        let mut map = vec![usize::MAX; 6];
        for (k, &v) in used.iter().enumerate() {
            map[v] = p[k];
        }
        let mut image: Vec<SquarefreeMonomial> = im.ideal.generators().iter().map(|&g| relabel(g, &map)).collect();
        image.sort();
        (image == target).then_some(map)
    });
    let map = iso.expect("an isomorphism exists");

    let [s, t, u, v] = im_block(1);
    let r = mono(&[1, 2]);
    let cert = Prop1Certificate::new(relabel(r, &map), relabel(s, &map), relabel(t, &map), relabel(u, &map), relabel(v, &map));
    assert!(check_prop1(&cert, &qq(5)).unwrap().accepted);
    let original = Prop1Certificate::new(r, s, t, u, v);
    assert!(check_prop1(&original, im.ideal.ring()).unwrap().accepted);
}

#[test]
fn family_heights() {
    for m in 1..=4 {
        let im = build_im(m, FieldSpec::Rational).unwrap();
        let h = im.ideal.height_report().unwrap();
        assert_eq!(h.big_height, 2 * m + 1, "m = {m}");
        assert_eq!(h.height, if m == 1 { 3 } else { 2 * m }, "m = {m}");
    }
}

#[test]
fn bridged_octagon_is_pure_of_height_six() {
    let f = fixture(FixtureId::OctagonBridged).unwrap();
    let h = f.ideal.height_report().unwrap();
    assert_eq!((h.height, h.big_height, h.pure), (6, 6, true));
    assert_eq!(f.gsv_certificate().unwrap().num_parts(), 6);
    assert!(check_gsv(&f.gsv_certificate().unwrap()).accepted);
}

#[test]
fn hexagon_search_needs_four_parts() {
    let f = fixture(FixtureId::Hexagon).unwrap();
    let out = search_grouping(&f.ring, f.ideal.generators(), &SearchConfig::default()).unwrap();
    assert_eq!(out.status, SearchStatus::Found);
    assert_eq!(out.certificate.unwrap().num_parts(), 4);
}

/// The characteristic-two candidates are meant for `t` outside `{0, 1}`:
/// both primitive elements of GF(4) work, while `t = 0` drops `x2*x5`
/// from the radical and a vanishing point shows it.
#[test]
fn characteristic_two_candidates_specialize() {
    let f = fixture(FixtureId::Example4Char2).unwrap();
    for bits in [2, 3] {
        let (ideal, candidates) = f.specialized(FieldSpec::Gf4, &[Scalar::Gf4(Gf4::new(bits))]).unwrap();
        let cmp = compare_radicals(&ideal, &candidates).unwrap();
        assert!(cmp.equal(), "t = {bits}: {cmp:?}");
    }
    let gf2 = FieldSpec::prime(2).unwrap();
    let (ideal, candidates) = f.specialized(gf2, &[gf2.zero()]).unwrap();
    let cmp = compare_radicals(&ideal, &candidates).unwrap();
    let missing: Vec<String> = cmp.not_in_radical.iter().map(|(m, _)| m.to_string()).collect();
    assert_eq!(missing, ["x2*x5"]);
    let witness = cmp.not_in_radical[0].1.witness.clone().expect("a vanishing point");
    assert!(candidates.iter().all(|q| q.eval(&witness).unwrap().is_zero()));
}

#[test]
fn characteristic_zero_candidates_over_other_fields() {
    let f = fixture(FixtureId::Example4Char0).unwrap();
    for field in [FieldSpec::Rational, FieldSpec::prime(3).unwrap(), FieldSpec::prime(7).unwrap()] {
        let (ideal, candidates) = f.specialized(field, &[]).unwrap();
        let cmp = compare_radicals(&ideal, &candidates).unwrap();
        assert!(cmp.equal(), "{field}: {cmp:?}");
    }
    let ideal: MonomialIdeal = f.ideal.clone();
    assert_eq!(ideal.generators().len(), 9);
}
