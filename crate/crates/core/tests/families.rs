use globcoal::families::{Bound, FamilySpec};
use globcoal::{
    closed_form_gc, generate, is_t1_or_t2, max_partition, proof_partition, verify_partition, Kind, SolveOptions,
};

fn spec(s: &str) -> FamilySpec {
    s.parse().unwrap()
}

fn gc(s: &FamilySpec) -> usize {
    max_partition(&generate(s).unwrap(), Kind::Gc, &SolveOptions::default()).unwrap().value
}

#[test]
fn closed_forms_match_the_solver() {
    for s in [
        "path:2",
        "path:5",
        "path:9",
        "cycle:3",
        "cycle:5",
        "cycle:7",
        "cycle:10",
        "complete:6",
        "kbip:3,4",
        "wheel:6",
        "fan:5",
        "dstar:3,2",
        "u5_1:2",
        "u4_2:1,2",
        "u3_3:1,1,1",
    ] {
        let s = spec(s);
        match closed_form_gc(&s).unwrap() {
            Bound::Exact(v) => assert_eq!(gc(&s), v, "{s}"),
            Bound::AtLeast(v) => assert!(gc(&s) >= v, "{s}"),
        }
    }
}

#[test]
fn proof_partitions_reach_the_closed_form() {
    for s in ["complete:5", "dstar:4,2", "kbip:2,5", "multipartite:3,2,2", "wheel:7", "fan:6", "u5_3:1,1,1"] {
        let s = spec(s);
        let g = generate(&s).unwrap();
        let p = proof_partition(&s).unwrap();
        assert!(verify_partition(&g, &p, Kind::Gc).unwrap().valid, "{s}");
        assert!(closed_form_gc(&s).unwrap().admits(p.len()), "{s}");
    }
}

#[test]
fn t_families_have_full_perfect_coalition_number() {
    for s in ["t1:2", "t1:3", "t2:2,3,0", "t2:3,3,2"] {
        let s = spec(s);
        let g = generate(&s).unwrap();
        assert!(is_t1_or_t2(&g).is_some(), "{s}");
        let r = max_partition(&g, Kind::Prc, &SolveOptions::default()).unwrap();
        assert_eq!(r.value, g.n(), "{s}");
    }
}

#[test]
fn bad_specs_are_rejected() {
    for s in ["path:0", "wheel:2", "kbip:0,3", "spider:", "nonsense:3", "cycle"] {
        assert!(s.parse::<FamilySpec>().and_then(|x| generate(&x)).is_err(), "{s}");
    }
}
