use num_bigint::BigUint;
use segre_core::combinatorics::{multinomial, Spec, DEFAULT_BUDGET};
use segre_core::newcomb::{cross_check, newcomb_dillon_roselle, Algorithm};
use segre_core::toric::{facets, groebner_generators, binomial_in_ideal};

/// Every ordered spec with at most `max_len` parts and total at most `max_total`.
fn specs_up_to(max_len: usize, max_total: u32) -> Vec<Spec> {
    fn go(prefix: &mut Vec<u32>, left: u32, max_len: usize, out: &mut Vec<Spec>) {
        if !prefix.is_empty() {
            out.push(Spec::new(prefix.clone()).unwrap());
        }
        if prefix.len() == max_len {
            return;
        }
        for b in 1..=left {
            prefix.push(b);
            go(prefix, left - b, max_len, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), max_total, max_len, &mut out);
    out
}

#[test]
fn permuting_parts_leaves_the_vector_unchanged() {
    for spec in specs_up_to(3, 7) {
        let mut rev = spec.parts().to_vec();
        rev.reverse();
        let a = newcomb_dillon_roselle(&spec).values;
        let b = newcomb_dillon_roselle(&Spec::new(rev).unwrap()).values;
        assert_eq!(a, b, "{spec}");
    }
}

#[test]
fn all_algorithms_agree_on_small_specs() {
    for spec in specs_up_to(3, 7) {
        let report = cross_check(&spec, &Algorithm::ALL, DEFAULT_BUDGET).unwrap();
        assert!(report.agree(), "{spec}: {:?}", report.vectors);
        for v in &report.vectors {
            v.check().unwrap_or_else(|e| panic!("{spec} {}: {}", v.algorithm, e.0));
        }
    }
}

#[test]
fn facets_are_counted_by_the_multinomial() {
    for spec in specs_up_to(3, 8) {
        let count = facets(&spec).count();
        assert_eq!(BigUint::from(count), multinomial(&spec), "{spec}");
    }
}

#[test]
fn generators_lie_in_the_ideal_with_sorted_trail() {
    for spec in specs_up_to(3, 5) {
        for g in groebner_generators(&spec) {
            let (lead, trail) = (g.lead_monomial(), g.trail_monomial());
            assert!(binomial_in_ideal(&lead, &trail), "{spec}: {g}");
            assert!(trail.is_sorted() && !lead.is_sorted(), "{spec}: {g}");
        }
    }
}
