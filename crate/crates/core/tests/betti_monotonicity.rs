use segre_core::betti::{beta_02, beta_02_closed_form, beta_strand, corner_betti, is_pure_resolution};
use segre_core::combinatorics::Spec;
use segre_core::newcomb::is_gorenstein;

fn grid(n: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut parts = vec![1u32; n];
    loop {
        out.push(parts.clone());
        let Some(i) = parts.iter().rposition(|&b| b < max) else { return out };
        parts[i] += 1;
        for p in &mut parts[i + 1..] {
            *p = 1;
        }
    }
}

fn dominates(big: &[u32], small: &[u32]) -> bool {
    big.len() >= small.len() && small.iter().zip(big).all(|(s, b)| b >= s)
}

#[test]
fn strand_grows_with_the_spec() {
    let specs: Vec<Vec<u32>> = (3..=4).flat_map(|n| grid(n, 3)).collect();
    for small in &specs {
        let s = Spec::new(small.clone()).unwrap();
        for big in specs.iter().filter(|b| *b != small && dominates(b, small)) {
            let b = Spec::new(big.clone()).unwrap();
            for i in 0..=3 {
                let lo = beta_strand(&s, i).unwrap();
                let hi = beta_strand(&b, i).unwrap();
                assert!(hi >= lo, "beta_{i} of {b} = {hi} < {lo} of {s}");
            }
        }
    }
}

#[test]
fn closed_form_matches_strand() {
    for parts in grid(3, 4).into_iter().chain(grid(4, 3)) {
        let spec = Spec::new(parts).unwrap();
        assert_eq!(beta_02(&spec).unwrap(), beta_strand(&spec, 0).unwrap(), "{spec}");
    }
    assert_eq!(beta_02_closed_form(&Spec::new(vec![1, 1]).unwrap()), 1u32.into());
}

#[test]
fn corner_is_one_exactly_for_gorenstein() {
    for parts in grid(2, 4).into_iter().chain(grid(3, 3)) {
        let spec = Spec::new(parts).unwrap();
        let corner = corner_betti(&spec).unwrap();
        assert!(corner.value > 0u32.into(), "{spec}");
        assert_eq!(corner.value == 1u32.into(), is_gorenstein(&spec), "{spec}");
    }
}

#[test]
fn purity_only_for_three_lines() {
    for parts in grid(3, 3).into_iter().chain(grid(4, 2)) {
        let spec = Spec::new(parts.clone()).unwrap();
        assert_eq!(is_pure_resolution(&spec).unwrap(), parts == [1, 1, 1], "{spec}");
    }
    assert!(is_pure_resolution(&Spec::new(vec![1, 2]).unwrap()).is_err());
    let err = beta_strand(&Spec::new(vec![1, 2]).unwrap(), 0).unwrap_err();
    assert!(err.to_string().contains("n >= 3"), "{err}");
}
