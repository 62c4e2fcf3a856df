use surjalg::characters::decompose;
use surjalg::oracle::stirling2;
use surjalg::partitions::enumerate_partitions;
use surjalg::perm::factorial;
use surjalg::surjections::{hom_permutation_character, hom_set, kappa1, kappa2, orbit, orbits, orbits_second_level, stabilizer};

#[test]
fn orbits_are_kernel_types() {
    for r in 0..=6 {
        for k in 0..=r {
            let exactly_k = enumerate_partitions(r).iter().filter(|p| p.len() == k).count();
            assert_eq!(orbits(r, k).len(), exactly_k, "hom({r},{k})");
        }
    }
}

#[test]
fn second_level_orbit_sizes() {
    for k in 2..=5 {
        let (o1, o2) = orbits_second_level(k).unwrap();
        assert_eq!((o1.len() + o2.len()) as u64, factorial(k) * stirling2(k + 2, k), "k = {k}");
    }
    assert!(orbits_second_level(1).is_err());
}

#[test]
fn orbit_stabilizer() {
    for k in 2..=4 {
        for f in [kappa1(k).unwrap(), kappa2(k).unwrap()] {
            let n = orbit(&f).len() * stabilizer(&f).len();
            assert_eq!(n as u64, factorial(k) * factorial(k + 2), "{f}");
        }
        assert_eq!(stabilizer(&kappa1(k).unwrap()).len() as u64, factorial(k - 1) * 6);
        assert_eq!(stabilizer(&kappa2(k).unwrap()).len() as u64, factorial(k - 2) * 8);
    }
}

#[test]
fn hom_character_dimension() {
    for r in 0..=5 {
        for k in 0..=r {
            let d = decompose(&hom_permutation_character(r, k)).unwrap();
            assert_eq!(d.total_dimension(), hom_set(r, k).len() as u64, "hom({r},{k})");
        }
    }
}
