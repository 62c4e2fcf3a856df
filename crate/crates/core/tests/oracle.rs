use surjalg::oracle::{algebra_dimension, AlgebraRep, BuildOptions, ModuleRep, Oracle};
use surjalg::quiver::quiver;
use surjalg::tableaux::Multiset;
use surjalg::{Error, Partition};

#[test]
fn ext_one_counts_arrows() {
    for n in 1..=4 {
        let o = Oracle::build(n).unwrap();
        let q = quiver(n);
        for res in o.all_resolutions().unwrap() {
            for j in q.vertices() {
                assert_eq!(res.ext_dim(j, 1).unwrap() as u64, q.multiplicity(res.simple(), j), "{} -> {j}", res.simple());
            }
        }
    }
}

#[test]
fn resolutions_step_down_and_respect_paths() {
    for n in 1..=4 {
        let o = Oracle::build(n).unwrap();
        let q = quiver(n);
        let from = q.longest_paths_from().unwrap();
        for res in o.all_resolutions().unwrap() {
            let level = res.simple().size();
            for (m, term) in res.terms().iter().enumerate() {
                for (j, &c) in term.iter().enumerate() {
                    if c > 0 {
                        assert!(res.index()[j].size() + m <= level, "{} P_{m}", res.simple());
                    }
                }
            }
            assert!(res.length().unwrap() <= from[q.position(res.simple()).unwrap()]);
        }
    }
}

#[test]
fn truncated_resolutions_say_so() {
    let o = Oracle::build(3).unwrap();
    let res = o.minimal_resolution(&"[2,1]".parse().unwrap(), 1).unwrap();
    assert_eq!(res.terms().len(), 2);
    assert!(res.is_truncated());
    assert!(matches!(res.length(), Err(Error::Truncated(..))));
}

#[test]
fn differentials_compose_to_zero_shape() {
    let o = Oracle::build(3).unwrap();
    let res = o.minimal_resolution(&"[2,1]".parse().unwrap(), 4).unwrap();
    let d1 = res.differential(1).unwrap();
    assert_eq!(d1.target, vec!["[2,1]".parse::<Partition>().unwrap()]);
    assert_eq!(d1.source.len(), 2);
    assert!(res.differential(0).is_none());
}

#[test]
fn ds_five_factors() {
    let alg = AlgebraRep::build(5).unwrap();
    let ds = Partition::ds(5).unwrap();
    let want: Multiset = [(ds.clone(), 1), (Partition::ds(4).unwrap(), 1), (Partition::sgn(4), 1)]
        .into_iter()
        .collect();
    assert_eq!(ModuleRep::projective(&alg, &ds).unwrap().composition_factors().unwrap(), want);
}

#[test]
fn guard_and_force() {
    let err = AlgebraRep::build(6).err().unwrap();
    assert!(matches!(err, Error::Refused { n: 6, guard: 5, dim: 5317 }));
    let low = BuildOptions { guard: 2, force: false };
    assert!(AlgebraRep::build_with(3, low, &mut |_| {}).is_err());
    let forced = BuildOptions { guard: 2, force: true };
    assert_eq!(AlgebraRep::build_with(3, forced, &mut |_| {}).unwrap().dim() as u64, algebra_dimension(3));
}

#[test]
fn simple_modules_are_irreducible_specht_modules() {
    let alg = AlgebraRep::build(4).unwrap();
    for lambda in alg.simples() {
        let s = ModuleRep::simple(&alg, &lambda).unwrap();
        assert_eq!(s.dim() as u64, surjalg::partitions::hook_dimension(&lambda));
        let factors = s.composition_factors().unwrap();
        assert_eq!(factors, [(lambda.clone(), 1)].into_iter().collect::<Multiset>());
    }
}
