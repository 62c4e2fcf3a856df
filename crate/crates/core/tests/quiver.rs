use surjalg::partitions::enumerate_partitions;
use surjalg::quiver::{longest_path, quiver};
use surjalg::Partition;

#[test]
fn longest_paths() {
    assert_eq!(longest_path(&quiver(1)).unwrap(), 0);
    assert_eq!(longest_path(&quiver(4)).unwrap(), 3);
    assert_eq!(longest_path(&quiver(6)).unwrap(), 5);
}

#[test]
fn arrows_go_one_level_down() {
    let q = quiver(6);
    for &(s, t) in q.arrows().keys() {
        assert_eq!(q.vertices()[s].size(), q.vertices()[t].size() + 1);
    }
}

#[test]
fn boundary_vertices() {
    let n = 5;
    let q = quiver(n);
    for k in 1..=n {
        assert_eq!(q.out_degree(&Partition::sgn(k)), 0);
    }
    assert_eq!(q.out_degree(&"[1]".parse().unwrap()), 0);
    let top = enumerate_partitions(n);
    assert!(q.arrows().keys().all(|&(_, t)| !top.contains(&q.vertices()[t])));
}

#[test]
fn ds_chain_reaches_one() {
    let q = quiver(6);
    for k in 3..=6 {
        assert!(q.multiplicity(&Partition::ds(k).unwrap(), &Partition::ds(k - 1).unwrap()) > 0);
    }
    assert_eq!(q.multiplicity(&"[2]".parse().unwrap(), &"[1]".parse().unwrap()), 1);
}

#[test]
fn json_lists_multiplicities() {
    let v = quiver(4).to_json();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 12);
    let total: u64 = v["arrows"].as_array().unwrap().iter().map(|a| a["multiplicity"].as_u64().unwrap()).sum();
    assert_eq!(total, 15);
}
