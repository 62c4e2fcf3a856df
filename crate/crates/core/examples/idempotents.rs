// Young symmetrizers and seminormal idempotents in the group algebra.
use surjalg::group_algebra::{complete_idempotents, corner_dimension_by_rank, young_symmetrizer, GroupElement};
use surjalg::partitions::enumerate_partitions;
use surjalg::Result;

pub fn run_example() -> Result<()> {
    let k = 3;
    for lambda in enumerate_partitions(k) {
        let e = young_symmetrizer(&lambda);
        println!("{lambda}: idempotent {}, dim eAe = {}", &e * &e == e, corner_dimension_by_rank(&e));
    }
    let all = complete_idempotents(k)?;
    let sum = all.iter().fold(GroupElement::zero(k), |acc, (_, e)| &acc + e);
    for (t, _) in &all {
        println!("  tableau {:?}", t.rows());
    }
    println!("{} seminormal idempotents, sum is 1: {}", all.len(), sum == GroupElement::one(k));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
