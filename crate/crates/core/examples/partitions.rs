// Partitions in the global order, box removal and horizontal-strip addition.
use surjalg::partitions::{add_boxes_no_two_same_column, enumerate_partitions, hook_dimension, partitions_up_to, removable_boxes};
use surjalg::{Partition, Result};

pub fn run_example() -> Result<()> {
    for k in 0..=4 {
        let parts: Vec<String> = enumerate_partitions(k).iter().map(ToString::to_string).collect();
        println!("k = {k}: {}", parts.join(" "));
    }
    println!("{} simples for n = 4", partitions_up_to(4).len());

    let lambda: Partition = "[2,1]".parse()?;
    let removed: Vec<String> = removable_boxes(&lambda).iter().map(ToString::to_string).collect();
    println!("remove a box from {lambda}: {}", removed.join(" "));
    let added: Vec<String> = add_boxes_no_two_same_column(&lambda, 2).iter().map(ToString::to_string).collect();
    println!("add two boxes to {lambda}, different columns: {}", added.join(" "));
    println!("dim S^{lambda} = {}", hook_dimension(&lambda));
    println!("ds_4 = {}, sgn_4 = {}", Partition::ds(4)?, Partition::sgn(4));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
