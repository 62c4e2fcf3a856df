// Murnaghan-Nakayama character table, Young restriction and decomposition.
use surjalg::characters::{character_table, decompose, restrict_to_young, ClassFunction};
use surjalg::partitions::enumerate_partitions;
use surjalg::{Partition, Result};

pub fn run_example() -> Result<()> {
    let k = 4;
    let classes: Vec<String> = enumerate_partitions(k).iter().map(ToString::to_string).collect();
    println!("{:>10} {}", "", classes.iter().map(|c| format!("{c:>10}")).collect::<String>());
    for (lambda, row) in enumerate_partitions(k).iter().zip(character_table(k)) {
        println!("{:>10} {}", lambda.to_string(), row.iter().map(|v| format!("{v:>10}")).collect::<String>());
    }

    let beta: Partition = "[3,1]".parse()?;
    let res = restrict_to_young(&ClassFunction::irreducible(&beta), 2, 2)?;
    println!("Res to S_2 x S_2 of chi^{beta}:");
    for ((left, right), m) in decompose(&res)?.as_product().unwrap() {
        println!("  {left} (x) {right}: {m}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
