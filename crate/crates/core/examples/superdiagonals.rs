// Box-move rules for entries one and two levels apart.
use surjalg::cartan::{cartan_entry_character, cartan_first_superdiagonal, cartan_second_superdiagonal};
use surjalg::partitions::enumerate_partitions;
use surjalg::Result;

pub fn run_example() -> Result<()> {
    for beta in enumerate_partitions(2) {
        for alpha in enumerate_partitions(3) {
            println!("C({beta}, {alpha}) = {}", cartan_first_superdiagonal(&beta, &alpha)?);
        }
        for alpha in enumerate_partitions(4) {
            let rule = cartan_second_superdiagonal(&beta, &alpha)?;
            let chi = cartan_entry_character(&beta, &alpha)?;
            println!("C({beta}, {alpha}) = {rule} (character {chi})");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
