// Littlewood-Richardson coefficients from lattice-word tableaux, checked
// against induced characters.
use surjalg::characters::{induce_product, inner_product, ClassFunction};
use surjalg::tableaux::{is_lattice, lr_coefficient, lr_expand, pieri_expand};
use surjalg::{Partition, Result};

pub fn run_example() -> Result<()> {
    let lambda: Partition = "[2,1]".parse()?;
    let delta: Partition = "[2,1]".parse()?;
    let product = induce_product(&ClassFunction::irreducible(&lambda), &ClassFunction::irreducible(&delta))?;
    println!("s{lambda} * s{delta}:");
    for (gamma, c) in lr_expand(&lambda, &delta) {
        let by_char = inner_product(&ClassFunction::irreducible(&gamma), &product)?;
        println!("  {gamma:<10} {c}   (character inner product {by_char})");
    }
    let gamma: Partition = "[3,2,1]".parse()?;
    println!("c^{gamma}_{lambda},{delta} = {}", lr_coefficient(&lambda, &delta, &gamma)?);

    let pieri: Vec<String> = pieri_expand(&"[2]".parse()?, 3).keys().map(ToString::to_string).collect();
    println!("Pieri [2] x [3]: {}", pieri.join(" "));

    for word in [[1, 1, 2, 2, 3], [1, 1, 3, 2, 2]] {
        println!("row word {word:?} lattice: {}", is_lattice(&word));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
