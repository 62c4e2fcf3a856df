// The permutation character of S_k x S_r on hom(r, k) and its constituents,
// which are the Cartan entries between levels k and r.
use surjalg::characters::decompose;
use surjalg::surjections::hom_permutation_character;
use surjalg::Result;

pub fn run_example() -> Result<()> {
    let (r, k) = (4, 3);
    let chi = hom_permutation_character(r, k);
    println!("character of hom({r},{k}): {}", serde_json::to_string(&chi).unwrap());
    let d = decompose(&chi)?;
    for ((beta, alpha), m) in d.as_product().unwrap() {
        println!("  S^{beta} (x) S^{alpha}: {m}");
    }
    println!("total dimension {}", d.total_dimension());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
