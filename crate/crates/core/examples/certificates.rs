// Building the algebra and listing what was certified along the way.
use surjalg::oracle::AlgebraRep;
use surjalg::Result;

pub fn run_example() -> Result<()> {
    let alg = AlgebraRep::build(3)?;
    println!("dim = {}, radical dim = {}", alg.dim(), alg.radical_basis().len());
    for c in alg.certificates() {
        println!("{:<28} {}", c.name, c.detail);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
