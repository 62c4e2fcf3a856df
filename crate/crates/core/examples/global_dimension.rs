// Global dimension for small n.
use surjalg::oracle::Oracle;
use surjalg::Result;

pub fn run_example() -> Result<()> {
    for n in 0..=4 {
        let oracle = Oracle::build(n)?;
        println!("n = {n}: basic algebra dim {}, global dimension {}", oracle.basic().dim(), oracle.global_dimension()?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
