// Minimal projective resolutions and Ext dimensions.
use surjalg::oracle::Oracle;
use surjalg::{Partition, Result};

pub fn run_example() -> Result<()> {
    let n = 4;
    let oracle = Oracle::build(n)?;
    let ds = Partition::ds(n)?;
    let res = oracle.minimal_resolution(&ds, oracle.default_max_len())?;
    for (m, term) in res.terms().iter().enumerate() {
        let summands: Vec<String> = res
            .index()
            .iter()
            .zip(term)
            .filter(|(_, &c)| c > 0)
            .map(|(p, c)| if *c == 1 { format!("P{p}") } else { format!("{c}P{p}") })
            .collect();
        println!("P_{m} = {}", summands.join(" + "));
    }
    println!("pd S({ds}) = {}", res.length()?);
    let one: Partition = "[1]".parse()?;
    println!("dim Ext^{}(S({ds}), S({one})) = {}", n - 1, res.ext_dim(&one, n - 1)?);
    println!("pd S({}) = {}", Partition::sgn(n), oracle.projective_dimension(&Partition::sgn(n))?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
