// Inducing the trivial and the inflated sign character from D_4 to S_4.
use surjalg::characters::dihedral::{d4_elements, nu, sgn_bar, tr_bar};
use surjalg::characters::{decompose, induce_from_subgroup};
use surjalg::Result;

pub fn run_example() -> Result<()> {
    let d4 = d4_elements();
    for tau in &d4 {
        println!("{:?} -> nu = {:?}", tau.images(), nu(tau).images());
    }
    for (name, chi) in [("trivial", tr_bar()), ("sign via nu", sgn_bar())] {
        let ind = induce_from_subgroup(&d4, &chi)?;
        let parts: Vec<String> = decompose(&ind)?
            .as_sym()
            .unwrap()
            .iter()
            .map(|(l, m)| format!("{l}:{m}"))
            .collect();
        println!("Ind_D4^S4 {name} = {}", parts.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
