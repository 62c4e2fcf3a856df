// Jordan-Holder factors and radical layers of indecomposable projectives,
// computed from traces on the algebra itself.
use surjalg::oracle::{AlgebraRep, ModuleRep};
use surjalg::{Partition, Result};

pub fn run_example() -> Result<()> {
    let alg = AlgebraRep::build(4)?;
    for lambda in alg.simples().into_iter().filter(|l| l.size() >= 2) {
        let p = ModuleRep::projective(&alg, &lambda)?;
        let layers: Vec<String> = p
            .radical_layers()?
            .iter()
            .map(|layer| layer.iter().map(|(l, m)| format!("{m}x{l}")).collect::<Vec<_>>().join(" "))
            .collect();
        println!("P({lambda}), dim {}: {}", p.dim(), layers.join(" | "));
    }
    let ds: Partition = Partition::ds(4)?;
    println!("dim S({ds}) = {}", ModuleRep::simple(&alg, &ds)?.dim());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
