// The Cartan matrix by characters, by the closed-form rules and by the
// algebra oracle.
use surjalg::cartan::{full_cartan, full_cartan_with, FillPolicy, Method};
use surjalg::oracle::BuildOptions;
use surjalg::Result;

pub fn run_example() -> Result<()> {
    let n = 4;
    let character = full_cartan(n, Method::Character)?;
    print!("{}", character.to_csv());
    let oracle = full_cartan(n, Method::Oracle)?;
    println!("oracle agrees: {}", oracle == character);
    let closed = full_cartan_with(n, Method::ClosedForm, FillPolicy::Unknown, BuildOptions::default())?;
    let unknown = closed.rows().iter().flatten().filter(|e| e.is_none()).count();
    println!("closed form leaves {unknown} entries unknown");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
