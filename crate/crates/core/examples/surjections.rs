// Hom-sets of the surjection category, the S_k x S_r action, orbits and
// stabilizers.
use surjalg::oracle::stirling2;
use surjalg::perm::factorial;
use surjalg::surjections::{hom_set, kappa1, kappa2, kernel_type, orbits, orbits_second_level, stabilizer};
use surjalg::Result;

pub fn run_example() -> Result<()> {
    for (r, k) in [(3, 2), (4, 2), (5, 3)] {
        let count = hom_set(r, k).len() as u64;
        println!("|hom({r},{k})| = {count} = {}! * S({r},{k})", k);
        assert_eq!(count, factorial(k) * stirling2(r, k));
        let sizes: Vec<usize> = orbits(r, k).iter().map(Vec::len).collect();
        println!("  orbit sizes {sizes:?}");
    }
    let k = 3;
    let (o1, o2) = orbits_second_level(k)?;
    println!("hom({}, {k}): |O1| = {}, |O2| = {}", k + 2, o1.len(), o2.len());
    for f in [kappa1(k)?, kappa2(k)?] {
        println!("  {f}: kernel type {}, stabilizer order {}", kernel_type(&f), stabilizer(&f).len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
