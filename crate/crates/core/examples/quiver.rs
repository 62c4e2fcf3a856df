// The quiver as a DOT graph and its longest path.
use surjalg::quiver::{longest_path, quiver};
use surjalg::Result;

pub fn run_example() -> Result<()> {
    let q = quiver(4);
    print!("{}", q.to_dot());
    println!("{} vertices, {} arrows, longest path {}", q.vertices().len(), q.arrow_count(), longest_path(&q)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
