// The cross-method consistency table.
use surjalg::oracle::BuildOptions;
use surjalg::verify::verify;
use surjalg::Result;

pub fn run_example() -> Result<()> {
    for check in verify(3, BuildOptions::default(), &mut |_| {})? {
        println!("{}  {}  {}", if check.passed { "PASS" } else { "FAIL" }, check.name, check.detail);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
