//! Cross-method consistency checks for one `n`.

use serde::Serialize;

use crate::cartan::{cartan_from_oracle, full_cartan, full_cartan_with, FillPolicy, Method};
use crate::error::Result;
use crate::oracle::{BuildOptions, Oracle};
use crate::quiver::{longest_path, quiver};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Runs every check; an `Err` means the oracle could not be built (guard
/// refusal or a failed certificate), not that a check disagreed.
pub fn verify(n: usize, options: BuildOptions, progress: &mut dyn FnMut(&str)) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    progress("character Cartan matrix");
    let character = full_cartan(n, Method::Character)?;
    let closed = full_cartan_with(n, Method::ClosedForm, FillPolicy::Unknown, options)?;

    let mut known = 0;
    let mut bad = Vec::new();
    for r in 0..character.size() {
        for c in 0..character.size() {
            if let Some(v) = closed.entry(r, c) {
                known += 1;
                if Some(v) != character.entry(r, c) {
                    bad.push(format!("({}, {})", character.index()[r], character.index()[c]));
                }
            }
        }
    }
    checks.push(Check::new(
        "cartan: closed form = character",
        bad.is_empty(),
        if bad.is_empty() { format!("{known} entries agree") } else { format!("differ at {}", bad.join(" ")) },
    ));

    let oracle = Oracle::build_with(n, options, progress)?;
    checks.push(Check::new(
        "oracle certificates",
        true,
        format!("{} certificates passed", oracle.algebra().certificates().len()),
    ));
    let by_dims = cartan_from_oracle(oracle.algebra())?;
    checks.push(Check::new(
        "cartan: oracle = character",
        by_dims == character,
        format!("{0}x{0} matrices", character.size()),
    ));
    let basic: Vec<Vec<u64>> = oracle
        .cartan_matrix()
        .into_iter()
        .map(|row| row.into_iter().map(|x| x as u64).collect())
        .collect();
    checks.push(Check::new(
        "cartan: basic algebra = character",
        basic == character.to_integers()?,
        "dim e_j B e_i",
    ));
    checks.push(Check::new(
        "cartan: block unitriangular",
        [&character, &closed, &by_dims].iter().all(|m| m.check_unitriangular().is_ok()),
        "all methods",
    ));

    progress("minimal resolutions");
    let resolutions = oracle.all_resolutions()?;
    let q = quiver(n);
    let mut mismatched = Vec::new();
    for res in &resolutions {
        for target in q.vertices() {
            let ext1 = res.ext_dim(target, 1)? as u64;
            if ext1 != q.multiplicity(res.simple(), target) {
                mismatched.push(format!("{} -> {}", res.simple(), target));
            }
        }
    }
    checks.push(Check::new(
        "quiver arrows = dim Ext^1",
        mismatched.is_empty(),
        if mismatched.is_empty() { format!("{} arrows", q.arrow_count()) } else { mismatched.join(", ") },
    ));

    let from = q.longest_paths_from()?;
    let mut pd_ok = true;
    let mut gdim = 0;
    for res in &resolutions {
        let pd = res.length()?;
        gdim = gdim.max(pd);
        pd_ok &= pd <= from[q.position(res.simple()).unwrap()];
    }
    checks.push(Check::new("pd S(i) <= longest path from i", pd_ok, ""));
    let lp = longest_path(&q)?;
    checks.push(Check::new(
        "global dimension <= longest path",
        gdim <= lp,
        format!("gdim {gdim}, longest path {lp}"),
    ));
    Ok(checks)
}
