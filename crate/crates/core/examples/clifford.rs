//! Clifford decompositions of the irreducibles of S4 over its normal subgroups.

use envlab::fieldcore::MeatAxeConfig;
use envlab::groups::corpus;
use envlab::mackey::{clifford_decompose, irreducible_modules, is_normal, subgroups};

fn main() -> envlab::Result<()> {
    let s4 = corpus().into_iter().find(|e| e.name == "S4").unwrap();
    let cfg = MeatAxeConfig::default();
    let irr = irreducible_modules(&s4.group, &s4.module_field, &cfg)?;
    for sub in subgroups(&s4.group)? {
        if !is_normal(&sub)? || sub.index() == 1 || sub.subgroup().order() == Some(1) {
            continue;
        }
        for v in &irr {
            let s = clifford_decompose(&s4.group, sub.subgroup().generators(), v, &cfg)?;
            println!(
                "|N| = {:>2}, dim V = {}: e = {}, f = {}, dim U = {}",
                sub.subgroup().order().unwrap(),
                v.dim(),
                s.e,
                s.f,
                s.factor_dim()
            );
        }
    }
    Ok(())
}
