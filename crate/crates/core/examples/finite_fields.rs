//! Arithmetic in F_49, then a MeatAxe decomposition of the permutation module of S3 over F_7.

use envlab::fieldcore::meataxe::{composition_factors, is_absolutely_irreducible};
use envlab::fieldcore::{Field, MeatAxeConfig, ModuleRep};
use envlab::groups;

fn main() -> envlab::Result<()> {
    let f49 = Field::new(7, 2)?;
    let g = f49.generator();
    println!("F_49: generator {g} with minimal polynomial {:?}", f49.minimal_polynomial(g).coeffs());
    println!("g^24 = {}, g^48 = {}", f49.pow(g, 24), f49.pow(g, 48));

    let f7 = Field::new(7, 1)?;
    let s3 = groups::symmetric(&f7, 3).materialize(100)?;
    let perm = ModuleRep::natural(&s3);
    let cfg = MeatAxeConfig::default();
    for factor in composition_factors(&perm, &cfg)? {
        println!(
            "factor of dimension {} (absolutely irreducible: {})",
            factor.dim(),
            is_absolutely_irreducible(&factor, &cfg)?
        );
    }
    Ok(())
}
