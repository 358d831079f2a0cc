//! Inducing characters from the rotations of a pentagon to the dihedral group of order 10.

use envlab::fieldcore::{Field, Mat, MeatAxeConfig, ModuleRep};
use envlab::groups;
use envlab::mackey::{induce, induced_commutant_dim, mackey_irreducible, SubgroupDatum};

fn main() -> envlab::Result<()> {
    let f2 = Field::new(2, 1)?;
    let f11 = Field::new(11, 1)?;
    let d10 = groups::dihedral(&f2, 5).materialize(100)?;
    let rotation = groups::perm_matrix(&f2, &[1, 2, 3, 4, 0]);
    let sub = SubgroupDatum::new(&d10, &[rotation])?;
    let cfg = MeatAxeConfig::default();
    // 3 has order 5 in F_11, so x -> 3 is faithful and x -> 1 is trivial
    for value in [3, 1] {
        let w = ModuleRep::new(sub.subgroup(), &f11, 1, vec![Mat::diagonal(&f11, &[value])])?;
        let verdict = mackey_irreducible(&sub, &w, &cfg)?;
        println!(
            "character {value}: Ind has dim {}, Mackey says irreducible = {}, commutant dim {}",
            induce(&sub, &w)?.dim(),
            verdict.irreducible,
            induced_commutant_dim(&sub, &w)?
        );
        println!("  certificate: {}", serde_json::to_string(&verdict.certificate).unwrap());
    }
    Ok(())
}
