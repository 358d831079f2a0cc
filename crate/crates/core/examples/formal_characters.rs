//! Two tori that look different but are conjugate, and two that are not.

use envlab::charlattice::{fc_equivalent, FormalCharacter, DEFAULT_BUDGET};

fn main() -> envlab::Result<()> {
    let std = FormalCharacter::from_scalars(&[1, -1]);
    let product = std.tensor(&std);
    let so4 = FormalCharacter::new(2, vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]])?;
    println!("std x std: {:?}", product.normalize().weights());
    println!("SO_4 std:  {:?}", so4.normalize().weights());
    println!("equivalent: {:?}", fc_equivalent(&product, &so4, DEFAULT_BUDGET));

    let sym3 = FormalCharacter::from_scalars(&[3, 1, -1, -3]);
    println!("S^3(std) vs SO_4 std: {:?}", fc_equivalent(&sym3, &so4, DEFAULT_BUDGET));
    println!("S^3(std) predicates: {:?}", sym3.predicates());
    Ok(())
}
