//! Tame inertia weights of a character of level 2 seen through a 2x2 matrix over F_5.

use envlab::fieldcore::{Field, Mat, MeatAxeConfig};
use envlab::tame::{bounded_weights_check, tame_weights_of_rep, TameCharacter};

fn main() -> envlab::Result<()> {
    let chi = TameCharacter::new(5, 2, 13)?;
    println!("theta_2^13 has digits {:?}", chi.digits());

    // the companion matrix of the minimal polynomial of gamma^13 over F_5
    let f25 = Field::new(5, 2)?;
    let f5 = Field::new(5, 1)?;
    let p = f25.minimal_polynomial(f25.exp(13));
    let c = p.coeffs();
    let g = Mat::from_ints(&f5, 2, 2, &[0, -(c[0] as i64), 1, -(c[1] as i64)])?;
    let cfg = MeatAxeConfig::default();
    println!("weights {:?}", tame_weights_of_rep(&g, &cfg)?.digits);
    for n2 in [2, 3] {
        println!("weights in [0, {n2}]: {}", bounded_weights_check(&g, 0, n2, &cfg)?);
    }
    Ok(())
}
