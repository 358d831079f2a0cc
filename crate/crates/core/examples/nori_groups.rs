//! G+, the Nori points and the Lie algebra for SL_2(F_13) and for a split torus.

use envlab::fieldcore::Field;
use envlab::groups::{diagonal_torus, sl2};
use envlab::nori::{lie_rank_estimate, nori_points, NoriConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> envlab::Result<()> {
    let f = Field::new(13, 1)?;
    let cfg = NoriConfig::default();
    for (name, g) in [("SL_2(F_13)", sl2(&f)), ("diagonal torus", diagonal_torus(&f, 2))] {
        let r = nori_points(&g, &cfg)?;
        println!("{name}: |G| = {}, |G+| = {}, |S(F_13)| = {}", r.order, r.plus_order(), r.nori_order());
        if !r.lie_algebra.is_empty() {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let lie = lie_rank_estimate(&r.lie_algebra, cfg.rank_samples, &mut rng)?;
            println!("  Lie algebra dim {}, rank estimate {}", lie.dim, lie.rank_estimate);
        }
        for w in &r.warnings {
            println!("  warning: {w}");
        }
    }
    Ok(())
}
