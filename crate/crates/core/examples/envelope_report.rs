//! Envelope report for std x std of SL_2(F_11) acting on F_11^4.

use envlab::fieldcore::{Field, FinMatGroup};
use envlab::groups::sl2;
use envlab::io::GroupInput;
use envlab::pipeline::{envelope_report, summary, PipelineConfig};

fn main() -> envlab::Result<()> {
    let f = Field::new(11, 1)?;
    let gens = sl2(&f).generators().iter().map(|g| g.kron(g)).collect();
    let g = FinMatGroup::new(&f, 4, gens)?;
    let report = envelope_report(&GroupInput::from_group(&g), &PipelineConfig::default())?;
    print!("{}", summary(&report));
    Ok(())
}
