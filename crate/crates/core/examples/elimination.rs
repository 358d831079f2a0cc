//! Narrowing Table A with weight predicates.

use envlab::pipeline::eliminate_cases;

fn main() -> envlab::Result<()> {
    let queries: [(usize, &[&str]); 4] = [
        (4, &["rank=1"]),
        (5, &["zero_weight_count=0"]),
        (6, &["self_dual", "rank=3"]),
        (6, &["midpoint_relation", "not_self_dual"]),
    ];
    for (n, constraints) in queries {
        let rows = eliminate_cases(n, constraints)?;
        let labels: Vec<&str> = rows.iter().map(|r| r.label.as_str()).collect();
        println!("n = {n}, {constraints:?}: {labels:?}");
    }
    Ok(())
}
