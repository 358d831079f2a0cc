//! Prints the irreducible semisimple subgroups of GL_n for 2 <= n <= 6.

use envlab::smallrep::table_a;

fn main() -> envlab::Result<()> {
    for n in 2..=6 {
        for row in table_a(n)? {
            println!(
                "{:<12} {:<10} {:<10} self-dual {:<5} zeros {}",
                row.label, row.group, row.rep, row.self_dual, row.zero_weight_count
            );
        }
    }
    Ok(())
}
