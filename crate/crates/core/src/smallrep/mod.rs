//! Classical root data of small rank, highest-weight representations, and the table of
//! irreducible semisimple subgroups of `GL_n` for `2 ≤ n ≤ 6`.

pub mod rootdata;
pub mod table;
pub mod weights;

pub use rootdata::{Family, RootSystem, SimpleType};
pub use table::{table_a, TableARow};
pub use weights::{freudenthal_weights, is_self_dual, weyl_dimension, IrrepLabel};
