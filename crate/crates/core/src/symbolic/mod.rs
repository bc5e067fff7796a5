//! Symbolic pointed-space expressions and the decomposition emitters.

mod emit;
mod expr;
mod rewrite;
mod series;

pub use emit::{
    loop_decomposition_cone, loop_decomposition_polyjoin, loop_decomposition_pushout,
    PolyJoinLoopDecomposition, PolyJoinLoopFactor, PushoutAtoms, PushoutVariant,
};
pub use expr::{parse_expr, SpaceExpr};
pub use rewrite::{simplify, RewriteStep, RewriteTrace, SimplifyResult};
pub use series::rational_rank_series;
