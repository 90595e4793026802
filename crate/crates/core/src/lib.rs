pub mod algebra;
pub mod checks;
pub mod exact;
pub mod fields;
pub mod free_field;
pub mod harness;
pub mod laurent;
pub mod lattice;
pub mod module;
pub mod rewrite;
pub mod whittaker;

pub use algebra::{AlgebraId, Family, GenSymbol};
pub use exact::{LinComb, Rational};
pub use laurent::{Convention, LaurentData};
pub use module::{Module, ModuleError, TruncationBox};
