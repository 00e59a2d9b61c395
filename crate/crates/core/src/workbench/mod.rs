//! Generators, the JSON instance format, DOT export and the command line.

pub mod cli;
pub mod dot;
pub mod gen;
pub mod instance;

pub use dot::{to_dot, to_dot_annotated, DotError, DotView};
pub use gen::{gen_family, gen_path, gen_subtree, gen_tree, FamilyMode, GenError};
pub use instance::{Instance, InstanceError};
