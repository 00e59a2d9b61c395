pub mod derive;
pub mod graph;
pub mod mixed;
pub mod oracle;
pub mod transforms;
pub mod tree;
pub mod workbench;
