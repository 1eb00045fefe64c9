pub mod catalog;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod positivity;
pub mod seshadri;
pub mod oracle;
