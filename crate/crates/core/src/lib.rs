pub mod abelian;
pub mod engine;
pub mod james;
pub mod spaces;
pub mod tables;
pub mod toda;
