pub mod codes;
pub mod corpus;
pub mod error;
pub mod finite_field;
pub mod forms;
pub mod group;
pub mod io;
pub mod linalg;
pub mod repmod;
pub mod repro;
pub mod witt;

pub use error::{Error, Result};
pub use finite_field::{Field, FieldElem};
