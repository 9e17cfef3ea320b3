pub mod catalog;
pub mod engine;
pub mod linalg;
pub mod indec;
pub mod io;
pub mod quiver;
pub mod rep;
