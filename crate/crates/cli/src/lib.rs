pub mod document;
pub mod emit;
pub mod groupspec;
pub mod reference;
pub mod verify;
