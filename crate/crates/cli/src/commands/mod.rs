mod code;
mod counterexample;
mod sum;
mod sweep;
mod verify;

pub use code::code;
pub use counterexample::counterexample;
pub use sum::sum;
pub use sweep::sweep;
pub use verify::verify;
