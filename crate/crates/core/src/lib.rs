//! Exact arithmetic for the Pappus (9_3) configuration.
//!
//! Scenes are built over the rationals, over Q(a, b) with the two parameters
//! kept symbolic, or over Q(w) with `w^2 = w - 1`. On top of that the crate
//! dualizes the six Pappus lines and reconstructs them, counts multiple
//! points of line arrangements, finds Pappus lines through the meet of the
//! two carriers, and classifies the super Pappus parameters.
//!
//! ```
//! use pappus::field::int;
//! use pappus::scene::PappusScene;
//!
//! let scene = PappusScene::canonical(int(3), int(5), true).unwrap();
//! assert!(scene.pappus_holds().unwrap());
//! ```

pub mod analysis;
pub mod cli;
pub mod dual;
pub mod error;
pub mod field;
pub mod json;
pub mod lattice;
pub mod perm;
pub mod projective;
pub mod render;
pub mod report;
pub mod sampling;
pub mod scene;

pub use error::{Error, FieldError, Result};
pub use perm::Perm3;
