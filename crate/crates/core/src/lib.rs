//! Drawings of rooted plane trees and the objects in bijection with them,
//! together with the bounded regions they index in generic slices of the
//! `B_n` and `H_n` hyperplane arrangements.
//!
//! All arithmetic is exact. Every counting sequence is computed by more than
//! one independent route so the routes check each other.

pub mod arrangement;
pub mod enumerate;
pub mod maps;
pub mod objects;
pub mod series;
pub mod verify;

pub use objects::{
    BuildTreeCode, Drawing, LabeledTree, Object, ObjectError, OrderedPartition, PlaneTree, Sign,
    SignedPermutation,
};
