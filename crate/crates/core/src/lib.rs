//! Labelled graphs turned into text passwords.
//!
//! The pipeline runs graph → labelling → Topsnut-matrix → TB-paw, with
//! graphic groups and encrypted networks layered on top.

pub mod error;
pub mod graph;
pub mod groups;
pub mod label;
pub mod labelling;
pub mod matrix;
pub mod netcrypt;
pub mod rng;
pub mod tbpaw;

pub use error::{Error, Result};
pub use groups::{EveryZeroGraphicGroup, GroupLabelling, MatrixGroup};
pub use netcrypt::{EncryptedNetwork, SelfSimilarSeries};
pub use graph::{Graph, SplitResult, TreeClass, TreeKind};
pub use label::Label;
pub use labelling::{Labelling, Scheme, SetLabelling, VerificationReport};
pub use matrix::{Route, TopsnutMatrix};
pub use rng::Lcg;
pub use tbpaw::{Kind, NeighborPolicy, TbPaw};
