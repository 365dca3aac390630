pub mod backends;
pub mod chain;
pub mod corpus;
pub mod eval;
pub mod llm;
pub mod par;
pub mod prompts;
pub mod sandbox;
pub mod semantics;
pub mod transforms;
pub mod ttc;

pub use transforms::{applies, apply_oracle, TaskClass, TaskId, TaskSpec};
