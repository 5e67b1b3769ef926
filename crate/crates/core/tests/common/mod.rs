//! Shared helpers for the integration tests.
#![allow(dead_code)]

pub mod graph_oracles;
pub mod criteria;
