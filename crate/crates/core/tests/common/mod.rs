#![allow(dead_code)]

pub mod random;
pub mod chase;
pub mod fixtures;
pub mod listings;
