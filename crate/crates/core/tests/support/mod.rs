#![allow(dead_code)]

pub mod bar;
pub mod minors;
