//! Command-line front end: HGR input, connectivity commands, JSON reports.

pub mod app;
pub mod hgr;
pub mod report;
pub mod verify;
