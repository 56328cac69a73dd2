//! Hall-Littlewood-Schubert series: construction, specializations, and a
//! brute-force lattice oracle.

pub mod algebra;
pub mod tableaux;
pub mod poset;
pub mod hls;
pub mod par;
pub mod special;
pub mod oracle;
