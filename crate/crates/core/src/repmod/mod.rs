//! Explicit representations of Dynkin quivers, Kostant partitions and the
//! orbit-closure order on `E_β`.

pub mod kostant;
pub mod oracle;
pub mod rep;

pub use kostant::{
    enumerate_kp, f_bijection, f_inverse, f_order_report, HomTable, KostantPartition, KostantPartitionJson,
    KpPoset, OrderReport,
};
pub use oracle::orbit_closure_order;
pub use rep::{euler_form, indecomposable, rep_space_dim, QuiverRep};
