//! Macdonald polynomials at `t = 0` in types A and C, computed both from the
//! quantum alcove model and from the charge statistic, plus the bijections
//! between the two models.

pub mod chain;
pub mod error;
pub mod fillings;
pub mod folding;
pub mod kn;
pub mod poly;
pub mod qbg;
pub mod verify;
pub mod weyl;

pub use chain::{omega_chain, MuChain};
pub use error::{Error, Result};
pub use fillings::Filling;
pub use folding::{enumerate_admissible, FoldingPair};
pub use poly::{BigPoly, IntPoly, LaurentPoly, WidePoly};
pub use qbg::{edge_by_criterion, edge_by_length, EdgeKind};
pub use weyl::{Family, Letter, LieType, Partition, RootLabel, WeylElement};
