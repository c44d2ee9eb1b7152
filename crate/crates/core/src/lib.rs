pub mod chow;
pub mod corpus;
pub mod linalg;
pub mod matroid;
pub mod rank_nullity;
pub mod tautological;
pub mod uniform;
