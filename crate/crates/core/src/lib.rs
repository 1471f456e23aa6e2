pub mod exact_kernel;
pub mod polyhedron;
pub mod lattice_free;
pub mod cutlib;
pub mod relaxation;
pub mod closure_prover;
pub mod corpus;
