//! Construction, analysis, and gradient-based search of rigid-molecule
//! crystal structures.
//!
//! A crystal with one rigid molecule in the asymmetric unit (Z' = 1) is
//! reduced to 12 continuous parameters: six cell parameters, the fractional
//! position of the molecule centroid in the asymmetric unit, and a rotation
//! vector orienting the molecule against its standardized pose, plus a
//! discrete handedness and the space group. The crate builds unit cells and
//! analysis clusters from these parameters, evaluates intermolecular
//! potentials (Lennard-Jones, a bounded SiLU-based potential, screened
//! electrostatics) and radial-distribution-function distances over them, and
//! differentiates the whole pipeline with forward-mode dual numbers to drive
//! multi-stage structure optimization.

pub mod cif;
pub mod crystal;
pub mod dual;
pub mod elements;
pub mod lattice;
pub mod molecule;
pub mod potentials;
pub mod rdf;
pub mod search;
pub mod symmetry;

mod vecmath;

pub use crystal::{
    build_cluster, build_unit_cell, construct_radial_graph, extract_parameters,
    extract_parameters_from_p1, pose_aunit, CrystalCluster, CrystalError, CrystalParameters, Edge,
    UnitCell,
};
pub use dual::{Dual, Scalar};
pub use lattice::{
    box_to_cell, cart_to_frac, cell_to_box, frac_to_cart, packing_coefficient, BoxVectors,
    CellParameters, LatticeError,
};
pub use molecule::{Molecule, MoleculeError, StandardPose};
pub use potentials::{
    crystal_energy, es_energy, lj_energy, silu_energy, PotentialError, PotentialKind,
    PotentialParams,
};
pub use rdf::{compute_rdf, emd_pair, emd_total, rdf_emd, RdfError, RdfProfile};
pub use search::{
    optimize_stage, run_search, sample_random_crystal, stage_gradient, stage_loss, OptStage,
    OptimTarget, OptimizerKind, SearchConfig, SearchError, SearchRecord,
};
pub use symmetry::{get_space_group, get_space_group_by_symbol, SpaceGroup, SymOp, SymmetryError};
