//! Rigid molecules: construction from XYZ sources, derived geometric
//! properties, and the standardized pose used as the reference state for
//! crystal parameterization.
//!
//! The standard pose has the center of geometry at the origin and the
//! principal inertial axes aligned with the Cartesian axes, inertia
//! eigenvalues in descending order mapped to x, y, z. Eigenvector signs are
//! fixed by requiring a non-negative dot product with the vector from the
//! centroid to the farthest atom (falling back to the next-farthest atom on
//! a perpendicular tie); the third axis is the cross product of the first
//! two, so the rotation is always proper.

use std::path::Path;

use nalgebra::{Matrix3, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::elements;
use crate::vecmath::{cross3, dot3, matvec3, norm3, sub3, V3};

/// Default sample count for Monte Carlo volume estimation.
pub const DEFAULT_VOLUME_SAMPLES: usize = 100_000;
/// Default RNG seed for Monte Carlo volume estimation.
pub const DEFAULT_VOLUME_SEED: u64 = 0;

#[derive(Debug, Error)]
pub enum MoleculeError {
    #[error("molecule must contain at least one atom")]
    Empty,
    #[error("atomic number {0} outside supported range 1..=103")]
    BadAtomicNumber(u8),
    #[error("per-atom arrays have mismatched lengths")]
    LengthMismatch,
    #[error("non-finite coordinate on atom {0}")]
    NonFiniteCoordinate(usize),
    #[error("XYZ parse error on line {line}: {reason}")]
    XyzParse { line: usize, reason: String },
    #[error("degenerate inertia tensor: {0}")]
    DegenerateInertia(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A rigid molecule with derived geometric properties.
///
/// Immutable after construction; all operations are pure functions.
#[derive(Debug, Clone)]
pub struct Molecule {
    atomic_numbers: Vec<u8>,
    positions: Vec<[f64; 3]>,
    partial_charges: Vec<f64>,
    mass: f64,
    radius: f64,
    volume: f64,
}

/// The rigid transform relating a molecule to its standard pose.
#[derive(Debug, Clone, Copy)]
pub struct StandardPose {
    /// Proper rotation (det = +1) mapping centered input coordinates onto
    /// the standard pose.
    pub rotation_to_standard: [[f64; 3]; 3],
    /// +1 if the sign-fixed natural eigenbasis was right-handed, -1 if an
    /// inversion was recorded.
    pub handedness: i8,
}

impl Molecule {
    /// Builds a molecule and computes mass, radius, and Monte Carlo volume.
    pub fn new(
        atomic_numbers: Vec<u8>,
        positions: Vec<[f64; 3]>,
        partial_charges: Option<Vec<f64>>,
    ) -> Result<Self, MoleculeError> {
        if atomic_numbers.is_empty() {
            return Err(MoleculeError::Empty);
        }
        if atomic_numbers.len() != positions.len() {
            return Err(MoleculeError::LengthMismatch);
        }
        for &z in &atomic_numbers {
            if z == 0 || z > elements::MAX_ATOMIC_NUMBER {
                return Err(MoleculeError::BadAtomicNumber(z));
            }
        }
        for (i, p) in positions.iter().enumerate() {
            if !p.iter().all(|x| x.is_finite()) {
                return Err(MoleculeError::NonFiniteCoordinate(i));
            }
        }
        let partial_charges = match partial_charges {
            Some(q) => {
                if q.len() != atomic_numbers.len() {
                    return Err(MoleculeError::LengthMismatch);
                }
                q
            }
            None => vec![0.0; atomic_numbers.len()],
        };
        let mut mol = Molecule {
            atomic_numbers,
            positions,
            partial_charges,
            mass: 0.0,
            radius: 0.0,
            volume: 0.0,
        };
        mol.mass = mol
            .atomic_numbers
            .iter()
            .map(|&z| elements::mass(z).expect("validated above"))
            .sum();
        let c = mol.centroid();
        mol.radius = mol
            .positions
            .iter()
            .map(|p| norm3(sub3(*p, c)))
            .fold(0.0, f64::max);
        mol.volume = mol.compute_volume(DEFAULT_VOLUME_SAMPLES, DEFAULT_VOLUME_SEED);
        Ok(mol)
    }

    /// Parses a molecule from XYZ text: count line, comment line, then
    /// `El x y z` rows with an optional fifth partial-charge column.
    pub fn from_xyz_str(text: &str) -> Result<Self, MoleculeError> {
        let parse_err = |line: usize, reason: &str| MoleculeError::XyzParse {
            line,
            reason: reason.to_string(),
        };
        let mut lines = text.lines().enumerate();
        let (_, count_line) = lines
            .next()
            .ok_or_else(|| parse_err(1, "empty input"))?;
        let count: usize = count_line
            .trim()
            .parse()
            .map_err(|_| parse_err(1, "invalid atom count"))?;
        if count == 0 {
            return Err(parse_err(1, "atom count must be at least 1"));
        }
        lines.next().ok_or_else(|| parse_err(2, "missing comment line"))?;

        let mut atomic_numbers = Vec::with_capacity(count);
        let mut positions = Vec::with_capacity(count);
        let mut charges = Vec::with_capacity(count);
        let mut any_charge = false;
        for (idx, raw) in lines {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if atomic_numbers.len() == count {
                return Err(parse_err(
                    line_no,
                    &format!("expected {count} atom rows but found more"),
                ));
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 4 && tokens.len() != 5 {
                return Err(parse_err(
                    line_no,
                    "expected `element x y z` with optional charge column",
                ));
            }
            let z = elements::atomic_number(tokens[0]).ok_or_else(|| {
                parse_err(line_no, &format!("unknown element symbol '{}'", tokens[0]))
            })?;
            let mut xyz = [0.0; 3];
            for (k, tok) in tokens[1..4].iter().enumerate() {
                xyz[k] = tok
                    .parse()
                    .map_err(|_| parse_err(line_no, &format!("non-numeric coordinate '{tok}'")))?;
            }
            let q = if tokens.len() == 5 {
                any_charge = true;
                tokens[4]
                    .parse()
                    .map_err(|_| parse_err(line_no, &format!("non-numeric charge '{}'", tokens[4])))?
            } else {
                0.0
            };
            atomic_numbers.push(z);
            positions.push(xyz);
            charges.push(q);
        }
        if atomic_numbers.len() != count {
            return Err(MoleculeError::XyzParse {
                line: atomic_numbers.len() + 2,
                reason: format!(
                    "expected {count} atom rows but found {}",
                    atomic_numbers.len()
                ),
            });
        }
        Molecule::new(
            atomic_numbers,
            positions,
            if any_charge { Some(charges) } else { None },
        )
    }

    /// Reads a molecule from an XYZ file.
    pub fn from_xyz_file<P: AsRef<Path>>(path: P) -> Result<Self, MoleculeError> {
        let text = std::fs::read_to_string(path)?;
        Molecule::from_xyz_str(&text)
    }

    pub fn len(&self) -> usize {
        self.atomic_numbers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atomic_numbers.is_empty()
    }

    pub fn atomic_numbers(&self) -> &[u8] {
        &self.atomic_numbers
    }

    pub fn positions(&self) -> &[[f64; 3]] {
        &self.positions
    }

    pub fn partial_charges(&self) -> &[f64] {
        &self.partial_charges
    }

    /// Total mass in amu.
    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Maximum distance from the centroid to any atom, in angstroms.
    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Monte Carlo estimate of the van der Waals volume in cubic angstroms
    /// (default sample count and seed).
    pub fn volume(&self) -> f64 {
        self.volume
    }

    /// Center of geometry.
    pub fn centroid(&self) -> [f64; 3] {
        let n = self.positions.len() as f64;
        let mut c = [0.0; 3];
        for p in &self.positions {
            for k in 0..3 {
                c[k] += p[k];
            }
        }
        [c[0] / n, c[1] / n, c[2] / n]
    }

    /// Per-atom van der Waals radii.
    pub fn vdw_radii(&self) -> Vec<f64> {
        self.atomic_numbers
            .iter()
            .map(|&z| elements::vdw_radius(z))
            .collect()
    }

    /// Monte Carlo estimate of the volume of the union of van der Waals
    /// spheres, deterministic for a fixed seed.
    ///
    /// Sampling happens in the molecule's principal-axes frame, so the
    /// estimate is invariant under rigid transforms of the input (up to the
    /// documented convention at inertia degeneracies).
    pub fn compute_volume(&self, n_samples: usize, seed: u64) -> f64 {
        assert!(n_samples >= 1000, "n_samples must be at least 1000");
        let c = self.centroid();
        let frame = principal_frame(&self.positions).map(|f| f.rotation);
        let local: Vec<[f64; 3]> = self
            .positions
            .iter()
            .map(|p| {
                let d = sub3(*p, c);
                match &frame {
                    Some(r) => matvec3(r, d),
                    None => d,
                }
            })
            .collect();
        let radii = self.vdw_radii();

        let mut lo = [f64::INFINITY; 3];
        let mut hi = [f64::NEG_INFINITY; 3];
        for (p, r) in local.iter().zip(&radii) {
            for k in 0..3 {
                lo[k] = lo[k].min(p[k] - r);
                hi[k] = hi[k].max(p[k] + r);
            }
        }
        let extent = [hi[0] - lo[0], hi[1] - lo[1], hi[2] - lo[2]];
        let box_volume = extent[0] * extent[1] * extent[2];

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut hits = 0usize;
        for _ in 0..n_samples {
            let q = [
                lo[0] + rng.gen::<f64>() * extent[0],
                lo[1] + rng.gen::<f64>() * extent[1],
                lo[2] + rng.gen::<f64>() * extent[2],
            ];
            let inside = local.iter().zip(&radii).any(|(p, r)| {
                let d = sub3(q, *p);
                dot3(d, d) <= r * r
            });
            if inside {
                hits += 1;
            }
        }
        box_volume * hits as f64 / n_samples as f64
    }

    /// Returns the molecule in its standard pose together with the transform
    /// that produced it.
    ///
    /// Errors for single-atom or collinear molecules, whose pose is not
    /// defined by the inertia convention.
    pub fn standardize(&self) -> Result<(Molecule, StandardPose), MoleculeError> {
        if self.len() < 3 {
            return Err(MoleculeError::DegenerateInertia(format!(
                "{} atom(s); at least 3 non-collinear atoms required",
                self.len()
            )));
        }
        let frame = principal_frame(&self.positions).ok_or_else(|| {
            MoleculeError::DegenerateInertia("atoms are collinear".to_string())
        })?;
        let c = self.centroid();
        let new_positions: Vec<[f64; 3]> = self
            .positions
            .iter()
            .map(|p| matvec3(&frame.rotation, sub3(*p, c)))
            .collect();
        let mol = Molecule::new(
            self.atomic_numbers.clone(),
            new_positions,
            Some(self.partial_charges.clone()),
        )?;
        Ok((
            mol,
            StandardPose {
                rotation_to_standard: frame.rotation,
                handedness: frame.handedness,
            },
        ))
    }
}

pub(crate) struct PrincipalFrame {
    /// Rows are the sign-fixed principal axes (inertia descending).
    pub rotation: [[f64; 3]; 3],
    pub handedness: i8,
}

/// Principal-axes frame of a point set with deterministic sign conventions.
///
/// Returns `None` when the points are collinear (or a single point), where
/// no unique frame exists.
pub(crate) fn principal_frame(positions: &[[f64; 3]]) -> Option<PrincipalFrame> {
    let n = positions.len() as f64;
    let mut c = [0.0; 3];
    for p in positions {
        for k in 0..3 {
            c[k] += p[k];
        }
    }
    for k in &mut c {
        *k /= n;
    }
    let centered: Vec<[f64; 3]> = positions.iter().map(|p| sub3(*p, c)).collect();

    // Gyration tensor; the inertia tensor tr(G)I - G shares eigenvectors,
    // with inertia eigenvalues descending exactly when gyration ascends.
    let mut g = Matrix3::zeros();
    for p in &centered {
        let v = Vector3::new(p[0], p[1], p[2]);
        g += v * v.transpose();
    }
    let eig = nalgebra::SymmetricEigen::new(g);
    let mut order: Vec<usize> = (0..3).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());
    let lam = [
        eig.eigenvalues[order[0]],
        eig.eigenvalues[order[1]],
        eig.eigenvalues[order[2]],
    ];
    // Collinear: at most one nonzero gyration eigenvalue.
    if lam[1] <= 1e-10 * lam[2].max(1e-30) {
        return None;
    }

    let axis = |i: usize| -> V3<f64> {
        let col = eig.eigenvectors.column(order[i]);
        [col[0], col[1], col[2]]
    };

    // Atoms sorted by distance from the centroid, farthest first; index
    // breaks exact ties deterministically.
    let mut by_dist: Vec<usize> = (0..centered.len()).collect();
    by_dist.sort_by(|&a, &b| {
        let da = dot3(centered[a], centered[a]);
        let db = dot3(centered[b], centered[b]);
        db.partial_cmp(&da).unwrap().then(a.cmp(&b))
    });
    let scale = dot3(centered[by_dist[0]], centered[by_dist[0]]).sqrt();
    let orient = |v: V3<f64>| -> (V3<f64>, bool) {
        for &i in &by_dist {
            let d = dot3(v, centered[i]);
            if d.abs() > 1e-8 * scale.max(1e-12) {
                return if d < 0.0 { ([-v[0], -v[1], -v[2]], true) } else { (v, true) };
            }
        }
        (v, false)
    };

    let (e1, _) = orient(axis(0));
    let (e2, _) = orient(axis(1));
    let (e3_natural, e3_fixed) = orient(axis(2));
    let e3 = cross3(e1, e2);
    let handedness = if e3_fixed && dot3(e3_natural, e3) < 0.0 {
        -1
    } else {
        1
    };
    Some(PrincipalFrame {
        rotation: [e1, e2, e3],
        handedness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vecmath::rotvec_to_matrix;
    use approx::assert_relative_eq;

    const WATER_XYZ: &str = "3
water
O 0.0000 0.0000 0.1173
H 0.0000 0.7572 -0.4692
H 0.0000 -0.7572 -0.4692
";

    fn chiral_blob() -> Molecule {
        Molecule::new(
            vec![6, 7, 8, 1, 16],
            vec![
                [0.0, 0.0, 0.0],
                [1.5, 0.1, -0.2],
                [-0.3, 1.4, 0.5],
                [0.2, -0.4, 1.3],
                [-1.1, -0.9, -0.7],
            ],
            None,
        )
        .unwrap()
    }

    #[test]
    fn water_from_xyz() {
        let mol = Molecule::from_xyz_str(WATER_XYZ).unwrap();
        assert_eq!(mol.len(), 3);
        assert_relative_eq!(mol.mass(), 18.015, epsilon = 1e-3);
        assert!(mol.radius() > 0.0);
        assert!(mol.volume() > 0.0);
    }

    #[test]
    fn single_atom_has_zero_radius() {
        let mol = Molecule::from_xyz_str("1\nhelium\nHe 0 0 0\n").unwrap();
        assert_eq!(mol.len(), 1);
        assert_eq!(mol.radius(), 0.0);
        assert_eq!(mol.centroid(), [0.0, 0.0, 0.0]);
    }

    #[test]
    fn xyz_count_mismatch_is_error() {
        let text = "2\nbad\nH 0 0 0\nH 1 0 0\nH 2 0 0\n";
        let err = Molecule::from_xyz_str(text).unwrap_err();
        assert!(matches!(err, MoleculeError::XyzParse { line: 5, .. }), "{err}");
    }

    #[test]
    fn xyz_bad_element_and_coordinate() {
        let err = Molecule::from_xyz_str("1\nx\nQq 0 0 0\n").unwrap_err();
        assert!(err.to_string().contains("line 3"));
        let err = Molecule::from_xyz_str("1\nx\nC 0 zero 0\n").unwrap_err();
        assert!(err.to_string().contains("non-numeric"));
    }

    #[test]
    fn xyz_charge_column() {
        let mol = Molecule::from_xyz_str("2\nq\nH 0 0 0 0.4\nF 1 0 0 -0.4\n").unwrap();
        assert_eq!(mol.partial_charges(), &[0.4, -0.4]);
    }

    #[test]
    fn carbon_sphere_volume() {
        let mol = Molecule::new(vec![6], vec![[0.0; 3]], None).unwrap();
        let v = mol.compute_volume(100_000, 0);
        let exact = 4.0 / 3.0 * std::f64::consts::PI * 1.70_f64.powi(3);
        assert!((v - exact).abs() / exact < 0.02, "{v} vs {exact}");
    }

    #[test]
    fn overlapping_atoms_add_nothing() {
        let one = Molecule::new(vec![6], vec![[0.0; 3]], None).unwrap();
        let two = Molecule::new(vec![6, 6], vec![[0.0; 3], [0.0; 3]], None).unwrap();
        let va = one.compute_volume(100_000, 1);
        let vb = two.compute_volume(100_000, 1);
        assert!((va - vb).abs() / va < 1e-12);
    }

    #[test]
    fn disjoint_spheres_double() {
        let one = Molecule::new(vec![6], vec![[0.0; 3]], None).unwrap();
        let two = Molecule::new(vec![6, 6], vec![[0.0; 3], [10.0, 0.0, 0.0]], None).unwrap();
        let va = one.compute_volume(200_000, 2);
        let vb = two.compute_volume(200_000, 2);
        assert!((vb - 2.0 * va).abs() / (2.0 * va) < 0.02, "{vb} vs {}", 2.0 * va);
    }

    #[test]
    fn volume_monotone_in_radius() {
        // Same geometry, smaller-radius element everywhere: volume shrinks.
        let big = chiral_blob();
        let small = Molecule::new(
            vec![1, 1, 1, 1, 1],
            big.positions().to_vec(),
            None,
        )
        .unwrap();
        assert!(small.volume() < big.volume());
    }

    #[test]
    fn volume_invariant_under_rigid_transform() {
        let mol = chiral_blob();
        let rot = rotvec_to_matrix([0.4, -1.1, 0.8]);
        let moved: Vec<[f64; 3]> = mol
            .positions()
            .iter()
            .map(|p| {
                let r = matvec3(&rot, *p);
                [r[0] + 3.0, r[1] - 7.0, r[2] + 0.5]
            })
            .collect();
        let mol2 = Molecule::new(mol.atomic_numbers().to_vec(), moved, None).unwrap();
        assert_relative_eq!(mol.volume(), mol2.volume(), epsilon = 1e-12);
    }

    #[test]
    fn standardize_centers_and_diagonalizes() {
        let (std_mol, pose) = chiral_blob().standardize().unwrap();
        let c = std_mol.centroid();
        assert!(norm3(c) < 1e-9);
        // Inertia tensor of the standardized molecule must be diagonal with
        // descending eigenvalues.
        let mut g = [[0.0f64; 3]; 3];
        for p in std_mol.positions() {
            for i in 0..3 {
                for j in 0..3 {
                    g[i][j] += p[i] * p[j];
                }
            }
        }
        let tr = g[0][0] + g[1][1] + g[2][2];
        let inertia = [tr - g[0][0], tr - g[1][1], tr - g[2][2]];
        assert!(g[0][1].abs() < 1e-9 && g[0][2].abs() < 1e-9 && g[1][2].abs() < 1e-9);
        assert!(inertia[0] >= inertia[1] && inertia[1] >= inertia[2]);
        // The rotation is proper.
        let r = pose.rotation_to_standard;
        let det = dot3(r[0], cross3(r[1], r[2]));
        assert_relative_eq!(det, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn standardize_is_idempotent() {
        let (std_mol, _) = chiral_blob().standardize().unwrap();
        let (again, pose) = std_mol.standardize().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((pose.rotation_to_standard[i][j] - expect).abs() < 1e-9);
            }
        }
        for (a, b) in std_mol.positions().iter().zip(again.positions()) {
            assert!(norm3(sub3(*a, *b)) < 1e-9);
        }
    }

    #[test]
    fn standardize_recovers_known_rotation() {
        let (std_mol, _) = chiral_blob().standardize().unwrap();
        let rot = rotvec_to_matrix([0.9, 0.3, -0.5]);
        let moved: Vec<[f64; 3]> = std_mol
            .positions()
            .iter()
            .map(|p| {
                let r = matvec3(&rot, *p);
                [r[0] + 1.0, r[1] + 2.0, r[2] - 3.0]
            })
            .collect();
        let mol2 = Molecule::new(std_mol.atomic_numbers().to_vec(), moved, None).unwrap();
        let (std2, pose2) = mol2.standardize().unwrap();
        // Standardization undoes the rotation: recovered coordinates match.
        for (a, b) in std_mol.positions().iter().zip(std2.positions()) {
            assert!(norm3(sub3(*a, *b)) < 1e-6, "{a:?} vs {b:?}");
        }
        // And rotation_to_standard is the transpose of the applied rotation.
        let rt = pose2.rotation_to_standard;
        for i in 0..3 {
            for j in 0..3 {
                assert!((rt[i][j] - rot[j][i]).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn standardize_planar_molecule() {
        let mol = Molecule::new(
            vec![8, 1, 1],
            vec![[0.0, 0.117, 0.0], [0.757, -0.469, 0.0], [-0.757, -0.469, 0.0]],
            None,
        )
        .unwrap();
        let (std_mol, pose) = mol.standardize().unwrap();
        assert!(norm3(std_mol.centroid()) < 1e-9);
        let r = pose.rotation_to_standard;
        // Orthonormality
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((dot3(r[i], r[j]) - expect).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn standardize_rejects_collinear() {
        let mol = Molecule::new(
            vec![6, 8, 8],
            vec![[0.0; 3], [1.16, 0.0, 0.0], [-1.16, 0.0, 0.0]],
            None,
        )
        .unwrap();
        assert!(matches!(
            mol.standardize(),
            Err(MoleculeError::DegenerateInertia(_))
        ));
    }

    #[test]
    fn mirror_image_flips_handedness() {
        let mol = chiral_blob();
        let (_, pose) = mol.standardize().unwrap();
        let mirrored: Vec<[f64; 3]> = mol
            .positions()
            .iter()
            .map(|p| [-p[0], p[1], p[2]])
            .collect();
        let mol2 = Molecule::new(mol.atomic_numbers().to_vec(), mirrored, None).unwrap();
        let (_, pose2) = mol2.standardize().unwrap();
        assert_eq!(pose.handedness, -pose2.handedness);
    }
}
