//! Space-group symmetry operations, multiplicities, and parallelepiped
//! asymmetric-unit bounds for the supported subset of space groups.
//!
//! The table is bundled as JSON (`data/space_groups.json`) with operations
//! written as coordinate triplets in standard settings, so it can be audited
//! and extended without touching code. Rotation parts and translations are
//! held exactly (translations as integer twelfths) to keep composition and
//! closure checks free of drift.

use once_cell::sync::Lazy;
use serde::Deserialize;
use thiserror::Error;

/// Denominator for exact symmetry translations.
pub const TRANSLATION_DEN: i32 = 12;

#[derive(Debug, Error)]
pub enum SymmetryError {
    #[error("unsupported space group '{requested}'; supported groups: {supported}")]
    Unsupported { requested: String, supported: String },
    #[error("invalid symmetry triplet '{0}': {1}")]
    BadTriplet(String, String),
}

/// One symmetry operation x' = R x + t in fractional coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymOp {
    /// Rotation part; entries are -1, 0, or 1 for the shipped groups.
    pub rotation: [[i32; 3]; 3],
    /// Translation numerators over [`TRANSLATION_DEN`], each in [0, 12).
    pub translation_num: [i32; 3],
}

impl SymOp {
    pub fn identity() -> Self {
        SymOp {
            rotation: [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            translation_num: [0; 3],
        }
    }

    /// Translation vector in fractional coordinates.
    pub fn translation(&self) -> [f64; 3] {
        let d = f64::from(TRANSLATION_DEN);
        [
            f64::from(self.translation_num[0]) / d,
            f64::from(self.translation_num[1]) / d,
            f64::from(self.translation_num[2]) / d,
        ]
    }

    /// Applies the operation to fractional coordinates without wrapping.
    pub fn apply(&self, f: [f64; 3]) -> [f64; 3] {
        let t = self.translation();
        let mut out = [0.0; 3];
        for i in 0..3 {
            out[i] = f64::from(self.rotation[i][0]) * f[0]
                + f64::from(self.rotation[i][1]) * f[1]
                + f64::from(self.rotation[i][2]) * f[2]
                + t[i];
        }
        out
    }

    /// Determinant of the rotation part (+1 proper, -1 improper).
    pub fn det(&self) -> i32 {
        let r = &self.rotation;
        r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
    }

    /// Composition (self after other), with the translation reduced mod 1.
    pub fn compose(&self, other: &SymOp) -> SymOp {
        let mut rotation = [[0i32; 3]; 3];
        let mut translation_num = [0i32; 3];
        for i in 0..3 {
            for j in 0..3 {
                rotation[i][j] = (0..3).map(|k| self.rotation[i][k] * other.rotation[k][j]).sum();
            }
            let mut t = self.translation_num[i];
            for k in 0..3 {
                t += self.rotation[i][k] * other.translation_num[k];
            }
            translation_num[i] = t.rem_euclid(TRANSLATION_DEN);
        }
        SymOp { rotation, translation_num }
    }

    /// Parses a coordinate triplet such as `-x, y+1/2, -z`.
    pub fn parse_triplet(s: &str) -> Result<SymOp, SymmetryError> {
        let err = |reason: &str| SymmetryError::BadTriplet(s.to_string(), reason.to_string());
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(err("expected three comma-separated components"));
        }
        let mut rotation = [[0i32; 3]; 3];
        let mut translation_num = [0i32; 3];
        for (i, part) in parts.iter().enumerate() {
            let (row, t) = parse_component(part).map_err(|reason| err(&reason))?;
            rotation[i] = row;
            translation_num[i] = t.rem_euclid(TRANSLATION_DEN);
        }
        Ok(SymOp { rotation, translation_num })
    }
}

/// Parses one component like `-x+1/2` into a rotation row and a translation
/// numerator over twelve.
fn parse_component(s: &str) -> Result<([i32; 3], i32), String> {
    let mut row = [0i32; 3];
    let mut trans = 0i32;
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err("empty component".to_string());
    }
    let bytes = cleaned.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = 1i32;
        while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
        }
        if pos >= bytes.len() {
            return Err("dangling sign".to_string());
        }
        match bytes[pos] {
            b'x' | b'X' => {
                row[0] += sign;
                pos += 1;
            }
            b'y' | b'Y' => {
                row[1] += sign;
                pos += 1;
            }
            b'z' | b'Z' => {
                row[2] += sign;
                pos += 1;
            }
            b'0'..=b'9' | b'.' => {
                let start = pos;
                while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'.') {
                    pos += 1;
                }
                let num_str = &cleaned[start..pos];
                let value = if pos < bytes.len() && bytes[pos] == b'/' {
                    pos += 1;
                    let dstart = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let den: i32 = cleaned[dstart..pos]
                        .parse()
                        .map_err(|_| "bad fraction denominator".to_string())?;
                    let num: i32 = num_str.parse().map_err(|_| "bad fraction numerator".to_string())?;
                    if den == 0 || TRANSLATION_DEN % den != 0 {
                        return Err(format!("denominator {den} not a divisor of {TRANSLATION_DEN}"));
                    }
                    num * (TRANSLATION_DEN / den)
                } else {
                    let value: f64 = num_str.parse().map_err(|_| "bad number".to_string())?;
                    let scaled = value * f64::from(TRANSLATION_DEN);
                    let rounded = scaled.round();
                    if (scaled - rounded).abs() > 1e-9 {
                        return Err(format!("translation {num_str} is not a multiple of 1/{TRANSLATION_DEN}"));
                    }
                    rounded as i32
                };
                trans += sign * value;
            }
            other => return Err(format!("unexpected character '{}'", other as char)),
        }
    }
    if row.iter().all(|&r| r == 0) {
        return Err("component has no x/y/z term".to_string());
    }
    Ok((row, trans))
}

/// Cell-angle constraints implied by a space group's lattice system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeSystem {
    Triclinic,
    Monoclinic,
    Orthorhombic,
}

impl LatticeSystem {
    /// Required value for each cell angle, or `None` where the angle is free.
    /// Monoclinic uses the unique-axis-b setting (alpha = gamma = 90 deg).
    pub fn pinned_angles(self) -> [Option<f64>; 3] {
        use std::f64::consts::FRAC_PI_2;
        match self {
            LatticeSystem::Triclinic => [None, None, None],
            LatticeSystem::Monoclinic => [Some(FRAC_PI_2), None, Some(FRAC_PI_2)],
            LatticeSystem::Orthorhombic => [Some(FRAC_PI_2); 3],
        }
    }
}

/// A space group restricted to general Wyckoff positions, with an
/// axis-aligned parallelepiped asymmetric unit anchored at the origin.
#[derive(Debug, Clone)]
pub struct SpaceGroup {
    pub number: u16,
    pub symbol: String,
    pub lattice_system: LatticeSystem,
    pub ops: Vec<SymOp>,
    /// Fractional extents of the asymmetric unit along a, b, c.
    pub aunit_box: [f64; 3],
}

impl SpaceGroup {
    /// Number of symmetry-equivalent molecules per unit cell (general
    /// position), equal to the operation count.
    pub fn multiplicity_z(&self) -> usize {
        self.ops.len()
    }

    /// True if `frac` lies in the asymmetric-unit box [0, f_i) per axis,
    /// with a small tolerance on the boundaries.
    pub fn in_aunit_box(&self, frac: [f64; 3], tol: f64) -> bool {
        (0..3).all(|k| frac[k] >= -tol && frac[k] < self.aunit_box[k] + tol)
    }
}

#[derive(Deserialize)]
struct TableEntry {
    number: u16,
    symbol: String,
    lattice_system: LatticeSystem,
    aunit_box: [f64; 3],
    ops: Vec<String>,
}

#[derive(Deserialize)]
struct TableFile {
    #[allow(dead_code)]
    comment: String,
    groups: Vec<TableEntry>,
}

static TABLE: Lazy<Vec<SpaceGroup>> = Lazy::new(|| {
    let raw = include_str!("../data/space_groups.json");
    let file: TableFile = serde_json::from_str(raw).expect("bundled space-group table is valid JSON");
    file.groups
        .into_iter()
        .map(|e| {
            let ops: Vec<SymOp> = e
                .ops
                .iter()
                .map(|s| SymOp::parse_triplet(s).expect("bundled triplet parses"))
                .collect();
            let sg = SpaceGroup {
                number: e.number,
                symbol: e.symbol,
                lattice_system: e.lattice_system,
                ops,
                aunit_box: e.aunit_box,
            };
            validate_group(&sg);
            sg
        })
        .collect()
});

/// Structural checks run once when the bundled table loads.
fn validate_group(sg: &SpaceGroup) {
    assert!(
        sg.ops.contains(&SymOp::identity()),
        "group {} lacks the identity op",
        sg.number
    );
    let z = sg.ops.len();
    for op in &sg.ops {
        assert!(op.det().abs() == 1, "group {}: |det| != 1", sg.number);
        assert!(
            op.translation_num.iter().all(|&t| (0..TRANSLATION_DEN).contains(&t)),
            "group {}: translation outside [0,1)",
            sg.number
        );
    }
    // Closure under composition mod lattice translations.
    for a in &sg.ops {
        for b in &sg.ops {
            let c = a.compose(b);
            assert!(
                sg.ops.contains(&c),
                "group {} not closed under composition",
                sg.number
            );
        }
    }
    let vol: f64 = sg.aunit_box.iter().product();
    assert!(
        sg.aunit_box.iter().all(|&f| f > 0.0 && f <= 1.0),
        "group {}: asymmetric-unit extents outside (0,1]",
        sg.number
    );
    assert!(
        (vol - 1.0 / z as f64).abs() < 1e-12,
        "group {}: asymmetric-unit volume != 1/Z",
        sg.number
    );
}

fn supported_list() -> String {
    TABLE
        .iter()
        .map(|g| format!("{} ({})", g.number, g.symbol))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Looks up a supported space group by International Tables number.
pub fn get_space_group(number: u16) -> Result<&'static SpaceGroup, SymmetryError> {
    TABLE
        .iter()
        .find(|g| g.number == number)
        .ok_or_else(|| SymmetryError::Unsupported {
            requested: number.to_string(),
            supported: supported_list(),
        })
}

/// Looks up a supported space group by Hermann-Mauguin symbol
/// (whitespace-insensitive, e.g. "P21/c" or "P 21/c").
pub fn get_space_group_by_symbol(symbol: &str) -> Result<&'static SpaceGroup, SymmetryError> {
    let normalized: String = symbol.chars().filter(|c| !c.is_whitespace()).collect();
    TABLE
        .iter()
        .find(|g| g.symbol.eq_ignore_ascii_case(&normalized))
        .ok_or_else(|| SymmetryError::Unsupported {
            requested: symbol.to_string(),
            supported: supported_list(),
        })
}

/// All supported space groups.
pub fn supported_space_groups() -> &'static [SpaceGroup] {
    &TABLE
}

/// Applies every operation of the group to fractional coordinates,
/// returning one image set per operation (no wrapping).
pub fn apply_ops(sg: &SpaceGroup, frac_coords: &[[f64; 3]]) -> Vec<Vec<[f64; 3]>> {
    sg.ops
        .iter()
        .map(|op| frac_coords.iter().map(|&f| op.apply(f)).collect())
        .collect()
}
