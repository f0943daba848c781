//! Element data: symbols, standard atomic masses, van der Waals radii.

/// Highest atomic number accepted anywhere in the crate.
pub const MAX_ATOMIC_NUMBER: u8 = 103;

/// Radius returned for elements beyond the tabulated range.
pub const FALLBACK_VDW_RADIUS: f64 = 2.0;

/// Element symbols indexed by atomic number - 1.
pub const SYMBOLS: [&str; 103] = [
    "H", "He", "Li", "Be", "B", "C", "N", "O", "F", "Ne", "Na", "Mg", "Al", "Si", "P", "S", "Cl",
    "Ar", "K", "Ca", "Sc", "Ti", "V", "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As",
    "Se", "Br", "Kr", "Rb", "Sr", "Y", "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In",
    "Sn", "Sb", "Te", "I", "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd", "Pm", "Sm", "Eu", "Gd", "Tb",
    "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf", "Ta", "W", "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl",
    "Pb", "Bi", "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U", "Np", "Pu", "Am", "Cm", "Bk",
    "Cf", "Es", "Fm", "Md", "No", "Lr",
];

/// Standard atomic masses in amu, indexed by atomic number - 1.
const MASSES: [f64; 103] = [
    1.008, 4.0026, 6.94, 9.0122, 10.81, 12.011, 14.007, 15.999, 18.998, 20.180, 22.990, 24.305,
    26.982, 28.085, 30.974, 32.06, 35.45, 39.948, 39.098, 40.078, 44.956, 47.867, 50.942, 51.996,
    54.938, 55.845, 58.933, 58.693, 63.546, 65.38, 69.723, 72.630, 74.922, 78.971, 79.904, 83.798,
    85.468, 87.62, 88.906, 91.224, 92.906, 95.95, 97.907, 101.07, 102.91, 106.42, 107.87, 112.41,
    114.82, 118.71, 121.76, 127.60, 126.90, 131.29, 132.91, 137.33, 138.91, 140.12, 140.91,
    144.24, 144.91, 150.36, 151.96, 157.25, 158.93, 162.50, 164.93, 167.26, 168.93, 173.05,
    174.97, 178.49, 180.95, 183.84, 186.21, 190.23, 192.22, 195.08, 196.97, 200.59, 204.38, 207.2,
    208.98, 208.98, 209.99, 222.02, 223.02, 226.03, 227.03, 232.04, 231.04, 238.03, 237.05,
    244.06, 243.06, 247.07, 247.07, 251.08, 252.08, 257.10, 258.10, 259.10, 262.11,
];

/// Van der Waals radii in angstroms for Z = 1..=54.
///
/// Bondi (1964) values where defined; commonly used extensions fill the
/// remaining main-group and transition elements.
const VDW_RADII: [f64; 54] = [
    1.20, // H
    1.40, // He
    1.82, // Li
    1.53, // Be
    1.92, // B
    1.70, // C
    1.55, // N
    1.52, // O
    1.47, // F
    1.54, // Ne
    2.27, // Na
    1.73, // Mg
    1.84, // Al
    2.10, // Si
    1.80, // P
    1.80, // S
    1.75, // Cl
    1.88, // Ar
    2.75, // K
    2.31, // Ca
    2.15, // Sc
    2.11, // Ti
    2.07, // V
    2.06, // Cr
    2.05, // Mn
    2.04, // Fe
    2.00, // Co
    1.63, // Ni
    1.40, // Cu
    1.39, // Zn
    1.87, // Ga
    2.11, // Ge
    1.85, // As
    1.90, // Se
    1.85, // Br
    2.02, // Kr
    3.03, // Rb
    2.49, // Sr
    2.32, // Y
    2.23, // Zr
    2.18, // Nb
    2.17, // Mo
    2.16, // Tc
    2.13, // Ru
    2.10, // Rh
    1.63, // Pd
    1.72, // Ag
    1.58, // Cd
    1.93, // In
    2.17, // Sn
    2.06, // Sb
    2.06, // Te
    1.98, // I
    2.16, // Xe
];

/// Symbol for an atomic number, or `None` if out of range.
pub fn symbol(z: u8) -> Option<&'static str> {
    if z == 0 || z > MAX_ATOMIC_NUMBER {
        None
    } else {
        Some(SYMBOLS[z as usize - 1])
    }
}

/// Atomic number for an element symbol (exact case, e.g. "Cl").
pub fn atomic_number(symbol: &str) -> Option<u8> {
    SYMBOLS
        .iter()
        .position(|&s| s == symbol)
        .map(|i| (i + 1) as u8)
}

/// Standard atomic mass in amu.
pub fn mass(z: u8) -> Option<f64> {
    if z == 0 || z > MAX_ATOMIC_NUMBER {
        None
    } else {
        Some(MASSES[z as usize - 1])
    }
}

/// Van der Waals radius in angstroms; tabulated through Z = 54, constant
/// fallback above.
pub fn vdw_radius(z: u8) -> f64 {
    if z == 0 {
        FALLBACK_VDW_RADIUS
    } else if (z as usize) <= VDW_RADII.len() {
        VDW_RADII[z as usize - 1]
    } else {
        FALLBACK_VDW_RADIUS
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups_are_consistent() {
        assert_eq!(symbol(6), Some("C"));
        assert_eq!(atomic_number("C"), Some(6));
        assert_eq!(atomic_number("Lr"), Some(103));
        assert_eq!(atomic_number("Xx"), None);
        assert_eq!(symbol(0), None);
        assert_eq!(symbol(104), None);
        for z in 1..=MAX_ATOMIC_NUMBER {
            let s = symbol(z).unwrap();
            assert_eq!(atomic_number(s), Some(z));
        }
    }

    #[test]
    fn water_mass() {
        let m = 2.0 * mass(1).unwrap() + mass(8).unwrap();
        assert!((m - 18.015).abs() < 1e-3);
    }

    #[test]
    fn vdw_fallback() {
        assert_eq!(vdw_radius(6), 1.70);
        assert_eq!(vdw_radius(55), FALLBACK_VDW_RADIUS);
        assert_eq!(vdw_radius(103), FALLBACK_VDW_RADIUS);
    }
}
