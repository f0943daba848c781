//! Small fixed-size vector/matrix helpers generic over [`Scalar`].

use crate::dual::Scalar;

pub type V3<T> = [T; 3];
pub type M3<T> = [[T; 3]; 3];

#[inline]
pub fn v3<T: Scalar>(x: f64, y: f64, z: f64) -> V3<T> {
    [T::from_f64(x), T::from_f64(y), T::from_f64(z)]
}

#[inline]
pub fn add3<T: Scalar>(a: V3<T>, b: V3<T>) -> V3<T> {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

#[inline]
pub fn sub3<T: Scalar>(a: V3<T>, b: V3<T>) -> V3<T> {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[inline]
pub fn scale3<T: Scalar>(a: V3<T>, s: T) -> V3<T> {
    [a[0] * s, a[1] * s, a[2] * s]
}

#[inline]
pub fn dot3<T: Scalar>(a: V3<T>, b: V3<T>) -> T {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
pub fn cross3<T: Scalar>(a: V3<T>, b: V3<T>) -> V3<T> {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[inline]
pub fn norm3<T: Scalar>(a: V3<T>) -> T {
    dot3(a, a).sqrt()
}

#[inline]
pub fn dist3_val<T: Scalar>(a: &V3<T>, b: &V3<T>) -> f64 {
    let dx = a[0].val() - b[0].val();
    let dy = a[1].val() - b[1].val();
    let dz = a[2].val() - b[2].val();
    (dx * dx + dy * dy + dz * dz).sqrt()
}

/// `m · v` with `m` in row-major layout acting on a column vector.
#[inline]
pub fn matvec3<T: Scalar>(m: &M3<T>, v: V3<T>) -> V3<T> {
    [
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    ]
}

#[inline]
pub fn matmul3<T: Scalar>(a: &M3<T>, b: &M3<T>) -> M3<T> {
    let mut out = [[T::from_f64(0.0); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
        }
    }
    out
}

#[inline]
pub fn transpose3<T: Scalar>(m: &M3<T>) -> M3<T> {
    [
        [m[0][0], m[1][0], m[2][0]],
        [m[0][1], m[1][1], m[2][1]],
        [m[0][2], m[1][2], m[2][2]],
    ]
}

/// Rotation matrix from a rotation vector (Rodrigues formula).
///
/// Uses a Taylor expansion of sin(t)/t and (1-cos(t))/t^2 for small angles
/// so the map stays smooth (and differentiable) through the identity.
pub fn rotvec_to_matrix<T: Scalar>(v: V3<T>) -> M3<T> {
    let t2 = dot3(v, v);
    let (a, b) = if t2.val() < 1e-8 {
        // sin(t)/t = 1 - t^2/6 + t^4/120, (1-cos t)/t^2 = 1/2 - t^2/24 + t^4/720
        let a = T::from_f64(1.0) - t2 / 6.0 + t2 * t2 / 120.0;
        let b = T::from_f64(0.5) - t2 / 24.0 + t2 * t2 / 720.0;
        (a, b)
    } else {
        let t = t2.sqrt();
        (t.sin() / t, (T::from_f64(1.0) - t.cos()) / t2)
    };
    let (x, y, z) = (v[0], v[1], v[2]);
    [
        [
            T::from_f64(1.0) + b * (-(y * y) - z * z),
            -(a * z) + b * x * y,
            a * y + b * x * z,
        ],
        [
            a * z + b * x * y,
            T::from_f64(1.0) + b * (-(x * x) - z * z),
            -(a * x) + b * y * z,
        ],
        [
            -(a * y) + b * x * z,
            a * x + b * y * z,
            T::from_f64(1.0) + b * (-(x * x) - y * y),
        ],
    ]
}

/// Rotation vector with angle in [0, pi] from a proper rotation matrix.
pub fn matrix_to_rotvec(m: &M3<f64>) -> V3<f64> {
    let trace = m[0][0] + m[1][1] + m[2][2];
    let cos_t = ((trace - 1.0) / 2.0).clamp(-1.0, 1.0);
    let theta = cos_t.acos();
    let axial = [
        m[2][1] - m[1][2],
        m[0][2] - m[2][0],
        m[1][0] - m[0][1],
    ];
    if theta < 1e-7 {
        // R ~ I + [v]_x for small angles
        return scale3(axial, 0.5);
    }
    if std::f64::consts::PI - theta > 1e-6 {
        let s = theta / (2.0 * theta.sin());
        return scale3(axial, s);
    }
    // Near pi the axial part vanishes; recover the axis from the symmetric
    // part: R + I = 2 n n^T at theta = pi, so R_ki + R_ik = 4 n_k n_i.
    let diag = [
        ((m[0][0] + 1.0) / 2.0).max(0.0),
        ((m[1][1] + 1.0) / 2.0).max(0.0),
        ((m[2][2] + 1.0) / 2.0).max(0.0),
    ];
    let k = if diag[0] >= diag[1] && diag[0] >= diag[2] {
        0
    } else if diag[1] >= diag[2] {
        1
    } else {
        2
    };
    let mut n = [0.0; 3];
    n[k] = diag[k].sqrt();
    for i in 0..3 {
        if i != k {
            n[i] = (m[k][i] + m[i][k]) / (4.0 * n[k]);
        }
    }
    let norm = norm3(n);
    scale3(n, theta / norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn assert_close3(a: V3<f64>, b: V3<f64>, tol: f64) {
        for i in 0..3 {
            assert!((a[i] - b[i]).abs() < tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn rodrigues_round_trip() {
        let cases: [V3<f64>; 5] = [
            [0.3, -0.2, 0.9],
            [1e-6, 2e-6, -1e-6],
            [0.0, 0.0, 1.5],
            [2.0, 1.0, -0.5],
            [3.0, 0.4, 0.2],
        ];
        for v in cases {
            let m = rotvec_to_matrix(v);
            let back = matrix_to_rotvec(&m);
            assert_close3(v, back, 1e-9);
        }
    }

    #[test]
    fn rodrigues_near_pi() {
        let axis = [1.0 / 3f64.sqrt(); 3];
        let v = scale3(axis, PI - 1e-9);
        let m = rotvec_to_matrix(v);
        let back = matrix_to_rotvec(&m);
        let m2 = rotvec_to_matrix(back);
        for i in 0..3 {
            for j in 0..3 {
                assert!((m[i][j] - m2[i][j]).abs() < 1e-7);
            }
        }
    }

    #[test]
    fn quarter_turn_about_x() {
        let m = rotvec_to_matrix([PI / 2.0, 0.0, 0.0]);
        let r = matvec3(&m, [0.0, 1.0, 0.0]);
        assert_close3(r, [0.0, 0.0, 1.0], 1e-12);
    }
}
