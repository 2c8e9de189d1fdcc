//! Fixed-size helpers for 3-vectors and 3×3 matrices.

pub type Vec3 = [f64; 3];
pub type Mat3 = [[f64; 3]; 3];

pub const ZERO3: Vec3 = [0.0; 3];

pub fn identity3() -> Mat3 {
    [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
}

pub fn add(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn sub(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn scale(c: f64, a: &Vec3) -> Vec3 {
    [c * a[0], c * a[1], c * a[2]]
}

pub fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm(a: &Vec3) -> f64 {
    dot(a, a).sqrt()
}

pub fn max_abs(a: &Vec3) -> f64 {
    a.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
}

pub fn mat_vec(m: &Mat3, v: &Vec3) -> Vec3 {
    [dot(&m[0], v), dot(&m[1], v), dot(&m[2], v)]
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn transpose(a: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[j][i];
        }
    }
    out
}

/// Matrix of `v ↦ p × v`.
pub fn cross_matrix(p: &Vec3) -> Mat3 {
    [[0.0, -p[2], p[1]], [p[2], 0.0, -p[0]], [-p[1], p[0], 0.0]]
}

pub fn mat_max_abs_diff(a: &Mat3, b: &Mat3) -> f64 {
    let mut m = 0.0_f64;
    for i in 0..3 {
        for j in 0..3 {
            m = m.max((a[i][j] - b[i][j]).abs());
        }
    }
    m
}

/// Levi-Civita symbol with ε₁₂₃ = 1 (indices 0-based).
pub fn levi_civita(a: usize, b: usize, c: usize) -> f64 {
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// Two unit vectors completing `n̂` to a right-handed orthonormal frame.
pub fn orthonormal_complement(n: &Vec3) -> (Vec3, Vec3) {
    let len = norm(n);
    let nh = scale(1.0 / len, n);
    let seed = if nh[0].abs() < 0.6 {
        [1.0, 0.0, 0.0]
    } else if nh[1].abs() < 0.6 {
        [0.0, 1.0, 0.0]
    } else {
        [0.0, 0.0, 1.0]
    };
    let e1 = sub(&seed, &scale(dot(&seed, &nh), &nh));
    let e1 = scale(1.0 / norm(&e1), &e1);
    let e2 = cross(&nh, &e1);
    (e1, e2)
}

/// Inverse of `m` restricted to the plane orthogonal to `n`, returned as a
/// 3×3 matrix that annihilates `n`. `None` if the restriction is singular
/// (determinant below `tol`).
pub fn planar_inverse(m: &Mat3, n: &Vec3, tol: f64) -> Option<Mat3> {
    let (e1, e2) = orthonormal_complement(n);
    let me1 = mat_vec(m, &e1);
    let me2 = mat_vec(m, &e2);
    let (a, b, c, d) = (dot(&e1, &me1), dot(&e1, &me2), dot(&e2, &me1), dot(&e2, &me2));
    let det = a * d - b * c;
    if det.abs() < tol {
        return None;
    }
    let inv = [[d / det, -b / det], [-c / det, a / det]];
    let basis = [e1, e2];
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut s = 0.0;
            for k in 0..2 {
                for l in 0..2 {
                    s += basis[k][i] * inv[k][l] * basis[l][j];
                }
            }
            out[i][j] = s;
        }
    }
    Some(out)
}
