//! Stored generators, validated on construction.

/// M11 on the points `0..11`, as cycle lists.
pub const M11_GENS: &[&[&[u32]]] = &[&[&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]], &[&[2, 6, 10, 7], &[3, 9, 4, 5]]];

/// Generators of 3·A6 inside SL3(4), row-major, GF(4) encoded as
/// `0, 1, 2 = x, 3 = x + 1`.
pub const THREE_A6_GENS: [[u32; 9]; 2] = [[3, 2, 1, 0, 2, 1, 2, 2, 0], [0, 1, 2, 2, 0, 1, 3, 3, 0]];

/// Matrix part of the outer element of 3·A6:2_3; it is paired with
/// Frobenius composed with inverse transpose.
pub const THREE_A6_OUTER: [u32; 9] = [2, 1, 1, 1, 0, 0, 1, 0, 1];
