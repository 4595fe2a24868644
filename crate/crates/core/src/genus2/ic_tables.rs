//! Igusa-Clebsch invariants of the quintic model z^2 = f_a(w), as integer
//! polynomial tables in the coefficients (a0, a1, a2, a3, a4).
//!
//! Normalization: `I10` equals `disc(f_a)` exactly, and the weight-2
//! invariant restricts to `40*a1 - 16*a2*a4 + 6*a3^2` (the classical
//! `-240*c0*c6 + 40*c1*c5 - 16*c2*c4 + 6*c3^2` of the binary sextic with
//! `c6 = 0`, `c5 = 1`). These match the values produced by the standard
//! transvectant construction and by root-difference products.

/// One monomial: coefficient and exponents of (a0, a1, a2, a3, a4).
pub type IcTerm = (i64, [u8; 5]);

pub static I2_QUINTIC: &[IcTerm] = &[
    (6, [0, 0, 0, 2, 0]),
    (-16, [0, 0, 1, 0, 1]),
    (40, [0, 1, 0, 0, 0]),
];

pub static I4_QUINTIC: &[IcTerm] = &[
    (4, [0, 0, 2, 0, 2]),
    (-12, [0, 0, 2, 1, 0]),
    (-12, [0, 1, 0, 1, 2]),
    (36, [0, 1, 0, 2, 0]),
    (4, [0, 1, 1, 0, 1]),
    (-80, [0, 2, 0, 0, 0]),
    (48, [1, 0, 0, 0, 3]),
    (-180, [1, 0, 0, 1, 1]),
    (300, [1, 0, 1, 0, 0]),
];

pub static I6_QUINTIC: &[IcTerm] = &[
    (8, [0, 0, 2, 2, 2]),
    (-24, [0, 0, 2, 3, 0]),
    (-24, [0, 0, 3, 0, 3]),
    (76, [0, 0, 3, 1, 1]),
    (-36, [0, 0, 4, 0, 0]),
    (-24, [0, 1, 0, 3, 2]),
    (72, [0, 1, 0, 4, 0]),
    (76, [0, 1, 1, 1, 3]),
    (-238, [0, 1, 1, 2, 1]),
    (28, [0, 1, 2, 0, 2]),
    (26, [0, 1, 2, 1, 0]),
    (-36, [0, 2, 0, 0, 4]),
    (26, [0, 2, 0, 1, 2]),
    (176, [0, 2, 0, 2, 0]),
    (64, [0, 2, 1, 0, 1]),
    (-320, [0, 3, 0, 0, 0]),
    (60, [1, 0, 0, 2, 3]),
    (-198, [1, 0, 0, 3, 1]),
    (-160, [1, 0, 1, 0, 4]),
    (492, [1, 0, 1, 1, 2]),
    (330, [1, 0, 1, 2, 0]),
    (-640, [1, 0, 2, 0, 1]),
    (616, [1, 1, 0, 0, 3]),
    (-1860, [1, 1, 0, 1, 1]),
    (1600, [1, 1, 1, 0, 0]),
    (-900, [2, 0, 0, 0, 2]),
    (2250, [2, 0, 0, 1, 0]),
];

pub static I10_QUINTIC: &[IcTerm] = &[
    (1, [0, 2, 2, 2, 2]),
    (-4, [0, 2, 2, 3, 0]),
    (-4, [0, 2, 3, 0, 3]),
    (18, [0, 2, 3, 1, 1]),
    (-27, [0, 2, 4, 0, 0]),
    (-4, [0, 3, 0, 3, 2]),
    (16, [0, 3, 0, 4, 0]),
    (18, [0, 3, 1, 1, 3]),
    (-80, [0, 3, 1, 2, 1]),
    (-6, [0, 3, 2, 0, 2]),
    (144, [0, 3, 2, 1, 0]),
    (-27, [0, 4, 0, 0, 4]),
    (144, [0, 4, 0, 1, 2]),
    (-128, [0, 4, 0, 2, 0]),
    (-192, [0, 4, 1, 0, 1]),
    (256, [0, 5, 0, 0, 0]),
    (-4, [1, 0, 3, 2, 2]),
    (16, [1, 0, 3, 3, 0]),
    (16, [1, 0, 4, 0, 3]),
    (-72, [1, 0, 4, 1, 1]),
    (108, [1, 0, 5, 0, 0]),
    (18, [1, 1, 1, 3, 2]),
    (-72, [1, 1, 1, 4, 0]),
    (-80, [1, 1, 2, 1, 3]),
    (356, [1, 1, 2, 2, 1]),
    (24, [1, 1, 3, 0, 2]),
    (-630, [1, 1, 3, 1, 0]),
    (-6, [1, 2, 0, 2, 3]),
    (24, [1, 2, 0, 3, 1]),
    (144, [1, 2, 1, 0, 4]),
    (-746, [1, 2, 1, 1, 2]),
    (560, [1, 2, 1, 2, 0]),
    (1020, [1, 2, 2, 0, 1]),
    (-36, [1, 3, 0, 0, 3]),
    (160, [1, 3, 0, 1, 1]),
    (-1600, [1, 3, 1, 0, 0]),
    (-27, [2, 0, 0, 4, 2]),
    (108, [2, 0, 0, 5, 0]),
    (144, [2, 0, 1, 2, 3]),
    (-630, [2, 0, 1, 3, 1]),
    (-128, [2, 0, 2, 0, 4]),
    (560, [2, 0, 2, 1, 2]),
    (825, [2, 0, 2, 2, 0]),
    (-900, [2, 0, 3, 0, 1]),
    (-192, [2, 1, 0, 1, 4]),
    (1020, [2, 1, 0, 2, 2]),
    (-900, [2, 1, 0, 3, 0]),
    (160, [2, 1, 1, 0, 3]),
    (-2050, [2, 1, 1, 1, 1]),
    (2250, [2, 1, 2, 0, 0]),
    (-50, [2, 2, 0, 0, 2]),
    (2000, [2, 2, 0, 1, 0]),
    (256, [3, 0, 0, 0, 5]),
    (-1600, [3, 0, 0, 1, 3]),
    (2250, [3, 0, 0, 2, 1]),
    (2000, [3, 0, 1, 0, 2]),
    (-3750, [3, 0, 1, 1, 0]),
    (-2500, [3, 1, 0, 0, 1]),
    (3125, [4, 0, 0, 0, 0]),
];
