//! Generated by `derive::render`. Row p, column v: the neighbour whose edge
//! partition p marks at v.

/// Petersen graph.
pub(super) const PETERSEN: [[u8; 10]; 3] = [
    [1, 0, 1, 2, 3, 7, 8, 9, 5, 6],
    [4, 2, 3, 8, 9, 0, 1, 5, 6, 4],
    [5, 6, 7, 4, 0, 8, 9, 2, 3, 7],
];

/// F_3.
pub(super) const FLOWER_BASE: [[u8; 12]; 3] = [
    [3, 2, 1, 6, 1, 8, 7, 4, 9, 10, 9, 10],
    [2, 4, 0, 9, 10, 11, 3, 8, 7, 8, 11, 5],
    [1, 0, 5, 0, 7, 2, 11, 6, 5, 3, 4, 6],
];

/// F_5 vertices u_2, v_2, w_2, t_2, u_3, v_3, w_3, t_3.
pub(super) const FLOWER_GADGET: [[u8; 8]; 3] = [
    [2, 1, 6, 15, 1, 2, 13, 18],
    [6, 16, 12, 17, 7, 17, 11, 16],
    [0, 11, 10, 6, 3, 12, 7, 7],
];

/// G_3.
pub(super) const GOLDBERG_BASE: [[u8; 24]; 3] = [
    [4, 3, 0, 1, 5, 4, 7, 1, 10, 12, 8, 10, 13, 12, 8, 9, 20, 20, 19, 17, 16, 13, 16, 22],
    [2, 4, 3, 2, 1, 13, 0, 6, 12, 15, 11, 18, 9, 21, 15, 14, 22, 19, 11, 18, 21, 20, 23, 17],
    [6, 7, 19, 10, 0, 21, 15, 22, 14, 11, 3, 9, 8, 5, 23, 6, 18, 23, 16, 2, 17, 5, 7, 14],
];

/// G_5 vertices 8..24 (blocks 1 and 2).
pub(super) const GOLDBERG_GADGET: [[u8; 16]; 3] = [
    [10, 12, 8, 10, 13, 12, 23, 9, 20, 19, 19, 17, 21, 20, 16, 14],
    [12, 15, 11, 18, 8, 21, 8, 14, 22, 20, 11, 18, 16, 13, 23, 17],
    [14, 11, 3, 9, 9, 5, 15, 6, 18, 23, 16, 26, 17, 29, 31, 22],
];
