/// Invariants of the 50 atomistic lattices on four atoms, with a realizing
/// ideal for each, in the usual numbering.
#[allow(dead_code)]
pub struct K4Row {
    pub ideal: &'static str,
    pub cardinality: usize,
    pub pdim_quotient: usize,
    pub spdim_quotient: usize,
    pub pdim_ideal: usize,
    pub spdim_ideal: usize,
    pub length: usize,
    pub order_dimension: usize,
    pub breadth: usize,
}

#[allow(dead_code)]
pub const K4_ROWS: [K4Row; 50] = [
    K4Row { ideal: "x4, x3, x2, x1", cardinality: 16, pdim_quotient: 4, spdim_quotient: 4, pdim_ideal: 3, spdim_ideal: 2, length: 4, order_dimension: 4, breadth: 4 },
    K4Row { ideal: "x3^2, x2^2, x1^2, x1*x2*x3", cardinality: 15, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 2, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2^2, x1^2, x3, x1*x2", cardinality: 14, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 2, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x3^2*x4, x2^2*x5, x1*x3*x5, x1*x2*x4", cardinality: 14, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 2, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2^2, x1*x3, x1^2, x1*x2", cardinality: 13, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 1, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2^2*x3, x1^2*x4, x2*x4, x1*x3", cardinality: 13, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 2, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x3^2*x4, x1*x2*x3, x2^2, x1*x4", cardinality: 13, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 2, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x4^2*x5*x6, x2*x3*x4, x1*x3*x5, x1*x2*x6", cardinality: 13, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 2, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2^2*x3, x1*x3^2, x1^2*x2, x1*x2*x3", cardinality: 12, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2^2*x3, x1^3, x1^2*x2, x1*x3", cardinality: 12, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 1, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2*x3*x4, x1*x4^2, x1^2*x3, x1*x2", cardinality: 12, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 1, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x3^2*x4*x5, x1*x2*x3, x2*x4, x1*x5", cardinality: 12, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 2, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2^2*x3, x1*x3, x1*x2, x4", cardinality: 12, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 2, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x3^2, x2^2, x1*x3, x1*x2", cardinality: 12, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 1, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x1*x3*x4, x1*x2*x5, x4^2*x5, x2*x3", cardinality: 12, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 2, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2*x4*x5, x2*x3*x6, x1*x4*x6, x1*x3*x5", cardinality: 12, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 2, length: 3, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2^3*x3, x1^3*x3, x1^2*x2^2, x1*x2*x3", cardinality: 11, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 4, order_dimension: 3, breadth: 2 },
    K4Row { ideal: "x2^2*x3, x1^2, x1*x3, x1*x2", cardinality: 11, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 1, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2^3, x1^3, x1^2*x2, x1*x2^2", cardinality: 11, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 4, order_dimension: 2, breadth: 2 },
    K4Row { ideal: "x2^2*x3*x4, x1^2*x3, x1^2*x2, x1*x4", cardinality: 11, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 1, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2*x3*x4, x1^3*x4, x1^2*x2, x1*x3", cardinality: 11, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 1, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2*x3, x1*x3^2, x1^2, x1*x2", cardinality: 11, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 1, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x3^2*x4, x2*x3, x1*x4, x1*x2", cardinality: 11, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 1, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x1*x3*x4, x1*x2*x5, x3*x5, x2*x4", cardinality: 11, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 2, length: 3, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x1*x2*x4, x2*x3, x1*x3, x4^2", cardinality: 11, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 2, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2^3*x3, x1^2*x3, x1*x2^2, x1*x2*x3", cardinality: 10, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 4, order_dimension: 2, breadth: 2 },
    K4Row { ideal: "x2^3*x3^2, x1^2*x3^2, x1^2*x2^2, x1*x2*x3", cardinality: 10, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 4, order_dimension: 3, breadth: 2 },
    K4Row { ideal: "x2^2*x3*x4, x1*x4, x1*x3, x1*x2", cardinality: 10, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 1, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2*x3*x4, x1^2*x4, x1*x3, x1*x2", cardinality: 10, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 1, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2^3*x3, x1^2*x3, x1*x2^2, x1^2*x2", cardinality: 10, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 4, order_dimension: 2, breadth: 2 },
    K4Row { ideal: "x2*x3*x4, x1^2*x3, x1^2*x2, x1*x4", cardinality: 10, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 1, length: 3, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2*x3, x1^3, x1^2*x2, x1*x3", cardinality: 10, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 1, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2*x3, x1*x3, x1*x2^2, x1^2*x2", cardinality: 10, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 1, length: 4, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2*x4, x2*x3, x1*x4, x1*x3", cardinality: 10, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 1, length: 3, order_dimension: 3, breadth: 2 },
    K4Row { ideal: "x2*x3, x1*x3, x1*x2, x4", cardinality: 10, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 2, length: 3, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2^2*x3*x4, x1^2*x3*x4, x1*x2*x4, x1*x2*x3", cardinality: 9, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 4, order_dimension: 2, breadth: 2 },
    K4Row { ideal: "x2^2*x3^2, x1^2*x3^2, x1^2*x2, x1*x2*x3", cardinality: 9, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 4, order_dimension: 2, breadth: 2 },
    K4Row { ideal: "x2^3*x3^2, x1*x3^2, x1*x2^2, x1*x2*x3", cardinality: 9, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 4, order_dimension: 2, breadth: 2 },
    K4Row { ideal: "x2^2*x3^2, x1^2*x3^2, x1^2*x2^2, x1*x2*x3", cardinality: 9, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 3, order_dimension: 3, breadth: 2 },
    K4Row { ideal: "x2*x3*x4, x1*x4, x1*x3, x1*x2", cardinality: 9, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 1, length: 3, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2*x3, x1^2, x1*x3, x1*x2", cardinality: 9, pdim_quotient: 3, spdim_quotient: 3, pdim_ideal: 2, spdim_ideal: 1, length: 3, order_dimension: 3, breadth: 3 },
    K4Row { ideal: "x2^3*x3, x1^2*x3, x1^2*x2, x1*x2^2*x3", cardinality: 9, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 4, order_dimension: 2, breadth: 2 },
    K4Row { ideal: "x2^2*x3, x1^2*x3, x1^2*x2, x1*x2^2", cardinality: 9, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 3, order_dimension: 2, breadth: 2 },
    K4Row { ideal: "x2^2*x3^2*x4, x1*x3^2*x4, x1*x2*x4, x1*x2*x3", cardinality: 8, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 4, order_dimension: 2, breadth: 2 },
    K4Row { ideal: "x2^2*x3, x1^2*x3, x1^2*x2, x1*x2*x3", cardinality: 8, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 3, order_dimension: 2, breadth: 2 },
    K4Row { ideal: "x2^2*x3^2, x1*x3^2, x1*x2^2, x1*x2*x3", cardinality: 8, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 3, order_dimension: 2, breadth: 2 },
    K4Row { ideal: "x2^2*x3*x4, x1^2*x3*x4, x1^2*x2*x4, x1*x2^2*x3", cardinality: 8, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 3, order_dimension: 2, breadth: 2 },
    K4Row { ideal: "x2^2*x3*x4, x1*x3*x4, x1*x2*x4, x1*x2*x3", cardinality: 7, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 3, order_dimension: 2, breadth: 2 },
    K4Row { ideal: "x2*x3^2*x4, x1*x3^2*x4, x1*x2*x4, x1*x2*x3", cardinality: 7, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 3, order_dimension: 2, breadth: 2 },
    K4Row { ideal: "x2*x3*x4, x1*x3*x4, x1*x2*x4, x1*x2*x3", cardinality: 6, pdim_quotient: 2, spdim_quotient: 2, pdim_ideal: 1, spdim_ideal: 1, length: 2, order_dimension: 2, breadth: 2 },
];
