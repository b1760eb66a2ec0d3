pub mod k4_table;
pub mod oracles;
