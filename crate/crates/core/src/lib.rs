pub mod coeff;
pub mod free_series;
pub mod jacdim;
pub mod json;
pub mod linalg;
pub mod path_algebra;
pub mod qp_mutation;
pub mod quiver;
pub mod reddening;
pub mod x7;
