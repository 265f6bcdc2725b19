use relgw::combinatorics::descending_tuples;
use relgw::invariants::LatticePoint;

/// All parameter-space lattice points with `x_i <= xmax`, `1 <= y <= ymax`.
pub fn parameter_space_points(m: usize, xmax: u32, ymax: u32) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    for xs in descending_tuples(m, xmax) {
        for y in 1..=ymax {
            let p = LatticePoint::new(xs.clone(), y).expect("y >= 1");
            if p.in_parameter_space() {
                out.push(p);
            }
        }
    }
    out
}

/// All lattice points with the parameter-space ordering but arbitrary
/// relation between `y` and `sum(x)`; used for the vanishing sweeps.
pub fn all_points(m: usize, xmax: u32, ymax: u32) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    for xs in descending_tuples(m, xmax) {
        for y in 1..=ymax {
            out.push(LatticePoint::new(xs.clone(), y).expect("y >= 1"));
        }
    }
    out
}
