//! Normal-boundary-intersection / normal-constraint front tracing:
//! anchors, evenly spaced base points on the utopia line, one constrained
//! solve per base point.
//!
//! Run: `cargo run --example nbi_nc`

use pareto_kit::problems::example2;
use pareto_kit::scalarize::{nbi_nc_front, GridSearch, NbiGeometry};

fn main() {
    let problem = example2();
    let optimizer = GridSearch::default();
    let budget = 100_000;

    // Anchors minimize one objective each (ties broken toward the other
    // objective): A1 = F(0) = (-1, 19), A2 = F(3) = (5, 1).
    let geometry = NbiGeometry::compute(&problem, 7, &optimizer, budget, 0).unwrap();
    println!(
        "anchors: A1 = ({:.3}, {:.3}) at x = {:.3};  A2 = ({:.3}, {:.3}) at x = {:.3}",
        geometry.anchors[0][0],
        geometry.anchors[0][1],
        geometry.anchor_points[0][0],
        geometry.anchors[1][0],
        geometry.anchors[1][1],
        geometry.anchor_points[1][0],
    );
    println!("utopia line A1 - A2 = {:?}", geometry.utopia_line);
    println!("base points on the line:");
    for (j, b) in geometry.base_points.iter().enumerate() {
        println!("  F_p{j} = ({:7.3}, {:7.3})", b[0], b[1]);
    }

    // Solve min f2 in the half-space at each base point, then apply the
    // NC filtering step. The solutions walk the front from one anchor to
    // the other with monotone f2.
    let sweep = nbi_nc_front(&problem, 7, &optimizer, budget, 0).unwrap();
    println!("\ntraced front ({} points):", sweep.len());
    for row in sweep.rows() {
        println!(
            "  {}  x = {:.4}  f = ({:8.4}, {:8.4})",
            row.param_json, row.solution.x[0], row.solution.f[0], row.solution.f[1]
        );
    }
}
