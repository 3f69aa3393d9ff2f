//! Recognition of `W_k`-subdivisions by degree-2 contraction.

use crate::connectivity::is_2connected;
use crate::graph::Graph;

/// Repeatedly contracts every degree-2 vertex until none remain.
///
/// Vertices are swept in ascending id order; a sweep that contracts nothing
/// ends the loop. Returns the number of sweeps that contracted something.
pub fn contract_degree_two(g: &mut Graph) -> usize {
    let mut sweeps = 0;
    loop {
        let mut contracted = 0;
        let ids: Vec<_> = g.vertices().collect();
        for v in ids {
            if g.degree(v) == Some(2) {
                g.contract_vertex(v).expect("degree-2 vertex is contractible");
                contracted += 1;
            }
        }
        if contracted == 0 {
            return sweeps;
        }
        sweeps += 1;
    }
}

/// If `g` is a `W_k`-subdivision, returns it with all degree-2 vertices
/// contracted; surviving vertices keep their ids.
///
/// The test is: `g` is 2-connected and its contraction has `k + 1` vertices,
/// `k` of degree 3 and one of degree `k`. For `k = 3` the contraction must be
/// four vertices of degree 3.
pub fn is_k_wheel(g: &Graph, k: usize) -> Option<Graph> {
    if k < 3 || !is_2connected(g) {
        return None;
    }
    let mut contracted = g.clone();
    contract_degree_two(&mut contracted);
    has_wheel_signature(&contracted, k).then_some(contracted)
}

fn has_wheel_signature(g: &Graph, k: usize) -> bool {
    if g.vertex_count() != k + 1 {
        return false;
    }
    let degree_count = |d: usize| g.vertices().filter(|&v| g.degree(v) == Some(d)).count();
    if k == 3 {
        degree_count(3) == 4
    } else {
        degree_count(3) == k && degree_count(k) == 1
    }
}
