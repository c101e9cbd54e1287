//! Induced subgraphs of the icosahedron: restrict the stored 4-coloring, or
//! go greedy when triangle-free (degrees are then at most 2).

use crate::error::{bad_cert, Result};
use crate::generators::fixtures::{icosahedron, ICOSAHEDRON_COLORING};
use crate::graph::{Coloring, Graph};
use crate::recognition::is_triangle_free;

/// `embedding[v]` is the icosahedron vertex that `v` maps to.
pub fn validate_embedding(g: &Graph, embedding: &[usize]) -> Result<()> {
    if embedding.len() != g.n() {
        return bad_cert(format!(
            "embedding has {} entries for {} vertices",
            embedding.len(),
            g.n()
        ));
    }
    let mut used = [false; 12];
    for &t in embedding {
        if t >= 12 || std::mem::replace(&mut used[t], true) {
            return bad_cert(format!("embedding target {t} out of range or repeated"));
        }
    }
    if icosahedron().induced(embedding) != *g {
        return bad_cert("embedding is not an induced copy");
    }
    Ok(())
}

pub fn color_icosahedral(g: &Graph, embedding: &[usize]) -> Result<Coloring> {
    validate_embedding(g, embedding)?;
    if is_triangle_free(g) {
        let mut c = Coloring::empty(g.n());
        for v in 0..g.n() {
            let col = c.least_free(g, v);
            c.set(v, col);
        }
        return Ok(c);
    }
    Ok(Coloring::from_total(embedding.iter().map(|&t| ICOSAHEDRON_COLORING[t]).collect()).compacted())
}
