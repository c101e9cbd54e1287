//! Claw-free graphs covered by three cliques: peel triads, one fresh color
//! each, down to a triad-free base colored optimally.

use crate::certificates::ThreeCliquedCert;
use crate::colorers::cover::color_alpha2;
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::recognition::{find_claw, find_triad};

/// Largest codegree of two vertices in the same part; 0 when no part has two vertices.
pub fn within_part_codegree(g: &Graph, cert: &ThreeCliquedCert) -> usize {
    cert.parts()
        .iter()
        .flat_map(|p| {
            p.iter()
                .enumerate()
                .flat_map(move |(i, &u)| p[i + 1..].iter().map(move |&v| (u, v)))
        })
        .map(|(u, v)| g.common_count(u, v))
        .max()
        .unwrap_or(0)
}

pub fn color_three_cliqued(g: &Graph, cert: &ThreeCliquedCert) -> Result<Coloring> {
    cert.validate(g)?;
    if let Some(w) = find_claw(g) {
        return Err(Error::Rejected {
            reason: "three-cliqued colorer needs a claw-free graph".into(),
            witness: w,
        });
    }
    let part = cert.part_of(g.n());
    let alive: Vec<usize> = (0..g.n()).collect();
    let mut out = Coloring::empty(g.n());
    peel(g, &part, &alive, &mut out)?;
    Ok(out)
}

fn peel(g: &Graph, part: &[usize], alive: &[usize], out: &mut Coloring) -> Result<()> {
    let sub = g.induced(alive);
    let Some(t) = find_triad(&sub) else {
        let base = color_alpha2(&sub)?;
        for (i, &v) in alive.iter().enumerate() {
            out.set(v, base.get(i).unwrap());
        }
        return Ok(());
    };
    let triad: Vec<usize> = t.vertices.iter().map(|&i| alive[i]).collect();
    if let Some(colors) = small_corner(g, part, alive, &triad) {
        for (v, c) in colors {
            out.set(v, c);
        }
        return Ok(());
    }
    let rest: Vec<usize> = alive.iter().copied().filter(|v| !triad.contains(v)).collect();
    peel(g, part, &rest, out)?;
    let fresh = rest.iter().filter_map(|&v| out.get(v)).max().map_or(0, |c| c + 1);
    for v in triad {
        out.set(v, fresh);
    }
    Ok(())
}

/// Six vertices, each part `{a_i, b_i}` with the `a_i` forming the triad and
/// the `b_i` a triangle, no `a_i b_j` edges for `i ≠ j`. Colors `a_i` and
/// `b_{i+1}` alike, which is a proper 3-coloring.
fn small_corner(g: &Graph, part: &[usize], alive: &[usize], triad: &[usize]) -> Option<Vec<(usize, usize)>> {
    if alive.len() != 6 {
        return None;
    }
    let mut a = [usize::MAX; 3];
    let mut b = [usize::MAX; 3];
    for &v in triad {
        a[part[v]] = v;
    }
    for &v in alive.iter().filter(|v| !triad.contains(v)) {
        if b[part[v]] != usize::MAX {
            return None;
        }
        b[part[v]] = v;
    }
    if a.contains(&usize::MAX) || b.contains(&usize::MAX) || !g.is_clique(&b) {
        return None;
    }
    let crossed = (0..3).any(|i| (0..3).any(|j| i != j && g.has_edge(a[i], b[j])));
    if crossed {
        return None;
    }
    Some((0..3).flat_map(|i| [(a[i], i), (b[(i + 1) % 3], i)]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::check_proper;

    /// Triad `a1 a2 a3` (0, 1, 2), triangle `b1 b2 b3` (3, 4, 5), `a_i b_i` edges.
    fn corner() -> (Graph, ThreeCliquedCert) {
        let g = Graph::from_edges(6, &[(3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        let cert = ThreeCliquedCert {
            k1: vec![0, 3],
            k2: vec![1, 4],
            k3: vec![2, 5],
        };
        (g, cert)
    }

    #[test]
    fn corner_case_gets_three_colors() {
        let (g, cert) = corner();
        let c = color_three_cliqued(&g, &cert).unwrap();
        check_proper(&g, &c).unwrap();
        assert_eq!(c.num_colors(), 3);
        assert_eq!(within_part_codegree(&g, &cert), 0);
        assert_eq!(c.get(0), c.get(4));
        assert_eq!(c.get(1), c.get(5));
        assert_eq!(c.get(2), c.get(3));
    }

    #[test]
    fn clique_split_three_ways() {
        let g = Graph::complete(7);
        let cert = ThreeCliquedCert {
            k1: vec![0, 1, 2],
            k2: vec![3, 4],
            k3: vec![5, 6],
        };
        let c = color_three_cliqued(&g, &cert).unwrap();
        assert_eq!(c.num_colors(), 7);
        assert!(c.num_colors() <= within_part_codegree(&g, &cert) + 3);
    }

    #[test]
    fn rejects_claws_and_bad_covers() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let cert = ThreeCliquedCert {
            k1: vec![0, 1],
            k2: vec![2],
            k3: vec![3],
        };
        assert!(matches!(color_three_cliqued(&claw, &cert), Err(Error::Rejected { .. })));
        let bad = ThreeCliquedCert {
            k1: vec![1, 2],
            k2: vec![0],
            k3: vec![3],
        };
        assert!(color_three_cliqued(&claw, &bad).is_err());
    }
}
