//! Extending a coloring of `G1` across a generalized 2-join whose `G2` side is
//! a canonical interval strip, an antihat, strange or gear ribbon.
//!
//! Each extender takes a coloring on the host's vertex ids with exactly `V1`
//! colored, and a palette `0..palette` with `palette >= Δ₂(g) + 3`. No color
//! outside that palette is ever used.

use crate::certificates::{StripData, StripKind, TwoJoinCert};
use crate::error::{invalid, Error, Result};
use crate::graph::{Coloring, Graph};
use crate::params::{check_partial_proper, check_proper, delta2_or_zero};

fn prepare(g: &Graph, cert: &TwoJoinCert, kind: StripKind, coloring1: &Coloring, palette: usize) -> Result<Coloring> {
    if cert.kind() != kind {
        return invalid(format!("expected a {kind:?} certificate, got {:?}", cert.kind()));
    }
    cert.validate(g)?;
    if coloring1.len() != g.n() {
        return invalid("coloring length differs from the vertex count");
    }
    let floor = delta2_or_zero(g) + 3;
    if palette < floor {
        return Err(Error::InsufficientPalette {
            palette,
            required: floor,
        });
    }
    for &v in &cert.v1 {
        match coloring1.get(v) {
            None => return invalid(format!("vertex {v} of V1 is uncolored")),
            Some(c) if c >= palette => return invalid(format!("vertex {v} has color {c} outside the palette")),
            _ => {}
        }
    }
    if let Some(&v) = cert.v2.iter().find(|&&v| coloring1.get(v).is_some()) {
        return invalid(format!("vertex {v} of V2 is already colored"));
    }
    check_partial_proper(g, coloring1)?;
    Ok(coloring1.clone())
}

fn greedy(g: &Graph, c: &mut Coloring, v: usize, palette: usize, avoid: &[usize]) -> Result<usize> {
    let col = (0..palette)
        .find(|&k| !avoid.contains(&k) && g.neighbors(v).all(|w| c.get(w) != Some(k)))
        .ok_or(Error::PaletteExhausted { vertex: v, palette })?;
    c.set(v, col);
    Ok(col)
}

fn finish(g: &Graph, c: Coloring) -> Result<Coloring> {
    check_proper(g, &c)?;
    Ok(c)
}

/// `b` (leftmost vertex of `Y2`) first, then the rest of the strip left to right.
pub fn extend_canonical_interval_2join(
    g: &Graph,
    cert: &TwoJoinCert,
    coloring1: &Coloring,
    palette: usize,
) -> Result<Coloring> {
    let mut c = prepare(g, cert, StripKind::CanonicalInterval, coloring1, palette)?;
    let StripData::CanonicalInterval { order, .. } = &cert.strip else {
        unreachable!()
    };
    let b = order[order.len() - cert.y2.len()];
    greedy(g, &mut c, b, palette, &[])?;
    for &v in order.iter().filter(|&&v| v != b) {
        greedy(g, &mut c, v, palette, &[])?;
    }
    finish(g, c)
}

/// Picks the first index `i` with `a_i` and `c_i` both present, gives them one
/// color, then colors `B'`, the rest of `A'`, the rest of `C'`.
pub fn extend_antihat_2join(g: &Graph, cert: &TwoJoinCert, coloring1: &Coloring, palette: usize) -> Result<Coloring> {
    let mut c = prepare(g, cert, StripKind::Antihat, coloring1, palette)?;
    let StripData::Antihat { a, b, c: cc } = &cert.strip else {
        unreachable!()
    };
    let Some(i) = (0..a.len()).find(|&i| a[i].is_some() && cc[i].is_some()) else {
        return Err(Error::InvalidCertificate("no index keeps both a_i and c_i".into()));
    };
    let (ai, ci) = (a[i].unwrap(), cc[i].unwrap());
    let pi = greedy(g, &mut c, ai, palette, &[])?;
    c.set(ci, pi);
    for v in b.iter().flatten() {
        greedy(g, &mut c, *v, palette, &[])?;
    }
    for v in a.iter().flatten().filter(|&&v| v != ai) {
        greedy(g, &mut c, *v, palette, &[])?;
    }
    for v in cc.iter().flatten().filter(|&&v| v != ci) {
        greedy(g, &mut c, *v, palette, &[])?;
    }
    finish(g, c)
}

/// `A ∪ B` greedily, then `c2`, then `c1`.
pub fn extend_strange_2join(g: &Graph, cert: &TwoJoinCert, coloring1: &Coloring, palette: usize) -> Result<Coloring> {
    let mut c = prepare(g, cert, StripKind::Strange, coloring1, palette)?;
    let StripData::Strange { a, b, c: cc } = &cert.strip else {
        unreachable!()
    };
    for &v in a.iter().chain(b).chain([&cc[1], &cc[0]]) {
        greedy(g, &mut c, v, palette, &[])?;
    }
    finish(g, c)
}

/// Distinct colors on `v1, v2, v4, v5`, copied to `v8, v6, v7, v3`; then
/// `v9`, `v10` greedily when present.
pub fn extend_gear_2join(g: &Graph, cert: &TwoJoinCert, coloring1: &Coloring, palette: usize) -> Result<Coloring> {
    let mut c = prepare(g, cert, StripKind::Gear, coloring1, palette)?;
    let StripData::Gear { v } = &cert.strip else {
        unreachable!()
    };
    let r = |i: usize| v[i - 1].unwrap();
    let mut used = Vec::with_capacity(4);
    for i in [1, 2, 4, 5] {
        let col = greedy(g, &mut c, r(i), palette, &used)?;
        used.push(col);
    }
    for (dst, src) in [(3, 5), (6, 2), (7, 4), (8, 1)] {
        c.set(r(dst), c.get(r(src)).unwrap());
    }
    for x in v[8..].iter().flatten() {
        greedy(g, &mut c, *x, palette, &[])?;
    }
    finish(g, c)
}

/// Dispatches on the certificate's strip kind.
pub fn extend_2join(g: &Graph, cert: &TwoJoinCert, coloring1: &Coloring, palette: usize) -> Result<Coloring> {
    match cert.kind() {
        StripKind::CanonicalInterval => extend_canonical_interval_2join(g, cert, coloring1, palette),
        StripKind::Antihat => extend_antihat_2join(g, cert, coloring1, palette),
        StripKind::Strange => extend_strange_2join(g, cert, coloring1, palette),
        StripKind::Gear => extend_gear_2join(g, cert, coloring1, palette),
    }
}
