//! Planar convex hulls with primitive integer edge normals.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::polytope::{Halfspace, LatticePolytope, Point};

fn cross(o: &[i64; 2], a: &[i64; 2], b: &[i64; 2]) -> i128 {
    (a[0] as i128 - o[0] as i128) * (b[1] as i128 - o[1] as i128)
        - (a[1] as i128 - o[1] as i128) * (b[0] as i128 - o[0] as i128)
}

/// Counterclockwise hull vertices (collinear points dropped), starting at
/// the lexicographically smallest point.
pub fn hull_vertices(points: &[[i64; 2]]) -> Vec<[i64; 2]> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<[i64; 2]> = Vec::with_capacity(pts.len());
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<[i64; 2]> = Vec::with_capacity(pts.len());
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Outward primitive normal of the counterclockwise edge `p -> q`, with the
/// tight right-hand side.
fn edge_halfspace(p: &[i64; 2], q: &[i64; 2]) -> Result<Halfspace> {
    let dx = q[0].checked_sub(p[0]).ok_or(Error::Overflow("building hull edges"))?;
    let dy = q[1].checked_sub(p[1]).ok_or(Error::Overflow("building hull edges"))?;
    let g = dx.gcd(&dy);
    let normal = vec![dy / g, -dx / g];
    let rhs = normal[0] as i128 * p[0] as i128 + normal[1] as i128 * p[1] as i128;
    let rhs = i64::try_from(rhs).map_err(|_| Error::Overflow("building hull edges"))?;
    Ok(Halfspace { normal, rhs })
}

/// Convex hull of planar lattice points with one half-space per edge.
pub fn hull2d(points: &[Point]) -> Result<LatticePolytope> {
    let pts = points
        .iter()
        .map(|p| match p.as_slice() {
            [x, y] => Ok([*x, *y]),
            _ => Err(Error::InvalidArgument(format!("hull2d expects planar points, got {p:?}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    let hull = hull_vertices(&pts);
    if hull.len() < 3 {
        return Err(Error::Degenerate("points are collinear or fewer than three".into()));
    }
    let halfspaces = hull
        .iter()
        .zip(hull.iter().cycle().skip(1))
        .map(|(p, q)| edge_halfspace(p, q))
        .collect::<Result<Vec<_>>>()?;
    let vertices = hull.iter().map(|p| p.to_vec()).collect();
    LatticePolytope::new(2, vertices, Some(halfspaces))
}

/// Lattice length of each edge of a polygon with half-spaces: the gcd of the
/// coordinates of the edge vector between the extreme tight points.
pub fn edge_lattice_lengths(p: &LatticePolytope) -> Result<Vec<u64>> {
    if p.dimension() != 2 {
        return Err(Error::InvalidArgument("edge lengths need a polygon".into()));
    }
    let hs = p.halfspaces().ok_or(Error::MissingHalfspaces)?;
    hs.iter()
        .map(|h| {
            let tight: Vec<&Point> = p.vertices().iter().filter(|v| h.is_tight(v)).collect();
            // tight points are collinear; the extremes along the edge span it
            let along = |v: &Point| -(h.normal[1] as i128) * v[0] as i128 + h.normal[0] as i128 * v[1] as i128;
            let lo = tight.iter().min_by_key(|v| along(v));
            let hi = tight.iter().max_by_key(|v| along(v));
            match (lo, hi) {
                (Some(a), Some(b)) => {
                    let dx = (b[0] - a[0]).unsigned_abs();
                    let dy = (b[1] - a[1]).unsigned_abs();
                    let len = dx.gcd(&dy);
                    if len == 0 {
                        Err(Error::Inconsistent(format!(
                            "half-space {:?} touches a single vertex, not an edge",
                            h.normal
                        )))
                    } else {
                        Ok(len)
                    }
                }
                _ => Err(Error::Inconsistent("half-space not attained".into())),
            }
        })
        .collect()
}
