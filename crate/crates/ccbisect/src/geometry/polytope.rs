//! Convex polytopes in R^3 as face lists, with half-space clipping and
//! volume via the divergence theorem.

use super::aabb::Aabb;
use super::vector::Vec3;

/// Convex polytope; each face is a planar convex polygon wound CCW as seen
/// from outside.
#[derive(Clone, Debug)]
pub struct Polytope {
    pub faces: Vec<Vec<Vec3>>,
}

pub fn cube_polytope(b: &Aabb<3>) -> Polytope {
    let v = |x: usize, y: usize, z: usize| {
        Vec3::new(
            if x == 0 { b.lo[0] } else { b.hi[0] },
            if y == 0 { b.lo[1] } else { b.hi[1] },
            if z == 0 { b.lo[2] } else { b.hi[2] },
        )
    };
    Polytope {
        faces: vec![
            // -x, +x
            vec![v(0, 0, 0), v(0, 0, 1), v(0, 1, 1), v(0, 1, 0)],
            vec![v(1, 0, 0), v(1, 1, 0), v(1, 1, 1), v(1, 0, 1)],
            // -y, +y
            vec![v(0, 0, 0), v(1, 0, 0), v(1, 0, 1), v(0, 0, 1)],
            vec![v(0, 1, 0), v(0, 1, 1), v(1, 1, 1), v(1, 1, 0)],
            // -z, +z
            vec![v(0, 0, 0), v(0, 1, 0), v(1, 1, 0), v(1, 0, 0)],
            vec![v(0, 0, 1), v(1, 0, 1), v(1, 1, 1), v(0, 1, 1)],
        ],
    }
}

/// Keeps the part with `<x, n> >= offset`. The section polygon is rebuilt by
/// sorting cut points around the section plane.
pub fn clip_polytope(p: &Polytope, n: Vec3, offset: f64) -> Polytope {
    let mut faces = Vec::with_capacity(p.faces.len() + 1);
    let mut cut_points: Vec<Vec3> = Vec::new();
    for face in &p.faces {
        let mut out = Vec::with_capacity(face.len() + 2);
        let m = face.len();
        for i in 0..m {
            let cur = face[i];
            let nxt = face[(i + 1) % m];
            let dc = cur.dot(&n) - offset;
            let dn = nxt.dot(&n) - offset;
            if dc >= 0.0 {
                out.push(cur);
            }
            if (dc >= 0.0) != (dn >= 0.0) {
                let t = dc / (dc - dn);
                let x = cur + (nxt - cur) * t;
                out.push(x);
                cut_points.push(x);
            }
        }
        if out.len() >= 3 {
            faces.push(out);
        }
    }
    // Cap face on the section plane, outward normal -n.
    if cut_points.len() >= 3 {
        let centroid = cut_points
            .iter()
            .fold(Vec3::zero(), |acc, p| acc + *p)
            * (1.0 / cut_points.len() as f64);
        let e1 = n.any_perp();
        let e2 = n.cross(&e1);
        // CCW around -n means CW around +n.
        cut_points.sort_by(|a, b| {
            let pa = *a - centroid;
            let pb = *b - centroid;
            let aa = pa.dot(&e2).atan2(pa.dot(&e1));
            let ab = pb.dot(&e2).atan2(pb.dot(&e1));
            ab.total_cmp(&aa)
        });
        cut_points.dedup_by(|a, b| a.dist(b) < 1e-12);
        if cut_points.len() >= 3 {
            faces.push(cut_points);
        }
    }
    Polytope { faces }
}

pub fn polytope_volume(p: &Polytope) -> f64 {
    let mut six_v = 0.0;
    for face in &p.faces {
        if face.len() < 3 {
            continue;
        }
        let v0 = face[0];
        for i in 1..face.len() - 1 {
            six_v += v0.dot(&face[i].cross(&face[i + 1]));
        }
    }
    (six_v / 6.0).max(0.0)
}
