use crate::geometry::Aabb;
use crate::mesh::CurvilinearMesh;

/// Uniform bucket grid over the source mesh's bounding box; each bucket
/// lists the source cells whose hull box touches it.
#[derive(Clone, Debug)]
pub struct PairIndex {
    bbox: Aabb,
    nx: usize,
    ny: usize,
    buckets: Vec<Vec<usize>>,
    boxes: Vec<Aabb>,
}

impl PairIndex {
    pub fn new(source: &CurvilinearMesh) -> Self {
        let boxes: Vec<Aabb> = (0..source.num_cells()).map(|i| source.cell_bbox(i)).collect();
        let bbox = source.bbox();
        let side = (source.num_cells() as f64).sqrt().ceil().max(1.0) as usize;
        let (nx, ny) = (side, side);
        let mut idx = Self { bbox, nx, ny, buckets: vec![Vec::new(); nx * ny], boxes };
        for i in 0..idx.boxes.len() {
            let (x0, x1, y0, y1) = idx.range(&idx.boxes[i]);
            for by in y0..=y1 {
                for bx in x0..=x1 {
                    idx.buckets[by * nx + bx].push(i);
                }
            }
        }
        idx
    }

    fn range(&self, b: &Aabb) -> (usize, usize, usize, usize) {
        let cell = |v: f64, lo: f64, w: f64, n: usize| -> usize {
            if w <= 0.0 {
                return 0;
            }
            (((v - lo) / w * n as f64).floor().max(0.0) as usize).min(n - 1)
        };
        (
            cell(b.min.x, self.bbox.min.x, self.bbox.width(), self.nx),
            cell(b.max.x, self.bbox.min.x, self.bbox.width(), self.nx),
            cell(b.min.y, self.bbox.min.y, self.bbox.height(), self.ny),
            cell(b.max.y, self.bbox.min.y, self.bbox.height(), self.ny),
        )
    }

    /// Source cells whose hull boxes overlap `b`, ascending.
    pub fn query(&self, b: &Aabb) -> Vec<usize> {
        if !b.overlaps(&self.bbox) {
            return Vec::new();
        }
        let (x0, x1, y0, y1) = self.range(b);
        let mut out = Vec::new();
        for by in y0..=y1 {
            for bx in x0..=x1 {
                out.extend(self.buckets[by * self.nx + bx].iter().copied().filter(|&i| self.boxes[i].overlaps(b)));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// All `(source, target)` pairs whose cell hull boxes overlap.
pub fn candidate_pairs(source: &CurvilinearMesh, target: &CurvilinearMesh) -> Vec<(usize, usize)> {
    let idx = PairIndex::new(source);
    (0..target.num_cells())
        .flat_map(|t| idx.query(&target.cell_bbox(t)).into_iter().map(move |s| (s, t)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point2;
    use crate::mesh::{gen_deformed_square_mesh, DeformKind};

    #[test]
    fn identical_meshes_pair_with_themselves() {
        let m = gen_deformed_square_mesh(4, DeformKind::Identity, 0.0, 2).unwrap();
        let p = candidate_pairs(&m, &m);
        for t in 0..m.num_cells() {
            assert!(p.contains(&(t, t)));
        }
    }

    #[test]
    fn disjoint_domains_have_no_pairs() {
        let m = gen_deformed_square_mesh(3, DeformKind::Identity, 0.0, 1).unwrap();
        let far = m.map_points(|p| p + Point2::new(5.0, 0.0)).unwrap();
        assert!(candidate_pairs(&m, &far).is_empty());
    }
}
