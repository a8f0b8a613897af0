//! Clipping of two curved polygons.
//!
//! Both boundaries are cut at every corner and every contact point with the
//! other boundary. Each resulting piece is classified against the other
//! polygon (inside, outside, or on its boundary with the same or opposite
//! direction), and the pieces bounding the intersection are chained into
//! loops. Following the subject while it is inside the clip and switching to
//! the clip boundary at exit points is exactly the alternating traversal of
//! the two node lists; classifying pieces instead of individual crossings
//! also covers touching corners, shared edges and containment.

mod intersect;

pub use intersect::{span_contacts, span_roots, Contact, SpanRoot, DEDUP_TOL, NEWTON_TOL, TRANSVERSAL_TOL};

use std::collections::HashMap;

use thiserror::Error;

use crate::geometry::{CurveSpan, CurvedPolygon, Location, Point2, SNAP_TOL};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Crossing {
    Entry,
    Exit,
}

/// Intersection between a subject span and a clip span.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveIntersection {
    pub point: Point2,
    /// Local parameter on the subject span.
    pub t: f64,
    /// Local parameter on the clip span.
    pub s: f64,
    pub subject_span: usize,
    pub clip_span: usize,
    /// `None` until classified, or when the crossing is degenerate.
    pub kind: Option<Crossing>,
    pub transversal: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    None,
    SubjectInClip,
    ClipInSubject,
}

#[derive(Clone, Debug)]
pub struct ClipResult {
    pub loops: Vec<CurvedPolygon>,
    pub containment: Containment,
    /// Cleaned boundary contact points, labeled where transversal.
    pub intersections: Vec<CurveIntersection>,
}

impl ClipResult {
    pub fn empty() -> Self {
        Self {
            loops: Vec::new(),
            containment: Containment::None,
            intersections: Vec::new(),
        }
    }

    pub fn area(&self) -> f64 {
        self.loops.iter().map(|l| l.signed_area()).sum()
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClipError {
    #[error("clip traversal reached a dead end at {0:?} ({1} pieces kept)")]
    DeadEnd(Point2, usize),
    #[error("clip traversal did not close (started at {0:?})")]
    NotClosed(Point2),
    #[error("clip produced a loop with negative area {0:.3e}")]
    NegativeLoop(f64),
}

/// All intersections of two spans (unlabeled; span indices zero).
pub fn intersect_curves(a: &CurveSpan, b: &CurveSpan) -> Vec<CurveIntersection> {
    span_roots(a, b)
        .into_iter()
        .map(|r| CurveIntersection {
            point: r.point,
            t: r.u,
            s: r.v,
            subject_span: 0,
            clip_span: 0,
            kind: None,
            transversal: r.transversal,
        })
        .collect()
}

/// Probe offset in local span parameter for the fallback classification.
const PROBE: f64 = 1e-4;

/// Entry if the subject boundary passes from outside to inside the clip.
/// Returns `None` for degenerate contacts.
pub fn classify(inter: &CurveIntersection, subject: &CurvedPolygon, clip: &CurvedPolygon) -> Option<Crossing> {
    let ss = &subject.spans()[inter.subject_span];
    let cs = &clip.spans()[inter.clip_span];
    let ts = ss.tangent_at(inter.t).normalized();
    let tc = cs.tangent_at(inter.s).normalized();
    let c = tc.cross(ts);
    if c.abs() > TRANSVERSAL_TOL && inter.t > 0.0 && inter.t < 1.0 && inter.s > 0.0 && inter.s < 1.0 {
        return Some(if c > 0.0 { Crossing::Entry } else { Crossing::Exit });
    }
    let n = subject.len();
    let probe = |du: f64| -> Point2 {
        let u = inter.t + du;
        if u < 0.0 {
            subject.spans()[(inter.subject_span + n - 1) % n].point_at(1.0 + u)
        } else if u > 1.0 {
            subject.spans()[(inter.subject_span + 1) % n].point_at(u - 1.0)
        } else {
            ss.point_at(u)
        }
    };
    match (clip.locate(probe(-PROBE)), clip.locate(probe(PROBE))) {
        (Location::Outside, Location::Inside) => Some(Crossing::Entry),
        (Location::Inside, Location::Outside) => Some(Crossing::Exit),
        _ => None,
    }
}

/// Cleans raw intersections: snaps points to nearby polygon corners, merges
/// duplicates (a corner found on both incident spans) and drops touching
/// contacts that do not change the inside/outside state.
pub fn handle_degeneracies(
    subject: &CurvedPolygon,
    clip: &CurvedPolygon,
    raw: Vec<CurveIntersection>,
) -> Vec<CurveIntersection> {
    let corners: Vec<Point2> = subject.corners().into_iter().chain(clip.corners()).collect();
    let mut out: Vec<CurveIntersection> = Vec::new();
    for mut r in raw {
        if let Some(c) = corners.iter().find(|c| c.dist(r.point) <= SNAP_TOL) {
            r.point = *c;
        }
        if out.iter().any(|o| o.point.dist(r.point) <= SNAP_TOL) {
            continue;
        }
        r.kind = classify(&r, subject, clip);
        if r.kind.is_none() && !r.transversal {
            continue;
        }
        out.push(r);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    In,
    Out,
    OnSame,
    OnOpposite,
}

#[derive(Clone, Copy, Debug)]
struct Piece {
    clip: bool,
    span: usize,
    u0: f64,
    u1: f64,
    from: usize,
    to: usize,
}

struct Nodes {
    points: Vec<Point2>,
    parent: Vec<usize>,
}

impl Nodes {
    fn add(&mut self, p: Point2) -> usize {
        self.points.push(p);
        self.parent.push(self.parent.len());
        self.points.len() - 1
    }

    fn find(&mut self, i: usize) -> usize {
        let mut r = i;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut k = i;
        while self.parent[k] != r {
            let next = self.parent[k];
            self.parent[k] = r;
            k = next;
        }
        r
    }

    fn merge_close(&mut self) {
        let n = self.points.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| self.points[a].x.total_cmp(&self.points[b].x));
        for (ia, &a) in order.iter().enumerate() {
            for &b in &order[ia + 1..] {
                if self.points[b].x - self.points[a].x > SNAP_TOL {
                    break;
                }
                if self.points[a].dist(self.points[b]) <= SNAP_TOL {
                    let (ra, rb) = (self.find(a), self.find(b));
                    if ra != rb {
                        // lower index wins so corners (added first) stay representative
                        let (lo, hi) = (ra.min(rb), ra.max(rb));
                        self.parent[hi] = lo;
                    }
                }
            }
        }
    }
}

fn build_pieces(occ: &mut [Vec<(f64, usize)>], nodes: &mut Nodes, clip: bool) -> Vec<Piece> {
    let mut pieces = Vec::new();
    for (span, list) in occ.iter_mut().enumerate() {
        for e in list.iter_mut() {
            e.1 = nodes.find(e.1);
        }
        list.sort_by(|a, b| a.0.total_cmp(&b.0));
        list.dedup_by(|b, a| a.1 == b.1);
        for w in list.windows(2) {
            let ((u0, a), (u1, b)) = (w[0], w[1]);
            if a != b && u1 > u0 {
                pieces.push(Piece {
                    clip,
                    span,
                    u0,
                    u1,
                    from: a,
                    to: b,
                });
            }
        }
    }
    pieces
}

fn piece_span<'a>(p: &Piece, subject: &'a CurvedPolygon, clip: &'a CurvedPolygon) -> &'a CurveSpan {
    if p.clip {
        &clip.spans()[p.span]
    } else {
        &subject.spans()[p.span]
    }
}

fn classify_piece(span: &CurveSpan, u0: f64, u1: f64, other: &CurvedPolygon) -> Side {
    for frac in [0.5, 0.25, 0.75] {
        let u = u0 + frac * (u1 - u0);
        match other.locate(span.point_at(u)) {
            Location::Inside => return Side::In,
            Location::Outside => return Side::Out,
            Location::Boundary => {}
        }
    }
    let u = 0.5 * (u0 + u1);
    let p = span.point_at(u);
    let hit = other.closest_boundary(p);
    let t_other = other.spans()[hit.span].tangent_at(hit.u);
    if span.tangent_at(u).dot(t_other) >= 0.0 {
        Side::OnSame
    } else {
        Side::OnOpposite
    }
}

/// Clockwise angle in `[0, 2π)` from `from` to `to`.
fn cw_angle(from: Point2, to: Point2) -> f64 {
    let ccw = from.cross(to).atan2(from.dot(to));
    let cw = -ccw;
    if cw < 0.0 {
        cw + std::f64::consts::TAU
    } else {
        cw
    }
}

/// Intersection of two counterclockwise curved polygons.
pub fn wa_clip(subject: &CurvedPolygon, clip: &CurvedPolygon) -> Result<ClipResult, ClipError> {
    if !subject.bbox().expanded(SNAP_TOL).overlaps(&clip.bbox()) {
        return Ok(ClipResult::empty());
    }
    let mut nodes = Nodes {
        points: Vec::new(),
        parent: Vec::new(),
    };
    let ns = subject.len();
    let nc = clip.len();
    let mut occ_s: Vec<Vec<(f64, usize)>> = vec![Vec::new(); ns];
    let mut occ_c: Vec<Vec<(f64, usize)>> = vec![Vec::new(); nc];
    for (k, s) in subject.spans().iter().enumerate() {
        let id = nodes.add(s.start());
        occ_s[k].push((0.0, id));
        occ_s[(k + ns - 1) % ns].push((1.0, id));
    }
    for (k, s) in clip.spans().iter().enumerate() {
        let id = nodes.add(s.start());
        occ_c[k].push((0.0, id));
        occ_c[(k + nc - 1) % nc].push((1.0, id));
    }
    let mut raw = Vec::new();
    let clip_boxes: Vec<_> = clip.spans().iter().map(|s| s.bbox().expanded(SNAP_TOL)).collect();
    for (i, a) in subject.spans().iter().enumerate() {
        let ba = a.bbox();
        for (j, b) in clip.spans().iter().enumerate() {
            if !ba.overlaps(&clip_boxes[j]) {
                continue;
            }
            let pts = match span_contacts(a, b) {
                Contact::Overlap(p) => p,
                Contact::Points(p) => {
                    for r in &p {
                        raw.push(CurveIntersection {
                            point: r.point,
                            t: r.u,
                            s: r.v,
                            subject_span: i,
                            clip_span: j,
                            kind: None,
                            transversal: r.transversal,
                        });
                    }
                    p
                }
            };
            for r in pts {
                let id = nodes.add(r.point);
                occ_s[i].push((r.u, id));
                occ_c[j].push((r.v, id));
            }
        }
    }
    nodes.merge_close();
    let mut pieces = build_pieces(&mut occ_s, &mut nodes, false);
    pieces.extend(build_pieces(&mut occ_c, &mut nodes, true));

    let sides: Vec<Side> = pieces
        .iter()
        .map(|p| {
            let other = if p.clip { subject } else { clip };
            classify_piece(piece_span(p, subject, clip), p.u0, p.u1, other)
        })
        .collect();
    let keep: Vec<usize> = (0..pieces.len())
        .filter(|&k| match (pieces[k].clip, sides[k]) {
            (false, Side::In | Side::OnSame) => true,
            (true, Side::In) => true,
            _ => false,
        })
        .collect();

    let subject_all = pieces.iter().zip(&sides).filter(|(p, _)| !p.clip).all(|(_, s)| matches!(s, Side::In | Side::OnSame));
    let clip_all = pieces.iter().zip(&sides).filter(|(p, _)| p.clip).all(|(_, s)| matches!(s, Side::In | Side::OnSame));
    let containment = if subject_all {
        Containment::SubjectInClip
    } else if clip_all {
        Containment::ClipInSubject
    } else {
        Containment::None
    };

    let mut outgoing: HashMap<usize, Vec<usize>> = HashMap::new();
    for &k in &keep {
        outgoing.entry(pieces[k].from).or_default().push(k);
    }
    let mut used: HashMap<usize, bool> = keep.iter().map(|&k| (k, false)).collect();
    let mut loops = Vec::new();
    for &start in &keep {
        if used[&start] {
            continue;
        }
        used.insert(start, true);
        let mut chain = vec![start];
        let mut cur = pieces[start].to;
        while cur != pieces[start].from {
            let last = &pieces[*chain.last().unwrap()];
            let cands: Vec<usize> = outgoing
                .get(&cur)
                .map(|v| v.iter().copied().filter(|k| !used[k]).collect())
                .unwrap_or_default();
            let next = match cands.len() {
                0 => return Err(ClipError::DeadEnd(nodes.points[cur], keep.len())),
                1 => cands[0],
                _ => {
                    let din = piece_span(last, subject, clip).tangent_at(last.u1) * (last.u1 - last.u0).signum();
                    let r = -din;
                    *cands
                        .iter()
                        .min_by(|&&x, &&y| {
                            let px = &pieces[x];
                            let py = &pieces[y];
                            let dx = piece_span(px, subject, clip).tangent_at(px.u0);
                            let dy = piece_span(py, subject, clip).tangent_at(py.u0);
                            cw_angle(r, dx).total_cmp(&cw_angle(r, dy))
                        })
                        .unwrap()
                }
            };
            used.insert(next, true);
            chain.push(next);
            cur = pieces[next].to;
            if chain.len() > keep.len() {
                return Err(ClipError::NotClosed(nodes.points[pieces[start].from]));
            }
        }
        let poly = assemble(&chain, &pieces, subject, clip);
        let area = poly.signed_area();
        let scale = poly.bbox().diagonal();
        if area > 0.0 {
            loops.push(poly);
        } else if area < -1e-12 * scale * scale.max(1.0) {
            return Err(ClipError::NegativeLoop(area));
        }
    }

    let intersections = handle_degeneracies(subject, clip, raw);
    Ok(ClipResult {
        loops,
        containment,
        intersections,
    })
}

/// Turns a chain of pieces into a polygon, merging consecutive pieces of
/// the same span.
fn assemble(chain: &[usize], pieces: &[Piece], subject: &CurvedPolygon, clip: &CurvedPolygon) -> CurvedPolygon {
    let mut merged: Vec<Piece> = Vec::with_capacity(chain.len());
    for &k in chain {
        let p = pieces[k];
        if let Some(last) = merged.last_mut() {
            if last.clip == p.clip && last.span == p.span && last.u1 == p.u0 {
                last.u1 = p.u1;
                last.to = p.to;
                continue;
            }
        }
        merged.push(p);
    }
    if merged.len() > 1 {
        let first = merged[0];
        let last = merged[merged.len() - 1];
        if first.clip == last.clip && first.span == last.span && last.u1 == first.u0 {
            merged[0].u0 = last.u0;
            merged[0].from = last.from;
            merged.pop();
        }
    }
    let spans = merged
        .iter()
        .map(|p| piece_span(p, subject, clip).sub(p.u0, p.u1))
        .collect();
    CurvedPolygon::new_unchecked(spans)
}
