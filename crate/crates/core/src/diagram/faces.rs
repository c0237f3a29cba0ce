use std::collections::{BTreeSet, HashMap};

use super::PlanarDiagram;
use crate::error::{Error, Result};

/// A corner of the projection: crossing index and corner index 0..3.
///
/// Corner `k` of a crossing sits between strand slots `k` and `k + 1`
/// (counterclockwise), so corners 0 and 2 lie on either side of the
/// under-strand's incoming/outgoing pair and are diagonally opposite.
pub type Corner = (usize, u8);

/// Regions of the projection as cycles of corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceComplex {
    faces: Vec<Vec<Corner>>,
    corner_face: HashMap<Corner, usize>,
    crossings: usize,
}

impl FaceComplex {
    pub fn faces(&self) -> &[Vec<Corner>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings
    }

    /// The face containing a corner.
    pub fn face_of(&self, corner: Corner) -> usize {
        self.corner_face[&corner]
    }
}

fn check_connected(d: &PlanarDiagram) -> Result<()> {
    let n = d.crossing_count();
    if n == 0 {
        return Ok(());
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut first_seen: HashMap<u32, usize> = HashMap::new();
    for (x, c) in d.crossings().iter().enumerate() {
        for &e in c {
            if let Some(&y) = first_seen.get(&e) {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                parent[a] = b;
            } else {
                first_seen.insert(e, x);
            }
        }
    }
    let root = find(&mut parent, 0);
    if (1..n).all(|x| find(&mut parent, x) == root) {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Traces the faces of a connected diagram.
///
/// From corner `(x, k)` the boundary leaves along the strand in slot `k + 1`;
/// at the far end of that edge, in slot `j` of crossing `y`, the same face
/// continues in corner `(y, j)`.
pub fn build_faces(d: &PlanarDiagram) -> Result<FaceComplex> {
    check_connected(d)?;
    let n = d.crossing_count();
    if n == 0 {
        // a single circle: inside and outside
        return Ok(FaceComplex { faces: vec![Vec::new(), Vec::new()], corner_face: HashMap::new(), crossings: 0 });
    }
    let mut slots: HashMap<u32, Vec<(usize, u8)>> = HashMap::new();
    for (x, c) in d.crossings().iter().enumerate() {
        for (k, &e) in c.iter().enumerate() {
            slots.entry(e).or_default().push((x, k as u8));
        }
    }
    let other_end = |x: usize, k: u8| -> (usize, u8) {
        let e = d.crossings()[x][k as usize];
        let ends = &slots[&e];
        if ends[0] == (x, k) {
            ends[1]
        } else {
            ends[0]
        }
    };

    let mut corner_face = HashMap::with_capacity(4 * n);
    let mut faces = Vec::with_capacity(n + 2);
    for x in 0..n {
        for k in 0..4u8 {
            if corner_face.contains_key(&(x, k)) {
                continue;
            }
            let id = faces.len();
            let mut face = Vec::new();
            let mut cur = (x, k);
            while !corner_face.contains_key(&cur) {
                corner_face.insert(cur, id);
                face.push(cur);
                cur = other_end(cur.0, (cur.1 + 1) % 4);
            }
            faces.push(face);
        }
    }
    if faces.len() != n + 2 {
        // a valid planar PD code always satisfies Euler's formula
        return Err(Error::PdLabels(format!(
            "PD code is not planar: {} faces for {n} crossings",
            faces.len()
        )));
    }
    Ok(FaceComplex { faces, corner_face, crossings: n })
}

/// A checkerboard coloring and the induced crossing signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    /// Indices of the white faces, ascending.
    pub white: BTreeSet<usize>,
    /// Per-crossing sign: `+1` when the white regions sit in corners 0 and 2,
    /// `-1` when they sit in corners 1 and 3.
    pub eta: Vec<i8>,
}

impl Coloring {
    pub fn white_count(&self) -> usize {
        self.white.len()
    }

    pub fn is_white(&self, face: usize) -> bool {
        self.white.contains(&face)
    }
}

/// The two complementary proper 2-colorings. The first has face 0 white.
pub fn checkerboard(f: &FaceComplex) -> Result<(Coloring, Coloring)> {
    let faces = f.face_count();
    let mut color: Vec<Option<bool>> = vec![None; faces];
    if faces > 0 {
        color[0] = Some(true);
    }
    if f.crossing_count() == 0 {
        if faces != 2 {
            return Err(Error::NoProperColoring);
        }
        color[1] = Some(false);
    } else {
        let mut stack = vec![0usize];
        while let Some(face) = stack.pop() {
            let c = color[face].expect("pushed faces are colored");
            for &(x, k) in &f.faces()[face] {
                for nk in [(k + 1) % 4, (k + 3) % 4] {
                    let g = f.face_of((x, nk));
                    match color[g] {
                        None => {
                            color[g] = Some(!c);
                            stack.push(g);
                        }
                        Some(cg) if cg == c => return Err(Error::NoProperColoring),
                        Some(_) => {}
                    }
                }
            }
        }
    }
    let color: Vec<bool> = color.into_iter().map(|c| c.ok_or(Error::NoProperColoring)).collect::<Result<_>>()?;
    for x in 0..f.crossing_count() {
        let at = |k: u8| color[f.face_of((x, k))];
        if at(0) != at(2) || at(1) != at(3) || at(0) == at(1) {
            return Err(Error::NoProperColoring);
        }
    }

    let make = |white_is: bool| {
        let white: BTreeSet<usize> = (0..faces).filter(|&i| color[i] == white_is).collect();
        let eta = (0..f.crossing_count())
            .map(|x| if white.contains(&f.face_of((x, 0))) { 1 } else { -1 })
            .collect();
        Coloring { white, eta }
    };
    Ok((make(true), make(false)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    const TREFOIL: &str = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";
    const FIGURE_EIGHT: &str = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]";

    fn white_counts(pd: &str) -> [usize; 2] {
        let f = build_faces(&parse_pd(pd).unwrap()).unwrap();
        let (a, b) = checkerboard(&f).unwrap();
        let mut v = [a.white_count(), b.white_count()];
        v.sort();
        v
    }

    #[test]
    fn face_counts() {
        assert_eq!(build_faces(&parse_pd(TREFOIL).unwrap()).unwrap().face_count(), 5);
        assert_eq!(build_faces(&parse_pd("[]").unwrap()).unwrap().face_count(), 2);
        assert_eq!(build_faces(&parse_pd(FIGURE_EIGHT).unwrap()).unwrap().face_count(), 6);
    }

    #[test]
    fn faces_partition_corners() {
        let f = build_faces(&parse_pd(FIGURE_EIGHT).unwrap()).unwrap();
        let mut all: Vec<Corner> = f.faces().iter().flatten().copied().collect();
        all.sort();
        let expected: Vec<Corner> = (0..4).flat_map(|x| (0..4).map(move |k| (x, k))).collect();
        assert_eq!(all, expected);
    }

    #[test]
    fn coloring_counts() {
        assert_eq!(white_counts(TREFOIL), [2, 3]);
        assert_eq!(white_counts("[]"), [1, 1]);
        assert_eq!(white_counts(FIGURE_EIGHT), [3, 3]);
    }

    #[test]
    fn colorings_are_complementary_and_proper() {
        let f = build_faces(&parse_pd(FIGURE_EIGHT).unwrap()).unwrap();
        let (a, b) = checkerboard(&f).unwrap();
        assert!(a.white.is_disjoint(&b.white));
        assert_eq!(a.white_count() + b.white_count(), f.face_count());
        for x in 0..f.crossing_count() {
            assert_eq!(a.is_white(f.face_of((x, 0))), a.is_white(f.face_of((x, 2))));
            assert_ne!(a.is_white(f.face_of((x, 0))), a.is_white(f.face_of((x, 1))));
            assert_eq!(a.eta[x], -b.eta[x]);
        }
    }

    #[test]
    fn split_diagram_rejected() {
        let split = parse_pd("[[1,2,2,1],[3,4,4,3]]").unwrap();
        assert_eq!(build_faces(&split).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn kinked_unknot() {
        // one nugatory crossing
        let f = build_faces(&parse_pd("[[1,1,2,2]]").unwrap()).unwrap();
        assert_eq!(f.face_count(), 3);
        assert_eq!(checkerboard(&f).unwrap().0.white_count() + checkerboard(&f).unwrap().1.white_count(), 3);
    }
}
