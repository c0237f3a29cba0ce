use serde::{Deserialize, Serialize};

use super::{build_faces, checkerboard, Coloring, FaceComplex, PlanarDiagram};
use crate::error::{Error, Result};
use crate::intlat::{determinant, is_negative_definite};
use crate::{Int, IntMatrix};

/// Reduced Goeritz matrix of a coloring, with `deleted_region`'s row and
/// column removed.
///
/// Rows are indexed by the remaining white faces in ascending order. Off the
/// diagonal, `g_ij = -Σ η(c)` over crossings whose white corners are faces
/// `i ≠ j`; each diagonal entry makes its row of the unreduced matrix sum to
/// zero.
pub fn goeritz_matrix(f: &FaceComplex, c: &Coloring, deleted_region: usize) -> Result<IntMatrix> {
    if !c.is_white(deleted_region) {
        return Err(Error::RegionNotWhite(deleted_region));
    }
    let index: Vec<usize> = c.white.iter().copied().collect();
    let pos = |face: usize| index.binary_search(&face).expect("white face");
    let m = index.len();
    let mut g = vec![vec![0i64; m]; m];
    for x in 0..f.crossing_count() {
        let eta = i64::from(c.eta[x]);
        let (a, b) = if eta > 0 { (0, 2) } else { (1, 3) };
        let (i, j) = (pos(f.face_of((x, a))), pos(f.face_of((x, b))));
        if i == j {
            continue;
        }
        g[i][j] -= eta;
        g[j][i] -= eta;
        g[i][i] += eta;
        g[j][j] += eta;
    }
    let del = pos(deleted_region);
    let rows = (0..m)
        .filter(|&i| i != del)
        .map(|i| (0..m).filter(|&j| j != del).map(|j| Int::from(g[i][j])).collect())
        .collect();
    IntMatrix::from_rows(rows)
}

/// Where a Goeritz form came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FormSource {
    Diagram { coloring: usize, deleted_region: usize },
    UserMatrix,
}

/// A negative-definite symmetric integer form with odd determinant, as
/// presented by a knot diagram or supplied directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoeritzForm {
    matrix: IntMatrix,
    det: Int,
    mirror_flag: bool,
    source: FormSource,
}

impl GoeritzForm {
    /// Validates a user-supplied reduced matrix.
    pub fn from_matrix(matrix: IntMatrix) -> Result<Self> {
        Self::validated(matrix, false, FormSource::UserMatrix)
    }

    fn validated(matrix: IntMatrix, mirror_flag: bool, source: FormSource) -> Result<Self> {
        matrix.ensure_square()?;
        if !is_negative_definite(&matrix)? {
            return Err(Error::NotNegativeDefinite);
        }
        let det = determinant(&matrix)?;
        if num_integer::Integer::is_odd(&det) {
            Ok(Self { matrix, det, mirror_flag, source })
        } else {
            Err(Error::EvenDeterminant(det))
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Rank of the form, the `|G|` term of the correction-term formula.
    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    /// Signed determinant; its absolute value is the knot determinant.
    pub fn determinant(&self) -> &Int {
        &self.det
    }

    pub fn knot_determinant(&self) -> Int {
        num_traits::Signed::abs(&self.det)
    }

    /// Whether the diagram's Goeritz matrix had to be negated. A negated form
    /// bounds the double branched cover with reversed orientation.
    pub fn mirror_flag(&self) -> bool {
        self.mirror_flag
    }

    /// `-1` when values computed from the form must be negated to describe
    /// the input knot's double branched cover.
    pub fn orientation_sign(&self) -> i32 {
        if self.mirror_flag {
            -1
        } else {
            1
        }
    }

    pub fn source(&self) -> &FormSource {
        &self.source
    }
}

/// Finds a negative-definite reduced Goeritz form for the diagram.
///
/// Tries the coloring with fewer white regions first, the matrix before its
/// negation, and always deletes the lowest-indexed white region.
pub fn definite_goeritz(d: &PlanarDiagram) -> Result<GoeritzForm> {
    let faces = build_faces(d)?;
    let (a, b) = checkerboard(&faces)?;
    let mut order = [(0usize, a), (1usize, b)];
    order.sort_by_key(|(i, c)| (c.white_count(), *i));
    for (id, coloring) in &order {
        let deleted = *coloring.white.iter().next().expect("every coloring has a white face");
        let g = goeritz_matrix(&faces, coloring, deleted)?;
        for negate in [false, true] {
            let candidate = if negate { g.neg() } else { g.clone() };
            if is_negative_definite(&candidate)? {
                let source = FormSource::Diagram { coloring: *id, deleted_region: deleted };
                return GoeritzForm::validated(candidate, negate, source);
            }
        }
    }
    Err(Error::NoDefinitePresentation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    const TREFOIL: &str = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";
    const FIGURE_EIGHT: &str = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]";

    fn colorings(pd: &str) -> (FaceComplex, Coloring, Coloring) {
        let f = build_faces(&parse_pd(pd).unwrap()).unwrap();
        let (a, b) = checkerboard(&f).unwrap();
        (f, a, b)
    }

    #[test]
    fn unknot_gives_empty_matrix() {
        let (f, a, b) = colorings("[]");
        for c in [&a, &b] {
            let first = *c.white.iter().next().unwrap();
            assert_eq!(goeritz_matrix(&f, c, first).unwrap().rows(), 0);
        }
        let form = definite_goeritz(&parse_pd("[]").unwrap()).unwrap();
        assert_eq!(form.rank(), 0);
        assert_eq!(form.knot_determinant(), Int::from(1));
    }

    #[test]
    fn trefoil_three_region_coloring() {
        let (f, a, b) = colorings(TREFOIL);
        let c = if a.white_count() == 3 { a } else { b };
        for &del in &c.white {
            let g = goeritz_matrix(&f, &c, del).unwrap();
            assert_eq!(g.rows(), 2);
            // congruent to ±[[-2,1],[1,-2]]: diagonal ±2, off-diagonal ±1
            assert!(g.diagonal().iter().all(|v| v.magnitude() == &2u32.into()));
            assert_eq!(determinant(&g).unwrap(), Int::from(3));
        }
    }

    #[test]
    fn trefoil_calibration_needs_no_negation() {
        let form = definite_goeritz(&parse_pd(TREFOIL).unwrap()).unwrap();
        assert_eq!(form.matrix(), &IntMatrix::from_i64_rows(&[&[-3]]).unwrap());
        assert!(!form.mirror_flag());

        let mirrored = definite_goeritz(&parse_pd(TREFOIL).unwrap().mirror()).unwrap();
        assert_eq!(mirrored.matrix(), form.matrix());
        assert!(mirrored.mirror_flag());
    }

    #[test]
    fn figure_eight_forms() {
        let (f, a, b) = colorings(FIGURE_EIGHT);
        for c in [&a, &b] {
            let first = *c.white.iter().next().unwrap();
            let g = goeritz_matrix(&f, c, first).unwrap();
            assert_eq!(g.rows(), 2);
            assert_eq!(determinant(&g).unwrap().magnitude(), &5u32.into());
        }
        let form = definite_goeritz(&parse_pd(FIGURE_EIGHT).unwrap()).unwrap();
        assert_eq!(form.rank(), 2);
        assert_eq!(form.knot_determinant(), Int::from(5));
    }

    #[test]
    fn deleting_a_black_region_fails() {
        let (f, a, _) = colorings(TREFOIL);
        let black = (0..f.face_count()).find(|i| !a.is_white(*i)).unwrap();
        assert_eq!(goeritz_matrix(&f, &a, black).unwrap_err(), Error::RegionNotWhite(black));
    }

    #[test]
    fn user_matrix_validation() {
        let m = |rows: &[&[i64]]| IntMatrix::from_i64_rows(rows).unwrap();
        assert_eq!(GoeritzForm::from_matrix(m(&[&[2]])).unwrap_err(), Error::NotNegativeDefinite);
        assert_eq!(GoeritzForm::from_matrix(m(&[&[-2]])).unwrap_err(), Error::EvenDeterminant(Int::from(-2)));
        assert_eq!(GoeritzForm::from_matrix(m(&[&[-2, 1], &[0, -2]])).unwrap_err(), Error::NotSymmetric);
        assert!(GoeritzForm::from_matrix(m(&[&[1, 2, 3]])).is_err());
        let ok = GoeritzForm::from_matrix(m(&[&[-2, 1], &[1, -3]])).unwrap();
        assert_eq!(ok.source(), &FormSource::UserMatrix);
    }

    #[test]
    fn non_alternating_diagram_has_no_definite_form() {
        // 9_44 as tabulated: non-alternating, both Goeritz forms indefinite
        let pd = "[[2,9,3,10],[3,16,4,17],[5,1,6,18],[6,12,7,11],[8,1,9,2],[10,14,11,13],[12,8,13,7],[15,4,16,5],[17,15,18,14]]";
        assert_eq!(definite_goeritz(&parse_pd(pd).unwrap()).unwrap_err(), Error::NoDefinitePresentation);
    }
}
