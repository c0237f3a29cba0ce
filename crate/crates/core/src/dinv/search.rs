use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::intlat::{adjugate, bilinear, determinant, is_negative_definite, Matrix};
use crate::scalar::ExactInt;

/// Maximizes `α² = αᵀ G⁻¹ α` over a characteristic coset `rep + 2G·Zʳ` of a
/// negative-definite form.
///
/// Writing `α = rep + 2G·v` and `A = -G`, the objective becomes
/// `α² = -4·(v - c)ᵀ A (v - c)` with `c = -½ G⁻¹ rep`, so the maximum is a
/// closest-vector problem in the lattice of `A`. It is solved by depth-first
/// enumeration over the exact rational `LDLᵀ` factorization of `A`.
#[derive(Clone, Debug)]
pub struct CosetMaximizer<T: ExactInt> {
    g: Matrix<T>,
    adj: Matrix<T>,
    det: T,
    /// Strictly lower part of the unit triangular factor, `l[i][j]` for `j < i`.
    l: Vec<Vec<Ratio<T>>>,
    d: Vec<Ratio<T>>,
}

/// Result of a coset maximization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetMaximum<T: ExactInt> {
    /// `max α²` over the coset.
    pub value: Ratio<T>,
    /// Every maximizing `α`, sorted by absolute coordinates then coordinates.
    pub maximizers: Vec<Vec<T>>,
    /// Enumeration tree nodes visited.
    pub nodes: usize,
}

impl<T: ExactInt> CosetMaximum<T> {
    /// The canonical maximizer: lexicographically smallest absolute coordinates.
    pub fn best(&self) -> &[T] {
        &self.maximizers[0]
    }
}

fn abs_key<T: ExactInt>(v: &[T]) -> (Vec<T>, Vec<T>) {
    (v.iter().map(|x| x.abs()).collect(), v.to_vec())
}

impl<T: ExactInt> CosetMaximizer<T> {
    pub fn new(g: &Matrix<T>) -> Result<Self> {
        let n = g.ensure_square()?;
        if !is_negative_definite(g)? {
            return Err(Error::NotNegativeDefinite);
        }
        let mut l: Vec<Vec<Ratio<T>>> = vec![Vec::new(); n];
        let mut d: Vec<Ratio<T>> = Vec::with_capacity(n);
        for j in 0..n {
            let mut djj = Ratio::from_integer(-g[(j, j)].clone());
            for k in 0..j {
                djj = djj - l[j][k].clone() * l[j][k].clone() * d[k].clone();
            }
            d.push(djj);
            for i in j + 1..n {
                let mut s = Ratio::from_integer(-g[(i, j)].clone());
                for k in 0..j {
                    s = s - l[i][k].clone() * l[j][k].clone() * d[k].clone();
                }
                l[i].push(s / d[j].clone());
            }
        }
        Ok(Self { g: g.clone(), adj: adjugate(g)?, det: determinant(g)?, l, d })
    }

    pub fn rank(&self) -> usize {
        self.g.rows()
    }

    /// `αᵀ·adj(G)·α / det(G)`, the direct evaluation of `α²`.
    pub fn square(&self, alpha: &[T]) -> Ratio<T> {
        Ratio::new(bilinear(&self.adj, alpha, alpha), self.det.clone())
    }

    /// `α = rep + 2G·v`.
    pub fn alpha(&self, rep: &[T], v: &[T]) -> Vec<T> {
        let two = T::from_i64_exact(2);
        rep.iter().zip(self.g.mul_vec(v)).map(|(r, x)| r.clone() + two.clone() * x).collect()
    }

    /// The continuous minimizer `c = -½ G⁻¹ rep` in coset coordinates.
    pub fn center(&self, rep: &[T]) -> Vec<Ratio<T>> {
        let denom = -(T::from_i64_exact(2) * self.det.clone());
        self.adj.mul_vec(rep).into_iter().map(|x| Ratio::new(x, denom.clone())).collect()
    }

    pub fn maximize(&self, rep: &[T]) -> CosetMaximum<T> {
        let n = self.rank();
        assert_eq!(rep.len(), n, "representative has the wrong length");
        if n == 0 {
            return CosetMaximum { value: Ratio::from_integer(T::zero()), maximizers: vec![Vec::new()], nodes: 1 };
        }
        let c = self.center(rep);
        let mut search = Search {
            m: self,
            c: &c,
            v: vec![T::zero(); n],
            bound: self.cost(&c, &vec![T::zero(); n]),
            best: Vec::new(),
            nodes: 0,
        };
        // a rounding descent usually beats the v = 0 incumbent
        let babai = search.babai();
        let babai_cost = self.cost(&c, &babai);
        if babai_cost < search.bound {
            search.bound = babai_cost;
        }
        search.descend(n, Ratio::from_integer(T::zero()));

        let value = -Ratio::from_integer(T::from_i64_exact(4)) * search.bound.clone();
        let mut maximizers: Vec<Vec<T>> = search.best.iter().map(|v| self.alpha(rep, v)).collect();
        maximizers.sort_by_cached_key(|a| abs_key(a));
        for a in &maximizers {
            assert_eq!(self.square(a), value, "enumeration value disagrees with direct evaluation");
        }
        CosetMaximum { value, maximizers, nodes: search.nodes }
    }

    /// `(v - c)ᵀ A (v - c)` through the factorization.
    fn cost(&self, c: &[Ratio<T>], v: &[T]) -> Ratio<T> {
        let n = self.rank();
        let diff: Vec<Ratio<T>> = v.iter().zip(c).map(|(x, ci)| Ratio::from_integer(x.clone()) - ci.clone()).collect();
        let mut total = Ratio::from_integer(T::zero());
        for i in 0..n {
            let mut y = diff[i].clone();
            for j in i + 1..n {
                y = y + self.l[j][i].clone() * diff[j].clone();
            }
            total = total + self.d[i].clone() * y.clone() * y;
        }
        total
    }
}

struct Search<'a, T: ExactInt> {
    m: &'a CosetMaximizer<T>,
    c: &'a [Ratio<T>],
    v: Vec<T>,
    bound: Ratio<T>,
    best: Vec<Vec<T>>,
    nodes: usize,
}

impl<T: ExactInt> Search<'_, T> {
    /// Center of coordinate `i` given the already fixed coordinates above it.
    fn level_center(&self, i: usize) -> Ratio<T> {
        let mut s = self.c[i].clone();
        for j in i + 1..self.v.len() {
            s = s - self.m.l[j][i].clone() * (Ratio::from_integer(self.v[j].clone()) - self.c[j].clone());
        }
        s
    }

    fn babai(&mut self) -> Vec<T> {
        for i in (0..self.v.len()).rev() {
            self.v[i] = self.level_center(i).round().to_integer();
        }
        std::mem::replace(&mut self.v, vec![T::zero(); self.c.len()])
    }

    /// Enumerates coordinate `level - 1` and below; `partial` is the cost of
    /// the coordinates already fixed.
    fn descend(&mut self, level: usize, partial: Ratio<T>) {
        self.nodes += 1;
        if level == 0 {
            if partial < self.bound {
                self.bound = partial.clone();
                self.best.clear();
            }
            if partial == self.bound {
                self.best.push(self.v.clone());
            }
            return;
        }
        let i = level - 1;
        let center = self.level_center(i);
        let di = self.m.d[i].clone();
        let start = center.floor().to_integer();
        // the level cost is convex in v_i: walk outward until it exceeds the bound
        for step in [T::one(), -T::one()] {
            let mut k = if step.is_positive() { start.clone() + T::one() } else { start.clone() };
            loop {
                let off = Ratio::from_integer(k.clone()) - center.clone();
                let total = partial.clone() + di.clone() * off.clone() * off;
                if total > self.bound {
                    break;
                }
                self.v[i] = k.clone();
                self.descend(i, total);
                k = k + step.clone();
            }
        }
        self.v[i] = T::zero();
    }
}

/// Exhaustive maximum of `α²` over `α = rep + 2G·v` for `v` in the box
/// `round(c) ± bound`, where `c` is the continuous minimizer.
///
/// Independent of the factorization: every point is evaluated directly as
/// `αᵀ·adj(G)·α / det(G)`.
pub fn box_max_char_square<T: ExactInt>(g: &Matrix<T>, rep: &[T], bound: i64) -> Result<Ratio<T>> {
    let n = g.ensure_square()?;
    if rep.len() != n {
        return Err(Error::Dimension(format!("representative has length {}, expected {n}", rep.len())));
    }
    let adj = adjugate(g)?;
    let det = determinant(g)?;
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let two = T::from_i64_exact(2);
    let origin: Vec<T> = adj
        .mul_vec(rep)
        .into_iter()
        .map(|x| Ratio::new(x, -(two.clone() * det.clone())).round().to_integer())
        .collect();
    let b = T::from_i64_exact(bound);
    let mut offset = vec![-b.clone(); n];
    // α² = num / det, so the maximum is the extreme numerator on det's side
    let mut best: Option<T> = None;
    loop {
        let v: Vec<T> = origin.iter().zip(&offset).map(|(o, x)| o.clone() + x.clone()).collect();
        let alpha: Vec<T> = rep.iter().zip(g.mul_vec(&v)).map(|(r, x)| r.clone() + two.clone() * x).collect();
        let num = bilinear(&adj, &alpha, &alpha);
        let better = match &best {
            None => true,
            Some(cur) => {
                if det.is_positive() {
                    num > *cur
                } else {
                    num < *cur
                }
            }
        };
        if better {
            best = Some(num);
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return Ok(Ratio::new(best.expect("box is nonempty"), det));
            }
            if offset[i] < b {
                offset[i] = offset[i].clone() + T::one();
                break;
            }
            offset[i] = -b.clone();
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix<i64> {
        Matrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn lens_space_cosets() {
        let g = m(&[&[-3]]);
        let mx = CosetMaximizer::new(&g).unwrap();
        let top = mx.maximize(&[3]);
        assert_eq!(top.value, Ratio::from_integer(-3));
        assert_eq!(top.maximizers, vec![vec![-3], vec![3]]);
        let side = mx.maximize(&[1]);
        assert_eq!(side.value, Ratio::new(-1, 3));
        assert_eq!(side.maximizers, vec![vec![1]]);
        // far-away representatives of the same coset
        assert_eq!(mx.maximize(&[61]).value, Ratio::new(-1, 3));
    }

    #[test]
    fn empty_form() {
        let mx = CosetMaximizer::<i64>::new(&Matrix::zeros(0, 0)).unwrap();
        let r = mx.maximize(&[]);
        assert_eq!(r.value, Ratio::from_integer(0));
        assert_eq!(r.maximizers, vec![Vec::<i64>::new()]);
    }

    #[test]
    fn rejects_indefinite() {
        assert_eq!(CosetMaximizer::new(&m(&[&[1, 0], &[0, -1]])).unwrap_err(), Error::NotNegativeDefinite);
    }

    #[test]
    fn ties_are_all_collected() {
        // -I₂ with the all-odd coset: every α ∈ {±1}² is optimal
        let mx = CosetMaximizer::new(&m(&[&[-1, 0], &[0, -1]])).unwrap();
        let r = mx.maximize(&[1, 1]);
        assert_eq!(r.value, Ratio::from_integer(-2));
        assert_eq!(r.maximizers.len(), 4);
        assert_eq!(r.best(), &[-1, -1]);
    }

    #[test]
    fn agrees_with_box_on_figure_eight() {
        let g = m(&[&[-2, 1], &[1, -3]]);
        let mx = CosetMaximizer::new(&g).unwrap();
        for rep in [[-2, 1], [0, 1], [2, 1], [0, 3], [-4, 5], [10, -7]] {
            assert_eq!(mx.maximize(&rep).value, box_max_char_square(&g, &rep, 6).unwrap(), "{rep:?}");
        }
    }

    #[test]
    fn bigint_and_machine_scalars_agree() {
        use num_bigint::BigInt;
        let g = m(&[&[-5, 2, 1], &[2, -4, 1], &[1, 1, -3]]);
        let gb: Matrix<BigInt> = g.map(|&x| BigInt::from(x));
        let (a, b) = (CosetMaximizer::new(&g).unwrap(), CosetMaximizer::new(&gb).unwrap());
        for rep in [[1i64, 0, 1], [3, 2, -1], [-7, 4, 9]] {
            let rb: Vec<BigInt> = rep.iter().map(|&x| BigInt::from(x)).collect();
            let (x, y) = (a.maximize(&rep).value, b.maximize(&rb).value);
            assert_eq!(x.numer().to_string(), y.numer().to_string());
            assert_eq!(x.denom().to_string(), y.denom().to_string());
        }
    }
}
