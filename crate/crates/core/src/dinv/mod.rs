//! Spin^c structures on the double branched cover as characteristic-vector
//! cosets, and their correction terms
//! `d(s) = max_{α ∈ Char(G, s)} (α² + rank G) / 4`.

mod search;

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

pub use search::{box_max_char_square, CosetMaximizer, CosetMaximum};

use crate::diagram::GoeritzForm;
use crate::error::{Error, Result};
use crate::intlat::{cokernel, solve_mod2, Cokernel};
use crate::{Int, IntMatrix, Rational};

/// A characteristic vector: `α_i ≡ G_ii (mod 2)` for every `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharVector(Vec<Int>);

impl CharVector {
    pub fn new(g: &IntMatrix, coords: Vec<Int>) -> Result<Self> {
        if coords.len() != g.rows() {
            return Err(Error::Dimension(format!("vector has length {}, expected {}", coords.len(), g.rows())));
        }
        let two = Int::from(2);
        if g.diagonal().iter().zip(&coords).any(|(d, a)| !(d - a).is_multiple_of(&two)) {
            return Err(Error::Dimension("vector is not characteristic".into()));
        }
        Ok(Self(coords))
    }

    pub fn coords(&self) -> &[Int] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Int> {
        self.0
    }
}

/// `α₀ = G·x` with `G·x ≡ diag(G) (mod 2)`: characteristic, and in the image
/// of `G`, so its first Chern class vanishes.
pub fn canonical_characteristic(form: &GoeritzForm) -> Result<CharVector> {
    let g = form.matrix();
    if form.determinant().is_even() {
        return Err(Error::EvenDeterminant(form.determinant().clone()));
    }
    let x = solve_mod2(g, &g.diagonal())?;
    Ok(CharVector(g.mul_vec(&x)))
}

/// A spin^c structure: a maximizing representative of its characteristic
/// coset and its label in `coker(G)`, measured from the canonical structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinCStructure {
    pub rep: CharVector,
    pub label: Vec<Int>,
    pub is_canonical: bool,
}

/// Labels characteristic cosets by `coker(G)` relative to `α₀`.
#[derive(Clone, Debug)]
pub struct SpinCLabeling {
    alpha0: CharVector,
    coker: Cokernel<Int>,
}

impl SpinCLabeling {
    pub fn new(form: &GoeritzForm) -> Result<Self> {
        Ok(Self { alpha0: canonical_characteristic(form)?, coker: cokernel(form.matrix())? })
    }

    pub fn canonical(&self) -> &CharVector {
        &self.alpha0
    }

    pub fn cokernel(&self) -> &Cokernel<Int> {
        &self.coker
    }

    /// Class of `(α - α₀)/2`.
    pub fn label_of(&self, alpha: &CharVector) -> Vec<Int> {
        let half: Vec<Int> = alpha.0.iter().zip(&self.alpha0.0).map(|(a, b)| (a - b) / 2).collect();
        self.coker.class_of(&half)
    }

    /// Some characteristic vector with the given label.
    pub fn representative(&self, label: &[Int]) -> CharVector {
        let w = self.coker.representative(label);
        CharVector(self.alpha0.0.iter().zip(w).map(|(a, x)| a + 2 * x).collect())
    }
}

/// Every spin^c structure, ordered by label. Representatives are unreduced
/// lifts `α₀ + 2w`; [`all_correction_terms`] replaces them with maximizers.
pub fn spinc_enumerate(form: &GoeritzForm) -> Result<Vec<SpinCStructure>> {
    let lab = SpinCLabeling::new(form)?;
    Ok(lab
        .cokernel()
        .elements()
        .into_iter()
        .map(|label| {
            let rep = lab.representative(&label);
            let is_canonical = label.iter().all(Zero::is_zero);
            SpinCStructure { rep, label, is_canonical }
        })
        .collect())
}

/// An exact correction term. `4·|det G|·d` is always an integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CorrectionTerm(pub Rational);

impl CorrectionTerm {
    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl fmt::Display for CorrectionTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

/// `a/b` in lowest terms, or `a` when integral.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Maximum of `α²` over the coset of `s`.
pub fn max_char_square(form: &GoeritzForm, s: &SpinCStructure) -> Result<Rational> {
    Ok(CosetMaximizer::new(form.matrix())?.maximize(s.rep.coords()).value)
}

pub fn correction_term(form: &GoeritzForm, s: &SpinCStructure) -> Result<CorrectionTerm> {
    let max = max_char_square(form, s)?;
    Ok(d_from_square(max, form.rank()))
}

fn d_from_square(max: Rational, rank: usize) -> CorrectionTerm {
    CorrectionTerm((max + Rational::from_integer(Int::from(rank))) / Rational::from_integer(Int::from(4)))
}

/// One row of a correction-term table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DEntry {
    pub spinc: SpinCStructure,
    pub max_square: Rational,
    pub d: CorrectionTerm,
}

/// Correction terms of every spin^c structure, ordered by label.
#[derive(Clone, Debug)]
pub struct DTable {
    labeling: SpinCLabeling,
    entries: Vec<DEntry>,
}

impl DTable {
    pub fn entries(&self) -> &[DEntry] {
        &self.entries
    }

    pub fn labeling(&self) -> &SpinCLabeling {
        &self.labeling
    }

    pub fn cokernel(&self) -> &Cokernel<Int> {
        self.labeling.cokernel()
    }

    pub fn get(&self, label: &[Int]) -> Option<&CorrectionTerm> {
        self.entries
            .binary_search_by(|e| e.spinc.label.as_slice().cmp(label))
            .ok()
            .map(|i| &self.entries[i].d)
    }

    pub fn canonical(&self) -> &CorrectionTerm {
        &self.entries[0].d
    }

    /// The multiset of values, sorted.
    pub fn values(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self.entries.iter().map(|e| e.d.0.clone()).collect();
        v.sort();
        v
    }
}

/// Correction terms of all `|det G|` structures. Classes are maximized in
/// parallel; the output order depends only on the labels.
pub fn all_correction_terms(form: &GoeritzForm) -> Result<DTable> {
    let labeling = SpinCLabeling::new(form)?;
    let maximizer = CosetMaximizer::new(form.matrix())?;
    let rank = form.rank();
    let entries = labeling
        .cokernel()
        .elements()
        .into_par_iter()
        .map(|label| {
            let start = labeling.representative(&label);
            let top = maximizer.maximize(start.coords());
            let rep = CharVector(top.best().to_vec());
            debug_assert_eq!(labeling.label_of(&rep), label);
            let is_canonical = label.iter().all(Zero::is_zero);
            DEntry {
                d: d_from_square(top.value.clone(), rank),
                max_square: top.value,
                spinc: SpinCStructure { rep, label, is_canonical },
            }
        })
        .collect();
    Ok(DTable { labeling, entries })
}

/// Sorted d-values negated; the table of the reversed orientation.
pub fn negated_values(values: &[Rational]) -> Vec<Rational> {
    let mut v: Vec<Rational> = values.iter().map(|x| -x.clone()).collect();
    v.sort();
    v
}
