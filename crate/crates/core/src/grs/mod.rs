//! D invariants and the finite-concordance-order obstruction.
//!
//! For `q = p^e`, `D_q` sums the correction terms over the unique order-`q`
//! subgroup of `H²` (the canonical structure has label 0, so the coset
//! `s₀ + G_q` is the subgroup itself). A knot of finite concordance order has
//! `D_{p^e} = 0` for `p = 1` and for every prime `p | det` with
//! `0 ≤ e ≤ ⌊(m+1)/2⌋`, `m` the multiplicity of `p`.

mod factor;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use factor::{factorize, max_exponent, multiplicity, PrimePowerSpec};

use crate::diagram::{definite_goeritz, GoeritzForm, PlanarDiagram};
use crate::dinv::{all_correction_terms, DTable};
use crate::error::{Error, Result};
use crate::intlat::AbelianGroupStructure;
use crate::{Int, IntMatrix, Rational};

/// Labels `h` with `q·h = 0`: the order-`q` subgroup when the `p`-primary
/// part is cyclic.
pub fn subgroup_coset(group: &AbelianGroupStructure<Int>, q: &Int) -> Result<Vec<Vec<Int>>> {
    let factors = &group.invariant_factors;
    if q.is_zero() || !group.order.is_multiple_of(q) {
        return Err(Error::NotADivisor { q: q.clone(), order: group.order.clone() });
    }
    let zero = vec![Int::zero(); factors.len()];
    if q.is_one() {
        return Ok(vec![zero]);
    }
    let p = factorize(q)?.remove(0).0;
    let carriers: Vec<usize> = (0..factors.len()).filter(|&i| factors[i].is_multiple_of(&p)).collect();
    let [k] = carriers[..] else {
        return Err(Error::NonCyclic { p });
    };
    let step = &factors[k] / q;
    let mut out = Vec::new();
    let mut t = Int::zero();
    while &t < q {
        let mut h = zero.clone();
        h[k] = &t * &step;
        out.push(h);
        t += 1;
    }
    Ok(out)
}

/// Whether the `p`-primary part of the group is cyclic.
pub fn primary_part_cyclic(group: &AbelianGroupStructure<Int>, p: &Int) -> bool {
    group.invariant_factors.iter().filter(|d| d.is_multiple_of(p)).count() <= 1
}

/// `D_{p^e}` from a precomputed correction-term table.
pub fn d_invariant_from_table(table: &DTable, spec: &PrimePowerSpec) -> Result<Rational> {
    let labels = subgroup_coset(table.cokernel().structure(), &spec.q())?;
    Ok(labels
        .iter()
        .map(|h| table.get(h).expect("subgroup labels lie in the table").value().clone())
        .fold(Rational::zero(), |acc, d| acc + d))
}

/// `D_{p^e}` of a form.
pub fn d_invariant(form: &GoeritzForm, spec: &PrimePowerSpec) -> Result<Rational> {
    d_invariant_from_table(&all_correction_terms(form)?, spec)
}

/// A knot given as a diagram or directly as a reduced negative-definite
/// Goeritz matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotInput {
    Diagram(PlanarDiagram),
    Matrix(IntMatrix),
}

impl KnotInput {
    pub fn goeritz_form(&self) -> Result<GoeritzForm> {
        match self {
            KnotInput::Diagram(d) => definite_goeritz(d),
            KnotInput::Matrix(m) => GoeritzForm::from_matrix(m.clone()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Some D invariant in range is nonzero.
    InfiniteOrder,
    /// Every D invariant in range vanishes.
    NoObstruction,
    /// Every computed D invariant vanishes, but some prime's primary part is
    /// not cyclic and was skipped.
    NotApplicableNoncyclic,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::InfiniteOrder => "infinite_order",
            Verdict::NoObstruction => "no_obstruction",
            Verdict::NotApplicableNoncyclic => "not_applicable_noncyclic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DValue {
    pub p: Int,
    pub e: u32,
    pub value: Rational,
}

impl DValue {
    pub fn q(&self) -> Int {
        num_traits::Pow::pow(&self.p, self.e)
    }
}

#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub name: String,
    pub det: Int,
    pub factors: Vec<(Int, u32)>,
    pub form: GoeritzForm,
    pub table: DTable,
    /// `D_1` first, then each prime ascending with `e = 1, 2, …`.
    pub d_values: Vec<DValue>,
    /// Primes whose primary part of `H²` is not cyclic; no D values are
    /// reported for them.
    pub noncyclic_primes: Vec<Int>,
    pub verdict: Verdict,
}

impl ObstructionReport {
    pub fn h2(&self) -> &AbelianGroupStructure<Int> {
        self.table.cokernel().structure()
    }

    pub fn nonzero_d(&self) -> impl Iterator<Item = &DValue> {
        self.d_values.iter().filter(|d| !d.value.is_zero())
    }
}

/// Computes `D_{p^e}` for every prime of the determinant with `e <= (m + 1) / 2`, and the verdict.
pub fn obstruction(input: &KnotInput, name: &str) -> Result<ObstructionReport> {
    report_for_form(input.goeritz_form()?, name)
}

pub fn report_for_form(form: GoeritzForm, name: &str) -> Result<ObstructionReport> {
    let det = form.knot_determinant();
    let factors = factorize(&det)?;
    let table = all_correction_terms(&form)?;
    let group = table.cokernel().structure().clone();

    let mut d_values = vec![DValue {
        p: Int::one(),
        e: 0,
        value: d_invariant_from_table(&table, &PrimePowerSpec::trivial())?,
    }];
    let mut noncyclic_primes = Vec::new();
    for (p, m) in &factors {
        if !primary_part_cyclic(&group, p) {
            noncyclic_primes.push(p.clone());
            continue;
        }
        for e in 1..=max_exponent(*m) {
            let spec = PrimePowerSpec::new(p.clone(), e, *m)?;
            d_values.push(DValue { p: p.clone(), e, value: d_invariant_from_table(&table, &spec)? });
        }
    }
    let verdict = if d_values.iter().any(|d| !d.value.is_zero()) {
        Verdict::InfiniteOrder
    } else if !noncyclic_primes.is_empty() {
        Verdict::NotApplicableNoncyclic
    } else {
        Verdict::NoObstruction
    };
    Ok(ObstructionReport { name: name.to_string(), det, factors, form, table, d_values, noncyclic_primes, verdict })
}
