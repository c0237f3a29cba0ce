use grs_core::dinv::{all_correction_terms, box_max_char_square, format_rational};
use grs_core::{Error, GoeritzForm, IntMatrix, Rational};

pub const MAX_RANK: usize = 6;
pub const MAX_BOX: i64 = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassComparison {
    pub label: Vec<grs_core::Int>,
    pub enumerated: Rational,
    pub boxed: Rational,
    pub d: Rational,
}

impl ClassComparison {
    pub fn agrees(&self) -> bool {
        self.enumerated == self.boxed
    }
}

#[derive(Debug)]
pub enum OracleError {
    Limits(String),
    Core(Error),
}

impl From<Error> for OracleError {
    fn from(e: Error) -> Self {
        OracleError::Core(e)
    }
}

impl std::fmt::Display for OracleError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OracleError::Limits(m) => write!(f, "error [limits]: {m}"),
            OracleError::Core(e) => f.write_str(&crate::describe(e)),
        }
    }
}

/// Compares the enumerated maximum of every class with an exhaustive search
/// of the box `round(c) ± bound` around its continuous optimum.
pub fn compare(matrix: IntMatrix, bound: i64) -> Result<Vec<ClassComparison>, OracleError> {
    if matrix.rows() > MAX_RANK {
        return Err(OracleError::Limits(format!("rank {} exceeds {MAX_RANK}", matrix.rows())));
    }
    if !(0..=MAX_BOX).contains(&bound) {
        return Err(OracleError::Limits(format!("box bound {bound} outside 0..={MAX_BOX}")));
    }
    let form = GoeritzForm::from_matrix(matrix)?;
    let table = all_correction_terms(&form)?;
    table
        .entries()
        .iter()
        .map(|e| {
            // start the box search from the unreduced lift, not the stored maximizer
            let start = table.labeling().representative(&e.spinc.label);
            Ok(ClassComparison {
                label: e.spinc.label.clone(),
                enumerated: e.max_square.clone(),
                boxed: box_max_char_square(form.matrix(), start.coords(), bound)?,
                d: e.d.value().clone(),
            })
        })
        .collect()
}

pub fn render(rows: &[ClassComparison]) -> String {
    let mut out = String::new();
    for r in rows {
        let h: Vec<String> = r.label.iter().map(ToString::to_string).collect();
        out.push_str(&format!(
            "h=({}) enumerated={} box={} d={}{}\n",
            h.join(","),
            format_rational(&r.enumerated),
            format_rational(&r.boxed),
            format_rational(&r.d),
            if r.agrees() { "" } else { "  DISAGREE" }
        ));
    }
    let ok = rows.iter().filter(|r| r.agrees()).count();
    out.push_str(&format!("{ok}/{} classes agree\n", rows.len()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use grs_core::parse_matrix;

    #[test]
    fn examples_agree() {
        for (m, b, n) in [("[[-3]]", 8, 3), ("[[-2,1],[1,-3]]", 6, 5), ("[[-1]]", 2, 1)] {
            let rows = compare(parse_matrix(m).unwrap(), b).unwrap();
            assert!(render(&rows).ends_with(&format!("{n}/{n} classes agree\n")));
        }
        let rows = compare(parse_matrix("[[-1]]").unwrap(), 2).unwrap();
        assert!(rows[0].d == Rational::from_integer(0.into()));
    }

    #[test]
    fn limits() {
        assert!(matches!(compare(IntMatrix::identity(7).neg(), 2), Err(OracleError::Limits(_))));
        assert!(matches!(compare(parse_matrix("[[-3]]").unwrap(), 11), Err(OracleError::Limits(_))));
        assert!(matches!(compare(parse_matrix("[[3]]").unwrap(), 2), Err(OracleError::Core(_))));
    }
}
