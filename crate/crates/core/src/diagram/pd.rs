use std::fmt;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::text::parse_int_lists;

/// A knot projection in PD notation.
///
/// Each crossing lists the four edge labels meeting there in counterclockwise
/// order, starting with the incoming under-strand. Labels run over `1..=2n`
/// and each appears in exactly two slots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<[u32; 4]>,
}

impl PlanarDiagram {
    /// Validates and wraps a list of crossings.
    pub fn new(crossings: Vec<[u32; 4]>) -> Result<Self> {
        let n = crossings.len();
        let max_label = 2 * n as u64;
        let mut counts = vec![0u32; 2 * n + 1];
        let mut out_of_range = None;
        for c in &crossings {
            for &e in c {
                if e == 0 || u64::from(e) > max_label {
                    out_of_range.get_or_insert(e);
                } else {
                    counts[e as usize] += 1;
                }
            }
        }
        let over: Vec<String> = (1..counts.len())
            .filter(|&e| counts[e] > 2)
            .map(|e| format!("label {e} appears {} times", counts[e]))
            .collect();
        let under: Vec<String> = (1..counts.len())
            .filter(|&e| counts[e] == 1)
            .map(|e| format!("label {e} appears once"))
            .collect();
        if !over.is_empty() || !under.is_empty() {
            let mut msgs = over;
            msgs.extend(under);
            return Err(Error::PdLabels(msgs.join(", ")));
        }
        if let Some(e) = out_of_range {
            return Err(Error::PdLabels(format!(
                "label {e} outside 1..={max_label} for {n} crossings"
            )));
        }
        if let Some(e) = (1..counts.len()).find(|&e| counts[e] == 0) {
            return Err(Error::PdLabels(format!("label {e} is missing")));
        }
        Ok(Self { crossings })
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// The mirror image: every crossing is rotated one slot, which swaps the
    /// over- and under-strands while keeping the planar projection.
    pub fn mirror(&self) -> Self {
        Self { crossings: self.crossings.iter().map(|&[a, b, c, d]| [b, c, d, a]).collect() }
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, [a, b, c, d]) in self.crossings.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{a},{b},{c},{d}]")?;
        }
        write!(f, "]")
    }
}

/// Parses PD notation such as `[[1,4,2,5],[3,6,4,1],[5,2,6,3]]`.
pub fn parse_pd(text: &str) -> Result<PlanarDiagram> {
    let lists = parse_int_lists(text).map_err(Error::PdSyntax)?;
    let mut crossings = Vec::with_capacity(lists.len());
    for (i, tuple) in lists.iter().enumerate() {
        if tuple.len() != 4 {
            return Err(Error::PdSyntax(format!("crossing {i} has {} entries, expected 4", tuple.len())));
        }
        let mut c = [0u32; 4];
        for (slot, v) in c.iter_mut().zip(tuple) {
            *slot = v
                .to_u32()
                .filter(|&x| x > 0)
                .ok_or_else(|| Error::PdLabels(format!("label {v} is not a positive integer")))?;
        }
        crossings.push(c);
    }
    PlanarDiagram::new(crossings)
}
