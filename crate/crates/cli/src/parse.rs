//! Text forms of permutations, weights and Serre weights on the command line.
//!
//! Embeddings are separated by `;`. A permutation is written in one-line
//! notation, either as digits (`231`) or comma-separated (`2,3,1`); a weight
//! is a comma list (`20,10,0`).

use serrewt_core::weights_dl::SerreWeightInput;
use serrewt_core::{Error, FiniteWeylElt, Result, WeightVec};

fn parts(s: &str) -> Vec<&str> {
    s.split(';').map(str::trim).collect()
}

pub fn permutation(s: &str, n: usize, f: usize) -> Result<FiniteWeylElt> {
    let mut rows = Vec::new();
    for part in parts(s) {
        let row: Vec<usize> = if part.contains(',') {
            part.split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Parse(format!("permutation {part:?}: {e}")))?
        } else {
            part.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Parse(format!("permutation {part:?}: expected digits")))?
        };
        rows.push(row);
    }
    check_shape(
        "permutation",
        rows.len(),
        rows.first().map_or(0, Vec::len),
        n,
        f,
    )?;
    FiniteWeylElt::from_rows(&rows)
}

pub fn weight(s: &str, n: usize, f: usize) -> Result<WeightVec> {
    let mut rows = Vec::new();
    for part in parts(s) {
        let row: Vec<i64> = part
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Parse(format!("weight {part:?}: {e}")))?;
        rows.push(row);
    }
    check_shape("weight", rows.len(), rows.first().map_or(0, Vec::len), n, f)?;
    WeightVec::from_rows(&rows)
}

/// A highest weight given as a comma list, a JSON array of rows, or a JSON
/// object `{"lambda": [[...], ...]}`.
pub fn highest_weight(s: &str, n: usize, f: usize) -> Result<WeightVec> {
    let t = s.trim();
    let lambda = if t.starts_with('{') {
        serde_json::from_str::<SerreWeightInput>(t)
            .map_err(|e| Error::Parse(format!("weight object: {e}")))?
            .lambda
    } else if t.starts_with('[') {
        serde_json::from_str::<WeightVec>(t)
            .map_err(|e| Error::Parse(format!("weight array: {e}")))?
    } else {
        return weight(t, n, f);
    };
    check_shape("weight", lambda.f(), lambda.n(), n, f)?;
    Ok(lambda)
}

fn check_shape(what: &str, rows: usize, width: usize, n: usize, f: usize) -> Result<()> {
    if rows != f || width != n {
        return Err(Error::Shape {
            expected: format!("{what} with {f} embedding(s) of length {n}"),
            got: format!("{rows} embedding(s) of length {width}"),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations() {
        let a = permutation("231", 3, 1).unwrap();
        assert_eq!(a.to_rows(), vec![vec![2, 3, 1]]);
        assert_eq!(permutation("2,3,1", 3, 1).unwrap(), a);
        let b = permutation("21;12", 2, 2).unwrap();
        assert_eq!(b.to_rows(), vec![vec![2, 1], vec![1, 2]]);
        assert!(matches!(
            permutation("221", 3, 1),
            Err(Error::NotAPermutation(_))
        ));
        assert!(matches!(permutation("2x1", 3, 1), Err(Error::Parse(_))));
        assert!(matches!(permutation("21", 3, 1), Err(Error::Shape { .. })));
    }

    #[test]
    fn weights() {
        let w = weight("20, 10, 0", 3, 1).unwrap();
        assert_eq!(w.to_rows(), vec![vec![20, 10, 0]]);
        assert_eq!(
            weight("4,0;3,0", 2, 2).unwrap().to_rows(),
            vec![vec![4, 0], vec![3, 0]]
        );
        assert!(matches!(weight("4,0", 2, 2), Err(Error::Shape { .. })));
        assert!(matches!(weight("a,0", 2, 1), Err(Error::Parse(_))));
    }

    #[test]
    fn highest_weights() {
        let w = highest_weight("[[5,2,0]]", 3, 1).unwrap();
        assert_eq!(w, weight("5,2,0", 3, 1).unwrap());
        assert_eq!(highest_weight(r#"{"lambda": [[5,2,0]]}"#, 3, 1).unwrap(), w);
        assert!(matches!(
            highest_weight(r#"{"mu": [[5,2,0]]}"#, 3, 1),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            highest_weight("[[5,2]]", 3, 1),
            Err(Error::Shape { .. })
        ));
    }
}
