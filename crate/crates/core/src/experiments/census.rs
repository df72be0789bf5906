use std::collections::BTreeMap;

use super::ExperimentError;

/// Occurrence counts of the length-`length` factors of a set of words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordCensus {
    pub length: usize,
    pub counts: BTreeMap<Vec<u32>, usize>,
}

impl WordCensus {
    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    /// `ln(distinct) / length`, the word-complexity entropy estimate.
    pub fn entropy_estimate(&self) -> f64 {
        (self.distinct() as f64).ln() / self.length as f64
    }
}

pub fn word_census(words: &[Vec<u32>], length: usize) -> Result<WordCensus, ExperimentError> {
    if length == 0 {
        return Err(ExperimentError::ZeroLength);
    }
    let mut counts = BTreeMap::new();
    for (index, word) in words.iter().enumerate() {
        if word.len() < length {
            return Err(ExperimentError::WordTooShort {
                index,
                len: word.len(),
                length,
            });
        }
        for factor in word.windows(length) {
            *counts.entry(factor.to_vec()).or_insert(0) += 1;
        }
    }
    Ok(WordCensus { length, counts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_word() {
        let c = word_census(&[vec![3; 10]], 4).unwrap();
        assert_eq!(c.distinct(), 1);
        assert_eq!(c.counts[&vec![3; 4]], 7);
        assert_eq!(c.entropy_estimate(), 0.0);
    }

    #[test]
    fn full_binary_shift() {
        let length = 5;
        let words: Vec<Vec<u32>> = (0..1u32 << length)
            .map(|code| (0..length).map(|b| (code >> b) & 1).collect())
            .collect();
        let c = word_census(&words, length).unwrap();
        assert_eq!(c.distinct(), 32);
        assert!((c.entropy_estimate() - 2f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn errors() {
        assert_eq!(word_census(&[vec![1]], 0), Err(ExperimentError::ZeroLength));
        assert_eq!(
            word_census(&[vec![1, 2, 3], vec![1]], 2),
            Err(ExperimentError::WordTooShort {
                index: 1,
                len: 1,
                length: 2
            })
        );
    }
}
