//! Dense sets of small nonnegative integers.

use std::fmt;

/// A set of integers in `0..=max`, stored as one flag per value.
///
/// Weight images and restricted monoids live in short ranges, so a flat
/// table keeps reflection and complement trivial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ValueSet {
    flags: Vec<bool>,
}

impl ValueSet {
    /// The empty set over `0..=max`.
    pub fn empty(max: u64) -> Self {
        ValueSet { flags: vec![false; max as usize + 1] }
    }

    /// All of `0..=max`.
    pub fn full(max: u64) -> Self {
        ValueSet { flags: vec![true; max as usize + 1] }
    }

    /// Largest value the set can hold.
    pub fn max_value(&self) -> u64 {
        self.flags.len() as u64 - 1
    }

    pub fn contains(&self, v: u64) -> bool {
        self.flags.get(v as usize).copied().unwrap_or(false)
    }

    /// Inserts `v`. Values beyond the range are ignored and `false` returned.
    pub fn insert(&mut self, v: u64) -> bool {
        match self.flags.get_mut(v as usize) {
            Some(slot) => {
                *slot = true;
                true
            }
            None => false,
        }
    }

    pub fn remove(&mut self, v: u64) {
        if let Some(slot) = self.flags.get_mut(v as usize) {
            *slot = false;
        }
    }

    pub fn len(&self) -> usize {
        self.flags.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.flags.iter().any(|&b| b)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.flags.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v as u64)
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.iter().collect()
    }

    /// `self |= self + shift`, truncated to the range.
    pub fn or_shifted(&mut self, shift: u64) {
        let shift = shift as usize;
        if shift == 0 || shift >= self.flags.len() {
            return;
        }
        for v in (shift..self.flags.len()).rev() {
            if self.flags[v - shift] {
                self.flags[v] = true;
            }
        }
    }

    /// `{ max - v : v in self }`.
    pub fn reflected(&self) -> ValueSet {
        let mut flags = self.flags.clone();
        flags.reverse();
        ValueSet { flags }
    }

    pub fn is_subset(&self, other: &ValueSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Values of `self` not in `other`.
    pub fn difference(&self, other: &ValueSet) -> Vec<u64> {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }
}

impl fmt::Debug for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_or_builds_multiples() {
        let mut s = ValueSet::empty(10);
        s.insert(0);
        s.or_shifted(3);
        s.or_shifted(3);
        assert_eq!(s.to_vec(), vec![0, 3, 6]);
    }

    #[test]
    fn reflection() {
        let mut s = ValueSet::empty(5);
        s.insert(1);
        s.insert(2);
        assert_eq!(s.reflected().to_vec(), vec![3, 4]);
    }

    #[test]
    fn out_of_range_insert_is_rejected() {
        let mut s = ValueSet::empty(2);
        assert!(!s.insert(3));
        assert!(!s.contains(3));
        assert_eq!(s.max_value(), 2);
    }
}
