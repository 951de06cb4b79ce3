//! Named real symbols τ₁, τ₂, … assumed algebraically independent over ℚ.
//!
//! Index 0 is reserved for the constant 1; symbol `s` has index `s ≥ 1`.
//! The float values are only used for numeric shadows and sign decisions that
//! cannot be made exactly.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize, Default)]
pub struct Symbols {
    names: Vec<String>,
    values: Vec<f64>,
}

const PRIMES: [u32; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// Deterministic positive irrational-looking shadow for the k-th symbol (0-based).
pub fn default_value(k: usize) -> f64 {
    let p = PRIMES[k % PRIMES.len()] as f64;
    p.sqrt() * (1.0 + (k / PRIMES.len()) as f64 * 0.1)
}

impl Symbols {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_names<S: AsRef<str>>(names: &[S]) -> Self {
        let mut s = Self::new();
        for n in names {
            s.add(n.as_ref());
        }
        s
    }

    /// Add a symbol (or return the existing index) with its default shadow value.
    pub fn add(&mut self, name: &str) -> usize {
        if let Some(i) = self.index_of(name) {
            return i;
        }
        let v = default_value(self.names.len());
        self.names.push(name.to_string());
        self.values.push(v);
        self.names.len()
    }

    pub fn add_with_value(&mut self, name: &str, value: f64) -> usize {
        let i = self.add(name);
        self.values[i - 1] = value;
        i
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name).map(|i| i + 1)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, s: usize) -> &str {
        &self.names[s - 1]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Value of basis element `s` (1 for the constant).
    pub fn value(&self, s: usize) -> f64 {
        if s == 0 {
            1.0
        } else {
            self.values.get(s - 1).copied().unwrap_or_else(|| default_value(s - 1))
        }
    }
}
