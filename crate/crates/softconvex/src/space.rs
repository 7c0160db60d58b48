//! The ambient pair (universe, parameter list) every soft set lives on.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite universe of elements together with a finite parameter list.
///
/// Identifier order is fixed at construction and defines the canonical order
/// used everywhere else: membership bit layout, soft-set enumeration, and
/// serialization. Two spaces are equal when their identifier lists are equal.
#[derive(Debug)]
pub struct Space {
    universe: Vec<String>,
    parameters: Vec<String>,
    element_index: HashMap<String, usize>,
    parameter_index: HashMap<String, usize>,
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.parameters == other.parameters
    }
}

impl Eq for Space {}

impl Space {
    /// Builds a space from distinct element and parameter identifiers.
    pub fn new<S: Into<String>, T: Into<String>>(
        universe: impl IntoIterator<Item = S>,
        parameters: impl IntoIterator<Item = T>,
    ) -> Result<Arc<Space>> {
        let universe: Vec<String> = universe.into_iter().map(Into::into).collect();
        let parameters: Vec<String> = parameters.into_iter().map(Into::into).collect();
        if universe.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if parameters.is_empty() {
            return Err(Error::EmptyParameters);
        }
        let mut element_index = HashMap::with_capacity(universe.len());
        for (i, x) in universe.iter().enumerate() {
            if element_index.insert(x.clone(), i).is_some() {
                return Err(Error::DuplicateIdentifier(x.clone()));
            }
        }
        // Element and parameter names are independent namespaces.
        let mut parameter_index = HashMap::with_capacity(parameters.len());
        for (i, e) in parameters.iter().enumerate() {
            if parameter_index.insert(e.clone(), i).is_some() {
                return Err(Error::DuplicateIdentifier(e.clone()));
            }
        }
        Ok(Arc::new(Space {
            universe,
            parameters,
            element_index,
            parameter_index,
        }))
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn element_count(&self) -> usize {
        self.universe.len()
    }

    pub fn parameter_count(&self) -> usize {
        self.parameters.len()
    }

    /// Total number of membership bits, `|X| * |E|`.
    pub fn bit_count(&self) -> usize {
        self.universe.len() * self.parameters.len()
    }

    pub fn element_position(&self, name: &str) -> Result<usize> {
        self.element_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn parameter_position(&self, name: &str) -> Result<usize> {
        self.parameter_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownParameter(name.to_string()))
    }

    /// 64-bit words needed to hold one parameter's membership row.
    pub(crate) fn words_per_row(&self) -> usize {
        self.universe.len().div_ceil(64)
    }

    /// Mask for the last (possibly partial) word of a row.
    pub(crate) fn last_word_mask(&self) -> u64 {
        let rem = self.universe.len() % 64;
        if rem == 0 {
            u64::MAX
        } else {
            (1u64 << rem) - 1
        }
    }

    /// Errors unless `a` and `b` are the same space (pointer or structural).
    pub(crate) fn ensure_same(a: &Arc<Space>, b: &Arc<Space>) -> Result<()> {
        if Arc::ptr_eq(a, b) || a == b {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "space {{{}}} x {{{}}}",
            self.universe.join(","),
            self.parameters.join(",")
        )
    }
}
