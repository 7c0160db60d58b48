//! The JSON document format: spaces, named soft sets, families, operator
//! tables, and point functions in one file.
//!
//! A document is a single JSON object with the keys `universe`, `parameters`,
//! `soft_sets`, `families`, `operators`, and `functions`; all sections after
//! the first two are optional. The reserved names `PHI` and `ABS` bind to the
//! null and absolute soft sets in every document without declaration.
//!
//! Canonical serialization is deterministic: universe and parameters keep
//! their declaration order, every other name is sorted lexicographically,
//! assignment keys follow parameter order, element lists follow universe
//! order, family member lists are sorted by the canonical index of the named
//! set, and operator entries are sorted by the canonical index of their
//! input. Operator operands render as `PHI`/`ABS` when possible, then as the
//! lexicographically smallest declared name, then inline. `serialize` after
//! `parse` is byte-identical on canonical input.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::error::Error;
use crate::family::SoftFamily;
use crate::morphisms::SoftFunctionMap;
use crate::operators::OperatorTable;
use crate::soft_set::SoftSet;
use crate::space::Space;

/// Reserved name for the null soft set.
pub const NULL_NAME: &str = "PHI";
/// Reserved name for the absolute soft set.
pub const ABSOLUTE_NAME: &str = "ABS";

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown name `{name}` in {site}")]
    UnknownName { name: String, site: String },

    #[error("assignment `{name}` is not total: missing parameter `{missing}`")]
    NonTotalAssignment { name: String, missing: String },

    #[error("duplicate name `{name}` in {site}")]
    DuplicateName { name: String, site: String },

    #[error("operator `{name}` is not total: expected {expected} entries, got {got}")]
    IncompleteOperator {
        name: String,
        expected: u64,
        got: u64,
    },

    #[error(transparent)]
    Core(#[from] Error),
}

/// A point-function declaration: the codomain document reference and the
/// element map. Map values are resolved against the codomain document when
/// the function is materialized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionDecl {
    pub codomain: String,
    pub map: BTreeMap<String, String>,
}

/// A parsed document: the space plus named soft sets, families, operators,
/// and functions, all name-resolved.
#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    space: Arc<Space>,
    soft_sets: BTreeMap<String, SoftSet>,
    families: BTreeMap<String, Vec<String>>,
    operators: BTreeMap<String, Vec<(SoftSet, SoftSet)>>,
    functions: BTreeMap<String, FunctionDecl>,
}

#[derive(Deserialize)]
struct RawDocument {
    universe: Vec<String>,
    parameters: Vec<String>,
    #[serde(default)]
    soft_sets: BTreeMap<String, BTreeMap<String, Vec<String>>>,
    #[serde(default)]
    families: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    operators: BTreeMap<String, Vec<(RawOperand, RawOperand)>>,
    #[serde(default)]
    functions: BTreeMap<String, RawFunction>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawOperand {
    Name(String),
    Inline(BTreeMap<String, Vec<String>>),
}

#[derive(Deserialize)]
struct RawFunction {
    codomain: String,
    map: BTreeMap<String, String>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Document, DocumentError> {
        let raw: RawDocument = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let space = Space::new(raw.universe, raw.parameters)?;

        let mut soft_sets = BTreeMap::new();
        for (name, assignment) in raw.soft_sets {
            if name == NULL_NAME || name == ABSOLUTE_NAME {
                return Err(DocumentError::DuplicateName {
                    name,
                    site: "soft_sets (reserved name)".to_string(),
                });
            }
            let set = resolve_assignment(&space, &name, &assignment)?;
            soft_sets.insert(name, set);
        }

        // Family member lists are canonicalized at parse: sorted by the
        // canonical order of the named set, then by name, deduplicated.
        let mut families = BTreeMap::new();
        for (fam_name, members) in raw.families {
            let mut keyed: Vec<(SoftSet, String)> = Vec::with_capacity(members.len());
            for member in members {
                let set = resolve_set_name(&space, &soft_sets, &member).map_err(|name| {
                    DocumentError::UnknownName {
                        name,
                        site: format!("family `{fam_name}`"),
                    }
                })?;
                keyed.push((set, member));
            }
            keyed.sort();
            keyed.dedup();
            families.insert(fam_name, keyed.into_iter().map(|(_, name)| name).collect());
        }

        let mut operators = BTreeMap::new();
        for (op_name, raw_entries) in raw.operators {
            let bits = space.bit_count();
            let expected = if bits <= crate::operators::MAX_TABLE_BITS {
                1u64 << bits
            } else {
                return Err(DocumentError::Core(Error::BudgetExceeded(format!(
                    "operator `{op_name}` needs |X|*|E| <= {}, space has {bits} bits",
                    crate::operators::MAX_TABLE_BITS
                ))));
            };
            let mut entries = Vec::with_capacity(raw_entries.len());
            let mut seen = vec![false; expected as usize];
            for (raw_in, raw_out) in raw_entries {
                let site = format!("operator `{op_name}`");
                let input = resolve_operand(&space, &soft_sets, &raw_in, &site)?;
                let output = resolve_operand(&space, &soft_sets, &raw_out, &site)?;
                let idx = input.canonical_index().expect("table-sized space") as usize;
                if seen[idx] {
                    return Err(DocumentError::DuplicateName {
                        name: input.to_string(),
                        site: format!("operator `{op_name}` (duplicate input)"),
                    });
                }
                seen[idx] = true;
                entries.push((input, output));
            }
            if entries.len() as u64 != expected {
                return Err(DocumentError::IncompleteOperator {
                    name: op_name,
                    expected,
                    got: entries.len() as u64,
                });
            }
            entries.sort_by_key(|(input, _)| input.canonical_index());
            operators.insert(op_name, entries);
        }

        let mut functions = BTreeMap::new();
        for (fn_name, raw_fn) in raw.functions {
            for key in raw_fn.map.keys() {
                space
                    .element_position(key)
                    .map_err(|_| DocumentError::UnknownName {
                        name: key.clone(),
                        site: format!("function `{fn_name}`"),
                    })?;
            }
            for element in space.universe() {
                if !raw_fn.map.contains_key(element) {
                    return Err(DocumentError::NonTotalAssignment {
                        name: format!("function `{fn_name}`"),
                        missing: element.clone(),
                    });
                }
            }
            functions.insert(
                fn_name,
                FunctionDecl {
                    codomain: raw_fn.codomain,
                    map: raw_fn.map,
                },
            );
        }

        Ok(Document {
            space,
            soft_sets,
            families,
            operators,
            functions,
        })
    }

    /// Canonical serialization; ends with a newline.
    pub fn serialize(&self) -> String {
        let mut root = Map::new();
        root.insert("universe".to_string(), json!(self.space.universe()));
        root.insert("parameters".to_string(), json!(self.space.parameters()));

        if !self.soft_sets.is_empty() {
            let mut sets = Map::new();
            for (name, set) in &self.soft_sets {
                sets.insert(name.clone(), assignment_value(set));
            }
            root.insert("soft_sets".to_string(), Value::Object(sets));
        }

        if !self.families.is_empty() {
            let mut families = Map::new();
            for (name, members) in &self.families {
                families.insert(name.clone(), json!(members));
            }
            root.insert("families".to_string(), Value::Object(families));
        }

        if !self.operators.is_empty() {
            let mut operators = Map::new();
            for (name, entries) in &self.operators {
                let rows: Vec<Value> = entries
                    .iter()
                    .map(|(input, output)| {
                        json!([self.operand_value(input), self.operand_value(output)])
                    })
                    .collect();
                operators.insert(name.clone(), Value::Array(rows));
            }
            root.insert("operators".to_string(), Value::Object(operators));
        }

        if !self.functions.is_empty() {
            let mut functions = Map::new();
            for (name, decl) in &self.functions {
                let mut map = Map::new();
                for element in self.space.universe() {
                    map.insert(element.clone(), json!(decl.map[element]));
                }
                functions.insert(
                    name.clone(),
                    json!({"codomain": decl.codomain, "map": Value::Object(map)}),
                );
            }
            root.insert("functions".to_string(), Value::Object(functions));
        }

        let mut text = serde_json::to_string_pretty(&Value::Object(root))
            .expect("documents serialize to valid JSON");
        text.push('\n');
        text
    }

    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    /// Resolves a soft-set name: `PHI`, `ABS`, or a declared set.
    pub fn resolve(&self, name: &str) -> Result<SoftSet, DocumentError> {
        resolve_set_name(&self.space, &self.soft_sets, name).map_err(|name| {
            DocumentError::UnknownName {
                name,
                site: "document".to_string(),
            }
        })
    }

    pub fn soft_set_names(&self) -> impl Iterator<Item = &str> {
        self.soft_sets.keys().map(String::as_str)
    }

    /// The family under `name` as a deduplicated [`SoftFamily`].
    pub fn family(&self, name: &str) -> Result<SoftFamily, DocumentError> {
        let members = self
            .families
            .get(name)
            .ok_or_else(|| DocumentError::UnknownName {
                name: name.to_string(),
                site: "families".to_string(),
            })?;
        let sets: Result<Vec<SoftSet>, DocumentError> =
            members.iter().map(|m| self.resolve(m)).collect();
        Ok(SoftFamily::new(&self.space, sets?)?)
    }

    /// The operator under `name` as a total [`OperatorTable`].
    pub fn operator(&self, name: &str) -> Result<OperatorTable, DocumentError> {
        let entries = self
            .operators
            .get(name)
            .ok_or_else(|| DocumentError::UnknownName {
                name: name.to_string(),
                site: "operators".to_string(),
            })?;
        let outputs: Vec<SoftSet> = entries.iter().map(|(_, out)| out.clone()).collect();
        Ok(OperatorTable::new(&self.space, outputs)?)
    }

    pub fn function_decl(&self, name: &str) -> Result<&FunctionDecl, DocumentError> {
        self.functions
            .get(name)
            .ok_or_else(|| DocumentError::UnknownName {
                name: name.to_string(),
                site: "functions".to_string(),
            })
    }

    /// Materializes the function under `name` against a codomain document.
    pub fn function(
        &self,
        name: &str,
        codomain: &Document,
    ) -> Result<SoftFunctionMap, DocumentError> {
        let decl = self.function_decl(name)?;
        let pairs: Vec<(&str, &str)> = decl
            .map
            .iter()
            .map(|(x, y)| (x.as_str(), y.as_str()))
            .collect();
        for (_, y) in &pairs {
            codomain
                .space
                .element_position(y)
                .map_err(|_| DocumentError::UnknownName {
                    name: (*y).to_string(),
                    site: format!("function `{name}` (codomain element)"),
                })?;
        }
        Ok(SoftFunctionMap::new(&self.space, &codomain.space, &pairs)?)
    }

    /// The canonical display name for a value: `PHI`/`ABS`, the smallest
    /// declared name, or the rendered soft set.
    pub fn display_name(&self, set: &SoftSet) -> String {
        if set.is_null() {
            return NULL_NAME.to_string();
        }
        if set.is_absolute() {
            return ABSOLUTE_NAME.to_string();
        }
        for (name, candidate) in &self.soft_sets {
            if candidate == set {
                return name.clone();
            }
        }
        set.to_string()
    }

    fn operand_value(&self, set: &SoftSet) -> Value {
        if set.is_null() {
            return json!(NULL_NAME);
        }
        if set.is_absolute() {
            return json!(ABSOLUTE_NAME);
        }
        for (name, candidate) in &self.soft_sets {
            if candidate == set {
                return json!(name);
            }
        }
        assignment_value(set)
    }
}

fn assignment_value(set: &SoftSet) -> Value {
    let mut assignment = Map::new();
    for (param, elements) in set.to_map() {
        assignment.insert(param, json!(elements));
    }
    // BTreeMap iteration is lexicographic; re-order to parameter order.
    let mut ordered = Map::new();
    for param in set.space().parameters() {
        ordered.insert(param.clone(), assignment[param].clone());
    }
    Value::Object(ordered)
}

fn resolve_assignment(
    space: &Arc<Space>,
    name: &str,
    assignment: &BTreeMap<String, Vec<String>>,
) -> Result<SoftSet, DocumentError> {
    for key in assignment.keys() {
        space
            .parameter_position(key)
            .map_err(|_| DocumentError::UnknownName {
                name: key.clone(),
                site: format!("soft set `{name}`"),
            })?;
    }
    for param in space.parameters() {
        if !assignment.contains_key(param) {
            return Err(DocumentError::NonTotalAssignment {
                name: name.to_string(),
                missing: param.clone(),
            });
        }
    }
    for elements in assignment.values() {
        for element in elements {
            space
                .element_position(element)
                .map_err(|_| DocumentError::UnknownName {
                    name: element.clone(),
                    site: format!("soft set `{name}`"),
                })?;
        }
    }
    Ok(SoftSet::from_map(space, assignment)?)
}

fn resolve_set_name(
    space: &Arc<Space>,
    soft_sets: &BTreeMap<String, SoftSet>,
    name: &str,
) -> Result<SoftSet, String> {
    match name {
        NULL_NAME => Ok(SoftSet::null(space)),
        ABSOLUTE_NAME => Ok(SoftSet::absolute(space)),
        _ => soft_sets
            .get(name)
            .cloned()
            .ok_or_else(|| name.to_string()),
    }
}

fn resolve_operand(
    space: &Arc<Space>,
    soft_sets: &BTreeMap<String, SoftSet>,
    operand: &RawOperand,
    site: &str,
) -> Result<SoftSet, DocumentError> {
    match operand {
        RawOperand::Name(name) => {
            resolve_set_name(space, soft_sets, name).map_err(|name| DocumentError::UnknownName {
                name,
                site: site.to_string(),
            })
        }
        RawOperand::Inline(assignment) => resolve_assignment(space, site, assignment),
    }
}

/// A crisp convex-structure file: `{"universe": [...], "members": [[...]]}`.
#[derive(Clone, Debug, Deserialize)]
pub struct CrispDocument {
    pub universe: Vec<String>,
    pub members: Vec<Vec<String>>,
}

impl CrispDocument {
    pub fn parse(text: &str) -> Result<CrispDocument, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }
}
