//! Validation outcomes: which axiom failed, on which members, and what the
//! offending computed set was. A report is valid exactly when it carries no
//! witnesses; fast-mode shortcuts leave a proof note instead of a scan.

use std::fmt;

use crate::soft_set::SoftSet;

/// How thoroughly directed-family axioms are checked.
///
/// `Fast` certifies directed-union laws through the finite-collapse argument
/// (a finite nonempty upward directed family contains its own union), which
/// makes the literal scan redundant on finite carriers. `Literal` additionally
/// enumerates upward directed subfamilies up to the given size cap and checks
/// the law on each one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CheckMode {
    #[default]
    Fast,
    Literal { cap: usize },
}

impl CheckMode {
    pub fn literal() -> Self {
        CheckMode::Literal {
            cap: DEFAULT_SUBFAMILY_CAP,
        }
    }
}

/// Default size cap for literal directed-subfamily scans.
pub const DEFAULT_SUBFAMILY_CAP: usize = 5;

/// Identifies the violated axiom in a [`Witness`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    /// The null soft set is missing from the family.
    NullMember,
    /// The absolute soft set is missing from the family.
    AbsoluteMember,
    /// A pairwise intersection of members is not a member.
    IntersectionClosed,
    /// The union of an upward directed subfamily is not a member.
    DirectedUnionClosed,
    /// Operator does not map the null soft set to itself.
    Normalization,
    /// Operator output does not contain its input.
    Extensivity,
    /// Operator output shrinks when the input grows.
    Monotonicity,
    /// Applying the operator twice changes the output.
    Idempotence,
    /// Operator value on a directed union differs from the union of values.
    DirectedAdditivity,
    /// `d(d(Ω) ∪ Ω)` escapes `d(Ω) ∪ Ω`.
    WeakIdempotence,
    /// SCB1: no upward directed subfamily unions to the absolute soft set.
    Scb1,
    /// SCB2: an intersection of members is not a directed union of members.
    Scb2,
    /// SCB3: a directed union of expressible sets is not expressible.
    Scb3,
}

impl Axiom {
    /// Stable kebab-case identifier used in text and JSON reports.
    pub fn id(self) -> &'static str {
        match self {
            Axiom::NullMember => "null-member",
            Axiom::AbsoluteMember => "absolute-member",
            Axiom::IntersectionClosed => "intersection-closed",
            Axiom::DirectedUnionClosed => "directed-union-closed",
            Axiom::Normalization => "normalization",
            Axiom::Extensivity => "extensivity",
            Axiom::Monotonicity => "monotonicity",
            Axiom::Idempotence => "idempotence",
            Axiom::DirectedAdditivity => "directed-additivity",
            Axiom::WeakIdempotence => "weak-idempotence",
            Axiom::Scb1 => "scb1",
            Axiom::Scb2 => "scb2",
            Axiom::Scb3 => "scb3",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One concrete axiom violation: the axiom, the member(s) it fails on, and
/// the computed set that exposes the failure (for example a missing
/// intersection, or the operator output that escapes its bound).
#[derive(Clone, Debug)]
pub struct Witness {
    pub axiom: Axiom,
    pub members: Vec<SoftSet>,
    pub computed: Option<SoftSet>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.axiom)?;
        for m in &self.members {
            write!(f, " {m}")?;
        }
        if let Some(c) = &self.computed {
            write!(f, " -> {c}")?;
        }
        Ok(())
    }
}

/// Outcome of a validator run. Valid exactly when no witness was found.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    witnesses: Vec<Witness>,
    notes: Vec<String>,
}

impl ValidationReport {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub fn is_valid(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn witnesses(&self) -> &[Witness] {
        &self.witnesses
    }

    /// Proof notes recorded by fast-mode shortcuts.
    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub(crate) fn witness(&mut self, axiom: Axiom, members: Vec<SoftSet>, computed: Option<SoftSet>) {
        self.witnesses.push(Witness {
            axiom,
            members,
            computed,
        });
    }

    pub(crate) fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            writeln!(f, "valid")?;
        } else {
            writeln!(f, "invalid")?;
            for w in &self.witnesses {
                writeln!(f, "  witness {w}")?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
