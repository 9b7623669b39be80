//! Error types shared by every checker in the crate.
//!
//! Each variant names the offending cell so that a failing fixture can be
//! repaired by reading the message alone; witnesses are reported in
//! lexicographic enumeration order, so messages are stable across runs.

use thiserror::Error;

/// Any failure produced while validating or deriving categorical data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    // ---- category-level ----
    #[error("missing composite for {g} . {f}")]
    MissingComposite { g: String, f: String },
    #[error("composition not associative at h={h}, g={g}, f={f}: ({h}.{g}).{f} = {left} but {h}.({g}.{f}) = {right}")]
    NonAssociative {
        h: String,
        g: String,
        f: String,
        left: String,
        right: String,
    },
    #[error("bad identity for object {object}: {reason}")]
    BadIdentity { object: String, reason: String },
    #[error("malformed category data: {0}")]
    MalformedCategory(String),

    // ---- functor / transformation ----
    #[error("not a functor: {reason} (witness {witness})")]
    NotFunctorial { reason: String, witness: String },
    #[error("not natural at {witness}: {reason}")]
    NotNatural { reason: String, witness: String },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    // ---- universal arrows ----
    #[error("no universal witness at (A={a}, X={x}, v={v})")]
    NoWitness { a: String, x: String, v: String },
    #[error("ambiguous universal witness at (A={a}, X={x}, v={v}): candidates {candidates:?}")]
    AmbiguousWitness {
        a: String,
        x: String,
        v: String,
        candidates: Vec<String>,
    },
    #[error("rho is not invertible at {object}: {reason}")]
    NotInvertible { object: String, reason: String },
    #[error("cylinder condition fails at {object}: {lhs} != {rhs}")]
    CylinderViolation {
        object: String,
        lhs: String,
        rhs: String,
    },

    // ---- extension-form monads ----
    #[error("extension law a fails at A={a}: (unit A)^SA = {got}, expected identity {expected}")]
    LawA {
        a: String,
        got: String,
        expected: String,
    },
    #[error("extension law b fails at h={h} (A={a}, B={b}): h^SB . unit A = {got}")]
    LawB {
        a: String,
        b: String,
        h: String,
        got: String,
    },
    #[error("extension law c fails at h={h}, k={k}: (k^SC.h)^SC = {left} but k^SC.h^SB = {right}")]
    LawC {
        h: String,
        k: String,
        left: String,
        right: String,
    },
    #[error("algebra law {law} fails on carrier {carrier} at {witness}: {lhs} != {rhs}")]
    AlgebraLaw {
        law: String,
        carrier: String,
        witness: String,
        lhs: String,
        rhs: String,
    },
    #[error("morphism law fails for {q} at {witness}: {lhs} != {rhs}")]
    MorphismLaw {
        q: String,
        witness: String,
        lhs: String,
        rhs: String,
    },
    #[error("monad 1-cell law {law} fails at {witness}: {lhs} != {rhs}")]
    OneCellLaw {
        law: String,
        witness: String,
        lhs: String,
        rhs: String,
    },
    #[error("search budget exceeded: {0}")]
    SearchBudgetExceeded(String),

    // ---- bridge / classical ----
    #[error("image algebra missing from enumerated category: carrier {carrier}")]
    MissingImageAlgebra { carrier: String },
    #[error("triangular identity {which} fails at {object}: {got}")]
    TriangularIdentity {
        which: String,
        object: String,
        got: String,
    },
    #[error("classical monad law {law} fails at {object}: {lhs} != {rhs}")]
    MonadLaw {
        law: String,
        object: String,
        lhs: String,
        rhs: String,
    },
    #[error("monad morphism compatibility {which} fails at {object}: {lhs} != {rhs}")]
    MonadMorphismLaw {
        which: String,
        object: String,
        lhs: String,
        rhs: String,
    },
    #[error("dual adjoint equation fails at {object}: {lhs} != {rhs}")]
    DualAdjoint {
        object: String,
        lhs: String,
        rhs: String,
    },

    // A derived composite failed its own re-validation.  The constructions
    // guarantee this cannot happen on validated inputs, so this class marks
    // an implementation bug rather than bad fixture data.
    #[error("internal consistency fault: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, CheckError>;
