//! Ising model representation, energy evaluation, and variable contraction.
//!
//! An Ising Hamiltonian over spins `z ∈ {−1,+1}^N` is
//!
//! ```text
//!   E(z) = offset + Σ_i h_i z_i + Σ_{i<j} J_ij z_i z_j
//! ```
//!
//! with sparse local fields `h` and couplers `J` over a set of active
//! variable indices. Fixing a variable to a known spin *contracts* the
//! Hamiltonian: the variable's field folds into the constant offset and its
//! couplers fold into the neighbors' fields, so energies of contracted and
//! root Hamiltonians stay directly comparable.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors from Hamiltonian construction, evaluation, and file I/O.
#[derive(Debug, Error)]
pub enum IsingError {
    #[error("variable {index} is not active")]
    IndexNotActive { index: usize },
    #[error("spin value {value} is not -1 or +1")]
    InvalidSpin { value: i8 },
    #[error("self-coupler at variable {index}")]
    SelfCoupler { index: usize },
    #[error("coupler {{{i},{j}}} already present")]
    DuplicateCoupler { i: usize, j: usize },
    #[error("duplicate variable {index} in assignment")]
    DuplicateIndex { index: usize },
    #[error("conflicting values for variable {index}")]
    ConflictingAssignment { index: usize },
    #[error("assignment domain mismatch: missing {missing:?}, extra {extra:?}")]
    DomainMismatch {
        missing: Vec<usize>,
        extra: Vec<usize>,
    },
    #[error("problem file: {0}")]
    ProblemFormat(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("problem file: {0}")]
    Json(#[from] serde_json::Error),
}

fn check_spin(value: i8) -> Result<(), IsingError> {
    if value == 1 || value == -1 {
        Ok(())
    } else {
        Err(IsingError::InvalidSpin { value })
    }
}

/// Normalize an unordered coupler key to `(min, max)`.
fn pair_key(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// A complete spin assignment: one value in `{−1,+1}` per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinAssignment {
    values: BTreeMap<usize, i8>,
}

impl SpinAssignment {
    /// Build from `(variable, spin)` pairs. Rejects duplicate indices and
    /// values outside `{−1,+1}`.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, i8)>) -> Result<Self, IsingError> {
        let mut values = BTreeMap::new();
        for (index, value) in pairs {
            check_spin(value)?;
            if values.insert(index, value).is_some() {
                return Err(IsingError::DuplicateIndex { index });
            }
        }
        Ok(Self { values })
    }

    /// All variables set to the same spin (e.g. the identity gauge).
    pub fn constant(vars: impl IntoIterator<Item = usize>, value: i8) -> Result<Self, IsingError> {
        Self::from_pairs(vars.into_iter().map(|i| (i, value)))
    }

    pub fn empty() -> Self {
        Self {
            values: BTreeMap::new(),
        }
    }

    pub fn get(&self, index: usize) -> Option<i8> {
        self.values.get(&index).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.values.contains_key(&index)
    }

    /// Iterate `(variable, spin)` in ascending variable order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, i8)> + '_ {
        self.values.iter().map(|(&i, &v)| (i, v))
    }

    /// Variable indices in ascending order.
    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.values.keys().copied()
    }

    /// Copy with the spin at `index` flipped.
    pub fn flipped(&self, index: usize) -> Result<Self, IsingError> {
        let mut out = self.clone();
        match out.values.get_mut(&index) {
            Some(v) => {
                *v = -*v;
                Ok(out)
            }
            None => Err(IsingError::IndexNotActive { index }),
        }
    }

    /// Restriction to the given variable set (indices not present are skipped).
    pub fn restrict(&self, vars: impl IntoIterator<Item = usize>) -> Self {
        let keep: BTreeSet<usize> = vars.into_iter().collect();
        Self {
            values: self
                .values
                .iter()
                .filter(|(i, _)| keep.contains(i))
                .map(|(&i, &v)| (i, v))
                .collect(),
        }
    }

    /// Union of two assignments; overlapping variables must agree.
    pub fn merged(&self, other: &SpinAssignment) -> Result<Self, IsingError> {
        let mut values = self.values.clone();
        for (i, v) in other.iter() {
            match values.insert(i, v) {
                Some(prev) if prev != v => {
                    return Err(IsingError::ConflictingAssignment { index: i })
                }
                _ => {}
            }
        }
        Ok(Self { values })
    }
}

/// A growing map of fixed variables, `variable → spin`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartialAssignment {
    values: BTreeMap<usize, i8>,
}

impl PartialAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Fix a variable. Fixing the same variable twice is an error.
    pub fn fix(&mut self, index: usize, value: i8) -> Result<(), IsingError> {
        check_spin(value)?;
        if self.values.insert(index, value).is_some() {
            return Err(IsingError::DuplicateIndex { index });
        }
        Ok(())
    }

    pub fn get(&self, index: usize) -> Option<i8> {
        self.values.get(&index).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.values.contains_key(&index)
    }

    /// Iterate `(variable, spin)` in ascending variable order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, i8)> + '_ {
        self.values.iter().map(|(&i, &v)| (i, v))
    }

    /// View as a complete assignment over exactly the fixed variables.
    pub fn to_assignment(&self) -> SpinAssignment {
        SpinAssignment {
            values: self.values.clone(),
        }
    }
}

impl FromIterator<(usize, i8)> for PartialAssignment {
    /// Panics on duplicate indices or invalid spins; use [`Self::fix`] for
    /// fallible construction.
    fn from_iter<T: IntoIterator<Item = (usize, i8)>>(iter: T) -> Self {
        let mut out = Self::new();
        for (i, v) in iter {
            out.fix(i, v).expect("invalid partial assignment");
        }
        out
    }
}

/// A single invariant violation reported by [`IsingHamiltonian::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    SelfCoupler { index: usize },
    UnnormalizedCouplerKey { i: usize, j: usize },
    InactiveFieldIndex { index: usize },
    InactiveCouplerIndex { index: usize, i: usize, j: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SelfCoupler { index } => write!(f, "self-coupler at {index}"),
            Violation::UnnormalizedCouplerKey { i, j } => {
                write!(f, "coupler key ({i},{j}) not stored as (min,max)")
            }
            Violation::InactiveFieldIndex { index } => {
                write!(f, "field on inactive variable {index}")
            }
            Violation::InactiveCouplerIndex { index, i, j } => {
                write!(f, "coupler {{{i},{j}}} touches inactive variable {index}")
            }
        }
    }
}

/// Sparse Ising Hamiltonian over a set of active variable indices.
///
/// Invariants (checked on mutation, re-checkable via [`Self::validate`]):
/// every index in `fields` or `couplers` is active, coupler keys are
/// normalized `(min,max)` with `min != max`, and each unordered pair is
/// stored once. Missing coefficients default to 0. Immutable in spirit:
/// all solver-facing operations are pure and return new values.
#[derive(Debug, Clone, PartialEq)]
pub struct IsingHamiltonian {
    active: BTreeSet<usize>,
    fields: BTreeMap<usize, f64>,
    couplers: BTreeMap<(usize, usize), f64>,
    offset: f64,
}

impl IsingHamiltonian {
    /// A Hamiltonian over the given variables with no coefficients yet.
    pub fn new(vars: impl IntoIterator<Item = usize>) -> Self {
        Self {
            active: vars.into_iter().collect(),
            fields: BTreeMap::new(),
            couplers: BTreeMap::new(),
            offset: 0.0,
        }
    }

    /// The empty Hamiltonian (no variables, zero offset).
    pub fn empty() -> Self {
        Self::new([])
    }

    /// Build from coefficient lists over variables `0..n`.
    pub fn from_coefficients(
        n: usize,
        fields: impl IntoIterator<Item = (usize, f64)>,
        couplers: impl IntoIterator<Item = (usize, usize, f64)>,
    ) -> Result<Self, IsingError> {
        let mut out = Self::new(0..n);
        for (i, v) in fields {
            out.set_field(i, v)?;
        }
        for (i, j, v) in couplers {
            out.add_coupler(i, j, v)?;
        }
        Ok(out)
    }

    /// Set the local field `h_i`. Overwrites any previous value.
    pub fn set_field(&mut self, index: usize, value: f64) -> Result<(), IsingError> {
        if !self.active.contains(&index) {
            return Err(IsingError::IndexNotActive { index });
        }
        self.fields.insert(index, value);
        Ok(())
    }

    /// Add the coupler `J_ij`. The key is normalized to `(min,max)`;
    /// inserting the same unordered pair twice is an error.
    pub fn add_coupler(&mut self, i: usize, j: usize, value: f64) -> Result<(), IsingError> {
        if i == j {
            return Err(IsingError::SelfCoupler { index: i });
        }
        for index in [i, j] {
            if !self.active.contains(&index) {
                return Err(IsingError::IndexNotActive { index });
            }
        }
        let key = pair_key(i, j);
        if self.couplers.contains_key(&key) {
            return Err(IsingError::DuplicateCoupler { i: key.0, j: key.1 });
        }
        self.couplers.insert(key, value);
        Ok(())
    }

    pub fn set_offset(&mut self, offset: f64) {
        self.offset = offset;
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn num_vars(&self) -> usize {
        self.active.len()
    }

    pub fn is_empty(&self) -> bool {
        self.active.is_empty()
    }

    pub fn is_active(&self, index: usize) -> bool {
        self.active.contains(&index)
    }

    /// Active variable indices in ascending order.
    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.active.iter().copied()
    }

    /// Local field `h_i`, defaulting to 0 for active variables without one.
    pub fn field(&self, index: usize) -> f64 {
        self.fields.get(&index).copied().unwrap_or(0.0)
    }

    /// Coupler `J_ij` (order-insensitive), defaulting to 0.
    pub fn coupler(&self, i: usize, j: usize) -> f64 {
        self.couplers.get(&pair_key(i, j)).copied().unwrap_or(0.0)
    }

    /// Stored `(variable, h)` entries in ascending variable order.
    pub fn fields(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.fields.iter().map(|(&i, &v)| (i, v))
    }

    /// Stored `((i,j), J)` entries in ascending `(i,j)` order, `i < j`.
    pub fn couplers(&self) -> impl Iterator<Item = ((usize, usize), f64)> + '_ {
        self.couplers.iter().map(|(&k, &v)| (k, v))
    }

    pub fn num_couplers(&self) -> usize {
        self.couplers.len()
    }

    /// Evaluate `offset + Σ_i h_i z_i + Σ_{i<j} J_ij z_i z_j`.
    ///
    /// The assignment's domain must equal the active variable set.
    pub fn energy(&self, z: &SpinAssignment) -> Result<f64, IsingError> {
        if self.active.len() != z.values.len() || !self.active.iter().eq(z.values.keys()) {
            let missing: Vec<usize> = self
                .active
                .iter()
                .filter(|i| !z.values.contains_key(i))
                .copied()
                .collect();
            let extra: Vec<usize> = z
                .values
                .keys()
                .filter(|i| !self.active.contains(i))
                .copied()
                .collect();
            return Err(IsingError::DomainMismatch { missing, extra });
        }
        let mut e = self.offset;
        for (&i, &h) in &self.fields {
            e += h * f64::from(z.values[&i]);
        }
        for (&(i, j), &jij) in &self.couplers {
            e += jij * f64::from(z.values[&i]) * f64::from(z.values[&j]);
        }
        Ok(e)
    }

    /// Check every type invariant; returns all violations, not just the first.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for &i in self.fields.keys() {
            if !self.active.contains(&i) {
                out.push(Violation::InactiveFieldIndex { index: i });
            }
        }
        for &(i, j) in self.couplers.keys() {
            if i == j {
                out.push(Violation::SelfCoupler { index: i });
                continue;
            }
            if i > j {
                out.push(Violation::UnnormalizedCouplerKey { i, j });
            }
            for index in [i, j] {
                if !self.active.contains(&index) {
                    out.push(Violation::InactiveCouplerIndex { index, i, j });
                }
            }
        }
        out
    }

    fn contract_in_place(&mut self, index: usize, value: i8) -> Result<(), IsingError> {
        if !self.active.remove(&index) {
            return Err(IsingError::IndexNotActive { index });
        }
        check_spin(value)?;
        let v = f64::from(value);
        self.offset += v * self.fields.remove(&index).unwrap_or(0.0);
        let incident: Vec<(usize, usize)> = self
            .couplers
            .keys()
            .filter(|&&(a, b)| a == index || b == index)
            .copied()
            .collect();
        for key in incident {
            let j = self.couplers.remove(&key).expect("key just enumerated");
            let neighbor = if key.0 == index { key.1 } else { key.0 };
            *self.fields.entry(neighbor).or_insert(0.0) += v * j;
        }
        Ok(())
    }

    /// Fix variable `index` to `value` and eliminate it: `h_index` folds into
    /// the offset, each incident coupler `J_{index,j}` folds into `h_j`, and
    /// the variable leaves the active set. Pure; `self` is unmodified.
    ///
    /// For any assignment `z` over the remaining variables,
    /// `energy(self, z ∪ {index: value}) == energy(contracted, z)`.
    pub fn contract(&self, index: usize, value: i8) -> Result<Self, IsingError> {
        let mut out = self.clone();
        out.contract_in_place(index, value)?;
        Ok(out)
    }

    /// Contract every fixed variable. Contractions are applied in ascending
    /// variable order, which makes the result a function of the fix *set*;
    /// folding is commutative, so any order agrees to rounding.
    pub fn contract_many(&self, fixes: &PartialAssignment) -> Result<Self, IsingError> {
        let mut out = self.clone();
        for (i, v) in fixes.iter() {
            out.contract_in_place(i, v)?;
        }
        Ok(out)
    }

    /// Dense positional view for samplers and local search; see [`Adjacency`].
    pub fn adjacency(&self) -> Adjacency {
        Adjacency::build(self)
    }
}

/// Dense, position-indexed view of a Hamiltonian.
///
/// Active variables are mapped to positions `0..n` in ascending index order;
/// fields and per-position neighbor lists are laid out in `Vec`s so samplers
/// can run single-flip updates without map lookups.
#[derive(Debug, Clone)]
pub struct Adjacency {
    vars: Vec<usize>,
    fields: Vec<f64>,
    neighbors: Vec<Vec<(usize, f64)>>,
    offset: f64,
}

impl Adjacency {
    fn build(h: &IsingHamiltonian) -> Self {
        let vars: Vec<usize> = h.vars().collect();
        let fields: Vec<f64> = vars.iter().map(|&i| h.field(i)).collect();
        let mut neighbors: Vec<Vec<(usize, f64)>> = vars.iter().map(|_| Vec::new()).collect();
        for ((i, j), jij) in h.couplers() {
            let p = vars.binary_search(&i).expect("coupler var active");
            let q = vars.binary_search(&j).expect("coupler var active");
            neighbors[p].push((q, jij));
            neighbors[q].push((p, jij));
        }
        Self {
            vars,
            fields,
            neighbors,
            offset: h.offset(),
        }
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn var_at(&self, pos: usize) -> usize {
        self.vars[pos]
    }

    pub fn position(&self, var: usize) -> Option<usize> {
        self.vars.binary_search(&var).ok()
    }

    pub fn field_at(&self, pos: usize) -> f64 {
        self.fields[pos]
    }

    pub fn neighbors_of(&self, pos: usize) -> &[(usize, f64)] {
        &self.neighbors[pos]
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    /// Energy of a positional spin vector. Matches
    /// [`IsingHamiltonian::energy`] term-for-term (same summation order).
    pub fn energy_of(&self, spins: &[i8]) -> f64 {
        debug_assert_eq!(spins.len(), self.n());
        let mut e = self.offset;
        for (p, &h) in self.fields.iter().enumerate() {
            if h != 0.0 {
                e += h * f64::from(spins[p]);
            }
        }
        for (p, nbrs) in self.neighbors.iter().enumerate() {
            for &(q, j) in nbrs {
                if q > p {
                    e += j * f64::from(spins[p]) * f64::from(spins[q]);
                }
            }
        }
        e
    }

    /// Energy change from flipping the spin at `pos`:
    /// `ΔE = −2 z_p (h_p + Σ_q J_pq z_q)`.
    pub fn flip_delta(&self, spins: &[i8], pos: usize) -> f64 {
        let mut local = self.fields[pos];
        for &(q, j) in &self.neighbors[pos] {
            local += j * f64::from(spins[q]);
        }
        -2.0 * f64::from(spins[pos]) * local
    }

    /// Positional spin vector from an assignment covering all variables here.
    pub fn positions_of(&self, z: &SpinAssignment) -> Result<Vec<i8>, IsingError> {
        self.vars
            .iter()
            .map(|&i| {
                z.get(i)
                    .ok_or(IsingError::DomainMismatch {
                        missing: vec![i],
                        extra: vec![],
                    })
            })
            .collect()
    }

    /// Assignment from a positional spin vector.
    pub fn assignment_of(&self, spins: &[i8]) -> SpinAssignment {
        debug_assert_eq!(spins.len(), self.n());
        SpinAssignment {
            values: self
                .vars
                .iter()
                .zip(spins)
                .map(|(&i, &v)| (i, v))
                .collect(),
        }
    }
}

/// On-disk problem document: variables are `0..n`, `h` holds `[index, value]`
/// rows, `J` holds `[i, j, value]` rows, `offset` defaults to 0.
#[derive(Debug, Serialize, Deserialize)]
struct ProblemFile {
    n: usize,
    h: Vec<(usize, f64)>,
    #[serde(rename = "J")]
    j: Vec<(usize, usize, f64)>,
    #[serde(default)]
    offset: f64,
}

/// Serialize a root Hamiltonian (active variables exactly `0..n`) to the
/// problem document format. Stable: field rows ascend by index, coupler rows
/// by `(i,j)`, so `parse ∘ serialize` is the identity byte-for-byte.
pub fn to_problem_string(h: &IsingHamiltonian) -> Result<String, IsingError> {
    let n = h.num_vars();
    if !h.vars().eq(0..n) {
        return Err(IsingError::ProblemFormat(format!(
            "active variable set must be exactly 0..{n} to serialize"
        )));
    }
    let doc = ProblemFile {
        n,
        h: h.fields().collect(),
        j: h.couplers().map(|((i, j), v)| (i, j, v)).collect(),
        offset: h.offset(),
    };
    let mut s = serde_json::to_string_pretty(&doc)?;
    s.push('\n');
    Ok(s)
}

/// Parse the problem document format; rejects out-of-range indices,
/// self-couplers, and duplicate entries.
pub fn from_problem_string(s: &str) -> Result<IsingHamiltonian, IsingError> {
    let doc: ProblemFile = serde_json::from_str(s)?;
    let mut h = IsingHamiltonian::new(0..doc.n);
    h.set_offset(doc.offset);
    let mut seen = BTreeSet::new();
    for (i, v) in doc.h {
        if i >= doc.n {
            return Err(IsingError::ProblemFormat(format!(
                "field index {i} out of range for n={}",
                doc.n
            )));
        }
        if !seen.insert(i) {
            return Err(IsingError::ProblemFormat(format!("duplicate field row for index {i}")));
        }
        h.set_field(i, v)?;
    }
    for (i, j, v) in doc.j {
        if i >= doc.n || j >= doc.n {
            return Err(IsingError::ProblemFormat(format!(
                "coupler ({i},{j}) out of range for n={}",
                doc.n
            )));
        }
        h.add_coupler(i, j, v)?;
    }
    Ok(h)
}

/// Write a problem file; see [`to_problem_string`].
pub fn write_problem(h: &IsingHamiltonian, path: impl AsRef<Path>) -> Result<(), IsingError> {
    std::fs::write(path, to_problem_string(h)?)?;
    Ok(())
}

/// Read a problem file; see [`from_problem_string`].
pub fn read_problem(path: impl AsRef<Path>) -> Result<IsingHamiltonian, IsingError> {
    from_problem_string(&std::fs::read_to_string(path)?)
}
