//! Satisfiability: a small DPLL solver for the general case, and dedicated
//! fast paths for the Horn, renamable-Horn and Krom fragments.
//!
//! The DPLL solver works on the CNF produced by [`crate::clauses::to_cnf`],
//! with unit propagation, pure-literal elimination, and deterministic
//! branching on the most frequent variable. It is meant for desk-scale
//! inputs; the fragment paths are the ones with a complexity story (unit
//! propagation for Horn, implication-graph reachability for Krom).

use std::collections::BTreeMap;
use std::fmt;

use crate::clauses::{to_cnf, Clause, ClauseSet};
use crate::error::{Error, Result};
use crate::formula::{Formula, Var, VarSet};
use crate::semantics::World;

/// Which tractable fragment a clause set falls into, if any. Horn wins over
/// Krom when both apply; renamable-Horn is only reported for sets that are
/// neither Horn nor Krom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FragmentTag {
    Horn,
    RenamableHorn,
    Krom,
    General,
}

impl fmt::Display for FragmentTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FragmentTag::Horn => "horn",
            FragmentTag::RenamableHorn => "renamable-horn",
            FragmentTag::Krom => "krom",
            FragmentTag::General => "general",
        })
    }
}

/// Classifies a clause set: Horn, else Krom, else renamable-Horn, else
/// general.
pub fn classify(clauses: &ClauseSet) -> FragmentTag {
    if clauses.is_horn() {
        FragmentTag::Horn
    } else if clauses.is_krom() {
        FragmentTag::Krom
    } else if renaming(clauses).is_some() {
        FragmentTag::RenamableHorn
    } else {
        FragmentTag::General
    }
}

/// Searches for a set of variables whose uniform sign flip makes the set
/// Horn. Encoded as 2-SAT: for every pair of literals in a clause, at most
/// one may be positive after flipping.
pub fn renaming(clauses: &ClauseSet) -> Option<VarSet> {
    let vars: Vec<Var> = clauses.vars().into_iter().collect();
    let index: BTreeMap<&Var, usize> = vars.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut solver = TwoSat::new(vars.len());
    for clause in clauses {
        let lits: Vec<_> = clause.literals().collect();
        for i in 0..lits.len() {
            for j in (i + 1)..lits.len() {
                // "flip[x]" true means x changes sign, so literal k ends up
                // positive iff flip[var] differs from its sign. Forbidding
                // two positives means one of the pair must keep
                // flip[var] == sign.
                let a = (index[lits[i].var()], lits[i].is_positive());
                let b = (index[lits[j].var()], lits[j].is_positive());
                solver.add_or(a, b);
            }
        }
    }
    let assignment = solver.solve()?;
    let flip: VarSet = vars
        .into_iter()
        .zip(&assignment)
        .filter(|(_, &f)| f)
        .map(|(v, _)| v)
        .collect();
    debug_assert!(clauses.rename(&flip).is_horn());
    Some(flip)
}

/// A 2-SAT solver over `n` boolean variables, by strongly connected
/// components of the implication graph.
struct TwoSat {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl TwoSat {
    fn new(n: usize) -> TwoSat {
        TwoSat {
            n,
            adj: vec![Vec::new(); 2 * n],
        }
    }

    /// Node for variable `i` with the given phase.
    fn node(i: usize, phase: bool) -> usize {
        2 * i + usize::from(!phase)
    }

    fn negate(node: usize) -> usize {
        node ^ 1
    }

    /// Adds the clause `a | b`.
    fn add_or(&mut self, a: (usize, bool), b: (usize, bool)) {
        let na = Self::node(a.0, a.1);
        let nb = Self::node(b.0, b.1);
        self.adj[Self::negate(na)].push(nb);
        self.adj[Self::negate(nb)].push(na);
    }

    /// Adds the unit clause `a`.
    fn add_unit(&mut self, a: (usize, bool)) {
        let na = Self::node(a.0, a.1);
        self.adj[Self::negate(na)].push(na);
    }

    /// Returns a satisfying assignment if one exists.
    fn solve(&self) -> Option<Vec<bool>> {
        let comp = tarjan_scc(&self.adj);
        let mut out = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let t = comp[Self::node(i, true)];
            let f = comp[Self::node(i, false)];
            if t == f {
                return None;
            }
            // Components are numbered in reverse topological order, so the
            // phase whose component closes first (smaller id) is the one to
            // pick.
            out.push(t < f);
        }
        Some(out)
    }
}

/// Iterative Tarjan strongly-connected components; returns the component id
/// of each node, ids in reverse topological order.
fn tarjan_scc(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut comp = vec![UNSET; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0usize;
    let mut next_comp = 0usize;
    // Work items: (node, next child position).
    let mut work: Vec<(usize, usize)> = Vec::new();

    for start in 0..n {
        if index[start] != UNSET {
            continue;
        }
        work.push((start, 0));
        while let Some(&(v, ci)) = work.last() {
            if ci == 0 {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&w) = adj[v].get(ci) {
                work.last_mut().unwrap().1 += 1;
                if index[w] == UNSET {
                    work.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                if low[v] == index[v] {
                    while let Some(w) = stack.pop() {
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
                work.pop();
                if let Some(&(parent, _)) = work.last() {
                    low[parent] = low[parent].min(low[v]);
                }
            }
        }
    }
    comp
}

/// Integer-indexed clauses for the DPLL search: literal `±(v+1)`.
struct Dpll {
    nvars: usize,
}

impl Dpll {
    fn solve(&self, clauses: Vec<Vec<i32>>) -> Option<Vec<Option<bool>>> {
        let assign = vec![None; self.nvars + 1];
        self.search(clauses, assign)
    }

    fn search(
        &self,
        mut clauses: Vec<Vec<i32>>,
        mut assign: Vec<Option<bool>>,
    ) -> Option<Vec<Option<bool>>> {
        loop {
            // Unit propagation.
            if let Some(&unit) = clauses.iter().find(|c| c.len() == 1).map(|c| &c[0]) {
                assign[unit.unsigned_abs() as usize] = Some(unit > 0);
                clauses = propagate(clauses, unit)?;
                continue;
            }
            // Pure literal elimination.
            let mut seen_pos = vec![false; self.nvars + 1];
            let mut seen_neg = vec![false; self.nvars + 1];
            for c in &clauses {
                for &l in c {
                    if l > 0 {
                        seen_pos[l as usize] = true;
                    } else {
                        seen_neg[-l as usize] = true;
                    }
                }
            }
            let pure = (1..=self.nvars)
                .find(|&v| seen_pos[v] != seen_neg[v])
                .map(|v| if seen_pos[v] { v as i32 } else { -(v as i32) });
            if let Some(p) = pure {
                assign[p.unsigned_abs() as usize] = Some(p > 0);
                clauses = propagate(clauses, p)?;
                continue;
            }
            if clauses.is_empty() {
                return Some(assign);
            }
            // Branch on the most frequent variable (any sign), lowest id on
            // ties; true first.
            let mut counts = vec![0usize; self.nvars + 1];
            for c in &clauses {
                for &l in c {
                    counts[l.unsigned_abs() as usize] += 1;
                }
            }
            let v = (1..=self.nvars).max_by_key(|&v| counts[v]).unwrap();
            debug_assert!(counts[v] > 0);
            for phase in [true, false] {
                let lit = if phase { v as i32 } else { -(v as i32) };
                if let Some(next) = propagate(clauses.clone(), lit) {
                    let mut a = assign.clone();
                    a[v] = Some(phase);
                    if let Some(solution) = self.search(next, a) {
                        return Some(solution);
                    }
                }
            }
            return None;
        }
    }
}

/// Applies a literal: drops satisfied clauses, shrinks the rest. `None`
/// signals an empty clause (conflict).
fn propagate(clauses: Vec<Vec<i32>>, lit: i32) -> Option<Vec<Vec<i32>>> {
    let mut out = Vec::with_capacity(clauses.len());
    for mut c in clauses {
        if c.contains(&lit) {
            continue;
        }
        c.retain(|&l| l != -lit);
        if c.is_empty() {
            return None;
        }
        out.push(c);
    }
    Some(out)
}

fn index_clauses(clauses: &ClauseSet) -> (Vec<Var>, Vec<Vec<i32>>) {
    let vars: Vec<Var> = clauses.vars().into_iter().collect();
    let indexed = clauses
        .iter()
        .map(|c| {
            c.literals()
                .map(|l| {
                    let id = vars.binary_search(l.var()).unwrap() as i32 + 1;
                    if l.is_positive() {
                        id
                    } else {
                        -id
                    }
                })
                .collect()
        })
        .collect();
    (vars, indexed)
}

/// Solves a clause set, returning an assignment over its variables.
/// Variables the search never constrained come back false.
pub fn solve_clauses(clauses: &ClauseSet) -> Option<BTreeMap<Var, bool>> {
    if clauses.iter().any(Clause::is_empty) {
        return None;
    }
    let (vars, indexed) = index_clauses(clauses);
    let dpll = Dpll { nvars: vars.len() };
    let assign = dpll.solve(indexed)?;
    Some(
        vars.into_iter()
            .enumerate()
            .map(|(i, v)| {
                let value = assign[i + 1].unwrap_or(false);
                (v, value)
            })
            .collect(),
    )
}

/// Decides satisfiability through CNF conversion and DPLL.
pub fn is_satisfiable(f: &Formula) -> bool {
    solve_clauses(&to_cnf(f)).is_some()
}

/// A model of `f` over exactly `f.vars()`, if `f` is satisfiable. Auxiliary
/// variables from CNF conversion are projected away; variables whose value
/// is irrelevant default to false.
pub fn satisfying_world(f: &Formula) -> Option<World> {
    let assignment = solve_clauses(&to_cnf(f))?;
    Some(World::from_fn(&f.vars(), |v| {
        assignment.get(v).copied().unwrap_or(false)
    }))
}

/// `a ⊨ b`, decided by refuting `a & ~b`.
pub fn entails(a: &Formula, b: &Formula) -> bool {
    !is_satisfiable(&Formula::and(vec![
        a.clone(),
        Formula::not(b.clone()),
    ]))
}

/// Logical equivalence over the union alphabet.
pub fn equivalent(a: &Formula, b: &Formula) -> bool {
    entails(a, b) && entails(b, a)
}

/// Unit propagation with counters, complete for Horn satisfiability.
/// `clauses` must be Horn; `units` are additional unit assumptions (any
/// sign). Returns false when propagation derives the empty clause.
fn horn_satisfiable(clauses: &ClauseSet, units: &[crate::formula::Literal]) -> bool {
    let mut vars: Vec<Var> = clauses.vars().into_iter().collect();
    for l in units {
        if let Err(pos) = vars.binary_search(l.var()) {
            vars.insert(pos, l.var().clone());
        }
    }
    let n = vars.len();
    let idx = |v: &Var| vars.binary_search(v).unwrap();

    // assignment: None unknown.
    let mut value: Vec<Option<bool>> = vec![None; n];
    let mut queue: Vec<(usize, bool)> = Vec::new();
    for l in units {
        queue.push((idx(l.var()), l.is_positive()));
    }

    let indexed: Vec<Vec<(usize, bool)>> = clauses
        .iter()
        .map(|c| {
            c.literals()
                .map(|l| (idx(l.var()), l.is_positive()))
                .collect()
        })
        .collect();
    // occurrences[var] -> clause ids mentioning the var, each listed once
    // even when both signs occur.
    let mut occurrences: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ci, c) in indexed.iter().enumerate() {
        let mentioned: std::collections::BTreeSet<usize> = c.iter().map(|&(v, _)| v).collect();
        for v in mentioned {
            occurrences[v].push(ci);
        }
    }
    let mut satisfied = vec![false; indexed.len()];
    let mut unassigned: Vec<usize> = indexed.iter().map(Vec::len).collect();
    // Initial units from the clause set itself.
    for c in &indexed {
        if c.is_empty() {
            return false;
        }
        if c.len() == 1 {
            queue.push((c[0].0, c[0].1));
        }
    }

    while let Some((v, b)) = queue.pop() {
        match value[v] {
            Some(cur) if cur == b => continue,
            Some(_) => return false,
            None => value[v] = Some(b),
        }
        for &ci in &occurrences[v] {
            if satisfied[ci] {
                continue;
            }
            if indexed[ci].contains(&(v, b)) {
                satisfied[ci] = true;
                continue;
            }
            // Only the falsified sign of v occurs here.
            unassigned[ci] -= 1;
            match unassigned[ci] {
                0 => return false,
                1 => {
                    if let Some(&(w, s)) = indexed[ci]
                        .iter()
                        .find(|&&(w, _)| value[w].is_none())
                    {
                        queue.push((w, s));
                    }
                }
                _ => {}
            }
        }
    }
    true
}

/// Entailment of a clause from a clause set inside a tractable fragment.
/// The tag must genuinely describe the set; this is re-checked and a
/// mismatch is an error, as is the `general` tag (no fast path exists).
pub fn fragment_entails(clauses: &ClauseSet, tag: FragmentTag, query: &Clause) -> Result<bool> {
    match tag {
        FragmentTag::Horn => {
            if !clauses.is_horn() {
                return Err(Error::Misclassified(tag));
            }
            let negated: Vec<_> = query.literals().map(|l| l.negated()).collect();
            Ok(!horn_satisfiable(clauses, &negated))
        }
        FragmentTag::RenamableHorn => {
            let Some(flip) = renaming(clauses) else {
                return Err(Error::Misclassified(tag));
            };
            let renamed = clauses.rename(&flip);
            let renamed_query: Clause = query
                .literals()
                .map(|l| {
                    if flip.contains(l.var()) {
                        l.negated()
                    } else {
                        l.clone()
                    }
                })
                .collect();
            let negated: Vec<_> = renamed_query.literals().map(|l| l.negated()).collect();
            Ok(!horn_satisfiable(&renamed, &negated))
        }
        FragmentTag::Krom => {
            if !clauses.is_krom() {
                return Err(Error::Misclassified(tag));
            }
            let mut vars: Vec<Var> = clauses.vars().into_iter().collect();
            for v in query.vars() {
                if let Err(pos) = vars.binary_search(&v) {
                    vars.insert(pos, v);
                }
            }
            let idx = |v: &Var| vars.binary_search(v).unwrap();
            let mut solver = TwoSat::new(vars.len());
            for c in clauses {
                let lits: Vec<_> = c.literals().collect();
                match lits.len() {
                    0 => return Ok(true),
                    1 => solver.add_unit((idx(lits[0].var()), lits[0].is_positive())),
                    2 => solver.add_or(
                        (idx(lits[0].var()), lits[0].is_positive()),
                        (idx(lits[1].var()), lits[1].is_positive()),
                    ),
                    _ => unreachable!("krom clause has at most two literals"),
                }
            }
            for l in query.literals() {
                solver.add_unit((idx(l.var()), !l.is_positive()));
            }
            Ok(solver.solve().is_none())
        }
        FragmentTag::General => Err(Error::InvalidStrategy(
            "the general fragment has no fast entailment path".into(),
        )),
    }
}
