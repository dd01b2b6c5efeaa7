//! Compiler from monotone NAE-3SAT to KT-orientation instances.
//!
//! Per variable an edge (or, in the degree-4 variant, a ladder); per clause
//! a five-cycle; per clause slot a 3-ladder whose first rung is the variable
//! edge and whose last rung is identified with a cycle edge. A KT
//! orientation then exists iff the formula has a not-all-equal assignment,
//! and the assignment is read off the variable edges.

use crate::graph::{Graph, Vertex};
use crate::orientation::Orientation;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NaeError {
    #[error("line {line}: expected header `p nae <nvars> <nclauses>`, got {got:?}")]
    BadHeader { line: usize, got: String },
    #[error("line {line}: missing header before clause")]
    MissingHeader { line: usize },
    #[error("line {line}: duplicate header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: cannot parse clause {got:?}")]
    BadClause { line: usize, got: String },
    #[error("line {line}: variable {v} out of range 1..={n}")]
    VarOutOfRange { line: usize, v: u64, n: u32 },
    #[error("line {line}: clause repeats a variable")]
    RepeatedVariable { line: usize },
    #[error("declared {declared} clauses, found {found}")]
    CountMismatch { declared: usize, found: usize },
    #[error("{n} variables exceed the brute-force guard of {limit}")]
    TooManyVariables { n: u32, limit: u32 },
    #[error("orientation does not match the encoded graph")]
    GraphMismatch,
    #[error("assignment sets clause {clause} all-equal")]
    NaeViolated { clause: usize },
    #[error("assignment has {got} values for {expected} variables")]
    AssignmentLength { got: usize, expected: usize },
}

/// A monotone not-all-equal 3-SAT instance: positive clauses of three
/// distinct variables, each of which must see both a true and a false
/// variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nae3SatInstance {
    pub n_vars: u32,
    pub clauses: Vec<[u32; 3]>,
}

impl Nae3SatInstance {
    pub fn new(n_vars: u32, clauses: Vec<[u32; 3]>) -> Result<Self, NaeError> {
        for (j, c) in clauses.iter().enumerate() {
            for &v in c {
                if v == 0 || v > n_vars {
                    return Err(NaeError::VarOutOfRange {
                        line: j + 1,
                        v: v as u64,
                        n: n_vars,
                    });
                }
            }
            if c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
                return Err(NaeError::RepeatedVariable { line: j + 1 });
            }
        }
        Ok(Nae3SatInstance { n_vars, clauses })
    }

    /// Whether `assignment` satisfies every clause not-all-equal.
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.n_vars as usize
            && self.clauses.iter().all(|c| {
                let vals = c.map(|v| assignment[v as usize - 1]);
                vals.iter().any(|&b| b) && vals.iter().any(|&b| !b)
            })
    }
}

/// Parses the `.nae` format: `c` comments, a `p nae <nvars> <nclauses>`
/// header, then clause lines `<i> <j> <k> 0`.
pub fn parse_nae3sat(text: &str) -> Result<Nae3SatInstance, NaeError> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses: Vec<[u32; 3]> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_end();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(NaeError::DuplicateHeader { line: line_no });
            }
            let mut it = line.split_ascii_whitespace();
            let bad = || NaeError::BadHeader {
                line: line_no,
                got: line.to_string(),
            };
            if it.next() != Some("p") || it.next() != Some("nae") {
                return Err(bad());
            }
            let n: u32 = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
            let m: usize = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
            if it.next().is_some() {
                return Err(bad());
            }
            header = Some((n, m));
            continue;
        }
        let Some((n, _)) = header else {
            return Err(NaeError::MissingHeader { line: line_no });
        };
        let bad = || NaeError::BadClause {
            line: line_no,
            got: line.to_string(),
        };
        let nums: Vec<u64> = line
            .split_ascii_whitespace()
            .map(|t| t.parse::<u64>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        if nums.len() != 4 || nums[3] != 0 {
            return Err(bad());
        }
        for &v in &nums[..3] {
            if v == 0 || v > n as u64 {
                return Err(NaeError::VarOutOfRange {
                    line: line_no,
                    v,
                    n,
                });
            }
        }
        let c = [nums[0] as u32, nums[1] as u32, nums[2] as u32];
        if c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
            return Err(NaeError::RepeatedVariable { line: line_no });
        }
        clauses.push(c);
    }
    let Some((n, m)) = header else {
        return Err(NaeError::MissingHeader {
            line: text.lines().count() + 1,
        });
    };
    if clauses.len() != m {
        return Err(NaeError::CountMismatch {
            declared: m,
            found: clauses.len(),
        });
    }
    Ok(Nae3SatInstance { n_vars: n, clauses })
}

pub fn write_nae3sat(inst: &Nae3SatInstance) -> String {
    let mut out = format!("p nae {} {}\n", inst.n_vars, inst.clauses.len());
    for c in &inst.clauses {
        out.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NaeOutcome {
    Satisfiable(Vec<bool>),
    Unsatisfiable,
}

/// Exhaustive satisfiability check over all `2^n` assignments, guarded to 30
/// variables. Returns the first satisfying assignment in mask order.
pub fn nae3sat_bruteforce(inst: &Nae3SatInstance) -> Result<NaeOutcome, NaeError> {
    const LIMIT: u32 = 30;
    if inst.n_vars > LIMIT {
        return Err(NaeError::TooManyVariables {
            n: inst.n_vars,
            limit: LIMIT,
        });
    }
    for mask in 0..1u64 << inst.n_vars {
        let assignment: Vec<bool> = (0..inst.n_vars).map(|i| mask >> i & 1 == 1).collect();
        if inst.satisfied_by(&assignment) {
            return Ok(NaeOutcome::Satisfiable(assignment));
        }
    }
    Ok(NaeOutcome::Unsatisfiable)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    General,
    Deg4,
}

/// Vertex roles of one 3-ladder clause gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LadderMap {
    pub v1: Vertex,
    pub v2: Vertex,
    pub v3: Vertex,
    pub w1: Vertex,
    pub w2: Vertex,
    pub w3: Vertex,
}

/// One variable's gadget: a single edge in the general encoding, a
/// (2c - 1)-rung ladder in the degree-4 encoding. Rung 1 is the designated
/// variable edge read by the decoder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableGadget {
    pub rung_v: Vec<Vertex>,
    pub rung_w: Vec<Vertex>,
}

/// The compiled graph together with the provenance maps needed to decode.
#[derive(Clone, Debug)]
pub struct EncodedReduction {
    pub instance: Nae3SatInstance,
    pub variant: Variant,
    pub graph: Graph,
    /// Designated (y_i, z_i) edge per variable.
    pub var_edges: Vec<(Vertex, Vertex)>,
    pub var_ladders: Vec<VariableGadget>,
    /// Five-cycle vertices v1..v5 per clause.
    pub clause_cycles: Vec<[Vertex; 5]>,
    /// Per clause, the three slot gadgets.
    pub ladder_maps: Vec<[LadderMap; 3]>,
}

/// Compiles the general encoding: per variable an edge y_i z_i, per clause a
/// five-cycle, per (clause, slot) a 3-ladder identified with both. The
/// result has 2n + 11m vertices and n + 20m edges. Vertex numbering:
/// variables first (y_1, z_1, y_2, z_2, ...), then per clause its five cycle
/// vertices followed by the three slots' two fresh interior vertices each.
pub fn encode_general(inst: &Nae3SatInstance) -> EncodedReduction {
    encode(inst, Variant::General)
}

/// Compiles the degree-4 encoding: a variable occurring c times becomes a
/// ladder of length max(1, 2c - 1); the t-th occurrence's gadget attaches at
/// rung 2t - 1, whose orientation always equals rung 1's. Output maximum
/// degree is at most 4.
pub fn encode_deg4(inst: &Nae3SatInstance) -> EncodedReduction {
    encode(inst, Variant::Deg4)
}

fn encode(inst: &Nae3SatInstance, variant: Variant) -> EncodedReduction {
    let n = inst.n_vars as usize;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut next = 0u32;
    let mut var_ladders: Vec<VariableGadget> = Vec::with_capacity(n);
    let occurrences: Vec<usize> = {
        let mut occ = vec![0usize; n];
        for c in &inst.clauses {
            for &v in c {
                occ[v as usize - 1] += 1;
            }
        }
        occ
    };
    for &occ in occurrences.iter().take(n) {
        let k = match variant {
            Variant::General => 1,
            Variant::Deg4 => std::cmp::max(1, (2 * occ).saturating_sub(1)),
        };
        // Rung pairs (v_t, w_t) take consecutive ids so rung 1 is (y, z).
        let mut rung_v = Vec::with_capacity(k);
        let mut rung_w = Vec::with_capacity(k);
        for _ in 0..k {
            rung_v.push(next + 1);
            rung_w.push(next + 2);
            next += 2;
        }
        for t in 0..k {
            edges.push((rung_v[t], rung_w[t]));
            if t + 1 < k {
                edges.push((rung_v[t], rung_v[t + 1]));
                edges.push((rung_w[t], rung_w[t + 1]));
            }
        }
        var_ladders.push(VariableGadget { rung_v, rung_w });
    }
    let var_edges: Vec<(Vertex, Vertex)> = var_ladders
        .iter()
        .map(|l| (l.rung_v[0], l.rung_w[0]))
        .collect();

    let mut clause_cycles = Vec::with_capacity(inst.clauses.len());
    let mut ladder_maps = Vec::with_capacity(inst.clauses.len());
    let mut seen_occurrences = vec![0usize; n];
    for clause in &inst.clauses {
        let cyc: [Vertex; 5] = std::array::from_fn(|t| next + 1 + t as u32);
        next += 5;
        edges.push((cyc[0], cyc[1]));
        edges.push((cyc[1], cyc[2]));
        edges.push((cyc[2], cyc[3]));
        edges.push((cyc[3], cyc[4]));
        edges.push((cyc[0], cyc[4]));
        let mut slots = Vec::with_capacity(3);
        for (l, &var) in clause.iter().enumerate() {
            let vi = var as usize - 1;
            // The attachment rung: rung 1 in the general encoding, rung
            // 2t - 1 for the t-th occurrence in the degree-4 encoding.
            let rung = match variant {
                Variant::General => 0,
                Variant::Deg4 => 2 * seen_occurrences[vi],
            };
            seen_occurrences[vi] += 1;
            let (v1, w1) = (var_ladders[vi].rung_v[rung], var_ladders[vi].rung_w[rung]);
            let (v3, w3) = match l {
                0 => (cyc[0], cyc[1]),
                1 => (cyc[1], cyc[2]),
                _ => (cyc[4], cyc[3]),
            };
            let (v2, w2) = (next + 1, next + 2);
            next += 2;
            edges.push((v2, w2));
            edges.push((v1, v2));
            edges.push((v2, v3));
            edges.push((w1, w2));
            edges.push((w2, w3));
            slots.push(LadderMap {
                v1,
                v2,
                v3,
                w1,
                w2,
                w3,
            });
        }
        clause_cycles.push(cyc);
        ladder_maps.push([slots[0], slots[1], slots[2]]);
    }
    let graph = Graph::from_edges(next, &edges).expect("gadget edges are valid");
    debug_assert_eq!(graph.m(), edges.len(), "gadget edges must not collide");
    EncodedReduction {
        instance: inst.clone(),
        variant,
        graph,
        var_edges,
        var_ladders,
        clause_cycles,
        ladder_maps,
    }
}

/// Reads the assignment off the designated variable edges: y -> z means
/// true.
pub fn decode_assignment(enc: &EncodedReduction, d: &Orientation) -> Result<Vec<bool>, NaeError> {
    if d.graph() != &enc.graph {
        return Err(NaeError::GraphMismatch);
    }
    decode_assignment_edges(&enc.var_edges, d)
}

/// Decodes from the sidecar's designated edges alone, so files suffice. The
/// orientation must contain every listed edge.
pub fn decode_assignment_edges(
    var_edges: &[(Vertex, Vertex)],
    d: &Orientation,
) -> Result<Vec<bool>, NaeError> {
    let mut out = Vec::with_capacity(var_edges.len());
    for &(y, z) in var_edges {
        if y > d.n() || z > d.n() || d.graph().edge_index(y, z).is_none() {
            return Err(NaeError::GraphMismatch);
        }
        out.push(d.has_arc(y, z));
    }
    Ok(out)
}

/// Builds the canonical KT orientation realizing a satisfying assignment:
/// variable edges by truth value, every ladder by its unique alternating
/// extension, and the two free edges of each clause cycle by the extension
/// table. Rejects assignments that set some clause all-equal.
pub fn assignment_to_orientation(
    enc: &EncodedReduction,
    assignment: &[bool],
) -> Result<Orientation, NaeError> {
    let inst = &enc.instance;
    if assignment.len() != inst.n_vars as usize {
        return Err(NaeError::AssignmentLength {
            got: assignment.len(),
            expected: inst.n_vars as usize,
        });
    }
    for (j, clause) in inst.clauses.iter().enumerate() {
        let vals = clause.map(|v| assignment[v as usize - 1]);
        if vals.iter().all(|&b| b) || vals.iter().all(|&b| !b) {
            return Err(NaeError::NaeViolated { clause: j + 1 });
        }
    }
    let mut arcs: Vec<(Vertex, Vertex)> = Vec::new();
    // Orient one ladder alternately: rung t points v -> w iff (t odd) ==
    // value; rails point away from odd-v and even-w vertices.
    let mut orient_ladder = |v: &[Vertex], w: &[Vertex], value: bool| {
        let k = v.len();
        for t in 0..k {
            let odd = t % 2 == 0; // rung t is rung number t+1
            if odd == value {
                arcs.push((v[t], w[t]));
            } else {
                arcs.push((w[t], v[t]));
            }
        }
        for t in 0..k - 1 {
            // Rail v_t v_{t+1}: from the odd-numbered rung side iff value.
            let from_first = (t % 2 == 0) == value;
            if from_first {
                arcs.push((v[t], v[t + 1]));
                arcs.push((w[t + 1], w[t]));
            } else {
                arcs.push((v[t + 1], v[t]));
                arcs.push((w[t], w[t + 1]));
            }
        }
    };
    for (i, ladder) in enc.var_ladders.iter().enumerate() {
        orient_ladder(&ladder.rung_v, &ladder.rung_w, assignment[i]);
    }
    for (j, clause) in inst.clauses.iter().enumerate() {
        for slot in &enc.ladder_maps[j] {
            // The slot gadget is a 3-ladder whose first rung is already
            // oriented (it is a variable rung); orient rungs 2 and 3 and the
            // rails by the same alternating pattern.
            let value = arcs.contains(&(slot.v1, slot.w1));
            // Gadget edges: rung 2, rung 3 (cycle edge), and the rails.
            let gadget_v = [slot.v1, slot.v2, slot.v3];
            let gadget_w = [slot.w1, slot.w2, slot.w3];
            for t in 1..3 {
                let odd = t % 2 == 0;
                if odd == value {
                    arcs.push((gadget_v[t], gadget_w[t]));
                } else {
                    arcs.push((gadget_w[t], gadget_v[t]));
                }
            }
            for t in 0..2 {
                let from_first = (t % 2 == 0) == value;
                if from_first {
                    arcs.push((gadget_v[t], gadget_v[t + 1]));
                    arcs.push((gadget_w[t + 1], gadget_w[t]));
                } else {
                    arcs.push((gadget_v[t + 1], gadget_v[t]));
                    arcs.push((gadget_w[t], gadget_w[t + 1]));
                }
            }
        }
        // Free edges v3 v4 and v1 v5, from the extension table. d12, d23,
        // d45 say whether the cycle edges run forward (v1->v2, v2->v3,
        // v4->v5).
        let cyc = enc.clause_cycles[j];
        let vals = clause.map(|v| assignment[v as usize - 1]);
        let (d12, d23, d45) = (vals[0], vals[1], !vals[2]);
        let (free34, free15) = match (d12, d23, d45) {
            (true, true, true) => ((cyc[3], cyc[2]), (cyc[0], cyc[4])),
            (true, false, true) => ((cyc[2], cyc[3]), (cyc[0], cyc[4])),
            (true, false, false) => ((cyc[2], cyc[3]), (cyc[0], cyc[4])),
            (false, false, false) => ((cyc[2], cyc[3]), (cyc[4], cyc[0])),
            (false, true, false) => ((cyc[3], cyc[2]), (cyc[4], cyc[0])),
            (false, true, true) => ((cyc[3], cyc[2]), (cyc[4], cyc[0])),
            // (true, true, false) and (false, false, true) are the two
            // forbidden patterns, excluded by the NAE check above.
            _ => unreachable!("forbidden pattern survived the NAE check"),
        };
        arcs.push(free34);
        arcs.push(free15);
    }
    // Slot gadgets skip their first rung (it is a variable rung, already
    // oriented above), so the arc list covers every edge exactly once.
    let d = Orientation::from_arcs(enc.graph.clone(), &arcs)
        .expect("every gadget edge oriented exactly once");
    Ok(d)
}

/// Renders the decoding sidecar: `var <i> <y> <z>` and
/// `clause <j> <v1> .. <v5>` lines.
pub fn write_map(enc: &EncodedReduction) -> String {
    let mut out = String::new();
    for (i, &(y, z)) in enc.var_edges.iter().enumerate() {
        out.push_str(&format!("var {} {} {}\n", i + 1, y, z));
    }
    for (j, c) in enc.clause_cycles.iter().enumerate() {
        out.push_str(&format!(
            "clause {} {} {} {} {} {}\n",
            j + 1,
            c[0],
            c[1],
            c[2],
            c[3],
            c[4]
        ));
    }
    out
}

/// Parses the sidecar back into the per-variable designated edges.
pub fn parse_map(text: &str) -> Result<Vec<(Vertex, Vertex)>, NaeError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end();
        if line.is_empty() || line.starts_with('c') || line.starts_with("clause") {
            continue;
        }
        let bad = || NaeError::BadClause {
            line: i + 1,
            got: line.to_string(),
        };
        let mut it = line.split_ascii_whitespace();
        if it.next() != Some("var") {
            return Err(bad());
        }
        let idx: usize = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
        let y: Vertex = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
        let z: Vertex = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
        if idx != out.len() + 1 || it.next().is_some() {
            return Err(bad());
        }
        out.push((y, z));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_kt;

    fn inst(n: u32, clauses: &[[u32; 3]]) -> Nae3SatInstance {
        Nae3SatInstance::new(n, clauses.to_vec()).unwrap()
    }

    fn fano() -> Nae3SatInstance {
        inst(
            7,
            &[
                [1, 2, 3],
                [1, 4, 5],
                [1, 6, 7],
                [2, 4, 6],
                [2, 5, 7],
                [3, 4, 7],
                [3, 5, 6],
            ],
        )
    }

    #[test]
    fn parse_and_write() {
        let text = "c tiny\np nae 3 1\n1 2 3 0\n";
        let parsed = parse_nae3sat(text).unwrap();
        assert_eq!(parsed, inst(3, &[[1, 2, 3]]));
        assert_eq!(write_nae3sat(&parsed), "p nae 3 1\n1 2 3 0\n");
    }

    #[test]
    fn parse_rejections() {
        assert!(matches!(
            parse_nae3sat("p nae 3 1\n1 1 2 0\n"),
            Err(NaeError::RepeatedVariable { .. })
        ));
        assert!(matches!(
            parse_nae3sat("p nae 3 1\n1 2 5 0\n"),
            Err(NaeError::VarOutOfRange { .. })
        ));
        assert!(matches!(
            parse_nae3sat("p nae 3 2\n1 2 3 0\n"),
            Err(NaeError::CountMismatch { .. })
        ));
        assert!(matches!(
            parse_nae3sat("p nae 3 1\n1 2 3\n"),
            Err(NaeError::BadClause { .. })
        ));
        assert!(matches!(
            parse_nae3sat("1 2 3 0\n"),
            Err(NaeError::MissingHeader { .. })
        ));
    }

    #[test]
    fn bruteforce_examples() {
        match nae3sat_bruteforce(&inst(3, &[[1, 2, 3]])).unwrap() {
            NaeOutcome::Satisfiable(a) => assert!(inst(3, &[[1, 2, 3]]).satisfied_by(&a)),
            NaeOutcome::Unsatisfiable => panic!("single clause is satisfiable"),
        }
        assert_eq!(
            nae3sat_bruteforce(&fano()).unwrap(),
            NaeOutcome::Unsatisfiable
        );
    }

    #[test]
    fn general_encoding_sizes() {
        let enc = encode_general(&inst(3, &[[1, 2, 3]]));
        assert_eq!(enc.graph.n(), 2 * 3 + 11);
        assert_eq!(enc.graph.m(), 3 + 20);
        let empty = encode_general(&inst(0, &[]));
        assert_eq!((empty.graph.n(), empty.graph.m()), (0, 0));
    }

    #[test]
    fn general_variable_degree_is_occurrences_plus_one() {
        let i = inst(3, &[[1, 2, 3], [1, 2, 3]]);
        let enc = encode_general(&i);
        for (v, _) in enc.var_edges.iter().copied() {
            assert_eq!(enc.graph.degree(v), 1 + 2);
        }
    }

    #[test]
    fn deg4_encoding_degrees_and_ladders() {
        let i = inst(3, &[[1, 2, 3], [1, 2, 3]]);
        let enc = encode_deg4(&i);
        assert!(enc.graph.max_degree() <= 4);
        for l in &enc.var_ladders {
            assert_eq!(l.rung_v.len(), 3); // two occurrences -> 3 rungs
        }
        // A variable occurring once keeps a single edge.
        let single = encode_deg4(&inst(4, &[[1, 2, 3]]));
        assert_eq!(single.var_ladders[3].rung_v.len(), 1);
    }

    #[test]
    fn satisfying_orientation_verifies_and_decodes() {
        for enc in [
            encode_general(&inst(3, &[[1, 2, 3]])),
            encode_deg4(&inst(3, &[[1, 2, 3], [1, 2, 3]])),
        ] {
            let a = vec![true, true, false];
            let d = assignment_to_orientation(&enc, &a).unwrap();
            assert!(verify_kt(&d).is_kt());
            assert_eq!(decode_assignment(&enc, &d).unwrap(), a);
            // Reversal decodes to the negated assignment.
            let neg: Vec<bool> = a.iter().map(|&b| !b).collect();
            assert_eq!(decode_assignment(&enc, &d.reverse()).unwrap(), neg);
        }
    }

    #[test]
    fn all_equal_assignments_are_rejected() {
        let enc = encode_general(&inst(3, &[[1, 2, 3]]));
        assert_eq!(
            assignment_to_orientation(&enc, &[true, true, true]),
            Err(NaeError::NaeViolated { clause: 1 })
        );
        assert_eq!(
            assignment_to_orientation(&enc, &[false, false, false]),
            Err(NaeError::NaeViolated { clause: 1 })
        );
    }

    #[test]
    fn map_round_trip() {
        let enc = encode_general(&inst(3, &[[1, 2, 3]]));
        let text = write_map(&enc);
        assert_eq!(parse_map(&text).unwrap(), enc.var_edges);
    }
}
