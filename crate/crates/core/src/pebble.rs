//! Sliding-pebble puzzle on a 2-connected non-cycle graph `H`, and the
//! resulting `K_{n-1}` minor model in `H □ P_L`.
//!
//! `n - 1` labeled pebbles occupy all but one vertex of `H`. A move slides a
//! pebble across an edge into the unoccupied vertex. Two pebbles *meet* when
//! they sit on adjacent vertices at some time, including time 0.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{complete, path};
use crate::graph::{cartesian_product, Graph};
use crate::minors::MinorModel;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PebbleError {
    #[error("puzzle not applicable: {0}")]
    NotApplicable(Inapplicable),
    #[error("invalid plan: {0}")]
    InvalidPlan(String),
    #[error("no configuration makes pebbles {0} and {1} adjacent")]
    Unreachable(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Inapplicable {
    TooSmall,
    NotBiconnected,
    Cycle,
}

impl std::fmt::Display for Inapplicable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Inapplicable::TooSmall => "fewer than 4 vertices",
            Inapplicable::NotBiconnected => "not 2-connected",
            Inapplicable::Cycle => "cycle",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slide {
    pub pebble: usize,
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PebblePlan {
    pub host: Graph,
    /// `initial[p]` is the starting vertex of pebble `p`.
    pub initial: Vec<usize>,
    pub moves: Vec<Slide>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Replay {
    pub legal: bool,
    /// `met[p][q]` for pebbles `p`, `q`.
    pub met: Vec<Vec<bool>>,
    /// Pebble positions after each prefix of the legal moves.
    pub configurations: Vec<Vec<usize>>,
}

impl Replay {
    pub fn all_met(&self) -> bool {
        self.met
            .iter()
            .enumerate()
            .all(|(p, row)| row.iter().enumerate().all(|(q, &m)| p == q || m))
    }
}

fn record_meetings(h: &Graph, pos: &[usize], met: &mut [Vec<bool>]) {
    for p in 0..pos.len() {
        for q in p + 1..pos.len() {
            if h.has_edge(pos[p], pos[q]) {
                met[p][q] = true;
                met[q][p] = true;
            }
        }
    }
}

/// Simulates the plan. Stops at the first illegal move.
pub fn replay_and_validate(plan: &PebblePlan) -> Replay {
    let h = &plan.host;
    let k = plan.initial.len();
    let mut met = vec![vec![false; k]; k];
    let illegal = |met| Replay {
        legal: false,
        met,
        configurations: Vec::new(),
    };
    if h.n() == 0 || k + 1 != h.n() {
        return illegal(met);
    }
    let mut occupant = vec![usize::MAX; h.n()];
    for (p, &v) in plan.initial.iter().enumerate() {
        if v >= h.n() || occupant[v] != usize::MAX {
            return illegal(met);
        }
        occupant[v] = p;
    }
    let mut pos = plan.initial.clone();
    record_meetings(h, &pos, &mut met);
    let mut configurations = vec![pos.clone()];
    for s in &plan.moves {
        let ok = s.pebble < k
            && s.to < h.n()
            && pos[s.pebble] == s.from
            && occupant[s.to] == usize::MAX
            && h.has_edge(s.from, s.to);
        if !ok {
            return Replay {
                legal: false,
                met,
                configurations,
            };
        }
        occupant[s.from] = usize::MAX;
        occupant[s.to] = s.pebble;
        pos[s.pebble] = s.to;
        record_meetings(h, &pos, &mut met);
        configurations.push(pos.clone());
    }
    Replay {
        legal: true,
        met,
        configurations,
    }
}

pub fn check_applicable(h: &Graph) -> Result<(), PebbleError> {
    if h.n() < 4 {
        return Err(PebbleError::NotApplicable(Inapplicable::TooSmall));
    }
    if h.is_cycle() {
        return Err(PebbleError::NotApplicable(Inapplicable::Cycle));
    }
    if !h.is_biconnected() {
        return Err(PebbleError::NotApplicable(Inapplicable::NotBiconnected));
    }
    Ok(())
}

/// Shortest slide sequence from `start` (vertex → occupant, `u8::MAX` for
/// the gap) to a configuration where pebbles `p` and `q` are adjacent.
fn bfs_to_meeting(h: &Graph, start: &[u8], p: u8, q: u8) -> Option<Vec<Slide>> {
    let gap = u8::MAX;
    let adjacent = |c: &[u8]| {
        let vp = c.iter().position(|&x| x == p).unwrap();
        let vq = c.iter().position(|&x| x == q).unwrap();
        h.has_edge(vp, vq)
    };
    if adjacent(start) {
        return Some(Vec::new());
    }
    let mut parent: HashMap<Vec<u8>, (Vec<u8>, Slide)> = HashMap::new();
    let mut queue = VecDeque::from([start.to_vec()]);
    parent.insert(start.to_vec(), (Vec::new(), Slide { pebble: 0, from: 0, to: 0 }));
    while let Some(c) = queue.pop_front() {
        let g = c.iter().position(|&x| x == gap).unwrap();
        for &from in h.neighbors(g) {
            let mut next = c.clone();
            next.swap(from, g);
            if parent.contains_key(&next) {
                continue;
            }
            let slide = Slide {
                pebble: c[from] as usize,
                from,
                to: g,
            };
            parent.insert(next.clone(), (c.clone(), slide));
            if adjacent(&next) {
                let mut moves = Vec::new();
                let mut cur = next;
                while cur != start {
                    let (prev, s) = parent.remove(&cur).unwrap();
                    moves.push(s);
                    cur = prev;
                }
                moves.reverse();
                return Some(moves);
            }
            queue.push_back(next);
        }
    }
    None
}

/// Plan in which every pair of pebbles meets. Pebble `i` starts on vertex
/// `i` and the gap on the last vertex; unmet pairs are handled in order by
/// a breadth-first search to the nearest configuration where they meet.
pub fn solve_pebble(h: &Graph) -> Result<PebblePlan, PebbleError> {
    check_applicable(h)?;
    let n = h.n();
    assert!(n < u8::MAX as usize, "pebble configurations are stored as bytes");
    let k = n - 1;
    let mut config: Vec<u8> = (0..n).map(|v| if v < k { v as u8 } else { u8::MAX }).collect();
    let mut pos: Vec<usize> = (0..k).collect();
    let mut met = vec![vec![false; k]; k];
    record_meetings(h, &pos, &mut met);
    let mut moves = Vec::new();
    for p in 0..k {
        for q in p + 1..k {
            if met[p][q] {
                continue;
            }
            let path = bfs_to_meeting(h, &config, p as u8, q as u8)
                .ok_or(PebbleError::Unreachable(p, q))?;
            for s in path {
                config.swap(s.from, s.to);
                pos[s.pebble] = s.to;
                record_meetings(h, &pos, &mut met);
                moves.push(s);
            }
        }
    }
    Ok(PebblePlan {
        host: h.clone(),
        initial: (0..k).collect(),
        moves,
    })
}

/// Number of path slices used by [`plan_to_minor_model`].
pub fn slice_count(plan: &PebblePlan) -> usize {
    match plan.moves.len() {
        0 => 1,
        m => m + 2,
    }
}

/// `K_{n-1}` model in `H □ P_L`, vertex `(v, i)` indexed `v * L + i`.
/// Slice `i` holds the configuration after `i` moves; a pebble sliding from
/// `a` to `b` between slices `i` and `i + 1` also takes `(b, i)`.
pub fn plan_to_minor_model(plan: &PebblePlan) -> Result<MinorModel, PebbleError> {
    let replay = replay_and_validate(plan);
    if !replay.legal {
        return Err(PebbleError::InvalidPlan("illegal move".into()));
    }
    if !replay.all_met() {
        return Err(PebbleError::InvalidPlan("some pair never meets".into()));
    }
    let l = slice_count(plan);
    let k = plan.initial.len();
    let mut branch = vec![Vec::new(); k];
    for i in 0..l {
        let c = &replay.configurations[i.min(plan.moves.len())];
        for p in 0..k {
            branch[p].push(c[p] * l + i);
        }
        if let Some(s) = plan.moves.get(i) {
            branch[s.pebble].push(s.to * l + i);
        }
    }
    branch.iter_mut().for_each(|b| b.sort_unstable());
    let host = cartesian_product(&plan.host, &path(l).expect("at least one slice"));
    Ok(MinorModel {
        host,
        pattern: complete(k).expect("at least one pebble"),
        branch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_bipartite, cycle, wheel};
    use crate::minors::validate_model;

    #[test]
    fn complete_graph_needs_no_moves() {
        let plan = solve_pebble(&complete(4).unwrap()).unwrap();
        assert!(plan.moves.is_empty());
        let r = replay_and_validate(&plan);
        assert!(r.legal && r.all_met());
        let m = plan_to_minor_model(&plan).unwrap();
        assert_eq!(m.host.n(), 4);
        assert_eq!(m.branch, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(validate_model(&m), Ok(()));
    }

    #[test]
    fn preconditions() {
        assert_eq!(
            solve_pebble(&cycle(5).unwrap()),
            Err(PebbleError::NotApplicable(Inapplicable::Cycle))
        );
        assert_eq!(
            solve_pebble(&complete(3).unwrap()),
            Err(PebbleError::NotApplicable(Inapplicable::TooSmall))
        );
        assert_eq!(
            solve_pebble(&complete_bipartite(1, 3).unwrap()),
            Err(PebbleError::NotApplicable(Inapplicable::NotBiconnected))
        );
    }

    #[test]
    fn models_for_small_hosts() {
        for h in [complete_bipartite(2, 3).unwrap(), wheel(4).unwrap()] {
            let plan = solve_pebble(&h).unwrap();
            let r = replay_and_validate(&plan);
            assert!(r.legal && r.all_met());
            let m = plan_to_minor_model(&plan).unwrap();
            assert_eq!(m.pattern.n(), h.n() - 1);
            assert_eq!(validate_model(&m), Ok(()));
        }
    }

    #[test]
    fn illegal_plans() {
        let h = complete_bipartite(2, 3).unwrap();
        // Vertices 0 and 1 are on the same side, so this slide is not an edge.
        let plan = PebblePlan {
            host: h.clone(),
            initial: vec![1, 2, 3, 4],
            moves: vec![Slide { pebble: 0, from: 1, to: 0 }],
        };
        assert!(!replay_and_validate(&plan).legal);
        assert!(matches!(plan_to_minor_model(&plan), Err(PebbleError::InvalidPlan(_))));
    }
}
