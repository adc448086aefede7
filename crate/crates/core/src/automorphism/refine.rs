//! Ordered partitions and equitable refinement (1-dimensional
//! Weisfeiler–Leman) with an isomorphism-invariant trace.

use std::collections::VecDeque;

use crate::graph::Graph;

#[inline]
pub(crate) fn mix(h: u64, x: u64) -> u64 {
    (h.rotate_left(5) ^ x).wrapping_mul(0x517c_c1b7_2722_0a95)
}

/// Ordered partition of the vertices. Cells are contiguous ranges of `lab`.
#[derive(Clone, Debug)]
pub(crate) struct Coloring {
    pub lab: Vec<usize>,
    pub pos: Vec<usize>,
    /// `cell[i]` is the start of the cell holding position `i`.
    pub cell: Vec<usize>,
    /// `end[s]` is the exclusive end of the cell starting at `s`.
    pub end: Vec<usize>,
    pub cells: usize,
}

/// Scratch buffers reused across refinements.
pub(crate) struct Workspace {
    count: Vec<usize>,
    touched: Vec<usize>,
    cell_flag: Vec<bool>,
    in_queue: Vec<bool>,
}

impl Workspace {
    pub fn new(n: usize) -> Self {
        Workspace {
            count: vec![0; n],
            touched: Vec::new(),
            cell_flag: vec![false; n],
            in_queue: vec![false; n],
        }
    }
}

impl Coloring {
    /// Cells ordered by color value. Returns the coloring and its cell starts.
    pub fn from_colors(colors: &[u32]) -> (Self, Vec<usize>) {
        let n = colors.len();
        let mut lab: Vec<usize> = (0..n).collect();
        lab.sort_by_key(|&v| (colors[v], v));
        let mut pos = vec![0; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let mut cell = vec![0; n];
        let mut end = vec![0; n];
        let mut starts = Vec::new();
        let mut s = 0;
        while s < n {
            let mut e = s + 1;
            while e < n && colors[lab[e]] == colors[lab[s]] {
                e += 1;
            }
            for c in &mut cell[s..e] {
                *c = s;
            }
            end[s] = e;
            starts.push(s);
            s = e;
        }
        let cells = starts.len();
        (
            Coloring {
                lab,
                pos,
                cell,
                end,
                cells,
            },
            starts,
        )
    }

    pub fn n(&self) -> usize {
        self.lab.len()
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.n()
    }

    /// Start of the first smallest non-singleton cell.
    pub fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < self.n() {
            let e = self.end[s];
            let size = e - s;
            if size > 1 && best.is_none_or(|(b, _)| size < b) {
                best = Some((size, s));
                if size == 2 {
                    break;
                }
            }
            s = e;
        }
        best.map(|(_, s)| s)
    }

    pub fn cell_members(&self, start: usize) -> &[usize] {
        &self.lab[start..self.end[start]]
    }

    /// Splits `v` off the front of its cell; returns the singleton's start.
    pub fn individualize(&mut self, v: usize) -> usize {
        let p = self.pos[v];
        let s = self.cell[p];
        let e = self.end[s];
        debug_assert!(e - s > 1);
        let w = self.lab[s];
        self.lab.swap(s, p);
        self.pos[v] = s;
        self.pos[w] = p;
        self.end[s] = s + 1;
        self.end[s + 1] = e;
        for c in &mut self.cell[s + 1..e] {
            *c = s + 1;
        }
        self.cells += 1;
        s
    }

    /// Refines to the coarsest equitable partition finer than the current
    /// one, using the cells starting at `queue` as initial splitters.
    pub fn refine(&mut self, g: &Graph, queue: &[usize], ws: &mut Workspace) -> u64 {
        let n = self.n();
        let mut h: u64 = 0x243f_6a88_85a3_08d3;
        let mut queue: VecDeque<usize> = queue.iter().copied().collect();
        for &s in &queue {
            ws.in_queue[s] = true;
        }
        let mut touched_cells: Vec<usize> = Vec::new();
        let mut members: Vec<(usize, usize)> = Vec::new();
        while let Some(w) = queue.pop_front() {
            ws.in_queue[w] = false;
            if self.cells == n {
                continue;
            }
            let we = self.end[w];
            for i in w..we {
                let x = self.lab[i];
                for &y in g.neighbors(x) {
                    if ws.count[y] == 0 {
                        ws.touched.push(y);
                    }
                    ws.count[y] += 1;
                    let c = self.cell[self.pos[y]];
                    if !ws.cell_flag[c] {
                        ws.cell_flag[c] = true;
                        touched_cells.push(c);
                    }
                }
            }
            touched_cells.sort_unstable();
            h = mix(h, w as u64);
            for &s in &touched_cells {
                ws.cell_flag[s] = false;
                let e = self.end[s];
                if e - s == 1 {
                    continue;
                }
                members.clear();
                members.extend(self.lab[s..e].iter().map(|&v| (ws.count[v], v)));
                let first = members[0].0;
                if members.iter().all(|&(c, _)| c == first) {
                    continue;
                }
                members.sort_unstable();
                for (k, &(_, v)) in members.iter().enumerate() {
                    self.lab[s + k] = v;
                    self.pos[v] = s + k;
                }
                h = mix(h, s as u64);
                let was_queued = ws.in_queue[s];
                let mut frags: Vec<(usize, usize)> = Vec::new();
                let mut a = 0;
                while a < members.len() {
                    let mut b = a + 1;
                    while b < members.len() && members[b].0 == members[a].0 {
                        b += 1;
                    }
                    frags.push((s + a, s + b));
                    h = mix(h, ((members[a].0 as u64) << 32) | (b - a) as u64);
                    a = b;
                }
                for &(fs, fe) in &frags {
                    self.end[fs] = fe;
                    for c in &mut self.cell[fs..fe] {
                        *c = fs;
                    }
                }
                self.cells += frags.len() - 1;
                let skip = if was_queued {
                    Some(s)
                } else {
                    let mut best = frags[0];
                    for &f in &frags {
                        if f.1 - f.0 > best.1 - best.0 {
                            best = f;
                        }
                    }
                    Some(best.0)
                };
                for &(fs, _) in &frags {
                    if Some(fs) != skip && !ws.in_queue[fs] {
                        ws.in_queue[fs] = true;
                        queue.push_back(fs);
                    }
                }
            }
            touched_cells.clear();
            for y in ws.touched.drain(..) {
                ws.count[y] = 0;
            }
        }
        mix(h, self.cells as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path};

    #[test]
    fn path_refines_by_distance_to_ends() {
        let g = path(5).unwrap();
        let (mut c, starts) = Coloring::from_colors(&[0; 5]);
        let mut ws = Workspace::new(5);
        c.refine(&g, &starts, &mut ws);
        // Cells: ends {0,4}, {1,3}, center {2}.
        assert_eq!(c.cells, 3);
        assert_eq!(c.cell[c.pos[0]], c.cell[c.pos[4]]);
        assert_eq!(c.cell[c.pos[1]], c.cell[c.pos[3]]);
        assert_ne!(c.cell[c.pos[0]], c.cell[c.pos[1]]);
    }

    #[test]
    fn regular_graphs_do_not_split() {
        let g = cycle(6).unwrap();
        let (mut c, starts) = Coloring::from_colors(&[0; 6]);
        let mut ws = Workspace::new(6);
        c.refine(&g, &starts, &mut ws);
        assert_eq!(c.cells, 1);
        let s = c.individualize(0);
        c.refine(&g, &[s], &mut ws);
        // Distance classes from vertex 0, with {1,5} and {2,4} unsplit.
        assert_eq!(c.cells, 4);
    }
}
