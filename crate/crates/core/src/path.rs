//! Vertex sequences: walks, simple paths, and the surgery that turns
//! closure-level paths back into base-relation paths.
//!
//! A [`Path`] is a nonempty vertex sequence. It is *simple* when its
//! vertices are pairwise distinct, and it is a walk in a relation when
//! every consecutive pair is related. [`find_simple_path`] realizes
//! transitive-closure membership as an explicit simple path;
//! [`splice`] repairs the concatenation of two overlapping simple paths
//! around a rewritten waypoint; [`expand_asym_path`] lifts a simple path
//! of `asym(R⁺)` to a simple path of `R` that is at least as long.

use crate::relation::Relation;
use crate::universe::{Universe, VertexSet};
use crate::{Error, Result};

/// A nonempty sequence of vertices over a universe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Path {
    universe: Universe,
    vertices: Vec<usize>,
}

impl Path {
    /// Builds a path, rejecting empty sequences and out-of-range vertices.
    pub fn new(universe: Universe, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyPath);
        }
        for &v in &vertices {
            universe.check_vertex(v)?;
        }
        Ok(Path { universe, vertices })
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of vertices (not steps).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Always false: empty sequences are rejected at construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("paths are nonempty")
    }

    /// Pairwise-distinct vertices.
    pub fn is_simple(&self) -> bool {
        let mut seen = VertexSet::empty(self.universe);
        for &v in &self.vertices {
            if seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        true
    }

    /// First and last vertex coincide and there is at least one step.
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() >= 2 && self.first() == self.last()
    }

    /// True iff every consecutive pair of vertices is related; vacuous
    /// for a single-vertex path.
    pub fn is_walk(&self, r: &Relation) -> Result<bool> {
        if self.universe != r.universe() {
            return Err(Error::UniverseMismatch);
        }
        Ok(self
            .vertices
            .windows(2)
            .all(|w| r.contains(w[0], w[1])))
    }
}

impl std::fmt::Debug for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.vertices.iter()).finish()
    }
}

/// Finds a duplicate-free path from `x` to `y` with every step in `r`,
/// or `None` when `y` is unreachable. A path exists exactly when
/// `(x, y)` lies in the transitive closure of `r`. Equal endpoints are
/// rejected: a duplicate-free sequence cannot start and end at the same
/// vertex, so that question belongs to cycle queries.
///
/// Among shortest paths the lexicographically smallest vertex sequence
/// is returned, so results are reproducible.
pub fn find_simple_path(r: &Relation, x: usize, y: usize) -> Result<Option<Path>> {
    let universe = r.universe();
    universe.check_vertex(x)?;
    universe.check_vertex(y)?;
    if x == y {
        return Err(Error::EqualEndpoints);
    }
    let targets = VertexSet::singleton(universe, y)?;
    let forbidden = VertexSet::empty(universe);
    Ok(lex_min_shortest(r, x, &targets, &forbidden)
        .map(|verts| Path::new(universe, verts).expect("nonempty by construction")))
}

/// Lexicographically smallest shortest walk from `from` to any member of
/// `targets`, avoiding `forbidden` everywhere after the start vertex.
/// Returns the full vertex sequence including both endpoints. Strictly
/// decreasing distance-to-target makes the result duplicate-free.
pub(crate) fn lex_min_shortest(
    r: &Relation,
    from: usize,
    targets: &VertexSet,
    forbidden: &VertexSet,
) -> Option<Vec<usize>> {
    let n = r.universe().size();
    if targets.contains(from) {
        return Some(vec![from]);
    }
    // distances to the target set, over vertices outside `forbidden`
    let mut dist = vec![usize::MAX; n];
    let mut frontier: Vec<usize> = targets.iter().filter(|&t| !forbidden.contains(t)).collect();
    for &t in &frontier {
        dist[t] = 0;
    }
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for u in 0..n {
            if dist[u] != usize::MAX || (forbidden.contains(u) && u != from) {
                continue;
            }
            if frontier.iter().any(|&t| r.contains(u, t)) {
                dist[u] = d;
                next.push(u);
            }
        }
        frontier = next;
    }
    if dist[from] == usize::MAX {
        return None;
    }
    // walk the distance field greedily, smallest successor first
    let mut verts = vec![from];
    let mut cur = from;
    let mut remaining = dist[from];
    while remaining > 0 {
        let step = r
            .successors(cur)
            .find(|&w| dist[w] == remaining - 1 && !forbidden.contains(w))
            .expect("distance field admits a descent");
        verts.push(step);
        cur = step;
        remaining -= 1;
    }
    Some(verts)
}

/// The repaired junction produced by [`splice`]: interior segments on
/// both sides of the rewritten waypoint. The full repaired sequence is
/// `x, x_part.., y_new, y_part.., z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splice {
    pub x_part: Vec<usize>,
    pub y_new: usize,
    pub y_part: Vec<usize>,
}

impl Splice {
    /// Assembles the full repaired vertex sequence from `x` to `z`.
    pub fn assemble(&self, universe: Universe, x: usize, z: usize) -> Result<Path> {
        let mut verts = Vec::with_capacity(self.x_part.len() + self.y_part.len() + 3);
        verts.push(x);
        verts.extend_from_slice(&self.x_part);
        verts.push(self.y_new);
        verts.extend_from_slice(&self.y_part);
        verts.push(z);
        Path::new(universe, verts)
    }
}

/// Given simple walks `px: x -> y` and `py: y -> z` whose endpoints are
/// consecutive under `asym(R⁺)`, produces a rewritten waypoint `y_new`
/// and segments such that the assembled sequence `x ... y_new ... z` is
/// duplicate-free, every step is in `r`, the left segment is a
/// subsequence of `px`'s interior, and both `(x, y_new)` and
/// `(y_new, z)` still lie in `asym(R⁺)`.
///
/// The subsequence requirement on the left segment is what lets repairs
/// compose: vertices of the repaired left part were already present
/// before, so disjointness from older material is preserved.
///
/// Among all valid repairs the shortest assembled sequence is returned,
/// ties broken by lexicographic vertex order.
pub fn splice(
    r: &Relation,
    x: usize,
    y: usize,
    z: usize,
    px: &Path,
    py: &Path,
) -> Result<Splice> {
    let universe = r.universe();
    let asym = r.transitive_closure().asym_part();
    check_splice_inputs(r, &asym, x, y, z, px, py)?;

    let interior_px: Vec<usize> = px.vertices()[1..px.len() - 1].to_vec();

    // no conflict, no repair: keep both paths as they are
    let mut seen = VertexSet::empty(universe);
    for &v in px.vertices() {
        seen.insert(v);
    }
    if py.vertices()[1..].iter().all(|&v| !seen.contains(v)) {
        return Ok(Splice {
            x_part: interior_px,
            y_new: y,
            y_part: py.vertices()[1..py.len() - 1].to_vec(),
        });
    }

    if interior_px.len() > EXHAUSTIVE_SPLICE_LIMIT {
        return Ok(cut_splice(&interior_px, py));
    }
    let mut best: Option<(Vec<usize>, Splice)> = None;

    for y_new in universe.vertices() {
        if !(asym.contains(x, y_new) && asym.contains(y_new, z)) {
            continue;
        }
        // Enumerate subsequences of px's interior that form a walk from
        // x to y_new, skipping vertices that would collide with the
        // fixed endpoints.
        let mut stack: Vec<(Vec<usize>, usize, usize)> = vec![(Vec::new(), x, 0)];
        while let Some((part, last, from_pos)) = stack.pop() {
            if r.contains(last, y_new) {
                let candidate = finish_splice(r, universe, x, y_new, z, &part);
                if let Some(c) = candidate {
                    best = merge_best(best, c);
                }
            }
            for pos in from_pos..interior_px.len() {
                let v = interior_px[pos];
                if v == y_new || v == z {
                    continue;
                }
                if r.contains(last, v) {
                    let mut next = part.clone();
                    next.push(v);
                    stack.push((next, v, pos + 1));
                }
            }
        }
    }

    match best {
        Some((_, s)) => Ok(s),
        None => Err(Error::InvariantViolated(
            "no valid splice exists for a well-formed input".into(),
        )),
    }
}

/// Interior sizes up to this bound get the exhaustive shortest-repair
/// search; beyond it the subsequence enumeration would blow up, so the
/// closed-form cut below is used instead.
const EXHAUSTIVE_SPLICE_LIMIT: usize = 14;

/// Closed-form repair: keep the prefix of `px` up to the last vertex
/// that `py`'s interior revisits, make that vertex the new waypoint, and
/// keep the suffix of `py` after it. If nothing is shared the inputs
/// concatenate as they are.
fn cut_splice(interior_px: &[usize], py: &Path) -> Splice {
    let pyv = py.vertices();
    let conflict = (1..pyv.len() - 1)
        .rev()
        .find(|&j| interior_px.contains(&pyv[j]));
    match conflict {
        None => Splice {
            x_part: interior_px.to_vec(),
            y_new: py.first(),
            y_part: pyv[1..pyv.len() - 1].to_vec(),
        },
        Some(j) => {
            let v = pyv[j];
            let i = interior_px.iter().position(|&u| u == v).expect("conflict vertex");
            Splice {
                x_part: interior_px[..i].to_vec(),
                y_new: v,
                y_part: pyv[j + 1..pyv.len() - 1].to_vec(),
            }
        }
    }
}

fn check_splice_inputs(
    r: &Relation,
    asym: &Relation,
    x: usize,
    y: usize,
    z: usize,
    px: &Path,
    py: &Path,
) -> Result<()> {
    let fail = |m: &str| Err(Error::Precondition(m.into()));
    if px.first() != x || px.last() != y {
        return fail("px must run from x to y");
    }
    if py.first() != y || py.last() != z {
        return fail("py must run from y to z");
    }
    if !px.is_walk(r)? || !py.is_walk(r)? {
        return fail("px and py must be walks in the relation");
    }
    if !px.is_simple() || !py.is_simple() {
        return fail("px and py must be duplicate-free");
    }
    if !asym.contains(x, y) || !asym.contains(y, z) {
        return fail("endpoints must be consecutive under the asymmetric closure");
    }
    Ok(())
}

fn finish_splice(
    r: &Relation,
    universe: Universe,
    x: usize,
    y_new: usize,
    z: usize,
    x_part: &[usize],
) -> Option<(Vec<usize>, Splice)> {
    let mut forbidden = VertexSet::empty(universe);
    forbidden.insert(x);
    for &v in x_part {
        forbidden.insert(v);
    }
    let targets = VertexSet::singleton(universe, z).expect("z is in range");
    let tail = lex_min_shortest(r, y_new, &targets, &forbidden)?;
    let mut full = Vec::with_capacity(x_part.len() + tail.len() + 1);
    full.push(x);
    full.extend_from_slice(x_part);
    full.extend_from_slice(&tail);
    let splice = Splice {
        x_part: x_part.to_vec(),
        y_new,
        y_part: tail[1..tail.len() - 1].to_vec(),
    };
    Some((full, splice))
}

fn merge_best(
    best: Option<(Vec<usize>, Splice)>,
    candidate: (Vec<usize>, Splice),
) -> Option<(Vec<usize>, Splice)> {
    match best {
        None => Some(candidate),
        Some(cur) => {
            let key = |c: &(Vec<usize>, Splice)| (c.0.len(), c.0.clone(), c.1.y_new);
            Some(if key(&candidate) < key(&cur) { candidate } else { cur })
        }
    }
}

/// Lifts a duplicate-free path of `asym(R⁺)` to a duplicate-free path of
/// `r` itself, starting at the same vertex and at least as long.
///
/// Waypoints of `w` are realized one at a time by simple `r`-paths; each
/// new segment may only collide with the previous one, and [`splice`]
/// repairs that junction. The end vertex is not contractual: repairs may
/// rewrite interior waypoints.
pub fn expand_asym_path(r: &Relation, w: &Path) -> Result<Path> {
    let universe = r.universe();
    if w.universe() != universe {
        return Err(Error::UniverseMismatch);
    }
    if !w.is_simple() {
        return Err(Error::Precondition("input path must be duplicate-free".into()));
    }
    let asym = r.transitive_closure().asym_part();
    if !w.is_walk(&asym)? {
        return Err(Error::Precondition(
            "consecutive input vertices must be related by the asymmetric closure".into(),
        ));
    }
    let waypoints = w.vertices();
    if waypoints.len() == 1 {
        return Ok(w.clone());
    }

    let segment = |a: usize, b: usize| -> Result<Vec<usize>> {
        match find_simple_path(r, a, b)? {
            Some(p) => Ok(p.vertices().to_vec()),
            None => Err(Error::InvariantViolated(
                "closure membership must be realizable as a path".into(),
            )),
        }
    };

    // segments[i] runs from anchor i to anchor i+1; consecutive anchors
    // stay related by asym(R⁺) throughout
    let mut segments: Vec<Vec<usize>> = vec![segment(waypoints[0], waypoints[1])?];
    let mut anchors: Vec<usize> = vec![waypoints[0], waypoints[1]];

    for &next in &waypoints[2..] {
        let m = anchors.len() - 1;
        let tail = segment(anchors[m], next)?;
        let px = Path::new(universe, segments[m - 1].clone())?;
        let py = Path::new(universe, tail)?;
        let repaired = splice(r, anchors[m - 1], anchors[m], next, &px, &py)?;
        let mut left = vec![anchors[m - 1]];
        left.extend_from_slice(&repaired.x_part);
        left.push(repaired.y_new);
        let mut right = vec![repaired.y_new];
        right.extend_from_slice(&repaired.y_part);
        right.push(next);
        segments[m - 1] = left;
        segments.push(right);
        anchors[m] = repaired.y_new;
        anchors.push(next);
    }

    let mut verts: Vec<usize> = vec![waypoints[0]];
    for seg in &segments {
        verts.extend_from_slice(&seg[1..]);
    }
    let out = Path::new(universe, verts)?;
    if !out.is_simple() || !out.is_walk(r)? || out.len() < waypoints.len() || out.first() != w.first() {
        return Err(Error::InvariantViolated(
            "expansion produced an invalid path".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rel(n: usize, pairs: &[(usize, usize)]) -> Relation {
        Relation::from_pairs(Universe::new(n), pairs.iter().copied()).unwrap()
    }

    fn path(n: usize, verts: &[usize]) -> Path {
        Path::new(Universe::new(n), verts.to_vec()).unwrap()
    }

    #[test]
    fn empty_paths_are_rejected() {
        assert_eq!(
            Path::new(Universe::new(3), vec![]).unwrap_err(),
            Error::EmptyPath
        );
    }

    #[test]
    fn walk_check_examples() {
        let r = rel(3, &[(0, 1), (1, 2)]);
        assert!(path(3, &[1]).is_walk(&r).unwrap());
        assert!(path(3, &[0, 1, 2]).is_walk(&r).unwrap());
        assert!(!path(3, &[0, 2]).is_walk(&r).unwrap());
    }

    #[test]
    fn simple_path_direct_edge() {
        let r = rel(2, &[(0, 1)]);
        let p = find_simple_path(&r, 0, 1).unwrap().unwrap();
        assert_eq!(p.vertices(), &[0, 1]);
    }

    #[test]
    fn simple_path_absent_when_disconnected() {
        let r = rel(4, &[(0, 1), (2, 3)]);
        assert!(find_simple_path(&r, 0, 3).unwrap().is_none());
    }

    #[test]
    fn simple_path_rejects_equal_endpoints() {
        let r = rel(2, &[(0, 0)]);
        assert_eq!(
            find_simple_path(&r, 0, 0).unwrap_err(),
            Error::EqualEndpoints
        );
    }

    #[test]
    fn simple_path_presence_matches_closure_exhaustively() {
        // every relation on up to 4 vertices, every ordered pair
        for n in 0..=4usize {
            let cells = n * n;
            for code in 0u32..1 << cells {
                let pairs: Vec<(usize, usize)> = (0..cells)
                    .filter(|&c| code >> c & 1 == 1)
                    .map(|c| (c / n, c % n))
                    .collect();
                let r = rel(n, &pairs);
                let tc = r.transitive_closure();
                for x in 0..n {
                    for y in 0..n {
                        if x == y {
                            continue;
                        }
                        let found = find_simple_path(&r, x, y).unwrap();
                        assert_eq!(found.is_some(), tc.contains(x, y));
                        if let Some(p) = found {
                            assert!(p.is_simple());
                            assert!(p.is_walk(&r).unwrap());
                            assert_eq!(p.first(), x);
                            assert_eq!(p.last(), y);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn walk_of_simple_path_lands_in_closure() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for _ in 0..60 {
            let n = rng.gen_range(2..=10);
            let mut pairs = Vec::new();
            for x in 0..n {
                for y in 0..n {
                    if rng.gen_bool(0.25) {
                        pairs.push((x, y));
                    }
                }
            }
            let r = rel(n, &pairs);
            let tc = r.transitive_closure();
            for x in 0..n {
                for y in 0..n {
                    if x == y {
                        continue;
                    }
                    if let Some(p) = find_simple_path(&r, x, y).unwrap() {
                        assert!(p.len() >= 2);
                        assert!(tc.contains(p.first(), p.last()));
                    }
                }
            }
        }
    }

    fn assert_valid_splice(
        r: &Relation,
        x: usize,
        y: usize,
        z: usize,
        px: &Path,
        py: &Path,
        s: &Splice,
    ) {
        let asym = r.transitive_closure().asym_part();
        let full = s.assemble(r.universe(), x, z).unwrap();
        assert!(full.is_simple(), "assembled sequence must be duplicate-free");
        assert!(full.is_walk(r).unwrap(), "assembled steps must be in r");
        assert!(asym.contains(x, s.y_new));
        assert!(asym.contains(s.y_new, z));
        // left segment is a subsequence of px's interior
        let interior = &px.vertices()[1..px.len() - 1];
        let mut it = interior.iter();
        for v in &s.x_part {
            assert!(it.any(|w| w == v), "x_part must be a subsequence of px's interior");
        }
        let _ = (y, py);
    }

    #[test]
    fn splice_disjoint_interiors_is_identity_shaped() {
        // x=0 -> 1 -> y=2, y=2 -> 3 -> z=4, no overlap anywhere
        let r = rel(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let px = path(5, &[0, 1, 2]);
        let py = path(5, &[2, 3, 4]);
        let s = splice(&r, 0, 2, 4, &px, &py).unwrap();
        assert_valid_splice(&r, 0, 2, 4, &px, &py, &s);
        // the only repair here keeps the waypoint
        assert_eq!(s.y_new, 2);
    }

    #[test]
    fn splice_repairs_a_shared_interior_vertex() {
        // px = [0, 1, 2], py = [2, 1, 3]: vertex 1 appears in both
        let r = rel(4, &[(0, 1), (1, 2), (2, 1), (1, 3)]);
        let px = path(4, &[0, 1, 2]);
        let py = path(4, &[2, 1, 3]);
        let s = splice(&r, 0, 2, 3, &px, &py).unwrap();
        assert_valid_splice(&r, 0, 2, 3, &px, &py, &s);
    }

    #[test]
    fn splice_precondition_violations_are_rejected() {
        let r = rel(3, &[(0, 1), (1, 2)]);
        let px = path(3, &[0, 1]);
        let py = path(3, &[1, 2]);
        // wrong endpoint wiring
        assert!(matches!(
            splice(&r, 0, 2, 1, &px, &py),
            Err(Error::Precondition(_))
        ));
        // not a walk
        let bad = path(3, &[0, 2]);
        assert!(matches!(
            splice(&r, 0, 2, 2, &bad, &py),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn splice_postconditions_hold_exhaustively_small() {
        // all relations on 4 vertices, all valid tuples with shortest paths
        for code in 0u32..1 << 16 {
            let pairs: Vec<(usize, usize)> = (0..16)
                .filter(|&c| code >> c & 1 == 1)
                .map(|c| (c / 4, c % 4))
                .collect();
            let r = rel(4, &pairs);
            let asym = r.transitive_closure().asym_part();
            for x in 0..4 {
                for y in 0..4 {
                    for z in 0..4 {
                        if !(asym.contains(x, y) && asym.contains(y, z)) {
                            continue;
                        }
                        let px = find_simple_path(&r, x, y).unwrap().unwrap();
                        let py = find_simple_path(&r, y, z).unwrap().unwrap();
                        let s = splice(&r, x, y, z, &px, &py).unwrap();
                        assert_valid_splice(&r, x, y, z, &px, &py, &s);
                    }
                }
            }
        }
    }

    #[test]
    fn splice_of_long_paths_uses_the_closed_form_cut() {
        // a chain 0 -> 1 -> ... -> 17 plus a detour 16 -> 5 -> 17, so
        // px = [0..=16] has a 15-vertex interior and py = [16, 5, 17]
        // revisits vertex 5
        let n = 18;
        let mut pairs: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        pairs.push((16, 5));
        pairs.push((5, 17));
        let r = rel(n, &pairs);
        let px = Path::new(Universe::new(n), (0..=16).collect()).unwrap();
        let py = path(n, &[16, 5, 17]);
        let s = splice(&r, 0, 16, 17, &px, &py).unwrap();
        assert_eq!(s.y_new, 5);
        assert_eq!(s.x_part, vec![1, 2, 3, 4]);
        assert_valid_splice(&r, 0, 16, 17, &px, &py, &s);
    }

    #[test]
    fn expand_single_vertex_and_direct_edge() {
        let r = rel(2, &[(0, 1)]);
        let w = path(2, &[0]);
        assert_eq!(expand_asym_path(&r, &w).unwrap().vertices(), &[0]);
        let w = path(2, &[0, 1]);
        assert_eq!(expand_asym_path(&r, &w).unwrap().vertices(), &[0, 1]);
    }

    #[test]
    fn expand_rejects_non_asym_input() {
        let r = rel(2, &[(0, 1), (1, 0)]);
        let w = path(2, &[0, 1]);
        assert!(matches!(
            expand_asym_path(&r, &w),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn expand_on_random_dags_meets_the_contract() {
        let mut rng = ChaCha8Rng::seed_from_u64(67);
        for _ in 0..40 {
            let n = rng.gen_range(2..=8);
            // forward edges only, so the closure is its own asymmetric part
            let mut pairs = Vec::new();
            for x in 0..n {
                for y in x + 1..n {
                    if rng.gen_bool(0.4) {
                        pairs.push((x, y));
                    }
                }
            }
            let r = rel(n, &pairs);
            let asym = r.transitive_closure().asym_part();
            // a handful of asym walks per graph
            for _ in 0..10 {
                let mut verts = vec![rng.gen_range(0..n)];
                loop {
                    let last = *verts.last().unwrap();
                    let options: Vec<usize> = asym
                        .successors(last)
                        .filter(|v| !verts.contains(v))
                        .collect();
                    if options.is_empty() || rng.gen_bool(0.2) {
                        break;
                    }
                    verts.push(options[rng.gen_range(0..options.len())]);
                }
                let w = path(n, &verts);
                let out = expand_asym_path(&r, &w).unwrap();
                assert!(out.is_simple());
                assert!(out.is_walk(&r).unwrap());
                assert!(out.len() >= w.len());
                assert_eq!(out.first(), w.first());
            }
        }
    }
}
