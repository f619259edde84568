"""Planar graphs carried as combinatorial embeddings.

A graph lives here as a rotation system: for every vertex, the cyclic order
of its neighbors as seen in the plane (counterclockwise by convention).
Faces are recovered by walking directed edges with the successor rule, and
one traversed face is designated as the outer face. Everything downstream
assumes simple, connected, 3-connected input; the lone tolerated exception
is the triangle, which has no interior vertex to solve for.
"""
from __future__ import annotations

import json
import logging
import random
from collections import deque
from dataclasses import dataclass, replace
from pathlib import Path

from .errors import (
    EulerViolation,
    GenerationStalled,
    InfeasibleParams,
    InvalidEmbedding,
    MalformedRotation,
)

log = logging.getLogger(__name__)

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Canonical undirected key for an edge."""
    return (u, v) if u < v else (v, u)


# ---------------------------------------------------------------------------
# core types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Face:
    """One face cycle, listed in traversal order."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class PlanarEmbedding:
    """Rotation system plus a designated outer face.

    rotation[v] holds the neighbors of v in cyclic (counterclockwise)
    order. outer_face is one of the cycles produced by traverse_faces,
    up to rotation and reflection.
    """

    n: int
    rotation: tuple[tuple[int, ...], ...]
    outer_face: tuple[int, ...]

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotation[v]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def edges(self) -> list[Edge]:
        """All undirected edges, canonical keys, sorted."""
        out = {edge_key(v, w) for v in range(self.n) for w in self.rotation[v]}
        return sorted(out)

    def adjacency(self) -> list[set[int]]:
        return [set(r) for r in self.rotation]


def _cycle_key(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical form of a cyclic sequence, invariant to rotation and reflection."""
    best: tuple[int, ...] | None = None
    forward = list(seq)
    for cand in (forward, forward[::-1]):
        for i in range(len(cand)):
            rot = tuple(cand[i:] + cand[:i])
            if best is None or rot < best:
                best = rot
    assert best is not None
    return best


# ---------------------------------------------------------------------------
# face traversal and validation
# ---------------------------------------------------------------------------

def _check_rotation(emb: PlanarEmbedding) -> None:
    if emb.n < 3:
        raise MalformedRotation(f"need at least 3 vertices, got {emb.n}")
    if len(emb.rotation) != emb.n:
        raise MalformedRotation("rotation table length differs from n")
    for v, rot in enumerate(emb.rotation):
        if not rot:
            raise MalformedRotation(f"vertex {v} has no neighbors")
        seen: set[int] = set()
        for w in rot:
            if not isinstance(w, int) or not 0 <= w < emb.n:
                raise MalformedRotation(f"vertex {v} lists invalid neighbor {w!r}")
            if w == v:
                raise MalformedRotation(f"self-loop at vertex {v}")
            if w in seen:
                raise MalformedRotation(f"parallel edge {v}-{w}")
            seen.add(w)
    for v, rot in enumerate(emb.rotation):
        for w in rot:
            if v not in emb.rotation[w]:
                raise MalformedRotation(f"edge {v}-{w} is not symmetric")


def traverse_faces(emb: PlanarEmbedding) -> list[Face]:
    """Walk every directed edge once and collect the face cycles.

    From directed edge (u, v) the walk continues with (v, w) where w is the
    successor of u in the rotation of v. With counterclockwise rotations
    this traces interior faces counterclockwise and the outer face
    clockwise. Raises EulerViolation when the face count contradicts
    n - m + f = 2, i.e. the rotation system is not a sphere embedding.
    """
    _check_rotation(emb)
    pos = [{w: i for i, w in enumerate(rot)} for rot in emb.rotation]
    used: set[tuple[int, int]] = set()
    faces: list[Face] = []
    for v0 in range(emb.n):
        for w0 in emb.rotation[v0]:
            if (v0, w0) in used:
                continue
            cycle: list[int] = []
            v, w = v0, w0
            while (v, w) not in used:
                used.add((v, w))
                cycle.append(v)
                rot = emb.rotation[w]
                v, w = w, rot[(pos[w][v] + 1) % len(rot)]
            faces.append(Face(tuple(cycle)))
    if emb.n - emb.m + len(faces) != 2:
        raise EulerViolation(
            f"n={emb.n} m={emb.m} f={len(faces)} violates n - m + f = 2"
        )
    return faces


def _connected(adj: list[set[int]], n: int) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == n


def _biconnected_without(adj: list[set[int]], n: int, skip: int) -> bool:
    """True when the graph minus vertex `skip` is connected and has no cut vertex."""
    start = 0 if skip != 0 else 1
    visited = [False] * n
    disc = [0] * n
    low = [0] * n
    timer = 1
    visited[start] = True
    disc[start] = low[start] = timer
    timer += 1
    stack = [(start, -1, iter(adj[start]))]
    root_children = 0
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == skip:
                continue
            if not visited[w]:
                visited[w] = True
                disc[w] = low[w] = timer
                timer += 1
                if v == start:
                    root_children += 1
                stack.append((w, v, iter(adj[w])))
                advanced = True
                break
            if w != parent and disc[w] < low[v]:
                low[v] = disc[w]
        if advanced:
            continue
        stack.pop()
        if stack:
            pv = stack[-1][0]
            if low[v] < low[pv]:
                low[pv] = low[v]
            if pv != start and low[v] >= disc[pv]:
                return False
    if root_children > 1:
        return False
    return all(visited[w] for w in range(n) if w != skip)


def validate_three_connected(emb: PlanarEmbedding) -> bool:
    """Whether removing any two vertices leaves the graph connected.

    Requires n >= 4; a triangle counts as not 3-connected even though the
    rest of the package tolerates it as the degenerate no-interior case.
    """
    n = emb.n
    if n < 4:
        return False
    adj = emb.adjacency()
    if min(len(a) for a in adj) < 3:
        return False
    if not _connected(adj, n):
        return False
    return all(_biconnected_without(adj, n, a) for a in range(n))


def validate(emb: PlanarEmbedding) -> None:
    """Check every embedding invariant, raising on the first failure.

    Checks, in order: well-formed simple rotation system, connectivity,
    Euler consistency of the face traversal, the outer face being one of
    the traversed faces, and 3-connectedness (triangles pass as the
    degenerate base case).
    """
    _check_rotation(emb)
    if not _connected(emb.adjacency(), emb.n):
        raise InvalidEmbedding("graph is disconnected")
    faces = traverse_faces(emb)
    if len(emb.outer_face) < 3:
        raise InvalidEmbedding(f"outer face has {len(emb.outer_face)} vertices")
    if len(set(emb.outer_face)) != len(emb.outer_face):
        raise InvalidEmbedding("outer face repeats a vertex")
    keys = {_cycle_key(f.vertices) for f in faces}
    if _cycle_key(emb.outer_face) not in keys:
        raise InvalidEmbedding("outer face is not a face of the embedding")
    if emb.n == 3:
        return  # triangle: valid degenerate case, nothing interior to solve
    if not validate_three_connected(emb):
        raise InvalidEmbedding("graph is not 3-connected")


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def worst_case_graph(k: int) -> PlanarEmbedding:
    """Path p_1..p_k plus two apexes adjacent to each other and to every p_i.

    The unit-weight equilibrium drawing of this family shrinks interior
    edges geometrically with k, which is what makes it a stress test for
    edge-length ratios. n = k + 2, m = 3k; the outer face is the triangle
    formed by the two apexes and an end of the path.
    """
    if k < 1:
        raise InfeasibleParams(f"k must be >= 1, got {k}")
    u, w = k, k + 1  # apexes; path vertices are 0 .. k-1
    rotation: list[list[int]] = []
    if k == 1:
        rotation = [[u, w], [w, 0], [0, u]]
    else:
        for j in range(k):
            if j == 0:
                rotation.append([1, u, w])
            elif j == k - 1:
                rotation.append([u, k - 2, w])
            else:
                rotation.append([j + 1, u, j - 1, w])
        rotation.append([w] + list(range(k)))          # u: arc to w, then path
        rotation.append(list(range(k - 1, -1, -1)) + [u])  # w: path reversed, then u
    emb = PlanarEmbedding(
        n=k + 2,
        rotation=tuple(tuple(r) for r in rotation),
        outer_face=(),
    )
    target = {u, w, 0}
    for face in traverse_faces(emb):
        if len(face) == 3 and set(face.vertices) == target:
            return replace(emb, outer_face=face.vertices)
    raise AssertionError("outer triangle not found in worst-case construction")


def _insert_after(rot: list[int], anchor: int, new: int) -> None:
    rot.insert(rot.index(anchor) + 1, new)


def _random_triangulation(n: int, rng: random.Random) -> list[list[int]]:
    """Grow a triangulation by dropping each new vertex into a random face."""
    rot: dict[int, list[int]] = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
    faces: list[tuple[int, int, int]] = [(0, 1, 2), (0, 2, 1)]
    for new in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        _insert_after(rot[a], c, new)
        _insert_after(rot[b], a, new)
        _insert_after(rot[c], b, new)
        rot[new] = [a, c, b]
        faces += [(a, b, new), (b, c, new), (c, a, new)]
    return [rot[v] for v in range(n)]


def _disjoint_paths_at_least(adj: list[set[int]], s: int, t: int, k: int) -> bool:
    """At least k internally vertex-disjoint s-t paths (unit-capacity flow)."""
    cap: dict[tuple[int, int], int] = {}
    nbrs: dict[int, list[int]] = {}

    def arc(a: int, b: int, c: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + c
        if (b, a) not in cap:
            cap[(b, a)] = 0
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)

    for v, vs in enumerate(adj):
        arc(2 * v, 2 * v + 1, k if v in (s, t) else 1)
        for w in vs:
            arc(2 * v + 1, 2 * w, 1)
    src, snk = 2 * s + 1, 2 * t
    flow = 0
    while flow < k:
        prev: dict[int, int | None] = {src: None}
        queue = deque([src])
        while queue and snk not in prev:
            a = queue.popleft()
            for b in nbrs.get(a, ()):
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if snk not in prev:
            return False
        b = snk
        while prev[b] is not None:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return True


def _generate_once(n: int, m: int, rng: random.Random) -> tuple[list[list[int]], int]:
    rot = _random_triangulation(n, rng)
    adj = [set(r) for r in rot]
    m_cur = 3 * n - 6
    while m_cur > m:
        candidates = sorted(
            {edge_key(v, w) for v in range(n) for w in adj[v]}
        )
        rng.shuffle(candidates)
        removed = False
        for u, v in candidates:
            if len(adj[u]) <= 3 or len(adj[v]) <= 3:
                continue
            adj[u].remove(v)
            adj[v].remove(u)
            if _disjoint_paths_at_least(adj, u, v, 3):
                rot[u].remove(v)
                rot[v].remove(u)
                m_cur -= 1
                removed = True
                break
            adj[u].add(v)
            adj[v].add(u)
        if not removed:
            break  # stalled at m_cur
    return rot, m_cur


def generate_planar(
    n: int,
    m: int,
    seed: int,
    attempts: int = 8,
    strict: bool = False,
) -> PlanarEmbedding:
    """Random simple 3-connected planar embedding with n vertices, m edges.

    Grows a random triangulation by repeated vertex insertion into a
    uniformly random face, then deletes uniformly random edges, rejecting
    any deletion that would break 3-connectedness or drop a degree below 3,
    until m edges remain. Deterministic for a fixed seed. When deletion
    stalls, up to `attempts` fresh tries run on derived sub-seeds; if none
    reaches m exactly, the closest achieved edge count above m is returned
    with a logged warning, or GenerationStalled is raised when strict.

    Feasible range: n >= 4 and ceil(3n/2) <= m <= 3n - 6.
    """
    if n < 4:
        raise InfeasibleParams(f"need n >= 4, got n={n}")
    lo, hi = (3 * n + 1) // 2, 3 * n - 6
    if not lo <= m <= hi:
        raise InfeasibleParams(f"need {lo} <= m <= {hi} for n={n}, got m={m}")
    best: tuple[list[list[int]], int] | None = None
    for attempt in range(max(1, attempts)):
        rng = random.Random(seed * 1000003 + attempt)
        rot, achieved = _generate_once(n, m, rng)
        if best is None or achieved < best[1]:
            best = (rot, achieved)
        if achieved == m:
            break
    assert best is not None
    rot, achieved = best
    if achieved != m:
        if strict:
            raise GenerationStalled(
                f"could not thin to m={m} after {attempts} attempts; best was {achieved}"
            )
        log.warning(
            "generation stalled: requested m=%d, returning closest achievable m=%d",
            m,
            achieved,
        )
    emb = PlanarEmbedding(
        n=n,
        rotation=tuple(tuple(r) for r in rot),
        outer_face=(),
    )
    faces = traverse_faces(emb)
    longest = max(len(f) for f in faces)
    outer = min(
        (f.vertices for f in faces if len(f) == longest),
        key=_cycle_key,
    )
    emb = replace(emb, outer_face=outer)
    validate(emb)
    return emb


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------

def to_dict(emb: PlanarEmbedding) -> dict:
    return {
        "n": emb.n,
        "rotation": [list(r) for r in emb.rotation],
        "outer_face": list(emb.outer_face),
    }


def from_dict(data: object) -> PlanarEmbedding:
    """Build and fully validate an embedding from parsed JSON."""
    if not isinstance(data, dict):
        raise InvalidEmbedding("graph JSON must be an object")
    missing = {"n", "rotation", "outer_face"} - set(data)
    if missing:
        raise InvalidEmbedding(f"graph JSON missing keys: {sorted(missing)}")
    n = data["n"]
    rotation = data["rotation"]
    outer = data["outer_face"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidEmbedding("n must be an integer")
    if not isinstance(rotation, list) or not all(isinstance(r, list) for r in rotation):
        raise InvalidEmbedding("rotation must be a list of lists")
    if not isinstance(outer, list):
        raise InvalidEmbedding("outer_face must be a list")
    emb = PlanarEmbedding(
        n=n,
        rotation=tuple(tuple(r) for r in rotation),
        outer_face=tuple(outer),
    )
    validate(emb)
    return emb


def load_graph(path: str | Path) -> PlanarEmbedding:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidEmbedding(f"not valid JSON: {exc}") from exc
    return from_dict(data)


def save_graph(emb: PlanarEmbedding, path: str | Path) -> None:
    Path(path).write_text(json.dumps(to_dict(emb)) + "\n", encoding="utf-8")
