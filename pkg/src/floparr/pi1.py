"""Loops around hyperplanes, their relations, and bounded word problems.

The fundamental group of the complexified complement is generated by
loops of the shape ``word(atom) e_i f_i word(atom)^{-1}``: travel a
minimal gallery from the base chamber to some chamber D, cross wall i
of D there and back, and return.  Pairs of atoms with common endpoints
give the defining relations at this combinatorial level.

Words are sequences of signed directed edges.  The crossing
homomorphism counts signed crossings per hyperplane; it kills every
relation, so it separates words with distinct images.  A small
rewriting search (free cancellation plus atom swaps) proves word
equalities up to a depth bound; it never claims a false equality.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum

from .chambers import ChamberGraph, walls
from .errors import (
    BaseMismatch,
    MissingEdgeAssignment,
    NonComposable,
)
from .galleries import (
    BoundaryContactWarning,
    PositivePath,
    atoms,
    path_touches_boundary,
)

DEFAULT_ATOMS_PER_CHAMBER = 10**6


@dataclass(frozen=True)
class GroupoidWord:
    """A base chamber plus signed edge letters (edge id, +1 or -1)."""

    base: int
    letters: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Pi1Generator:
    atom: PositivePath
    wall: int
    loop: GroupoidWord


@dataclass(frozen=True)
class Relation:
    """Two atoms with equal endpoints and equal length."""

    p: PositivePath
    q: PositivePath


class GroupoidEquality(Enum):
    PROVEN_EQUAL = "proven-equal"
    UNKNOWN = "unknown"


def word_of_path(path: PositivePath) -> GroupoidWord:
    return GroupoidWord(path.source, tuple((eid, 1) for eid in path.edges))


def word_inverse(graph: ChamberGraph, word: GroupoidWord) -> GroupoidWord:
    end = word_end(graph, word)
    return GroupoidWord(end, tuple((eid, -s) for eid, s in reversed(word.letters)))


def word_concat(graph: ChamberGraph, first: GroupoidWord, second: GroupoidWord) -> GroupoidWord:
    if word_end(graph, first) != second.base:
        raise NonComposable("word endpoints do not meet")
    return GroupoidWord(first.base, first.letters + second.letters)


def word_end(graph: ChamberGraph, word: GroupoidWord) -> int:
    """Endpoint of the word; raises NonComposable on a broken chain."""
    at = graph.chamber(word.base).id
    for eid, sign in word.letters:
        if not 0 <= eid < len(graph.edges):
            raise NonComposable(f"no edge {eid} in this graph")
        edge = graph.edges[eid]
        tail, head = (edge.source, edge.target) if sign == 1 else (edge.target, edge.source)
        if tail != at:
            raise NonComposable(f"letter ({eid}, {sign}) starts at {tail}, word is at {at}")
        at = head
    return at


def base_chamber(graph: ChamberGraph) -> int:
    """The seed chamber; for central arrangements of positive roots it is
    the all-positive chamber."""
    return graph.chamber(0).id


def loop_word(graph: ChamberGraph, atom: PositivePath, wall: int) -> GroupoidWord:
    """word(atom) e_i f_i word(atom)^{-1} around the given wall."""
    end = atom.source
    for eid in atom.edges:
        end = graph.edges[eid].target
    out = graph.edge_across(end, wall)
    if out is None:
        raise NonComposable(f"hyperplane {wall} is not a wall of chamber {end}")
    back = graph.edge_across(out.target, wall)
    letters = tuple((eid, 1) for eid in atom.edges)
    letters += ((out.id, 1), (back.id, 1))
    letters += tuple((eid, -1) for eid in reversed(atom.edges))
    return GroupoidWord(atom.source, letters)


def generators(graph: ChamberGraph, max_atoms_per_chamber: int = DEFAULT_ATOMS_PER_CHAMBER) -> list[Pi1Generator]:
    """One loop per (atom from the base, wall of its endpoint), in order.

    Chambers are visited by id, atoms lexicographically, walls in
    increasing hyperplane index.  In windowed graphs atoms touching a
    boundary chamber are skipped with a warning.  Duplicate group
    elements are not detected or removed.
    """
    base = base_chamber(graph)
    out = []
    skipped = 0
    for chamber in graph.chambers:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", BoundaryContactWarning)
            chamber_atoms = atoms(graph, base, chamber.id, cap=max_atoms_per_chamber)
        for atom in chamber_atoms:
            if graph.arrangement.is_affine and path_touches_boundary(graph, atom):
                skipped += 1
                continue
            for wall in walls(graph, chamber.id):
                out.append(Pi1Generator(atom, wall, loop_word(graph, atom, wall)))
    if skipped:
        warnings.warn(
            f"skipped {skipped} atoms touching the window boundary",
            BoundaryContactWarning,
            stacklevel=2,
        )
    return out


def relations(graph: ChamberGraph, length_cap: int | None = None) -> list[Relation]:
    """All unordered pairs of distinct atoms over ordered chamber pairs.

    A pair enters when the common atom length is within the cap.  The
    same unordered chamber pair appears in both orientations.
    """
    out = []
    ids = [c.id for c in graph.chambers]
    for source in ids:
        dist_atoms = _atoms_by_target(graph, source)
        for target in ids:
            if source == target:
                continue
            found = dist_atoms.get(target, [])
            if len(found) < 2:
                continue
            if length_cap is not None and len(found[0].edges) > length_cap:
                continue
            for i in range(len(found)):
                for j in range(i + 1, len(found)):
                    out.append(Relation(found[i], found[j]))
    return out


def _atoms_by_target(graph: ChamberGraph, source: int) -> dict[int, list[PositivePath]]:
    out = {}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BoundaryContactWarning)
        for chamber in graph.chambers:
            out[chamber.id] = atoms(graph, source, chamber.id)
    return out


def crossing_homomorphism(graph: ChamberGraph, word: GroupoidWord) -> tuple[int, ...]:
    """Signed crossing count per hyperplane; kills all relations."""
    word_end(graph, word)
    counts = [0] * len(graph.arrangement.hyperplanes)
    for eid, sign in word.letters:
        counts[graph.edges[eid].hyperplane] += sign
    return tuple(counts)


@dataclass(frozen=True)
class CheckReport:
    checked: int
    failures: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def _fold(assignment, path: PositivePath):
    """Compose assigned elements along a path, later edges acting last."""
    values = [assignment[eid] for eid in path.edges]
    out = values[0]
    for v in values[1:]:
        out = v * out
    return out


def check_representation(graph: ChamberGraph, assignment, rels) -> CheckReport:
    """Evaluate each relation in a finite group of invertible elements.

    ``assignment`` maps every directed edge id to a group element (for
    example a Perm); elements multiply with ``*``.  Returns the indices
    of the relations whose two sides disagree.
    """
    for edge in graph.edges:
        if edge.id not in assignment:
            raise MissingEdgeAssignment(f"edge {edge.id} has no assigned element")
    failures = []
    for index, rel in enumerate(rels):
        if _fold(assignment, rel.p) != _fold(assignment, rel.q):
            failures.append(index)
    return CheckReport(len(rels), tuple(failures))


def _cancellations(letters):
    for i in range(len(letters) - 1):
        (e1, s1), (e2, s2) = letters[i], letters[i + 1]
        if e1 == e2 and s1 == -s2:
            yield letters[:i] + letters[i + 2 :]


def _swaps(letters, patterns):
    for old, new in patterns:
        width = len(old)
        if width == 0 or width > len(letters):
            continue
        for i in range(len(letters) - width + 1):
            if letters[i : i + width] == old:
                yield letters[:i] + new + letters[i + width :]


def _relation_patterns(rels):
    patterns = []
    for rel in rels:
        p = tuple((eid, 1) for eid in rel.p.edges)
        q = tuple((eid, 1) for eid in rel.q.edges)
        pinv = tuple((eid, -1) for eid in reversed(rel.p.edges))
        qinv = tuple((eid, -1) for eid in reversed(rel.q.edges))
        patterns += [(p, q), (q, p), (pinv, qinv), (qinv, pinv)]
    return patterns


def equal_in_groupoid(
    graph: ChamberGraph,
    rels,
    first: GroupoidWord,
    second: GroupoidWord,
    depth: int,
) -> GroupoidEquality:
    """Bounded two-sided rewriting search; never a false PROVEN_EQUAL.

    Rewrites are free cancellation of adjacent inverse letters and
    replacement of one relation side by the other (either orientation,
    or both inverted).  Each side is expanded up to ``depth`` rewrites.
    """
    if first.base != second.base:
        raise BaseMismatch(f"bases {first.base} and {second.base} differ")
    if word_end(graph, first) != word_end(graph, second):
        raise BaseMismatch("word endpoints differ")
    patterns = _relation_patterns(rels)
    seen = ({first.letters}, {second.letters})
    frontier = ([first.letters], [second.letters])
    if first.letters in seen[1]:
        return GroupoidEquality.PROVEN_EQUAL
    for _ in range(depth):
        progressed = False
        for side in (0, 1):
            fresh = []
            for letters in frontier[side]:
                for rewritten in list(_cancellations(letters)) + list(_swaps(letters, patterns)):
                    if rewritten in seen[1 - side]:
                        return GroupoidEquality.PROVEN_EQUAL
                    if rewritten not in seen[side]:
                        seen[side].add(rewritten)
                        fresh.append(rewritten)
            frontier = (fresh, frontier[1]) if side == 0 else (frontier[0], fresh)
            progressed = progressed or bool(fresh)
        if not progressed:
            break
    return GroupoidEquality.UNKNOWN


def word_to_json(word: GroupoidWord) -> dict:
    return {"base": word.base, "letters": [[eid, sign] for eid, sign in word.letters]}


def word_from_json(obj: dict) -> GroupoidWord:
    return GroupoidWord(obj["base"], tuple((eid, sign) for eid, sign in obj["letters"]))
