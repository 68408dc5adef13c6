"""Arc diagrams on a line of nodes, the four diagram families, and symmetry.

An arc diagram consists of n nodes, labelled 1..n from left to right, and a
set of arcs (l, r) joining node l to a node r further right.  Throughout this
package every diagram obeys two structural rules:

  * no arc joins adjacent nodes (r >= l + 2), and
  * every node is the left endpoint of at most one arc and the right
    endpoint of at most one arc.

Under these rules an arc set is a disjoint union of strictly increasing
chains, so a diagram encodes a set partition of {1..n} whose blocks contain
no two consecutive integers: each block of size >= 2 appears as the chain of
arcs joining its consecutive elements, and isolated nodes are singleton
blocks.  The four families are carved out of this universe:

  NC_MATCHING  noncrossing, every node in at most one arc
  MATCHING     every node in at most one arc, crossings allowed
  MOTZKIN      noncrossing, chains allowed
  BELL         everything (all partitions without consecutive integers)

A diagram is symmetric when it is fixed by the reverse complement, the
relabelling i -> n+1-i.  For the partition families this is the same as the
partition being self-complementary, and the check here is performed on the
block structure (the definitional form) rather than on raw arc sets.

Node indices are 1-based everywhere.  All operations are pure functions of
immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable


class DiagramFamily(Enum):
    """The four arc diagram families, smallest to largest."""

    NC_MATCHING = "nc-matching"
    MATCHING = "matching"
    MOTZKIN = "motzkin"
    BELL = "bell"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ArcDiagram:
    """n nodes on a line plus a set of arcs, stored sorted by (left, right).

    The constructor normalises the arc order and rejects duplicates, but does
    not enforce the structural rules; use :func:`validate` for that.  Equality
    and hashing follow (n, arcs).
    """

    n: int
    arcs: tuple[tuple[int, int], ...] = field(default=())

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        arc_list = sorted((int(l), int(r)) for l, r in arcs)
        for i in range(1, len(arc_list)):
            if arc_list[i] == arc_list[i - 1]:
                raise ValueError(f"duplicate arc {arc_list[i]}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "arcs", tuple(arc_list))

    def __str__(self) -> str:
        return format_diagram(self)


def validate(diagram: ArcDiagram) -> bool:
    """True iff the diagram satisfies all structural invariants.

    Checks: n >= 0, arcs within 1..n, no arc between adjacent nodes, and no
    node used twice as a left endpoint or twice as a right endpoint.
    """
    if diagram.n < 0:
        return False
    lefts = set()
    rights = set()
    for l, r in diagram.arcs:
        if not (1 <= l < r <= diagram.n):
            return False
        if r - l < 2:
            return False
        if l in lefts or r in rights:
            return False
        lefts.add(l)
        rights.add(r)
    return True


def has_crossing(diagram: ArcDiagram) -> bool:
    """True iff two arcs (a,b), (c,d) interleave as a < c < b < d."""
    arcs = diagram.arcs
    for i, (a, b) in enumerate(arcs):
        for c, d in arcs[i + 1 :]:
            if c >= b:
                break
            # arcs are sorted, so a <= c; shared endpoints do not cross
            if a < c < b < d:
                return True
    return False


def is_matching(diagram: ArcDiagram) -> bool:
    """True iff every node belongs to at most one arc."""
    seen = set()
    for arc in diagram.arcs:
        for v in arc:
            if v in seen:
                return False
            seen.add(v)
    return True


def in_family(diagram: ArcDiagram, family: DiagramFamily) -> bool:
    """Membership predicate for a validated diagram.

    BELL accepts every valid diagram; MOTZKIN additionally forbids crossings;
    MATCHING requires node degree <= 1; NC_MATCHING requires both.
    """
    if family is DiagramFamily.BELL:
        return True
    if family is DiagramFamily.MOTZKIN:
        return not has_crossing(diagram)
    if family is DiagramFamily.MATCHING:
        return is_matching(diagram)
    return is_matching(diagram) and not has_crossing(diagram)


def reverse_complement(diagram: ArcDiagram) -> ArcDiagram:
    """Mirror the diagram: each arc (i, j) becomes (n+1-j, n+1-i)."""
    n = diagram.n
    return ArcDiagram(n, ((n + 1 - r, n + 1 - l) for l, r in diagram.arcs))


def components(diagram: ArcDiagram) -> list[tuple[int, ...]]:
    """The arc-connected components, as sorted blocks of a partition of [n].

    Nodes joined by a chain of arcs form one block; isolated nodes are
    singleton blocks.  Blocks are returned sorted by their minimum.
    """
    succ = {l: r for l, r in diagram.arcs}
    has_pred = {r for _, r in diagram.arcs}
    blocks = []
    for v in range(1, diagram.n + 1):
        if v in has_pred:
            continue
        block = [v]
        while block[-1] in succ:
            block.append(succ[block[-1]])
        blocks.append(tuple(block))
    return blocks


def complement_partition(
    blocks: Iterable[Iterable[int]], n: int
) -> list[tuple[int, ...]]:
    """Replace j by n+1-j inside every block of a partition of [n]."""
    out = [tuple(sorted(n + 1 - j for j in block)) for block in blocks]
    return sorted(out)


def is_symmetric(diagram: ArcDiagram) -> bool:
    """True iff the diagram is fixed by the reverse complement.

    Decided on the block structure: the underlying partition must equal its
    complement.  For validated diagrams this coincides with invariance of the
    arc set, since each block has exactly one chain encoding.
    """
    blocks = sorted(components(diagram))
    return complement_partition(blocks, diagram.n) == blocks


def isolated_count(diagram: ArcDiagram) -> int:
    """Number of nodes that belong to no arc."""
    touched = set()
    for arc in diagram.arcs:
        touched.update(arc)
    return diagram.n - len(touched)


def format_diagram(diagram: ArcDiagram) -> str:
    """Text encoding ``n;l1-r1,l2-r2,...`` with arcs in canonical order.

    The empty arc set encodes as e.g. ``5;``.
    """
    body = ",".join(f"{l}-{r}" for l, r in diagram.arcs)
    return f"{diagram.n};{body}"


def parse_diagram(text: str) -> ArcDiagram:
    """Parse the ``n;l1-r1,...`` encoding produced by :func:`format_diagram`.

    Raises ValueError on malformed input or if the parsed diagram fails
    :func:`validate`.
    """
    head, sep, body = text.strip().partition(";")
    if not sep:
        raise ValueError(f"missing ';' in diagram encoding: {text!r}")
    try:
        n = int(head)
    except ValueError:
        raise ValueError(f"bad node count in diagram encoding: {head!r}") from None
    arcs = []
    if body:
        for part in body.split(","):
            l, sep, r = part.partition("-")
            if not sep:
                raise ValueError(f"bad arc {part!r} in diagram encoding")
            try:
                arcs.append((int(l), int(r)))
            except ValueError:
                raise ValueError(f"bad arc {part!r} in diagram encoding") from None
    diagram = ArcDiagram(n, arcs)
    if not validate(diagram):
        raise ValueError(f"invalid diagram: {text!r}")
    return diagram
