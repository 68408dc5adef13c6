"""Exhaustive generation of the four diagram families: the counting oracle.

Everything here counts by literally generating diagrams one at a time, with
family-specific pruning:

  * matchings extend node by node, pairing each new left endpoint with every
    admissible free node further right;
  * the noncrossing families keep a stack of open arcs (an arc may only be
    closed while it is the innermost open one);
  * partition diagrams grow restricted-growth style, attaching each node to
    an existing block whose maximum is at most node-2, or starting a block.

The module offers two views of the same generation trees.  The streaming
view, :func:`enumerate_diagrams`, yields :class:`ArcDiagram` values in a
deterministic order and is intended for inspection, round-trip tests and the
CLI.  The tallying view, :func:`census`, walks the tree once and records
every aggregate needed by the verifiers (totals, symmetric totals, and the
histograms of isolated nodes and arc-connected components); its results are
cached per (family, n).  The two views are cross-checked against each other
in the test suite.

Counting by brute force is intentionally independent of the recurrences in
:mod:`arcdiagrams.sequences`; agreement between the two is the central
correctness check of this package.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator

from .diagrams import ArcDiagram, DiagramFamily, is_symmetric

DEFAULT_CAPS = {
    DiagramFamily.NC_MATCHING: 20,
    DiagramFamily.MATCHING: 16,
    DiagramFamily.MOTZKIN: 20,
    DiagramFamily.BELL: 16,
}

#: Environment variable overriding the per-family default caps (single int).
CAP_ENV_VAR = "ARCDIAG_ORACLE_CAP"


class CapExceededError(ValueError):
    """Requested n exceeds the configured enumeration cap."""


class StatisticKind(Enum):
    """Per-diagram statistics the oracle can tally."""

    ISOLATED_NODES = "isolated-nodes"
    COMPONENTS_MINUS_ONE = "components-minus-one"
    NONE = "none"


@dataclass(frozen=True)
class FamilyCensus:
    """All tallies from one exhaustive pass over a family at a given n.

    Histogram keys with value zero are omitted.
    """

    family: DiagramFamily
    n: int
    total: int
    symmetric: int
    isolated: dict[int, int]
    isolated_symmetric: dict[int, int]
    components_minus_one: dict[int, int]
    components_minus_one_symmetric: dict[int, int]


def effective_cap(family: DiagramFamily, cap: int | None = None) -> int:
    """The enumeration cap in force: explicit arg, else env var, else default."""
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV_VAR)
    if env:
        return int(env)
    return DEFAULT_CAPS[family]


def _check_cap(family: DiagramFamily, n: int, cap: int | None) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    limit = effective_cap(family, cap)
    if n > limit:
        raise CapExceededError(
            f"n={n} exceeds the enumeration cap {limit} for family "
            f"{family.value}; raise the cap or use the recurrence instead"
        )


# ---------------------------------------------------------------------------
# Streaming generators (reference implementations, deterministic order)
# ---------------------------------------------------------------------------


def _stream_matching(n: int) -> Iterator[ArcDiagram]:
    # At the smallest unresolved node: leave it isolated first, then pair it
    # with every free node at distance >= 2, in increasing order.
    partner = [0] * (n + 2)
    arcs: list[tuple[int, int]] = []

    def rec(i: int) -> Iterator[ArcDiagram]:
        while i <= n and partner[i]:
            i += 1
        if i > n:
            yield ArcDiagram(n, arcs)
            return
        yield from rec(i + 1)
        for j in range(i + 2, n + 1):
            if not partner[j]:
                partner[i] = j
                partner[j] = i
                arcs.append((i, j))
                yield from rec(i + 1)
                arcs.pop()
                partner[i] = 0
                partner[j] = 0

    return rec(1)


def _stream_noncrossing(n: int, chains: bool) -> Iterator[ArcDiagram]:
    # Stack discipline: only the innermost open arc may be closed, and only
    # two or more nodes past its left endpoint.  Choice order at each node:
    # leave isolated, close, close-and-open (chains only), open.
    stack: list[int] = []
    arcs: list[tuple[int, int]] = []

    def rec(i: int) -> Iterator[ArcDiagram]:
        if i > n:
            if not stack:
                yield ArcDiagram(n, arcs)
            return
        left = n - i  # nodes strictly after i
        depth = len(stack)
        if depth <= left:
            yield from rec(i + 1)
        if depth and stack[-1] <= i - 2:
            l = stack.pop()
            arcs.append((l, i))
            yield from rec(i + 1)
            if chains and i + 2 <= n and depth <= left:
                stack.append(i)
                yield from rec(i + 1)
                stack.pop()
            arcs.pop()
            stack.append(l)
        if i + 2 <= n and depth + 1 <= left:
            stack.append(i)
            yield from rec(i + 1)
            stack.pop()

    return rec(1)


def _stream_bell(n: int) -> Iterator[ArcDiagram]:
    # Restricted growth: node i joins an existing block whose maximum is
    # <= i-2 (blocks tried in creation order) or starts a new block.
    blocks: list[list[int]] = []

    def rec(i: int) -> Iterator[ArcDiagram]:
        if i > n:
            arcs = [
                (blk[t], blk[t + 1])
                for blk in blocks
                for t in range(len(blk) - 1)
            ]
            yield ArcDiagram(n, arcs)
            return
        for blk in blocks:
            if blk[-1] != i - 1:
                blk.append(i)
                yield from rec(i + 1)
                blk.pop()
        blocks.append([i])
        yield from rec(i + 1)
        blocks.pop()

    return rec(1)


def enumerate_diagrams(
    family: DiagramFamily,
    n: int,
    symmetric_only: bool = False,
    cap: int | None = None,
) -> Iterator[ArcDiagram]:
    """Yield every diagram of the family with n nodes, each exactly once.

    The order is deterministic (depth-first over nodes 1..n with the choice
    orders documented on the per-family generators).  With
    ``symmetric_only`` the stream is filtered through
    :func:`arcdiagrams.diagrams.is_symmetric`.  Raises
    :class:`CapExceededError` when n exceeds the cap (see
    :func:`effective_cap`).
    """
    _check_cap(family, n, cap)
    if family is DiagramFamily.MATCHING:
        stream = _stream_matching(n)
    elif family is DiagramFamily.NC_MATCHING:
        stream = _stream_noncrossing(n, chains=False)
    elif family is DiagramFamily.MOTZKIN:
        stream = _stream_noncrossing(n, chains=True)
    else:
        stream = _stream_bell(n)
    if symmetric_only:
        return (d for d in stream if is_symmetric(d))
    return stream


# ---------------------------------------------------------------------------
# Census: one fast tallying pass per (family, n)
# ---------------------------------------------------------------------------


def _census_matching(n: int) -> tuple[int, int, list[int], list[int]]:
    """Totals and isolated-node histograms (all, symmetric) for matchings.

    Components are recovered later: a matching with i isolated nodes has
    (n - i) / 2 arcs and hence n - (n - i)/2 blocks.
    """
    partner = [0] * (n + 2)
    iso_all = [0] * (n + 1)
    iso_sym = [0] * (n + 1)
    total = 0
    sym_total = 0

    def symmetric() -> bool:
        for v in range(1, n + 1):
            q = partner[n + 1 - v]
            if partner[v]:
                if q != n + 1 - partner[v]:
                    return False
            elif q:
                return False
        return True

    def rec(i: int, iso: int) -> None:
        nonlocal total, sym_total
        while i <= n and partner[i]:
            i += 1
        if i > n:
            total += 1
            iso_all[iso] += 1
            if symmetric():
                sym_total += 1
                iso_sym[iso] += 1
            return
        rec(i + 1, iso + 1)
        for j in range(i + 2, n + 1):
            if not partner[j]:
                partner[i] = j
                partner[j] = i
                rec(i + 1, iso)
                partner[i] = 0
                partner[j] = 0

    rec(1, 0)
    return total, sym_total, iso_all, iso_sym


def _census_noncrossing(
    n: int, chains: bool
) -> tuple[int, int, list[int], list[int], list[int], list[int]]:
    """Totals plus isolated and component histograms for the stack families."""
    rpart = [0] * (n + 2)  # rpart[l] = r for a closed arc (l, r)
    stack: list[int] = []
    iso_all = [0] * (n + 1)
    iso_sym = [0] * (n + 1)
    comp_all = [0] * (n + 1)
    comp_sym = [0] * (n + 1)
    total = 0
    sym_total = 0

    def symmetric() -> bool:
        # The mirror of arc (l, r) is (n+1-r, n+1-l); the arc set must be
        # fixed as a set, and arc counts already agree.
        for l in range(1, n + 1):
            r = rpart[l]
            if r and rpart[n + 1 - r] != n + 1 - l:
                return False
        return True

    def rec(i: int, iso: int, narcs: int) -> None:
        nonlocal total, sym_total
        if i > n:
            total += 1
            iso_all[iso] += 1
            comp = n - narcs - 1
            comp_all[comp] += 1
            if symmetric():
                sym_total += 1
                iso_sym[iso] += 1
                comp_sym[comp] += 1
            return
        left = n - i
        depth = len(stack)
        if depth <= left:
            rec(i + 1, iso + 1, narcs)
        if depth and stack[-1] <= i - 2:
            l = stack.pop()
            rpart[l] = i
            rec(i + 1, iso, narcs + 1)
            if chains and i + 2 <= n and depth <= left:
                stack.append(i)
                rec(i + 1, iso, narcs + 1)
                stack.pop()
            rpart[l] = 0
            stack.append(l)
        if i + 2 <= n and depth + 1 <= left:
            stack.append(i)
            rec(i + 1, iso, narcs)
            stack.pop()

    rec(1, 0, 0)
    return total, sym_total, iso_all, iso_sym, comp_all, comp_sym


def _census_bell(
    n: int,
) -> tuple[int, int, list[int], list[int], list[int], list[int]]:
    """Totals plus isolated and component histograms for partition diagrams."""
    assign = [0] * (n + 1)  # assign[i] = block id of node i (1-based)
    bmax = [0] * (n + 1)
    bsize = [0] * (n + 1)
    iso_all = [0] * (n + 1)
    iso_sym = [0] * (n + 1)
    comp_all = [0] * (n + 1)
    comp_sym = [0] * (n + 1)
    total = 0
    sym_total = 0

    # Scratch for the symmetry check; "stamp" marks which entries are
    # current so the relabelling map never needs a full reset.
    relab = [0] * (n + 1)
    relab_stamp = [0] * (n + 1)
    stamp = 0

    def symmetric() -> bool:
        # The partition is self-complementary iff relabelling the reversed
        # block-id sequence by first occurrence reproduces the sequence.
        nonlocal stamp
        stamp += 1
        nxt = 0
        for i in range(1, n + 1):
            b = assign[n + 1 - i]
            if relab_stamp[b] != stamp:
                relab_stamp[b] = stamp
                relab[b] = nxt
                nxt += 1
            if relab[b] != assign[i]:
                return False
        return True

    def rec(i: int, nb: int, singles: int) -> None:
        nonlocal total, sym_total
        if i > n:
            total += 1
            iso_all[singles] += 1
            comp_all[nb - 1] += 1
            if symmetric():
                sym_total += 1
                iso_sym[singles] += 1
                comp_sym[nb - 1] += 1
            return
        for b in range(nb):
            if bmax[b] != i - 1:
                oldmax = bmax[b]
                bmax[b] = i
                assign[i] = b
                if bsize[b] == 1:
                    bsize[b] = 2
                    rec(i + 1, nb, singles - 1)
                    bsize[b] = 1
                else:
                    bsize[b] += 1
                    rec(i + 1, nb, singles)
                    bsize[b] -= 1
                bmax[b] = oldmax
        bmax[nb] = i
        bsize[nb] = 1
        assign[i] = nb
        rec(i + 1, nb + 1, singles + 1)

    rec(1, 0, 0)
    return total, sym_total, iso_all, iso_sym, comp_all, comp_sym


def _hist(values: list[int]) -> dict[int, int]:
    return {k: v for k, v in enumerate(values) if v}


@lru_cache(maxsize=None)
def _census_cached(family: DiagramFamily, n: int) -> FamilyCensus:
    if n == 0:
        # The single empty diagram is symmetric and has no components; the
        # components-minus-one statistic is undefined for it, so that
        # histogram stays empty.
        return FamilyCensus(family, 0, 1, 1, {0: 1}, {0: 1}, {}, {})
    if family is DiagramFamily.MATCHING:
        total, sym, iso_all, iso_sym = _census_matching(n)
        # i isolated nodes -> (n - i)/2 arcs -> n - (n - i)/2 components
        comp_all = [0] * (n + 1)
        comp_sym = [0] * (n + 1)
        for i, v in enumerate(iso_all):
            if v:
                comp_all[n - (n - i) // 2 - 1] += v
        for i, v in enumerate(iso_sym):
            if v:
                comp_sym[n - (n - i) // 2 - 1] += v
    elif family is DiagramFamily.BELL:
        total, sym, iso_all, iso_sym, comp_all, comp_sym = _census_bell(n)
    else:
        total, sym, iso_all, iso_sym, comp_all, comp_sym = _census_noncrossing(
            n, chains=family is DiagramFamily.MOTZKIN
        )
    return FamilyCensus(
        family,
        n,
        total,
        sym,
        _hist(iso_all),
        _hist(iso_sym),
        _hist(comp_all),
        _hist(comp_sym),
    )


def census(family: DiagramFamily, n: int, cap: int | None = None) -> FamilyCensus:
    """All oracle tallies for (family, n), computed once and cached."""
    _check_cap(family, n, cap)
    return _census_cached(family, n)


def count(
    family: DiagramFamily,
    n: int,
    symmetric_only: bool = False,
    cap: int | None = None,
) -> int:
    """Number of diagrams of the family with n nodes, by brute force."""
    c = census(family, n, cap)
    return c.symmetric if symmetric_only else c.total


def count_by_statistic(
    family: DiagramFamily,
    n: int,
    symmetric_only: bool = False,
    stat: StatisticKind = StatisticKind.ISOLATED_NODES,
    cap: int | None = None,
) -> dict[int, int]:
    """Histogram of a per-diagram statistic over the (possibly symmetric-only)
    family at n.  Absent keys mean zero.  ``StatisticKind.NONE`` is the
    constant-zero statistic, so the histogram is {0: count}."""
    c = census(family, n, cap)
    if stat is StatisticKind.NONE:
        total = c.symmetric if symmetric_only else c.total
        return {0: total} if total else {}
    if stat is StatisticKind.ISOLATED_NODES:
        return dict(c.isolated_symmetric if symmetric_only else c.isolated)
    return dict(
        c.components_minus_one_symmetric
        if symmetric_only
        else c.components_minus_one
    )
