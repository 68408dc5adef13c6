"""Triangles refining the matching and partition counts, with verifiers.

Three triangles are computed, all with exact int entries:

  P(n, k)   matchings (crossings allowed, no adjacent arcs) on n nodes with
            exactly k isolated nodes;
            P(n,k) = (k+1) P(n-1,k+1) + P(n-1,k-1) - P(n-2,k)      (n >= 3)

  Q(2n, k)  symmetric such matchings on 2n nodes with k isolated nodes
            (k even; rows are indexed by n);
            Q(2n,k) = (k+2) Q(2n-2,k+2) + Q(2n-2,k) + Q(2n-2,k-2)
                      - Q(2n-4,k)                                  (n >= 3)

  A(n, k)   symmetric partition diagrams on n nodes with k+1 arc-connected
            components;
            A(n,k) = k A(n-2,k) + A(n-2,k-1) + A(n-2,k-2)          (n >= 5)

Row sums reproduce the P, Q (even part) and A sequences; both facts and the
agreement with the brute-force oracle are asserted in the test suite.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .reports import CheckReport


@dataclass(frozen=True)
class TriangleTable:
    """Rows of one triangle, addressed by the node count n.

    For P and A, ``rows[i]`` holds n = i+1 and entry j of a row is k = j.
    For Q, rows exist only for even node counts (``n_step`` = 2): ``rows[i]``
    holds n = 2(i+1), and entry j is k = 2j (``k_step`` = 2).  Entries
    outside a row's support are zero; asking for a row that does not exist
    (odd n for Q, or beyond what was computed) raises ValueError.
    """

    which: str
    rows: tuple[tuple[int, ...], ...]
    k_step: int = 1
    n_step: int = 1

    @property
    def max_n(self) -> int:
        return self.n_step * len(self.rows)

    def _labels(self) -> range:
        return range(self.n_step, self.max_n + 1, self.n_step)

    def row(self, n: int) -> tuple[int, ...]:
        if n % self.n_step or not self.n_step <= n <= self.max_n:
            raise ValueError(
                f"triangle {self.which} has no row n={n} "
                f"(have n = {self.n_step}, ..., {self.max_n} step {self.n_step})"
            )
        return self.rows[n // self.n_step - 1]

    def value(self, n: int, k: int) -> int:
        """Entry at (n, k); zero outside the row's support."""
        row = self.row(n)
        if k < 0 or k % self.k_step:
            return 0
        j = k // self.k_step
        return row[j] if j < len(row) else 0

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.rows]

    def entries(self) -> list[tuple[int, int, int]]:
        """All stored (n, k, value) triples, row-major."""
        return [
            (n, j * self.k_step, v)
            for n, row in zip(self._labels(), self.rows)
            for j, v in enumerate(row)
        ]

    def to_csv(self) -> str:
        """One ``n,k,value`` line per stored entry."""
        return "\n".join(f"{n},{k},{v}" for n, k, v in self.entries()) + "\n"

    def to_tsv(self) -> str:
        """Matrix form: each line is the node count n followed by the values."""
        return (
            "\n".join(
                "\t".join([str(n)] + [str(v) for v in row])
                for n, row in zip(self._labels(), self.rows)
            )
            + "\n"
        )

    def to_json(self) -> str:
        """Array of row objects {"n": ..., "entries": [[k, value], ...]}."""
        payload = []
        for n, row in zip(self._labels(), self.rows):
            payload.append(
                {"n": n, "entries": [[j * self.k_step, v] for j, v in enumerate(row)]}
            )
        return json.dumps(payload, indent=2) + "\n"


def triangle_P(max_n: int) -> TriangleTable:
    """Rows 1..max_n of the isolated-node triangle for matchings."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    rows: list[list[int]] = [[0, 1], [0, 0, 1]]
    for n in range(3, max_n + 1):
        prev = rows[n - 2]  # row n-1
        prev2 = rows[n - 3]

        def at(row: list[int], k: int) -> int:
            return row[k] if 0 <= k < len(row) else 0

        rows.append(
            [
                (k + 1) * at(prev, k + 1) + at(prev, k - 1) - at(prev2, k)
                for k in range(n + 1)
            ]
        )
    return TriangleTable("P", tuple(tuple(r) for r in rows[:max_n]))


def triangle_Q(max_rows: int) -> TriangleTable:
    """Rows 1..max_rows of the symmetric-matching triangle; row n holds
    Q(2n, k) for even k = 0, 2, ..., 2n."""
    if max_rows < 1:
        raise ValueError("max_rows must be >= 1")
    rows: list[list[int]] = [[0, 1], [1, 1, 1]]
    for n in range(3, max_rows + 1):
        prev = rows[n - 2]
        prev2 = rows[n - 3]

        def at(row: list[int], j: int) -> int:
            return row[j] if 0 <= j < len(row) else 0

        # entry j stores k = 2j
        rows.append(
            [
                (2 * j + 2) * at(prev, j + 1)
                + at(prev, j)
                + at(prev, j - 1)
                - at(prev2, j)
                for j in range(n + 1)
            ]
        )
    return TriangleTable(
        "Q", tuple(tuple(r) for r in rows[:max_rows]), k_step=2, n_step=2
    )


def triangle_A(max_n: int) -> TriangleTable:
    """Rows 1..max_n of the component triangle for symmetric partitions."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    rows: list[list[int]] = [[1], [0, 1], [0, 1, 1], [0, 1, 1, 1]]
    for n in range(5, max_n + 1):
        prev2 = rows[n - 3]  # row n-2

        def at(k: int) -> int:
            return prev2[k] if 0 <= k < len(prev2) else 0

        rows.append([k * at(k) + at(k - 1) + at(k - 2) for k in range(n)])
    return TriangleTable("A", tuple(tuple(r) for r in rows[:max_n]))


def pentagonal_column(max_n: int) -> list[int]:
    """[Q(2(n+1), 2(n-1)) for n = 1..max_n], the near-diagonal Q column."""
    tri = triangle_Q(max_n + 1)
    return [tri.value(2 * (n + 1), 2 * (n - 1)) for n in range(1, max_n + 1)]


def verify_pentagonal(max_n: int) -> CheckReport:
    """Check the near-diagonal column a_n = Q(2(n+1), 2(n-1)) satisfies
    a_1 = 1 and a_n = a_{n-1} + 3n - 2 (the pentagonal numbers, A000326)."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    col = pentagonal_column(max_n)
    report = CheckReport("pentagonal column of Q", max_n)
    if col[0] != 1:
        report.failures.append(f"a_1 = {col[0]} != 1")
    for n in range(2, max_n + 1):
        if col[n - 1] != col[n - 2] + 3 * n - 2:
            report.failures.append(f"recurrence fails at n={n}")
        if col[n - 1] != n * (3 * n - 1) // 2:
            report.failures.append(f"closed form fails at n={n}")
    return report


def verify_q_conjecture(max_n: int = 500) -> CheckReport:
    """Compare the even symmetric-matching counts q_n = Q_{2n} (triangle row
    sums) with the conjectured five-term recurrence

        q_n = 3 q_{n-1} + 2(n-2) q_{n-2} - 2(n-2) q_{n-3} + 3 q_{n-4} - q_{n-5}

    for 6 <= n <= max_n.  The recurrence is conjectural: this reports the
    agreement range, it proves nothing.
    """
    if max_n < 6:
        raise ValueError("max_n must be >= 6")
    q = triangle_Q(max_n).row_sums()  # q[i] = Q_{2(i+1)}
    report = CheckReport("five-term recurrence for even symmetric counts", max_n)
    if q[:5] != [1, 3, 11, 43, 179]:
        report.failures.append(f"base values differ: {q[:5]}")
        return report
    agree_through = 5
    for n in range(6, max_n + 1):
        predicted = (
            3 * q[n - 2]
            + 2 * (n - 2) * q[n - 3]
            - 2 * (n - 2) * q[n - 4]
            + 3 * q[n - 5]
            - q[n - 6]
        )
        if q[n - 1] != predicted:
            report.failures.append(f"disagrees at n={n}")
            break
        agree_through = n
    report.detail = f"agrees for 6..{agree_through}"
    return report
