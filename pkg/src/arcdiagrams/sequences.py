"""Recurrences for the counting sequences of the four diagram families.

All values are exact Python ints.  Eight sequences are covered, each with a
fixed first index (its *offset*):

  ==========  ======  =======================================================
  id          offset  counts
  ==========  ======  =======================================================
  S           0       noncrossing matchings, no adjacent arcs (A004148)
  R           0       symmetric noncrossing matchings (A088518)
  P           1       matchings with crossings, no adjacent arcs (A170941)
  Q           1       symmetric matchings with crossings
  M           0       Motzkin diagrams / Motzkin numbers, shifted (A001006)
  L           0       symmetric Motzkin diagrams
  A005773     0       Motzkin left factors; equals L at odd indices
  A           1       symmetric partition diagrams (A080107)
  BELL        0       Bell numbers (A000110); family (d) at n has BELL n-1
  FIB         1       Fibonacci numbers, F_1 = F_2 = 1
  ==========  ======  =======================================================

The recurrences:

  S_n = S_{n-1} + sum_{j=3}^{n} S_{j-2} S_{n-j}             (n >= 3)
  R_n = 2 R_{n-2} + sum_{j=3}^{floor(n/2)} S_{j-2} R_{n-2j}  (n >= 6)
  P_n = P_{n-1} + (n-1) P_{n-2} - P_{n-3} + P_{n-4}          (n >= 5)
  M_n = M_{n-1} + sum_{j=3}^{n} M_{j-2} M_{n-j+1}            (n >= 3)
  L_n = 2 L_{n-2} + sum_{j=3}^{floor((n+1)/2)} M_{j-2} L_{n+2-2j}  (n > 4)
  a_n = sum_{j=0}^{n-1} M_{j+1} a_{n-1-j},  also  a_{n+1} = 3 a_n - M_n

Q and A are row sums of the triangles in :mod:`arcdiagrams.triangles`
(Q at odd index uses Q_{2n+1} = Q_{2n} + Q_{2n-1}).  Every sequence here is
checked against the brute-force oracle in the test suite.
"""

from __future__ import annotations

from enum import Enum

from .diagrams import DiagramFamily
from .reports import CheckReport


class SequenceId(Enum):
    """Identifiers for the exported sequences; see the module table."""

    S = "s"
    R = "r"
    P = "p"
    Q = "q"
    M = "m"
    L = "l"
    A005773 = "a005773"
    A = "a"
    BELL = "bell"
    FIB = "fib"


#: First index carried by each sequence.
OFFSETS = {
    SequenceId.S: 0,
    SequenceId.R: 0,
    SequenceId.P: 1,
    SequenceId.Q: 1,
    SequenceId.M: 0,
    SequenceId.L: 0,
    SequenceId.A005773: 0,
    SequenceId.A: 1,
    SequenceId.BELL: 0,
    SequenceId.FIB: 1,
}

#: OEIS cross-references where one exists (Q and L have none).
OEIS_IDS = {
    SequenceId.S: "A004148",
    SequenceId.R: "A088518",
    SequenceId.P: "A170941",
    SequenceId.M: "A001006",
    SequenceId.A005773: "A005773",
    SequenceId.A: "A080107",
    SequenceId.BELL: "A000110",
}


def seq_S(max_n: int) -> list[int]:
    """[S_0, ..., S_max_n]."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    s = [1, 1, 1][: max_n + 1]
    for n in range(3, max_n + 1):
        s.append(s[n - 1] + sum(s[j - 2] * s[n - j] for j in range(3, n + 1)))
    return s


def seq_R(max_n: int) -> list[int]:
    """[R_0, ..., R_max_n]."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    s = seq_S(max(max_n // 2, 0))
    r = [1, 1, 1, 2, 2, 4][: max_n + 1]
    for n in range(6, max_n + 1):
        r.append(
            2 * r[n - 2]
            + sum(s[j - 2] * r[n - 2 * j] for j in range(3, n // 2 + 1))
        )
    return r


def seq_P(max_n: int) -> list[int]:
    """[P_1, ..., P_max_n]."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    p = [1, 1, 2, 5][:max_n]
    for n in range(5, max_n + 1):
        # list is 0-based at P_1, so P_n sits at index n-1
        p.append(p[-1] + (n - 1) * p[-2] - p[-3] + p[-4])
    return p


def seq_M(max_n: int) -> list[int]:
    """[M_0, ..., M_max_n]; M_0 = 1 by convention, M_n counts diagrams for
    n >= 1 (the Motzkin number for n-1 nodes' worth of steps)."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    m = [1, 1, 1][: max_n + 1]
    for n in range(3, max_n + 1):
        m.append(m[n - 1] + sum(m[j - 2] * m[n - j + 1] for j in range(3, n + 1)))
    return m


def seq_L(max_n: int) -> list[int]:
    """[L_0, ..., L_max_n]."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    m = seq_M(max(0, (max_n + 1) // 2))
    l = [1, 1, 1, 2, 2][: max_n + 1]
    for n in range(5, max_n + 1):
        l.append(
            2 * l[n - 2]
            + sum(
                m[j - 2] * l[n + 2 - 2 * j] for j in range(3, (n + 1) // 2 + 1)
            )
        )
    return l


def seq_a(max_n: int) -> list[int]:
    """[a_0, ..., a_max_n] by the convolution a_n = sum M_{j+1} a_{n-1-j}.

    The closed three-term form a_{n+1} = 3 a_n - M_n and the identity
    a_n = L_{2n-1} are verified separately (:func:`verify_a_formulas`).
    """
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    m = seq_M(max_n)
    a = [1]
    for n in range(1, max_n + 1):
        a.append(sum(m[j + 1] * a[n - 1 - j] for j in range(n)))
    return a


def seq_bell(max_n: int) -> list[int]:
    """[Bell_0, ..., Bell_max_n] via the Bell triangle."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    bells = [1]
    row = [1]
    for _ in range(max_n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
        bells.append(row[0])
    return bells[: max_n + 1]


def seq_fib(max_n: int) -> list[int]:
    """[F_1, ..., F_max_n] with F_1 = F_2 = 1."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    f = [1, 1][:max_n]
    while len(f) < max_n:
        f.append(f[-1] + f[-2])
    return f


def seq_Q(max_n: int) -> list[int]:
    """[Q_1, ..., Q_max_n]; even entries are row sums of the Q triangle,
    odd entries follow Q_{2n+1} = Q_{2n} + Q_{2n-1} with Q_1 = 1."""
    from .triangles import triangle_Q

    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    even = triangle_Q(max(1, max_n // 2)).row_sums()  # even[r-1] = Q_{2r}
    q = [1]
    for n in range(2, max_n + 1):
        if n % 2 == 0:
            q.append(even[n // 2 - 1])
        else:
            q.append(q[n - 2] + q[n - 3])  # Q_n = Q_{n-1} + Q_{n-2}, n odd
    return q


def seq_A(max_n: int) -> list[int]:
    """[A_1, ..., A_max_n]: row sums of the A triangle."""
    from .triangles import triangle_A

    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    return triangle_A(max_n).row_sums()


_GENERATORS = {
    SequenceId.S: seq_S,
    SequenceId.R: seq_R,
    SequenceId.P: seq_P,
    SequenceId.Q: seq_Q,
    SequenceId.M: seq_M,
    SequenceId.L: seq_L,
    SequenceId.A005773: seq_a,
    SequenceId.A: seq_A,
    SequenceId.BELL: seq_bell,
    SequenceId.FIB: seq_fib,
}


def seq_values(seq: SequenceId, max_n: int) -> list[int]:
    """Values from the sequence's offset through max_n, as a list."""
    return _GENERATORS[seq](max_n)


def seq_value(seq: SequenceId, n: int) -> int:
    """The n-th term of the sequence under the documented offsets."""
    offset = OFFSETS[seq]
    if n < offset:
        raise ValueError(f"sequence {seq.name} starts at n={offset}, got n={n}")
    return seq_values(seq, n)[n - offset]


def family_count(family: DiagramFamily, n: int, symmetric_only: bool = False) -> int:
    """Recurrence-side count of a family at n (the counterpart of the oracle).

    Maps (family, symmetric) to the sequence that counts it: S/R for
    noncrossing matchings, P/Q for matchings, M/L for Motzkin diagrams, and
    Bell_{n-1}/A for partition diagrams.  n = 0 counts 1 in every family
    (the empty diagram, which is symmetric).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    key = (family, symmetric_only)
    seq = {
        (DiagramFamily.NC_MATCHING, False): SequenceId.S,
        (DiagramFamily.NC_MATCHING, True): SequenceId.R,
        (DiagramFamily.MATCHING, False): SequenceId.P,
        (DiagramFamily.MATCHING, True): SequenceId.Q,
        (DiagramFamily.MOTZKIN, False): SequenceId.M,
        (DiagramFamily.MOTZKIN, True): SequenceId.L,
        (DiagramFamily.BELL, True): SequenceId.A,
    }.get(key)
    if seq is not None:
        return seq_value(seq, n)
    return seq_value(SequenceId.BELL, n - 1)


def bfile_lines(seq: SequenceId, max_n: int) -> list[str]:
    """OEIS b-file lines ``n value`` from the sequence offset through max_n."""
    offset = OFFSETS[seq]
    if max_n < offset:
        raise ValueError(f"max_n must be >= {offset} for sequence {seq.name}")
    values = seq_values(seq, max_n)
    return [f"{offset + i} {v}" for i, v in enumerate(values)]


# ---------------------------------------------------------------------------
# Identity verifiers
# ---------------------------------------------------------------------------


def verify_R_parity_identities(max_n: int) -> CheckReport:
    """Check R_{2n+1} = R_{2n} + R_{2n-1} and
    R_{2n} = R_{2n-1} + R_{2n-2} - S_{n-1} for 1 <= n <= max_n."""
    if max_n < 2:
        raise ValueError("max_n must be >= 2")
    r = seq_R(2 * max_n + 1)
    s = seq_S(max_n)
    report = CheckReport("R parity identities", max_n)
    for n in range(1, max_n + 1):
        if r[2 * n + 1] != r[2 * n] + r[2 * n - 1]:
            report.failures.append(f"odd identity fails at n={n}")
        if r[2 * n] != r[2 * n - 1] + r[2 * n - 2] - s[n - 1]:
            report.failures.append(f"even identity fails at n={n}")
    return report


def verify_deutsch(max_n: int) -> CheckReport:
    """Check R_n = F_n - sum_{j=1}^{floor(n/2)-1} S_j F_{n-1-2j} for
    4 <= n <= max_n, under the frozen convention F_1 = F_2 = 1."""
    if max_n < 4:
        raise ValueError("max_n must be >= 4")
    r = seq_R(max_n)
    s = seq_S(max_n // 2)
    f = seq_fib(max_n)

    def fib(n: int) -> int:
        return f[n - 1]  # f is offset 1

    report = CheckReport(
        "Fibonacci relation for R", max_n, detail="F_1 = F_2 = 1"
    )
    for n in range(4, max_n + 1):
        total = fib(n) - sum(
            s[j] * fib(n - 1 - 2 * j) for j in range(1, n // 2)
        )
        if r[n] != total:
            report.failures.append(f"fails at n={n}: {r[n]} != {total}")
    return report


def verify_a_formulas(max_n: int) -> CheckReport:
    """Check that the convolution and three-term forms of the Motzkin
    left-factor sequence agree, and that a_n = L_{2n-1}, for n <= max_n."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    a = seq_a(max_n)
    m = seq_M(max_n)
    l = seq_L(2 * max_n - 1)
    report = CheckReport("left-factor sequence identities", max_n)
    for n in range(1, max_n + 1):
        if n < max_n and a[n + 1] != 3 * a[n] - m[n]:
            report.failures.append(f"three-term form fails at n={n}")
        if a[n] != l[2 * n - 1]:
            report.failures.append(f"a_n != L_(2n-1) at n={n}")
    return report
