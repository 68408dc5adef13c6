"""Motzkin paths and their left factors, encoded as strings over U, H, D.

A step string describes a lattice path starting at height 0: U goes up one,
H stays level, D goes down one.  A *Motzkin path* never dips below height 0
and ends at height 0; a *left factor* (prefix of some Motzkin path) never
dips below 0 but may end at any nonnegative height.
"""

from __future__ import annotations

UP = "U"
LEVEL = "H"
DOWN = "D"

_DELTA = {UP: 1, LEVEL: 0, DOWN: -1}


def heights(steps: str) -> list[int]:
    """Heights after each step; len(steps) entries, starting point excluded."""
    out = []
    h = 0
    for s in steps:
        try:
            h += _DELTA[s]
        except KeyError:
            raise ValueError(f"bad step {s!r}; expected one of U, H, D") from None
        out.append(h)
    return out


def final_height(steps: str) -> int:
    """Ending height of the path (0 for the empty path)."""
    return steps.count(UP) - steps.count(DOWN)


def is_left_factor(steps: str) -> bool:
    """True iff every prefix has at least as many U steps as D steps."""
    h = 0
    for s in steps:
        d = _DELTA.get(s)
        if d is None:
            return False
        h += d
        if h < 0:
            return False
    return True


def is_motzkin_path(steps: str) -> bool:
    """True iff the string is a left factor that returns to height 0."""
    return is_left_factor(steps) and final_height(steps) == 0


def require_left_factor(steps: str) -> str:
    """Return the string unchanged, raising ValueError if it dips below 0."""
    if not is_left_factor(steps):
        raise ValueError(f"not a Motzkin left factor: {steps!r}")
    return steps


def require_motzkin_path(steps: str) -> str:
    """Return the string unchanged, raising ValueError unless it is a
    Motzkin path (nonnegative prefixes, final height 0)."""
    require_left_factor(steps)
    if final_height(steps) != 0:
        raise ValueError(f"path does not return to height 0: {steps!r}")
    return steps


def match_steps(steps: str) -> list[tuple[int, int]]:
    """Pair each D step with its matching U step.

    Returns (u, d) pairs of 0-based step positions, where the D at position d
    returns the path to the height it had before the U at position u.  In a
    left factor every D is matched; unmatched U steps are those whose height
    is never revisited from above.
    """
    require_left_factor(steps)
    stack: list[int] = []
    pairs = []
    for i, s in enumerate(steps):
        if s == UP:
            stack.append(i)
        elif s == DOWN:
            pairs.append((stack.pop(), i))
    return pairs


def unmatched_up_positions(steps: str) -> list[int]:
    """0-based positions of U steps not closed by any later D, in order."""
    require_left_factor(steps)
    stack: list[int] = []
    for i, s in enumerate(steps):
        if s == UP:
            stack.append(i)
        elif s == DOWN:
            stack.pop()
    return stack


def mirror(steps: str) -> str:
    """Reverse the path and swap U with D (reflection through the center)."""
    swap = {UP: DOWN, DOWN: UP, LEVEL: LEVEL}
    return "".join(swap[s] for s in reversed(steps))
