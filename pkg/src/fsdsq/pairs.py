"""Classification of FS-double squares at adjacent positions.

Writing a = |sq_1|, A = |SQ_1|, b = |sq_2|, B = |SQ_2| for the root lengths
of two double squares one position apart, the thirteen possible orderings
reduce to exactly two feasible shapes:

    case 12 (equal):    a = b < A = B
    case 13 (unequal):  a < A < b < B

Everything else (cases 1-11) contradicts the structure of double squares;
meeting one is a first-class finding.  Each classification also carries the
individual relation checks, evaluated and reported rather than asserted, so
a failed relation shows up in output instead of aborting the hunt.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .census import _census_scan
from .double_squares import FsDoubleSquare, find_fs_double_squares
from .errors import ForbiddenPairError
from .words import Word, are_conjugate, lcp


class PairKind(Enum):
    EQUAL = "equal"
    UNEQUAL = "unequal"


@dataclass(frozen=True, slots=True)
class Check:
    name: str
    passed: bool


@dataclass(frozen=True)
class PairClassification:
    """Two FS-double squares at positions ``position`` and ``position + 1``."""

    position: int
    kind: PairKind
    first: FsDoubleSquare
    second: FsDoubleSquare
    case: int
    checks: tuple[Check, ...]

    @property
    def all_checks_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "position": self.position,
            "kind": self.kind.value,
            "case": self.case,
            "first": self.first.to_json_dict(),
            "second": self.second.to_json_dict(),
            "checks": [{"name": c.name, "pass": c.passed} for c in self.checks],
        }


def ordering_case(sq1: int, SQ1: int, sq2: int, SQ2: int) -> int:
    """Case label (1-13) of the length ordering of two adjacent pairs of
    roots.  Cases 12 and 13 are the feasible ones."""
    if not (sq1 < SQ1 and sq2 < SQ2):
        raise ValueError("each double square needs sq < SQ")
    if sq1 == sq2:
        if SQ1 == SQ2:
            return 12
        return 3 if SQ1 < SQ2 else 4
    if sq1 < sq2:
        if sq2 < SQ1:
            if SQ1 == SQ2:
                return 1
            return 11 if SQ1 < SQ2 else 9
        if sq2 == SQ1:
            return 10
        return 13
    # sq2 < sq1
    if sq1 < SQ2:
        if SQ1 == SQ2:
            return 2
        return 8 if SQ1 < SQ2 else 6
    if sq1 == SQ2:
        return 5
    return 7


def _first_letter(square: FsDoubleSquare) -> Word:
    return square.factorization.short_root[:1]


def check_equal_pair(c: "PairClassification") -> tuple[Check, ...]:
    """Relations an equal adjacent pair must satisfy: both squares conjugate
    (long and short), the one-letter shift identity, and a nonempty common
    prefix of x1 and x2."""
    if c.kind is not PairKind.EQUAL:
        raise ValueError("pair is not an equal pair")
    return _equal_checks(c.first, c.second)


def _equal_checks(first: FsDoubleSquare, second: FsDoubleSquare) -> tuple[Check, ...]:
    u = first.factorization.long_root
    v = second.factorization.long_root
    su = first.factorization.short_root
    sv = second.factorization.short_root
    a = _first_letter(first)
    f = first.factorization
    return (
        Check("longer_squares_conjugate", are_conjugate(u + u, v + v)),
        Check("shorter_squares_conjugate", are_conjugate(su + su, sv + sv)),
        Check("single_letter_shift", u + a == a + v and u + u + a == a + v + v),
        Check("x1_x2_common_prefix", lcp(f.x1, f.x2) >= 1),
        Check("second_ends_after_first", second.end > first.end),
    )


def check_unequal_pair(c: "PairClassification") -> tuple[Check, ...]:
    """Length relations an unequal adjacent pair must satisfy."""
    if c.kind is not PairKind.UNEQUAL:
        raise ValueError("pair is not an unequal pair")
    return _unequal_checks(c.first, c.second)


def _unequal_checks(first: FsDoubleSquare, second: FsDoubleSquare) -> tuple[Check, ...]:
    f, g = first.factorization, second.factorization
    floor = first.SQ_len + first.sq_len + (f.p2 - 1) * (len(f.x1) + len(f.x2))
    return (
        Check("short_root_floor", second.sq_len >= floor),
        Check("period_strictly_grows", len(g.period) > len(f.period)),
        Check("long_root_doubles", second.SQ_len > 2 * first.SQ_len),
        Check("short_root_exceeds_sum", second.sq_len > first.SQ_len + first.sq_len),
        Check("second_ends_after_first", second.end > first.end),
    )


def find_double_square_pairs(
    w: Word, squares: list[FsDoubleSquare] | None = None
) -> list[PairClassification]:
    """Classify every pair of FS-double squares at adjacent positions.

    A pair matching neither feasible shape raises ForbiddenPairError with
    the offending case label; that would contradict the two-shape
    dichotomy and must be reported.
    """
    if squares is None:
        squares = find_fs_double_squares(w)
    by_pos = {sq.position: sq for sq in squares}
    out: list[PairClassification] = []
    for pos in sorted(by_pos):
        first, second = by_pos[pos], by_pos.get(pos + 1)
        if second is None:
            continue
        case = ordering_case(first.sq_len, first.SQ_len, second.sq_len, second.SQ_len)
        if case == 12:
            kind = PairKind.EQUAL
            checks = _equal_checks(first, second)
        elif case == 13:
            kind = PairKind.UNEQUAL
            checks = _unequal_checks(first, second)
        else:
            raise ForbiddenPairError(
                f"adjacent double squares at position {pos} of {w.text!r} realise "
                f"infeasible length ordering case {case}: "
                f"({first.sq_len}, {first.SQ_len}, {second.sq_len}, {second.SQ_len})",
                word=w.text, position=pos, case=case,
                lengths=(first.sq_len, first.SQ_len, second.sq_len, second.SQ_len))
        out.append(PairClassification(pos, kind, first, second, case, checks))
    return out


def has_adjacent_pair(w: Word) -> bool:
    """True iff some two consecutive positions both have census value 2."""
    s, _ = _census_scan(w.codes)
    return any(s[i] == 2 and s[i + 1] == 2 for i in range(len(s) - 1))
