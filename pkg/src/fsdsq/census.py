"""Square occurrences and the rightmost distinct-square census.

The census assigns every position i of a word the number s_i of distinct
square factors whose *last* occurrence starts at i.  The key fact used by
the fast scan: a square occurrence (i, p) is the last occurrence of its
value exactly when no prefix of the suffix at i of length 2p reappears
later, i.e. when 2p exceeds the longest later match length m_i.  The m_i
values obey m_i <= m_{i+1} + 1, so a right-to-left scan with C-level
substring search computes them in amortised linear probes; all equality
decisions are exact byte comparisons, never hashes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import LceTable, Word


@dataclass(frozen=True, slots=True)
class SquareOccurrence:
    """One square occurrence: starts at ``start`` (1-based), root length
    ``root_len``, spanning start .. start + 2*root_len - 1."""

    start: int
    root_len: int


@dataclass(frozen=True, slots=True)
class CensusReport:
    """Full rightmost-square census of one word."""

    word: Word
    s: tuple[int, ...]
    distinct_square_count: int
    runs_of_two: tuple[tuple[int, int], ...]
    longest_run: tuple[int, int]

    @property
    def max_s(self) -> int:
        return max(self.s) if self.s else 0

    def to_json_dict(self) -> dict:
        return {
            "word": self.word.text,
            "n": len(self.word),
            "s": list(self.s),
            "distinct_square_count": self.distinct_square_count,
            "runs_of_two": [{"start": a, "length": b} for a, b in self.runs_of_two],
            "longest_run": {"start": self.longest_run[0], "length": self.longest_run[1]},
        }


def _later_match_lengths(codes: bytes) -> list[int]:
    """m[i] = length of the longest prefix of codes[i:] also occurring at
    some j > i.  Uses m[i] <= m[i+1] + 1 for amortised probing."""
    n = len(codes)
    m = [0] * (n + 1)
    find = codes.find
    for i in range(n - 1, -1, -1):
        length = m[i + 1] + 1
        limit = n - i - 1
        if length > limit:
            length = limit
        while length > 0 and find(codes[i:i + length], i + 1) == -1:
            length -= 1
        m[i] = length
    return m


def _census_scan(codes: bytes) -> tuple[list[int], dict[int, list[int]]]:
    """Counts s_i plus, for positions with s_i > 0, the rightmost root
    lengths (0-based keys, ascending root lengths)."""
    n = len(codes)
    s = [0] * n
    roots: dict[int, list[int]] = {}
    m = _later_match_lengths(codes)
    for i in range(n):
        pmax = (n - i) >> 1
        p = (m[i] >> 1) + 1
        while p <= pmax:
            if codes[i:i + p] == codes[i + p:i + 2 * p]:
                s[i] += 1
                roots.setdefault(i, []).append(p)
            p += 1
    return s, roots


def s_sequence(w: Word) -> CensusReport:
    """Census of ``w``: the s_i sequence, distinct-square total and runs."""
    s, _ = _census_scan(w.codes)
    return _report_from_counts(w, s)


def _report_from_counts(w: Word, s: list[int]) -> CensusReport:
    runs: list[tuple[int, int]] = []
    i, n = 0, len(s)
    while i < n:
        if s[i] == 2:
            j = i
            while j < n and s[j] == 2:
                j += 1
            runs.append((i + 1, j - i))
            i = j
        else:
            i += 1
    best = (0, 0)
    for start, length in runs:
        if length > best[1]:
            best = (start, length)
    return CensusReport(
        word=w,
        s=tuple(s),
        distinct_square_count=sum(s),
        runs_of_two=tuple(runs),
        longest_run=best,
    )


def longest_run_of_twos(report: CensusReport) -> tuple[int, int]:
    """Leftmost longest maximal run of consecutive s_i = 2; (0, 0) if none."""
    return report.longest_run


def rightmost_square_roots(w: Word) -> dict[int, list[int]]:
    """For each 1-based position with s_i > 0, the root lengths of the
    distinct squares whose last occurrence starts there."""
    _, roots = _census_scan(w.codes)
    return {i + 1: ps for i, ps in roots.items()}


def rightmost_map(w: Word) -> dict[str, int]:
    """Map each distinct square value to the 1-based start of its last
    occurrence."""
    _, roots = _census_scan(w.codes)
    out: dict[str, int] = {}
    for i, ps in roots.items():
        for p in ps:
            out[w[i:i + 2 * p].text] = i + 1
    return out


def enumerate_squares(w: Word) -> list[SquareOccurrence]:
    """All square occurrences, non-primitive roots included, sorted by
    (start, root_len)."""
    n = len(w)
    if n < 2:
        return []
    table = LceTable(w)
    out: list[SquareOccurrence] = []
    for i in range(n):
        for p in range(1, (n - i) // 2 + 1):
            if table.lce0(i, i + p) >= p:
                out.append(SquareOccurrence(i + 1, p))
    return out


def render_census_tsv(report: CensusReport) -> str:
    """Tab-separated census: header ``index letter s_i`` then one row per
    position."""
    lines = ["index\tletter\ts_i"]
    text = report.word.text
    for i, value in enumerate(report.s):
        lines.append(f"{i + 1}\t{text[i]}\t{value}")
    return "\n".join(lines) + "\n"
