"""Alphabet-generic word primitives.

A word is an immutable sequence of small integer symbol codes.  Textual I/O
maps lowercase letters to codes by alphabet index (a -> 0, b -> 1, ...).
Positions in everything this package *reports* are 1-based, matching the
usual tabular presentation of words; Python-level indexing on ``Word``
itself stays 0-based.
"""

from __future__ import annotations

from typing import Iterable, Iterator

_TEXT_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


class Word:
    """Immutable word over an indexed alphabet, backed by ``bytes``."""

    __slots__ = ("codes",)

    def __init__(self, codes: bytes | bytearray | Iterable[int] = b"") -> None:
        self.codes = bytes(codes)

    @classmethod
    def from_text(cls, text: str) -> "Word":
        """Decode a lowercase-letter string (a=0, b=1, ...)."""
        out = bytearray()
        for ch in text:
            c = ord(ch) - 97
            if not 0 <= c < 26:
                raise ValueError(f"invalid word character {ch!r}: lowercase letters only")
            out.append(c)
        return cls(bytes(out))

    @property
    def text(self) -> str:
        if any(c >= 26 for c in self.codes):
            raise ValueError("word uses codes beyond the 26-letter textual alphabet")
        return "".join(_TEXT_ALPHABET[c] for c in self.codes)

    def __len__(self) -> int:
        return len(self.codes)

    def __bool__(self) -> bool:
        return bool(self.codes)

    def __iter__(self) -> Iterator[int]:
        return iter(self.codes)

    def __getitem__(self, item: int | slice) -> "int | Word":
        if isinstance(item, slice):
            return Word(self.codes[item])
        return self.codes[item]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.codes + other.codes)

    def __mul__(self, times: int) -> "Word":
        return Word(self.codes * times)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self.codes == other.codes

    def __hash__(self) -> int:
        return hash(self.codes)

    def __repr__(self) -> str:
        try:
            return f"Word({self.text!r})"
        except ValueError:
            return f"Word({list(self.codes)!r})"

    def rotate(self, k: int) -> "Word":
        """Cyclic left rotation by k positions."""
        if not self.codes:
            return self
        k %= len(self.codes)
        return Word(self.codes[k:] + self.codes[:k])


def lcp(u: Word, v: Word) -> int:
    """Length of the longest common prefix of two words."""
    a, b = u.codes, v.codes
    m = min(len(a), len(b))
    if a[:m] == b[:m]:
        return m
    for i in range(m):
        if a[i] != b[i]:
            return i
    return m


def is_primitive(w: Word) -> bool:
    """True iff w is not a proper integer power of a shorter word."""
    n = len(w)
    if n == 0:
        raise ValueError("empty word has no primitivity")
    codes = w.codes
    for d in range(1, n // 2 + 1):
        if n % d == 0 and codes == codes[:d] * (n // d):
            return False
    return True


def primitive_root(w: Word) -> tuple[Word, int]:
    """Shortest word u and maximal k with u**k == w; u is primitive."""
    n = len(w)
    if n == 0:
        raise ValueError("empty word has no primitive root")
    codes = w.codes
    for d in range(1, n // 2 + 1):
        if n % d == 0 and codes == codes[:d] * (n // d):
            return Word(codes[:d]), n // d
    return w, 1


def are_conjugate(u: Word, v: Word) -> bool:
    """True iff v is a cyclic rotation of u."""
    if len(u) != len(v):
        return False
    if not u.codes:
        return True
    return v.codes in u.codes + u.codes


class LceTable:
    """Exact longest-common-extension queries for one word.

    Stores the full quadratic extension table, built by the usual suffix
    recurrence; queries are O(1).  Public queries are 1-based; ``lce0``
    exposes the 0-based variant used internally.
    """

    __slots__ = ("word", "_rows")

    def __init__(self, word: Word) -> None:
        n = len(word)
        if n == 0:
            raise ValueError("cannot build an extension table for the empty word")
        self.word = word
        codes = word.codes
        rows: list[list[int]] = [[0] * (n + 1) for _ in range(n + 1)]
        for i in range(n - 1, -1, -1):
            ci = codes[i]
            nxt = rows[i + 1]
            row = rows[i]
            for j in range(n - 1, -1, -1):
                if codes[j] == ci:
                    row[j] = nxt[j + 1] + 1
        self._rows = rows

    def __len__(self) -> int:
        return len(self.word)

    def lce0(self, i: int, j: int) -> int:
        """0-based: longest common prefix length of suffixes at i and j."""
        return self._rows[i][j]

    def lce(self, i: int, j: int) -> int:
        """1-based: longest common prefix length of suffixes at i and j."""
        n = len(self.word)
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"positions must be in 1..{n}")
        return self._rows[i - 1][j - 1]


def build_lce(w: Word) -> LceTable:
    return LceTable(w)
