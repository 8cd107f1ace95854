"""Constructions that realise long runs of census value 2.

Two moves extend a word ending in an FS-double square:

* equal move: append the next prefix letter of the frontier square.  Each
  accepted letter shifts a conjugate of the frontier square one position
  right, so the run grows by one per letter until the conjugate supply is
  exhausted.
* unequal move: rebuild the tail as a (V m V)^2 block derived from the
  frontier square (drop its first letter a, close with a breaking letter
  b != a).  The middle m is a short prefix of V, or V followed by such a
  prefix for the long variant.  This plants a much longer double square one
  position right of the frontier, roughly quadrupling the word.

Every accepted candidate is re-verified by a full census; construction
metadata is advisory only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .census import s_sequence
from .double_squares import FsDoubleSquare, find_fs_double_squares
from .errors import ExtensionBudgetError, NoExtensionError
from .pairs import PairKind, find_double_square_pairs
from .words import Word, lcp

SMALLEST_DOUBLE_SQUARE = Word.from_text("abaababaab")
SMALLEST_EQUAL_EXTENSIBLE = Word.from_text("aabaaabaabaaab")


@dataclass(frozen=True, slots=True)
class BuildStep:
    kind: str  # "equal" | "unequal"
    letters: str


@dataclass(frozen=True)
class RunReport:
    """A constructed (or analysed) word with its verified run statistics."""

    word: Word
    T: int
    ratio: Fraction
    steps: tuple[BuildStep, ...]
    findings: tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def bound_ok(self) -> bool:
        return 7 * self.T < self.n

    def to_json_dict(self) -> dict:
        return {
            "word": self.word.text,
            "n": self.n,
            "T": self.T,
            "ratio": {"num": self.ratio.numerator, "den": self.ratio.denominator},
            "steps": [{"kind": s.kind, "letters": s.letters} for s in self.steps],
            "findings": list(self.findings),
        }


def run_report(word: Word, steps: list[BuildStep] | tuple[BuildStep, ...] = ()) -> RunReport:
    """Census-verified report; flags 7T >= n as a finding, not an error."""
    report = s_sequence(word)
    t = report.longest_run[1]
    n = len(word)
    findings: tuple[str, ...] = ()
    if n and 7 * t >= n:
        findings = (f"run bound violated: 7*{t} >= {n}",)
    ratio = Fraction(t, n) if n else Fraction(0, 1)
    return RunReport(word=word, T=t, ratio=ratio, steps=tuple(steps), findings=findings)


def ratio_report(word: Word) -> RunReport:
    return run_report(word)


def _leading_twos(s: tuple[int, ...] | list[int]) -> int:
    k = 0
    while k < len(s) and s[k] == 2:
        k += 1
    return k


def _equal_phase(w0: Word, frontier: int) -> tuple[Word, int]:
    """Append prefix letters of the square frontier..end while the leading
    run of 2's keeps growing.  Returns the longest achieved word."""
    w = w0
    current = _leading_twos(s_sequence(w0).s)
    k = 0
    while frontier - 1 + k < len(w0):
        cand = w + w0[frontier - 1 + k:frontier + k]
        run = _leading_twos(s_sequence(cand).s)
        if run <= current:
            break
        w, current, k = cand, run, k + 1
    return w, k


def extend_equal_run(seed: Word) -> RunReport:
    """Grow the run of an FS-double square word by appending its own prefix.

    ``seed`` must be exactly SQ^2 for a double square detected at position 1.
    Fails when the period x1 x2 and its rotation x2 x1 share no prefix: then
    no conjugate can follow and no equal extension exists.
    """
    squares = find_fs_double_squares(seed)
    fs = next((q for q in squares if q.position == 1), None)
    if fs is None or 2 * fs.SQ_len != len(seed):
        raise ValueError("seed is not exactly the square of an FS-double-square root")
    f = fs.factorization
    if lcp(f.period, f.x2 + f.x1) == 0:
        raise NoExtensionError(
            "no equal extension: period and its rotation share no common prefix")
    word, appended = _equal_phase(seed, 1)
    steps = [BuildStep("equal", word[len(seed):].text)] if appended else []
    return run_report(word, steps)


def _breaking_letter(code: int) -> int:
    return 1 if code == 0 else 0


def _accepts_unequal(candidate: Word, frontier: int) -> bool:
    s = s_sequence(candidate).s
    if frontier >= len(s) or s[frontier - 1] != 2 or s[frontier] != 2:
        return False
    for pair in find_double_square_pairs(candidate):
        if pair.position == frontier:
            return (pair.kind is PairKind.UNEQUAL
                    and pair.second.SQ_len > 2 * pair.first.SQ_len)
    return False


def _unequal_candidates(w: Word, fs: FsDoubleSquare, variant: str):
    """Template candidates at the frontier square, most compact first.

    With a the frontier letter, b the breaking letter and v = (frontier
    square minus a) + b, each candidate is  prefix + a + (v m v)^2  where the
    middle m is a prefix v[:j] of v (short variant) or v + v[:j] (long).
    Any prefix middle makes (v m)^2 occur one position right of the
    frontier; the choice of j only decides whether older squares collide
    with the new tail, which the census acceptance test settles.
    """
    i = fs.position
    a = w[i - 1:i]
    b = Word([_breaking_letter(w[i - 1])])
    core = w[i - 1:]
    v = core[1:] + b
    for j in range(1, len(v) + 1):
        middle = v[:j] if variant == "short" else v + v[:j]
        yield w[:i - 1] + a + (v + middle + v) * 2


def _unequal_extend_at(w: Word, fs: FsDoubleSquare, variant: str,
                       budget: int) -> tuple[Word, str]:
    for candidate in _unequal_candidates(w, fs, variant):
        if _accepts_unequal(candidate, fs.position):
            return candidate, candidate[len(w):].text
    # Templates failed: bounded breadth-first search over appended suffixes,
    # shortest first, lexicographic within a length; first accepted wins.
    alphabet = max(max(w.codes), 1) + 1
    tried = 0
    length = 1
    while True:
        for combo in product(range(alphabet), repeat=length):
            tried += 1
            if tried > budget:
                raise ExtensionBudgetError(
                    f"no unequal extension found within budget ({budget} candidates)")
            cand = w + Word(combo)
            if _accepts_unequal(cand, fs.position):
                return cand, cand[len(w):].text
        length += 1


def extend_unequal(w: Word, variant: str = "short", *, budget: int = 20000) -> RunReport:
    """Extend a word ending in an FS-double square with a new, longer double
    square one position right of the frontier."""
    if variant not in ("short", "long"):
        raise ValueError(f"unknown variant {variant!r}")
    if max(w.codes, default=0) == 0:
        raise ValueError("unequal extension needs at least two letters")
    squares = find_fs_double_squares(w)
    enders = [q for q in squares if q.end == len(w)]
    if not enders:
        raise ValueError("word does not end in an FS-double square")
    fs = max(enders, key=lambda q: q.position)
    word, letters = _unequal_extend_at(w, fs, variant, budget)
    return run_report(word, [BuildStep("unequal", letters)])


def build_run(target: int, alphabet_size: int = 2, *, variant: str = "short",
              budget: int = 20000) -> RunReport:
    """Construct a word whose verified longest run of 2's reaches ``target``.

    Starts from the smallest double-square word (target 1) or the smallest
    one admitting conjugate extensions, then alternates equal moves to their
    ceiling with one unequal (doubling) move per missing run position.
    """
    if target < 1:
        raise ValueError("target must be at least 1")
    if alphabet_size < 2:
        raise ValueError("runs need an alphabet of at least two letters")
    if target == 1:
        return run_report(SMALLEST_DOUBLE_SQUARE)

    w = SMALLEST_EQUAL_EXTENSIBLE
    steps: list[BuildStep] = []
    run = _leading_twos(s_sequence(w).s)
    while run < target:
        grown, appended = _equal_phase(w, run)
        if appended:
            steps.append(BuildStep("equal", grown[len(w):].text))
            w = grown
            run = _leading_twos(s_sequence(w).s)
            if run >= target:
                break
        squares = find_fs_double_squares(w)
        fs = next((q for q in squares if q.position == run and q.end == len(w)), None)
        if fs is None:
            raise NoExtensionError(
                f"run frontier {run} of {w.text!r} does not end in a double square")
        w, letters = _unequal_extend_at(w, fs, variant, budget)
        steps.append(BuildStep("unequal", letters))
        new_run = _leading_twos(s_sequence(w).s)
        if new_run <= run:
            raise NoExtensionError(
                f"unequal move failed to grow the run ({run} -> {new_run})")
        run = new_run
    return run_report(w, steps)
