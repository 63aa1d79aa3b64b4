"""Degree sequences: parsing, graphicality, residual reduction, classification.

A degree sequence is a nonincreasing tuple of positive integers.  The text
form uses exponent notation, e.g. "(6,5,4^4,3)" for (6,5,4,4,4,4,3).  The
classifier sorts sequences into the families handled by the realization
builder, the known non-realizable exception families, and everything else.
"""
from __future__ import annotations

import dataclasses
import enum
import re


class SequenceError(ValueError):
    """Invalid degree sequence content."""


class SequenceSyntaxError(SequenceError):
    """Malformed degree sequence text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclasses.dataclass(frozen=True)
class DegreeSequence:
    """A nonincreasing sequence of positive integer degrees."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        if not self.degrees:
            raise SequenceError("degree sequence must be nonempty")
        for d in self.degrees:
            if not isinstance(d, int) or d < 1:
                raise SequenceError(f"degrees must be positive integers, got {d!r}")
        if any(a < b for a, b in zip(self.degrees, self.degrees[1:])):
            raise SequenceError("degrees must be nonincreasing")

    @classmethod
    def of(cls, values) -> "DegreeSequence":
        """Build from any iterable of ints, sorting into canonical order."""
        return cls(tuple(sorted(values, reverse=True)))

    @property
    def n(self) -> int:
        return len(self.degrees)

    def render(self) -> str:
        """Canonical text form with exponents for runs, e.g. "(6,5,4^4,3)"."""
        terms = []
        i = 0
        while i < len(self.degrees):
            j = i
            while j < len(self.degrees) and self.degrees[j] == self.degrees[i]:
                j += 1
            run = j - i
            terms.append(str(self.degrees[i]) if run == 1 else f"{self.degrees[i]}^{run}")
            i = j
        return "(" + ",".join(terms) + ")"

    def __str__(self) -> str:
        return self.render()


_TOKEN = re.compile(r"\s*(\d+|\^|,|\(|\))")


def parse_sequence(text: str) -> DegreeSequence:
    """Parse "(5,4,3^5)" style text (parentheses optional) into a sequence.

    Terms are INT or INT^INT; the result is re-sorted into canonical
    nonincreasing order, so input order does not matter.
    """
    tokens: list[tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise SequenceSyntaxError(f"unexpected character {text[pos]!r}", pos)
            break
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()

    if not tokens:
        raise SequenceSyntaxError("empty sequence", 0)
    if tokens[0][0] == "(":
        if tokens[-1][0] != ")":
            raise SequenceSyntaxError("missing closing parenthesis", len(text))
        tokens = tokens[1:-1]
    elif tokens[-1][0] == ")":
        raise SequenceSyntaxError("unmatched closing parenthesis", tokens[-1][1])

    degrees: list[int] = []
    i = 0
    while i < len(tokens):
        tok, tpos = tokens[i]
        if not tok.isdigit():
            raise SequenceSyntaxError(f"expected degree, got {tok!r}", tpos)
        value = int(tok)
        count = 1
        i += 1
        if i < len(tokens) and tokens[i][0] == "^":
            i += 1
            if i >= len(tokens) or not tokens[i][0].isdigit():
                raise SequenceSyntaxError("expected exponent after '^'", tpos)
            count = int(tokens[i][0])
            if count < 1:
                raise SequenceSyntaxError("exponent must be positive", tokens[i][1])
            i += 1
        if value < 1:
            raise SequenceSyntaxError("degrees must be positive", tpos)
        degrees.extend([value] * count)
        if i < len(tokens):
            if tokens[i][0] != ",":
                raise SequenceSyntaxError(f"expected ',', got {tokens[i][0]!r}", tokens[i][1])
            i += 1
            if i >= len(tokens):
                raise SequenceSyntaxError("trailing comma", tokens[i - 1][1])
    return DegreeSequence.of(degrees)


def is_graphic(seq: DegreeSequence) -> bool:
    """Whether some simple graph has exactly these degrees.

    Repeatedly deletes the smallest degree d and decrements the d largest
    remaining entries; the sequence is graphic iff this never goes wrong.
    """
    d = list(seq.degrees)
    if sum(d) % 2 == 1:
        return False
    while d:
        d.sort(reverse=True)
        if d[-1] == 0:
            d.pop()
            continue
        last = d.pop()
        if last > len(d):
            return False
        for i in range(last):
            d[i] -= 1
    return True


@dataclasses.dataclass(frozen=True)
class ResidualResult:
    """Residual sequence together with position bookkeeping.

    new_to_old maps each position of the residual to the position it came
    from in the original; decremented_new lists the residual positions whose
    entries were decremented.
    """

    sequence: DegreeSequence
    new_to_old: tuple[int, ...]
    decremented_new: tuple[int, ...]


def residual(seq: DegreeSequence) -> ResidualResult:
    """Delete the last (smallest) entry dn and decrement the dn largest.

    Ties are broken by decrementing the earliest positions.  Requires n >= 2
    and dn <= n - 1 so the reduction is defined.
    """
    n = seq.n
    k = seq.degrees[-1]
    if n < 2:
        raise SequenceError("residual needs at least two entries")
    if k > n - 1:
        raise SequenceError(f"smallest degree {k} exceeds n-1={n - 1}")
    items = []
    for old in range(n - 1):
        value = seq.degrees[old] - (1 if old < k else 0)
        items.append((value, old))
    items.sort(key=lambda t: (-t[0], t[1]))
    values = tuple(v for v, _ in items)
    if values and values[-1] == 0:
        raise SequenceError("residual produced a zero degree")
    new_to_old = tuple(old for _, old in items)
    decremented_new = tuple(i for i, (_, old) in enumerate(items) if old < k)
    return ResidualResult(DegreeSequence(values), new_to_old, decremented_new)


class Kind(str, enum.Enum):
    NOT_GRAPHIC = "not_graphic"
    EXCEPTION_N3 = "exception_n3"
    EXCEPTION_ODD_K = "exception_odd_k"
    EXCEPTION_ODD_K_SQUARE = "exception_odd_k_square"
    COVERED = "covered"
    OUT_OF_COVERAGE = "out_of_coverage"


class Route(str, enum.Enum):
    """Which construction family a covered sequence is handled by."""

    T12 = "T12"  # d1 = n-1
    L41 = "L41"  # d1 = n-2
    T14 = "T14"  # d1 = n-3
    T15 = "T15"  # d1 <= n-4 and d_{n-5} >= 4


@dataclasses.dataclass(frozen=True)
class Classification:
    kind: Kind
    route: Route | None = None
    k: int | None = None


def classify(seq: DegreeSequence) -> Classification:
    """Sort a sequence into exception / covered / out-of-coverage buckets.

    Exception families (graphic but with no Z3-connected realization):
      (n-3, 3^(n-1)); (k, 3^k) for odd k; (k, k, 3^(k-1)) for odd k.
    Covered sequences have minimum degree >= 3 and fall to one of the four
    construction routes.  Everything else is out of coverage.
    """
    if not is_graphic(seq):
        return Classification(Kind.NOT_GRAPHIC)
    d = seq.degrees
    n = seq.n
    rest_all_3 = all(x == 3 for x in d[1:])
    if rest_all_3 and d[0] == n - 3:
        return Classification(Kind.EXCEPTION_N3)
    if rest_all_3 and d[0] == n - 1 and d[0] % 2 == 1:
        return Classification(Kind.EXCEPTION_ODD_K, k=d[0])
    if (n >= 2 and d[0] == d[1] == n - 1 and d[0] % 2 == 1
            and all(x == 3 for x in d[2:])):
        return Classification(Kind.EXCEPTION_ODD_K_SQUARE, k=d[0])
    if d[-1] < 3:
        return Classification(Kind.OUT_OF_COVERAGE)
    if d[0] == n - 1:
        return Classification(Kind.COVERED, route=Route.T12)
    if d[0] == n - 2:
        return Classification(Kind.COVERED, route=Route.L41)
    if d[0] == n - 3:
        return Classification(Kind.COVERED, route=Route.T14)
    if d[0] <= n - 4 and n >= 6 and d[n - 6] >= 4:
        return Classification(Kind.COVERED, route=Route.T15)
    return Classification(Kind.OUT_OF_COVERAGE)
