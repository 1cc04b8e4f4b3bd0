"""A leaf space branching in the negative direction, with a BS(1, n) action.

Points of the chart are pairs ``(h, w)``: a rational height ``h`` and a word
``w`` of branch digits, one for each integer level in ``(h, 0]``.  ``w[0]``
is the branch taken just below level 0 and the last digit is the deepest.
Going up truncates the word from the deep end, so any two points have a
common upper bound while points on different branches have no common lower
bound.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional

_INVERSE_MARKS = ("⁻¹", "^-1", "-1")


def word_length(h) -> int:
    """Number of integer levels in ``(h, 0]``."""
    return max(0, math.ceil(-Fraction(h)))


@dataclass(frozen=True, order=True)
class NadicLeafPoint:
    h: Fraction
    w: str = ""

    def __post_init__(self):
        object.__setattr__(self, "h", Fraction(self.h))
        if len(self.w) != word_length(self.h):
            raise ValueError(f"height {self.h} needs a word of length {word_length(self.h)}, got {self.w!r}")
        if self.w and not self.w.isdigit():
            raise ValueError(f"branch word must be digits, got {self.w!r}")

    def to_json(self) -> dict:
        return {"h": str(self.h), "w": self.w}

    @classmethod
    def from_json(cls, data) -> "NadicLeafPoint":
        if isinstance(data, Mapping):
            return cls(Fraction(data["h"]), str(data.get("w", "")))
        h, w = data
        return cls(Fraction(h), str(w))

    def __str__(self):
        return f"({self.h}, {self.w!r})"


def parse_word(word) -> list:
    """Split a word into letters.

    Accepts ``"t x t⁻¹"``, ``"t x T"`` or ``"txT"``; inverses come out as the
    uppercase letter.
    """
    if not isinstance(word, str):
        return list(word)
    tokens = word.split() if any(c.isspace() for c in word) else None
    if tokens is None:
        tokens = []
        rest = word
        while rest:
            for mark in _INVERSE_MARKS:
                if rest[1:].startswith(mark):
                    tokens.append(rest[: 1 + len(mark)])
                    rest = rest[1 + len(mark):]
                    break
            else:
                tokens.append(rest[0])
                rest = rest[1:]
    out = []
    for tok in tokens:
        for mark in _INVERSE_MARKS:
            if tok.endswith(mark) and len(tok) > len(mark):
                tok = tok[: -len(mark)].upper()
                break
        out.append(tok)
    return out


class BranchingChart:
    """The n-adic chart of the BS(1, n) leaf space.

    ``t`` raises heights by one and shifts the word, discarding the shallowest
    digit; ``x`` adds one to the word read as an n-adic number whose shallowest
    digit is least significant.  Together they satisfy ``t x t⁻¹ = xⁿ`` when
    words act on the right (letters applied left to right).
    """

    def __init__(self, n: int = 2):
        if not 2 <= n <= 10:
            raise ValueError("branching arity must be between 2 and 10")
        self.n = n

    def point(self, h, w: str = "") -> NadicLeafPoint:
        p = NadicLeafPoint(Fraction(h), w)
        if any(int(d) >= self.n for d in p.w):
            raise ValueError(f"digits must be below {self.n}: {w!r}")
        return p

    def points(self, depth: int, heights: Optional[list] = None) -> list:
        """Every point at the given heights (default the integers ``0..-depth``)."""
        if heights is None:
            heights = [Fraction(-k) for k in range(depth + 1)]
        out = []
        for h in heights:
            k = word_length(h)
            for i in range(self.n ** k):
                out.append(NadicLeafPoint(Fraction(h), _digits(i, k, self.n)))
        return out

    # -- order ----------------------------------------------------------------

    def leq(self, p: NadicLeafPoint, q: NadicLeafPoint) -> bool:
        return p.h <= q.h and p.w[: len(q.w)] == q.w

    def lt(self, p: NadicLeafPoint, q: NadicLeafPoint) -> bool:
        return p != q and self.leq(p, q)

    def comparable(self, p, q) -> bool:
        return self.leq(p, q) or self.leq(q, p)

    def sup(self, points) -> NadicLeafPoint:
        points = list(points)
        if not points:
            raise ValueError("sup of an empty set")
        top = max(p.h for p in points)
        k = word_length(top)
        words = [p.w[:k] for p in points]
        c = _common_prefix(words)
        h = max(top, Fraction(-c))
        return NadicLeafPoint(h, words[0][: word_length(h)])

    def inf(self, p: NadicLeafPoint, q: NadicLeafPoint) -> Optional[NadicLeafPoint]:
        """Greatest lower bound, which exists only for comparable points."""
        if self.leq(p, q):
            return p
        if self.leq(q, p):
            return q
        return None

    def divergence(self, p: NadicLeafPoint, q: NadicLeafPoint) -> Optional[int]:
        """Index of the first digit where two incomparable branches split."""
        if self.comparable(p, q):
            return None
        return _common_prefix([p.w, q.w])

    # -- the action -----------------------------------------------------------

    def act_t(self, p: NadicLeafPoint) -> NadicLeafPoint:
        drop = word_length(p.h) - word_length(p.h + 1)
        return NadicLeafPoint(p.h + 1, p.w[drop:])

    def act_t_inv(self, p: NadicLeafPoint, digit: int = 0) -> NadicLeafPoint:
        add = word_length(p.h - 1) - word_length(p.h)
        if not 0 <= digit < self.n:
            raise ValueError(f"branch digit must be below {self.n}")
        return NadicLeafPoint(p.h - 1, str(digit) * add + p.w)

    def act_x(self, p: NadicLeafPoint) -> NadicLeafPoint:
        return NadicLeafPoint(p.h, _odometer(p.w, self.n, 1))

    def act_x_inv(self, p: NadicLeafPoint) -> NadicLeafPoint:
        return NadicLeafPoint(p.h, _odometer(p.w, self.n, -1))

    def act_word(self, word, p: NadicLeafPoint, digits=None) -> NadicLeafPoint:
        """Apply the letters of ``word`` to ``p`` from left to right.

        A ``t⁻¹`` restores a digit discarded by an earlier ``t`` of the same
        word when there is one; otherwise it uses the next entry of ``digits``
        (default 0).
        """
        fresh = list(digits or [])
        stack = []
        for letter in parse_word(word):
            if letter == "t":
                q = self.act_t(p)
                stack.append(p.w[: len(p.w) - len(q.w)])
                p = q
            elif letter == "T":
                saved = stack.pop() if stack else ""
                if word_length(p.h - 1) > word_length(p.h) and saved:
                    p = NadicLeafPoint(p.h - 1, saved + p.w)
                else:
                    p = self.act_t_inv(p, fresh.pop(0) if fresh else 0)
            elif letter == "x":
                p = self.act_x(p)
            elif letter == "X":
                p = self.act_x_inv(p)
            else:
                raise ValueError(f"unknown letter {letter!r}")
        return p

    # -- slithering -----------------------------------------------------------

    def slither(self, p: NadicLeafPoint) -> Fraction:
        return p.h

    def zmap(self, p: NadicLeafPoint) -> NadicLeafPoint:
        """The point one unit above ``p``."""
        h = p.h + 1
        return NadicLeafPoint(h, p.w[: word_length(h)])

    def zmap_by_sup(self, p: NadicLeafPoint, max_word_len: int = 6) -> NadicLeafPoint:
        """Definitional Z for the unit interval ``[(-1, "0"), (0, "")]``.

        Takes the sup of ``a(I+)`` over words ``a`` of bounded length with
        ``a(I-) <= p``.  Agrees with :meth:`zmap` once words are long enough
        to reach ``p``.
        """
        lo, hi = NadicLeafPoint(Fraction(-1), "0"), NadicLeafPoint(Fraction(0), "")
        found = [self.act_word(w, hi) for w in _reduced_words("xXtT", max_word_len)
                 if self.leq(self.act_word(w, lo), p)]
        if not found:
            raise ValueError(f"no word of length <= {max_word_len} brings the interval below {p}")
        return self.sup(found)


def _digits(i: int, k: int, n: int) -> str:
    out = []
    for _ in range(k):
        i, d = divmod(i, n)
        out.append(str(d))
    return "".join(out)


def _common_prefix(words) -> int:
    c = 0
    for chars in zip(*words):
        if any(ch != chars[0] for ch in chars):
            break
        c += 1
    return c


def _odometer(w: str, n: int, step: int) -> str:
    """Add ``step`` (+1 or -1) to ``w``, least significant digit first; the
    final carry falls off the deep end."""
    digits = [int(d) for d in w]
    for i in range(len(digits)):
        d = digits[i] + step
        if 0 <= d < n:
            digits[i] = d
            break
        digits[i] = d % n
    return "".join(str(d) for d in digits)


_INVERSE = {"x": "X", "X": "x", "t": "T", "T": "t"}


def _reduced_words(alphabet, max_len: int, inverse=None):
    """Freely reduced words in order of length, then alphabet order."""
    inverse = inverse or _INVERSE
    level = [()]
    for _ in range(max_len):
        nxt = []
        for w in level:
            for a in alphabet:
                if w and inverse.get(w[-1]) == a:
                    continue
                nxt.append(w + (a,))
        yield from nxt
        level = nxt


# -- compressibility --------------------------------------------------------------


@dataclass(frozen=True)
class Compressible:
    word: str


@dataclass(frozen=True)
class NoWitnessUpTo:
    max_word_len: int


class MapAction:
    """A group acting by order-preserving maps on an ordered set.

    ``maps`` sends letter names to point maps; ``inverses`` pairs letters that
    cancel, which only prunes the search.  ``apply_word`` may replace the
    default left-to-right evaluation.
    """

    def __init__(self, maps: Mapping, leq: Callable, inverses: Optional[Mapping] = None,
                 apply_word: Optional[Callable] = None):
        self.maps = dict(maps)
        self.leq = leq
        self.inverses = dict(inverses or {})
        self._apply_word = apply_word

    @property
    def letters(self) -> list:
        return list(self.maps)

    def apply(self, word, p):
        if self._apply_word is not None:
            return self._apply_word(word, p)
        for letter in word:
            p = self.maps[letter](p)
        return p

    @classmethod
    def from_chart(cls, chart: BranchingChart) -> "MapAction":
        maps = {"x": chart.act_x, "X": chart.act_x_inv, "t": chart.act_t, "T": chart.act_t_inv}
        return cls(maps, chart.leq, _INVERSE, lambda w, p: chart.act_word(list(w), p))

    @classmethod
    def real_line(cls, maps: Mapping, inverses: Optional[Mapping] = None) -> "MapAction":
        return cls(maps, lambda a, b: a <= b, inverses)


def compressibility_search(action: MapAction, interval, max_word_len: int):
    """Shortest word taking ``[p, q]`` to a proper subinterval of itself.

    Words are tried by length, then in the order letters were listed.
    """
    p, q = interval
    if not (action.leq(p, q) and p != q):
        raise ValueError("interval endpoints must satisfy p < q")
    for word in _reduced_words(action.letters, max_word_len, action.inverses):
        ap, aq = action.apply(word, p), action.apply(word, q)
        if action.leq(p, ap) and action.leq(aq, q) and (ap, aq) != (p, q):
            return Compressible(" ".join(word))
    return NoWitnessUpTo(max_word_len)


def unit_interval() -> tuple:
    return NadicLeafPoint(Fraction(-1), "0"), NadicLeafPoint(Fraction(0), "")
