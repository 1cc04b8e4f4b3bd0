"""Seeded random fixtures: laminations, monotone maps and PL homeomorphisms."""

import random
from fractions import Fraction
from typing import Optional

from .circle import Chord, links
from .dynamics import PLCircleHomeo
from .laminations import LaminarRelation
from .monotone import MonotoneMap


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_lamination(seed, max_leaves: int = 12, denominator: int = 48) -> LaminarRelation:
    """Greedy non-crossing chords on the ``denominator``-point grid."""
    rng = _rng(seed)
    target = rng.randint(0, max_leaves)
    leaves = []
    attempts = 0
    while len(leaves) < target and attempts < 40 * max_leaves + 40:
        attempts += 1
        a, b = rng.sample(range(denominator), 2)
        c = Chord(Fraction(a, denominator), Fraction(b, denominator))
        if c not in leaves and not any(links(c, l) for l in leaves):
            leaves.append(c)
    return LaminarRelation(leaves)


def random_monotone_map(seed, max_flats: int = 6, denominator: int = 48,
                        n_flats: Optional[int] = None) -> MonotoneMap:
    """A monotone map with up to ``max_flats`` flats on grid breakpoints.

    Flat ``i`` is sent to ``c_i`` and the arc after it is stretched onto
    ``[c_i, c_{i+1}]``, sometimes with an extra kink in between.
    """
    rng = _rng(seed)
    k = rng.randint(0, max_flats) if n_flats is None else n_flats
    if k == 0:
        return random_homeo(rng, denominator=denominator)
    d = denominator
    xs = sorted(rng.sample(range(d), 2 * k)) + [None]
    xs[-1] = xs[0] + d
    cs = sorted(rng.sample(range(d), k))
    cs.append(cs[0] + d)
    base = rng.randrange(d)
    lift = []  # (x, y) in grid units, x increasing over one period
    for i in range(k):
        lift += [(xs[2 * i], base + cs[i]), (xs[2 * i + 1], base + cs[i])]
        x0, x1 = xs[2 * i + 1], xs[2 * i + 2]
        if x1 - x0 >= 2 and rng.random() < 0.5:
            mx = rng.randint(x0 + 1, x1 - 1)
            my = Fraction(base + cs[i]) + (cs[i + 1] - cs[i]) * Fraction(rng.randint(1, 7), 8)
            lift.append((mx, my))
    pairs = []
    for x, y in lift:
        x, y = Fraction(x, d), Fraction(y, d)
        if x >= 1:
            x, y = x - 1, y - 1
        pairs.append((x, y))
    return MonotoneMap(pairs)


def random_homeo(seed, max_breaks: int = 5, denominator: int = 48) -> PLCircleHomeo:
    """A PL homeomorphism with grid breakpoints and strictly increasing values."""
    rng = _rng(seed)
    n = rng.randint(1, max_breaks)
    xs = sorted(rng.sample(range(denominator), n))
    ys = sorted(rng.sample(range(denominator), n))
    shift = rng.randrange(n)
    ys = ys[shift:] + [y + denominator for y in ys[:shift]]
    return PLCircleHomeo([(Fraction(x, denominator), Fraction(y, denominator)) for x, y in zip(xs, ys)])
