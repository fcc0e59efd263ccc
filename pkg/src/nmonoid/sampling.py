"""Seeded random words, codes, tables and units for tests and the CLI."""

import random

from .codes import Code, coords_join, coords_le, one_step_restriction
from .tables import Table
from .words import Word


def _rng(rng):
    return rng if isinstance(rng, random.Random) else random.Random(rng)


def random_string(rng, letters, maxlen):
    return "".join(rng.choice(letters) for _ in range(rng.randint(0, maxlen)))


def random_word(rng, ctx, maxlen):
    rng = _rng(rng)
    return Word._make(ctx, tuple(random_string(rng, ctx.letters, maxlen) for _ in range(ctx.n)))


def random_maximal_code(rng, ctx, maxlen, steps):
    """A maximal joinless code reached from the identity by one-step restrictions."""
    rng = _rng(rng)
    code = Code(ctx, [ctx.one])
    for _ in range(steps):
        choices = [(w, i) for w in code for i in range(ctx.n) if len(w.coords[i]) < maxlen]
        if not choices:
            break
        w, i = rng.choice(choices)
        code = one_step_restriction(code, w, i + 1)
    return code


def random_joinless_code(rng, ctx, maxlen, steps=None, keep=0.6):
    """A random subset of a random maximal joinless code."""
    rng = _rng(rng)
    if steps is None:
        steps = rng.randint(0, 2 * ctx.n)
    full = random_maximal_code(rng, ctx, maxlen, steps)
    return Code(ctx, [w for w in full if rng.random() < keep])


def random_antichain(rng, ctx, maxlen, size):
    """Random pairwise prefix-incomparable words; may contain joins."""
    rng = _rng(rng)
    chosen = []
    for _ in range(20 * size):
        if len(chosen) >= size:
            break
        w = random_word(rng, ctx, maxlen).coords
        if all(not coords_le(w, c) and not coords_le(c, w) for c in chosen):
            chosen.append(w)
    return chosen


def random_rm1_table(rng, ctx, maxlen, nonzero=False):
    """Joinless keys with independent random values."""
    rng = _rng(rng)
    while True:
        keys = random_joinless_code(rng, ctx, maxlen)
        if len(keys) or not nonzero:
            break
    return Table(ctx, {p: random_word(rng, ctx, maxlen) for p in keys})


def random_rm0_table(rng, ctx, maxlen, size=None, nonzero=False):
    """Antichain keys, possibly with joins, with consistent values.

    Keys whose join is shared must agree there, so a key's value is forced
    by any earlier key it overlaps.  Draws that violate this are retried.
    """
    rng = _rng(rng)
    while True:
        want = size if size is not None else rng.randint(0 if not nonzero else 1, 4)
        keys = random_antichain(rng, ctx, maxlen, want)
        if nonzero and not keys:
            continue
        values = _consistent_values(rng, ctx, keys, maxlen)
        if values is not None:
            return Table(ctx, {Word._make(ctx, p): Word._make(ctx, values[p]) for p in keys})


def _consistent_values(rng, ctx, keys, maxlen):
    values = {}
    for p in keys:
        forced = None
        for q, yq in values.items():
            z = coords_join(p, q)
            if z is None:
                continue
            # value(p) * (z minus p) must equal value(q) * (z minus q)
            target = tuple(a + c[len(b):] for a, b, c in zip(yq, q, z))
            cand = []
            for t, pc, zc in zip(target, p, z):
                tail = zc[len(pc):]
                if not t.endswith(tail):
                    return None
                cand.append(t[: len(t) - len(tail)])
            cand = tuple(cand)
            if forced is None:
                forced = cand
            elif forced != cand:
                return None
        if forced is None:
            forced = random_word(rng, ctx, maxlen).coords
        if max(map(len, forced)) > maxlen:
            return None
        values[p] = forced
    return values


def random_unit(rng, ctx, maxlen, steps=None):
    """A bijection between two random maximal joinless codes of equal size."""
    rng = _rng(rng)
    if steps is None:
        steps = rng.randint(0, 3)
    while True:
        dom = random_maximal_code(rng, ctx, maxlen, steps)
        img = random_maximal_code(rng, ctx, maxlen, steps)
        if len(dom) == len(img):
            break
    targets = list(img)
    rng.shuffle(targets)
    return Table(ctx, dict(zip(dom, targets)))
