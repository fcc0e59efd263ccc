"""Brute-force semantics: what a table does to every word of one level.

This module is an independent check on the table algebra.  It never calls
the join, index, or normalization code.  A table is read as raw
(key, value) string pairs and evaluated at every point of ``nA^level``
using only prefix matching and concatenation.

Points are stored as numpy arrays.  A length-``m`` string over ``k``
letters is the base-``k`` integer it spells, paired with ``m``.  So the
strings of one length sort like their integers, a key of length ``m`` is a
prefix of exactly one contiguous block of level strings, and concatenation
is ``a * k**len(b) + b``.
"""

import numpy as np

from .codes import check_cap, get_cap
from .errors import LevelTooSmall
from .words import Word

_INT64_SAFE = 2 ** 62


def _digits(s, k):
    return int(s, k) if s else 0


def _raw(table):
    return [(p.coords, y.coords) for p, y in table.items()]


def _raw_maxlen(pairs):
    return max((len(c) for p, y in pairs for c in (*p, *y)), default=0)


def _pow(k, exps, as_object):
    if as_object:
        return np.power(np.full(exps.shape, k, dtype=object), exps.astype(object))
    return np.power(np.int64(k), exps)


class TruncatedAction:
    """A partial map from ``nA^level`` to words, held as dense arrays.

    ``defined`` marks the points where the map is defined.  For coordinate
    ``i``, ``vals[i]`` and ``lens[i]`` hold the value's digits and length.
    Undefined points hold zeros, so two actions are equal exactly when all
    arrays are equal.
    """

    def __init__(self, ctx, level, defined, vals, lens):
        self.ctx = ctx
        self.level = level
        self.defined = defined
        self.vals = vals
        self.lens = lens

    def __eq__(self, other):
        if not isinstance(other, TruncatedAction):
            return NotImplemented
        if (self.ctx, self.level) != (other.ctx, other.level):
            return False
        if not np.array_equal(self.defined, other.defined):
            return False
        return all(
            np.array_equal(a, b) for a, b in zip(self.vals + self.lens, other.vals + other.lens)
        )

    def __len__(self):
        return int(self.defined.sum())

    def as_dict(self):
        """The action as ``{Word: Word}``; meant for small levels."""
        n, k, level = self.ctx.n, self.ctx.k, self.level
        out = {}
        for idx in zip(*np.nonzero(self.defined)):
            x = tuple(_spell(int(j), level, k) for j in idx)
            y = tuple(
                _spell(int(self.vals[i][idx]), int(self.lens[i][idx]), k) for i in range(n)
            )
            out[Word(self.ctx, x)] = Word(self.ctx, y)
        return out


def _spell(value, length, k):
    out = []
    for _ in range(length):
        value, r = divmod(value, k)
        out.append(str(r))
    return "".join(reversed(out))


def _empty(ctx, level, as_object, rows=None):
    n, k = ctx.n, ctx.k
    side = k ** level
    shape = (side if rows is None else rows,) + (side,) * (n - 1)
    dtype = object if as_object else np.int64
    defined = np.zeros(shape, dtype=bool)
    vals = [np.zeros(shape, dtype=dtype) for _ in range(n)]
    lens = [np.zeros(shape, dtype=np.int64) for _ in range(n)]
    return defined, vals, lens


def _needs_object(ctx, pairs, level):
    longest = max((len(c) for _, y in pairs for c in y), default=0) + level
    return ctx.k ** longest >= _INT64_SAFE


def _fill(ctx, pairs, level, lo, hi, as_object):
    """Evaluate the table on the points whose first coordinate has index in [lo, hi)."""
    n, k = ctx.n, ctx.k
    defined, vals, lens = _empty(ctx, level, as_object, rows=hi - lo)
    for p, y in pairs:
        spans = [k ** (level - len(c)) for c in p]
        starts = [_digits(c, k) * s for c, s in zip(p, spans)]
        # Clip the key's block of first coordinates to the requested rows.
        first, last = max(starts[0], lo), min(starts[0] + spans[0], hi)
        if first >= last:
            continue
        region = (slice(first - lo, last - lo),) + tuple(
            slice(st, st + sp) for st, sp in zip(starts[1:], spans[1:])
        )
        defined[region] = True
        for i in range(n):
            shape = [1] * n
            if i == 0:
                tail = np.arange(first - starts[0], last - starts[0], dtype=np.int64)
            else:
                tail = np.arange(spans[i], dtype=np.int64)
            shape[i] = len(tail)
            tail = tail.reshape(shape)
            if as_object:
                tail = tail.astype(object)
            vals[i][region] = _digits(y[i], k) * spans[i] + tail
            lens[i][region] = len(y[i]) + level - len(p[i])
    return defined, vals, lens


def _check_level(ctx, pairs, level):
    for p, _ in pairs:
        if any(len(c) > level for c in p):
            raise LevelTooSmall(f"key longer than level {level}")
    check_cap((ctx.k ** level) ** ctx.n, f"truncation at level {level}")


def _action_from_pairs(ctx, pairs, level):
    _check_level(ctx, pairs, level)
    side = ctx.k ** level
    as_object = _needs_object(ctx, pairs, level)
    defined, vals, lens = _fill(ctx, pairs, level, 0, side, as_object)
    return TruncatedAction(ctx, level, defined, vals, lens)


def _blocks(ctx, level, budget=1 << 20):
    side = ctx.k ** level
    rows = max(1, budget // max(1, side ** (ctx.n - 1)))
    for lo in range(0, side, rows):
        yield lo, min(side, lo + rows)


def truncated_action(f, level):
    """Evaluate table ``f`` at every word of ``nA^level``."""
    return _action_from_pairs(f.ctx, _raw(f), level)


def _dense_equal(ctx, fp, gp, level):
    _check_level(ctx, fp, level)
    _check_level(ctx, gp, level)
    as_object = _needs_object(ctx, fp, level) or _needs_object(ctx, gp, level)
    for lo, hi in _blocks(ctx, level):
        a = _fill(ctx, fp, level, lo, hi, as_object)
        b = _fill(ctx, gp, level, lo, hi, as_object)
        if not np.array_equal(a[0], b[0]):
            return False
        if not all(np.array_equal(x, y) for x, y in zip(a[1] + a[2], b[1] + b[2])):
            return False
    return True


def _cell_fill(ctx, pairs, level, cuts):
    """Per cell: defined flag, and for each coordinate the offset and length.

    Inside a key's block the value at index ``x`` is ``offset + x`` with
    ``offset = digits(value) * span - start``, so equal offsets and lengths
    on a cell mean equal values at every point of the cell.
    """
    n, k = ctx.n, ctx.k
    shape = tuple(len(c) - 1 for c in cuts)
    defined = np.zeros(shape, dtype=bool)
    offsets = [np.zeros(shape, dtype=object) for _ in range(n)]
    lens = [np.zeros(shape, dtype=np.int64) for _ in range(n)]
    for p, y in pairs:
        region = []
        for i in range(n):
            span = k ** (level - len(p[i]))
            start = _digits(p[i], k) * span
            region.append(slice(cuts[i].index(start), cuts[i].index(start + span)))
        region = tuple(region)
        defined[region] = True
        for i in range(n):
            span = k ** (level - len(p[i]))
            offsets[i][region] = _digits(y[i], k) * span - _digits(p[i], k) * span
            lens[i][region] = len(y[i]) + level - len(p[i])
    return defined, offsets, lens


def _cell_equal(ctx, fp, gp, level):
    for pairs in (fp, gp):
        for p, _ in pairs:
            if any(len(c) > level for c in p):
                raise LevelTooSmall(f"key longer than level {level}")
    n, k = ctx.n, ctx.k
    cuts = []
    for i in range(n):
        marks = {0, k ** level}
        for p, _ in (*fp, *gp):
            span = k ** (level - len(p[i]))
            start = _digits(p[i], k) * span
            marks.update((start, start + span))
        cuts.append(sorted(marks))
    check_cap(int(np.prod([len(c) - 1 for c in cuts], dtype=object)), "oracle cells")
    a = _cell_fill(ctx, fp, level, cuts)
    b = _cell_fill(ctx, gp, level, cuts)
    if not np.array_equal(a[0], b[0]):
        return False
    mask = a[0]
    return all(
        np.array_equal(x[mask], y[mask]) for x, y in zip(a[1] + a[2], b[1] + b[2])
    )


def oracle_equal(f, g, method="auto"):
    """Compare two tables pointwise on the level of their longest entry.

    ``method="dense"`` evaluates every point, scanning the level set in
    blocks of first coordinates so memory stays bounded; the enumeration
    cap limits the total work.  ``method="cells"`` cuts each coordinate at
    the block boundaries of all keys, so on each resulting box both tables
    are undefined or act by one fixed substitution, and compares box by
    box.  Both read only the raw key and value strings.  ``"auto"`` is
    dense when the level set fits under the cap.
    """
    if f.ctx != g.ctx:
        return False
    ctx = f.ctx
    fp, gp = _raw(f), _raw(g)
    level = max(_raw_maxlen(fp), _raw_maxlen(gp))
    if method == "auto":
        method = "dense" if (ctx.k ** level) ** ctx.n <= get_cap() else "cells"
    if method == "dense":
        return _dense_equal(ctx, fp, gp, level)
    if method == "cells":
        return _cell_equal(ctx, fp, gp, level)
    raise ValueError(f"unknown method {method!r}")


def apply_pointwise(g, action):
    """Apply table ``g`` to every value of a truncated action."""
    ctx = action.ctx
    n, k = ctx.n, ctx.k
    pairs = _raw(g)
    longest = max((int(a.max(initial=0)) for a in action.lens), default=0)
    longest += max((len(c) for _, z in pairs for c in z), default=0)
    as_object = k ** longest >= _INT64_SAFE or action.vals[0].dtype == object
    defined, vals, lens = _empty(ctx, action.level, as_object)
    src_vals = [v.astype(object) if as_object else v for v in action.vals]
    for q, z in pairs:
        match = action.defined & ~defined
        shifts = []
        for i in range(n):
            m = len(q[i])
            long_enough = action.lens[i] >= m
            shift = np.where(long_enough, action.lens[i] - m, 0)
            head = src_vals[i] // _pow(k, shift, as_object)
            match &= long_enough & (head == _digits(q[i], k))
            shifts.append(shift)
        if not match.any():
            continue
        for i in range(n):
            scale = _pow(k, shifts[i], as_object)
            rest = src_vals[i] % scale
            vals[i][match] = (_digits(z[i], k) * scale + rest)[match]
            lens[i][match] = (len(z[i]) + shifts[i])[match]
        defined |= match
    return TruncatedAction(ctx, action.level, defined, vals, lens)


def oracle_compose_check(g, f, composite=None):
    """Check the composite table of ``g o f`` against pointwise evaluation.

    The level ``maxlen(f) + maxlen(g) + 1`` is long enough for the
    composite's keys.  ``composite`` defaults to ``tables.compose(g, f)``.
    """
    if composite is None:
        from .tables import compose

        composite = compose(g, f)
    fp, gp = _raw(f), _raw(g)
    level = _raw_maxlen(fp) + _raw_maxlen(gp) + 1
    stepwise = apply_pointwise(g, _action_from_pairs(f.ctx, fp, level))
    direct = _action_from_pairs(f.ctx, _raw(composite), level)
    return stepwise == direct
