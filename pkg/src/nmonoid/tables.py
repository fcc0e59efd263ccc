"""Right-ideal morphisms given by finite tables.

A table ``{p: f(p)}`` with an antichain of keys describes the partial map
``p*u -> f(p)*u``.  When two keys have a join the table must assign the
same value to it, otherwise no morphism has that table; construction
checks this.

>>> from nmonoid.words import Context
>>> ctx = Context(1, 2)
>>> f = Table(ctx, {"0": "0", "1": "10"})
>>> g = Table(ctx, {"0": "0", "1": "0"})
>>> compose(g, f)
Table({0 -> 0, 1 -> 00})
>>> classify(compose(g, f)).name
'RM2'
"""

import enum

from .codes import (
    Code,
    JoinIndex,
    coords_join,
    coords_le,
    equiv_fin,
    is_initial_factor_code,
    is_joinless,
    level_refine,
    minimal_coords,
)
from .errors import (
    DomainNotAntichain,
    DuplicateKey,
    InconsistentTable,
    OutsideDomain,
    StarConditionViolated,
)
from .words import Word, check_same, sort_key


class MorphismClass(enum.IntEnum):
    """Finest class of a table; larger values are more restrictive."""

    RM0 = 0  # keys form an initial-factor code
    RM1 = 1  # keys are joinless
    RM2 = 2  # keys and image code are joinless
    NORM = 3  # additionally, every value belongs to the image code


def _extend(prefix, old, new):
    """``prefix * (old \\ new)`` on coordinate tuples, for ``old <= new``."""
    return tuple(a + c[len(b):] for a, b, c in zip(prefix, old, new))


class Table:
    """A finite table of a right-ideal morphism."""

    def __init__(self, ctx, entries=()):
        pairs = entries.items() if hasattr(entries, "items") else entries
        mapping = {}
        for key, value in pairs:
            key, value = ctx.word(key), ctx.word(value)
            if key.coords in mapping:
                raise DuplicateKey(f"key {key} appears twice")
            mapping[key.coords] = value.coords
        self.ctx = ctx
        self._map = mapping
        self._check()

    @classmethod
    def _trusted(cls, ctx, mapping):
        t = object.__new__(cls)
        t.ctx = ctx
        t._map = mapping
        return t

    def _check(self):
        if not is_initial_factor_code(self.domain):
            raise DomainNotAntichain("table keys are not an initial-factor code")
        index = self.key_index
        for p, y in self._map.items():
            for q in index.joinable(p):
                if q == p:
                    continue
                z = coords_join(p, q)
                if _extend(y, p, z) != _extend(self._map[q], q, z):
                    raise InconsistentTable(
                        f"keys {Word._make(self.ctx, p)} and {Word._make(self.ctx, q)} "
                        "disagree on their join"
                    )

    @property
    def domain(self):
        d = self.__dict__.get("_domain")
        if d is None:
            d = self.__dict__["_domain"] = Code._from_coords(self.ctx, self._map)
        return d

    @property
    def key_index(self):
        idx = self.__dict__.get("_key_index")
        if idx is None:
            idx = self.__dict__["_key_index"] = JoinIndex(self._map)
        return idx

    def items(self):
        """(key, value) pairs as words, in key order."""
        ctx = self.ctx
        for p in sorted(self._map):
            yield Word._make(ctx, p), Word._make(ctx, self._map[p])

    def keys(self):
        return [k for k, _ in self.items()]

    def values(self):
        return [v for _, v in self.items()]

    def __getitem__(self, key):
        return Word._make(self.ctx, self._map[self.ctx.word(key).coords])

    def __len__(self):
        return len(self._map)

    def __call__(self, x):
        return apply(self, x)

    def __eq__(self, other):
        if not isinstance(other, Table):
            return NotImplemented
        return self.ctx == other.ctx and self._map == other._map

    def __hash__(self):
        return hash(frozenset(self._map.items()))

    def __repr__(self):
        body = ", ".join(f"{k} -> {v}" for k, v in self.items())
        return f"Table({{{body}}})"


def validate(ctx, entries):
    """Build a :class:`Table`, checking keys and consistency."""
    return Table(ctx, entries)


def identity(ctx):
    one = ctx.one.coords
    return Table._trusted(ctx, {one: one})


def zero(ctx):
    return Table._trusted(ctx, {})


def _apply_coords(f, x):
    for p in f.key_index.below(x):
        return _extend(f._map[p], p, x)
    return None


def apply(f, x):
    """``f(x)``, or None when ``x`` is outside the domain ideal."""
    check_same(f.ctx, x.ctx)
    y = _apply_coords(f, x.coords)
    return None if y is None else Word._make(f.ctx, y)


def dom_code(f):
    return f.domain


def value_set(f):
    return Code._from_coords(f.ctx, set(f._map.values()))


def image_code(f):
    """Minimal elements of the value set; they generate the image ideal."""
    return Code._from_coords(f.ctx, minimal_coords(f._map.values()))


def classify(f):
    if not is_joinless(f.domain):
        return MorphismClass.RM0
    img = image_code(f)
    if not is_joinless(img):
        return MorphismClass.RM1
    if len(img) == len(set(f._map.values())):
        return MorphismClass.NORM
    return MorphismClass.RM2


def maxlen_of(f):
    return max(
        (len(c) for t in (*f._map, *f._map.values()) for c in t),
        default=0,
    )


def _check_star(f, S):
    values = JoinIndex(set(f._map.values()))
    for s in S.coords:
        for y in values.joinable(s):
            if not coords_le(y, s):
                raise StarConditionViolated(
                    f"value {Word._make(f.ctx, y)} overlaps {Word._make(f.ctx, s)} "
                    "without being below it"
                )


def _preimage_pairs(f, S):
    _check_star(f, S)
    index = S.index
    out = {}
    for p, y in f._map.items():
        for s in index.above(y):
            out[_extend(p, y, s)] = s
    return out


def preimage_code(f, S):
    """Generators of ``f^-1(S nA*)``: each key extended so its image lies in S."""
    check_same(f.ctx, S.ctx)
    return Code._from_coords(f.ctx, _preimage_pairs(f, S))


def restrict(f, C):
    """The table of ``f`` on the ideal generated by C."""
    check_same(f.ctx, C.ctx)
    if not is_initial_factor_code(C):
        raise DomainNotAntichain("restriction keys are not an initial-factor code")
    out = {}
    for c in C.coords:
        y = _apply_coords(f, c)
        if y is None:
            raise OutsideDomain(f"{Word._make(f.ctx, c)} is outside the domain")
        out[c] = y
    return Table._trusted(f.ctx, out)


def compose(g, f):
    """Table of ``g o f`` (apply f first), built from joins of f's values with g's keys."""
    check_same(g.ctx, f.ctx)
    gi = g.key_index
    gmap = g._map
    out = {}
    for p, y in f._map.items():
        for q in gi.joinable(y):
            z = coords_join(y, q)
            out[_extend(p, y, z)] = _extend(gmap[q], q, z)
    if len(out) > 1:
        # Keys can be comparable when an input domain is not joinless.
        keep = minimal_coords(out)
        if len(keep) < len(out):
            out = {p: out[p] for p in keep}
    return Table._trusted(g.ctx, out)


def common_refinement(ctx, items):
    """A joinless code refining the ideal of ``items`` as little as needed.

    Cells are split one letter at a time, starting from the identity, in
    the first coordinate where some overlapping item is longer.  A cell
    stops once every item it overlaps lies below it, so each item's
    cylinder is the disjoint union of the cells above it.
    """
    index = JoinIndex(items)
    letters = ctx.letters
    out = []
    stack = [ctx.one.coords]
    while stack:
        c = stack.pop()
        hits = index.joinable(c)
        if not hits:
            continue
        split = None
        for t in hits:
            for i, (a, b) in enumerate(zip(t, c)):
                if len(a) > len(b) and (split is None or i < split):
                    split = i
        if split is None:
            out.append(c)
            continue
        head, tail = c[:split], c[split + 1:]
        for a in letters:
            stack.append(head + (c[split] + a,) + tail)
    return out


def _refined_pairs(f):
    """Entries of f on a joinless refinement of its keys (consistent tables)."""
    if is_joinless(f.domain):
        return dict(f._map)
    out = {}
    index = f.key_index
    for c in common_refinement(f.ctx, f._map):
        p = index.below(c)[0]
        out[c] = _extend(f._map[p], p, c)
    return out


def normalize(f, method="refine"):
    """An equivalent table whose values are exactly its image code.

    Tables that are already normal come back unchanged.  Keys and values
    are lengthened together until the keys are joinless and every two
    values are equal or have no join.

    ``method="refine"`` splits only where another key or value forces it
    (see :func:`common_refinement`).  ``method="level"`` lifts all keys to
    level ``maxlen(keys)`` and then all values to level ``maxlen(values)``
    before restricting to the preimage.  That can be exponentially larger,
    but both results satisfy the same length bounds.
    """
    if not f._map or classify(f) is MorphismClass.NORM:
        return f
    if method == "level":
        P = f.domain
        h = restrict(f, level_refine(P, P.maxlen))
        hc = value_set(h)
        S = level_refine(hc, hc.maxlen)
        return Table._trusted(f.ctx, _preimage_pairs(h, S))
    if method != "refine":
        raise ValueError(f"unknown method {method!r}")
    pairs = _refined_pairs(f)
    cells = JoinIndex(common_refinement(f.ctx, set(pairs.values())))
    out = {}
    for p, y in pairs.items():
        for s in cells.above(y):
            out[_extend(p, y, s)] = s
    return Table._trusted(f.ctx, out)


def morphism_equal(f, g):
    """True when f and g induce the same partial map on infinite words.

    The domains must generate the same ideal up to finite equivalence, and
    f and g must agree on every join of a key of f with a key of g.
    """
    check_same(f.ctx, g.ctx)
    if not equiv_fin(f.domain, g.domain):
        return False
    gi = g.key_index
    for p, y in f._map.items():
        for q in gi.joinable(p):
            z = coords_join(p, q)
            if _extend(y, p, z) != _extend(g._map[q], q, z):
                return False
    return True


def is_injective(f):
    phi = normalize(f)
    return len(set(phi._map.values())) == len(phi._map)


def from_words(ctx, mapping):
    """Table from a mapping of Words, skipping validation (internal use)."""
    return Table._trusted(ctx, {k.coords: v.coords for k, v in mapping.items()})


def sorted_words(words):
    return sorted(words, key=sort_key)
