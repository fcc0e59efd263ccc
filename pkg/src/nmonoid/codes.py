"""Finite sets of words: joins of sets, level refinement, and completion.

A *code* here is any finite set of words sharing a context.  The usual
predicates (initial-factor code, joinless, maximal joinless) are functions
of the set.  Two sets are equivalent (``equiv_fin``) when they generate the
same open subset of the n-dimensional Cantor space.

Operations that enumerate a whole level ``nA^l`` refuse to materialize more
than a configurable number of words; see :func:`enumeration_cap`.
"""

import contextlib
import contextvars
import itertools
from functools import cached_property, lru_cache

from .errors import (
    BadCoordinate,
    ElementNotInCode,
    EnumerationCapExceeded,
    LevelTooSmall,
    NotJoinless,
)
from .words import Word, check_same, maxlen, sort_key

DEFAULT_CAP = 2 ** 22

_cap = contextvars.ContextVar("enumeration_cap", default=DEFAULT_CAP)


def get_cap():
    return _cap.get()


def set_cap(value):
    """Set the enumeration cap for the current context; returns a reset token."""
    if value < 1:
        raise ValueError("enumeration cap must be positive")
    return _cap.set(int(value))


@contextlib.contextmanager
def enumeration_cap(value):
    """Temporarily change the enumeration cap."""
    token = set_cap(value)
    try:
        yield
    finally:
        _cap.reset(token)


def check_cap(count, what="enumeration"):
    cap = _cap.get()
    if count > cap:
        raise EnumerationCapExceeded(f"{what} needs {count} elements, cap is {cap}")


@lru_cache(maxsize=None)
def strings_of_length(letters, m):
    """All strings of length ``m`` over ``letters`` in lexicographic order."""
    return tuple("".join(t) for t in itertools.product(letters, repeat=m))


# Prefix tests on raw coordinate tuples; shared by the index and the
# table code so the hot loops avoid building Word objects.

def coords_le(a, b):
    return all(y.startswith(x) for x, y in zip(a, b))


def coords_join(a, b):
    out = []
    for x, y in zip(a, b):
        if len(x) >= len(y):
            if not x.startswith(y):
                return None
            out.append(x)
        else:
            if not y.startswith(x):
                return None
            out.append(y)
    return tuple(out)


class JoinIndex:
    """Nested tries over coordinate tuples.

    Coordinate 1 is a trie of letters; each of its nodes may hold a trie for
    coordinate 2, and so on.  A probe is answered by walking its own
    coordinates, so the cost follows the probe's length and the number of
    hits rather than the number of stored tuples.
    """

    _NEXT = ","  # child holding the trie of the next coordinate
    _END = None  # tuples stored at a node of the last coordinate

    def __init__(self, items):
        self._root = {}
        for t in items:
            node = self._root
            last = len(t) - 1
            for c, s in enumerate(t):
                for ch in s:
                    node = node.setdefault(ch, {})
                if c < last:
                    node = node.setdefault(self._NEXT, {})
                else:
                    node.setdefault(self._END, []).append(t)

    def _descend(self, node, c, w, out, mode):
        # mode: "below" takes prefixes of w[c], "above" takes extensions,
        # "join" takes both.
        s = w[c]
        last = c == len(w) - 1
        depth = 0
        while True:
            if depth == len(s):
                break
            if mode != "above":
                self._take(node, c, w, out, mode, last)
            node = node.get(s[depth])
            if node is None:
                return
            depth += 1
        if mode == "below":
            self._take(node, c, w, out, mode, last)
            return
        stack = [node]
        while stack:
            nd = stack.pop()
            self._take(nd, c, w, out, mode, last)
            for key, child in nd.items():
                if key is not self._END and key != self._NEXT:
                    stack.append(child)

    def _take(self, node, c, w, out, mode, last):
        if last:
            hit = node.get(self._END)
            if hit:
                out.extend(hit)
        else:
            sub = node.get(self._NEXT)
            if sub is not None:
                self._descend(sub, c + 1, w, out, mode)

    def below(self, w):
        out = []
        self._descend(self._root, 0, w, out, "below")
        return out

    def above(self, w):
        out = []
        self._descend(self._root, 0, w, out, "above")
        return out

    def joinable(self, w):
        out = []
        self._descend(self._root, 0, w, out, "join")
        return out


class Code:
    """A finite set of words with a fixed context, stored in sorted order."""

    def __init__(self, ctx, elements=()):
        words = set()
        for w in elements:
            if isinstance(w, Word):
                check_same(ctx, w.ctx)
            else:
                w = ctx.word(w)
            words.add(w)
        self.ctx = ctx
        self._set = frozenset(words)

    @classmethod
    def _from_coords(cls, ctx, coords):
        c = object.__new__(cls)
        c.ctx = ctx
        c._set = frozenset(Word._make(ctx, t) for t in coords)
        return c

    @cached_property
    def elements(self):
        return tuple(sorted(self._set, key=sort_key))

    @cached_property
    def coords(self):
        return frozenset(w.coords for w in self._set)

    @cached_property
    def index(self):
        return JoinIndex(self.coords)

    @cached_property
    def maxlen(self):
        return maxlen(self._set)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self._set)

    def __contains__(self, w):
        return w in self._set

    def __eq__(self, other):
        if not isinstance(other, Code):
            return NotImplemented
        return self.ctx == other.ctx and self._set == other._set

    def __hash__(self):
        return hash(self._set)

    def __or__(self, other):
        check_same(self.ctx, other.ctx)
        return Code(self.ctx, self._set | other._set)

    def __sub__(self, other):
        check_same(self.ctx, other.ctx)
        return Code(self.ctx, self._set - other._set)

    def __le__(self, other):
        return self._set <= other._set

    def __repr__(self):
        return "Code({" + ", ".join(str(w) for w in self.elements) + "})"

    def covers(self, w):
        """True when ``w`` lies in the right ideal generated by this set."""
        return bool(self.index.below(w.coords))


def all_words_of_level(ctx, level):
    """The set ``nA^level`` of words with every coordinate of length ``level``."""
    check_cap(ctx.k ** (ctx.n * level), f"level {level} set")
    strings = strings_of_length(ctx.letters, level)
    return Code._from_coords(ctx, itertools.product(strings, repeat=ctx.n))


def set_join(X, Y):
    """All joins ``x v y`` that exist, for ``x`` in X and ``y`` in Y."""
    check_same(X.ctx, Y.ctx)
    if len(X) > len(Y):
        X, Y = Y, X
    index = Y.index
    out = set()
    for x in X.coords:
        for y in index.joinable(x):
            out.add(coords_join(x, y))
    return Code._from_coords(X.ctx, out)


def is_initial_factor_code(X):
    """True when no two distinct elements are prefix-comparable."""
    index = X.index
    return all(len(index.below(x)) == 1 for x in X.coords)


def is_joinless(X):
    """True when no two distinct elements have a join."""
    index = X.index
    return all(len(index.joinable(x)) == 1 for x in X.coords)


def minimal_coords(items):
    """The minimal elements of a set of coordinate tuples."""
    items = set(items)
    index = JoinIndex(items)
    return {t for t in items if len(index.below(t)) == 1}


def _check_joinless(Q):
    if not is_joinless(Q):
        raise NotJoinless(f"{Q!r} is not joinless")


def _refinement_size(S, level):
    n, k = S.ctx.n, S.ctx.k
    return sum(k ** (n * level - sum(map(len, s))) for s in S.coords)


def level_refine(S, level):
    """``S v nA^level``: every extension of an element of S to the given level."""
    if level < S.maxlen:
        raise LevelTooSmall(f"level {level} is below maxlen {S.maxlen}")
    check_cap(_refinement_size(S, level), f"refinement to level {level}")
    letters = S.ctx.letters
    out = []
    for s in S.coords:
        tails = [strings_of_length(letters, level - len(c)) for c in s]
        for t in itertools.product(*tails):
            out.append(tuple(c + d for c, d in zip(s, t)))
    return Code._from_coords(S.ctx, out)


def _cylinder_covered(cell, index, letters):
    """Is the cylinder over ``cell`` contained in the ideal of the index?

    Splits the cylinder one letter at a time until every piece either sits
    above an indexed element or meets none of them.
    """
    stack = [cell]
    while stack:
        c = stack.pop()
        hits = index.joinable(c)
        if not hits:
            return False
        if any(coords_le(q, c) for q in hits):
            continue
        q = hits[0]
        i = next(j for j in range(len(c)) if len(q[j]) > len(c[j]))
        for a in letters:
            stack.append(c[:i] + (c[i] + a,) + c[i + 1:])
    return True


def equiv_fin(P, Q):
    """True when P and Q generate the same set of infinite words.

    Instead of materializing ``P v nA^l`` and ``Q v nA^l`` this checks that
    each element's cylinder is covered by the other set, splitting cylinders
    only where an element of the other set is longer.  The result agrees
    with :func:`equiv_fin_levels`.
    """
    check_same(P.ctx, Q.ctx)
    letters = P.ctx.letters
    return all(_cylinder_covered(p, Q.index, letters) for p in P.coords) and all(
        _cylinder_covered(q, P.index, letters) for q in Q.coords
    )


def equiv_fin_levels(P, Q):
    """Reference version of :func:`equiv_fin` comparing level refinements."""
    check_same(P.ctx, Q.ctx)
    level = max(P.maxlen, Q.maxlen)
    return level_refine(P, level) == level_refine(Q, level)


def is_maximal_joinless(P):
    _check_joinless(P)
    return _cylinder_covered(P.ctx.one.coords, P.index, P.ctx.letters)


def one_step_restriction(P, p, i):
    """Replace ``p`` by its k children in coordinate ``i`` (1-based)."""
    if p not in P:
        raise ElementNotInCode(f"{p} is not in the code")
    ctx = P.ctx
    if not 1 <= i <= ctx.n:
        raise BadCoordinate(f"coordinate {i} out of range 1..{ctx.n}")
    children = [
        Word._make(ctx, p.coords[: i - 1] + (p.coords[i - 1] + a,) + p.coords[i:])
        for a in ctx.letters
    ]
    return Code(ctx, (P._set - {p}) | set(children))


def completion(Q):
    """A maximal joinless code containing Q with the same maxlen.

    Adds every word of level ``maxlen(Q)`` that lies above no element of Q.
    """
    _check_joinless(Q)
    level = Q.maxlen
    everything = all_words_of_level(Q.ctx, level)
    covered = level_refine(Q, level).coords
    extra = [u for u in everything.coords if u not in covered]
    return Code._from_coords(Q.ctx, list(Q.coords) + extra)


def complement(Q):
    """The joinless code filling the space left uncovered by Q."""
    return completion(Q) - Q
