"""Words of the n-fold free monoid over k letters.

A word is an n-tuple of strings over the digits ``0..k-1``.  Multiplication
is coordinate-wise concatenation, and ``u <= v`` in the initial-factor order
when every coordinate of ``u`` is a prefix of the matching coordinate of
``v``.

>>> ctx = Context(2, 2)
>>> join(ctx.word("00,1"), ctx.word("0,11"))
Word('00,11')
>>> join(ctx.word("0,e"), ctx.word("1,e")) is None
True
"""

from dataclasses import dataclass

from .errors import ContextMismatch, EqualWords, InvalidWord, NotAnInitialFactor

EMPTY = "e"


@dataclass(frozen=True)
class Context:
    """Dimension ``n`` and alphabet size ``k`` shared by a family of words."""

    n: int
    k: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.n!r}")
        if not isinstance(self.k, int) or not 2 <= self.k <= 10:
            raise ValueError(f"alphabet size must be in 2..10, got {self.k!r}")

    @property
    def letters(self):
        return "0123456789"[: self.k]

    @property
    def one(self):
        """The identity word, all coordinates empty."""
        return Word._make(self, ("",) * self.n)

    def word(self, value):
        """Build a word from ``"01,e"`` style text or a sequence of strings."""
        if isinstance(value, Word):
            check_same(self, value.ctx)
            return value
        if isinstance(value, str):
            parts = value.split(",")
            coords = tuple("" if p == EMPTY else p for p in parts)
        else:
            coords = tuple(value)
        return Word(self, coords)

    def unit_vector(self, i, letter):
        """The word with ``letter`` at 0-based coordinate ``i``, empty elsewhere."""
        coords = [""] * self.n
        coords[i] = letter
        return Word._make(self, tuple(coords))

    def __str__(self):
        return f"n={self.n} k={self.k}"


def check_same(a, b):
    if a != b:
        raise ContextMismatch(f"context mismatch: {a} vs {b}")


class Word:
    """An immutable n-tuple of digit strings tied to a :class:`Context`."""

    __slots__ = ("ctx", "coords", "_hash")

    def __init__(self, ctx, coords):
        coords = tuple(coords)
        if len(coords) != ctx.n:
            raise InvalidWord(f"expected {ctx.n} coordinates, got {len(coords)}")
        letters = ctx.letters
        for c in coords:
            if not isinstance(c, str):
                raise InvalidWord(f"coordinate {c!r} is not a string")
            for ch in c:
                if ch not in letters:
                    raise InvalidWord(f"letter {ch!r} out of range for k={ctx.k}")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "_hash", hash(coords))

    @classmethod
    def _make(cls, ctx, coords):
        # Trusted constructor for coordinates built from already-valid words.
        w = object.__new__(cls)
        object.__setattr__(w, "ctx", ctx)
        object.__setattr__(w, "coords", coords)
        object.__setattr__(w, "_hash", hash(coords))
        return w

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.coords == other.coords and self.ctx == other.ctx

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        check_same(self.ctx, other.ctx)
        return self.coords < other.coords

    def __le__(self, other):
        check_same(self.ctx, other.ctx)
        return self.coords <= other.coords

    def __mul__(self, other):
        return concat(self, other)

    def __len__(self):
        return sum(len(c) for c in self.coords)

    @property
    def maxlen(self):
        return max(len(c) for c in self.coords)

    @property
    def is_one(self):
        return not any(self.coords)

    def __str__(self):
        return ",".join(c if c else EMPTY for c in self.coords)

    def __repr__(self):
        return f"Word({str(self)!r})"

    def __reduce__(self):
        return (Word, (self.ctx, self.coords))


def sort_key(w):
    """Key for the fixed total order on words."""
    return w.coords


def concat(x, y):
    check_same(x.ctx, y.ctx)
    return Word._make(x.ctx, tuple(a + b for a, b in zip(x.coords, y.coords)))


def is_initial_factor(u, v):
    """True when every coordinate of ``u`` is a prefix of that of ``v``."""
    check_same(u.ctx, v.ctx)
    return all(b.startswith(a) for a, b in zip(u.coords, v.coords))


def join(u, v):
    """Least upper bound of ``u`` and ``v`` in the initial-factor order, or None."""
    check_same(u.ctx, v.ctx)
    out = []
    for a, b in zip(u.coords, v.coords):
        if len(a) >= len(b):
            if not a.startswith(b):
                return None
            out.append(a)
        else:
            if not b.startswith(a):
                return None
            out.append(b)
    return Word._make(u.ctx, tuple(out))


def quotient(u, v):
    """The unique ``z`` with ``u * z == v``."""
    check_same(u.ctx, v.ctx)
    out = []
    for a, b in zip(u.coords, v.coords):
        if not b.startswith(a):
            raise NotAnInitialFactor(f"{u} is not an initial factor of {v}")
        out.append(b[len(a):])
    return Word._make(u.ctx, tuple(out))


def separating_suffix(y, z):
    """Find ``v`` such that ``y*v`` and ``z`` (or ``y`` and ``z*v``) have no join.

    Returns ``(v, side)`` where ``side`` is ``"y"`` if ``join(y*v, z)`` fails
    and ``"z"`` if ``join(y, z*v)`` fails.  When ``y`` and ``z`` already have
    no join, ``v`` is the identity and both joins fail.
    """
    check_same(y.ctx, z.ctx)
    if y == z:
        raise EqualWords(f"separating_suffix needs distinct words, got {y} twice")
    ctx = y.ctx
    if join(y, z) is None:
        return ctx.one, "y"
    for i, (a, b) in enumerate(zip(y.coords, z.coords)):
        if a == b:
            continue
        # The join exists, so one coordinate strictly extends the other.
        if len(b) > len(a):
            nxt, side = b[len(a)], "y"
        else:
            nxt, side = a[len(b)], "z"
        other = next(ch for ch in ctx.letters if ch != nxt)
        return ctx.unit_vector(i, other), side
    raise AssertionError("unreachable: distinct words with equal coordinates")


def maxlen(words):
    """Largest coordinate length over ``words``; 0 for an empty collection."""
    return max((max(map(len, w.coords)) for w in words), default=0)
