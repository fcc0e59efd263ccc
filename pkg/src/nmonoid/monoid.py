"""Monoid-level operations: words over generators, units, factorization.

Words over a generator set are read right to left: the word ``"g f"``
denotes ``g o f``, so ``f`` acts first.
"""

from typing import NamedTuple

from .codes import (
    all_words_of_level,
    complement,
    get_cap,
    is_maximal_joinless,
)
from .errors import (
    DimensionTooSmall,
    NMonoidError,
    NotJoinless,
    UnknownGenerator,
    ZeroMorphism,
)
from .tables import (
    MorphismClass,
    Table,
    apply,
    classify,
    compose,
    identity,
    image_code,
    maxlen_of,
    morphism_equal,
    normalize,
)
from .words import Word, check_same


class GeneratorSet:
    """Named tables, each with joinless keys, over one context."""

    def __init__(self, ctx, generators):
        gens = dict(generators)
        for name, table in gens.items():
            if not name or any(ch.isspace() for ch in name):
                raise NMonoidError(f"bad generator name {name!r}")
            check_same(ctx, table.ctx)
            if classify(table) < MorphismClass.RM1:
                raise NotJoinless(f"generator {name} has keys that are not joinless")
        self.ctx = ctx
        self._gens = gens
        self._cache = {}
        self.c = max((maxlen_of(t) for t in gens.values()), default=0)

    @property
    def c_gamma(self):
        return 6 * self.c

    @property
    def names(self):
        return list(self._gens)

    def __getitem__(self, name):
        try:
            return self._gens[name]
        except KeyError:
            raise UnknownGenerator(f"unknown generator {name!r}") from None

    def __contains__(self, name):
        return name in self._gens

    def __len__(self):
        return len(self._gens)

    def items(self):
        return self._gens.items()

    def word(self, w):
        """Parse ``"g f"`` (or a sequence of names) into a checked tuple."""
        symbols = tuple(w.split()) if isinstance(w, str) else tuple(w)
        for s in symbols:
            self[s]
        return symbols


def eval_word(gens, w):
    """Normal table of the product named by ``w``.

    Pads with identities to a power-of-two length, then composes adjacent
    pairs and normalizes, round after round.
    """
    symbols = gens.word(w)
    cached = gens._cache.get(symbols)
    if cached is not None:
        return cached
    if not symbols:
        result = identity(gens.ctx)
    else:
        layer = [normalize(gens[s]) for s in reversed(symbols)]
        size = 1
        while size < len(layer):
            size *= 2
        layer += [identity(gens.ctx)] * (size - len(layer))
        while len(layer) > 1:
            layer = [
                normalize(compose(layer[j + 1], layer[j])) for j in range(0, len(layer), 2)
            ]
        result = layer[0]
    gens._cache[symbols] = result
    return result


ENUMERATE_LIMIT = 1 << 14


def certificate_level(gens, u, v):
    """Level ``c_gamma * max(|u|, |v|)**3`` at which agreement proves equality."""
    return gens.c_gamma * max(len(u), len(v)) ** 3


def word_equal(gens, u, v, certificate=False, level=None):
    """Do the words ``u`` and ``v`` name the same monoid element?

    The default compares the evaluated tables.  With ``certificate=True``
    the generators are instead applied one at a time to every word of the
    certificate level and the results are compared pointwise.
    """
    u, v = gens.word(u), gens.word(v)
    if certificate:
        return certificate_equal(gens, u, v, level=level)
    return morphism_equal(eval_word(gens, u), eval_word(gens, v))


def certificate_equal(gens, u, v, level=None, method="auto"):
    """Pointwise comparison of ``u`` and ``v`` on ``nA^level``.

    ``method="enumerate"`` visits every point and is subject to the
    enumeration cap.  ``method="cylinder"`` visits the same points in
    blocks: a block is a fixed prefix followed by free letters, and it is
    split one letter at a time only when some generator needs to read
    more.  ``"auto"`` enumerates only small level sets (at most
    ``ENUMERATE_LIMIT`` points, and never past the cap).
    """
    u, v = gens.word(u), gens.word(v)
    if level is None:
        level = certificate_level(gens, u, v)
    ctx = gens.ctx
    chains = [[gens[s] for s in reversed(w)] for w in (u, v)]
    if method == "auto":
        size = ctx.k ** (ctx.n * level)
        method = "enumerate" if size <= min(ENUMERATE_LIMIT, get_cap()) else "cylinder"
    if method == "enumerate":
        for x in all_words_of_level(ctx, level):
            ys = []
            for chain in chains:
                y = x
                for t in chain:
                    y = apply(t, y)
                    if y is None:
                        break
                ys.append(y)
            if ys[0] != ys[1]:
                return False
        return True
    if method == "cylinder":
        return _cylinder_certificate(ctx, chains, level)
    raise ValueError(f"unknown method {method!r}")


def _match_block(table, y, free):
    """Apply ``table`` to the block ``y * (free letters)``.

    Returns ``("hit", value_prefix)``, ``("split", coordinate)`` when some
    key reads past the fixed prefix, or ``("miss", None)``.
    """
    split = None
    for q, val in table._map.items():
        need = None
        for i, (a, b) in enumerate(zip(q, y)):
            if b.startswith(a):
                continue
            if a.startswith(b) and len(a) - len(b) <= free[i]:
                if need is None:
                    need = i
                continue
            break
        else:
            if need is None:
                return "hit", tuple(c + b[len(a):] for c, a, b in zip(val, q, y))
            if split is None:
                split = need
    if split is not None:
        return "split", split
    return "miss", None


def _cylinder_certificate(ctx, chains, level):
    n = ctx.n
    one = ("",) * n
    # A block: free letter counts, the current prefix of each chain's
    # image (None once undefined), and the position (chain, step) reached.
    stack = [((level,) * n, [one] * len(chains), 0, 0)]
    while stack:
        free, views, c, s = stack.pop()
        while c < len(chains):
            if s == len(chains[c]) or views[c] is None:
                c, s = c + 1, 0
                continue
            kind, info = _match_block(chains[c][s], views[c], free)
            if kind == "hit":
                views[c] = info
                s += 1
            elif kind == "miss":
                views[c] = None
                c, s = c + 1, 0
            else:
                i = info
                rest = free[:i] + (free[i] - 1,) + free[i + 1:]
                for a in ctx.letters:
                    child = [
                        None if w is None else w[:i] + (w[i] + a,) + w[i + 1:] for w in views
                    ]
                    stack.append((rest, child, c, s))
                break
        else:
            # All views share the same free suffix, so comparing prefixes
            # compares the images of every point of the block.
            if views[0] != views[1]:
                return False
    return True


class Factorization(NamedTuple):
    g2: Table
    h: Table
    g1: Table
    case: int


def pseudo_inverse(f):
    """A table ``f'`` with ``f f' f`` equivalent to ``f``.

    Each image-code element is sent to the smallest key of ``normalize(f)``
    that maps to it.
    """
    phi = normalize(f)
    inverse = {}
    for p in sorted(phi._map):
        inverse.setdefault(phi._map[p], p)
    return Table._trusted(f.ctx, inverse)


def unit_inverse(f):
    """The inverse table when ``f`` is a unit, otherwise None."""
    phi = normalize(f)
    if not phi._map:
        return None
    if len(set(phi._map.values())) != len(phi._map):
        return None
    if not is_maximal_joinless(phi.domain):
        return None
    if not is_maximal_joinless(image_code(phi)):
        return None
    return Table._trusted(f.ctx, {y: p for p, y in phi._map.items()})


def is_unit(f):
    return unit_inverse(f) is not None


def maximal_prefix_code(k, size, shape="balanced"):
    """A maximal prefix code over k letters with ``size`` words.

    Starting from the empty word, a leaf is replaced by its k children
    until the size is reached.  ``shape="comb"`` always expands the
    lexicographically first leaf, giving depth ``(size - 1) / (k - 1)``.
    ``shape="balanced"`` expands the first leaf among the shortest ones,
    keeping the depth logarithmic.
    """
    if size < 1 or (size - 1) % (k - 1):
        raise ValueError(f"no maximal prefix code over {k} letters has {size} words")
    letters = "0123456789"[:k]
    if shape == "comb":
        rest = []
        leaf = ""
        while len(rest) + 1 < size:
            rest = [leaf + a for a in letters[1:]] + rest
            leaf += letters[0]
        return sorted([leaf] + rest)
    if shape != "balanced":
        raise ValueError(f"unknown shape {shape!r}")
    # Breadth-first: leaves are kept shortest first, so popping the front
    # expands a shortest leaf and its children go to the back.
    leaves = [""]
    start = 0
    while len(leaves) - start < size:
        leaf = leaves[start]
        start += 1
        leaves.extend(leaf + a for a in letters)
    return sorted(leaves[start:])


def factorize_gmg(f, shape="balanced"):
    """Write ``f`` as ``g2 o h o g1`` with units g1, g2 and h acting on coordinate 1.

    The domain and image codes of ``normalize(f)`` are completed to maximal
    joinless codes; g1 and g2 biject those with maximal prefix codes in the
    first coordinate, and h carries the remaining one-dimensional map.
    """
    ctx = f.ctx
    if ctx.n < 2:
        raise DimensionTooSmall("factorization needs dimension at least 2")
    if not f._map:
        raise ZeroMorphism("the zero morphism has no factorization")
    phi = normalize(f)
    dom = phi.domain
    img = image_code(phi)
    dom_extra = complement(dom)
    img_extra = complement(img)
    case = 1 + (1 if len(img_extra) else 0) + (2 if len(dom_extra) else 0)

    sources = [w.coords for w in dom] + [w.coords for w in dom_extra]
    targets = [w.coords for w in img] + [w.coords for w in img_extra]
    pad = ("",) * (ctx.n - 1)
    left = [(p,) + pad for p in maximal_prefix_code(ctx.k, len(sources), shape)]
    right = [(q,) + pad for q in maximal_prefix_code(ctx.k, len(targets), shape)]

    g1 = Table._trusted(ctx, dict(zip(sources, left)))
    g2 = Table._trusted(ctx, dict(zip(right, targets)))
    slot = {t: j for j, t in enumerate(targets)}
    h = Table._trusted(
        ctx, {left[j]: right[slot[phi._map[d]]] for j, d in enumerate(sources[: len(dom)])}
    )
    return Factorization(g2, h, g1, case)


def jsimplicity_witness(f, key=None):
    """Tables ``alpha``, ``beta`` with ``beta o f o alpha`` equal to the identity.

    ``alpha`` sends the identity to a key ``x`` of ``f`` (the smallest
    unless ``key`` is given), and ``beta`` sends ``f(x)`` back to the
    identity.
    """
    if not f._map:
        raise ZeroMorphism("the zero morphism has no witness")
    x = f.ctx.word(key).coords if key is not None else min(f._map)
    y = f._map[x]
    one = f.ctx.one.coords
    return Table._trusted(f.ctx, {one: x}), Table._trusted(f.ctx, {y: one})


def acts_on_first_coordinate(h):
    """True when every key and value of ``h`` is empty outside coordinate 1."""
    return all(not any(t[1:]) for pair in h._map.items() for t in pair)

