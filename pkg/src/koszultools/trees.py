"""Shuffle tree monomials over a signature of binary generators.

A tree monomial is a rooted planar binary tree whose internal vertices
carry generator ids and whose leaves are labelled bijectively by 1..n,
subject to the shuffle condition: at every internal vertex the minimal
leaf labels of the two subtrees increase from left to right.  Trees are
stored as nested tuples (gen_id, left, right) with int leaves, which
makes structural equality and hashing free.

The monomial order is path-lexicographic: monomials are compared by the
sequences of root-to-leaf generator words, leafwise for leaves 1..n,
with words compared by generator precedence; the word-extension rule
(whether a longer word with equal prefix wins or loses) is part of the
order configuration, and planar direction words break remaining ties.
Monotonicity under grafting is a tested property, not an assumption.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import s3

ZERO = Fraction(0)
ONE = Fraction(1)


class ShuffleError(ValueError):
    pass


class GraftError(ShuffleError):
    pass


@dataclass(frozen=True)
class Generator:
    """Binary generator; skew describes behaviour under argument swap.

    skew "symmetric" keeps the generator with sign +1, "antisymmetric"
    keeps it with sign -1, and "none" selects the partner generator of
    the signature (generators with skew "none" pair up in declaration
    order).
    """

    id: str
    weight: int = 0
    skew: str = "none"


@dataclass(frozen=True)
class Signature:
    """Ordered generators plus the order configuration.

    precedence lists generator ids from greatest to least; extension is
    the word-extension rule of the path order ("longer": a longer word
    with equal prefix is greater; "shorter": it is smaller).
    """

    generators: tuple
    precedence: tuple = ()
    extension: str = "longer"

    def __post_init__(self):
        ids = [g.id for g in self.generators]
        if len(set(ids)) != len(ids):
            raise ShuffleError("generator ids must be unique")
        if not ids:
            raise ShuffleError("signature needs at least one generator")
        prec = self.precedence or tuple(ids)
        if sorted(prec) != sorted(ids):
            raise ShuffleError("precedence must cover exactly the generator ids")
        if self.extension not in ("longer", "shorter"):
            raise ShuffleError(f"unknown extension rule {self.extension!r}")
        object.__setattr__(self, "precedence", tuple(prec))

    @property
    def ids(self):
        return tuple(g.id for g in self.generators)

    def generator(self, gid):
        for g in self.generators:
            if g.id == gid:
                return g
        raise ShuffleError(f"unknown generator {gid!r}")

    def weight_of(self, gid):
        return self.generator(gid).weight

    def is_graded(self):
        return any(g.weight for g in self.generators)

    def with_order(self, precedence=None, extension=None):
        return Signature(self.generators,
                         tuple(precedence) if precedence else self.precedence,
                         extension or self.extension)

    def swap_rule(self, gid):
        """(partner id, sign) describing the generator with swapped arguments."""
        g = self.generator(gid)
        if g.skew == "symmetric":
            return gid, 1
        if g.skew == "antisymmetric":
            return gid, -1
        plain = [h.id for h in self.generators if h.skew == "none"]
        if len(plain) % 2 != 0:
            raise ShuffleError("skew-free generators must come in pairs")
        i = plain.index(gid)
        partner = plain[i + 1] if i % 2 == 0 else plain[i - 1]
        return partner, 1


# Shared signatures.  The magmatic pair b/c are the two shuffle
# generators of one plain binary product (c takes the arguments in
# swapped order); d/br are the polarized symmetric product and
# antisymmetric bracket, bracket graded with weight 1.
MAGMATIC_SIG = Signature((Generator("b"), Generator("c")))
POLARIZED_SIG = Signature((Generator("br", weight=1, skew="antisymmetric"),
                           Generator("d", weight=0, skew="symmetric")),
                          precedence=("br", "d"))


# ---------------------------------------------------------------------------
# Raw node helpers (node = int leaf | (gid, left, right))

def _min_leaf(node):
    while not isinstance(node, int):
        node = node[1]
    return node


def node_key(node):
    """Structural sort key usable across leaves and internal nodes."""
    if isinstance(node, int):
        return (0, node)
    return (1, node[0], node_key(node[1]), node_key(node[2]))


def _leaves(node):
    if isinstance(node, int):
        return (node,)
    return _leaves(node[1]) + _leaves(node[2])


def _check_node(node, sig):
    if isinstance(node, int):
        return
    gid, left, right = node
    sig.generator(gid)
    if not isinstance(left, int):
        _check_node(left, sig)
    if not isinstance(right, int):
        _check_node(right, sig)
    if _min_leaf(left) >= _min_leaf(right):
        raise ShuffleError(f"shuffle condition fails at {node!r}")


def _internal_paths(node, prefix=()):
    """All internal vertex positions, post-order (left, right, vertex)."""
    if isinstance(node, int):
        return
    yield from _internal_paths(node[1], prefix + (0,))
    yield from _internal_paths(node[2], prefix + (1,))
    yield prefix


def _subtree_at(node, path):
    for step in path:
        node = node[step + 1]
    return node


def _splice(node, path, sub):
    if not path:
        return sub
    gid, left, right = node
    if path[0] == 0:
        return (gid, _splice(left, path[1:], sub), right)
    return (gid, left, _splice(right, path[1:], sub))


def _node_weight(node, sig):
    if isinstance(node, int):
        return 0
    return sig.weight_of(node[0]) + _node_weight(node[1], sig) + _node_weight(node[2], sig)


class TreeMonomial:
    """Immutable shuffle tree monomial."""

    __slots__ = ("node", "arity")

    def __init__(self, node, sig=None, _checked=False):
        if not _checked:
            if sig is None:
                raise ShuffleError("signature required for validation")
            leaves = _leaves(node)
            if sorted(leaves) != list(range(1, len(leaves) + 1)):
                raise ShuffleError(f"leaves {leaves} are not a bijective labelling")
            _check_node(node, sig)
        object.__setattr__(self, "node", node)
        object.__setattr__(self, "arity", 1 if isinstance(node, int) else len(_leaves(node)))

    def __setattr__(self, name, value):
        raise AttributeError("TreeMonomial is immutable")

    def __eq__(self, other):
        return isinstance(other, TreeMonomial) and self.node == other.node

    def __hash__(self):
        return hash(self.node)

    def weight(self, sig):
        return _node_weight(self.node, sig)

    def __repr__(self):
        return f"TreeMonomial({format_monomial(self)})"


LEAF_MONOMIAL = TreeMonomial(1, _checked=True)


def format_monomial(m):
    def fmt(node):
        if isinstance(node, int):
            return str(node)
        return f"{node[0]}({fmt(node[1])},{fmt(node[2])})"
    return fmt(m.node if isinstance(m, TreeMonomial) else m)


def parse_monomial(text, sig):
    """Parse the nested text form, e.g. "b(b(1,3),2)"."""
    pos = 0
    s = text.replace(" ", "")

    def parse():
        nonlocal pos
        if pos < len(s) and s[pos].isdigit():
            start = pos
            while pos < len(s) and s[pos].isdigit():
                pos += 1
            return int(s[start:pos])
        start = pos
        while pos < len(s) and s[pos] not in "(),":
            pos += 1
        gid = s[start:pos]
        if pos >= len(s) or s[pos] != "(":
            raise ShuffleError(f"expected '(' at position {pos} of {text!r}")
        pos += 1
        left = parse()
        if pos >= len(s) or s[pos] != ",":
            raise ShuffleError(f"expected ',' at position {pos} of {text!r}")
        pos += 1
        right = parse()
        if pos >= len(s) or s[pos] != ")":
            raise ShuffleError(f"expected ')' at position {pos} of {text!r}")
        pos += 1
        return (gid, left, right)

    node = parse()
    if pos != len(s):
        raise ShuffleError(f"trailing input at position {pos} of {text!r}")
    return TreeMonomial(node, sig)


# ---------------------------------------------------------------------------
# Monomial order

@lru_cache(maxsize=None)
def _rank_map(sig):
    n = len(sig.precedence)
    return {gid: n - i for i, gid in enumerate(sig.precedence)}, n + 1


@lru_cache(maxsize=None)
def sort_key(sig, node):
    """Total-order key; larger key = greater monomial."""
    ranks, sentinel = _rank_map(sig)
    shorter = sig.extension == "shorter"
    words = {}
    dirs = {}
    stack = [(node, (), ())]
    while stack:
        cur, gw, dw = stack.pop()
        if isinstance(cur, int):
            words[cur] = gw + (sentinel,) if shorter else gw
            dirs[cur] = dw
        else:
            gid, left, right = cur
            r = (ranks[gid],)
            stack.append((left, gw + r, dw + (0,)))
            stack.append((right, gw + r, dw + (1,)))
    n = len(words)
    return (tuple(words[i] for i in range(1, n + 1)),
            tuple(dirs[i] for i in range(1, n + 1)))


def compare(sig, m1, m2):
    """-1, 0, or 1 as m1 is less than, equal to, or greater than m2."""
    if m1.arity != m2.arity:
        raise ShuffleError("cannot compare monomials of different arities")
    k1 = sort_key(sig, m1.node)
    k2 = sort_key(sig, m2.node)
    return (k1 > k2) - (k1 < k2)


# ---------------------------------------------------------------------------
# Enumeration

class BudgetExceeded(RuntimeError):
    pass


def count_monomials(sig, arity):
    """Number of shuffle monomials: shapes times generator labellings."""
    g = len(sig.generators)
    if arity == 1:
        return 1
    # all-binary shuffle trees with n leaves number (2n-2)!/(n-1)!/g-free part;
    # with g generator choices per vertex the count is g^(n-1) * shapes.
    return g ** (arity - 1) * _shape_count(arity)


@lru_cache(maxsize=None)
def _shape_count(n):
    if n == 1:
        return 1
    total = 0
    for left in range(1, n):
        # leaf 1 goes left; choose the rest of the left label set
        total += _comb(n - 1, left - 1) * _shape_count(left) * _shape_count(n - left)
    return total


def _comb(n, k):
    return factorial(n) // (factorial(k) * factorial(n - k))


@lru_cache(maxsize=None)
def _enumerate_nodes(gen_ids, labels):
    if len(labels) == 1:
        return (labels[0],)
    out = []
    first, rest = labels[0], labels[1:]
    for left_size in range(1, len(labels)):
        for extra in itertools.combinations(rest, left_size - 1):
            left_labels = (first,) + extra
            right_labels = tuple(x for x in rest if x not in extra)
            for ln in _enumerate_nodes(gen_ids, left_labels):
                for rn in _enumerate_nodes(gen_ids, right_labels):
                    for gid in gen_ids:
                        out.append((gid, ln, rn))
    return tuple(out)


def enumerate_monomials(sig, arity, weight=None, budget=2_000_000):
    """All shuffle monomials of the arity, sorted by the monomial order."""
    if arity < 1:
        raise ShuffleError("arity must be positive")
    if budget is not None and count_monomials(sig, arity) > budget:
        raise BudgetExceeded(
            f"{count_monomials(sig, arity)} monomials at arity {arity} "
            f"exceed the budget of {budget}")
    nodes = _enumerate_nodes(sig.ids, tuple(range(1, arity + 1)))
    if weight is not None:
        nodes = [n for n in nodes if _node_weight(n, sig) == weight]
    nodes = sorted(nodes, key=lambda n: sort_key(sig, n))
    return [TreeMonomial(n, _checked=True) for n in nodes]


# ---------------------------------------------------------------------------
# Grafting

def graft(outer, slot, inner, inner_labels):
    """Substitute inner at the given leaf of outer with a label shuffle.

    inner_labels is the increasing tuple of result labels given to the
    leaves of inner; the remaining labels go to the other leaves of
    outer in their original order.  The datum is rejected if the result
    violates the shuffle condition.
    """
    k, m = outer.arity, inner.arity
    n = k + m - 1
    inner_labels = tuple(inner_labels)
    if not 1 <= slot <= k:
        raise GraftError(f"slot {slot} outside 1..{k}")
    if len(inner_labels) != m or list(inner_labels) != sorted(set(inner_labels)):
        raise GraftError("inner_labels must be an increasing tuple of the inner arity")
    if any(not 1 <= x <= n for x in inner_labels):
        raise GraftError(f"labels must lie in 1..{n}")
    remaining = [x for x in range(1, n + 1) if x not in set(inner_labels)]
    outer_map = {}
    i = 0
    for leaf in range(1, k + 1):
        if leaf == slot:
            continue
        outer_map[leaf] = remaining[i]
        i += 1
    inner_map = {j + 1: lab for j, lab in enumerate(inner_labels)}

    def relabel(node, mapping):
        if isinstance(node, int):
            return mapping[node]
        return (node[0], relabel(node[1], mapping), relabel(node[2], mapping))

    def build(node):
        if isinstance(node, int):
            if node == slot:
                return relabel(inner.node, inner_map)
            return outer_map[node]
        return (node[0], build(node[1]), build(node[2]))

    result = build(outer.node)
    try:
        _check_node(result, _SIG_FREE)
    except ShuffleError as exc:
        raise GraftError(f"invalid shuffle datum {inner_labels}: {exc}") from exc
    return TreeMonomial(result, _checked=True)


class _AnySig:
    """Duck-typed signature accepting any generator id (validation only)."""

    @staticmethod
    def generator(gid):
        return gid


_SIG_FREE = _AnySig()


def graft_all(outer, slot, inner):
    """All valid graftings of inner at the slot, over label shuffles."""
    n = outer.arity + inner.arity - 1
    out = []
    for labels in itertools.combinations(range(1, n + 1), inner.arity):
        try:
            out.append((labels, graft(outer, slot, inner, labels)))
        except GraftError:
            continue
    return out


# ---------------------------------------------------------------------------
# Divisors

@dataclass(frozen=True)
class Embedding:
    """Occurrence of a divisor: root position plus the bound subtrees.

    bound[i] is the subtree of the ambient monomial standing at leaf
    i+1 of the divisor; replacing the divisor by another monomial of
    the same arity re-attaches the bound subtrees by leaf label.
    """

    path: tuple
    bound: tuple


def _match(dnode, mnode, bound):
    if isinstance(dnode, int):
        bound[dnode] = mnode
        return True
    if isinstance(mnode, int):
        return False
    if dnode[0] != mnode[0]:
        return False
    return _match(dnode[1], mnode[1], bound) and _match(dnode[2], mnode[2], bound)


def _embedding_at(mnode, path, dnode, darity):
    sub = _subtree_at(mnode, path)
    bound = {}
    if not _match(dnode, sub, bound):
        return None
    mins = [_min_leaf(bound[i]) for i in range(1, darity + 1)]
    if any(mins[i] >= mins[i + 1] for i in range(len(mins) - 1)):
        return None
    return Embedding(path, tuple(bound[i] for i in range(1, darity + 1)))


def find_divisors(m, d):
    """All occurrences of d as a shuffle divisor of m, post-order."""
    if d.arity > m.arity:
        return []
    out = []
    for path in _internal_paths(m.node):
        emb = _embedding_at(m.node, path, d.node, d.arity)
        if emb is not None:
            out.append(emb)
    return out


def first_divisor(m, d):
    """First occurrence in post-order (leftmost-innermost), or None."""
    if d.arity > m.arity:
        return None
    for path in _internal_paths(m.node):
        emb = _embedding_at(m.node, path, d.node, d.arity)
        if emb is not None:
            return emb
    return None


def is_divisible(m, d):
    return first_divisor(m, d) is not None


def replace_at(m, embedding, replacement):
    """Substitute the occurrence by a monomial of the divisor's arity."""
    def expand(node):
        if isinstance(node, int):
            return embedding.bound[node - 1]
        return (node[0], expand(node[1]), expand(node[2]))

    new_node = _splice(m.node, embedding.path, expand(replacement.node))
    return TreeMonomial(new_node, _checked=True)


# ---------------------------------------------------------------------------
# Common multiples (overlaps)

def _strip(node):
    if isinstance(node, int):
        return None
    return (node[0], _strip(node[1]), _strip(node[2]))


def _glue(anode, bnode):
    """Superpose two stripped shapes; None leaves absorb anything."""
    if anode is None:
        return bnode
    if bnode is None:
        return anode
    if anode[0] != bnode[0]:
        raise GraftError("generator clash")
    return (anode[0], _glue(anode[1], bnode[1]), _glue(anode[2], bnode[2]))


def _glue_at(ashape, path, bshape):
    if not path:
        return _glue(ashape, bshape)
    gid, left, right = ashape
    if path[0] == 0:
        return (gid, _glue_at(left, path[1:], bshape), right)
    return (gid, left, _glue_at(right, path[1:], bshape))


def _shape_leaves(shape):
    if shape is None:
        return 1
    return _shape_leaves(shape[1]) + _shape_leaves(shape[2])


def _labelings(shape, labels):
    """All shuffle-valid assignments of the label set to a stripped shape."""
    if shape is None:
        return [labels[0]]
    left_size = _shape_leaves(shape[1])
    out = []
    first, rest = labels[0], labels[1:]
    for extra in itertools.combinations(rest, left_size - 1):
        left_labels = (first,) + extra
        right_labels = tuple(x for x in rest if x not in extra)
        for ln in _labelings(shape[1], left_labels):
            for rn in _labelings(shape[2], right_labels):
                out.append((shape[0], ln, rn))
    return out


def common_multiples(d1, d2, max_arity=None):
    """Small common multiples of d1 and d2 with overlapping embeddings.

    Returns triples (monomial, embedding of d1, embedding of d2) where
    the two images share at least one vertex and jointly cover every
    vertex of the monomial; the list is deterministic and deduplicated.
    """
    seen = set()
    out = []
    for a, b, swapped in ((d1, d2, False), (d2, d1, True)):
        ashape = _strip(a.node)
        for path in _internal_paths(a.node):
            try:
                shape = _glue_at(ashape, path, _strip(b.node))
            except GraftError:
                continue
            n = _shape_leaves(shape)
            if max_arity is not None and n > max_arity:
                continue
            for node in _labelings(shape, tuple(range(1, n + 1))):
                try:
                    _check_node(node, _SIG_FREE)
                except ShuffleError:
                    continue
                ea = _embedding_at(node, (), a.node, a.arity)
                eb = _embedding_at(node, path, b.node, b.arity)
                if ea is None or eb is None:
                    continue
                e1, e2 = (eb, ea) if swapped else (ea, eb)
                key = (node, e1.path, e2.path)
                if key in seen:
                    continue
                seen.add(key)
                out.append((TreeMonomial(node, _checked=True), e1, e2))
    out.sort(key=lambda t: (t[0].arity, node_key(t[0].node), t[1].path, t[2].path))
    return out


# ---------------------------------------------------------------------------
# Linear combinations

class TreeElement:
    """Rational linear combination of tree monomials of one arity."""

    __slots__ = ("arity", "terms")

    def __init__(self, terms=None, arity=None):
        data = {}
        if terms:
            for mono, coeff in (terms.items() if isinstance(terms, dict) else terms):
                coeff = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
                if coeff == 0:
                    continue
                if arity is None:
                    arity = mono.arity
                elif mono.arity != arity:
                    raise ShuffleError("mixed arities in a tree element")
                data[mono] = data.get(mono, ZERO) + coeff
                if data[mono] == 0:
                    del data[mono]
        object.__setattr__(self, "terms", data)
        object.__setattr__(self, "arity", arity)

    def __setattr__(self, name, value):
        raise AttributeError("TreeElement is immutable")

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, TreeElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
            if out[m] == 0:
                del out[m]
        return TreeElement(out, self.arity if self.arity is not None else other.arity)

    def __sub__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) - c
            if out[m] == 0:
                del out[m]
        return TreeElement(out, self.arity if self.arity is not None else other.arity)

    def scale(self, scalar):
        scalar = Fraction(scalar)
        if scalar == 0:
            return TreeElement({}, self.arity)
        return TreeElement({m: scalar * c for m, c in self.terms.items()}, self.arity)

    def leading(self, sig):
        """(monomial, coefficient) with the greatest monomial."""
        if not self.terms:
            raise ShuffleError("zero element has no leading term")
        mono = max(self.terms, key=lambda m: sort_key(sig, m.node))
        return mono, self.terms[mono]

    def monic(self, sig):
        _, c = self.leading(sig)
        return self.scale(ONE / c)

    def weight(self, sig):
        weights = {m.weight(sig) for m in self.terms}
        if len(weights) > 1:
            return None
        return weights.pop() if weights else None

    def __repr__(self):
        if not self.terms:
            return "TreeElement(0)"
        parts = []
        for m in sorted(self.terms, key=lambda m: node_key(m.node)):
            parts.append(f"{self.terms[m]}*{format_monomial(m)}")
        return "TreeElement(" + " + ".join(parts) + ")"


# ---------------------------------------------------------------------------
# Translation from symmetric relations to shuffle relations

def normalize_tree(sig, node):
    """Normalize a labelled generator tree into (sign, shuffle node).

    Child order is repaired bottom-up: a vertex whose subtree minima
    decrease is replaced by its swap image (same or partner generator,
    with the skew sign).
    """
    if isinstance(node, int):
        return 1, node
    sl, left = normalize_tree(sig, node[1])
    sr, right = normalize_tree(sig, node[2])
    sign = sl * sr
    if _min_leaf(left) < _min_leaf(right):
        return sign, (node[0], left, right)
    gid, extra = sig.swap_rule(node[0])
    return sign * extra, (gid, right, left)


def _magmatic_symbolic(index):
    """Symbolic tree of a magmatic-12 basis monomial, pre-normalization."""
    comb, pidx = divmod(index, 6)
    s = s3.PERMS[pidx]
    if comb == 0:
        return ("b", ("b", s[0], s[1]), s[2])
    return ("b", s[0], ("b", s[1], s[2]))


@lru_cache(maxsize=None)
def _pol_basis():
    return tuple(enumerate_monomials(POLARIZED_SIG, 3))


@lru_cache(maxsize=None)
def _mag_basis():
    return tuple(enumerate_monomials(MAGMATIC_SIG, 3))


def polarized_basis():
    """The 12 polarized shuffle monomials, in monomial order (normative)."""
    return list(_pol_basis())


def magmatic_shuffle_basis():
    return list(_mag_basis())


@lru_cache(maxsize=None)
def _pol_index():
    return {m.node: i for i, m in enumerate(_pol_basis())}


def _relabel(node, s):
    if isinstance(node, int):
        return s[node - 1]
    return (node[0], _relabel(node[1], s), _relabel(node[2], s))


def polarized_act(s, v):
    """S3 action on polarized-12 coordinates, with bracket signs."""
    coords = [ZERO] * 12
    index = _pol_index()
    for i, c in enumerate(v.coords):
        if c == 0:
            continue
        sign, node = normalize_tree(POLARIZED_SIG, _relabel(_pol_basis()[i].node, s))
        coords[index[node]] += c * sign
    return s3.CubicVector(s3.POLARIZED, coords)


def vector_to_element(v):
    """Coordinate vector (magmatic-12 or polarized-12) as a TreeElement."""
    terms = {}
    if v.space == s3.MAGMATIC:
        for i, c in enumerate(v.coords):
            if c == 0:
                continue
            sign, node = normalize_tree(MAGMATIC_SIG, _magmatic_symbolic(i))
            mono = TreeMonomial(node, _checked=True)
            terms[mono] = terms.get(mono, ZERO) + c * sign
    elif v.space == s3.POLARIZED:
        for i, c in enumerate(v.coords):
            if c == 0:
                continue
            terms[_pol_basis()[i]] = c
    else:
        raise ShuffleError(f"no shuffle realization for space {v.space!r}")
    return TreeElement(terms, 3)


def element_to_vector(e, space):
    """Inverse of vector_to_element on arity-3 elements."""
    if space == s3.POLARIZED:
        index = _pol_index()
        coords = [ZERO] * 12
        for mono, c in e.terms.items():
            coords[index[mono.node]] += c
        return s3.CubicVector(space, coords)
    if space == s3.MAGMATIC:
        lookup = {}
        for i in range(12):
            sign, node = normalize_tree(MAGMATIC_SIG, _magmatic_symbolic(i))
            lookup[node] = (i, sign)
        coords = [ZERO] * 12
        for mono, c in e.terms.items():
            i, sign = lookup[mono.node]
            coords[i] += c * sign
        return s3.CubicVector(space, coords)
    raise ShuffleError(f"no shuffle realization for space {space!r}")


def symmetric_to_shuffle(sig, relations):
    """Shuffle relations of a list of symmetric cubic relations.

    Each relation (magmatic-12 or polarized-12 vector) contributes all
    six S3-translates, rewritten in shuffle monomials; duplicates are
    collapsed after scaling the first nonzero coordinate to one.
    """
    out = []
    seen = set()
    for v in relations:
        for s in s3.PERMS:
            moved = s3.s3_act(s, v)
            elem = vector_to_element(moved)
            if elem.is_zero():
                continue
            first = min(elem.terms, key=lambda m: node_key(m.node))
            canon = elem.scale(ONE / elem.terms[first])
            key = frozenset(canon.terms.items())
            if key in seen:
                continue
            seen.add(key)
            out.append(elem)
    return out
