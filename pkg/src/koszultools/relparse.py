"""Parser for cubic relation expressions.

Grammar (whitespace insignificant, rationals as p/q):

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := [rational '*']? factor
    factor := prod
    prod   := atom ('*' atom)* | '[' expr ',' expr ']' | atom ('.' atom)*
    atom   := 'a' digit | '(' expr ')' | '[' expr ',' expr ']'

'*' is the plain magmatic product (parenthesization is meaningful and
chains associate to the left only formally; a well-formed cubic
monomial is explicitly bracketed).  '.' and '[ , ]' are either the
associative product with its commutator, or the polarized symmetric
product and antisymmetric bracket, depending on the target space.
Every expanded monomial must be multilinear in a1, a2, a3.
"""

from __future__ import annotations

from fractions import Fraction

from . import s3, trees

ZERO = Fraction(0)
ONE = Fraction(1)


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Tokens:
    SYMBOLS = "+-*.[](),"

    def __init__(self, text):
        self.text = text
        self.items = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch in self.SYMBOLS:
                self.items.append((ch, ch, i))
                i += 1
                continue
            if ch == "a" and i + 1 < len(text) and text[i + 1].isdigit():
                self.items.append(("var", int(text[i + 1]), i))
                i += 2
                continue
            if ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                if j < len(text) and text[j] == "/":
                    k = j + 1
                    while k < len(text) and text[k].isdigit():
                        k += 1
                    if k == j + 1:
                        raise ParseError("missing denominator", j)
                    self.items.append(("rat", Fraction(int(text[i:j]), int(text[j + 1:k])), i))
                    i = k
                else:
                    self.items.append(("rat", Fraction(int(text[i:j])), i))
                    i = j
                continue
            raise ParseError(f"unexpected character {ch!r}", i)
        self.pos = 0

    def peek(self):
        if self.pos < len(self.items):
            return self.items[self.pos]
        return ("end", None, len(self.text))

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        return tok


# AST: ("var", i) | (op, left, right) with op in "*", ".", "[]"
# expressions are lists of (coefficient, ast) pairs, already expanded.

def _parse_expr(toks):
    terms = []
    sign = ONE
    tok = toks.peek()
    if tok[0] in "+-":
        toks.next()
        sign = ONE if tok[0] == "+" else -ONE
    terms.extend(_scaled(_parse_term(toks), sign))
    while True:
        tok = toks.peek()
        if tok[0] not in "+-":
            break
        toks.next()
        sign = ONE if tok[0] == "+" else -ONE
        terms.extend(_scaled(_parse_term(toks), sign))
    return terms


def _scaled(terms, scalar):
    return [(scalar * c, node) for c, node in terms]


def _parse_term(toks):
    tok = toks.peek()
    coeff = ONE
    if tok[0] == "rat":
        toks.next()
        coeff = tok[1]
        nxt = toks.peek()
        if nxt[0] == "*":
            toks.next()
        elif nxt[0] not in ("var", "(", "["):
            raise ParseError("dangling rational coefficient", nxt[2])
    return _scaled(_parse_factor(toks), coeff)


def _parse_factor(toks):
    return _parse_prod(toks)


def _parse_prod(toks):
    left = _parse_atom(toks)
    op = None
    while True:
        tok = toks.peek()
        if tok[0] in ("*", "."):
            if op is not None and tok[0] != op:
                raise ParseError("mixed '*' and '.' in one product", tok[2])
            op = tok[0]
            toks.next()
            right = _parse_atom(toks)
            left = _combine(op, left, right)
        else:
            return left


def _parse_atom(toks):
    tok = toks.peek()
    if tok[0] == "var":
        toks.next()
        if not 1 <= tok[1] <= 3:
            raise ParseError(f"variable index a{tok[1]} outside 1..3", tok[2])
        return [(ONE, ("var", tok[1]))]
    if tok[0] == "(":
        toks.next()
        inner = _parse_expr(toks)
        toks.expect(")")
        return inner
    if tok[0] == "[":
        toks.next()
        left = _parse_expr(toks)
        toks.expect(",")
        right = _parse_expr(toks)
        toks.expect("]")
        return _combine("[]", left, right)
    raise ParseError(f"unexpected token {tok[0]!r}", tok[2])


def _combine(op, left, right):
    out = []
    for cl, nl in left:
        for cr, nr in right:
            out.append((cl * cr, (op, nl, nr)))
    return out


def _ops_used(node, acc):
    if node[0] == "var":
        return
    acc.add(node[0])
    _ops_used(node[1], acc)
    _ops_used(node[2], acc)


def _leaf_labels(node):
    if node[0] == "var":
        return (node[1],)
    return _leaf_labels(node[1]) + _leaf_labels(node[2])


def _to_symbolic(node, opmap):
    if node[0] == "var":
        return node[1]
    return (opmap[node[0]], _to_symbolic(node[1], opmap), _to_symbolic(node[2], opmap))


def _flatten_word(node):
    if node[0] == "var":
        return (node[1],)
    return _flatten_word(node[1]) + _flatten_word(node[2])


def parse_relation(text, space=None):
    """Parse a cubic relation into a CubicVector.

    space: "magmatic", "associative", or "polarized".  When omitted it
    is inferred: '*' products give a magmatic vector, '.' products and
    brackets an associative one (polarized must be requested).
    """
    toks = _Tokens(text)
    terms = _parse_expr(toks)
    end = toks.peek()
    if end[0] != "end":
        raise ParseError(f"trailing input {end[0]!r}", end[2])

    ops = set()
    for _, node in terms:
        _ops_used(node, ops)
    if "*" in ops and (ops & {".", "[]"}):
        raise ParseError("cannot mix '*' with '.' or brackets", 0)
    if space is None:
        space = "magmatic" if "*" in ops else "associative"
    if space == "magmatic" and (ops & {".", "[]"}):
        raise ParseError("magmatic expressions use '*' only", 0)
    if space in ("associative", "polarized") and "*" in ops:
        raise ParseError(f"{space} expressions use '.' and brackets", 0)

    for _, node in terms:
        labels = _leaf_labels(node)
        if sorted(labels) != [1, 2, 3]:
            raise ParseError(
                f"non-multilinear term with variables {sorted(labels)}", 0)

    if space == "magmatic":
        coords = [ZERO] * 12
        for coeff, node in terms:
            shape = _to_symbolic(node, {"*": "mu"})
            coords[_magmatic_index(shape)] += coeff
        return s3.CubicVector(s3.MAGMATIC, coords)

    if space == "associative":
        coords = [ZERO] * 6
        for coeff, word in _expand_commutators(terms):
            coords[s3.PERMS.index(word)] += coeff
        return s3.CubicVector(s3.ASSOCIATIVE, coords)

    if space == "polarized":
        from .trees import _pol_index
        index = _pol_index()
        coords = [ZERO] * 12
        for coeff, node in terms:
            symbolic = _to_symbolic(node, {".": "d", "[]": "br"})
            sign, norm = trees.normalize_tree(trees.POLARIZED_SIG, symbolic)
            coords[index[norm]] += coeff * sign
        return s3.CubicVector(s3.POLARIZED, coords)

    raise ParseError(f"unknown target space {space!r}", 0)


def _magmatic_index(shape):
    # multilinearity already forces exactly three leaves, so the shape
    # is a left comb or a right comb
    _, left, right = shape
    if isinstance(left, tuple):
        word = (left[1], left[2], right)
        comb = 0
    else:
        word = (left, right[1], right[2])
        comb = 1
    return 6 * comb + s3.PERMS.index(word)


def _expand_commutators(terms):
    """Expand '[]' as commutators of the associative product."""
    out = []
    stack = list(terms)
    while stack:
        coeff, node = stack.pop()
        bracket = _find_bracket(node)
        if bracket is None:
            out.append((coeff, _flatten_word(node)))
            continue
        plus = _replace_bracket(node, bracket, True)
        minus = _replace_bracket(node, bracket, False)
        stack.append((coeff, plus))
        stack.append((-coeff, minus))
    return out


def _find_bracket(node, path=()):
    if node[0] == "var":
        return None
    if node[0] == "[]":
        return path
    left = _find_bracket(node[1], path + (1,))
    if left is not None:
        return left
    return _find_bracket(node[2], path + (2,))


def _replace_bracket(node, path, keep_order):
    if not path:
        _, left, right = node
        return (".", left, right) if keep_order else (".", right, left)
    op, left, right = node
    if path[0] == 1:
        return (op, _replace_bracket(left, path[1:], keep_order), right)
    return (op, left, _replace_bracket(right, path[1:], keep_order))
