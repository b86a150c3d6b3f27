"""Exact truncated power series in one variable t.

Coefficients are either plain ``Fraction`` values or ``UPolynomial``
polynomials in a weight variable u with Fraction coefficients.  Every
series here has zero constant term (f(0) = 0) and stores the
coefficients of t^1 .. t^N for an explicit truncation order N.  Mixing
truncation orders or coefficient domains raises ``SeriesError`` instead
of silently re-truncating: golden values in the test suite depend on
reproducible orders.

The compositional inverse is computed by a degree-by-degree linear
solve, which is exact over any commutative coefficient ring; the sign
tests on inverse coefficients are the package's Koszulness obstruction
machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

ZERO = Fraction(0)
ONE = Fraction(1)

RATIONAL = "rational"
WEIGHTED = "weighted"


class SeriesError(ValueError):
    pass


class UPolynomial:
    """Polynomial in the weight variable u with Fraction coefficients.

    Immutable; trailing zeros are trimmed.  The zero polynomial has
    degree None (the "minus infinity" marker).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return ZERO

    def __eq__(self, other):
        if isinstance(other, UPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UPolynomial((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _upoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPolynomial([self[i] + other[i] for i in range(n)])

    def __sub__(self, other):
        other = _upoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPolynomial([self[i] - other[i] for i in range(n)])

    def __neg__(self):
        return UPolynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UPolynomial([c * other for c in self.coeffs])
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, value):
        """Evaluate at a rational value of u."""
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*u")
            else:
                parts.append(f"{c}*u^{i}")
        return " + ".join(parts)


U_ZERO = UPolynomial()
U_ONE = UPolynomial((ONE,))
U = UPolynomial((ZERO, ONE))


def _upoly(x):
    if isinstance(x, UPolynomial):
        return x
    return UPolynomial((x,))


def _domain_zero(domain):
    return U_ZERO if domain == WEIGHTED else ZERO


def _domain_one(domain):
    return U_ONE if domain == WEIGHTED else ONE


@dataclass(frozen=True)
class PositivityVerdict:
    """Outcome of a sign test on inverse coefficients.

    status is "pass" (good signs through the truncation order) or
    "violation"; on violation the witness records (arity n, u power or
    None, the raw inverse coefficient at that position).
    """

    status: str
    order: int
    arity: int | None = None
    u_power: int | None = None
    coefficient: Fraction | None = None

    @property
    def passed(self):
        return self.status == "pass"


class PowerSeries:
    """Series c_1 t + ... + c_N t^N with an explicit truncation order N."""

    __slots__ = ("order", "coeffs", "domain")

    def __init__(self, coeffs, domain=None):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise SeriesError("truncation order must be positive")
        if domain is None:
            domain = WEIGHTED if any(isinstance(c, UPolynomial) for c in coeffs) else RATIONAL
        if domain == WEIGHTED:
            coeffs = tuple(_upoly(c) for c in coeffs)
        else:
            coeffs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)
        object.__setattr__(self, "order", len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "domain", domain)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @classmethod
    def zero(cls, order, domain=RATIONAL):
        return cls([_domain_zero(domain)] * order, domain)

    @classmethod
    def identity(cls, order, domain=RATIONAL):
        cs = [_domain_zero(domain)] * order
        cs[0] = _domain_one(domain)
        return cls(cs, domain)

    def coeff(self, n):
        """Coefficient of t^n (1-indexed up to the truncation order)."""
        if not 1 <= n <= self.order:
            raise SeriesError(f"coefficient index {n} outside 1..{self.order}")
        return self.coeffs[n - 1]

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return (self.order, self.domain, self.coeffs) == (other.order, other.domain, other.coeffs)

    def __hash__(self):
        return hash((self.order, self.domain, self.coeffs))

    def _check_compatible(self, other):
        if self.domain != other.domain:
            raise SeriesError(f"coefficient domain mismatch: {self.domain} vs {other.domain}")
        if self.order != other.order:
            raise SeriesError(f"truncation order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check_compatible(other)
        return PowerSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.domain)

    def __sub__(self, other):
        self._check_compatible(other)
        return PowerSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.domain)

    def __neg__(self):
        return PowerSeries([-a for a in self.coeffs], self.domain)

    def scale(self, scalar):
        if self.domain == WEIGHTED:
            scalar = _upoly(scalar)
        else:
            scalar = Fraction(scalar) if not isinstance(scalar, Fraction) else scalar
        return PowerSeries([scalar * a for a in self.coeffs], self.domain)

    def __mul__(self, other):
        self._check_compatible(other)
        return PowerSeries(_mul_coeffs(self.coeffs, other.coeffs, self.order, self.domain),
                           self.domain)

    def compose(self, other):
        """self(other(t)); other has zero constant term by construction."""
        self._check_compatible(other)
        return PowerSeries(_compose_coeffs(self.coeffs, other.coeffs, self.order, self.domain),
                           self.domain)

    def reverse(self):
        """Compositional inverse g with self(g) = g(self) = t.

        Requires leading coefficient 1.  Solved degree by degree: the
        coefficient of t^n in f(g) is g_n plus terms in g_1..g_{n-1}
        only, so each step is a single linear extraction.
        """
        one = _domain_one(self.domain)
        if self.coeffs[0] != one:
            raise SeriesError("compositional inverse requires leading coefficient 1")
        n = self.order
        zero = _domain_zero(self.domain)
        g = [zero] * n
        g[0] = one
        for k in range(2, n + 1):
            fk = _compose_coeffs(self.coeffs[:k], g[:k], k, self.domain)
            g[k - 1] = -fk[k - 1]
        return PowerSeries(g, self.domain)

    def truncate(self, order):
        if order > self.order:
            raise SeriesError("cannot extend a truncated series")
        return PowerSeries(self.coeffs[:order], self.domain)

    def specialize(self, value):
        """Substitute a rational value for u (weighted domain only)."""
        if self.domain != WEIGHTED:
            raise SeriesError("specialize applies to the weighted domain")
        return PowerSeries([c(value) for c in self.coeffs], RATIONAL)

    def __repr__(self):
        return f"PowerSeries(order={self.order}, {format_series(self)!r})"


def _mul_coeffs(a, b, order, domain):
    zero = _domain_zero(domain)
    out = [zero] * order
    for i, ca in enumerate(a):
        if i + 2 > order:
            break
        if ca == zero:
            continue
        # t^(i+1) * t^(j+1) lands at index i+j+1
        for j in range(0, order - i - 1):
            cb = b[j]
            if cb == zero:
                continue
            out[i + j + 1] += ca * cb
    return out


def _compose_coeffs(f, g, order, domain):
    zero = _domain_zero(domain)
    acc = [zero] * order
    power = list(g[:order]) + [zero] * (order - len(g))
    for i in range(min(len(f), order)):
        ci = f[i]
        if i > 0:
            power = _mul_coeffs(power, g, order, domain)
        if ci != zero:
            for k in range(order):
                acc[k] += ci * power[k]
        # g has valuation >= 1, so g^(i+1) has valuation >= i+1
        if i + 2 > order:
            break
    return acc


def series_from_dims(dims, order=None):
    """Exponential generating series with c_n = dims[n-1] / n!."""
    dims = list(dims)
    if order is None:
        order = len(dims)
    if order > len(dims):
        raise SeriesError("not enough dimensions for the requested order")
    return PowerSeries([Fraction(dims[n - 1], factorial(n)) for n in range(1, order + 1)])


def dims_from_series(f):
    """Inverse of series_from_dims; every n! * c_n must be a nonnegative integer."""
    if f.domain != RATIONAL:
        raise SeriesError("dimension extraction applies to the rational domain")
    dims = []
    for n in range(1, f.order + 1):
        d = f.coeff(n) * factorial(n)
        if d.denominator != 1 or d < 0:
            raise SeriesError(f"coefficient of t^{n} is not dimension-like: {f.coeff(n)}")
        dims.append(int(d))
    return dims


def gk_positivity(f):
    """Sign test on the compositional inverse: (-1)^(n-1) a_n >= 0.

    Reports the first arity violating the rule together with the raw
    inverse coefficient there.
    """
    if f.domain != RATIONAL:
        raise SeriesError("gk_positivity applies to the rational domain")
    g = f.reverse()
    for n in range(1, g.order + 1):
        a = g.coeff(n)
        if (a if n % 2 == 1 else -a) < 0:
            return PositivityVerdict("violation", f.order, arity=n, coefficient=a)
    return PositivityVerdict("pass", f.order)


def weighted_positivity(f):
    """Weighted sign test: (-1)^(n-1) a_n(u) must have nonnegative coefficients."""
    if f.domain != WEIGHTED:
        raise SeriesError("weighted_positivity applies to the weighted domain")
    g = f.reverse()
    for n in range(1, g.order + 1):
        a = g.coeff(n)
        adjusted = a if n % 2 == 1 else -a
        for i, c in enumerate(adjusted.coeffs):
            if c < 0:
                return PositivityVerdict("violation", f.order, arity=n,
                                         u_power=i, coefficient=a[i])
    return PositivityVerdict("pass", f.order)


def koszul_pair_check(f, g):
    """True iff -g(-f(t)) = t up to the common truncation order."""
    if f.domain != RATIONAL or g.domain != RATIONAL:
        raise SeriesError("pair check applies to the rational domain")
    f._check_compatible(g)
    composed = (-g).compose(-f)
    return -composed == PowerSeries.identity(f.order)


def functional_equation_check(f, which):
    """Check the defining series equation for the two named operads.

    which = "tpa":    f - f^2 + f^3/6 = t
    which = "lieadm": 1 - exp(-f) - f^2/2 = t   (exponential truncated)
    """
    if f.domain != RATIONAL:
        raise SeriesError("functional equations apply to the rational domain")
    t = PowerSeries.identity(f.order)
    if which == "tpa":
        lhs = f - f * f + (f * f * f).scale(Fraction(1, 6))
    elif which == "lieadm":
        lhs = _one_minus_exp_neg(f) - (f * f).scale(Fraction(1, 2))
    else:
        raise SeriesError(f"unknown functional equation {which!r}")
    return lhs == t


def _one_minus_exp_neg(f):
    # 1 - exp(-f) = sum_{k>=1} (-1)^(k+1) f^k / k!, constant term drops out.
    order = f.order
    acc = PowerSeries.zero(order)
    power = f
    for k in range(1, order + 1):
        if k > 1:
            power = power * f
        term = power.scale(Fraction((-1) ** (k + 1), factorial(k)))
        acc = acc + term
    return acc


def solve_functional_equation(which, order):
    """Series solution of the named equation, degree by degree.

    Both equations have linear part f, so the coefficient of t^n in the
    left side is f_n plus terms in lower coefficients only.
    """
    t = PowerSeries.identity(order)
    coeffs = [ONE] + [ZERO] * (order - 1)
    for n in range(2, order + 1):
        trial = PowerSeries(coeffs)
        if which == "tpa":
            lhs = trial - trial * trial + (trial * trial * trial).scale(Fraction(1, 6))
        elif which == "lieadm":
            lhs = _one_minus_exp_neg(trial) - (trial * trial).scale(Fraction(1, 2))
        else:
            raise SeriesError(f"unknown functional equation {which!r}")
        coeffs[n - 1] = coeffs[n - 1] - (lhs.coeff(n) - t.coeff(n))
    return PowerSeries(coeffs)


# ---------------------------------------------------------------------------
# Named series presets
#
# Each entry is either a dims rule n -> dim (expanded through the
# requested order) or a dedicated builder for the weighted series.

def _dims_rule(table, default):
    def rule(n):
        return table.get(n, default(n))
    return rule


def _product_rule(start, step):
    # dims 1, start, start*(start+step), ... : a_n = prod_{j=2..n} (start + step*(j-2))
    def rule(n):
        if n == 1:
            return 1
        d = 1
        for j in range(2, n + 1):
            d *= start + step * (j - 2)
        return d
    return rule


_DIMS_PRESETS = {
    "(0,0,0)": lambda n: factorial(n),
    "ass": lambda n: factorial(n),
    "(0,0,1)": _dims_rule({1: 1, 2: 2, 3: 5, 4: 9}, lambda n: 2 * n - 1),
    "(0,1,0)generic": _dims_rule({1: 1, 2: 2, 3: 4}, lambda n: 1),
    "(0,1,0)ab=0": _dims_rule({1: 1, 2: 2, 3: 4}, lambda n: n),
    "(0,1,0)a=b": _dims_rule({1: 1, 2: 2, 3: 4, 4: 3}, lambda n: 1),
    "(0,1,0)a=-b": lambda n: 2 ** (n - 1),
    "(0,1,1)ab!=0": _dims_rule({1: 1, 2: 2, 3: 3}, lambda n: 1),
    "(0,1,1)ab=0": lambda n: n,
    "(0,2,0)": _dims_rule({1: 1, 2: 2, 3: 2}, lambda n: 1),
    "(0,2,1)": _dims_rule({1: 1, 2: 2}, lambda n: 1),
    "(1,0,1)": _dims_rule({1: 1, 2: 2, 3: 4}, lambda n: 0),
    "(1,1,0)generic": _dims_rule({1: 1, 2: 2, 3: 3}, lambda n: 0),
    "(1,1,0)a=-b": _dims_rule({1: 1, 2: 2, 3: 3, 4: 1}, lambda n: 0),
    "(1,1,1)": _dims_rule({1: 1, 2: 2, 3: 2}, lambda n: 0),
    "(1,2,0)": _dims_rule({1: 1, 2: 2, 3: 1}, lambda n: 0),
    "(1,2,1)": _dims_rule({1: 1, 2: 2}, lambda n: 0),
    "paramfamily-dual": _product_rule(2, 3),
    "magmatic": _product_rule(2, 4),
    "prelie": lambda n: n ** (n - 1),
}


def _weighted_two_step(order):
    # arity n, weight k dimension binomial(n, 2k); u marks the weight.
    coeffs = []
    for n in range(1, order + 1):
        poly = UPolynomial([Fraction(comb(n, 2 * k), factorial(n))
                            for k in range(n // 2 + 1)])
        coeffs.append(poly)
    return PowerSeries(coeffs, WEIGHTED)


def _weighted_almost_constant(order):
    # weighted series for the two-copy case: (1+u)/2 t^2 + (1+u)/6 t^3, then t^k/k!.
    coeffs = [U_ONE]
    for n in range(2, order + 1):
        if n in (2, 3):
            coeffs.append(UPolynomial([Fraction(1, factorial(n)), Fraction(1, factorial(n))]))
        else:
            coeffs.append(UPolynomial([Fraction(1, factorial(n))]))
    return PowerSeries(coeffs, WEIGHTED)


_WEIGHTED_PRESETS = {
    "(0,1,0)a=-b:weighted": _weighted_two_step,
    "(0,2,0):weighted": _weighted_almost_constant,
}


def preset_names():
    names = sorted(_DIMS_PRESETS) + sorted(_WEIGHTED_PRESETS) + ["tpa", "lieadm"]
    return names


def preset_series(name, order):
    """Exact truncated expansion of a named closed-form series."""
    if order < 1:
        raise SeriesError("truncation order must be positive")
    if name in _WEIGHTED_PRESETS:
        return _WEIGHTED_PRESETS[name](order)
    if name in ("tpa", "lieadm"):
        return solve_functional_equation(name, order)
    rule = _DIMS_PRESETS.get(name)
    if rule is None:
        raise SeriesError(f"unknown series preset {name!r}")
    return series_from_dims([rule(n) for n in range(1, order + 1)])


# ---------------------------------------------------------------------------
# Text format used by the CLI and reports

def format_coefficient(c):
    if isinstance(c, UPolynomial):
        if not c.coeffs:
            return "[0]"
        return "[" + ", ".join(str(x) for x in c.coeffs) + "]"
    return str(c)


def format_series(f):
    return ", ".join(format_coefficient(c) for c in f.coeffs)


def parse_series(text):
    """Parse the format emitted by format_series."""
    text = text.strip()
    if not text:
        raise SeriesError("empty series text")
    if "[" in text:
        coeffs = []
        for chunk in text.split(";") if ";" in text else _split_bracketed(text):
            chunk = chunk.strip().strip(",").strip()
            if not (chunk.startswith("[") and chunk.endswith("]")):
                raise SeriesError(f"bad weighted coefficient {chunk!r}")
            inner = chunk[1:-1].strip()
            parts = [p.strip() for p in inner.split(",")] if inner else []
            coeffs.append(UPolynomial([Fraction(p) for p in parts]))
        return PowerSeries(coeffs, WEIGHTED)
    return PowerSeries([Fraction(p.strip()) for p in text.split(",")])


def _split_bracketed(text):
    chunks = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            chunks.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        chunks.append("".join(cur))
    return chunks
