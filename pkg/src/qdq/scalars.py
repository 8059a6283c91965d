"""Exact scalar arithmetic: rationals and the field Q(s) with q = s^M.

Every coefficient in the package is an element of Q(s), the field of
rational functions in one indeterminate s over the rationals.  The quantum
parameter is q = s^M, where the root order M is chosen large enough that
every fractional power q^a occurring in a computation is a plain power of
s.  Polynomials are stored dense in ascending degree; the canonical form
(coprime numerator/denominator, monic denominator) is unique, so equality
is structural.

Rationals are gmpy2.mpq when available, fractions.Fraction otherwise;
both expose numerator/denominator and print as "p/q".
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import (
    FieldMismatchError,
    NonRepresentableExponentError,
    ZeroInverseError,
)

try:
    from gmpy2 import mpq as _mpq

    def Q(a, b=1):
        """Exact rational number, canonical and hashable."""
        return _mpq(a, b)

except ImportError:  # pragma: no cover - exercised only without gmpy2
    def Q(a, b=1):
        """Exact rational number, canonical and hashable."""
        return Fraction(a, b)

_Q0 = Q(0)
_Q1 = Q(1)


def as_rational(x):
    """Coerce int / Fraction / mpq / 'p/q' string to the rational type."""
    if isinstance(x, str):
        return Q(Fraction(x))
    return Q(x)


def lcm_denominators(values) -> int:
    """lcm of the denominators of an iterable of rationals (at least 1)."""
    m = 1
    for v in values:
        m = math.lcm(m, int(as_rational(v).denominator))
    return m


# ---------------------------------------------------------------------------
# Dense polynomials over Q: tuples of rationals, ascending degree, no
# trailing zeros; the zero polynomial is the empty tuple.
# ---------------------------------------------------------------------------

def _ptrim(cs):
    cs = list(cs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _ptrim(out)


def _pneg(a):
    return tuple(-c for c in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        c = a[0]
        return tuple(c * x for x in b)
    if len(b) == 1:
        c = b[0]
        return tuple(c * x for x in a)
    out = [_Q0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _ptrim(out)


def _pdivmod(a, b):
    """Euclidean division over Q; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [_Q0] * (len(a) - db)
    for k in range(len(a) - len(b), -1, -1):
        c = r[db + k] / lb
        if c:
            q[k] = c
            for i in range(db + 1):
                r[k + i] -= c * b[i]
    return _ptrim(q), _ptrim(r)


def _pdiv_exact(a, b):
    q, r = _pdivmod(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def _pmonic(a):
    if not a:
        return ()
    lc = a[-1]
    if lc == 1:
        return tuple(a)
    return tuple(c / lc for c in a)


def _valuation(a):
    for i, c in enumerate(a):
        if c:
            return i
    return None


def _is_monomial(a):
    return sum(1 for c in a if c) == 1


def _int_primitive(p):
    """Clear denominators and content; ascending list of Python/gmp ints."""
    den = 1
    for c in p:
        den = math.lcm(den, int(c.denominator))
    ints = [int(c * den) for c in p]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints]


def _int_prem_desc(a, b):
    """Pseudo-remainder of descending integer coefficient lists."""
    r = list(a)
    db = len(b) - 1
    lb = b[0]
    while len(r) - 1 >= db:
        lead = r[0]
        r = [lb * c for c in r]
        for i in range(db + 1):
            r[i] -= lead * b[i]
        r.pop(0)
        while r and r[0] == 0:
            r.pop(0)
    return r


def _pgcd(a, b):
    """Monic gcd over Q via a primitive pseudo-remainder sequence."""
    if not a:
        return _pmonic(b)
    if not b:
        return _pmonic(a)
    if len(a) == 1 or len(b) == 1:
        return (_Q1,)
    va, vb = _valuation(a), _valuation(b)
    v = min(va, vb)
    if _is_monomial(a) or _is_monomial(b):
        return ((_Q0,) * v) + (_Q1,)
    if v:
        a, b = a[va:], b[vb:]
    u = _int_primitive(a)[::-1]
    w = _int_primitive(b)[::-1]
    if len(u) < len(w):
        u, w = w, u
    while w:
        r = _int_prem_desc(u, w)
        if r:
            g = 0
            for c in r:
                g = math.gcd(g, c)
            r = [c // g for c in r]
        u, w = w, r
    core = _pmonic(tuple(Q(c) for c in reversed(u)))
    if v:
        core = ((_Q0,) * v) + tuple(c for c in core)
        # re-trim not needed: leading coefficient of core is 1
    return core


def _peval(a, x):
    acc = _Q0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _pstr(p, var="s"):
    if not p:
        return "0"
    terms = []
    for e in range(len(p) - 1, -1, -1):
        c = p[e]
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            mono = var if e == 1 else f"{var}^{e}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


# ---------------------------------------------------------------------------
# The scalar field and its elements
# ---------------------------------------------------------------------------

class ScalarField:
    """Q(s) with the convention q = s^root_order.

    All values exchanged between modules must carry the same root order;
    mixing fields raises FieldMismatchError.
    """

    __slots__ = ("root_order", "zero", "one", "s", "q", "q_inv")

    def __init__(self, root_order: int = 1):
        if not isinstance(root_order, int) or root_order < 1:
            raise ValueError(f"root order must be a positive integer, got {root_order!r}")
        self.root_order = root_order
        self.zero = RatFunc._raw((), (_Q1,), self)
        self.one = RatFunc._raw((_Q1,), (_Q1,), self)
        self.s = self.monomial(1)
        self.q = self.monomial(root_order)
        self.q_inv = self.monomial(-root_order)

    def __eq__(self, other):
        return isinstance(other, ScalarField) and other.root_order == self.root_order

    def __hash__(self):
        return hash(("ScalarField", self.root_order))

    def __repr__(self):
        return f"ScalarField(root_order={self.root_order})"

    def monomial(self, e: int, coeff=_Q1) -> RatFunc:
        """coeff * s^e, e may be negative."""
        c = as_rational(coeff)
        if not c:
            return self.zero
        if e >= 0:
            return RatFunc._raw((_Q0,) * e + (c,), (_Q1,), self)
        return RatFunc._raw((c,), (_Q0,) * (-e) + (_Q1,), self)

    def from_rational(self, x) -> RatFunc:
        c = as_rational(x)
        if not c:
            return self.zero
        return RatFunc._raw((c,), (_Q1,), self)

    def from_coeffs(self, num, den=(1,)) -> RatFunc:
        """Build and canonicalize from raw coefficient sequences."""
        return _make(
            tuple(as_rational(c) for c in num),
            tuple(as_rational(c) for c in den),
            self,
        )

    def q_power(self, r) -> RatFunc:
        return q_power(r, self)


def _make(num, den, field) -> RatFunc:
    num = _ptrim(num)
    den = _ptrim(den)
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    if not num:
        return field.zero
    g = _pgcd(num, den)
    if len(g) > 1 or g[0] != 1:
        num = _pdiv_exact(num, g)
        den = _pdiv_exact(den, g)
    lc = den[-1]
    if lc != 1:
        num = tuple(c / lc for c in num)
        den = tuple(c / lc for c in den)
    return RatFunc._raw(num, den, field)


_ONE_DEN = (_Q1,)


class RatFunc:
    """Element of Q(s) in canonical form.

    Immutable; arithmetic returns canonical elements.  Equality against
    ints and rationals compares with the constant element.
    """

    __slots__ = ("num", "den", "field")

    def __init__(self, *_args, **_kwargs):
        raise TypeError("use ScalarField factories (from_coeffs, monomial, ...)")

    @staticmethod
    def _raw(num, den, field) -> RatFunc:
        self = object.__new__(RatFunc)
        self.num = num
        self.den = den
        self.field = field
        return self

    # -- predicates --------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def is_one(self):
        return self.num == _ONE_DEN and self.den == _ONE_DEN

    def is_constant(self):
        return len(self.num) <= 1 and self.den == _ONE_DEN

    # -- ring operations ----------------------------------------------------

    def _check(self, other):
        if self.field.root_order != other.field.root_order:
            raise FieldMismatchError(
                f"mixed root orders {self.field.root_order} and {other.field.root_order}"
            )

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) or type(other) is type(_Q0):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            return self
        if not self:
            return other
        if self.den == other.den:
            num = _padd(self.num, other.num)
            if self.den == _ONE_DEN:
                return RatFunc._raw(num, _ONE_DEN, self.field) if num else self.field.zero
            return _make(num, self.den, self.field)
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return _make(num, _pmul(self.den, other.den), self.field)

    __radd__ = __add__

    def __neg__(self):
        if not self:
            return self
        return RatFunc._raw(_pneg(self.num), self.den, self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self or not other:
            return self.field.zero
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        # cross-cancellation keeps factors small and avoids a final gcd
        g1 = _pgcd(n1, d2)
        if len(g1) > 1 or g1[0] != 1:
            n1 = _pdiv_exact(n1, g1)
            d2 = _pdiv_exact(d2, g1)
        g2 = _pgcd(n2, d1)
        if len(g2) > 1 or g2[0] != 1:
            n2 = _pdiv_exact(n2, g2)
            d1 = _pdiv_exact(d1, g2)
        num = _pmul(n1, n2)
        den = _pmul(d1, d2)
        lc = den[-1]
        if lc != 1:
            num = tuple(c / lc for c in num)
            den = tuple(c / lc for c in den)
        return RatFunc._raw(num, den, self.field)

    __rmul__ = __mul__

    def inv(self) -> RatFunc:
        """Multiplicative inverse; raises ZeroInverseError on zero."""
        if not self.num:
            raise ZeroInverseError("inverse of the zero rational function")
        num, den = self.den, self.num
        lc = den[-1]
        if lc != 1:
            num = tuple(c / lc for c in num)
            den = tuple(c / lc for c in den)
        return RatFunc._raw(num, den, self.field)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inv() ** (-e)
        out = self.field.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return (
                self.field.root_order == other.field.root_order
                and self.num == other.num
                and self.den == other.den
            )
        if isinstance(other, (int, Fraction)) or type(other) is type(_Q0):
            c = as_rational(other)
            if not c:
                return not self.num
            return self.den == _ONE_DEN and self.num == (c,)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den, self.field.root_order))

    # -- misc ----------------------------------------------------------------

    def evaluate(self, x):
        """Exact value at a rational point; the point must not be a pole."""
        x = as_rational(x)
        d = _peval(self.den, x)
        if not d:
            raise ZeroDivisionError(f"pole at s = {x}")
        return _peval(self.num, x) / d

    def __str__(self):
        if self.den == _ONE_DEN:
            return _pstr(self.num)
        n = _pstr(self.num)
        if len([c for c in self.num if c]) > 1:
            n = f"({n})"
        d = _pstr(self.den)
        if len([c for c in self.den if c]) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatFunc({self}, M={self.field.root_order})"


def q_power(r, field: ScalarField) -> RatFunc:
    """q^r as an element of Q(s), where q = s^M.

    Defined only when r*M is an integer; otherwise the root order was
    computed wrongly upstream and NonRepresentableExponentError is raised.
    """
    r = as_rational(r)
    e = r * field.root_order
    if e.denominator != 1:
        raise NonRepresentableExponentError(
            f"q^{r} is not a power of s at root order {field.root_order}"
        )
    return field.monomial(int(e))
