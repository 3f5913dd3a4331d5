"""Dense integer polynomials in q and the q-analogues built from them.

The q-factorial used here is the normalized one,

    [k]_q! = prod_{m=1}^{k} (1 + q + ... + q^{m-1}),

which differs from prod (1 - q^m) by the factor (1 - q)^k.  Those factors
cancel in every Gaussian binomial, so both conventions give the same
binomials; the normalized form keeps all intermediates non-negative.
"""

from __future__ import annotations

from functools import lru_cache


class ExactnessError(ArithmeticError):
    """A polynomial division that had to be exact left a remainder."""


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-x for x in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(x * other for x in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by q^k."""
        if k < 0:
            raise ValueError("negative shift")
        return IntPoly([0] * k + list(self.coeffs)) if self.coeffs else IntPoly()

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.leading
        quot = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            if c % lead:
                raise ExactnessError("leading coefficient does not divide")
            f = c // lead
            quot[i - db] = f
            for j, y in enumerate(other.coeffs):
                rem[i - db + j] -= f * y
        return IntPoly(quot), IntPoly(rem)

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ExactnessError(f"{self} is not divisible by {other}")
        return q

    def __call__(self, x):
        return eval_int(self, x)

    def to_list(self):
        return list(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                mono = ""
            elif k == 1:
                mono = "q"
            else:
                mono = f"q^{k}"
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


ZERO = IntPoly()
ONE = IntPoly([1])


def eval_int(p: IntPoly, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def q_integer(m: int) -> IntPoly:
    """1 + q + ... + q^{m-1}."""
    return IntPoly([1] * m)


@lru_cache(maxsize=None)
def q_factorial(k: int) -> IntPoly:
    if k < 0:
        raise ValueError("q-factorial of a negative number")
    if k == 0:
        return ONE
    return q_factorial(k - 1) * q_integer(k)


@lru_cache(maxsize=None)
def q_binomial(n: int, m: int) -> IntPoly:
    """Gaussian binomial [n choose m]_q; zero when n < m, n < 0 or m < 0."""
    if n < 0 or m < 0 or n < m:
        return ZERO
    return q_factorial(n).exact_div(q_factorial(m) * q_factorial(n - m))
