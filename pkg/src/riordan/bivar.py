"""Bivariate polynomials, rational generating functions, and their expansions.

The rational functions that appear in this package all have tiny polynomial
numerators and denominators, so :class:`BivarPoly` is a sparse table keyed by
``(x_degree, y_degree)``.  :func:`expand` turns a ratio of two such
polynomials into the dense matrix of its power series coefficients via the
linear recurrence obtained from ``Q * S = P``.
"""

from __future__ import annotations

from fractions import Fraction


class ZeroConstant(ValueError):
    """Denominator vanishes at the origin, so no power series expansion exists."""


class DimensionError(ValueError):
    """Matrix shapes do not match the request."""


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class BivarPoly:
    """Sparse bivariate polynomial with exact rational coefficients."""

    __slots__ = ("coeffs", "dx", "dy")

    def __init__(self, table=None):
        coeffs = {}
        if table:
            for (i, j), c in table.items():
                c = _frac(c)
                if c:
                    coeffs[(i, j)] = c
        self.coeffs = coeffs
        self.dx = max((i for i, _ in coeffs), default=0)
        self.dy = max((j for _, j in coeffs), default=0)

    def __repr__(self):
        if not self.coeffs:
            return "BivarPoly(0)"
        terms = []
        for (i, j) in sorted(self.coeffs):
            c = self.coeffs[(i, j)]
            mono = "".join(
                p
                for p in (
                    f"x^{i}" if i > 1 else ("x" if i == 1 else ""),
                    f"y^{j}" if j > 1 else ("y" if j == 1 else ""),
                )
                if p
            )
            terms.append(f"{c}{'*' if mono else ''}{mono}")
        return "BivarPoly(" + " + ".join(terms) + ")"

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.coeffs.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def _coerce(self, other):
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BivarPoly({(0, 0): other})
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    __hash__ = None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = dict(self.coeffs)
        for k, c in o.coeffs.items():
            t[k] = t.get(k, Fraction(0)) + c
        return BivarPoly(t)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in o.coeffs.items():
                k = (i1 + i2, j1 + j2)
                t[k] = t.get(k, Fraction(0)) + c1 * c2
        return BivarPoly(t)

    __rmul__ = __mul__


ONE = BivarPoly({(0, 0): 1})
X = BivarPoly({(1, 0): 1})
Y = BivarPoly({(0, 1): 1})


def bivar_add(a: BivarPoly, b: BivarPoly) -> BivarPoly:
    return a + b


def bivar_mul(a: BivarPoly, b: BivarPoly) -> BivarPoly:
    return a * b


def from_univariate(coeff_list, var: str = "x") -> BivarPoly:
    """Embed a univariate coefficient list as a polynomial in x or in y."""
    if var == "x":
        return BivarPoly({(i, 0): c for i, c in enumerate(coeff_list)})
    if var == "y":
        return BivarPoly({(0, j): c for j, c in enumerate(coeff_list)})
    raise ValueError("var must be 'x' or 'y'")


class CoeffMatrix:
    """Dense square matrix of exact rationals."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = [[_frac(c) for c in row] for row in rows]
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise DimensionError("matrix must be square and fully populated")
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "CoeffMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __repr__(self):
        return f"CoeffMatrix({self.n}x{self.n})"

    def __getitem__(self, i: int):
        return self.rows[i]

    def __eq__(self, other):
        if not isinstance(other, CoeffMatrix):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None

    def __mul__(self, other):
        if not isinstance(other, CoeffMatrix):
            return NotImplemented
        if self.n != other.n:
            raise DimensionError("size mismatch in matrix product")
        n = self.n
        cols = list(zip(*other.rows))
        return CoeffMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def transpose(self) -> "CoeffMatrix":
        return CoeffMatrix([list(col) for col in zip(*self.rows)])

    def leading(self, m: int) -> "CoeffMatrix":
        if m > self.n:
            raise DimensionError(f"leading {m}x{m} block of a {self.n}x{self.n} matrix")
        return CoeffMatrix([row[:m] for row in self.rows[:m]])

    def is_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.n) for j in range(i)
        )

    def is_lower_triangular(self) -> bool:
        return all(
            self.rows[i][j] == 0 for i in range(self.n) for j in range(i + 1, self.n)
        )

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for row in self.rows for c in row)


class BivariateRational:
    """Ratio P/Q of bivariate polynomials with Q(0,0) != 0."""

    __slots__ = ("num", "den")

    def __init__(self, num: BivarPoly, den: BivarPoly):
        if den.coefficient(0, 0) == 0:
            raise ZeroConstant("denominator vanishes at the origin")
        self.num = num
        self.den = den

    def __repr__(self):
        return f"BivariateRational({self.num!r} / {self.den!r})"

    def __add__(self, other):
        if not isinstance(other, BivariateRational):
            return NotImplemented
        return BivariateRational(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other):
        if not isinstance(other, BivariateRational):
            return NotImplemented
        return BivariateRational(
            self.num * other.den - other.num * self.den, self.den * other.den
        )


def expand(r: BivariateRational, N: int) -> CoeffMatrix:
    """N x N coefficient matrix of the power series expansion of r.

    Uses the recurrence from Q*S = P: with q = Q(0,0),

        s[n][k] = (p[n][k] - sum over (i,j) != (0,0) of q[i][j]*s[n-i][k-j]) / q

    Row-major order visits every needed earlier entry first.
    """
    q0 = r.den.coefficient(0, 0)
    if q0 == 0:
        raise ZeroConstant("denominator vanishes at the origin")
    qterms = [(i, j, c) for (i, j), c in r.den.coeffs.items() if (i, j) != (0, 0)]
    s = [[Fraction(0)] * N for _ in range(N)]
    for n in range(N):
        for k in range(N):
            acc = r.num.coefficient(n, k)
            for i, j, c in qterms:
                if i <= n and j <= k:
                    acc -= c * s[n - i][k - j]
            s[n][k] = acc / q0
    return CoeffMatrix(s)


class IdentityCheck:
    """Outcome of a generating function comparison; truthy iff equal."""

    __slots__ = ("equal", "method")

    def __init__(self, equal: bool, method: str):
        self.equal = equal
        self.method = method

    def __bool__(self):
        return self.equal

    def __repr__(self):
        return f"IdentityCheck(equal={self.equal}, method={self.method!r})"


def gf_identity_check(
    lhs: BivariateRational, rhs: BivariateRational, N: int, force_expansion: bool = False
) -> IdentityCheck:
    """Decide whether two rational generating functions are equal.

    Cross-multiplication of the numerators is exact and decidable, so it is
    the preferred route; the truncated N x N expansion comparison remains
    available as a fallback and for cross-checking the two methods.
    """
    if not force_expansion:
        equal = lhs.num * rhs.den == rhs.num * lhs.den
        return IdentityCheck(equal, "cross-multiplication")
    equal = expand(lhs, N) == expand(rhs, N)
    return IdentityCheck(equal, "expansion")
