"""Jackson q-calculus primitives and polynomial algebra.

Everything here is a pure function of its arguments.  The deformation
parameter ``q`` may be any positive real; ``q = 1`` reproduces the classical
limits without any special casing by the caller.  Integer q-brackets are
computed as explicit geometric sums (valid for all q > 0, including 1), the
real-exponent bracket branches to its analytic limit at q = 1.
"""

import math

from .errors import ConvergenceError, DomainError

__all__ = [
    "Polynomial",
    "validate_q",
    "q_bracket",
    "q_bracket_real",
    "q_factorial",
    "q_power_expand",
    "poly_eval",
    "poly_q_derivative",
    "poly_q_antiderivative",
    "q_diff_quotient",
    "jackson_integral",
]

JACKSON_MAX_TERMS = 10_000


def validate_q(q):
    """Return ``q`` as a float after checking it is positive and finite."""
    q = float(q)
    if not math.isfinite(q) or q <= 0.0:
        raise DomainError(f"deformation parameter q must be a positive finite real, got {q}")
    return q


def _check_degree(n):
    if not isinstance(n, int):
        raise TypeError(f"expected an integer, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"expected a nonnegative integer, got {n}")
    return n


class Polynomial:
    """Immutable dense polynomial over the reals in the monomial basis.

    ``coeffs[k]`` multiplies x**k.  Trailing zero coefficients are trimmed on
    construction, so the zero polynomial has an empty coefficient tuple and
    its degree is -inf.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [float(c) for c in coeffs]
        while cs and cs[-1] == 0.0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def __call__(self, x):
        return poly_eval(self, x)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Polynomial(out)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return Polynomial()
            out = [0.0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        return Polynomial(float(other) * c for c in self.coeffs)

    __rmul__ = __mul__

    def padded(self, length):
        """Coefficient list zero-padded on the right to ``length`` entries."""
        if len(self.coeffs) > length:
            raise ValueError(f"polynomial of degree {self.degree} does not fit in {length} coefficients")
        return list(self.coeffs) + [0.0] * (length - len(self.coeffs))

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


def _as_poly(p):
    return p if isinstance(p, Polynomial) else Polynomial(p)


def q_bracket(n, q):
    """q-integer [n]_q = 1 + q + ... + q**(n-1).

    The geometric-sum form holds for every q > 0 and equals n at q = 1.
    """
    n = _check_degree(n)
    q = validate_q(q)
    total = 0.0
    power = 1.0
    for _ in range(n):
        total += power
        power *= q
    return total


def q_bracket_real(c, q):
    """Real-exponent bracket [c]_q = (q**c - 1) / (q - 1), with [c]_1 = c."""
    q = validate_q(q)
    c = float(c)
    if q == 1.0:
        return c
    return (q**c - 1.0) / (q - 1.0)


def q_factorial(n, q):
    """q-factorial [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1."""
    n = _check_degree(n)
    q = validate_q(q)
    result = 1.0
    bracket = 0.0
    power = 1.0
    for _ in range(n):
        bracket += power
        power *= q
        result *= bracket
    return result


def q_power_expand(c, n, q):
    """Monomial expansion of the q-shifted power (x - c)(x - cq)...(x - cq**(n-1)).

    The result is monic of degree exactly n and its roots are c, cq, ...,
    cq**(n-1).  For n = 0 the empty product is the constant 1.
    """
    n = _check_degree(n)
    q = validate_q(q)
    c = float(c)
    p = Polynomial((1.0,))
    root = c
    for _ in range(n):
        p = p * Polynomial((-root, 1.0))
        root *= q
    return p


def poly_eval(p, x):
    """Evaluate a polynomial at ``x`` by Horner's nested multiplication."""
    p = _as_poly(p)
    x = float(x)
    result = 0.0
    for c in reversed(p.coeffs):
        result = result * x + c
    return result


def poly_q_derivative(p, q):
    """Formal q-derivative: x**k maps to [k]_q x**(k-1).

    At q = 1 this is the classical derivative.
    """
    q = validate_q(q)
    p = _as_poly(p)
    out = []
    bracket = 0.0
    power = 1.0
    for k, c in enumerate(p.coeffs):
        if k > 0:
            out.append(bracket * c)
        bracket += power
        power *= q
    return Polynomial(out)


def poly_q_antiderivative(p, q):
    """Formal q-antiderivative with zero constant term: x**k maps to x**(k+1)/[k+1]_q.

    Exact inverse of :func:`poly_q_derivative` at the coefficient level.
    """
    q = validate_q(q)
    p = _as_poly(p)
    out = [0.0]
    bracket = 0.0
    power = 1.0
    for c in p.coeffs:
        bracket += power
        power *= q
        out.append(c / bracket)
    return Polynomial(out)


def q_diff_quotient(f, x, q):
    """Raw q-difference quotient (f(qx) - f(x)) / (qx - x) of a callable.

    Diagnostic tool for black-box functions.  Undefined at x = 0 and at
    q = 1, where the quotient degenerates to 0/0; polynomial paths handle
    those cases exactly, so no fallback is attempted here.
    """
    q = validate_q(q)
    x = float(x)
    if x == 0.0:
        raise DomainError("q-difference quotient is undefined at x = 0")
    if q == 1.0:
        raise DomainError("q-difference quotient is undefined at q = 1")
    return (f(q * x) - f(x)) / (q * x - x)


def jackson_integral(f, x, q, tol=1e-12):
    """Jackson integral of ``f`` from 0 to ``x``: (1-q) x sum_j q**j f(q**j x).

    Requires 0 < q < 1 for convergence.  The series is truncated once the
    current term, inflated by the geometric tail factor q/(1-q), drops below
    ``tol`` relative to the partial sum; two consecutive quiet terms are
    demanded so an isolated zero of ``f`` cannot trigger an early stop.

    Raises ConvergenceError if 10**4 terms do not reach the tolerance (for
    example when q is very close to 1).
    """
    q = validate_q(q)
    if q >= 1.0:
        raise DomainError(f"Jackson series diverges for q >= 1, got q = {q}")
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"integration endpoint must be finite, got {x}")
    tol = float(tol)
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")

    prefactor = (1.0 - q) * x
    safety = max(1.0, q / (1.0 - q))
    total = 0.0
    point = x
    weight = 1.0
    quiet = 0
    for j in range(JACKSON_MAX_TERMS):
        term = prefactor * weight * f(point)
        total += term
        if abs(term) * safety < tol * (1.0 + abs(total)):
            quiet += 1
            if quiet >= 2 and j >= 3:
                return total
        else:
            quiet = 0
        weight *= q
        point *= q
    raise ConvergenceError(
        f"Jackson series did not meet tol={tol} within {JACKSON_MAX_TERMS} terms (q={q}, x={x})"
    )
