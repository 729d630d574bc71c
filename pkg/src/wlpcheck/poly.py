"""Homogeneous polynomials in a fixed number of variables, exact coefficients.

A degree-d piece of the polynomial ring is represented by a coefficient
vector over the monomial basis of that degree.  The basis order is graded
lexicographic with the variable order fixed once and for all, i.e. within a
degree the exponent vectors are listed in descending lexicographic order:
x^2, x*y, x*z, y^2, y*z, z^2 for three variables in degree two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

Q = Fraction

_SHORT_NAMES = ("x", "y", "z", "w")


def variable_names(num_vars: int) -> tuple[str, ...]:
    if num_vars <= len(_SHORT_NAMES):
        return _SHORT_NAMES[:num_vars]
    return tuple(f"x{i}" for i in range(1, num_vars + 1))


def _exponent_vectors(num_vars: int, degree: int) -> Iterator[tuple[int, ...]]:
    if num_vars == 1:
        yield (degree,)
        return
    for head in range(degree, -1, -1):
        for tail in _exponent_vectors(num_vars - 1, degree - head):
            yield (head,) + tail


class MonomialBasis:
    """The monomials of one degree, in graded-lex order, with index lookup."""

    __slots__ = ("num_vars", "degree", "exponents", "_index")

    def __init__(self, num_vars: int, degree: int):
        if num_vars < 1 or degree < 0:
            raise ValueError("need num_vars >= 1 and degree >= 0")
        self.num_vars = num_vars
        self.degree = degree
        self.exponents = tuple(_exponent_vectors(num_vars, degree))
        self._index = {e: i for i, e in enumerate(self.exponents)}

    def __len__(self) -> int:
        return len(self.exponents)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.exponents)

    def index(self, exponents: Sequence[int]) -> int:
        return self._index[tuple(exponents)]

    def __repr__(self) -> str:
        return f"MonomialBasis(num_vars={self.num_vars}, degree={self.degree}, size={len(self)})"


@lru_cache(maxsize=None)
def monomial_basis(num_vars: int, degree: int) -> MonomialBasis:
    return MonomialBasis(num_vars, degree)


def basis_size(num_vars: int, degree: int) -> int:
    return comb(degree + num_vars - 1, num_vars - 1)


def _as_q(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Q(value)
    if isinstance(value, str):
        return Q(value)
    raise TypeError(f"coefficients must be exact rationals, got {type(value).__name__}")


@dataclass(frozen=True)
class LinearForm:
    """A linear form given by its coefficient vector."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_as_q(c) for c in self.coeffs))
        if len(self.coeffs) < 1:
            raise ValueError("a linear form needs at least one variable")

    @property
    def num_vars(self) -> int:
        return len(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def as_poly(self) -> "GradedPoly":
        # the degree-1 monomial basis lists the variables in order
        return GradedPoly(self.num_vars, 1, tuple(self.coeffs))

    def proportional_to(self, other: "LinearForm") -> bool:
        if self.num_vars != other.num_vars:
            return False
        a, b = self.coeffs, other.coeffs
        n = self.num_vars
        return all(a[i] * b[j] == a[j] * b[i] for i in range(n) for j in range(i + 1, n))

    def __str__(self) -> str:
        return str(self.as_poly())


def linear_form(coeffs: Iterable) -> LinearForm:
    return LinearForm(tuple(coeffs))


@dataclass(frozen=True)
class GradedPoly:
    """Homogeneous polynomial: coefficient vector over one monomial basis."""

    num_vars: int
    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_as_q(c) for c in self.coeffs))
        expected = basis_size(self.num_vars, self.degree)
        if len(self.coeffs) != expected:
            raise ValueError(
                f"degree-{self.degree} polynomial in {self.num_vars} variables "
                f"needs {expected} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def zero(cls, num_vars: int, degree: int) -> "GradedPoly":
        return cls(num_vars, degree, (Q(0),) * basis_size(num_vars, degree))

    @classmethod
    def monomial(cls, num_vars: int, exponents: Sequence[int], coeff=Q(1)) -> "GradedPoly":
        exponents = tuple(exponents)
        degree = sum(exponents)
        basis = monomial_basis(num_vars, degree)
        coeffs = [Q(0)] * len(basis)
        coeffs[basis.index(exponents)] = _as_q(coeff)
        return cls(num_vars, degree, tuple(coeffs))

    @classmethod
    def from_terms(cls, num_vars: int, degree: int, terms: Iterable[tuple[Sequence[int], object]]) -> "GradedPoly":
        basis = monomial_basis(num_vars, degree)
        coeffs = [Q(0)] * len(basis)
        for exponents, coeff in terms:
            coeffs[basis.index(tuple(exponents))] += _as_q(coeff)
        return cls(num_vars, degree, tuple(coeffs))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def terms(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        basis = monomial_basis(self.num_vars, self.degree)
        for exps, c in zip(basis.exponents, self.coeffs):
            if c:
                yield exps, c

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self.coeffs[monomial_basis(self.num_vars, self.degree).index(exponents)]

    def __add__(self, other: "GradedPoly") -> "GradedPoly":
        self._check_compatible(other)
        return GradedPoly(self.num_vars, self.degree,
                          tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "GradedPoly") -> "GradedPoly":
        self._check_compatible(other)
        return GradedPoly(self.num_vars, self.degree,
                          tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "GradedPoly":
        return GradedPoly(self.num_vars, self.degree, tuple(-c for c in self.coeffs))

    def scale(self, factor) -> "GradedPoly":
        f = _as_q(factor)
        return GradedPoly(self.num_vars, self.degree, tuple(f * c for c in self.coeffs))

    def __mul__(self, other: "GradedPoly") -> "GradedPoly":
        return multiply(self, other)

    def _check_compatible(self, other: "GradedPoly") -> None:
        if self.num_vars != other.num_vars or self.degree != other.degree:
            raise ValueError("mixed degrees or variable counts")

    def __str__(self) -> str:
        names = variable_names(self.num_vars)
        pieces = []
        for exps, c in self.terms():
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        if not pieces:
            return "0"
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


def multinomial(degree: int, exponents: Sequence[int]) -> int:
    out = factorial(degree)
    for e in exponents:
        out //= factorial(e)
    return out


def expand_power(form: LinearForm, degree: int) -> GradedPoly:
    """Expand form**degree by the multinomial theorem."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    if form.is_zero:
        raise ValueError("cannot expand a power of the zero form")
    basis = monomial_basis(form.num_vars, degree)
    coeffs = []
    for exps in basis.exponents:
        c = Q(multinomial(degree, exps))
        for base, e in zip(form.coeffs, exps):
            if e:
                if base == 0:
                    c = Q(0)
                    break
                c *= base**e
        coeffs.append(c)
    return GradedPoly(form.num_vars, degree, tuple(coeffs))


def multiply(f: GradedPoly, g: GradedPoly) -> GradedPoly:
    if f.num_vars != g.num_vars:
        raise ValueError("mixed variable counts")
    target = monomial_basis(f.num_vars, f.degree + g.degree)
    coeffs = [Q(0)] * len(target)
    for ef, cf in f.terms():
        for eg, cg in g.terms():
            key = tuple(a + b for a, b in zip(ef, eg))
            coeffs[target.index(key)] += cf * cg
    return GradedPoly(f.num_vars, f.degree + g.degree, tuple(coeffs))


def _elimination_data(ell: LinearForm) -> tuple[int, LinearForm | None]:
    """Pick the variable to eliminate and the substituted form in the rest.

    Solves ell = 0 for the variable with the largest-magnitude coefficient
    (lowest index on ties).  Returns (index, substitution), where substitution
    is a linear form in the remaining variables or None when it is zero.
    """
    if ell.is_zero:
        raise ValueError("cannot restrict modulo the zero form")
    k = max(range(ell.num_vars), key=lambda i: (abs(ell.coeffs[i]), -i))
    pivot = ell.coeffs[k]
    rest = tuple(-c / pivot for i, c in enumerate(ell.coeffs) if i != k)
    if all(c == 0 for c in rest):
        return k, None
    return k, LinearForm(rest)


def restrict_linear_form(form: LinearForm, ell: LinearForm) -> LinearForm:
    """Image of a linear form in the quotient by ell, as a form in one fewer variable."""
    if form.num_vars != ell.num_vars:
        raise ValueError("mixed variable counts")
    if form.num_vars < 2:
        raise ValueError("need at least two variables to restrict")
    k, sub = _elimination_data(ell)
    reduced = tuple(c for i, c in enumerate(form.coeffs) if i != k)
    if sub is None:
        return LinearForm(reduced)
    lead = form.coeffs[k]
    return LinearForm(tuple(c + lead * s for c, s in zip(reduced, sub.coeffs)))


def restrict_mod_linear(f: GradedPoly, ell: LinearForm) -> GradedPoly:
    """Substitute away one variable along ell = 0; degree is preserved.

    The result lives in num_vars - 1 variables (remaining variables keep
    their relative order) and may be zero.
    """
    if f.num_vars != ell.num_vars:
        raise ValueError("mixed variable counts")
    if f.num_vars < 2:
        raise ValueError("need at least two variables to restrict")
    k, sub = _elimination_data(ell)
    r2 = f.num_vars - 1
    target = monomial_basis(r2, f.degree)
    coeffs = [Q(0)] * len(target)
    power_cache: dict[int, GradedPoly] = {}
    for exps, c in f.terms():
        rest = exps[:k] + exps[k + 1:]
        ek = exps[k]
        if ek == 0:
            coeffs[target.index(rest)] += c
            continue
        if sub is None:
            continue  # the eliminated variable maps to zero
        if ek not in power_cache:
            power_cache[ek] = expand_power(sub, ek)
        for pexps, pc in power_cache[ek].terms():
            key = tuple(a + b for a, b in zip(rest, pexps))
            coeffs[target.index(key)] += c * pc
    return GradedPoly(r2, f.degree, tuple(coeffs))
