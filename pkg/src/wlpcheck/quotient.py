"""Graded Artinian quotients of a polynomial ring, degree by degree.

The central object is :class:`QuotientAlgebra`, which computes one graded
piece at a time: the row space of the ideal in that degree, its exact rank,
and therefore the dimension of the quotient piece.  Ranks go through a
modular fast path first; a full-rank answer modulo the working prime is
already a certificate, anything less is recomputed exactly, so every number
that leaves this module is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NotArtinianError
from .linalg import (
    ExactMatrix,
    IntRowBasis,
    clear_row_to_int,
    rank_mod_prime,
    rref_from_basis,
)
from .poly import GradedPoly, LinearForm, basis_size, expand_power, monomial_basis

IntTerms = tuple[tuple[tuple[int, ...], int], ...]


def integer_terms(poly: GradedPoly) -> IntTerms:
    """Nonzero terms of a common-denominator integer multiple of ``poly``."""
    cleared = clear_row_to_int(poly.coeffs)
    basis = monomial_basis(poly.num_vars, poly.degree)
    return tuple((exps, c) for exps, c in zip(basis.exponents, cleared) if c)


def shifted_rows(terms: IntTerms, num_vars: int, degree: int, target_degree: int) -> list[list[int]]:
    """Rows for monomial multiples: one row per monomial of the complementary degree.

    ``terms`` is the integer term list of a degree ``degree`` polynomial; the
    row for monomial u is the coefficient vector of u * poly in degree
    ``target_degree``.  Monomial multiplication only shifts exponents, so no
    coefficient arithmetic happens here.
    """
    shift = target_degree - degree
    if shift < 0:
        return []
    target = monomial_basis(num_vars, target_degree)
    width = len(target)
    out = []
    for mono in monomial_basis(num_vars, shift).exponents:
        row = [0] * width
        for exps, c in terms:
            row[target.index(tuple(a + b for a, b in zip(exps, mono)))] = c
        out.append(row)
    return out


@dataclass(frozen=True)
class GradedIdeal:
    """Homogeneous ideal given by generators; remembers pure-power structure.

    ``power_parts[i]`` is ``(form, exponent)`` when generator i was supplied
    as a power of a linear form, else None.  The structure is used for fast
    Artinian tests and for restriction to a hyperplane.
    """

    num_vars: int
    generators: tuple[GradedPoly, ...]
    power_parts: tuple[tuple[LinearForm, int] | None, ...] = ()

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("need at least one variable")
        for g in self.generators:
            if g.num_vars != self.num_vars:
                raise ValueError("generator variable count does not match the ideal")
            if g.is_zero:
                raise ValueError("zero generator")
            if g.degree < 1:
                raise ValueError("generators must have positive degree")
        if not self.power_parts:
            object.__setattr__(self, "power_parts", (None,) * len(self.generators))
        elif len(self.power_parts) != len(self.generators):
            raise ValueError("power_parts length does not match generators")

    @classmethod
    def from_powers(cls, pairs: Iterable[tuple[LinearForm, int]]) -> "GradedIdeal":
        pairs = tuple(pairs)
        if not pairs:
            raise ValueError("need at least one generator")
        num_vars = pairs[0][0].num_vars
        gens = tuple(expand_power(form, power) for form, power in pairs)
        return cls(num_vars, gens, pairs)

    @classmethod
    def from_polys(cls, polys: Iterable[GradedPoly]) -> "GradedIdeal":
        polys = tuple(polys)
        if not polys:
            raise ValueError("need at least one generator")
        return cls(polys[0].num_vars, polys)

    @property
    def generator_degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    @property
    def all_powers(self) -> bool:
        return all(p is not None for p in self.power_parts)

    def power_forms(self) -> list[LinearForm]:
        return [p[0] for p in self.power_parts if p is not None]

    def restricted(self, ell: LinearForm) -> "GradedIdeal":
        """Image ideal in the coordinate ring of the hyperplane ell = 0.

        Generators restricting to zero are dropped; powers stay powers.
        Raises ValueError when every generator dies (the zero ideal is not
        representable here and such a restriction is degenerate anyway).
        """
        from .poly import restrict_linear_form, restrict_mod_linear

        gens: list[GradedPoly] = []
        parts: list[tuple[LinearForm, int] | None] = []
        for g, part in zip(self.generators, self.power_parts):
            if part is not None:
                form, power = part
                cut = restrict_linear_form(form, ell)
                if cut.is_zero:
                    continue
                gens.append(expand_power(cut, power))
                parts.append((cut, power))
            else:
                cut_poly = restrict_mod_linear(g, ell)
                if cut_poly.is_zero:
                    continue
                gens.append(cut_poly)
                parts.append(None)
        if not gens:
            raise ValueError("every generator restricts to zero")
        return GradedIdeal(self.num_vars - 1, tuple(gens), tuple(parts))


class DegreePiece:
    """One graded piece: ideal row space and quotient dimension in one degree."""

    __slots__ = ("degree", "ambient_dim", "ideal_rank", "rows")

    def __init__(self, degree: int, ambient_dim: int, ideal_rank: int, rows: IntRowBasis | None):
        self.degree = degree
        self.ambient_dim = ambient_dim
        self.ideal_rank = ideal_rank
        self.rows = rows  # None only when fullness was certified without exact rows

    @property
    def dim(self) -> int:
        return self.ambient_dim - self.ideal_rank

    @property
    def full(self) -> bool:
        return self.ideal_rank == self.ambient_dim

    def contains(self, int_vector: Sequence[int]) -> bool:
        if self.full:
            return True
        return self.rows.contains(int_vector)


class QuotientAlgebra:
    """Quotient of the polynomial ring by a homogeneous ideal.

    Pieces are computed on demand and cached.  ``hilbert_function`` scans
    degrees upward and stops at the first zero piece; the scan is abandoned
    (NotArtinianError) past the socle bound of a complete intersection in
    the top generator degree, which no Artinian quotient can exceed.
    """

    def __init__(self, ideal: GradedIdeal):
        self.ideal = ideal
        self.num_vars = ideal.num_vars
        self._pieces: dict[int, DegreePiece] = {}
        self._gen_terms = [integer_terms(g) for g in ideal.generators]
        self._rref_cache: dict[int, tuple[list[list[Fraction]], tuple[int, ...]]] = {}
        self._hilbert: tuple[int, ...] | None = None

    # -- graded pieces -------------------------------------------------

    def spanning_rows(self, m: int) -> list[list[int]]:
        rows: list[list[int]] = []
        for g, terms in zip(self.ideal.generators, self._gen_terms):
            rows.extend(shifted_rows(terms, self.num_vars, g.degree, m))
        return rows

    def piece(self, m: int) -> DegreePiece:
        if m < 0:
            raise ValueError("degree must be nonnegative")
        got = self._pieces.get(m)
        if got is None:
            got = self._compute_piece(m)
            self._pieces[m] = got
        return got

    def _compute_piece(self, m: int) -> DegreePiece:
        ambient = basis_size(self.num_vars, m)
        rows = self.spanning_rows(m)
        if not rows:
            return DegreePiece(m, ambient, 0, IntRowBasis(ambient))
        if rank_mod_prime(rows, ambient) == ambient:
            # full modulo p forces full over the rationals
            return DegreePiece(m, ambient, ambient, None)
        basis = IntRowBasis(ambient)
        basis.extend(rows)
        return DegreePiece(m, ambient, basis.rank, basis)

    def dimension(self, m: int) -> int:
        return self.piece(m).dim

    # -- Hilbert function ----------------------------------------------

    def _scan_bound(self) -> int:
        top = max(self.ideal.generator_degrees)
        return self.num_vars * (top - 1) + 1

    def _definitely_not_artinian(self) -> bool:
        """Definitive negative for ideals of pure powers: forms must span."""
        if not self.ideal.all_powers:
            return False
        basis = IntRowBasis(self.num_vars)
        basis.extend(clear_row_to_int(f.coeffs) for f in self.ideal.power_forms())
        return basis.rank < self.num_vars

    def hilbert_function(self) -> tuple[int, ...]:
        """Dimensions (h_0, ..., h_s) with h_s the last nonzero value."""
        if self._hilbert is not None:
            return self._hilbert
        if self._definitely_not_artinian():
            raise NotArtinianError(
                "the linear forms do not span, so the quotient has positive dimension"
            )
        dims: list[int] = []
        bound = self._scan_bound()
        for m in range(bound + 1):
            d = self.dimension(m)
            if d == 0:
                self._hilbert = tuple(dims)
                return self._hilbert
            dims.append(d)
        raise NotArtinianError(
            f"no zero piece through degree {bound}, past any Artinian socle "
            "for these generator degrees",
            partial_dims=tuple(dims),
        )

    def is_artinian(self) -> bool:
        try:
            self.hilbert_function()
        except NotArtinianError:
            return False
        return True

    def socle_degree(self) -> int:
        return len(self.hilbert_function()) - 1

    # -- exact reduction and coordinate matrices ------------------------

    def contains(self, f: GradedPoly) -> bool:
        if f.num_vars != self.num_vars:
            raise ValueError("variable count does not match")
        if f.is_zero:
            return True
        return self.piece(f.degree).contains(clear_row_to_int(f.coeffs))

    def _rref(self, m: int) -> tuple[list[list[Fraction]], tuple[int, ...]]:
        got = self._rref_cache.get(m)
        if got is None:
            piece = self.piece(m)
            if piece.rows is None:
                # fullness was certified modulo p; build exact rows after all
                basis = IntRowBasis(piece.ambient_dim)
                basis.extend(self.spanning_rows(m))
                piece = DegreePiece(m, piece.ambient_dim, basis.rank, basis)
                self._pieces[m] = piece
            got = (rref_from_basis(piece.rows), tuple(piece.rows.pivots))
            self._rref_cache[m] = got
        return got

    def reduce_mod_ideal(self, f: GradedPoly) -> GradedPoly:
        """Canonical representative: support only on non-pivot monomials."""
        if f.num_vars != self.num_vars:
            raise ValueError("variable count does not match")
        rows, pivots = self._rref(f.degree)
        v = list(f.coeffs)
        for row, p in zip(rows, pivots):
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return GradedPoly(self.num_vars, f.degree, tuple(v))

    def standard_exponents(self, m: int) -> tuple[tuple[int, ...], ...]:
        """Monomials whose classes are the working basis of the degree-m piece."""
        piece = self.piece(m)
        if piece.dim == 0:
            return ()
        _, pivots = self._rref(m)
        pivot_set = set(pivots)
        exps = monomial_basis(self.num_vars, m).exponents
        return tuple(e for j, e in enumerate(exps) if j not in pivot_set)

    def quotient_coordinates(self, f: GradedPoly) -> tuple[Fraction, ...]:
        """Coordinates of the class of f on the standard-monomial basis."""
        reduced = self.reduce_mod_ideal(f)
        _, pivots = self._rref(f.degree)
        pivot_set = set(pivots)
        return tuple(c for j, c in enumerate(reduced.coeffs) if j not in pivot_set)

    def multiplication_matrix(self, g: GradedPoly, m: int) -> ExactMatrix:
        """Matrix of multiplication by g from the degree-m piece to degree m + deg g.

        Rows are indexed by the target standard monomials, columns by the
        source ones, so the matrix acts on coordinate columns from the left.
        """
        if g.num_vars != self.num_vars:
            raise ValueError("variable count does not match")
        source = self.standard_exponents(m)
        target_dim = self.dimension(m + g.degree)
        columns = []
        for exps in source:
            image = GradedPoly.monomial(self.num_vars, exps) * g
            columns.append(self.quotient_coordinates(image))
        return ExactMatrix.from_columns(columns, nrows=target_dim)


@lru_cache(maxsize=256)
def algebra(ideal: GradedIdeal) -> QuotientAlgebra:
    """Shared per-ideal algebra so piece computations are reused."""
    return QuotientAlgebra(ideal)
