"""Maximal-rank checks for multiplication by powers of a linear form.

The rank of multiplication by g from the degree-m piece of the quotient is
computed without ever writing down quotient coordinates: it is the number
of rows g * (degree-m monomial) that enlarge the row basis of the ideal in
the target degree.  A modular elimination runs first; because a modular
rank never exceeds the rational one, reaching min(source, target) modulo
the working prime already certifies maximal rank, and only the remaining
degrees fall through to exact integer elimination.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GenericityError
from .linalg import rank_mod_prime
from .poly import GradedPoly, LinearForm, expand_power
from .quotient import GradedIdeal, QuotientAlgebra, algebra, integer_terms, shifted_rows
from .rng import SplitMix64

DEFAULT_SEED = 20100601
DEFAULT_BOUND = 100
DEFAULT_ATTEMPTS = 5


@dataclass(frozen=True)
class CheckConfig:
    """Sampling knobs shared by every randomized check."""

    seed: int = DEFAULT_SEED
    bound: int = DEFAULT_BOUND
    attempts: int = DEFAULT_ATTEMPTS

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError("bound must be positive")
        if self.attempts < 1:
            raise ValueError("need at least one attempt")


def sample_linear_form(
    rng: SplitMix64,
    num_vars: int,
    bound: int,
    avoid: tuple[LinearForm, ...] = (),
    max_tries: int = 256,
) -> LinearForm:
    """Random integer linear form, nonzero and non-proportional to ``avoid``."""
    for _ in range(max_tries):
        form = LinearForm(tuple(rng.integer(-bound, bound) for _ in range(num_vars)))
        if form.is_zero:
            continue
        if any(form.proportional_to(seen) for seen in avoid):
            continue
        return form
    raise GenericityError(
        f"could not sample a fresh linear form within {max_tries} tries "
        f"(bound {bound}, {len(avoid)} forms excluded)"
    )


@dataclass(frozen=True)
class MapRankRecord:
    """Rank of multiplication by the power-th power, one source degree."""

    power: int
    degree: int
    source_dim: int
    target_dim: int
    rank: int

    @property
    def maximal(self) -> bool:
        return self.rank == min(self.source_dim, self.target_dim)


@dataclass(frozen=True)
class LefschetzReport:
    kind: str  # "wlp" or "slp"
    holds: bool
    form: LinearForm
    attempts_used: int
    hilbert: tuple[int, ...]
    records: tuple[MapRankRecord, ...]

    @property
    def failures(self) -> tuple[tuple[int, int], ...]:
        """(power, degree) pairs where the witness form missed maximal rank."""
        return tuple((r.power, r.degree) for r in self.records if not r.maximal)

    @property
    def socle_degree(self) -> int:
        return len(self.hilbert) - 1


def multiplication_rank(alg: QuotientAlgebra, g: GradedPoly, m: int) -> int:
    """Exact rank of multiplication by g out of the degree-m quotient piece."""
    if g.num_vars != alg.num_vars:
        raise ValueError("variable count does not match")
    if g.is_zero:
        return 0
    source_dim = alg.dimension(m)
    target = alg.piece(m + g.degree)
    if source_dim == 0 or target.dim == 0:
        return 0
    image_rows = shifted_rows(integer_terms(g), alg.num_vars, g.degree, m + g.degree)
    # target.rows is exact here: only full pieces may lack a row basis
    stacked = list(target.rows.rows) + image_rows
    floor = rank_mod_prime(stacked, target.ambient_dim) - target.ideal_rank
    want = min(source_dim, target.dim)
    if floor >= want:
        return want
    grown = target.rows.copy()
    return grown.extend(image_rows)


def _rank_records(alg: QuotientAlgebra, form: LinearForm, powers: int) -> tuple[MapRankRecord, ...]:
    hf = alg.hilbert_function()
    top = len(hf) - 1
    records = []
    for k in range(1, powers + 1):
        g = form.as_poly() if k == 1 else expand_power(form, k)
        for m in range(top - k + 1):
            rank = multiplication_rank(alg, g, m)
            records.append(MapRankRecord(k, m, hf[m], hf[m + k], rank))
    return tuple(records)


def _best_of_attempts(ideal: GradedIdeal, config: CheckConfig, kind: str, powers_of: int) -> LefschetzReport:
    """Try up to config.attempts distinct forms; keep the best showing.

    powers_of = 1 checks only multiplication by the form itself; otherwise
    every power up to the socle degree is checked for the same form, which
    is the all-powers property.
    """
    alg = algebra(ideal)
    hf = alg.hilbert_function()
    top = len(hf) - 1
    powers = 1 if powers_of == 1 else top
    rng = SplitMix64(config.seed)
    tried: list[LinearForm] = []
    best: tuple[MapRankRecord, ...] | None = None
    best_form: LinearForm | None = None
    best_misses = -1
    for _ in range(config.attempts):
        try:
            form = sample_linear_form(rng, ideal.num_vars, config.bound, avoid=tuple(tried))
        except GenericityError:
            if tried:
                break  # the coefficient pool is exhausted; judge what we saw
            raise
        tried.append(form)
        records = _rank_records(alg, form, max(powers, 1))
        misses = sum(1 for r in records if not r.maximal)
        if misses == 0:
            return LefschetzReport(kind, True, form, len(tried), hf, records)
        if best is None or misses < best_misses:
            best, best_form, best_misses = records, form, misses
    return LefschetzReport(kind, False, best_form, len(tried), hf, best)


def wlp_check(ideal: GradedIdeal, config: CheckConfig | None = None) -> LefschetzReport:
    """Does multiplication by some linear form have maximal rank in every degree?

    Verdict True is a certificate (the witness form is returned).  Verdict
    False means every sampled candidate missed maximal rank somewhere; the
    report carries the best candidate's exact rank table.
    """
    return _best_of_attempts(ideal, config or CheckConfig(), "wlp", powers_of=1)


def slp_check(ideal: GradedIdeal, config: CheckConfig | None = None) -> LefschetzReport:
    """Same, but every power of one witness form must have maximal rank."""
    return _best_of_attempts(ideal, config or CheckConfig(), "slp", powers_of=0)
