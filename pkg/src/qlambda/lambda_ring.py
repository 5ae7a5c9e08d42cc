"""The ring of symmetric functions in power-sum generators N_1, N_2, ...,
with Adams operations, weight truncation, and specialization to finitely
many variables.

Elements carry coefficients in the truncated q-series ring, so one type covers
plain symmetric functions and q-graded combinations alike. A monomial
N_1^2 * N_3 is keyed by the weakly decreasing tuple (3, 1, 1) of its power-sum
indices; its weight is the sum of the tuple.

The rank-1 polynomial algebra Q[x], with Adams operations acting by x -> x^r,
is carried by the same type under the "rank1" flag; x^e is keyed by (1,)*e.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cache

from .combinatorics import CycleType, Partition
from .errors import DomainError, TruncationOverflowError
from .series import QTruncSeries

POWERSUM = "powersum"
RANK1 = "rank1"

_ALGEBRAS = (POWERSUM, RANK1)


def _canonical_key(key) -> tuple[int, ...]:
    key = tuple(sorted((int(k) for k in key), reverse=True))
    if any(k < 1 for k in key):
        raise ValueError(f"power-sum indices must be positive: {key}")
    return key


def _monomial_order(key: tuple[int, ...]) -> tuple:
    return (sum(key), key)


class LambdaElement:
    """Weight-truncated element of Q[[N_1, N_2, ...]] (or of Q[x]) with
    q-series coefficients.

    weight_cap means the element is known modulo terms of weight > cap; every
    stored monomial satisfies the cap and zero coefficients are pruned.
    """

    __slots__ = ("weight_cap", "q_order", "algebra", "terms")

    def __init__(self, weight_cap: int, q_order: int, terms=None, algebra: str = POWERSUM):
        if weight_cap < 0 or q_order < 0:
            raise ValueError("weight_cap and q_order must be >= 0")
        if algebra not in _ALGEBRAS:
            raise ValueError(f"unknown algebra {algebra!r}")
        clean: dict[tuple[int, ...], QTruncSeries] = {}
        for key, coeff in (terms or {}).items():
            key = _canonical_key(key)
            if algebra == RANK1 and any(k != 1 for k in key):
                raise ValueError(f"rank-1 monomials are powers of x, keyed by ones: {key}")
            if sum(key) > weight_cap:
                raise ValueError(f"monomial {key} exceeds weight cap {weight_cap}")
            if isinstance(coeff, (int, Fraction)):
                coeff = QTruncSeries.constant(coeff, q_order)
            if coeff.order < q_order:
                raise ValueError("coefficient order below the element's q_order")
            coeff = coeff.truncate(q_order)
            if not coeff.is_zero():
                clean[key] = clean[key] + coeff if key in clean else coeff
        object.__setattr__(self, "weight_cap", weight_cap)
        object.__setattr__(self, "q_order", q_order)
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LambdaElement is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, weight_cap: int, q_order: int, algebra: str = POWERSUM) -> "LambdaElement":
        return cls(weight_cap, q_order, {}, algebra)

    @classmethod
    def scalar(cls, value, weight_cap: int, q_order: int, algebra: str = POWERSUM) -> "LambdaElement":
        return cls(weight_cap, q_order, {(): value}, algebra)

    @classmethod
    def generator(cls, k: int, weight_cap: int, q_order: int) -> "LambdaElement":
        """The power sum N_k."""
        return cls(weight_cap, q_order, {(k,): 1}, POWERSUM)

    @classmethod
    def rank1_generator(cls, weight_cap: int, q_order: int) -> "LambdaElement":
        """The rank-1 variable x."""
        return cls(weight_cap, q_order, {(1,): 1}, RANK1)

    # -- structure ----------------------------------------------------

    def coefficient(self, key) -> QTruncSeries:
        return self.terms.get(_canonical_key(key), QTruncSeries.zero(self.q_order))

    def monomials(self) -> list[tuple[int, ...]]:
        """Keys in canonical order: weight ascending, then lexicographic."""
        return sorted(self.terms, key=_monomial_order)

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return all(key == () for key in self.terms)

    def max_weight(self) -> int:
        return max((sum(k) for k in self.terms), default=0)

    def min_weight(self) -> int | None:
        """Smallest weight present, or None for the zero element."""
        return min((sum(k) for k in self.terms), default=None)

    def weight_component(self, w: int) -> "LambdaElement":
        terms = {k: c for k, c in self.terms.items() if sum(k) == w}
        return LambdaElement(self.weight_cap, self.q_order, terms, self.algebra)

    def up_to_weight(self, w: int) -> "LambdaElement":
        terms = {k: c for k, c in self.terms.items() if sum(k) <= w}
        return LambdaElement(self.weight_cap, self.q_order, terms, self.algebra)

    def restricted(self, weight_cap: int | None = None, q_order: int | None = None) -> "LambdaElement":
        """Copy truncated down to the given caps (never up)."""
        W = self.weight_cap if weight_cap is None else weight_cap
        M = self.q_order if q_order is None else q_order
        if W > self.weight_cap or M > self.q_order:
            raise ValueError("restricted() can only lower caps")
        terms = {k: c.truncate(M) for k, c in self.terms.items() if sum(k) <= W}
        return LambdaElement(W, M, terms, self.algebra)

    def with_weight_cap(self, weight_cap: int) -> "LambdaElement":
        """Re-declare the element at a higher weight cap.

        This asserts the dropped tail was zero, which is true exactly when the
        element is a genuine polynomial in the generators (as every input
        built from generators or parsed from an expression is).
        """
        if weight_cap < self.max_weight():
            raise ValueError("new cap below existing monomials; use restricted()")
        return LambdaElement(weight_cap, self.q_order, dict(self.terms), self.algebra)

    def _combined_algebra(self, other: "LambdaElement") -> str:
        if self.algebra == other.algebra:
            return self.algebra
        if self.is_scalar():
            return other.algebra
        if other.is_scalar():
            return self.algebra
        raise DomainError("cannot mix power-sum and rank-1 generators")

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "LambdaElement":
        if isinstance(other, (int, Fraction, QTruncSeries)):
            other = LambdaElement.scalar(other, self.weight_cap, self.q_order, self.algebra)
        if not isinstance(other, LambdaElement):
            return NotImplemented
        algebra = self._combined_algebra(other)
        W = min(self.weight_cap, other.weight_cap)
        M = min(self.q_order, other.q_order)
        terms: dict[tuple[int, ...], QTruncSeries] = {}
        for src in (self.terms, other.terms):
            for key, coeff in src.items():
                if sum(key) > W:
                    continue
                coeff = coeff.truncate(M)
                terms[key] = terms[key] + coeff if key in terms else coeff
        return LambdaElement(W, M, terms, algebra)

    __radd__ = __add__

    def __neg__(self) -> "LambdaElement":
        return LambdaElement(self.weight_cap, self.q_order, {k: -c for k, c in self.terms.items()}, self.algebra)

    def __sub__(self, other) -> "LambdaElement":
        if isinstance(other, (int, Fraction, QTruncSeries)):
            other = LambdaElement.scalar(other, self.weight_cap, self.q_order, self.algebra)
        if not isinstance(other, LambdaElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LambdaElement":
        return (-self) + other

    def __mul__(self, other) -> "LambdaElement":
        if isinstance(other, (int, Fraction)):
            return LambdaElement(
                self.weight_cap, self.q_order, {k: c * other for k, c in self.terms.items()}, self.algebra
            )
        if isinstance(other, QTruncSeries):
            M = min(self.q_order, other.order)
            terms = {k: c.truncate(M) * other for k, c in self.terms.items()}
            return LambdaElement(self.weight_cap, M, terms, self.algebra)
        if not isinstance(other, LambdaElement):
            return NotImplemented
        algebra = self._combined_algebra(other)
        W = min(self.weight_cap, other.weight_cap)
        M = min(self.q_order, other.q_order)
        terms: dict[tuple[int, ...], QTruncSeries] = {}
        for ka, ca in self.terms.items():
            wa = sum(ka)
            if wa > W:
                continue
            for kb, cb in other.terms.items():
                if wa + sum(kb) > W:
                    continue
                key = tuple(sorted(ka + kb, reverse=True))
                coeff = ca.truncate(M) * cb.truncate(M)
                terms[key] = terms[key] + coeff if key in terms else coeff
        return LambdaElement(W, M, terms, algebra)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LambdaElement":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int) -> "LambdaElement":
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers")
        out = LambdaElement.scalar(1, self.weight_cap, self.q_order, self.algebra)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, LambdaElement):
            return NotImplemented
        if self.algebra != other.algebra and not (self.is_scalar() or other.is_scalar()):
            return False
        return (
            self.weight_cap == other.weight_cap
            and self.q_order == other.q_order
            and self.terms == other.terms
        )

    # -- presentation ---------------------------------------------------

    def _monomial_str(self, key: tuple[int, ...]) -> str:
        if key == ():
            return "1"
        if self.algebra == RANK1:
            e = len(key)
            return "x" if e == 1 else f"x^{e}"
        pieces = []
        for k, group in itertools.groupby(key):
            e = len(list(group))
            pieces.append(f"N{k}" if e == 1 else f"N{k}^{e}")
        return "*".join(reversed(pieces))

    def __repr__(self) -> str:
        if self.is_zero():
            return f"LambdaElement(0; W={self.weight_cap}, M={self.q_order})"
        bits = [f"({c.pretty()})*{self._monomial_str(k)}" for k, c in sorted(self.terms.items(), key=lambda kv: _monomial_order(kv[0]))]
        return f"LambdaElement({' + '.join(bits)}; W={self.weight_cap}, M={self.q_order})"

    def to_json_terms(self, coeff_key: str = "coefficient") -> list[dict]:
        """Canonically ordered JSON form of the terms.

        Power-sum monomials are rendered as {"powersum_exponents": {k: e_k}};
        rank-1 monomials as {"x_exponent": e}. Coefficients are lists of
        "p/q" strings.
        """
        out = []
        for key in self.monomials():
            entry: dict = {}
            if self.algebra == RANK1:
                entry["x_exponent"] = len(key)
            else:
                expo: dict[str, int] = {}
                for k in key:
                    expo[str(k)] = expo.get(str(k), 0) + 1
                entry["powersum_exponents"] = expo
            entry[coeff_key] = self.terms[key].to_strings()
            out.append(entry)
        return out


# -- Adams operations ----------------------------------------------------


def adams(r: int, a: LambdaElement, weight_cap: int | None = None) -> LambdaElement:
    """Adams operation: the ring map N_m -> N_{rm} (x -> x^r in rank 1).

    Coefficients are untouched. The result is built at the supplied weight cap
    (default: the input's); if any image monomial would exceed it, the call
    fails rather than truncate, because dropped Adams images corrupt every
    identity downstream.
    """
    if r < 1:
        raise ValueError("Adams index must be >= 1")
    cap = a.weight_cap if weight_cap is None else weight_cap
    terms: dict[tuple[int, ...], QTruncSeries] = {}
    for key, coeff in a.terms.items():
        if a.algebra == RANK1:
            new_key = (1,) * (r * len(key))
        else:
            new_key = tuple(k * r for k in key)
        if sum(new_key) > cap:
            raise TruncationOverflowError(
                f"adams({r}) sends monomial of weight {sum(key)} beyond the weight cap {cap}"
            )
        terms[new_key] = coeff
    return LambdaElement(cap, a.q_order, terms, a.algebra)


def lambda_exp(a: LambdaElement) -> LambdaElement:
    """exp(a) = sum_j a^j / j!, a finite sum by the weight grading.

    Requires zero weight-0 part; terminates because a^j has weight >= j times
    the minimal weight of a.
    """
    if not a.coefficient(()).is_zero():
        raise DomainError("lambda_exp needs zero weight-0 part")
    one = LambdaElement.scalar(1, a.weight_cap, a.q_order, a.algebra)
    if a.is_zero():
        return one
    total = one
    term = one
    jmax = a.weight_cap // a.min_weight()
    for j in range(1, jmax + 1):
        term = term * a * Fraction(1, j)
        if term.is_zero():
            break
        total = total + term
    return total


def lambda_log(a: LambdaElement) -> LambdaElement:
    """log(a) for an element whose weight-0 part is the constant 1."""
    if a.coefficient(()) != QTruncSeries.one(a.q_order):
        raise DomainError("lambda_log needs weight-0 part equal to 1")
    u = a - 1
    total = LambdaElement.zero(a.weight_cap, a.q_order, a.algebra)
    if u.is_zero():
        return total
    upow = LambdaElement.scalar(1, a.weight_cap, a.q_order, a.algebra)
    jmax = a.weight_cap // u.min_weight()
    for j in range(1, jmax + 1):
        upow = upow * u
        if upow.is_zero():
            break
        total = total + upow * Fraction((-1) ** (j + 1), j)
    return total


# -- symmetric polynomials in N variables ---------------------------------


class SymPolyN:
    """Symmetric polynomial in a fixed number of variables with exact rational
    coefficients. Symmetry is verified on construction."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None, check: bool = True):
        if nvars < 1:
            raise ValueError("need at least one variable")
        clean: dict[tuple[int, ...], Fraction] = {}
        for key, c in (terms or {}).items():
            key = tuple(int(e) for e in key)
            if len(key) != nvars or any(e < 0 for e in key):
                raise ValueError(f"bad exponent vector {key} for {nvars} variables")
            c = Fraction(c)
            if c:
                clean[key] = clean.get(key, Fraction(0)) + c
        clean = {k: c for k, c in clean.items() if c}
        if check:
            _verify_symmetric(clean)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymPolyN is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "SymPolyN":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "SymPolyN":
        return cls(nvars, {(0,) * nvars: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key) -> Fraction:
        return self.terms.get(tuple(key), Fraction(0))

    def __add__(self, other) -> "SymPolyN":
        self._check_compatible(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + c
        return SymPolyN(self.nvars, terms, check=False)

    def __neg__(self) -> "SymPolyN":
        return SymPolyN(self.nvars, {k: -c for k, c in self.terms.items()}, check=False)

    def __sub__(self, other) -> "SymPolyN":
        return self + (-other)

    def __mul__(self, other) -> "SymPolyN":
        if isinstance(other, (int, Fraction)):
            return SymPolyN(self.nvars, {k: c * other for k, c in self.terms.items()}, check=False)
        self._check_compatible(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                key = tuple(a + b for a, b in zip(ka, kb))
                terms[key] = terms.get(key, Fraction(0)) + ca * cb
        return SymPolyN(self.nvars, terms, check=False)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymPolyN):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def _check_compatible(self, other) -> None:
        if not isinstance(other, SymPolyN) or other.nvars != self.nvars:
            raise ValueError("operands must share the variable count")

    def evaluate(self, values) -> Fraction:
        values = [Fraction(v) for v in values]
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        total = Fraction(0)
        for key, c in self.terms.items():
            m = c
            for v, e in zip(values, key):
                m *= v**e
            total += m
        return total

    def __repr__(self) -> str:
        from .series import format_rational

        if not self.terms:
            return "SymPolyN(0)"
        bits = []
        for key in sorted(self.terms, key=lambda k: (sum(k), k), reverse=True):
            c = self.terms[key]
            mono = "*".join(f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(key) if e)
            if not mono:
                bits.append(format_rational(c))
            elif c == 1:
                bits.append(mono)
            else:
                bits.append(f"{format_rational(c)}*{mono}")
        return "SymPolyN(" + " + ".join(bits) + ")"


def _verify_symmetric(terms: dict[tuple[int, ...], Fraction]) -> None:
    by_signature: dict[tuple[int, ...], dict] = {}
    for key, c in terms.items():
        by_signature.setdefault(tuple(sorted(key, reverse=True)), {})[key] = c
    for signature, group in by_signature.items():
        orbit = set(itertools.permutations(signature))
        ref = next(iter(group.values()))
        if set(group) != orbit or any(c != ref for c in group.values()):
            raise ValueError(f"polynomial is not symmetric near exponent {signature}")


def power_sum_poly(k: int, nvars: int) -> SymPolyN:
    """x_1^k + ... + x_N^k."""
    terms = {}
    for i in range(nvars):
        key = [0] * nvars
        key[i] = k
        terms[tuple(key)] = 1
    return SymPolyN(nvars, terms, check=False)


@cache
def complete_homogeneous(k: int, nvars: int) -> SymPolyN:
    """Sum of all monomials of total degree k."""
    if k < 0:
        return SymPolyN.zero(nvars)
    terms = {key: 1 for key in _exponent_vectors(k, nvars)}
    return SymPolyN(nvars, terms, check=False)


def _exponent_vectors(total: int, nvars: int):
    if nvars == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _exponent_vectors(total - first, nvars - 1):
            yield (first,) + rest


# -- specialization --------------------------------------------------------


def accumulate_power_product(out: dict, parts: tuple[int, ...], nvars: int, coeff, degree_cap: int | None = None) -> None:
    """Add coeff * prod_j (x_1^{k_j} + ... + x_N^{k_j}) into out, expanded.

    Generic over the coefficient type (Fraction or QTruncSeries). Monomials
    of total degree beyond degree_cap are dropped when a cap is given.
    """
    cur = {(0,) * nvars: coeff}
    for k in parts:
        nxt: dict = {}
        for key, c in cur.items():
            if degree_cap is not None and sum(key) + k > degree_cap:
                continue
            for i in range(nvars):
                key2 = key[:i] + (key[i] + k,) + key[i + 1 :]
                nxt[key2] = nxt[key2] + c if key2 in nxt else c
        cur = nxt
    for key, c in cur.items():
        out[key] = out[key] + c if key in out else c


def specialize(a: LambdaElement, nvars: int, q_power: int | None = None) -> SymPolyN:
    """Substitute N_k -> x_1^k + ... + x_N^k and expand into monomials.

    Coefficients must be q-free unless q_power selects one q-coefficient
    slice. Rank-1 elements specialize only to a single variable.
    """
    if a.algebra == RANK1 and nvars != 1:
        raise DomainError("rank-1 elements specialize to exactly one variable")
    out: dict[tuple[int, ...], Fraction] = {}
    for key, coeff in a.terms.items():
        if q_power is None:
            if any(coeff.coeffs[1:]):
                raise DomainError("coefficients depend on q; pass q_power to pick a slice")
            scalar = coeff.constant_term()
        else:
            if q_power > coeff.order:
                raise DomainError(f"q_power {q_power} beyond coefficient order {coeff.order}")
            scalar = coeff[q_power]
        if scalar:
            accumulate_power_product(out, key, nvars, scalar)
    return SymPolyN(nvars, out)


# -- Schur polynomials ------------------------------------------------------


@cache
def schur(delta: Partition, nvars: int) -> SymPolyN:
    """Schur polynomial s_delta in nvars variables.

    Computed as the determinant det(h_{delta_i - i + j}) of complete
    homogeneous pieces. Partitions with more rows than variables are outside
    the domain (the polynomial would be zero).
    """
    parts = delta.parts
    if len(parts) > nvars:
        raise DomainError(f"partition {parts} has more rows than {nvars} variables")
    size = len(parts)
    if size == 0:
        return SymPolyN.one(nvars)
    mat = [[complete_homogeneous(parts[i] - i + j, nvars) for j in range(size)] for i in range(size)]
    return _poly_determinant(mat, nvars)


def _poly_determinant(mat, nvars: int) -> SymPolyN:
    # Row-by-row expansion with memoization on the used-column set; the sign
    # of adding column j counts the inversions against previously used columns.
    size = len(mat)
    dp: dict[tuple[int, ...], SymPolyN] = {(): SymPolyN.one(nvars)}
    for row in range(size):
        ndp: dict[tuple[int, ...], SymPolyN] = {}
        for cols, val in dp.items():
            for j in range(size):
                if j in cols:
                    continue
                entry = mat[row][j]
                if entry.is_zero():
                    continue
                inversions = sum(1 for c in cols if c > j)
                contrib = val * entry
                if inversions % 2:
                    contrib = -contrib
                key = tuple(sorted(cols + (j,)))
                ndp[key] = ndp[key] + contrib if key in ndp else contrib
        dp = ndp
    (result,) = dp.values() if dp else (SymPolyN.zero(nvars),)
    return result


# -- tensor-power character identity ---------------------------------------


def schur_weyl_lhs(mu: CycleType, nvars: int) -> SymPolyN:
    """prod_r (x_1^r + ... + x_N^r)^{l_r}: the trace of (diagonal, permutation)
    on the n-th tensor power of the vector representation."""
    out = SymPolyN.one(nvars)
    for k, m in mu.counts:
        p = power_sum_poly(k, nvars)
        for _ in range(m):
            out = out * p
    return out


def schur_weyl_rhs(mu: CycleType, nvars: int, table) -> SymPolyN:
    """Same trace expanded over irreducibles: sum_Delta chi_Delta(mu) s_Delta.

    Diagrams with more rows than variables contribute zero and are skipped.
    """
    out = SymPolyN.zero(nvars)
    for delta in table.irreps:
        if len(delta.parts) > nvars:
            continue
        out = out + table.value(delta, mu) * schur(delta, nvars)
    return out
