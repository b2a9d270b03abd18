"""Twisted Goppa codes: construction, rank, dimension, membership.

A code instance is (field, support, g, eta) with support points
alpha_1..alpha_n in GF(q^m), a degree-t polynomial g that does not
vanish on the support, and a twist element eta.  A word c in GF(q)^n
belongs to the code when

    sum_i c_i * ( (x - alpha_i)^-1  -  eta * alpha_i^t / g(alpha_i) )
        == 0   (mod g(x)).

The column residue h_i is the bracketed term reduced mod g; the twist
part is a constant, so it only shifts the degree-0 coefficient of the
classical residue.  eta == 0 recovers the classical Goppa code.

Dimension is computed over GF(q): the t x n matrix of residue
coefficients over GF(q^m) is expanded digit-wise into an mt x n matrix
over GF(q) (polynomial-basis coordinates) and eliminated exactly, so
k = n - rank.  ``brute_force_dimension`` recomputes k by enumerating
all q^n words against the defining congruence and is deliberately
independent of the elimination path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    EnumerationCapError,
    InternalConsistencyError,
    InvalidSpecError,
)
from .galois import Field
from .linalg import nullspace_modp, pack_gf2_row, rank_gf2, rank_modp
from .polyring import Poly, modinv

DEFAULT_ENUMERATION_CAP = 1 << 20


class CodeSpec:
    """One twisted Goppa code instance; validated on construction."""

    __slots__ = ("field", "support", "g", "eta", "_residues")

    def __init__(self, field: Field, support, g: Poly, eta: int):
        if g.field != field:
            raise InvalidSpecError("g must be a polynomial over the code's field")
        if g.degree < 1:
            raise InvalidSpecError("g must have degree >= 1")
        try:
            support = tuple(field.check(x) for x in support)
            field.check(eta)
        except ValueError as exc:
            raise InvalidSpecError(str(exc)) from None
        if not support:
            raise InvalidSpecError("support must be nonempty")
        if len(set(support)) != len(support):
            raise InvalidSpecError("support points must be distinct")
        bad = [x for x in support if g(x) == 0]
        if bad:
            raise InvalidSpecError(f"g vanishes on support points {bad}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "_residues", None)

    def __setattr__(self, name, value):
        raise AttributeError("CodeSpec is immutable")

    @property
    def n(self) -> int:
        return len(self.support)

    @property
    def t(self) -> int:
        return self.g.degree

    def __repr__(self) -> str:
        return (
            f"CodeSpec({self.field!r}, n={self.n}, g={self.g.to_string()!r}, "
            f"eta={self.eta})"
        )

    def residues(self) -> tuple[tuple[int, ...], ...]:
        """Column residues h_i as coefficient tuples of length t (cached)."""
        cached = self._residues
        if cached is None:
            cached = tuple(
                twist_residue(self, i).padded(self.t) for i in range(self.n)
            )
            object.__setattr__(self, "_residues", cached)
        return cached


@dataclass(frozen=True)
class ParityMatrix:
    """Residue coefficients over GF(q^m) and their GF(q) digit expansion.

    ext_rows[j][i] is the x^j coefficient of column i's residue;
    base_rows has m rows per ext row (digit l of ext row j lands in base
    row j*m + l), so base_rows is mt x n over GF(q).
    """

    q: int
    m: int
    t: int
    n: int
    ext_rows: tuple[tuple[int, ...], ...]
    base_rows: tuple[tuple[int, ...], ...]


def twist_residue(spec: CodeSpec, index: int) -> Poly:
    """Column residue h_i = (x - alpha_i)^-1 - eta*alpha_i^t/g(alpha_i) mod g."""
    if not 0 <= index < spec.n:
        raise IndexError(f"column index {index} out of range [0, {spec.n})")
    F = spec.field
    alpha = spec.support[index]
    base = modinv(Poly.linear(F, alpha), spec.g)
    if spec.eta == 0 or alpha == 0:
        return base
    twist = F.mul(spec.eta, F.mul(F.pow(alpha, spec.t), F.inv(spec.g(alpha))))
    return base - Poly.constant(F, twist)


def parity_matrix(spec: CodeSpec) -> ParityMatrix:
    F = spec.field
    res = spec.residues()
    t, m, n = spec.t, F.m, spec.n
    ext_rows = tuple(tuple(res[i][j] for i in range(n)) for j in range(t))
    base_rows = []
    for j in range(t):
        digit_rows = [[0] * n for _ in range(m)]
        for i in range(n):
            for l, d in enumerate(F.expand(ext_rows[j][i])):
                digit_rows[l][i] = d
        base_rows.extend(tuple(row) for row in digit_rows)
    return ParityMatrix(F.q, m, t, n, ext_rows, tuple(base_rows))


def rank(pm: ParityMatrix) -> int:
    """Exact GF(q) rank of the expanded parity matrix."""
    if pm.q == 2:
        return rank_gf2(pack_gf2_row(row) for row in pm.base_rows)
    return rank_modp([list(row) for row in pm.base_rows], pm.q)


def dimension(spec: CodeSpec) -> int:
    """k = n - rank; always within [max(0, n - mt), n]."""
    return spec.n - rank(parity_matrix(spec))


def kernel_basis(spec: CodeSpec) -> list[tuple[int, ...]]:
    """A basis of the code over GF(q), one tuple per dimension."""
    pm = parity_matrix(spec)
    basis = nullspace_modp([list(row) for row in pm.base_rows], pm.q, pm.n)
    if len(basis) != pm.n - rank(pm):
        raise InternalConsistencyError("nullspace size disagrees with rank")
    return basis


def is_codeword(spec: CodeSpec, word) -> bool:
    """Evaluate the defining congruence directly on a GF(q)^n word.

    This is polynomial arithmetic over GF(q^m) on the column residues
    and never touches the expanded matrix, so it can arbitrate between
    the rank and brute-force dimension routes.
    """
    word = tuple(word)
    if len(word) != spec.n:
        raise ValueError(f"word length {len(word)} != support size {spec.n}")
    q = spec.field.q
    if any(not isinstance(c, int) or not 0 <= c < q for c in word):
        raise ValueError("word entries must be integers in [0, q)")
    F = spec.field
    t = spec.t
    acc = [0] * t
    for c, col in zip(word, spec.residues()):
        if c == 0:
            continue
        if c == 1:
            for j in range(t):
                acc[j] = F.add(acc[j], col[j])
        else:
            for j in range(t):
                acc[j] = F.add(acc[j], F.mul(c, col[j]))
    return not any(acc)


def _exact_power_log(count: int, q: int) -> int:
    k = 0
    while count % q == 0:
        count //= q
        k += 1
    if count != 1:
        raise InternalConsistencyError(
            f"codeword count is not a power of {q}; a linear system's solution "
            f"set must have power-of-{q} size"
        )
    return k


def brute_force_dimension(spec: CodeSpec, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Dimension by full enumeration of all q^n candidate words.

    Counts the words satisfying the defining congruence, insists the
    count is an exact power of q, and returns its base-q logarithm.
    Independent oracle for :func:`dimension`.
    """
    q, n = spec.field.q, spec.n
    total = q**n
    if total > cap:
        raise EnumerationCapError(f"q^n = {total} exceeds the enumeration cap {cap}")
    if q == 2:
        # Gray-code walk: step i toggles exactly one coordinate, so the
        # running residue sum stays current with one XOR per word.
        m = spec.field.m
        packed = [
            sum(col[j] << (j * m) for j in range(spec.t)) for col in spec.residues()
        ]
        acc = 0
        count = 1  # the all-zero word
        for i in range(1, total):
            acc ^= packed[(i & -i).bit_length() - 1]
            if not acc:
                count += 1
    else:
        count = sum(
            1 for word in itertools.product(range(q), repeat=n) if is_codeword(spec, word)
        )
    return _exact_power_log(count, q)


def codes_equal(a: CodeSpec, b: CodeSpec) -> bool:
    """True iff the two codes have identical word sets over GF(q)."""
    if a.field.q != b.field.q:
        raise ValueError("codes live over different base fields")
    if a.n != b.n:
        raise ValueError(f"codes have different lengths ({a.n} vs {b.n})")
    if dimension(a) != dimension(b):
        return False
    return all(is_codeword(b, w) for w in kernel_basis(a))


# -- JSON interchange -------------------------------------------------------


def spec_to_json(spec: CodeSpec) -> dict:
    return {
        "q": spec.field.q,
        "m": spec.field.m,
        "t": spec.t,
        "modulus": list(spec.field.modulus),
        "support": list(spec.support),
        "g": spec.g.to_string(),
        "eta": spec.eta,
    }


def spec_from_json(data: dict) -> CodeSpec:
    field = Field(data["q"], data["m"], data["modulus"])
    g = Poly.from_string(field, data["g"])
    if "t" in data and g.degree != data["t"]:
        raise InvalidSpecError(f"g has degree {g.degree}, expected t={data['t']}")
    return CodeSpec(field, data["support"], g, data["eta"])


def matrix_to_json(pm: ParityMatrix) -> dict:
    return {
        "q": pm.q,
        "m": pm.m,
        "t": pm.t,
        "n": pm.n,
        "ext_rows": [list(row) for row in pm.ext_rows],
        "base_rows": [list(row) for row in pm.base_rows],
    }
