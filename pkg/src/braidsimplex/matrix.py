"""
Dense N x N matrices on the edge basis, over one of three scalar domains.

``symbolic`` entries are LaurentQT, ``rational`` entries are Fraction and ``float``
entries are Python floats. Row and column r correspond to the r-th edge of the
lexicographic order, so an EdgeMatrix always has dimension n(n-1)/2.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence

from .errors import DimensionMismatch, NonLaurentEntry, Singular
from .laurent import LaurentQT, ONE, ZERO

DOMAINS = ("symbolic", "rational", "float")
FLOAT_RTOL = 1e-9


def edge_count(n: int) -> int:
    return n * (n - 1) // 2


def _convert(x, domain: str):
    if domain == "symbolic":
        return LaurentQT.coerce(x)
    if domain == "rational":
        if isinstance(x, LaurentQT):
            raise TypeError("symbolic entry in a rational matrix")
        return Fraction(x)
    return float(x)


def _zero(domain: str):
    return {"symbolic": ZERO, "rational": Fraction(0), "float": 0.0}[domain]


def _one(domain: str):
    return {"symbolic": ONE, "rational": Fraction(1), "float": 1.0}[domain]


class EdgeMatrix:
    """An immutable matrix acting on edge-norm column vectors from the left."""

    __slots__ = ("n", "dim", "domain", "rows")

    def __init__(self, n: int, rows: Sequence[Sequence], domain: str = "symbolic"):
        if domain not in DOMAINS:
            raise ValueError(f"unknown scalar domain {domain!r}")
        dim = edge_count(n)
        if len(rows) != dim or any(len(r) != dim for r in rows):
            raise DimensionMismatch(f"expected a {dim}x{dim} matrix for n={n}")
        self.n = n
        self.dim = dim
        self.domain = domain
        self.rows = tuple(tuple(_convert(x, domain) for x in r) for r in rows)

    @classmethod
    def _wrap(cls, n: int, rows, domain: str) -> EdgeMatrix:
        obj = cls.__new__(cls)
        obj.n = n
        obj.dim = edge_count(n)
        obj.domain = domain
        obj.rows = tuple(tuple(r) for r in rows)
        return obj

    @classmethod
    def identity(cls, n: int, domain: str = "symbolic") -> EdgeMatrix:
        dim = edge_count(n)
        z, o = _zero(domain), _one(domain)
        return cls._wrap(n, [[o if r == c else z for c in range(dim)] for r in range(dim)], domain)

    @classmethod
    def zeros(cls, n: int, domain: str = "symbolic") -> EdgeMatrix:
        dim = edge_count(n)
        z = _zero(domain)
        return cls._wrap(n, [[z] * dim for _ in range(dim)], domain)

    def __getitem__(self, rc: tuple[int, int]):
        r, c = rc
        return self.rows[r][c]

    def row(self, r: int) -> tuple:
        return self.rows[r]

    def map(self, fn: Callable, domain: str | None = None) -> EdgeMatrix:
        domain = domain or self.domain
        return EdgeMatrix(self.n, [[fn(x) for x in r] for r in self.rows], domain)

    # arithmetic
    def _check(self, other: EdgeMatrix):
        if self.n != other.n:
            raise DimensionMismatch(f"n={self.n} vs n={other.n}")
        if self.domain != other.domain:
            raise ValueError(f"scalar domain mismatch: {self.domain} vs {other.domain}")

    def __matmul__(self, other: EdgeMatrix) -> EdgeMatrix:
        if not isinstance(other, EdgeMatrix):
            return NotImplemented
        self._check(other)
        dim = self.dim
        z = _zero(self.domain)
        # sparse row lists for B; symbolic matrices here are mostly zero
        bcols = [[(c, x) for c, x in enumerate(row) if x] for row in other.rows]
        out = []
        for arow in self.rows:
            acc = [z] * dim
            for k, a in enumerate(arow):
                if not a:
                    continue
                for c, b in bcols[k]:
                    acc[c] = acc[c] + a * b
            out.append(acc)
        return EdgeMatrix._wrap(self.n, out, self.domain)

    def __add__(self, other: EdgeMatrix) -> EdgeMatrix:
        self._check(other)
        return EdgeMatrix._wrap(
            self.n, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.domain
        )

    def __sub__(self, other: EdgeMatrix) -> EdgeMatrix:
        self._check(other)
        return EdgeMatrix._wrap(
            self.n, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.domain
        )

    def apply(self, vec: Sequence) -> list:
        """Matrix times column vector."""
        if len(vec) != self.dim:
            raise DimensionMismatch(f"vector of length {len(vec)} for dimension {self.dim}")
        out = []
        for r in self.rows:
            s = _zero(self.domain) if self.domain != "symbolic" else 0
            for a, x in zip(r, vec):
                if a:
                    s = s + a * x
            out.append(s)
        return out

    def transpose(self) -> EdgeMatrix:
        return EdgeMatrix._wrap(self.n, list(zip(*self.rows)), self.domain)

    # comparisons
    def __eq__(self, other):
        if not isinstance(other, EdgeMatrix):
            return NotImplemented
        if self.n != other.n or self.domain != other.domain:
            return False
        if self.domain == "float":
            return self.allclose(other)
        return self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.domain, self.rows))

    def allclose(self, other: EdgeMatrix, rtol: float = FLOAT_RTOL) -> bool:
        scale = max(1.0, max((abs(float(x)) for r in self.rows for x in r), default=0.0))
        return all(
            abs(float(a) - float(b)) <= rtol * scale
            for r, s in zip(self.rows, other.rows)
            for a, b in zip(r, s)
        )

    def is_identity(self) -> bool:
        return self == EdgeMatrix.identity(self.n, self.domain)

    # specialization
    def evaluate(self, q0, t0=1) -> EdgeMatrix:
        """Substitute numbers for q and t. Result is rational for exact inputs, float otherwise."""
        if self.domain != "symbolic":
            raise TypeError("evaluate() needs a symbolic matrix")
        exact = not isinstance(q0, float) and not isinstance(t0, float)
        domain = "rational" if exact else "float"
        return EdgeMatrix._wrap(self.n, [[x.eval(q0, t0) for x in r] for r in self.rows], domain)

    def subs_t(self, t0: int) -> EdgeMatrix:
        return EdgeMatrix._wrap(self.n, [[x.subs_t(t0) for x in r] for r in self.rows], "symbolic")

    def invert_q(self) -> EdgeMatrix:
        return EdgeMatrix._wrap(self.n, [[x.invert_q() for x in r] for r in self.rows], "symbolic")

    def max_q_degree(self) -> int:
        return max((x.q_degree() for r in self.rows for x in r if x), default=0)

    def to_rational(self) -> EdgeMatrix:
        """Reinterpret an integer-valued symbolic matrix (constants only) as rational."""
        if self.domain == "rational":
            return self
        return EdgeMatrix(self.n, [[x.eval(1, 1) if isinstance(x, LaurentQT) else x for x in r] for r in self.rows], "rational")

    # inverse and determinant
    def inverse(self) -> EdgeMatrix:
        return mat_inverse(self)

    def det(self):
        return mat_det(self)

    # serialization
    def to_json(self) -> dict:
        return {"n": self.n, "domain": self.domain, "rows": [[scalar_to_json(x) for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> EdgeMatrix:
        domain = data.get("domain") or _guess_domain(data["rows"])
        rows = [[scalar_from_json(x, domain) for x in r] for r in data["rows"]]
        return cls(int(data["n"]), rows, domain)

    def __repr__(self):
        return f"EdgeMatrix(n={self.n}, domain={self.domain!r})"

    def pretty(self) -> str:
        cells = [[str(x) if not isinstance(x, float) else f"{x:.12g}" for x in r] for r in self.rows]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)


def scalar_to_json(x):
    if isinstance(x, LaurentQT):
        return x.to_json()
    if isinstance(x, Fraction):
        return str(x)
    return float(x)


def scalar_from_json(x, domain: str):
    if domain == "symbolic":
        return LaurentQT.from_json(x)
    if domain == "rational":
        return Fraction(x)
    return float(x)


def _guess_domain(rows) -> str:
    for r in rows:
        for x in r:
            if isinstance(x, list):
                return "symbolic"
            if isinstance(x, str):
                return "rational"
    return "float"


def mat_mul(a: EdgeMatrix, b: EdgeMatrix) -> EdgeMatrix:
    return a @ b


# numeric Gauss-Jordan; rational is exact, float uses partial pivoting
def _gauss_jordan(m: EdgeMatrix) -> EdgeMatrix:
    dim = m.dim
    exact = m.domain == "rational"
    aug = [list(r) + [Fraction(int(i == j)) if exact else float(i == j) for j in range(dim)] for i, r in enumerate(m.rows)]
    scale = max((abs(x) for r in m.rows for x in r), default=1) or 1
    for col in range(dim):
        if exact:
            piv = next((r for r in range(col, dim) if aug[r][col] != 0), None)
        else:
            piv = max(range(col, dim), key=lambda r: abs(aug[r][col]))
            if abs(aug[piv][col]) <= 1e-13 * scale:
                piv = None
        if piv is None:
            raise Singular(f"zero pivot in column {col}")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        prow = [x / p for x in aug[col]]
        aug[col] = prow
        for r in range(dim):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], prow)]
    return EdgeMatrix._wrap(m.n, [r[dim:] for r in aug], m.domain)


def _to_sympy_field(m: EdgeMatrix):
    import sympy
    from sympy import ZZ
    from sympy.polys.matrices import DomainMatrix

    q, t = sympy.symbols("q t")
    field = ZZ.frac_field(q, t)
    gens = field.gens

    def conv(x: LaurentQT):
        acc = field.zero
        for (a, b), c in x.items():
            acc += c * gens[0] ** a * gens[1] ** b
        return acc

    dm = DomainMatrix([[conv(x) for x in r] for r in m.rows], (m.dim, m.dim), field)
    return dm, field


def _from_field_element(x) -> LaurentQT:
    num, den = x.numer, x.denom
    dterms = list(den.terms())
    if len(dterms) != 1 or abs(dterms[0][1]) != 1:
        raise NonLaurentEntry(f"non-monomial denominator {den}")
    (da, db), dc = dterms[0]
    sign = int(dc)
    return LaurentQT(((a - da, b - db), int(c) * sign) for (a, b), c in num.terms())


def mat_inverse(m: EdgeMatrix) -> EdgeMatrix:
    """Inverse over the fraction field of the scalar domain.

    Symbolic matrices go through Gaussian elimination over Q(q, t); every entry of
    the result must have a unit-monomial denominator, otherwise NonLaurentEntry.
    The product with the input is checked to be the identity before returning.
    """
    if m.domain != "symbolic":
        inv = _gauss_jordan(m)
        if m.domain == "rational" and not (m @ inv).is_identity():
            raise Singular("rational inverse failed verification")
        return inv
    dm, _ = _to_sympy_field(m)
    try:
        inv = dm.inv()
    except Exception as exc:  # sympy raises DMNonInvertibleMatrixError
        raise Singular(str(exc)) from exc
    rows = inv.to_list()
    out = EdgeMatrix._wrap(m.n, [[_from_field_element(x) for x in r] for r in rows], "symbolic")
    if not (m @ out).is_identity():
        raise NonLaurentEntry("symbolic inverse failed verification")
    return out


def mat_det(m: EdgeMatrix):
    """Determinant; a LaurentQT for symbolic input (NonLaurentEntry if it is not one)."""
    if m.domain == "symbolic":
        dm, _ = _to_sympy_field(m)
        return _from_field_element(dm.det())
    dim = m.dim
    rows = [list(r) for r in m.rows]
    det = Fraction(1) if m.domain == "rational" else 1.0
    for col in range(dim):
        piv = next((r for r in range(col, dim) if rows[r][col] != 0), None)
        if piv is None:
            return det * 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        p = rows[col][col]
        det *= p
        for r in range(col + 1, dim):
            if rows[r][col]:
                f = rows[r][col] / p
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return det


def vector_close(a: Sequence, b: Sequence, rtol: float = FLOAT_RTOL) -> bool:
    return all(math.isclose(float(x), float(y), rel_tol=rtol, abs_tol=rtol) for x, y in zip(a, b))
