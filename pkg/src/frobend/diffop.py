"""Differential operators on F_p[t] through the Frobenius.

An operator that is linear over the subring ``F_p[t^q]`` (``q = p^e``) is
stored as a ``q x q`` matrix with entries in ``F_p[u]``, ``u = t^q``: column
``j`` holds the image of ``t^j`` written as ``sum_i M[i][j](u) t^i``.  Two
operators are equal exactly when their matrices are.

Two ways of moving an operator from level ``e`` to level ``e' > e`` are
provided.  :func:`natural_inclusion` keeps the action unchanged;
:func:`split_embedding` conjugates through the standard Frobenius splitting
``tau`` instead, and generally produces a different operator.

    >>> d = divided_power(1, p=2, e=1)
    >>> natural_inclusion(d, 2) == split_embedding(d, 2)
    False
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

Action = Callable[["FpPoly"], "FpPoly"]


class NotInDError(ValueError):
    """The map is not linear over the requested subring of p-th powers."""


class FpPoly:
    """Polynomial over the prime field F_p, lowest degree first."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def monomial(cls, p: int, k: int, c: int = 1) -> FpPoly:
        return cls(p, [0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def terms(self):
        return ((m, c) for m, c in enumerate(self.coeffs) if c)

    def _check(self, other: FpPoly):
        if other.p != self.p:
            raise ValueError(f"characteristic mismatch: {self.p} vs {other.p}")

    def __add__(self, other: FpPoly) -> FpPoly:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return FpPoly(self.p, [self[k] + other[k] for k in range(n)])

    def __neg__(self) -> FpPoly:
        return FpPoly(self.p, [-c for c in self.coeffs])

    def __sub__(self, other: FpPoly) -> FpPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return FpPoly(self.p, [c * other for c in self.coeffs])
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return FpPoly(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in self.terms():
            for j, b in other.terms():
                out[i + j] += a * b
        return FpPoly(self.p, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, FpPoly):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == FpPoly(self.p, [other])
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for m, c in self.terms():
            if m == 0:
                parts.append(str(c))
            else:
                mon = var if m == 1 else f"{var}^{m}"
                parts.append(mon if c == 1 else f"{c}*{mon}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FpPoly(p={self.p}, {self.format()})"


def binom_mod_p(m: int, k: int, p: int) -> int:
    """C(m, k) mod p by Lucas' theorem."""
    if k < 0 or k > m:
        return 0
    out = 1
    while m or k:
        mi, ki = m % p, k % p
        if ki > mi:
            return 0
        # small digits: exact binomial is cheap
        num = den = 1
        for i in range(ki):
            num *= mi - i
            den *= i + 1
        out = out * (num // den) % p
        m //= p
        k //= p
    return out


def frobenius_power(f: FpPoly, k: int) -> FpPoly:
    """``f^(p^k)``; coefficients in F_p are fixed by Frobenius."""
    step = f.p**k
    out = [0] * (f.degree * step + 1) if f else []
    for m, c in f.terms():
        out[m * step] = c
    return FpPoly(f.p, out)


def splitting_tau(p: int, e: int) -> Action:
    """The standard splitting: ``t^m -> t^(m/p^e)`` if ``p^e | m`` else 0."""
    q = p**e

    def tau(f: FpPoly) -> FpPoly:
        out = [0] * (f.degree // q + 1) if f else []
        for m, c in f.terms():
            if m % q == 0:
                out[m // q] = c
        return FpPoly(p, out)

    return tau


@dataclass(frozen=True)
class DividedPower:
    """``t^m -> C(m, k) t^(m-k)``, the operator written (d/dt)^k / k! in characteristic 0."""

    order: int

    def __call__(self, f: FpPoly) -> FpPoly:
        k = self.order
        out = [0] * max(f.degree - k + 1, 0)
        for m, c in f.terms():
            if m >= k:
                out[m - k] = c * binom_mod_p(m, k, f.p)
        return FpPoly(f.p, out)


def check_linearity(action: Action, p: int, r: int, window: int | None = None):
    """Raise :class:`NotInDError` unless ``action(t^(kr) t^j) == t^(kr) action(t^j)``.

    Checked for ``j < window`` (default ``r``) and ``k = 1, 2``.
    """
    for j in range(window or r):
        base = action(FpPoly.monomial(p, j))
        for k in (1, 2):
            shift = FpPoly.monomial(p, k * r)
            if action(FpPoly.monomial(p, k * r + j)) != shift * base:
                raise NotInDError(f"not linear over F_{p}[t^{r}]: fails on t^{k * r + j}")


@dataclass(frozen=True)
class OperatorMatrix:
    p: int
    e: int
    entries: tuple[tuple[FpPoly, ...], ...]
    q: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        q = self.p**self.e
        object.__setattr__(self, "q", q)
        if len(self.entries) != q or any(len(row) != q for row in self.entries):
            raise ValueError(f"expected a {q}x{q} matrix")

    @classmethod
    def identity(cls, p: int, e: int) -> OperatorMatrix:
        q = p**e
        return cls(p, e, tuple(tuple(FpPoly(p, [int(i == j)]) for j in range(q)) for i in range(q)))

    def column_image(self, j: int) -> FpPoly:
        """Image of ``t^j`` (``j < q``) as a polynomial in t."""
        out: dict[int, int] = {}
        for i in range(self.q):
            for a, c in self.entries[i][j].terms():
                out[a * self.q + i] = c
        return _from_dict(self.p, out)

    def apply(self, f: FpPoly) -> FpPoly:
        if f.p != self.p:
            raise ValueError("characteristic mismatch")
        cols = [self.column_image(j) for j in range(self.q)]
        result = FpPoly(self.p)
        for m, c in f.terms():
            k, j = divmod(m, self.q)
            result = result + FpPoly.monomial(self.p, k * self.q, c) * cols[j]
        return result

    __call__ = apply

    def _same_level(self, other: OperatorMatrix):
        if (self.p, self.e) != (other.p, other.e):
            raise ValueError(f"level mismatch: (p={self.p}, e={self.e}) vs (p={other.p}, e={other.e})")

    def __add__(self, other: OperatorMatrix) -> OperatorMatrix:
        self._same_level(other)
        return OperatorMatrix(
            self.p,
            self.e,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: OperatorMatrix) -> OperatorMatrix:
        return self + other * -1

    def __mul__(self, c: int) -> OperatorMatrix:
        if not isinstance(c, int):
            return NotImplemented
        return OperatorMatrix(self.p, self.e, tuple(tuple(a * c for a in row) for row in self.entries))

    __rmul__ = __mul__

    def __matmul__(self, other: OperatorMatrix) -> OperatorMatrix:
        """Composition ``self o other``."""
        self._same_level(other)
        q = self.q
        zero = FpPoly(self.p)
        rows = []
        for i in range(q):
            row = []
            for j in range(q):
                acc = zero
                for k in range(q):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return OperatorMatrix(self.p, self.e, tuple(rows))

    def to_text(self) -> str:
        cells = [[c.format("u") for c in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "e": self.e,
            "basis": [f"t^{j}" for j in range(self.q)],
            "entries": [[list(c.coeffs) for c in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> OperatorMatrix:
        p = int(data["p"])
        return cls(p, int(data["e"]), tuple(tuple(FpPoly(p, c) for c in row) for row in data["entries"]))


def _from_dict(p: int, coeffs: dict[int, int]) -> FpPoly:
    if not coeffs:
        return FpPoly(p)
    out = [0] * (max(coeffs) + 1)
    for m, c in coeffs.items():
        out[m] = c
    return FpPoly(p, out)


def to_matrix(action: Action, p: int, e: int) -> OperatorMatrix:
    """Matrix of an ``F_p[t^(p^e)]``-linear map in the basis ``1, t, ..., t^(p^e - 1)``."""
    q = p**e
    check_linearity(action, p, q)
    cols = [action(FpPoly.monomial(p, j)) for j in range(q)]
    entries = []
    for i in range(q):
        row = []
        for j in range(q):
            row.append(FpPoly(p, [cols[j][a * q + i] for a in range(cols[j].degree // q + 1)]))
        entries.append(tuple(row))
    return OperatorMatrix(p, e, tuple(entries))


def divided_power(k: int, p: int, e: int) -> OperatorMatrix:
    if p**e <= k:
        raise NotInDError(f"divided power of order {k} is not linear over F_{p}[t^{p**e}]")
    return to_matrix(DividedPower(k), p, e)


def multiplication(f: FpPoly, e: int) -> OperatorMatrix:
    return to_matrix(lambda g: f * g, f.p, e)


def natural_inclusion(op: OperatorMatrix, e2: int) -> OperatorMatrix:
    """The same operator viewed at level ``e2``."""
    if e2 <= op.e:
        raise ValueError(f"target level {e2} must exceed {op.e}")
    return to_matrix(op.apply, op.p, e2)


def split_embedding(op: OperatorMatrix, e2: int) -> OperatorMatrix:
    """``g -> (op(tau(g)))^(p^(e2-e))`` with ``tau`` the splitting of ``r -> r^(p^(e2-e))``."""
    if e2 <= op.e:
        raise ValueError(f"target level {e2} must exceed {op.e}")
    k = e2 - op.e
    tau = splitting_tau(op.p, k)
    return to_matrix(lambda g: frobenius_power(op.apply(tau(g)), k), op.p, e2)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class DiffopReport:
    p: int
    e: int
    e2: int
    inclusion: OperatorMatrix
    embedding: OperatorMatrix
    checks: list[Check]
    exploratory: dict[str, object]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "e": self.e,
            "e_prime": self.e2,
            "passed": self.passed,
            "i": self.inclusion.to_json(),
            "j": self.embedding.to_json(),
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
            "exploratory": self.exploratory,
        }

    def to_text(self) -> str:
        lines = [
            f"p = {self.p}, levels e = {self.e} -> e' = {self.e2}, basis 1, t, ..., t^{self.p ** self.e2 - 1}, u = t^{self.p ** self.e2}",
            "i(d/dt) (natural inclusion):",
            self.inclusion.to_text(),
            "j(d/dt) (via the Frobenius splitting):",
            self.embedding.to_text(),
        ]
        for c in self.checks:
            lines.append(f"[{'PASS' if c.passed else 'FAIL'}] {c.name}" + (f": {c.detail}" if c.detail else ""))
        for k, v in self.exploratory.items():
            lines.append(f"(explore) {k}: {v}")
        lines.append("verdict: " + ("i != j confirmed" if self.passed else "FAILED"))
        return "\n".join(lines)


def _basis_images(op: OperatorMatrix, upto: int) -> list[FpPoly]:
    return [op.apply(FpPoly.monomial(op.p, m)) for m in range(upto)]


def verify_paper_example(p: int = 2) -> DiffopReport:
    """Compare the two embeddings of ``d/dt`` from level 1 into level 2.

    For ``p = 2`` also checks the explicit form of ``j(d/dt)``: it kills
    ``1, t, t^3``, sends ``t^2`` to 1, and equals ``D2 + t D3`` with ``Dk`` the
    divided powers.
    """
    e, e2 = 1, 2
    q2 = p**e2
    d = divided_power(1, p, e)
    i_d = natural_inclusion(d, e2)
    j_d = split_embedding(d, e2)
    checks = [
        Check("i(d/dt) acts as d/dt", _basis_images(i_d, 3 * q2) == [DividedPower(1)(FpPoly.monomial(p, m)) for m in range(3 * q2)]),
        Check("i(d/dt) != j(d/dt)", i_d != j_d),
    ]
    if p == 2:
        expected = [FpPoly(2), FpPoly(2), FpPoly(2, [1]), FpPoly(2)]
        images = _basis_images(j_d, 4)
        checks.append(
            Check(
                "j(d/dt): 1 -> 0, t -> 0, t^2 -> 1, t^3 -> 0",
                images == expected,
                ", ".join(f"t^{m} -> {f.format()}" for m, f in enumerate(images)),
            )
        )
        t_op = multiplication(FpPoly.monomial(2, 1), e2)
        formula = divided_power(2, 2, e2) + t_op @ divided_power(3, 2, e2)
        checks.append(Check("j(d/dt) = D2 + t*D3 as matrices", j_d == formula))
    else:
        images = _basis_images(j_d, q2)
        checks.append(
            Check(
                "j(d/dt) is supported on p-th powers",
                all(not f for m, f in enumerate(images) if m % p),
                ", ".join(f"t^{m} -> {f.format()}" for m, f in enumerate(images) if f),
            )
        )

    r = FpPoly.monomial(p, p)  # t^p, a p-th power
    mult_r = multiplication(r, e)
    ident = OperatorMatrix.identity(p, e)
    j_id = split_embedding(ident, e2)
    exploratory: dict[str, object] = {
        "i(t^p) == j(t^p)": natural_inclusion(mult_r, e2) == split_embedding(mult_r, e2),
        "j(1) == 1": j_id == OperatorMatrix.identity(p, e2),
        "j(1) idempotent": (j_id @ j_id) == j_id,
        "j(d/dt o t^p) == j(d/dt) o j(t^p)": split_embedding(d @ mult_r, e2) == j_d @ split_embedding(mult_r, e2),
    }
    return DiffopReport(p, e, e2, i_d, j_d, checks, exploratory)
