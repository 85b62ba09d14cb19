from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Literal, Optional, Union

Partition = tuple[int, ...]
Weight = tuple[int, ...]
Root = tuple[int, int]


# Partitions ------------------------------------------------------------------------
def strip(parts: Iterable[int]) -> Partition:
    """Drop trailing zeros."""
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def pad(parts: Iterable[int], length: int) -> Weight:
    parts = tuple(parts)
    if len(parts) > length:
        if any(parts[length:]):
            raise ValueError(f"Cannot pad {parts} to length {length}")
        return parts[:length]
    return parts + (0,) * (length - len(parts))


def is_partition(parts: Iterable[int]) -> bool:
    parts = tuple(parts)
    if any(p < 0 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def as_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    if not is_partition(parts):
        raise ValueError(f"{parts} is not a partition")
    return strip(parts)


def conjugate(parts: Iterable[int]) -> Partition:
    parts = strip(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def contains(outer: Iterable[int], inner: Iterable[int]) -> bool:
    outer, inner = strip(outer), strip(inner)
    if len(inner) > len(outer):
        return False
    return all(o >= i for o, i in zip(outer, inner))


def partitions(
    n: int, max_part: Optional[int] = None, max_length: Optional[int] = None
) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order, largest first."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def _gen(remaining, bound, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, bound), 0, -1):
            if first * slots < remaining:
                break
            for rest in _gen(remaining - first, first, slots - 1):
                yield (first,) + rest

    if n < 0:
        return iter(())
    return _gen(n, max_part, max_length)


# Polynomials in t ------------------------------------------------------------------
@dataclass(frozen=True)
class TPoly:
    """Polynomial in ``t`` with integer coefficients, ``coeffs[i]`` multiplies ``t^i``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def monomial(cls, coeff: int = 1, exponent: int = 0) -> "TPoly":
        if exponent < 0:
            raise ValueError(f"Negative exponent {exponent}")
        return cls((0,) * exponent + (coeff,))

    @classmethod
    def coerce(cls, value: Union["TPoly", int]) -> "TPoly":
        if isinstance(value, TPoly):
            return value
        if isinstance(value, int):
            return cls((value,))
        raise TypeError(f"Cannot use {type(value).__name__} as a polynomial in t")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def min_degree(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = TPoly.coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return TPoly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return TPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-TPoly.coerce(other))

    def __rsub__(self, other):
        return TPoly.coerce(other) - self

    def __mul__(self, other):
        other = TPoly.coerce(other)
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return TPoly(tuple(out))

    __rmul__ = __mul__

    def shift(self, exponent: int) -> "TPoly":
        """Multiply by ``t^exponent``."""
        if not self.coeffs:
            return self
        return TPoly((0,) * exponent + self.coeffs)

    def evaluate(self, t: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __str__(self):
        pieces = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            body = str(abs(c)) if i == 0 else f"{abs(c)}*t" if i == 1 else f"{abs(c)}*t^{i}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces) if pieces else "0"


Scalar = Union[TPoly, int]


# Linear combinations ---------------------------------------------------------------
class _Combination:
    """Finite map from stripped partitions to nonzero ``TPoly`` coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        collected: dict[Partition, TPoly] = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for key, coeff in items:
            key = strip(key)
            coeff = TPoly.coerce(coeff)
            collected[key] = collected[key] + coeff if key in collected else coeff
        self._terms = {key: c for key, c in collected.items() if c}

    def _spawn(self, terms) -> "_Combination":
        return type(self)(terms)

    def _check_compatible(self, other):
        if type(other) is not type(self):
            raise TypeError(
                f"Cannot combine {type(self).__name__} with {type(other).__name__}"
            )

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key: Iterable[int]) -> TPoly:
        return self._terms.get(strip(key), TPoly())

    __getitem__ = coefficient

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        self._check_compatible(other)
        return self._spawn(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return self._spawn({key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar: Scalar):
        scalar = TPoly.coerce(scalar)
        return self._spawn({key: c * scalar for key, c in self._terms.items()})

    __rmul__ = __mul__

    def map_coefficients(self, func) -> "_Combination":
        return self._spawn({key: func(c) for key, c in self._terms.items()})

    def sorted_items(self) -> list[tuple[Partition, TPoly]]:
        """Terms by lowest t-degree, ties broken by reverse-lex partition."""
        return sorted(
            self._terms.items(),
            key=lambda kv: (kv[1].min_degree, sum(kv[0]), tuple(-p for p in kv[0]) + (0,)),
        )

    def _render(self, letter: str) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for key, c in self.sorted_items():
            basis = f"{letter}[{','.join(str(p) for p in key)}]"
            pieces.append(basis if c == TPoly((1,)) else f"({c})*{basis}")
        return " + ".join(pieces)


class SymFunc(_Combination):
    """A symmetric function written in the Schur basis over Z[t]."""

    __slots__ = ()

    @classmethod
    def zero(cls) -> "SymFunc":
        return cls()

    @classmethod
    def one(cls) -> "SymFunc":
        return cls({(): TPoly((1,))})

    @classmethod
    def schur(cls, parts: Iterable[int], coeff: Scalar = 1) -> "SymFunc":
        return cls({as_partition(parts): coeff})

    def degrees(self) -> set[int]:
        return {sum(key) for key in self._terms}

    def homogeneous_parts(self) -> dict[int, "SymFunc"]:
        parts: dict[int, list] = {}
        for key, c in self._terms.items():
            parts.setdefault(sum(key), []).append((key, c))
        return {d: SymFunc(items) for d, items in parts.items()}

    def __repr__(self):
        return f"SymFunc({self})"

    def __str__(self):
        return self._render("s")


class KExpansion(_Combination):
    """Linear combination of graded k-Schur functions for a fixed ``k``."""

    __slots__ = ("k",)

    def __init__(self, k: int, terms=None):
        if k < 1:
            raise ValueError(f"k must be positive, got {k}")
        self.k = k
        super().__init__(terms)
        for key in self._terms:
            if key and key[0] > k:
                raise ValueError(f"{key} has a part larger than k={k}")

    def _spawn(self, terms):
        return KExpansion(self.k, terms)

    def _check_compatible(self, other):
        super()._check_compatible(other)
        if other.k != self.k:
            raise ValueError(f"Cannot mix k-Schur expansions with k={self.k} and k={other.k}")

    def __eq__(self, other):
        if not isinstance(other, KExpansion):
            return NotImplemented
        return self.k == other.k and self._terms == other._terms

    def __hash__(self):
        return hash((self.k, frozenset(self._terms.items())))

    def __repr__(self):
        return f"KExpansion(k={self.k}, {self})"

    def __str__(self):
        return self._render(f"s{self.k}")


# Root ideals ------------------------------------------------------------------------
@dataclass(frozen=True)
class RootIdeal:
    """Upper order ideal of the positive roots ``(i, j)``, ``1 <= i < j <= ell``.

    Row ``i`` holds ``rowcounts[i-1]`` roots, the right-most ones, so its first
    root sits in column ``ell + 1 - rowcounts[i-1]``.
    """

    ell: int
    rowcounts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rowcounts", tuple(int(n) for n in self.rowcounts))
        if self.ell < 1:
            raise ValueError(f"ell must be positive, got {self.ell}")
        if len(self.rowcounts) != self.ell:
            raise ValueError(
                f"Expected {self.ell} row counts, got {len(self.rowcounts)}"
            )
        for i, n in enumerate(self.rowcounts, start=1):
            if not 0 <= n <= self.ell - i:
                raise ValueError(f"Row {i} cannot hold {n} roots when ell={self.ell}")
            if i > 1 and n > self.rowcounts[i - 2]:
                raise ValueError(f"Row counts {self.rowcounts} are not weakly decreasing")

    @classmethod
    def empty(cls, ell: int) -> "RootIdeal":
        return cls(ell, (0,) * ell)

    @classmethod
    def full(cls, ell: int) -> "RootIdeal":
        return cls(ell, tuple(ell - i for i in range(1, ell + 1)))

    @classmethod
    def from_roots(cls, ell: int, roots: Iterable[Root]) -> "RootIdeal":
        roots = set(roots)
        counts = [0] * ell
        for i, j in roots:
            if not 1 <= i < j <= ell:
                raise ValueError(f"{(i, j)} is not a positive root for ell={ell}")
            counts[i - 1] = max(counts[i - 1], ell + 1 - j)
        ideal = cls(ell, tuple(counts))
        if ideal.roots() != roots:
            raise ValueError(f"{sorted(roots)} is not an upper order ideal")
        return ideal

    def rowcount(self, i: int) -> int:
        if 1 <= i <= self.ell:
            return self.rowcounts[i - 1]
        return 0

    def first_col(self, i: int) -> int:
        return self.ell + 1 - self.rowcount(i)

    def column_length(self, c: int) -> int:
        return sum(1 for i in range(1, c) if self.rowcount(i) >= self.ell + 1 - c)

    def __contains__(self, root: Root) -> bool:
        i, j = root
        return 1 <= i < j <= self.ell and j >= self.first_col(i)

    def roots(self) -> set[Root]:
        return {
            (i, j)
            for i in range(1, self.ell + 1)
            for j in range(self.first_col(i), self.ell + 1)
        }

    def complement(self) -> list[Root]:
        return [
            (i, j)
            for i in range(1, self.ell + 1)
            for j in range(i + 1, self.first_col(i))
        ]

    def __len__(self):
        return sum(self.rowcounts)

    def with_root(self, root: Root) -> "RootIdeal":
        return RootIdeal.from_roots(self.ell, self.roots() | {root})

    def without_root(self, root: Root) -> "RootIdeal":
        return RootIdeal.from_roots(self.ell, self.roots() - {root})


@dataclass(frozen=True)
class IndexedRootIdeal:
    psi: RootIdeal
    gamma: Weight

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(int(g) for g in self.gamma))
        if len(self.gamma) != self.psi.ell:
            raise ValueError(
                f"Weight {self.gamma} has length {len(self.gamma)}, expected {self.psi.ell}"
            )

    @property
    def ell(self) -> int:
        return self.psi.ell


@dataclass(frozen=True)
class BounceStep:
    kind: Literal["down", "up"]
    source: int
    target: int


@dataclass(frozen=True)
class BounceQuery:
    path: tuple[int, ...]
    bounce: int


@dataclass(frozen=True)
class StructurePredicates:
    wall: bool
    ceiling: bool
    mirror: bool


@dataclass(frozen=True)
class RecurrenceTerm:
    iri: IndexedRootIdeal
    multiplier: TPoly


class MirrorConclusion(str, Enum):
    MIRROR_I_ZERO = "MirrorI_zero"
    MIRROR_II_REMOVABLE_EQUAL = "MirrorII_removable_equal"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class KWeight:
    """A weight in the generalized index set: ``mu_i <= k`` and ``mu_{i+1} <= mu_i + 1``."""

    mu: Weight
    k: int

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(int(m) for m in self.mu))
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if any(m > self.k for m in self.mu):
            raise ValueError(f"{self.mu} has an entry larger than k={self.k}")
        for i in range(len(self.mu) - 1):
            if self.mu[i + 1] > self.mu[i] + 1:
                raise ValueError(f"{self.mu} rises by more than one at position {i + 1}")

    @property
    def ell(self) -> int:
        return len(self.mu)


# Cores and tableaux -------------------------------------------------------------------
@dataclass(frozen=True)
class Core:
    """A partition with no box of hook length ``n``."""

    shape: Partition
    n: int

    def __post_init__(self):
        object.__setattr__(self, "shape", as_partition(self.shape))
        if self.n < 2:
            raise ValueError(f"Core parameter must be at least 2, got {self.n}")
        conj = conjugate(self.shape)
        for r, row in enumerate(self.shape):
            for c in range(row):
                if row - c + conj[c] - r - 1 == self.n:
                    raise ValueError(
                        f"{self.shape} has a box of hook length {self.n} at ({r + 1}, {c + 1})"
                    )

    @property
    def k(self) -> int:
        return self.n - 1

    def row(self, z: int) -> int:
        return self.shape[z - 1] if 1 <= z <= len(self.shape) else 0


@dataclass(frozen=True)
class OffsetView:
    """Windowed extended offset sequence; indices outside ``[lo, hi]`` use ``d_{i-n} = d_i + 1``."""

    core: Core
    lo: int
    hi: int
    d: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        n = self.core.n
        q = 0
        if i < self.lo:
            q = -((self.lo - i + n - 1) // n)
        elif i > self.hi:
            q = (i - self.hi + n - 1) // n
        # i - q*n lies in the window; each step down by n adds one
        return self.d[i - q * n - self.lo] - q

    def edge(self, i: int) -> int:
        return 1 if self[i] > 0 else 0


@dataclass(frozen=True)
class StrongMarkedCover:
    tau: Core
    kappa: Core
    mark: int
    spin: int


@dataclass(frozen=True)
class StrongMarkedTableau:
    """Chain ``covers[0].tau => ... => covers[-1].kappa == outside`` with weight ``eta``."""

    outside: Core
    covers: tuple[StrongMarkedCover, ...]
    eta: tuple[int, ...]
    vertical: bool

    @property
    def inside(self) -> Core:
        return self.covers[0].tau if self.covers else self.outside

    @property
    def spin(self) -> int:
        return sum(c.spin for c in self.covers)

    @property
    def marks(self) -> tuple[int, ...]:
        return tuple(c.mark for c in self.covers)


@dataclass(frozen=True)
class SkewDiagram:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        object.__setattr__(self, "outer", as_partition(self.outer))
        object.__setattr__(self, "inner", as_partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @property
    def row_lengths(self) -> Weight:
        inner = pad(self.inner, len(self.outer))
        return tuple(o - i for o, i in zip(self.outer, inner))

    @property
    def column_lengths(self) -> Weight:
        outer_c = conjugate(self.outer)
        inner_c = pad(conjugate(self.inner), len(outer_c))
        return tuple(o - i for o, i in zip(outer_c, inner_c))


@dataclass(frozen=True)
class CoverResult:
    """Outcome of straightening ``lambda - e_z``: ``t^bounce`` times the basis element at ``weight``."""

    weight: Weight
    bounce: int
    is_partition: bool


@dataclass
class VerifyParam:
    """Which suites to run. A range left at ``None`` takes each suite's own default."""

    suite: str = "all"
    k_max: Optional[int] = None
    size_max: Optional[int] = None
    ell_max: Optional[int] = None
    stop_on_failure: bool = False
