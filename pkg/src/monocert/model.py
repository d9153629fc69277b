"""Points, index sets, certificates, and monotone function representations.

Coordinates are 1-based. A point on n coordinates is stored as an integer
bitmask with coordinate i at bit i-1, so the integer value of a point
doubles as its index into a dense truth table. Dimensions up to a few
million are supported; only the dense-table constructors are size capped.

All objects here are immutable after construction and safe to share across
threads. Function evaluators must be total and deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from . import kernels
from .bitops import mask_to_members, members_to_mask
from .errors import CapacityError, ContractError, DimensionError, KindError

TRUTH_TABLE_MAX_N = 20


@dataclass(frozen=True, slots=True)
class Point:
    """An assignment of 0/1 to coordinates 1..n, stored as a bitmask."""

    n: int
    mask: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DimensionError(f"dimension must be a positive integer, got {self.n!r}")
        if not isinstance(self.mask, int) or self.mask < 0 or self.mask >> self.n:
            raise DimensionError(f"mask {self.mask!r} does not fit {self.n} coordinates")

    @classmethod
    def zeros(cls, n: int) -> "Point":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "Point":
        return cls(n, (1 << n) - 1)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "Point":
        mask = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise DimensionError(f"bit {i + 1} is {b!r}, expected 0 or 1")
            mask |= b << i
        return cls(len(bits), mask)

    @classmethod
    def parse(cls, text: str) -> "Point":
        """Parse a bitstring like "10110"; character j gives coordinate j."""
        if not text or any(c not in "01" for c in text):
            raise DimensionError(f"not a bitstring: {text!r}")
        return cls.from_bits([1 if c == "1" else 0 for c in text])

    @property
    def weight(self) -> int:
        return self.mask.bit_count()

    @property
    def bits(self) -> tuple[int, ...]:
        """Coordinate values as a tuple; prefer mask arithmetic for large n."""
        return tuple((self.mask >> i) & 1 for i in range(self.n))

    def bit(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise DimensionError(f"coordinate {i} outside 1..{self.n}")
        return (self.mask >> (i - 1)) & 1

    def complement(self) -> "Point":
        return Point(self.n, self.mask ^ ((1 << self.n) - 1))

    def to01(self) -> str:
        return "".join("1" if (self.mask >> i) & 1 else "0" for i in range(self.n))

    def __repr__(self):
        if self.n <= 64:
            return f"Point({self.to01()!r})"
        return f"Point(n={self.n}, weight={self.weight})"


@dataclass(frozen=True, slots=True)
class IndexSet:
    """A subset of the coordinates 1..n, stored as a bitmask."""

    n: int
    mask: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DimensionError(f"dimension must be a positive integer, got {self.n!r}")
        if not isinstance(self.mask, int) or self.mask < 0 or self.mask >> self.n:
            raise DimensionError(f"mask {self.mask!r} does not fit {self.n} coordinates")

    @classmethod
    def empty(cls, n: int) -> "IndexSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "IndexSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def of(cls, members: Iterable[int], n: int) -> "IndexSet":
        mask = 0
        for i in members:
            if not isinstance(i, int) or not 1 <= i <= n:
                raise DimensionError(f"member {i!r} outside 1..{n}")
            mask |= 1 << (i - 1)
        return cls(n, mask)

    @property
    def members(self) -> tuple[int, ...]:
        """Ascending 1-based coordinates."""
        return tuple(int(i) for i in mask_to_members(self.mask, self.n))

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, i: int) -> bool:
        return 1 <= i <= self.n and bool((self.mask >> (i - 1)) & 1)

    def _check_same(self, other: "IndexSet"):
        if not isinstance(other, IndexSet):
            raise TypeError(f"expected IndexSet, got {type(other).__name__}")
        if other.n != self.n:
            raise DimensionError(f"dimension mismatch: {self.n} vs {other.n}")

    def __or__(self, other: "IndexSet") -> "IndexSet":
        self._check_same(other)
        return IndexSet(self.n, self.mask | other.mask)

    def __and__(self, other: "IndexSet") -> "IndexSet":
        self._check_same(other)
        return IndexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: "IndexSet") -> "IndexSet":
        self._check_same(other)
        return IndexSet(self.n, self.mask & ~other.mask)

    def issubset(self, other: "IndexSet") -> bool:
        self._check_same(other)
        return self.mask & ~other.mask == 0

    def __repr__(self):
        if self.size <= 32:
            inner = ",".join(str(i) for i in self.members)
            return f"IndexSet({{{inner}}}, n={self.n})"
        return f"IndexSet(n={self.n}, size={self.size})"


@dataclass(frozen=True, slots=True)
class Certificate:
    """A set of coordinates that pins a function's value at a reference point.

    Fixing every coordinate in `indices` to its value under `reference`
    forces the function to `value` on all completions. The object records
    the claim; use the brute-force verifier to check it.
    """

    indices: IndexSet
    reference: Point
    value: int | float

    def __post_init__(self):
        if self.indices.n != self.reference.n:
            raise DimensionError(
                f"index set on {self.indices.n} coordinates does not match "
                f"point on {self.reference.n}"
            )

    @property
    def restriction(self) -> tuple[tuple[int, int], ...]:
        """The fixed coordinates as (index, bit) pairs, ascending."""
        return tuple((i, self.reference.bit(i)) for i in self.indices.members)

    def render(self) -> str:
        """Human-readable set, marking coordinates fixed to 0: "{2,5=0}"."""
        parts = [
            str(i) if b else f"{i}=0" for i, b in self.restriction
        ]
        return "{" + ",".join(parts) + "}"

    def __len__(self):
        return self.indices.size


class MonotoneFunction:
    """An evaluatable function of n binary coordinates.

    `kind` is "boolean" (values in {0, 1}) or "real" (numeric values).
    `tag` names the representation; `payload` holds its parameters.
    Monotonicity is the caller's responsibility except where a constructor
    documents an eager check. Instances never mutate after construction.
    """

    def __init__(self, n: int, kind: str, tag: str,
                 eval_mask: Callable[[int], int | float],
                 payload: dict | None = None):
        if not isinstance(n, int) or n < 1:
            raise DimensionError(f"dimension must be a positive integer, got {n!r}")
        if kind not in ("boolean", "real"):
            raise KindError(f"unknown kind {kind!r}")
        self.n = n
        self.kind = kind
        self.tag = tag
        self.payload = dict(payload or {})
        self._eval = eval_mask
        self._table_memo: np.ndarray | None = None

    def evaluate_mask(self, mask: int) -> int | float:
        """Evaluate at the point whose bitmask is `mask`; no validation."""
        return self._eval(mask)

    def __call__(self, x: Point) -> int | float:
        if x.n != self.n:
            raise DimensionError(f"point on {x.n} coordinates, function takes {self.n}")
        return self._eval(x.mask)

    def __repr__(self):
        return f"MonotoneFunction(n={self.n}, kind={self.kind!r}, tag={self.tag!r})"


def support(x: Point) -> IndexSet:
    """The coordinates where x is 1."""
    return IndexSet(x.n, x.mask)


def point_of(s: IndexSet, n: int) -> Point:
    """The indicator point of s inside dimension n."""
    if s.mask >> n:
        raise DimensionError(f"members of {s!r} exceed dimension {n}")
    return Point(n, s.mask)


def restrict(x: Point, s: IndexSet) -> tuple[tuple[int, int], ...]:
    """The (index, bit) pairs of x on s, ascending."""
    if x.n != s.n:
        raise DimensionError(f"dimension mismatch: {x.n} vs {s.n}")
    return tuple((i, x.bit(i)) for i in s.members)


def _antichain(masks: list[int]) -> list[int]:
    """Keep only inclusion-minimal masks, sorted by (popcount, value)."""
    ordered = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in ordered:
        if not any((k & m) == k for k in kept):
            kept.append(m)
    return kept


def make_dnf(n: int, minterms: Iterable[Iterable[int]]) -> MonotoneFunction:
    """Monotone DNF: 1 exactly when some minterm is fully on.

    Minterms are reduced to an antichain (supersets of another minterm are
    dropped), so the stored minterm list is canonical. An empty minterm
    makes the constant 1 function; no minterms makes the constant 0.
    """
    masks = []
    for term in minterms:
        members = list(term)
        for i in members:
            if not isinstance(i, int) or not 1 <= i <= n:
                raise DimensionError(f"minterm member {i!r} outside 1..{n}")
        masks.append(members_to_mask(members))
    reduced = tuple(_antichain(masks))

    def eval_mask(mask: int, _terms=reduced) -> int:
        for m in _terms:
            if mask & m == m:
                return 1
        return 0

    f = MonotoneFunction(n, "boolean", "dnf", eval_mask,
                         {"minterm_masks": reduced})
    return f


def minterms_of(f: MonotoneFunction) -> tuple[IndexSet, ...]:
    """The stored antichain of a DNF-represented function."""
    if f.tag != "dnf":
        raise KindError(f"function has representation {f.tag!r}, not dnf")
    return tuple(IndexSet(f.n, m) for m in f.payload["minterm_masks"])


def make_threshold(n: int, k: int) -> MonotoneFunction:
    """1 exactly when at least k coordinates are on; k <= 0 is constant 1."""
    if not isinstance(k, int):
        raise ContractError(f"threshold must be an integer, got {k!r}")

    def eval_mask(mask: int, _k=k) -> int:
        return 1 if mask.bit_count() >= _k else 0

    return MonotoneFunction(n, "boolean", "threshold", eval_mask, {"k": k})


def make_indicator(n: int, k: int, planted: IndexSet | Iterable[int]) -> MonotoneFunction:
    """1 above weight k, 0 below, and at weight k only on the planted set.

    The planted set must have exactly k members. The smallest certificate at
    the all-ones point is the planted set itself.
    """
    if not isinstance(planted, IndexSet):
        planted = IndexSet.of(planted, n)
    elif planted.n != n:
        raise DimensionError(f"planted set on {planted.n} coordinates, expected {n}")
    if not isinstance(k, int) or not 0 <= k <= n:
        raise ContractError(f"level {k!r} outside 0..{n}")
    if planted.size != k:
        raise ContractError(f"planted set has {planted.size} members, expected {k}")
    pmask = planted.mask

    def eval_mask(mask: int, _k=k, _p=pmask) -> int:
        w = mask.bit_count()
        if w > _k:
            return 1
        if w < _k:
            return 0
        return 1 if mask == _p else 0

    return MonotoneFunction(n, "boolean", "indicator", eval_mask,
                            {"k": k, "planted_mask": pmask})


def make_truth_table(n: int, table: str | Sequence[int]) -> MonotoneFunction:
    """Boolean function from a dense table of length 2**n, validated monotone.

    Entry t is the value at the point whose bitmask is t. Strings use the
    characters '0' and '1'. Raises ContractError on a non-monotone table.
    """
    if n > TRUTH_TABLE_MAX_N:
        raise CapacityError(f"truth tables are capped at n <= {TRUTH_TABLE_MAX_N}, got {n}")
    if isinstance(table, str):
        if any(c not in "01" for c in table):
            raise ContractError("table string must contain only '0' and '1'")
        arr = (np.frombuffer(table.encode("ascii"), dtype=np.uint8) - ord("0")).astype(np.uint8)
    else:
        raw = np.asarray(table)
        if raw.ndim != 1 or not np.isin(raw, (0, 1)).all():
            raise ContractError("table entries must be 0 or 1")
        arr = raw.astype(np.uint8)
    if arr.shape[0] != 1 << n:
        raise DimensionError(f"table has {arr.shape[0]} entries, expected {1 << n}")
    arr = np.ascontiguousarray(arr)
    packed = kernels.first_monotone_violation(arr, n)
    if packed >= 0:
        x, i = packed >> 6, packed & 63
        raise ContractError(
            f"table is not monotone: raising coordinate {i + 1} at "
            f"{Point(n, x).to01()} lowers the value"
        )
    arr.setflags(write=False)

    def eval_mask(mask: int, _t=arr) -> int:
        return int(_t[mask])

    return MonotoneFunction(n, "boolean", "truth_table", eval_mask, {"table": arr})


def make_weighted_real(n: int, weights: Sequence[int | float]) -> MonotoneFunction:
    """Real-valued function x -> sum of weights over the on coordinates.

    Weights must be nonnegative. Use integer (or dyadic) weights when exact
    value comparisons matter downstream; equality is never fuzzed.
    """
    ws = tuple(weights)
    if len(ws) != n:
        raise DimensionError(f"got {len(ws)} weights for {n} coordinates")
    for i, w in enumerate(ws):
        if not isinstance(w, (int, float)) or isinstance(w, bool) or w < 0:
            raise ContractError(f"weight {i + 1} is {w!r}, expected a nonnegative number")

    def eval_mask(mask: int, _ws=ws):
        total = 0
        i = 0
        while mask:
            if mask & 1:
                total += _ws[i]
            mask >>= 1
            i += 1
        return total

    return MonotoneFunction(n, "real", "weighted_real", eval_mask, {"weights": ws})


def dualize(f: MonotoneFunction) -> MonotoneFunction:
    """Mirror transform: negate the output at the complemented input.

    Preserves monotonicity and is an involution. Certifying a value 0 of f
    reduces to certifying a value 1 of the dual at the complement point.
    Each evaluation costs one evaluation of f.
    """
    if f.kind != "boolean":
        raise KindError("dualize is defined for boolean functions only")
    full = (1 << f.n) - 1

    def eval_mask(mask: int, _f=f.evaluate_mask, _full=full) -> int:
        return 1 - _f(_full ^ mask)

    return MonotoneFunction(f.n, "boolean", "derived", eval_mask,
                            {"derived": "dual", "inner": f})


def binarize(f: MonotoneFunction, x: Point, tie: int) -> MonotoneFunction:
    """Threshold a real-valued f against its value at x.

    The result is boolean and monotone: 0 strictly below f(x), 1 strictly
    above, and `tie` (0 or 1) at exact equality. Construction evaluates f
    at x once; each later evaluation costs one evaluation of f. Boolean
    functions are accepted and treated as real.
    """
    if x.n != f.n:
        raise DimensionError(f"point on {x.n} coordinates, function takes {f.n}")
    if tie not in (0, 1):
        raise ContractError(f"tie value must be 0 or 1, got {tie!r}")
    pivot = f.evaluate_mask(x.mask)

    def eval_mask(mask: int, _f=f.evaluate_mask, _p=pivot, _tie=tie) -> int:
        v = _f(mask)
        if v < _p:
            return 0
        if v > _p:
            return 1
        return _tie

    return MonotoneFunction(f.n, "boolean", "derived", eval_mask,
                            {"derived": "binarized", "inner": f,
                             "pivot": pivot, "tie": tie})


def random_monotone_dnf(n: int, num_minterms: int, max_width: int,
                        seed: int) -> MonotoneFunction:
    """Seeded random monotone DNF.

    Each of the num_minterms draws picks a size uniformly from 1..max_width
    and then that many distinct coordinates uniformly. The draws are reduced
    through make_dnf, so the stored minterm count may be smaller.
    """
    if not 1 <= max_width <= n:
        raise ContractError(f"max_width {max_width} outside 1..{n}")
    if num_minterms < 0:
        raise ContractError(f"num_minterms must be nonnegative, got {num_minterms}")
    rng = random.Random(seed)
    terms = []
    for _ in range(num_minterms):
        width = rng.randint(1, max_width)
        terms.append(rng.sample(range(1, n + 1), width))
    return make_dnf(n, terms)
