"""Exact discrete joint distributions of n source variables and one target.

Distributions are stored sparsely as a map from ``(x_tuple, t)`` to
probability. All information quantities are in bits. Terms with zero joint
mass are skipped, never evaluated (0 log 0 = 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Optional

from .errors import (
    AlphabetMismatchError,
    IndexOutOfRange,
    NormalizationError,
    OverlappingIndexSets,
    ReservedSymbolError,
    ZeroProbabilityTarget,
)

NORMALIZATION_TOL = 1e-9

SupportKey = tuple[tuple[int, ...], int]


@dataclass(frozen=True, order=True)
class SourceIndexSet:
    """Nonempty set of 1-based source indices, kept sorted and deduplicated."""

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        idx = tuple(sorted({int(i) for i in self.indices}))
        if not idx:
            raise ValueError("source index set must be nonempty")
        if idx[0] < 1:
            raise IndexOutOfRange(f"source indices are 1-based, got {idx[0]}")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def of(cls, *indices: int) -> "SourceIndexSet":
        return cls(tuple(indices))

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, i: int) -> bool:
        return i in self.indices

    def issubset(self, other: "SourceIndexSet") -> bool:
        return set(self.indices) <= set(other.indices)

    def union(self, other: "SourceIndexSet") -> "SourceIndexSet":
        return SourceIndexSet(self.indices + other.indices)

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.indices) + "}"


@dataclass(frozen=True)
class JointSystem:
    """Base system: joint pmf p(x1..xn, t) with declared finite alphabets.

    Treated as immutable after construction; every operation in this module
    is pure. Use :func:`validate` to check the construction invariants and
    :func:`normalize` to rescale mass exactly to 1.
    """

    n: int
    target_alphabet: tuple[int, ...]
    source_alphabets: tuple[tuple[int, ...], ...]
    pmf: Mapping[SupportKey, float] = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "target_alphabet", tuple(self.target_alphabet))
        object.__setattr__(
            self, "source_alphabets", tuple(tuple(a) for a in self.source_alphabets)
        )
        clean = {}
        for (x, t), p in dict(self.pmf).items():
            clean[(tuple(int(v) for v in x), int(t))] = float(p)
        object.__setattr__(self, "pmf", clean)

    def support(self) -> Iterator[tuple[tuple[int, ...], int, float]]:
        """Yield (x, t, p) for every positive-mass entry, in sorted order."""
        for (x, t) in sorted(self.pmf):
            p = self.pmf[(x, t)]
            if p > 0.0:
                yield x, t, p

    def total_mass(self) -> float:
        return sum(self.pmf.values())

    def full_index_set(self) -> SourceIndexSet:
        return SourceIndexSet(tuple(range(1, self.n + 1)))


def validate(system: JointSystem) -> None:
    """Check all base-system invariants, raising on the first violation.

    Raises NormalizationError if any probability is negative or total mass
    is off 1 by more than 1e-9, ReservedSymbolError if any alphabet contains
    the failure symbol 0, and AlphabetMismatchError if a support entry uses
    undeclared symbols.
    """
    if system.n < 1:
        raise AlphabetMismatchError("system needs at least one source variable")
    if len(system.source_alphabets) != system.n:
        raise AlphabetMismatchError(
            f"expected {system.n} source alphabets, got {len(system.source_alphabets)}"
        )
    for alphabet in (system.target_alphabet, *system.source_alphabets):
        if len(alphabet) == 0:
            raise AlphabetMismatchError("alphabets must be nonempty")
        if 0 in alphabet:
            raise ReservedSymbolError(
                "symbol 0 is reserved for source failure and cannot appear in an alphabet"
            )
        if any(s < 0 for s in alphabet):
            raise AlphabetMismatchError("alphabet symbols must be positive integers")
        if len(set(alphabet)) != len(alphabet):
            raise AlphabetMismatchError("alphabet symbols must be distinct")
    total = 0.0
    for (x, t), p in system.pmf.items():
        if p < 0.0:
            raise NormalizationError(f"negative probability {p} at {(x, t)}")
        if len(x) != system.n:
            raise AlphabetMismatchError(
                f"support entry {x} has {len(x)} coordinates, expected {system.n}"
            )
        if t not in system.target_alphabet:
            raise AlphabetMismatchError(f"target symbol {t} not in declared alphabet")
        for i, (xi, alphabet) in enumerate(zip(x, system.source_alphabets), start=1):
            if xi not in alphabet:
                raise AlphabetMismatchError(
                    f"symbol {xi} at source {i} not in declared alphabet"
                )
        total += p
    if abs(total - 1.0) > NORMALIZATION_TOL:
        raise NormalizationError(f"probability mass sums to {total!r}, expected 1")


def normalize(system: JointSystem) -> JointSystem:
    """Return a copy rescaled to total mass exactly 1, zero entries dropped."""
    total = system.total_mass()
    if total <= 0.0:
        raise NormalizationError("cannot normalize a system with no mass")
    pmf = {k: p / total for k, p in system.pmf.items() if p > 0.0}
    return JointSystem(system.n, system.target_alphabet, system.source_alphabets, pmf)


def _check_indices(system: JointSystem, indices: SourceIndexSet) -> None:
    if indices.indices[-1] > system.n:
        raise IndexOutOfRange(
            f"index {indices.indices[-1]} out of range for n={system.n}"
        )


def marginal(
    system: JointSystem,
    over: Optional[SourceIndexSet] = None,
    include_target: bool = False,
) -> dict[tuple[int, ...], float]:
    """Marginal pmf over the selected source coordinates, target appended last.

    Keys are tuples of the selected coordinates in ascending index order;
    if ``include_target`` the target symbol is the final element. ``over=None``
    selects no sources (target-only marginal).
    """
    if over is None and not include_target:
        raise ValueError("marginal needs at least one coordinate")
    if over is not None:
        _check_indices(system, over)
        positions = [i - 1 for i in over]
    else:
        positions = []
    out: dict[tuple[int, ...], float] = {}
    for (x, t), p in system.pmf.items():
        if p <= 0.0:
            continue
        key = tuple(x[i] for i in positions)
        if include_target:
            key = key + (t,)
        out[key] = out.get(key, 0.0) + p
    return out


def mutual_information(system: JointSystem, source: SourceIndexSet) -> float:
    """I(T; X_I) in bits for the joint source indexed by ``source``."""
    joint = marginal(system, source, include_target=True)
    px: dict[tuple[int, ...], float] = {}
    pt: dict[int, float] = {}
    for key, p in joint.items():
        x, t = key[:-1], key[-1]
        px[x] = px.get(x, 0.0) + p
        pt[t] = pt.get(t, 0.0) + p
    value = 0.0
    for key, p in joint.items():
        x, t = key[:-1], key[-1]
        value += p * math.log2(p / (px[x] * pt[t]))
    return value


def conditional_mutual_information(
    system: JointSystem,
    a: SourceIndexSet,
    given: Optional[SourceIndexSet] = None,
) -> float:
    """I(T; X_a | X_given) in bits; empty conditioning reduces to plain MI."""
    if given is None:
        return mutual_information(system, a)
    if set(a) & set(given):
        raise OverlappingIndexSets(f"index sets {a} and {given} overlap")
    _check_indices(system, a)
    _check_indices(system, given)
    pos_a = [i - 1 for i in a]
    pos_g = [i - 1 for i in given]
    joint: dict[tuple, float] = {}
    p_gt: dict[tuple, float] = {}
    p_ag: dict[tuple, float] = {}
    p_g: dict[tuple, float] = {}
    for (x, t), p in system.pmf.items():
        if p <= 0.0:
            continue
        xa = tuple(x[i] for i in pos_a)
        xg = tuple(x[i] for i in pos_g)
        joint[(xa, xg, t)] = joint.get((xa, xg, t), 0.0) + p
        p_gt[(xg, t)] = p_gt.get((xg, t), 0.0) + p
        p_ag[(xa, xg)] = p_ag.get((xa, xg), 0.0) + p
        p_g[xg] = p_g.get(xg, 0.0) + p
    value = 0.0
    for (xa, xg, t), p in joint.items():
        value += p * math.log2(p * p_g[xg] / (p_gt[(xg, t)] * p_ag[(xa, xg)]))
    return value


def specific_information(
    system: JointSystem, t: int, source: SourceIndexSet
) -> float:
    """Information the joint source carries about the single outcome T = t.

    Computed as sum over source states a of p(a|t) (log2 p(t|a) - log2 p(t)).
    Its p(t)-weighted average over t recovers mutual_information.
    """
    joint = marginal(system, source, include_target=True)
    p_t = sum(p for key, p in joint.items() if key[-1] == t)
    if p_t <= 0.0:
        raise ZeroProbabilityTarget(f"target symbol {t} has zero probability")
    px: dict[tuple[int, ...], float] = {}
    for key, p in joint.items():
        px[key[:-1]] = px.get(key[:-1], 0.0) + p
    value = 0.0
    for key, p in joint.items():
        if key[-1] != t:
            continue
        x = key[:-1]
        p_a_given_t = p / p_t
        p_t_given_a = p / px[x]
        value += p_a_given_t * (math.log2(p_t_given_a) - math.log2(p_t))
    return value


def target_entropy(system: JointSystem) -> float:
    """H(T) in bits."""
    pt = marginal(system, None, include_target=True)
    return -sum(p * math.log2(p) for p in pt.values() if p > 0.0)


def from_rows(
    n: int,
    target_alphabet: Iterable[int],
    source_alphabets: Iterable[Iterable[int]],
    rows: Iterable[tuple[Iterable[int], int, float]],
) -> JointSystem:
    """Build, validate and normalize a system from (x, t, p) rows."""
    pmf: dict[SupportKey, float] = {}
    for x, t, p in rows:
        key = (tuple(x), int(t))
        if key in pmf:
            raise NormalizationError(f"duplicate support entry {key}")
        pmf[key] = float(p)
    system = JointSystem(n, tuple(target_alphabet), tuple(source_alphabets), pmf)
    validate(system)
    return normalize(system)
