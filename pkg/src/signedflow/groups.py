"""Exact arithmetic in Z and in finite products of cyclic groups.

Group elements are plain tuples of ints: ``(n,)`` for the integers and
``(c1, ..., cr)`` with ``0 <= ci < ni`` for ``Z_n1 x ... x Z_nr``.
"""

from __future__ import annotations

import enum
import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidArgument

GroupElement = tuple[int, ...]

ENUMERATION_LIMIT = 10**4


class GroupKind(str, enum.Enum):
    INTEGER = "IntegerGroup"
    FINITE = "FiniteProduct"


@dataclass(frozen=True)
class GroupSpec:
    kind: GroupKind
    moduli: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "moduli", tuple(self.moduli))
        if self.kind is GroupKind.INTEGER:
            if self.moduli:
                raise InvalidArgument("the integer group takes no moduli")
        else:
            if not self.moduli:
                raise InvalidArgument("a finite product needs at least one modulus")
            if any(n < 2 for n in self.moduli):
                raise InvalidArgument(f"moduli must be >= 2, got {self.moduli}")

    @classmethod
    def integers(cls) -> GroupSpec:
        return cls(GroupKind.INTEGER)

    @classmethod
    def product(cls, *moduli: int) -> GroupSpec:
        return cls(GroupKind.FINITE, moduli)

    @classmethod
    def parse(cls, text: str) -> GroupSpec:
        """Parse ``Z``, ``Z5`` or ``Z2xZ4`` (no spaces)."""
        if text == "Z":
            return cls.integers()
        if not re.fullmatch(r"Z\d+(xZ\d+)*", text):
            raise InvalidArgument(f"bad group spec {text!r}")
        return cls.product(*(int(p) for p in text[1:].split("xZ")))

    def __str__(self) -> str:
        if self.is_integer:
            return "Z"
        return "x".join(f"Z{n}" for n in self.moduli)

    @property
    def is_integer(self) -> bool:
        return self.kind is GroupKind.INTEGER

    @property
    def rank(self) -> int:
        return 1 if self.is_integer else len(self.moduli)

    @property
    def order(self) -> float:
        return math.inf if self.is_integer else math.prod(self.moduli)

    # -- elements ---------------------------------------------------------

    def element(self, value: int | Sequence[int]) -> GroupElement:
        """Coerce an int or coordinate sequence into a reduced element."""
        coords = (value,) if isinstance(value, int) else tuple(value)
        if len(coords) != self.rank:
            raise InvalidArgument(f"element {value!r} has {len(coords)} coordinates, {self} needs {self.rank}")
        if self.is_integer:
            return coords
        return tuple(c % n for c, n in zip(coords, self.moduli))

    def check(self, x: GroupElement) -> GroupElement:
        if not isinstance(x, tuple) or len(x) != self.rank or not all(isinstance(c, int) for c in x):
            raise InvalidArgument(f"{x!r} is not an element of {self}")
        if not self.is_integer and any(not 0 <= c < n for c, n in zip(x, self.moduli)):
            raise InvalidArgument(f"{x!r} is not reduced in {self}")
        return x

    def zero(self) -> GroupElement:
        return (0,) * self.rank

    def is_zero(self, x: GroupElement) -> bool:
        return not any(x)

    def add(self, x: GroupElement, y: GroupElement) -> GroupElement:
        self.check(x)
        self.check(y)
        if self.is_integer:
            return (x[0] + y[0],)
        return tuple((a + b) % n for a, b, n in zip(x, y, self.moduli))

    def neg(self, x: GroupElement) -> GroupElement:
        self.check(x)
        if self.is_integer:
            return (-x[0],)
        return tuple(-a % n for a, n in zip(x, self.moduli))

    def mul(self, k: int, x: GroupElement) -> GroupElement:
        """The scalar multiple ``k * x``."""
        self.check(x)
        if self.is_integer:
            return (k * x[0],)
        return tuple(k * a % n for a, n in zip(x, self.moduli))

    def equal(self, x: GroupElement, y: GroupElement) -> bool:
        return self.check(x) == self.check(y)

    def elements(self) -> Iterator[GroupElement]:
        """All elements in lexicographic order (finite groups only)."""
        if self.is_integer:
            raise InvalidArgument("Z has no finite element list")
        return itertools.product(*(range(n) for n in self.moduli))

    def format(self, x: GroupElement) -> str:
        if self.is_integer:
            return str(x[0])
        return "(" + ",".join(str(c) for c in x) + ")"

    def parse_element(self, text: str) -> GroupElement:
        text = text.strip()
        try:
            if text.startswith("(") and text.endswith(")"):
                coords = tuple(int(c) for c in text[1:-1].split(","))
            else:
                coords = (int(text),)
        except ValueError:
            raise InvalidArgument(f"bad group element {text!r}") from None
        if len(coords) != self.rank:
            raise InvalidArgument(f"element {text} has {len(coords)} coordinates, {self} needs {self.rank}")
        if not self.is_integer and any(not 0 <= c < n for c, n in zip(coords, self.moduli)):
            raise InvalidArgument(f"element {text} is not reduced in {self}")
        return coords


def find_involution(spec: GroupSpec) -> GroupElement | None:
    """The lexicographically least ``x != 0`` with ``x + x = 0``, if any."""
    if spec.is_integer:
        return None
    # 2x = 0 forces each coordinate into {0, n/2}; least nonzero sets only the last even one
    evens = [i for i, n in enumerate(spec.moduli) if n % 2 == 0]
    if not evens:
        return None
    x = [0] * spec.rank
    x[evens[-1]] = spec.moduli[evens[-1]] // 2
    return tuple(x)


def element_order(spec: GroupSpec, x: GroupElement) -> float:
    """Least ``k >= 1`` with ``k * x = 0``; ``math.inf`` for nonzero integers."""
    spec.check(x)
    if spec.is_integer:
        return 1 if x[0] == 0 else math.inf
    return math.lcm(*(n // math.gcd(n, c) for c, n in zip(x, spec.moduli)))


class CaseTag(str, enum.Enum):
    HAS_INVOLUTION = "HasInvolution"
    IS_Z3 = "IsZ3"
    Z3XZ3_SUBGROUP = "Z3xZ3Subgroup"
    ORDER_GE4_ELEMENT = "OrderGe4Element"


@dataclass(frozen=True)
class GroupCase:
    tag: CaseTag
    witnesses: tuple[GroupElement, ...] = ()


def _colex(x: GroupElement) -> tuple[int, ...]:
    return tuple(reversed(x))


def z3xz3_generators(spec: GroupSpec, method: str = "auto") -> tuple[GroupElement, GroupElement] | None:
    """Two order-3 elements generating cyclic subgroups that meet trivially.

    ``method`` is ``"enumerate"`` (pairwise search, colexicographic order),
    ``"structural"`` (read off the moduli divisible by 3) or ``"auto"``, which
    enumerates up to ``ENUMERATION_LIMIT`` elements.  Both return the same pair.
    """
    if spec.is_integer:
        return None
    if method == "auto":
        method = "enumerate" if spec.order <= ENUMERATION_LIMIT else "structural"
    if method == "structural":
        threes = [i for i, n in enumerate(spec.moduli) if n % 3 == 0]
        if len(threes) < 2:
            return None
        gens = []
        for i in threes[:2]:
            x = [0] * spec.rank
            x[i] = spec.moduli[i] // 3
            gens.append(tuple(x))
        return gens[0], gens[1]
    if method != "enumerate":
        raise InvalidArgument(f"unknown method {method!r}")
    order3 = sorted((x for x in spec.elements() if element_order(spec, x) == 3), key=_colex)
    for b1 in order3:
        span = {spec.zero(), b1, spec.mul(2, b1)}
        for b2 in order3:
            if b2 not in span:
                return b1, b2
    return None


def group_case(spec: GroupSpec) -> GroupCase:
    """Classify a nontrivial group into the case split for group-valued flows.

    Priority: an involution; the group is Z3; a Z3 x Z3 subgroup; an element
    of order at least 4 (``1`` for Z).
    """
    if not spec.is_integer and spec.order == 1:
        raise InvalidArgument("trivial group")
    inv = find_involution(spec)
    if inv is not None:
        return GroupCase(CaseTag.HAS_INVOLUTION, (inv,))
    if spec.order == 3:
        return GroupCase(CaseTag.IS_Z3)
    gens = z3xz3_generators(spec)
    if gens is not None:
        return GroupCase(CaseTag.Z3XZ3_SUBGROUP, gens)
    if spec.is_integer:
        return GroupCase(CaseTag.ORDER_GE4_ELEMENT, ((1,),))
    # all moduli odd here, and some modulus is not 3 (else Z3 or Z3^k, k >= 2)
    for i, n in enumerate(spec.moduli):
        if n >= 4:
            x = [0] * spec.rank
            x[i] = 1
            return GroupCase(CaseTag.ORDER_GE4_ELEMENT, (tuple(x),))
    raise AssertionError(f"no case applies to {spec}")  # pragma: no cover
