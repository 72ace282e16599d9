"""Free Boolean ring on named generators, with elements coded as atom bitsets.

A ring over generators ``g_0, ..., g_{m-1}`` has one atom per nonempty
generator subset: the subset with 0-based index set ``S`` is coded as
``s = sum(2**k for k in S)`` and occupies bit ``s - 1`` of an element's
mask.  An element is the set of atoms it covers.  Addition is symmetric
difference (mask XOR), multiplication is intersection (mask AND), and
the union of all generators is the multiplicative unity, so the ring has
``2**(2**m - 1)`` elements.  The region outside all generators is not an
atom.

Elements are immutable values; mixing elements of two different contexts
raises ``ContextMismatchError`` even if the generator names agree.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator

from .errors import ContextMismatchError, EnumerationLimitError, InputError

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

#: Largest supported generator count; atom masks stay around 2 MB.
MAX_GENERATORS = 24

#: Full-ring enumeration is gated at this generator count (32768 elements).
ENUMERATION_LIMIT = 4


def _generator_mask(k: int, m: int) -> int:
    # Bit s of `pattern` marks the subset codes s in [0, 2**m) that contain
    # generator k; code 0 is never marked, so the final shift aligns subset
    # code s with mask bit s - 1.
    width = 1 << k
    pattern = ((1 << width) - 1) << width
    span = width << 1
    total = 1 << m
    while span < total:
        pattern |= pattern << span
        span <<= 1
    return pattern >> 1


class RingContext:
    """Generator alphabet defining a free Boolean ring on ``m`` names."""

    __slots__ = ("generator_names", "atom_count", "_index", "_full", "_gen_masks")

    def __init__(self, generator_names: Iterable[str]):
        names = tuple(generator_names)
        if not 1 <= len(names) <= MAX_GENERATORS:
            raise InputError(
                f"need between 1 and {MAX_GENERATORS} generators, got {len(names)}"
            )
        seen = set()
        for name in names:
            if not _NAME_RE.match(name):
                raise InputError(f"invalid generator name {name!r}")
            if name in seen:
                raise InputError(f"duplicate generator name {name!r}")
            seen.add(name)
        self.generator_names = names
        self._index = {name: k for k, name in enumerate(names)}
        self.atom_count = (1 << len(names)) - 1
        self._full = (1 << self.atom_count) - 1
        self._gen_masks = tuple(
            _generator_mask(k, len(names)) for k in range(len(names))
        )

    @property
    def m(self) -> int:
        """Number of generators."""
        return len(self.generator_names)

    @property
    def zero(self) -> "RingElement":
        return RingElement(self, 0)

    @property
    def one(self) -> "RingElement":
        """The multiplicative unity: the union of all generators."""
        return RingElement(self, self._full)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def generator_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"unknown generator {name!r}") from None

    def generator(self, name: str) -> "RingElement":
        """The element whose atoms are exactly the subsets containing `name`."""
        return RingElement(self, self._gen_masks[self.generator_index(name)])

    def generators(self) -> tuple["RingElement", ...]:
        return tuple(RingElement(self, mask) for mask in self._gen_masks)

    def element(self, mask: int) -> "RingElement":
        """The element with the given atom bitset."""
        return RingElement(self, mask)

    def atom(self, names: Iterable[str]) -> "RingElement":
        """The single atom for a nonempty generator subset given by name."""
        code = 0
        for name in names:
            code |= 1 << self.generator_index(name)
        if code == 0:
            raise InputError("an atom needs a nonempty generator subset")
        return RingElement(self, 1 << (code - 1))

    def __repr__(self) -> str:
        return f"RingContext({', '.join(self.generator_names)})"


class RingElement:
    """A ring element, stored as the bitset of atoms it covers.

    ``^`` (or ``+``) is the ring sum, ``&`` (or ``*``) the product, ``|``
    the union, ``~`` the complement, and ``>=``/``<=`` the partial order.
    """

    __slots__ = ("context", "mask")

    def __init__(self, context: RingContext, mask: int):
        if not 0 <= mask <= context._full:
            raise InputError(f"atom mask {mask:#x} out of range for {context!r}")
        self.context = context
        self.mask = mask

    def _check(self, other: "RingElement") -> None:
        if self.context is not other.context:
            raise ContextMismatchError("elements belong to different ring contexts")

    # ring operations -------------------------------------------------

    def __xor__(self, other: "RingElement") -> "RingElement":
        if not isinstance(other, RingElement):
            return NotImplemented
        self._check(other)
        return RingElement(self.context, self.mask ^ other.mask)

    __add__ = __xor__

    def __and__(self, other: "RingElement") -> "RingElement":
        if not isinstance(other, RingElement):
            return NotImplemented
        self._check(other)
        return RingElement(self.context, self.mask & other.mask)

    __mul__ = __and__

    def __or__(self, other: "RingElement") -> "RingElement":
        if not isinstance(other, RingElement):
            return NotImplemented
        self._check(other)
        return RingElement(self.context, self.mask | other.mask)

    def __invert__(self) -> "RingElement":
        return RingElement(self.context, self.mask ^ self.context._full)

    # partial order ----------------------------------------------------

    def __ge__(self, other: "RingElement") -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        self._check(other)
        return other.mask & self.mask == other.mask

    def __le__(self, other: "RingElement") -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return other.__ge__(self)

    def __gt__(self, other: "RingElement") -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.__ge__(other) and self.mask != other.mask

    def __lt__(self, other: "RingElement") -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return other.__gt__(self)

    # value semantics ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.context is other.context and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((id(self.context), self.mask))

    def __bool__(self) -> bool:
        return self.mask != 0

    def __repr__(self) -> str:
        return f"RingElement(mask={self.mask:#b}, generators={self.context.generator_names})"

    # queries ---------------------------------------------------------

    def atoms(self) -> list["RingElement"]:
        """One singleton element per covered atom, ascending by subset code."""
        out = []
        mask = self.mask
        while mask:
            low = mask & -mask
            out.append(RingElement(self.context, low))
            mask ^= low
        return out

    def atom_codes(self) -> list[int]:
        """Subset codes ``s`` of the covered atoms, ascending."""
        codes = []
        mask = self.mask
        while mask:
            low = mask & -mask
            codes.append(low.bit_length())
            mask ^= low
        return codes

    def atom_subsets(self) -> list[tuple[str, ...]]:
        """Generator-name subsets of the covered atoms, ascending by code."""
        names = self.context.generator_names
        out = []
        for code in self.atom_codes():
            out.append(tuple(names[k] for k in range(len(names)) if code >> k & 1))
        return out

    def geq_degree(self) -> int:
        """Number of ring elements this element dominates (including 0)."""
        return 1 << self.mask.bit_count()

    @property
    def is_atom(self) -> bool:
        return self.mask.bit_count() == 1


# functional aliases for the element operations ------------------------


def generator(ctx: RingContext, name: str) -> RingElement:
    return ctx.generator(name)


def xor_add(x: RingElement, y: RingElement) -> RingElement:
    """Ring sum: the symmetric difference of the two atom sets."""
    return x ^ y


def and_mul(x: RingElement, y: RingElement) -> RingElement:
    """Ring product: the intersection of the two atom sets."""
    return x & y


def union(x: RingElement, y: RingElement) -> RingElement:
    """Set union, equal to ``x ^ y ^ (x & y)``."""
    return x | y


def complement(x: RingElement) -> RingElement:
    """``one ^ x``: every atom not covered by x."""
    return ~x


def geq(x: RingElement, y: RingElement) -> bool:
    """True iff ``x >= y``, i.e. y's atoms are a subset of x's."""
    return x >= y


def atoms(x: RingElement) -> list[RingElement]:
    return x.atoms()


def geq_degree(x: RingElement) -> int:
    return x.geq_degree()


def enumerate_ring(ctx: RingContext) -> list[RingElement]:
    """All ``2**(2**m - 1)`` elements, ascending by atom mask.

    Gated at ``m <= ENUMERATION_LIMIT`` because the count is doubly
    exponential in the generator count.
    """
    if ctx.m > ENUMERATION_LIMIT:
        raise EnumerationLimitError(
            f"cannot enumerate a ring on {ctx.m} generators "
            f"(limit is {ENUMERATION_LIMIT})"
        )
    return [RingElement(ctx, mask) for mask in range(ctx._full + 1)]


def iter_submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (including 0 and the mask itself), ascending."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask
