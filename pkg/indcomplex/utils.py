import typing as t
from itertools import combinations
from math import comb
from types import MappingProxyType

T = t.TypeVar("T")

_NULL: t.Any = object()


@t.overload
def frozendict() -> t.Dict[t.Any, t.Any]:
    """Return empty dict."""


@t.overload
def frozendict(dct: T) -> T:
    """Get MappingProxyType object and correct typing (for TypedDict)."""


def frozendict(dct: T = _NULL) -> T:
    if dct is _NULL:
        return MappingProxyType({})  # type: ignore
    return MappingProxyType(dct)  # type: ignore


# bitsets


def iter_bits(mask: int) -> t.Iterator[int]:
    """Yield the set bit positions of `mask` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_tuple(mask: int) -> t.Tuple[int, ...]:
    return tuple(iter_bits(mask))


def mask_of(members: t.Iterable[int]) -> int:
    mask = 0
    for v in members:
        mask |= 1 << v
    return mask


def lowest_bit(mask: int) -> int:
    """Index of the lowest set bit, -1 for zero."""
    return (mask & -mask).bit_length() - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def submasks_of_size(mask: int, size: int) -> t.Iterator[int]:
    """All submasks with `size` bits, in lexicographic order of their members."""
    for combo in combinations(bits_to_tuple(mask), size):
        yield mask_of(combo)


def binomial(l: int, r: int) -> int:
    """Binomial coefficient with the convention `C(l, r) = 0` if r < 0 or l < r."""
    if r < 0 or l < r:
        return 0
    return comb(l, r)


def parse_int_range(text: str) -> t.List[int]:
    """Parse `"3"`, `"1..6"` or `"1..3, 5"` into a sorted list of ints."""
    values: t.Set[int] = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        lo, sep, hi = part.partition("..")
        if sep:
            start, stop = int(lo), int(hi)
            if stop < start:
                raise ValueError(f"empty range {part!r}")
            values.update(range(start, stop + 1))
        else:
            values.add(int(part))
    return sorted(values)
