import re
from fractions import Fraction
from typing import Iterable, List

from errors import UsageError

FRACTION_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_fraction(s) -> Fraction:
    """Parse an exact rational from 'p', 'p/q', an int or a Fraction."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    match = FRACTION_PATTERN.match(str(s))
    if not match:
        raise UsageError(f"Not an exact rational: {s!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise UsageError(f"Zero denominator in {s!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_fraction(q) -> str:
    """Format a rational as 'p/q', denominator always present."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_hbar_list(values: Iterable) -> List[Fraction]:
    """Parse a ħ sweep, accepting comma separated strings as well as lists."""
    hbars = []
    for value in values:
        for part in str(value).split(","):
            if part.strip():
                hbars.append(parse_fraction(part))
    if not hbars:
        raise UsageError("The ħ list is empty")
    # keep the order the user gave, drop repeats
    return list(dict.fromkeys(hbars))


def mask_to_list(mask: int) -> List[int]:
    """Indices of the set bits, lowest first."""
    indices = []
    i = 0
    while mask:
        if mask & 1:
            indices.append(i)
        mask >>= 1
        i += 1
    return indices


def list_to_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def below(i: int) -> int:
    """Mask of all indices strictly below i."""
    return (1 << i) - 1


def reorder_sign(a: int, b: int) -> int:
    """Sign of sorting the concatenation of blade a followed by blade b."""
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


def vector_to_json(vector) -> List[str]:
    return [format_fraction(c) for c in vector]


def vector_from_json(data) -> List[Fraction]:
    return [parse_fraction(c) for c in data]
