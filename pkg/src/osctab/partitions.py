"""Integer partitions and their lattice of diagram inclusions.

Partitions are plain tuples of weakly decreasing positive integers; the
empty partition is the empty tuple.  Tuples keep equality, hashing and
ordering canonical, so partitions can serve directly as dictionary keys
in the linear-operator code.
"""

from math import factorial
from typing import Iterator, Sequence

from .errors import BoundExceededError, PartitionParseError

Partition = tuple[int, ...]

EMPTY: Partition = ()


def as_partition(parts: Sequence[int]) -> Partition:
    """Normalize a part sequence to a valid partition tuple.

    Trailing zeros are dropped; anything not weakly decreasing and
    positive raises PartitionParseError.
    """
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for i, part in enumerate(parts):
        if part <= 0:
            raise PartitionParseError(f"parts must be positive, got {part}")
        if i > 0 and parts[i - 1] < part:
            raise PartitionParseError(f"parts must be weakly decreasing, got {parts}")
    return parts


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text form; "" and "-" denote the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return EMPTY
    try:
        parts = tuple(int(piece) for piece in text.split(","))
    except ValueError as exc:
        raise PartitionParseError(f"cannot parse partition from {text!r}") from exc
    return as_partition(parts)


def format_partition(partition: Partition) -> str:
    """Inverse of parse_partition; the empty partition prints as "-"."""
    if not partition:
        return "-"
    return ",".join(str(part) for part in partition)


def size(partition: Partition) -> int:
    return sum(partition)


def covers_up(partition: Partition) -> list[Partition]:
    """All partitions obtained by adding one box, in decreasing-lex order.

    A box can be added at row i exactly when row i-1 is strictly longer
    (or i = 0), plus one new row at the bottom; that is one position per
    distinct part value plus one.
    """
    result = []
    for i, part in enumerate(partition):
        if i == 0 or partition[i - 1] > part:
            result.append(partition[:i] + (part + 1,) + partition[i + 1 :])
    result.append(partition + (1,))
    return result


def covers_down(partition: Partition) -> list[Partition]:
    """All partitions obtained by removing one box, scanning rows top to bottom.

    A box is removable from row i exactly when row i+1 is strictly
    shorter (or i is the last row); one position per distinct part value.
    """
    result = []
    for i, part in enumerate(partition):
        if i + 1 == len(partition) or partition[i + 1] < part:
            if part == 1:
                result.append(partition[:i])
            else:
                result.append(partition[:i] + (part - 1,) + partition[i + 1 :])
    return result


def conjugate(partition: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not partition:
        return EMPTY
    cols = [0] * partition[0]
    for part in partition:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def meet(p: Partition, q: Partition) -> Partition:
    """Intersection of the two diagrams (cellwise minimum of rows)."""
    return tuple(min(a, b) for a, b in zip(p, q))


def cover_distance(p: Partition, q: Partition) -> int:
    """Minimum number of single-box steps from p to q in the lattice.

    Boxes outside the common sub-diagram must be removed and the missing
    ones added, so the distance is |p| + |q| - 2*|meet(p, q)|.
    """
    return size(p) + size(q) - 2 * size(meet(p, q))


def hook_product(partition: Partition) -> int:
    """Product of all hook lengths of the diagram."""
    conj = conjugate(partition)
    product = 1
    for i, part in enumerate(partition):
        for j in range(part):
            product *= (part - j) + (conj[j] - i) - 1
    return product


def num_syt(partition: Partition) -> int:
    """Number of standard fillings of the diagram, |partition|! / hook product.

    The division is always exact; a nonzero remainder indicates a bug and
    raises RuntimeError.
    """
    quotient, remainder = divmod(factorial(size(partition)), hook_product(partition))
    if remainder:
        raise RuntimeError(f"hook product does not divide {size(partition)}! for {partition}")
    return quotient


def enumerate_syt(partition: Partition, max_size: int = 12) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every standard filling of the diagram as a tuple of rows.

    Entries 1..n are placed one at a time; entry v may extend row i when
    the row above is already longer at that column.  Independent of the
    hook-length count, which it serves as a brute-force check for.
    """
    n = size(partition)
    if n > max_size:
        raise BoundExceededError(f"|partition| = {n} exceeds the configured bound {max_size}")
    rows = len(partition)
    filling: list[list[int]] = [[] for _ in range(rows)]

    def place(value: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if value > n:
            yield tuple(tuple(row) for row in filling)
            return
        for i in range(rows):
            col = len(filling[i])
            if col >= partition[i]:
                continue
            if i > 0 and len(filling[i - 1]) <= col:
                continue
            filling[i].append(value)
            yield from place(value + 1)
            filling[i].pop()

    yield from place(1)


def partitions_of_size(n: int) -> Iterator[Partition]:
    """All partitions of n, in decreasing-lex order."""
    if n == 0:
        yield EMPTY
        return

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]) -> Iterator[Partition]:
        if remaining == 0:
            yield prefix
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - part, part, prefix + (part,))

    yield from rec(n, n, ())


def partitions_up_to(max_size: int) -> Iterator[Partition]:
    """All partitions of every size from 0 to max_size inclusive."""
    for n in range(max_size + 1):
        yield from partitions_of_size(n)
