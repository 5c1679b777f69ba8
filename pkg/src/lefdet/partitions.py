"""Integer partitions: conjugation, rectangle complements, containment, enumeration."""

from __future__ import annotations


class Partition:
    """A weakly decreasing tuple of positive integers; ``Partition()`` is empty.

    Trailing zeros are trimmed on construction, so equality and hashing are
    structural.  Instances are immutable by convention.  Text form is
    ``[3,1]`` with ``[]`` for the empty partition.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative, got {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        self.parts = parts

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        """Parse the bracket form, e.g. ``[3,1]`` or ``[]``."""
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"partition text must look like [3,1], got {text!r}")
        inner = text[1:-1].strip()
        if not inner:
            return cls()
        return cls(int(tok) for tok in inner.split(","))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero-padded past the last stored part."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self.parts):
            raise ValueError(f"cannot pad {self} to length {length}")
        return self.parts + (0,) * (length - len(self.parts))

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition()
        width = self.parts[0]
        return Partition(
            sum(1 for p in self.parts if p >= j) for j in range(1, width + 1)
        )

    def contains(self, inner: "Partition") -> bool:
        """Componentwise comparison with zero padding."""
        return all(inner.part(i) <= self.part(i) for i in range(len(inner.parts)))

    def complement(self, r: int, l: int) -> "Partition":
        """The 180-degree rotated complement inside an r-column, l-row box.

        Requires the partition to fit in the box; part i of the result is
        r minus the (l-1-i)-th zero-padded part.
        """
        if r < 0 or l < 0:
            raise ValueError("rectangle sides must be nonnegative")
        if not rectangle(r, l).contains(self):
            raise ValueError(f"{self} does not fit in the rectangle ({r}^{l})")
        padded = self.padded(l)
        return Partition(r - padded[l - 1 - i] for i in range(l))

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self):
        return bool(self.parts)

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __repr__(self):
        return f"Partition({list(self.parts)})"


def rectangle(r: int, l: int) -> Partition:
    """The partition made of l copies of r."""
    return Partition((r,) * l)


def enumerate_in_rectangle(r: int, l: int) -> list[Partition]:
    """Every partition contained in the r-column, l-row box, each once.

    Order is descending lexicographic on the zero-padded part sequences, so
    output is byte-stable across runs.
    """
    if r < 0 or l < 0:
        raise ValueError("rectangle sides must be nonnegative")
    out: list[Partition] = []

    def rec(prefix: list[int], bound: int, rows_left: int) -> None:
        if rows_left == 0:
            out.append(Partition(prefix))
            return
        for p in range(bound, -1, -1):
            prefix.append(p)
            rec(prefix, p, rows_left - 1)
            prefix.pop()

    rec([], r, l)
    return out
