"""Index-to-value sequences backed by run-length-encoded blocks.

Both weight sequences and Kothe-matrix row bases are built from the same
machinery: a side is an infinite concatenation of finite blocks, each block a
short list of (value, count) runs, laid rightward from a start index or
leftward from an end index.  Counts are Python ints, so blocks of size 10**200
stay exact; block boundaries come from cached prefix sums extended lazily.

A sequence exposes three access paths and every consumer picks the cheapest
one available:
  value_at(j)        single probe
  runs_over(lo, hi)  maximal constant runs covering [lo, hi] (None when the
                     sequence has no run structure)
  values_array(js)   vectorized probe for dense numpy sweeps
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

MAX_RUNS_PER_QUERY = 2_000_000


@dataclass(frozen=True)
class Run:
    """Constant stretch value on the inclusive index interval [start, stop]."""

    start: int
    stop: int
    value: float

    def __post_init__(self):
        if self.stop < self.start:
            raise ValueError(f"empty run [{self.start}, {self.stop}]")

    @property
    def count(self) -> int:
        return self.stop - self.start + 1


class SequenceBase:
    """Duck-typed interface; subclasses override the three access paths."""

    def value_at(self, j: int) -> float:
        raise NotImplementedError

    def runs_over(self, lo: int, hi: int) -> list[Run] | None:
        return None

    def values_array(self, js: np.ndarray) -> np.ndarray:
        return np.array([self.value_at(int(j)) for j in js], dtype=float)


class ConstantSequence(SequenceBase):
    def __init__(self, value: float):
        self.value = float(value)

    def value_at(self, j: int) -> float:
        return self.value

    def runs_over(self, lo: int, hi: int) -> list[Run]:
        if hi < lo:
            return []
        return [Run(lo, hi, self.value)]

    def values_array(self, js: np.ndarray) -> np.ndarray:
        return np.full(len(js), self.value)


class ClosedFormSequence(SequenceBase):
    """Arbitrary j -> value rule; vectorized form optional."""

    def __init__(self, fn: Callable[[int], float],
                 vectorized: Callable[[np.ndarray], np.ndarray] | None = None):
        self.fn = fn
        self.vectorized = vectorized

    def value_at(self, j: int) -> float:
        return float(self.fn(j))

    def runs_over(self, lo: int, hi: int) -> None:
        return None

    def values_array(self, js: np.ndarray) -> np.ndarray:
        if self.vectorized is not None:
            return np.asarray(self.vectorized(js), dtype=float)
        return super().values_array(js)


BlockGenerator = Callable[[int], list[tuple[float, int]]]


class BlockSideSequence(SequenceBase):
    """One side of a block layout.

    blocks(n) for n = 1, 2, ... yields the n-th block as (value, count) runs
    in scan order along the stacking direction.  direction +1 stacks blocks
    rightward from `origin`; direction -1 stacks them leftward starting at
    `origin` (the first block's first run sits at `origin` and the block
    grows toward smaller indices).
    """

    def __init__(self, blocks: BlockGenerator, origin: int, direction: int):
        if direction not in (-1, 1):
            raise ValueError("direction must be +1 or -1")
        self.blocks = blocks
        self.origin = origin
        self.direction = direction
        # _bounds[n] = total count of blocks 1..n (Python ints)
        self._bounds: list[int] = [0]
        self._block_runs: list[list[tuple[float, int]]] = []

    def _block_size(self, runs: list[tuple[float, int]]) -> int:
        total = 0
        for value, count in runs:
            if count <= 0:
                raise ValueError(f"nonpositive run count {count}")
            total += int(count)
        return total

    def _extend_to_offset(self, offset: int) -> None:
        """Grow cached prefix sums until they cover 0-based offset `offset`."""
        while self._bounds[-1] <= offset:
            n = len(self._block_runs) + 1
            runs = [(float(v), int(c)) for v, c in self.blocks(n)]
            if not runs:
                raise ValueError(f"block {n} is empty")
            self._block_runs.append(runs)
            self._bounds.append(self._bounds[-1] + self._block_size(runs))

    def _offset_of(self, j: int) -> int:
        """Distance from origin measured along the stacking direction."""
        off = (j - self.origin) * self.direction
        if off < 0:
            raise IndexError(f"index {j} is on the wrong side of origin {self.origin}")
        return off

    def block_range(self, n: int) -> tuple[int, int]:
        """Inclusive index interval occupied by block n (1-based)."""
        if n < 1:
            raise ValueError("block numbers start at 1")
        self._extend_to_offset(0)
        while len(self._block_runs) < n:
            self._extend_to_offset(self._bounds[-1])
        first_off, last_off = self._bounds[n - 1], self._bounds[n] - 1
        if self.direction == 1:
            return self.origin + first_off, self.origin + last_off
        return self.origin - last_off, self.origin - first_off

    def _value_at_offset(self, off: int) -> float:
        self._extend_to_offset(off)
        b = bisect.bisect_right(self._bounds, off) - 1
        rel = off - self._bounds[b]
        for value, count in self._block_runs[b]:
            if rel < count:
                return value
            rel -= count
        raise AssertionError("offset fell off the end of its block")

    def value_at(self, j: int) -> float:
        return self._value_at_offset(self._offset_of(j))

    def runs_over(self, lo: int, hi: int) -> list[Run]:
        if hi < lo:
            return []
        # translate to offsets; for leftward sides the offset order reverses
        if self.direction == 1:
            off_lo, off_hi = self._offset_of(lo), self._offset_of(hi)
        else:
            off_lo, off_hi = self._offset_of(hi), self._offset_of(lo)
        self._extend_to_offset(off_hi)
        out: list[Run] = []
        b = bisect.bisect_right(self._bounds, off_lo) - 1
        cursor = self._bounds[b]
        while cursor <= off_hi:
            for value, count in self._block_runs[b]:
                r_lo, r_hi = cursor, cursor + count - 1
                cursor += count
                if r_hi < off_lo or r_lo > off_hi:
                    continue
                a, z = max(r_lo, off_lo), min(r_hi, off_hi)
                if self.direction == 1:
                    out.append(Run(self.origin + a, self.origin + z, value))
                else:
                    out.append(Run(self.origin - z, self.origin - a, value))
                if len(out) > MAX_RUNS_PER_QUERY:
                    raise RuntimeError("run query exploded; range too wide for this layout")
            b += 1
            if b >= len(self._block_runs):
                self._extend_to_offset(cursor)
        if self.direction == -1:
            out.reverse()
        return _merge_adjacent(out)

    def values_array(self, js: np.ndarray) -> np.ndarray:
        js = np.asarray(js)
        if js.size == 0:
            return np.zeros(0)
        lo, hi = int(js.min()), int(js.max())
        runs = self.runs_over(lo, hi)
        return fill_from_runs(runs, lo, hi)[js - lo]


def _merge_adjacent(runs: list[Run]) -> list[Run]:
    out: list[Run] = []
    for r in runs:
        if out and out[-1].value == r.value and out[-1].stop + 1 == r.start:
            out[-1] = Run(out[-1].start, r.stop, r.value)
        else:
            out.append(r)
    return out


def fill_from_runs(runs: list[Run], lo: int, hi: int) -> np.ndarray:
    """Dense value array over [lo, hi] from covering runs."""
    out = np.empty(hi - lo + 1)
    for r in runs:
        out[r.start - lo : r.stop - lo + 1] = r.value
    return out


class SplitSequence(SequenceBase):
    """Two-sided sequence: `negative` serves j <= split-1, `nonnegative` j >= split."""

    def __init__(self, negative: SequenceBase, nonnegative: SequenceBase, split: int = 0):
        self.negative = negative
        self.nonnegative = nonnegative
        self.split = split

    def value_at(self, j: int) -> float:
        return self.nonnegative.value_at(j) if j >= self.split else self.negative.value_at(j)

    def runs_over(self, lo: int, hi: int) -> list[Run] | None:
        if hi < lo:
            return []
        parts: list[Run] = []
        if lo < self.split:
            left = self.negative.runs_over(lo, min(hi, self.split - 1))
            if left is None:
                return None
            parts.extend(left)
        if hi >= self.split:
            right = self.nonnegative.runs_over(max(lo, self.split), hi)
            if right is None:
                return None
            parts.extend(right)
        return _merge_adjacent(parts)

    def values_array(self, js: np.ndarray) -> np.ndarray:
        js = np.asarray(js)
        out = np.empty(len(js))
        neg = js < self.split
        if np.any(neg):
            out[neg] = self.negative.values_array(js[neg])
        if np.any(~neg):
            out[~neg] = self.nonnegative.values_array(js[~neg])
        return out


# ---------------------------------------------------------------------------
# block generator templates (names are part of the CLI config surface)


def constant(value: float) -> ConstantSequence:
    return ConstantSequence(value)


def alternating_powers(base: float = 2.0) -> BlockGenerator:
    """Block n (scan order): n copies of one power of `base`, then n of its
    inverse, the leading power alternating with the block parity.

    Cumulative products along the scan rise then fall back to 1 on odd
    blocks, dip then recover on even blocks.
    """

    def blocks(n: int) -> list[tuple[float, int]]:
        up = base if n % 2 == 1 else 1.0 / base
        return [(up, n), (1.0 / up, n)]

    return blocks


def twos_halves_ones(base: float = 2.0) -> BlockGenerator:
    """Alternate a square block of ones with a halving/doubling block.

    Block 2t-1: t*t copies of 1.  Block 2t (scan order): t copies of 1/`base`
    then t copies of `base`, so cumulative products along the scan dip to
    base^-t and recover.
    """

    def blocks(n: int) -> list[tuple[float, int]]:
        if n % 2 == 1:
            t = (n + 1) // 2
            return [(1.0, t * t)]
        t = n // 2
        return [(1.0 / base, t), (base, t)]

    return blocks


def ramp_plateau(plateau_base: int = 10) -> BlockGenerator:
    """Segment n: ascending ramp 1..n, plateau n+1 repeated plateau_base^n
    times, descending ramp n..1.  Values here are bases; a power-row matrix
    raises them to the k-th power per row."""

    def blocks(n: int) -> list[tuple[float, int]]:
        asc = [(float(i), 1) for i in range(1, n + 1)]
        plateau = [(float(n + 1), plateau_base ** n)]
        desc = [(float(i), 1) for i in range(n, 0, -1)]
        return asc + plateau + desc

    return blocks


TEMPLATES: dict[str, Callable] = {
    "constant": constant,
    "alternating_powers": alternating_powers,
    "twos_halves_ones": twos_halves_ones,
    "ramp_plateau": ramp_plateau,
}


def side_from_template(name: str, params: dict, origin: int, direction: int) -> SequenceBase:
    """Instantiate a template as one side of a layout (CLI config path)."""
    if name not in TEMPLATES:
        raise ValueError(f"unknown block template {name!r}")
    made = TEMPLATES[name](**params)
    if isinstance(made, SequenceBase):
        return made
    return BlockSideSequence(made, origin, direction)
