"""Integer partition counts and the combinatorial bounds built from them.

Everything here is exact integer arithmetic.  The partition function p(n)
uses the pentagonal-number recurrence; enumeration helpers exist so that
tests can cross-check the recurrence against brute force.

The two type-D quantities:

  typeD_count(n)  number of irreducible characters of the type-D_n Weyl
                  group: unordered pairs of partitions with total weight n,
                  with equal pairs (n even) counted twice.
  typeD_bound(n)  the orbit-count lower bound 2^4 3^((n-4)/2) for even n,
                  2^5 3^((n-5)/2) for odd n (n >= 4).

tau is an explicit injection from partitions of n and n-1 with smallest part
at least 2 into partitions of n-2, defined for n >= 8; it witnesses
p(n) <= 2 p(n-2).
"""

from __future__ import annotations

from functools import lru_cache

__all__ = [
    "PartitionError", "p", "partitions_of", "ordered_pairs",
    "typeD_count", "typeD_bound", "tau", "check_inequalities",
]


class PartitionError(ValueError):
    pass


@lru_cache(maxsize=None)
def p(n: int) -> int:
    """Number of partitions of n (pentagonal-number recurrence)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = 1 if k % 2 else -1
        if g1 <= n:
            total += sign * p(n - g1)
        if g2 <= n:
            total += sign * p(n - g2)
        k += 1
    return total


def partitions_of(n: int, min_part: int = 1, max_part: int | None = None):
    """Yield all partitions of n as weakly decreasing tuples."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(min(max_part, n), min_part - 1, -1):
        for rest in partitions_of(n - first, min_part, first):
            yield (first,) + rest


def ordered_pairs(n: int) -> int:
    """Number of ordered pairs of partitions with total weight n."""
    return sum(p(i) * p(n - i) for i in range(n + 1))


def typeD_count(n: int) -> int:
    if n < 4:
        raise PartitionError(f"typeD_count needs n >= 4, got {n}")
    doubled = p(n // 2) if n % 2 == 0 else 0
    return (ordered_pairs(n) + 3 * doubled) // 2


def typeD_bound(n: int) -> int:
    if n < 4:
        raise PartitionError(f"typeD_bound needs n >= 4, got {n}")
    if n % 2 == 0:
        return 2 ** 4 * 3 ** ((n - 4) // 2)
    return 2 ** 5 * 3 ** ((n - 5) // 2)


def _sorted_partition(parts):
    return tuple(sorted((x for x in parts if x), reverse=True))


def tau(parts, n: int):
    """The injection witnessing p(n) <= 2 p(n-2).

    parts must be a partition with smallest part >= 2 whose weight is n
    (class Q_{n,k}) or n-1 (class Q_{n-1,k}); n >= 8.  Returns
    (image_partition, branch_label) where the image is a partition of n-2.
    """
    if n < 8:
        raise PartitionError(f"tau is defined for n >= 8, got {n}")
    a = tuple(parts)
    if not a or any(a[i] < a[i + 1] for i in range(len(a) - 1)):
        raise PartitionError(f"{parts!r} is not weakly decreasing")
    if a[-1] < 2:
        raise PartitionError(f"{parts!r} has a part below 2")
    w = sum(a)
    r = len(a)
    k = a[-1]
    if w == n - 1:
        return _sorted_partition(a[:-1] + (k - 1,)), "drop-one-from-last"
    if w != n:
        raise PartitionError(f"weight {w} is neither {n} nor {n - 1}")
    if k >= 4:
        return _sorted_partition(a[:-1] + (1,) * (k - 2)), "last-to-ones"
    if k == 3:
        return _sorted_partition(a[:-2] + (2,) + (1,) * (a[-2] - 1)), "three-to-two-ones"
    # k == 2
    if r == 2:
        return _sorted_partition((a[0] - 6, 2, 2, 1, 1)), "two-part-rewrite"
    if a[-3] == a[-2]:
        return a[:-1], "drop-final-two"
    return _sorted_partition(a[:-3] + (a[-2] + 1,) + (1,) * (a[-3] - 1)), "merge-spread"


def _tau_domain(n: int):
    for parts in partitions_of(n, min_part=2):
        yield parts
    for parts in partitions_of(n - 1, min_part=2):
        yield parts


def tau_injective_on(n: int) -> bool:
    """Exhaustively check tau is injective into partitions of n-2."""
    seen = {}
    for parts in _tau_domain(n):
        img, _branch = tau(parts, n)
        assert sum(img) == n - 2, (parts, img)
        if img in seen:
            return False
        seen[img] = parts
    return True


INEQUALITIES = (
    "p(n) <= p(n-1) + p(n-2) for n >= 2",
    "p(n) <= 2 p(n-2) for n >= 8",
    "2^n > p(n+1) for n >= 2",
    "typeD_bound(n) > typeD_count(n) for n >= 4",
    "typeD_count(n+2) < 3 typeD_count(n) for n >= 11",
    "2 p(k+1) <= p(k) + p(k+2) for k >= 1",
    "tau injective on weights 8..min(range_max,60)",
)


def check_inequalities(range_max: int, tau_max: int = 60):
    """Verify the inequality suite up to range_max.

    Returns a list of result dicts, one per inequality, each with the
    tightest margin found and where it occurs.  The doubling inequality
    p(n) <= 2 p(n-2) is an equality at n=8 and n=9, so its margin is 0.
    """
    if range_max < 12:
        raise PartitionError("range_max must be at least 12")
    results = []

    def record(name, margins, strict):
        worst, at = min(margins)
        results.append({"name": name, "holds": worst > 0 if strict else worst >= 0,
                        "tightest_margin": worst, "at_n": at})

    record(INEQUALITIES[0],
           [(p(n - 1) + p(n - 2) - p(n), n) for n in range(2, range_max + 1)],
           strict=False)
    record(INEQUALITIES[1],
           [(2 * p(n - 2) - p(n), n) for n in range(8, range_max + 1)],
           strict=False)
    record(INEQUALITIES[2],
           [(2 ** n - p(n + 1), n) for n in range(2, range_max + 1)],
           strict=True)
    record(INEQUALITIES[3],
           [(typeD_bound(n) - typeD_count(n), n) for n in range(4, range_max + 1)],
           strict=True)
    record(INEQUALITIES[4],
           [(3 * typeD_count(n) - typeD_count(n + 2), n)
            for n in range(11, range_max + 1)],
           strict=True)
    record(INEQUALITIES[5],
           [(p(k) + p(k + 2) - 2 * p(k + 1), k) for k in range(1, range_max + 1)],
           strict=False)

    bad = [n for n in range(8, min(range_max, tau_max) + 1)
           if not tau_injective_on(n)]
    results.append({"name": INEQUALITIES[6], "holds": not bad,
                    "tightest_margin": None,
                    "at_n": bad[0] if bad else None})
    return results
