"""Subsets of ``0..n-1`` stored as Python ints (bit ``i`` set iff ``i`` is a member)."""


def full(n):
    return (1 << n) - 1


def from_iter(items):
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


def members(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def has(mask, i):
    return (mask >> i) & 1 == 1


def popcount(mask):
    return bin(mask).count("1")


def subset_key(mask):
    """Sort key: by cardinality, then by bitset value."""
    return (popcount(mask), mask)


def fmt(mask, labels=None):
    names = [str(i) if labels is None else labels[i] for i in members(mask)]
    return "{" + ",".join(names) + "}"
