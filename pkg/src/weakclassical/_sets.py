"""Bitmask helpers.

Subsets of a finite carrier are stored as Python ints (bit i set when element
i belongs). Subset tests become ``a & ~b == 0``, and equality/hashing are free.
"""

import numpy as np


def mask_from_bools(flags):
    flags = np.asarray(flags, dtype=bool)
    if flags.size == 0:
        return 0
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def mask_from_indices(indices):
    mask = 0
    for i in np.unique(np.asarray(indices, dtype=np.int64)):
        mask |= 1 << int(i)
    return mask


def bools_from_mask(mask, n):
    if n == 0:
        return np.zeros(0, dtype=bool)
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


def indices_from_mask(mask, n):
    return np.flatnonzero(bools_from_mask(mask, n))


def is_subset(a, b):
    return a & ~b == 0


def popcount(mask):
    return bin(mask).count("1")


def format_label(label):
    """Render a canonical element (int or nested tuple) in instance-text form."""
    if isinstance(label, tuple):
        return "(" + ",".join(format_label(x) for x in label) + ")"
    return str(label)


def normalize_label(label):
    """Lists become tuples recursively; numpy integers become ints."""
    if isinstance(label, (list, tuple)):
        return tuple(normalize_label(x) for x in label)
    return int(label)


def canonical_sort_key(mask, n):
    """Order subsets by size, then lexicographically by their sorted element indices."""
    idx = indices_from_mask(mask, n)
    return (len(idx), tuple(int(i) for i in idx))
