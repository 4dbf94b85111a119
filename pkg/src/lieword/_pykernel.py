"""Pure-Python kernel: reference implementations of the hot loops.

The compiled kernel (``lieword._ckernel``) exposes the same three
functions with identical behaviour; ``lieword.kernel`` picks one at
import time.  Everything here is exact — no probabilistic hashing.
"""

NAME = "py"


def unique_window_starts(data: bytes, n: int) -> list[int]:
    """Start offsets of the first occurrence of each distinct length-n window.

    Offsets are 0-based and returned in order of first occurrence.
    Requires 1 <= n <= len(data).
    """
    if not 1 <= n <= len(data):
        raise ValueError("window length out of range")
    seen = set()
    out = []
    for i in range(len(data) - n + 1):
        w = data[i : i + n]
        if w not in seen:
            seen.add(w)
            out.append(i)
    return out


def border_array(data: bytes) -> list[int]:
    """Longest proper border of every prefix: b[i] for data[:i+1] (KMP failure)."""
    m = len(data)
    b = [0] * m
    k = 0
    for i in range(1, m):
        while k > 0 and data[i] != data[k]:
            k = b[k - 1]
        if data[i] == data[k]:
            k += 1
        b[i] = k
    return b


def prefix_lie_profile(data: bytes) -> list[int]:
    """Counts of rotation-closed factor classes for every prefix of ``data``.

    Entry i is the number of conjugacy classes (the empty word's included)
    whose every member occurs in data[:i].  Runs incrementally: when the
    prefix grows by one symbol the only classes that can newly close are
    the classes of suffixes seen for the first time.
    """
    total = len(data)
    factors: set[bytes] = set()
    count = 1  # class of the empty word
    profile = [1]
    for i in range(1, total + 1):
        prefix = data[:i]
        # Previously-seen suffix lengths form a range [1..k]: bisect for k.
        lo, hi = 0, i - 1  # suffix of length i is always new
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if prefix[i - mid :] in factors:
                lo = mid
            else:
                hi = mid - 1
        for m in range(lo + 1, i + 1):
            factors.add(prefix[i - m :])
        for m in range(lo + 1, i + 1):
            s = prefix[i - m :]
            for j in range(1, m):
                if s[j:] + s[:j] not in factors:
                    break
            else:
                count += 1  # first prefix containing every rotation of s
        profile.append(count)
    return profile
