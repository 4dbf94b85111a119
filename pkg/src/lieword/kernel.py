"""Kernel selection: compiled extension if available, pure Python otherwise.

Set LIEWORD_KERNEL=py or LIEWORD_KERNEL=c to force a choice (the benchmark
and the behavioural-identity tests use this).
"""

import os

from . import _pykernel

_choice = os.environ.get("LIEWORD_KERNEL", "").strip().lower()

if _choice == "py":
    _impl = _pykernel
elif _choice == "c":
    from . import _ckernel as _impl  # noqa: F401  (ImportError is the point)
else:
    try:
        from . import _ckernel as _impl
    except ImportError:
        _impl = _pykernel

KERNEL_NAME: str = _impl.NAME
unique_window_starts = _impl.unique_window_starts
border_array = _impl.border_array
prefix_lie_profile = _impl.prefix_lie_profile


def encode_symbols(word: str) -> bytes:
    """Map a word to bytes, one byte per symbol, in first-occurrence order.

    The kernels work on bytes; any injective symbol->byte map preserves
    the quantities they compute (window identity, borders, class counts).
    """
    table: dict[str, int] = {}
    for c in word:
        if c not in table:
            if len(table) == 256:
                raise ValueError("more than 256 distinct symbols")
            table[c] = len(table)
    return bytes(table[c] for c in word)
