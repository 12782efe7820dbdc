"""
Backend selection for the bitmask kernels.

The compiled module is used when it imports; set ``ARTIN_MORSE_PURE=1`` to
force the Python implementation. ``BACKEND`` names the active one.
"""
from __future__ import annotations

import os
from array import array

from . import _pure
from ._pure import NonTerminating

_compiled = None
if not os.environ.get("ARTIN_MORSE_PURE"):
    try:
        from . import _kernels as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def pack(nbits: int, cells, partner: dict[int, int]) -> tuple[bytearray, array]:
    """Dense buffers indexed by bitmask, as the kernels expect."""
    size = 1 << nbits
    dom = bytearray(size)
    par = array("q", [-1]) * size
    for c in cells:
        dom[c] = 1
    for a, b in partner.items():
        par[a] = b
    return dom, par


def morse_boundary(nbits: int, in_dom, partner, backend: str | None = None):
    backend = backend or BACKEND
    if backend == "cython" and _compiled is not None:
        try:
            return _compiled.morse_boundary(nbits, in_dom, partner)
        except OverflowError:
            pass
        except _compiled.NonTerminating as exc:
            raise NonTerminating(str(exc)) from None
    return _pure.morse_boundary(nbits, in_dom, partner)


def find_cycle(nbits: int, in_dom, partner, backend: str | None = None) -> bool:
    backend = backend or BACKEND
    if backend == "cython" and _compiled is not None:
        return _compiled.find_cycle(nbits, in_dom, partner)
    return _pure.find_cycle(nbits, in_dom, partner)
