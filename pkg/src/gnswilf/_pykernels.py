"""Pure-Python hot kernels over packed lattice points.

Every function here has a twin with the same signature in the compiled
``_ckernels`` extension.  Keys are packed as described in
:mod:`gnswilf.packing`; ``guard`` is the packing's guard mask.
"""

from __future__ import annotations

BACKEND = "python"


def child_generators(gens, holes, x, guard):
    """Minimal generators of ``S \\ {x}`` from those of ``S``.

    ``gens`` are the minimal generators of S, ``x`` one of them, and
    ``holes`` the hole set of the child (so it already contains ``x``).
    New generators can only be ``x + g`` for ``g`` in ``gens`` or ``3x``.
    A candidate is decomposable iff it exceeds some generator of the child by
    a semigroup element, and every such generator has a smaller key, so it
    is enough to test against the generators accepted so far.
    """
    out = [g for g in gens if g != x]
    for y in sorted({x + g for g in gens} | {3 * x}):
        yg = y | guard
        for a in out:
            if a < y and (yg - a) & guard == guard and (y - a) not in holes:
                break
        else:
            out.append(y)
    return out


def _box(x, dim, width):
    """Keys below ``x`` in ascending order (most significant coordinate outermost)."""
    field = (1 << width) - 1
    keys = [0]
    for i in reversed(range(dim)):
        shift = width * i
        top = (x >> shift) & field
        if top:
            keys = [k + (v << shift) for k in keys for v in range(top + 1)]
    return keys


def box_keys(x, dim, width):
    """All keys ``y <= x`` componentwise, ``0`` and ``x`` included."""
    return _box(x, dim, width)


def region_count(holes, dim, width):
    """Size of the union of the boxes below every hole."""
    region = set()
    for h in sorted(holes, reverse=True):
        if h not in region:
            region.update(_box(h, dim, width))
    return len(region)


def closure_witness(holes, dim, width):
    """First ``(h, a)`` with ``h`` a hole, ``a`` and ``h - a`` nonzero non-holes, or ``None``.

    Holes are scanned in the order given, parts ``a`` in ascending key order.
    """
    hs = set(holes)
    for h in holes:
        for a in _box(h, dim, width):
            if a and a != h and a not in hs and (h - a) not in hs:
                return h, a
    return None
