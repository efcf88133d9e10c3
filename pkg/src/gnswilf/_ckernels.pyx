# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels`` (keys must fit in 64 bits)."""

from libc.stdint cimport uint64_t
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector
from libcpp.algorithm cimport sort
from cpython.set cimport PySet_Contains

BACKEND = "cython"


cdef void _box(uint64_t x, int dim, int width, vector[uint64_t]& out):
    # odometer with the least significant coordinate fastest: ascending keys
    cdef uint64_t field = (<uint64_t>1 << width) - 1
    cdef uint64_t y = 0, unit, c, top
    cdef int i
    out.clear()
    while True:
        out.push_back(y)
        i = 0
        while i < dim:
            unit = <uint64_t>1 << (width * i)
            c = (y >> (width * i)) & field
            top = (x >> (width * i)) & field
            if c < top:
                y += unit
                break
            y -= c * unit
            i += 1
        if i == dim:
            return


def child_generators(gens, holes, uint64_t x, uint64_t guard):
    # holes is probed in place; copying it per call made long walks quadratic
    cdef vector[uint64_t] pool, cands
    cdef uint64_t g, y, a, yg
    cdef size_t i, j
    cdef bint found
    if not isinstance(holes, (set, frozenset)):
        holes = set(holes)
    for gg in gens:
        g = gg
        if g != x:
            pool.push_back(g)
        cands.push_back(x + g)
    cands.push_back(3 * x)
    sort(cands.begin(), cands.end())
    for i in range(cands.size()):
        y = cands[i]
        if i and y == cands[i - 1]:
            continue
        yg = y | guard
        found = False
        for j in range(pool.size()):
            a = pool[j]
            if a < y and (yg - a) & guard == guard and not PySet_Contains(holes, y - a):
                found = True
                break
        if not found:
            pool.push_back(y)
    return [int(v) for v in pool]


def box_keys(uint64_t x, int dim, int width):
    cdef vector[uint64_t] buf
    _box(x, dim, width, buf)
    return [int(v) for v in buf]


def region_count(holes, int dim, int width):
    cdef vector[uint64_t] hv, buf
    cdef unordered_set[uint64_t] region
    cdef size_t i, j
    for h in holes:
        hv.push_back(<uint64_t>h)
    sort(hv.begin(), hv.end())
    i = hv.size()
    while i > 0:
        i -= 1
        if region.count(hv[i]):
            continue
        _box(hv[i], dim, width, buf)
        for j in range(buf.size()):
            region.insert(buf[j])
    return region.size()


def closure_witness(holes, int dim, int width):
    cdef unordered_set[uint64_t] hs
    cdef vector[uint64_t] order, buf
    cdef uint64_t h, a
    cdef size_t i, j
    for v in holes:
        hs.insert(<uint64_t>v)
        order.push_back(<uint64_t>v)
    for i in range(order.size()):
        h = order[i]
        _box(h, dim, width, buf)
        for j in range(buf.size()):
            a = buf[j]
            if a != 0 and a != h and hs.count(a) == 0 and hs.count(h - a) == 0:
                return int(h), int(a)
    return None
