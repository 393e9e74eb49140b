# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of ``_kernels_py``; same names, same semantics.

Arguments are ``array.array('q')`` objects, read through their raw
pointers to avoid per-call buffer acquisition.
"""

from cpython cimport array


def walk_up(array.array parent, array.array level, long long v, long long target_level):
    cdef long long* par = parent.data.as_longlongs
    cdef long long* lev = level.data.as_longlongs
    while lev[v] > target_level:
        v = par[v]
    return v


def is_ancestor(array.array parent, array.array level, long long a, long long d):
    cdef long long* par = parent.data.as_longlongs
    cdef long long* lev = level.data.as_longlongs
    cdef long long la = lev[a]
    while lev[d] > la:
        d = par[d]
    return d == a


def lca(array.array parent, array.array level, long long x, long long y):
    cdef long long* par = parent.data.as_longlongs
    cdef long long* lev = level.data.as_longlongs
    cdef long long lx = lev[x]
    cdef long long ly = lev[y]
    while lx > ly:
        x = par[x]
        lx -= 1
    while ly > lx:
        y = par[y]
        ly -= 1
    while x != y:
        x = par[x]
        y = par[y]
    return x


cdef inline long long _find(long long* uf, long long x):
    cdef long long root = x
    cdef long long nxt
    while uf[root] != root:
        root = uf[root]
    while uf[x] != root:
        nxt = uf[x]
        uf[x] = root
        x = nxt
    return root


def uf_find(array.array uf, long long x):
    return _find(uf.data.as_longlongs, x)


def uf_union(array.array uf, array.array size, long long a, long long b):
    cdef long long* u = uf.data.as_longlongs
    cdef long long* s = size.data.as_longlongs
    cdef long long ra = _find(u, a)
    cdef long long rb = _find(u, b)
    cdef long long t
    if ra == rb:
        return -1
    if s[ra] < s[rb]:
        t = ra
        ra = rb
        rb = t
    u[rb] = ra
    s[ra] += s[rb]
    return ra
