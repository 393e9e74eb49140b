"""Pure-Python implementations of the hot tree and union-find kernels.

Every function here has a twin of the same name and signature in
``_kernels.pyx``.  Arrays are ``array.array('q')`` indexed by vertex id;
``parent[root]`` is ``-1``.
"""


def walk_up(parent, level, v, target_level):
    """Return the ancestor of ``v`` at ``target_level`` (``v`` if already there)."""
    while level[v] > target_level:
        v = parent[v]
    return v


def is_ancestor(parent, level, a, d):
    la = level[a]
    while level[d] > la:
        d = parent[d]
    return d == a


def lca(parent, level, x, y):
    lx = level[x]
    ly = level[y]
    while lx > ly:
        x = parent[x]
        lx -= 1
    while ly > lx:
        y = parent[y]
        ly -= 1
    while x != y:
        x = parent[x]
        y = parent[y]
    return x


def uf_find(uf, x):
    root = x
    while uf[root] != root:
        root = uf[root]
    while uf[x] != root:
        nxt = uf[x]
        uf[x] = root
        x = nxt
    return root


def uf_union(uf, size, a, b):
    """Union by size.  Returns the surviving root, or -1 if already joined."""
    ra = uf_find(uf, a)
    rb = uf_find(uf, b)
    if ra == rb:
        return -1
    if size[ra] < size[rb]:
        ra, rb = rb, ra
    uf[rb] = ra
    size[ra] += size[rb]
    return ra
