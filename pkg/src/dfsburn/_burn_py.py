"""Pure-Python burning kernels.

Fallback used when the compiled extension is unavailable (or when
``DFSBURN_PURE`` is set).  Semantics are identical to ``_burncore``:
both drive an explicit work stack that reproduces the recursive
depth-first order exactly, so deep graphs never hit the interpreter's
call-depth limit.

Adjacency comes in flattened (offsets, neighbours) form with each
vertex's neighbours sorted descending.  Trace marks: 0 = tree edge,
1 = dampened edge.
"""

from array import array

BACKEND = "python"


def burn(starts, flat, root, water):
    """Depth-first burn from ``root``; consumes ``water`` in place.

    Returns (order, parent, trace_tail, trace_head, trace_mark) where
    ``parent[v] == -1`` marks an unburnt vertex and ``parent[root] == root``.
    """
    n = len(starts) - 1
    parent = array("i", [-1]) * n
    order = array("i")
    tt = array("i")
    th = array("i")
    tm = array("b")
    ptr = list(starts[:n])
    parent[root] = root
    order.append(root)
    stack = [root]
    while stack:
        i = stack[-1]
        p = ptr[i]
        if p == starts[i + 1]:
            stack.pop()
            continue
        ptr[i] = p + 1
        j = flat[p]
        if parent[j] >= 0:
            continue
        if water[j] == 0:
            parent[j] = i
            order.append(j)
            tt.append(i)
            th.append(j)
            tm.append(0)
            stack.append(j)
        else:
            water[j] -= 1
            tt.append(i)
            th.append(j)
            tm.append(1)
    return order, parent, tt, th, tm


def unroll(starts, flat, root, tree_parent):
    """Traverse a spanning tree depth-first, counting skipped non-tree edges.

    ``tree_parent[j]`` is j's parent in the tree (``tree_parent[root] == root``).
    Returns (values, trace_tail, trace_head, trace_mark); ``values[j]`` is the
    number of dampened edges pointing at ``j``.
    """
    n = len(starts) - 1
    burnt = bytearray(n)
    values = array("i", [0]) * n
    tt = array("i")
    th = array("i")
    tm = array("b")
    ptr = list(starts[:n])
    burnt[root] = 1
    count = 1
    stack = [root]
    while stack:
        i = stack[-1]
        p = ptr[i]
        if p == starts[i + 1]:
            stack.pop()
            continue
        ptr[i] = p + 1
        j = flat[p]
        if burnt[j]:
            continue
        if tree_parent[j] == i:
            burnt[j] = 1
            count += 1
            tt.append(i)
            th.append(j)
            tm.append(0)
            stack.append(j)
        else:
            values[j] += 1
            tt.append(i)
            th.append(j)
            tm.append(1)
    if count != n:
        raise RuntimeError("tree traversal did not reach every vertex")
    return values, tt, th, tm
