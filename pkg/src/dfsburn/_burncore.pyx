# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled burning kernels; semantics match ``_burn_py`` exactly."""

from cpython cimport array
import array

BACKEND = "compiled"

cdef array.array _INT_TEMPLATE = array.array("i", [])
cdef array.array _BYTE_TEMPLATE = array.array("b", [])


def burn(int[::1] starts, int[::1] flat, int root, int[::1] water):
    """Depth-first burn from ``root``; consumes ``water`` in place."""
    cdef int n = starts.shape[0] - 1
    cdef int cap = flat.shape[0]

    cdef array.array order_a = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array parent_a = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array tt_a = array.clone(_INT_TEMPLATE, cap, zero=False)
    cdef array.array th_a = array.clone(_INT_TEMPLATE, cap, zero=False)
    cdef array.array tm_a = array.clone(_BYTE_TEMPLATE, cap, zero=False)
    cdef array.array stack_a = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array ptr_a = array.clone(_INT_TEMPLATE, n, zero=False)

    cdef int[::1] order = order_a
    cdef int[::1] parent = parent_a
    cdef int[::1] tt = tt_a
    cdef int[::1] th = th_a
    cdef signed char[::1] tm = tm_a
    cdef int[::1] stack = stack_a
    cdef int[::1] ptr = ptr_a

    cdef int v, i, j, p
    cdef int burnt_count = 0, trace_len = 0, top = 0

    for v in range(n):
        parent[v] = -1
        ptr[v] = starts[v]
    parent[root] = root
    order[burnt_count] = root
    burnt_count += 1
    stack[top] = root
    top += 1

    while top > 0:
        i = stack[top - 1]
        p = ptr[i]
        if p == starts[i + 1]:
            top -= 1
            continue
        ptr[i] = p + 1
        j = flat[p]
        if parent[j] >= 0:
            continue
        if water[j] == 0:
            parent[j] = i
            order[burnt_count] = j
            burnt_count += 1
            tt[trace_len] = i
            th[trace_len] = j
            tm[trace_len] = 0
            trace_len += 1
            stack[top] = j
            top += 1
        else:
            water[j] -= 1
            tt[trace_len] = i
            th[trace_len] = j
            tm[trace_len] = 1
            trace_len += 1

    array.resize(order_a, burnt_count)
    array.resize(tt_a, trace_len)
    array.resize(th_a, trace_len)
    array.resize(tm_a, trace_len)
    return order_a, parent_a, tt_a, th_a, tm_a


def unroll(int[::1] starts, int[::1] flat, int root, int[::1] tree_parent):
    """Traverse a spanning tree depth-first, counting skipped non-tree edges."""
    cdef int n = starts.shape[0] - 1
    cdef int cap = flat.shape[0]

    cdef array.array values_a = array.clone(_INT_TEMPLATE, n, zero=True)
    cdef array.array tt_a = array.clone(_INT_TEMPLATE, cap, zero=False)
    cdef array.array th_a = array.clone(_INT_TEMPLATE, cap, zero=False)
    cdef array.array tm_a = array.clone(_BYTE_TEMPLATE, cap, zero=False)
    cdef array.array stack_a = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array ptr_a = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array burnt_a = array.clone(_BYTE_TEMPLATE, n, zero=True)

    cdef int[::1] values = values_a
    cdef int[::1] tt = tt_a
    cdef int[::1] th = th_a
    cdef signed char[::1] tm = tm_a
    cdef int[::1] stack = stack_a
    cdef int[::1] ptr = ptr_a
    cdef signed char[::1] burnt = burnt_a

    cdef int v, i, j, p
    cdef int count = 1, trace_len = 0, top = 0

    for v in range(n):
        ptr[v] = starts[v]
    burnt[root] = 1
    stack[top] = root
    top += 1

    while top > 0:
        i = stack[top - 1]
        p = ptr[i]
        if p == starts[i + 1]:
            top -= 1
            continue
        ptr[i] = p + 1
        j = flat[p]
        if burnt[j]:
            continue
        if tree_parent[j] == i:
            burnt[j] = 1
            count += 1
            tt[trace_len] = i
            th[trace_len] = j
            tm[trace_len] = 0
            trace_len += 1
            stack[top] = j
            top += 1
        else:
            values[j] += 1
            tt[trace_len] = i
            th[trace_len] = j
            tm[trace_len] = 1
            trace_len += 1

    if count != n:
        raise RuntimeError("tree traversal did not reach every vertex")
    array.resize(tt_a, trace_len)
    array.resize(th_a, trace_len)
    array.resize(tm_a, trace_len)
    return values_a, tt_a, th_a, tm_a
