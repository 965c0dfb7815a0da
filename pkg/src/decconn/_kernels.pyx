# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled SCC and reachability kernels over CSR arrays."""
from libc.stdlib cimport malloc, free


def scc_labels(int n, list offs, list tgts, int removed):
    cdef int m = len(tgts)
    cdef int *o = <int *> malloc((n + 2) * sizeof(int))
    cdef int *t = <int *> malloc((m + 1) * sizeof(int))
    cdef int *index = <int *> malloc((n + 1) * sizeof(int))
    cdef int *low = <int *> malloc((n + 1) * sizeof(int))
    cdef int *comp = <int *> malloc((n + 1) * sizeof(int))
    cdef int *ptr = <int *> malloc((n + 1) * sizeof(int))
    cdef char *on = <char *> malloc((n + 1) * sizeof(char))
    cdef int *stack = <int *> malloc((n + 1) * sizeof(int))
    cdef int *cstack = <int *> malloc((n + 1) * sizeof(int))
    cdef int i, v, w, u, end, root, sp = 0, cp = 0, counter = 0, ncomp = 0
    cdef bint descended
    try:
        for i in range(n + 2):
            o[i] = offs[i]
        for i in range(m):
            t[i] = tgts[i]
        for i in range(n + 1):
            index[i] = -1
            comp[i] = -1
            on[i] = 0
        for root in range(1, n + 1):
            if root == removed or index[root] >= 0:
                continue
            index[root] = counter
            low[root] = counter
            counter += 1
            stack[sp] = root
            sp += 1
            on[root] = 1
            cstack[cp] = root
            cp += 1
            ptr[root] = o[root]
            while cp > 0:
                v = cstack[cp - 1]
                i = ptr[v]
                end = o[v + 1]
                descended = False
                while i < end:
                    w = t[i]
                    i += 1
                    if w == removed:
                        continue
                    if index[w] < 0:
                        ptr[v] = i
                        index[w] = counter
                        low[w] = counter
                        counter += 1
                        stack[sp] = w
                        sp += 1
                        on[w] = 1
                        cstack[cp] = w
                        cp += 1
                        ptr[w] = o[w]
                        descended = True
                        break
                    if on[w] and index[w] < low[v]:
                        low[v] = index[w]
                if descended:
                    continue
                ptr[v] = i
                cp -= 1
                if cp > 0:
                    u = cstack[cp - 1]
                    if low[v] < low[u]:
                        low[u] = low[v]
                if low[v] == index[v]:
                    while True:
                        sp -= 1
                        w = stack[sp]
                        on[w] = 0
                        comp[w] = ncomp
                        if w == v:
                            break
                    ncomp += 1
        return [comp[i] for i in range(n + 1)]
    finally:
        free(o); free(t); free(index); free(low); free(comp)
        free(ptr); free(on); free(stack); free(cstack)


def count_reachable(int n, list offs, list tgts, int s, int removed):
    if s == removed:
        return 0
    cdef int m = len(tgts)
    cdef int *o = <int *> malloc((n + 2) * sizeof(int))
    cdef int *t = <int *> malloc((m + 1) * sizeof(int))
    cdef char *seen = <char *> malloc((n + 1) * sizeof(char))
    cdef int *todo = <int *> malloc((n + 1) * sizeof(int))
    cdef int i, v, w, sp = 0, total = 1
    try:
        for i in range(n + 2):
            o[i] = offs[i]
        for i in range(m):
            t[i] = tgts[i]
        for i in range(n + 1):
            seen[i] = 0
        seen[s] = 1
        todo[sp] = s
        sp += 1
        while sp > 0:
            sp -= 1
            v = todo[sp]
            for i in range(o[v], o[v + 1]):
                w = t[i]
                if not seen[w] and w != removed:
                    seen[w] = 1
                    total += 1
                    todo[sp] = w
                    sp += 1
        return total
    finally:
        free(o); free(t); free(seen); free(todo)
