"""Pure-Python versions of the compiled kernels."""
from __future__ import annotations


def scc_labels(n: int, offs: list[int], tgts: list[int], removed: int) -> list[int]:
    """Iterative Tarjan over a CSR graph on 1..n. Returns comp IDs, -1 for slot 0 and ``removed``."""
    index = [-1] * (n + 1)
    low = [0] * (n + 1)
    on = [False] * (n + 1)
    comp = [-1] * (n + 1)
    stack: list[int] = []
    cstack: list[int] = []
    ptr = [0] * (n + 1)
    counter = 0
    ncomp = 0
    for root in range(1, n + 1):
        if root == removed or index[root] >= 0:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on[root] = True
        cstack.append(root)
        ptr[root] = offs[root]
        while cstack:
            v = cstack[-1]
            i = ptr[v]
            end = offs[v + 1]
            descended = False
            while i < end:
                w = tgts[i]
                i += 1
                if w == removed:
                    continue
                if index[w] < 0:
                    ptr[v] = i
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on[w] = True
                    cstack.append(w)
                    ptr[w] = offs[w]
                    descended = True
                    break
                if on[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            ptr[v] = i
            cstack.pop()
            if cstack:
                u = cstack[-1]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def count_reachable(n: int, offs: list[int], tgts: list[int], s: int, removed: int) -> int:
    """Number of vertices reachable from ``s`` avoiding ``removed``."""
    if s == removed:
        return 0
    seen = [False] * (n + 1)
    seen[s] = True
    todo = [s]
    total = 1
    while todo:
        v = todo.pop()
        for i in range(offs[v], offs[v + 1]):
            w = tgts[i]
            if not seen[w] and w != removed:
                seen[w] = True
                total += 1
                todo.append(w)
    return total
