"""Search for cycles whose per-coordinate minimum priorities are all even.

Graphs are plain dicts mapping a node to a list of (letter, successor,
priorities) triples, where priorities is a tuple with one entry per
acceptance coordinate.  The search enumerates even threshold tuples in
ascending order; for each it keeps only edges at or above the thresholds,
decomposes into strongly connected components and looks for a component
containing, for every coordinate, an edge meeting the threshold exactly.
Any cycle through such edges has exactly the threshold tuple as its
coordinate minima, hence is accepting in every coordinate.
"""

from collections import deque
from itertools import product as iproduct

from .words import LassoWord


def tarjan_scc(order, succ):
    """Strongly connected components, iteratively; DFS roots follow `order`."""
    index = {}
    low = {}
    onstack = set()
    stack = []
    comps = []
    counter = 0
    for root in order:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        onstack.add(root)
        work = [(root, iter(succ(root)))]
        while work:
            v, it = work[-1]
            pushed = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    onstack.add(w)
                    work.append((w, iter(succ(w))))
                    pushed = True
                    break
                if w in onstack:
                    low[v] = min(low[v], index[w])
            if pushed:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    onstack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def _threshold_axes(graph, nodes=None):
    lo = hi = None
    for v, edges in graph.items():
        if nodes is not None and v not in nodes:
            continue
        for _c, _d, pris in edges:
            if lo is None:
                lo = list(pris)
                hi = list(pris)
            else:
                for i, p in enumerate(pris):
                    lo[i] = min(lo[i], p)
                    hi[i] = max(hi[i], p)
    if lo is None:
        return None
    axes = []
    for i in range(len(lo)):
        evens = [d for d in range(lo[i], hi[i] + 1) if d % 2 == 0]
        if not evens:
            return None
        axes.append(evens)
    return axes


def _qualifies(comp, graph, threshold):
    """Internal edges of `comp` at or above `threshold`, or None.

    Returns the edge list only when every coordinate's threshold is met
    exactly by at least one internal edge.
    """
    compset = set(comp)
    internal = []
    exact = [False] * len(threshold)
    for v in comp:
        for c, d, pris in graph.get(v, ()):
            if d in compset and all(p >= t for p, t in zip(pris, threshold)):
                internal.append((v, c, d, pris))
                for i, t in enumerate(threshold):
                    if pris[i] == t:
                        exact[i] = True
    if internal and all(exact):
        return internal
    return None


def _path_among(graph, allowed, threshold, frm, to):
    """Shortest path from `frm` to `to` using allowed nodes and edges at or
    above `threshold`; returns [(letter, pris), ...]. Assumes one exists."""
    if frm == to:
        return []
    parent = {frm: None}
    queue = deque([frm])
    while queue:
        v = queue.popleft()
        for c, d, pris in graph.get(v, ()):
            if d in allowed and d not in parent and all(p >= t for p, t in zip(pris, threshold)):
                parent[d] = (v, c, pris)
                if d == to:
                    out = []
                    while parent[d] is not None:
                        v2, c2, pr2 = parent[d]
                        out.append((c2, pr2))
                        d = v2
                    out.reverse()
                    return out
                queue.append(d)
    raise AssertionError("no path inside a strongly connected component")


def accepting_lasso_from(graph, start):
    """A lasso from `start` whose cycle is min-even in every coordinate.

    Returns a LassoWord (access path plus cycle) or None.  The access path
    runs through the full graph; only the cycle must respect thresholds.
    Deterministic: BFS in edge-list order, thresholds ascending.
    """
    order = [start]
    parent = {start: None}
    qi = 0
    while qi < len(order):
        v = order[qi]
        qi += 1
        for c, d, _p in graph.get(v, ()):
            if d not in parent:
                parent[d] = (v, c)
                order.append(d)
    reach = set(order)
    pos = {v: i for i, v in enumerate(order)}
    axes = _threshold_axes(graph, reach)
    if axes is None:
        return None

    for threshold in iproduct(*axes):
        def succ(v, t=threshold):
            return [d for c, d, pris in graph.get(v, ())
                    if d in reach and all(p >= x for p, x in zip(pris, t))]
        comps = tarjan_scc(order, succ)
        for comp in comps:
            comp = sorted(comp, key=pos.get)
            internal = _qualifies(comp, graph, threshold)
            if internal is None:
                continue
            entry = comp[0]
            prefix = []
            v = entry
            while parent[v] is not None:
                pv, c = parent[v]
                prefix.append(c)
                v = pv
            prefix.reverse()
            compset = set(comp)
            covered = [False] * len(threshold)

            def mark(pris):
                for i, t in enumerate(threshold):
                    if pris[i] == t:
                        covered[i] = True

            cycle = []
            cur = entry
            for i in range(len(threshold)):
                if covered[i]:
                    continue
                v2, c2, d2, pris2 = next(
                    e for e in internal if e[3][i] == threshold[i])
                for c3, pris3 in _path_among(graph, compset, threshold, cur, v2):
                    cycle.append(c3)
                    mark(pris3)
                if covered[i]:
                    cur = v2
                    continue
                cycle.append(c2)
                mark(pris2)
                cur = d2
            for c3, pris3 in _path_among(graph, compset, threshold, cur, entry):
                cycle.append(c3)
            return LassoWord("".join(prefix), "".join(cycle))
    return None


def nodes_reaching_accepting_cycle(graph):
    """All nodes from which some all-coordinates-even cycle is reachable."""
    axes = _threshold_axes(graph)
    if axes is None:
        return set()
    cores = set()
    order = list(graph)
    for threshold in iproduct(*axes):
        def succ(v, t=threshold):
            return [d for c, d, pris in graph.get(v, ())
                    if all(p >= x for p, x in zip(pris, t))]
        for comp in tarjan_scc(order, succ):
            if not cores.issuperset(comp) and _qualifies(comp, graph, threshold):
                cores.update(comp)
    if not cores:
        return set()
    preds = {v: [] for v in graph}
    for v, edges in graph.items():
        for _c, d, _p in edges:
            if d in preds:
                preds[d].append(v)
    out = set(cores)
    stack = list(cores)
    while stack:
        v = stack.pop()
        for u in preds.get(v, ()):
            if u not in out:
                out.add(u)
                stack.append(u)
    return out
