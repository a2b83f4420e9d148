"""
Открытое разложение на уши.

Основной путь (шаги ParRuntime):
1) остовное дерево: корень s, ребро (s, t) — принудительное ребро дерева,
   остальное — BFS графа G − s от t (родитель выбирается min-combine)
2) lca концов каждого недеревного ребра двоичными подъёмами
3) метка недеревного ребра = (depth(lca), id); метка деревянного ребра
   (p(v), v) = минимум меток недеревных рёбер с концом в поддереве v
   (эйлеров обход дерева и разреженная таблица минимумов)
4) ухо = недеревное ребро + деревянные рёбра с той же меткой; уши
   упорядочены по метке, позиции в ухе — list_rank цепочек

Если ухо (кроме первого) вышло замкнутым, используется последовательное
разложение на цепи по DFS (chain_decomposition).
"""

from __future__ import annotations

from typing import Dict, List, Optional, Set, Tuple

from core.errors import InvalidEarDecomposition, MissingStEdge, NotTwoConnected
from core.par_runtime import TERMINATOR, ParRuntime, WritePolicy, ceil_log2
from modules.graph.model import Multigraph
from modules.stnumber.model import Ear, EarDecomposition


Label = Tuple[int, int]


def find_st_edge(g: Multigraph, s: int, t: int) -> int:
    """
    Ребро (s, t) с наименьшим id.

    Raises:
        MissingStEdge: s == t, вершины вне графа или ребра нет
    """
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise MissingStEdge(f"poles ({s},{t}) out of range 0..{g.n - 1}", s=s, t=t)
    if s == t:
        raise MissingStEdge(f"s and t must differ, got {s}", s=s, t=t)
    for e, (u, v) in enumerate(g.edges):
        if (u == s and v == t) or (u == t and v == s):
            return e
    raise MissingStEdge(f"edge ({g.label(s)},{g.label(t)}) is missing", s=s, t=t)


def _spanning_tree(
    g: Multigraph, s: int, t: int, e_st: int, par: ParRuntime
) -> Tuple[List[int], List[int], List[int]]:
    """
    (parent, parent_edge, depth); parent[s] = s.

    Один раунд на слой BFS: раундов столько, каков эксцентриситет t в G−s.
    """
    n = g.n
    edges = g.edges
    parent = [-1] * n
    parent_edge = [-1] * n
    depth = [-1] * n
    parent[s], depth[s] = s, 0
    parent[t], parent_edge[t], depth[t] = s, e_st, 1

    frontier = [False] * n
    frontier[t] = True
    level = 1
    while True:
        claims: Dict[int, Tuple[int, int]] = {}
        fr, dep = frontier, depth

        def propose(e: int) -> List[Tuple[int, Tuple[int, int]]]:
            u, v = edges[e]
            out = []
            if fr[u] and dep[v] < 0:
                out.append((v, (e, u)))
            if fr[v] and dep[u] < 0:
                out.append((u, (e, v)))
            return out

        par.par_write(len(edges), propose, claims, WritePolicy.MIN_COMBINE, name="bfs_claim")
        if not claims:
            break
        level += 1
        frontier = [False] * n
        for v, (e, p) in claims.items():
            parent[v], parent_edge[v], depth[v] = p, e, level
            frontier[v] = True

    unreached = [g.label(v) for v in range(n) if depth[v] < 0]
    if unreached:
        raise NotTwoConnected(f"vertices {unreached[:10]} unreachable from t without s", unreached=len(unreached))
    return parent, parent_edge, depth


def _lca_batch(
    pairs: List[Tuple[int, int]], parent: List[int], depth: List[int], par: ParRuntime
) -> List[int]:
    """lca всех пар в lock-step: таблица подъёмов, выравнивание глубин, общий подъём."""
    n = len(parent)
    levels = ceil_log2(n) + 1
    up: List[List[int]] = [list(parent)]
    for _ in range(1, levels):
        prev = up[-1]
        up.append(par.par_map(n, lambda v, prev=prev: prev[prev[v]], name="lca_table"))

    xs = [x if depth[x] >= depth[y] else y for x, y in pairs]
    ys = [y if depth[x] >= depth[y] else x for x, y in pairs]
    k_pairs = len(pairs)
    for k in reversed(range(levels)):
        table, step, cur_x, cur_y = up[k], 1 << k, xs, ys
        xs = par.par_map(
            k_pairs,
            lambda i, table=table, step=step, cur_x=cur_x, cur_y=cur_y: table[cur_x[i]]
            if depth[cur_x[i]] - step >= depth[cur_y[i]]
            else cur_x[i],
            name="lca_align",
        )
    for k in reversed(range(levels)):
        table, cur_x, cur_y = up[k], xs, ys
        lifted = par.par_map(
            k_pairs,
            lambda i, table=table, cur_x=cur_x, cur_y=cur_y: (table[cur_x[i]], table[cur_y[i]])
            if cur_x[i] != cur_y[i] and table[cur_x[i]] != table[cur_y[i]]
            else (cur_x[i], cur_y[i]),
            name="lca_lift",
        )
        xs = [p[0] for p in lifted]
        ys = [p[1] for p in lifted]
    return par.par_map(k_pairs, lambda i: xs[i] if xs[i] == ys[i] else up[0][xs[i]], name="lca_result")


def _subtree_min(
    g: Multigraph,
    root: int,
    parent: List[int],
    parent_edge: List[int],
    values: List[Label],
    infinity: Label,
    par: ParRuntime,
) -> List[Label]:
    """
    Минимум values по поддереву каждой вершины.

    Эйлеров обход по слотам смежности (enter v, слоты v, exit v) ранжируется
    одним list_rank; поддерево — отрезок обхода, минимум на отрезке берётся
    из разреженной таблицы. Раундов O(log n) при любой глубине дерева.
    """
    n = g.n
    adj = g.adjacency
    degree = [len(adj[v]) for v in range(n)]
    offsets, slots = par.prefix_sum(degree, name="tour_offsets")
    size = 2 * n + slots

    def enter(v: int) -> int:
        return v

    def leave(v: int) -> int:
        return n + v

    def slot(v: int, i: int) -> int:
        return 2 * n + offsets[v] + i

    def after(v: int, i: int) -> int:
        return slot(v, i + 1) if i + 1 < degree[v] else leave(v)

    child_slot: List[Tuple[int, int]] = [(-1, -1)] * n

    def claim(v: int) -> List[Tuple[int, Tuple[int, int]]]:
        return [
            (w, (v, i)) for i, (w, e) in enumerate(adj[v]) if w != root and parent_edge[w] == e and parent[w] == v
        ]

    par.par_write(n, claim, child_slot, name="tour_children")

    succ = [TERMINATOR] * size

    def links(v: int) -> List[Tuple[int, int]]:
        writes = [(enter(v), slot(v, 0) if degree[v] else leave(v))]
        for i, (w, e) in enumerate(adj[v]):
            writes.append((slot(v, i), enter(w) if child_slot[w] == (v, i) else after(v, i)))
        if v != root:
            p, i = child_slot[v]
            writes.append((leave(v), after(p, i)))
        return writes

    par.par_write(n, links, succ, name="tour_links")
    rank = par.list_rank(succ, name="tour_rank")

    table = [infinity] * size
    par.par_write(n, lambda v: [(size - 1 - rank[enter(v)], values[v])], table, name="tour_values")
    tables = [table]
    span = 1
    while 2 * span <= size:
        prev, half = tables[-1], span
        tables.append(
            par.par_map(
                size,
                lambda i, prev=prev, half=half: min(prev[i], prev[i + half]) if i + half < size else prev[i],
                name="tour_sparse",
            )
        )
        span *= 2

    def query(v: int) -> Label:
        lo, hi = size - 1 - rank[enter(v)], size - 1 - rank[leave(v)]
        k = (hi - lo + 1).bit_length() - 1
        return min(tables[k][lo], tables[k][hi - (1 << k) + 1])

    return par.par_map(n, query, name="subtree_min")


def tree_ear_decomposition(g: Multigraph, s: int, t: int, par: ParRuntime) -> EarDecomposition:
    """
    Разложение на уши по меткам остовного дерева (без проверки открытости).

    Raises:
        MissingStEdge, NotTwoConnected (несвязность, мост)
    """
    e_st = find_st_edge(g, s, t)
    n, edges = g.n, g.edges
    parent, parent_edge, depth = _spanning_tree(g, s, t, e_st, par)

    is_tree = [False] * len(edges)
    for v in range(n):
        if parent_edge[v] >= 0:
            is_tree[parent_edge[v]] = True
    non_tree = [e for e in range(len(edges)) if not is_tree[e]]
    if not non_tree:
        raise NotTwoConnected("graph is a tree: no cycle through (s, t)")

    lca = _lca_batch([edges[e] for e in non_tree], parent, depth, par)
    labels: List[Label] = par.par_map(len(non_tree), lambda i: (depth[lca[i]], non_tree[i]), name="ear_label")

    infinity: Label = (n + 1, len(edges))
    low: List[Label] = [infinity] * n

    def touch(i: int) -> List[Tuple[int, Label]]:
        x, y = edges[non_tree[i]]
        return [(x, labels[i]), (y, labels[i])]

    par.par_write(len(non_tree), touch, low, WritePolicy.MIN_COMBINE, name="low_init")

    low = _subtree_min(g, s, parent, parent_edge, low, infinity, par)

    for v in range(n):
        if v != s and low[v][0] >= depth[v]:
            raise NotTwoConnected(
                f"tree edge ({g.label(parent[v])},{g.label(v)}) is a bridge", vertex=g.label(v)
            )

    order = par.par_sort(labels, name="ear_order")
    ear_of_label: Dict[Label, int] = {labels[idx]: k for k, idx in enumerate(order)}

    # цепочки: v -> parent(v), пока метка деревянного ребра не меняется
    def chain_succ(v: int) -> int:
        if v == s:
            return TERMINATOR
        p = parent[v]
        return p if p != s and low[p] == low[v] else TERMINATOR

    succ = par.par_map(n, chain_succ, name="chain_succ")
    rank = par.list_rank(succ, name="chain_rank")
    top = par.par_map(n, lambda v: v if succ[v] == TERMINATOR else succ[v], name="chain_top")
    for _ in range(ceil_log2(n)):
        cur = top
        top = par.par_map(n, lambda v, cur=cur: cur[cur[v]], name="chain_top")

    k_ears = len(non_tree)
    ends: List[Tuple[int, int, int, int]] = []  # (x, y, kx, ky) по ушам
    for k, idx in enumerate(order):
        x, y = edges[non_tree[idx]]
        label = labels[idx]
        kx = rank[x] + 1 if x != s and low[x] == label else 0
        ky = rank[y] + 1 if y != s and low[y] == label else 0
        ends.append((x, y, kx, ky))
    lengths = [kx + ky + 2 for _, _, kx, ky in ends]
    offsets, total = par.prefix_sum(lengths, name="ear_offsets")

    path: List[int] = [0] * total
    path_edges: Dict[int, int] = {}

    def place_vertex(v: int) -> List[Tuple[int, int]]:
        if v == s:
            return []
        k = ear_of_label[low[v]]
        x, y, kx, ky = ends[k]
        if kx > 0 and top[x] == top[v]:
            pos = rank[v] + 1
        else:
            pos = kx + 1 + (ky - 1 - rank[v])
        return [(offsets[k] + pos, v)]

    par.par_write(n, place_vertex, path, name="ear_place")

    def place_ends(k: int) -> List[Tuple[int, int]]:
        x, y, kx, ky = ends[k]
        a = x if kx == 0 else parent[top[x]]
        b = y if ky == 0 else parent[top[y]]
        base = offsets[k]
        return [(base, a), (base + kx + ky + 1, b)]

    par.par_write(k_ears, place_ends, path, name="ear_ends")

    def place_edges(k: int) -> List[Tuple[int, int]]:
        x, y, kx, ky = ends[k]
        base = offsets[k]
        writes = [(base + kx, non_tree[order[k]])]
        for j in range(kx):
            writes.append((base + j, parent_edge[path[base + j + 1]]))
        for j in range(kx + 1, kx + ky + 1):
            writes.append((base + j, parent_edge[path[base + j]]))
        return writes

    par.par_write(k_ears, place_edges, path_edges, name="ear_edges")

    ears: List[Ear] = []
    for k in range(k_ears):
        base, length = offsets[k], lengths[k]
        vertices = tuple(path[base : base + length])
        ear_edges = tuple(path_edges[base + j] for j in range(length - 1))
        if k == 0:
            # первое ухо: путь s ... t; замыкающее ребро (s, t) отделяется
            if vertices[-1] == s and ear_edges[-1] == e_st:
                vertices, ear_edges = vertices[:-1], ear_edges[:-1]
            elif vertices[0] == s and ear_edges[0] == e_st:
                vertices, ear_edges = tuple(reversed(vertices[1:])), tuple(reversed(ear_edges[1:]))
            ears.append(Ear(vertices=vertices, edges=ear_edges, closing_edge=e_st))
        else:
            ears.append(Ear(vertices=vertices, edges=ear_edges))
    return EarDecomposition(ears=tuple(ears), s=s, t=t, method="tree")


def chain_decomposition(g: Multigraph, s: int, t: int) -> EarDecomposition:
    """
    Последовательное разложение на цепи по DFS (s — корень, t — первый ребёнок).

    Цепи из обратных рёбер обрабатываются в прямом порядке DFS; первая цепь —
    цикл через (s, t), остальные должны быть открытыми путями.

    Raises:
        MissingStEdge, NotTwoConnected
    """
    e_st = find_st_edge(g, s, t)
    n = g.n
    adj = g.adjacency
    pre = [-1] * n
    parent = [-1] * n
    parent_edge = [-1] * n
    order: List[int] = []
    back_from: List[List[Tuple[int, int]]] = [[] for _ in range(n)]

    def enter(v: int, p: int, e: int) -> None:
        pre[v] = len(order)
        order.append(v)
        parent[v], parent_edge[v] = p, e

    enter(s, -1, -1)
    enter(t, s, e_st)
    stack: List[Tuple[int, int]] = [(s, 0), (t, 0)]
    while stack:
        v, i = stack[-1]
        if i >= len(adj[v]):
            stack.pop()
            continue
        stack[-1] = (v, i + 1)
        w, e = adj[v][i]
        if e == parent_edge[v] or e == e_st:
            continue
        if pre[w] < 0:
            enter(w, v, e)
            stack.append((w, 0))
        elif pre[w] < pre[v]:
            back_from[w].append((pre[v], e))

    if len(order) != n:
        missing = [g.label(v) for v in range(n) if pre[v] < 0]
        raise NotTwoConnected(f"graph is disconnected: {missing[:10]} unreachable", unreached=len(missing))

    visited = [False] * n
    covered: Set[int] = set()
    ears: List[Ear] = []
    for v in order:
        visited[v] = True
        for _, e in sorted(back_from[v]):
            a, b = g.edges[e]
            w = b if a == v else a
            vertices, chain_edges = [v, w], [e]
            cur = w
            while not visited[cur]:
                visited[cur] = True
                chain_edges.append(parent_edge[cur])
                cur = parent[cur]
                vertices.append(cur)
            covered.update(chain_edges)
            if not ears:
                if vertices[-1] != s or chain_edges[-1] != e_st:
                    raise NotTwoConnected("first chain does not close through (s, t)")
                ears.append(Ear(vertices=tuple(vertices[:-1]), edges=tuple(chain_edges[:-1]), closing_edge=e_st))
            elif vertices[-1] == v:
                raise NotTwoConnected(f"vertex {g.label(v)} is a cut vertex", vertex=g.label(v))
            else:
                ears.append(Ear(vertices=tuple(vertices), edges=tuple(chain_edges)))

    uncovered = [e for e in range(g.m) if e not in covered]
    if uncovered:
        u, v = g.edges[uncovered[0]]
        raise NotTwoConnected(f"edge ({g.label(u)},{g.label(v)}) is a bridge", edge=uncovered[0])
    return EarDecomposition(ears=tuple(ears), s=s, t=t, method="chains")


def verify_ear_decomposition(g: Multigraph, dec: EarDecomposition) -> List[str]:
    """
    Проверка инвариантов открытого разложения.

    Returns:
        список нарушений (пустой — разложение корректно)
    """
    problems: List[str] = []
    if not dec.ears:
        return ["no ears"]
    seen_edges: Set[int] = set()
    seen_vertices: Set[int] = set()
    for k, ear in enumerate(dec.ears):
        vs, es = ear.vertices, ear.edges
        if len(es) != len(vs) - 1:
            problems.append(f"ear {k}: {len(vs)} vertices but {len(es)} edges")
            continue
        for j, e in enumerate(es):
            if {vs[j], vs[j + 1]} != set(g.edges[e]) or vs[j] == vs[j + 1]:
                problems.append(f"ear {k}: edge {e} does not join {vs[j]} and {vs[j + 1]}")
        for e in ear.all_edges():
            if e in seen_edges:
                problems.append(f"ear {k}: edge {e} reused")
            seen_edges.add(e)
        if len(set(vs)) != len(vs):
            problems.append(f"ear {k}: path repeats a vertex")
        if k == 0:
            if vs[0] != dec.s or vs[-1] != dec.t:
                problems.append("first ear must run from s to t")
            if ear.closing_edge is None or set(g.edges[ear.closing_edge]) != {dec.s, dec.t}:
                problems.append("first ear must be closed by an (s, t) edge")
        else:
            a, b = ear.endpoints
            if a == b:
                problems.append(f"ear {k}: closed (endpoints coincide at {a})")
            if a not in seen_vertices or b not in seen_vertices:
                problems.append(f"ear {k}: endpoint not on an earlier ear")
            if any(v in seen_vertices for v in ear.interior):
                problems.append(f"ear {k}: interior vertex already used")
        seen_vertices.update(vs)
    if len(seen_edges) != g.m:
        problems.append(f"ears cover {len(seen_edges)} of {g.m} edges")
    if len(seen_vertices) != g.n:
        problems.append(f"ears cover {len(seen_vertices)} of {g.n} vertices")
    return problems


def open_ear_decompose(
    g: Multigraph, s: int, t: int, par: Optional[ParRuntime] = None
) -> EarDecomposition:
    """
    Открытое разложение на уши: m − n + 1 ушей, первое содержит ребро (s, t).

    Raises:
        MissingStEdge, NotTwoConnected, InvalidEarDecomposition
    """
    runtime = par or ParRuntime()
    dec = tree_ear_decomposition(g, s, t, runtime)
    if not verify_ear_decomposition(g, dec):
        return dec
    dec = chain_decomposition(g, s, t)
    problems = verify_ear_decomposition(g, dec)
    if problems:
        raise InvalidEarDecomposition("; ".join(problems[:5]), method=dec.method)
    return dec
