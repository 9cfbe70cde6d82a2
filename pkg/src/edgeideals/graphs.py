"""Finite simple graphs on 1..n and the combinatorics the ideal theorems depend on."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..n; edges stored as sorted pairs."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        for e in self.edges:
            i, j = e
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            if not (1 <= i < j <= self.n):
                raise GraphError(f"bad edge {e} for n={self.n}")

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, v: int) -> set:
        out = set()
        for i, j in self.edges:
            if i == v:
                out.add(j)
            elif j == v:
                out.add(i)
        return out

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def adjacency_masks(self) -> list:
        """adj[v] as a bitmask over vertices (bit v-1), index 0 unused."""
        adj = [0] * (self.n + 1)
        for i, j in self.edges:
            adj[i] |= 1 << (j - 1)
            adj[j] |= 1 << (i - 1)
        return adj

    def isolated_vertices(self) -> list:
        touched = {v for e in self.edges for v in e}
        return [v for v in self.vertices if v not in touched]

    def __str__(self):
        body = ", ".join(f"{i}{j}" if self.n < 10 else f"{i}-{j}" for i, j in self.sorted_edges())
        return f"G(n={self.n}; {body})"


def graph_from_edges(n: int, pairs) -> Graph:
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    edges = set()
    for pair in pairs:
        i, j = pair
        if i == j:
            raise GraphError(f"loop {pair} not allowed in a simple graph")
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphError(f"vertex out of range in {pair} (n={n})")
        edges.add((min(i, j), max(i, j)))
    return Graph(n, frozenset(edges))


# ----------------------------------------------------------------------
# constructions


def induced_subgraph(g: Graph, a) -> tuple:
    """G[A] relabelled to 1..|A| (in increasing order of A).

    Returns (graph, relabel) where relabel maps old vertex -> new vertex.
    """
    verts = sorted(set(a))
    for v in verts:
        if not 1 <= v <= g.n:
            raise GraphError(f"vertex {v} outside 1..{g.n}")
    relabel = {v: k for k, v in enumerate(verts, start=1)}
    edges = frozenset(
        (relabel[i], relabel[j]) for i, j in g.edges if i in relabel and j in relabel
    )
    return Graph(len(verts), edges), relabel


def delete_edge(g: Graph, e) -> Graph:
    i, j = e
    key = (min(i, j), max(i, j))
    if key not in g.edges:
        raise GraphError(f"{e} is not an edge")
    return Graph(g.n, g.edges - {key})


def delete_vertex(g: Graph, v: int) -> tuple:
    if not 1 <= v <= g.n:
        raise GraphError(f"vertex {v} outside 1..{g.n}")
    return induced_subgraph(g, [u for u in g.vertices if u != v])


def add_edges(g: Graph, pairs) -> Graph:
    return graph_from_edges(g.n, list(g.edges) + list(pairs))


def neighborhood_completion(g: Graph, target) -> Graph:
    """G_v for a vertex, or G_e for a non-edge e = (u, v)."""
    if isinstance(target, int):
        if not 1 <= target <= g.n:
            raise GraphError(f"vertex {target} outside 1..{g.n}")
        hoods = [g.neighbors(target)]
    else:
        u, v = target
        if g.has_edge(u, v):
            raise GraphError(f"{target} is an edge; completion is defined for non-edges only")
        hoods = [g.neighbors(u), g.neighbors(v)]
    new = [pair for hood in hoods for pair in combinations(sorted(hood), 2)]
    return add_edges(g, new)


def relabel(g: Graph, perm: dict) -> Graph:
    """Apply a vertex bijection old -> new."""
    return graph_from_edges(g.n, [(perm[i], perm[j]) for i, j in g.edges])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges += [(i + offset, j + offset) for i, j in h.edges]
        offset += h.n
    return graph_from_edges(offset, edges)


# ----------------------------------------------------------------------
# named families


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, combinations(range(1, n + 1), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return graph_from_edges(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def claw_graph() -> Graph:
    """K_{1,3} centred at vertex 1."""
    return graph_from_edges(4, [(1, 2), (1, 3), (1, 4)])


def diamond_graph() -> Graph:
    return graph_from_edges(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])


def triangle_with_pendant() -> Graph:
    return graph_from_edges(4, [(1, 2), (1, 3), (2, 3), (3, 4)])


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


FAMILIES = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "complete_bipartite": complete_bipartite_graph,
    "claw": claw_graph,
    "diamond": diamond_graph,
    "paw": triangle_with_pendant,
    "empty": empty_graph,
}


def named_graph(spec: str) -> Graph:
    """Parse 'cycle:5', 'complete_bipartite:2,3', 'claw', ...

    Several families may be joined with '+' for a disjoint union,
    e.g. 'cycle:3+path:3'.
    """
    if "+" in spec:
        return disjoint_union(*(named_graph(part) for part in spec.split("+")))
    name, _, args = spec.partition(":")
    if name not in FAMILIES:
        raise GraphError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}")
    params = [int(a) for a in args.split(",")] if args else []
    try:
        return FAMILIES[name](*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {name}: {args!r}") from exc


# ----------------------------------------------------------------------
# structure


def components(g: Graph) -> list:
    adj = g.adjacency_masks()
    seen = 0
    out = []
    for v in g.vertices:
        if seen >> (v - 1) & 1:
            continue
        comp = 1 << (v - 1)
        frontier = comp
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                nxt |= adj[low.bit_length()]
                rest ^= low
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        out.append(sorted(u for u in g.vertices if comp >> (u - 1) & 1))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def bipartition(g: Graph) -> Optional[tuple]:
    """2-colouring by BFS; V1 holds the smallest vertex of each component."""
    side = {}
    for comp in components(g):
        root = comp[0]
        side[root] = 0
        queue = [root]
        for v in queue:
            for u in g.neighbors(v):
                if u not in side:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    v1 = frozenset(v for v, s in side.items() if s == 0)
    v2 = frozenset(v for v, s in side.items() if s == 1)
    return v1, v2


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def _induced_edge_count(adj, mask) -> int:
    total = 0
    rest = mask
    while rest:
        low = rest & -rest
        total += bin(adj[low.bit_length()] & mask).count("1")
        rest ^= low
    return total // 2


def _degrees_in(adj, mask) -> list:
    out = []
    rest = mask
    while rest:
        low = rest & -rest
        out.append(bin(adj[low.bit_length()] & mask).count("1"))
        rest ^= low
    return out


def _mask_connected(adj, mask) -> bool:
    if not mask:
        return True
    low = mask & -mask
    comp = low
    frontier = low
    while frontier:
        nxt = 0
        rest = frontier
        while rest:
            b = rest & -rest
            nxt |= adj[b.bit_length()]
            rest ^= b
        nxt &= mask
        frontier = nxt & ~comp
        comp |= nxt
    return comp == mask


def longest_induced_path_length(g: Graph) -> int:
    """Number of edges of a longest induced path (brute force over subsets)."""
    adj = g.adjacency_masks()
    best = 0
    for mask in range(1, 1 << g.n):
        k = bin(mask).count("1")
        if k - 1 <= best:
            continue
        if _induced_edge_count(adj, mask) != k - 1:
            continue
        if max(_degrees_in(adj, mask)) > 2 or not _mask_connected(adj, mask):
            continue
        best = k - 1
    return best


def longest_induced_odd_cycle_length(g: Graph) -> int:
    """Vertex count of a longest induced odd cycle, 0 if there is none."""
    adj = g.adjacency_masks()
    best = 0
    for mask in range(1, 1 << g.n):
        k = bin(mask).count("1")
        if k < 3 or k % 2 == 0 or k <= best:
            continue
        degs = _degrees_in(adj, mask)
        if all(d == 2 for d in degs) and _mask_connected(adj, mask):
            best = k
    return best


def has_odd_closed_walk(g: Graph) -> bool:
    """Parity-lifted reachability: some v reaches itself by an odd walk."""
    for v in g.vertices:
        seen = {(v, 0)}
        stack = [(v, 0)]
        while stack:
            u, parity = stack.pop()
            for w in g.neighbors(u):
                state = (w, parity ^ 1)
                if state == (v, 1):
                    return True
                if state not in seen:
                    seen.add(state)
                    stack.append(state)
    return False


def girth(g: Graph) -> int:
    """Length of a shortest cycle, 0 for forests."""
    best = 0
    for root in g.vertices:
        dist = {root: 0}
        parent = {root: None}
        queue = [root]
        for v in queue:
            for u in g.neighbors(v):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    length = dist[u] + dist[v] + 1
                    if best == 0 or length < best:
                        best = length
    return best


def _articulation_and_blocks(g: Graph):
    """Tarjan's biconnected components; isolated vertices form their own block."""
    index = {}
    low = {}
    cuts = set()
    blocks = []
    counter = [0]
    edge_stack = []

    def dfs(v, parent):
        index[v] = low[v] = counter[0]
        counter[0] += 1
        children = 0
        for u in sorted(g.neighbors(v)):
            if u == parent:
                continue
            if u not in index:
                edge_stack.append((v, u))
                children += 1
                dfs(u, v)
                low[v] = min(low[v], low[u])
                if (parent is None and children > 1) or (parent is not None and low[u] >= index[v]):
                    cuts.add(v)
                if low[u] >= index[v]:
                    block = set()
                    while True:
                        a, b = edge_stack.pop()
                        block.update((a, b))
                        if (a, b) == (v, u):
                            break
                    blocks.append(frozenset(block))
            elif index[u] < index[v]:
                edge_stack.append((v, u))
                low[v] = min(low[v], index[u])

    for v in g.vertices:
        if v not in index:
            dfs(v, None)
            if not g.neighbors(v):
                blocks.append(frozenset([v]))
    return cuts, blocks


def cut_vertices(g: Graph) -> set:
    return _articulation_and_blocks(g)[0]


def blocks(g: Graph) -> list:
    return _articulation_and_blocks(g)[1]


def is_clique(g: Graph, verts) -> bool:
    return all(g.has_edge(i, j) for i, j in combinations(sorted(verts), 2))


def maximal_cliques(g: Graph) -> list:
    """Bron-Kerbosch with pivoting."""
    nbrs = {v: g.neighbors(v) for v in g.vertices}
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(nbrs[u] & p))
        for v in sorted(p - nbrs[pivot]):
            expand(r | {v}, p & nbrs[v], x & nbrs[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(g.vertices), set())
    return out


def free_vertices(g: Graph) -> set:
    count = {v: 0 for v in g.vertices}
    for clique in maximal_cliques(g):
        for v in clique:
            count[v] += 1
    return {v for v, c in count.items() if c == 1}


def is_chordal(g: Graph) -> bool:
    """Maximum cardinality search, then check the perfect elimination ordering."""
    weight = {v: 0 for v in g.vertices}
    order = []
    remaining = set(g.vertices)
    while remaining:
        v = max(sorted(remaining), key=lambda u: weight[u])
        order.append(v)
        remaining.discard(v)
        for u in g.neighbors(v):
            if u in remaining:
                weight[u] += 1
    # reverse of an MCS order is a PEO iff the graph is chordal
    position = {v: k for k, v in enumerate(order)}
    for v in order:
        earlier = [u for u in g.neighbors(v) if position[u] < position[v]]
        if not earlier:
            continue
        parent = max(earlier, key=lambda u: position[u])
        if any(u != parent and not g.has_edge(u, parent) for u in earlier):
            return False
    return True


@dataclass(frozen=True)
class Classification:
    is_connected: bool
    components: tuple
    is_bipartite: bool
    bipartition: Optional[tuple]
    is_complete: bool
    is_complete_bipartite: bool
    is_path: bool
    is_cycle: bool
    is_tree: bool
    is_unicyclic: bool
    girth: int
    is_claw: bool
    is_diamond: bool
    is_chordal: bool
    is_block_graph: bool
    cut_vertices: frozenset
    free_vertices: frozenset
    max_degree: int


def classify(g: Graph) -> Classification:
    comps = components(g)
    connected = len(comps) <= 1
    parts = bipartition(g)
    degrees = [g.degree(v) for v in g.vertices]
    m = len(g.edges)
    max_deg = max(degrees, default=0)
    cyclomatic = m - g.n + len(comps)
    complete = m == g.n * (g.n - 1) // 2
    complete_bip = (
        connected
        and parts is not None
        and g.n >= 2
        and m == len(parts[0]) * len(parts[1])
    )
    tree = connected and m == g.n - 1
    cuts, blks = _articulation_and_blocks(g)
    return Classification(
        is_connected=connected,
        components=tuple(tuple(c) for c in comps),
        is_bipartite=parts is not None,
        bipartition=parts,
        is_complete=complete,
        is_complete_bipartite=complete_bip,
        is_path=tree and max_deg <= 2,
        is_cycle=connected and g.n >= 3 and all(d == 2 for d in degrees),
        is_tree=tree,
        is_unicyclic=cyclomatic == 1,
        girth=girth(g),
        is_claw=g.n == 4 and m == 3 and max_deg == 3,
        is_diamond=g.n == 4 and m == 5,
        is_chordal=is_chordal(g),
        is_block_graph=all(is_clique(g, b) for b in blks),
        cut_vertices=frozenset(cuts),
        free_vertices=frozenset(free_vertices(g)),
        max_degree=max_deg,
    )


def is_disjoint_union_of_odd_cycles_and_paths(g: Graph) -> bool:
    """Every component is a path (possibly a single vertex) or an odd cycle."""
    for comp in components(g):
        h, _ = induced_subgraph(g, comp)
        c = classify(h)
        if c.is_path:
            continue
        if c.is_cycle and h.n % 2 == 1:
            continue
        return False
    return True


# ----------------------------------------------------------------------
# canonical forms and enumeration


def _refine(adj, n, colors):
    """Colour refinement with label-independent colour names."""
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[u] for u in range(n) if adj[v] >> u & 1)
            sigs.append((colors[v], tuple(nb)))
        names = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [names[s] for s in sigs]
        if len(names) == len(set(colors)):
            return new
        colors = new


def _certificate(adj, n, order):
    pos = {v: k for k, v in enumerate(order)}
    bits = []
    for j in range(n):
        for i in range(j):
            bits.append(adj[order[i]] >> order[j] & 1)
    return tuple(bits), pos


def canonical_form(g: Graph) -> tuple:
    """(certificate, relabel map) via individualisation-refinement.

    The certificate is the lexicographically smallest upper-triangle adjacency
    bit string over all leaves of the search tree; equal certificates mean
    isomorphic graphs.
    """
    n = g.n
    adj = [0] * n
    for i, j in g.edges:
        adj[i - 1] |= 1 << (j - 1)
        adj[j - 1] |= 1 << (i - 1)
    best = [None, None]

    def search(colors):
        colors = _refine(adj, n, colors)
        if len(set(colors)) == n:
            order = sorted(range(n), key=lambda v: colors[v])
            cert, pos = _certificate(adj, n, order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, pos
            return
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        for v in range(n):
            if colors[v] == target:
                split = [2 * c + 1 for c in colors]
                split[v] = 2 * target
                search(split)

    if n == 0:
        return (0, ()), {}
    search([0] * n)
    mapping = {v + 1: p + 1 for v, p in best[1].items()}
    return (n, best[0]), mapping


def canonical_graph(g: Graph) -> Graph:
    _, mapping = canonical_form(g)
    return relabel(g, mapping)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and len(g.edges) == len(h.edges) and canonical_form(g)[0] == canonical_form(h)[0]


def _all_labeled(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


def _nonisomorphic(n: int) -> list:
    """Canonical representatives, grown one vertex at a time."""
    level = {canonical_form(Graph(1))[0]: Graph(1)} if n >= 1 else {}
    for k in range(2, n + 1):
        nxt = {}
        for h in level.values():
            for mask in range(1 << (k - 1)):
                extra = [(v, k) for v in range(1, k) if mask >> (v - 1) & 1]
                cand = Graph(k, h.edges | frozenset(extra))
                cert, mapping = canonical_form(cand)
                if cert not in nxt:
                    nxt[cert] = relabel(cand, mapping)
        level = nxt
    return [level[c] for c in sorted(level, key=lambda c: (sum(c[1]), c))]


def enumerate_graphs(n: int, connected_only: bool = False, up_to_iso: bool = True) -> Iterator[Graph]:
    if n < 1:
        raise GraphError("n must be at least 1")
    source = _nonisomorphic(n) if up_to_iso else _all_labeled(n)
    for g in source:
        if connected_only and not is_connected(g):
            continue
        yield g


# ----------------------------------------------------------------------
# text formats


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = chr(n + 63)
    elif n < 258048:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise GraphError("graph too large for this graph6 writer")
    bits = [int(g.has_edge(i, j)) for j in range(2, n + 1) for i in range(1, j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return head + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d < 64 for d in data):
        raise GraphError(f"invalid graph6 character in {text!r}")
    if data[0] == 63:
        if len(data) < 4:
            raise GraphError("truncated graph6 header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        data = data[4:]
    else:
        n = data[0]
        data = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) != need:
        raise GraphError(f"graph6 body has {len(data)} bytes, expected {need}")
    bits = [(d >> s) & 1 for d in data for s in range(5, -1, -1)]
    edges = []
    k = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return graph_from_edges(n, edges)


def parse_edge_list(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise GraphError("edge list is empty")
    try:
        n = int(rows[0])
        pairs = []
        for line in rows[1:]:
            i, j = line.split()
            pairs.append((int(i), int(j)))
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from exc
    return graph_from_edges(n, pairs)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{i} {j}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"
