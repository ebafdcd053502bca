"""Stable graphs: dual graphs of stable curves, with automorphisms.

Graphs are generated by closing the trivial graph under one-edge
degenerations (genus drop with a loop; vertex splitting along a new
edge), which reaches every stable graph since edge contraction undoes
both moves.  The working representation keeps legs as per-vertex counts
("unlabeled"); the labeled view required by the public enumeration is
derived by assigning marking labels up to extended automorphisms.
"""

import itertools
from functools import lru_cache


class UGraph:
    """Unlabeled-legs stable graph: genera, per-vertex leg counts and a
    sorted multiset of edges (vertex pairs a <= b; loops allowed)."""

    __slots__ = ("genera", "legcounts", "edges")

    def __init__(self, genera, legcounts, edges):
        self.genera = tuple(genera)
        self.legcounts = tuple(legcounts)
        self.edges = tuple(sorted(tuple(sorted(e)) for e in edges))

    def key(self):
        return (self.genera, self.legcounts, self.edges)

    def __eq__(self, other):
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "UGraph(g=%r, legs=%r, edges=%r)" % (
            self.genera, self.legcounts, self.edges)

    # -- basic invariants -------------------------------------------------

    def n_vertices(self):
        return len(self.genera)

    def valence(self, v):
        d = self.legcounts[v]
        for a, b in self.edges:
            if a == v:
                d += 1
            if b == v:
                d += 1
        return d

    def genus(self):
        b1 = len(self.edges) - self.n_vertices() + 1
        return sum(self.genera) + b1

    def n_markings(self):
        return sum(self.legcounts)

    def is_stable(self):
        return all(2 * self.genera[v] - 2 + self.valence(v) > 0
                   for v in range(self.n_vertices()))

    def dim(self):
        return sum(3 * self.genera[v] - 3 + self.valence(v)
                   for v in range(self.n_vertices()))

    def is_connected(self):
        k = self.n_vertices()
        seen = {0}
        frontier = [0]
        while frontier:
            v = frontier.pop()
            for a, b in self.edges:
                for w in ((b,) if a == v else ()) + ((a,) if b == v else ()):
                    if w not in seen:
                        seen.add(w)
                        frontier.append(w)
        return len(seen) == k


def _canonical(genera, legcounts, edges):
    """Relabel vertices to the lexicographically least encoding; color
    refinement keeps the permutation search tiny."""
    k = len(genera)
    edges = [tuple(sorted(e)) for e in edges]
    colors = _refine(genera, legcounts, edges, k)
    # candidate permutations: only permute within equal-color classes,
    # ordered so that colors appear sorted
    order = sorted(range(k), key=lambda v: (colors[v], v))
    classes = []
    for _, grp in itertools.groupby(order, key=lambda v: colors[v]):
        classes.append(list(grp))
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        old_order = [v for part in parts for v in part]
        relabel = {v: i for i, v in enumerate(old_order)}
        enc = (tuple(genera[v] for v in old_order),
               tuple(legcounts[v] for v in old_order),
               tuple(sorted(tuple(sorted((relabel[a], relabel[b])))
                            for a, b in edges)))
        if best is None or enc < best:
            best = enc
    return UGraph(*best)


def _refine(genera, legcounts, edges, k):
    colors = [(genera[v], legcounts[v]) for v in range(k)]
    for _ in range(k):
        new = []
        for v in range(k):
            nbr = sorted((colors[a] if b == v else colors[b],)
                         for a, b in edges if v in (a, b)
                         for _ in range(2 if a == b == v else 1))
            new.append((colors[v], tuple(nbr)))
        canon = {c: i for i, c in enumerate(sorted(set(new)))}
        new = [canon[c] for c in new]
        if new == colors:
            break
        colors = new
    return colors


def _degenerations(G):
    """All one-edge degenerations of G (canonicalized)."""
    out = set()
    k = G.n_vertices()
    for v in range(k):
        # genus drop: h -> h-1 plus a loop at v
        if G.genera[v] >= 1:
            genera = list(G.genera)
            genera[v] -= 1
            out.add(_canonical(genera, G.legcounts,
                               list(G.edges) + [(v, v)]))
        # split v into v and a new vertex w = k, joined by a new edge
        incid = []  # (edge index, side) of ends at v, loops listed once
        loops = []
        others = []
        for i, (a, b) in enumerate(G.edges):
            if a == v and b == v:
                loops.append(i)
            elif a == v:
                incid.append((i, 0))
            elif b == v:
                incid.append((i, 1))
            else:
                others.append(i)
        h = G.genera[v]
        nl = G.legcounts[v]
        for h1 in range(h + 1):
            h2 = h - h1
            for l1 in range(nl + 1):
                l2 = nl - l1
                for ends in itertools.product((0, 1), repeat=len(incid)):
                    for lps in itertools.product((0, 1, 2), repeat=len(loops)):
                        genera = list(G.genera) + [h2]
                        genera[v] = h1
                        legcounts = list(G.legcounts) + [l2]
                        legcounts[v] = l1
                        edges = [G.edges[i] for i in others]
                        for (i, side), tgt in zip(incid, ends):
                            a, b = G.edges[i]
                            other = b if side == 0 else a
                            edges.append((other, v if tgt == 0 else k))
                        for i, c in zip(loops, lps):
                            if c == 0:
                                edges.append((v, v))
                            elif c == 1:
                                edges.append((k, k))
                            else:
                                edges.append((v, k))
                        edges.append((v, k))  # the degeneration edge
                        H = UGraph(genera, legcounts, edges)
                        if H.is_stable():
                            out.add(_canonical(H.genera, H.legcounts,
                                               H.edges))
    return out


@lru_cache(maxsize=None)
def stable_ugraphs(g, n):
    """All stable graphs of genus g with n unlabeled legs (canonical,
    including the trivial one-vertex graph), by degeneration closure."""
    if 2 * g - 2 + n <= 0:
        raise ValueError("unstable (g, n) = (%d, %d)" % (g, n))
    trivial = UGraph((g,), (n,), ())
    seen = {trivial}
    frontier = [trivial]
    while frontier:
        G = frontier.pop()
        for H in _degenerations(G):
            if H not in seen:
                assert H.genus() == g and H.n_markings() == n
                assert H.dim() < 3 * g - 3 + n
                seen.add(H)
                frontier.append(H)
    return tuple(sorted(seen, key=lambda G: (G.n_vertices(), G.key())))


# ---------------------------------------------------------------------------
# automorphisms (extended: legs unlabeled, so leg slots may move freely)


def graph_automorphisms(G):
    """Automorphisms of the underlying graph ignoring leg labels (but
    preserving per-vertex leg counts): yields (vertex_perm, half_edge_map)
    where half-edges are (edge_index, side) and loops may flip.

    Per-vertex leg permutations are NOT enumerated here; they factor out
    of every use and are handled by the caller analytically.
    """
    k = G.n_vertices()
    colors = _refine(G.genera, G.legcounts, list(G.edges), k)
    classes = {}
    for v in range(k):
        classes.setdefault(colors[v], []).append(v)
    groups = {}  # unordered pair -> list of edge indices
    for i, e in enumerate(G.edges):
        groups.setdefault(e, []).append(i)
    out = []
    for parts in itertools.product(
            *(itertools.permutations(vs) for vs in classes.values())):
        perm = {}
        for vs, img in zip(classes.values(), parts):
            for v, w in zip(vs, img):
                perm[v] = w
        # the permutation must preserve the edge multiset
        mapped = {}
        ok = True
        for pair, idxs in groups.items():
            a, b = pair
            tgt = tuple(sorted((perm[a], perm[b])))
            if tgt not in groups or len(groups[tgt]) != len(idxs):
                ok = False
                break
            mapped[pair] = tgt
        if not ok:
            continue
        # choose bijections within parallel-edge groups and loop flips
        pairs = sorted(groups)
        choice_spaces = []
        for pair in pairs:
            idxs = groups[pair]
            tgts = groups[mapped[pair]]
            perms = list(itertools.permutations(tgts))
            if pair[0] == pair[1]:  # loops: each may flip
                flips = list(itertools.product((0, 1), repeat=len(idxs)))
            else:
                flips = [(0,) * len(idxs)]
            choice_spaces.append([(p, f) for p in perms for f in flips])
        for combo in itertools.product(*choice_spaces):
            hmap = {}
            for pair, (p, f) in zip(pairs, combo):
                idxs = groups[pair]
                a, b = pair
                for src, tgt, flip in zip(idxs, p, f):
                    ta, tb = G.edges[tgt]
                    if a == b:  # loop -> loop
                        if flip:
                            hmap[(src, 0)] = (tgt, 1)
                            hmap[(src, 1)] = (tgt, 0)
                        else:
                            hmap[(src, 0)] = (tgt, 0)
                            hmap[(src, 1)] = (tgt, 1)
                    else:
                        # side 0 sits at a, must map to the end at perm[a]
                        if perm[a] == ta:
                            hmap[(src, 0)] = (tgt, 0)
                            hmap[(src, 1)] = (tgt, 1)
                        else:
                            hmap[(src, 0)] = (tgt, 1)
                            hmap[(src, 1)] = (tgt, 0)
            out.append((perm, hmap))
    return out


# ---------------------------------------------------------------------------
# labeled view (public enumeration with marking labels on legs)


class StableGraph:
    """Labeled stable graph: legs carry marking labels; autSize counts
    automorphisms fixing every leg."""

    __slots__ = ("genera", "legs", "edges", "aut_size")

    def __init__(self, genera, legs, edges, aut_size):
        self.genera = tuple(genera)
        self.legs = tuple(tuple(sorted(l)) for l in legs)
        self.edges = tuple(sorted(tuple(sorted(e)) for e in edges))
        self.aut_size = aut_size

    def key(self):
        return (self.genera, self.legs, self.edges)

    def __eq__(self, other):
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "StableGraph(g=%r, legs=%r, edges=%r, aut=%d)" % (
            self.genera, self.legs, self.edges, self.aut_size)


def _labeled_canonical(genera, legs, edges):
    k = len(genera)
    legs = [tuple(sorted(l)) for l in legs]
    colors = _refine(genera, [l for l in legs], edges, k)
    order = sorted(range(k), key=lambda v: (colors[v], v))
    classes = [list(grp) for _, grp in
               itertools.groupby(order, key=lambda v: colors[v])]
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        old_order = [v for part in parts for v in part]
        relabel = {v: i for i, v in enumerate(old_order)}
        enc = (tuple(genera[v] for v in old_order),
               tuple(legs[v] for v in old_order),
               tuple(sorted(tuple(sorted((relabel[a], relabel[b])))
                            for a, b in edges)))
        if best is None or enc < best:
            best = enc
    return best


def _legfixing_aut_size(genera, legs, edges):
    """|Aut| fixing every leg: graph automorphisms whose vertex part
    fixes each leg-carrying vertex and leg assignment."""
    G = UGraph(genera, [len(l) for l in legs], edges)
    count = 0
    for perm, _hmap in graph_automorphisms(G):
        if all(perm[v] == v or (not legs[v] and not legs[perm[v]])
               for v in range(len(genera))):
            # vertex permutation may move only legless vertices; for
            # leg-fixing automorphisms leg-carrying vertices must be fixed
            if all(legs[v] == legs[perm[v]] for v in range(len(genera))):
                count += 1
    return count


@lru_cache(maxsize=None)
def stable_graphs(g, n):
    """All stable graphs of genus g with n labeled markings (up to
    isomorphism fixing the markings), including the trivial graph."""
    out = {}
    markings = list(range(1, n + 1))
    for G in stable_ugraphs(g, n):
        k = G.n_vertices()
        # distribute labels according to the leg counts, dedupe by
        # canonical form
        slots = []
        for v in range(k):
            slots.extend([v] * G.legcounts[v])
        seen = set()
        for perm in set(itertools.permutations(range(n))):
            legs = [[] for _ in range(k)]
            for pos, lab in enumerate(perm):
                legs[slots[pos]].append(markings[lab])
            enc = _labeled_canonical(G.genera, legs, list(G.edges))
            if enc in seen:
                continue
            seen.add(enc)
        for enc in seen:
            genera, legs, edges = enc
            aut = _legfixing_aut_size(genera, legs, edges)
            out[enc] = StableGraph(genera, legs, edges, aut)
    return tuple(sorted(out.values(), key=lambda G: (len(G.genera), G.key())))
