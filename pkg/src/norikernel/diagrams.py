"""Finite directed multigraphs and their linear representations.

A diagram is a list of vertices (optionally carrying an (i, w) label and
an "initial" flag) and a list of edges with type tags.  A representation
assigns each vertex a dimension and each edge the matrix of a linear map
from the source space to the target space; whether that map models a
covariant or contravariant induced map is the caller's bookkeeping, the
constraint equations downstream always use the stored direction.

Vertex declaration order is canonical: it fixes basis ordering in every
product construction and in the endomorphism solver.
"""

from collections import OrderedDict

from .errors import InputError
from .fields import check_same_field
from .matrices import Matrix

EDGE_TYPES = ("plain", "I", "II", "III")


class Vertex:
    __slots__ = ("id", "label", "initial")

    def __init__(self, vid, label=None, initial=False):
        if label is not None:
            i, w = label
            if not (isinstance(i, int) and i >= 0 and isinstance(w, int)):
                raise InputError("label must be (natural, integer), got %r" % (label,))
            label = (i, w)
        object.__setattr__(self, "id", str(vid))
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "initial", bool(initial))

    def __setattr__(self, name, value):
        raise AttributeError("Vertex is immutable")

    def __repr__(self):
        return "Vertex(%r%s%s)" % (self.id,
                                   ", label=%r" % (self.label,) if self.label else "",
                                   ", initial" if self.initial else "")


class Edge:
    __slots__ = ("id", "src", "dst", "type")

    def __init__(self, eid, src, dst, etype="plain"):
        if etype not in EDGE_TYPES:
            raise InputError("edge type must be one of %r" % (EDGE_TYPES,))
        object.__setattr__(self, "id", str(eid))
        object.__setattr__(self, "src", str(src))
        object.__setattr__(self, "dst", str(dst))
        object.__setattr__(self, "type", etype)

    def __setattr__(self, name, value):
        raise AttributeError("Edge is immutable")

    def __repr__(self):
        return "Edge(%r: %s -> %s)" % (self.id, self.src, self.dst)


class Diagram:
    def __init__(self, vertices, edges=()):
        vertices = tuple(v if isinstance(v, Vertex) else Vertex(*_as_args(v))
                         for v in vertices)
        edges = tuple(e if isinstance(e, Edge) else Edge(*_as_args(e)) for e in edges)
        seen = set()
        for v in vertices:
            if v.id in seen:
                raise InputError("duplicate vertex id %r" % v.id)
            seen.add(v.id)
        eids = set()
        for e in edges:
            if e.id in eids:
                raise InputError("duplicate edge id %r" % e.id)
            eids.add(e.id)
            if e.src not in seen or e.dst not in seen:
                raise InputError("edge %r references missing vertex" % e.id)
        self.vertices = vertices
        self.edges = edges
        self._vmap = OrderedDict((v.id, v) for v in vertices)
        self._emap = OrderedDict((e.id, e) for e in edges)
        self._check_initial_flags()

    def _check_initial_flags(self):
        for comp in self.connected_components():
            flagged = [vid for vid in comp if self._vmap[vid].initial]
            if len(flagged) > 1:
                raise InputError("more than one initial vertex in a component: %r"
                                 % (flagged,))

    def vertex(self, vid):
        try:
            return self._vmap[str(vid)]
        except KeyError:
            raise InputError("unknown vertex %r" % (vid,)) from None

    def edge(self, eid):
        try:
            return self._emap[str(eid)]
        except KeyError:
            raise InputError("unknown edge %r" % (eid,)) from None

    def vertex_ids(self):
        return tuple(v.id for v in self.vertices)

    def edge_ids(self):
        return tuple(e.id for e in self.edges)

    def connected_components(self):
        """Weakly connected components, each a tuple in declaration order."""
        parent = {v.id: v.id for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            ra, rb = find(e.src), find(e.dst)
            if ra != rb:
                parent[rb] = ra
        groups = OrderedDict()
        for v in self.vertices:
            groups.setdefault(find(v.id), []).append(v.id)
        return tuple(tuple(g) for g in groups.values())

    def is_acyclic(self):
        indeg = {v.id: 0 for v in self.vertices}
        out = {v.id: [] for v in self.vertices}
        for e in self.edges:
            indeg[e.dst] += 1
            out[e.src].append(e.dst)
        queue = [vid for vid, d in indeg.items() if d == 0]
        seen = 0
        while queue:
            vid = queue.pop()
            seen += 1
            for w in out[vid]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return seen == len(self.vertices)

    def subdiagram(self, vertex_ids, edge_ids=None):
        """Subgraph on the given vertices; edges default to the induced set."""
        vset = set(str(v) for v in vertex_ids)
        missing = vset - set(self._vmap)
        if missing:
            raise InputError("unknown vertices in selector: %r" % sorted(missing))
        if edge_ids is None:
            edges = [e for e in self.edges if e.src in vset and e.dst in vset]
        else:
            edges = [self.edge(eid) for eid in edge_ids]
            for e in edges:
                if e.src not in vset or e.dst not in vset:
                    raise InputError("edge %r leaves the selected vertex set" % e.id)
        vertices = [v for v in self.vertices if v.id in vset]
        return Diagram(vertices, edges)

    def is_subdiagram_of(self, other):
        if not set(self._vmap) <= set(other._vmap):
            return False
        for e in self.edges:
            o = other._emap.get(e.id)
            if o is None or (o.src, o.dst) != (e.src, e.dst):
                return False
        return True

    def __repr__(self):
        return "Diagram(%d vertices, %d edges)" % (len(self.vertices), len(self.edges))


def _as_args(item):
    if isinstance(item, (tuple, list)):
        return item
    return (item,)


def twist(diagram, vid, n):
    """Shift the w-label of one vertex by n.  Pure relabeling: twisting by
    n then m equals twisting by n + m, and n = 0 is the identity."""
    v = diagram.vertex(vid)
    if v.label is None:
        raise InputError("vertex %r carries no label to twist" % v.id)
    i, w = v.label
    vertices = [Vertex(u.id, (i, w + n) if u.id == v.id else u.label, u.initial)
                for u in diagram.vertices]
    return Diagram(vertices, diagram.edges)


class Representation:
    """Dimensions per vertex plus a matrix per edge over a fixed field."""

    def __init__(self, diagram, field, dims, mats, check=True):
        self.diagram = diagram
        self.field = field
        self.dims = {str(k): int(v) for k, v in dims.items()}
        self.mats = {str(k): m for k, m in mats.items()}
        if check:
            problems = self.validate()
            if problems:
                raise InputError("invalid representation: " + "; ".join(problems))

    def validate(self):
        """Return every violated shape invariant (empty list means ok)."""
        problems = []
        for v in self.diagram.vertices:
            d = self.dims.get(v.id)
            if d is None or d < 0:
                problems.append("vertex %r needs a dimension >= 0" % v.id)
            elif v.initial and d != 0:
                problems.append("initial vertex %r must have dimension 0" % v.id)
        for e in self.diagram.edges:
            m = self.mats.get(e.id)
            if m is None:
                problems.append("edge %r has no matrix" % e.id)
                continue
            if m.field != self.field:
                problems.append("edge %r matrix is over the wrong field" % e.id)
            want = (self.dims.get(e.dst, -1), self.dims.get(e.src, -1))
            if (m.nrows, m.ncols) != want:
                problems.append("edge %r: matrix is %dx%d, expected %dx%d"
                                % (e.id, m.nrows, m.ncols, want[0], want[1]))
        extra = set(self.mats) - set(self.diagram.edge_ids())
        if extra:
            problems.append("matrices for unknown edges: %r" % sorted(extra))
        return problems

    def dim(self, vid):
        return self.dims[str(vid)]

    def mat(self, eid):
        return self.mats[str(eid)]

    def restrict(self, subdiagram):
        if not subdiagram.is_subdiagram_of(self.diagram):
            raise InputError("selector is not a subdiagram of the representation")
        dims = {v.id: self.dims[v.id] for v in subdiagram.vertices}
        mats = {e.id: self.mats[e.id] for e in subdiagram.edges}
        return Representation(subdiagram, self.field, dims, mats, check=False)

    def twist(self, vid, n):
        return Representation(twist(self.diagram, vid, n), self.field,
                              self.dims, self.mats, check=False)

    def __repr__(self):
        return "Representation(%r over %r)" % (self.diagram, self.field)


class PathComposite:
    """A composite of >= 1 edges with its product matrix."""

    __slots__ = ("word", "src", "dst", "matrix")

    def __init__(self, word, src, dst, matrix):
        self.word = tuple(word)
        self.src = src
        self.dst = dst
        self.matrix = matrix

    def __repr__(self):
        return "PathComposite(%s: %s -> %s)" % ("*".join(self.word), self.src, self.dst)


class PathClosure:
    """All composites of length <= max_len, plus the empty paths, for a
    representation.  Empty paths carry identity matrices.  The composite
    matrix of a word is the product of the edge matrices, last edge
    leftmost (matrices compose like functions)."""

    def __init__(self, rep, max_len):
        if max_len < 1:
            raise InputError("max_len must be >= 1")
        if not rep.diagram.is_acyclic() and max_len is None:
            raise InputError("cyclic diagram needs an explicit truncation")
        self.rep = rep
        self.max_len = max_len
        self.identities = {v.id: Matrix.identity(rep.field, rep.dims[v.id])
                           for v in rep.diagram.vertices}
        self.composites = []
        frontier = [PathComposite((e.id,), e.src, e.dst, rep.mats[e.id])
                    for e in rep.diagram.edges]
        length = 1
        while frontier and length <= max_len:
            self.composites.extend(frontier)
            nxt = []
            if length < max_len:
                for comp in frontier:
                    for e in rep.diagram.edges:
                        if e.src == comp.dst:
                            nxt.append(PathComposite(
                                comp.word + (e.id,), comp.src, e.dst,
                                rep.mats[e.id] * comp.matrix))
            frontier = nxt
            length += 1

    def as_representation(self):
        """The closure as a representation: one edge per composite."""
        edges = []
        mats = {}
        for k, comp in enumerate(self.composites):
            eid = "path%d[%s]" % (k, ",".join(comp.word))
            edges.append(Edge(eid, comp.src, comp.dst))
            mats[eid] = comp.matrix
        diagram = Diagram(self.rep.diagram.vertices, edges)
        return Representation(diagram, self.rep.field, self.rep.dims, mats,
                              check=False)


def path_closure(rep, max_len):
    return PathClosure(rep, max_len)


def _pair_id(a, b):
    return "(%s,%s)" % (a, b)


def product(rep1, rep2, flavor="tensor"):
    """Product representation on the product diagram.

    Vertices are pairs.  Edges are e x id and id x e, so that paths in
    the product are generated by moving one coordinate at a time.  The
    "tensor" flavor takes H(M) ox H(N) with Kronecker edge matrices; the
    "direct_sum" flavor takes H(M) + H(N) with block diagonal matrices.
    """
    if flavor not in ("tensor", "direct_sum"):
        raise InputError("flavor must be 'tensor' or 'direct_sum'")
    check_same_field(rep1.field, rep2.field)
    field = rep1.field
    vertices = []
    dims = {}
    for v1 in rep1.diagram.vertices:
        for v2 in rep2.diagram.vertices:
            pid = _pair_id(v1.id, v2.id)
            label = None
            if flavor == "tensor" and v1.label and v2.label:
                label = (v1.label[0] + v2.label[0], v1.label[1] + v2.label[1])
            vertices.append(Vertex(pid, label))
            if flavor == "tensor":
                dims[pid] = rep1.dims[v1.id] * rep2.dims[v2.id]
            else:
                dims[pid] = rep1.dims[v1.id] + rep2.dims[v2.id]
    edges = []
    mats = {}

    def add_edge(eid, src, dst, etype, left, right):
        edges.append(Edge(eid, src, dst, etype))
        if flavor == "tensor":
            mats[eid] = left.kronecker(right)
        else:
            mats[eid] = Matrix.block_diag(field, [left, right])

    for e in rep1.diagram.edges:
        for v2 in rep2.diagram.vertices:
            eid = _pair_id(e.id, "id:" + v2.id)
            ident = Matrix.identity(field, rep2.dims[v2.id])
            add_edge(eid, _pair_id(e.src, v2.id), _pair_id(e.dst, v2.id),
                     e.type, rep1.mats[e.id], ident)
    for v1 in rep1.diagram.vertices:
        for e in rep2.diagram.edges:
            eid = _pair_id("id:" + v1.id, e.id)
            ident = Matrix.identity(field, rep1.dims[v1.id])
            add_edge(eid, _pair_id(v1.id, e.src), _pair_id(v1.id, e.dst),
                     e.type, ident, rep2.mats[e.id])
    return Representation(Diagram(vertices, edges), field, dims, mats)


def disjoint_union(rep1, rep2):
    """Concatenated vertex and edge lists, no interaction."""
    check_same_field(rep1.field, rep2.field)
    clash = set(rep1.diagram.vertex_ids()) & set(rep2.diagram.vertex_ids())
    if clash or set(rep1.diagram.edge_ids()) & set(rep2.diagram.edge_ids()):
        raise InputError("id collision in disjoint union: %r" % sorted(clash))
    diagram = Diagram(rep1.diagram.vertices + rep2.diagram.vertices,
                      rep1.diagram.edges + rep2.diagram.edges)
    dims = dict(rep1.dims)
    dims.update(rep2.dims)
    mats = dict(rep1.mats)
    mats.update(rep2.mats)
    return Representation(diagram, rep1.field, dims, mats, check=False)
