"""Colored ribbon graphs in the thickened disk and their evaluation.

A Diagram is a sliced word in the strict ribbon signature: a sequence of
horizontal slices, each a tensor list of generators (identities, cups, caps,
braidings, twists, coupons).  Boundary points are (module, orientation)
pairs; a "-" point is realized by the left dual.  Evaluation is functorial
(slices compose by matrix product) and monoidal (horizontal juxtaposition is
a Kronecker product), which is the whole content of the strictified
Reshetikhin-Turaev evaluation on disks.

Duality conventions (fixed by the zig-zag identities):
    Ev(M):      M* (x) M  -> 1      phi (x) m -> phi(m)
    Coev(M):    1 -> M (x) M*       1 -> sum e_a (x) e^a
    EvPiv(M):   M (x) M* -> 1       m (x) phi -> phi(g m)
    CoevPiv(M): 1 -> M* (x) M       1 -> sum e^a (x) g^-1 e_a

One boundary-normal convention is hard-coded ("+" realizes the module, "-"
its left dual, reading bottom to top).  If a bundle/diagram pair ever fails
only the zig-zag identities, suspect the opposite normal convention on the
data's side; the engine records that diagnosis in the error text rather
than trying to auto-resolve it.
"""

from __future__ import annotations

import json

from .cyclo import CycNum, ExactMatrix
from .errors import InadmissibleError, StructureError, TypingError
from .hopf import (HopfBundle, Rep, braiding, braiding_inverse, dual_rep,
                   hom_space, is_projective, tensor_rep, trivial_rep, twist,
                   twist_inverse)

__all__ = [
    "Point",
    "Generator",
    "Diagram",
    "SkeinVector",
    "evaluate",
    "skein_module_disk",
    "skein_eq",
    "boundary_rep",
    "diagram_to_obj",
    "diagram_from_obj",
    "load_diagram",
]

GENERATOR_KINDS = ("id", "ev", "coev", "ev_piv", "coev_piv", "braid",
                   "braid_inv", "twist", "twist_inv", "coupon")


class Point(tuple):
    """An oriented boundary point: (module name, '+' or '-')."""

    def __new__(cls, name: str, sign: str):
        if sign not in ("+", "-"):
            raise StructureError("orientation must be '+' or '-', got %r" % sign)
        return super().__new__(cls, (name, sign))

    @property
    def module_name(self):
        return self[0]

    @property
    def sign(self):
        return self[1]


def _realize(b: HopfBundle, pt: Point) -> Rep:
    rep = b.module(pt[0])
    if pt[1] == "-":
        key = ("dual", pt[0])
        if key not in b._cache:
            b._cache[key] = dual_rep(b, rep)
        return b._cache[key]
    return rep


class Generator:
    """One strand-level generator inside a slice.

    kind: one of GENERATOR_KINDS; points: the oriented points it refers to
    (one for id/ev/coev/ev_piv/coev_piv/twist/twist_inv, two for braids);
    coupons carry explicit dom/cod point lists and an intertwiner matrix.
    """

    __slots__ = ("kind", "points", "dom", "cod", "matrix")

    def __init__(self, kind, points=(), dom=None, cod=None, matrix=None):
        if kind not in GENERATOR_KINDS:
            raise StructureError("unknown generator kind %r" % kind)
        self.kind = kind
        self.points = tuple(Point(*p) for p in points)
        if kind == "coupon":
            self.dom = tuple(Point(*p) for p in (dom or ()))
            self.cod = tuple(Point(*p) for p in (cod or ()))
            if not isinstance(matrix, ExactMatrix):
                raise StructureError("coupon needs an ExactMatrix color")
            self.matrix = matrix
        else:
            self.dom, self.cod, self.matrix = None, None, None

    # -- typing ----------------------------------------------------------------

    def signature(self) -> tuple[tuple[Point, ...], tuple[Point, ...]]:
        """(domain points, codomain points)."""
        k = self.kind
        if k == "id":
            (pt,) = self.points
            return (pt,), (pt,)
        if k in ("twist", "twist_inv"):
            (pt,) = self.points
            return (pt,), (pt,)
        if k == "ev":
            (pt,) = self.points
            name = pt[0]
            return (Point(name, "-"), Point(name, "+")), ()
        if k == "ev_piv":
            (pt,) = self.points
            name = pt[0]
            return (Point(name, "+"), Point(name, "-")), ()
        if k == "coev":
            (pt,) = self.points
            name = pt[0]
            return (), (Point(name, "+"), Point(name, "-"))
        if k == "coev_piv":
            (pt,) = self.points
            name = pt[0]
            return (), (Point(name, "-"), Point(name, "+"))
        if k in ("braid", "braid_inv"):
            p1, p2 = self.points
            return (p1, p2), (p2, p1)
        return self.dom, self.cod

    def __repr__(self):
        if self.kind == "coupon":
            return "Coupon(%s -> %s)" % (list(self.dom), list(self.cod))
        return "%s%s" % (self.kind, list(self.points))


def _pairing_ev(b: HopfBundle, m: Rep) -> ExactMatrix:
    field = b.field
    out = ExactMatrix.zeros(field, 1, m.dim * m.dim)
    one = field.one()
    for a in range(m.dim):
        out.data[0][a * m.dim + a] = one
    return out


def _pairing_coev(b: HopfBundle, m: Rep) -> ExactMatrix:
    field = b.field
    out = ExactMatrix.zeros(field, m.dim * m.dim, 1)
    one = field.one()
    for a in range(m.dim):
        out.data[a * m.dim + a][0] = one
    return out


def _pairing_ev_piv(b: HopfBundle, m: Rep) -> ExactMatrix:
    field = b.field
    g = m.act(b.pivotal_elem(), field)
    out = ExactMatrix.zeros(field, 1, m.dim * m.dim)
    for a in range(m.dim):
        for c in range(m.dim):
            out.data[0][c * m.dim + a] = g.data[a][c]
    return out


def _pairing_coev_piv(b: HopfBundle, m: Rep) -> ExactMatrix:
    field = b.field
    ginv = m.act(b.pivotal_inverse(), field)
    out = ExactMatrix.zeros(field, m.dim * m.dim, 1)
    for a in range(m.dim):
        for c in range(m.dim):
            out.data[a * m.dim + c][0] = ginv.data[c][a]
    return out


def _generator_matrix(b: HopfBundle, gen: Generator) -> ExactMatrix:
    k = gen.kind
    field = b.field
    if k == "id":
        return ExactMatrix.identity(field, _realize(b, gen.points[0]).dim)
    if k == "ev":
        return _pairing_ev(b, _realize(b, Point(gen.points[0][0], "+")))
    if k == "coev":
        return _pairing_coev(b, _realize(b, Point(gen.points[0][0], "+")))
    if k == "ev_piv":
        return _pairing_ev_piv(b, _realize(b, Point(gen.points[0][0], "+")))
    if k == "coev_piv":
        return _pairing_coev_piv(b, _realize(b, Point(gen.points[0][0], "+")))
    if k == "braid":
        return braiding(b, _realize(b, gen.points[0]), _realize(b, gen.points[1]))
    if k == "braid_inv":
        return braiding_inverse(b, _realize(b, gen.points[0]),
                                _realize(b, gen.points[1]))
    if k == "twist":
        return twist(b, _realize(b, gen.points[0]))
    if k == "twist_inv":
        return twist_inverse(b, _realize(b, gen.points[0]))
    return gen.matrix


class Diagram:
    """A sliced I-colored ribbon graph in the thickened disk."""

    def __init__(self, bottom, top, slices, admissible: bool = False):
        self.bottom = tuple(Point(*p) for p in bottom)
        self.top = tuple(Point(*p) for p in top)
        self.slices = [list(sl) for sl in slices]
        self.admissible = admissible

    def check_types(self, b: HopfBundle) -> None:
        """Slice-to-slice boundary typing; raises TypingError naming the slice."""
        current = self.bottom
        for idx, sl in enumerate(self.slices):
            dom = []
            cod = []
            for gen in sl:
                gd, gc = gen.signature()
                dom.extend(gd)
                cod.extend(gc)
            if tuple(dom) != tuple(current):
                raise TypingError(idx, "expected input %s, found %s"
                                  % (list(current), dom))
            for gen in sl:
                if gen.kind == "coupon":
                    self._check_coupon(b, idx, gen)
            current = tuple(cod)
        if current != self.top:
            raise TypingError(len(self.slices),
                              "diagram output %s does not match top boundary %s"
                              % (list(current), list(self.top)))
        if self.admissible:
            for pt in set(self.bottom) | set(self.top) | {
                    p for sl in self.slices for g in sl for p in g.points}:
                if not is_projective(b, b.module(pt[0])):
                    raise InadmissibleError(
                        "admissible diagram colored by non-projective %r" % pt[0])

    def _check_coupon(self, b: HopfBundle, idx: int, gen: Generator) -> None:
        dom_rep = boundary_rep(b, gen.dom)
        cod_rep = boundary_rep(b, gen.cod)
        mat = gen.matrix
        if mat.rows != cod_rep.dim or mat.cols != dom_rep.dim:
            raise TypingError(idx, "coupon matrix is %dx%d, expected %dx%d"
                              % (mat.rows, mat.cols, cod_rep.dim, dom_rep.dim))
        for i in range(b.dim):
            if cod_rep.mats[i] * mat != mat * dom_rep.mats[i]:
                raise TypingError(idx, "coupon color is not an intertwiner")

    def __repr__(self):
        return "Diagram(%s -> %s, %d slices)" % (
            list(self.bottom), list(self.top), len(self.slices))


def boundary_rep(b: HopfBundle, points) -> Rep:
    """Tensor product of the realized boundary colors (trivial if empty)."""
    reps = [_realize(b, Point(*p)) for p in points]
    if not reps:
        return trivial_rep(b)
    out = reps[0]
    for rep in reps[1:]:
        out = tensor_rep(b, out, rep)
    return out


def evaluate(b: HopfBundle, diagram: Diagram) -> ExactMatrix:
    """The Reshetikhin-Turaev evaluation of a sliced diagram.

    Functorial in vertical stacking and monoidal in horizontal juxtaposition;
    typing errors name the offending slice.
    """
    diagram.check_types(b)
    field = b.field
    total = ExactMatrix.identity(field, boundary_rep(b, diagram.bottom).dim)
    for sl in diagram.slices:
        mat = None
        for gen in sl:
            gmat = _generator_matrix(b, gen)
            mat = gmat if mat is None else mat.kron(gmat)
        if mat is None:
            mat = ExactMatrix.identity(field, 1)
        total = mat * total
    return total


class SkeinVector:
    """A formal k-linear combination of diagrams with equal boundaries."""

    def __init__(self, terms):
        self.terms = [(c, d) for (c, d) in terms]
        if self.terms:
            b0, t0 = self.terms[0][1].bottom, self.terms[0][1].top
            for _, d in self.terms[1:]:
                if d.bottom != b0 or d.top != t0:
                    raise StructureError("skein vector mixes boundaries")

    def boundaries(self):
        if not self.terms:
            return None
        return self.terms[0][1].bottom, self.terms[0][1].top

    def evaluate(self, b: HopfBundle) -> ExactMatrix:
        if not self.terms:
            raise StructureError("empty skein vector has no boundary")
        acc = None
        for c, d in self.terms:
            mat = evaluate(b, d).scale(c)
            acc = mat if acc is None else acc + mat
        return acc


def skein_eq(b: HopfBundle, s1: SkeinVector, s2: SkeinVector) -> bool:
    """The admissible skein relation: equality after RT evaluation, exactly."""
    if s1.boundaries() != s2.boundaries():
        raise StructureError("skein vectors have different boundaries")
    return s1.evaluate(b) == s2.evaluate(b)


def skein_module_disk(b: HopfBundle, bottom, top) -> list[ExactMatrix]:
    """Basis of the relative admissible skein module of the disk.

    For the disk this is the intertwiner space between the ordered tensor
    products of the realized boundary colors.  The doubly-empty boundary is
    inadmissible: only the distinguished (non-representable) presheaf lives
    there, not an honest object.
    """
    bottom = tuple(Point(*p) for p in bottom)
    top = tuple(Point(*p) for p in top)
    if not bottom and not top:
        raise InadmissibleError("inadmissible: no I-colored boundary")
    return hom_space(b, boundary_rep(b, bottom), boundary_rep(b, top))


# ---------------------------------------------------------------------------
# Diagram file format
# ---------------------------------------------------------------------------


def _points_to_obj(points):
    return [[p[0], p[1]] for p in points]


def diagram_to_obj(b: HopfBundle, diagram: Diagram) -> dict:
    slices = []
    for sl in diagram.slices:
        row = []
        for gen in sl:
            if gen.kind == "coupon":
                basis = hom_space(b, boundary_rep(b, gen.dom),
                                  boundary_rep(b, gen.cod))
                coeffs = _coupon_coords(b, gen.matrix, basis)
                if coeffs is None:
                    raise StructureError(
                        "coupon is not in the computed hom space")
                row.append({"kind": "coupon",
                            "dom": _points_to_obj(gen.dom),
                            "cod": _points_to_obj(gen.cod),
                            "coeffs": [c.to_obj() for c in coeffs]})
            else:
                row.append({"kind": gen.kind,
                            "points": _points_to_obj(gen.points)})
        slices.append(row)
    return {"bundle_ref": b.name,
            "bottom": _points_to_obj(diagram.bottom),
            "top": _points_to_obj(diagram.top),
            "admissible": diagram.admissible,
            "slices": slices}


def _coupon_coords(b, matrix, basis):
    from .cyclo import LinearSystem
    field = b.field
    n = matrix.rows * matrix.cols
    sys = LinearSystem(field, len(basis), 1)
    rows: dict = {}
    for t, bmat in enumerate(basis):
        for r in range(bmat.rows):
            for c in range(bmat.cols):
                v = bmat.data[r][c]
                if not v.is_zero():
                    rows.setdefault((r, c), {})[t] = v
    for r in range(matrix.rows):
        for c in range(matrix.cols):
            row = rows.get((r, c), {})
            rhs = matrix.data[r][c]
            sys.add_row(row, {0: rhs} if not rhs.is_zero() else None)
    res = sys.solve()
    if not res.feasible:
        return None
    return [res.particular.data[t][0] for t in range(len(basis))]


def diagram_from_obj(b: HopfBundle, obj: dict) -> Diagram:
    try:
        slices = []
        for sl in obj["slices"]:
            row = []
            for gobj in sl:
                kind = gobj["kind"]
                if kind == "coupon":
                    dom = [Point(*p) for p in gobj["dom"]]
                    cod = [Point(*p) for p in gobj["cod"]]
                    basis = hom_space(b, boundary_rep(b, dom),
                                      boundary_rep(b, cod))
                    if "index" in gobj:
                        coeffs = [b.field.zero()] * len(basis)
                        coeffs[int(gobj["index"])] = b.field.one()
                    else:
                        coeffs = [CycNum.from_obj(c, b.field)
                                  for c in gobj["coeffs"]]
                    if len(coeffs) != len(basis):
                        raise StructureError(
                            "coupon has %d coefficients for a %d-dim hom space"
                            % (len(coeffs), len(basis)))
                    mat = ExactMatrix.zeros(b.field,
                                            basis[0].rows if basis else 1,
                                            basis[0].cols if basis else 1)
                    for t, c in enumerate(coeffs):
                        mat = mat + basis[t].scale(c)
                    row.append(Generator("coupon", dom=dom, cod=cod, matrix=mat))
                else:
                    row.append(Generator(kind, points=[Point(*p)
                                                       for p in gobj["points"]]))
            slices.append(row)
        return Diagram(bottom=[Point(*p) for p in obj["bottom"]],
                       top=[Point(*p) for p in obj["top"]],
                       slices=slices,
                       admissible=bool(obj.get("admissible", False)))
    except (KeyError, TypeError, IndexError) as exc:
        raise StructureError("malformed diagram object: %s" % exc) from exc


def load_diagram(b: HopfBundle, path) -> Diagram:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise StructureError("cannot read diagram file %s: %s" % (path, exc))
    return diagram_from_obj(b, obj)
