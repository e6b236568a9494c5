"""The subcomplex C of GC-(g#) spanned by AD_1 and S_0, and C as Cone(f)."""

from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

from ..algebra import Bigrading, F2Matrix, ModuleElement, Monomial
from ..common import NotSubcomplex, StateClass, progress
from ..complexes import ChainComplex, ChainMap, build_minus_complex, quotient_complex, subcomplex
from ..grid import GridDiagram
from ..config import Window
from ..homology import blocked_homology, homology_dimensions, induced_map_is_iso
from ..report import VerificationLog
from ..states import GradingCalculator, State, rectangle_terms
from .classify import ConnectGeometry

_CHUNK = 512


def connect_boundary(d: GridDiagram, x: State, index: dict[State, int]) -> ModuleElement:
    """
    The grid differential of x written in the ids of ``index``.

    Raises:
        NotSubcomplex: a rectangle lands on a state missing from ``index``.
    """
    terms = []
    for t in rectangle_terms(d, x):
        if t.x_columns:
            continue
        h = index.get(t.target)
        if h is None:
            raise NotSubcomplex(f"boundary of {x} reaches {t.target} outside C")
        terms.append((Monomial.from_variables(c + 1 for c in t.o_columns), h))
    return ModuleElement.from_terms(terms)


class ConnectComplex(ChainComplex):
    """
    C, generated by AD_1 followed by S_0, over the variables U_1..U_2n of g#.

    Attributes:
        geometry: Block structure of g#.
        states: Generator states in id order.
        classes: Class of each generator.
    """

    def __init__(
        self,
        geometry: ConnectGeometry,
        states: Sequence[State],
        gradings: Sequence[Bigrading],
        differential: Sequence[ModuleElement],
        name: str = "",
    ) -> None:
        size = geometry.diagram.n
        super().__init__(states, gradings, range(1, size + 1), differential, name=name or "C")
        self.geometry = geometry
        self.states: tuple[State, ...] = tuple(states)
        self.classes: tuple[StateClass, ...] = tuple(geometry.state_class(x) for x in states)

    @property
    def ad1_count(self) -> int:
        return sum(1 for cls in self.classes if cls is StateClass.AD1)

    def ids_of(self, *classes: StateClass) -> list[int]:
        wanted = set(classes)
        return [g for g, cls in enumerate(self.classes) if cls in wanted]

    def s0_ids(self) -> list[int]:
        return [g for g, cls in enumerate(self.classes) if cls.in_s0]


def build_C(
    g: GridDiagram,
    jobs: int = 1,
    show_progress: bool = False,
    log: VerificationLog | None = None,
) -> ConnectComplex:
    """
    The subcomplex C of GC-(g#), enumerated directly from its generators.

    Closure under the differential is checked on every generator while the
    boundaries are built.

    Raises:
        NotAConnectDiagram: g is not a connect output.
        NotSubcomplex: a boundary leaves C.
    """
    geometry = ConnectGeometry(g)
    states = geometry.c_states()
    index = {x: i for i, x in enumerate(states)}
    gradings = GradingCalculator(g).bigradings(states)
    chunks = [states[k : k + _CHUNK] for k in range(0, len(states), _CHUNK)]

    def run(chunk: list[State]) -> list[ModuleElement]:
        return [connect_boundary(g, x, index) for x in chunk]

    differential: list[ModuleElement] = []
    try:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for part in progress(pool.map(run, chunks), show_progress, len(chunks), "C"):
                differential.extend(part)
    except NotSubcomplex as exc:
        if log is not None:
            log.log_event("FAIL", str(exc), check="build_C", scale=g.n)
        raise
    c = ConnectComplex(geometry, states, gradings, differential, name=f"C({g.n}x{g.n})")
    if log is not None:
        log.log_event(
            "PASS",
            f"C closed under d: {c.ad1_count} AD1 + {len(c) - c.ad1_count} S0 generators",
            check="build_C",
            scale=g.n,
        )
    return c


def closure_failures(g: GridDiagram, states: Sequence[State]) -> list[State]:
    """States among ``states`` (all in C) whose boundary leaves C."""
    geometry = ConnectGeometry(g)
    bad = []
    for x in states:
        for t in rectangle_terms(g, x):
            if not t.x_columns and not geometry.state_class(t.target).in_c:
                bad.append(x)
                break
    return bad


class FMap(ChainMap):
    """f: AD -> C_0, the AD_1 -> S_0 block of the differential of C."""

    def __init__(self, c: ConnectComplex) -> None:
        ad_ids = c.ids_of(StateClass.AD1)
        s0_ids = c.s0_ids()
        self.c = c
        self.c0 = subcomplex(c, s0_ids, name="C0")
        self.ad = quotient_complex(c, s0_ids, name="AD")
        s0_new = {g: k for k, g in enumerate(s0_ids)}
        images = [
            ModuleElement.from_terms(
                (m, s0_new[h]) for m, h in c.differential[g].terms if h in s0_new
            )
            for g in ad_ids
        ]
        super().__init__(self.ad, self.c0, images, degree=Bigrading(-1, 0), name="f")
        self.ii_ids = frozenset(
            s0_new[g] for g in s0_ids if c.classes[g] is StateClass.II
        )
        n = c.geometry.n
        self.u_n = Monomial.var(n)
        self.u_n1 = Monomial.var(n + 1)

    def ii_image_matrix(self, m: int, a: int) -> F2Matrix:
        """Rows spanning (U_n + U_{n+1}) * II inside the C_0 slice at (m - 1, a)."""
        target = {t: i for i, t in enumerate(self.c0.slice_basis(m - 1, a))}
        support = []
        for mono, g in self.c0.slice_basis(m + 1, a + 1):
            if g in self.ii_ids:
                support.append([target[(mono * self.u_n, g)], target[(mono * self.u_n1, g)]])
        return F2Matrix.from_support(len(target), support)

    def image_matches_ii(self, m: int, a: int) -> bool:
        """Whether Im f equals (U_n + U_{n+1}) * II in bigrading (m - 1, a)."""
        image = self.slice_matrix(m, a)
        expected = self.ii_image_matrix(m, a)
        both = F2Matrix.from_support(
            image.cols,
            [image.row_support(r) for r in range(image.rows)]
            + [expected.row_support(r) for r in range(expected.rows)],
        )
        rank = both.rank()
        return image.rank() == rank and expected.rank() == rank

    def slice_bigradings(self, extra_levels: int = 2) -> list[Bigrading]:
        """Source bigradings covering every AD generator and II term down ``extra_levels`` levels."""
        lines = set(self.ad.lines()) | {line + 1 for line in self.c0.lines()}
        gens = [gr for gr in self.ad.gradings] + [gr.offset(-1, -1) for gr in self.c0.gradings]
        if not gens:
            return []
        hi = max(gr.alexander for gr in gens)
        lo = min(gr.alexander for gr in gens) - extra_levels
        return [
            Bigrading(line + 2 * a, a) for line in sorted(lines) for a in range(hi, lo - 1, -1)
        ]


def map_f(g: GridDiagram | ConnectComplex) -> FMap:
    """
    f: AD -> C_0, with C = Cone(f).

    Raises:
        NotAConnectDiagram: g is not a connect output.
    """
    c = g if isinstance(g, ConnectComplex) else build_C(g)
    return FMap(c)


def check_f(
    f: FMap,
    bigradings: Sequence[Bigrading] | None = None,
    log: VerificationLog | None = None,
) -> tuple[bool, bool]:
    """Injectivity of f and Im f = (U_n + U_{n+1}) * II over the given slices."""
    slices = list(bigradings) if bigradings is not None else f.slice_bigradings()
    injective = all(f.is_injective_on_slice(*gr) for gr in slices)
    image_ok = all(f.image_matches_ii(*gr) for gr in slices)
    if log is not None:
        scale = f.c.geometry.diagram.n
        log.log_event(
            "PASS" if injective else "FAIL",
            f"f injective on {len(slices)} slices",
            check="f_injective",
            scale=scale,
        )
        log.log_event(
            "PASS" if image_ok else "FAIL",
            f"Im f = (U_n + U_n+1) II on {len(slices)} slices",
            check="f_image",
            scale=scale,
        )
    return injective, image_ok


def _c_ids_in(gc: ChainComplex, c: ConnectComplex) -> list[int]:
    return [gc.index(x) for x in c.states]


def quotient_acyclicity_check(
    g: GridDiagram,
    window: Window | None = None,
    c: ConnectComplex | None = None,
    log: VerificationLog | None = None,
) -> bool:
    """
    Whether GC-(g#)/C has vanishing homology.

    The answer comes from the blocked homology of the quotient. A failure
    logs that homology, plus the full homology dimensions inside ``window``
    when one is given.

    Raises:
        NotAConnectDiagram: g is not a connect output.
        NotSubcomplex: C is not closed in GC-(g#).
    """
    c = c if c is not None else build_C(g)
    gc = build_minus_complex(g, name=f"GC-({g.n}x{g.n})")
    q = quotient_complex(gc, _c_ids_in(gc, c), name="GC-(g#)/C")
    blocked = blocked_homology(q)
    ok = not blocked
    if log is not None:
        found = ", ".join(f"{gr}: {k}" for gr, k in blocked.items())
        dims = ""
        if not ok and window is not None:
            dims = ", ".join(f"{gr}: {k}" for gr, k in homology_dimensions(q, window).items())
        log.log_event(
            "PASS" if ok else "FAIL",
            f"quotient by C ({len(q)} generators) "
            + ("is acyclic" if ok else f"has blocked homology {found}")
            + (f"; homology in window {dims}" if dims else ""),
            check="quotient_acyclic",
            scale=g.n,
        )
    return ok


def inclusion_map(c: ConnectComplex, gc: ChainComplex) -> ChainMap:
    return ChainMap(
        c, gc, [ModuleElement.generator(gc.index(x)) for x in c.states], name="C -> GC-(g#)"
    )


def inclusion_quasi_iso_check(
    g: GridDiagram,
    c: ConnectComplex | None = None,
    log: VerificationLog | None = None,
) -> bool:
    """
    Whether the inclusion of C induces an isomorphism on homology.

    Raises:
        NotAConnectDiagram: g is not a connect output.
    """
    c = c if c is not None else build_C(g)
    gc = build_minus_complex(g, name=f"GC-({g.n}x{g.n})")
    ok = induced_map_is_iso(inclusion_map(c, gc))
    if log is not None:
        log.log_event(
            "PASS" if ok else "FAIL",
            "inclusion of C is a quasi-isomorphism",
            check="inclusion_quasi_iso",
            scale=g.n,
        )
    return ok
