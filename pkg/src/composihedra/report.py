"""Run reports and the verification ladder behind ``composihedra verify``."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import golden
from .complex import face_poset_composihedron, facet_product, facet_subposet, facet_trees
from .counting import facet_breakdown, vertex_count
from .formats import export_polymake, parse_polymake
from .hull import enumerate_vertices, face_lattice_geometric, poset_isomorphic
from .realization import (
    check_weights, composihedron_hrep, composihedron_vrep, facet_hyperplane, painted_point,
)
from .trees import canonicalize_domain, enumerate_binary_painted, refines

__all__ = ["Check", "RunReport", "verify"]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class RunReport:
    command: str
    params: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> Check:
        c = Check(name, bool(passed), detail)
        self.checks.append(c)
        return c

    def run(self, name: str, fn: Callable[[], tuple[bool, str]]) -> Check:
        """Record ``fn()``; an exception counts as a failure."""
        try:
            ok, detail = fn()
        except Exception as exc:  # reported, not raised: the ladder keeps going
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        return self.add(name, ok, detail)

    def text(self) -> str:
        lines = [f"composihedra {self.command} " + " ".join(f"{k}={v}" for k, v in self.params.items())]
        for k, v in self.counts.items():
            lines.append(f"  {k}: {v}")
        lines += ["  " + c.line() for c in self.checks]
        lines.append(f"  {'PASS' if self.passed else 'FAIL'} ({self.seconds:.2f}s)")
        return "\n".join(lines)


def _fmt_point(p):
    return "(" + ", ".join(str(x) for x in p) + ")"


def lemma_violations(n: int, weights: Sequence[int] | None = None) -> list[str]:
    """Pairs (binary tree, facet) breaking the bounding lemmas.

    The expected tight set of a facet is every binary tree whose domain class
    has some member refining the facet tree.
    """
    w = check_weights(weights, n)
    trees = enumerate_binary_painted(n)
    cls = {t: canonicalize_domain(t) for t in trees}
    pts = {t: painted_point(t, 0, w) for t in trees}
    bad = []
    for f in facet_trees(n):
        hp = facet_hyperplane(f, w)
        ft = f.tree
        on_facet = {cls[t] for t in trees if refines(t, ft)}
        for t in trees:
            p = pts[t]
            if not hp.satisfied(p):
                bad.append(f"{t} violates {f} ({hp})")
            elif hp.tight(p) != (cls[t] in on_facet):
                bad.append(f"{t} tight={hp.tight(p)} on {f} but refines={cls[t] in on_facet}")
    return bad


def natural_incidence_matches(n: int, weights=None) -> tuple[bool, str]:
    """Each face class, via the atoms below it, names exactly a geometric face."""
    v = composihedron_vrep(n, weights)
    h = composihedron_hrep(n, weights)
    L = face_lattice_geometric(h, v)
    geo = {frozenset(lab) for lab in L.labels}
    P = face_poset_composihedron(n)
    pos = {lab: i for i, lab in enumerate(v.labels)}
    comb = {frozenset()}
    for i in range(len(P)):
        atoms = [j for j in P.below_set(i) + [i] if P.rank[j] == 0]
        comb.add(frozenset(pos[P.labels[j]] for j in atoms))
    return geo == comb, f"{len(comb)} combinatorial vs {len(geo)} geometric faces"


def verify(n: int, weights: Sequence[int] | None = None, lattice: bool = True,
           products: bool = True) -> RunReport:
    """Run the full check ladder for CK(n) with the given leaf weights."""
    t0 = time.perf_counter()
    w = check_weights(weights, n)
    rep = RunReport("verify", {"n": n, "weights": ",".join(map(str, w))})
    v = composihedron_vrep(n, w)
    rep.counts["vertices"] = len(v)
    rep.run("vertex count", lambda: (len(v) == vertex_count(n), f"{len(v)} points, a_{n} = {vertex_count(n)}"))

    if n >= 2:
        h = composihedron_hrep(n, w)
        rep.counts["facets"] = len(h)
        total = facet_breakdown(n).total
        rep.run("facet count", lambda: (len(h) == total, f"{len(h)} hyperplanes, 2^(n-1)+n-2 = {total}"))

        def hv():
            got = enumerate_vertices(h).point_set()
            want = v.point_set()
            return got == want, f"{len(got)} vertices from H-rep, {len(want)} realized points"
        rep.run("H/V agreement", hv)

        def lemmas():
            bad = lemma_violations(n, w)
            return not bad, "all tree/facet pairs consistent" if not bad else "; ".join(bad[:3])
        rep.run("bounding lemmas", lemmas)

    if n >= 2 and lattice:
        def iso():
            L = face_lattice_geometric(h, v)
            P = face_poset_composihedron(n).with_bottom("")
            rep.counts["f-vector"] = list(L.f_vector()[1:-1])
            return poset_isomorphic(L, P) is not None, f"f-vector {L.f_vector()[1:-1]}"
        rep.run("lattice isomorphism", iso)
        rep.run("natural incidence", lambda: natural_incidence_matches(n, w))

    if n >= 2 and products:
        def prods():
            bad = [str(f) for f in facet_trees(n)
                   if poset_isomorphic(facet_subposet(n, f), facet_product(n, f)) is None]
            return not bad, f"{len(facet_trees(n))} facets" if not bad else "mismatch: " + ", ".join(bad)
        rep.run("facet products", prods)

    if all(x == 1 for x in w) and n in (3, 4):
        if n == 3:
            rep.run("reference pentagon points",
                    lambda: (v.point_set() == golden.CK3_POINTS, _fmt_point(sorted(v.points)[0]) + " ..."))
        else:
            def block():
                ours = set(parse_polymake(export_polymake(v)))
                ref = set(parse_polymake(golden.CK4_POLYMAKE))
                return ours == ref, f"{len(ours)} rows vs {len(ref)} stored"
            rep.run("reference polymake block", block)

    rep.seconds = time.perf_counter() - t0
    return rep
