"""Checks for the number field, the lattices and the concrete model."""

from __future__ import annotations

import random
from fractions import Fraction

from . import model
from .exactnum import E_PI3, E_PI6, OMEGA, ONE, SQRT3, THETA, THETA_BAR, ZERO, CycElem, UNITS_E, I, real_sign
from .lattice import (
    DirectedGraph,
    GramLattice,
    direct_sum,
    gram_from_graph,
    rank_and_radical,
    real_form,
    signature,
    theta_dual_equals_self,
)
from .report import Report


def random_elem(rng: random.Random, size: int = 6) -> CycElem:
    def q():
        return Fraction(rng.randint(-size, size), rng.randint(1, size))

    return CycElem.from_parts(q(), q(), q(), q())


def verify_field(seed: int = 0, cases: int = 1000) -> Report:
    rep = Report("field", "arithmetic in Q(i, sqrt3)")
    rng = random.Random(seed)
    bad = []
    for k in range(cases):
        a, b, c = (random_elem(rng) for _ in range(3))
        ok = (a + b == b + a and a * b == b * a and (a * b) * c == a * (b * c)
              and a * (b + c) == a * b + a * c and (a * b).conj() == a.conj() * b.conj())
        if a:
            ok = ok and a * a.inverse() == ONE
        if not ok:
            bad.append(k)
    rep.check("field_axioms", not bad, {"seed": seed, "cases": cases, "failures": bad[:5]})
    rep.check("omega_cubed", OMEGA * OMEGA * OMEGA == ONE and OMEGA != ONE)
    rep.check("theta_squared", THETA * THETA == CycElem(-3) and THETA == OMEGA - OMEGA.conj())
    rep.check("e^(i pi/6) order 12", E_PI6 ** 12 == ONE and E_PI6 ** 6 == -ONE and E_PI6 * E_PI6 == E_PI3)
    rep.check("sqrt3", SQRT3 * SQRT3 == CycElem(3) and I * I == -ONE)
    units = {u for u in UNITS_E}
    closed = all((u * v) in units for u in UNITS_E for v in UNITS_E)
    rep.check("eisenstein_units", len(units) == 6 and closed)
    return rep.finish()


def alternating_twelve_gon() -> DirectedGraph:
    return DirectedGraph(12, tuple((j, j + 1) if j % 2 == 0 else ((j + 1) % 12, j) for j in range(12)))


def hyperbolic_cell() -> list[list[CycElem]]:
    return [[ZERO, THETA_BAR], [THETA, ZERO]]


def verify_lattice() -> Report:
    from .geometry import l4_vectors

    rep = Report("lattice", "Eisenstein lattices and theta-duality")
    a4 = model.a4_block_gram()
    l4 = GramLattice(a4, name="L4")
    ldm = GramLattice.from_vectors(model.lattice_LDM(), name="L_DM")
    lat = GramLattice.from_vectors(model.lattice_L().basis(), name="L")
    cell = GramLattice(hyperbolic_cell(), name="cell")
    combo = GramLattice(direct_sum(hyperbolic_cell(), a4, a4, a4), name="cell+L4^3")
    for k in (lat, ldm, l4, cell, combo):
        rep.check(f"theta_dual({k.name})", theta_dual_equals_self(k))
    rep.check("signature(L)", signature(lat.gram)[:2] == (13, 1), {"signature": signature(lat.gram)})
    rep.check("signature(L_DM)", signature(ldm.gram)[:2] == (9, 1), {"signature": signature(ldm.gram)})
    r, rad = rank_and_radical(gram_from_graph(model.incidence_graph()))
    rep.check("P2F3_graph_radical_rank_12", r == 14 and len(rad) == 12, {"rank": r, "radical": len(rad)})
    r12, rad12 = rank_and_radical(gram_from_graph(alternating_twelve_gon()))
    rep.check("alternating_12gon_nullity_2", r12 == 10 and len(rad12) == 2, {"rank": r12, "nullity": len(rad12)})
    z = real_form(l4)
    rep.check("L4_real_form_even_unimodular_rank_8", z.dim == 8 and z.is_even() and abs(z.det) == 1,
              {"dim": z.dim, "det": z.det})
    zc = real_form(cell)
    zsig = signature([[CycElem(x) for x in r] for r in zc.matrix])
    rep.check("cell_real_form_unimodular_(2,2)", abs(zc.det) == 1 and zsig[:2] == (2, 2),
              {"det": zc.det, "signature": zsig})
    n3, n6 = len(l4_vectors(3)), len(l4_vectors(6))
    rep.check("L4_norm3_count_240", n3 == 240, {"count": n3})
    rep.check("L4_norm6_count_2160", n6 == 2160, {"count": n6})
    return rep.finish()


def verify_model() -> Report:
    rep = Report("model", "roots of the projective plane, the c-basis and the collineations")
    roots = model.root_list()
    rep.check("26_roots_norm_3", len(roots) == 26 and all(model.norm(r) == 3 for r in roots))
    cb = model.cbasis()
    rep.check("cbasis_gram_displayed", cb.gram == model.displayed_cbasis_gram())
    span_l = model.lattice_L()
    gens = model.characterization_generators()
    span_c = model.LatticeSpan(gens)
    fwd = [k for k, g in enumerate(gens) if not span_l.contains(g)]
    back = [k for k, r in enumerate(roots) if not span_c.contains(r)]
    rep.check("characterization_inside_L", not fwd, {"missing": fwd})
    rep.check("L_inside_characterization", not back, {"missing": back})
    sp = model.special_points()
    rep.check("tau_negative", real_sign(model.norm(sp["tau"]).re) < 0, {"norm": model.norm(sp["tau"])})
    rep.check("c_norm_-3", model.norm(sp["c"]) == -3)
    grp = model.collineation_group()
    rep.check("collineation_group_order_11232", len(grp.elements) == 11232, {"order": len(grp.elements)})
    d24 = model.d24_stabilizer()
    rep.check("twelve_gon_stabilizer_order_24", len(d24) == 24, {"order": len(d24)})
    bad = []
    for g in grp.generators:
        r = model.lift_report(g)
        if not (r["images_ok"] and r["isometry"] and r["tau_scalar"] is not None):
            bad.append(str(g.perm[:4]))
    rep.check("generator_lifts_are_isometries_fixing_tau", not bad, {"failures": bad})
    return rep.finish()
