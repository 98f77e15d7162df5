"""The ten acceptance checks, one test per criterion, in order.

Each check wraps its work in `criterion(...)`, which prints one PASS/FAIL
line with the elapsed time (visible under -s) and enforces the wall-clock
budget.  Expensive shared objects come from the session fixtures, so a full
run builds the invariant chain exactly once; checks that demand a fresh,
uncached construction build their own.
"""

import json
import random
import time
from contextlib import contextmanager
from fractions import Fraction

from rootwald import gradedring as gr
from rootwald import invariants as iv
from rootwald import waldschmidt as wd
from rootwald.configs import (build_config, collinear_triples,
                              dual_plane_incidence, plane_section_geometry)
from rootwald.field import ONE, ZERO, FieldElement
from rootwald.groups import BASE_POINT, build_group
from rootwald.poly import Polynomial

from test_configs import F4_TRIPLES
from test_gradedring import TABLE2_EXTENDED, TABLE2_ROWS

SEED = 20260817
N_CASES = 200


@contextmanager
def criterion(n, label, budget):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[FAIL] criterion {n:2d}: {label} "
              f"({time.perf_counter() - t0:.1f}s)")
        raise
    dt = time.perf_counter() - t0
    ok = dt <= budget
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {n:2d}: {label} "
          f"({dt:.1f}s, budget {budget}s)")
    assert ok, f"criterion {n} blew its {budget}s budget: {dt:.1f}s"


_shared = {}


def _default_table2(gens):
    got = _shared.get("table2")
    if got is None:
        got = gr.table2_report(gens, m_max=18)
        _shared["table2"] = got
    return got


def test_criterion_01_group_orders():
    with criterion(1, "group closures, stabilizer, orbits", 60):
        h4 = build_group("H4")
        f4 = build_group("F4")
        assert h4.order == 14400
        assert f4.order == 1152
        assert h4.stabilizer(BASE_POINT).order == 120
        assert len(h4.orbit_projective(BASE_POINT)) == 60
        long_orbit = f4.orbit_projective((ONE, ONE, ZERO, ZERO))
        short_orbit = f4.orbit_projective((ONE, ZERO, ZERO, ZERO))
        assert len(long_orbit) == 12 and len(short_orbit) == 12
        keys = lambda orb: {tuple(e.triple for e in p) for p in orb}
        assert not (keys(long_orbit) & keys(short_orbit))


def test_criterion_02_invariant_construction(h4_group):
    with criterion(2, "fundamental invariants, uncached", 600):
        inv = iv.build_fundamentals(h4_group)
        for f, d, m in ((inv.f2, 2, 0), (inv.f12, 12, 2),
                        (inv.f20, 20, 4), (inv.f30, 30, 6)):
            assert h4_group.is_invariant(f)
            assert f.degree() == d
            assert iv.vanishing_order(f) == m
        assert inv.g12.coefficient((12, 0, 0, 0)) == ONE
        assert inv.f12.coefficient((2, 0, 0, 10)) == ONE
        assert inv.f20.coefficient((4, 0, 0, 16)) == ONE


def test_criterion_03_table1(chain):
    group, inv, der, stab = chain
    with criterion(3, "twelve generator classes", 60):
        report = iv.verify_table1(inv, der, stab)
        assert report.all_ok
        assert len(report.rows) == 12
        for row in report.rows:
            assert row.ok and not row.scalar.is_zero()
        assert [(r.degree, r.order) for r in report.rows] == list(
            gr.GENERATOR_BIDEGREES)


def test_criterion_04_hilbert_series(chain, gens):
    _, inv, _, _ = chain
    with criterion(4, "Hilbert series three-way agreement", 900):
        report = gr.verify_main_theorem(inv, gens, d_max=66, m_max=18,
                                        heavy_d_max=44)
        assert report.ok, report.first_mismatch
        assert report.dim_T_72 == 26
        assert report.row_sums_checked == 67
        assert report.cells_series_vs_generator_algebra > 0
        assert report.cells_series_vs_rank_oracle > 0


def test_criterion_05_table2(gens):
    with criterion(5, "degree table, rows 0..18 plus extended", 300):
        report = _default_table2(gens)
        assert {r.m: r.degrees for r in report.rows} == TABLE2_ROWS
        assert report.cross_checked_cells == 236
        for r in report.rows:
            flagged = [d for d, f in zip(r.degrees, r.generator_flags) if f]
            assert flagged == [d for d, m in gr.GENERATOR_BIDEGREES
                               if m == r.m and d in r.degrees]
        extended = gr.table2_report(gens, m_max=30, cross_check=False)
        for m, degs in TABLE2_EXTENDED.items():
            assert extended.row(m).degrees == degs


def test_criterion_06_unique_72_20(oracle, gens):
    with criterion(6, "one class in bidegree (72,20)", 300):
        uniq = gr.verify_unique_72_20(oracle, _default_table2(gens))
        assert uniq.ok
        assert uniq.kernel_dim == 1
        assert uniq.witness_matches_square
        assert uniq.conditions == 25
        assert uniq.dim_T_d == 26


def test_criterion_07_f4_geometry():
    with criterion(7, "lines, dual planes, plane section", 10):
        f4 = build_config("F4")
        assert collinear_triples(f4) == F4_TRIPLES
        inc = dual_plane_incidence(f4)
        assert len(inc.planes) == 24
        assert inc.uniform_point_count == 9
        section = plane_section_geometry()
        assert len(section.x_indices) == 6
        assert len(section.y_indices) == 3
        assert len(section.z_points) == 4
        assert len(section.sigma_lines) == 4
        assert len(section.tau_lines) == 3
        assert len(section.phi_lines) == 6
        assert section.nu_sigma == (4, 2, 0, 0)
        assert section.nu_tau == (3, 1, 2, 0)
        assert section.nu_phi == (6, 1, 2, 3)
        _shared["section"] = section


def test_criterion_08_reduction_ledger():
    section = _shared.get("section") or plane_section_geometry()
    with criterion(8, "symbolic reduction ledger", 1):
        ledger = wd.f4_reduction_ledger(section)
        assert ledger.ok and not ledger.failures()
        assert len(ledger.steps) == 17
        assert ledger.terminal == wd.nu_const(4, 1, 0, 4)


def test_criterion_09_certificates(chain, gens):
    _, _, der, _ = chain
    with criterion(9, "four certified constants", 300):
        d4 = wd.waldschmidt_certificate("D4", m_check=4)
        b4 = wd.waldschmidt_certificate("B4", m_check=4)
        f4 = wd.waldschmidt_certificate("F4", m_check=4)
        h4_config = build_config("H4")
        orders = {i: iv.vanishing_order(der.f36, h4_config.point(i), hint=11)
                  for i in range(1, 61)}
        h4 = wd.waldschmidt_certificate("H4", gens=gens, orders=orders)

        assert d4.ok and d4.value == Fraction(2)
        assert b4.ok and b4.value == Fraction(2)
        assert f4.ok and f4.value == Fraction(8, 3)
        assert h4.ok and h4.value == Fraction(18, 5)

        assert d4.upper == {"degree": 4, "multiplicity": 2,
                            "witness": "product of the four coordinate planes"}
        assert f4.upper == {"degree": 24, "multiplicity": 9,
                            "witness": "union of the 24 dual planes"}
        assert h4.upper["orders_checked"] == 60

        # the advertised negative interpolation results
        assert d4.lower["alpha_values"] == {1: "none <= 2", 2: 4,
                                            3: "none <= 6", 4: 8}
        assert b4.lower["alpha_values"] == {1: "none <= 2", 2: 4,
                                            3: "none <= 6", 4: 8}
        assert f4.lower["alpha_values"] == {1: "none <= 2", 2: "none <= 5",
                                            3: "none <= 7", 4: "none <= 10"}
        assert h4.lower["minimizer"] == [36, 10]

        for cert in (d4, b4, f4, h4):
            payload = cert.as_json_dict()
            assert payload["ok"] is True
            json.dumps(payload)  # must serialize as-is


# ---------------------------------------------------------------------------
# criterion 10: seven property suites, >= 200 randomized cases each

def _random_field_element(rng):
    return FieldElement(Fraction(rng.randint(-60, 60), rng.randint(1, 12)),
                        Fraction(rng.randint(-60, 60), rng.randint(1, 12)))


def _random_poly(rng, max_terms=4, max_exp=4):
    p = Polynomial.zero()
    for _ in range(rng.randint(1, max_terms)):
        mono = tuple(rng.randint(0, max_exp) for _ in range(4))
        p = p + Polynomial.monomial(mono, _random_field_element(rng))
    return p


def _suite_field_axioms(rng):
    for _ in range(N_CASES):
        a, b, c = (_random_field_element(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a - a).is_zero()
        if not a.is_zero():
            assert a * a.inverse() == ONE


def _suite_action_law(rng, elements):
    for _ in range(N_CASES):
        g = rng.choice(elements)
        h = rng.choice(elements)
        p = _random_poly(rng)
        assert g.act(h.act(p)) == (h * g).act(p)


def _suite_reynolds(rng, group):
    for i in range(N_CASES):
        p = _random_poly(rng, max_terms=3, max_exp=3)
        rp = group.reynolds(p)
        assert group.is_invariant(rp)
        if i % 10 == 0:
            assert group.reynolds(rp) == rp


def _suite_order_parity(rng, inv, der):
    for f in (inv.f2, inv.f12, inv.f20, inv.f30, der.f24, der.f32, der.f36,
              der.f42, der.f44, der.f54, der.f60, der.f66):
        assert iv.vanishing_order(f) % 2 == 0
    basis = [inv.f2 ** 12, inv.f2 ** 6 * inv.f12, inv.f12 * inv.f12,
             inv.f2 ** 2 * inv.f20]
    cases = 0
    while cases < N_CASES:
        combo = Polynomial.zero()
        for b in basis:
            if rng.random() < 0.5:
                combo = combo + b * FieldElement(
                    Fraction(rng.randint(-9, 9), rng.randint(1, 4)))
        if combo.is_zero():
            continue
        assert iv.vanishing_order(combo) % 2 == 0
        cases += 1


def _suite_initial_form(rng, inv, der):
    pool = [inv.f2, inv.f12, inv.f20, der.f24, inv.f30, der.f32, der.f36]
    leads = [iv.leading_form(f) for f in pool]
    for _ in range(N_CASES):
        i = rng.randrange(len(pool))
        j = rng.randrange(len(pool))
        s = FieldElement(Fraction(rng.randint(1, 9), rng.randint(1, 4)))
        h, m = iv.leading_form(pool[i] * s * pool[j])
        hi, mi = leads[i]
        hj, mj = leads[j]
        assert m == mi + mj
        assert h == hi * hj * s


def _suite_dimension_profiles(rng, oracle):
    profiles = {}
    for _ in range(N_CASES):
        d = 2 * rng.randint(1, 18)
        prof = profiles.get(d)
        if prof is None:
            prof = oracle.profile(d, 5 * d // 18 + 2)
            profiles[d] = prof
        assert prof[0] == gr.dim_T(d)
        assert all(a >= b for a, b in zip(prof, prof[1:]))
        # no invariant beats the slope of the cone, so the tail is empty
        assert prof[5 * d // 18 + 1] == 0
        m1 = rng.randint(0, len(prof) - 1)
        m2 = rng.randint(m1, len(prof) - 1)
        assert prof[m1] >= prof[m2]


def _suite_superadditivity(rng):
    alphas = {"D4": [3, 4, 7, 8], "B4": [3, 4, 7, 8]}
    for name in alphas:
        config = build_config(name)
        assert wd.alpha_symbolic_power(config, 1, 3).alpha == alphas[name][0]
        assert wd.alpha_symbolic_power(config, 2, 4).alpha == alphas[name][1]
    for _ in range(N_CASES):
        a = alphas[rng.choice(("D4", "B4"))]
        m1 = rng.randint(1, 3)
        m2 = rng.randint(1, 4 - m1)
        assert a[m1 + m2 - 1] <= a[m1 - 1] + a[m2 - 1]
        m = rng.randint(1, 3)
        assert a[m] >= a[m - 1] + 1
        assert a[m - 1] >= 2 * m


def test_criterion_10_property_suites(chain, oracle, f4_group):
    _, inv, der, _ = chain
    rng = random.Random(SEED)
    with criterion(10, "seven property suites, 200 cases each", 300):
        _suite_field_axioms(rng)
        _suite_action_law(rng, f4_group.elements)
        _suite_reynolds(rng, f4_group)
        _suite_order_parity(rng, inv, der)
        _suite_initial_form(rng, inv, der)
        _suite_dimension_profiles(rng, oracle)
        _suite_superadditivity(rng)
