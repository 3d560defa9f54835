"""Acceptance gate: nine criteria, exact equality throughout.

Each test records one PASS/FAIL line; the lines are printed in the pytest
terminal summary and by running this file directly.
"""

import random
from fractions import Fraction
from math import comb

import pytest

from leonard_ekr import EkrSystem, bound_closed_form, dual_vector, realize
from leonard_ekr.ekr import (TARGETS, action_on_ekr, degenerate_check, delta, delta_product_form,
                             difference_identity_sides, wt_subspace_oracle)
from leonard_ekr.linalg import Matrix
from leonard_ekr.parameters import Inadmissible, all_d4_elements
from leonard_ekr.realization import invariant_form_space, verify_section2

import props
from conftest import FAMILY_INSTANCES, SEED, alternating, realization, system

RESULTS = {}
TEST_ARRAYS = sorted(FAMILY_INSTANCES)


def record(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULTS[n] = line
    print(line)
    assert ok, line


def test_criterion_1_johnson_bound():
    bad = []
    for v, d in ((7, 3), (9, 4), (12, 5)):
        name = f"johnson-{v}-{d}"
        for t in range(1, d):
            dv = dual_vector(system(name), t)
            closed = bound_closed_form(FAMILY_INSTANCES[name], t)
            if not dv.bound == closed == comb(v - t, d - t):
                bad.append((v, d, t, dv.bound, closed))
    record(1, not bad, f"Johnson bounds equal C(v-t, d-t); mismatches {bad}")


def test_criterion_2_hamming_bound():
    bad = []
    for n, d in ((2, 2), (3, 4), (4, 3)):
        name = f"hamming-{n}-{d}"
        for t in range(1, d):
            dv = dual_vector(system(name), t)
            closed = bound_closed_form(FAMILY_INSTANCES[name], t)
            if not (dv.bound == closed == n ** (d - t) and all(x >= 0 for x in dv.f)):
                bad.append((n, d, t))
    mds = dual_vector(system("hamming-2-2"), 1).f
    record(2, not bad and mds == (1, 0, 1),
           f"Hamming bounds equal n^(d-t), f >= 0, f(2,2,1) = {[str(x) for x in mds]}")


def test_criterion_3_closed_form_vs_oracle():
    bad = [(name, t, target) for name in TEST_ARRAYS for t in range(system(name).d + 1)
           for target in TARGETS if system(name).closed_vector(t, target) != system(name).w[t]]
    record(3, not bad, f"{len(TEST_ARRAYS)} arrays, three target bases; mismatches {bad}")


def test_criterion_4_inverse_pairs():
    bad = []
    for name in TEST_ARRAYS:
        s = system(name)
        I = Matrix.identity(s.d + 1)
        bad += [(name, basis) for basis, to_ekr, back in s.pairs()
                if not (to_ekr @ back == I and back @ to_ekr == I)]
    record(4, not bad, f"both products are the identity; failures {bad}")


def test_criterion_5_operator_actions():
    bad = []
    for name in TEST_ARRAYS:
        s = system(name)
        for which, X in (("A", s.r.A), ("A_star", s.r.A_star)):
            if action_on_ekr(s.r.p, which) != s.conjugated(X):
                bad.append((name, which))
    record(5, not bad, "EKR-basis matrices of A and A* equal the conjugated realization; "
                       f"A* w_1 boundary entry taken as -phi_d/(theta_1 - theta_0); failures {bad}")


def test_criterion_6_section2_suite():
    bad = []
    for name in TEST_ARRAYS:
        r = realization(name)
        failed = [c.name for c in verify_section2(r) if not c.passed]
        if failed or len(invariant_form_space(r.A, r.A_star)) != 1:
            bad.append((name, failed))
    record(6, not bad, f"split/standard identities, norms, Gram line; failures {bad}")


def test_criterion_7_delta_identities():
    bad = []
    for name in TEST_ARRAYS:
        p = realization(name).p
        for s in range(1, p.d):
            lhs, rhs = difference_identity_sides(p, s)
            if delta(p, s) != delta_product_form(p, s) or lhs != rhs:
                bad.append((name, s))
    record(7, not bad, f"Delta_s product form and difference identity; failures {bad}")


def test_criterion_8_degeneracy():
    notes = []
    ok = True
    for d in (3, 5):
        r = realize(alternating(d))
        try:
            EkrSystem.build(r)
            ok = False
            notes.append(f"d={d} not refused")
        except Inadmissible as e:
            ok &= "q = -1 with odd diameter" in str(e)
        W = [wt_subspace_oracle(r, t) for t in range(d + 1)]
        ok &= all(W[2 * s - 1] == W[2 * s] for s in range(1, d // 2 + 1))
        ok &= all(c.passed for c in degenerate_check(r))
    r4 = realize(alternating(4))
    ok &= all(c.passed for c in degenerate_check(r4))
    record(8, ok, "beta = -2 arrays from array_from_eigenvalues: d = 3, 5 refused with "
                  f"W_(2s-1) = W_(2s); d = 4 direct sum {notes}")


def test_criterion_9_property_suite():
    rng = random.Random(SEED)
    elements = all_d4_elements()
    for _ in range(100):
        props.d4_relations(props.random_array(rng, 5), rng.choice(elements), rng.choice(elements))
        props.vartheta_symmetry(props.random_array(rng, 6))
        props.idempotent_algebra(props.random_array(rng))
        props.lp_uniqueness(props.random_array(rng), rng.randint(0, 6))
        c = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
        props.normalization_covariance(props.random_array(rng), c)
    record(9, True, f"five properties x 100 trials, seed {SEED}")


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-s"]))
