"""Symplectic characters, branching, and the pointed translation."""

from fractions import Fraction

from g3motives.leray import (a_coeffs, branch, branch_111, branch_g2_to_11,
                             char_eval, expand_in_symp, local_from_pointed,
                             pointed_from_local, schur_in_symp, symp_in_schur,
                             symp_schur, weyl_dim)
from g3motives.motives import MotiveExpr
from g3motives.partitions import partitions


def test_weyl_dims_sp6():
    assert weyl_dim((), 3) == 1
    assert weyl_dim((1,), 3) == 6
    assert weyl_dim((1, 1), 3) == 14
    assert weyl_dim((1, 1, 1), 3) == 14
    assert weyl_dim((2,), 3) == 21


def test_weyl_dims_sp4_sp2():
    assert weyl_dim((1,), 2) == 4
    assert weyl_dim((1, 1), 2) == 5
    assert weyl_dim((2,), 2) == 10
    assert weyl_dim((a := 3,), 1) == a + 1


def test_symp_schur_dimension_consistency():
    # already asserted inside symp_schur; exercise a spread of shapes
    for lam in [(), (1,), (2, 1), (3, 3, 1), (4, 2, 2)]:
        symp_schur(lam, 3)


def test_basis_change_mutual_inversion():
    # schur -> symp -> schur round trip through the expansion maps
    for n in range(0, 6):
        for mu in partitions(n):
            if len(mu) > 3:
                continue
            expansion = schur_in_symp(mu, 3)
            # reassemble sum c * (symp lam in schur) and compare to s_mu
            total = {}
            for lam, poly in expansion.items():
                for nu, qp in symp_in_schur(lam, 3).items():
                    for e1, c1 in poly.items():
                        for e2, c2 in qp.items():
                            key = (nu, e1 + e2)
                            total[key] = total.get(key, 0) + c1 * c2
            total = {k: v for k, v in total.items() if v}
            assert total == {(mu, 0): 1}


def test_branch_dimension_conservation():
    for lam in [(), (1,), (2, 1), (2, 2, 1), (3, 1, 1)]:
        d = weyl_dim(lam, 3)
        tot = sum(m * weyl_dim(l2, 2) * weyl_dim(l1, 1)
                  for l2, l1, _tw, m in branch(lam, (2, 1)))
        assert tot == d


def test_branch_g2_to_11_dimension():
    for lam in [(), (1,), (2, 2), (3, 1)]:
        d = weyl_dim(lam, 2)
        tot = sum(m * weyl_dim(a, 1) * weyl_dim(b, 1)
                  for a, b, _tw, m in branch_g2_to_11(lam))
        assert tot == d


def test_branch_111_dimension():
    for lam in [(1, 1, 0), (2, 0, 0), (2, 1, 1)]:
        d = weyl_dim(lam, 3)
        tot = sum(m * weyl_dim(la, 1) * weyl_dim(lb, 1) * weyl_dim(lc, 1)
                  for la, lb, lc, _tw, m in branch_111(lam))
        assert tot == d


def test_char_eval_trivial_and_std():
    # V_() evaluates to 1; V_(1) to the negated trace coefficient
    poly = (1, -3, 2 * 5, -3 * 5, 25)  # plausible g=2 Weil poly shape
    assert char_eval((), poly, 5) == 1
    assert char_eval((1,), poly, 5) == 3


def test_char_eval_matches_power_sums():
    # g = 1: V_(a) character = sum_{i=0..a} alpha^(a-i) beta^i with
    # alpha beta = q; check via Newton recursion on x^2 - t x + q
    q, t = 3, -1
    poly = (1, -t, q)
    vals = {0: 1, 1: t}
    for a in range(2, 8):
        vals[a] = t * vals[a - 1] - q * vals[a - 2]
    for a in range(8):
        assert char_eval((a,), poly, q) == vals[a]


def test_a_coeffs_universal_curve():
    # 1-pointed Leray: e_{c,(1)} = (L + 1) e_c - e_c(V_(1))
    assert a_coeffs(3, (1,)) == {(1,): {0: -1}, (): {1: 1, 0: 1}}


def test_pointed_local_roundtrip():
    import random
    rng = random.Random(5)
    locals_ = {}
    for m in range(5):
        for lam in partitions(m):
            if len(lam) <= 3:
                locals_[lam] = MotiveExpr(
                    {(rng.randint(0, 4), rng.choice([1, 1, 2])):
                     rng.randint(-4, 4)})
    pointed = {}
    for m in range(5):
        pointed.update(pointed_from_local(
            3, m, lambda l: locals_.get(tuple(l), MotiveExpr.zero())))
    for lam, want in locals_.items():
        got = local_from_pointed(lam, 3, pointed)
        assert got == want, lam
