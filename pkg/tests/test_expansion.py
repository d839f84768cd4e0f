import pytest

from rgbpzeros import (ApproximationFailures, approx_all, approx_zero,
                       build_lg_table, make_params, oracle_zeros, solve_tau0,
                       tau_cascade)

NEWTON_ANCHOR_W = complex(-0.0935299175, 0.310545771)


def test_newton_anchor():
    p = make_params(30, 1.01)
    tau0, resid, iters = solve_tau0(p, 10)
    w = tau0 + 0.5
    assert abs(w - NEWTON_ANCHOR_W) <= 5e-10
    assert resid <= 1e-13
    assert 1 <= iters <= 50


def test_tau0_residuals_on_grid():
    for n, a in [(15, 1.01), (30, 1.01), (50, 20.2), (30, 30.7)]:
        p = make_params(n, a)
        for m in (1, p.num_upper_zeros // 2 + 1, p.num_upper_zeros):
            _, resid, _ = solve_tau0(p, m)
            assert resid <= 1e-13


def test_leading_order_consistency():
    # u*tau0 is already within 0.5 of the fully corrected zero
    p = make_params(30, 1.01)
    tau0, _, _ = solve_tau0(p, 10)
    target = complex(-18.102790325129739597, 9.4722422021510892034)
    assert abs(p.u * tau0 - target) <= 0.5


def test_m_range_validation():
    p = make_params(30, 1.01)
    with pytest.raises(ValueError):
        solve_tau0(p, 0)
    with pytest.raises(ValueError):
        solve_tau0(p, 16)


def test_table_rows():
    rows = [
        (15, 1.01, 1, complex(-3.1559515225814951808, 12.586271690843017387)),
        (30, 20.2, 10, complex(-27.717880396627235555, 11.750965665786499280)),
    ]
    for n, a, m, ref in rows:
        p = make_params(n, a)
        lg = build_lg_table(p)
        ap = approx_zero(p, lg, m, terms=5)
        assert abs(ap.t - ref) / abs(ref) <= 1e-10
        assert ap.terms_used == 5
        assert not ap.low_confidence


def test_terms_truncation_improves_accuracy():
    n, a = 30, 1.2
    p = make_params(n, a)
    lg = build_lg_table(p)
    truth = [z for z in oracle_zeros(n, a) if z.imag >= -1e-12]

    def err(terms):
        ap = approx_zero(p, lg, 1, terms=terms)
        return min(abs(ap.t - r) / abs(r) for r in truth)

    assert err(1) / err(5) >= 1e3


def test_terms_bounds():
    p = make_params(30, 1.2)
    lg = build_lg_table(p)
    tau0, _, _ = solve_tau0(p, 1)
    with pytest.raises(ValueError):
        tau_cascade(p, lg, 1, tau0, terms=0)
    with pytest.raises(ValueError):
        tau_cascade(p, lg, 1, tau0, terms=6)


def test_approx_all_counts_and_ordering():
    for n in (30, 31):
        p = make_params(n, 2.3)
        res = approx_all(p)
        assert len(res) == (n + 1) // 2
        assert [ap.m for ap in res] == list(range(1, (n + 1) // 2 + 1))
        ims = [ap.t.imag for ap in res]
        assert all(x > y for x, y in zip(ims, ims[1:]))
        assert all(ap.t.imag >= 0.0 for ap in res)


def test_low_degree_flagged():
    p = make_params(1, 7.0)
    res = approx_all(p)
    assert len(res) == 1
    assert res[0].low_confidence
    # theta_1 vanishes at exactly -a/2
    assert abs(res[0].t - (-3.5)) <= 0.05


def test_residual_decay_in_terms():
    from rgbpzeros import poly_coeffs, relative_residual

    n, a = 30, 1.2
    p = make_params(n, a)
    lg = build_lg_table(p)
    coeffs = poly_coeffs(n, a)
    resids = [relative_residual(coeffs, approx_zero(p, lg, 1, terms=t).t)
              for t in range(1, 6)]
    # decay is monotone until the double-precision evaluation noise floor
    floor = 1e-15
    assert all(x > y or x <= floor for x, y in zip(resids, resids[1:]))
    assert resids[4] <= 1e-4 * resids[0]
