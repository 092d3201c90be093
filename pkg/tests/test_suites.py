from parasuper import build_gl, build_osp
from parasuper.report import VerificationReport
from parasuper.suites import GL_SUITES, OSP_SUITES, check_axioms, run_gl_suite, run_osp_suite


def test_report_accounting():
    r = VerificationReport("x", {"m1": 1}, witness_limit=2)
    assert r.status == "vacuous" and not r.passed
    for ok in (True, False, False, False):
        r.record(ok, lambda: {"w": 1})
    assert r.total == 4 and r.failures == 3 and len(r.witnesses) == 2
    assert r.status == "fail" and r.to_dict()["failures"] == 3


def test_every_osp_suite_runs():
    a = build_osp(1, 1, 1)
    for name in OSP_SUITES:
        assert run_osp_suite(name, a).passed, name


def test_every_gl_suite_runs():
    g = build_gl(1, 1, 1, 1)
    for name in GL_SUITES:
        assert run_gl_suite(name, g).passed, name


def test_axioms_seed_changes_samples_not_verdict():
    g = build_gl(1, 1, 1, 0)
    mats = [b.realization for b in g.basis]
    a = check_axioms(mats, g.params, seed=1)
    b = check_axioms(mats, g.params, seed=2)
    assert a.passed and b.passed and a.total == b.total == 81 + 729 + 20
