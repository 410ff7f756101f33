from hypothesis import HealthCheck, settings, strategies as st

from confaut.exactalg import QuadExt

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(lambda x: x != 0)


def quad(d: int):
    return st.builds(lambda a, b: QuadExt.make(a, b, d), rationals, rationals)


gaussians = quad(-1)
eisensteins = quad(-3)


def distinct_points(n: int, elements=gaussians):
    return st.lists(elements, min_size=n, max_size=n, unique=True)



def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        title, ok, note = results[k]
        terminalreporter.write_line(f"criterion {k:2d} [{title}]: {'PASS' if ok else 'FAIL'} {note}".rstrip())
