_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, label): acceptance criterion")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, label = mark.args
    failed = call.excinfo is not None
    prev = _criteria.get(num, (label, True, 0.0))
    dur = prev[2] + (call.duration if call.when == "call" else 0.0)
    _criteria[num] = (label, prev[1] and not failed, dur)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_criteria):
        label, ok, dur = _criteria[num]
        tr.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  ({dur:6.2f} s)  {label}")
    passed = sum(ok for _, ok, _ in _criteria.values())
    tr.write_line(f"{passed}/{len(_criteria)} criteria passed")
