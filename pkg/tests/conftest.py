# Acceptance results are collected here and echoed, one line per criterion,
# at the end of the pytest run.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: [int(t) if t.isdigit() else t for t in s.split()[1].split(".")]):
        terminalreporter.write_line(line)
