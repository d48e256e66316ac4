import sys


def pytest_terminal_summary(terminalreporter):
    for mod in list(sys.modules.values()):
        results = getattr(mod, "ACCEPTANCE_RESULTS", None)
        if isinstance(results, dict) and results and hasattr(mod, "lines"):
            terminalreporter.section("acceptance criteria")
            for line in mod.lines():
                terminalreporter.write_line(line)
            return
