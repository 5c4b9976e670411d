import re
import sys
import pathlib

sys.path.insert(0, str(pathlib.Path(__file__).parent))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", rep.nodeid)
            if m:
                n = int(m.group(1))
                outcome = "PASS" if key == "passed" else "FAIL"
                results[n] = outcome if n not in results else (
                    "FAIL" if "FAIL" in (results[n], outcome) else "PASS"
                )
    if results:
        terminalreporter.write_line("")
        for n in sorted(results):
            terminalreporter.write_line(f"ACCEPTANCE CRITERION {n}: {results[n]}")
