import io
import json
import os

from hypothesis import HealthCheck, settings

from quantump2.cli import run_command

settings.register_profile(
    "default", deadline=None, max_examples=25,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.register_profile("thorough", deadline=None, max_examples=200,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# criterion number -> (title, passed, detail), filled by test_acceptance
ACCEPTANCE = {}


def cli(*argv):
    """Run the CLI in-process with structured output; returns (exit code, document)."""
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv) + ["--format", "structured"], out, err)
    text = out.getvalue()
    return code, (json.loads(text) if text.strip() else {})


def cli_text(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[n]
        line = f"{'PASS' if ok else 'FAIL'} criterion {n:2d}: {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
