import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

CRITERIA: dict[str, str] = {}


def record_criterion(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {title}"
    if detail:
        line += f" ({detail})"
    CRITERIA[f"{number}:{title}"] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for key in sorted(CRITERIA, key=lambda k: (int(k.split(":")[0]), k)):
            terminalreporter.write_line(CRITERIA[key])
