"""Collects one PASS/FAIL line per acceptance criterion for the run summary."""

LINES: list[str] = []


def record(criterion: str, passed: bool, detail: str) -> None:
    line = f"{criterion} {'PASS' if passed else 'FAIL'} {detail}"
    LINES.append(line)
    print(line)
