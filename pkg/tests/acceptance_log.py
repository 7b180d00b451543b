"""Collects one PASS/FAIL line per acceptance criterion for the terminal summary."""
LINES = {}


def record(number: int, ok: bool, text: str) -> str:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {text}"
    LINES[number] = line
    print(line, flush=True)
    return line
