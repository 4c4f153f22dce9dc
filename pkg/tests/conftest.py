CRITERIA: dict[int, tuple[str, bool]] = {}


def record(number: int, label: str, ok: bool) -> None:
    CRITERIA[number] = (label, ok)
    print(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {label}")


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        label, ok = CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {label}")
