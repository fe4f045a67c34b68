"""Run the worked-example corpus and print one PASS/FAIL line per fixture."""

import sys

from covolume.fixtures import run_fixtures


def main() -> int:
    results = run_fixtures()
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}{'  ' + detail if detail else ''}")
    return 0 if all(ok for _, ok, _ in results) else 1


if __name__ == "__main__":
    sys.exit(main())
