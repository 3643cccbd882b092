"""Run every verification suite and print (or save) the reports."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from wlreg.suites import SUITES, run_suite


@dataclass
class Config:
    suites: tuple[str, ...] = tuple(SUITES)
    parallel: bool = False
    json_out: str | None = None


def main(cfg: Config) -> int:
    reports = [run_suite(name, parallel=cfg.parallel) for name in cfg.suites]
    for r in reports:
        print(r.format())
    total = sum(len(r.checks) for r in reports)
    ok = sum(c.passed for r in reports for c in r.checks)
    print(f"\n{ok}/{total} checks passed in {sum(r.elapsed_ms for r in reports)} ms")
    if cfg.json_out:
        with open(cfg.json_out, "w") as fh:
            json.dump([r.to_dict() for r in reports], fh, indent=2)
    return 0 if ok == total else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("suites", nargs="*", default=list(SUITES))
    ap.add_argument("--parallel", action="store_true")
    ap.add_argument("--json-out")
    a = ap.parse_args()
    sys.exit(main(Config(tuple(a.suites), a.parallel, a.json_out)))
