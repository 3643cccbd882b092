"""Distribution of vertex-rooted path and cycle counts on the (25,12,5,6) graph.

Prints, for each pattern, the distinct per-vertex values with the vertices
attaining them. Path counts are subgraph counts; cycle counts are shown both
as injective homomorphism counts and as subgraph counts (they differ by the
factor |Aut(C_s, z1)| = 2).
"""

from __future__ import annotations

import argparse
import time
from collections import defaultdict
from dataclasses import dataclass

from wlreg.counting import aut_size, rooted_counts
from wlreg.graph import RootedPattern, cycle, path, paulus_25_02


@dataclass
class Config:
    max_len: int = 8


def distribution(pattern: RootedPattern, kind: str) -> dict[int, list[int]]:
    g = paulus_25_02()
    by_value: dict[int, list[int]] = defaultdict(list)
    for (v,), c in rooted_counts(pattern, g, [(v,) for v in range(g.n)], kind).items():
        by_value[c].append(v)
    return dict(sorted(by_value.items()))


def main(cfg: Config) -> None:
    for s in range(3, cfg.max_len + 1):
        for name, pattern, kinds in ((f"P{s}[1]", RootedPattern(path(s), (0,)), ("sub",)),
                                     (f"C{s}[1]", RootedPattern(cycle(s), (0,)), ("inj", "sub"))):
            for kind in kinds:
                t0 = time.perf_counter()
                dist = distribution(pattern, kind)
                dt = time.perf_counter() - t0
                vals = "; ".join(f"{val} at {len(vs)} vertices" for val, vs in dist.items())
                print(f"{kind}({name}) [|Aut|={aut_size(pattern)}, {dt:.2f}s]: {vals}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-len", type=int, default=8)
    main(Config(ap.parse_args().max_len))
