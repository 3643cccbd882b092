"""Enumerate the homomorphic images of P6 rooted at its ends.

Lists each image class (up to isomorphism and swapping the two roots) with
its rooted treewidth, and compares the set with the hand-drawn panel list
kept in ``wlreg.suites.DRAWN_P6_IMAGES``.
"""

from __future__ import annotations

from collections import Counter

from wlreg.counting import proper_quotients
from wlreg.graph import RootedPattern, path
from wlreg.suites import _canonical, drawn_p6_images
from wlreg.width import rooted_treewidth


def main() -> None:
    classes: dict[tuple, RootedPattern] = {}
    for _, q in proper_quotients(RootedPattern(path(6), (0, 5)), include_discrete=True):
        classes.setdefault(_canonical(q, swap_roots=True), q)
    drawn = Counter(_canonical(p, swap_roots=True) for p in drawn_p6_images())
    print(f"{len(classes)} image classes, {sum(drawn.values())} drawn panels ({len(drawn)} distinct)")
    for key, q in sorted(classes.items()):
        n, edges, roots = key
        mark = {0: "UNDRAWN", 1: ""}.get(drawn[key], f"drawn x{drawn[key]}")
        print(f"n={n} roots={roots} tw={rooted_treewidth(q).value} edges={list(edges)} {mark}")
    extra = [k for k in drawn if k not in classes]
    print(f"drawn panels that are not images: {len(extra)}")


if __name__ == "__main__":
    main()
