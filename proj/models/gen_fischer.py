#!/usr/bin/env python3
"""Emit a flattened two-process Fischer mutual-exclusion protocol.

The shared variable id (0 = free, i = owned by process i) is folded into
the state name, so the output is a plain two-clock timed automaton:

    <loc1>_<loc2>_id<id>

Each process runs idle -> req -> wait -> cs with write window x <= K
(req -> wait, setting id) and check delay x > K (wait -> cs, requiring
id still mine). Both processes in cs at once would violate mutual
exclusion; those states carry label=Violation.

Usage: gen_fischer.py [K] > fischer2.ta
"""

import sys

K = int(sys.argv[1]) if len(sys.argv) > 1 else 2
LOCS = ["idle", "req", "wait", "cs"]


def name(l1: str, l2: str, owner: int) -> str:
    return f"{l1}_{l2}_id{owner}"


def emit() -> str:
    out = [
        f"# Flattened two-process Fischer protocol, K = {K}.",
        "# Generated by gen_fischer.py; edit the generator, not this file.",
        "system fischer2",
        "clock x1 x2",
    ]
    for l1 in LOCS:
        for l2 in LOCS:
            for owner in range(3):
                attrs = []
                if (l1, l2, owner) == ("idle", "idle", 0):
                    attrs.append("initial")
                if l1 == "cs" and l2 == "cs":
                    attrs.append("label=Violation")
                suffix = f" [{', '.join(attrs)}]" if attrs else ""
                out.append(f"state {name(l1, l2, owner)}{suffix}")

    def trans(src: str, dst: str, guard: str | None, do: str | None) -> None:
        body = []
        if guard:
            body.append(f"guard: {guard};")
        if do:
            body.append(f"do: {do};")
        out.append(f"trans {src} -> {dst} {{ {' '.join(body)} }}".replace("{ }", "{}"))

    for proc, other in ((1, 2), (2, 1)):
        x = f"x{proc}"

        def step(mine: str, to: str, owner_from: int, owner_to: int, guard: str | None,
                 do: str | None) -> None:
            for loc_other in LOCS:
                locs_src = (mine, loc_other) if proc == 1 else (loc_other, mine)
                locs_dst = (to, loc_other) if proc == 1 else (loc_other, to)
                trans(name(*locs_src, owner_from), name(*locs_dst, owner_to), guard, do)

        # Start requesting while the lock is free.
        step("idle", "req", 0, 0, None, f"{x} = 0")
        # Write the lock within the window, whoever held it.
        for owner in range(3):
            step("req", "wait", owner, proc, f"{x} <= {K}", f"{x} = 0")
        # Enter after the settle delay if the lock is still mine.
        step("wait", "cs", proc, proc, f"{x} > {K}", None)
        # Retry when someone stole and then released the lock.
        step("wait", "req", 0, 0, None, f"{x} = 0")
        # Leave and release, whatever the lock says by now.
        for owner in range(3):
            step("cs", "idle", owner, 0, None, None)

    return "\n".join(out) + "\n"


if __name__ == "__main__":
    sys.stdout.write(emit())
