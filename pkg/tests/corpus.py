"""Seeded random circuit corpus used by the compiler tests and acceptance run.

Circuits come out as netlist text (so the corpus also exercises the
parser): up to 8 inputs, up to 40 gates total including the cleanup chain,
AND/OR/NOT gates with arbitrary fan-out pre-normalization.  Every wire
feeds something: left-over wires are folded into the output through a
final AND chain, which keeps the lowered form free of dead gadgets.
"""

from __future__ import annotations

import random


def random_netlist(rng: random.Random, max_inputs: int = 8, core_gates: int = 16) -> str:
    n_inputs = rng.randint(1, max_inputs)
    n_gates = rng.randint(1, core_gates)
    lines = [f"input x{i}" for i in range(n_inputs)]
    wires = [f"x{i}" for i in range(n_inputs)]
    used: set[str] = set()
    for k in range(n_gates):
        kind = rng.choice(["and", "or", "not", "and", "or"])
        name = f"g{k}"
        if kind == "not":
            a = rng.choice(wires)
            lines.append(f"not {name} {a}")
            used.add(a)
        else:
            a, b = rng.choice(wires), rng.choice(wires)
            lines.append(f"{kind} {name} {a} {b}")
            used.update((a, b))
        wires.append(name)
    out = wires[-1]
    stray = [w for w in wires[:-1] if w not in used]
    for k, w in enumerate(stray):
        name = f"m{k}"
        lines.append(f"and {name} {out} {w}")
        out = name
    lines.append(f"output {out}")
    return "\n".join(lines) + "\n"


def corpus(seed: int, count: int) -> list[str]:
    rng = random.Random(seed)
    return [random_netlist(rng) for _ in range(count)]
