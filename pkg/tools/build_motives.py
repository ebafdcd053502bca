#!/usr/bin/env python3
"""Regenerate src/g3motives/data/motives.json from first principles.

Char polys for the elliptic generators come from exact q-expansions;
Sym2S[12] is derived from S[12].  The vector-valued Siegel generators
carry only the bare traces printed in the literature (S[12,6] at p=2,3);
the remaining Siegel entries are empty and downstream queries raise
MissingData until a fuller table is supplied.
"""

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from g3motives import motives  # noqa: E402


def main():
    table = motives.builtin_frob_table()
    gens = []
    for j in range(1, motives.N_GENS + 1):
        fd = table[j]
        gens.append({
            "j": j,
            "name": motives.gen_name(j),
            "dim": motives.gen_dim(j),
            "weight": motives.gen_weight(j),
            "hodge_tate": list(motives.gen_ht(j)),
            "charpoly": {str(p): list(c) for p, c in sorted(fd.charpolys.items())}
                        or None,
            "traces": {str(p): t for p, t in sorted(fd.traces.items())} or None,
        })
    doc = {"version": 1, "generators": gens}
    out = os.path.join(os.path.dirname(__file__), "..", "src", "g3motives",
                       "data", "motives.json")
    with open(out, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")
    print("wrote", os.path.normpath(out))


if __name__ == "__main__":
    main()
