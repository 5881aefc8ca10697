"""
The 45 pentagram types
======================

Each pentagram gets an 8-entry signature: negative contexts, observables of
each kind, and the classes of its five Fano planes.  Signatures are matched
against the transcribed type table, which supplies the type numbers.
"""
from pentagram_atlas import (
    PentagramIndex,
    build_atlas,
    enumerate_pentagrams,
    klein_census,
    load_table1,
    pentagrams_on_quadric,
    signature,
)
from pentagram_atlas.classifier import type_index

pentagrams = enumerate_pentagrams(threads=1)
golden = load_table1()
atlas = build_atlas(pentagrams, golden)

print(" T  C- OA OB OC F- Fa Fb Fc   K    N")
for row in atlas:
    print(f"{row.t:>2}  " + " ".join(f"{v:>2}" for v in row.signature) + f"  {row.k:>2}  {row.n:>4}")

# Quadric counts per type, next to the golden K column.
census = klein_census(atlas, pentagrams_on_quadric(pentagrams), golden)
print("types on the quadric:", len(census.realized_types))
for t, (table, computed) in sorted(census.mismatches.items()):
    print(f"  type {t}: table K={table}, computed K={computed}")

# Every pentagram shares two edges with exactly ten others.
index = PentagramIndex(pentagrams)
types = type_index(golden)
p = pentagrams[0]
print("type", types[signature(p)], "neighbors:", [types[signature(q)] for q in index.neighbors(p)])
