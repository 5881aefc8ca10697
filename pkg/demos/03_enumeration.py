"""
Enumerating every Mermin pentagram
==================================

Pentagrams are five contexts that meet pairwise in ten distinct points.  The
search walks 5-cliques in the graph of contexts meeting in one point and
checks the parity of each configuration afterwards.
"""
import time
from collections import Counter

from pentagram_atlas import enumerate_contexts, enumerate_pentagrams, pentagrams_on_quadric

contexts = enumerate_contexts()
print(len(contexts), "contexts,", Counter(c.sign for c in contexts))

start = time.perf_counter()
pentagrams = enumerate_pentagrams(threads=1)
print(f"{len(pentagrams)} pentagrams in {time.perf_counter() - start:.1f}s")
print("by number of negative contexts:", dict(sorted(Counter(p.negative_context_count for p in pentagrams).items())))

# Pentagrams whose ten observables are all symmetric lie on the Klein quadric.
print(len(pentagrams_on_quadric(pentagrams)), "on the Klein quadric")
