"""
Correcting erasures and errors
==============================

A code of distance d survives the loss of any d - 1 edges: the surviving
n - d edges sit inside exactly one codeword.  With floor((d-1)/2) edges
swapped for wrong ones, the nearest codeword is still the one sent.
"""

from __future__ import annotations

import random

from treecodes import constructions as C
from treecodes.codes import decode_erasures, decode_errors
from treecodes.errors import AmbiguityError
from treecodes.graph import _edge_table

rng = random.Random(1)
code = C.bibd_two_star_code()
n, d = code.n, code.claimed_distance
sent = 11
tree = list(code[sent].edges)
print("sent", sent, tree)

kept = rng.sample(tree, n - d)
print(f"after {d - 1} erasures:", sorted(kept), "->", decode_erasures(code, kept).index)

t = (d - 1) // 2
wrong = rng.sample([e for e in _edge_table(n) if e not in tree], t)
received = rng.sample(tree, n - 1 - t) + wrong
res = decode_errors(code, received)
print(f"after {t} errors: nearest {res.candidates} at distance {res.distance}")

# one edge too few and the answer is no longer unique
try:
    decode_erasures(code, kept[:1])
except AmbiguityError as exc:
    print("one surviving edge fits", len(exc.candidates), "codewords")
