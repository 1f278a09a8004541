"""
Characters of small so(2r+1) and sp(2r) modules as Laurent polynomials.

Run:  python3 demos/characters_tour.py
"""

from realselfdual.characters import character_from_weights, freudenthal_weights, schur, weyl_dim
from realselfdual.laurent import evaluate_at_one
from realselfdual.lie import make_context, to_bar

# N picks the algebra: even N=2r gives so(2r+1), odd N=2r+1 gives sp(2r)
for N in (3, 4, 5, 6):
    ctx = make_context(N)
    print(f"N={N}: {ctx.name}, rank {ctx.r}")

# the defining module of so5 has five weights, one of them zero
so5 = make_context(4)
print()
print("so5 (1,0):", schur(so5, (1, 0)))
print("so5 (0,1):", schur(so5, (0, 1)))   # spin module, odd exponents

# exponents are doubled epsilon coordinates, which is what the bar partition records
print("bar partition of (0,1) for so5:", to_bar(so5, (0, 1)).parts)

# sp4 is so5 in disguise: swapping the fundamental coordinates swaps the two modules
sp4 = make_context(5)
print("sp4 (1,0):", schur(sp4, (1, 0)))

# setting every variable to 1 gives the dimension
so7 = make_context(6)
for w in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 2)]:
    s = schur(so7, w)
    print(f"so7 {w}: {len(s)} distinct weights, dimension {evaluate_at_one(s)} (Weyl: {weyl_dim(so7, w)})")

# the division-based character agrees with weights built by Freudenthal's recursion
adj = (0, 1, 0)
mult = freudenthal_weights(so7, adj)
print("zero weight multiplicity in the so7 adjoint:", mult[(0, 0, 0)])
print("agrees with schur:", character_from_weights(so7, mult) == schur(so7, adj))
