"""
Why so5 and sp4 give different signs: a transposition swapping two copies
of the defining module acts on the invariant form by +1 when the form is
symmetric and by -1 when it is alternating.

Run:  python3 demos/flip_signs.py
"""

from realselfdual.characters import CycleGroup, char_value
from realselfdual.lie import make_context

for N in (4, 5):
    ctx = make_context(N)
    swap = char_value(ctx, [CycleGroup((1, 0), (2,))])
    print(f"{ctx.name}: transposition on V(1,0)^2 invariants -> {swap:+d}")

# four copies: the class function over cycle types
ctx = make_context(4)
for cycles in [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]:
    values = [char_value(make_context(N), [CycleGroup((1, 0), cycles)]) for N in (4, 5)]
    print(f"cycle type {cycles}: so5 {values[0]:+d}, sp4 {values[1]:+d}")

# the isotypic component matters too: on V(1,0)^2 for so5 the flip is -1 on the adjoint
print("flip on the (0,2) component:", char_value(ctx, [CycleGroup((1, 0), (2,))], (0, 2)))
