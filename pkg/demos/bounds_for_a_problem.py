"""
Lower bounds for one Schubert problem with so7 data: four copies of the
second fundamental weight and four of the spin weight.

Run:  python3 demos/bounds_for_a_problem.py
"""

from realselfdual.bounds import PairingSpec, Problem, all_bounds, lower_bound, max_pairs, trivial_multiplicity

problem = Problem.build(6, [((0, 1, 0), 0, 4), ((0, 0, 1), 0, 4)])
print(problem.label(), "on", problem.ctx.name)
print("Grassmannian size d =", problem.d)

# with no conjugate pairs every solution is real, so the count is the full dimension
dim = trivial_multiplicity(problem)
print("invariant dimension:", dim)

# each c counts how many pairs of evaluation points are complex conjugate;
# pairing classes differ in which groups of identical points the pairs come from
for c in range(1, max_pairs(problem) + 1):
    for pb in all_bounds(problem, c):
        print(f"  c={c}  {pb.pairing.describe():<22} signature {pb.result.signature:>4}  bound {pb.result.bound}")

# an explicit pairing by point index; any pairing in the same class gives the same value
a = lower_bound(problem, PairingSpec(((0, 1), (4, 5))))
b = lower_bound(problem, PairingSpec(((2, 3), (6, 7))))
print("pairs 0-1,4-5:", a.bound, " pairs 2-3,6-7:", b.bound)

# the parity floor: an odd dimension forces at least one real solution
print("parity floor:", a.parity_floor)
