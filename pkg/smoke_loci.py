import time

from liftcheck.domains import GF, QQ
from liftcheck.poly import RingContext
from liftcheck.ideals import ideal, ideal_power, equal_ideals, canonical_generators
from liftcheck.loci import enumerate_locus, locus_formula_nwl, subspace_check

# 1. F_2[x,y], I = (x^2, y^2), nwl: V = {0}
T2 = RingContext.create(("x", "y"), GF(2), (1, 1), graded=True)
x, y = T2.gens()
res = enumerate_locus(T2, [x**2, y**2], 2, "nwl")
print("F2 nwl points:", res.points)
print("F2 nwl flags:", res.additive_closed, res.scalar_closed)
assert res.points == (
    ((0, 0), "in-locus"),
    ((0, 1), "not-in-locus"),
    ((1, 0), "not-in-locus"),
    ((1, 1), "not-in-locus"),
), res.points
assert subspace_check(res) == (True, True)

# 1b. same frame, npd: containment chain says npd locus also {0}
res_npd = enumerate_locus(T2, [x**2, y**2], 2, "npd")
print("F2 npd points:", res_npd.points)
assert res_npd.in_locus() == ((0, 0),), res_npd.points

# 1c. obstruction-fail on the same frame
res_ob = enumerate_locus(T2, [x**2, y**2], 2, "obstruction-fail")
print("F2 obstruction points:", res_ob.points)
assert res_ob.in_locus() == ((0, 0),), res_ob.points

# 2. closed form over QQ[x,y]: I^2 : xy = (x^3, xy, y^3)
TQ = RingContext.create(("x", "y"), QQ, (1, 1), graded=True)
xq, yq = TQ.gens()
IQ = ideal(TQ, (xq**2, yq**2))
L = locus_formula_nwl(TQ, IQ)
print("formula gens:", [str(g) for g in canonical_generators(L).generators])
expect = ideal(TQ, (xq**3, xq * yq, yq**3))
assert equal_ideals(L, expect)

# formula-enumeration consistency with the F_2 run: no nonzero frame combo in L
from liftcheck.ideals import ideal_member
T2I = ideal(T2, (x**2, y**2))
L2 = locus_formula_nwl(T2, T2I)
for a, b in [(0, 1), (1, 0), (1, 1)]:
    f = T2.const(a) * x**2 + T2.const(b) * y**2
    assert not ideal_member(f, L2)[0], (a, b)
print("F2 formula consistency ok")

# 3. quadric over F_5: timing probe on one class first
T5 = RingContext.create(("x", "y", "z"), GF(5), (1, 1, 1), graded=True)
x5, y5, z5 = T5.gens()
Tq = T5.quotient(x5**2 + y5**2 + z5**2)
xb, yb, zb = Tq.gens()
t0 = time.time()
from liftcheck.liftcrit import weaklift_cyclic, Verdict
one = weaklift_cyclic(Tq, xb, ideal(Tq, (xb, yb, zb)))
print("single quadric point:", one.verdict, f"{time.time()-t0:.2f}s")
assert one.verdict is Verdict.WEAKLY_LIFTABLE

t0 = time.time()
resq = enumerate_locus(Tq, [xb, yb, zb], 5, "nwl")
dt = time.time() - t0
counts = {}
for _, cls in resq.points:
    counts[cls] = counts.get(cls, 0) + 1
print("quadric counts:", counts, f"{dt:.1f}s")
assert counts == {"in-locus": 1, "not-in-locus": 124}, counts
assert subspace_check(resq) == (True, True)

# 4. quadric closed form: m^2 : 1 = m^2
mq = ideal(Tq, (xb, yb, zb))
Lq = locus_formula_nwl(Tq, mq)
assert equal_ideals(Lq, ideal_power(mq, 2))
print("quadric formula = m^2 ok")

print("ALL LOCI SMOKE OK")
