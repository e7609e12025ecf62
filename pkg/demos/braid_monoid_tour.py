"""A walk through the positive braid monoid B_3^+ = A_2 of the braid sequence.

Run: python3 demos/braid_monoid_tour.py
"""

from artinstab import ArtinSequence, canonicalize, equivalence_class, lcm_pair, reduce
from artinstab.divisibility import coset_set, end_mon, format_elements, verify_decomposition
from artinstab.word import get_monoid

seq = ArtinSequence()          # empty seed: A_n is the braid monoid on n+1 strands
d = seq.diagram(2)
mon = get_monoid(d)

# The braid relation makes 121 and 212 the same element.
print("class of 121:", sorted(equivalence_class(d, (1, 2, 1))))
print("canonical form of 212:", canonicalize(d, (2, 1, 2)))

# Growth: number of elements of each length.
print("elements per length:", [len(mon.elements_of_length(L)) for L in range(8)])

# The least common left-multiple of the two generators is the half twist.
a, b = mon.element((1,)), mon.element((2,))
print("lcm(1, 2) =", lcm_pair(d, a, b))

# Right divisors of 121 that lie in the submonoid generated by sigma_1 and sigma_2.
print("end divisors of 121:", format_elements(sorted(end_mon(d, {1, 2}, mon.element((1, 2, 1))))))

# Stripping the sigma_1 part off the right gives a coset representative.
r = reduce(d, {1}, mon.element((1, 2, 1)))
print(f"121 = {r.reduced} * {r.tail}")

# Coset representatives for <sigma_1>, and the count identity they satisfy.
print("reduced elements up to length 4:", format_elements(coset_set(d, {1}, 4)))
rep = verify_decomposition(d, {1}, 6)
print("all elements   :", rep.total_counts)
print("representatives:", rep.coset_counts)
print("submonoid      :", rep.submonoid_counts)
