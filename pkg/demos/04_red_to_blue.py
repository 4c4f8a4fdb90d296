"""The red-to-blue operation: resolving coend-colored strands.

A morphism P -> L^{(x)k} (x) X with P projective lifts through the regular
representation: every coend slot is replaced by H (x) H* and the lift
composes back to the original along the dinatural maps, exactly.  The lift
is constructed from the splitting of P's free cover, found by exact solve.
"""

from modskein.bundles import sweedler_bundle
from modskein.coend import coadjoint_rep, recompose, red_to_blue
from modskein.errors import InadmissibleError
from modskein.hopf import (hom_space, is_projective, regular_rep, tensor_rep,
                           trivial_rep)

b = sweedler_bundle()
reg = regular_rep(b)
coad = coadjoint_rep(b)
triv = trivial_rep(b)

print("== k = 1: resolve one coend slot ==")
target = tensor_rep(b, coad, triv)
homs = hom_space(b, reg, target)
print(" Hom_H(H, L) dim:", len(homs))
f = homs[0] + homs[1].scale(b.field.from_rational(7))
terms = red_to_blue(b, f, reg, 1, triv)
print(" lift terms:", len(terms), "(single summand through H_reg)")
fhat = terms[0][1]
print(" lift shape: %dx%d  (into (H (x) H*) (x) 1)" % (fhat.rows, fhat.cols))
print(" dinatural recomposition equals input:",
      recompose(b, terms, 1, triv) == f)

print()
print("== k = 2 with a different projective source ==")
P = b.module("proj_plus")
target2 = tensor_rep(b, tensor_rep(b, coad, coad), triv)
homs2 = hom_space(b, P, target2)
f2 = homs2[0] + homs2[-1].scale(b.field.from_rational(-3))
terms2 = red_to_blue(b, f2, P, 2, triv)
print(" roundtrip exact:", recompose(b, terms2, 2, triv) == f2)

print()
print("== admissibility gatekeeping ==")
m = b.module("triv")
print(" is_projective(triv):", is_projective(b, m))
try:
    red_to_blue(b, hom_space(b, m, tensor_rep(b, coad, triv))[0], m, 1, triv)
except InadmissibleError as exc:
    print(" lift through a non-projective object is refused:", exc)
