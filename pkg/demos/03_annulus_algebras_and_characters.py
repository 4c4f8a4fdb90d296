"""Skein algebras of punctured surfaces and the canonical character map.

The modified skein algebra of a genus-g, n-punctured surface is the
invariant subalgebra of L^{(x)(2g+n-1)}, L the coend.  For the annulus this
is the algebra of symmetric linear forms; the classical skein algebra maps
in by sending a module-colored loop to its character, and in the
non-semisimple examples that map is far from surjective -- the headline
dimension gap 2p < 3p-1 of the restricted quantum group.
"""

from modskein.bundles import sweedler_bundle, uqsl2_bundle, z2_bundle
from modskein.coend import canonical_image_dim, slf_basis
from modskein.surface import char_map, skalg, skalg_dimension

print("== semisimple degeneration: Q[Z/2] ==")
b = z2_bundle()
alg = skalg(b, 0, 2)
cm = char_map(b, alg)
print(" annulus algebra dim %d, commutative %s, char map rank %d"
      % (alg.dim, alg.is_commutative(), cm["rank"]))
print(" -> the map is onto: modified = classical for semisimple input")

print()
print("== Sweedler's algebra: smallest non-semisimple ribbon example ==")
b = sweedler_bundle()
alg = skalg(b, 0, 2)
cm = char_map(b, alg)
print(" annulus dim %d, char map rank %d, multiplicative %s"
      % (alg.dim, cm["rank"], cm["multiplicative"]))
torus = skalg(b, 1, 1)
print(" one-holed torus: dim %d, associativity/unit laws verified exactly"
      % torus.dim)

print()
print("== restricted quantum sl2: the paper-scale example ==")
for p in (2, 3):
    b = uqsl2_bundle(p)
    dim = skalg_dimension(b, 0, 2)
    slf = len(slf_basis(b))
    rank = canonical_image_dim(b)
    print(" p = %d: annulus dim %d (= 3p-1 = %d), SLF dim %d, "
          "character image rank %d (= 2p)"
          % (p, dim, 3 * p - 1, slf, rank))
    print("        -> %d new dimensions beyond classical characters"
          % (dim - rank))
