"""Tour of the shipped Hopf algebra bundles and the axiom validator.

Every computation downstream trusts the bundle axioms, so the validator is
exhaustive and exact: associativity through ribbon/pivotal compatibilities,
one named failure per broken axiom.  This script validates the shipped
bundles, breaks one on purpose, and generates the restricted quantum group
to show the recorded outcome of its candidate R-matrix.
"""

from modskein.bundles import sweedler_bundle, uqsl2_bundle, z2_bundle, z4_bundle
from modskein.hopf import bundle_from_obj, bundle_to_obj, validate_bundle

print("== validating the shipped bundles ==")
for bundle in (z2_bundle(), sweedler_bundle(), z4_bundle()):
    report = validate_bundle(bundle)
    kind = "ribbon" if bundle.has_ribbon else "pivotal-only"
    print(" %-10s dim %2d  %-13s -> %s"
          % (bundle.name, bundle.dim, kind,
             "valid" if not report else report))

print()
print("== corrupting one structure constant ==")
obj = bundle_to_obj(sweedler_bundle())
for entry in obj["mult"]:
    if tuple(entry[:3]) == (1, 1, 0):   # g*g = 1
        entry[3] = "2"                  # now g*g = 2
        break
for failure in validate_bundle(bundle_from_obj(obj))[:4]:
    print("  FAIL", failure)

print()
print("== restricted quantum sl2 at p = 2 (dim 2p^3 = 16) ==")
uq = uqsl2_bundle(2, with_r=True)
print(" bundle:", uq.name, "| quasitriangular:", uq.has_r)
cand = uq.metadata["r_candidate"]
print(" candidate R attempted:", cand["attempted"],
      "| attached:", cand["attached"])
for failure in cand["validator_failures"]:
    print("  candidate failure:", failure)
print(" simple modules:", ", ".join(uq.simples))
print()
print("The candidate R fails quasitriangularity, as the literature")
print("predicts for this algebra, so the bundle ships pivotal-only and")
print("the annulus computations below run through the R-independent path.")
