# The identity catalog: every entry evaluates its two sides by independent
# numerical routes (closed form / series on one side, quadrature on the
# other) and quantifies the agreement.
#
# Run:  python demos/04_identity_catalog.py

from besselint import catalog

print("== the manifest ==")
records = catalog.list_identities()
print(f"{len(records)} identities; difficulty classes and routes:")
for r in records[:6]:
    print(f"  {r.id:8s} [{r.difficulty:11s}] {r.lhs_route:22s} vs {r.rhs_route}")
print("  ...")

print()
print("== one identity, one point ==")
res = catalog.verify("I-2.32", {"nu": 0.5, "a": 1.0, "b": 2.0, "p": 0.5})
print(f"{res.identity} at {res.point}: {res.status}")
print(f"  lhs (quadrature)  = {res.lhs.value:.15g} +- {res.lhs.abs_err_est:.1e}")
print(f"  rhs (closed form) = {res.rhs.value:.15g} +- {res.rhs.abs_err_est:.1e}")
print(f"  rel_diff = {res.rel_diff:.2e}")

print()
print("== a grid sweep ==")
rep = catalog.verify_grid("I-2.12", rel_tol=1e-6)
for e in rep.entries:
    print(f"  {e.status:6s} {e.point}  rel={e.rel_diff:.1e}")
print("summary:", rep.summary)

print()
print("== the whole catalog ==")
rep = catalog.run_all()
s = rep.summary
print(f"pass={s['pass']} fail={s['fail']} inconclusive={s['inconclusive']} "
      f"in {s['wall_time_s']:.1f}s")

# Two entries stay inconclusive by design: the printed closed form of
# I-3.21 only matches its integral on the nu = 1/2 slice, and the report
# records the measured ratio elsewhere instead of failing silently.
for e in rep.entries:
    if e.status != "pass":
        print(f"  {e.identity} {e.point}\n    -> {e.note}")
