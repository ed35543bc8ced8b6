# Auditing identities on a parameter grid.
#
# Each identity is checked case by case; failures keep the smallest
# counterexamples. The second summation form of the difference identity
# (s_n inside the sum) breaks already at n = 1.

from umbralkit.identities import AuditGrid, audit

grid = AuditGrid(n_range=(0, 5), r_range=(-1, 2), k_range=(-1, 2))

for ident in ("thm2", "thm3", "thm4", "thm5-anchor", "thm5-derivation", "thm5-printed"):
    rep = audit(ident, grid)
    print(f"{ident:16s} {rep.status:26s} pass={rep.pass_count} fail={rep.fail_count}")

rep = audit("thm5-printed", grid)
for case in rep.counterexamples:
    print(case.params.to_json(), "lhs", case.lhs, "rhs", case.rhs)
