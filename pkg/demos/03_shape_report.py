"""Which structural facts hold for a given network?

verify_all runs every check and keeps failures as data, so it doubles as a
way to probe conjectures: below, the argmax claim for parallel-of-series
networks breaks as soon as there are only two devices per wire.
"""

from mmnrel import make_hammock, make_pos, verify_all

for net in (make_hammock(3, 5), make_pos(4, 4), make_pos(2, 3)):
    report = verify_all(net, samples=2001)
    status = "all pass" if report.passed else "failed: " + ", ".join(c.name for c in report.failed())
    print(f"{net.label} ({net.l}x{net.w}): {len(report.checks)} checks, {status}")
    if not report.passed:
        for check in report.failed():
            print(f"    {check.statement}: witness {check.witness}")
