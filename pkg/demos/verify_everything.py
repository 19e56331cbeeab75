"""Run every structural checker at desk scale and print one line each.

Exits nonzero when any checker reports a failure, so the script doubles
as a smoke gate for the whole library.
"""

import sys

import invatoms.braid as br
import invatoms.coxeter as cx
import invatoms.orders as od
import invatoms.twisted as tw
import invatoms.typea as ta


def line(label, report):
    failures = report["failures"]
    extras = {k: v for k, v in report.items()
              if k not in ("failures", "system") and not isinstance(v, list)}
    bits = ", ".join("%s: %s" % (k, v) for k, v in sorted(extras.items()))
    print("%-34s %s, failures: %d" % (label, bits, len(failures)))
    return len(failures)


def main():
    bad = 0

    for name, twist in [("A3", None), ("A3", (3, 2, 1)), ("B3", None), ("H3", None)]:
        system = cx.build_system(name)
        label = "minimal-length conjecture %s%s" % (name, "*" if twist else "")
        bad += line(label, tw.check_conjecture(system, twist))

    for name, twist in [("A4", None), ("B3", None), ("A3", (3, 2, 1))]:
        system = cx.build_system(name)
        label = "Bruhat descriptions %s%s" % (name, "*" if twist else "")
        bad += line(label, tw.check_bruhat_descriptions(system, twist))

    for n in (4, 5, 6):
        bad += line("rewriting classes S%d" % n, od.verify_chinese(n))
    for n2 in (4, 6, 8):
        bad += line("FPF rewriting classes S%d" % n2, od.verify_fpf(n2))

    for name, twist in [("A3", None), ("A3", (3, 2, 1)), ("B3", None)]:
        system = cx.build_system(name)
        label = "word rewriting moves %s%s" % (name, "*" if twist else "")
        bad += line(label, br.check_braid_classes(system, twist))

    for name in ("A4", "B3"):
        bad += line("lone atoms for FC %s" % name, br.check_fc_atoms(cx.build_system(name)))

    a3 = cx.build_system("A3")
    for twist in (None, (3, 2, 1)):
        label = "duality through the reversal%s" % ("*" if twist else "")
        bad += line(label, tw.check_duality(a3, a3.longest_element(), twist))

    bad += line("matching statistics n<=5", ta.check_sigma_conjecture(n_max=5))

    print()
    print("total failures:", bad)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
