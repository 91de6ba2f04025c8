import argparse
import os
import sys

# Make sure we can import derq from a source checkout
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from derq import Workbench
from derq.errors import DerqError
from derq.pcgroup import load_presentation

ASSETS = os.path.join(os.path.dirname(os.path.abspath(__file__)), "assets")


def step(title, fn):
    print(f"\n{title}")
    try:
        ok, detail = fn()
    except DerqError as e:
        print(f"❌ {e}")
        return False
    print(f"{'✅' if ok else '❌'} {detail}")
    return ok


def run_verification(census_primes):
    print("🚀 Starting derq acceptance run")
    wb = Workbench()
    results = []

    def consistency():
        good = wb.presentations.check(load_presentation(os.path.join(ASSETS, "heisenberg5.pc")))
        bad = wb.presentations.check(load_presentation(os.path.join(ASSETS, "corrupted.pc")))
        return not good and "power-self (1)" in bad, f"heisenberg5 consistent, corrupted.pc fails {bad}"

    def extraspecial():
        report = wb.scan(wb.pc(os.path.join(ASSETS, "extraspecial3.pc")))
        ok = report.small_ds == [0] and report.chain_classes == {0: "ch2"}
        return ok, f"small_ds={report.small_ds} chain_classes={report.chain_classes}"

    def sylow():
        report = wb.scan(wb.sylow2(16))
        d = report.derived_exps
        ok = d[2] - d[3] == 5 and 2 in report.small_ds and report.chain_classes.get(2) == "ch2"
        return ok, f"derived exponents {d}, small_ds={report.small_ds}"

    def counts():
        values = {p: wb.catalogs.count(p) for p in (5, 7, 11, 13)}
        return values == {5: 16, 7: 20, 11: 24, 13: 28}, f"count formula {values}"

    def bounds():
        values = (wb.scans.bound(3, "hall"), wb.scans.bound(3, "mann"), wb.scans.bound(5, "metabelian"))
        return values == (11, 12, 41), f"bounds {values}"

    results.append(step("🔎 Consistency checks...", consistency))
    results.append(step("🔎 Extraspecial group of order 27...", extraspecial))
    results.append(step("🔎 Sylow 2-subgroup of Sym(16)...", sylow))
    results.append(step("🧮 Count formula...", counts))
    results.append(step("🧮 Order bounds...", bounds))

    for p in census_primes:
        def census(p=p):
            report = wb.verify(p, samples=2)
            return report.passed, f"p={p}: {report.two_small} two-small classes (expected {report.expected})"

        results.append(step(f"📚 Census of maximal-class groups of order {p}^6...", census))

    passed = sum(results)
    print(f"\n{'🎉' if passed == len(results) else '⚠️ '} {passed}/{len(results)} checks passed")
    return passed == len(results)


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Run the derq acceptance checks")
    parser.add_argument("--census", type=int, nargs="*", default=[3],
                        help="Primes to run the full census for (5 and 7 take minutes)")
    args = parser.parse_args()
    sys.exit(0 if run_verification(args.census) else 1)
