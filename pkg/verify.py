#!/usr/bin/env python3
"""
System Verification Test

Run this script to check the installation and replay the acceptance sweeps.

    python verify.py           # reduced limits, a few seconds
    python verify.py --full    # the full limits, several minutes
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# (family, k, limit) at reduced and at full scale
REDUCED_SWEEPS = [
    ("THM1", 3, 10**7),
    ("THM1", 5, 10**9),
    ("THM2", 4, 10**6),
    ("THM2", 8, 10**6),
    ("THM3", 6, 10**6),
    ("THM3", 10, 10**6),
]
FULL_SWEEPS = [
    ("THM1", 3, 10**10),
    ("THM1", 5, 10**10),
    ("THM2", 4, 10**8),
    ("THM2", 8, 10**8),
    ("THM3", 6, 10**8),
    ("THM3", 10, 10**8),
]


def print_header(text):
    print("\n" + "=" * 60)
    print(f"  {text}")
    print("=" * 60)


def check_python():
    """Check Python version"""
    print_header("Checking Python Version")
    version = sys.version_info
    print(f"Python {version.major}.{version.minor}.{version.micro}")

    if version.major >= 3 and version.minor >= 10:
        print("✅ Python version OK")
        return True
    else:
        print("❌ Python 3.10+ required")
        return False


def check_dependencies():
    """Check Python dependencies"""
    print_header("Checking Python Dependencies")

    required_packages = ["numpy", "pydantic", "pydantic_settings", "loguru"]
    missing = []

    for package in required_packages:
        try:
            __import__(package)
            print(f"✅ {package}")
        except ImportError:
            print(f"❌ {package} not found")
            missing.append(package)

    if missing:
        print(f"\n❌ Missing packages: {', '.join(missing)}")
        print("Run: pip install -r requirements.txt")
        return False

    print("✅ All dependencies installed")
    return True


def run_simple_test():
    """Run a simple import test"""
    print_header("Testing Imports")

    try:
        from config.settings import settings
        print(f"✅ Can import settings (threads={settings.THREADS})")

        from src.arith import factor, is_prime
        print("✅ Can import arithmetic")

        from src.core.local import local_report
        print("✅ Can import local checker")

        from src.families import generate, witness
        print("✅ Can import families")

        from src.cli.main import run
        print("✅ Can import CLI")

        print("✅ All imports successful")
        return True
    except Exception as e:
        print(f"❌ Import error: {e}")
        return False


def check_sweeps(full):
    """Search, witness and local-check every family target"""
    from src.families import Family, sweep

    print_header("Family Sweeps" + (" (full)" if full else " (reduced)"))
    all_good = True

    for family, k, limit in FULL_SWEEPS if full else REDUCED_SWEEPS:
        summary = sweep(Family(family), k, limit, generic_bound=100, max_level=12)
        status = "✅" if summary.clean else "❌"
        print(
            f"{status} {family} k={k} limit={limit:.0e}: {summary.targets} targets, "
            f"{summary.z_checked} z searched, {summary.witnesses_verified} witnesses, "
            f"{summary.representations_found} found, {summary.obstructed} obstructed, "
            f"{summary.undecided} undecided"
        )
        all_good = all_good and summary.clean and summary.targets > 0

    return all_good


def check_obstruction_control():
    """n = 7, k = 4 with z even must be obstructed at q = 2"""
    from src.core.local import local_report
    from src.core.models import LocalOutcome, ResidueClass

    print_header("Obstruction Control")
    report = local_report(7, 4, ResidueClass(r=0, m=2))
    verdict = next(v for v in report.verdicts if v.q == 2)
    if report.outcome is LocalOutcome.OBSTRUCTED and verdict.status.value == "obstructed":
        print(f"✅ obstructed at q=2, level {verdict.level}")
        return True
    print(f"❌ expected an obstruction, got {report.outcome.value}")
    return False


def check_two_squares(full):
    """Factorization test against brute force"""
    from src.core.two_squares import is_sum_of_two_squares, two_square_representations

    limit = 10**6 if full else 2 * 10**4
    print_header(f"Two-Squares Oracle (n <= {limit})")
    bad = [n for n in range(limit + 1) if is_sum_of_two_squares(n) != bool(two_square_representations(n))]
    if bad:
        print(f"❌ {len(bad)} disagreements, first {bad[0]}")
        return False
    print("✅ exact agreement")
    return True


def check_density():
    """THM1 k=3 count at 10^12 within [0.5, 2] of the prediction; Landau normalisation stable"""
    from src.families import Family, density_report, landau_report

    print_header("Density")
    row = density_report(Family.THM1, 3, [10**12])[0]
    density_ok = 0.5 <= row.ratio <= 2.0
    print(f"{'✅' if density_ok else '❌'} THM1 k=3: {row.actual_count} targets, ratio {row.ratio:.3f}")

    rows = landau_report([10**5, 10**6, 10**7])
    drifts = [abs(b.normalized - a.normalized) / a.normalized for a, b in zip(rows, rows[1:])]
    landau_ok = all(r.normalized > 0 for r in rows) and all(d < 0.1 for d in drifts)
    for r in rows:
        print(f"   N={r.limit:.0e}: count {r.count}, normalized {r.normalized:.4f}")
    print(f"{'✅' if landau_ok else '❌'} Landau drift {', '.join(f'{d:.2%}' for d in drifts)}")
    return density_ok and landau_ok


def main():
    full = "--full" in sys.argv[1:]
    print("""
    ╔═══════════════════════════════════════════════════════╗
    ║   sqpow - System Check                                ║
    ╚═══════════════════════════════════════════════════════╝
    """)

    results = []

    results.append(("Python Version", check_python()))
    results.append(("Dependencies", check_dependencies()))
    results.append(("Import Test", run_simple_test()))
    if results[-1][1]:
        from loguru import logger

        logger.remove()
        logger.add(sys.stderr, level="WARNING")
        results.append(("Family Sweeps", check_sweeps(full)))
        results.append(("Obstruction Control", check_obstruction_control()))
        results.append(("Two-Squares Oracle", check_two_squares(full)))
        results.append(("Density", check_density()))

    # Summary
    print_header("Summary")

    passed = sum(1 for _, result in results if result)
    total = len(results)

    for name, result in results:
        status = "✅ PASS" if result else "❌ FAIL"
        print(f"{status}  {name}")

    print(f"\nResults: {passed}/{total} checks passed")

    if passed == total:
        print("\n🎉 All checks passed!")
        if not full:
            print("Run `python verify.py --full` for the full limits.")
        return 0
    else:
        print("\n⚠️  Some checks failed. See the details above.")
        return 1


if __name__ == "__main__":
    sys.exit(main())
