#!/usr/bin/env python3
"""
Demo script for the Hyperelliptic Curve Census.
"""

import sys
import time
from pathlib import Path

# Add the current directory to Python path
sys.path.insert(0, str(Path(__file__).parent))

from hyperelliptic_census.analysis.stats import isogeny_count_estimate, w3_summary
from hyperelliptic_census.core.census import census_summary
from hyperelliptic_census.core.models import RunConfig
from hyperelliptic_census.core.streaming import CensusStreamer
from hyperelliptic_census.obstructions.obstruct import (
    obstruction_proportions,
    obstruction_reports,
)
from hyperelliptic_census.validation.validators import CensusValidator


def run_demo():
    """Walk through a census, its verification and the obstruction tables."""

    print("🚀 Hyperelliptic Curve Census Demo")
    print("=" * 50)

    output_dir = Path("./demo_output")
    output_dir.mkdir(exist_ok=True)

    # Demo 1: census
    print("\n📊 Demo 1: Genus-3 census over GF(2) and GF(4)")
    print("-" * 30)

    paths = []
    for n in (1, 2):
        out = output_dir / f"g3_n{n}.jsonl"
        config = RunConfig(genus=3, n=n, jobs=1, with_counts=3, output=str(out))
        streamer = CensusStreamer(config)
        records = streamer.run()
        streamer.write(records)
        paths.append(out)
        summary = census_summary(records)
        print(f"✅ GF(2^{n}): {len(records):,} classes in {streamer.elapsed:.2f}s")
        print(f"   2-rank distribution: {summary['per_two_rank']}")

    # Demo 2: verification
    print("\n🔍 Demo 2: Verifying the census files")
    print("-" * 30)

    validator = CensusValidator(max_ext=4)
    for path in paths:
        report = validator.validate_file(str(path))
        s = report["summary"]
        status = "✅" if s["invalid_records"] == 0 else "❌"
        print(f"{status} {path.name}: {s['valid_records']:,}/{s['total_records']:,} valid")

    # Demo 3: obstructions
    print("\n🚧 Demo 3: Residue-pattern obstructions")
    print("-" * 30)

    for g in (3, 4):
        for higher_power in (False, True):
            label = "higher-power" if higher_power else "parity"
            blocked = [r for r in obstruction_reports(g, higher_power=higher_power)
                       if r.verdict.value == "obstructed"]
            print(f"   g={g} ({label}): {', '.join(str(r.pattern) for r in blocked)}")

    for row in obstruction_proportions(6):
        print(f"   g={row['genus']}: {row['obstructed']}/{row['patterns']} obstructed")

    # Demo 4: statistics
    print("\n⚡ Demo 4: Genus-3 Weil polynomials by residue class")
    print("-" * 30)

    start_time = time.time()
    frame = w3_summary([1, 2, 3], with_tau=True)
    print(frame.to_string(index=False))
    print(f"⏱️  Computed in {time.time() - start_time:.2f}s")
    print(f"   Leading-order isogeny-class estimate at q=8: {isogeny_count_estimate(3, 8)}")

    print(f"\n✅ Demo complete! Check the output in: {output_dir}")
    print("\n🎯 Next steps:")
    print("   1. Try the CLI: hyperelliptic-census --help")
    print("   2. Verify a census: hyperelliptic-census verify --in demo_output/g3_n2.jsonl")
    print("   3. Scale up: hyperelliptic-census enumerate --genus 3 --n 4 --out g3_n4.jsonl")


def validate_installation():
    """Check that the package imports and answers a known case."""

    print("🔍 Validating installation...")

    try:
        from hyperelliptic_census.obstructions.obstruct import generate_obstructions

        print("✅ All imports successful")

        patterns = sorted(str(p) for p in generate_obstructions(3))
        if patterns == ["011", "101"]:
            print("✅ Genus-3 obstructions match")
        else:
            print(f"❌ Unexpected genus-3 obstructions: {patterns}")
            return False

        print("✅ Installation validation complete!")
        return True

    except Exception as e:
        print(f"❌ Validation failed: {e}")
        return False


if __name__ == "__main__":
    print("🎬 Starting Hyperelliptic Curve Census Demo")

    if not validate_installation():
        print("❌ Installation validation failed. Please check your setup.")
        sys.exit(1)

    try:
        run_demo()
    except KeyboardInterrupt:
        print("\n⏹️  Demo interrupted by user")
    except Exception as e:
        print(f"\n❌ Demo failed: {e}")
        import traceback
        traceback.print_exc()
        sys.exit(1)
