#!/usr/bin/env python3
"""Runs the aaslab binary on representative commands, validates every JSON
report against docs/report.schema.json and compares against golden files.

    check_cli.py BINARY SCHEMA GOLDEN_DIR [--update]
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

# (golden name, argv, expected exit code)
CASES = [
    ("group_info_a5", ["group-info", "A5"], 0),
    ("group_info_parse_error", ["group-info", "A(5)"], 2),
    ("aas_check_psl27", ["aas-check", "PSL(2,7)"], 0),
    ("aas_check_a5_bounds", ["aas-check", "A5", "--bounds"], 0),
    ("aas_check_sl25", ["aas-check", "SL(2,5)"], 1),
    ("aas_check_cap", ["aas-check", "A8", "--max-order", "1000"], 2),
    ("sig_genus_a5", ["sig-genus", "A5", "0;5,5,5"], 0),
    ("sig_genus_fractional", ["sig-genus", "S3", "0;2,3"], 0),
    ("sig_potential_a5", ["sig-potential", "A5", "0;2,3,5"], 1),
    ("sig_potential_list", ["sig-potential", "Heis(3)", "--genus-max", "20"], 0),
    ("sig_decide_d4", ["sig-decide", "D4", "1;4"], 1),
    ("sig_decide_a5", ["sig-decide", "A5", "0;2,5,5"], 0),
    ("sig_decide_a5_item8", ["sig-decide", "A5", "0;2,3,5"], 1),
    ("sig_decide_a5_high_genus", ["sig-decide", "A5", "3;5"], 0),
    ("sig_nonsigs_a5", ["sig-nonsigs", "A5"], 0),
    ("sig_nonsigs_heis3", ["sig-nonsigs", "Heis(3)"], 0),
    ("sig_nonsigs_d4", ["sig-nonsigs", "D4"], 1),
    ("scan_metacyclic", ["scan", "metacyclic", "2,3", "--max-order", "27"], 0),
    ("scan_sl2", ["scan", "sl2", "2,3,4,5"], 0),
    ("product_heis3_c3", ["product-check", "Heis(3)", "C3"], 0),
    ("product_a5_heis3", ["product-check", "A5", "Heis(3)"], 1),
]

VOLATILE = ("timing", "cache")


def main() -> int:
    binary, schema_path, golden_dir = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    update = "--update" in sys.argv[4:]
    validator = jsonschema.Draft202012Validator(json.loads(schema_path.read_text()))
    failed = 0
    with tempfile.TemporaryDirectory() as cache:
        for name, argv, expected_exit in CASES:
            proc = subprocess.run([binary, *argv, "--json", "--cache-dir", cache],
                                  capture_output=True, text=True, timeout=600)
            problems = []
            try:
                report = json.loads(proc.stdout)
            except json.JSONDecodeError as e:
                report = None
                problems.append(f"stdout is not JSON: {e}")
            if proc.returncode != expected_exit:
                problems.append(f"exit {proc.returncode}, expected {expected_exit}")
            if report is not None:
                for err in validator.iter_errors(report):
                    problems.append(f"schema: {'/'.join(map(str, err.absolute_path))}: {err.message}")
                if report.get("exit_code") != proc.returncode:
                    problems.append("exit_code field differs from the process exit code")
                stable = {k: v for k, v in report.items() if k not in VOLATILE}
                golden = golden_dir / f"{name}.json"
                if update:
                    golden.write_text(json.dumps(stable, indent=2) + "\n")
                elif not golden.exists():
                    problems.append(f"missing golden {golden.name}")
                elif json.loads(golden.read_text()) != stable:
                    problems.append(f"differs from {golden.name}")
            failed += bool(problems)
            print(f"{'ok  ' if not problems else 'FAIL'} {name}")
            for p in problems:
                print(f"     {p}")
    print(f"{failed} of {len(CASES)} cases failed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
