"""Golden-file checks for the CLI: byte-identical output for a fixed set of
invocations, plus exit-code conventions."""

import subprocess
import sys
from pathlib import Path


def run(binary, *args):
    return subprocess.run([binary, *args], capture_output=True, text=True)


def main():
    binary, data_dir = sys.argv[1], Path(sys.argv[2])
    cases = [
        ("bwb_4310_73.txt", ["bwb", "4,3,1,0|7,3"]),
        ("bwb_4310_22.txt", ["bwb", "4,3,1,0|2,2"]),
        ("chern_2100.txt", ["chern", "2,1,0,0"]),
        ("ext_2100.json", ["ext", "2,1,0,0", "--json"]),
        ("ext_5300.txt", ["ext", "5,3,0,0"]),
        ("koszul_2100.csv", ["koszul", "2,1,0,0", "--csv"]),
        ("koszul_3210.csv", ["koszul", "3,2,1,0", "--csv"]),
        ("kbc_11.txt", ["kbc", "1", "1", "--amax", "3"]),
        ("atomic_3000.txt", ["atomic", "3,0,0,0"]),
        ("endo_2100.txt", ["endo", "2,1,0,0"]),
        ("mixed_1000_10.txt", ["mixed", "1,0,0,0", "1,0"]),
    ]
    failures = 0
    for name, args in cases:
        result = run(binary, *args)
        if result.returncode != 0:
            print(f"FAIL {name}: exit {result.returncode}")
            failures += 1
            continue
        expected = (data_dir / name).read_text()
        if result.stdout != expected:
            print(f"FAIL {name}: output drifted")
            print("--- expected ---")
            print(expected)
            print("--- got ---")
            print(result.stdout)
            failures += 1
        else:
            print(f"ok  {name}")

    # identical invocations must be byte-identical
    a = run(binary, "koszul", "3,2,1,0", "--csv").stdout
    b = run(binary, "koszul", "3,2,1,0", "--csv").stdout
    if a != b:
        print("FAIL determinism")
        failures += 1
    else:
        print("ok  determinism")

    # exit codes: 2 on a parse error, 0 with --help
    if run(binary, "chern", "2,1,0").returncode != 2:
        print("FAIL exit code for a malformed partition")
        failures += 1
    else:
        print("ok  parse error exit code")
    if run(binary, "nonsense").returncode != 2:
        print("FAIL exit code for an unknown verb")
        failures += 1
    else:
        print("ok  unknown verb exit code")
    if run(binary, "--help").returncode != 0:
        print("FAIL --help exit code")
        failures += 1
    else:
        print("ok  help exit code")

    print("golden run:", "FAILURE" if failures else "OK")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
