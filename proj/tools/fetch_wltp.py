#!/usr/bin/env python3
"""Write the WLTP class 3b speed profile as a two-column cycle file (s, km/h).

The profile comes from the `wltp` package (pip install wltp), which carries
the published UNECE GTR 15 tables. Exit status 0 on success, 1 when the
package is missing.
"""
import argparse
import pathlib
import sys


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("output", type=pathlib.Path)
    args = ap.parse_args()
    try:
        from wltp.cycles import class3
    except ImportError:
        print("fetch_wltp: python package 'wltp' not available", file=sys.stderr)
        return 1
    speeds = class3.class_data_b()["cycle"]
    args.output.parent.mkdir(parents=True, exist_ok=True)
    with args.output.open("w") as f:
        f.write("# WLTP class 3b, from the wltp package\n")
        f.write("t_s,v_kmh\n")
        for t, v in enumerate(speeds):
            f.write(f"{t},{float(v):g}\n")
    print(f"fetch_wltp: {len(speeds)} samples -> {args.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
