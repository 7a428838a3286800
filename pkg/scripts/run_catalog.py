#!/usr/bin/env python
"""Run the expected-verdict suite for every catalog entry.

Produces one combined JSON document (deterministic: running it twice on the
same build yields byte-identical output).  Exits 0 when every entry agrees
with its expected verdicts, 1 otherwise.
"""

from __future__ import annotations

import argparse
import json
import sys

from shiftchaos import catalog


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", help="write the combined document here "
                                      "instead of stdout")
    args = parser.parse_args(argv)
    suites = []
    ok = True
    for name in catalog.names():
        report = catalog.run_expected_suite(name)
        ok = ok and report.verdict == "agrees"
        suites.append(report.to_dict())
    doc = json.dumps({"suites": suites}, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
