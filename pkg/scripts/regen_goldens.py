#!/usr/bin/env python3
"""Regenerate the golden enumeration files from scratch.

Only needed after an intentional change to the enumeration order or the
line format; `acm verify` and the regression tests diff against these.
"""

import argparse

from delpezzo.goldens import write_golden_dir


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("directory", nargs="?", default="golden")
    args = parser.parse_args()
    write_golden_dir(args.directory)
    print(f"wrote golden files for X0..X6 and Q to {args.directory}/")


if __name__ == "__main__":
    main()
