#!/usr/bin/env python3
"""Compute, verify or stamp the sha256 checksum line of a uavwx data file.

The checksum covers every non-comment line (lines not starting with '#'),
each terminated by a single '\n', in file order.
"""
import argparse
import hashlib
import sys


def body_digest(lines):
    h = hashlib.sha256()
    for line in lines:
        if line.startswith("#"):
            continue
        h.update(line.rstrip("\r\n").encode() + b"\n")
    return h.hexdigest()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("files", nargs="+")
    ap.add_argument("--stamp", action="store_true", help="rewrite the '# sha256:' line in place")
    args = ap.parse_args()
    status = 0
    for path in args.files:
        with open(path) as fh:
            lines = fh.readlines()
        digest = body_digest(lines)
        if args.stamp:
            out = [l for l in lines if not l.startswith("# sha256:")]
            # checksum line goes right after the leading comment block
            i = 0
            while i < len(out) and out[i].startswith("#"):
                i += 1
            out.insert(i, f"# sha256: {digest}\n")
            with open(path, "w") as fh:
                fh.writelines(out)
            print(f"{path}: stamped {digest}")
        else:
            stamped = [l.split(":", 1)[1].strip() for l in lines if l.startswith("# sha256:")]
            ok = bool(stamped) and stamped[0] == digest
            print(f"{path}: {'ok' if ok else 'MISMATCH'} {digest}")
            status |= 0 if ok else 1
    return status


if __name__ == "__main__":
    sys.exit(main())
