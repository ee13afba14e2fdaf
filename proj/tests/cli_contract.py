#!/usr/bin/env python3
"""Exit-code and output contract for the command line tool.

Usage: cli_contract.py <path-to-binary>
"""

import subprocess
import sys

BINARY = sys.argv[1]
failures = []


def run(args, ring=None):
    cmd = [BINARY]
    if ring:
        cmd += ["--ring", ring]
    cmd += args
    proc = subprocess.run(cmd, capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def expect(name, args, ring=None, code=0, contains=(), err_contains=()):
    rc, out, err = run(args, ring)
    ok = rc == code
    for needle in contains:
        ok = ok and needle in out
    for needle in err_contains:
        ok = ok and needle in err
    if ok:
        print(f"ok   {name}")
    else:
        failures.append(name)
        print(f"FAIL {name}: rc={rc} (wanted {code})\nstdout: {out}\nstderr: {err}")


# Normal-form printing, bit-exact.
expect("reduce", ["reduce", "x3^3"], code=0, contains=["-x1^2*x3 - x2^2*x3"])
expect("reduce-relation", ["reduce", "x1^2+x2^2+x3^2"], contains=["0"])

# Local nilpotency of the odd border family.
expect("lnd-true", ["lnd", "--matrix", "0,0,-1;0,0,-i;1,i,0"],
       ring="n=3;m=2,2,2;field=4", contains=["LND=true"])
expect("lnd-false", ["lnd", "--matrix", "0,0,0;0,0,-1;0,1,0"], contains=["LND=false"])

# Dimension lines.
expect("linspace-quadratic", ["linspace"], contains=["DIM=4"])
expect("linspace-cubic", ["linspace"], ring="n=3;m=3,3,3;field=4", contains=["DIM=1"])

# Applying a derivation given by images or by matrix.
expect("apply-images", ["apply", "--images", "d(x1)=0; d(x2)=-x3; d(x3)=x2", "x2*x3"],
       contains=["x1^2 + 2*x2^2"])
expect("apply-matrix", ["apply", "--matrix", "0,0,0;0,0,-1;0,1,0", "x1"], contains=["0"])

# Classification and decomposition of the rotation example.
expect("classify", ["classify", "--matrix", "1,0,0;0,1,-1;0,1,1"],
       contains=["CLASS=scalar+skew", "ALPHA=1"])
expect("decompose", ["decompose", "--matrix", "1,0,0;0,1,-1;0,1,1"],
       contains=["ALPHA=1", "SKEW=0,0,0;0,0,-1;0,1,0"])

# A matrix violating the constraints is a domain error (exit 3) with residue.
expect("classify-invalid", ["classify", "--matrix", "0,1,0;0,0,0;0,0,0"],
       ring="n=3;m=3,3,3;field=1", code=3, err_contains=["3*x1^2*x2"])

# Kernel reports.
expect("kernel-trivial", ["kernel", "--matrix", "1,0,0;0,1,-1;0,1,1", "--max-degree", "6"],
       contains=["TRIVIAL_UP_TO=6"])
expect("kernel-nontrivial", ["kernel", "--matrix", "0,0,0;0,0,-1;0,1,0", "--max-degree", "2"],
       contains=["NONTRIVIAL at k=1", "k=1 dim=1 basis=[x1]"])

# Darboux eigenvalue of a monomial.
expect("darboux", ["darboux", "x1^2*x3", "--alpha", "2"],
       ring="n=3;m=3,4,5;field=4", contains=["LAMBDA=26/15", "VERIFIED=true"])

# Scalar search.
expect("find-alpha", ["find-alpha", "--matrix", "0,0,0;0,0,-1;0,1,0",
                      "--max-degree", "6", "--candidates", "1,2,1/2"],
       contains=["ALPHA=1"])
expect("find-alpha-rejects-i", ["find-alpha", "--matrix", "0,0,0;0,0,-1;0,1,0",
                                "--max-degree", "2", "--candidates", "i"],
       contains=["ALPHA=none"])

# Families.
expect("family-odd", ["family", "--odd", "3"],
       contains=["MATRIX=0,0,-1;0,0,-w;1,w,0", "LND=true", "NILPOTENCY_INDEX=3"])
expect("family-even-raises-conductor", ["family", "--even", "4"],
       contains=["conductor raised to 12", "RING=n=4;m=2,2,2,2;field=12", "LND=true"])

# Generators listing.
expect("gens", ["gens"], ring="n=3;m=3,4,5;field=4",
       contains=["epsilon:", "d23: d(x1)=0; d(x2)=-5*x3^4; d(x3)=4*x2^3; certified=true"])

# Grammar error classes all answer with exit code 2 and a position.
expect("parse-error-syntax", ["reduce", "x1 + * x2"], code=2, err_contains=["offset"])
expect("parse-error-arity", ["reduce", "x4"], code=2, err_contains=["offset", "x4"])
expect("parse-error-literal", ["reduce", "i*x1"], ring="n=3;m=2,2,2;field=1",
       code=2, err_contains=["offset", "conductor"])

# Usage errors answer with exit code 1.
expect("usage-bad-flag", ["kernel", "--matrix", "0,0,0;0,0,-1;0,1,0", "--max-degree", "0"],
       code=1)
expect("usage-missing-matrix", ["apply", "x1"], code=1)
expect("usage-unknown-verb", ["frobnicate"], code=1)

# Verify on a restricted grid stays green (small bound keeps it quick).
expect("verify-subset", ["verify", "--max-degree", "2", "--grid", "n=3;m=2,2,2"],
       contains=["PASS normal-form-idempotence", "ALL PASS"])
expect("verify-usage", ["verify", "--max-degree", "0"], code=1)

# Determinism: identical invocations produce identical bytes.
rc1, out1, _ = run(["kernel", "--matrix", "0,0,0;0,0,-1;0,1,0", "--max-degree", "3"])
rc2, out2, _ = run(["kernel", "--matrix", "0,0,0;0,0,-1;0,1,0", "--max-degree", "3"])
if rc1 == rc2 and out1 == out2:
    print("ok   determinism")
else:
    failures.append("determinism")
    print("FAIL determinism")

if failures:
    print(f"{len(failures)} CLI contract check(s) failed: {failures}")
    sys.exit(1)
print("all CLI contract checks passed")
