"""The JSON document format and the command line, driven in-process."""

import json
import tempfile
from pathlib import Path

from quadmorph import osystem, serialize
from quadmorph.cli import run

work = Path(tempfile.mkdtemp())

# library objects serialize to one canonical byte sequence
os_ = osystem.construct_range_maximal(8)
doc = serialize.encode(os_, command="demo", seed=0, version="0.1.0")
text = serialize.dumps(doc)
print(f"document: kind={doc['kind']} dims={doc['dims']} scalars={doc['scalars']}")
print(f"canonical form is {len(text)} bytes, deterministic:",
      text == serialize.dumps(serialize.encode(os_, command="demo", seed=0, version="0.1.0")))

path = work / "osystem.json"
path.write_text(text)
back = serialize.decode(serialize.loads(path.read_text()))
print(f"decoded back: {back.n} members on R^{back.m}")

# the same flows through the CLI; exit code 0 means the math checks out
print("\n$ quadmorph sigma 16")
run(["sigma", "16"])

print("\n$ quadmorph construct qhm --hopf 2 --out hopf2.json")
run(["construct", "qhm", "--hopf", "2", "--out", str(work / "hopf2.json")])
print("$ quadmorph verify hopf2.json")
code = run(["verify", str(work / "hopf2.json")])
print("exit code:", code)

print("\n$ quadmorph eval hopf2.json --point 1,0,0,1")
run(["eval", str(work / "hopf2.json"), "--point", "1,0,0,1"])

print("\n$ quadmorph classify hopf2.json")
run(["classify", str(work / "hopf2.json")])

# a mathematically broken document is rejected with exit code 1
bad = serialize.encode(os_)
bad["matrices"][1] = bad["matrices"][0]  # repeated member breaks the relations
(work / "bad.json").write_text(serialize.dumps(bad))
print("\n$ quadmorph verify bad.json")
code = run(["verify", str(work / "bad.json")])
print("exit code:", code)
