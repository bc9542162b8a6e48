"""Run the orbitope tool on sample inputs and validate every JSON output."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
import referencing


def load_registry(schema_dir):
    resources = []
    for path in schema_dir.glob("*.schema.json"):
        contents = json.loads(path.read_text())
        resources.append((path.name, referencing.Resource.from_contents(contents)))
    return referencing.Registry().with_resources(resources)


def validator(registry, name):
    schema = registry[name].contents
    cls = jsonschema.validators.validator_for(schema)
    cls.check_schema(schema)
    return cls(schema, registry=registry)


def run(tool, *args, expect=0):
    proc = subprocess.run([tool, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        raise SystemExit(f"{args}: exit {proc.returncode}, stderr {proc.stderr}")
    return proc


def main():
    tool, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    registry = load_registry(schema_dir)
    checks = 0

    def check(name, document):
        nonlocal checks
        validator(registry, name).validate(document)
        checks += 1

    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        point = tmp / "point.json"
        point.write_text(json.dumps({"family": {"kind": "so_mn", "m": 2, "n": 3},
                                     "point": {"B": [[0, 2, 0.5], [1, 0, 0]]}}))
        check("point.schema.json", json.loads(point.read_text()))

        for family, x in [("sl_r:3", "diag:2,-1,-1"), ("so_mn:3,2", "sing:2,1"),
                          ("so_mn:2,3", str(point)), ("sl_h:2", "diag:1,-1")]:
            pencil_json = tmp / "pencil.json"
            out = run(tool, "pencil", "--family", family, "--x", x, "--json", str(pencil_json))
            check("pencil.schema.json", json.loads(out.stdout))
            check("pencil.schema.json", json.loads(pencil_json.read_text()))
            out = run(tool, "member", "--family", family, "--x", x, "--y", x)
            check("membership.schema.json", json.loads(out.stdout))
            out = run(tool, "polytope", "--family", family, "--x", x)
            check("polytope.schema.json", json.loads(out.stdout))
            out = run(tool, "faces", "--family", family, "--x", x)
            check("faces.schema.json", json.loads(out.stdout))
            out = run(tool, "verify", "--family", family, "--x", x, "--samples", "100", "--trials", "20")
            check("verify.schema.json", json.loads(out.stdout))

        out = run(tool, "member", "--family", "sl_r:3", "--x", "diag:5,3,1", "--y", "diag:4,3,2", "--center")
        check("membership.schema.json", json.loads(out.stdout))
        out = run(tool, "polytope", "--family", "sl_r:3", "--x", "diag:1,1,1", expect=1)
        check("error.schema.json", json.loads(out.stderr))

    print(f"{checks} documents validated")


if __name__ == "__main__":
    main()
