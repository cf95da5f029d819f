import json
import pathlib

import jsonschema
import pytest

import hallinv

SCHEMAS = pathlib.Path(__file__).resolve().parents[2] / "docs" / "schemas"

CASES = [
    ("parse", ["parse", "--fixture", "S2"]),
    ("abelianize", ["abelianize", "--fixture", "N3"]),
    ("alexander", ["alexander", "--fixture", "A2134"]),
    ("beta", ["beta", "--fixture", "A31425", "--p", "2", "--q", "3"]),
    ("delta", ["delta", "--fixture", "A21345", "--target", "mpq:2,3"]),
    ("delta", ["delta", "--fixture", "F4", "--target", "ab:2,4"]),
    ("delta", ["delta", "--fixture", "F2", "--target", "a4"]),
    ("cover", ["cover", "--fixture", "N3", "--order", "2", "--images", "1,0,0", "--q", "3", "--oracle"]),
    ("census", ["census", "--fixture", "F2", "--k", "4", "--normal", "--abelian-quotient"]),
    ("census", ["census", "--fixture", "F2", "--k", "3", "--conjugacy"]),
    ("oracle", ["oracle", "--fixture", "F2", "--target", "s3"]),
    ("oracle", ["oracle", "--fixture", "N3", "--cover", "--order", "2", "--images", "1,0,0"]),
    ("table", ["table1", "--rows", "F2,N3"]),
    ("table", ["table2", "--rows", "A2134"]),
]


@pytest.mark.parametrize("schema,args", CASES)
def test_report_matches_schema(schema, args):
    code, out, err = hallinv.run(args)
    assert code == 0, err
    report = json.loads(out)
    jsonschema.validate(report, json.loads((SCHEMAS / f"{schema}.json").read_text()))
    assert json.loads(json.dumps(report)) == report


def test_exit_codes():
    assert hallinv.run(["beta", "--fixture", "nope", "--p", "2", "--q", "3"])[0] == 1
    assert hallinv.run(["oracle", "--fixture", "F4", "--target", "s3", "--budget", "10"])[0] == 2
