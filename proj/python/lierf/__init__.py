"""Python front end for the lierf core library."""

import json as _json

from lierf._core import (  # noqa: F401
    SUITES,
    ParseSyntaxError,
    canonical,
    eigenvalues,
    em_integrand,
    inner_product,
    kernel_symmetry,
    moment,
    multiplicity,
    normal_order,
    parse_index,
    run_suite_json,
    table1,
    vev,
)


def run_suite(name, **kwargs):
    """Run a verification suite and return the report as a dict."""
    return _json.loads(run_suite_json(name, **kwargs))
