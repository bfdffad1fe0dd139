"""
Text templates for console rendering of reports.
Each command has one template; colours are applied by the CLI.
"""
from typing import Dict, List

from src.verification.state import CheckResult

CHARPOLY_TEMPLATE = """{label}
  {polynomial}"""

SEPARABLE_TEMPLATE = """{subject} [{kind}]
  separable:        {separable}
  repeated factor:  {repeated_factor}{extra}"""

WRONSKIAN_TEMPLATE = """vertex {vertex} [{kind}]
  Wronskian vertex: {is_wronskian}
  gcd(phi, phi_u):  {gcd}
  W(x):             {w_polynomial}
  real roots of W:  {real_root_count}{extra}"""

CONTROLLABLE_TEMPLATE = """graph of order {order} [{kind}]
  controllable:     {controllable}
  connected:        {connected}
  walk rank:        {rank} of {order}
  main eigenvalues: {main_eigenvalue_count}"""

ROOTED_CONTROLLABLE_TEMPLATE = """rooted product of order {order} [{kind}]
  controllable:         {controllable}
  walk rank:            {rank} of {order}
  G controllable:       {g_controllable}
  gcd(phi_H, phi_H^u):  {h_gcd}
  B(mu) on Spec(G):     {bmu}
  deficiency locus:     {locus}"""

COSPECTRAL_TEMPLATE = """products of order {order}
  cospectral:       {cospectral}
  separable:        {separable_1} / {separable_2}
  non-isomorphic:   {non_isomorphic}
  canonical check:  {canonical_confirmation}
  charpoly:         {charpoly}{extra}"""

FAMILY_LINE_TEMPLATE = "  n={n:<3} order={order:<4} pendant={pendant:<4} verified={verified}  {graph}"

CENSUS_TEMPLATE = """census of connected graphs, order {order} [{kind}]
  total:                          {total}
  separable:                      {separable}
  controllable:                   {controllable}
  with a Wronskian vertex:        {wronskian}
  controllable with one:          {controllable_wronskian}"""

CHECK_LINE_TEMPLATE = "  [{mark}] {stage:<16} {name}  ({seconds:.2f}s){detail}"

SUMMARY_TEMPLATE = """
verification summary
  checks passed:   {passed}/{total}
  failed stages:   {failed_stages}
  skipped stages:  {stages_skipped}
  time:            {seconds}s"""


def render(template: str, **fields) -> str:
    return template.format(**fields)


def render_check(result: CheckResult, verbose: bool = False) -> str:
    detail = ""
    if result.detail and (verbose or not result.passed):
        detail = f"\n        {result.detail}"
    return CHECK_LINE_TEMPLATE.format(
        mark="ok" if result.passed else "FAIL",
        stage=result.stage,
        name=result.name,
        seconds=result.seconds,
        detail=detail,
    )


def render_summary(summary: Dict, results: List[CheckResult], verbose: bool = False) -> str:
    """
    Render every check line followed by the totals.

    Args:
        summary: the summary dict produced by the verification workflow
        results: check results in execution order
        verbose: include details of passing checks

    Returns:
        str: the rendered report
    """
    lines = [render_check(r, verbose) for r in results]
    lines.append(SUMMARY_TEMPLATE.format(
        passed=summary["passed"],
        total=summary["total"],
        failed_stages=", ".join(summary["failed_stages"]) or "none",
        stages_skipped=", ".join(summary["stages_skipped"]) or "none",
        seconds=summary["seconds"],
    ))
    return "\n".join(lines)
