from datetime import datetime
from typing import Dict, Optional

from src.core.models import SweepReport

PROVENANCE_FIELDS = ("case", "b", "bit_length", "bound_satisfied", "r", "c", "tau", "z", "sigma", "sigma_cubed_vs_n")


def _format_value(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, int) and value >= 1 << 32:
        return f"0x{value:x}"
    return str(value)


def generate_provenance_report(provenance: Dict) -> str:
    """
    Render forge.explain() output as aligned `name: value` lines.

    Large integers are printed in hex; missing values as '-'.
    """
    lines = ["forgery provenance"]
    width = max(len(name) for name in PROVENANCE_FIELDS)
    for name in PROVENANCE_FIELDS:
        if name in provenance:
            lines.append(f"  {name.ljust(width)} : {_format_value(provenance[name])}")
    return "\n".join(lines)


def generate_sweep_markdown(report: SweepReport, generated_at: Optional[datetime] = None) -> str:
    """
    Generate a Markdown report of a bound sweep.

    :param report: sweep results
    :param generated_at: timestamp to print; omitted when None so reruns match
    :return: Markdown-formatted string
    """
    df = report.to_dataframe()
    bound = report.bit_length / 3 - 3
    lines = []

    lines.append("# Attack Bound Sweep")
    if generated_at is not None:
        lines.append(f"Generated: {generated_at.strftime('%Y-%m-%d %H:%M:%S')}")
    lines.append("")

    lines.append("## Parameters")
    lines.append(f"- Modulus bits: {report.bit_length}")
    lines.append(f"- Transform: {report.transform.value}")
    lines.append(f"- Seed: {report.seed if report.seed is not None else 'OS entropy'}")
    lines.append(f"- Bound: b < {bound:.2f}")
    lines.append("")

    lines.append("## Results")
    if df.empty:
        lines.append("No trials were run.")
    else:
        shown = df.assign(acceptance_rate=df["acceptance_rate"].map(lambda x: f"{x:.2%}"))
        lines.append(shown.to_markdown(index=False))
        lines.append("")

        inside = df[df["bound_satisfied"]]
        outside = df[~df["bound_satisfied"]]
        lines.append("## Summary")
        lines.append(f"- Rows inside the bound: {len(inside)}, all fully accepted: "
                     f"{bool((inside['flawed_accepts'] == inside['trials']).all())}")
        if not outside.empty:
            failing = outside[outside["flawed_accepts"] < outside["trials"]]
            first = int(failing["b"].min()) if not failing.empty else None
            lines.append(f"- Rows outside the bound: {len(outside)}, "
                         f"first b with rejections: {first if first is not None else 'none observed'}")

    return "\n".join(lines)
