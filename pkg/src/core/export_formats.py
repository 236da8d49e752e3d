"""
Sweep report exports: Markdown, HTML with the acceptance chart, CSV and JSON.
"""
import json
from pathlib import Path
from typing import Union

from src.core.export_utils import markdown_to_html, write_report
from src.core.models import SweepReport
from src.core.reporting import generate_sweep_markdown
from src.core.visualizations import generate_acceptance_chart

SWEEP_FORMATS = ("md", "html", "csv", "json")


def sweep_to_csv(report: SweepReport) -> str:
    """One CSV row per compared-bit count, columns as in SWEEP_COLUMNS."""
    return report.to_dataframe().to_csv(index=False)


def sweep_to_json(report: SweepReport) -> str:
    """
    Rows plus the sweep parameters.

    Rows go through pandas' own encoder so numpy scalars come out as plain
    JSON numbers and booleans.
    """
    document = {
        "metadata": {
            "bit_length": report.bit_length,
            "transform": report.transform.value,
            "seed": report.seed,
        },
        "data": json.loads(report.to_dataframe().to_json(orient="records")),
    }
    return json.dumps(document, indent=2)


def sweep_to_html(report: SweepReport) -> str:
    chart = generate_acceptance_chart(report.to_dataframe(), report.bit_length)
    return markdown_to_html(generate_sweep_markdown(report), chart=chart)


RENDERERS = {
    "md": generate_sweep_markdown,
    "html": sweep_to_html,
    "csv": sweep_to_csv,
    "json": sweep_to_json,
}


def export_sweep_report(report: SweepReport, output_dir: Union[str, Path], filename: str, format: str = "md") -> str:
    """
    Write a sweep report in the requested format.

    Args:
        report: Sweep results
        output_dir: Directory to write into (created if missing)
        filename: File name without extension
        format: One of md, html, csv, json

    Returns:
        Path to created file
    """
    try:
        render = RENDERERS[format]
    except KeyError:
        raise ValueError(f"Unsupported export format: {format}") from None
    return write_report(render(report), output_dir, filename, format)
