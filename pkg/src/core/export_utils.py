"""
Markdown and HTML report files.
"""
from pathlib import Path
from typing import Optional, Union

import markdown

TEMPLATE_PATH = Path(__file__).resolve().parent.parent / "templates" / "report_template.html"

CHART_BLOCK = """
<div class="chart-container">
  <h2>Acceptance by compared-bit count</h2>
  <img src="data:image/png;base64,{chart}" alt="Sweep acceptance chart" class="chart-img">
</div>
"""


def markdown_to_html(report_md: str, chart: Optional[str] = None, template_path: Path = TEMPLATE_PATH) -> str:
    """Render Markdown (tables enabled) into the HTML template, with an optional inline PNG."""
    body = markdown.markdown(report_md, extensions=["tables"])
    if chart:
        body += CHART_BLOCK.format(chart=chart)
    return Path(template_path).read_text(encoding="utf-8").replace("{{content}}", body)


def write_report(text: str, output_dir: Union[str, Path], filename: str, suffix: str) -> str:
    """Write text to <output_dir>/<filename>.<suffix>, creating the directory."""
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    path = output_dir / f"{filename}.{suffix}"
    path.write_text(text, encoding="utf-8")
    return str(path)
