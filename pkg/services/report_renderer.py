"""
テキストレポートのレンダリング
templates/reports.yaml の jinja2 テンプレートを読み込んで整形する
"""
import csv
import io
import json
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from jinja2 import Environment, StrictUndefined, TemplateError

import templates
from core.errors import ConfigurationError
from core.models import AnalysisReport, ScanReport
from services.logger import Logger

logger = Logger("ReportRenderer")

DEFAULT_TEMPLATE_FILE = Path(templates.__file__).parent / "reports.yaml"


class ReportRenderer:
    """AnalysisReport / ScanReport を text・json・csv に整形"""

    def __init__(self, template_file: Optional[Path] = None):
        self.template_file = Path(template_file) if template_file else DEFAULT_TEMPLATE_FILE
        self.env = Environment(
            trim_blocks=True,
            lstrip_blocks=True,
            undefined=StrictUndefined,
            autoescape=False,
        )
        self.templates: Dict[str, str] = self._load_templates()

    def _load_templates(self) -> Dict[str, str]:
        """YAMLからテンプレート文字列を読み込み"""
        try:
            with open(self.template_file, 'r', encoding='utf-8') as f:
                data = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            raise ConfigurationError(f"failed to load report templates {self.template_file}: {e}") from e
        loaded = {k: v for k, v in data.items() if isinstance(v, str) and k != "version"}
        logger.debug(f"Loaded report templates: {sorted(loaded)}")
        return loaded

    def render(self, name: str, /, **context: Any) -> str:
        source = self.templates.get(name)
        if source is None:
            raise ConfigurationError(f"unknown report template: {name}")
        try:
            text = self.env.from_string(source).render(**context)
        except TemplateError as e:
            raise ConfigurationError(f"failed to render {name}: {e}") from e
        return text.rstrip("\n")

    # ------------------------------------------------------------------

    def render_analysis(self, report: AnalysisReport, fmt: str = "text") -> str:
        if fmt == "json":
            return json.dumps(report.model_dump(), ensure_ascii=False, indent=2)
        if fmt == "csv":
            output = io.StringIO()
            writer = csv.writer(output, lineterminator="\n")
            writer.writerow(["predicate", "verdict"])
            for name, verdict in report.verdicts.items():
                writer.writerow([name, verdict.render()])
            return output.getvalue().rstrip("\n")
        inversion_text = ""
        if report.inversion_triples is not None:
            inversion_text = " ".join(f"[{','.join(t)}]" for t in report.inversion_triples) or "(none)"
        return self.render("analysis", report=report, inversion_text=inversion_text)

    def render_scan(self, report: ScanReport, fmt: str = "table") -> str:
        if fmt == "json":
            return json.dumps(report.model_dump(), ensure_ascii=False, indent=2)
        if fmt == "csv":
            output = io.StringIO()
            writer = csv.writer(output, lineterminator="\n")
            writer.writerow(["n", "product", "fishburn_2n", "comparison"])
            for row in report.rows:
                writer.writerow([row.n, row.product, row.fishburn_2n, row.comparison])
            trailer = f"n={report.first_exceedance}" if report.first_exceedance is not None else "none"
            return output.getvalue() + f"FIRST-EXCEEDANCE {trailer}"
        return self.render("scan", report=report)
