"""Markdown rendering of report models through jinja2 templates."""

from functools import lru_cache
from pathlib import Path

from jinja2 import Environment, FileSystemLoader, StrictUndefined
from pydantic import BaseModel

TEMPLATE_DIR = Path(__file__).parent / "templates"


def bracketed(rows: list[list[str]]) -> str:
    """Bracketed rows with right-aligned columns."""
    if not rows or not rows[0]:
        return "[]"
    widths = [max(len(row[j]) for row in rows) for j in range(len(rows[0]))]
    return "\n".join(
        "[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]" for row in rows
    )


@lru_cache
def get_environment() -> Environment:
    env = Environment(
        loader=FileSystemLoader(str(TEMPLATE_DIR)),
        undefined=StrictUndefined,
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
        autoescape=False,
    )
    env.filters["bracketed"] = bracketed
    return env


def render_markdown(report: BaseModel) -> str:
    """Render any report model; the template is chosen by its ``kind``."""
    kind = getattr(report, "kind")
    template = get_environment().get_template(f"{kind}.md.j2")
    return template.render(report=report, render=render_markdown)
