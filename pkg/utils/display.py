"""Display formatting utilities using rich library."""

from typing import Dict, Optional

import pandas as pd
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from models.coloring import EdgeColoring, Verdict
from models.configuration import Configuration
from models.graph import Graph
from models.weights import DischargeReport, fraction_text


class DisplayFormatter:
    """Formats colorings, verdicts and reports for terminal display."""

    FAMILY_COLORS = {
        "A1": "cyan",
        "A2": "blue",
        "A3": "magenta",
        "A4": "green",
    }

    def __init__(self, console: Optional[Console] = None):
        """Initialize the display formatter."""
        self.console = console or Console()

    def create_coloring_table(self, coloring: EdgeColoring, title: str = "Edge Coloring", limit: Optional[int] = None) -> Table:
        """Create a rich table listing edges and their colors.

        Args:
            coloring: The coloring to list.
            title: Table title.
            limit: Show at most this many edges.

        Returns:
            Rich Table object.
        """
        table = Table(title=title, show_header=True, header_style="bold", border_style="dim")
        table.add_column("u", justify="right")
        table.add_column("v", justify="right")
        table.add_column("Color", justify="right", style="bold")
        items = coloring.items()
        for (u, v), color in items[:limit] if limit else items:
            table.add_row(str(u), str(v), str(color))
        if limit and len(items) > limit:
            table.caption = f"{len(items) - limit} more edges not shown"
        return table

    def display_coloring_summary(
        self,
        graph: Graph,
        coloring: EdgeColoring,
        palette_size: int,
        steps: int = 0,
        fallback_incidents: int = 0,
    ) -> None:
        """Display summary statistics of a finished coloring."""
        used = coloring.colors_used()
        summary = Text()
        summary.append(f"  Vertices: {graph.n}\n")
        summary.append(f"  Edges: {graph.m}\n")
        summary.append(f"  Max degree: {graph.max_degree}\n")
        summary.append(f"  Palette (max degree + 7): {palette_size}\n")
        summary.append(f"  Colors used: {len(used)} (largest {coloring.max_color})\n", style="green")
        summary.append(f"  Extension steps: {steps}\n")
        style = "yellow" if fallback_incidents else "white"
        summary.append(f"  Fallback incidents: {fallback_incidents}\n", style=style)
        self.console.print(Panel(summary, title="Coloring", border_style="dim"))

    def display_verdict(self, verdict: Verdict) -> None:
        if verdict.accepted:
            self.console.print("[bold green]accepted[/bold green]")
            return
        self.console.print(f"[bold red]rejected[/bold red] ({verdict.reason}): {verdict.detail}")
        if verdict.cycle is not None:
            i, j = verdict.cycle.colors
            walk = " ".join(str(x) for x in verdict.cycle.vertices + verdict.cycle.vertices[:1])
            self.console.print(f"  bichromatic ({i}, {j}) cycle: {walk}")

    def display_configuration(self, cfg: Optional[Configuration]) -> None:
        if cfg is None:
            self.console.print("none")
            return
        style = self.FAMILY_COLORS.get(cfg.kind.family, "white")
        table = Table(title=Text(cfg.kind.value, style=style), show_header=True, header_style="bold", border_style="dim")
        table.add_column("Witness")
        table.add_column("Value")
        for key, value in cfg.to_dict()["witness"].items():
            table.add_row(key, str(value))
        u, v = cfg.removal_edge
        table.add_row("removal edge", f"{u}-{v}")
        self.console.print(table)

    def display_discharge(self, report: DischargeReport, limit: int = 20) -> None:
        """Display totals and the most negative elements of a discharging run."""
        summary = Text()
        summary.append(f"  Components of H: {report.components}\n")
        summary.append(f"  Initial total: {fraction_text(report.initial.total)}\n")
        summary.append(f"  Final total: {fraction_text(report.final.total)}\n")
        summary.append(f"  Transfers: {len(report.transfers)}\n")
        conserved = "yes" if report.conserved else "NO"
        summary.append(f"  Conserved: {conserved}\n", style="green" if report.conserved else "bold red")
        summary.append(f"  Negative elements: {len(report.negatives)}\n")
        if report.ambiguities or report.unmatched:
            summary.append(
                f"  Rule audit: {len(report.ambiguities)} ambiguous, {len(report.unmatched)} unmatched\n",
                style="yellow",
            )
        self.console.print(Panel(summary, title="Discharging", border_style="dim"))

        if report.negatives:
            table = Table(title="Negative final weights", show_header=True, header_style="bold", border_style="dim")
            table.add_column("Element")
            table.add_column("Final", justify="right", style="red")
            weights = {f"v{v}": w for v, w in report.final.vertex_weights.items()}
            for element in report.negatives[:limit]:
                value = weights.get(element)
                table.add_row(element, fraction_text(value) if value is not None else "")
            self.console.print(table)

    def create_corpus_table(self, summary: pd.DataFrame, title: str = "Corpus by family") -> Table:
        """Create a rich table from the per-family corpus summary frame."""
        table = Table(title=title, show_header=True, header_style="bold", border_style="dim")
        table.add_column("Family", style="cyan")
        for column in summary.columns:
            table.add_column(str(column).replace("_", " ").title(), justify="right")
        for family, row in summary.iterrows():
            table.add_row(str(family), *[self._cell(row[c]) for c in summary.columns])
        return table

    def display_corpus_summary(self, summary: pd.DataFrame, totals: Dict[str, object], histogram: Dict[int, int]) -> None:
        """Display the per-family table and the overall totals panel."""
        self.console.print(self.create_corpus_table(summary))
        text = Text()
        text.append(f"  Instances: {totals.get('instances', 0)}\n")
        text.append(f"  Verified: {totals.get('verified', 0)}\n", style="green")
        failed = totals.get("failed", 0)
        text.append(f"  Failed: {failed}\n", style="bold red" if failed else "white")
        incidents = totals.get("fallback_incidents", 0)
        text.append(f"  Fallback incidents: {incidents}\n", style="yellow" if incidents else "white")
        text.append(f"  Smallest margin to max degree + 7: {totals.get('min_margin', '')}\n")
        observed = totals.get("within_delta_plus_2")
        if observed is not None:
            text.append(f"  Oracle index <= max degree + 2: {observed}\n")
        if histogram:
            text.append("\n  Colors used:\n")
            for colors, count in sorted(histogram.items()):
                text.append(f"    - {colors}: {count}\n")
        self.console.print(Panel(text, title="Summary", border_style="dim"))

    @staticmethod
    def _cell(value) -> str:
        if isinstance(value, float):
            return f"{value:.2f}"
        return str(value)

    def display_error(self, message: str) -> None:
        """Display an error message.

        Args:
            message: Error message to display.
        """
        self.console.print(f"[bold red]Error:[/bold red] {message}", highlight=False)

    def display_warning(self, message: str) -> None:
        """Display a warning message.

        Args:
            message: Warning message to display.
        """
        self.console.print(f"[yellow]Warning:[/yellow] {message}", highlight=False)

    def display_info(self, message: str) -> None:
        """Display an info message.

        Args:
            message: Info message to display.
        """
        self.console.print(f"[blue]Info:[/blue] {message}", highlight=False)
