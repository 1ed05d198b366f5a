"""
Command-line interface for argsum.

Usage:
    argsum summarize --input doc.txt          # Summarize a document
    argsum compare "A but B." "B but A."      # Bag-of-words cosine of two sentences
    argsum check                              # Validate lexicon, topos base and stopwords

Exit codes: 0 success, 1 empty input, 2 usage or resource errors.
"""

from pathlib import Path
from typing import NoReturn, Optional

import structlog
import typer
from dotenv import load_dotenv
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape

from config.settings import Settings

from .baseline import compare_sentences
from .connectives import Lexicon, load_lexicon
from .errors import EmptyDocument, ResourceParseError
from .log import configure_logging
from .orientation import generate_constraints
from .pipeline import ArgumentativeSummarizer, OutputFormat, SummaryConfig, render
from .resources import DEMO_LEXICON
from .text import load_stopwords, segment_sentences
from .topoi import ToposBase, load_topos_base

app = typer.Typer(
    name="argsum",
    help="Argumentation-aware extractive summarizer",
    add_completion=False,
)
console = Console(soft_wrap=True, highlight=False)
err_console = Console(stderr=True, soft_wrap=True, highlight=False)
logger = structlog.get_logger()

LEXICON_OPTION = typer.Option(None, "--lexicon", help="Connective lexicon file")
TOPOI_OPTION = typer.Option(None, "--topoi", help="Topos base file")
STOPWORDS_OPTION = typer.Option(None, "--stopwords", help="Stopword list file")


def load_config() -> Settings:
    """Load configuration from environment and .env file."""
    load_dotenv()
    return Settings()


def _fail(message: str, code: int) -> NoReturn:
    err_console.print(f"[red]✗[/red] {escape(message)}")
    raise typer.Exit(code=code)


def _require_file(path: Path, label: str) -> None:
    if not path.is_file():
        _fail(f"{label} file not found: {path}", 2)


def _load_stopwords(path: Path) -> frozenset[str]:
    _require_file(path, "stopwords")
    try:
        return load_stopwords(path)
    except (OSError, UnicodeDecodeError) as e:
        _fail(f"cannot read {path}: {e}", 2)


def _load_resources(
    lexicon_path: Path, topoi_path: Path, stopwords: frozenset[str]
) -> tuple[Lexicon, ToposBase]:
    _require_file(lexicon_path, "lexicon")
    _require_file(topoi_path, "topoi")
    try:
        return load_lexicon(lexicon_path), load_topos_base(topoi_path, stopwords=stopwords)
    except ResourceParseError as e:
        _fail(str(e), 2)
    except (OSError, UnicodeDecodeError) as e:
        _fail(f"cannot read resource: {e}", 2)


@app.callback()
def main(
    ctx: typer.Context,
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
):
    """Argumentation-aware extractive summarizer."""
    try:
        settings = load_config()
    except ValidationError as e:
        _fail(f"invalid configuration: {e.errors()[0]['msg']}", 2)
    configure_logging("DEBUG" if verbose or settings.debug else settings.log_level)
    ctx.obj = settings


@app.command()
def summarize(
    ctx: typer.Context,
    input_file: Path = typer.Option(..., "--input", "-i", help="Plain-text document"),
    lexicon: Optional[Path] = LEXICON_OPTION,
    topoi: Optional[Path] = TOPOI_OPTION,
    stopwords: Optional[Path] = STOPWORDS_OPTION,
    ratio: Optional[float] = typer.Option(None, "--ratio", "-r", help="Fraction of sentences kept"),
    alpha: Optional[float] = typer.Option(None, "--alpha", help="Keyword threshold in (0, 1]"),
    output_format: Optional[OutputFormat] = typer.Option(
        None, "--format", "-f", help="text or json"
    ),
    explain: bool = typer.Option(False, "--explain", help="Include the score table"),
    paper_fidelity: bool = typer.Option(
        False,
        "--paper-fidelity",
        "--strict",
        help="Maximum-frequency keywords only, demo connective weights",
    ),
    output: Optional[Path] = typer.Option(
        None, "--output", "-o", help="Write to a file instead of stdout"
    ),
):
    """Summarize a document: top-ranked sentences plus their conclusions."""
    settings: Settings = ctx.obj
    _require_file(input_file, "input")

    if paper_fidelity and lexicon is not None:
        logger.warning(f"--paper-fidelity uses the demo lexicon; ignoring {lexicon}")
    lexicon_path = DEMO_LEXICON if paper_fidelity else (lexicon or settings.resources.lexicon)

    stop = _load_stopwords(stopwords or settings.resources.stopwords)
    lex, base = _load_resources(lexicon_path, topoi or settings.resources.topoi, stop)

    try:
        config = SummaryConfig(
            ratio=settings.summary.ratio if ratio is None else ratio,
            alpha=settings.summary.alpha if alpha is None else alpha,
            paper_fidelity=paper_fidelity,
        )
    except ValidationError as e:
        error = e.errors()[0]
        _fail(f"invalid --{error['loc'][0]}: {error['msg']}", 2)

    try:
        text = input_file.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        _fail(f"cannot read {input_file}: {e}", 2)

    summarizer = ArgumentativeSummarizer(lex, base, stop, config)
    try:
        summary = summarizer.summarize_text(text)
    except EmptyDocument as e:
        _fail(f"{input_file}: {e}", 1)

    payload = render(summary, output_format or settings.summary.output_format, explain=explain)
    if output is not None:
        output.write_bytes(payload)
        err_console.print(f"[green]✓[/green] Summary written to {escape(str(output))}")
    else:
        typer.echo(payload, nl=False)


@app.command()
def compare(
    ctx: typer.Context,
    first: str = typer.Argument(..., help="First sentence"),
    second: str = typer.Argument(..., help="Second sentence"),
    stopwords: Optional[Path] = STOPWORDS_OPTION,
    lexicon: Optional[Path] = LEXICON_OPTION,
    topoi: Optional[Path] = TOPOI_OPTION,
    orientations: bool = typer.Option(
        False, "--orientations", help="Also print each sentence's argumentative orientation"
    ),
):
    """Order-blind bag-of-words cosine of two sentences."""
    settings: Settings = ctx.obj
    stop = _load_stopwords(stopwords or settings.resources.stopwords)

    result = compare_sentences(first, second, stop)
    typer.echo(f"COS {result.cosine:.2f}")
    if not result.defined:
        err_console.print("[yellow]![/yellow] cosine undefined: a sentence has no content words")

    if orientations:
        lex, base = _load_resources(
            lexicon or settings.resources.lexicon, topoi or settings.resources.topoi, stop
        )
        for label, text in (("1", first), ("2", second)):
            annotations = generate_constraints(segment_sentences(text, stop), lex, base)
            readings = [
                a.sentence_orientation.rendered
                for a in annotations
                if a.sentence_orientation is not None
            ]
            typer.echo(f"{label}: {'; '.join(readings) or 'none'}")


@app.command()
def check(
    ctx: typer.Context,
    lexicon: Optional[Path] = LEXICON_OPTION,
    topoi: Optional[Path] = TOPOI_OPTION,
    stopwords: Optional[Path] = STOPWORDS_OPTION,
):
    """Validate resource files and print their sizes."""
    settings: Settings = ctx.obj
    stop = _load_stopwords(stopwords or settings.resources.stopwords)
    lex, base = _load_resources(
        lexicon or settings.resources.lexicon, topoi or settings.resources.topoi, stop
    )
    console.print(
        f"{len(base.topoi)} topoi, {len(base.scales)} scales, "
        f"{len(lex)} connectives, {len(stop)} stopwords"
    )


if __name__ == "__main__":
    app()
