"""End-to-end summary generation and rendering."""

import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from src.errors import EmptyDocument
from src.pipeline import (
    ArgumentativeSummarizer,
    ConclusionNote,
    JsonRenderer,
    OutputFormat,
    SelectedSentence,
    Summary,
    SummaryConfig,
    TextRenderer,
    get_renderer,
    render,
    summarize,
    summary_length,
)
from src.text import segment_sentences
from src.topoi import ArgOrientation, Sign, parse_topos_base

FIXTURES = Path(__file__).parent / "fixtures"


def read_fixture(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


@pytest.fixture
def summarizer(lexicon, base, stopwords):
    def _make(**config):
        return ArgumentativeSummarizer(lexicon, base, stopwords, SummaryConfig(**config))

    return _make


class TestSummaryLength:
    @pytest.mark.parametrize(
        "n, ratio, k",
        [(5, 0.4, 2), (2, 0.5, 1), (1, 0.3, 1), (10, 0.3, 3), (3, 0.1, 1), (7, 1.0, 7)],
    )
    def test_floor_with_minimum_one(self, n, ratio, k):
        assert summary_length(n, ratio) == k


class TestSummarizer:
    def test_example_pair_picks_first_sentence(self, summarizer):
        summary = summarizer(ratio=0.5).summarize_text(read_fixture("example1.txt"))
        assert [s.index for s in summary.selected] == [0]
        assert summary.text == "The weather is beautiful but I have to work."
        (note,) = summary.conclusions
        assert note.rendered == "- outing (via t2)"

    def test_five_sentences(self, summarizer):
        summary = summarizer(ratio=0.4).summarize_text(read_fixture("five_sentences.txt"))
        assert summary.ranking == (1, 0, 2, 3, 4)
        assert [s.index for s in summary.selected] == [0, 1]
        rendered = [n.rendered for n in summary.conclusions]
        assert rendered == ["+ outing (via t1)", "- outing (via t2)"]
        assert len(summary.scores) == len(summary.annotations) == 5

    def test_selected_sentence_without_orientation_has_no_note(self, summarizer):
        summary = summarizer(ratio=1.0).summarize_text(read_fixture("five_sentences.txt"))
        assert [s.index for s in summary.selected] == [0, 1, 2, 3, 4]
        assert [n.sentence_index for n in summary.conclusions] == [0, 1, 2, 4]

    def test_single_sentence(self, summarizer):
        summary = summarizer(ratio=0.1).summarize_text("Nice weather rarely lasts.")
        assert [s.index for s in summary.selected] == [0]

    def test_no_keywords_still_selects(self, summarizer):
        summary = summarizer(ratio=0.5).summarize_text("It is. It was.")
        assert [s.index for s in summary.selected] == [0]
        assert all(score.score == 0.0 for score in summary.scores)

    def test_empty_document(self, summarizer):
        with pytest.raises(EmptyDocument):
            summarizer().summarize_text("   \n")

    def test_fidelity_mode_narrows_keywords(self, summarizer):
        text = read_fixture("five_sentences.txt")
        narrowed = summarizer(ratio=0.4, paper_fidelity=True).summarize_text(text)
        assert narrowed.scores[0].keyword_weight == 1.0
        assert narrowed.ranking == (1, 3, 0, 2, 4)

    def test_empty_base_gives_no_conclusions(self, lexicon, stopwords):
        summarizer = ArgumentativeSummarizer(lexicon, parse_topos_base(""), stopwords)
        summary = summarizer.summarize_text(read_fixture("five_sentences.txt"))
        assert summary.conclusions == ()
        assert summary.orientation == ()

    def test_module_level_summarize(self, lexicon, base, stopwords):
        doc = segment_sentences(read_fixture("example1.txt"), stopwords)
        summary = summarize(doc, lexicon, base, SummaryConfig(ratio=0.5))
        assert [s.index for s in summary.selected] == [0]

    def test_document_orientation_carried(self, summarizer):
        summary = summarizer().summarize_text(read_fixture("five_sentences.txt"))
        (tally,) = summary.orientation
        assert (tally.scale, tally.plus, tally.minus) == ("outing", 2, 2)

    def test_deterministic(self, summarizer):
        text = read_fixture("five_sentences.txt")
        assert summarizer().summarize_text(text) == summarizer().summarize_text(text)

    @pytest.mark.parametrize("field, value", [("ratio", 0.0), ("ratio", 1.2), ("alpha", 0.0)])
    def test_invalid_config(self, field, value):
        with pytest.raises(ValidationError):
            SummaryConfig(**{field: value})


class TestSummaryModel:
    def test_selected_must_be_increasing(self):
        with pytest.raises(ValidationError):
            Summary(
                selected=(SelectedSentence(index=2, text="b"), SelectedSentence(index=1, text="a"))
            )

    def test_conclusion_must_annotate_selected(self):
        orientation = ArgOrientation(scale="outing", sign=Sign.PLUS, licensed_by="t1")
        with pytest.raises(ValidationError):
            Summary(
                selected=(SelectedSentence(index=0, text="a"),),
                conclusions=(ConclusionNote.for_sentence(1, orientation),),
            )


class TestRenderers:
    def test_text_matches_golden(self, summarizer):
        summary = summarizer(ratio=0.4).summarize_text(read_fixture("five_sentences.txt"))
        assert render(summary) == (FIXTURES / "five_sentences.ratio04.golden.txt").read_bytes()

    def test_conclusion_lines_are_rendered_notes(self, summarizer):
        summary = summarizer(ratio=0.4).summarize_text(read_fixture("five_sentences.txt"))
        lines = render(summary).decode("utf-8").splitlines()
        assert lines[1] == ""
        assert lines[2:] == ["+ outing (via t1)", "- outing (via t2)"]

    def test_json_matches_golden(self, summarizer):
        summary = summarizer(ratio=0.5).summarize_text(read_fixture("example1.txt"))
        golden = (FIXTURES / "example1.ratio05.golden.json").read_bytes()
        assert render(summary, "json") == golden

    def test_json_scores_only_with_explain(self, summarizer):
        summary = summarizer(ratio=0.5).summarize_text(read_fixture("example1.txt"))
        payload = json.loads(render(summary, OutputFormat.JSON, explain=True))
        assert [s["index"] for s in payload["scores"]] == [0, 1]
        assert payload["scores"][0] == {"index": 0, "Ww": 3.0, "Cw": 2.0, "score": 6.0}

    def test_text_explain_lists_every_sentence(self, summarizer):
        summary = summarizer(ratio=0.4).summarize_text(read_fixture("five_sentences.txt"))
        text = render(summary, "text", explain=True).decode("utf-8")
        golden = (FIXTURES / "five_sentences.ratio04.golden.txt").read_text()
        assert text.startswith(golden.rstrip("\n"))
        assert "therefore" in text
        assert "document orientation:" in text
        assert "outing: +2 -2 (net =)" in text

    def test_conflict_flag_in_explain(self, summarizer):
        summary = summarizer(ratio=1.0).summarize_text("The weather is nice but the job is nice.")
        assert "[conflict]" in render(summary, explain=True).decode("utf-8")

    def test_no_conclusions_omits_block(self, summarizer):
        summary = summarizer().summarize_text("It rarely lasts.")
        assert render(summary) == b"It rarely lasts.\n"

    def test_byte_identical_across_runs(self, summarizer):
        text = read_fixture("five_sentences.txt")
        first = render(summarizer().summarize_text(text), "json", explain=True)
        second = render(summarizer().summarize_text(text), "json", explain=True)
        assert first == second

    def test_get_renderer(self):
        assert isinstance(get_renderer("text"), TextRenderer)
        assert isinstance(get_renderer(OutputFormat.JSON, explain=True), JsonRenderer)
        assert get_renderer("json").name == "json"
        with pytest.raises(ValueError):
            get_renderer("xml")
