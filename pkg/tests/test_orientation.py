"""Tests for the constraints generator."""

from pathlib import Path

from src.connectives import detect_connectives, parse_lexicon
from src.orientation import (
    ClauseOrienter,
    ScaleTally,
    document_orientation,
    generate_constraints,
    orient_clause,
    orient_sentence,
)
from src.text import ClauseRole, segment_sentences, tokenize
from src.topoi import Sign, parse_topos_base

FIXTURES = Path(__file__).parent / "fixtures"
OPPOSED = "The weather is beautiful but I have to work."
SWAPPED = "I have to work but the weather is beautiful."
GO_OUT = ("outing", Sign.PLUS, "t1")
STAY_IN = ("outing", Sign.MINUS, "t2")


def annotate(make_sentence, lexicon, base, text):
    sentence = make_sentence(text)
    return orient_sentence(sentence, detect_connectives(sentence, lexicon), base)


def direction(orientation):
    return (orientation.scale, orientation.sign, orientation.licensed_by)


class TestOrientClause:
    def test_weather_licenses_outing(self, base, stopwords):
        (result,) = orient_clause(tokenize("The weather is beautiful", stopwords), base)
        assert direction(result) == GO_OUT
        assert result.source is ClauseRole.WHOLE

    def test_ordered_by_topos(self, base, stopwords):
        tokens = tokenize("I have to work in nice weather", stopwords)
        results = orient_clause(tokens, base, ClauseRole.ARGUMENT)
        assert [direction(r) for r in results] == [GO_OUT, STAY_IN]
        assert all(r.source is ClauseRole.ARGUMENT for r in results)

    def test_nothing_evoked(self, base, stopwords):
        assert orient_clause(tokenize("It rarely lasts", stopwords), base) == []


class TestClauseOrienter:
    def test_agrees_with_orient_clause(self, base, stopwords):
        orient = ClauseOrienter(base)
        tokens = tokenize("I have to work in nice weather", stopwords)
        expected = orient_clause(tokens, base, ClauseRole.ARGUMENT)
        assert orient(tokens, ClauseRole.ARGUMENT) == expected
        assert orient(tokens, ClauseRole.ARGUMENT) == expected
        assert orient.cache_size == 1

    def test_source_is_part_of_the_key(self, base, stopwords):
        orient = ClauseOrienter(base)
        tokens = tokenize("The weather is beautiful", stopwords)
        (whole,) = orient(tokens)
        (conclusion,) = orient(tokens, ClauseRole.CONCLUSION)
        assert whole.source is ClauseRole.WHOLE
        assert conclusion.source is ClauseRole.CONCLUSION
        assert orient.cache_size == 2

    def test_stopword_flags_are_part_of_the_key(self, base):
        orient = ClauseOrienter(base)
        assert [direction(o) for o in orient(tokenize("nice weather"))] == [GO_OUT]
        assert orient(tokenize("nice weather", {"nice", "weather"})) == []

    def test_shared_across_sentences(self, make_sentence, lexicon, base):
        orient = ClauseOrienter(base)
        first = annotate(make_sentence, lexicon, base, OPPOSED)
        sentence = make_sentence(OPPOSED)
        shared = orient_sentence(sentence, detect_connectives(sentence, lexicon), base, orient)
        assert shared == first
        assert orient.cache_size == 2


class TestOrientSentence:
    def test_conclusion_clause_governs(self, make_sentence, lexicon, base):
        annotation = annotate(make_sentence, lexicon, base, OPPOSED)
        assert annotation.connective.text == "but"
        assert annotation.relation == "anti_argument"
        assert direction(annotation.sentence_orientation) == STAY_IN
        assert annotation.sentence_orientation.source is ClauseRole.CONCLUSION
        assert [direction(o) for o in annotation.argument_orientations] == [GO_OUT]
        assert not annotation.conflict

    def test_swapped_clauses_flip_orientation(self, make_sentence, lexicon, base):
        annotation = annotate(make_sentence, lexicon, base, SWAPPED)
        assert direction(annotation.sentence_orientation) == GO_OUT
        assert [direction(o) for o in annotation.argument_orientations] == [STAY_IN]

    def test_no_connective_reads_whole_sentence(self, make_sentence, lexicon, base):
        annotation = annotate(
            make_sentence, lexicon, base, "The weather is beautiful this weekend."
        )
        assert annotation.connective is None
        assert not annotation.has_connective
        assert direction(annotation.sentence_orientation) == GO_OUT
        assert annotation.sentence_orientation.source is ClauseRole.WHOLE

    def test_no_topos_applies(self, make_sentence, lexicon, base):
        annotation = annotate(make_sentence, lexicon, base, "It rarely lasts.")
        assert annotation.sentence_orientation is None
        assert annotation.whole_orientations == ()

    def test_silent_conclusion_gives_no_orientation(self, make_sentence, lexicon, base):
        annotation = annotate(
            make_sentence, lexicon, base, "I have to work, therefore I cannot go out."
        )
        assert annotation.relation == "support"
        assert [direction(o) for o in annotation.argument_orientations] == [STAY_IN]
        assert annotation.conclusion_orientations == ()
        assert annotation.sentence_orientation is None
        assert not annotation.conflict

    def test_rightmost_splitting_connective_governs(self, make_sentence, lexicon, base):
        annotation = annotate(
            make_sentence, lexicon, base, "It is nice so we go out but I have to work."
        )
        assert annotation.connective.text == "but"
        assert [m.text for m in annotation.unresolved] == ["so"]
        assert direction(annotation.sentence_orientation) == STAY_IN

    def test_trailing_connective_falls_back_left(self, make_sentence, lexicon, base):
        annotation = annotate(make_sentence, lexicon, base, "It is nice yet I have to work but")
        assert annotation.connective.text == "yet"
        assert [m.text for m in annotation.unresolved] == ["but"]
        assert direction(annotation.sentence_orientation) == STAY_IN

    def test_only_trailing_connective_reads_whole(self, make_sentence, lexicon, base):
        annotation = annotate(make_sentence, lexicon, base, "I have to work but")
        assert annotation.connective is None
        assert annotation.has_connective
        assert direction(annotation.sentence_orientation) == STAY_IN

    def test_scalar_connective_does_not_split(self, make_sentence, lexicon, base):
        annotation = annotate(make_sentence, lexicon, base, "Even the weather is nice.")
        assert annotation.connective is None
        assert [m.text for m in annotation.all_matches] == ["even"]
        assert direction(annotation.sentence_orientation) == GO_OUT

    def test_inter_sentential_connective(self, make_sentence, lexicon, base):
        annotation = annotate(make_sentence, lexicon, base, "But I have to work.")
        assert annotation.inter_sentential
        assert annotation.argument_orientations == ()
        assert direction(annotation.sentence_orientation) == STAY_IN

    def test_conflict_under_opposition(self, make_sentence, lexicon, base):
        annotation = annotate(
            make_sentence, lexicon, base, "The weather is nice but the job is nice."
        )
        assert annotation.conflict
        assert direction(annotation.sentence_orientation) == GO_OUT

    def test_empty_base_orients_nothing(self, make_sentence, lexicon):
        annotation = annotate(make_sentence, lexicon, parse_topos_base(""), OPPOSED)
        assert annotation.connective.text == "but"
        assert annotation.sentence_orientation is None

    def test_unsplit_connective_kind(self, make_sentence, base):
        lexicon = parse_lexicon('connective "but" kind=opposition weight=2.0 splits=false')
        annotation = annotate(make_sentence, lexicon, base, OPPOSED)
        assert annotation.connective is None
        assert len(annotation.whole_orientations) == 2
        assert direction(annotation.sentence_orientation) == GO_OUT


class TestGenerateConstraints:
    def test_one_annotation_per_sentence(self, lexicon, base, stopwords):
        text = (FIXTURES / "five_sentences.txt").read_text(encoding="utf-8")
        annotations = generate_constraints(segment_sentences(text, stopwords), lexicon, base)
        assert [a.sentence_index for a in annotations] == [0, 1, 2, 3, 4]
        readings = [
            direction(a.sentence_orientation) if a.sentence_orientation else None
            for a in annotations
        ]
        assert readings == [GO_OUT, STAY_IN, STAY_IN, None, GO_OUT]

    def test_empty_document(self, lexicon, base):
        assert generate_constraints(segment_sentences(""), lexicon, base) == []


class TestDocumentOrientation:
    def test_tally(self, lexicon, base, stopwords):
        text = (FIXTURES / "five_sentences.txt").read_text(encoding="utf-8")
        annotations = generate_constraints(segment_sentences(text, stopwords), lexicon, base)
        (tally,) = document_orientation(annotations)
        assert tally == ScaleTally(scale="outing", plus=2, minus=2)
        assert tally.net is None

    def test_net_direction(self, lexicon, base, stopwords):
        text = "Nice weather. I have to work. The weather is beautiful."
        doc = segment_sentences(text, stopwords)
        (tally,) = document_orientation(generate_constraints(doc, lexicon, base))
        assert tally.net is Sign.PLUS
