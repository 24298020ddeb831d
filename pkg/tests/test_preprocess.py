import random

import pytest

from infodemic.preprocess import (
    PreprocessConfig,
    SpanKind,
    TweetPreprocessor,
    apply_pipeline,
    load_stopwords,
    normalize_baseline,
    segment,
)
from infodemic.stem import stem

HHS = (
    "HHS to distribute $4 billion to #COVID hot spots; "
    "$340 million already paid out. https://t.co/uAj29XA1Y5"
)


# -------------------------------------------------------------- segmentation


class TestSegment:
    def test_single_url(self):
        spans = segment("see https://t.co/abc now")
        assert [(s.kind, s.text) for s in spans] == [
            (SpanKind.TEXT, "see "),
            (SpanKind.URL, "https://t.co/abc"),
            (SpanKind.TEXT, " now"),
        ]

    def test_mentions_and_hashtag(self):
        spans = segment("@ProfBhargava DG @ICMRDELHI #StaySafe")
        mentions = [s.text for s in spans if s.kind is SpanKind.MENTION]
        hashtags = [s.text for s in spans if s.kind is SpanKind.HASHTAG]
        assert mentions == ["@ProfBhargava", "@ICMRDELHI"]
        assert hashtags == ["#StaySafe"]

    def test_empty_input(self):
        assert segment("") == []

    def test_trailing_punctuation_left_out_of_url(self):
        spans = segment("read https://t.co/abc. then")
        url = next(s for s in spans if s.kind is SpanKind.URL)
        assert url.text == "https://t.co/abc"
        assert "".join(s.text for s in spans) == "read https://t.co/abc. then"

    def test_mention_caps_at_fifteen_chars(self):
        spans = segment("@abcdefghijklmnopqr")
        assert spans[0].kind is SpanKind.MENTION
        assert spans[0].text == "@" + "abcdefghijklmno"
        assert spans[1].text == "pqr"

    def test_emoji_run_is_one_span(self):
        spans = segment("ok \u2764\u2764 bye")
        emoji = [s for s in spans if s.kind is SpanKind.EMOJI]
        assert len(emoji) == 1
        assert emoji[0].text == "\u2764\u2764"

    def test_lossless_on_fuzzed_input(self):
        rng = random.Random(20210101)
        alphabet = list("abc @#h:/.?!\u2764\U0001F602\U0001F637 ") + [
            "https://t.co/x",
            "#tag",
            "@user",
            "\U0001FAFF",  # pictographic block, not in the table
            "\ufe0f",
        ]
        for _ in range(500):
            text = "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 40)))
            spans = segment(text)
            assert "".join(s.text for s in spans) == text


# ------------------------------------------------------------------ rewrites


class TestApplyPipeline:
    def test_hhs_tokenize_golden(self):
        cfg = PreprocessConfig(url_mode="tokenize", hashtag_mode="tokenize")
        assert apply_pipeline(HHS, cfg) == (
            "HHS to distribute $4 billion to $HASHTAG$ hot spots; "
            "$340 million already paid out. $URL$"
        )

    def test_hhs_remove_golden(self):
        cfg = PreprocessConfig(url_mode="remove", hashtag_mode="remove")
        assert apply_pipeline(HHS, cfg) == (
            "HHS to distribute $4 billion to hot spots; $340 million already paid out."
        )

    def test_hashtag_unwrap_golden(self):
        assert apply_pipeline("#COVID", PreprocessConfig(hashtag_mode="unwrap")) == "COVID"

    def test_emoji_describe_golden(self):
        cfg = PreprocessConfig(emoji_mode="describe")
        assert apply_pipeline("Stay safe \u2764", cfg) == "Stay safe :red_heart:"

    def test_emoji_describe_multiple(self):
        cfg = PreprocessConfig(emoji_mode="describe")
        assert apply_pipeline("\u2764\U0001F44D", cfg) == ":red_heart::thumbs_up:"

    def test_unknown_pictograph(self):
        assert apply_pipeline("x \U0001FAFF y", PreprocessConfig(emoji_mode="describe")) == "x :emoji: y"
        assert apply_pipeline("x \U0001FAFF y", PreprocessConfig(emoji_mode="remove")) == "x y"

    def test_mention_tokenize(self):
        cfg = PreprocessConfig(mention_mode="tokenize")
        assert apply_pipeline("ask @CDCgov now", cfg) == "ask $MENTION$ now"

    def test_lowercase(self):
        cfg = PreprocessConfig(lowercase=True)
        assert apply_pipeline("Stay SAFE", cfg) == "stay safe"

    def fuzz_texts(self, count=200):
        rng = random.Random(4242)
        pieces = [
            "Breaking news",
            "cases UP 20%",
            "#COVID",
            "#StaySafe",
            "@CDCgov",
            "@user_name",
            "https://t.co/uAj29XA1Y5",
            "http://example.com/a?b=1",
            "\u2764",
            "\U0001F602\U0001F602",
            "call 911.",
            "  spaced   out  ",
            "$4 billion",
        ]
        for _ in range(count):
            yield " ".join(rng.choice(pieces) for _ in range(rng.randrange(0, 8)))

    def test_keep_everything_is_identity_up_to_whitespace(self):
        cfg = PreprocessConfig()
        for text in self.fuzz_texts():
            assert apply_pipeline(text, cfg) == " ".join(text.split())

    @pytest.mark.parametrize(
        "cfg",
        [
            PreprocessConfig("remove", "remove", "remove", "remove", False),
            PreprocessConfig("tokenize", "tokenize", "tokenize", "describe", False),
            PreprocessConfig("tokenize", "remove", "unwrap", "describe", True),
            PreprocessConfig("remove", "tokenize", "tokenize", "remove", True),
        ],
    )
    def test_idempotent_once_rewritten(self, cfg):
        for text in self.fuzz_texts():
            once = apply_pipeline(text, cfg)
            assert apply_pipeline(once, cfg) == once

    def test_idempotent_on_adversarial_unicode(self):
        # removal must not splice neighbors into new spans (e.g. deleting
        # the emoji in "#<emoji>6" must not mint a "#6" hashtag); unwrap is
        # excluded because "@" + unwrapped tag forms a mention by input
        # construction, which no rewrite can prevent
        rng = random.Random(777)
        cfgs = [
            PreprocessConfig("remove", "remove", "remove", "remove", True),
            PreprocessConfig("tokenize", "tokenize", "tokenize", "describe", False),
            PreprocessConfig("remove", "tokenize", "remove", "describe", True),
        ]
        for _ in range(1000):
            chars = []
            for _ in range(rng.randrange(0, 30)):
                r = rng.random()
                if r < 0.5:
                    cp = rng.randrange(0x20, 0x7F)
                elif r < 0.8:
                    cp = rng.randrange(0x20, 0x3000)
                else:
                    cp = rng.choice(
                        [rng.randrange(0x1F300, 0x1FB00), rng.randrange(0x2600, 0x27C0),
                         0xFE0F, 0x200D]
                    )
                if 0xD800 <= cp <= 0xDFFF:
                    cp = 0x20
                chars.append(chr(cp))
            text = "".join(chars)
            assert "".join(s.text for s in segment(text)) == text
            for cfg in cfgs:
                once = apply_pipeline(text, cfg)
                assert apply_pipeline(once, cfg) == once

    def test_lowercase_commutes_for_ascii(self):
        cfg_plain = PreprocessConfig("tokenize", "tokenize", "tokenize", "remove", False)
        cfg_lower = PreprocessConfig("tokenize", "tokenize", "tokenize", "remove", True)
        for text in self.fuzz_texts():
            ascii_text = text.encode("ascii", "ignore").decode()
            assert apply_pipeline(ascii_text, cfg_plain).lower() == apply_pipeline(
                ascii_text, cfg_lower
            )

    def test_invalid_mode_rejected(self):
        with pytest.raises(ValueError, match="url_mode"):
            PreprocessConfig(url_mode="delete")
        with pytest.raises(ValueError, match="emoji_mode"):
            PreprocessConfig(emoji_mode="unwrap")


# -------------------------------------------------------------- baseline path


class TestNormalizeBaseline:
    def test_cdc_golden(self):
        assert normalize_baseline("The CDC currently reports 99031 deaths.") == [
            "cdc",
            "current",
            "report",
            "99031",
            "death",
        ]

    def test_stopwords_and_short_tokens_drop(self):
        assert normalize_baseline("a I .") == []

    def test_case_folding(self):
        assert normalize_baseline("COVID COVID covid") == ["covid", "covid", "covid"]

    def test_stopwords_removed_before_stemming(self):
        # "during" is a stop-word; its stem never shows up
        tokens = normalize_baseline("during testing")
        assert tokens == ["test"]

    def test_punctuation_split(self):
        assert normalize_baseline("covid-19, spreading!") == ["covid", "19", "spread"]


class TestStopwords:
    def test_bundled_list(self):
        words = load_stopwords()
        assert len(words) == 318
        assert "the" in words
        assert "currently" not in words
        assert all(w == w.lower() for w in words)


class TestStemmer:
    golden = {
        "caresses": "caress",
        "ponies": "poni",
        "ties": "ti",
        "caress": "caress",
        "cats": "cat",
        "feed": "feed",
        "agreed": "agre",
        "plastered": "plaster",
        "bled": "bled",
        "motoring": "motor",
        "sing": "sing",
        "hopping": "hop",
        "filing": "file",
        "happy": "happi",
        "sky": "sky",
        "relational": "relat",
        "conflated": "conflat",
        "controlling": "control",
        "electricity": "electr",
        "vaccines": "vaccin",
        "testing": "test",
        "reports": "report",
        "deaths": "death",
        "currently": "current",
        "99031": "99031",
        "covid": "covid",
        "is": "is",
        "be": "be",
    }

    @pytest.mark.parametrize("word,expected", sorted(golden.items()))
    def test_golden(self, word, expected):
        assert stem(word) == expected

    def test_idempotent_on_goldens(self):
        for target in set(self.golden.values()):
            # stems of stems stay put for this vocabulary
            assert stem(stem(target)) == stem(target)


class TestEstimator:
    def test_transform_matches_function(self):
        texts = ["see https://t.co/abc #Now", "plain words"]
        est = TweetPreprocessor(url_mode="tokenize", hashtag_mode="unwrap", lowercase=True)
        cfg = PreprocessConfig("tokenize", "keep", "unwrap", "keep", True)
        assert est.fit(texts).transform(texts) == [apply_pipeline(t, cfg) for t in texts]

    def test_get_set_params(self):
        est = TweetPreprocessor()
        est.set_params(url_mode="remove", lowercase=True)
        assert est.get_params()["url_mode"] == "remove"
        assert est.transform(["x https://t.co/a"]) == ["x"]

    def test_bad_param_surfaces_on_fit(self):
        with pytest.raises(ValueError, match="hashtag_mode"):
            TweetPreprocessor(hashtag_mode="explode").fit(["x"])
