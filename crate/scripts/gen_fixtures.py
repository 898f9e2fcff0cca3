#!/usr/bin/env python3
"""Generate the frozen test fixtures under data/fixtures/.

- valence_suite.tsv: 100 sentences spanning boosters, dampeners, negation,
  capitalization, punctuation emphasis, but-clauses, idioms, and tokenizer
  quirks, scored with the reference scorer (scripts/reference_valence.py).
- scoring_words.tsv: 50 phrases with the reference word extraction.
- uk_sentiment_rows.csv: published per-election sentiment shares for the
  UK Labour/Conservative manifestos 2001-2019, used as a regression
  dataset for the analytics layer.

Also cross-checks the arithmetic the test-suite asserts (count
reconstruction, correlation signs) with numpy before anything is frozen.
"""

import os

import numpy as np

from reference_valence import ReferenceValenceScorer, SentiText, label_inclusive

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "data")
FIXTURES = os.path.join(DATA, "fixtures")

SUITE = [
    # plain lexicon hits and neutral controls
    "good",
    "not good",
    "very good",
    "The plan is good.",
    "This policy is bad.",
    "The committee met on Tuesday.",
    "Our schools are excellent.",
    "The outcome was terrible.",
    "Crime is falling.",
    "We love this country.",
    "The report described widespread corruption.",
    # boosters at distance one
    "The plan is very good.",
    "This policy is really bad.",
    "The results were extremely poor.",
    "Our staff are so talented.",
    "The delay was utterly painful.",
    "It was quite successful.",
    "The damage was particularly bad.",
    # dampeners
    "The plan is slightly better.",
    "Voters were somewhat hopeful.",
    "The recovery was slightly slow.",
    "They were hardly confident.",
    # boosters at distance two and three
    "He was very clearly wrong.",
    "It was really rather good.",
    "She was so incredibly happy.",
    "The most deeply unfair policy.",
    "An unusually strong recovery lifted confidence.",
    # negation
    "The plan is not good.",
    "This is not bad.",
    "They never failed.",
    "We cannot trust them.",
    "Nothing was achieved.",
    "He isn't happy.",
    "They don't care.",
    "It wasn't a disaster.",
    "He was not entirely honest.",
    "Never again will we see such poverty.",
    "Not a single failure.",
    "We won't accept failure.",
    "It is not very good.",
    # "no" handling
    "No progress was made.",
    "There is no hope.",
    "The answer is no.",
    "There was no justice or fairness.",
    "Without support, the town declined.",
    # never so / never this, least
    "The outlook was never so bright.",
    "Politics was never this good.",
    "Without doubt the plan succeeded.",
    "He was least happy with the result.",
    "At least the plan is good.",
    "They were at least honest.",
    # capitalization
    "The plan is GOOD.",
    "The situation is BAD.",
    "THE PLAN IS GOOD.",
    "This is VERY good.",
    "U.K. growth is strong.",
    "SHAMEFUL neglect of our NHS!",
    # punctuation emphasis
    "The plan is good!",
    "The plan is good!!",
    "The plan is good!!!",
    "The plan is good!!!!!",
    "Why was the project bad??",
    "Why was the project bad???",
    "Why was the project bad????",
    "Is the plan good?",
    "Could the plan be any better??",
    "The cuts were cruel!",
    "We did it!",
    # but-clauses
    "The economy is strong but healthcare is failing.",
    "Schools improved but hospitals declined.",
    "It was good but not great.",
    "But we will succeed.",
    "Taxes rose but wages rose faster.",
    "The worst is behind us, but risks remain.",
    # idioms and multiword boosters
    "Critics called the policy the bomb.",
    "Their sudden departure was the kiss of death.",
    "She has been hiding a broken heart.",
    "The crowd said yeah right.",
    "kind of good, I suppose.",
    "It was kind of good in the end.",
    "The review was sort of positive.",
    # tokenizer quirks
    "It is a first-class service.",
    "That was a so-so outcome.",
    "Britain's future is bright.",
    "Was the campaign honest? Absolutely not.",
    # realistic manifesto-style sentences
    "Our investment will rebuild communities and restore pride.",
    "Austerity caused misery for millions.",
    "The government failed to protect the vulnerable.",
    "We promise safer streets and stronger schools.",
    "Rising crime and violence threaten every community.",
    "Hope triumphs over fear.",
    "A fairer, greener, more prosperous Britain.",
    "They wasted billions and betrayed working families.",
    "Nurses and doctors deserve our respect.",
    "This broken system cannot continue.",
    "Never have we faced such a grim choice.",
    "The very best of Britain.",
    "A tremendous victory for common sense.",
    "The scheme was an utter failure.",
    "Prosperity, security, and opportunity for all.",
]

PHRASES = [
    "We will invest.",
    "Hello, world!",
    "it. is. so.",
    "tax-free growth",
    "don't stop",
    "(good)",
    '"quoted" text',
    "U.K. leads",
    "100% effort",
    "a b c",
    "  leading and   internal   spaces  ",
    "trailing dots...",
    "semi;colon",
    "ALL CAPS HERE",
    "MiXeD CaSe WoRdS",
    "wrap-around hyphen-case words",
    "end!",
    "end!!",
    "what?",
    "no.",
    "No. 10 replied.",
    "the well-being agenda",
    "co-operate fully",
    "it's fine",
    "theirs' claim",
    "'quoted single'",
    "[bracketed] words",
    "{braced} words",
    "slash/and/burn",
    "under_score token",
    "comma, separated, items",
    "colon: value",
    "percent 50% done",
    "money $5 saved",
    "pound #5 saved",
    "at @mention here",
    "and & ampersand",
    "star *bold* text",
    "plus + sign",
    "equals = sign",
    "tilde ~ sign",
    "caret ^ sign",
    "pipe vertical bar",
    "backtick ` quote",
    "angle <brackets> here",
    "mixed !?! punctuation",
    "abc.",
    "ab.",
    "a.",
    "multi  spaced   text",
]

# Published per-election sentiment shares, UK manifestos 2001-2019.
# Columns: party, year, status, sentences, pos, neg, neut, pos_chg, neg_chg.
UK_ROWS = [
    ("labour", 2001, "incumbent", 977, 62.641, 16.070, 21.290, 0.00, 0.0),
    ("labour", 2005, "incumbent", 801, 63.920, 19.725, 16.355, 1.28, 3.7),
    ("labour", 2010, "incumbent", 1313, 66.565, 16.375, 17.060, 2.64, -3.4),
    ("labour", 2015, "opposition", 865, 60.231, 22.890, 16.879, -6.33, 6.5),
    ("labour", 2017, "opposition", 1136, 53.257, 24.032, 22.711, -6.97, 1.1),
    ("labour", 2019, "opposition", 1192, 50.336, 30.369, 19.295, -2.92, 6.3),
    ("conservative", 2001, "opposition", 680, 48.382, 25.735, 25.882, 0.00, 0.0),
    ("conservative", 2005, "opposition", 415, 53.012, 20.241, 26.747, 4.63, -5.5),
    ("conservative", 2010, "opposition", 494, 58.300, 22.065, 19.636, 5.29, 1.8),
    ("conservative", 2015, "incumbent", 283, 75.618, 13.428, 10.954, 17.32, -8.6),
    ("conservative", 2017, "incumbent", 1275, 70.667, 13.961, 15.373, -4.95, 0.5),
    ("conservative", 2019, "incumbent", 974, 64.682, 15.811, 19.507, -5.98, 1.8),
]


def check_uk_rows():
    """Verify label counts reconstruct exactly and changes stay in tolerance."""
    for party, year, status, n, pos, neg, neut, _, _ in UK_ROWS:
        cp = round(pos * n / 100.0)
        cn = round(neg * n / 100.0)
        cu = round(neut * n / 100.0)
        assert cp + cn + cu == n, (party, year, cp + cn + cu, n)
        assert abs(100.0 * cp / n - pos) <= 0.01, (party, year, "pos")
        assert abs(100.0 * cn / n - neg) <= 0.01, (party, year, "neg")
        assert abs(100.0 * cu / n - neut) <= 0.01, (party, year, "neut")
    for party in ("labour", "conservative"):
        rows = [r for r in UK_ROWS if r[0] == party]
        for prev, cur in zip(rows, rows[1:]):
            d_pos = round(cur[4] - prev[4], 2)
            d_neg = round(cur[5] - prev[5], 2)
            assert abs(d_pos - cur[7]) <= 0.01, (party, cur[1], "pos_chg", d_pos)
            assert abs(d_neg - cur[8]) <= 0.1, (party, cur[1], "neg_chg", d_neg)

    status = np.array([1.0 if r[2] == "incumbent" else 0.0 for r in UK_ROWS])
    pos = np.array([r[4] for r in UK_ROWS])
    neg = np.array([r[5] for r in UK_ROWS])
    r_pos = np.corrcoef(pos, status)[0, 1]
    r_neg = np.corrcoef(neg, status)[0, 1]
    print("corr(pos_share, status) = %.12f" % r_pos)
    print("corr(neg_share, status) = %.12f" % r_neg)
    assert r_pos >= 0.7 and r_neg <= -0.7
    return r_pos, r_neg


def main():
    os.makedirs(FIXTURES, exist_ok=True)
    assert len(SUITE) == 100, len(SUITE)
    assert len(PHRASES) == 50, len(PHRASES)

    scorer = ReferenceValenceScorer(os.path.join(DATA, "valence_lexicon.txt"))

    spot = {
        "good": 0.4404,
        "not good": -0.3412,
    }
    for sentence, expected in spot.items():
        got = scorer.polarity_scores(sentence)["compound"]
        assert abs(got - expected) < 5e-5, (sentence, got, expected)

    path = os.path.join(FIXTURES, "valence_suite.tsv")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# sentence<TAB>reference compound<TAB>reference label\n")
        for sentence in SUITE:
            assert "\t" not in sentence
            compound = scorer.polarity_scores(sentence)["compound"]
            fh.write("%s\t%.4f\t%s\n"
                     % (sentence, compound, label_inclusive(compound)))
    print("wrote %s" % path)

    path = os.path.join(FIXTURES, "scoring_words.tsv")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# phrase<TAB>reference scoring words joined by |\n")
        for phrase in PHRASES:
            assert "\t" not in phrase and "|" not in phrase
            words = SentiText(phrase).words_and_emoticons
            fh.write("%s\t%s\n" % (phrase, "|".join(words)))
    print("wrote %s" % path)

    check_uk_rows()
    path = os.path.join(FIXTURES, "uk_sentiment_rows.csv")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("party,year,gov_status,sentences,pos_share,neg_share,"
                 "neut_share,pos_change,neg_change\n")
        for party, year, status, n, pos, neg, neut, pc, nc in UK_ROWS:
            fh.write("%s,%d,%s,%d,%.3f,%.3f,%.3f,%.2f,%.1f\n"
                     % (party, year, status, n, pos, neg, neut, pc, nc))
    print("wrote %s" % path)


if __name__ == "__main__":
    main()
