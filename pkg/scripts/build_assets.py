"""Regenerate the bundled data assets under src/wordbug/data/.

    python scripts/build_assets.py

Writes lexicon.tsv plus train/test CSV splits for the two mini-corpora.
Output is fully determined by the fixed seeds below.
"""

import csv
import random
from pathlib import Path

from lexicon_words import CLOSED, OPEN

DATA = Path(__file__).resolve().parents[1] / "src" / "wordbug" / "data"

TAG_PRIORITY = [
    "RB", "RBR", "RBS", "JJ", "JJR", "JJS", "NN", "NNS",
    "VBD", "VBN", "VBG", "VBZ", "VB", "VBP", "NNP",
]

CONTRACTIONS = {
    "isn't": "VBZ", "doesn't": "VBZ", "hasn't": "VBZ", "wasn't": "VBD",
    "didn't": "VBD", "hadn't": "VBD", "weren't": "VBD", "don't": "VBP",
    "aren't": "VBP", "haven't": "VBP", "can't": "MD", "won't": "MD",
    "couldn't": "MD", "wouldn't": "MD", "shouldn't": "MD", "mustn't": "MD",
    "it's": "PRP", "i'm": "PRP", "you're": "PRP", "he's": "PRP", "she's": "PRP",
    "we're": "PRP", "they're": "PRP", "i've": "PRP", "you've": "PRP",
    "we've": "PRP", "they've": "PRP", "i'd": "PRP", "i'll": "PRP",
    "you'll": "PRP", "that's": "DT", "there's": "EX", "let's": "VB",
    "what's": "WP", "who's": "WP",
}


def build_lexicon():
    entries = {}

    def add(tag, words):
        for w in words.split():
            key = w if tag == "NNP" else w.lower()
            entries.setdefault(key, tag)

    for tag, words in CLOSED.items():
        add(tag, words)
    for tag in TAG_PRIORITY:
        add(tag, OPEN[tag])
    for word, tag in CONTRACTIONS.items():
        entries.setdefault(word, tag)
    return entries


# -- sentiment corpus -------------------------------------------------------

POS_ADJ = """superb brilliant wonderful excellent delightful charming gripping moving
    stunning beautiful clever funny touching memorable fantastic outstanding thoughtful
    engaging powerful fresh witty lovely magnificent compelling enjoyable terrific
    splendid heartfelt inspired graceful""".split()
NEG_ADJ = """awful terrible boring dull dreadful tedious clumsy bland weak lazy pointless
    horrible mediocre stupid painful forgettable messy flat shallow silly annoying poor
    predictable tiresome lifeless sloppy ridiculous bad ugly awkward""".split()
POS_VERB = "loved enjoyed adored admired liked".split()
NEG_VERB = "hated disliked regretted loathed".split()
POS_NOUN = "masterpiece gem triumph delight treat".split()
NEG_NOUN = "mess disaster failure letdown waste".split()

ASPECTS = """acting plot script story cast soundtrack score dialogue ending pacing
    direction cinematography editing lead villain humor photography music premise
    finale""".split()
GENRES = "film movie drama thriller comedy musical documentary romance sequel".split()
VENUES = "cinema theater festival mall".split()
COMPANIONS = "sister brother friend wife husband father mother roommate cousin neighbor".split()
DAYS = "Monday Tuesday Wednesday Thursday Friday Saturday Sunday".split()
CITIES = "Boston Chicago Denver Paris London Berlin Toronto Madrid Tokyo Sydney".split()
ROLES = "soldier detective nurse doctor lawyer farmer painter singer teacher pilot chef widow".split()
EVENTS = "divorce accident trip marriage career".split()
NAMES = """Smith Jones Brown Taylor Walker Harris Clark Lewis King Hughes Morgan Parker
    Evans Turner Collins Reed Cooper Ward Foster Bennett""".split()
INTENS = "really very quite truly rather extremely fairly".split()
NEUTRAL_ADJ = "small old new long local quiet crowded".split()


def _a(word):
    return "an" if word[0] in "aeiou" else "a"


def review(rng, label):
    if label == "pos":
        adj, opp_adj, verb, noun = POS_ADJ, NEG_ADJ, POS_VERB, POS_NOUN
    else:
        adj, opp_adj, verb, noun = NEG_ADJ, POS_ADJ, NEG_VERB, NEG_NOUN
    c = rng.choice
    intro = c([
        lambda: f"I watched this {c(GENRES)} at the {c(VENUES)} with my {c(COMPANIONS)} last {c(DAYS)}.",
        lambda: f"My {c(COMPANIONS)} and I saw this {c(GENRES)} on {c(DAYS)} night.",
        lambda: f"This {c(GENRES)} was released in {rng.randint(1975, 2019)} and runs about {rng.randint(85, 150)} minutes.",
        lambda: f"The {c(GENRES)} follows a {c(ROLES)} who moves to {c(CITIES)} after {c(EVENTS)} trouble.",
    ])()
    a1, a2 = rng.sample(adj, 2)
    s1, s2 = rng.sample(ASPECTS, 2)
    main = c([
        lambda: f"The {s1} was {c(INTENS)} {a1} and the {s2} was {a2}.",
        lambda: f"{c(NAMES)} gives {_a(a1)} {a1} performance and the {s1} is {a2}.",
        lambda: f"It has {_a(a1)} {a1} {s1} and {_a(a2)} {a2} {s2}.",
        lambda: f"The {s1} is {a1}, and I thought the {s2} was {a2} too.",
    ])()
    sentences = [intro, main]
    if rng.random() < 0.45:
        if rng.random() < 0.8:
            third = c([
                lambda: f"The {c(ASPECTS)} felt {c(adj)} as well.",
                lambda: f"Even the {c(ASPECTS)} seemed {c(adj)} to me.",
            ])()
        else:
            third = f"I {c(verb)} the {c(ASPECTS)} from start to finish."
        sentences.append(third)
    neutral_pool = [
        lambda: f"The story takes place in {c(CITIES)} during one {c(NEUTRAL_ADJ)} {c(['summer', 'winter', 'spring', 'autumn'])}.",
        lambda: f"It was directed by {c(NAMES)} and produced by one {c(NEUTRAL_ADJ)} studio in {c(CITIES)}.",
        lambda: f"Most of the {c(['scenes', 'songs', 'costumes', 'sets'])} were shot near one {c(NEUTRAL_ADJ)} town outside {c(CITIES)}.",
        lambda: f"The {c(['theater', 'cinema'])} was {c(['crowded', 'quiet'])} and the {c(['seats', 'tickets'])} were cheap.",
        lambda: f"My {c(COMPANIONS)} had already read the book before we went.",
        lambda: f"The {c(ROLES)} meets a {c(ROLES)} on a train and they travel to {c(CITIES)} together.",
        lambda: f"Some of the cast also worked with {c(NAMES)} on an earlier {c(GENRES)}.",
        lambda: f"We bought popcorn and sat near the back of the room.",
        lambda: f"The {c(GENRES)} is based on a story by {c(NAMES)} about a family in {c(CITIES)}.",
        lambda: f"It runs a little over {c(['two hours', 'ninety minutes', 'an hour and a half'])} with one break.",
    ]
    for make in rng.sample(neutral_pool, rng.randint(2, 3)):
        sentences.insert(rng.randint(1, len(sentences)), make())
    r = rng.random()
    n_minority = 1 if r < 0.8 else (2 if r < 0.88 else 0)
    for _ in range(n_minority):
        sentences.append(c([
            lambda: f"The {c(ASPECTS)} was {c(INTENS)} {c(opp_adj)} though.",
            lambda: f"Only the {c(ASPECTS)} seemed {c(opp_adj)} to me.",
            lambda: f"Admittedly the {c(ASPECTS)} is {c(opp_adj)} in places.",
        ])())
    if rng.random() < 0.5:
        r = rng.random()
        if r < 0.7:
            a = c(adj)
            closing = f"Overall it is {_a(a)} {a} {c(GENRES)}."
        elif r < 0.85:
            closing = f"Overall I {c(verb)} it."
        else:
            closing = f"In short, a {c(noun)}."
        sentences.append(closing)
    return " ".join(sentences)


# -- topic corpus -----------------------------------------------------------

TOPIC = {
    "World": dict(
        nouns="election minister parliament vote leader capital border army troop rebel protest ceasefire treaty summit embassy diplomat crisis conflict refugee aid peace".split(),
        plural="elections ministers leaders troops rebels protests talks refugees officials nations".split(),
        verbs="urged rejected warned agreed elected signed announced".split(),
        actors="UN NATO EU".split(),
        places="Cairo Delhi Moscow Beijing Athens Lagos Ukraine Iran Iraq Egypt".split(),
    ),
    "Sports": dict(
        nouns="match goal coach player league title championship tournament cup final victory defeat striker goalkeeper quarterback race driver medal record stadium squad injury contract".split(),
        plural="fans players coaches teams matches goals points titles medals records".split(),
        verbs="scored defeated beat won claimed captured signed".split(),
        actors="FIFA NBA NFL".split(),
        places="Madrid Boston Chicago Dallas Miami Atlanta London Sydney Toronto Denver".split(),
    ),
    "Business": dict(
        nouns="market stock share price profit revenue economy bank firm industry deal merger investor inflation oil debt tax earnings dollar index retailer manufacturer factory".split(),
        plural="shares stocks prices profits sales markets banks firms investors earnings".split(),
        verbs="rose dropped climbed slipped posted acquired merged filed".split(),
        actors="Nasdaq Dow Fed".split(),
        places="Tokyo London Berlin Paris Seattle Toronto Madrid Sydney Vienna Rome".split(),
    ),
    "SciTech": dict(
        nouns="software hardware computer phone internet network data device chip processor battery satellite rocket space planet telescope laboratory experiment discovery vaccine virus gene species climate robot algorithm app update version security breach hacker website browser server".split(),
        plural="scientists researchers computers phones devices chips satellites planets vaccines robots".split(),
        verbs="discovered developed unveiled launched released tested".split(),
        actors="NASA Google Apple Microsoft Intel Samsung Sony".split(),
        places="Seattle Tokyo Berlin Boston Toronto Paris London Denver Sydney Beijing".split(),
    ),
}
NEWS_ADJ = "new major recent local national global quarterly annual official early late".split()


def news(rng, label):
    t = TOPIC[label]
    c = rng.choice
    s = [
        lambda: f"{c(t['actors'])} {c(t['verbs'])} the {c(t['nouns'])} on {c(DAYS)}, {c(['officials', 'sources', 'reports'])} said.",
        lambda: f"The {c(NEWS_ADJ)} {c(t['nouns'])} in {c(t['places'])} drew attention from {c(t['plural'])} and {c(t['plural'])}.",
        lambda: f"{c(t['plural']).capitalize()} expect the {c(t['nouns'])} to change the {c(t['nouns'])} later this {c(['week', 'month', 'year', 'season'])}.",
        lambda: (lambda a: f"{_a(a).capitalize()} {a} report on the {c(t['nouns'])} was released in {c(t['places'])}.")(c(NEWS_ADJ)),
        lambda: f"It is the {c(['first', 'second', 'third', 'largest', 'biggest'])} such {c(t['nouns'])} since {rng.randint(1990, 2019)}.",
        lambda: (lambda a: f"The {c(t['nouns'])} came after {_a(a)} {a} {c(t['nouns'])} in {c(t['places'])}.")(c(NEWS_ADJ)),
    ]
    filler = [
        lambda: f"More details are expected on {c(DAYS)}.",
        lambda: f"The announcement was made in {c(CITIES)} early in the day.",
        lambda: f"Reuters reported the news late on {c(DAYS)}.",
    ]
    picks = rng.sample(s, rng.randint(2, 3))
    out = [p() for p in picks]
    if rng.random() < 0.7:
        out.insert(rng.randint(0, len(out)), c(filler)())
    return " ".join(out)


def write_csv(path, rows):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["label", "text"])
        w.writerows(rows)


def make_split(make, labels, n, seed):
    rng = random.Random(seed)
    rows = []
    for i in range(n):
        label = labels[i % len(labels)] if i < len(labels) else rng.choice(labels)
        rows.append((label, make(rng, label)))
    return rows


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    lex = build_lexicon()
    with open(DATA / "lexicon.tsv", "w", encoding="utf-8") as fh:
        for word in sorted(lex):
            fh.write(f"{word}\t{lex[word]}\n")
    write_csv(DATA / "sentiment_train.csv", make_split(review, ["neg", "pos"], 800, 11))
    write_csv(DATA / "sentiment_test.csv", make_split(review, ["neg", "pos"], 240, 12))
    topics = ["World", "Sports", "Business", "SciTech"]
    write_csv(DATA / "topics_train.csv", make_split(news, topics, 400, 21))
    write_csv(DATA / "topics_test.csv", make_split(news, topics, 240, 22))
    print(f"lexicon entries: {len(lex)}")


if __name__ == "__main__":
    main()
