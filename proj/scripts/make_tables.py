#!/usr/bin/env python3
"""Generates the data tables under data/.

The nine Brahmic script tables share the ISCII-derived block layout, so they
are emitted from one master offset map, keeping only codepoints that Unicode
actually assigns in each block.  Per-script oddities (precomposed nukta
letters, archaic letters, digit names) are listed as explicit extras.

Run from the repository root:  python3 scripts/make_tables.py
"""

import os
import unicodedata

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..")
DATA = os.path.join(ROOT, "data")


def assigned(cp):
    try:
        unicodedata.name(chr(cp))
        return True
    except ValueError:
        return False


# ---------------------------------------------------------------------------
# CLS inventory
# ---------------------------------------------------------------------------

# label -> (category, feature dict)
VOWELS = {
    # label: (length, height, backness)
    "a":  ("short", "mid", "central"),
    "aa": ("long", "low", "central"),
    "i":  ("short", "high", "front"),
    "ii": ("long", "high", "front"),
    "u":  ("short", "high", "back"),
    "uu": ("long", "high", "back"),
    "rq": ("short", "high", "central"),
    "e":  ("short", "mid", "front"),
    "ee": ("long", "mid", "front"),
    "ai": ("diphthong", "low", "front"),
    "o":  ("short", "mid", "back"),
    "oo": ("long", "mid", "back"),
    "au": ("diphthong", "low", "back"),
    # English additions
    "ae": ("short", "low", "front"),
    "ow": ("diphthong", "mid", "back"),
}

CONSONANTS = {
    # label: (place, manner, voiced, aspirated, nasalized)
    "k":   ("velar", "stop", 0, 0, 0),
    "kh":  ("velar", "stop", 0, 1, 0),
    "g":   ("velar", "stop", 1, 0, 0),
    "gh":  ("velar", "stop", 1, 1, 0),
    "ng":  ("velar", "nasal", 1, 0, 0),
    "c":   ("palatal", "affricate", 0, 0, 0),
    "ch":  ("palatal", "affricate", 0, 1, 0),
    "j":   ("palatal", "affricate", 1, 0, 0),
    "jh":  ("palatal", "affricate", 1, 1, 0),
    "nj":  ("palatal", "nasal", 1, 0, 0),
    "tx":  ("retroflex", "stop", 0, 0, 0),
    "txh": ("retroflex", "stop", 0, 1, 0),
    "dx":  ("retroflex", "stop", 1, 0, 0),
    "dxh": ("retroflex", "stop", 1, 1, 0),
    "nx":  ("retroflex", "nasal", 1, 0, 0),
    "t":   ("dental", "stop", 0, 0, 0),
    "th":  ("dental", "stop", 0, 1, 0),
    "d":   ("dental", "stop", 1, 0, 0),
    "dh":  ("dental", "stop", 1, 1, 0),
    "n":   ("dental", "nasal", 1, 0, 0),
    "p":   ("bilabial", "stop", 0, 0, 0),
    "ph":  ("bilabial", "stop", 0, 1, 0),
    "b":   ("bilabial", "stop", 1, 0, 0),
    "bh":  ("bilabial", "stop", 1, 1, 0),
    "m":   ("bilabial", "nasal", 1, 0, 0),
    "y":   ("palatal", "approximant", 1, 0, 0),
    "r":   ("alveolar", "trill", 1, 0, 0),
    "l":   ("alveolar", "approximant", 1, 0, 0),
    "lx":  ("retroflex", "approximant", 1, 0, 0),
    "zh":  ("retroflex", "approximant", 1, 0, 0),  # Tamil/Malayalam zha
    "w":   ("labiodental", "approximant", 1, 0, 0),
    "sh":  ("palatal", "fricative", 0, 0, 0),
    "sx":  ("retroflex", "fricative", 0, 0, 0),
    "s":   ("alveolar", "fricative", 0, 0, 0),
    "h":   ("glottal", "fricative", 1, 0, 0),
    # nukta / loanword consonants
    "rx":  ("retroflex", "flap", 1, 0, 0),
    "rxh": ("retroflex", "flap", 1, 1, 0),
    "f":   ("labiodental", "fricative", 0, 0, 0),
    "z":   ("alveolar", "fricative", 1, 0, 0),
    # modifiers realized as phones
    "nB":  ("velar", "nasal", 1, 0, 1),   # generic anusvara nasal
    "hq":  ("glottal", "fricative", 0, 0, 0),  # visarga
}

FEATURE_WEIGHTS = [
    ("category", "100"),
    ("place", "4"),
    ("manner", "4"),
    ("voiced", "2"),
    ("aspirated", "1"),
    ("nasalized", "2"),
    ("length", "2"),
    ("vowel_height", "3"),
    ("vowel_backness", "3"),
    ("epsilon", "1/2"),
]

ALL_VOWELS_LONG = ["a", "aa", "i", "ii", "u", "uu", "ee", "ai", "oo", "au"]
STOPS_FULL = ["k", "kh", "g", "gh", "ng", "c", "ch", "j", "jh", "nj",
              "tx", "txh", "dx", "dxh", "nx", "t", "th", "d", "dh", "n",
              "p", "ph", "b", "bh", "m"]
SONORANTS = ["y", "r", "l", "w"]
SIBILANTS = ["sh", "sx", "s", "h"]
MODS = ["nB", "hq"]

LANG_PHONES = {
    "hi": ALL_VOWELS_LONG + ["rq"] + STOPS_FULL + SONORANTS + SIBILANTS
          + ["rx", "rxh", "f", "z"] + MODS,
    "mr": ALL_VOWELS_LONG + ["rq"] + STOPS_FULL + SONORANTS + ["lx"]
          + SIBILANTS + MODS,
    "ne": ALL_VOWELS_LONG + ["rq"] + STOPS_FULL + SONORANTS + SIBILANTS + MODS,
    "sa": ALL_VOWELS_LONG + ["rq"] + STOPS_FULL + SONORANTS + ["lx"]
          + SIBILANTS + MODS,
    "kok": ALL_VOWELS_LONG + ["e", "o"] + STOPS_FULL + SONORANTS + ["lx"]
           + SIBILANTS + MODS,
    "bn": ALL_VOWELS_LONG + [c for c in STOPS_FULL] + ["y", "r", "l"]
          + SIBILANTS + ["rx", "rxh"] + MODS,
    "as": ALL_VOWELS_LONG + [c for c in STOPS_FULL] + ["y", "r", "l"]
          + SIBILANTS + ["rx", "rxh", "z"] + MODS,
    "pa": ALL_VOWELS_LONG + STOPS_FULL + SONORANTS + ["lx"]
          + ["sh", "s", "h"] + ["rx", "f", "z"] + MODS,
    "gu": ALL_VOWELS_LONG + ["rq"] + STOPS_FULL + SONORANTS + ["lx"]
          + SIBILANTS + MODS,
    "or": ALL_VOWELS_LONG + STOPS_FULL + ["y", "r", "l", "w", "lx"]
          + SIBILANTS + ["rx", "rxh"] + MODS,
    "ta": ["a", "aa", "i", "ii", "u", "uu", "e", "ee", "ai", "o", "oo", "au",
           "k", "ng", "c", "nj", "j", "tx", "nx", "t", "n", "p", "m",
           "y", "r", "l", "lx", "zh", "w", "sh", "sx", "s", "h"] + MODS,
    "te": ["a", "aa", "i", "ii", "u", "uu", "rq", "e", "ee", "ai", "o", "oo",
           "au"] + STOPS_FULL + SONORANTS + ["lx"] + SIBILANTS + MODS,
    "kn": ["a", "aa", "i", "ii", "u", "uu", "rq", "e", "ee", "ai", "o", "oo",
           "au"] + STOPS_FULL + SONORANTS + ["lx"] + SIBILANTS + MODS,
    "ml": ["a", "aa", "i", "ii", "u", "uu", "rq", "e", "ee", "ai", "o", "oo",
           "au"] + STOPS_FULL + SONORANTS + ["lx", "zh"] + SIBILANTS + MODS,
    # filled in programmatically below from the Latin tables
    "en": [],
}


def write_inventory(en_labels):
    LANG_PHONES["en"] = sorted(en_labels)
    lines = ["# Common Label Set: phone superset, feature bundles, "
             "per-language inventories, distance weights."]
    for label in sorted(VOWELS):
        length, height, backness = VOWELS[label]
        lines.append("%s\tvowel\tlength=%s,height=%s,backness=%s"
                     % (label, length, height, backness))
    for label in sorted(CONSONANTS):
        place, manner, voi, asp, nas = CONSONANTS[label]
        feats = "place=%s,manner=%s,voiced=%s,aspirated=%s" % (
            place, manner, "true" if voi else "false",
            "true" if asp else "false")
        if nas:
            feats += ",nasalized=true"
        lines.append("%s\tconsonant\t%s" % (label, feats))
    lines.append("sil\tsilence\t")
    for lang in sorted(LANG_PHONES):
        labels = sorted(set(LANG_PHONES[lang]))
        lines.append("@lang\t%s\t%s" % (lang, ",".join(labels)))
    for field, w in FEATURE_WEIGHTS:
        lines.append("@weight\t%s\t%s" % (field, w))
    out = os.path.join(DATA, "cls.tsv")
    with open(out, "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# Script tables
# ---------------------------------------------------------------------------

SCRIPTS = {
    "Devanagari": 0x0900,
    "Bengali": 0x0980,
    "Gurmukhi": 0x0A00,
    "Gujarati": 0x0A80,
    "Oriya": 0x0B00,
    "Tamil": 0x0B80,
    "Telugu": 0x0C00,
    "Kannada": 0x0C80,
    "Malayalam": 0x0D00,
}

# offset -> (class, labels)
MASTER = {}
MASTER[0x01] = ("Candrabindu", ["nB"])
MASTER[0x02] = ("Anusvara", ["nB"])
MASTER[0x03] = ("Visarga", ["hq"])
for off, lab in [(0x05, "a"), (0x06, "aa"), (0x07, "i"), (0x08, "ii"),
                 (0x09, "u"), (0x0A, "uu"), (0x0B, "rq"), (0x0E, "e"),
                 (0x0F, "ee"), (0x10, "ai"), (0x12, "o"), (0x13, "oo"),
                 (0x14, "au")]:
    MASTER[off] = ("IndependentVowel", [lab])
for off, lab in [(0x15, "k"), (0x16, "kh"), (0x17, "g"), (0x18, "gh"),
                 (0x19, "ng"), (0x1A, "c"), (0x1B, "ch"), (0x1C, "j"),
                 (0x1D, "jh"), (0x1E, "nj"), (0x1F, "tx"), (0x20, "txh"),
                 (0x21, "dx"), (0x22, "dxh"), (0x23, "nx"), (0x24, "t"),
                 (0x25, "th"), (0x26, "d"), (0x27, "dh"), (0x28, "n"),
                 (0x29, "n"), (0x2A, "p"), (0x2B, "ph"), (0x2C, "b"),
                 (0x2D, "bh"), (0x2E, "m"), (0x2F, "y"), (0x30, "r"),
                 (0x31, "r"), (0x32, "l"), (0x33, "lx"), (0x34, "zh"),
                 (0x35, "w"), (0x36, "sh"), (0x37, "sx"), (0x38, "s"),
                 (0x39, "h")]:
    MASTER[off] = ("Consonant", [lab])
MASTER[0x3C] = ("Nukta", [])
MASTER[0x3D] = ("Avagraha", [])
for off, lab in [(0x3E, "aa"), (0x3F, "i"), (0x40, "ii"), (0x41, "u"),
                 (0x42, "uu"), (0x43, "rq"), (0x46, "e"), (0x47, "ee"),
                 (0x48, "ai"), (0x4A, "o"), (0x4B, "oo"), (0x4C, "au")]:
    MASTER[off] = ("VowelSign", [lab])
MASTER[0x4D] = ("Virama", [])

# digit names, one label list per digit 0..9, per script
DIGITS = {
    "Devanagari": ["sh uu n y", "ee k", "d oo", "t ii n", "c aa r",
                   "p aa nB c", "ch a h", "s aa t", "aa txh", "n au"],
    "Bengali": ["sh u n n oo", "e k", "d u i", "t i n", "c aa r",
                "p aa nB c", "ch a y", "s aa t", "aa tx", "n a y"],
    "Gurmukhi": ["s i f a r", "i k", "d oo", "t i n", "c aa r",
                 "p a nB j", "ch ee", "s a t", "a txh", "n au"],
    "Gujarati": ["sh uu n y", "ee k", "b ee", "t r a nx", "c aa r",
                 "p aa nB c", "ch a", "s aa t", "aa txh", "n a w"],
    "Oriya": ["sh uu n y a", "e k a", "d u i", "t i n i", "c aa r i",
              "p a nB c a", "ch a", "s aa t a", "aa txh a", "n a"],
    "Tamil": ["p uu j j i y a m", "o n r u", "i r a nx dx u",
              "m uu n r u", "n aa ng u", "ai n t u", "aa r u",
              "ee zh u", "e tx tx u", "o n p a t u"],
    "Telugu": ["s u n n aa", "o k a tx i", "r e nx dx u", "m uu dx u",
               "n aa l u g u", "ai d u", "aa r u", "ee dx u",
               "e n i m i d i", "t o m m i d i"],
    "Kannada": ["s o n n e", "o n d u", "e r a dx u", "m uu r u",
                "n aa l k u", "ai d u", "aa r u", "ee lx u",
                "e nx tx u", "o m b a t t u"],
    "Malayalam": ["p uu j y a m", "o n n u", "r a nx dx u", "m uu n n u",
                  "n aa l u", "a nj c u", "aa r u", "ee zh u",
                  "e tx tx u", "o n p a t u"],
}

# per-script extra rows: (key codepoints, class, labels)
EXTRAS = {
    "Devanagari": [
        # precomposed nukta letters and their decomposed spellings
        ([0x0958], "Consonant", ["k"]), ([0x0915, 0x093C], "Consonant", ["k"]),
        ([0x0959], "Consonant", ["kh"]), ([0x0916, 0x093C], "Consonant", ["kh"]),
        ([0x095A], "Consonant", ["g"]), ([0x0917, 0x093C], "Consonant", ["g"]),
        ([0x095B], "Consonant", ["z"]), ([0x091C, 0x093C], "Consonant", ["z"]),
        ([0x095C], "Consonant", ["rx"]), ([0x0921, 0x093C], "Consonant", ["rx"]),
        ([0x095D], "Consonant", ["rxh"]), ([0x0922, 0x093C], "Consonant", ["rxh"]),
        ([0x095E], "Consonant", ["f"]), ([0x092B, 0x093C], "Consonant", ["f"]),
        ([0x095F], "Consonant", ["y"]), ([0x092F, 0x093C], "Consonant", ["y"]),
        ([0x0950], "Punct", []),  # om sign, left to downstream lexicons
    ],
    "Bengali": [
        ([0x09DC], "Consonant", ["rx"]), ([0x09A1, 0x09BC], "Consonant", ["rx"]),
        ([0x09DD], "Consonant", ["rxh"]), ([0x09A2, 0x09BC], "Consonant", ["rxh"]),
        ([0x09DF], "Consonant", ["y"]), ([0x09AF, 0x09BC], "Consonant", ["y"]),
        ([0x09CE], "Consonant", ["t"]),  # khanda ta; vowelless in practice
    ],
    "Gurmukhi": [
        ([0x0A59], "Consonant", ["kh"]), ([0x0A5A], "Consonant", ["g"]),
        ([0x0A5B], "Consonant", ["z"]), ([0x0A5C], "Consonant", ["rx"]),
        ([0x0A5E], "Consonant", ["f"]),
        ([0x0A38, 0x0A3C], "Consonant", ["sh"]),
        ([0x0A70], "Anusvara", ["nB"]),  # tippi
        ([0x0A71], "Avagraha", []),      # addak (gemination), not realized
    ],
    "Gujarati": [],
    "Oriya": [
        ([0x0B5C], "Consonant", ["rx"]), ([0x0B21, 0x0B3C], "Consonant", ["rx"]),
        ([0x0B5D], "Consonant", ["rxh"]), ([0x0B22, 0x0B3C], "Consonant", ["rxh"]),
        ([0x0B71], "Consonant", ["w"]),
    ],
    "Tamil": [],
    "Telugu": [],
    "Kannada": [
        ([0x0CDE], "Consonant", ["zh"]),  # archaic llla
    ],
    "Malayalam": [],
}

FILE_NAMES = {
    "Devanagari": "deva.tsv", "Bengali": "beng.tsv", "Gurmukhi": "guru.tsv",
    "Gujarati": "gujr.tsv", "Oriya": "orya.tsv", "Tamil": "taml.tsv",
    "Telugu": "telu.tsv", "Kannada": "knda.tsv", "Malayalam": "mlym.tsv",
}


def write_script_tables():
    os.makedirs(os.path.join(DATA, "scripts"), exist_ok=True)
    for script, base in SCRIPTS.items():
        rows = []
        for off in sorted(MASTER):
            cp = base + off
            if not assigned(cp):
                continue
            cls, labels = MASTER[off]
            rows.append(("%04X" % cp, cls, labels, chr(cp)))
        for key, cls, labels in EXTRAS[script]:
            if not all(assigned(cp) for cp in key):
                continue
            rows.append(("+".join("%04X" % cp for cp in key), cls, labels,
                         "".join(chr(cp) for cp in key)))
        names = DIGITS[script]
        for d in range(10):
            # native digit block sits at offset 0x66
            cp = base + 0x66 + d
            if assigned(cp):
                rows.append(("%04X" % cp, "Digit", names[d].split(), chr(cp)))
            rows.append(("%04X" % (0x30 + d), "Digit", names[d].split(),
                         str(d)))
        lines = ["# %s grapheme -> CLS rules (generated by "
                 "scripts/make_tables.py)" % script]
        for keyhex, cls, labels, glyph in rows:
            lines.append("%s\t%s\t%s" % (keyhex, cls, " ".join(labels)))
        out = os.path.join(DATA, "scripts", FILE_NAMES[script])
        with open(out, "w", encoding="utf-8") as f:
            f.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# Latin tables
# ---------------------------------------------------------------------------

LEXICON = {
    "ok": "ow k", "hello": "h e l oo", "world": "w a r l dx",
    "school": "s k uu l", "the": "d a", "a": "a", "is": "i z",
    "and": "ae n dx", "computer": "k a m p y uu tx a r",
    "india": "i n dx i y aa", "phone": "f oo n", "time": "tx ai m",
    "train": "tx r ee n", "bus": "b a s", "ticket": "tx i k a tx",
    "college": "k aa l e j", "office": "aa f i s", "please": "p l ii z",
    "thank": "th ae ng k", "you": "y uu", "water": "w aa tx a r",
    "cat": "k ae tx", "mobile": "m oo b ai l", "online": "aa n l ai n",
    "meeting": "m ii tx i ng", "market": "m aa r k e tx",
    "0": "z i r oo", "1": "w a n", "2": "tx uu", "3": "th r ii",
    "4": "f o r", "5": "f ai w", "6": "s i k s", "7": "s e w a n",
    "8": "ee tx", "9": "n ai n",
}

LETTER_RULES = {
    # digraphs take precedence by longest match
    "th": "th", "sh": "sh", "ch": "c", "ph": "f", "wh": "w",
    "ck": "k", "oo": "uu", "ee": "ii", "ea": "ii", "ou": "au", "ai": "ee",
    "qu": "k w", "ng": "ng",
    "a": "a", "b": "b", "c": "k", "d": "dx", "e": "e", "f": "f",
    "g": "g", "h": "h", "i": "i", "j": "j", "k": "k", "l": "l",
    "m": "m", "n": "n", "o": "o", "p": "p", "q": "k", "r": "r",
    "s": "s", "t": "tx", "u": "u", "v": "w", "w": "w", "x": "k s",
    "y": "y", "z": "z",
}


def write_latin_tables():
    en_labels = set()
    for src in (LEXICON, LETTER_RULES):
        for v in src.values():
            en_labels.update(v.split())
    with open(os.path.join(DATA, "latin_lexicon.tsv"), "w") as f:
        f.write("# English pronunciation lexicon (CLS labels)\n")
        for w in sorted(LEXICON):
            f.write("%s\t%s\n" % (w, LEXICON[w]))
    with open(os.path.join(DATA, "latin_letters.tsv"), "w") as f:
        f.write("# letter-to-sound fallback rules, longest key wins\n")
        for k in sorted(LETTER_RULES):
            f.write("%s\t%s\n" % (k, LETTER_RULES[k]))
    return en_labels


# ---------------------------------------------------------------------------
# Routing tables, voices
# ---------------------------------------------------------------------------

SCRIPT_LANGUAGE = [
    ("Devanagari", "hi"), ("Bengali", "bn"), ("Gurmukhi", "pa"),
    ("Gujarati", "gu"), ("Oriya", "or"), ("Tamil", "ta"),
    ("Telugu", "te"), ("Kannada", "kn"), ("Malayalam", "ml"),
    ("Latin", "en"),
]

LANGUAGE_SCRIPTS = [
    ("hi", "Devanagari"), ("mr", "Devanagari"), ("sa", "Devanagari"),
    ("ne", "Devanagari"), ("kok", "Devanagari"),
    ("kok-north-canara", "Devanagari"), ("kok-south-canara", "Kannada"),
    ("bn", "Bengali"), ("as", "Bengali"), ("pa", "Gurmukhi"),
    ("gu", "Gujarati"), ("or", "Oriya"), ("ta", "Tamil"), ("te", "Telugu"),
    ("kn", "Kannada"), ("ml", "Malayalam"), ("en", "Latin"),
]

SIMILARITY = [
    ("sa", "te,kn"),
    ("kok-north-canara", "mr,kn,hi"),
    ("kok-south-canara", "kn,mr,hi"),
    ("kok", "mr,kn,hi"),
    ("ne", "hi,mr"),
    ("as", "bn"),
]

VOICE_LANGS = ["as", "bn", "gu", "hi", "kn", "kok", "ml", "mr", "ne",
               "or", "pa", "ta", "te"]


def write_routing_tables():
    with open(os.path.join(DATA, "script_language.tsv"), "w") as f:
        f.write("# default language per script\n")
        for s, l in SCRIPT_LANGUAGE:
            f.write("%s\t%s\n" % (s, l))
    with open(os.path.join(DATA, "language_scripts.tsv"), "w") as f:
        f.write("# native script per language code\n")
        for l, s in LANGUAGE_SCRIPTS:
            f.write("%s\t%s\n" % (l, s))
    with open(os.path.join(DATA, "similarity.tsv"), "w") as f:
        f.write("# language -> preferred substitute voices, best first\n")
        for l, prefs in SIMILARITY:
            f.write("%s\t%s\n" % (l, prefs))
    os.makedirs(os.path.join(DATA, "voices"), exist_ok=True)
    with open(os.path.join(DATA, "voices", "manifest.tsv"), "w") as f:
        f.write("# voice_id\tlanguage\tinventory\tsample_rate\tbit_depth\n")
        for lang in VOICE_LANGS:
            phones = sorted(set(LANG_PHONES[lang]))
            pf = os.path.join(DATA, "voices", "%s.phones" % lang)
            with open(pf, "w") as pfh:
                pfh.write("\n".join(phones) + "\n")
            f.write("%s_voice\t%s\tvoices/%s.phones\t48000\t16\n"
                    % (lang, lang, lang))


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------

# Sanskrit-origin words, Devanagari spellings; the Telugu/Kannada forms are
# the same letters shifted to the target block.
COGNATES = [
    "कमल", "नयन", "वन", "जल", "फल", "गज", "रथ", "मन", "धन", "गगन",
    "नगर", "सागर", "चरण", "शरण", "करुण", "महिमा", "भवन", "जीवन", "पवन",
    "गुण", "वचन", "रचना", "कविता", "वेद", "योग", "राग", "नाग", "लोक",
    "शोक", "मोह", "देव", "देवी", "नदी", "गिरि", "कवि", "रवि", "मुनि",
    "गति", "मति", "रति", "शिव", "हरि", "गुरु", "शिशु", "मधु", "वायु",
    "सेना", "माला", "लता", "कला", "दया", "छाया", "माया", "काया", "गीता",
    "सीता", "राम", "शाम", "ग्राम", "नाम",
]


def transliterate(word, target_base):
    out = []
    for ch in word:
        cp = ord(ch)
        assert 0x0900 <= cp <= 0x097F, word
        tcp = target_base + (cp - 0x0900)
        assert assigned(tcp), "%s %04X" % (word, tcp)
        out.append(chr(tcp))
    return "".join(out)


def write_fixtures():
    os.makedirs(os.path.join(DATA, "fixtures"), exist_ok=True)
    with open(os.path.join(DATA, "fixtures", "cognates.tsv"), "w",
              encoding="utf-8") as f:
        f.write("# set_id\tscript\ttext\n")
        for i, w in enumerate(COGNATES):
            sid = "cog%03d" % i
            f.write("%s\tDevanagari\t%s\n" % (sid, w))
            f.write("%s\tTelugu\t%s\n" % (sid, transliterate(w, 0x0C00)))
            f.write("%s\tKannada\t%s\n" % (sid, transliterate(w, 0x0C80)))

    mixed = [
        ("utt001", "नमस्ते world"),
        ("utt002", "मैं ok हूँ"),
        ("utt003", "मेरा phone नया है"),
        ("utt004", "हम school जाते हैं"),
        ("utt005", "यह computer अच्छा है"),
        ("utt006", "कल meeting है"),
        ("utt007", "बस ticket लो"),
        ("utt008", "कमल जल में है"),
        ("utt009", "thank you बहुत"),
        ("utt010", "समय time है"),
    ]
    with open(os.path.join(DATA, "fixtures", "mixed_corpus.tsv"), "w",
              encoding="utf-8") as f:
        for uid, text in mixed:
            f.write("%s\t%s\n" % (uid, text))

    sanskrit = [
        ("sa001", "कमलं जले तिष्ठति"),
        ("sa002", "रामो वनं गच्छति"),
        ("sa003", "गुरुर्देवो भवति"),
        ("sa004", "सत्यं वद धर्मं चर"),
        ("sa005", "विद्या ददाति विनयम्"),
    ]
    with open(os.path.join(DATA, "fixtures", "sanskrit_corpus.tsv"), "w",
              encoding="utf-8") as f:
        for uid, text in sanskrit:
            f.write("%s\t%s\n" % (uid, text))

    telugu = [
        ("te001", "మా school లో"),
        ("te002", "నమస్కారం"),
        ("te003", "నీరు మంచిది"),
    ]
    with open(os.path.join(DATA, "fixtures", "telugu_corpus.tsv"), "w",
              encoding="utf-8") as f:
        for uid, text in telugu:
            f.write("%s\t%s\n" % (uid, text))

    # two-voice listening-test cell means, as an aggregated MOS ratings file
    cells = [
        ("te", "hi_voice", "intelligibility", "4.13"),
        ("te", "hi_voice", "naturalness", "3.19"),
        ("te", "kn_voice", "intelligibility", "4.22"),
        ("te", "kn_voice", "naturalness", "3.85"),
        ("hi", "hi_voice", "intelligibility", "4.50"),
        ("hi", "hi_voice", "naturalness", "4.46"),
        ("hi", "kn_voice", "intelligibility", "4.26"),
        ("hi", "kn_voice", "naturalness", "4.02"),
        ("mr", "hi_voice", "intelligibility", "3.90"),
        ("mr", "hi_voice", "naturalness", "3.81"),
        ("mr", "kn_voice", "intelligibility", "4.02"),
        ("mr", "kn_voice", "naturalness", "4.00"),
        ("kn", "hi_voice", "intelligibility", "2.67"),
        ("kn", "hi_voice", "naturalness", "2.03"),
        ("kn", "kn_voice", "intelligibility", "4.30"),
        ("kn", "kn_voice", "naturalness", "4.35"),
        ("or", "hi_voice", "intelligibility", "3.58"),
        ("or", "hi_voice", "naturalness", "2.82"),
        ("or", "kn_voice", "intelligibility", "3.60"),
        ("or", "kn_voice", "naturalness", "2.21"),
    ]
    with open(os.path.join(DATA, "fixtures", "mos_cells.tsv"), "w") as f:
        f.write("design\tmos-cells\n")
        for row in cells:
            f.write("\t".join(row) + "\n")


def write_config():
    lines = [
        "# pipeline configuration; paths are relative to this file",
        "inventory\tcls.tsv",
        "script.Devanagari\tscripts/deva.tsv",
        "script.Bengali\tscripts/beng.tsv",
        "script.Gurmukhi\tscripts/guru.tsv",
        "script.Gujarati\tscripts/gujr.tsv",
        "script.Oriya\tscripts/orya.tsv",
        "script.Tamil\tscripts/taml.tsv",
        "script.Telugu\tscripts/telu.tsv",
        "script.Kannada\tscripts/knda.tsv",
        "script.Malayalam\tscripts/mlym.tsv",
        "lexicon\tlatin_lexicon.tsv",
        "letter_rules\tlatin_letters.tsv",
        "script_language_map\tscript_language.tsv",
        "language_scripts\tlanguage_scripts.tsv",
        "similarity\tsimilarity.tsv",
        "voices\tvoices/manifest.tsv",
        "primary_language\thi",
        "policy\tnearest",
    ]
    with open(os.path.join(DATA, "config.tsv"), "w") as f:
        f.write("\n".join(lines) + "\n")


def main():
    os.makedirs(DATA, exist_ok=True)
    en = write_latin_tables()
    write_inventory(en)
    write_script_tables()
    write_routing_tables()
    write_fixtures()
    write_config()
    print("data tables written to", DATA)


if __name__ == "__main__":
    main()
