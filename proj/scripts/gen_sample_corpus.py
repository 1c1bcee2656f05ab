#!/usr/bin/env python3
"""Writes a deterministic synthetic Indonesian corpus built from the shipped lexicon.

Word forms come from a small standalone affixation model (standard textbook
allomorphy), not from the C++ rules, so the corpus doubles as an outside check.

usage: gen_sample_corpus.py LEXICON OUT [--lines N] [--seed S]
"""

import argparse
import random

VOWELS = set("aeiou")
K_KEEP = {"kalkulasi", "kampanye", "kategori", "komunikasi", "konsumsi",
          "kontribusi", "koordinasi", "kaji"}

NAMES = ["Budi", "Siti", "Andi", "Dewi", "Rina", "Joko", "Aceh", "Jakarta",
         "Bandung", "Surabaya", "Medan", "Bali", "Papua", "Yogyakarta"]


def read_sections(path):
    sections, current = {}, None
    with open(path, encoding="utf-8") as f:
        for raw in f:
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                current = line[1:].strip().split()[0]
                continue
            sections.setdefault(current, []).append(line)
    return sections


def me(stem, inner=None):
    c = stem[0]
    if inner in ("pe", "per"):
        return "mem" + stem
    if c in "lrwymn":
        return "me" + stem
    if c in "bfv":
        return "mem" + stem
    if c == "p":
        return "mem" + (stem if stem[1] == "r" else stem[1:])
    if c in "cdjz":
        return "men" + stem
    if c == "t":
        return "men" + stem[1:]
    if c == "s":
        return "meny" + stem[1:]
    if c == "k":
        return "meng" + (stem if any(stem.startswith(k) for k in K_KEEP) else stem[1:])
    return "meng" + stem  # g h q and vowels


def pe(stem):
    c = stem[0]
    if c == "p":
        return None
    if c in "lrwymnj":
        return "pe" + stem
    if c in "bf":
        return "pem" + stem
    if c in "cd":
        return "pen" + stem
    if c == "t":
        return "pen" + stem[1:]
    if c == "s":
        return "peny" + stem[1:]
    if c in "ghk" or c in VOWELS:
        return "peng" + stem
    return None


def ber(stem):
    if stem == "ajar":
        return "belajar"
    if stem[0] == "r":
        return "be" + stem
    if len(stem) > 3 and stem[0] not in VOWELS and stem[1:3] == "er" and stem[0] not in "rl":
        return "be" + stem
    return "ber" + stem


def ter(stem):
    if stem[0] in VOWELS:
        return None
    if stem[0] == "r":
        return "te" + stem
    return "ter" + stem


def per(stem):
    return "pe" + stem if stem[0] == "r" else "per" + stem


def derive(root, pos, rng):
    """One random surface form of `root` or None."""
    r = rng.random()
    if pos == "verbs":
        choices = [
            lambda: me(root),
            lambda: me(root + rng.choice(["kan", "i"])),
            lambda: "di" + root + rng.choice(["", "kan", "i"]),
            lambda: ber(root),
            lambda: ter(root),
            lambda: (pe(root) or root) + rng.choice(["", "an"]),
            lambda: "ke" + root + "an",
            lambda: root + "an",
            lambda: me(per(root) + "kan", inner="per"),
            lambda: "ke" + ber(root) + "an",
            lambda: root + "-" + root,
            lambda: ber(root) + "-" + root,
            lambda: root + rng.choice(["lah", "kah"]),
        ]
    elif pos == "nouns":
        choices = [
            lambda: root + rng.choice(["nya", "ku", "mu"]),
            lambda: ber(root),
            lambda: root + "-" + root,
            lambda: "se" + root,
            lambda: per(root) + "an",
            lambda: root + "an",
            lambda: "ke" + root + "an",
            lambda: root + "-" + root + "nya",
        ]
    elif pos == "adjectives":
        choices = [
            lambda: "ke" + root + "an",
            lambda: "se" + root + "nya",
            lambda: me(root + "kan"),
            lambda: "ter" + root if root[0] not in VOWELS else None,
            lambda: ber(root),
            lambda: me(per(root) + "kan", inner="per"),
            lambda: root + "-" + root,
        ]
    else:
        return root
    if r < 0.25:
        return root
    return rng.choice(choices)() or root


def sentence(sections, rng):
    nouns = sections["nouns"] + sections["borrowed"]
    verbs = sections["verbs"]
    adjs = sections["adjectives"]
    fn = sections["function"]
    words = []
    if rng.random() < 0.3:
        words.append(rng.choice(NAMES))
    for _ in range(rng.randint(4, 14)):
        pick = rng.random()
        if pick < 0.35:
            words.append(derive(rng.choice(nouns), "nouns", rng))
        elif pick < 0.65:
            words.append(derive(rng.choice(verbs), "verbs", rng))
        elif pick < 0.8:
            words.append(derive(rng.choice(adjs), "adjectives", rng))
        elif pick < 0.97:
            words.append(rng.choice(fn))
        else:
            words.append(str(rng.randint(1, 2025)))
        if rng.random() < 0.05:
            words[-1] += ","
    if rng.random() < 0.05:
        words.insert(rng.randrange(len(words)), rng.choice(NAMES))
    if rng.random() < 0.04:
        i = rng.randrange(len(words))
        words[i] = "(" + words[i].rstrip(",") + ")"
    words[0] = words[0][0].upper() + words[0][1:]
    tail = rng.choices([".", "?", "!"], weights=[85, 10, 5])[0]
    return " ".join(words).rstrip(",") + tail


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("lexicon")
    ap.add_argument("out")
    ap.add_argument("--lines", type=int, default=10000)
    ap.add_argument("--seed", type=int, default=20161)
    args = ap.parse_args()
    sections = read_sections(args.lexicon)
    rng = random.Random(args.seed)
    with open(args.out, "w", encoding="utf-8", newline="\n") as f:
        for _ in range(args.lines):
            f.write(sentence(sections, rng) + "\n")


if __name__ == "__main__":
    main()
