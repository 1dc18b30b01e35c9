#!/usr/bin/env python3
"""Regenerates the sequence fixtures in this directory.

Counts closed walks on the m-regular tree by representing each vertex as a
reduced word over m involutions (the tree is the Cayley graph of the free
product of m copies of Z/2) and pushing the walk distribution step by step.
Nothing here shares code with the C++ library.
"""

from collections import Counter
from pathlib import Path


def closed_walks(m, steps):
    """Return [A_m(0, 0), A_m(0, 1), ..., A_m(0, steps)]."""
    dist = Counter({(): 1})
    out = [1]
    for _ in range(steps):
        nxt = Counter()
        for word, count in dist.items():
            for g in range(m):
                if word and word[-1] == g:
                    nxt[word[:-1]] += count
                else:
                    nxt[word + (g,)] += count
        dist = nxt
        out.append(dist[()])
    return out


FIXTURES = {
    # name: (degree, number of even-length terms)
    "A000984_prefix.txt": (2, 12),
    "A089022_prefix.txt": (3, 9),
    "A035610_prefix.txt": (4, 8),
}


def main():
    here = Path(__file__).resolve().parent
    for name, (m, terms) in FIXTURES.items():
        seq = closed_walks(m, 2 * (terms - 1))[::2]
        lines = [f"{k} {v}" for k, v in enumerate(seq)]
        (here / name).write_text("\n".join(lines) + "\n", encoding="ascii")
        print(name, seq)


if __name__ == "__main__":
    main()
