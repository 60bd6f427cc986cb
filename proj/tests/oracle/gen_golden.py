"""Writes tests/golden/expansions.txt from the sympy reference."""
import sys
from oracle import word, render

WORDS = [[0], [3], [-2], [0, 0], [1, 0], [0, 1], [-1, 2], [2, -1], [0, 0, 0], [1, 0, 0],
         [0, 0, 1], [2, 0, 1], [0, -1, 1], [0, 0, 0, 0]]

with open(sys.argv[1], "w") as f:
    for w in WORDS:
        f.write(",".join(map(str, w)) + "\t" + render(word(w)[0]) + "\n")
