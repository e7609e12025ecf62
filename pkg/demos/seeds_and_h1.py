"""Different seeds give type A, B and D sequences; H_1 stabilises immediately.

Run: python3 demos/seeds_and_h1.py
"""

from artinstab import ArtinSequence, abelianization_rank, classify_finite_type, parse_seed

SEEDS = {
    "empty": "generators: 1\n",
    "B": "generators: 2\nanchor: 1\nm 1 2 4\n",
    "D": "generators: 3\nanchor: 1\nm 1 2 3\nm 1 3 3\n",
    "isolated vertex": "generators: 2\n",
}

for name, text in SEEDS.items():
    seq = ArtinSequence(*parse_seed(text))
    row = []
    for n in range(1, 7):
        d = seq.diagram(n)
        row.append(f"{'+'.join(classify_finite_type(d).names)}:{abelianization_rank(d)[0]}")
    print(f"{name:>16}  " + "  ".join(row))
