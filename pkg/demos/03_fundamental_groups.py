"""
Fundamental groups from presentations
=====================================

The abelianization comes from the Smith form of the exponent-sum matrix.
When it is Z, Tietze elimination may still certify the whole group is Z.
If elimination gets stuck the answer is inconclusive, never a guess.
"""

from qpkit import data
from qpkit.presentation import (GroupPresentation, GroupWord, abelianization,
                                is_infinite_cyclic_certificate, load_presentation,
                                tietze_simplify, weinbaum_subword_test)

X, Y = 1, 2

positron = load_presentation(data.path("positron-pi1.json"))
print("positron relator:", positron.relators[0].letters)
res = tietze_simplify(positron, 100)
print("  simplified to", res.presentation.to_json(), "in", res.steps, "step(s)")
print("  verdict:", is_infinite_cyclic_certificate(positron).value)

# the trefoil group has abelianization Z but is not Z; elimination cannot tell
trefoil = GroupPresentation(2, (GroupWord((X, X, Y, Y, Y)),))
print("trefoil abelianization:", abelianization(trefoil).to_json())
print("  verdict:", is_infinite_cyclic_certificate(trefoil).value)

# in a two-generator one-relator group no proper subword of the relator is trivial
mazur = load_presentation(data.path("mazur-pi1.json"))
R = mazur.relators[0]
print("mazur relator:", R.letters, "abelianization", abelianization(mazur).to_json())
for cand in [(X, Y), (Y, Y), R.letters]:
    print(f"  candidate {cand}: {weinbaum_subword_test(R, GroupWord(cand)).value}")
