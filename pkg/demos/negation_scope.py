"""
How negation moves a score
==========================

A negation word arms a pending flag that lasts for a few tokens inside the
same sentence. The next sentiment word in that window moves two points
toward the neutral midpoint (5).
"""

from collabop import adjust_for_negation, reference_lexicon, score_remark

lexicon = reference_lexicon()

remark = "He is a good student but he is not regular in the class and is misbehaving at times."
result = score_remark(remark, lexicon)
for m in result.matches:
    flag = "negated" if m.negated else ""
    print(f"{m.token.normalized:12s} raw {m.raw_score:4.1f} -> {m.adjusted_score:4.1f} {flag}")
print("remark value:", result.value)

# %%
# The adjustment rule over the whole scale
for raw in range(11):
    print(raw, "->", adjust_for_negation(raw, True))

# %%
# Scope: the window counts tokens after the negator; a full stop ends it.
for text in ("not good", "not really very good", "not really very truly good", "not. good"):
    for window in (1, 3, 4):
        value = score_remark(text, lexicon, negation_window=window).value
        print(f"{text!r:32s} window={window}: {value}")
