"""
Weighted collaboration and evaluation history
=============================================

By default each teacher counts once. A weight table lets some opinion
holders count more. Each evaluation can be appended to a JSON-lines store
and read back later as a student's history.
"""

import tempfile
from datetime import datetime, timedelta, timezone
from pathlib import Path

from collabop import Remark, append_history, evaluate_student, history, reference_lexicon

lexicon = reference_lexicon()

remarks = [
    Remark("s7", "class_teacher", "She is diligent and punctual."),
    Remark("s7", "lab_instructor", "She is careless with equipment and not attentive."),
    Remark("s7", "sports_coach", "The weather was cloudy."),  # no sentiment words
]

plain = evaluate_student(remarks, lexicon)
weighted = evaluate_student(remarks, lexicon, {"class_teacher": 2.0, "lab_instructor": 1.0,
                                               "sports_coach": 1.0})
for row in plain.per_remark:
    print(row)
print("unit weights:", plain.collaborated_value, plain.collaborated_bucket)
print("weighted    :", weighted.collaborated_value, weighted.collaborated_bucket)

# %%
# Tracking over a term: one record per evaluation, read back oldest first.
start = datetime(2024, 1, 8, tzinfo=timezone.utc)
with tempfile.TemporaryDirectory() as tmp:
    store = Path(tmp) / "history.jsonl"
    texts = ["She is lazy and careless.", "She is not lazy.", "She is bright and diligent."]
    for week, text in enumerate(texts):
        rec = evaluate_student([Remark("s7", "class_teacher", text)], lexicon,
                               clock=lambda: start + timedelta(weeks=week))
        append_history(store, rec)
    for rec in history(store, "s7"):
        print(rec.timestamp.date(), rec.collaborated_value, rec.collaborated_bucket)
