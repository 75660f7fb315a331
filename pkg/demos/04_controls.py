"""
When the hypotheses fail
========================

kS3 over GF(2) lacks the Chevalley property, so gr_J is refused.  The
hypotheses are sufficient, not necessary: kS3 stays 2-pertinent, while
the semisimple kC3 over GF(2) does not.
"""

from hopfind import GradingError, chevalley_summary, graded_from_jadic, indicator_report
from hopfind.fixtures import fixture

for name in ("kS3@2", "kS3@3", "kC3@2"):
    H = fixture(name)
    s = chevalley_summary(H)
    rep = indicator_report(H, -8, 8)
    print(name, {k: s[k] for k in ("chevalley", "dual_chevalley", "local_dual_chevalley")})
    print("   values:", rep.sequence.values, " p-pertinent:", rep.is_p_pertinent)

# J(kS3) over GF(2) is not stable under the comultiplication
try:
    graded_from_jadic(fixture("kS3@2"))
except GradingError as exc:
    print("gr_J refused:", exc)
