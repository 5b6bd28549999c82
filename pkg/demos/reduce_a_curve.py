"""Walk one curve through the whole reduction pipeline.

Starting from integral a-invariants we compute the signature (c4, c6, Delta),
strip the largest admissible scale factor u, read off the class of the
reduced minimal model from c6 mod 24, and print the model both ways
(step-by-step recipe and closed form).
"""

from rmm import (
    WeierstrassModel,
    compute_invariants,
    lkc_reduce,
    minimize,
    reduced_model,
    reduction_type,
    rmm_index,
)

curve = WeierstrassModel(0, 0, 0, -11346507, 16371897606)
print("input model:       ", curve.a_invariants())

b2, b4, b6, sig = compute_invariants(curve)
print("b-invariants:      ", (b2, b4, b6))
print("signature:         ", (sig.c4, sig.c6, sig.delta))

sig_min, u = minimize(sig)
print("scale factor u:    ", u)
print("minimal signature: ", (sig_min.c4, sig_min.c6, sig_min.delta))

cls = rmm_index(sig_min)
print("class:             ", cls, "with (a1, a2, a3) =", cls.triple)

step_by_step = lkc_reduce(sig_min)
closed_form = reduced_model(sig_min)
assert step_by_step == closed_form
print("reduced model:     ", closed_form.a_invariants())

for p in (2, 3):
    print(f"reduction at {p}:    ", reduction_type(sig_min, p).value)
