"""Build curves from the torsion families and classify them.

Each family E_T carries the point (0, 0); its order under the exact group
law matches the cyclic part of T. The class of the reduced minimal model
always lands in the allowed set for T.
"""

from rmm import (
    RationalPoint,
    TorsionStructure,
    allowed_rmm,
    build_model,
    compute_invariants,
    minimize,
    point_order,
    rmm_index,
    validate_params,
)

T = TorsionStructure
origin = RationalPoint.affine(0, 0)

cases = [
    (T.C4, 2**12 * 3**2, 5 * 7 * 131, None),
    (T.C5, 2, 1, None),
    (T.C7, 2, 1, None),
    (T.C12, 6, 11, None),
    (T.C2, 3, 2, 5),
    (T.C2xC2, 4, 1, 3),
    (T.C2xC8, 1, 1, None),
]

for torsion, a, b, d in cases:
    params = validate_params(torsion, a, b, d)
    model = build_model(params)
    sig_min, u = minimize(compute_invariants(model)[3])
    cls = rmm_index(sig_min)
    assert cls.index in allowed_rmm(torsion)
    n = point_order(model, origin)
    label = f"E_{torsion.value}({a}, {b}" + (f", {d})" if d else ")")
    print(f"{label:30s} (0,0) has order {n:2d}   u = {u:3d}   class {cls}")
