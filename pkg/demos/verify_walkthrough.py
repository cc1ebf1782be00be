"""Walk through one verification: fusion product, relations, presented module.

    python3 demos/verify_walkthrough.py
"""
from fusionrel.cvpres.presented import build_presented_module
from fusionrel.cvpres.relations import relation_set
from fusionrel.cvpres.verify import surjection_witness, verify_theorem_instance
from fusionrel.fusion import fusion_product
from fusionrel.lie_core import decompose_character

n, m, ell = 2, 1, (2, 1)

G = fusion_product(n, m, ell)
print(f"fusion product for sl{n + 1}, m={m}, ell={ell}: dim {G.dim}, graded dims {G.graded_char.degree_dims()}")
for k in G.graded_char.degrees():
    print(f"  degree {k}: {decompose_character(G.graded_char.component(k))}")

rels = relation_set(n, m, ell)
print(f"{len(rels)} relations after truncation; failing on the fusion generator: "
      f"{len(surjection_witness(G, n, m, ell))}")

P = build_presented_module(n, m, ell, target=G.dominant_blocks())
print(f"presented module: graded dims {P.degree_dims()}, word caps tried {P.ladder}")

v = verify_theorem_instance(n, m, ell)
print("verdict:", "pass" if v.passed else "fail", v.to_jsonable()["caps_used"])
