"""The largest instance of the sweep: sl4, m=2, ell=(2,2,2), dimension 20^3.

Takes about a minute.

    python3 demos/big_instance.py
"""
import time

from fusionrel.cvpres.verify import verify_theorem_instance

t = time.time()
v = verify_theorem_instance(3, 2, (2, 2, 2))
print("pass" if v.passed else "fail", f"in {time.time() - t:.0f}s")
print("graded dims", v.fusion_char.degree_dims(), "total", v.dim_fusion)
print("word caps tried", v.caps_used["word_ladder"])
