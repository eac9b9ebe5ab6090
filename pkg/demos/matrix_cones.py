"""Matrix cones: PSD versus copositive, CP factors, and a lifted witness."""

from troposign import Pos, cp_factorize, is_copositive, is_psd_signed
from troposign.lift import remark_matrix_check
from troposign.linalg import det_signed, gram_trop

m = ((Pos(2), Pos(3)), (Pos(3), Pos(2)))
print("M =", m)
print("PSD:", is_psd_signed(m))
print("copositive:", is_copositive(m).member)
print("det M =", det_signed(m))

check = remark_matrix_check()
print("lifted det at t = 10^6:", float(check["lifted_det"]), "sval", check["lifted_det_sval"])

x = ((2, 2), (2, 2))
y = cp_factorize(x)
print("CP factor of", x, "->", y)
print("Y Y^T =", gram_trop(y))
