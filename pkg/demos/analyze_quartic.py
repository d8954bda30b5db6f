"""Walk one quartic field through the whole pipeline.

We take x^4 - x - 1 (field discriminant -283), check it is octahedral,
compute its trace-form invariants two ways, decide principality, exhibit
a principal model with an exact certificate, classify the solvable
embedding problems, list the endomorphism algebras of the attached
abelian varieties, and finally produce the curve parameter t.
"""

from octaq import (classify, curve_from_t, depress, endo_algebras,
                   galois_is_S4, principalize, qpoly, same_field,
                   t_from_principal, trace_form, witt_formula)

f = qpoly([-1, -1, 0, 0, 1])
print(f"input: x^4 - x - 1")

reduced = depress(f)
print(f"reduced model: a={reduced.a}, b={reduced.b}, c={reduced.c}")
print(f"octahedral (S4): {galois_is_S4(reduced)}")

tf = trace_form(reduced)
print(f"discriminant class: {tf.disc_class}")
print(f"trace-form diagonal: {tf.diagonal}")
print(f"Witt invariant (diagonalization): {tf.witt}")
print(f"Witt invariant (closed formula):  {witt_formula(reduced)}")

report = classify(reduced)
print(f"principal: {report.principal}")
print(f"embedding problems: 2S4+ {report.solvable_2s4_plus}, "
      f"4S4+ {report.solvable_4s4_plus}, 4S4- {report.solvable_4s4_minus}, "
      f"8S4- with type {report.type_8s4_minus}")

principal, cert = principalize(reduced)
print(f"principal model: x^4 + {principal.b} x + {principal.c}")
print(f"certificate gamma = {cert.m} b^3 + {cert.n} b^2 + {cert.p} b + {cert.q}")
check = same_field(f, principal.poly())
print(f"independent field-equality certificate: {check is not None}")

endo = endo_algebras(report)
for case in endo.cases:
    print(f"  case ({case.label}): {case.algebra:24s} K_eps = {case.k_eps.text}")

t = t_from_principal(principal)
rec = curve_from_t(t)
print(f"curve parameter t = {t}, defined over Q(sqrt({t}))")
print(f"  j-invariant: {rec.j}")
print(f"  rational 3-torsion quartic g_t: {rec.g_t!r}")
