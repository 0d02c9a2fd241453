"""What the normal form can and cannot see.

Every term built from generators, composition, tensoring, copying and
deleting has a canonical form: one tree per output wire. Two terms are
equal in the free theory exactly when those trees match. This script
normalizes a few terms, then shows where syntactic equality and pointwise
equality over a small carrier part ways.
"""

from cartoptics import (
    FiniteCarrier,
    Gen,
    Generator,
    Id,
    Interp,
    Obj,
    Signature,
    Sort,
    eq_extensional,
    normal_eq,
    normalize,
    read_back,
)

a = Sort("A", FiniteCarrier(2))
sig = Signature((a,), (Generator("u", Obj((a,)), Obj((a,)), table=((1,), (0,))),))
A = Obj((a,))
u = Gen(sig.generator("u"))

print("Signature: one sort A with two elements, one map u(a) = 1 - a.")
print()

powers = [Id(A)]
for _ in range(3):
    powers.append(powers[-1] >> u)

for k, t in enumerate(powers):
    print(f"u^{k} normal form: {read_back(normalize(t))}")
print()

print("All four powers have distinct normal forms, so none are equal in the")
print("free theory:")
for i in range(4):
    for j in range(i + 1, 4):
        if normal_eq(powers[i], powers[j]):
            print(f"  u^{i} == u^{j}  (unexpected!)")
print("  (no pair matches)")
print()

interp = Interp.from_signature(sig)
print("Pointwise over the 2-element carrier, though, u^3 collapses onto u:")
for i in range(4):
    for j in range(i + 1, 4):
        if eq_extensional(powers[i], powers[j], interp):
            print(f"  u^{i} and u^{j} agree on every input")
print()

b = Sort("B", FiniteCarrier(3))
sig3 = Signature(
    (b,), (Generator("v", Obj((b,)), Obj((b,)), table=((1,), (2,), (0,))),)
)
B = Obj((b,))
v = Gen(sig3.generator("v"))
v3 = v >> v >> v
print("The collapse is an artifact of the tiny carrier. A 3-cycle v on a")
print("3-element carrier separates the same pair of normal forms:")
print(f"  v and v^3 agree pointwise: {eq_extensional(v, v3, Interp.from_signature(sig3))}")
print()
print("So the normal form decides equality in the free theory, while any")
print("single finite model can identify strictly more terms.")
