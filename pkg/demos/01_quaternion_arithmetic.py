"""A tour of the quaternion layer.

Walks through the multiplication table, the norm laws, and the reduced
identification of 3-space with the k-free quaternions that the rest of
the library leans on.
"""

from quatflow import I, J, K, Quaternion, ReducedPoint


def main():
    print("== basis products ==")
    for label, value in (("i*j", I * J), ("j*k", J * K), ("k*i", K * I),
                         ("j*i", J * I), ("i*i", I * I)):
        print(f"  {label} = {value}")

    p = Quaternion(1.0, 2.0, -0.5, 0.25)
    q = Quaternion(-0.3, 0.7, 1.1, -2.0)
    print("\n== norm is multiplicative ==")
    print(f"  |p q|     = {(p * q).norm():.15f}")
    print(f"  |p| |q|   = {p.norm() * q.norm():.15f}")

    print("\n== conjugation reverses products ==")
    print(f"  conj(p q)         = {(p * q).conjugate()}")
    print(f"  conj(q) conj(p)   = {q.conjugate() * p.conjugate()}")

    print("\n== points of 3-space are the k-free quaternions ==")
    x = ReducedPoint(0.4, -1.2, 0.9)
    xq = x.to_quaternion()
    print(f"  point       {x}")
    print(f"  quaternion  {xq}")
    # The frame {1, i, j} satisfies q + iqi + jqj = -conj(q) exactly on
    # that subspace; a k component breaks it.
    sandwich = xq + I * xq * I + J * xq * J
    print(f"  q + iqi + jqj = {sandwich}")
    print(f"  -conj(q)      = {-xq.conjugate()}")
    full = Quaternion(1.0, 1.0, 1.0, 1.0)
    gap = (full + I * full * I + J * full * J) - (-full.conjugate())
    print(f"  residual with a k slot: {gap}")


if __name__ == "__main__":
    main()
