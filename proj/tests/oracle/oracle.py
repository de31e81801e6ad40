"""Independent sympy computations whose results are frozen in the C++ tests.

Run: python3 tests/oracle/oracle.py > tests/oracle/transcript.txt
"""
import itertools

from sympy import (Matrix, Poly, QQ, Rational, diff, expand, factor_list, gcd, groebner, sqf_part,
                   symbols)

x1, x2, x3, y = symbols("x1 x2 x3 y")
X = (x1, x2, x3)


def standard_monomial_count(G, gens):
    """Dimension of Q[gens]/I from the leading monomials of a grevlex basis."""
    if G.exprs == [1]:
        return 0
    leads = [Poly(g, *gens).monoms(order="grevlex")[0] for g in G.exprs]
    bound = []
    for i in range(len(gens)):
        pure = [m[i] for m in leads if all(m[j] == 0 for j in range(len(gens)) if j != i)]
        if not pure:
            return None
        bound.append(min(pure))
    count = 0
    for e in itertools.product(*[range(b) for b in bound]):
        if not any(all(e[k] >= m[k] for k in range(len(gens))) for m in leads):
            count += 1
    return count


def point_count(gens_list, gens):
    G = groebner(gens_list, *gens, order="grevlex")
    if G.exprs == [1]:
        return 0
    extra = []
    for v in gens:
        rest = [u for u in gens if u != v]
        L = groebner(gens_list, *rest, v, order="grevlex").fglm("lex")
        uni = [p for p in L.exprs if Poly(p, *gens).free_symbols <= {v}]
        extra.append(sqf_part(uni[-1]))
    return standard_monomial_count(groebner(list(gens_list) + extra, *gens, order="grevlex"), gens)


STRATA = {3: ("x3", []), 2: ("x2", ["x3"]), 1: ("x1", ["x2", "x3"])}


def stratum_system(phi4, phi6, s):
    unit, zeros = STRATA[s]
    unit = symbols(unit)
    zeros = [symbols(z) for z in zeros]
    g = expand((y**3 + y * phi4 + phi6).subs(unit, 1))
    chart = [u for u in X if u != unit] + [y]
    eqs = [g] + [diff(g, u) for u in X if u != unit] + [diff(g, y)]
    hess = Matrix(3, 3, lambda i, j: diff(g, chart[i], chart[j])).det()
    sub = {z: 0 for z in zeros}
    free = [u for u in chart if u not in zeros]
    eqs = [expand(e.subs(sub)) for e in eqs]
    eqs = [e for e in eqs if e != 0]
    return eqs, expand(hess.subs(sub)), free


def analyze(name, phi4, phi6):
    total = 0
    points = 0
    nodes = True
    for s in (3, 2, 1):
        eqs, hess, free = stratum_system(phi4, phi6, s)
        G = groebner(eqs, *free, order="grevlex")
        n = standard_monomial_count(G, free)
        total += n
        points += point_count(eqs, free)
        H = groebner(eqs + [hess], *free, order="grevlex")
        stratum_nodes = H.exprs == [1]
        nodes = nodes and stratum_nodes
        print(f"{name} stratum {s}: length {n}, hessian unit {stratum_nodes}")
    print(f"{name}: total_length {total} point_count {points} all_nodes {'certified' if nodes else 'refuted'}")


klein4 = x1**3 * x3 + x2**3 * x1 + x3**3 * x2
klein6 = 5 * x1**2 * x2**2 * x3**2 - x1**5 * x2 - x2**5 * x3 - x3**5 * x1

print("# Klein invariants")
h = Matrix(3, 3, lambda i, j: diff(klein4, X[i], X[j])).det()
q = expand(h / 54)
print("det Hess(phi4)/54 == phi6:", expand(q - klein6) == 0, " == -phi6:", expand(q + klein6) == 0)
disc = Poly(expand(4 * (3 * klein4) ** 3 + 27 * klein6**2), *X)
print("discriminant of (3*phi4, phi6): terms", len(disc.terms()), "degree", disc.total_degree())
print("gcd(phi4, phi6):", gcd(klein4, klein6))

print("# Singular schemes")
analyze("klein", 3 * klein4, klein6)
analyze("smooth", 0, x1**6 + x2**5 * x3 + x3**6)
analyze("e8_cone", 0, x3 * (x1**5 + x2**5))


def psi(l):
    return x2**2 - 2 * x1 * x3 + l * x3**2


analyze("ga_family eps=0 lambda=(0,1,2)", 0, expand(psi(0) * psi(1) * psi(2)))

R = Rational
tn4 = (3*x1**4 + x1**3*x2 + 4*x1**2*x2**2 - R(1, 2)*x1*x2**3 + 3*x2**4 + R(1, 3)*x1**3*x3
       - R(4, 3)*x1**2*x2*x3 - R(3, 2)*x1*x2**2*x3 - 3*x2**3*x3 + 5*x1**2*x3**2 + 5*x1*x2*x3**2
       - x2**2*x3**2 - R(5, 2)*x1*x3**3 + R(1, 2)*x2*x3**3)
tn6 = (-R(25, 9)*x1**6 + R(5, 3)*x1**5*x2 + R(97, 12)*x1**4*x2**2 - R(65, 18)*x1**3*x2**3
       - R(71, 12)*x1**2*x2**4 + R(5, 3)*x1*x2**5 - R(1, 9)*x2**6 - R(35, 3)*x1**5*x3
       + R(101, 6)*x1**4*x2*x3 + R(161, 6)*x1**3*x2**2*x3 - R(79, 3)*x1**2*x2**3*x3
       - R(52, 3)*x1*x2**4*x3 + R(8, 3)*x2**5*x3 - R(67, 12)*x1**4*x3**2 + R(88, 3)*x1**3*x2*x3**2
       + x1**2*x2**2*x3**2 - R(107, 3)*x1*x2**3*x3**2 - R(46, 3)*x2**4*x3**2 + 14*x1**3*x3**3
       - 9*x1**2*x2*x3**3 - 24*x1*x2**2*x3**3 - 8*x2**3*x3**3 - 4*x1**2*x3**4 - 4*x1*x2*x3**4
       - x2**2*x3**4)
print("twelve_node seed 1: phi6 == -phi3^2 for a cubic phi3:",
      [m for _, m in factor_list(tn6)[1]] == [2])
analyze("twelve_node seed 1", tn4, tn6)

print("# Bezout pairs")
x, yy = symbols("x y")
pairs = {
    "(2,3) seed 23": (
        -R(1, 2)*x**2 - 3*x*yy - 3*yy**2 + R(4, 3)*x - R(5, 2)*yy + 3,
        R(7, 3)*x**3 + R(3, 2)*x**2*yy - x*yy**2 - yy**3 - R(1, 3)*x**2 + 6*x*yy - R(1, 2)*yy**2
        + 3*x + yy - 2),
    "(3,4) seed 34": (
        -6*x**3 - 3*x**2*yy + R(4, 3)*x*yy**2 + 4*yy**3 + x**2 + R(3, 2)*x*yy + R(3, 2)*yy**2 + 3*x
        - 2*yy + R(4, 3),
        -2*x**4 - 6*x**3*yy + 2*x**2*yy**2 - 2*x*yy**3 + 4*yy**4 - R(5, 3)*x**3 + R(5, 2)*x**2*yy
        + x*yy**2 + R(7, 3)*yy**3 - 3*x**2 - R(2, 3)*x*yy - R(3, 2)*yy**2 - 4*x - R(5, 3)*yy - R(1, 2)),
}
for label, (f, g) in pairs.items():
    G = groebner([f, g], x, yy, order="grevlex")
    print(f"bezout {label}: quotient dimension {standard_monomial_count(G, (x, yy))}"
          f" distinct points {point_count([f, g], (x, yy))}")

print("# Weighted monomial supports (k1+k2+k3 = deg, m*k2 + n*k3 = w)")
for deg, m, n, w in [(6, 1, 2, 6), (4, 1, 2, 4), (6, 1, 5, 0), (6, 0, 1, 1), (6, 1, 3, 5), (4, 1, 10, 10)]:
    sols = sorted([(a, b, deg - a - b) for a in range(deg + 1) for b in range(deg + 1 - a)
                   if m * b + n * (deg - a - b) == w], reverse=True)
    print(f"support deg={deg} m={m} n={n} w={w}: {sols}")
