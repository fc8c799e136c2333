#!/usr/bin/env python3
"""Generate closed-form manufactured fields for src/cases_generated.cpp.

Every case is written in terms of a vector potential A (B = curl A), a
velocity u and a total pressure P on the unit cube. The generator emits the
raw pieces; forcing terms that depend on physical parameters are combined at
run time in verification.cpp.

Usage: python3 tools/gen_cases.py > src/cases_generated.cpp
"""

import sympy as sp
from sympy.printing.c import C99CodePrinter

x, y, z, t = sp.symbols("x y z t", real=True)
X = (x, y, z)
pi = sp.pi


def curl(v):
    return sp.Matrix([
        sp.diff(v[2], y) - sp.diff(v[1], z),
        sp.diff(v[0], z) - sp.diff(v[2], x),
        sp.diff(v[1], x) - sp.diff(v[0], y),
    ])


def grad(s):
    return sp.Matrix([sp.diff(s, c) for c in X])


def cross(a, b):
    return sp.Matrix([
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ])


def vec(*c):
    return sp.Matrix([sp.Rational(c[0]), sp.Rational(c[1]), sp.Rational(c[2])])


g = sp.sin(pi * x) * sp.sin(pi * y) * sp.sin(pi * z)


def pieces(u, A, P):
    B = curl(A)
    return {
        "u": u,
        "curl_u": curl(u),
        "curlcurl_u": curl(curl(u)),
        "dt_u": sp.diff(u, t),
        "A": A,
        "dt_A": sp.diff(A, t),
        "B": B,
        "curl_B": curl(B),
        "curlcurl_B": curl(curl(B)),
        "dt_B": sp.diff(B, t),
        "curl_uxB": curl(cross(u, B)),
        "grad_P": grad(P),
        "P": P,
    }


def decay_trig():
    sx, sy, sz = (sp.sin(pi * c) for c in X)
    u = sp.exp(-t) * sp.Matrix([sy * sz, sz * sx, sx * sy])
    A = sp.exp(-t / 2) * g**3 * vec("1/2", "1", "-1/2")
    P = sp.exp(-t) * g
    return pieces(u, A, P)


def static_b():
    psi = g**3
    u = sp.zeros(3, 1)
    A = psi * vec("1/2", "1", "-1/2")
    P = sp.Integer(0)
    return pieces(u, A, P)


def helical():
    psi = g**2
    a = vec("1", "1", "1")
    A = psi * a + curl(psi * a) / pi
    u = curl(psi * vec("1", "-1", "2"))
    P = sp.Integer(0)
    return pieces(u, A, P)


class Printer(C99CodePrinter):
    """Writes small integer powers as products instead of pow calls."""

    def _print_Pow(self, expr):
        b, e = expr.as_base_exp()
        if e.is_Integer and 2 <= int(e) <= 8:
            base = self.parenthesize(b, 100)
            return "*".join([base] * int(e))
        if e.is_Integer and -8 <= int(e) <= -1:
            base = self.parenthesize(b, 100)
            return "1.0/(" + "*".join([base] * (-int(e))) + ")"
        return super()._print_Pow(expr)


def ccode(e):
    return Printer().doprint(e)


ORDER = ["u", "curl_u", "curlcurl_u", "dt_u", "A", "dt_A", "B", "curl_B",
         "curlcurl_B", "dt_B", "curl_uxB", "grad_P", "P"]


def emit(name, fields):
    exprs = []
    for key in ORDER:
        val = fields[key]
        if key == "P":
            exprs.append(sp.simplify(val))
        else:
            exprs.extend(list(val))
    repl, reduced = sp.cse(exprs, symbols=sp.numbered_symbols("c"), optimizations="basic")
    lines = [f"CaseSample {name}(const Vec3& p, double t) {{",
             "  const double x = p.x();",
             "  const double y = p.y();",
             "  const double z = p.z();",
             "  (void)x; (void)y; (void)z; (void)t;"]
    for sym, e in repl:
        lines.append(f"  const double {sym} = {ccode(e)};")
    lines.append("  CaseSample s;")
    idx = 0
    for key in ORDER:
        if key == "P":
            lines.append(f"  s.P = {ccode(reduced[idx])};")
            idx += 1
        else:
            comps = [ccode(reduced[idx + i]) for i in range(3)]
            lines.append(f"  s.{key} = Vec3({comps[0]}, {comps[1]}, {comps[2]});")
            idx += 3
    lines.append("  return s;")
    lines.append("}")
    return "\n".join(lines)


def main():
    out = [
        "// Generated by tools/gen_cases.py. Do not edit by hand.",
        "",
        '#include "case_fields.hpp"',
        "",
        "#include <cmath>",
        "",
        "namespace smhd::cases {",
        "",
        "using std::sin;",
        "using std::cos;",
        "using std::exp;",
        "using std::pow;",
        "",
        "#ifndef M_PI",
        "#define M_PI 3.14159265358979323846",
        "#endif",
        "",
    ]
    for name, fn in [("decay_trig", decay_trig), ("static_b", static_b), ("helical", helical)]:
        out.append(emit(name, fn()))
        out.append("")
    out.append("}  // namespace smhd::cases")
    print("\n".join(out))


if __name__ == "__main__":
    main()
