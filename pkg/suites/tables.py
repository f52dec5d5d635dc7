"""
Printed tables the suites compare against, one `lhs | rhs` line per relation.

Names resolve through the side's macros: A, B, C, D are the inverse-matrix
entries, th1/u1/u2/th2 and w1/v1/v2/w2 the Cartan-Maurer one-forms, and
T1, T2, Np, Nm, X, Y the vector fields.
"""

from __future__ import annotations

INVERSE_ENTRIES = """
a*A | p*q*A*a + 1 - p*q
d*A | A*d
a*D | D*a
d*D | p*q*D*d + 1 - p*q
a*B | q*B*a
d*B | q*B*d
a*C | p*C*a
d*C | p*C*d
b*A | q*A*b
g*A | p*A*g
b*D | q*D*b
g*D | p*D*g
b*B | B*b
g*B | -p*q*B*g
b*C | -p*q*C*b
g*C | C*g
"""

FUNCTION_ONEFORM_LEFT = """
th1*a | p*q*a*th1 + (p*q - 1)*b*u2
th1*b | -b*th1 + (1 - p*q)*a*u1 - p^-1*q^-1*(p*q - 1)^2*b*th2
th1*g | -p*q*g*th1 + (1 - p*q)*d*u2
th1*d | d*th1 + (p*q - 1)*g*u1 + p^-1*q^-1*(p*q - 1)^2*d*th2
u1*a | p*a*u1 + (p - q^-1)*b*th2
u1*b | q^-1*b*u1
u1*d | q^-1*d*u1
u1*g | p*g*u1 + (p - q^-1)*d*th2
u2*a | q*a*u2
u2*g | q*g*u2
u2*b | p^-1*b*u2 + (p^-1 - q)*a*th2
u2*d | p^-1*d*u2 + (p^-1 - q)*g*th2
th2*a | a*th2
th2*b | -p^-1*q^-1*b*th2
th2*g | -g*th2
th2*d | p^-1*q^-1*d*th2
"""

INVERSE_DIFFERENTIAL_LEFT = """
dLa*A | p^-1*q^-1*A*dLa + (p^-1*q^-1 - 1)*(B*dLg - C*dLb + (p*q - 1)*D*dLd)
dLa*B | -p^-1*B*dLa + (q - p^-1)*D*dLb
dLa*C | -q^-1*C*dLa + (p - q^-1)*D*dLg
dLa*D | D*dLa
dLb*A | p^-1*A*dLb + (p^-1 - q)*B*dLd
dLb*B | q*p^-1*B*dLb
dLb*D | q*D*dLb
dLb*C | C*dLb + (1 - p*q)*D*dLd
dLg*A | q^-1*A*dLg + (q^-1 - p)*C*dLd
dLg*B | B*dLg + (1 - p*q)*D*dLd
dLg*C | p*q^-1*C*dLg
dLg*D | p*D*dLg
dLd*A | A*dLd
dLd*B | -q*B*dLd
dLd*C | -p*C*dLd
dLd*D | p*q*D*dLd
"""

ONEFORM_DIFFERENTIAL_LEFT = """
th1*dLa | -dLa*th1 + (1 - p^-1*q^-1)*dLb*u2
th1*dLd | -dLd*th1
th1*dLb | dLb*th1
th1*dLg | dLg*th1 + (p^-1*q^-1 - 1)*dLd*u2
u1*dLa | q^-1*dLa*u1 + (p - q^-1)*dLb*(th1 - th2)
u1*dLb | p*dLb*u1
u1*dLd | p*dLd*u1
u1*dLg | p*dLg*u1 + (p - q^-1)*dLd*(th1 - th2)
u2*dLa | p^-1*dLa*u2
u2*dLb | p^-1*dLb*u2
u2*dLg | p^-1*dLg*u2
u2*dLd | p^-1*dLd*u2
th2*dLa | -dLa*th2 + (1 - p^-1*q^-1)*dLb*u2
th2*dLg | dLg*th2 + (p^-1*q^-1 - 1)*dLd*u2
th2*dLb | dLb*th2
th2*dLd | -dLd*th2
"""

ONEFORM_ONEFORM_LEFT = """
u1*th1 | p*q*th1*u1 + (1 - p*q)*th2*u1
u1*th2 | th2*u1
th1*u2 | p*q*u2*th1 + (1 - p*q)*u2*th2
u2*th2 | th2*u2
th1*th1 | (p*q - 1)*u2*u1
th2*th2 | 0
u1*u2 | p*q*u2*u1
th1*th2 + th2*th1 | (p*q - 1)*u2*u1
"""

FUNCTION_ONEFORM_RIGHT = """
a*w1 | p*q*w1*a
a*v1 | q*v1*a
a*v2 | p*v2*a + (p - q^-1)*w1*g
a*w2 | w2*a + p*q^-1*(q - p^-1)^2*w1*a + (p^-1*q^-1 - 1)*v1*g
b*w1 | -p*q*w1*b
b*v1 | q*v1*b
b*v2 | p*v2*b + (p - q^-1)*w1*d
b*w2 | -w2*b - p*q^-1*(q - p^-1)^2*w1*b + (1 - p^-1*q^-1)*v1*d
g*w1 | -w1*g
g*v1 | p^-1*v1*g + (p^-1 - q)*w1*a
g*v2 | q^-1*v2*g
g*w2 | -p^-1*q^-1*w2*g + (1 - p^-1*q^-1)*v2*a
d*w1 | w1*d
d*v2 | q^-1*v2*d
d*v1 | p^-1*v1*d + (p^-1 - q)*w1*b
d*w2 | p^-1*q^-1*w2*d + (p^-1*q^-1 - 1)*v2*b
"""

INVERSE_DIFFERENTIAL_RIGHT = """
A*dRa | p^-1*q^-1*dRa*A
A*dRd | dRd*A
A*dRb | q^-1*dRb*A
A*dRg | p^-1*dRg*A
D*dRa | dRa*D
D*dRd | p*q*dRd*D + (1 - p*q)*(dRb*C - dRg*B + (1 - p^-1*q^-1)*dRa*A)
D*dRb | p*dRb*D + (p - q^-1)*dRa*B
D*dRg | q*dRg*D + (p - p^-1)*dRa*C
B*dRa | -q^-1*dRa*B
B*dRg | dRg*B + (p^-1*q^-1 - 1)*dRa*A
B*dRb | p*q^-1*dRb*B
B*dRd | -p*dRd*B + (q^-1 - p)*dRb*A
C*dRa | -p^-1*dRa*C
C*dRb | dRb*C + (1 - p^-1*q^-1)*dRa*A
C*dRg | q*p^-1*dRg*C
C*dRd | -q*dRd*C + (p^-1 - q)*dRg*A
"""

ONEFORM_DIFFERENTIAL_RIGHT = """
w1*dRa | -dRa*w1
w1*dRg | dRg*w1
w1*dRb | dRb*w1 + (1 - p^-1*q^-1)*dRa*v1
w1*dRd | -dRd*w1 + (p^-1*q^-1 - 1)*dRg*v1
v1*dRa | q^-1*dRa*v1
v1*dRb | q^-1*dRb*v1
v1*dRg | q^-1*dRg*v1
v1*dRd | q^-1*dRd*v1
v2*dRa | q*dRa*v2
v2*dRg | q*dRg*v2
v2*dRb | q*dRb*v2 + (q - p^-1)*dRa*(w2 - w1)
v2*dRd | q*dRd*v2 + (q - p^-1)*dRg*w1
w2*dRa | -dRa*w2
w2*dRb | dRb*w2 + (1 - p^-1*q^-1)*dRa*v1
w2*dRg | dRg*w2 + p^-1*q^-1*(p*q - 1)^2*dRg*w1
w2*dRd | -p*q*dRd*w2 + (p*q - 1)*dRd*w1 + p^-1*q^-1*(p*q - 1)^2*dRg*v1
"""

ONEFORM_ONEFORM_RIGHT = """
w1*v1 | v1*w1
v1*w2 | p*q*w2*v1 + (1 - p*q)*v1*w1
w1*v2 | v2*w1
w2*v2 | p*q*v2*w2 + (1 - p*q)*w1*v2
w1*w1 | 0
w2*w2 | (1 - p*q)*v2*v1
v1*v2 | p*q*v2*v1
w1*w2 + w2*w1 | (1 - p*q)*v2*v1
"""

# Cartan-Maurer two-forms, keyed by side then one-form.
TWO_FORMS = {
    "left": {
        "th1": "th1*th1 - u1*u2",
        "u1": "th1*u1 - u1*th2",
        "th2": "th2*th2 - u2*u1",
        "u2": "th2*u2 - u2*th1",
    },
    "right": {
        "w1": "w1*w1 - v1*v2",
        "v1": "w1*v1 - v1*w2",
        "w2": "w2*w2 - v2*v1",
        "v2": "w2*v2 - v2*w1",
    },
}

CARTAN_MAURER = {
    "left": {
        "th1": "-u2*u1",
        "u1": "-(th1 - th2)*u1",
        "u2": "p^-1*q^-1*(th1 - th2)*u2",
        "th2": "-u2*u1",
    },
    "right": {
        "w1": "-v1*v2",
        "v1": "p*q*(w1 - w2)*v1",
        "v2": "-(w1 - w2)*v2",
        "w2": "-v1*v2",
    },
}

LIE_LEFT = """
T1*Np - Np*T1 | -Np + (1 - p*q)*T1*Np
T2*Np - Np*T2 | Np - (1 - p*q)*T1*Np
T1*Nm - Nm*T1 | Nm - (1 - p*q)*Nm*T1
T2*Nm - Nm*T2 | -Nm + (1 - p*q)*Nm*T1
Np*Nm + p*q*Nm*Np | T1 + T2 + (1 - p*q)*T1*(T1 - T2)
T1*T2 - T2*T1 | 0
Np*Np | 0
Nm*Nm | 0
"""

LIE_XY_LEFT = """
X*Np - Np*X | 0
X*Nm - Nm*X | 0
X*Y - Y*X | 0
Y*Np - Np*Y | -2*Np + (1 - p*q)*(X + Y)*Np
Y*Nm - Nm*Y | 2*Nm - (1 - p*q)*Nm*(X + Y)
Np*Nm + p*q*Nm*Np | X + 1/2*(1 - p*q)*(X + Y)*Y
"""

LIE_RIGHT = """
T1*Np - Np*T1 | -p*q*Np + (p*q - 1)*T2*Np
T2*Np - Np*T2 | p*q*Np - (p*q - 1)*T2*Np
T1*Nm - Nm*T1 | p*q*Nm - (p*q - 1)*Nm*T2
T2*Nm - Nm*T2 | -p*q*Nm + (p*q - 1)*Nm*T2
T1*T2 - T2*T1 | 0
Np*Np | 0
Nm*Nm | 0
Nm*Np + p^-1*q^-1*Np*Nm | T1 + T2 + (p^-1*q^-1 - 1)*(T2*T2 + T1*T2)
"""

LIE_XY_RIGHT = """
X*Np - Np*X | 0
X*Nm - Nm*X | 0
X*Y - Y*X | 0
Y*Np - Np*Y | -2*p*q*Np + (p*q - 1)*(X - Y)*Np
Y*Nm - Nm*Y | 2*p*q*Nm - (p*q - 1)*Nm*(X - Y)
Np*Nm + p*q*Nm*Np | p*q*X + 1/2*(1 - p*q)*(X*X - X*Y)
"""

MODULE_LEFT = """
a*T1 | a + p*q*T1*a
a*Np | p*Np*a
a*T2 | T2*a + (p - q^-1)*Np*b
a*Nm | b + q*Nm*a + (p*q - 1)*T1*b
b*T1 | T1*b
b*Nm | -p^-1*Nm*b
b*T2 | b + p^-1*q^-1*T2*b + (q - p^-1)*(Nm*a + (p - q^-1)*T1*b)
b*Np | a - q^-1*Np*b + (p*q - 1)*T1*a
g*T1 | g + p*q*T1*g
g*Np | -p*Np*g
g*T2 | T2*g + (q^-1 - p)*Np*d
g*Nm | d - q*Nm*g + (p*q - 1)*T1*d
d*T1 | T1*d
d*Nm | p^-1*Nm*d
d*T2 | d + p^-1*q^-1*T2*d + (q - p^-1)*((p - q^-1)*T1*d - Nm*g)
d*Np | g + q^-1*Np*d + (p*q - 1)*T1*g
Np*Np*a | p^-2*a*Np*Np
Nm*Nm*a | q^-2*a*Nm*Nm
"""

MODULE_RIGHT = """
T1*a | a + p*q*a*T1 + (p - q^-1)*((q - p^-1)*a*T2 + g*Nm)
T1*b | b + p*q*b*T1 + (p - q^-1)*((q - p^-1)*b*T2 - d*Nm)
T1*g | g*T1 + (p^-1 - q)*a*Np
T1*d | d*T1 + (p^-1 - q)*b*Np
T2*a | a*T2
T2*g | g + p^-1*q^-1*g*T2
T2*b | b*T2
T2*d | d + p^-1*q^-1*d*T2
Np*a | g + q*a*Np + (p^-1*q^-1 - 1)*g*T2
Np*b | d - q*b*Np + (p^-1*q^-1 - 1)*d*T2
Np*g | -p^-1*g*Np
Np*d | p^-1*d*Np
Nm*a | p*a*Nm
Nm*b | -p*b*Nm
Nm*g | a - q^-1*g*Nm + (p^-1*q^-1 - 1)*a*T2
Nm*d | b + q^-1*d*Nm + (p^-1*q^-1 - 1)*b*T2
Nm*Nm*a | p^2*a*Nm*Nm
Np*Np*a | q^2*a*Np*Np
"""

ANTIPODE_FORMS = {
    "a": "(-A*dLa + B*dLg)*A - (A*dLb - B*dLd)*C",
    "b": "(-A*dLa + B*dLg)*A - (A*dLb - B*dLd)*D",
    "g": "(C*dLa - D*dLg)*A + (C*dLb - D*dLd)*C",
    "d": "(C*dLa - D*dLg)*B + (C*dLb - D*dLd)*D",
}

# δ of the antipode images under the left Leibniz rule, solved from δ(T⁻¹T) = 0.
ANTIPODE_FORMS_LEIBNIZ = {
    "a": "-(A*dLa + B*dLg)*A + (A*dLb + B*dLd)*C",
    "b": "(A*dLa + B*dLg)*B - (A*dLb + B*dLd)*D",
    "g": "-(C*dLa + D*dLg)*A + (C*dLb + D*dLd)*C",
    "d": "(C*dLa + D*dLg)*B - (C*dLb + D*dLd)*D",
}


def relations(text: str) -> list[tuple[str, str, str]]:
    """Split a table into (id, lhs, rhs); the id is the lhs without spaces."""
    out = []
    for line in text.strip().splitlines():
        lhs, rhs = (part.strip() for part in line.split("|"))
        out.append((lhs.replace(" ", ""), lhs, rhs))
    return out
