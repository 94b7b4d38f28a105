"""Text, JSON and CAS-script renderings of generator sets."""

import json
from fractions import Fraction

from .algebra import QQ, GF
from .errors import ParseError
from .forms import MonomialForm
from .lattice import LatticePoint


def _coeff_str(c):
    return str(c)


def _mono_text(mono):
    out = []
    i = 0
    while i < len(mono):
        j = i
        while j < len(mono) and mono[j] == mono[i]:
            j += 1
        var = f"X[{mono[i][0]},{mono[i][1]}]"
        out.append(var if j - i == 1 else f"{var}^{j - i}")
        i = j
    return "*".join(out)


def form_to_text(form):
    """Human-readable form, e.g. ``X[0,0]*X[1,1] - X[0,1]*X[1,0]``."""
    if not form.terms:
        return "0"
    parts = []
    for mono, c in sorted(form.terms.items(), key=lambda t: _term_order(t)):
        neg = isinstance(c, Fraction) and c < 0
        mag = -c if neg else c
        body = _mono_text(mono) if mag == 1 else f"{_coeff_str(mag)}*{_mono_text(mono)}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def _term_order(item):
    # positive coefficients first so binomials print as "plus - minus"
    mono, c = item
    neg = isinstance(c, Fraction) and c < 0
    return (neg, mono)


def _json_coeff(c):
    if hasattr(c, "value"):
        return c.value
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def form_to_json(form):
    return {
        "degree": form.degree,
        "terms": [
            {"coeff": _json_coeff(c), "points": [list(p) for p in mono]}
            for mono, c in sorted(form.terms.items())
        ],
    }


def form_from_json(obj, ambient, field=QQ):
    try:
        terms = {}
        for t in obj["terms"]:
            mono = tuple(sorted(LatticePoint(int(p[0]), int(p[1])) for p in t["points"]))
            terms[mono] = field(Fraction(str(t["coeff"])))
        return MonomialForm(terms, ambient, field, int(obj["degree"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed generator record: {exc}") from None


def variable_name(p):
    """CAS-safe variable name: X_i_j with m prefixing negative indices."""
    def enc(v):
        return f"m{-v}" if v < 0 else str(v)

    return f"X_{enc(p[0])}_{enc(p[1])}"


def _cas_term(mono, c):
    out = []
    i = 0
    while i < len(mono):
        j = i
        while j < len(mono) and mono[j] == mono[i]:
            j += 1
        v = variable_name(mono[i])
        out.append(v if j - i == 1 else f"{v}^{j - i}")
        i = j
    return f"({_coeff_str(c)})*" + "*".join(out)


def form_to_cas(form):
    if not form.terms:
        return "0"
    return " + ".join(_cas_term(m, c) for m, c in sorted(form.terms.items()))


def cas_script(forms, points, field=QQ, system="magma"):
    """Script defining the polynomial ring and the ideal in an external CAS."""
    names = [variable_name(p) for p in points]
    gens = [form_to_cas(F) for F in forms]
    if system == "magma":
        base = "Rationals()" if field is QQ else f"GF({field.p})"
        lines = [
            f"R<{', '.join(names)}> := PolynomialRing({base}, {len(names)});",
            "I := ideal<R | [",
            ",\n".join("  " + g for g in gens),
            "]>;",
        ]
    elif system in ("m2", "macaulay2"):
        base = "QQ" if field is QQ else f"ZZ/{field.p}"
        lines = [
            f"R = {base}[{', '.join(names)}];",
            "I = ideal(",
            ",\n".join("  " + g for g in gens),
            ");",
        ]
    else:
        raise ValueError(f"unknown CAS {system!r}")
    return "\n".join(lines) + "\n"


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=False)
