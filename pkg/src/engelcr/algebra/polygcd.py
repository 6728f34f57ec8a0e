"""Raw polynomial-dictionary arithmetic over Gaussian integers, with exact GCD.

Polynomials are dicts mapping packed monomial keys to (re, im) integer pairs.
GCDs use content/primitive-part recursion with a subresultant polynomial
remainder sequence in a chosen main variable; a modular univariate probe
certifies the (very common) coprime case first, skipping the remainder
sequence entirely.
"""
from __future__ import annotations

import heapq
import random

from .monomials import (
    NVARS,
    grevlex_key,
    monomial_divides,
    monomial_gcd,
    monomial_min,
    var_exponent,
)

Coeff = tuple[int, int]
PolyDict = dict[int, Coeff]

_UNIT: Coeff = (1, 0)


# -- Gaussian integer helpers -----------------------------------------------


def gint_gcd(a: Coeff, b: Coeff) -> Coeff:
    """Euclidean GCD in Z[i], returned as the canonical associate."""
    ar, ai = a
    br, bi = b
    while br or bi:
        n = br * br + bi * bi
        tr = ar * br + ai * bi
        ti = ai * br - ar * bi
        qr = (2 * tr + n) // (2 * n)
        qi = (2 * ti + n) // (2 * n)
        ar, ai, br, bi = br, bi, ar - (qr * br - qi * bi), ai - (qr * bi + qi * br)
    return gint_canonical((ar, ai))


def gint_canonical(c: Coeff) -> Coeff:
    """The associate of c in the quadrant re > 0, im >= 0 (zero stays zero)."""
    r, i = c
    if not r and not i:
        return (0, 0)
    while not (r > 0 and i >= 0):
        r, i = i, -r  # multiply by -i
    return (r, i)


def gint_mul(a: Coeff, b: Coeff) -> Coeff:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def gint_exact_div(a: Coeff, b: Coeff) -> Coeff | None:
    n = b[0] * b[0] + b[1] * b[1]
    if not n:
        raise ZeroDivisionError("division by zero Gaussian integer")
    nr = a[0] * b[0] + a[1] * b[1]
    ni = a[1] * b[0] - a[0] * b[1]
    if nr % n or ni % n:
        return None
    return (nr // n, ni // n)


def gaussian_content(f: PolyDict) -> Coeff:
    """GCD of all coefficients, canonical associate; (0, 0) for the zero dict."""
    acc = (0, 0)
    for c in f.values():
        acc = gint_gcd(acc, c)
        if acc == _UNIT:
            break
    return acc


# -- dictionary arithmetic ---------------------------------------------------


def dict_add(f: PolyDict, g: PolyDict) -> PolyDict:
    out = dict(f)
    for k, (gr, gi) in g.items():
        c = out.get(k)
        if c is None:
            out[k] = (gr, gi)
        else:
            r, i = c[0] + gr, c[1] + gi
            if r or i:
                out[k] = (r, i)
            else:
                del out[k]
    return out


def dict_sub(f: PolyDict, g: PolyDict) -> PolyDict:
    out = dict(f)
    for k, (gr, gi) in g.items():
        c = out.get(k)
        if c is None:
            out[k] = (-gr, -gi)
        else:
            r, i = c[0] - gr, c[1] - gi
            if r or i:
                out[k] = (r, i)
            else:
                del out[k]
    return out


def dict_neg(f: PolyDict) -> PolyDict:
    return {k: (-r, -i) for k, (r, i) in f.items()}


def dict_mul(f: PolyDict, g: PolyDict) -> PolyDict:
    # Hot kernel.  The three unrolled branches skip multiplications by a
    # zero real or imaginary part -- most coefficients are purely real or
    # purely imaginary, and big-integer products cost far more than the
    # branch.  Zero accumulations are swept once at the end.
    if not f or not g:
        return {}
    if len(f) > len(g):
        f, g = g, f
    out: PolyDict = {}
    get = out.get
    gitems = list(g.items())
    for kf, (fr, fi) in f.items():
        if not fi:
            for kg, (gr, gi) in gitems:
                k = kf + kg
                c = get(k)
                if c is None:
                    out[k] = (fr * gr, fr * gi)
                else:
                    out[k] = (c[0] + fr * gr, c[1] + fr * gi)
        elif not fr:
            for kg, (gr, gi) in gitems:
                k = kf + kg
                c = get(k)
                if c is None:
                    out[k] = (-fi * gi, fi * gr)
                else:
                    out[k] = (c[0] - fi * gi, c[1] + fi * gr)
        else:
            for kg, (gr, gi) in gitems:
                k = kf + kg
                c = get(k)
                if c is None:
                    out[k] = (fr * gr - fi * gi, fr * gi + fi * gr)
                else:
                    out[k] = (c[0] + fr * gr - fi * gi, c[1] + fr * gi + fi * gr)
    return {k: c for k, c in out.items() if c[0] or c[1]}


def dict_scale(f: PolyDict, c: Coeff) -> PolyDict:
    cr, ci = c
    if not cr and not ci:
        return {}
    if (cr, ci) == _UNIT:
        return dict(f)
    return {k: (r * cr - i * ci, r * ci + i * cr) for k, (r, i) in f.items()}


def dict_shift(f: PolyDict, mono: int) -> PolyDict:
    if not mono:
        return dict(f)
    return {k + mono: c for k, c in f.items()}


def dict_unshift(f: PolyDict, mono: int) -> PolyDict:
    if not mono:
        return dict(f)
    return {k - mono: c for k, c in f.items()}


def dict_scale_div(f: PolyDict, c: Coeff) -> PolyDict:
    """Divide every coefficient exactly by the Gaussian integer c."""
    if c == _UNIT:
        return dict(f)
    out: PolyDict = {}
    for k, v in f.items():
        q = gint_exact_div(v, c)
        if q is None:
            raise ArithmeticError("inexact coefficient division")
        out[k] = q
    return out


def leading_key(f: PolyDict) -> int:
    return max(f, key=grevlex_key)


def dict_degree(f: PolyDict, var: int) -> int:
    return max((var_exponent(k, var) for k in f), default=-1)


def dict_degrees(f: PolyDict) -> tuple[int, int, int, int]:
    """Degree in each of the four variables, from a single pass over f."""
    d0 = d1 = d2 = d3 = -1
    for k in f:
        e = k & 0xFFFF
        if e > d0:
            d0 = e
        e = (k >> 16) & 0xFFFF
        if e > d1:
            d1 = e
        e = (k >> 32) & 0xFFFF
        if e > d2:
            d2 = e
        e = (k >> 48) & 0xFFFF
        if e > d3:
            d3 = e
    return (d0, d1, d2, d3)


def dict_is_unit_constant(f: PolyDict) -> bool:
    if len(f) != 1 or 0 not in f:
        return False
    r, i = f[0]
    return r * r + i * i == 1


def dict_exact_div(f: PolyDict, g: PolyDict) -> PolyDict | None:
    """Quotient f/g when division is exact, else None.

    The remainder's leading term comes from a lazy-deletion heap: the order
    is compatible with multiplication, so every key the subtraction inserts
    sits strictly below the key just popped and the heap never goes stale
    upward.  That keeps each step logarithmic instead of rescanning the
    whole remainder for its maximum."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if not f:
        return {}
    gl = leading_key(g)
    glc = g[gl]
    n = glc[0] * glc[0] + glc[1] * glc[1]
    rest = [(k, c) for k, c in g.items() if k != gl]
    r = dict(f)
    heap = [(-grevlex_key(k), k) for k in r]
    heapq.heapify(heap)
    q: PolyDict = {}
    while heap:
        rl = heapq.heappop(heap)[1]
        if rl not in r:
            continue
        if not monomial_divides(gl, rl):
            return None
        rc = r[rl]
        nr = rc[0] * glc[0] + rc[1] * glc[1]
        ni = rc[1] * glc[0] - rc[0] * glc[1]
        if nr % n or ni % n:
            return None
        c = (nr // n, ni // n)
        k = rl - gl
        q[k] = c
        del r[rl]
        cr, ci = c
        for gk, (gr, gi) in rest:
            kk = gk + k
            tr = cr * gr - ci * gi
            ti = cr * gi + ci * gr
            old = r.get(kk)
            if old is None:
                if tr or ti:
                    r[kk] = (-tr, -ti)
                    heapq.heappush(heap, (-grevlex_key(kk), kk))
            else:
                nr2, ni2 = old[0] - tr, old[1] - ti
                if nr2 or ni2:
                    r[kk] = (nr2, ni2)
                else:
                    del r[kk]
    return q


def dict_pow(f: PolyDict, e: int) -> PolyDict:
    out: PolyDict = {0: _UNIT}
    base = f
    while e:
        if e & 1:
            out = dict_mul(out, base)
        e >>= 1
        if e:
            base = dict_mul(base, base)
    return out


def _unit_normalize(f: PolyDict) -> PolyDict:
    """Multiply by a unit so the leading coefficient has re > 0, or re == 0 and im > 0."""
    if not f:
        return f
    r, i = f[leading_key(f)]
    if r > 0 or (r == 0 and i > 0):
        return f
    if r < 0 or (r == 0 and i < 0):
        candidate = dict_neg(f)
        r2, i2 = candidate[leading_key(candidate)]
        if r2 > 0 or (r2 == 0 and i2 > 0):
            return candidate
    # leading coefficient purely imaginary after sign flip: rotate by +/- i
    rot = dict_scale(f, (0, -1))
    r3, i3 = rot[leading_key(rot)]
    if r3 > 0 or (r3 == 0 and i3 > 0):
        return rot
    return dict_scale(f, (0, 1))


# -- modular coprimality probe -----------------------------------------------
#
# Evaluating every variable but one at random residues mod a prime p with
# p = 1 (mod 4), sending i to a square root of -1, is a ring homomorphism
# Z[i][x, y, u1, u2] -> F_p[v].  Writing f = G*H with G the true GCD, the
# image of G divides the image GCD, and its degree in v is preserved as long
# as the leading coefficient of f (or g) in v survives the evaluation.  So a
# degree-0 image GCD *proves* the true GCD is constant in v; a positive image
# degree proves nothing and falls through to the exact path.

_PROBE_PRIME = 2013265921  # 15 * 2**27 + 1


def _fourth_root() -> int:
    p = _PROBE_PRIME
    for base in range(2, 64):
        r = pow(base, (p - 1) // 4, p)
        if r * r % p == p - 1:
            return r
    raise AssertionError("probe prime admits no square root of -1")


_PROBE_I = _fourth_root()


_POW_CACHE: dict[int, list[int]] = {}


def _powers(base: int, upto: int) -> list[int]:
    """Table of base**0 .. base**upto mod the probe prime, cached per base.

    Probe points come from fixed seeds, so a handful of bases recur across
    thousands of images; extending a cached table is an append, not a pow."""
    tab = _POW_CACHE.get(base)
    if tab is None:
        if len(_POW_CACHE) > 64:
            _POW_CACHE.clear()
        tab = [1]
        _POW_CACHE[base] = tab
    p = _PROBE_PRIME
    while len(tab) <= upto:
        tab.append(tab[-1] * base % p)
    return tab


def _probe_image(f: PolyDict, var: int, vals) -> dict[int, int]:
    """Image of f in F_p[var] (sparse exponent -> residue)."""
    p = _PROBE_PRIME
    r = _PROBE_I
    degs = dict_degrees(f)
    ws = [w for w in range(NVARS) if w != var]
    s0, s1, s2 = (16 * w for w in ws)
    t0, t1, t2 = (_powers(vals[w] % p, max(degs[w], 0)) for w in ws)
    sv = 16 * var
    out: dict[int, int] = {}
    get = out.get
    for k, (re, im) in f.items():
        c = (re + im * r) % p
        if not c:
            continue
        c = (
            c
            * t0[(k >> s0) & 0xFFFF]
            % p
            * t1[(k >> s1) & 0xFFFF]
            % p
            * t2[(k >> s2) & 0xFFFF]
            % p
        )
        e = (k >> sv) & 0xFFFF
        out[e] = (get(e, 0) + c) % p
    return {e: c for e, c in out.items() if c}


def _image_gcd_degree(a: dict[int, int], b: dict[int, int]) -> int:
    p = _PROBE_PRIME

    def dense(d: dict[int, int]) -> list[int]:
        out = [0] * (max(d) + 1)
        for e, c in d.items():
            out[e] = c
        return out

    A, B = dense(a), dense(b)
    while B:
        db = len(B) - 1
        inv = pow(B[db], p - 2, p)
        for i in range(len(A) - 1, db - 1, -1):
            c = A[i]
            if c:
                q = c * inv % p
                off = i - db
                for j in range(db):
                    if B[j]:
                        A[off + j] = (A[off + j] - q * B[j]) % p
                A[i] = 0
        while A and not A[-1]:
            A.pop()
        A, B = B, A
    return len(A) - 1


def _image_divides(a: dict[int, int], b: dict[int, int]) -> bool:
    """Does a divide b in F_p[v]?  (Sparse dicts, a nonzero.)"""
    p = _PROBE_PRIME
    if not b:
        return True
    da = max(a)
    db = max(b)
    if db < da:
        return False
    A = [0] * (da + 1)
    for e, c in a.items():
        A[e] = c
    B = [0] * (db + 1)
    for e, c in b.items():
        B[e] = c
    inv = pow(A[da], p - 2, p)
    for i in range(db, da - 1, -1):
        c = B[i]
        if c:
            q = c * inv % p
            off = i - da
            for j in range(da):
                if A[j]:
                    B[off + j] = (B[off + j] - q * A[j]) % p
            B[i] = 0
    return not any(B)


def divides_probe(f: PolyDict, g: PolyDict, g_images: dict | None = None) -> bool:
    """Necessary condition for f | g over the fraction field.

    Divisibility survives any evaluation into F_p[v], so a failed image
    division certifies f does not divide g.  True proves nothing and the
    caller must still divide exactly.  Coefficient scalars are irrelevant:
    the image lives over a field.

    The probe points are fixed per attempt, so when the same g is tested
    against many divisors the caller can pass a dict and the image of g is
    computed once per (attempt, kept-variable) instead of every call."""
    fdegs = dict_degrees(f)
    fvars = [v for v in range(NVARS) if fdegs[v] > 0]
    if not fvars or not g:
        return True
    var = max(fvars, key=fdegs.__getitem__)
    rng = random.Random(0xD1F1DE5)
    for attempt in range(3):
        vals = [rng.randrange(1, _PROBE_PRIME - 1) for _ in range(NVARS)]
        fi = _probe_image(f, var, vals)
        if not fi or max(fi) != fdegs[var]:
            continue  # leading coefficient died; resample
        if g_images is None:
            gi = _probe_image(g, var, vals)
        else:
            gi = g_images.get((attempt, var))
            if gi is None:
                gi = _probe_image(g, var, vals)
                g_images[(attempt, var)] = gi
        return _image_divides(fi, gi)
    return True


def _coprime_by_probe(f: PolyDict, g: PolyDict, shared) -> bool:
    """True when modular images certify gcd(f, g) has degree zero in every
    shared variable (a unit, for primitive inputs).  False means unknown."""
    rng = random.Random(0x5EED)
    fdegs = dict_degrees(f)
    gdegs = dict_degrees(g)
    for var in shared:
        df = fdegs[var]
        dg = gdegs[var]
        certified = False
        evaluated = 0
        for _ in range(4):
            vals = [rng.randrange(1, _PROBE_PRIME - 1) for _ in range(NVARS)]
            fi = _probe_image(f, var, vals)
            gi = _probe_image(g, var, vals)
            if not fi or not gi:
                continue
            if not (max(fi) == df or max(gi) == dg):
                continue  # both leading coefficients died; resample
            if _image_gcd_degree(fi, gi) == 0:
                certified = True
                break
            evaluated += 1
            if evaluated >= 2:
                break  # two independent positive images: likely a real factor
        if not certified:
            return False
    return True


# -- univariate view and subresultant PRS ------------------------------------


def _split(f: PolyDict, var: int) -> dict[int, PolyDict]:
    shift = var * 16
    out: dict[int, PolyDict] = {}
    for k, c in f.items():
        e = (k >> shift) & 0xFFFF
        out.setdefault(e, {})[k - (e << shift)] = c
    return out


def _join(split: dict[int, PolyDict], var: int) -> PolyDict:
    shift = var * 16
    out: PolyDict = {}
    for e, coeff in split.items():
        for k, c in coeff.items():
            out[k + (e << shift)] = c
    return out


def _prem(F: dict[int, PolyDict], G: dict[int, PolyDict]) -> dict[int, PolyDict]:
    """Pseudo-remainder of F by G in the split main variable."""
    dG = max(G)
    lcG = G[dG]
    R = {d: dict(c) for d, c in F.items()}
    e = max(F) - dG + 1
    while R:
        dR = max(R)
        if dR < dG:
            break
        lcR = R[dR]
        Rn: dict[int, PolyDict] = {}
        for d, c in R.items():
            if d != dR:
                Rn[d] = dict_mul(c, lcG)
        for d, c in G.items():
            if d == dG:
                continue
            dd = d + dR - dG
            t = dict_mul(c, lcR)
            prev = Rn.get(dd)
            Rn[dd] = dict_sub(prev, t) if prev is not None else dict_neg(t)
        R = {d: c for d, c in Rn.items() if c}
        e -= 1
    if e > 0 and R:
        mult = dict_pow(lcG, e)
        R = {d: dict_mul(c, mult) for d, c in R.items()}
    return R


def _coeff_exact_div(F: dict[int, PolyDict], d: PolyDict) -> dict[int, PolyDict]:
    out: dict[int, PolyDict] = {}
    for deg, c in F.items():
        q = dict_exact_div(c, d)
        if q is None:
            raise ArithmeticError("inexact division in subresultant sequence")
        out[deg] = q
    return out


def _content_over_base(coeffs) -> PolyDict:
    acc: PolyDict = {}
    for c in coeffs:
        acc = poly_gcd_dict(acc, c)
        if dict_is_unit_constant(acc):
            return {0: _UNIT}
    return acc


def _gcd_prs(F: dict[int, PolyDict], G: dict[int, PolyDict]) -> dict[int, PolyDict] | None:
    """Subresultant PRS; F, G primitive in the main variable, deg F >= deg G >= 1.

    Returns the last nonzero remainder (up to content), or None when the GCD
    is trivial in the main variable.
    """
    g: PolyDict = {0: _UNIT}
    h: PolyDict = {0: _UNIT}
    while True:
        delta = max(F) - max(G)
        R = _prem(F, G)
        if not R:
            return G
        if max(R) == 0:
            return None
        divisor = dict_mul(g, dict_pow(h, delta))
        R = _coeff_exact_div(R, divisor)
        F, G = G, R
        g = F[max(F)]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            num = dict_pow(g, delta)
            den = dict_pow(h, delta - 1)
            q = dict_exact_div(num, den)
            if q is None:
                raise ArithmeticError("inexact h-update in subresultant sequence")
            h = q


def poly_gcd_dict(f: PolyDict, g: PolyDict) -> PolyDict:
    """Exact GCD in Z[i][x, y, u1, u2], unit-normalized."""
    if not f:
        return _unit_normalize(dict(g))
    if not g:
        return _unit_normalize(dict(f))
    mf = monomial_min(f.keys())
    mg = monomial_min(g.keys())
    m = monomial_gcd(mf, mg)
    f1 = dict_unshift(f, mf)
    g1 = dict_unshift(g, mg)
    cf = gaussian_content(f1)
    cg = gaussian_content(g1)
    c = gint_gcd(cf, cg)
    f1 = dict_scale_div(f1, cf)
    g1 = dict_scale_div(g1, cg)
    result = _gcd_primitive(f1, g1)
    result = dict_scale(result, c)
    result = dict_shift(result, m)
    return _unit_normalize(result)


def _gcd_primitive(f: PolyDict, g: PolyDict) -> PolyDict:
    """GCD of integer-content-free dicts with trivial monomial content."""
    if f == g:
        return dict(f)
    if len(f) == 1 and 0 in f:
        return {0: _UNIT}
    if len(g) == 1 and 0 in g:
        return {0: _UNIT}
    degs_f = [dict_degree(f, v) for v in range(NVARS)]
    degs_g = [dict_degree(g, v) for v in range(NVARS)]
    shared = [v for v in range(NVARS) if degs_f[v] > 0 and degs_g[v] > 0]
    if not shared:
        return {0: _UNIT}
    if _coprime_by_probe(f, g, shared):
        return {0: _UNIT}
    var = min(shared, key=lambda v: (min(degs_f[v], degs_g[v]), degs_f[v] + degs_g[v]))
    F = _split(f, var)
    G = _split(g, var)
    cont_f = _content_over_base(F.values())
    cont_g = _content_over_base(G.values())
    d = poly_gcd_dict(cont_f, cont_g)
    if dict_is_unit_constant(cont_f):
        Fp = F
    else:
        fq = dict_exact_div(f, cont_f)
        if fq is None:
            raise ArithmeticError("content does not divide its polynomial")
        Fp = _split(fq, var)
    if dict_is_unit_constant(cont_g):
        Gp = G
    else:
        gq = dict_exact_div(g, cont_g)
        if gq is None:
            raise ArithmeticError("content does not divide its polynomial")
        Gp = _split(gq, var)
    if max(Fp) < max(Gp):
        Fp, Gp = Gp, Fp
    W = _gcd_prs(Fp, Gp)
    if W is None:
        return d
    w = _join(W, var)
    # strip contents the PRS accumulated
    cw = gaussian_content(w)
    if cw != _UNIT:
        w = dict_scale_div(w, cw)
    Wsplit = _split(w, var)
    cont_w = _content_over_base(Wsplit.values())
    if not dict_is_unit_constant(cont_w):
        q = dict_exact_div(w, cont_w)
        if q is None:
            raise ArithmeticError("inexact content removal in GCD")
        w = q
    return dict_mul(d, w)
