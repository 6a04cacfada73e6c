"""Symbolic Dedekind cuts of a computable ordered Abelian group.

A finite cut is stored as a *node* ``(level k, prefix, side)``:

* ``level`` indexes the convex subgroup H_k that stabilizes the cut
  (k trailing coordinates are absorbed);
* ``prefix`` is an element of G/H_k whose last coordinate -- the
  *anchor* -- may live in a decidable extension of the component
  (another rational, or a Q(sqrt 2) value), the other coordinates are
  ordinary component members;
* ``side`` records whether the prefix is a realized maximum of the left
  part (PLUS), a realized minimum of the right part (MINUS), or sits
  strictly between both parts (FILLED, anchor outside the component).

``-inf`` and ``+inf`` are separate sentinels.  All constructors
canonicalize: over a discrete component the predecessor form is folded
into the successor form (the two describe the same cut), so equality of
cuts is plain structural equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from domkit.groups import Group
from domkit.scalars import Scalar, format_scalar, parse_scalar, scalar_cmp, scalar_floor

MINUS, FILLED, PLUS = -1, 0, 1
_SIDE_TEXT = {MINUS: "-", FILLED: "fill", PLUS: "+"}

SIGN_INF = "inf"
SIGN_SPADE = "spade"


class Cut:
    __slots__ = ("kind", "level", "prefix", "side")

    def __init__(self, kind: str, level: int = 0, prefix: tuple = (), side: int = PLUS):
        self.kind = kind          # 'n' node, 'lo' -inf, 'hi' +inf
        self.level = level
        self.prefix = prefix
        self.side = side

    @property
    def is_node(self) -> bool:
        return self.kind == "n"

    @property
    def anchor(self) -> Scalar:
        return self.prefix[-1]

    def __eq__(self, other):
        if not isinstance(other, Cut):
            return NotImplemented
        if self.kind != other.kind:
            return False
        if self.kind != "n":
            return True
        return (self.level, self.prefix, self.side) == (other.level, other.prefix, other.side)

    def __hash__(self):
        if self.kind != "n":
            return hash(self.kind)
        return hash((self.level, self.prefix, self.side))

    def __repr__(self):
        if self.kind == "lo":
            return "Cut(-inf)"
        if self.kind == "hi":
            return "Cut(+inf)"
        return f"Cut(level={self.level}, prefix={self.prefix!r}, side={self.side})"


NEG_INF = Cut("lo")
POS_INF = Cut("hi")


def make_node(g: Group, level: int, prefix: tuple, side: int) -> Cut:
    """Build (and canonicalize) the level-``level`` node with given prefix."""
    m = g.num_atoms
    if m == 0:
        raise ValueError("the trivial group has no finite cuts")
    if not 0 <= level < m:
        raise ValueError(f"cut level {level} out of range 0..{m - 1}")
    prefix = tuple(prefix)
    if len(prefix) != m - level:
        raise ValueError(f"level-{level} prefix needs {m - level} coordinates")
    for atom, v in zip(g.atoms, prefix[:-1]):
        if not atom.contains(v):
            raise ValueError(f"prefix coordinate {format_scalar(v)} outside {atom.format()}")
    atom = g.atoms[m - level - 1]
    anchor = prefix[-1]
    if atom.discrete:
        if not atom.contains(anchor):
            anchor = Fraction(scalar_floor(anchor))
        elif side != PLUS:
            anchor = Fraction(anchor) - 1
        side = PLUS
    else:
        if atom.contains(anchor):
            if side == FILLED:
                side = MINUS
        else:
            side = FILLED
    return Cut("n", level, prefix[:-1] + (anchor,), side)


def zero_cut(g: Group) -> Cut:
    """The neutral element of the cut carrier (upper edge of {0})."""
    if g.num_atoms == 0:
        return POS_INF
    return make_node(g, 0, g.zero(), PLUS)


def _prefix_cmp(a: tuple, b: tuple) -> int:
    for u, v in zip(a, b):
        c = scalar_cmp(u, v)
        if c:
            return c
    return 0


# -- order and membership ------------------------------------------------


def member_below(g: Group, gamma: tuple, cut: Cut) -> bool:
    """gamma < cut, i.e. gamma lies in the left part."""
    if cut.kind == "lo":
        return False
    if cut.kind == "hi":
        return True
    c = _prefix_cmp(g.project(gamma, cut.level), cut.prefix)
    return c < 0 or (c == 0 and cut.side == PLUS)


def member_above(g: Group, gamma: tuple, cut: Cut) -> bool:
    """gamma > cut, i.e. gamma lies in the right part."""
    if cut.kind == "lo":
        return True
    if cut.kind == "hi":
        return False
    c = _prefix_cmp(g.project(gamma, cut.level), cut.prefix)
    return c > 0 or (c == 0 and cut.side == MINUS)


_RANK = {"lo": -1, "n": 0, "hi": 1}


def compare(g: Group, a: Cut, b: Cut) -> int:
    if a.kind != "n" or b.kind != "n":
        ra, rb = _RANK[a.kind], _RANK[b.kind]
        return (ra > rb) - (ra < rb)
    if a.level == b.level:
        c = _prefix_cmp(a.prefix, b.prefix)
        if c:
            return c
        return (a.side > b.side) - (a.side < b.side)
    flip = 1
    hi, lo = a, b
    if a.level < b.level:
        hi, lo, flip = b, a, -1
    trunc = lo.prefix[: g.num_atoms - hi.level]
    c = _prefix_cmp(hi.prefix, trunc)
    if c:
        return c * flip
    # the wider cut sits just past the shared prefix, on its own side
    return (1 if hi.side == PLUS else -1) * flip


# -- minus ---------------------------------------------------------------


def neg(g: Group, cut: Cut) -> Cut:
    if cut.kind == "lo":
        return POS_INF
    if cut.kind == "hi":
        return NEG_INF
    q = g.quotient(cut.level)
    return make_node(g, cut.level, q.neg(cut.prefix), -cut.side)


# -- addition: left sum, right sum, differences ---------------------------


def _lift_left(g: Group, cut: Cut, k: int) -> tuple[tuple, int]:
    """Level-k view of the left part: (prefix, side)."""
    if cut.level == k:
        return cut.prefix, cut.side
    return cut.prefix[: g.num_atoms - k], PLUS


def _lift_right(g: Group, cut: Cut, k: int) -> tuple[tuple, bool]:
    """Level-k view of the right part: (prefix, minimum attained?)."""
    if cut.level < k:
        return cut.prefix[: g.num_atoms - k], True
    atom = g.atoms[g.num_atoms - k - 1]
    if cut.side == MINUS:
        return cut.prefix, True
    if cut.side == PLUS:
        if atom.discrete:
            p = cut.prefix[:-1] + (cut.prefix[-1] + 1,)
            return p, True
        return cut.prefix, False
    return cut.prefix, False  # FILLED


def add(g: Group, a: Cut, b: Cut) -> Cut:
    """Left sum: upper edge of the sum of the left parts."""
    if a.kind == "lo" or b.kind == "lo":
        return NEG_INF
    if a.kind == "hi" or b.kind == "hi":
        return POS_INF
    k = max(a.level, b.level)
    pa, sa = _lift_left(g, a, k)
    pb, sb = _lift_left(g, b, k)
    q = g.quotient(k)
    p = q.add(pa, pb)
    if FILLED in (sa, sb):
        side = MINUS if g.atoms[g.num_atoms - k - 1].contains(p[-1]) else FILLED
    else:
        side = PLUS if (sa == PLUS and sb == PLUS) else MINUS
    return make_node(g, k, p, side)


def radd(g: Group, a: Cut, b: Cut) -> Cut:
    """Right sum: lower edge of the sum of the right parts."""
    if a.kind == "hi" or b.kind == "hi":
        return POS_INF
    if a.kind == "lo" or b.kind == "lo":
        return NEG_INF
    k = max(a.level, b.level)
    pa, ma = _lift_right(g, a, k)
    pb, mb = _lift_right(g, b, k)
    q = g.quotient(k)
    p = q.add(pa, pb)
    if ma and mb:
        side = MINUS
    else:
        side = PLUS if g.atoms[g.num_atoms - k - 1].contains(p[-1]) else FILLED
    return make_node(g, k, p, side)


def rsub(g: Group, a: Cut, b: Cut) -> Cut:
    """Right difference a - b = a +R (-b)."""
    return radd(g, a, neg(g, b))


def lsub(g: Group, a: Cut, b: Cut) -> Cut:
    """Left difference: a + (-b)."""
    return add(g, a, neg(g, b))


def diff(g: Group, mode: str, a: Cut, b: Cut) -> Cut:
    if mode == "right":
        return rsub(g, a, b)
    if mode == "left":
        return lsub(g, a, b)
    raise ValueError(f"unknown difference mode {mode!r}")


def shift_by(g: Group, gamma: tuple, cut: Cut) -> Cut:
    """Translate the cut by the group element gamma."""
    if cut.kind != "n":
        return cut
    q = g.quotient(cut.level)
    return make_node(g, cut.level, q.add(g.project(gamma, cut.level), cut.prefix), cut.side)


# -- invariance and width --------------------------------------------------


def invariance_level(cut: Cut) -> int:
    """Ladder index of the invariance group (stabilizer) of the cut."""
    if cut.kind != "n":
        raise ValueError("infinite cuts have no invariance level")
    return cut.level


def width(g: Group, cut: Cut) -> Cut:
    """Upper edge of the invariance group; rejects infinite cuts."""
    if cut.kind != "n":
        raise ValueError("width is undefined for -inf/+inf")
    k = cut.level
    return make_node(g, k, (Fraction(0),) * (g.num_atoms - k), PLUS)


def level_edge(g: Group, k: int) -> Cut:
    """The width cut at ladder level k (upper edge of H_k)."""
    return make_node(g, k, (Fraction(0),) * (g.num_atoms - k), PLUS)


def project_cut(g: Group, cut: Cut, k: int) -> Cut:
    """Image of the cut in the quotient at level k <= its invariance level."""
    if cut.kind != "n":
        return cut
    if k > cut.level:
        raise ValueError(f"level {k} not contained in the invariance group (level {cut.level})")
    if k == 0:
        return cut
    return make_node(g.quotient(k), cut.level - k, cut.prefix, cut.side)


def signature(g: Group, cut: Cut):
    """Signature of the cut inside the carrier at its own width level."""
    if cut.kind != "n":
        raise ValueError("signature is undefined for -inf/+inf")
    atom = g.atoms[g.num_atoms - cut.level - 1]
    if atom.discrete:
        return SIGN_INF
    return {PLUS: 1, MINUS: -1, FILLED: 0}[cut.side]


# -- filling by elements of a supergroup ----------------------------------


_ATOM_EXTENDS = {
    ("Zloc", "Q"), ("Zloc", "Qr2"), ("Q", "Qr2"),
    ("Z", "Zloc"), ("Z", "Q"), ("Z", "Qr2"),
}


def _check_pair(g: Group, gp: Group) -> None:
    if g.is_crossed or gp.is_crossed:
        raise ValueError("fill witnesses over crossed products are not supported")
    if g.num_atoms != gp.num_atoms or g.num_atoms == 0:
        raise ValueError("supergroup must have the same lexicographic shape")
    if g.atoms[:-1] != gp.atoms[:-1]:
        raise ValueError("only the least significant component may be extended")
    a, b = g.atoms[-1], gp.atoms[-1]
    if a == b:
        return
    if (a.kind, b.kind) not in _ATOM_EXTENDS:
        raise ValueError(f"{b.format()} does not extend {a.format()}")


def induced_cut(g: Group, gp: Group, x: tuple) -> Cut:
    """The unique cut of g filled by x, for x in a dense extension gp of g."""
    _check_pair(g, gp)
    gp.check_element(x)
    if g.atoms[-1].discrete:
        raise ValueError(
            f"{g.format()} is not dense in {gp.format()}: no element of the "
            "extension fills a cut of a discrete group")
    if g.contains(x):
        raise ValueError(f"{g.format_element(x)} lies in the base group and fills no cut")
    return make_node(g, 0, x, FILLED)


def fills(g: Group, gp: Group, x: tuple, cut: Cut) -> bool:
    """Does x satisfy the cut (lie between its left and right parts)?"""
    return fill_le(g, gp, x, cut) and fill_ge(g, gp, x, cut)


def fill_le(g: Group, gp: Group, x: tuple, cut: Cut) -> bool:
    """cut <= x: every group element below the cut is below x."""
    _check_pair(g, gp)
    if cut.kind == "lo":
        return True
    if cut.kind == "hi":
        return False
    c = _prefix_cmp(gp.project(x, cut.level), cut.prefix)
    return c > 0 or (c == 0 and cut.side != PLUS)


def fill_ge(g: Group, gp: Group, x: tuple, cut: Cut) -> bool:
    """cut >= x: every group element above the cut is above x."""
    _check_pair(g, gp)
    if cut.kind == "hi":
        return True
    if cut.kind == "lo":
        return False
    c = _prefix_cmp(gp.project(x, cut.level), cut.prefix)
    return c < 0 or (c == 0 and cut.side != MINUS)


def edge_below(g: Group, gp: Group, x: tuple) -> Cut:
    """Upper edge of the set of group elements strictly below x."""
    _check_pair(g, gp)
    gp.check_element(x)
    return make_node(g, 0, x, MINUS if g.contains(x) else FILLED)


def edge_above(g: Group, gp: Group, x: tuple) -> Cut:
    """Lower edge of the set of group elements strictly above x."""
    _check_pair(g, gp)
    gp.check_element(x)
    return make_node(g, 0, x, PLUS if g.contains(x) else FILLED)


# -- helpers used by samplers and witnesses --------------------------------


def realize_prefix(g: Group, k: int, prefix: tuple, tail: Fraction) -> Optional[tuple]:
    """A group element projecting to ``prefix`` at level k, or None.

    The k dropped coordinates are set to ``tail`` (an integer works in
    every atom); fails when the anchor is outside its component.
    """
    if not g.atoms[g.num_atoms - k - 1].contains(prefix[-1]):
        return None
    return tuple(prefix) + (Fraction(tail),) * k


def approach_below(g: Group, atom_index: int, target: Scalar, n: int) -> Fraction:
    """Component member strictly below ``target``, within base^-(n+1) of it."""
    d = g.atoms[atom_index].dense_denominator() ** (n + 1)
    ceil_td = -scalar_floor(-(target * d))
    return Fraction(ceil_td - 1, d)


def approach_above(g: Group, atom_index: int, target: Scalar, n: int) -> Fraction:
    d = g.atoms[atom_index].dense_denominator() ** (n + 1)
    floor_td = scalar_floor(target * d)
    return Fraction(floor_td + 1, d)


def element_between(g: Group, a: Cut, b: Cut) -> tuple:
    """Some group element strictly between two cuts a < b."""
    if compare(g, a, b) >= 0:
        raise ValueError("element_between needs a < b")
    m = g.num_atoms
    candidates: list[tuple] = []

    def pad(prefix, value):
        return tuple(prefix) + (Fraction(value),) * (m - len(prefix))

    for cut in (a, b):
        if cut.kind != "n":
            continue
        p = cut.prefix
        base = p[:-1]
        anchor = p[-1]
        idx = m - cut.level - 1
        candidates.append(pad(base + (Fraction(scalar_floor(anchor)),), 0))
        candidates.append(pad(base + (Fraction(scalar_floor(anchor)) + 1,), 0))
        for n in range(6):
            if not g.atoms[idx].discrete:
                candidates.append(pad(base + (approach_below(g, idx, anchor, n),), 0))
                candidates.append(pad(base + (approach_above(g, idx, anchor, n),), 0))
            for t in (-(3 ** n), 3 ** n):
                if g.atoms[idx].contains(anchor):
                    candidates.append(pad(base + (anchor,), t))
    for n in range(4):
        candidates.append(pad((), 3 ** n))
        candidates.append(pad((), -(3 ** n)))
    for gamma in candidates:
        if g.contains(gamma) and member_above(g, gamma, a) and member_below(g, gamma, b):
            return gamma
    raise ValueError("no group element found between the two cuts")


# -- text form --------------------------------------------------------------


def _fmt_tuple(prefix: tuple) -> str:
    if len(prefix) == 1:
        return format_scalar(prefix[0])
    return "(" + ",".join(format_scalar(v) for v in prefix) + ")"


def format_cut(g: Group, cut: Cut) -> str:
    if cut.kind == "lo":
        return "-inf"
    if cut.kind == "hi":
        return "+inf"
    body = _fmt_tuple(cut.prefix)
    if cut.level == 0:
        if cut.side == FILLED:
            return f"fill({body})"
        return f"cut({body})" + ("+" if cut.side == PLUS else "-")
    if cut.side == FILLED:
        return f"edge({cut.level})fill({body})"
    return f"edge({cut.level})" + ("+" if cut.side == PLUS else "-") + body


def _parse_tuple(text: str) -> tuple:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    return tuple(parse_scalar(p) for p in s.split(","))


def parse_cut(g: Group, text: str) -> Cut:
    s = text.strip()
    if s == "-inf":
        return NEG_INF
    if s == "+inf":
        return POS_INF
    if s.startswith("cut(") and s[-1] in "+-":
        side = PLUS if s[-1] == "+" else MINUS
        return make_node(g, 0, _parse_tuple(s[4:-2]), side)
    if s.startswith("fill(") and s.endswith(")"):
        return make_node(g, 0, _parse_tuple(s[5:-1]), FILLED)
    if s.startswith("edge("):
        close = s.index(")")
        k = int(s[5:close])
        rest = s[close + 1:]
        if rest.startswith("fill(") and rest.endswith(")"):
            return make_node(g, k, _parse_tuple(rest[5:-1]), FILLED)
        if rest and rest[0] in "+-":
            side = PLUS if rest[0] == "+" else MINUS
            body = rest[1:]
            if not body:
                return level_edge(g, k) if side == PLUS else neg(g, level_edge(g, k))
            return make_node(g, k, _parse_tuple(body), side)
    raise ValueError(f"cannot parse cut {text!r}")
