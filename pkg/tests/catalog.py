"""Curated descriptive-class ground truth for boundary sets.

Each entry is (expression builder, truth, derivation).  ``truth`` maps flag
names to booleans that hold in L_n ≅ R^(n-1) for every n >= 2; flags whose
truth we did not establish are simply absent.  ``decided`` lists flags the
engine is expected to answer (a regression baseline; soundness against
``truth`` is the real oracle).

Flag abbreviations: ct countable, cc co-countable, cl closed, op open,
gd G_delta, fs F_sigma, cp compact, cu contains-closed-uncountable,
ea equals-all, ee equals-empty.
"""

from __future__ import annotations

from niemytzki.setdsl import parse

_FULL = ("countable", "co_countable", "closed", "open", "g_delta", "f_sigma",
         "compact", "contains_closed_uncountable", "equals_all", "equals_empty")

_SHORT = dict(zip(
    ("ct", "cc", "cl", "op", "gd", "fs", "cp", "cu", "ea", "ee"), _FULL
))


def _t(**kwargs) -> dict[str, bool]:
    return {_SHORT[k]: v for k, v in kwargs.items()}


def _zeros(n: int) -> str:
    return ",".join(["0"] * (n - 1))


def _pt(n: int, first: str) -> str:
    return ",".join([first] + ["0"] * (n - 2))


# (name, expression text builder, truth flags, decided flags, derivation)
CATALOG = [
    (
        "empty",
        lambda n: "empty",
        _t(ct=True, cc=False, cl=True, op=True, gd=True, fs=True, cp=True,
           cu=False, ea=False, ee=True),
        _FULL,
        "the empty set is clopen, compact, countable; its complement is L_n, uncountable",
    ),
    (
        "all",
        lambda n: "all",
        _t(ct=False, cc=True, cl=True, op=True, gd=True, fs=True, cp=False,
           cu=True, ea=True, ee=False),
        _FULL,
        "L_n is clopen, co-countable, unbounded (so not compact), and contains closed balls",
    ),
    (
        "rationals",
        lambda n: "rationals",
        _t(ct=True, cc=False, cl=False, op=False, gd=False, fs=True, cp=False,
           cu=False, ea=False, ee=False),
        _FULL,
        "Q^m is countable dense: F_sigma as a countable union of points, not G_delta "
        "by Baire category, hence neither closed nor open",
    ),
    (
        "co-rationals",
        lambda n: "!rationals",
        _t(ct=False, cc=True, cl=False, op=False, gd=True, fs=False, cp=False,
           cu=True, ea=False, ee=False),
        _FULL,
        "complement swap of the previous row; an uncountable G_delta contains a Cantor set",
    ),
    (
        "cantor",
        lambda n: "cantor",
        _t(ct=False, cc=False, cl=True, op=False, gd=True, fs=True, cp=True,
           cu=True, ea=False, ee=False),
        _FULL,
        "the Cantor set is compact, uncountable, nowhere dense; it is its own "
        "closed uncountable subset",
    ),
    (
        "co-cantor",
        lambda n: "!cantor",
        _t(ct=False, cc=False, cl=False, op=True, gd=True, fs=True, cp=False,
           cu=True, ea=False, ee=False),
        _FULL,
        "open co-Cantor set; it contains closed balls away from [0,1]",
    ),
    (
        "bernstein",
        lambda n: "bernstein",
        _t(ct=False, cc=False, cl=False, op=False, gd=False, fs=False, cp=False,
           cu=False, ea=False, ee=False),
        _FULL,
        "Bernstein sets have cardinality continuum, contain no uncountable compacta "
        "(hence no closed uncountable subsets), and are neither G_delta nor F_sigma",
    ),
    (
        "co-bernstein",
        lambda n: "!bernstein",
        _t(ct=False, cc=False, cl=False, op=False, gd=False, fs=False, cp=False,
           cu=False, ea=False, ee=False),
        _FULL,
        "the complement of a Bernstein set is a Bernstein set",
    ),
    (
        "point",
        lambda n: f"point({_zeros(n)})",
        _t(ct=True, cc=False, cl=True, op=False, gd=True, fs=True, cp=True,
           cu=False, ea=False, ee=False),
        _FULL,
        "singletons are compact and countable; not open since m >= 1",
    ),
    (
        "two-points",
        lambda n: f"point({_zeros(n)}) | point({_pt(n, '1')})",
        _t(ct=True, cc=False, cl=True, op=False, gd=True, fs=True, cp=True,
           cu=False, ea=False, ee=False),
        ("countable", "closed", "g_delta", "f_sigma", "compact",
         "contains_closed_uncountable", "equals_empty"),
        "finite unions of singletons stay finite",
    ),
    (
        "finite",
        lambda n: "finite{" + ";".join([_zeros(n), _pt(n, "1"), _pt(n, "-2")]) + "}",
        _t(ct=True, cc=False, cl=True, op=False, gd=True, fs=True, cp=True,
           cu=False, ea=False, ee=False),
        _FULL,
        "finite sets are compact and countable",
    ),
    (
        "lattice",
        lambda n: "lattice",
        _t(ct=True, cc=False, cl=True, op=False, gd=True, fs=True, cp=False,
           cu=False, ea=False, ee=False),
        _FULL,
        "Z^m is closed, discrete, countable and unbounded",
    ),
    (
        "closed-ball",
        lambda n: f"cball({_zeros(n)};1)",
        _t(ct=False, cc=False, cl=True, op=False, gd=True, fs=True, cp=True,
           cu=True, ea=False, ee=False),
        _FULL,
        "closed balls are uncountable compacta",
    ),
    (
        "open-ball",
        lambda n: f"oball({_zeros(n)};1)",
        _t(ct=False, cc=False, cl=False, op=True, gd=True, fs=True, cp=False,
           cu=True, ea=False, ee=False),
        _FULL,
        "open balls are open, bounded, not closed (m >= 1); they contain closed balls",
    ),
    (
        "rationals-or-cantor",
        lambda n: "rationals | cantor",
        _t(ct=False, cc=False, cl=False, op=False, gd=False, fs=True, cp=False,
           cu=True, ea=False, ee=False),
        ("countable", "f_sigma", "contains_closed_uncountable", "equals_empty"),
        "union of countable and Cantor: uncountable, F_sigma; were it G_delta, "
        "Q \\ C would be a countable dense-in-itself G_delta in an interval, "
        "contradicting Baire; closure adds irrationals so not closed; empty "
        "interior so not open",
    ),
    (
        "rationals-in-cantor",
        lambda n: "rationals & cantor",
        _t(ct=True, cc=False, cl=False, op=False, gd=False, fs=True, cp=False,
           cu=False, ea=False, ee=False),
        ("countable", "f_sigma", "contains_closed_uncountable", "equals_empty"),
        "countable; dense in the perfect set C (it contains all gap endpoints), so "
        "neither closed nor G_delta (Baire in C)",
    ),
    (
        "annulus",
        lambda n: f"cball({_zeros(n)};1) & !oball({_zeros(n)};1/2)",
        _t(ct=False, cc=False, cl=True, op=False, gd=True, fs=True, cp=True,
           cu=True, ea=False, ee=False),
        ("closed", "g_delta", "f_sigma", "compact",
         "contains_closed_uncountable", "equals_empty", "countable"),
        "a closed annulus: intersection of two closed sets, bounded, and it "
        "contains small closed balls, e.g. around 3/4 * e_1",
    ),
    (
        "cantor-point",
        lambda n: f"cantor & point({_pt(n, '1/4')})",
        _t(ct=True, cc=False, cl=True, op=False, gd=True, fs=True, cp=True,
           cu=False, ea=False, ee=False),
        ("countable", "contains_closed_uncountable", "equals_empty"),
        "1/4 = 0.0202...(3) lies in C, so this is a singleton",
    ),
    (
        "bernstein-in-ball",
        lambda n: f"bernstein & cball({_zeros(n)};1)",
        _t(ct=False, cc=False, cl=False, op=False, gd=False, fs=False, cp=False,
           cu=False, ea=False, ee=False),
        ("contains_closed_uncountable", "co_countable"),
        "a subset of a Bernstein set contains no closed uncountable subset; it is "
        "uncountable (the ball holds continuum many disjoint Cantor sets, each met "
        "by the Bernstein set), so by the perfect-set property it is neither "
        "G_delta nor (being uncountable with no uncountable compacta) F_sigma, "
        "closed, open or compact",
    ),
    (
        "union-with-all",
        lambda n: "all | bernstein",
        _t(ct=False, cc=True, cl=True, op=True, gd=True, fs=True, cp=False,
           cu=True, ea=True, ee=False),
        _FULL,
        "any union containing L_n is L_n",
    ),
    (
        "ball-pair",
        lambda n: f"oball({_zeros(n)};1) | cball({_pt(n, '3')};1)",
        _t(ct=False, cc=False, cl=False, op=False, gd=True, fs=True, cp=False,
           cu=True, ea=False, ee=False),
        ("g_delta", "f_sigma", "contains_closed_uncountable", "countable",
         "equals_empty"),
        "disjoint open and closed balls: neither open nor closed as a union, "
        "both G_delta and F_sigma, uncountable",
    ),
]


def build(n: int):
    """Instantiate the catalog at dimension n, parsing every expression."""
    return [
        (name, parse(text(n), n), truth, decided, why)
        for name, text, truth, decided, why in CATALOG
    ]
