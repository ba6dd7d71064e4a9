"""
registry — явный реестр производящих функций.

Порядок в CATALOG фиксирован: он же порядок вывода в `catalog --ids all`.
Опорные коэффициенты — z^0..z^10; источник указан в reference_source и
в комментарии у каждой записи.
"""

from __future__ import annotations

from fractions import Fraction

from permbox.common.series import PuiseuxData, PuiseuxTerm
from permbox.twobyfour.gf_catalog import formulas as fm
from permbox.twobyfour.gf_catalog.contracts import CatalogEntry
from permbox.twobyfour.perm_core import parse_basis, parse_pattern_list

_CATALAN_11 = (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796)

CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry(
        id="A",
        title="Fans only: Av(4123,1324,3124,1423)",
        evaluator=fm.A_RADICAL.evaluate,
        basis=parse_basis("4123,1324,3124,1423"),
        radical=fm.A_RADICAL,
        # 1 + z/√(1-4z): central binomial coefficients C(2n-2, n-1)
        reference_coeffs=(1, 1, 2, 6, 20, 70, 252, 924, 3432, 12870, 48620),
        reference_source="central binomial coefficients C(2n-2,n-1)",
    ),
    CatalogEntry(
        id="B",
        title="Av(4123,1324,3124)",
        evaluator=fm.B_RADICAL.evaluate,
        basis=parse_basis("4123,1324,3124"),
        also_counts=(parse_basis("4123,1324,1423"),),
        radical=fm.B_RADICAL,
        # printed series: ... + 78z^5 + 297z^6 + 1143z^7 + ...
        reference_coeffs=(1, 1, 2, 6, 21, 78, 297, 1143, 4419, 17119, 66386),
        reference_source=(
            "printed series of Av(4123,1324,3124) up to z^9; z^10 printed as 66836, "
            "closed form and oracle give 66386; OEIS A277221"
        ),
        archive_id="A277221",
    ),
    CatalogEntry(
        id="F",
        title="Source graphs with one 1423 and no 3124 (substituted form)",
        evaluator=fm.f_series,
    ),
    CatalogEntry(
        id="G",
        title="Source graphs containing both 1423 and 3124 (substituted form)",
        evaluator=fm.g_series,
    ),
    CatalogEntry(
        id="H",
        title="Av(4123,1324,31524)",
        evaluator=fm.H_RADICAL.evaluate,
        basis=parse_basis("4123,1324,31524"),
        radical=fm.H_RADICAL,
        # printed series: ... + 86z^5 + 343z^6 + 1374z^7 + ...
        reference_coeffs=(1, 1, 2, 6, 22, 86, 343, 1374, 5497, 21926, 87176),
        reference_source="printed series of Av(4123,1324,31524); OEIS A277222",
        archive_id="A277222",
    ),
    CatalogEntry(
        id="I",
        title="Av(4123,1324) containing 31524",
        evaluator=fm.i_series,
        basis=parse_basis("4123,1324"),
        must_contain=parse_pattern_list("31524"),
        radical=fm.I_RADICAL,
        # P1 - H term by term
        reference_coeffs=(0, 0, 0, 0, 0, 1, 9, 54, 271, 1230, 5240),
        reference_source="difference of the printed P1 and H series",
    ),
    CatalogEntry(
        id="P1",
        title="Av(4123,1324)",
        evaluator=fm.P1_RADICAL.evaluate,
        basis=parse_basis("4123,1324"),
        radical=fm.P1_RADICAL,
        # printed series: ... + 87z^5 + 352z^6 + 1428z^7 + ...
        reference_coeffs=(1, 1, 2, 6, 22, 87, 352, 1428, 5768, 23156, 92416),
        reference_source="printed series of Av(4123,1324); OEIS A165532",
        archive_id="A165532",
    ),
    CatalogEntry(
        id="J",
        title="Flags: Av(4123,1243,1423)",
        evaluator=fm.J_RADICAL.evaluate,
        basis=parse_basis("4123,1243,1423"),
        # leading term only: 5/18 √(5/π) 5^n n^(-3/2) inverted through Γ(-1/2) = -2√π
        puiseux=PuiseuxData(
            rho=Fraction(1, 5),
            terms=(PuiseuxTerm(alpha=Fraction(1, 2), lam_surd=Fraction(-5, 9), radicand=5),),
            provenance="leading constant 5/18·√(5/π)",
        ),
        # printed series: ... + 79z^5 + 311z^6 + 1265z^7 + ...
        reference_coeffs=(1, 1, 2, 6, 21, 79, 311, 1265, 5275, 22431, 96900),
        reference_source="printed series of Av(4123,1243,1423); OEIS A033321",
        archive_id="A033321",
    ),
    CatalogEntry(
        id="K",
        title="Av(4123,1243) containing 1423",
        evaluator=fm.K_RADICAL.evaluate,
        basis=parse_basis("4123,1243"),
        must_contain=parse_pattern_list("1423"),
        # P2 - J term by term
        reference_coeffs=(0, 0, 0, 0, 1, 9, 54, 275, 1293, 5838, 25852),
        reference_source="difference of the printed P2 and J series",
    ),
    CatalogEntry(
        id="P2",
        title="Av(4123,1243)",
        evaluator=fm.P2_RADICAL.evaluate,
        basis=parse_basis("4123,1243"),
        puiseux=PuiseuxData(
            rho=Fraction(1, 5),
            terms=(PuiseuxTerm(alpha=Fraction(1, 2), lam_surd=Fraction(-595, 891), radicand=5),),
            provenance="leading constant 595/1782·√(5/π)",
        ),
        # printed series: ... + 88z^5 + 365z^6 + 1540z^7 + ...
        reference_coeffs=(1, 1, 2, 6, 22, 88, 365, 1540, 6568, 28269, 122752),
        reference_source="printed series of Av(4123,1243); OEIS A165536",
        archive_id="A165536",
    ),
    CatalogEntry(
        id="L",
        title="Nonempty Av(123) skew components: t - 1",
        evaluator=fm.l_series,
        basis=parse_basis("123"),
        nonempty=True,
        reference_coeffs=(0,) + _CATALAN_11[1:],
        reference_source="Catalan numbers for n >= 1",
    ),
    CatalogEntry(
        id="M",
        title="Nonempty Av(4123,231) sum components",
        evaluator=fm.m_series,
        basis=parse_basis("4123,231"),
        nonempty=True,
        reference_coeffs=(0, 1, 2, 5, 13),
        reference_source="direct count of Av(4123,231) for n <= 4",
    ),
    CatalogEntry(
        id="N",
        title="Mixes",
        evaluator=fm.n_series,
        reference_coeffs=(0, 0, 0, 2, 10),
        reference_source="series of the mix formula; smallest mixes have size 3",
    ),
    CatalogEntry(id="N1", title="Mixes, first kind", evaluator=fm.n1_series),
    CatalogEntry(id="N2", title="Mixes, second kind", evaluator=fm.n2_series),
    CatalogEntry(id="N3", title="Mixes, third kind", evaluator=fm.n3_series),
    CatalogEntry(id="N4", title="Mixes, fourth kind", evaluator=fm.n4_series),
    CatalogEntry(
        id="P3",
        title="Av(4123,1342)",
        evaluator=fm.P3_RADICAL.evaluate,
        basis=parse_basis("4123,1342"),
        # printed series: ... + 1434z^7 + 5861z^8 + 24019z^9 + ...
        reference_coeffs=(1, 1, 2, 6, 22, 87, 352, 1434, 5861, 24019, 98677),
        reference_source="printed series of Av(4123,1342); OEIS A165533",
        archive_id="A165533",
    ),
    CatalogEntry(
        id="CAT",
        title="Catalan series t",
        evaluator=fm.catalan,
        counts_permutations=False,
        reference_coeffs=_CATALAN_11,
        reference_source="Catalan numbers",
    ),
)

_BY_ID: dict[str, CatalogEntry] = {e.id: e for e in CATALOG}


def get_entry(entry_id: str) -> CatalogEntry:
    key = str(entry_id).strip().upper()
    try:
        return _BY_ID[key]
    except KeyError:
        raise ValueError(f"Unknown catalog id: {entry_id!r}. Available: {list(_BY_ID)}") from None


def resolve_entries(ids: str | list[str] | tuple[str, ...] | None) -> tuple[str, ...]:
    """None или "all" — весь каталог; иначе список id через запятую (порядок реестра)."""
    if ids is None:
        return tuple(_BY_ID)
    if isinstance(ids, str):
        s = ids.strip()
        if not s or s.lower() == "all":
            return tuple(_BY_ID)
        wanted = [x.strip().upper() for x in s.split(",") if x.strip()]
    else:
        wanted = [str(x).strip().upper() for x in ids]

    unknown = sorted(set(wanted) - set(_BY_ID))
    if unknown:
        raise ValueError(f"Unknown catalog id: {unknown}. Available: {list(_BY_ID)}")
    return tuple(i for i in _BY_ID if i in set(wanted))
