"""Exit criteria.  Every tolerance is exact: polynomial identity, byte-equal
strings, or integer equality."""
import math

from lucasnum import oracle
from lucasnum import sequences as sq
from lucasnum import verify as vf
from lucasnum.polyring import RationalFunction, S, T, AuxPoly, canonical_string, parse_poly, phi, rf_eq


def test_eulerian_reference_table(criterion):
    mismatches = [
        (idx, text, str(sq.eulerian(*idx)))
        for idx, text in vf.GOLDEN_EULERIAN.items() if str(sq.eulerian(*idx)) != text
    ]
    criterion("Lucas-Eulerian reference rows 0-5: 21 cells byte-for-byte",
              len(vf.GOLDEN_EULERIAN) == 21 and not mismatches
              and str(sq.eulerian(5, 2)) == "10s^6+25s^4t+16s^2t^2+2t^3", str(mismatches))


def test_alternating_sum_reference_columns(criterion):
    g = vf.golden_tables(5)
    prime = [c for c in g.checks if c.id.startswith("golden.eulerian_prime")]
    dblprime = [c for c in g.checks if c.id.startswith("golden.eulerian_dblprime")]
    typo = g.get("golden.eulerian_prime[2,1]")
    ok = (
        len(prime) == len(dblprime) == 6
        and all(c.status == vf.PASS for c in prime if c is not typo)
        and all(c.status == vf.PASS for c in dblprime)
        and typo.status == vf.ERRATA
        and sq.eulerian_prime(2, 1) == S**3 + S**3 * T + 2 * S * T**2
    )
    criterion("E' and E'' reference column k=1 (row 2 '++' typo recomputed)", ok,
              str([(c.id, c.status) for c in prime + dblprime]))


def test_stirling_reference_table_with_errata(criterion):
    g = vf.golden_tables(5)
    st2 = {c.id: c for c in g.checks if c.id.startswith("golden.stirling2")}
    k2 = {f"golden.stirling2[{n},2]" for n in range(2, 6)}
    others_ok = all(
        c.status == vf.PASS or (c.id == "golden.stirling2[5,3]" and c.status == vf.ERRATA
                                and c.witness["generated"] == canonical_string(parse_poly(c.witness["corrected"])))
        for cid, c in st2.items() if cid not in k2
    )
    w = st2["golden.stirling2[4,2]"].witness
    ok = (
        len(st2) == 21
        and all(st2[c].status == vf.ERRATA for c in k2)
        and others_ok
        and parse_poly(w["generated"]) == parse_poly("1+s+s^2")
        and w["printed"] == "1+s+s^2+s^3"
        and oracle.classical_stirling2(4, 2) == 7 == sq.stirling2(4, 2).eval_int(2, -1)
        and parse_poly(w["printed"]).eval_int(2, -1) != 7
    )
    criterion("Lucas-Stirling reference rows: all match except k=2 column errata; S(4,2)=7 sides with generated", ok,
              str({cid: c.status for cid, c in st2.items()}))


def test_lucasnomial_consistency(criterion):
    cells = [(n, k) for n in range(21) for k in range(n + 1)]
    bad = [c for c in cells if sq.lucasnomial_rec(*c) != sq.lucasnomial_closed(*c)]
    criterion("Lucasnomial recursive == closed form, 231 cells, exact division", len(cells) == 231 and not bad,
              str(bad[:3]))


def test_narayana_three_way(criterion):
    bad = []
    for n in range(1, 16):
        for k in range(1, n + 1):
            c = sq.narayana_closed(n, k)
            r = sq.narayana_rec.__wrapped__(n, k)  # recompute so the collapse assertion runs now
            if not (c == sq.narayana_gk(n, k) == r and isinstance(r, type(c))):
                bad.append((n, k))
    criterion("Narayana closed == sum-of-products == rational recursion (n<=15)", not bad, str(bad[:3]))


def test_palindromicity(criterion):
    e = all(sq.eulerian(n, k) == sq.eulerian(n, n - k) for n in range(16) for k in range(n + 1))
    b = all(sq.lucasnomial_closed(n, k) == sq.lucasnomial_closed(n, n - k) for n in range(21) for k in range(n + 1))
    nn = all(sq.narayana_closed(n, k) == sq.narayana_closed(n, n - k + 1) for n in range(1, 16) for k in range(1, n + 1))
    criterion("Palindromicity: Eulerian n<=15, Lucasnomial n<=20, Narayana n<=15", e and b and nn, f"{e} {b} {nn}")


def test_specialization_battery(criterion):
    bad = []
    for n in range(31):
        v = sq.lucas(n)
        if (v.eval_int(2, -1), v.eval_int(1, 1), v.eval_int(3, -2)) != (n, oracle.fibonacci(n), 2**n - 1):
            bad.append(n)
    criterion("lucas(n) -> n, F_n, 2^n-1 at (2,-1), (1,1), (3,-2) for n<=30", not bad, str(bad))


def test_eulerian_oracle(criterion):
    bad = []
    for n in range(9):
        row = [oracle.classical_eulerian(n, k) for k in range(n + 1)]
        if row != [sq.eulerian(n, k).eval_int(2, -1) for k in range(n + 1)] or sum(row) != math.factorial(n + 1):
            bad.append(n)
    criterion("Eulerian descent enumeration == eval at (2,-1), row sums (n+1)! (n<=8)", not bad, str(bad))


def test_extra_term_identity(criterion):
    bad = [
        n for n in range(2, 11)
        if not rf_eq(sq.eulerian_dblprime(n, 1) - sq.eulerian(n, 1),
                     RationalFunction(S ** (n + 1)) + RationalFunction(S ** (n + 1), T))
    ]
    criterion("E''(n,1) - E(n,1) = s^(n+1) + s^(n+1)/t for 2<=n<=10", not bad, str(bad))


def test_motzkin_dichotomy(criterion):
    m2 = sq.motzkin_rec(2)
    ok = (
        all(c >= 0 for n in range(13) for c in sq.motzkin_sum(n).coefficients())
        and not m2.is_polynomial()
        and m2.num == parse_poly("s^4+3s^2t+t^2+s^2+t") and m2.den == parse_poly("s^3+2st")
        and all(
            sq.motzkin_sum(n).eval_int(2, -1) == sq.motzkin_rec(n).eval_int(2, -1) == oracle.classical_motzkin(n)
            for n in range(13))
    )
    criterion("Motzkin: sum form polynomial >=0, recursion rational at n=2, both == path count (n<=12)", ok)


def test_tiling_oracle(criterion):
    tiles = all(oracle.tiling_weight_sum(n) == (sq.lucas(n + 1), oracle.fibonacci(n + 1)) for n in range(16))
    stairs = all(oracle.staircase_weight(n) == sq.lucastorial(n) for n in range(11))
    criterion("Tiling weight == lucas(n+1), count == F(n+1) (n<=15); staircase == lucastorial (n<=10)",
              tiles and stairs, f"{tiles} {stairs}")


def test_first_column_formula(criterion):
    col = all(sq.a_n1_poly(n).eval_at(sq.lucas(2)) == sq.eulerian(n, 1) for n in range(16))
    p31 = phi(3).xddx() == AuxPoly([0, 1, 2, 3])
    criterion("aux_eval(A_n1, {2}) == E(n,1) (n<=15); x d/dx phi_3 = x+2x^2+3x^3", col and p31, f"{col} {p31}")
