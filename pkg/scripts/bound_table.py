"""Tabulate baseline vs. new bounds for the sphere, torus and higher-genus
families in CP^2."""

from harmonic_index.bounds import DirectrixInvariants, bound_report
from harmonic_index.cli import render_table


def family_rows():
    for k in range(1, 11):
        yield "Veronese o z^k", k, DirectrixInvariants(2, 0, 2 * k, 1, (2 * (k - 1),))
        yield "[1,z+z^3,z^2] o z^k", k, DirectrixInvariants(2, 0, 3 * k, 1, (2 * (k - 1),))
        yield "torus", k, DirectrixInvariants(2, 1, 5 * k, 1, (4 * k,))
    for g in (2, 3, 4):
        for k in range(g + 1, g + 6):
            yield f"genus {g}", k, DirectrixInvariants(2, g, 3 * k, 1, (2 * k + 2 * g - 2,))


def main():
    rows = []
    for name, k, inv in family_rows():
        rep = bound_report(inv)
        rows.append([name, k, inv.deg_f, inv.r_prefix[0], rep.deg_phi, rep.baseline, rep.theorem, rep.improvement])
    print(render_table(["family", "k", "deg f", "r_0", "deg phi", "baseline", "new", "gain"], rows))


if __name__ == "__main__":
    main()
