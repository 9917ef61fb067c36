#!/usr/bin/env python3
"""Reference tables for the dual equivariant Steenrod algebra.

Prints, for a size chosen on the command line:

  * the tau-square rewrites tau_i^2 -> a tau_{i+1} + a tau_0 xi_{i+1}
    + u xi_{i+1}
  * the images psi(z_n) of the classical Milnor generators
  * the quotient pair (P_n, Q_n) with abar psi(z_1^n) = P_n + Q_n tau_0
  * the pairing triangle <xi_1^i dual, psi(z_1^k)>
  * the coefficient actions (xi_1^l)^dual(u^k) and (xi_1^l tau_0)^dual(u^k)
"""

import argparse
import sys

from conjspaces import dual_steenrod as ds
from conjspaces.coefficients import format_coeff


def tau_squares(n):
    print("tau squares")
    for i in range(n + 1):
        nf = ds.normal_form([ds.tau_mono(i), ds.tau_mono(i)])
        print(f"  t{i}^2 = {ds.format_element(nf)}")
    print()


def psi_images(n):
    print("psi on the Milnor generators")
    for k in range(1, n + 1):
        print(f"  psi(z{k}) = {ds.format_element(ds.psi_zeta(k))}")
    print()


def p_table(n):
    print("quotient recursion")
    for k in range(n + 1):
        pk, qk = ds.p_sequence(k)
        print(f"  P{k} = {ds.format_element(pk)}")
        print(f"  Q{k} = {ds.format_element(qk)}")
        assert ds.abar_image(ds.psi({1: k})) == ds.assemble_p_pair(pk, qk)
    print()


def pairing_table(imax, kmax):
    print(f"pairing <xi_1^i dual, psi(z_1^k)> for i <= {imax}, k <= {kmax}")
    head = "  i\\k " + "".join(f"{k:>8}" for k in range(kmax + 1))
    print(head)
    for i in range(imax + 1):
        row = [f"{i:>5} "]
        for k in range(kmax + 1):
            row.append(f"{format_coeff(ds.pairing_closed_form(i, k)):>8}")
        print("".join(row))
    print()


def action_table(kind, label, lmax, kmax):
    print(f"{label} applied to u^k")
    head = "  l\\k " + "".join(f"{k:>10}" for k in range(kmax + 1))
    print(head)
    for l in range(lmax + 1):
        row = [f"{l:>5} "]
        for k in range(kmax + 1):
            row.append(f"{format_coeff(ds.act_on_coefficient(kind, l, k)):>10}")
        print("".join(row))
    print()


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--gens", type=int, default=3,
                    help="largest Milnor generator index")
    ap.add_argument("--pn", type=int, default=6, help="largest P_n index")
    ap.add_argument("--pairs", type=int, default=5,
                    help="pairing triangle size")
    ap.add_argument("--actions", type=int, default=4,
                    help="action table size")
    args = ap.parse_args(argv)
    tau_squares(args.gens)
    psi_images(args.gens)
    p_table(args.pn)
    pairing_table(args.pairs, 2 * args.pairs)
    action_table("xi", "(xi_1^l)^dual", args.actions, args.actions + 2)
    action_table("xitau", "(xi_1^l tau_0)^dual", args.actions, args.actions + 2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
