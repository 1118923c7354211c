#!/usr/bin/env python3
#   Copyright 2026 The superstab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent high-precision oracle for the frozen constants in the test suite.

Evaluates every quantity directly from its closed form with mpmath at 50
digits; nothing here shares code with the C++ library. Run it and paste the
printed values into tests/oracle_values.hpp.
"""
from mpmath import mp, mpf, log, exp, fabs

mp.dps = 50


def lnf_perturbed(y, c=1, amp=mpf("0.1"), power=2):
    y = mpf(y)
    return c * y + log(1 + amp * y ** (-power))


def jung_alpha_partial(x, terms):
    x = mpf(x)
    return sum(x ** (-(2 ** n - 1)) for n in range(1, terms + 1))


def main():
    print("lnf_perturbed(2)            =", mp.nstr(lnf_perturbed(2), 20))

    for x in (2, 3, 5):
        print(f"jung_alpha_10({x})          =", mp.nstr(jung_alpha_partial(x, 10), 20))
    print("jung_alpha_10(1e6)*1e6     =", mp.nstr(jung_alpha_partial(10**6, 10) * 10**6, 20))

    # Limit T_a(y) = ln f(a^n y)/a^n at n = 50 for anchors 2 and 3.
    for a in (2, 3):
        worst = max(fabs(lnf_perturbed(mpf(a) ** 50 * y) / mpf(a) ** 50 - y) for y in range(1, 9))
        print(f"max|T_{a}(y) - y| at n=50   =", mp.nstr(worst, 5))

    # Partial bound at a=2, y=1, n=5, delta=0.2.
    a, y, n, delta = 2, 1, 5, mpf("0.2")
    lhs = fabs(lnf_perturbed(y * a ** n) - a ** n * lnf_perturbed(y))
    rhs = (1 + delta) * (a ** n - 1) / (a - 1)
    d3 = sum((1 + delta) * a ** (n - 1 - i) for i in range(n))
    print("partial lhs(a=2,y=1,n=5)    =", mp.nstr(lhs, 20))
    print("partial rhs                 =", mp.nstr(rhs, 20), " d3 =", mp.nstr(d3, 20))

    # Final inf-bound at y=1 with anchors 2,3,4.
    bound = min((1 + delta) / (g - 1) for g in (2, 3, 4))
    gap = fabs(lnf_perturbed(1) - 1)
    print("final bound(y=1)            =", mp.nstr(bound, 20), " gap =", mp.nstr(gap, 20))

    # Raw conclusion residual on grid 1..8, pairs with xy in grid, x != 1.
    raw = max(fabs(lnf_perturbed(x * y) - x * lnf_perturbed(y))
              for x in range(2, 9) for y in range(1, 9) if x * y <= 8)
    print("raw conclusion residual     =", mp.nstr(raw, 20))

    # Validation worst violation: grid 1..8, psi = 0.2, orbit depth 3, anchors 2..8.
    grid = range(1, 9)
    worst = mpf(0)
    for x in grid:
        ys = set()
        for y in grid:
            ys.add(mpf(y))
            for a in range(2, 9):
                for k in range(1, 4):
                    ys.add(mpf(a) ** k * y)
        for y in ys:
            r = exp(lnf_perturbed(x * y) - x * lnf_perturbed(y)) - 1
            worst = max(worst, -r, r - delta)
    print("validation worst violation  =", mp.nstr(worst, 20))

    # Ger multiplicative residual for f = 1.01 e^x on additive pairs.
    print("ger residual                =", mp.nstr(fabs(1 / mpf("1.01") - 1), 20))

    # Jung sandwich for f(x) = 2^x (1 + 0.05 x^-2), delta = 0.1.
    d = mpf("0.1")
    for x in (2, 3, 4):
        al = jung_alpha_partial(x, 12)
        ratio = 1 / (1 + mpf("0.05") / mpf(x) ** 2)
        print(f"jung x={x}: alpha={mp.nstr(al, 17)} lower={mp.nstr((1 - d) ** al, 17)} "
              f"ratio={mp.nstr(ratio, 17)} upper={mp.nstr((1 + d) ** al, 17)}")


if __name__ == "__main__":
    main()
