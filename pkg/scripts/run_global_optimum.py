#!/usr/bin/env python3
"""Print the global maximum-work report and its structural identities.

Usage: run_global_optimum.py [T1 T2]   (defaults: 9 1)
"""

import math
import sys

from tls_heat_engine import BathPair, maximize_work_global


def main():
    t1, t2 = (float(v) for v in sys.argv[1:3]) if len(sys.argv) >= 3 else (9.0, 1.0)
    baths = BathPair(t1, t2)
    result = maximize_work_global(baths)
    theta = baths.theta
    print(f"baths: T1 = {t1:g}, T2 = {t2:g}  (theta = {theta:.12g})")
    print(f"a1*   = {result.a1_star:.12g}")
    print(f"a2*   = {result.a2_star:.12g}")
    print(f"nu*   = {result.nu_star:.12g}   (efficiency {1 - result.nu_star:.12g})")
    print(f"W*    = {result.work_star:.12g}   (extracted {-result.work_star:.12g})")
    print(f"xi*   = {result.xi_star:.12g}")
    print(f"T*    = {result.t_star:.12g}")
    print(f"sqrt(theta/xi*)        = {math.sqrt(theta / result.xi_star):.12g}")
    print(f"stationarity residual  = {result.stationarity_residual:.3g}")


if __name__ == "__main__":
    main()
