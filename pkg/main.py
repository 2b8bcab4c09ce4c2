#!/usr/bin/env python3
"""
Mahlersol: Hahn-series solutions of linear Mahler equations
Main Demo Runner

Runs the worked examples end to end and prints expected versus actual
values, then starts the HTTP service and queries it once.
"""

import sys
import time
import httpx
from fractions import Fraction
from pathlib import Path
from multiprocessing import Process
from dotenv import load_dotenv


load_dotenv()

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from src.arith.rationals import format_rational, naive_height_set
from src.cli.expression import parse_operator
from src.newton.polygon import build_polygon
from src.series.hahn import restrict
from src.solver.solve import greedy_extend, order_one_existence, solve_on
from src.supports.epsilon import seed_thetas, lb_tau
from src.supports.receptacle import receptacle_cache


RUDIN_SHAPIRO_SERIES = {
    Fraction(-1, 2): Fraction(1), Fraction(-1, 4): Fraction(-2), Fraction(-1, 8): Fraction(4),
    Fraction(0): Fraction(-1, 3), Fraction(1, 2): Fraction(1), Fraction(3, 4): Fraction(-2),
    Fraction(7, 8): Fraction(4), Fraction(1): Fraction(-5, 6), Fraction(3, 2): Fraction(1),
    Fraction(7, 4): Fraction(-2), Fraction(2): Fraction(11, 12), Fraction(5, 2): Fraction(-1),
    Fraction(3): Fraction(-5, 12), Fraction(7, 2): Fraction(1), Fraction(4): Fraction(-23, 24),
    Fraction(5): Fraction(13, 24), Fraction(6): Fraction(-7, 24), Fraction(7): Fraction(-5, 24),
    Fraction(8): Fraction(-1, 48),
}


def print_banner():
    """Print the demo banner."""
    print("\n" + "="*80)
    print(" " * 14 + "MAHLERSOL: HAHN-SERIES SOLUTIONS OF MAHLER EQUATIONS")
    print("="*80)
    print("\nFor a_n(z) y(z^(l^n)) + ... + a_0(z) y(z) = 0 and a finite exponent set E,")
    print("this demo computes the truncations to E of a basis of all solutions.")
    print("\nPipeline:")
    print("  • Newton polygon: slopes and vertices")
    print("  • Receptacle V: a computable set containing every solution support")
    print("  • Gap bounds: a certified lower bound on tau")
    print("  • Finite set R and an exact linear solve on it")
    print("="*80 + "\n")


def print_scenario_header(number: int, title: str, description: str):
    """Print a scenario header."""
    print("\n" + "┌" + "─"*78 + "┐")
    print(f"│ SCENARIO {number}: {title:<66} │")
    print("├" + "─"*78 + "┤")
    print(f"│ {description:<76} │")
    print("└" + "─"*78 + "┘\n")


def check(label: str, expected, actual) -> bool:
    ok = expected == actual
    print(f"  {'✓' if ok else '✗'} {label}: expected {expected}, got {actual}")
    return ok


def format_series(f) -> str:
    return " + ".join(f"({format_rational(c)}) z^{format_rational(e)}" for e, c in f.items())


def run_demo_scenarios() -> bool:
    """Run the worked examples; returns True when every check passes."""
    passed = True

    # ========================================================================
    # SCENARIO 1: Rudin-Shapiro
    # ========================================================================
    print_scenario_header(
        1,
        "RUDIN-SHAPIRO OPERATOR z M^2 + (z-1) M - 2",
        "Truncate the solution space to all exponents of naive height <= 8"
    )
    L = parse_operator("z*M^2 + (z-1)*M - 2", 2)
    N = build_polygon(L)
    ctx = seed_thetas(N)
    passed &= check("slopes", ["0", "1/2"], [format_rational(s) for s in N.slopes])
    passed &= check("vertices", ((1, 0), (2, 0), (4, 1)), N.vertices)
    passed &= check("theta", {1: Fraction(1, 2), 2: Fraction(1, 4)}, ctx.theta)
    passed &= check("tau lower bound", Fraction(1, 8), lb_tau(N, ctx=ctx))

    started = time.time()
    E = naive_height_set(8)
    basis = solve_on(L, E)
    run = basis.rset
    print(f"\n  ⏱  solved in {time.time() - started:.1f}s")
    passed &= check("H, N, M", (2, Fraction(8), 618), (run.H, run.cap, run.M))
    sizes = receptacle_cache.run_for(N, run.M, cap=run.cap).sizes
    passed &= check("|V_615|", 5512, sizes[615])
    passed &= check("|V_M|", 5539, run.receptacle_size)
    passed &= check("|R|", 21, len(run.final))
    passed &= check("kernel dimension", 1, basis.dimension)
    restricted = basis.elements[0].restricted
    passed &= check("series matches", True, dict(restricted.items()) == RUDIN_SHAPIRO_SERIES)
    print(f"\n  f = {format_series(restricted)}")

    # ========================================================================
    # SCENARIO 2: introduction example
    # ========================================================================
    print_scenario_header(
        2,
        "z^2 M^2 - (z^2 + z) M + z",
        "Solutions 1 and z^(-1/2) + z^(-1/4) + ...: a support accumulating at 0"
    )
    L2 = parse_operator("z^2*M^2 - (z^2 + z)*M + z", 2)
    E2 = [Fraction(-1, 2), Fraction(-1, 4), Fraction(-1, 8), Fraction(-1, 16), Fraction(0)]
    basis2 = solve_on(L2, E2)
    passed &= check("dimension", 2, basis2.dimension)
    for element in basis2.elements:
        print(f"  • {format_series(element.restricted)}")
    extended = greedy_extend(L2, restrict(basis2.elements[0].full, [Fraction(-1, 2), 0]), Fraction(-1, 16))
    print(f"\n  greedy extension: {format_series(extended)}")

    # ========================================================================
    # SCENARIO 3: order one
    # ========================================================================
    print_scenario_header(
        3,
        "ORDER ONE EXISTENCE",
        "A nonzero solution exists iff the lowest coefficients of a_0, a_1 are opposite"
    )
    for expression, expected in [("M - 1", True), ("M - 2", False), ("M - z", True)]:
        L1 = parse_operator(expression, 2)
        existence = order_one_existence(L1)
        dimension = solve_on(L1, build_polygon(L1).minus_slopes()).dimension
        passed &= check(f"{expression:<8} exists", expected, existence)
        passed &= check(f"{expression:<8} dimension", 1 if expected else 0, dimension)
    return passed


def wait_for_server(url: str = "http://localhost:8000", max_wait: int = 10):
    """Wait for the service to be ready."""
    client = httpx.Client()
    for i in range(max_wait):
        try:
            response = client.get(url)
            if response.status_code == 200:
                print("✓ Service is ready\n")
                return True
        except httpx.HTTPError:
            pass
        time.sleep(1)

    print("❌ Service failed to start")
    return False


def start_server():
    """Start the HTTP service in a separate process."""
    import uvicorn
    from src.server.server import app

    uvicorn.run(app, host="127.0.0.1", port=8000, log_level="error")


def query_service():
    print_scenario_header(4, "HTTP SERVICE", "POST /info for the Rudin-Shapiro operator")
    server_process = Process(target=start_server, daemon=True)
    server_process.start()
    try:
        if not wait_for_server("http://127.0.0.1:8000"):
            return
        response = httpx.post("http://127.0.0.1:8000/info",
                              json={"ell": 2, "expression": "z*M^2 + (z-1)*M - 2"})
        print(response.json())
    finally:
        server_process.terminate()
        server_process.join(timeout=2)
        print("✓ Service stopped")


def main():
    """Main demo orchestration."""
    print_banner()
    try:
        passed = run_demo_scenarios()
        if "--with-server" in sys.argv:
            query_service()
    except KeyboardInterrupt:
        print("\n\nDemo interrupted by user.")
        sys.exit(1)

    print("\n" + "="*80)
    print("  ✅ ALL CHECKS PASSED" if passed else "  ❌ SOME CHECKS FAILED")
    print("="*80 + "\n")
    sys.exit(0 if passed else 1)


if __name__ == "__main__":
    main()
